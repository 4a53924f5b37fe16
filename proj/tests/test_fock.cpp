#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hilbop/fock.hpp"
#include "hilbop/json_io.hpp"

using namespace hilbop;

namespace {

FockVector<Rational> pvec(const Partition& p) {
  return FockVector<Rational>::basis_vector(Basis::power_sum, p, Rational(1));
}

FockVector<Rational> vac() { return pvec(Partition()); }

}  // namespace

TEST_CASE("heisenberg action on the normalized basis") {
  // creation: p_{-1} p_{-(1)} = 2 p_{-(1,1)}
  auto grown = apply_p(-1, pvec(Partition({1})));
  CHECK(grown == pvec(Partition({1, 1})).scaled(Rational(2)));
  // annihilation: p_1 p_{-(1)} = |0>
  CHECK(apply_p(1, pvec(Partition({1}))) == vac());
  // no part equal to 2
  CHECK(apply_p(2, pvec(Partition({1, 1}))).is_zero());
  // p_0 = 0
  CHECK(apply_p(0, pvec(Partition({3, 1}))).is_zero());
  // p_k |0> = 0 for k > 0
  CHECK(apply_p(3, vac()).is_zero());
  CHECK_THROWS_AS(apply_p(1, basis_change(pvec(Partition({1, 1})), Basis::fixed_point)),
                  structural_error);
}

TEST_CASE("heisenberg commutation relations") {
  for (int m = -5; m <= 5; ++m) {
    if (m == 0) continue;
    for (int n = -5; n <= 5; ++n) {
      if (n == 0) continue;
      for (int deg = 0; deg <= 6; ++deg) {
        for (const auto& lam : partitions_of(deg)) {
          const auto v = pvec(lam);
          auto comm = apply_p(m, apply_p(n, v)) - apply_p(n, apply_p(m, v));
          auto expect = (m == -n) ? v.scaled(Rational(m)) : FockVector<Rational>(Basis::power_sum);
          CHECK(comm == expect);
        }
      }
    }
  }
}

TEST_CASE("bilinear form") {
  CHECK(inner_product(pvec(Partition({2, 1})), pvec(Partition({2, 1}))) == Rational(1, 2));
  CHECK(inner_product(pvec(Partition({2})), pvec(Partition({1, 1}))) == Rational(0));
  CHECK(inner_product(vac(), vac()) == Rational(1));
  auto fp = basis_change(pvec(Partition({2})), Basis::fixed_point);
  CHECK_THROWS_AS(inner_product(fp, pvec(Partition({2})), Rational(0)), structural_error);
}

TEST_CASE("adjointness of p_k and p_{-k}") {
  for (int k = 1; k <= 4; ++k) {
    for (int n = 0; n <= 5; ++n) {
      for (const auto& lam : partitions_of(n)) {
        for (const auto& mu : partitions_of(n + k)) {
          const auto lhs = inner_product(apply_p(-k, pvec(lam)), pvec(mu));
          const auto rhs = inner_product(pvec(lam), apply_p(k, pvec(mu)));
          CHECK(lhs == rhs);
        }
      }
    }
  }
}

TEST_CASE("pairing reproduced by composing apply_p from both sides") {
  // <p_{-lambda}, p_{-mu}> = (1/(z_l z_m)) <0| prod p_{l_i} prod p_{-m_j} |0>
  for (int n = 0; n <= 6; ++n) {
    for (const auto& lam : partitions_of(n)) {
      for (const auto& mu : partitions_of(n)) {
        FockVector<Rational> w = vac();
        for (int i = mu.length() - 1; i >= 0; --i) w = apply_p(-mu.part(i), w);
        for (int i = 0; i < lam.length(); ++i) w = apply_p(lam.part(i), w);
        Rational raw = inner_product(vac(), w) / (z_factor(lam) * z_factor(mu));
        CHECK(raw == inner_product(pvec(lam), pvec(mu)));
      }
    }
  }
}

TEST_CASE("basis change dictionary") {
  // n = 1: both bases coincide
  CHECK(basis_change(pvec(Partition({1})), Basis::fixed_point) ==
        FockVector<Rational>::basis_vector(Basis::fixed_point, Partition({1}), Rational(1)));

  // raw p_{-1}^2 |0> = 2 p_{-(1,1)} -> [2] + [1,1]
  auto raw = apply_p(-1, apply_p(-1, vac()));
  auto fp = basis_change(raw, Basis::fixed_point);
  FockVector<Rational> expect(Basis::fixed_point);
  expect.add_term(Partition({2}), Rational(1));
  expect.add_term(Partition({1, 1}), Rational(1));
  CHECK(fp == expect);

  // [2] = p_{-(2)} + p_{-(1,1)}
  auto ps = basis_change(
      FockVector<Rational>::basis_vector(Basis::fixed_point, Partition({2}), Rational(1)),
      Basis::power_sum);
  FockVector<Rational> expect2(Basis::power_sum);
  expect2.add_term(Partition({2}), Rational(1));
  expect2.add_term(Partition({1, 1}), Rational(1));
  CHECK(ps == expect2);
}

TEST_CASE("basis change round trip and fixed-point orthonormality") {
  for (int n = 0; n <= 8; ++n) {
    for (const auto& lam : partitions_of(n)) {
      CHECK(basis_change(basis_change(pvec(lam), Basis::fixed_point), Basis::power_sum) ==
            pvec(lam));
      auto flam = FockVector<Rational>::basis_vector(Basis::fixed_point, lam, Rational(1));
      CHECK(basis_change(basis_change(flam, Basis::power_sum), Basis::fixed_point) == flam);
      // <[lambda],[mu]> = delta via conversion to the power-sum pairing
      for (const auto& mu : partitions_of(n)) {
        auto fmu = FockVector<Rational>::basis_vector(Basis::fixed_point, mu, Rational(1));
        Rational ip = inner_product(basis_change(flam, Basis::power_sum),
                                    basis_change(fmu, Basis::power_sum));
        CHECK(ip == (lam == mu ? Rational(1) : Rational(0)));
      }
    }
  }
}

TEST_CASE("vacuum spans everything under creation operators") {
  // p_{-lambda} = z_lambda^{-1} prod p_{-r} |0> for every lambda
  for (int n = 0; n <= 8; ++n) {
    for (const auto& lam : partitions_of(n)) {
      FockVector<Rational> built = vac();
      for (int i = 0; i < lam.length(); ++i) built = apply_p(-lam.part(i), built);
      CHECK(built.scaled(z_factor(lam).inverse()) == pvec(lam));
    }
  }
}

namespace {

SpacePtr ts_space() {
  return make_space({VarSpec{"t1", 0, 4}, VarSpec{"t2", 0, 4}, VarSpec{"s1", 0, 4},
                     VarSpec{"s2", 0, 4}});
}

}  // namespace

TEST_CASE("half vertex operators") {
  auto sp = ts_space();
  std::map<int, Series> svals{{1, Series::variable(sp, 2)}, {2, Series::variable(sp, 3)}};
  std::map<int, Series> tvals{{1, Series::variable(sp, 0)}, {2, Series::variable(sp, 1)}};
  auto vac_s = FockVector<Series>::vacuum(Basis::power_sum, Series::constant(sp, Rational(1)));

  // Gamma_-(s)|0> through degree 2: |0> + s1 p_{-(1)} + s2 p_{-(2)} + s1^2 p_{-(1,1)}
  auto gm = gamma_minus(svals, vac_s, 2);
  const Series zero(sp);
  CHECK(gm.coefficient(Partition(), zero) == Series::constant(sp, Rational(1)));
  CHECK(gm.coefficient(Partition({1}), zero) == Series::variable(sp, 2));
  CHECK(gm.coefficient(Partition({2}), zero) == Series::variable(sp, 3));
  CHECK(gm.coefficient(Partition({1, 1}), zero) ==
        Series::variable(sp, 2) * Series::variable(sp, 2));

  // all s_k = 0: identity
  std::map<int, Series> zeros{{1, zero}, {2, zero}};
  auto vec = promoted(
      FockVector<Rational>::basis_vector(Basis::power_sum, Partition({2, 1}), Rational(1)), sp);
  CHECK(gamma_minus(zeros, vec, 5) == vec);

  // annihilators kill the vacuum
  CHECK(gamma_plus(tvals, vac_s, 4) == vac_s);

  // Gamma_+(t) p_{-(1)} = p_{-(1)} + t1 |0>
  auto p1 = promoted(FockVector<Rational>::basis_vector(Basis::power_sum, Partition({1}),
                                                        Rational(1)),
                     sp);
  auto gp = gamma_plus(tvals, p1, 4);
  CHECK(gp.coefficient(Partition({1}), zero) == Series::constant(sp, Rational(1)));
  CHECK(gp.coefficient(Partition(), zero) == Series::variable(sp, 0));

  // adjointness at p_{-(2)}: <Gamma_+(t) p_{-(2)}, |0>> = <p_{-(2)}, Gamma_-(t)|0>> = t2/2
  std::map<int, Series> tv{{1, Series::variable(sp, 0)}, {2, Series::variable(sp, 1)}};
  auto p2 = promoted(FockVector<Rational>::basis_vector(Basis::power_sum, Partition({2}),
                                                        Rational(1)),
                     sp);
  Series lhs = inner_product(gamma_plus(tv, p2, 4), vac_s, zero);
  Series rhs = inner_product(p2, gamma_minus(tv, vac_s, 4), zero);
  CHECK(lhs == rhs);
  CHECK(lhs == Series::variable(sp, 1).scaled(Rational(1, 2)));
}

TEST_CASE("gamma pairing generating function") {
  // <Gamma_+(t) Gamma_-(s)> with only t1, s1 equals e^{t1 s1}
  auto sp = make_space({VarSpec{"t1", 0, 4}, VarSpec{"s1", 0, 4}});
  std::map<int, Series> tv{{1, Series::variable(sp, 0)}};
  std::map<int, Series> sv{{1, Series::variable(sp, 1)}};
  auto vac_s = FockVector<Series>::vacuum(Basis::power_sum, Series::constant(sp, Rational(1)));
  Series pairing =
      inner_product(gamma_plus(tv, gamma_minus(sv, vac_s, 4), 4), vac_s, Series(sp));
  CHECK(pairing == (Series::variable(sp, 0) * Series::variable(sp, 1)).exp());

  // general adjointness on random-ish vectors: <Gamma_+(t)v, w> = <v, Gamma_-(t)w>
  FockVector<Series> v(Basis::power_sum), w(Basis::power_sum);
  v.add_term(Partition({2, 1}), Series::constant(sp, Rational(1)));
  v.add_term(Partition({1}), Series::variable(sp, 1));
  w.add_term(Partition({1}), Series::constant(sp, Rational(2, 3)));
  w.add_term(Partition({1, 1}), Series::variable(sp, 0));
  Series lhs = inner_product(gamma_plus(tv, v, 6), w, Series(sp));
  Series rhs = inner_product(v, gamma_minus(tv, w, 6), Series(sp));
  CHECK(lhs == rhs);
}

TEST_CASE("fock json round trips") {
  FockVector<Rational> v(Basis::power_sum);
  v.add_term(Partition({2, 1}), Rational(1, 2));
  v.add_term(Partition({3}), Rational(-2));
  auto j = fock_to_json(v);
  CHECK(j["basis"] == "power_sum");
  // reverse-lexicographic order: [3] before [2,1]
  CHECK(j["terms"][0]["partition"].dump() == "[3]");
  CHECK(fock_rational_from_json(j) == v);

  auto sp = make_space({VarSpec{"z", 1, 2}});
  FockVector<Series> vs(Basis::fixed_point);
  vs.add_term(Partition({1}), Series::monomial(sp, {-1}, Rational(5)));
  CHECK(fock_series_from_json(fock_to_json(vs)) == vs);
}
