#pragma once

#include <stdexcept>
#include <string>

namespace hilbop {

// Base class for all library errors.
class error : public std::runtime_error {
public:
  explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Incompatible structures: mismatched variable lists, mixed coefficient
// spaces, malformed serialized input.
class structural_error : public error {
public:
  explicit structural_error(const std::string& msg) : error(msg) {}
};

// Precondition violations on mathematical inputs (size mismatch, negative n,
// index out of range, non-invertible series, ...).
class domain_error : public error {
public:
  explicit domain_error(const std::string& msg) : error(msg) {}
};

// A requested or required truncation window cannot hold the result.  The
// message names the violated window.
class window_error : public error {
public:
  explicit window_error(const std::string& msg) : error(msg) {}
};

}  // namespace hilbop
