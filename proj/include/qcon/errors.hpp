#pragma once

#include <stdexcept>
#include <string>

namespace qcon {

struct DivisionByZero : std::domain_error {
  explicit DivisionByZero(const std::string& msg) : std::domain_error(msg) {}
};

struct PoleAtPoint : std::domain_error {
  explicit PoleAtPoint(const std::string& msg) : std::domain_error(msg) {}
};

struct InvalidParams : std::invalid_argument {
  explicit InvalidParams(const std::string& msg) : std::invalid_argument(msg) {}
};

struct InvalidModulus : std::invalid_argument {
  explicit InvalidModulus(const std::string& msg) : std::invalid_argument(msg) {}
};

struct NotPAdicInteger : std::domain_error {
  explicit NotPAdicInteger(const std::string& msg) : std::domain_error(msg) {}
};

}  // namespace qcon
