#include "qshelf/check.hpp"

#include <algorithm>

namespace qshelf {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::error:
      return "error";
  }
  return "error";
}

CheckResult pass_result(std::string message) {
  CheckResult r;
  r.message = std::move(message);
  return r;
}

CheckResult fail_result(Exponent exponent, mpz_class lhs, mpz_class rhs, std::string message) {
  CheckResult r;
  r.status = Status::fail;
  r.first_discrepancy = Discrepancy{exponent, std::move(lhs), std::move(rhs)};
  r.message = std::move(message);
  return r;
}

void merge(CheckResult& acc, const CheckResult& next) {
  if (!acc.passed() || next.passed()) return;
  acc.status = next.status;
  acc.first_discrepancy = next.first_discrepancy;
  acc.message = next.message;
}

CheckResult prefix_eq(const Series& a, const Series& b, Exponent up_to) {
  if (up_to > a.precision() || up_to > b.precision()) {
    throw InsufficientPrecision("comparison window " + std::to_string(up_to) +
                                " exceeds operand precision " +
                                std::to_string(std::min(a.precision(), b.precision())));
  }
  const Exponent lo = std::min(a.valuation(), b.valuation());
  for (Exponent n = lo; n < up_to; ++n) {
    mpz_class x = a.coeff(n);
    mpz_class y = b.coeff(n);
    if (x != y) {
      return fail_result(n, std::move(x), std::move(y),
                         "coefficients differ at q^" + std::to_string(n));
    }
  }
  return pass_result();
}

CheckResult nonnegative(const Series& s, Exponent up_to) {
  if (up_to > s.precision()) {
    throw InsufficientPrecision("nonnegativity window exceeds series precision");
  }
  for (Exponent n = s.valuation(); n < std::min(up_to, s.end()); ++n) {
    mpz_class c = s.coeff(n);
    if (c < 0) return fail_result(n, std::move(c), 0, "negative coefficient at q^" + std::to_string(n));
  }
  return pass_result();
}

}  // namespace qshelf
