#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qshelf/series.hpp"

namespace qshelf {

enum class Status { pass, fail, error };

std::string_view to_string(Status s);

struct Discrepancy {
  Exponent exponent = 0;
  mpz_class lhs;
  mpz_class rhs;
};

/// Outcome of one verification. A failing result always carries the first
/// discrepancy found.
struct CheckResult {
  std::string id;
  std::vector<std::pair<std::string, std::string>> params;
  Status status = Status::pass;
  std::optional<Discrepancy> first_discrepancy;
  std::string message;
  std::chrono::nanoseconds elapsed{0};

  bool passed() const noexcept { return status == Status::pass; }

  CheckResult& named(std::string new_id) {
    id = std::move(new_id);
    return *this;
  }
  CheckResult& param(std::string key, std::string value) {
    params.emplace_back(std::move(key), std::move(value));
    return *this;
  }
  CheckResult& param(std::string key, long long value) {
    return param(std::move(key), std::to_string(value));
  }
};

CheckResult pass_result(std::string message = {});
CheckResult fail_result(Exponent exponent, mpz_class lhs, mpz_class rhs, std::string message);

/// Keeps the first failure: if acc still passes, it takes over next's outcome.
void merge(CheckResult& acc, const CheckResult& next);

/// Compares coefficients of q^n for n < up_to. Throws InsufficientPrecision
/// when the window exceeds either operand's precision.
CheckResult prefix_eq(const Series& a, const Series& b, Exponent up_to);

/// Passes when every coefficient of s below up_to is >= 0.
CheckResult nonnegative(const Series& s, Exponent up_to);

}  // namespace qshelf
