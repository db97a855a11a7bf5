#include "qshelf/xq.hpp"

#include <stdexcept>

#include "qshelf/product_forms.hpp"
#include "qshelf/transfer.hpp"

namespace qshelf {

Series pochhammer(int y_sign, Exponent y_exponent, Exponent base_exponent,
                  std::optional<int> count, Exponent N) {
  if (y_sign != 1 && y_sign != -1) throw std::invalid_argument("y_sign must be +-1");
  if (count) {
    if (*count < 0) throw std::invalid_argument("pochhammer count must be nonnegative");
    Series acc = Series::one();
    for (int m = 0; m < *count; ++m) {
      const Exponent e = y_exponent + m * base_exponent;
      acc = e == 0 ? mpz_class(1 - y_sign) * acc : mul_binomial(acc, -y_sign, e);
    }
    return acc;
  }
  if (base_exponent < 1 || y_exponent < 0) {
    throw DivergentProduct("infinite q-Pochhammer product with y exponent " +
                           std::to_string(y_exponent) + " and base exponent " +
                           std::to_string(base_exponent) + " does not truncate");
  }
  Series acc = Series::one().truncated(N + 1);
  for (Exponent e = y_exponent; e <= N; e += base_exponent) {
    acc = e == 0 ? mpz_class(1 - y_sign) * acc : mul_binomial(acc, -y_sign, e);
  }
  return acc;
}

namespace {

// Lowest exponent reached by summand n; the sum is truncated once this exceeds
// N and is increasing.
template <typename Valuation>
Exponent last_summand(Valuation valuation, Exponent N) {
  Exponent n = 0;
  while (!(valuation(n) > N && valuation(n + 1) > valuation(n))) ++n;
  return n;
}

// One of the two sums in J_{k,i}(-q^{-1}, q^{2j}, q^2) with index s (= i or i-1):
// sum_n (-1)^n q^{2(jkn + kn^2 + kn + n - sn) - n} (1 - q^{2(j+2n+1)s})
//   (-q^{2(j+n+2)-1}; q^2)_inf (-q; q^2)_n / [(q^2; q^2)_n (q^{2(j+n+1)}; q^2)_inf]
// The (a^{-1}) factor is the finite product (a^{-1})_n; with a -> 0 it is what
// yields the q^{C(n,2)} of the Gordon specialization.
Series gga_j_sum(int k, int j, int s, Exponent N) {
  const Exponent K = k;
  const Exponent J = j;
  const Exponent S = s;
  auto valuation = [&](Exponent n) {
    return 2 * (J * K * n + K * n * n + K * n + n - S * n) - n;
  };
  const Exponent stop = last_summand(valuation, N);
  const Exponent precision = N + 1;
  Series sum = Series::zero(precision);
  for (Exponent n = 0; n <= stop; ++n) {
    Series numerator = Series::monomial(alternating_sign(n), valuation(n));
    numerator = mul_binomial(numerator, -1, 2 * (J + 2 * n + 1) * S);
    if (numerator.is_zero()) continue;
    const Exponent head = std::max<Exponent>(0, N - numerator.valuation());
    numerator = numerator * pochhammer(-1, 2 * (J + n + 2) - 1, 2, std::nullopt, head);
    numerator = numerator * pochhammer(-1, 1, 2, static_cast<int>(n), head);
    const Series denominator =
        pochhammer(1, 2, 2, static_cast<int>(n), head) *
        pochhammer(1, 2 * (J + n + 1), 2, std::nullopt, head);
    sum = sum + (numerator * invert_unit(denominator, head + 1)).truncated(precision);
  }
  return sum;
}

Series gga_j_specialized(int k, int j, int i, Exponent N) {
  Series total = gga_j_sum(k, j, i, N);
  if (i >= 1) {
    const Exponent lead = 2 * (static_cast<Exponent>(j) + 1) - 1;
    const Series second = gga_j_sum(k, j, i - 1, N);
    total = total + shift(second, lead).truncated(N + 1);
  }
  return total.truncated(N + 1);
}

// J_{k,i}(0, q^j, q) = sum_n (-1)^n q^{jkn + kn + kn^2 + n - in + C(n,2)} (1 - q^{ji + i + 2ni})
//                       / [(q; q)_n (q^{j+n+1}; q)_inf]
Series gordon_j_specialized(int k, int j, int i, Exponent N) {
  const Exponent K = k;
  const Exponent J = j;
  const Exponent I = i;
  auto valuation = [&](Exponent n) {
    return J * K * n + K * n + K * n * n + n - I * n + choose2(n);
  };
  const Exponent stop = last_summand(valuation, N);
  Series sum = Series::zero(N + 1);
  for (Exponent n = 0; n <= stop; ++n) {
    Series numerator = Series::monomial(alternating_sign(n), valuation(n));
    numerator = mul_binomial(numerator, -1, J * I + I + 2 * n * I);
    if (numerator.is_zero()) continue;
    const Exponent head = std::max<Exponent>(0, N - numerator.valuation());
    const Series denominator = pochhammer(1, 1, 1, static_cast<int>(n), head) *
                               pochhammer(1, J + n + 1, 1, std::nullopt, head);
    sum = sum + (numerator * invert_unit(denominator, head + 1)).truncated(N + 1);
  }
  return sum;
}

}  // namespace

Series j_specialized(const SpecializationSpec& spec, int k, int i, Exponent N) {
  if (k < 2 || i < 0 || i > k + 1 || spec.j < 0) {
    throw std::invalid_argument("j_specialized needs k >= 2, 0 <= i <= k+1, j >= 0");
  }
  if (N < 0) throw std::invalid_argument("order must be nonnegative");
  Series s = spec.family == Family::gga ? gga_j_specialized(k, spec.j, i, N)
                                        : gordon_j_specialized(k, spec.j, i, N);
  return assert_ordinary(s);
}

CheckResult dictionary_check(Family family, int k, int j, int i, Exponent N) {
  const Series lhs = family_closed_form(family, {k, j, i}, N);
  const Series rhs = j_specialized({family, j}, k, k - i + 1, N);
  return prefix_eq(lhs, rhs, N + 1);
}

CheckResult lemma72_specialized_check(Family family, int k, int j, int i, Exponent N) {
  if (family == Family::gga) {
    if (i < 2 || i > k) throw std::invalid_argument("gga shelf recursion needs 2 <= i <= k");
    const Exponent drop = 2 * (static_cast<Exponent>(j) + 1) * (i - 1);
    const Exponent M = N + drop + 1;
    const SpecializationSpec here{family, j};
    const SpecializationSpec next{family, j + 1};
    const Series lhs = j_specialized(next, k, k - i + 1, N);
    const Series rhs =
        shift(j_specialized(here, k, i, M) - j_specialized(here, k, i - 1, M), -drop) -
        shift(j_specialized(next, k, k - i + 2, N + 1), -1);
    return prefix_eq(lhs, rhs, N + 1);
  }
  if (i < 1 || i > k) throw std::invalid_argument("gordon shelf recursion needs 1 <= i <= k");
  const SpecializationSpec here{family, j};
  const Series lhs = j_specialized(here, k, i, N) - j_specialized(here, k, i - 1, N);
  const Series rhs = shift(j_specialized({family, j + 1}, k, k - i + 1, N),
                           (static_cast<Exponent>(j) + 1) * (i - 1))
                         .truncated(N + 1);
  return prefix_eq(lhs, rhs, N + 1);
}

CheckResult xq_edge_check(Family family, int k, int j, Exponent N) {
  return prefix_eq(j_specialized({family, j}, k, 1, N), j_specialized({family, j + 1}, k, k, N),
                   N + 1);
}

CheckResult gordon_jk0_check(int k, int j, Exponent N) {
  return prefix_eq(j_specialized({Family::gordon, j}, k, 0, N), Series::zero(N + 1), N + 1);
}

}  // namespace qshelf
