#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "qshelf/errors.hpp"

namespace qshelf {

/// Precision value used by exact Laurent polynomials: every coefficient is known.
inline constexpr Exponent kExact = Exponent{1} << 60;

/// Saturating addition on precisions and valuations: anything involving
/// kExact stays kExact.
constexpr Exponent exponent_add(Exponent a, Exponent b) noexcept {
  return (a >= kExact || b >= kExact) ? kExact : a + b;
}

/// Truncated formal Laurent series with arbitrary-precision integer coefficients.
///
/// Coefficient t of coeffs() belongs to q^(valuation()+t). Coefficients of q^n
/// with n >= precision() are unknown, not zero. Values are canonical: no
/// leading or trailing zero coefficients are stored and nothing at or beyond
/// the precision is kept. A series that vanishes on its window stores no
/// coefficients and reports valuation() == precision().
class Series {
 public:
  /// Exact zero.
  Series();

  static Series zero(Exponent precision);
  static Series one();
  static Series monomial(const mpz_class& coefficient, Exponent exponent);
  /// Exact Laurent polynomial with the given lowest exponent.
  static Series polynomial(Exponent valuation, std::vector<mpz_class> coeffs);
  static Series from_coeffs(Exponent valuation, std::vector<mpz_class> coeffs,
                            Exponent precision);

  Exponent valuation() const noexcept { return valuation_; }
  Exponent precision() const noexcept { return precision_; }
  bool is_exact() const noexcept { return precision_ >= kExact; }
  /// True when every coefficient inside the window is zero.
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<mpz_class>& coeffs() const noexcept { return coeffs_; }
  /// One past the highest stored exponent (valuation for the zero series).
  Exponent end() const noexcept {
    return valuation_ + static_cast<Exponent>(coeffs_.size());
  }

  /// Coefficient of q^n; throws InsufficientPrecision when n >= precision().
  mpz_class coeff(Exponent n) const;

  /// Same series with precision lowered to min(precision(), p).
  Series truncated(Exponent p) const;

  friend bool operator==(const Series&, const Series&) = default;

 private:
  void canonicalize();

  Exponent valuation_ = kExact;
  Exponent precision_ = kExact;
  std::vector<mpz_class> coeffs_;
};

Series operator+(const Series& a, const Series& b);
Series operator-(const Series& a, const Series& b);
Series operator-(const Series& a);
/// Cauchy product. Precision is min(a.P + b.v, b.P + a.v).
Series operator*(const Series& a, const Series& b);
Series operator*(const mpz_class& c, const Series& a);

/// Multiplication by q^m.
Series shift(const Series& a, Exponent m);

/// a * (1 + sign * q^m) for any integer m.
Series mul_binomial(const Series& a, int sign, Exponent m);

/// a / (1 + sign * q^m), m >= 1. An exact input needs a finite precision cap.
Series div_binomial(const Series& a, int sign, Exponent m, Exponent precision_cap = kExact);

/// Multiplicative inverse of a series whose lowest nonzero coefficient is +-1.
///
/// The result has precision min(a.P - 2v, precision_cap) where v is the
/// valuation of a; inverting a non-monomial polynomial needs a finite cap.
Series invert_unit(const Series& a, Exponent precision_cap = kExact);

/// Returns a unchanged, or throws NegativeExponentResidue at the lowest
/// negative exponent carrying a nonzero coefficient.
const Series& assert_ordinary(const Series& a);

/// Text dump: "# valuation=<v> precision=<P>" followed by "n<TAB>coefficient"
/// lines for valuation <= n < precision. Exact polynomials print "precision=exact"
/// and stop at their last term; the exact zero prints "valuation=none".
std::string dump(const Series& s);

}  // namespace qshelf
