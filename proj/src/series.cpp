#include "qshelf/series.hpp"

#include <algorithm>
#include <sstream>

namespace qshelf {

Series::Series() = default;

Series Series::zero(Exponent precision) {
  Series s;
  s.valuation_ = precision;
  s.precision_ = precision;
  return s;
}

Series Series::one() { return monomial(1, 0); }

Series Series::monomial(const mpz_class& coefficient, Exponent exponent) {
  return from_coeffs(exponent, {coefficient}, kExact);
}

Series Series::polynomial(Exponent valuation, std::vector<mpz_class> coeffs) {
  return from_coeffs(valuation, std::move(coeffs), kExact);
}

Series Series::from_coeffs(Exponent valuation, std::vector<mpz_class> coeffs,
                           Exponent precision) {
  Series s;
  s.valuation_ = valuation;
  s.precision_ = precision;
  s.coeffs_ = std::move(coeffs);
  s.canonicalize();
  return s;
}

void Series::canonicalize() {
  if (precision_ < kExact && valuation_ + static_cast<Exponent>(coeffs_.size()) > precision_) {
    const Exponent keep = std::max<Exponent>(0, precision_ - valuation_);
    coeffs_.resize(static_cast<std::size_t>(keep));
  }
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead == coeffs_.size()) {
    coeffs_.clear();
    valuation_ = precision_;
    return;
  }
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
    valuation_ += static_cast<Exponent>(lead);
  }
}

mpz_class Series::coeff(Exponent n) const {
  if (n >= precision_) {
    throw InsufficientPrecision("coefficient of q^" + std::to_string(n) +
                                " requested from a series of precision " +
                                std::to_string(precision_));
  }
  if (n < valuation_ || n >= end()) return 0;
  return coeffs_[static_cast<std::size_t>(n - valuation_)];
}

Series Series::truncated(Exponent p) const {
  if (p >= precision_) return *this;
  Series s = *this;
  s.precision_ = p;
  s.canonicalize();
  return s;
}

Series operator+(const Series& a, const Series& b) {
  const Exponent precision = std::min(a.precision(), b.precision());
  if (a.is_zero() && b.is_zero()) return Series::zero(precision);
  Exponent lo = std::min(a.valuation(), b.valuation());
  Exponent hi = std::max(a.is_zero() ? lo : a.end(), b.is_zero() ? lo : b.end());
  hi = std::min(hi, precision);
  if (lo >= hi) return Series::zero(precision);
  std::vector<mpz_class> out(static_cast<std::size_t>(hi - lo));
  for (const Series* s : {&a, &b}) {
    const auto& c = s->coeffs();
    for (std::size_t t = 0; t < c.size(); ++t) {
      const Exponent e = s->valuation() + static_cast<Exponent>(t);
      if (e >= hi) break;
      out[static_cast<std::size_t>(e - lo)] += c[t];
    }
  }
  return Series::from_coeffs(lo, std::move(out), precision);
}

Series operator-(const Series& a) {
  std::vector<mpz_class> c = a.coeffs();
  for (auto& x : c) x = -x;
  return Series::from_coeffs(a.valuation(), std::move(c), a.precision());
}

Series operator-(const Series& a, const Series& b) { return a + (-b); }

Series operator*(const Series& a, const Series& b) {
  const Exponent precision = std::min(exponent_add(a.precision(), b.valuation()),
                                      exponent_add(b.precision(), a.valuation()));
  if (a.is_zero() || b.is_zero()) return Series::zero(precision);
  const Exponent lo = a.valuation() + b.valuation();
  Exponent hi = a.end() + b.end() - 1;
  hi = std::min(hi, precision);
  if (lo >= hi) return Series::zero(precision);
  std::vector<mpz_class> out(static_cast<std::size_t>(hi - lo));
  const auto& ca = a.coeffs();
  const auto& cb = b.coeffs();
  const std::size_t width = out.size();
  for (std::size_t s = 0; s < ca.size() && s < width; ++s) {
    const std::size_t limit = std::min(cb.size(), width - s);
    for (std::size_t t = 0; t < limit; ++t) {
      mpz_addmul(out[s + t].get_mpz_t(), ca[s].get_mpz_t(), cb[t].get_mpz_t());
    }
  }
  return Series::from_coeffs(lo, std::move(out), precision);
}

Series operator*(const mpz_class& c, const Series& a) {
  if (c == 0) return Series::zero(a.precision());
  std::vector<mpz_class> out = a.coeffs();
  for (auto& x : out) x *= c;
  return Series::from_coeffs(a.valuation(), std::move(out), a.precision());
}

Series shift(const Series& a, Exponent m) {
  if (a.is_zero()) return Series::zero(exponent_add(a.precision(), m));
  return Series::from_coeffs(a.valuation() + m, a.coeffs(), exponent_add(a.precision(), m));
}

Series mul_binomial(const Series& a, int sign, Exponent m) {
  return a + mpz_class(sign) * shift(a, m);
}

Series div_binomial(const Series& a, int sign, Exponent m, Exponent precision_cap) {
  if (m < 1) throw std::invalid_argument("div_binomial needs a positive exponent");
  const Exponent precision = std::min(a.precision(), precision_cap);
  if (precision >= kExact) {
    throw InsufficientPrecision("dividing an exact series by a binomial needs a precision cap");
  }
  if (a.is_zero()) return Series::zero(precision);
  const Exponent lo = a.valuation();
  if (lo >= precision) return Series::zero(precision);
  std::vector<mpz_class> out(static_cast<std::size_t>(precision - lo));
  const auto& c = a.coeffs();
  const auto step = static_cast<std::size_t>(m);
  for (std::size_t t = 0; t < out.size(); ++t) {
    if (t < c.size()) out[t] = c[t];
    if (t >= step) {
      if (sign > 0) {
        out[t] -= out[t - step];
      } else {
        out[t] += out[t - step];
      }
    }
  }
  return Series::from_coeffs(lo, std::move(out), precision);
}

Series invert_unit(const Series& a, Exponent precision_cap) {
  if (a.is_zero()) throw ZeroSeries("cannot invert a series that vanishes on its window");
  const mpz_class& lead = a.coeffs().front();
  if (lead != 1 && lead != -1) {
    throw LowestCoefficientNotUnit("lowest coefficient " + lead.get_str() + " is not +-1");
  }
  const Exponent v = a.valuation();
  if (a.coeffs().size() == 1 && a.is_exact()) {
    return Series::monomial(lead, -v).truncated(precision_cap);
  }
  const Exponent precision = std::min(exponent_add(a.precision(), -2 * v), precision_cap);
  if (precision >= kExact) {
    throw InsufficientPrecision("inverting a polynomial needs a precision cap");
  }
  const Exponent length = precision + v;  // exponents of the normalized inverse
  if (length <= 0) return Series::zero(precision);
  const auto& u = a.coeffs();
  std::vector<mpz_class> b(static_cast<std::size_t>(length));
  b[0] = lead;
  mpz_class acc;
  for (std::size_t n = 1; n < b.size(); ++n) {
    acc = 0;
    const std::size_t top = std::min(n, u.size() - 1);
    for (std::size_t t = 1; t <= top; ++t) {
      mpz_addmul(acc.get_mpz_t(), u[t].get_mpz_t(), b[n - t].get_mpz_t());
    }
    b[n] = lead > 0 ? mpz_class(-acc) : acc;
  }
  return Series::from_coeffs(-v, std::move(b), precision);
}

const Series& assert_ordinary(const Series& a) {
  const auto& c = a.coeffs();
  for (std::size_t t = 0; t < c.size(); ++t) {
    const Exponent e = a.valuation() + static_cast<Exponent>(t);
    if (e >= 0) break;
    if (c[t] != 0) throw NegativeExponentResidue(e, c[t].get_str());
  }
  return a;
}

std::string dump(const Series& s) {
  std::ostringstream out;
  out << "# valuation=";
  if (s.is_exact() && s.is_zero()) {
    out << "none";
  } else {
    out << s.valuation();
  }
  out << " precision=";
  if (s.is_exact()) {
    out << "exact\n";
  } else {
    out << s.precision() << '\n';
  }
  const Exponent stop = s.is_exact() ? s.end() : s.precision();
  for (Exponent n = s.valuation(); n < stop; ++n) {
    out << n << '\t' << s.coeff(n).get_str() << '\n';
  }
  return out.str();
}

}  // namespace qshelf
