#include "qshelf/shelves.hpp"

#include <algorithm>
#include <stdexcept>

#include "qshelf/gordon.hpp"
#include "qshelf/product_forms.hpp"

namespace qshelf {

ShelfIndex ShelfIndex::from_linear(int k, Exponent l) {
  if (k < 2 || l < 1) throw std::invalid_argument("need k >= 2 and l >= 1");
  const auto j = static_cast<int>((l - 1) / (k - 1));
  const auto i = static_cast<int>(l - static_cast<Exponent>(k - 1) * j);
  return ShelfIndex{k, j, i};
}

std::optional<ShelfIndex> ShelfIndex::alias() const {
  if (i == k) return ShelfIndex{k, j + 1, 1};
  if (i == 1 && j >= 1) return ShelfIndex{k, j - 1, k};
  return std::nullopt;
}

void ShelfIndex::validate() const {
  if (k < 2 || j < 0 || i < 1 || i > k) {
    throw std::invalid_argument("invalid shelf index (k=" + std::to_string(k) +
                                ", j=" + std::to_string(j) + ", i=" + std::to_string(i) + ")");
  }
}

Exponent Shelf::precision() const {
  Exponent p = kExact;
  for (const auto& s : entries) p = std::min(p, s.precision());
  return p;
}

Exponent shelf_step_cost(Family family, int k, int j) {
  const Exponent base = static_cast<Exponent>(j) * (k - 1);
  return family == Family::gga ? 2 * base + 1 : base;
}

Exponent shelf_budget(Family family, int k, int j_max, Exponent N) {
  Exponent p = N + 1;
  for (int t = 1; t <= j_max; ++t) p += shelf_step_cost(family, k, t);
  return p;
}

Shelf gga_shelf0(int k, Exponent precision) {
  Shelf shelf;
  shelf.j = 0;
  for (int i = 1; i <= k; ++i) {
    shelf.entries.push_back(congruence_product(gga_product_spec(k, i), precision - 1));
  }
  return shelf;
}

Shelf shelf_next(const Shelf& prev, int k) {
  if (prev.k() != k) throw std::invalid_argument("shelf width does not match k");
  const int j = prev.j + 1;
  const Exponent target = prev.precision() - shelf_step_cost(Family::gga, k, j);
  if (target < 1) {
    throw InsufficientPrecision("shelf " + std::to_string(j) + " needs more than precision " +
                                std::to_string(prev.precision()));
  }
  Shelf next;
  next.j = j;
  next.entries.push_back(prev.at(k));
  for (int i = 2; i <= k; ++i) {
    const Series difference = prev.at(k - i + 1) - prev.at(k - i + 2);
    const Series quotient = shift(difference, -2 * static_cast<Exponent>(j) * (i - 1));
    Series entry = quotient - shift(next.entries.back(), -1);
    next.entries.push_back(assert_ordinary(entry));
  }
  for (auto& s : next.entries) s = s.truncated(target);
  return next;
}

std::vector<Shelf> gga_shelves(int k, int j_max, Exponent N) {
  std::vector<Shelf> shelves;
  shelves.push_back(gga_shelf0(k, shelf_budget(Family::gga, k, j_max, N)));
  for (int j = 1; j <= j_max; ++j) shelves.push_back(shelf_next(shelves.back(), k));
  return shelves;
}

Series gga_closed_form_numerator(const ShelfIndex& idx, Exponent N) {
  idx.validate();
  const Exponent k = idx.k;
  const Exponent j = idx.j;
  const Exponent i = idx.i;
  const Exponent precision = N + 1;
  Series sum = Series::zero(precision);
  for (Exponent n = 0;; ++n) {
    const Exponent e = 4 * k * choose2(n) + (2 * k * (j + 1) + 2 * i - 1) * n;
    if (e > N) break;
    Series term = Series::monomial(alternating_sign(n), e).truncated(precision);
    for (Exponent t = 1; t <= j; ++t) term = mul_binomial(term, -1, 2 * (n + t));
    // 1 - q^{2(k-i+1)(2n+j+1)} + q^{2(n+j)+1} (1 - q^{2(k-i)(2n+j+1)})
    const Exponent tail = 2 * (n + j) + 1;
    term = term - shift(term, 2 * (k - i + 1) * (2 * n + j + 1)) + shift(term, tail) -
           shift(term, tail + 2 * (k - i) * (2 * n + j + 1));
    for (Exponent t = 0; t <= j; ++t) term = div_binomial(term, 1, 2 * (n + t) + 1);
    sum = sum + term;
  }
  return sum;
}

Series gga_closed_form(const ShelfIndex& idx, Exponent N) {
  const Series inverse_f = invert_unit(f_series(N), N + 1);
  return (gga_closed_form_numerator(idx, N) * inverse_f).truncated(N + 1);
}

CheckResult edge_match_check(int k, int j, Exponent N) {
  if (j < 0) throw std::invalid_argument("edge matching needs j >= 0");
  return prefix_eq(gga_closed_form({k, j, k}, N), gga_closed_form({k, j + 1, 1}, N), N + 1);
}

CheckResult recursion_vs_closed_form_check(int k, int j_max, Exponent N) {
  const auto shelves = gga_shelves(k, j_max, N);
  CheckResult result;
  for (const auto& shelf : shelves) {
    for (int i = 1; i <= k; ++i) {
      CheckResult r = prefix_eq(shelf.at(i), gga_closed_form({k, shelf.j, i}, N), N + 1);
      if (!r.passed()) {
        r.message = "G_" + std::to_string(ShelfIndex{k, shelf.j, i}.linear()) +
                    " (j=" + std::to_string(shelf.j) + ", i=" + std::to_string(i) +
                    "): recursion vs closed form, " + r.message;
        return r;
      }
    }
  }
  return result;
}

EhResidual eh_residual_at(const Series& s, Exponent exponent, EhStrength strength) {
  if (s.precision() <= exponent) {
    throw InsufficientPrecision("EH residual at exponent " + std::to_string(exponent) +
                                " needs precision > " + std::to_string(exponent));
  }
  const Series residual = s - Series::one();
  EhResidual out;
  out.gamma = shift(residual, -exponent);
  if (!residual.is_zero()) out.order = residual.valuation();

  if (strength == EhStrength::weak) {
    if (out.order && *out.order < 1) {
      out.check = fail_result(0, s.coeff(0), 1, "constant term is not 1");
    }
    return out;
  }
  for (Exponent n = out.gamma.valuation(); n < 0 && n < out.gamma.end(); ++n) {
    mpz_class c = out.gamma.coeff(n);
    if (c != 0) {
      out.check = fail_result(n + exponent, std::move(c), 0,
                              "series - 1 is not divisible by q^" + std::to_string(exponent));
      return out;
    }
  }
  if (strength == EhStrength::strong) {
    mpz_class c = out.gamma.coeff(0);
    if (c != 1) {
      out.check = fail_result(exponent, std::move(c), 1,
                              "coefficient of q^" + std::to_string(exponent) + " is not 1");
    }
  }
  return out;
}

EhResidual eh_residual(const Series& s, int j, EhStrength strength, bool i_is_k) {
  if (s.precision() <= 2 * static_cast<Exponent>(j) + 3) {
    throw InsufficientPrecision("EH residual on shelf " + std::to_string(j) +
                                " needs precision > " + std::to_string(2 * j + 3));
  }
  const Exponent exponent = 2 * static_cast<Exponent>(j) + (i_is_k ? 3 : 1);
  return eh_residual_at(s, exponent, strength);
}

namespace {

Exponent eh_exponent(Family family, int j, bool i_is_k) {
  if (family == Family::gga) return 2 * static_cast<Exponent>(j) + (i_is_k ? 3 : 1);
  return static_cast<Exponent>(j) + (i_is_k ? 2 : 1);
}

}  // namespace

CheckResult strong_eh_check(Family family, const std::vector<Shelf>& shelves) {
  for (const auto& shelf : shelves) {
    const int k = shelf.k();
    for (int i = 1; i <= k; ++i) {
      // i = k is read both as the last entry of shelf j and the first of shelf j+1.
      std::vector<Exponent> exponents = {eh_exponent(family, shelf.j, i == k)};
      if (i == k) exponents.push_back(eh_exponent(family, shelf.j + 1, false));
      for (Exponent e : exponents) {
        EhResidual r = eh_residual_at(shelf.at(i), e, EhStrength::strong);
        if (!r.check.passed()) {
          r.check.message = "G_" + std::to_string(ShelfIndex{k, shelf.j, i}.linear()) + ": " +
                            r.check.message;
          return r.check;
        }
      }
    }
  }
  return pass_result();
}

CheckResult weak_eh_check(const std::vector<Shelf>& shelves) {
  std::optional<Exponent> previous_min;
  for (const auto& shelf : shelves) {
    Exponent shelf_min = kExact;
    for (int i = 1; i <= shelf.k(); ++i) {
      EhResidual r = eh_residual_at(shelf.at(i), 0, EhStrength::weak);
      if (!r.check.passed()) return r.check;
      shelf_min = std::min(shelf_min, r.order.value_or(shelf.at(i).precision()));
    }
    if (previous_min && shelf_min <= *previous_min) {
      return fail_result(shelf_min, shelf_min, *previous_min,
                         "order of G - 1 did not grow on shelf " + std::to_string(shelf.j));
    }
    previous_min = shelf_min;
  }
  return pass_result();
}

}  // namespace qshelf
