#include "qshelf/transfer.hpp"

#include <stdexcept>

#include "qshelf/gordon.hpp"
#include "qshelf/product_forms.hpp"

namespace qshelf {

PolyMatrix::PolyMatrix(int k) : k_(k), entries_(static_cast<std::size_t>(k) * k) {
  if (k < 1) throw std::invalid_argument("matrix size must be positive");
}

PolyMatrix PolyMatrix::identity(int k) {
  PolyMatrix m(k);
  for (int r = 1; r <= k; ++r) m.at(r, r) = Series::one();
  return m;
}

const Series& PolyMatrix::at(int row, int col) const {
  return entries_.at(static_cast<std::size_t>((row - 1) * k_ + (col - 1)));
}

Series& PolyMatrix::at(int row, int col) {
  return entries_.at(static_cast<std::size_t>((row - 1) * k_ + (col - 1)));
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.k() != b.k()) throw std::invalid_argument("matrix size mismatch");
  const int k = a.k();
  PolyMatrix out(k);
  for (int r = 1; r <= k; ++r) {
    for (int c = 1; c <= k; ++c) {
      Series acc;
      for (int t = 1; t <= k; ++t) {
        if (a.at(r, t).is_zero() || b.at(t, c).is_zero()) continue;
        acc = acc + a.at(r, t) * b.at(t, c);
      }
      out.at(r, c) = acc;
    }
  }
  return out;
}

std::vector<Series> apply_matrix(const PolyMatrix& m, const std::vector<Series>& v) {
  if (static_cast<int>(v.size()) != m.k()) throw std::invalid_argument("vector size mismatch");
  std::vector<Series> out;
  for (int r = 1; r <= m.k(); ++r) {
    Series acc;
    for (int c = 1; c <= m.k(); ++c) {
      if (m.at(r, c).is_zero() && m.at(r, c).is_exact()) continue;
      acc = acc + m.at(r, c) * v[static_cast<std::size_t>(c - 1)];
    }
    out.push_back(acc);
  }
  return out;
}

namespace {

// Exponent step t*j uses 2tj for gga and tj for gordon.
Exponent power_step(Family family, int j) {
  return family == Family::gga ? 2 * static_cast<Exponent>(j) : static_cast<Exponent>(j);
}

PolyMatrix build_a(Family family, int j, int k) {
  PolyMatrix m(k);
  const Exponent step = power_step(family, j);
  for (int r = 1; r <= k; ++r) {
    for (int c = 1; c <= k - r + 1; ++c) m.at(r, c) = Series::monomial(1, step * (c - 1));
  }
  return m;
}

PolyMatrix build_b(Family family, int j, int k) {
  PolyMatrix m(k);
  const Exponent step = power_step(family, j);
  m.at(1, k) = Series::one();
  for (int r = 2; r <= k; ++r) {
    m.at(r, k - r + 1) = Series::monomial(1, -step * (r - 1));
    m.at(r, k - r + 2) = Series::monomial(-1, -step * (r - 1));
  }
  return m;
}

PolyMatrix build_c(int k) {
  PolyMatrix m = PolyMatrix::identity(k);
  for (int r = 2; r <= k; ++r) m.at(r, r - 1) = Series::monomial(1, -1);
  return m;
}

}  // namespace

PolyMatrix build_matrix(MatrixKind kind, Family family, int j, int k) {
  if (k < 2) throw std::invalid_argument("matrices need k >= 2");
  if (j < 1 && kind != MatrixKind::C) throw std::invalid_argument("matrices need j >= 1");
  switch (kind) {
    case MatrixKind::A:
      return build_a(family, j, k);
    case MatrixKind::B:
      return build_b(family, j, k);
    case MatrixKind::C:
      return family == Family::gga ? build_c(k) : PolyMatrix::identity(k);
    case MatrixKind::Aprime:
      return family == Family::gga ? build_a(family, j, k) * build_c(k) : build_a(family, j, k);
  }
  throw UnsupportedKind("unknown matrix kind");
}

HState h_initial(int J, int k) {
  if (J < 0) throw std::invalid_argument("starting shelf J must be >= 0");
  return HState{J, J, PolyMatrix::identity(k)};
}

HState h_step(const HState& state, Family family) {
  const int k = state.matrix.k();
  const Exponent j = state.j + 1;
  HState next{state.J, static_cast<int>(j), PolyMatrix(k)};
  for (int row = 1; row <= k; ++row) {
    // prefix[m] = sum of the first m entries of the previous row.
    std::vector<Series> prefix(static_cast<std::size_t>(k) + 1);
    for (int m = 1; m <= k; ++m) {
      prefix[static_cast<std::size_t>(m)] =
          prefix[static_cast<std::size_t>(m - 1)] + state.matrix.at(row, m);
    }
    for (int l = 1; l <= k; ++l) {
      const Series& upper = prefix[static_cast<std::size_t>(k - l + 1)];
      if (family == Family::gga) {
        const Series& lower = prefix[static_cast<std::size_t>(k - l)];
        next.matrix.at(row, l) = shift(upper, 2 * j * (l - 1)) + shift(lower, 2 * j * l - 1);
      } else {
        next.matrix.at(row, l) = shift(upper, (l - 1) * j);
      }
    }
  }
  return next;
}

HState h_step_matrix(const HState& state, Family family) {
  const int j = state.j + 1;
  return HState{state.J, j,
                state.matrix * build_matrix(MatrixKind::Aprime, family, j, state.matrix.k())};
}

int h_stop(Family family, int J, Exponent N) {
  const Exponent base = family == Family::gga ? (N + 1) / 2 + 2 : N + 2;
  return static_cast<int>(std::max<Exponent>(base, J + 2));
}

Series h_infinity(int J, int i, int k, Family family, Exponent N) {
  if (i < 1 || i > k) throw std::invalid_argument("row index out of range");
  const int stop = h_stop(family, J, N);
  HState state = h_initial(J, k);
  Series previous;
  while (state.j < stop) {
    previous = state.matrix.at(i, 1);
    state = h_step(state, family);
  }
  const Series current = state.matrix.at(i, 1);
  const CheckResult agree = prefix_eq(previous, current, N + 1);
  if (!agree.passed()) {
    throw StabilizationFailure("h^(j) row " + std::to_string(i) + " did not stabilize by j=" +
                               std::to_string(stop) + ": " + agree.message);
  }
  return current.truncated(N + 1);
}

Series family_closed_form(Family family, const ShelfIndex& idx, Exponent N) {
  return family == Family::gga ? gga_closed_form(idx, N) : gordon_closed_form(idx, N);
}

CheckResult inverse_check(Family family, int j, int k) {
  const PolyMatrix product =
      build_matrix(MatrixKind::A, family, j, k) * build_matrix(MatrixKind::B, family, j, k);
  const PolyMatrix id = PolyMatrix::identity(k);
  for (int r = 1; r <= k; ++r) {
    for (int c = 1; c <= k; ++c) {
      if (product.at(r, c) != id.at(r, c)) {
        const Series diff = product.at(r, c) - id.at(r, c);
        return fail_result(diff.valuation(), product.at(r, c).coeff(diff.valuation()),
                           id.at(r, c).coeff(diff.valuation()),
                           "A*B differs from I at entry (" + std::to_string(r) + "," +
                               std::to_string(c) + ")");
      }
    }
  }
  return pass_result();
}

namespace {

std::vector<Series> closed_form_shelf(Family family, int k, int j, Exponent N) {
  std::vector<Series> out;
  for (int i = 1; i <= k; ++i) out.push_back(family_closed_form(family, {k, j, i}, N));
  return out;
}

CheckResult compare_vectors(const std::vector<Series>& lhs, const std::vector<Series>& rhs,
                            Exponent up_to, const std::string& what) {
  for (std::size_t r = 0; r < lhs.size(); ++r) {
    CheckResult c = prefix_eq(lhs[r], rhs[r], up_to);
    if (!c.passed()) {
      c.message = what + " row " + std::to_string(r + 1) + ": " + c.message;
      return c;
    }
  }
  return pass_result();
}

}  // namespace

CheckResult matrix_recursion_check(Family family, int k, int j, Exponent N) {
  if (j < 1) throw std::invalid_argument("matrix recursion needs j >= 1");
  const Exponent margin = shelf_step_cost(family, k, j) + 1;
  const auto current = closed_form_shelf(family, k, j, N + margin);
  const auto previous = closed_form_shelf(family, k, j - 1, N + margin);
  const auto lhs = apply_matrix(build_matrix(MatrixKind::C, family, j, k), current);
  const auto rhs = apply_matrix(build_matrix(MatrixKind::B, family, j, k), previous);
  return compare_vectors(lhs, rhs, N + 1, "C G_(j) vs B_(j) G_(j-1)");
}

CheckResult h_routes_check(Family family, int J, int j_max, int k) {
  HState componentwise = h_initial(J, k);
  HState product = h_initial(J, k);
  while (componentwise.j < j_max) {
    componentwise = h_step(componentwise, family);
    product = h_step_matrix(product, family);
    for (int r = 1; r <= k; ++r) {
      for (int c = 1; c <= k; ++c) {
        const Series& a = componentwise.matrix.at(r, c);
        const Series& b = product.matrix.at(r, c);
        if (a != b) {
          const Series diff = a - b;
          return fail_result(diff.valuation(), a.coeff(diff.valuation()),
                             b.coeff(diff.valuation()),
                             "h routes differ at j=" + std::to_string(componentwise.j) +
                                 " entry (" + std::to_string(r) + "," + std::to_string(c) + ")");
        }
        for (std::size_t t = 0; t < a.coeffs().size(); ++t) {
          if (a.coeffs()[t] < 0) {
            return fail_result(a.valuation() + static_cast<Exponent>(t), a.coeffs()[t], 0,
                               "negative h coefficient at j=" + std::to_string(componentwise.j));
          }
        }
      }
    }
  }
  return pass_result();
}

CheckResult decomposition_check(Family family, int J, int i, int j_max, int k, Exponent N) {
  const Series target = family_closed_form(family, {k, J, i}, N);
  HState state = h_initial(J, k);
  while (true) {
    Series sum = Series::zero(N + 1);
    for (int l = 1; l <= k; ++l) {
      sum = sum + state.matrix.at(i, l) * family_closed_form(family, {k, state.j, l}, N);
    }
    CheckResult c = prefix_eq(sum, target, N + 1);
    if (!c.passed()) {
      c.message = "decomposition at j=" + std::to_string(state.j) + ": " + c.message;
      return c;
    }
    if (state.j >= j_max) break;
    state = h_step(state, family);
  }
  return pass_result();
}

CheckResult g_equals_hinf_check(int J, int i, int k, Family family, Exponent N) {
  return prefix_eq(family_closed_form(family, {k, J, i}, N), h_infinity(J, i, k, family, N),
                   N + 1);
}

Series solve_unique_denominator(int k, Exponent N) {
  if (N < 0) throw std::invalid_argument("order must be nonnegative");
  std::vector<mpz_class> forced;
  for (int j = 0; static_cast<Exponent>(forced.size()) <= N; ++j) {
    // G_{(k-1)j+1} = numerator / D = 1 mod q^{2j+1}, so D = numerator mod q^{2j+1}.
    const Exponent window = std::min<Exponent>(2 * static_cast<Exponent>(j), N);
    const Series numerator = gga_closed_form_numerator({k, j, 1}, window);
    for (Exponent e = 0; e <= window; ++e) {
      const mpz_class c = numerator.coeff(e);
      if (e < static_cast<Exponent>(forced.size())) {
        if (forced[static_cast<std::size_t>(e)] != c) {
          throw IdentityMismatch("shelf " + std::to_string(j) +
                                 " forces a different denominator coefficient at q^" +
                                 std::to_string(e));
        }
      } else {
        forced.push_back(c);
      }
    }
  }
  return Series::from_coeffs(0, std::move(forced), N + 1);
}

CheckResult unique_denominator_check(int k, Exponent N) {
  return prefix_eq(solve_unique_denominator(k, N), f_series(N), N + 1);
}

}  // namespace qshelf
