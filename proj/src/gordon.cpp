#include "qshelf/gordon.hpp"

#include <stdexcept>

#include "qshelf/partitions.hpp"
#include "qshelf/transfer.hpp"

namespace qshelf {
namespace {

void require_index(int k, int i) {
  if (k < 2 || i < 1 || i > k) throw std::invalid_argument("need k >= 2 and 1 <= i <= k");
}

Series divide_by_euler(const Series& s, Exponent N) {
  Series out = s.truncated(N + 1);
  for (Exponent n = 1; n <= N; ++n) out = div_binomial(out, -1, n);
  return out;
}

}  // namespace

CongruenceProductSpec gordon_product_spec(int k, int i) {
  require_index(k, i);
  CongruenceProductSpec spec;
  spec.modulus = 2 * k + 1;
  spec.excluded_residues = {0, k - i + 1, 2 * k + 1 - (k - i + 1)};
  spec.inverted = true;
  return spec;
}

Series euler_product(Exponent N) {
  Series acc = Series::one().truncated(N + 1);
  for (Exponent n = 1; n <= N; ++n) acc = mul_binomial(acc, -1, n);
  return acc;
}

Series gordon_shelf0_first_form(int k, int i, Exponent N) {
  require_index(k, i);
  Series sum = Series::one().truncated(N + 1);
  for (Exponent l = 1;; ++l) {
    const Exponent e = (2 * k + 1) * choose2(l) + (k - i + 1) * l;
    if (e > N) break;
    const Series term = Series::monomial(alternating_sign(l), e).truncated(N + 1);
    sum = sum + mul_binomial(term, 1, (2 * i - 1) * l);
  }
  return divide_by_euler(sum, N);
}

Series gordon_shelf0_second_form(int k, int i, Exponent N) {
  require_index(k, i);
  Series sum = Series::zero(N + 1);
  for (Exponent l = 0;; ++l) {
    const Exponent e = (2 * k + 1) * choose2(l) + (k + i) * l;
    if (e > N) break;
    const Series term = Series::monomial(alternating_sign(l), e).truncated(N + 1);
    sum = sum + mul_binomial(term, -1, (k - i + 1) * (2 * l + 1));
  }
  return divide_by_euler(sum, N);
}

CheckResult gordon_shelf0_check(int k, int i, Exponent N) {
  const Series product = congruence_product(gordon_product_spec(k, i), N);
  CheckResult result = prefix_eq(gordon_shelf0_first_form(k, i, N), product, N + 1);
  if (!result.passed()) result.message = "first alternating form vs product: " + result.message;
  CheckResult second = prefix_eq(gordon_shelf0_second_form(k, i, N), product, N + 1);
  if (!second.passed()) second.message = "second alternating form vs product: " + second.message;
  merge(result, second);
  return result;
}

Series gordon_shelf0(int k, int i, Exponent N) {
  const CheckResult agree = gordon_shelf0_check(k, i, N);
  if (!agree.passed()) throw IdentityMismatch(agree.message);
  return congruence_product(gordon_product_spec(k, i), N);
}

Shelf gordon_shelf_next(const Shelf& prev, int k) {
  if (prev.k() != k) throw std::invalid_argument("shelf width does not match k");
  const int j = prev.j + 1;
  const Exponent target = prev.precision() - shelf_step_cost(Family::gordon, k, j);
  if (target < 1) {
    throw InsufficientPrecision("gordon shelf " + std::to_string(j) +
                                " needs more than precision " + std::to_string(prev.precision()));
  }
  Shelf next;
  next.j = j;
  next.entries = apply_matrix(build_matrix(MatrixKind::B, Family::gordon, j, k), prev.entries);
  for (auto& s : next.entries) s = assert_ordinary(s).truncated(target);
  return next;
}

std::vector<Shelf> gordon_shelves(int k, int j_max, Exponent N) {
  const Exponent start = shelf_budget(Family::gordon, k, j_max, N);
  Shelf shelf0;
  for (int i = 1; i <= k; ++i) {
    shelf0.entries.push_back(congruence_product(gordon_product_spec(k, i), start - 1));
  }
  std::vector<Shelf> shelves{shelf0};
  for (int j = 1; j <= j_max; ++j) shelves.push_back(gordon_shelf_next(shelves.back(), k));
  return shelves;
}

Series gordon_closed_form(const ShelfIndex& idx, Exponent N) {
  idx.validate();
  const Exponent k = idx.k;
  const Exponent j = idx.j;
  const Exponent i = idx.i;
  Series sum = Series::zero(N + 1);
  for (Exponent l = 0;; ++l) {
    const Exponent e = (2 * k + 1) * choose2(l) + (k * (j + 1) + i) * l;
    if (e > N) break;
    Series term = Series::monomial(alternating_sign(l), e).truncated(N + 1);
    for (Exponent t = 1; t <= j; ++t) term = mul_binomial(term, -1, l + t);
    term = mul_binomial(term, -1, (k - i + 1) * (2 * l + j + 1));
    sum = sum + term;
  }
  return divide_by_euler(sum, N);
}

CheckResult gordon_recursion_vs_closed_form_check(int k, int j_max, Exponent N) {
  for (const auto& shelf : gordon_shelves(k, j_max, N)) {
    for (int i = 1; i <= k; ++i) {
      CheckResult r = prefix_eq(shelf.at(i), gordon_closed_form({k, shelf.j, i}, N), N + 1);
      if (!r.passed()) {
        r.message = "gordon G_" + std::to_string(ShelfIndex{k, shelf.j, i}.linear()) +
                    ": matrix recursion vs closed form, " + r.message;
        return r;
      }
    }
  }
  return pass_result();
}

CheckResult gordon_eh_check(const ShelfIndex& idx, Exponent N) {
  idx.validate();
  const Exponent exponent = idx.j + (idx.i == idx.k ? 2 : 1);
  const Series g = gordon_closed_form(idx, std::max(N, exponent + 1));
  return eh_residual_at(g, exponent, EhStrength::strong).check;
}

CheckResult ehrenpreis_check(int k, Exponent N, int j_max) {
  for (const auto& shelf : gordon_shelves(k, j_max, N)) {
    for (int i = 1; i <= k; ++i) {
      CheckResult r = nonnegative(shelf.at(i), N + 1);
      if (!r.passed()) {
        r.message = "G_" + std::to_string(ShelfIndex{k, shelf.j, i}.linear()) + ": " + r.message;
        return r;
      }
    }
  }
  if (k == 2) {
    // G_3 = (G_1 - G_2)/q, G_4 = (G_2 - G_3)/q^2, ..., built straight from the products.
    const Exponent count = j_max + 2;
    const Exponent start = N + 1 + count * (count - 1) / 2;
    std::vector<Series> g = {congruence_product(gordon_product_spec(2, 1), start - 1),
                             congruence_product(gordon_product_spec(2, 2), start - 1)};
    for (Exponent t = 3; t <= count; ++t) {
      const auto idx = static_cast<std::size_t>(t - 1);
      g.push_back(assert_ordinary(shift(g[idx - 2] - g[idx - 1], -(t - 2))));
      CheckResult r = nonnegative(g.back(), N + 1);
      if (!r.passed()) {
        r.message = "successor G_" + std::to_string(t) + ": " + r.message;
        return r;
      }
    }
  }
  return pass_result();
}

CheckResult multiplicity_decomposition_check(int J, int i, int j, int l, int k, Exponent N) {
  if (j < J + 1) throw std::invalid_argument("multiplicity decomposition needs j >= J+1");
  HState state = h_initial(J, k);
  while (state.j < j) state = h_step(state, Family::gordon);
  const Series contribution = state.matrix.at(i, l) * gordon_closed_form({k, j, l}, N);
  PartitionConstraint c;
  c.family = Family::gordon;
  c.k = k;
  c.i = i;
  c.J = J;
  c.exact_multiplicity = Multiplicity{j, l - 1};
  return prefix_eq(contribution, genfun(c, N), N + 1);
}

}  // namespace qshelf
