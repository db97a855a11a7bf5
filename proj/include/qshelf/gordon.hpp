#pragma once

#include <vector>

#include "qshelf/check.hpp"
#include "qshelf/product_forms.hpp"
#include "qshelf/series.hpp"
#include "qshelf/shelves.hpp"

namespace qshelf {

/// Parts m != 0, +-(k-i+1) (mod 2k+1), inverted.
CongruenceProductSpec gordon_product_spec(int k, int i);

/// Euler product prod_{n>=1} (1 - q^n) to order N.
Series euler_product(Exponent N);

/// [1 + sum_{l>=1} (-1)^l q^{(2k+1)C(l,2) + (k-i+1)l} (1 + q^{(2i-1)l})] / prod (1 - q^n).
Series gordon_shelf0_first_form(int k, int i, Exponent N);

/// sum_{l>=0} (-1)^l q^{(2k+1)C(l,2) + (k+i)l} (1 - q^{(k-i+1)(2l+1)}) / prod (1 - q^n).
Series gordon_shelf0_second_form(int k, int i, Exponent N);

/// Agreement of both alternating-sum forms with the congruence product.
CheckResult gordon_shelf0_check(int k, int i, Exponent N);

/// Shelf-0 Gordon series; throws IdentityMismatch if the three forms disagree.
Series gordon_shelf0(int k, int i, Exponent N);

/// Shelf j from shelf j-1 via G_(j) = B_(j) G_(j-1); precision drops by j(k-1).
Shelf gordon_shelf_next(const Shelf& prev, int k);

/// Gordon shelves 0..j_max from the congruence products, each with precision >= N+1.
std::vector<Shelf> gordon_shelves(int k, int j_max, Exponent N);

/// sum_l (-1)^l q^{(2k+1)C(l,2) + [k(j+1)+i]l} (1-q^{l+1})...(1-q^{l+j})
///   (1 - q^{(k-i+1)(2l+j+1)}) / prod (1 - q^n), precision N+1.
Series gordon_closed_form(const ShelfIndex& idx, Exponent N);

/// Matrix-recursion shelves equal the closed form for shelves 0..j_max.
CheckResult gordon_recursion_vs_closed_form_check(int k, int j_max, Exponent N);

/// Strong Gordon EH: 1 + q^{j+1} + ... for i < k, 1 + q^{j+2} + ... for i = k.
CheckResult gordon_eh_check(const ShelfIndex& idx, Exponent N);

/// Every shelf series for j <= j_max has nonnegative coefficients through q^N.
/// For k = 2 the Andrews-Baxter successors G_i = (G_{i-2} - G_{i-1}) / q^{i-2}
/// are rebuilt directly from the two products and checked as well.
CheckResult ehrenpreis_check(int k, Exponent N, int j_max = 6);

/// ^J_i h^(j)_l G_{(k-1)j+l} is the generating function of type-(k-1, J, k-i)
/// partitions in which the part j appears exactly l-1 times.
CheckResult multiplicity_decomposition_check(int J, int i, int j, int l, int k, Exponent N);

}  // namespace qshelf
