#pragma once

#include <vector>

#include "qshelf/check.hpp"
#include "qshelf/family.hpp"
#include "qshelf/series.hpp"
#include "qshelf/shelves.hpp"

namespace qshelf {

/// k x k matrix of Laurent polynomials. Products of exact entries are exact.
class PolyMatrix {
 public:
  explicit PolyMatrix(int k);

  static PolyMatrix identity(int k);

  int k() const noexcept { return k_; }
  /// 1-based entry access.
  const Series& at(int row, int col) const;
  Series& at(int row, int col);

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

 private:
  int k_;
  std::vector<Series> entries_;
};

/// Matrix-vector product; the vector holds one series per row.
std::vector<Series> apply_matrix(const PolyMatrix& m, const std::vector<Series>& v);

enum class MatrixKind { A, B, C, Aprime };

/// Transfer matrices of the shelf recursion.
///
/// gga: B_(j) has +-q^{-2tj} on its antidiagonal pair, C is lower bidiagonal
/// with q^{-1}, A_(j) = B_(j)^{-1} has A[r][c] = q^{2(c-1)j} for c <= k-r+1,
/// and A'_(j) = A_(j) C. gordon uses q^{tj} powers and C = I, so A' = A.
PolyMatrix build_matrix(MatrixKind kind, Family family, int j, int k);

/// ^J h^(j): the product A'_(J+1) ... A'_(j) (gga) or A_(J+1) ... A_(j) (gordon).
struct HState {
  int J = 0;
  int j = 0;
  PolyMatrix matrix{2};
};

/// ^J h^(J) = identity.
HState h_initial(int J, int k);

/// One step of the componentwise h recursion, j -> j+1.
HState h_step(const HState& state, Family family);

/// Same step computed as matrix * A'_(j+1) (gga) or matrix * A_(j+1) (gordon).
HState h_step_matrix(const HState& state, Family family);

/// Stabilization cutoff used by h_infinity: ceil(N/2)+2 (gga) or N+2 (gordon),
/// and at least J+2.
int h_stop(Family family, int J, Exponent N);

/// Limit of the (i, 1) entry of ^J h^(j) as j grows, precision N+1. Throws
/// StabilizationFailure if the last two iterates disagree through q^N.
Series h_infinity(int J, int i, int k, Family family, Exponent N);

/// Closed form of the given family (gga_closed_form or gordon_closed_form).
Series family_closed_form(Family family, const ShelfIndex& idx, Exponent N);

/// A_(j) B_(j) = I.
CheckResult inverse_check(Family family, int j, int k);

/// gga: C G_(j) = B_(j) G_(j-1); gordon: G_(j) = B_(j) G_(j-1). Shelves come
/// from the closed forms; compared through q^N.
CheckResult matrix_recursion_check(Family family, int k, int j, Exponent N);

/// Componentwise recursion and matrix-product route agree for J < j <= j_max,
/// and every coefficient stays nonnegative.
CheckResult h_routes_check(Family family, int J, int j_max, int k);

/// sum_l ^J_i h^(j)_l G_{(k-1)j+l} = G_{(k-1)J+i} through q^N for J <= j <= j_max.
CheckResult decomposition_check(Family family, int J, int i, int j_max, int k, Exponent N);

/// G_{(k-1)J+i} (closed form) equals ^J_i h^(inf)_1 through q^N.
CheckResult g_equals_hinf_check(int J, int i, int k, Family family, Exponent N);

/// Reads the denominator forced by G_{(k-1)j+1} = 1 mod q^{2j+1} from the
/// closed-form numerators of ascending shelves; precision N+1.
Series solve_unique_denominator(int k, Exponent N);

/// solve_unique_denominator(k, N) equals F(q) through q^N.
CheckResult unique_denominator_check(int k, Exponent N);

}  // namespace qshelf
