#pragma once

#include <optional>
#include <vector>

#include "qshelf/check.hpp"
#include "qshelf/family.hpp"
#include "qshelf/series.hpp"

namespace qshelf {

/// Position (j, i) on shelf j of the family with parameter k. The linear index
/// is l = (k-1)j + i, so (j, k) and (j+1, 1) name the same series.
struct ShelfIndex {
  int k = 2;
  int j = 0;
  int i = 1;

  Exponent linear() const { return static_cast<Exponent>(k - 1) * j + i; }

  /// Canonical index for l >= 1, with i in [1, k-1].
  static ShelfIndex from_linear(int k, Exponent l);

  /// The other name of an edge entry: (j, k) <-> (j+1, 1); nullopt otherwise.
  std::optional<ShelfIndex> alias() const;

  /// Throws std::invalid_argument unless k >= 2, j >= 0, 1 <= i <= k.
  void validate() const;

  friend bool operator==(const ShelfIndex&, const ShelfIndex&) = default;
};

/// The k series G_{(k-1)j+1}, ..., G_{(k-1)j+k}.
struct Shelf {
  int j = 0;
  std::vector<Series> entries;

  /// Entry at position i (1-based).
  const Series& at(int i) const { return entries.at(static_cast<std::size_t>(i - 1)); }
  Series& at(int i) { return entries.at(static_cast<std::size_t>(i - 1)); }
  int k() const { return static_cast<int>(entries.size()); }
  Exponent precision() const;
};

/// Exponents of precision consumed when stepping to shelf j:
/// 2j(k-1)+1 for gga, j(k-1) for gordon.
Exponent shelf_step_cost(Family family, int k, int j);

/// Starting precision needed so that shelf j_max still has precision N+1.
Exponent shelf_budget(Family family, int k, int j_max, Exponent N);

/// Shelf 0 of the gga family: the congruence products G_1..G_k at the given precision.
Shelf gga_shelf0(int k, Exponent precision);

/// Shelf j from shelf j-1 via the within-shelf recursion
/// G_{(k-1)j+i} = (G_{(k-1)(j-1)+k-i+1} - G_{(k-1)(j-1)+k-i+2}) / q^{2j(i-1)} - q^{-1} G_{(k-1)j+i-1}.
/// Entries are produced in ascending i and truncated to a common precision
/// P - 2j(k-1) - 1.
Shelf shelf_next(const Shelf& prev, int k);

/// Shelves 0..j_max generated by recursion from the products, each with
/// precision >= N+1.
std::vector<Shelf> gga_shelves(int k, int j_max, Exponent N);

/// The alternating-sum numerator of the closed form (everything except 1/F(q)),
/// precision N+1.
Series gga_closed_form_numerator(const ShelfIndex& idx, Exponent N);

/// Closed-form expression for G_{(k-1)j+i}(q), precision N+1.
Series gga_closed_form(const ShelfIndex& idx, Exponent N);

/// The two closed-form readings of G_{(k-1)j+k} = G_{(k-1)(j+1)+1} agree through q^N.
CheckResult edge_match_check(int k, int j, Exponent N);

/// Recursion-generated shelves equal the closed form for every entry of shelves 0..j_max.
CheckResult recursion_vs_closed_form_check(int k, int j_max, Exponent N);

enum class EhStrength { weak, plain, strong };

struct EhResidual {
  Series gamma;
  CheckResult check;
  /// Order of s - 1 (lowest exponent with a nonzero coefficient); nullopt
  /// when s - 1 vanishes on the whole window.
  std::optional<Exponent> order;
};

/// Splits s = 1 + q^exponent * gamma and checks gamma: plain requires gamma to
/// be an ordinary power series, strong additionally pins its constant term to
/// 1, weak only requires s to have constant term 1 and reports the order of s - 1.
EhResidual eh_residual_at(const Series& s, Exponent exponent, EhStrength strength);

/// Empirical Hypothesis residual for a gga shelf-j series; the exponent is
/// 2j+1, or 2j+3 when i_is_k.
EhResidual eh_residual(const Series& s, int j, EhStrength strength, bool i_is_k);

/// Strong EH for every entry of the given shelves, reading each edge entry
/// both as (j, k) and as (j+1, 1).
CheckResult strong_eh_check(Family family, const std::vector<Shelf>& shelves);

/// Weak EH: G_l has constant term 1 and min_i order(G_{(k-1)j+i} - 1)
/// strictly increases with j.
CheckResult weak_eh_check(const std::vector<Shelf>& shelves);

}  // namespace qshelf
