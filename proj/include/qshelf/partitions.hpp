#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qshelf/check.hpp"
#include "qshelf/family.hpp"
#include "qshelf/series.hpp"

namespace qshelf {

/// A partition as a weakly decreasing sequence of parts.
using Partition = std::vector<int>;

struct Multiplicity {
  int part = 0;
  int count = 0;
};

/// Declarative description of a partition class.
///
/// gga (type (k-1, 2J, k-i)): no odd part repeated; b_p - b_{p+k-1} >= 2 when
/// b_p is odd and > 2 when b_p is even; smallest part > 2J; at most k-i parts
/// equal to 2J+1 or 2J+2.
///
/// gordon (type (k-1, J, k-i)): b_p - b_{p+k-1} >= 2; smallest part > J; the
/// part J+1 appears at most k-i times.
///
/// Both: optional bound on the largest part and an optional exact
/// multiplicity for one part value.
struct PartitionConstraint {
  Family family = Family::gga;
  int k = 2;
  int i = 1;
  int J = 0;
  std::optional<int> max_part;
  std::optional<Multiplicity> exact_multiplicity;

  /// Condition set describing ^J_i h^(j)_l: largest part at most 2j (gga) or
  /// j (gordon), with exactly l-1 parts equal to that bound.
  static PartitionConstraint h_polynomial(Family family, int k, int i, int J, int j, int l);

  void validate() const;
};

/// Name of the first condition the partition violates, or nullopt if it
/// satisfies all of them. Checks each condition directly on the full sequence.
std::optional<std::string> violated_condition(const PartitionConstraint& c, const Partition& p);

/// Calls visit for every partition of n satisfying c, in descending
/// lexicographic order (largest part first).
void for_each_partition(const PartitionConstraint& c, int n,
                        const std::function<void(const Partition&)>& visit);

std::vector<Partition> enumerate(const PartitionConstraint& c, int n);

std::uint64_t count_partitions(const PartitionConstraint& c, int n);

/// Every partition of n with parts of any size, descending lexicographic order.
std::vector<Partition> all_partitions(int n);

/// sum_n count(n) q^n for n <= N, precision N+1.
Series genfun(const PartitionConstraint& c, Exponent N);

/// The transfer-matrix entry ^J_i h^(j)_l equals the constrained generating
/// function through q^N.
CheckResult h_oracle_check(int J, int i, int j, int l, int k, Family family, Exponent N);

/// For every n <= n_max: each emitted partition passes violated_condition,
/// and every partition of n rejected by the enumerator fails a named condition.
CheckResult enumeration_soundness_check(const PartitionConstraint& c, int n_max);

/// Congruence product coefficients equal the brute-force counts d_{k,i}(n)
/// (gga) or the Gordon difference-2 counts, for n <= N.
CheckResult partition_identity_check(Family family, int k, int i, int J, Exponent N);

}  // namespace qshelf
