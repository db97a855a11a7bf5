#pragma once

#include <optional>
#include <vector>

#include "qshelf/check.hpp"
#include "qshelf/series.hpp"

namespace qshelf {

struct ResidueCondition {
  int modulus = 1;
  std::vector<int> excluded;

  bool excludes(Exponent m) const;
};

/// Product over m >= 1 of (1 - q^m) (or its inverse) restricted to exponents
/// whose residues avoid the excluded classes of both moduli.
struct CongruenceProductSpec {
  int modulus = 1;
  std::vector<int> excluded_residues;
  std::optional<ResidueCondition> secondary;
  bool inverted = false;

  bool admits(Exponent m) const;
  /// Throws std::invalid_argument if a residue lies outside [0, modulus).
  void validate() const;
};

/// Parts m != 2 (mod 4) and m != 0, 2k +- (2i-1) (mod 4k), inverted.
CongruenceProductSpec gga_product_spec(int k, int i);
/// F(q): product of (1 - q^m) over m != 2 (mod 4).
CongruenceProductSpec f_product_spec();
/// Product of (1 - q^m) over m = 0, 2k +- (2i-1) (mod 4k).
CongruenceProductSpec jtp_product_spec(int k, int i);

/// Exact product over admissible m <= N; precision N+1.
Series congruence_product(const CongruenceProductSpec& spec, Exponent N);

/// F(q) to order N (precision N+1).
Series f_series(Exponent N);

/// Sum side of the specialized triple product:
/// sum_{n>=0} (-1)^n q^{4k C(n,2) + (2k+2i-1) n} (1 - q^{(2k-2i+1)(2n+1)}), precision N+1.
Series jtp_sum(int k, int i, Exponent N);

/// Product and sum sides of the specialized triple product agree through q^N.
CheckResult jtp_check(int k, int i, Exponent N);

/// G_i(q) as jtp_sum(k, i) / F(q), precision N+1.
Series gga_shelf0_altsum(int k, int i, Exponent N);

/// Sign (-1)^n as an integer.
inline int alternating_sign(Exponent n) { return (n % 2 == 0) ? 1 : -1; }

/// Binomial coefficient C(n, 2).
constexpr Exponent choose2(Exponent n) { return n * (n - 1) / 2; }

}  // namespace qshelf
