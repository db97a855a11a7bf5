#pragma once

// Brute-force reference computations for the tests. Nothing here calls into
// the library: series are plain int64 coefficient vectors and partitions are
// checked condition by condition against their definitions.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "qshelf/series.hpp"

namespace oracle {

using Coeffs = std::vector<std::int64_t>;
using Parts = std::vector<int>;

/// Number of partitions of each n <= N into parts m with allowed(m) true.
inline Coeffs count_into(const std::function<bool(int)>& allowed, int N) {
  Coeffs c(static_cast<std::size_t>(N) + 1, 0);
  c[0] = 1;
  for (int m = 1; m <= N; ++m) {
    if (!allowed(m)) continue;
    for (int n = m; n <= N; ++n) c[n] += c[n - m];
  }
  return c;
}

/// Expansion of prod (1 - q^m) over allowed m <= N.
inline Coeffs product_of(const std::function<bool(int)>& allowed, int N) {
  Coeffs c(static_cast<std::size_t>(N) + 1, 0);
  c[0] = 1;
  for (int m = 1; m <= N; ++m) {
    if (!allowed(m)) continue;
    for (int n = N; n >= m; --n) c[n] -= c[n - m];
  }
  return c;
}

/// Every partition of n, parts in weakly decreasing order.
inline std::vector<Parts> partitions_of(int n) {
  std::vector<Parts> out;
  Parts cur;
  std::function<void(int, int)> go = [&](int left, int cap) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(left, cap); p >= 1; --p) {
      cur.push_back(p);
      go(left - p, p);
      cur.pop_back();
    }
  };
  go(n, n);
  return out;
}

/// Type (k-1, 2J, k-i) in the parity-sensitive family.
inline bool gga_admissible(const Parts& b, int k, int i, int J) {
  for (std::size_t p = 0; p + 1 < b.size(); ++p) {
    if (b[p] == b[p + 1] && b[p] % 2 != 0) return false;
  }
  for (std::size_t p = 0; p + static_cast<std::size_t>(k - 1) < b.size(); ++p) {
    const int gap = b[p] - b[p + static_cast<std::size_t>(k - 1)];
    if (b[p] % 2 != 0 ? gap < 2 : gap <= 2) return false;
  }
  int low = 0;
  for (int x : b) {
    if (x <= 2 * J) return false;
    if (x == 2 * J + 1 || x == 2 * J + 2) ++low;
  }
  return low <= k - i;
}

/// Type (k-1, J, k-i) in the difference-two family.
inline bool gordon_admissible(const Parts& b, int k, int i, int J) {
  for (std::size_t p = 0; p + static_cast<std::size_t>(k - 1) < b.size(); ++p) {
    if (b[p] - b[p + static_cast<std::size_t>(k - 1)] < 2) return false;
  }
  int low = 0;
  for (int x : b) {
    if (x <= J) return false;
    if (x == J + 1) ++low;
  }
  return low <= k - i;
}

inline bool admissible(bool gga, const Parts& b, int k, int i, int J) {
  return gga ? gga_admissible(b, k, i, J) : gordon_admissible(b, k, i, J);
}

inline int multiplicity(const Parts& b, int part) {
  return static_cast<int>(std::count(b.begin(), b.end(), part));
}

/// Counts of admissible partitions of n <= N passing the extra filter.
inline Coeffs count_admissible(bool gga, int k, int i, int J, int N,
                               const std::function<bool(const Parts&)>& extra = {}) {
  Coeffs c(static_cast<std::size_t>(N) + 1, 0);
  for (int n = 0; n <= N; ++n) {
    for (const auto& b : partitions_of(n)) {
      if (admissible(gga, b, k, i, J) && (!extra || extra(b))) ++c[n];
    }
  }
  return c;
}

/// ^J_i h^(j)_l by definition: largest part <= bound with exactly l-1 parts
/// equal to bound, where bound is 2j (gga) or j (gordon).
inline Coeffs h_entry(bool gga, int k, int i, int J, int j, int l, int N) {
  const int bound = gga ? 2 * j : j;
  return count_admissible(gga, k, i, J, N, [&](const Parts& b) {
    return (b.empty() || b.front() <= bound) && multiplicity(b, bound) == l - 1;
  });
}

/// Laurent polynomial keyed by exponent, for schoolbook arithmetic.
using Laurent = std::map<std::int64_t, std::int64_t>;

inline Laurent times(const Laurent& a, const Laurent& b) {
  Laurent out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) out[ea + eb] += ca * cb;
  }
  return out;
}

/// Coefficients of q^0..q^N of s as int64 (they must fit).
inline Coeffs coeffs_of(const qshelf::Series& s, int N) {
  Coeffs c;
  for (int n = 0; n <= N; ++n) c.push_back(s.coeff(n).get_si());
  return c;
}

}  // namespace oracle
