#include "qshelf/partitions.hpp"

#include <algorithm>
#include <stdexcept>

#include "qshelf/gordon.hpp"
#include "qshelf/product_forms.hpp"
#include "qshelf/transfer.hpp"

namespace qshelf {

PartitionConstraint PartitionConstraint::h_polynomial(Family family, int k, int i, int J, int j,
                                                      int l) {
  const int bound = family == Family::gga ? 2 * j : j;
  PartitionConstraint c;
  c.family = family;
  c.k = k;
  c.i = i;
  c.J = J;
  c.max_part = bound;
  c.exact_multiplicity = Multiplicity{bound, l - 1};
  return c;
}

void PartitionConstraint::validate() const {
  if (k < 2 || i < 1 || i > k || J < 0) {
    throw std::invalid_argument("partition constraint needs k >= 2, 1 <= i <= k, J >= 0");
  }
  if (exact_multiplicity && exact_multiplicity->count < 0) {
    throw std::invalid_argument("multiplicity must be nonnegative");
  }
}

namespace {

int smallest_allowed(const PartitionConstraint& c) {
  return c.family == Family::gga ? 2 * c.J + 1 : c.J + 1;
}

bool is_low_part(const PartitionConstraint& c, int part) {
  if (c.family == Family::gga) return part == 2 * c.J + 1 || part == 2 * c.J + 2;
  return part == c.J + 1;
}

// Difference condition between b_p (larger) and b_{p+k-1} (smaller).
bool distance_ok(Family family, int larger, int smaller) {
  const int d = larger - smaller;
  if (family == Family::gga && larger % 2 == 0) return d > 2;
  return d >= 2;
}

class Enumerator {
 public:
  Enumerator(const PartitionConstraint& c, const std::function<void(const Partition&)>& visit)
      : c_(c), visit_(visit), min_part_(smallest_allowed(c)) {}

  void run(int n) {
    seq_.clear();
    low_ = 0;
    pinned_ = 0;
    const int top = c_.max_part ? std::min(n, *c_.max_part) : n;
    descend(n, top);
  }

 private:
  void descend(int remaining, int top) {
    if (remaining == 0) {
      if (c_.exact_multiplicity && pinned_ != c_.exact_multiplicity->count) return;
      visit_(seq_);
      return;
    }
    const std::size_t q = seq_.size();
    const auto reach = static_cast<std::size_t>(c_.k - 1);
    for (int p = std::min(remaining, top); p >= min_part_; --p) {
      if (c_.exact_multiplicity) {
        const auto& m = *c_.exact_multiplicity;
        if (p < m.part && pinned_ != m.count) break;
        if (p == m.part && pinned_ + 1 > m.count) continue;
      }
      if (c_.family == Family::gga && q > 0 && seq_.back() == p && p % 2 == 1) continue;
      if (q >= reach && !distance_ok(c_.family, seq_[q - reach], p)) continue;
      const bool low = is_low_part(c_, p);
      if (low && low_ + 1 > c_.k - c_.i) continue;
      const int rest = remaining - p;
      if (rest != 0 && rest < min_part_) continue;

      seq_.push_back(p);
      low_ += low ? 1 : 0;
      pinned_ += (c_.exact_multiplicity && p == c_.exact_multiplicity->part) ? 1 : 0;
      descend(rest, p);
      pinned_ -= (c_.exact_multiplicity && p == c_.exact_multiplicity->part) ? 1 : 0;
      low_ -= low ? 1 : 0;
      seq_.pop_back();
    }
  }

  const PartitionConstraint& c_;
  const std::function<void(const Partition&)>& visit_;
  int min_part_;
  Partition seq_;
  int low_ = 0;
  int pinned_ = 0;
};

}  // namespace

std::optional<std::string> violated_condition(const PartitionConstraint& c, const Partition& p) {
  for (std::size_t t = 0; t < p.size(); ++t) {
    if (p[t] < 1) return "parts are positive";
    if (t + 1 < p.size() && p[t] < p[t + 1]) return "parts are weakly decreasing";
  }
  if (c.family == Family::gga) {
    for (std::size_t t = 0; t + 1 < p.size(); ++t) {
      if (p[t] == p[t + 1] && p[t] % 2 == 1) return "no odd part is repeated";
    }
  }
  const auto reach = static_cast<std::size_t>(c.k - 1);
  for (std::size_t t = 0; t + reach < p.size(); ++t) {
    const int d = p[t] - p[t + reach];
    if (c.family == Family::gga) {
      if (p[t] % 2 == 1 && d < 2) return "odd b_p: b_p - b_{p+k-1} >= 2";
      if (p[t] % 2 == 0 && d <= 2) return "even b_p: b_p - b_{p+k-1} > 2";
    } else if (d < 2) {
      return "difference at least 2 at distance k-1";
    }
  }
  const int floor = c.family == Family::gga ? 2 * c.J : c.J;
  if (!p.empty() && p.back() <= floor) return "smallest part > " + std::to_string(floor);
  const auto low = std::count_if(p.begin(), p.end(), [&](int x) { return is_low_part(c, x); });
  if (low > c.k - c.i) return "at most k-i parts in the lowest admissible class";
  if (c.max_part && !p.empty() && p.front() > *c.max_part) {
    return "largest part <= " + std::to_string(*c.max_part);
  }
  if (c.exact_multiplicity) {
    const auto& m = *c.exact_multiplicity;
    if (std::count(p.begin(), p.end(), m.part) != m.count) {
      return "part " + std::to_string(m.part) + " appears exactly " + std::to_string(m.count) +
             " times";
    }
  }
  return std::nullopt;
}

void for_each_partition(const PartitionConstraint& c, int n,
                        const std::function<void(const Partition&)>& visit) {
  c.validate();
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  Enumerator(c, visit).run(n);
}

std::vector<Partition> enumerate(const PartitionConstraint& c, int n) {
  std::vector<Partition> out;
  for_each_partition(c, n, [&](const Partition& p) { out.push_back(p); });
  return out;
}

std::uint64_t count_partitions(const PartitionConstraint& c, int n) {
  std::uint64_t total = 0;
  for_each_partition(c, n, [&](const Partition&) { ++total; });
  return total;
}

std::vector<Partition> all_partitions(int n) {
  std::vector<Partition> out;
  Partition seq;
  std::function<void(int, int)> rec = [&](int remaining, int top) {
    if (remaining == 0) {
      out.push_back(seq);
      return;
    }
    for (int p = std::min(remaining, top); p >= 1; --p) {
      seq.push_back(p);
      rec(remaining - p, p);
      seq.pop_back();
    }
  };
  rec(n, n);
  return out;
}

Series genfun(const PartitionConstraint& c, Exponent N) {
  if (N < 0) throw std::invalid_argument("order must be nonnegative");
  std::vector<mpz_class> coeffs;
  for (Exponent n = 0; n <= N; ++n) {
    coeffs.emplace_back(std::to_string(count_partitions(c, static_cast<int>(n))));
  }
  return Series::from_coeffs(0, std::move(coeffs), N + 1);
}

CheckResult h_oracle_check(int J, int i, int j, int l, int k, Family family, Exponent N) {
  if (j < J + 1) throw std::invalid_argument("h oracle needs j >= J+1");
  HState state = h_initial(J, k);
  while (state.j < j) state = h_step(state, family);
  const Series oracle = genfun(PartitionConstraint::h_polynomial(family, k, i, J, j, l), N);
  return prefix_eq(state.matrix.at(i, l).truncated(N + 1), oracle, N + 1);
}

CheckResult enumeration_soundness_check(const PartitionConstraint& c, int n_max) {
  for (int n = 0; n <= n_max; ++n) {
    const auto emitted = enumerate(c, n);
    for (const auto& p : emitted) {
      if (auto why = violated_condition(c, p)) {
        return fail_result(n, 1, 0, "emitted partition violates '" + *why + "'");
      }
    }
    std::vector<Partition> accepted;
    for (auto& p : all_partitions(n)) {
      if (!violated_condition(c, p)) accepted.push_back(std::move(p));
    }
    if (accepted != emitted) {
      return fail_result(n, static_cast<long>(emitted.size()), static_cast<long>(accepted.size()),
                         "enumerator and condition filter disagree at n=" + std::to_string(n));
    }
  }
  return pass_result();
}

CheckResult partition_identity_check(Family family, int k, int i, int J, Exponent N) {
  PartitionConstraint c;
  c.family = family;
  c.k = k;
  c.i = i;
  c.J = J;
  Series analytic;
  if (J == 0) {
    analytic = congruence_product(
        family == Family::gga ? gga_product_spec(k, i) : gordon_product_spec(k, i), N);
  } else {
    analytic = family_closed_form(family, {k, J, i}, N);
  }
  return prefix_eq(analytic, genfun(c, N), N + 1);
}

}  // namespace qshelf
