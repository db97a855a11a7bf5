#include "qshelf/product_forms.hpp"

#include <algorithm>
#include <stdexcept>

namespace qshelf {
namespace {

void require_family_index(int k, int i) {
  if (k < 2 || i < 1 || i > k) {
    throw std::invalid_argument("need k >= 2 and 1 <= i <= k (got k=" + std::to_string(k) +
                                ", i=" + std::to_string(i) + ")");
  }
}

Exponent residue(Exponent m, int modulus) {
  const Exponent r = m % modulus;
  return r < 0 ? r + modulus : r;
}

}  // namespace

bool ResidueCondition::excludes(Exponent m) const {
  const Exponent r = residue(m, modulus);
  return std::find(excluded.begin(), excluded.end(), r) != excluded.end();
}

bool CongruenceProductSpec::admits(Exponent m) const {
  if (m < 1) return false;
  if (ResidueCondition{modulus, excluded_residues}.excludes(m)) return false;
  if (secondary && secondary->excludes(m)) return false;
  return true;
}

void CongruenceProductSpec::validate() const {
  auto check = [](int mod, const std::vector<int>& residues) {
    if (mod < 1) throw std::invalid_argument("modulus must be positive");
    for (int r : residues) {
      if (r < 0 || r >= mod) {
        throw std::invalid_argument("residue " + std::to_string(r) + " outside [0, " +
                                    std::to_string(mod) + ")");
      }
    }
  };
  check(modulus, excluded_residues);
  if (secondary) check(secondary->modulus, secondary->excluded);
}

CongruenceProductSpec gga_product_spec(int k, int i) {
  require_family_index(k, i);
  CongruenceProductSpec spec;
  spec.modulus = 4 * k;
  spec.excluded_residues = {0, 2 * k + 2 * i - 1, 2 * k - 2 * i + 1};
  spec.secondary = ResidueCondition{4, {2}};
  spec.inverted = true;
  return spec;
}

CongruenceProductSpec f_product_spec() {
  CongruenceProductSpec spec;
  spec.modulus = 4;
  spec.excluded_residues = {2};
  spec.inverted = false;
  return spec;
}

CongruenceProductSpec jtp_product_spec(int k, int i) {
  require_family_index(k, i);
  const int mod = 4 * k;
  const std::vector<int> kept = {0, 2 * k + 2 * i - 1, 2 * k - 2 * i + 1};
  CongruenceProductSpec spec;
  spec.modulus = mod;
  for (int r = 0; r < mod; ++r) {
    if (std::find(kept.begin(), kept.end(), r) == kept.end()) spec.excluded_residues.push_back(r);
  }
  spec.inverted = false;
  return spec;
}

Series congruence_product(const CongruenceProductSpec& spec, Exponent N) {
  spec.validate();
  if (N < 0) throw std::invalid_argument("order must be nonnegative");
  Series acc = Series::one().truncated(N + 1);
  for (Exponent m = 1; m <= N; ++m) {
    if (!spec.admits(m)) continue;
    acc = spec.inverted ? div_binomial(acc, -1, m) : mul_binomial(acc, -1, m);
  }
  return acc;
}

Series f_series(Exponent N) { return congruence_product(f_product_spec(), N); }

Series jtp_sum(int k, int i, Exponent N) {
  require_family_index(k, i);
  Series sum = Series::zero(N + 1);
  for (Exponent n = 0;; ++n) {
    const Exponent e = 4 * k * choose2(n) + (2 * k + 2 * i - 1) * n;
    if (e > N) break;
    Series term = Series::monomial(alternating_sign(n), e).truncated(N + 1);
    sum = sum + mul_binomial(term, -1, (2 * k - 2 * i + 1) * (2 * n + 1));
  }
  return sum;
}

CheckResult jtp_check(int k, int i, Exponent N) {
  const Series product = congruence_product(jtp_product_spec(k, i), N);
  const Series sum = jtp_sum(k, i, N);
  return prefix_eq(product, sum, N + 1);
}

Series gga_shelf0_altsum(int k, int i, Exponent N) {
  const Series inverse_f = invert_unit(f_series(N), N + 1);
  return (jtp_sum(k, i, N) * inverse_f).truncated(N + 1);
}

}  // namespace qshelf
