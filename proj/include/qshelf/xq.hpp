#pragma once

#include <optional>

#include "qshelf/check.hpp"
#include "qshelf/family.hpp"
#include "qshelf/series.hpp"

namespace qshelf {

/// (y; q^base)_count = prod_{m < count} (1 - y q^{m*base}) with
/// y = y_sign * q^{y_exponent}. A finite count gives an exact Laurent
/// polynomial; count = nullopt is the infinite product to order N.
///
/// Throws DivergentProduct when an infinite product would have unboundedly
/// many factors touching exponents <= N (base_exponent < 1 or y_exponent < 0).
Series pochhammer(int y_sign, Exponent y_exponent, Exponent base_exponent,
                  std::optional<int> count, Exponent N);

/// Single-variable specialization of Andrews's J_{k,i}(a, x, q):
/// gga: a -> -q^{-1}, x -> q^{2j}, q -> q^2; gordon: a -> 0, x -> q^j.
struct SpecializationSpec {
  Family family = Family::gga;
  int j = 0;
};

/// The specialized series for 0 <= i <= k+1, precision N+1. Built from
/// pochhammer factors term by term; throws NegativeExponentResidue if negative
/// powers of q survive.
Series j_specialized(const SpecializationSpec& spec, int k, int i, Exponent N);

/// G_{(k-1)j+i} (family closed form) equals J_{k,k-i+1} specialized at shelf j.
CheckResult dictionary_check(Family family, int k, int j, int i, Exponent N);

/// gga (2 <= i <= k):
///   J_{k,k-i+1}(x=q^{2(j+1)}) = [J_{k,i}(q^{2j}) - J_{k,i-1}(q^{2j})] / q^{2(j+1)(i-1)}
///                               - q^{-1} J_{k,k-i+2}(q^{2(j+1)})
/// gordon (1 <= i <= k):
///   J_{k,i}(q^j) - J_{k,i-1}(q^j) = q^{(j+1)(i-1)} J_{k,k-i+1}(q^{j+1})
CheckResult lemma72_specialized_check(Family family, int k, int j, int i, Exponent N);

/// J_{k,1} at shelf j equals J_{k,k} at shelf j+1.
CheckResult xq_edge_check(Family family, int k, int j, Exponent N);

/// J_{k,0}(0, q^j, q) vanishes through q^N.
CheckResult gordon_jk0_check(int k, int j, Exponent N);

}  // namespace qshelf
