#include "doctest.h"

#include "oracle.hpp"
#include "qshelf/gordon.hpp"

using namespace qshelf;

namespace {

bool gordon_allowed(int k, int i, int m) {
  const int r = m % (2 * k + 1);
  return r != 0 && r != k - i + 1 && r != k + i;
}

}  // namespace

TEST_CASE("Rogers-Ramanujan products") {
  CHECK(oracle::coeffs_of(gordon_shelf0(2, 1, 8), 8) ==
        oracle::Coeffs{1, 1, 1, 1, 2, 2, 3, 3, 4});
  CHECK(oracle::coeffs_of(gordon_shelf0(2, 2, 8), 8) ==
        oracle::Coeffs{1, 0, 1, 1, 1, 1, 2, 2, 3});
  for (int k = 2; k <= 4; ++k) {
    for (int i = 1; i <= k; ++i) {
      CAPTURE(k);
      CAPTURE(i);
      const Series g = gordon_shelf0(k, i, 50);
      CHECK(g.coeff(0) == 1);
      CHECK(oracle::coeffs_of(g, 50) ==
            oracle::count_into([&](int m) { return gordon_allowed(k, i, m); }, 50));
      CHECK(gordon_shelf0_check(k, i, 100).passed());
    }
  }
}

TEST_CASE("Euler product") {
  CHECK(oracle::coeffs_of(euler_product(30), 30) ==
        oracle::product_of([](int) { return true; }, 30));
}

TEST_CASE("closed form") {
  CHECK(prefix_eq(gordon_closed_form({2, 0, 1}, 40), gordon_shelf0(2, 1, 40), 41).passed());
  const Series g1 = gordon_shelf0(2, 1, 30);
  const Series g2 = gordon_shelf0(2, 2, 30);
  const Series g3 = shift(g1 - g2, -1);
  CHECK(oracle::coeffs_of(g3, 6) == oracle::Coeffs{1, 0, 0, 1, 1, 1, 1});
  CHECK(prefix_eq(gordon_closed_form({2, 1, 2}, 28), g3, 29).passed());
  for (int k = 2; k <= 4; ++k) CHECK(gordon_recursion_vs_closed_form_check(k, 6, 60).passed());
}

TEST_CASE("Gordon Empirical Hypothesis") {
  CHECK(gordon_eh_check({2, 1, 1}, 20).passed());
  CHECK(gordon_closed_form({2, 1, 1}, 5).coeff(2) == 1);
  CHECK(gordon_eh_check({3, 0, 3}, 20).passed());
  for (int k = 2; k <= 4; ++k) {
    for (int j = 0; j <= 6; ++j) {
      for (int i = 1; i <= k; ++i) CHECK(gordon_eh_check({k, j, i}, 40).passed());
    }
  }
  CHECK(strong_eh_check(Family::gordon, gordon_shelves(3, 4, 40)).passed());
}

TEST_CASE("Ehrenpreis nonnegativity") {
  CHECK(ehrenpreis_check(2, 100).passed());
  CHECK(ehrenpreis_check(4, 60).passed());

  // Swapping one factor 1/(1 - q) for 1/(1 + q) must produce a negative coefficient.
  const Series g = gordon_shelf0(2, 1, 40);
  const Series mutated = div_binomial(mul_binomial(g, -1, 1), 1, 1);
  const CheckResult r = nonnegative(mutated, 41);
  CHECK(r.status == Status::fail);
  CHECK(r.first_discrepancy.has_value());
}

TEST_CASE("multiplicity decomposition") {
  for (int k = 2; k <= 3; ++k) {
    for (int J = 0; J <= 1; ++J) {
      for (int j = J + 1; j <= J + 3; ++j) {
        for (int i = 1; i <= k; ++i) {
          for (int l = 1; l <= k; ++l) CHECK(multiplicity_decomposition_check(J, i, j, l, k, 24).passed());
        }
      }
    }
  }
  CHECK_THROWS(multiplicity_decomposition_check(2, 1, 2, 1, 2, 10));
}

TEST_CASE("Gordon partition identities against the brute-force filter") {
  for (int k = 2; k <= 3; ++k) {
    for (int i = 1; i <= k; ++i) {
      CHECK(oracle::coeffs_of(gordon_shelf0(k, i, 24), 24) ==
            oracle::count_admissible(false, k, i, 0, 24));
      CHECK(oracle::coeffs_of(gordon_closed_form({k, 2, i}, 24), 24) ==
            oracle::count_admissible(false, k, i, 2, 24));
    }
  }
}
