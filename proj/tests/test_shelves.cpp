#include "doctest.h"

#include "oracle.hpp"
#include "qshelf/product_forms.hpp"
#include "qshelf/shelves.hpp"

using namespace qshelf;

TEST_CASE("shelf indices") {
  const ShelfIndex edge{3, 1, 3};
  CHECK(edge.linear() == 5);
  REQUIRE(edge.alias());
  CHECK(*edge.alias() == ShelfIndex{3, 2, 1});
  CHECK(*ShelfIndex{3, 2, 1}.alias() == edge);
  CHECK_FALSE(ShelfIndex{3, 0, 1}.alias());
  CHECK_FALSE(ShelfIndex{3, 1, 2}.alias());
  CHECK(ShelfIndex::from_linear(3, 5) == ShelfIndex{3, 2, 1});
  CHECK(ShelfIndex::from_linear(3, 4) == ShelfIndex{3, 1, 2});
  CHECK(ShelfIndex::from_linear(2, 1) == ShelfIndex{2, 0, 1});
  for (int l = 1; l <= 30; ++l) CHECK(ShelfIndex::from_linear(4, l).linear() == l);
  CHECK_THROWS(ShelfIndex{1, 0, 1}.validate());
  CHECK_THROWS(ShelfIndex{3, 0, 4}.validate());
  CHECK_THROWS(ShelfIndex{3, -1, 1}.validate());
}

TEST_CASE("precision budget") {
  CHECK(shelf_step_cost(Family::gga, 3, 2) == 9);
  CHECK(shelf_step_cost(Family::gordon, 3, 2) == 4);
  CHECK(shelf_budget(Family::gga, 2, 0, 10) == 11);
  CHECK(shelf_budget(Family::gga, 2, 2, 10) == 11 + 3 + 5);
  for (int k = 2; k <= 4; ++k) {
    const auto shelves = gga_shelves(k, 6, 60);
    for (const auto& s : shelves) CHECK(s.precision() >= 61);
  }
}

TEST_CASE("first recursion step for k = 2") {
  const Shelf shelf0 = gga_shelf0(2, 40);
  const Shelf shelf1 = shelf_next(shelf0, 2);
  CHECK(shelf1.j == 1);
  CHECK(shelf1.at(1) == shelf0.at(2).truncated(shelf1.precision()));
  CHECK(oracle::coeffs_of(shelf1.at(2), 6) == oracle::Coeffs{1, 0, 0, 0, 0, 1, 1});

  // G_3 by hand from the product-side G_1, G_2.
  const Series g1 = congruence_product(gga_product_spec(2, 1), 20);
  const Series g2 = congruence_product(gga_product_spec(2, 2), 20);
  const Series g3 = shift(g1 - g2, -2) - shift(g2, -1);
  CHECK_NOTHROW(assert_ordinary(g3));
  CHECK(prefix_eq(g3, shelf1.at(2), 17).passed());
}

TEST_CASE("recursion respects edge aliasing and constant terms") {
  for (int k = 2; k <= 4; ++k) {
    const auto shelves = gga_shelves(k, 5, 40);
    for (std::size_t j = 1; j < shelves.size(); ++j) {
      CHECK(prefix_eq(shelves[j].at(1), shelves[j - 1].at(k), 41).passed());
      for (int i = 1; i <= k; ++i) CHECK(shelves[j].at(i).coeff(0) == 1);
    }
  }
  CHECK(gga_shelves(3, 1, 20)[1].at(2).coeff(0) == 1);
}

TEST_CASE("shelf_next rejects mismatched or exhausted input") {
  CHECK_THROWS(shelf_next(gga_shelf0(2, 30), 3));
  CHECK_THROWS_AS(shelf_next(gga_shelf0(3, 3), 3), InsufficientPrecision);
}

TEST_CASE("closed form") {
  CHECK(prefix_eq(gga_closed_form({2, 0, 1}, 8), gga_shelf0_altsum(2, 1, 8), 9).passed());
  CHECK(oracle::coeffs_of(gga_closed_form({2, 2, 1}, 6), 6) ==
        oracle::Coeffs{1, 0, 0, 0, 0, 1, 1});
  for (int k = 2; k <= 4; ++k) {
    for (int j = 0; j <= 6; ++j) {
      for (int i = 1; i <= k; ++i) CHECK(gga_closed_form({k, j, i}, 20).coeff(0) == 1);
    }
  }
}

TEST_CASE("closed form versus recursion") {
  CHECK(recursion_vs_closed_form_check(2, 6, 60).passed());
  CHECK(recursion_vs_closed_form_check(3, 4, 40).passed());

  // A single perturbed coefficient is caught at its exponent.
  const Series closed = gga_closed_form({3, 2, 2}, 40);
  const Series recursed = gga_shelves(3, 2, 40)[2].at(2);
  const CheckResult r = prefix_eq(closed + Series::monomial(1, 17), recursed, 41);
  REQUIRE(r.first_discrepancy);
  CHECK(r.first_discrepancy->exponent == 17);
}

TEST_CASE("edge matching") {
  CHECK(edge_match_check(2, 0, 50).passed());
  CHECK(edge_match_check(4, 3, 80).passed());
  for (int j = 0; j <= 6; ++j) CHECK(edge_match_check(3, j, 30).passed());
}

TEST_CASE("Empirical Hypothesis residuals") {
  const Series g3 = gga_closed_form({2, 2, 1}, 30);
  const EhResidual strong = eh_residual(g3, 2, EhStrength::strong, false);
  CHECK(strong.check.passed());
  CHECK(strong.gamma.coeff(0) == 1);
  CHECK(strong.order == 5);

  const Series g2 = congruence_product(gga_product_spec(2, 2), 30);
  CHECK(eh_residual(g2, 0, EhStrength::strong, true).check.passed());
  CHECK(eh_residual(g2, 0, EhStrength::strong, true).order == 3);

  const EhResidual flat = eh_residual_at(Series::one().truncated(20), 5, EhStrength::weak);
  CHECK(flat.check.passed());
  CHECK_FALSE(flat.order);

  // 1 + 2q^5 has the right shape but the wrong leading coefficient.
  const Series twice = Series::one().truncated(20) + Series::monomial(2, 5);
  CHECK(eh_residual_at(twice, 5, EhStrength::plain).check.passed());
  CHECK_FALSE(eh_residual_at(twice, 5, EhStrength::strong).check.passed());
  CHECK_FALSE(eh_residual_at(twice, 6, EhStrength::plain).check.passed());
}

TEST_CASE("strong and weak EH over the shelves") {
  for (int k = 2; k <= 4; ++k) {
    const auto shelves = gga_shelves(k, 6, 60);
    CHECK(strong_eh_check(Family::gga, shelves).passed());
    CHECK(weak_eh_check(shelves).passed());
  }
}
