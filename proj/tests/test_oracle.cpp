#include "doctest.h"

#include "cmclass/cm.hpp"
#include "cmclass/errors.hpp"
#include "cmclass/expr.hpp"
#include "cmclass/oracle.hpp"
#include "cmclass/series.hpp"
#include "support.hpp"

using namespace cmclass;
using namespace cmclass::oracle;

namespace {

GradedModuleExpr segre3_module(const Segre3Params& p, Label2 l) {
  return segre(segre(poly(p.m), shift(poly(p.n), l.i)), shift(poly(p.p), l.j));
}

}  // namespace

TEST_CASE("hilbert_coeff_brute examples") {
  CHECK(hilbert_coeff_brute(Segre3Params{2, 2, 2}, {1, 2}, 3) == 24);
  CHECK(hilbert_coeff_brute(Veronese2Params{2, 2, 2, 1}, 0, 1) == 6);
  for (std::int64_t k = -3; k < 2; ++k) CHECK(hilbert_coeff_brute(Segre3Params{2, 3, 2}, {1, 2}, k) == 0);
}

TEST_CASE("hilbert_coeff_brute is the product of block counts") {
  using testsupport::count_monomials;
  for (int m = 2; m <= 3; ++m)
    for (std::int64_t i = -2; i <= 2; ++i)
      for (std::int64_t k = 0; k <= 6; ++k)
        CHECK(hilbert_coeff_brute(Segre3Params{m, 2, 3}, {i, -i}, k) ==
              count_monomials(k, m) * count_monomials(k - i, 2) * count_monomials(k + i, 3));
}

TEST_CASE("brute counts equal the series coefficients (segre3)") {
  const Segre3Params p{2, 3, 2};
  for (std::int64_t i = -3; i <= 3; ++i)
    for (std::int64_t j = -3; j <= 3; ++j) {
      const auto s = series_of(segre3_module(p, {i, j}));
      for (std::int64_t k = -2; k <= 8; ++k) CHECK(coefficient(s, k) == hilbert_coeff_brute(p, {i, j}, k));
    }
}

TEST_CASE("brute counts equal the series coefficients (veronese2)") {
  for (const Veronese2Params p : {Veronese2Params{2, 2, 2, 1}, Veronese2Params{2, 3, 3, 2}, Veronese2Params{1, 2, 1, 3}}) {
    const auto uv = bezout_pair(p.c, p.d);
    for (std::int64_t i = -4; i <= 4; ++i) {
      const auto e = segre(veronese(shift(poly(p.m), uv.v * i), p.c), veronese(shift(poly(p.n), uv.u * i), p.d));
      const auto s = series_of(e);
      for (std::int64_t k = -3; k <= 8; ++k) CHECK(coefficient(s, k) == hilbert_coeff_brute(p, i, k));
    }
  }
}

TEST_CASE("monomial sets") {
  const Segre3Params p{2, 2, 2};
  const auto ring1 = monomial_set(p, {0, 0}, 1);
  CHECK(ring1.degree == 1);
  CHECK(ring1.exponents.size() == 8);
  CHECK(monomial_set(p, {2, 3}, 3).exponents.size() == 8);
  CHECK(monomial_set(p, {2, 3}, 2).exponents.empty());
  for (const auto& v : monomial_set(p, {1, -1}, 3).exponents) {
    REQUIRE(v.size() == 6);
    CHECK(v[0] + v[1] == 3);
    CHECK(v[2] + v[3] == 2);
    CHECK(v[4] + v[5] == 4);
    for (auto x : v) CHECK(x >= 0);
  }
  const auto set = monomial_set(p, {1, -1}, 3).exponents;
  CHECK(std::is_sorted(set.begin(), set.end()));
  CHECK(std::adjacent_find(set.begin(), set.end()) == set.end());
  CHECK(set.size() == hilbert_coeff_brute(p, {1, -1}, 3));
  CHECK(monomial_set(Veronese2Params{2, 2, 2, 1}, 0, 1).exponents.size() == 6);
}

TEST_CASE("initial degrees") {
  CHECK(initial_degree_brute(Segre3Params{2, 2, 2}, {0, 0}) == 0);
  CHECK(initial_degree_brute(Segre3Params{2, 2, 2}, {2, 3}) == 3);
  CHECK(initial_degree_brute(Segre3Params{2, 2, 2}, {-2, 1}) == 1);
  for (std::int64_t i = -3; i <= 3; ++i)
    CHECK(initial_degree_brute(Segre3Params{2, 3, 2}, {i, -i}) == initial_degree(series_of(segre3_module({2, 3, 2}, {i, -i}))));
}

TEST_CASE("mu lower bounds") {
  const Segre3Params p{2, 2, 2};
  for (std::int64_t d = 0; d <= 5; ++d) CHECK(mu_lower_bound(p, {0, 0}, d) == 1);
  CHECK(mu_lower_bound(p, {2, 3}, 3) == 8);
  CHECK(mu_lower_bound(p, {1, 1}, 1) == 2);
  CHECK(mu_lower_bound(p, {2, 3}, 2) == 0);
  for (Label2 l : {Label2{1, 2}, Label2{-1, 1}, Label2{3, 0}}) {
    std::uint64_t previous = 0;
    for (std::int64_t d = 0; d <= 6; ++d) {
      const auto mu = mu_lower_bound(p, l, d);
      CHECK(mu >= previous);
      previous = mu;
    }
  }
}

TEST_CASE("serre certificates") {
  const Segre3Params p{2, 2, 2};
  const auto cert = serre_noncm_certificate(p, {2, 3});
  REQUIRE(cert.has_value());
  CHECK(cert->muLowerBound >= 8);
  CHECK(cert->ringMultiplicity == 6);
  CHECK(cert->firstDegree == 3);
  CHECK(cert->lastDegree == 8);
  CHECK_FALSE(serre_noncm_certificate(p, {0, 0}).has_value());
  CHECK_FALSE(serre_noncm_certificate(Segre3Params{2, 3, 4}, {0, 0}).has_value());
  for (const auto& l : cm_region_segre3(p)) CHECK_FALSE(serre_noncm_certificate(p, l).has_value());
  for (const auto i : cm_set_veronese2({2, 2, 2, 1})) CHECK_FALSE(serre_noncm_certificate(Veronese2Params{2, 2, 2, 1}, i).has_value());
}

TEST_CASE("budgets are hard errors") {
  CHECK_THROWS_AS(hilbert_coeff_brute(Segre3Params{5, 5, 5}, {0, 0}, 12, Budget{1000}), BudgetExceeded);
  CHECK_THROWS_AS(monomial_set(Segre3Params{3, 3, 3}, {0, 0}, 6, Budget{50}), BudgetExceeded);
  CHECK_NOTHROW(hilbert_coeff_brute(Segre3Params{2, 2, 2}, {0, 0}, 2, Budget{1000}));
  const auto pres = presentation(Segre3Params{2, 2, 2});
  CHECK_THROWS_AS(conic_grid_probe(pres, class_group(pres), 8, Budget{100}), BudgetExceeded);
}
