#include "doctest.h"

#include <algorithm>
#include <numeric>

#include "cmclass/cm.hpp"
#include "cmclass/errors.hpp"
#include "cmclass/expr.hpp"
#include "cmclass/series.hpp"
#include "support.hpp"

using namespace cmclass;
using testsupport::count_monomials;

namespace {

// (k+1)...(k+vars-1)/(vars-1)!, the polynomial agreeing with count_monomials for k >= 0.
mpq_class monomial_polynomial(std::int64_t k, int vars) {
  mpq_class v = 1;
  for (int t = 1; t < vars; ++t) {
    mpq_class f(k + t, t);
    f.canonicalize();
    v *= f;
  }
  return v;
}

// Largest k where the Hilbert function of K[X_1..X_m] # K[Y_1..Y_n](-i) differs from its polynomial.
std::int64_t a_invariant_by_difference(int m, int n, std::int64_t i) {
  for (std::int64_t k = std::max<std::int64_t>(0, i) + 20; k > -100; --k) {
    const mpz_class hf = mpz_class(static_cast<unsigned long>(count_monomials(k, m))) *
                         mpz_class(static_cast<unsigned long>(count_monomials(k - i, n)));
    if (mpq_class(hf) != monomial_polynomial(k, m) * monomial_polynomial(k - i, n)) return k;
  }
  FAIL("no difference found");
  return 0;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
  return q;
}

}  // namespace

TEST_CASE("bezout pairs") {
  CHECK(bezout_pair(2, 1) == BezoutPair{1, 1});
  CHECK(bezout_pair(1, 1) == BezoutPair{2, 1});
  CHECK(bezout_pair(2, 3) == BezoutPair{2, 1});
  for (std::int64_t c = 1; c <= 9; ++c)
    for (std::int64_t d = 1; d <= 9; ++d) {
      if (std::gcd(c, d) != 1) {
        CHECK_THROWS_AS(bezout_pair(c, d), std::invalid_argument);
        continue;
      }
      const auto uv = bezout_pair(c, d);
      CHECK(c * uv.u - d * uv.v == 1);
      CHECK(uv.u >= 1);
      for (std::int64_t v = 1; v < uv.v; ++v) CHECK((1 + d * v) % c != 0);
    }
}

TEST_CASE("stueckrad-vogel on two polynomial rings matches the interval, with the a-invariant") {
  for (int m = 2; m <= 6; ++m)
    for (int n = 2; n <= 6; ++n)
      for (std::int64_t i = -10; i <= 10; ++i) {
        const auto ev = sv_test(poly(m), shift(poly(n), i));
        const bool inside = -(m - 1) <= i && i <= n - 1;
        REQUIRE(ev.applicable);
        CHECK((ev.verdict == SVVerdict::CM) == inside);
        CHECK(bruns_guerrieri(m, n, i) == inside);
        const auto a = a_invariant(series_of(segre(poly(m), shift(poly(n), i))));
        CHECK(a == a_invariant_by_difference(m, n, i));
        if (inside) CHECK(a == -std::max<std::int64_t>(m, n - i));
      }
}

TEST_CASE("sv_test is inapplicable when a factor has dimension one") {
  const auto ev = sv_test(poly(1), shift(poly(3), 2));
  CHECK_FALSE(ev.applicable);
  CHECK(ev.verdict == SVVerdict::Inapplicable);
  CHECK(to_string(SVVerdict::Inapplicable) == "Inapplicable");
}

TEST_CASE("is_cm_expr on the decidable grammar") {
  CHECK(is_cm_expr(poly(3)));
  CHECK(is_cm_expr(shift(poly(3), -4)));
  CHECK(is_cm_expr(veronese(shift(poly(2), 1), 3)));
  CHECK(is_cm_expr(segre(poly(2), shift(poly(2), 1))));
  CHECK_FALSE(is_cm_expr(segre(poly(2), shift(poly(2), 2))));
  CHECK(is_cm_expr(segre(poly(1), poly(1))));
  CHECK_THROWS_AS(is_cm_expr(segre(segre(poly(2), poly(2)), poly(2))), UndecidableError);
  CHECK_THROWS_AS(is_cm_expr(veronese(segre(poly(2), poly(2)), 2)), UndecidableError);
}

TEST_CASE("segre3 counts follow the closed forms") {
  for (int m = 2; m <= 3; ++m)
    for (int n = 2; n <= 3; ++n)
      for (int p = 2; p <= 4; ++p) {
        const Segre3Params params{m, n, p};
        const auto cm = cm_region_segre3(params, 2);
        const std::int64_t expected = (m * m + n * n + p * p) + (m * n + m * p + n * p) - 2 * (m + n + p) + 1;
        CHECK(static_cast<std::int64_t>(cm.size()) == expected);
        CHECK(count_formulas(params).cm == expected);
        CHECK(count_formulas(params).conic == (m * n + m * p + n * p) - (m + n + p) + 1);
        const auto w = segre3_window(params);
        for (const auto& l : cm) {
          CHECK(std::abs(l.i) < w);
          CHECK(std::abs(l.j) < w);
        }
      }
  CHECK(cm_region_segre3({2, 2, 2}).size() == 13);
  CHECK(cm_region_segre3({2, 3, 4}).size() == 38);
}

TEST_CASE("segre3 region: swapping the last two factors transposes labels") {
  const auto a = cm_region_segre3({2, 3, 4}, 2);
  auto b = cm_region_segre3({2, 4, 3}, 2);
  for (auto& l : b) std::swap(l.i, l.j);
  std::sort(b.begin(), b.end());
  CHECK(a == b);
}

TEST_CASE("segre3 classification is consistent and certified") {
  const Segre3Params params{2, 3, 3};
  const auto sweep = sweep_segre3(params, 2);
  REQUIRE(sweep.labels.size() == sweep.decisions.size());
  for (std::size_t k = 0; k < sweep.labels.size(); ++k) {
    const auto& d = sweep.decisions[k];
    CHECK(d.consistent);
    CHECK(d.certificates.size() == 3);
    if (d.isCM) {
      REQUIRE(d.deciding_certificate() != nullptr);
      CHECK(d.deciding_certificate()->evaluation.verdict == SVVerdict::CM);
    }
  }
  CHECK(classify_segre3(params, 0, 0).isCM);
  CHECK_FALSE(classify_segre3({2, 2, 2}, 2, 3).isCM);
}

TEST_CASE("segre3 case partition covers every label exactly once") {
  for (std::int64_t i = -6; i <= 6; ++i)
    for (std::int64_t j = -6; j <= 6; ++j) {
      const int c = segre3_case(i, j);
      CHECK(c >= 1);
      CHECK(c <= 6);
      const bool expected[6] = {i >= 0 && j >= i, i >= 0 && 0 <= j && j < i, i >= 0 && j < 0,
                                i < 0 && j <= i, i < 0 && i < j && j <= 0, i < 0 && j > 0};
      CHECK(std::count(std::begin(expected), std::end(expected), true) == 1);
      CHECK(expected[c - 1]);
    }
}

TEST_CASE("veronese2 ceiling inequalities") {
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n)
      for (int c = 1; c <= 3; ++c)
        for (int d = 1; d <= 3; ++d) {
          if (std::gcd(c, d) != 1) continue;
          const Veronese2Params params{m, n, c, d};
          const auto uv = bezout_pair(c, d);
          const auto set = cm_set_veronese2(params);
          const auto [lo, hi] = veronese2_window(params);
          std::vector<std::int64_t> expected;
          for (std::int64_t i = lo; i <= hi; ++i) {
            const bool h1 = -ceil_div(m - uv.v * i, c) + 1 <= ceil_div(uv.u * i, d);
            const bool h2 = -ceil_div(n - uv.u * i, d) + 1 <= ceil_div(uv.v * i, c);
            if (h1 && h2) expected.push_back(i);
          }
          CHECK(set == expected);
          CHECK(set.front() > lo);
          CHECK(set.back() < hi);
          for (std::int64_t i = -d * m + 1; i <= c * n - 1; ++i) CHECK(std::binary_search(set.begin(), set.end(), i));
          if (c == 1) CHECK(set.size() == static_cast<std::size_t>(d * m + n - 1));
          if (d == 1) CHECK(set.size() == static_cast<std::size_t>(m + c * n - 1));
        }
}

TEST_CASE("veronese2 with c = d = 1 is the two-factor segre interval") {
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; n <= 4; ++n) {
      const auto set = cm_set_veronese2({m, n, 1, 1});
      std::vector<std::int64_t> expected(static_cast<std::size_t>(m + n - 1));
      std::iota(expected.begin(), expected.end(), -(m - 1));
      CHECK(set == expected);
    }
  CHECK(cm_set_veronese2({2, 2, 1, 1}) == std::vector<std::int64_t>{-1, 0, 1});
}

TEST_CASE("veronese2 (3,2,2,3) has CM classes outside the guaranteed range") {
  const auto set = cm_set_veronese2({3, 2, 2, 3});
  CHECK(std::binary_search(set.begin(), set.end(), 5));
  CHECK_FALSE(std::binary_search(set.begin(), set.end(), 4));
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(Segre3Params({1, 2, 2}).validate(), std::invalid_argument);
  CHECK_THROWS_AS(Veronese2Params({2, 2, 2, 2}).validate(), std::invalid_argument);
  CHECK_THROWS_AS(Veronese2Params({0, 2, 1, 1}).validate(), std::invalid_argument);
  CHECK_NOTHROW(Veronese2Params({1, 1, 3, 2}).validate());
}
