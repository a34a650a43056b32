#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "cmclass/fourier_motzkin.hpp"
#include "cmclass/int_matrix.hpp"

using namespace cmclass;

namespace {

IntMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int range) {
  std::uniform_int_distribution<int> entry(-range, range);
  IntMatrix a(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) a(r, c) = entry(rng);
  return a;
}

// Leibniz expansion.
mpz_class leibniz(const IntMatrix& a) {
  std::vector<std::size_t> perm(a.rows());
  std::iota(perm.begin(), perm.end(), 0);
  mpz_class total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
      for (std::size_t j = i + 1; j < perm.size(); ++j) inversions += perm[i] > perm[j];
    mpz_class term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < perm.size(); ++i) term *= a(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// Invariant factors from determinantal divisors: gcd of k x k minors.
std::vector<mpz_class> invariant_factors_by_minors(const IntMatrix& a) {
  std::vector<mpz_class> out;
  mpz_class previous = 1;
  for (std::size_t k = 1; k <= std::min(a.rows(), a.cols()); ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    subsets(a.rows(), k, 0, cur, rs);
    subsets(a.cols(), k, 0, cur, cs);
    mpz_class g = 0;
    for (const auto& r : rs)
      for (const auto& c : cs) {
        IntMatrix minor(k, k);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) minor(i, j) = a(r[i], c[j]);
        g = gcd(g, leibniz(minor));
      }
    if (g == 0) break;
    out.push_back(g / previous);
    previous = g;
  }
  return out;
}

bool is_diagonal(const IntMatrix& d) {
  for (std::size_t r = 0; r < d.rows(); ++r)
    for (std::size_t c = 0; c < d.cols(); ++c)
      if (r != c && d(r, c) != 0) return false;
  return true;
}

}  // namespace

TEST_CASE("determinant agrees with the Leibniz expansion") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 5;
    const auto a = random_matrix(rng, n, n, 4);
    CHECK(a.determinant() == leibniz(a));
  }
  CHECK(IntMatrix(0, 0).determinant() == 1);
}

TEST_CASE("smith normal form: U A V = D, unimodular transforms, divisibility chain") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t rows = 1 + trial % 5, cols = 1 + (trial / 5) % 4;
    const auto a = random_matrix(rng, rows, cols, trial % 3 == 0 ? 12 : 3);
    const SmithForm f = smith_normal_form(a);
    CHECK(f.U * a * f.V == f.D);
    CHECK(abs(f.U.determinant()) == 1);
    CHECK(abs(f.V.determinant()) == 1);
    CHECK(is_diagonal(f.D));
    const auto inv = f.invariant_factors();
    for (std::size_t k = 0; k < inv.size(); ++k) {
      CHECK(inv[k] > 0);
      if (k + 1 < inv.size()) CHECK(inv[k + 1] % inv[k] == 0);
    }
    CHECK(inv == invariant_factors_by_minors(a));
  }
}

TEST_CASE("smith normal form of known matrices") {
  IntMatrix a(2, 2);
  a(0, 0) = 2;
  a(0, 1) = 4;
  a(1, 0) = 6;
  a(1, 1) = 8;
  CHECK(smith_normal_form(a).invariant_factors() == std::vector<mpz_class>{2, 4});
  CHECK(smith_normal_form(IntMatrix(3, 2)).invariant_factors().empty());
  // (c, d) column with gcd 1: cokernel Z.
  const auto col = IntMatrix::from_columns({{3, 2}}, 2);
  CHECK(smith_normal_form(col).invariant_factors() == std::vector<mpz_class>{1});
}

TEST_CASE("column text round trip") {
  std::mt19937 rng(2);
  const auto a = random_matrix(rng, 4, 3, 50);
  CHECK(IntMatrix::from_column_text(a.to_column_text()) == a);
  CHECK(a.to_column_text().substr(0, 4) == "4 3\n");
  CHECK_THROWS_AS(IntMatrix::from_column_text("2 2\n1 2\n3"), std::invalid_argument);
  CHECK_THROWS_AS(IntMatrix::from_column_text("1 1\n1 2"), std::invalid_argument);
  CHECK_THROWS_AS(IntMatrix::from_column_text("x"), std::invalid_argument);
}

TEST_CASE("fourier-motzkin: strictness is tracked") {
  using C = LinearConstraint;
  // 0 <= x <= 0 is feasible, 0 < x <= 0 is not.
  CHECK(fourier_motzkin_feasible(std::vector<C>{C::at_most({-1}, 0), C::at_most({1}, 0)}, 1));
  CHECK_FALSE(fourier_motzkin_feasible(std::vector<C>{C::less_than({-1}, 0), C::at_most({1}, 0)}, 1));
  // x + y < 1, x > 0, y > 0 is feasible but 2x + 2y <= 1 with x, y >= 1/2 is not.
  CHECK(fourier_motzkin_feasible(std::vector<C>{C::less_than({1, 1}, 1), C::less_than({-1, 0}, 0),
                                                C::less_than({0, -1}, 0)},
                                 2));
  CHECK_FALSE(fourier_motzkin_feasible(
      std::vector<C>{C::at_most({2, 2}, 1), C::at_most({-1, 0}, mpq_class(-1, 2)), C::at_most({0, -1}, mpq_class(-1, 2))},
      2));
  CHECK(fourier_motzkin_feasible(std::vector<C>{}, 3));
  CHECK_THROWS_AS(fourier_motzkin_feasible(std::vector<C>{C::at_most({1}, 0)}, 2), std::invalid_argument);
}

TEST_CASE("fourier-motzkin: integer and rational paths agree; solutions satisfy the system") {
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> coef(-3, 3), bound(-4, 4), flip(0, 1), den(1, 3);
  int feasible = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t vars = 1 + trial % 4;
    const std::size_t rows = 2 + trial % 7;
    std::vector<LinearConstraint> sys;
    for (std::size_t r = 0; r < rows; ++r) {
      std::vector<mpq_class> c(vars);
      for (auto& x : c) x = mpq_class(coef(rng), den(rng));
      for (auto& x : c) x.canonicalize();
      mpq_class b(bound(rng), den(rng));
      b.canonicalize();
      sys.push_back({c, b, flip(rng) == 1});
    }
    const bool fast = fourier_motzkin_feasible(sys, vars);
    CHECK(fast == fourier_motzkin_feasible_rational(sys, vars));
    const auto x = fourier_motzkin_solve(sys, vars);
    CHECK(x.has_value() == fast);
    if (x)
      for (const auto& c : sys) CHECK(c.satisfied_by(*x));
    feasible += fast;
  }
  // Both outcomes are exercised.
  CHECK(feasible > 50);
  CHECK(feasible < 350);
}

TEST_CASE("fourier-motzkin: a grid point implies feasibility") {
  std::mt19937 rng(41);
  std::uniform_int_distribution<int> coef(-2, 2), bound(-3, 3), flip(0, 1);
  for (int trial = 0; trial < 150; ++trial) {
    std::vector<LinearConstraint> sys;
    // Box -2 <= x, y <= 2 keeps the grid search finite.
    sys.push_back(LinearConstraint::at_most({1, 0}, 2));
    sys.push_back(LinearConstraint::at_most({-1, 0}, 2));
    sys.push_back(LinearConstraint::at_most({0, 1}, 2));
    sys.push_back(LinearConstraint::at_most({0, -1}, 2));
    for (int r = 0; r < 3; ++r) sys.push_back({{coef(rng), coef(rng)}, bound(rng), flip(rng) == 1});
    bool gridHit = false;
    for (int xi = -48; xi <= 48 && !gridHit; ++xi)
      for (int yi = -48; yi <= 48 && !gridHit; ++yi) {
        const std::vector<mpq_class> p{mpq_class(xi, 24), mpq_class(yi, 24)};
        gridHit = std::all_of(sys.begin(), sys.end(), [&](const LinearConstraint& c) { return c.satisfied_by(p); });
      }
    // A grid point proves feasibility.
    if (gridHit) CHECK(fourier_motzkin_feasible(sys, 2));
  }
}

TEST_CASE("rational_string") {
  mpq_class half(3, 6);
  half.canonicalize();
  CHECK(rational_string(half) == "1/2");
  CHECK(rational_string(mpq_class(-4)) == "-4");
}
