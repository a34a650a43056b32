#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "cmclass/laurent.hpp"

namespace testsupport {

// Exponent vectors in Z_+^vars with the given total, counted by recursion.
inline std::uint64_t count_monomials(std::int64_t total, int vars) {
  if (total < 0) return 0;
  if (vars == 1) return 1;
  static thread_local std::map<std::pair<std::int64_t, int>, std::uint64_t> memo;
  auto it = memo.find({total, vars});
  if (it != memo.end()) return it->second;
  std::uint64_t n = 0;
  for (std::int64_t first = 0; first <= total; ++first) n += count_monomials(total - first, vars - 1);
  memo[{total, vars}] = n;
  return n;
}

// Taylor coefficients of num / (1-t)^d on [from, to], by d rounds of prefix sums.
inline std::vector<mpz_class> expand(const cmclass::LaurentPolynomial& num, unsigned d, std::int64_t from,
                                     std::int64_t to) {
  const std::int64_t start = std::min(from, num.is_zero() ? from : num.lowest_exponent());
  std::vector<mpz_class> a(static_cast<std::size_t>(to - start + 1));
  for (std::int64_t k = start; k <= to; ++k) a[static_cast<std::size_t>(k - start)] = num.coefficient(k);
  for (unsigned r = 0; r < d; ++r)
    for (std::size_t k = 1; k < a.size(); ++k) a[k] += a[k - 1];
  return {a.begin() + (from - start), a.end()};
}

}  // namespace testsupport
