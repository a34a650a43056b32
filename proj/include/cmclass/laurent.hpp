#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace cmclass {

/// Finite Laurent polynomial over the integers, always in canonical form:
/// the first and last stored coefficients are nonzero, and the zero
/// polynomial is the empty sequence with lowest exponent 0.
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;
  LaurentPolynomial(std::int64_t lowestExponent, std::vector<mpz_class> coefficients);

  static LaurentPolynomial monomial(const mpz_class& coefficient, std::int64_t exponent);
  static LaurentPolynomial one() { return monomial(1, 0); }

  bool is_zero() const { return coeffs_.empty(); }
  std::int64_t lowest_exponent() const { return low_; }
  /// Requires a nonzero polynomial.
  std::int64_t highest_exponent() const;
  const std::vector<mpz_class>& coefficients() const { return coeffs_; }
  std::size_t term_count() const;

  mpz_class coefficient(std::int64_t exponent) const;
  mpz_class value_at_one() const;

  LaurentPolynomial shifted(std::int64_t s) const;
  /// Multiplies by (1-t)^power.
  LaurentPolynomial times_one_minus_t(unsigned power) const;
  /// Exact division by (1-t); throws std::domain_error unless value_at_one() == 0.
  LaurentPolynomial divided_by_one_minus_t() const;

  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b);

  /// Ascending exponents, no spaces: "1+t", "3t", "t^-2", "1-2t+t^2".
  std::string to_string() const;

 private:
  void normalize();

  std::int64_t low_ = 0;
  std::vector<mpz_class> coeffs_;
};

}  // namespace cmclass
