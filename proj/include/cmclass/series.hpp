#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "cmclass/laurent.hpp"

namespace cmclass {

/// Rational generating function numerator / (1-t)^poleOrder.
///
/// The constructor cancels common factors of (1-t), so two series with the
/// same Taylor coefficients always have identical representations.
class HilbertSeries {
 public:
  HilbertSeries() = default;
  HilbertSeries(LaurentPolynomial numerator, unsigned poleOrder);

  const LaurentPolynomial& numerator() const { return numerator_; }
  unsigned pole_order() const { return poleOrder_; }
  bool is_zero() const { return numerator_.is_zero(); }

  /// "(1+t)/(1-t)^3", "t^-2/(1-t)^3", "1+t" when the pole order is 0.
  std::string to_string() const;

  friend bool operator==(const HilbertSeries&, const HilbertSeries&) = default;

 private:
  LaurentPolynomial numerator_;
  unsigned poleOrder_ = 0;
};

/// Exact Taylor coefficient of t^k.
mpz_class coefficient(const HilbertSeries& series, std::int64_t k);

/// Coefficients of t^from .. t^to inclusive.
std::vector<mpz_class> coefficients(const HilbertSeries& series, std::int64_t from, std::int64_t to);

/// Rebuilds a series from its coefficients on [low, low + size), assuming
/// they vanish below `low`, the denominator is (1-t)^denominatorExponent and
/// the numerator has degree at most `numeratorDegreeBound`. Every coefficient
/// past that bound must cancel; throws InconsistencyError otherwise.
HilbertSeries reconstruct_series(std::int64_t low, const std::vector<mpz_class>& coeffs,
                                 unsigned denominatorExponent, std::int64_t numeratorDegreeBound);

/// Coefficientwise product (series of a Segre product).
HilbertSeries hadamard_product(const HilbertSeries& a, const HilbertSeries& b);

/// Keeps every c-th coefficient: result_k = a_{ck}. Throws std::invalid_argument for c < 1.
HilbertSeries veronese_section(const HilbertSeries& a, std::int64_t c);

/// Multiplication by t^s, i.e. the grading shift M(-s).
HilbertSeries shift_series(const HilbertSeries& a, std::int64_t s);

/// Degree of the rational function. Throws ZeroSeriesError.
std::int64_t a_invariant(const HilbertSeries& series);

/// Least degree with a nonzero coefficient. Throws ZeroSeriesError, or
/// NegativeCoefficientError when the series is visibly not a module series.
std::int64_t initial_degree(const HilbertSeries& series);

/// Polynomial in one variable with exact rational coefficients (ascending powers).
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<mpq_class> coefficients);

  const std::vector<mpq_class>& coefficients() const { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  mpq_class operator()(const mpq_class& x) const;
  const mpq_class& leading_coefficient() const { return coeffs_.back(); }

  friend RationalPolynomial operator*(const RationalPolynomial&, const RationalPolynomial&);
  friend RationalPolynomial operator+(const RationalPolynomial&, const RationalPolynomial&);
  friend bool operator==(const RationalPolynomial&, const RationalPolynomial&) = default;

  /// "1/2k^3+3/2k^2+k", variable named k.
  std::string to_string() const;

 private:
  void trim();
  std::vector<mpq_class> coeffs_;
};

struct HilbertPolynomial {
  RationalPolynomial polynomial;
  /// coefficient(series, k) == polynomial(k) for every k >= validFrom.
  std::int64_t validFrom = 0;
};

/// Throws std::domain_error for pole order 0.
HilbertPolynomial hilbert_polynomial(const HilbertSeries& series);

/// Numerator at t = 1. Throws std::domain_error for pole order 0.
mpz_class multiplicity(const HilbertSeries& series);

/// Series of the polynomial ring in `vars` variables, 1/(1-t)^vars.
HilbertSeries polynomial_ring_series(int vars);

}  // namespace cmclass
