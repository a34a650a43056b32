#include "cmclass/series.hpp"

#include <algorithm>
#include <stdexcept>

#include "cmclass/errors.hpp"
#include "cmclass/intmath.hpp"

namespace cmclass {
namespace {

// Extra coefficients past the numerator degree bound that must cancel.
constexpr std::int64_t kGuardCoefficients = 3;

mpz_class binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < k) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

}  // namespace

HilbertSeries::HilbertSeries(LaurentPolynomial numerator, unsigned poleOrder)
    : numerator_(std::move(numerator)), poleOrder_(poleOrder) {
  if (numerator_.is_zero()) {
    poleOrder_ = 0;
    return;
  }
  while (poleOrder_ > 0 && numerator_.value_at_one() == 0) {
    numerator_ = numerator_.divided_by_one_minus_t();
    --poleOrder_;
  }
}

std::string HilbertSeries::to_string() const {
  std::string num = numerator_.to_string();
  if (poleOrder_ == 0) return num;
  if (numerator_.term_count() > 1) num = "(" + num + ")";
  return num + "/(1-t)^" + std::to_string(poleOrder_);
}

mpz_class coefficient(const HilbertSeries& series, std::int64_t k) {
  const LaurentPolynomial& num = series.numerator();
  if (num.is_zero()) return 0;
  const std::int64_t d = series.pole_order();
  if (d == 0) return num.coefficient(k);
  mpz_class sum = 0;
  const std::int64_t top = std::min(num.highest_exponent(), k);
  for (std::int64_t j = num.lowest_exponent(); j <= top; ++j) {
    const mpz_class c = num.coefficient(j);
    if (c != 0) sum += c * binomial(k - j + d - 1, d - 1);
  }
  return sum;
}

std::vector<mpz_class> coefficients(const HilbertSeries& series, std::int64_t from, std::int64_t to) {
  std::vector<mpz_class> out;
  for (std::int64_t k = from; k <= to; ++k) out.push_back(coefficient(series, k));
  return out;
}

HilbertSeries reconstruct_series(std::int64_t low, const std::vector<mpz_class>& coeffs,
                                 unsigned denominatorExponent, std::int64_t numeratorDegreeBound) {
  const std::int64_t high = low + static_cast<std::int64_t>(coeffs.size()) - 1;
  // Multiplying the truncation by (1-t)^D is exact up to degree `high`.
  LaurentPolynomial product = LaurentPolynomial(low, coeffs).times_one_minus_t(denominatorExponent);
  std::vector<mpz_class> kept;
  for (std::int64_t e = low; e <= high; ++e) {
    mpz_class c = product.coefficient(e);
    if (e > numeratorDegreeBound) {
      if (c != 0)
        throw InconsistencyError("series reconstruction: coefficient of t^" + std::to_string(e) +
                                 " past the numerator bound does not cancel");
      continue;
    }
    kept.push_back(std::move(c));
  }
  return HilbertSeries(LaurentPolynomial(low, std::move(kept)), denominatorExponent);
}

HilbertSeries hadamard_product(const HilbertSeries& a, const HilbertSeries& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const LaurentPolynomial& na = a.numerator();
  const LaurentPolynomial& nb = b.numerator();
  const std::int64_t low = std::max(na.lowest_exponent(), nb.lowest_exponent());

  if (a.pole_order() == 0 || b.pole_order() == 0) {
    // At least one factor is a polynomial: the product has finite support.
    std::int64_t high = std::max(na.highest_exponent(), nb.highest_exponent());
    if (a.pole_order() == 0) high = std::min(high, na.highest_exponent());
    if (b.pole_order() == 0) high = std::min(high, nb.highest_exponent());
    if (high < low) return {};
    std::vector<mpz_class> out;
    for (std::int64_t k = low; k <= high; ++k) out.push_back(coefficient(a, k) * coefficient(b, k));
    return HilbertSeries(LaurentPolynomial(low, std::move(out)), 0);
  }

  const std::int64_t da = a.pole_order();
  const std::int64_t db = b.pole_order();
  const auto denominator = static_cast<unsigned>(da + db - 1);
  // Both factors agree with their Hilbert polynomials from k0 on, so the
  // product does too, with degree <= da + db - 2.
  const std::int64_t k0 = std::max(na.highest_exponent() - da, nb.highest_exponent() - db) + 1;
  const std::int64_t bound = k0 + denominator - 1;
  const std::int64_t last = bound + kGuardCoefficients;
  std::vector<mpz_class> truncation;
  for (std::int64_t k = low; k <= last; ++k) truncation.push_back(coefficient(a, k) * coefficient(b, k));
  return reconstruct_series(low, truncation, denominator, bound);
}

HilbertSeries veronese_section(const HilbertSeries& a, std::int64_t c) {
  if (c < 1) throw std::invalid_argument("Veronese degree must be >= 1");
  if (c == 1 || a.is_zero()) return a;
  const LaurentPolynomial& num = a.numerator();
  const std::int64_t low = ceil_div(num.lowest_exponent(), c);

  if (a.pole_order() == 0) {
    const std::int64_t high = floor_div(num.highest_exponent(), c);
    if (high < low) return {};
    std::vector<mpz_class> out;
    for (std::int64_t k = low; k <= high; ++k) out.push_back(num.coefficient(c * k));
    return HilbertSeries(LaurentPolynomial(low, std::move(out)), 0);
  }

  const std::int64_t d = a.pole_order();
  const std::int64_t k0 = ceil_div(num.highest_exponent() - d + 1, c);
  const std::int64_t bound = k0 + d - 1;
  const std::int64_t last = bound + kGuardCoefficients;
  std::vector<mpz_class> truncation;
  for (std::int64_t k = low; k <= last; ++k) truncation.push_back(coefficient(a, c * k));
  return reconstruct_series(low, truncation, static_cast<unsigned>(d), bound);
}

HilbertSeries shift_series(const HilbertSeries& a, std::int64_t s) {
  return HilbertSeries(a.numerator().shifted(s), a.pole_order());
}

std::int64_t a_invariant(const HilbertSeries& series) {
  if (series.is_zero()) throw ZeroSeriesError("a-invariant of the zero series");
  return series.numerator().highest_exponent() - static_cast<std::int64_t>(series.pole_order());
}

std::int64_t initial_degree(const HilbertSeries& series) {
  if (series.is_zero()) throw ZeroSeriesError("initial degree of the zero series");
  const LaurentPolynomial& num = series.numerator();
  const std::int64_t low = num.lowest_exponent();
  const std::int64_t high = num.highest_exponent() + static_cast<std::int64_t>(series.pole_order());
  for (std::int64_t k = low; k <= high; ++k) {
    if (coefficient(series, k) < 0)
      throw NegativeCoefficientError("series has a negative coefficient at t^" + std::to_string(k));
  }
  if (series.pole_order() > 0 && num.value_at_one() < 0)
    throw NegativeCoefficientError("series has eventually negative coefficients");
  return low;
}

RationalPolynomial::RationalPolynomial(std::vector<mpq_class> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

void RationalPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

mpq_class RationalPolynomial::operator()(const mpq_class& x) const {
  mpq_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
  if (a.coeffs_.empty() || b.coeffs_.empty()) return {};
  std::vector<mpq_class> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return RationalPolynomial(std::move(out));
}

RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b) {
  std::vector<mpq_class> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
  return RationalPolynomial(std::move(out));
}

std::string RationalPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (int e = degree(); e >= 0; --e) {
    const mpq_class& c = coeffs_[static_cast<std::size_t>(e)];
    if (c == 0) continue;
    if (c < 0)
      out += '-';
    else if (!out.empty())
      out += '+';
    const mpq_class mag = abs(c);
    if (e == 0 || mag != 1) out += mag.get_str();
    if (e >= 1) out += 'k';
    if (e >= 2) out += '^' + std::to_string(e);
  }
  return out;
}

HilbertPolynomial hilbert_polynomial(const HilbertSeries& series) {
  if (series.pole_order() == 0) throw std::domain_error("Hilbert polynomial needs pole order >= 1");
  const LaurentPolynomial& num = series.numerator();
  const std::int64_t d = series.pole_order();
  mpz_class factorial = 1;
  for (std::int64_t r = 2; r <= d - 1; ++r) factorial *= r;

  RationalPolynomial total;
  for (std::int64_t j = num.lowest_exponent(); j <= num.highest_exponent(); ++j) {
    const mpz_class c = num.coefficient(j);
    if (c == 0) continue;
    // C(k - j + d - 1, d - 1) = prod_{r=1}^{d-1} (k - j + r) / (d-1)!
    mpq_class scale(c, factorial);
    scale.canonicalize();
    RationalPolynomial term({scale});
    for (std::int64_t r = 1; r <= d - 1; ++r) term = term * RationalPolynomial({mpq_class(r - j), mpq_class(1)});
    total = total + term;
  }
  return {total, num.highest_exponent() - d + 1};
}

mpz_class multiplicity(const HilbertSeries& series) {
  if (series.pole_order() == 0) throw std::domain_error("multiplicity needs pole order >= 1");
  return series.numerator().value_at_one();
}

HilbertSeries polynomial_ring_series(int vars) {
  if (vars < 1) throw std::invalid_argument("polynomial ring needs at least one variable");
  return HilbertSeries(LaurentPolynomial::one(), static_cast<unsigned>(vars));
}

}  // namespace cmclass
