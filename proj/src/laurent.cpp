#include "cmclass/laurent.hpp"

#include <algorithm>
#include <stdexcept>

namespace cmclass {

LaurentPolynomial::LaurentPolynomial(std::int64_t lowestExponent, std::vector<mpz_class> coefficients)
    : low_(lowestExponent), coeffs_(std::move(coefficients)) {
  normalize();
}

LaurentPolynomial LaurentPolynomial::monomial(const mpz_class& coefficient, std::int64_t exponent) {
  return LaurentPolynomial(exponent, {coefficient});
}

void LaurentPolynomial::normalize() {
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const mpz_class& c) { return c != 0; });
  if (first == coeffs_.end()) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  low_ += first - coeffs_.begin();
  coeffs_.erase(coeffs_.begin(), first);
  while (coeffs_.back() == 0) coeffs_.pop_back();
}

std::int64_t LaurentPolynomial::highest_exponent() const {
  if (is_zero()) throw std::domain_error("highest exponent of the zero polynomial");
  return low_ + static_cast<std::int64_t>(coeffs_.size()) - 1;
}

std::size_t LaurentPolynomial::term_count() const {
  return static_cast<std::size_t>(
      std::count_if(coeffs_.begin(), coeffs_.end(), [](const mpz_class& c) { return c != 0; }));
}

mpz_class LaurentPolynomial::coefficient(std::int64_t exponent) const {
  if (is_zero() || exponent < low_ || exponent > highest_exponent()) return 0;
  return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

mpz_class LaurentPolynomial::value_at_one() const {
  mpz_class sum = 0;
  for (const auto& c : coeffs_) sum += c;
  return sum;
}

LaurentPolynomial LaurentPolynomial::shifted(std::int64_t s) const {
  if (is_zero()) return {};
  LaurentPolynomial out = *this;
  out.low_ += s;
  return out;
}

LaurentPolynomial LaurentPolynomial::times_one_minus_t(unsigned power) const {
  LaurentPolynomial out = *this;
  for (unsigned r = 0; r < power && !out.is_zero(); ++r) {
    std::vector<mpz_class> next(out.coeffs_.size() + 1);
    for (std::size_t k = 0; k < out.coeffs_.size(); ++k) {
      next[k] += out.coeffs_[k];
      next[k + 1] -= out.coeffs_[k];
    }
    out = LaurentPolynomial(out.low_, std::move(next));
  }
  return out;
}

LaurentPolynomial LaurentPolynomial::divided_by_one_minus_t() const {
  if (is_zero()) return {};
  if (value_at_one() != 0) throw std::domain_error("polynomial is not divisible by (1-t)");
  // n_k = q_k - q_{k-1}  =>  q_k is the running prefix sum; the last one vanishes.
  std::vector<mpz_class> quotient(coeffs_.size() - 1);
  mpz_class running = 0;
  for (std::size_t k = 0; k + 1 < coeffs_.size(); ++k) {
    running += coeffs_[k];
    quotient[k] = running;
  }
  return LaurentPolynomial(low_, std::move(quotient));
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return LaurentPolynomial(a.low_ + b.low_, std::move(out));
}

LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const std::int64_t low = std::min(a.low_, b.low_);
  const std::int64_t high = std::max(a.highest_exponent(), b.highest_exponent());
  std::vector<mpz_class> out(static_cast<std::size_t>(high - low + 1));
  for (std::int64_t e = low; e <= high; ++e) out[static_cast<std::size_t>(e - low)] = a.coefficient(e) + b.coefficient(e);
  return LaurentPolynomial(low, std::move(out));
}

bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
}

std::string LaurentPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const mpz_class& c = coeffs_[k];
    if (c == 0) continue;
    const std::int64_t e = low_ + static_cast<std::int64_t>(k);
    if (c < 0)
      out += '-';
    else if (!out.empty())
      out += '+';
    const mpz_class mag = abs(c);
    if (e == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str();
    out += 't';
    if (e != 1) out += '^' + std::to_string(e);
  }
  return out;
}

}  // namespace cmclass
