#pragma once

#include <gmpxx.h>

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cmclass {

/// coeffs . x <= bound, or < bound when strict.
struct LinearConstraint {
  std::vector<mpq_class> coeffs;
  mpq_class bound;
  bool strict = false;

  static LinearConstraint at_most(std::vector<mpq_class> coeffs, mpq_class bound) {
    return {std::move(coeffs), std::move(bound), false};
  }
  static LinearConstraint less_than(std::vector<mpq_class> coeffs, mpq_class bound) {
    return {std::move(coeffs), std::move(bound), true};
  }
  bool satisfied_by(const std::vector<mpq_class>& x) const;
};

/// Exact rational feasibility of a system of weak and strict inequalities in
/// `vars` unknowns, by Fourier-Motzkin elimination with strictness tracking.
bool fourier_motzkin_feasible(std::span<const LinearConstraint> constraints, std::size_t vars);

/// Same decision computed with rational rows throughout (slower reference path).
bool fourier_motzkin_feasible_rational(std::span<const LinearConstraint> constraints, std::size_t vars);

/// As above, and produces a rational point satisfying every constraint by
/// back-substitution through the elimination stages.
std::optional<std::vector<mpq_class>> fourier_motzkin_solve(std::span<const LinearConstraint> constraints,
                                                            std::size_t vars);

/// "p/q" or "p".
std::string rational_string(const mpq_class& q);

}  // namespace cmclass
