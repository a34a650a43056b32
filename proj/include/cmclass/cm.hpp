#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "cmclass/expr.hpp"
#include "cmclass/params.hpp"

namespace cmclass {

/// R1 # R2(-i) is CM iff -(m-1) <= i <= n-1 (m, n >= 2).
bool bruns_guerrieri(int m, int n, std::int64_t i);

/// Decides Cohen-Macaulayness for the grammar the built-in criteria cover:
/// poly, shift(decidable), veronese(shifted poly) and segre(shifted poly,
/// shifted poly). Throws UndecidableError for anything else.
bool is_cm_expr(const GradedModuleExpr& expr);

struct BezoutPair {
  std::int64_t u = 0;
  std::int64_t v = 0;
  friend bool operator==(const BezoutPair&, const BezoutPair&) = default;
};

/// u, v >= 1 with c*u - d*v = 1 and v minimal. Throws std::invalid_argument if gcd(c, d) != 1.
BezoutPair bezout_pair(std::int64_t c, std::int64_t d);

enum class SVVerdict { CM, NotCM, Inapplicable };
std::string to_string(SVVerdict verdict);

/// One evaluation of the Stueckrad-Vogel criterion for M1 # M2.
struct SVEvaluation {
  std::int64_t a1 = 0, r1 = 0, a2 = 0, r2 = 0;
  int dim1 = 0, dim2 = 0;
  bool factor1CM = false, factor2CM = false;
  bool applicable = false;
  bool ineq1 = false;  // a(M1) + 1 <= r(M2)
  bool ineq2 = false;  // a(M2) + 1 <= r(M1)
  SVVerdict verdict = SVVerdict::Inapplicable;
};

SVEvaluation sv_test(const GradedModuleExpr& m1, const GradedModuleExpr& m2);

struct Certificate {
  std::string pairing;
  SVEvaluation evaluation;
};

struct CMDecision {
  bool isCM = false;
  std::vector<Certificate> certificates;
  bool consistent = true;
  /// Set when no criterion applies and the verdict rests on closed-form inequalities only.
  bool formulaLevel = false;

  /// First applicable certificate agreeing with the verdict, or nullptr.
  const Certificate* deciding_certificate() const;
};

/// Pairings for M_(i,j):
///   A: (R1 # R2(-i)) # R3(-j)
///   B: (R1 # R3(-j)) # R2(-i)
///   C: R1 # (R2 # R3(-(j-i)))(-i)
/// CM iff some applicable pairing certifies CM. Throws InconsistencyError if
/// two applicable pairings disagree.
CMDecision classify_segre3(const Segre3Params& params, std::int64_t i, std::int64_t j);

/// Values of the two ceiling inequalities
///   lhs1 = -ceil((m - v i)/c) + 1 <= rhs1 = ceil(u i / d)
///   lhs2 = -ceil((n - u i)/d) + 1 <= rhs2 = ceil(v i / c)
struct CeilingInequalities {
  std::int64_t lhs1 = 0, rhs1 = 0, lhs2 = 0, rhs2 = 0;
  bool holds1() const { return lhs1 <= rhs1; }
  bool holds2() const { return lhs2 <= rhs2; }
  bool holds() const { return holds1() && holds2(); }
};

CeilingInequalities veronese2_inequalities(const Veronese2Params& params, const BezoutPair& uv, std::int64_t i);

struct Veronese2Classification {
  CMDecision decision;
  CeilingInequalities inequalities;
  BezoutPair bezout;
};

/// Evaluates the ceiling inequalities and, when m, n >= 2, cross-checks them
/// with sv_test on R1(-v i)^(c) # R2(-u i)^(d). Throws InconsistencyError on
/// disagreement.
Veronese2Classification classify_veronese2(const Veronese2Params& params, std::int64_t i);

/// Sufficient sweep windows.
std::int64_t segre3_window(const Segre3Params& params);
std::pair<std::int64_t, std::int64_t> veronese2_window(const Veronese2Params& params);

/// Every class M_(i,j) decided over the window, ordered lexicographically.
struct Segre3Sweep {
  Segre3Params params;
  std::int64_t window = 0;
  std::vector<Label2> labels;
  std::vector<CMDecision> decisions;
};
Segre3Sweep sweep_segre3(const Segre3Params& params, unsigned threads = 0);

/// CM labels in the window [-(m+n+p), m+n+p]^2. Throws InconsistencyError if
/// a CM class sits on the window boundary.
std::vector<Label2> cm_region_segre3(const Segre3Params& params, unsigned threads = 0);
std::vector<Label2> cm_region_from_sweep(const Segre3Sweep& sweep);

/// CM labels in [-dm-cd, cn+cd].
std::vector<std::int64_t> cm_set_veronese2(const Veronese2Params& params);

struct Segre3Formulas {
  std::int64_t cm = 0;
  std::int64_t conic = 0;
  /// Per-case CM count formulas for cases 1..6 of the region split.
  std::array<std::int64_t, 6> regionCounts{};
};
Segre3Formulas count_formulas(const Segre3Params& params);

struct Veronese2Formulas {
  std::int64_t conic = 0;
  std::int64_t cmLowerBound = 0;
};
Veronese2Formulas count_formulas(const Veronese2Params& params);

/// Case index 1..6 partitioning Z^2:
///   1: i>=0, j>=i   2: i>=0, 0<=j<i   3: i>=0, j<0
///   4: i<0, j<=i    5: i<0, i<j<=0    6: i<0, j>0
int segre3_case(std::int64_t i, std::int64_t j);
std::array<std::int64_t, 6> case_tallies(const std::vector<Label2>& labels);

}  // namespace cmclass
