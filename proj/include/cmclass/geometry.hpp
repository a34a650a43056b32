#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cmclass/fourier_motzkin.hpp"
#include "cmclass/int_matrix.hpp"
#include "cmclass/params.hpp"

namespace cmclass {

enum class Family { Segre3, Veronese2 };
std::string to_string(Family family);

using FamilyParams = std::variant<Segre3Params, Veronese2Params>;

/// The semigroup as the lattice points of gp(S) (embedded in Z^s by the
/// support forms, i.e. the exponent coordinates) that are coordinatewise >= 0.
struct SupportPresentation {
  Family family = Family::Segre3;
  FamilyParams params;
  std::size_t ambientRank = 0;
  /// s x rank, columns form a basis of gp(S).
  IntMatrix latticeBasis;
  /// Coordinate names: x1..xm, y1..yn, z1..zp.
  std::vector<std::string> coordinates;
  std::vector<std::string> warnings;

  std::size_t rank() const { return latticeBasis.cols(); }
};

SupportPresentation presentation(const Segre3Params& params);
SupportPresentation presentation(const Veronese2Params& params);

/// Element of Cl: free coordinates first, then torsion residues in [0, d).
using ClassTuple = std::vector<mpz_class>;

/// Cokernel of the lattice basis, Z^s / gp(S).
struct ClassGroup {
  std::size_t freeRank = 0;
  std::vector<mpz_class> torsionInvariants;
  /// Row transform U of the Smith form; class coordinates are read off U * x.
  IntMatrix rowTransform;
  /// Indices into U * x of the torsion coordinates (paired with torsionInvariants).
  std::vector<std::size_t> torsionRows;
  /// Indices into U * x of the free coordinates.
  std::vector<std::size_t> freeRows;

  ClassTuple project(const IntVector& x) const;
};

ClassGroup class_group(const SupportPresentation& pres);

/// Class of the module with the given label: projection(-z0) for any
/// exponent vector z0 in the label's coset.
ClassTuple class_of_label(const SupportPresentation& pres, const ClassGroup& group, Label2 label);
ClassTuple class_of_label(const SupportPresentation& pres, const ClassGroup& group, std::int64_t label);

/// Label whose module lies in the class of the conic ideal with ceiling
/// vector w, computed from the coset equations (inverse of class_of_label).
Label2 segre3_label_of_vector(const Segre3Params& params, const IntVector& w);
std::int64_t veronese2_label_of_vector(const Veronese2Params& params, const IntVector& w);

struct Bound {
  mpq_class lower;
  bool lowerStrict = true;
  mpq_class upper;
  bool upperStrict = false;
};

/// Proof that a class is conic: the half-open box {w - 1 < y <= w} meets the
/// real span of the lattice, and `point` is one such y.
struct ConicWitness {
  IntVector ceilVector;
  ClassTuple classTuple;
  std::vector<Bound> witnessBox;
  std::vector<mpq_class> point;
};

/// Constraints {w - 1 < B lambda <= w} in the lambda coordinates of the lattice basis.
std::vector<LinearConstraint> box_constraints(const SupportPresentation& pres, const IntVector& w);

/// Re-checks a witness on box ∩ span alone, and that `point` lies in it.
bool verify_witness(const SupportPresentation& pres, const ClassGroup& group, const ConicWitness& witness);

struct ConicEnumerationStats {
  std::size_t nodesVisited = 0;
  std::size_t feasibleLeaves = 0;
};

/// All conic classes, sorted by class tuple, each with the lexicographically
/// first witness. beta ranges over the fundamental parallelepiped of the
/// lattice basis translated by `offset` (integer lambda offset, default 0).
std::vector<ConicWitness> conic_classes_generic(const SupportPresentation& pres, const ClassGroup& group,
                                                const IntVector& offset = {},
                                                ConicEnumerationStats* stats = nullptr);

/// max(0, -i, -j) < min(m, n - i, p - j), in module labels.
bool is_conic_segre3(const Segre3Params& params, std::int64_t i, std::int64_t j);

/// Labels (ceil(a-b), ceil(a-c)) over -m < a <= 0, -(n-1) < b <= 0,
/// -(p-1) < c <= 0, decided by interval feasibility.
std::vector<Label2> segre3_parameterization(const Segre3Params& params);

struct ConicSetOptions {
  /// Also run the generic ceiling-vector enumerator (expensive for large params).
  bool crossCheckGeneric = true;
};

/// Conic labels from the closed predicate, cross-checked against the
/// (a,b,c) parameterization and optionally the generic enumerator.
/// Throws InconsistencyError on any mismatch.
std::vector<Label2> conic_set_segre3(const Segre3Params& params, const ConicSetOptions& options = {});

struct Veronese2ConicComparison {
  Veronese2Params params;
  std::vector<std::int64_t> generic;                // ground truth
  std::vector<std::int64_t> parameterization;       // classes of (ceil(ca-b), ceil(da-b'))
  std::size_t parameterizationPairs = 0;            // distinct (i, j) pairs before identifying classes
  std::vector<std::int64_t> interval;               // -dm < k < cn
  std::int64_t formula = 0;                         // m + n + c + d - 3
  bool equalityCase = false;                        // (d-1)(m-1) + (c-1)(n-1) == 0
  std::vector<std::string> discrepancies;
  std::vector<std::string> warnings;
};

/// Generic enumeration mapped to labels, compared with the
/// parameterization, the interval and the count formula. Discrepancies are
/// reported, not thrown. Throws InvariantViolation if a conic class is not CM.
Veronese2ConicComparison conic_set_veronese2(const Veronese2Params& params);

std::vector<std::int64_t> veronese2_parameterization(const Veronese2Params& params, std::size_t* pairCount = nullptr);

}  // namespace cmclass
