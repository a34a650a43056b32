#include "cmclass/geometry.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "cmclass/cm.hpp"
#include "cmclass/errors.hpp"

namespace cmclass {
namespace {

IntVector unit(std::size_t s, std::size_t k, const mpz_class& scale = 1) {
  IntVector v(s);
  v[k] = scale;
  return v;
}

IntVector add(IntVector a, const IntVector& b) {
  for (std::size_t k = 0; k < a.size(); ++k) a[k] += b[k];
  return a;
}

std::vector<std::string> coordinate_names(std::initializer_list<std::pair<char, int>> blocks) {
  std::vector<std::string> out;
  for (auto [letter, count] : blocks)
    for (int k = 1; k <= count; ++k) out.push_back(std::string(1, letter) + std::to_string(k));
  return out;
}

mpz_class block_sum(const IntVector& w, std::size_t begin, std::size_t count) {
  mpz_class s = 0;
  for (std::size_t k = begin; k < begin + count; ++k) s += w[k];
  return s;
}

std::int64_t to_int64(const mpz_class& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("label does not fit in 64 bits");
  return z.get_si();
}

std::string join(const std::vector<std::int64_t>& xs) {
  std::string out = "{";
  for (std::size_t k = 0; k < xs.size(); ++k) out += (k ? "," : "") + std::to_string(xs[k]);
  return out + "}";
}

// Coordinate row k of the lattice basis as rational coefficients in lambda.
std::vector<mpq_class> basis_row(const IntMatrix& basis, std::size_t k) {
  std::vector<mpq_class> row(basis.cols());
  for (std::size_t j = 0; j < basis.cols(); ++j) row[j] = basis(k, j);
  return row;
}

std::vector<mpq_class> negated(std::vector<mpq_class> v) {
  for (auto& x : v) x = -x;
  return v;
}

void push_box_row(std::vector<LinearConstraint>& out, const IntMatrix& basis, std::size_t k, const mpz_class& w) {
  const auto row = basis_row(basis, k);
  out.push_back(LinearConstraint::at_most(row, mpq_class(w)));               // y_k <= w_k
  out.push_back(LinearConstraint::less_than(negated(row), mpq_class(1 - w)));  // y_k > w_k - 1
}

std::vector<LinearConstraint> parallelepiped(std::size_t rank, const IntVector& offset) {
  std::vector<LinearConstraint> out;
  for (std::size_t j = 0; j < rank; ++j) {
    std::vector<mpq_class> e(rank);
    e[j] = 1;
    out.push_back(LinearConstraint::at_most(negated(e), mpq_class(-offset[j])));   // lambda_j >= o_j
    out.push_back(LinearConstraint::less_than(e, mpq_class(offset[j] + 1)));       // lambda_j < o_j + 1
  }
  return out;
}

struct Enumerator {
  const SupportPresentation& pres;
  const ClassGroup& group;
  IntVector offset;
  std::vector<std::pair<mpz_class, mpz_class>> ranges;
  std::map<ClassTuple, ConicWitness> found;
  ConicEnumerationStats stats;

  void run() {
    const IntMatrix& b = pres.latticeBasis;
    for (std::size_t k = 0; k < pres.ambientRank; ++k) {
      mpz_class lo = 0, hi = 0;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        lo += b(k, j) * offset[j];
        hi += b(k, j) * offset[j];
        (b(k, j) < 0 ? lo : hi) += b(k, j);
      }
      // y_k ranges over [lo, hi), so ceil(y_k) lies in [lo, hi].
      ranges.push_back({lo, hi});
    }
    IntVector w(pres.ambientRank);
    std::vector<LinearConstraint> system = parallelepiped(b.cols(), offset);
    descend(0, w, system);
  }

  void descend(std::size_t k, IntVector& w, std::vector<LinearConstraint>& system) {
    ++stats.nodesVisited;
    if (k == pres.ambientRank) {
      ++stats.feasibleLeaves;
      ClassTuple tuple = group.project(w);
      if (found.count(tuple)) return;
      auto lambda = fourier_motzkin_solve(system, pres.rank());
      if (!lambda) throw std::logic_error("feasible leaf without a solution");
      found.emplace(tuple, make_witness(w, tuple, *lambda));
      return;
    }
    for (mpz_class v = ranges[k].first; v <= ranges[k].second; ++v) {
      w[k] = v;
      push_box_row(system, pres.latticeBasis, k, v);
      if (fourier_motzkin_feasible(system, pres.rank())) descend(k + 1, w, system);
      system.resize(system.size() - 2);
    }
  }

  ConicWitness make_witness(const IntVector& w, const ClassTuple& tuple, const std::vector<mpq_class>& lambda) const {
    ConicWitness out;
    out.ceilVector = w;
    out.classTuple = tuple;
    const IntMatrix& b = pres.latticeBasis;
    for (std::size_t k = 0; k < pres.ambientRank; ++k) {
      out.witnessBox.push_back({mpq_class(w[k] - 1), true, mpq_class(w[k]), false});
      mpq_class y = 0;
      for (std::size_t j = 0; j < b.cols(); ++j) y += b(k, j) * lambda[j];
      out.point.push_back(y);
    }
    return out;
  }
};

std::map<ClassTuple, Label2> segre3_lookup(const SupportPresentation& pres, const ClassGroup& group,
                                           std::int64_t window) {
  std::map<ClassTuple, Label2> out;
  for (std::int64_t i = -window; i <= window; ++i)
    for (std::int64_t j = -window; j <= window; ++j) out.emplace(class_of_label(pres, group, Label2{i, j}), Label2{i, j});
  return out;
}

}  // namespace

std::string to_string(Family family) { return family == Family::Segre3 ? "segre3" : "veronese2"; }

SupportPresentation presentation(const Segre3Params& params) {
  params.validate();
  const std::size_t m = params.m, n = params.n, p = params.p, s = m + n + p;
  SupportPresentation pres;
  pres.family = Family::Segre3;
  pres.params = params;
  pres.ambientRank = s;
  pres.coordinates = coordinate_names({{'x', params.m}, {'y', params.n}, {'z', params.p}});
  // X1*Y1*Z1 together with the differences inside each block.
  std::vector<IntVector> cols;
  cols.push_back(add(add(unit(s, 0), unit(s, m)), unit(s, m + n)));
  for (auto [begin, count] : {std::pair{std::size_t{0}, m}, {m, n}, {m + n, p}})
    for (std::size_t k = 1; k < count; ++k) cols.push_back(add(unit(s, begin + k), unit(s, begin, -1)));
  pres.latticeBasis = IntMatrix::from_columns(cols, s);
  return pres;
}

SupportPresentation presentation(const Veronese2Params& params) {
  params.validate();
  const std::size_t m = params.m, n = params.n, s = m + n;
  SupportPresentation pres;
  pres.family = Family::Veronese2;
  pres.params = params;
  pres.ambientRank = s;
  pres.coordinates = coordinate_names({{'x', params.m}, {'y', params.n}});
  std::vector<IntVector> cols;
  cols.push_back(add(unit(s, 0, params.c), unit(s, m, params.d)));
  for (std::size_t k = 1; k < m; ++k) cols.push_back(add(unit(s, k), unit(s, 0, -1)));
  for (std::size_t k = 1; k < n; ++k) cols.push_back(add(unit(s, m + k), unit(s, m, -1)));
  pres.latticeBasis = IntMatrix::from_columns(cols, s);
  if (m == 1 || n == 1)
    pres.warnings.push_back("presentation " + params.to_string() +
                            " is redundant: the support form of a one-variable side is implied by the others; "
                            "computed as presented");
  return pres;
}

ClassTuple ClassGroup::project(const IntVector& x) const {
  const IntVector y = rowTransform * x;
  ClassTuple out;
  for (std::size_t r : freeRows) out.push_back(y[r]);
  for (std::size_t t = 0; t < torsionRows.size(); ++t) {
    mpz_class residue;
    mpz_fdiv_r(residue.get_mpz_t(), y[torsionRows[t]].get_mpz_t(), torsionInvariants[t].get_mpz_t());
    out.push_back(residue);
  }
  return out;
}

ClassGroup class_group(const SupportPresentation& pres) {
  const SmithForm snf = smith_normal_form(pres.latticeBasis);
  ClassGroup g;
  g.rowTransform = snf.U;
  const std::size_t s = pres.ambientRank;
  for (std::size_t t = 0; t < s; ++t) {
    const bool onDiagonal = t < snf.D.cols();
    const mpz_class d = onDiagonal ? snf.D(t, t) : mpz_class(0);
    if (d == 0)
      g.freeRows.push_back(t);
    else if (d != 1) {
      g.torsionRows.push_back(t);
      g.torsionInvariants.push_back(d);
    }
  }
  g.freeRank = g.freeRows.size();
  return g;
}

ClassTuple class_of_label(const SupportPresentation& pres, const ClassGroup& group, Label2 label) {
  if (pres.family != Family::Segre3) throw std::invalid_argument("pair labels belong to segre3");
  const auto& p = std::get<Segre3Params>(pres.params);
  // z0 = -i*e_y1 - j*e_z1 has |a| - |b| = i and |a| - |g| = j.
  IntVector minusZ0(pres.ambientRank);
  minusZ0[static_cast<std::size_t>(p.m)] = label.i;
  minusZ0[static_cast<std::size_t>(p.m + p.n)] = label.j;
  return group.project(minusZ0);
}

ClassTuple class_of_label(const SupportPresentation& pres, const ClassGroup& group, std::int64_t label) {
  if (pres.family != Family::Veronese2) throw std::invalid_argument("integer labels belong to veronese2");
  const auto& p = std::get<Veronese2Params>(pres.params);
  const BezoutPair uv = bezout_pair(p.c, p.d);
  // z0 = -v*i*e_x1 - u*i*e_y1 has d|a| - c|b| = i(cu - dv) = i.
  IntVector minusZ0(pres.ambientRank);
  minusZ0[0] = mpz_class(uv.v) * label;
  minusZ0[static_cast<std::size_t>(p.m)] = mpz_class(uv.u) * label;
  return group.project(minusZ0);
}

Label2 segre3_label_of_vector(const Segre3Params& params, const IntVector& w) {
  const mpz_class a = block_sum(w, 0, params.m);
  const mpz_class b = block_sum(w, params.m, params.n);
  const mpz_class c = block_sum(w, params.m + params.n, params.p);
  return {to_int64(b - a), to_int64(c - a)};
}

std::int64_t veronese2_label_of_vector(const Veronese2Params& params, const IntVector& w) {
  const mpz_class a = block_sum(w, 0, params.m);
  const mpz_class b = block_sum(w, params.m, params.n);
  return to_int64(params.c * b - params.d * a);
}

std::vector<LinearConstraint> box_constraints(const SupportPresentation& pres, const IntVector& w) {
  std::vector<LinearConstraint> out;
  for (std::size_t k = 0; k < pres.ambientRank; ++k) push_box_row(out, pres.latticeBasis, k, w[k]);
  return out;
}

bool verify_witness(const SupportPresentation& pres, const ClassGroup& group, const ConicWitness& witness) {
  if (witness.ceilVector.size() != pres.ambientRank || witness.point.size() != pres.ambientRank) return false;
  if (group.project(witness.ceilVector) != witness.classTuple) return false;
  if (!fourier_motzkin_feasible(box_constraints(pres, witness.ceilVector), pres.rank())) return false;
  for (std::size_t k = 0; k < pres.ambientRank; ++k) {
    const mpq_class& y = witness.point[k];
    if (!(witness.ceilVector[k] - 1 < y && y <= witness.ceilVector[k])) return false;
  }
  // point = B * lambda for some rational lambda.
  std::vector<LinearConstraint> span;
  for (std::size_t k = 0; k < pres.ambientRank; ++k) {
    const auto row = basis_row(pres.latticeBasis, k);
    span.push_back(LinearConstraint::at_most(row, witness.point[k]));
    span.push_back(LinearConstraint::at_most(negated(row), -witness.point[k]));
  }
  return fourier_motzkin_feasible(span, pres.rank());
}

std::vector<ConicWitness> conic_classes_generic(const SupportPresentation& pres, const ClassGroup& group,
                                                const IntVector& offset, ConicEnumerationStats* stats) {
  Enumerator e{pres, group, offset.empty() ? IntVector(pres.rank()) : offset, {}, {}, {}};
  if (e.offset.size() != pres.rank()) throw std::invalid_argument("parallelepiped offset has the wrong length");
  e.run();
  if (stats) *stats = e.stats;
  std::vector<ConicWitness> out;
  for (auto& [tuple, witness] : e.found) out.push_back(std::move(witness));
  return out;
}

bool is_conic_segre3(const Segre3Params& params, std::int64_t i, std::int64_t j) {
  return std::max<std::int64_t>({0, -i, -j}) < std::min<std::int64_t>({params.m, params.n - i, params.p - j});
}

std::vector<Label2> segre3_parameterization(const Segre3Params& params) {
  params.validate();
  // Variables (a, b, c).
  auto row = [](mpq_class a, mpq_class b, mpq_class c) { return std::vector<mpq_class>{a, b, c}; };
  std::vector<LinearConstraint> box = {
      LinearConstraint::less_than(row(-1, 0, 0), params.m),      // a > -m
      LinearConstraint::at_most(row(1, 0, 0), 0),                // a <= 0
      LinearConstraint::less_than(row(0, -1, 0), params.n - 1),  // b > -(n-1)
      LinearConstraint::at_most(row(0, 1, 0), 0),
      LinearConstraint::less_than(row(0, 0, -1), params.p - 1),  // c > -(p-1)
      LinearConstraint::at_most(row(0, 0, 1), 0),
  };
  std::vector<Label2> out;
  for (std::int64_t i = -params.m; i <= params.n; ++i)
    for (std::int64_t j = -params.m; j <= params.p; ++j) {
      auto system = box;
      // i - 1 < a - b <= i and j - 1 < a - c <= j
      system.push_back(LinearConstraint::at_most(row(1, -1, 0), i));
      system.push_back(LinearConstraint::less_than(row(-1, 1, 0), 1 - i));
      system.push_back(LinearConstraint::at_most(row(1, 0, -1), j));
      system.push_back(LinearConstraint::less_than(row(-1, 0, 1), 1 - j));
      if (fourier_motzkin_feasible(system, 3)) out.push_back({i, j});
    }
  return out;
}

std::vector<Label2> conic_set_segre3(const Segre3Params& params, const ConicSetOptions& options) {
  params.validate();
  const std::int64_t w = segre3_window(params);
  std::vector<Label2> closed;
  for (std::int64_t i = -w; i <= w; ++i)
    for (std::int64_t j = -w; j <= w; ++j)
      if (is_conic_segre3(params, i, j)) closed.push_back({i, j});

  if (segre3_parameterization(params) != closed)
    throw InconsistencyError("segre3 " + params.to_string() +
                             ": closed conic predicate disagrees with the (a,b,c) parameterization");

  if (options.crossCheckGeneric) {
    const SupportPresentation pres = presentation(params);
    const ClassGroup group = class_group(pres);
    const auto lookup = segre3_lookup(pres, group, w);
    std::vector<Label2> generic;
    for (const auto& witness : conic_classes_generic(pres, group)) {
      const auto it = lookup.find(witness.classTuple);
      if (it == lookup.end())
        throw InconsistencyError("segre3 " + params.to_string() + ": conic class outside the label window");
      if (segre3_label_of_vector(params, witness.ceilVector) != it->second)
        throw InconsistencyError("segre3 " + params.to_string() + ": label bridge orientation mismatch");
      generic.push_back(it->second);
    }
    std::sort(generic.begin(), generic.end());
    if (generic != closed)
      throw InconsistencyError("segre3 " + params.to_string() +
                               ": closed conic predicate disagrees with the generic enumerator");
  }
  return closed;
}

std::vector<std::int64_t> veronese2_parameterization(const Veronese2Params& params, std::size_t* pairCount) {
  params.validate();
  const std::int64_t m = params.m, n = params.n, c = params.c, d = params.d;
  auto row = [](mpq_class a, mpq_class b, mpq_class bp) { return std::vector<mpq_class>{a, b, bp}; };
  // Variables (a, b, b'). A one-variable side leaves no freedom: b = 0 (resp. b' = 0).
  std::vector<LinearConstraint> box = {
      LinearConstraint::less_than(row(-1, 0, 0), 1),  // a > -1
      LinearConstraint::at_most(row(1, 0, 0), 0),
      m > 1 ? LinearConstraint::less_than(row(0, -1, 0), m - 1) : LinearConstraint::at_most(row(0, -1, 0), 0),
      LinearConstraint::at_most(row(0, 1, 0), 0),
      n > 1 ? LinearConstraint::less_than(row(0, 0, -1), n - 1) : LinearConstraint::at_most(row(0, 0, -1), 0),
      LinearConstraint::at_most(row(0, 0, 1), 0),
  };
  std::set<std::int64_t> labels;
  std::size_t pairs = 0;
  // c*a - b lies in (-c, m-1); d*a - b' in (-d, n-1).
  for (std::int64_t i = -c; i <= m; ++i)
    for (std::int64_t j = -d; j <= n; ++j) {
      auto system = box;
      system.push_back(LinearConstraint::at_most(row(c, -1, 0), i));
      system.push_back(LinearConstraint::less_than(row(-c, 1, 0), 1 - i));
      system.push_back(LinearConstraint::at_most(row(d, 0, -1), j));
      system.push_back(LinearConstraint::less_than(row(-d, 0, 1), 1 - j));
      if (!fourier_motzkin_feasible(system, 3)) continue;
      ++pairs;
      // Ceiling vector i*e_x1 + j*e_y1.
      labels.insert(c * j - d * i);
    }
  if (pairCount) *pairCount = pairs;
  return {labels.begin(), labels.end()};
}

Veronese2ConicComparison conic_set_veronese2(const Veronese2Params& params) {
  params.validate();
  Veronese2ConicComparison out;
  out.params = params;
  const SupportPresentation pres = presentation(params);
  out.warnings = pres.warnings;
  const ClassGroup group = class_group(pres);

  const auto [lo, hi] = veronese2_window(params);
  std::map<ClassTuple, std::int64_t> lookup;
  for (std::int64_t i = lo; i <= hi; ++i) lookup.emplace(class_of_label(pres, group, i), i);
  for (const auto& witness : conic_classes_generic(pres, group)) {
    const auto it = lookup.find(witness.classTuple);
    if (it == lookup.end())
      throw InconsistencyError("veronese2 " + params.to_string() + ": conic class outside the label window");
    if (veronese2_label_of_vector(params, witness.ceilVector) != it->second)
      throw InconsistencyError("veronese2 " + params.to_string() + ": label bridge orientation mismatch");
    out.generic.push_back(it->second);
  }
  std::sort(out.generic.begin(), out.generic.end());

  out.parameterization = veronese2_parameterization(params, &out.parameterizationPairs);
  for (std::int64_t k = -static_cast<std::int64_t>(params.d) * params.m + 1;
       k < static_cast<std::int64_t>(params.c) * params.n; ++k)
    out.interval.push_back(k);
  out.formula = count_formulas(params).conic;
  out.equalityCase = (params.d - 1) * (params.m - 1) + (params.c - 1) * (params.n - 1) == 0;

  const auto truth = static_cast<std::int64_t>(out.generic.size());
  if (out.formula != truth)
    out.discrepancies.push_back("conic count formula m+n+c+d-3 = " + std::to_string(out.formula) + " but " +
                                std::to_string(truth) + " conic classes were enumerated");
  if (out.parameterization != out.generic)
    out.discrepancies.push_back("parameterization classes " + join(out.parameterization) +
                                " differ from enumerated " + join(out.generic));
  if (out.interval != out.generic)
    out.discrepancies.push_back("interval -dm<k<cn " + join(out.interval) + " differs from enumerated " +
                                join(out.generic));

  const auto cm = cm_set_veronese2(params);
  for (std::int64_t k : out.generic)
    if (!std::binary_search(cm.begin(), cm.end(), k))
      throw InvariantViolation("veronese2 " + params.to_string() + ": conic class " + std::to_string(k) +
                               " is not Cohen-Macaulay");
  return out;
}

}  // namespace cmclass
