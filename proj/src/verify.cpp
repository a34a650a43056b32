#include "cmclass/verify.hpp"

#include <algorithm>
#include <iomanip>
#include <numeric>
#include <sstream>

#include "cmclass/cm.hpp"
#include "cmclass/errors.hpp"
#include "cmclass/expr.hpp"
#include "cmclass/geometry.hpp"
#include "cmclass/oracle.hpp"
#include "cmclass/parallel.hpp"
#include "cmclass/series.hpp"

namespace cmclass {
namespace {

struct Segre3Row {
  Segre3Params params;
  std::int64_t cm = 0, conic = 0;
  Segre3Formulas formulas;
  std::array<std::int64_t, 6> tallies{};
  bool generic = false;
  std::size_t conicNotCM = 0;
  std::size_t serreOnCM = 0;
  bool classGroupZ2 = false;
  std::string error;
};

struct Veronese2Row {
  Veronese2Params params;
  std::vector<std::int64_t> cm;
  Veronese2ConicComparison conic;
  std::size_t conicNotCM = 0;
  bool classGroupZ = false;
  std::string error;
};

std::vector<Segre3Params> segre3_grid(int lo, int hi) {
  std::vector<Segre3Params> out;
  for (int m = lo; m <= hi; ++m)
    for (int n = lo; n <= hi; ++n)
      for (int p = lo; p <= hi; ++p) out.push_back({m, n, p});
  return out;
}

std::vector<Veronese2Params> veronese2_grid(int hi) {
  std::vector<Veronese2Params> out;
  for (int m = 1; m <= hi; ++m)
    for (int n = 1; n <= hi; ++n)
      for (int c = 1; c <= hi; ++c)
        for (int d = 1; d <= hi; ++d)
          if (std::gcd(c, d) == 1) out.push_back({m, n, c, d});
  return out;
}

Segre3Row segre3_row(const Segre3Params& params, int genericMax) {
  Segre3Row row;
  row.params = params;
  row.formulas = count_formulas(params);
  try {
    const auto cm = cm_region_segre3(params, 1);
    row.generic = std::max({params.m, params.n, params.p}) <= genericMax;
    const auto conic = conic_set_segre3(params, ConicSetOptions{row.generic});
    row.cm = static_cast<std::int64_t>(cm.size());
    row.conic = static_cast<std::int64_t>(conic.size());
    row.tallies = case_tallies(cm);
    for (const auto& l : conic)
      if (!std::binary_search(cm.begin(), cm.end(), l)) ++row.conicNotCM;
    for (const auto& l : cm)
      if (oracle::serre_noncm_certificate(params, l)) ++row.serreOnCM;
    const ClassGroup g = class_group(presentation(params));
    row.classGroupZ2 = g.freeRank == 2 && g.torsionInvariants.empty();
  } catch (const std::exception& e) {
    row.error = e.what();
  }
  return row;
}

Veronese2Row veronese2_row(const Veronese2Params& params) {
  Veronese2Row row;
  row.params = params;
  try {
    row.cm = cm_set_veronese2(params);
    row.conic = conic_set_veronese2(params);
    for (auto k : row.conic.generic)
      if (!std::binary_search(row.cm.begin(), row.cm.end(), k)) ++row.conicNotCM;
    const ClassGroup g = class_group(presentation(params));
    row.classGroupZ = g.freeRank == 1 && g.torsionInvariants.empty();
  } catch (const InvariantViolation& e) {
    row.conicNotCM = 1;
    row.error = e.what();
  } catch (const std::exception& e) {
    row.error = e.what();
  }
  return row;
}

std::string set_text(const std::vector<std::int64_t>& xs) {
  std::string out = "{";
  for (std::size_t k = 0; k < xs.size(); ++k) out += (k ? "," : "") + std::to_string(xs[k]);
  return out + "}";
}

class Checks {
 public:
  explicit Checks(VerifyReport& report) : report_(report) {}
  void add(int criterion, std::string name, bool hard, bool passed, std::string detail) {
    report_.checks.push_back({criterion, std::move(name), hard, passed, std::move(detail)});
  }

 private:
  VerifyReport& report_;
};

}  // namespace

bool VerifyReport::hard_failed() const {
  return std::any_of(checks.begin(), checks.end(), [](const VerifyCheck& c) { return c.hard && !c.passed; });
}

std::string VerifyReport::render() const {
  std::ostringstream out;
  out << "verify report\n\n";
  for (const auto& s : sections) out << s << "\n";
  out << "summary\n";
  std::size_t hardFailures = 0, softFlags = 0;
  for (const auto& c : checks) {
    out << "criterion " << std::setw(2) << c.criterion << "  " << (c.hard ? "hard" : "soft") << "  "
        << (c.passed ? "PASS" : (c.hard ? "FAIL" : "FLAG")) << "  " << c.name << ": " << c.detail << "\n";
    if (!c.passed) (c.hard ? hardFailures : softFlags)++;
  }
  out << "\nresult: " << (hardFailures ? "FAIL" : "PASS") << " (" << hardFailures << " hard failures, " << softFlags
      << " soft flags)\n";
  return out.str();
}

VerifyReport run_verify(const VerifyOptions& options) {
  VerifyReport report;
  Checks checks(report);

  // ---- segre3 sweep
  const auto s3params = segre3_grid(2, options.segre3Max);
  std::vector<Segre3Row> s3(s3params.size());
  parallel_for(s3params.size(), options.threads,
               [&](std::size_t k) { s3[k] = segre3_row(s3params[k], options.segre3GenericMax); });
  {
    std::ostringstream t;
    t << "segre3 counts\n";
    t << "   m  n  p    CM  formula  conic  formula  CM>conic  generic  case tallies computed/formula\n";
    std::size_t cmBad = 0, conicBad = 0, notGreater = 0, errors = 0, tallyBad = 0, genericSets = 0;
    for (const auto& r : s3) {
      const std::int64_t cmFormula = r.formulas.cm + (options.injectFault ? 1 : 0);
      if (!r.error.empty()) {
        ++errors;
        t << std::setw(4) << r.params.m << std::setw(3) << r.params.n << std::setw(3) << r.params.p
          << "  error: " << r.error << "\n";
        continue;
      }
      cmBad += r.cm != cmFormula;
      conicBad += r.conic != r.formulas.conic;
      notGreater += !(r.cm > r.conic);
      genericSets += r.generic;
      t << std::setw(4) << r.params.m << std::setw(3) << r.params.n << std::setw(3) << r.params.p << std::setw(6)
        << r.cm << std::setw(9) << cmFormula << std::setw(7) << r.conic << std::setw(9) << r.formulas.conic
        << std::setw(10) << (r.cm > r.conic ? "yes" : "no") << std::setw(9) << (r.generic ? "agree" : "-") << "  ";
      bool tallyOk = true;
      for (int c = 0; c < 6; ++c) {
        t << ' ' << r.tallies[c] << '/' << r.formulas.regionCounts[c];
        if (r.tallies[c] != r.formulas.regionCounts[c]) {
          t << '*';
          tallyOk = false;
        }
      }
      tallyBad += !tallyOk;
      t << "\n";
    }
    t << "(* marks a case tally that differs from its case formula)\n";
    report.sections.push_back(t.str());
    const std::string n = std::to_string(s3.size());
    checks.add(1, "segre3 CM count formula", true, cmBad == 0 && errors == 0,
               std::to_string(s3.size() - cmBad - errors) + "/" + n + " parameter sets agree");
    checks.add(1, "segre3 per-case tallies", false, tallyBad == 0,
               std::to_string(tallyBad) + "/" + n + " parameter sets with a differing case tally");
    checks.add(2, "segre3 conic count formula", true, conicBad == 0 && errors == 0,
               std::to_string(s3.size() - conicBad - errors) + "/" + n + " parameter sets agree; " +
                   std::to_string(genericSets) + " cross-checked classwise by the generic enumerator");
    checks.add(4, "segre3 CM count exceeds conic count", true, notGreater == 0 && errors == 0,
               std::to_string(s3.size() - notGreater - errors) + "/" + n + " parameter sets");
  }

  // ---- criterion reproduction
  {
    std::size_t cases = 0, verdictBad = 0, aBad = 0;
    for (int m = 2; m <= 6; ++m)
      for (int n = 2; n <= 6; ++n)
        for (std::int64_t i = -10; i <= 10; ++i) {
          ++cases;
          const auto r1 = poly(m);
          const auto r2 = shift(poly(n), i);
          const bool inRange = -(m - 1) <= i && i <= n - 1;
          const SVEvaluation e = sv_test(r1, r2);
          if ((e.verdict == SVVerdict::CM) != inRange || bruns_guerrieri(m, n, i) != inRange) ++verdictBad;
          if (inRange && a_invariant(series_of(segre(r1, r2))) != -std::max<std::int64_t>(m, n - i)) ++aBad;
        }
    std::ostringstream t;
    t << "interval criterion reproduction: " << cases << " cases, " << verdictBad << " verdict mismatches, " << aBad
      << " a-invariant mismatches\n";
    report.sections.push_back(t.str());
    checks.add(5, "segre of two polynomial rings against the interval", true, verdictBad == 0 && aBad == 0,
               std::to_string(cases - verdictBad) + "/" + std::to_string(cases) + " verdicts, " +
                   std::to_string(aBad) + " a-invariant mismatches");
  }

  // ---- veronese2 sweep
  const auto v2params = veronese2_grid(4);
  std::vector<Veronese2Row> v2(v2params.size());
  parallel_for(v2params.size(), options.threads, [&](std::size_t k) { v2[k] = veronese2_row(v2params[k]); });
  {
    std::ostringstream t;
    t << "veronese2 CM sets\n";
    t << "   m  n  c  d   CM  guaranteed  exact size  outside guaranteed range\n";
    std::size_t rangeBad = 0, sizeBad = 0, errors = 0;
    bool fiveSeen = false;
    for (const auto& r : v2) {
      const auto& p = r.params;
      t << std::setw(4) << p.m << std::setw(3) << p.n << std::setw(3) << p.c << std::setw(3) << p.d;
      if (!r.error.empty()) {
        ++errors;
        t << "  error: " << r.error << "\n";
        continue;
      }
      const std::int64_t lo = -static_cast<std::int64_t>(p.d) * p.m + 1, hi = static_cast<std::int64_t>(p.c) * p.n - 1;
      bool covers = true;
      for (std::int64_t i = lo; i <= hi; ++i) covers &= std::binary_search(r.cm.begin(), r.cm.end(), i);
      rangeBad += !covers;
      std::string exact = "-";
      if (p.c == 1 || p.d == 1) {
        const std::int64_t expected = p.c == 1 ? static_cast<std::int64_t>(p.d) * p.m + p.n - 1
                                               : p.m + static_cast<std::int64_t>(p.c) * p.n - 1;
        const bool ok = static_cast<std::int64_t>(r.cm.size()) == expected;
        exact = std::to_string(expected) + (ok ? " ok" : " BAD");
        sizeBad += !ok;
      }
      std::vector<std::int64_t> outside;
      for (auto i : r.cm)
        if (i < lo || i > hi) outside.push_back(i);
      if (p.m == 3 && p.n == 2 && p.c == 2 && p.d == 3) fiveSeen = std::binary_search(r.cm.begin(), r.cm.end(), 5);
      t << std::setw(5) << r.cm.size() << std::setw(6) << lo << ".." << std::left << std::setw(4) << hi << std::right
        << std::setw(12) << exact << "  " << set_text(outside) << "\n";
    }
    report.sections.push_back(t.str());
    const std::string n = std::to_string(v2.size());
    checks.add(6, "veronese2 CM set contains the guaranteed range", true, rangeBad == 0 && errors == 0,
               std::to_string(v2.size() - rangeBad - errors) + "/" + n + " parameter sets");
    checks.add(6, "veronese2 CM set size for c = 1 or d = 1", true, sizeBad == 0 && errors == 0,
               std::to_string(sizeBad) + " mismatches");
    checks.add(6, "veronese2 (3,2,2,3) has CM class 5 outside the guaranteed range", true, fiveSeen,
               fiveSeen ? "class 5 is CM" : "class 5 is not CM");
  }

  // ---- conic inside CM, both families
  {
    std::size_t violations = 0, sets = 0;
    for (const auto& r : s3) violations += r.conicNotCM, ++sets;
    for (const auto& r : v2) violations += r.conicNotCM, ++sets;
    checks.add(3, "conic classes are CM", true, violations == 0,
               std::to_string(violations) + " violations over " + std::to_string(sets) + " parameter sets");
  }

  // ---- oracle equivalence
  {
    std::size_t equalities = 0, mismatches = 0;
    for (const auto& p : segre3_grid(2, 3))
      for (std::int64_t i = -4; i <= 4; ++i)
        for (std::int64_t j = -4; j <= 4; ++j) {
          const HilbertSeries s = series_of(segre(segre(poly(p.m), shift(poly(p.n), i)), shift(poly(p.p), j)));
          for (std::int64_t k = -10; k <= 10; ++k) {
            ++equalities;
            mismatches += coefficient(s, k) != oracle::hilbert_coeff_brute(p, Label2{i, j}, k);
          }
        }
    for (const auto& p : veronese2_grid(3)) {
      const BezoutPair uv = bezout_pair(p.c, p.d);
      for (std::int64_t i = -6; i <= 6; ++i) {
        const HilbertSeries s =
            series_of(segre(veronese(shift(poly(p.m), uv.v * i), p.c), veronese(shift(poly(p.n), uv.u * i), p.d)));
        for (std::int64_t k = -10; k <= 10; ++k) {
          ++equalities;
          mismatches += coefficient(s, k) != oracle::hilbert_coeff_brute(p, i, k);
        }
      }
    }
    checks.add(7, "series coefficients equal brute monomial counts", true, mismatches == 0,
               std::to_string(equalities - mismatches) + "/" + std::to_string(equalities) + " equalities");
  }

  // ---- Serre
  {
    const auto cert = oracle::serre_noncm_certificate(Segre3Params{2, 2, 2}, Label2{2, 3});
    const bool fires = cert && cert->muLowerBound >= 8 && cert->ringMultiplicity == 6;
    checks.add(8, "Serre certificate for segre3 (2,2,2) class (2,3)", true, fires,
               cert ? "mu >= " + std::to_string(cert->muLowerBound) + " > e = " + std::to_string(cert->ringMultiplicity)
                    : "no certificate");
    std::size_t onCM = 0;
    for (const auto& r : s3) onCM += r.serreOnCM;
    checks.add(8, "Serre certificate never fires on a CM class", true, onCM == 0,
               std::to_string(onCM) + " certificates on CM classes over " + std::to_string(s3.size()) +
                   " parameter sets");
  }

  // ---- class groups
  {
    std::size_t s3Bad = 0, v2Bad = 0, v2Sets = 0;
    for (const auto& r : s3) s3Bad += !r.classGroupZ2;
    for (const auto& r : v2)
      if (r.params.m + r.params.n >= 3) {
        ++v2Sets;
        v2Bad += !r.classGroupZ;
      }
    checks.add(9, "class groups", true, s3Bad == 0 && v2Bad == 0,
               "segre3 Z^2 in " + std::to_string(s3.size() - s3Bad) + "/" + std::to_string(s3.size()) +
                   ", veronese2 Z in " + std::to_string(v2Sets - v2Bad) + "/" + std::to_string(v2Sets));
  }

  // ---- veronese2 conic comparison
  {
    std::ostringstream t;
    t << "veronese2 conic comparison (enumerated classes are ground truth)\n";
    t << "   m  n  c  d  enumerated  parameterization  interval  formula  equality case  formula\n";
    std::size_t equalityBad = 0, flagged = 0, parameterizationBad = 0, intervalBad = 0, equalityCases = 0;
    std::ostringstream corollary;
    corollary << "equal CM and conic counts against c=d=1 or c=m=1 or d=n=1\n";
    corollary << "   m  n  c  d    CM  conic  equal  predicate\n";
    std::size_t corollaryBad = 0, alternativeBad = 0, corollarySets = 0;
    std::vector<std::string> dimensionOne;
    for (const auto& r : v2) {
      const auto& p = r.params;
      if (p.m > 3 || p.n > 3 || p.c > 3 || p.d > 3 || !r.error.empty()) continue;
      const auto truth = static_cast<std::int64_t>(r.conic.generic.size());
      const bool agree = r.conic.formula == truth;
      equalityCases += r.conic.equalityCase;
      if (r.conic.equalityCase && !agree) ++equalityBad;
      if (!r.conic.equalityCase && !agree) ++flagged;
      parameterizationBad += r.conic.parameterization != r.conic.generic;
      intervalBad += r.conic.interval != r.conic.generic;
      t << std::setw(4) << p.m << std::setw(3) << p.n << std::setw(3) << p.c << std::setw(3) << p.d << std::setw(12)
        << truth << std::setw(18) << (r.conic.parameterization == r.conic.generic ? "same" : "differs")
        << std::setw(10) << (r.conic.interval == r.conic.generic ? "same" : "differs") << std::setw(9)
        << r.conic.formula << std::setw(15) << (r.conic.equalityCase ? "yes" : "no") << std::setw(9)
        << (agree ? "agree" : "disagree") << "\n";

      const bool equal = r.cm.size() == r.conic.generic.size();
      const bool predicate = (p.c == 1 && p.d == 1) || (p.c == 1 && p.m == 1) || (p.d == 1 && p.n == 1);
      corollaryBad += equal != predicate;
      alternativeBad += equal != (p.c == 1 || p.d == 1);
      ++corollarySets;
      corollary << std::setw(4) << p.m << std::setw(3) << p.n << std::setw(3) << p.c << std::setw(3) << p.d
                << std::setw(6) << r.cm.size() << std::setw(7) << truth << std::setw(7) << (equal ? "yes" : "no")
                << std::setw(11) << (predicate ? "yes" : "no") << (equal != predicate ? "  differs" : "") << "\n";
      if (p.m == 1 && p.n == 1 && p.c > 1 && p.d > 1)
        dimensionOne.push_back("(" + std::to_string(p.c) + "," + std::to_string(p.d) + "): " +
                               std::to_string(r.cm.size()) + " inequality solutions vs c+d-1 = " +
                               std::to_string(p.c + p.d - 1));
    }
    report.sections.push_back(t.str());
    corollary << "predicate c=d=1 or c=m=1 or d=n=1 matches the counts in " << corollarySets - corollaryBad << "/"
              << corollarySets << " parameter sets\n";
    corollary << "predicate c=1 or d=1 matches the counts in " << corollarySets - alternativeBad << "/"
              << corollarySets << " parameter sets\n";
    corollary << "m = n = 1, c, d > 1, counting inequality solutions:";
    if (dimensionOne.empty()) corollary << " no cases";
    corollary << "\n";
    for (const auto& line : dimensionOne) corollary << "  " << line << "\n";
    corollary << "m = n = 1 read geometrically: the ring has Krull dimension 1 and every class is CM\n";
    report.sections.push_back(corollary.str());
    checks.add(10, "veronese2 conic formula in the equality cases", true, equalityBad == 0,
               std::to_string(equalityCases - equalityBad) + "/" + std::to_string(equalityCases) +
                   " equality cases agree");
    checks.add(10, "veronese2 conic formula outside the equality cases", false, flagged == 0,
               std::to_string(flagged) + " cases where the formula differs from the enumerated count");
    checks.add(10, "veronese2 conic parameterization and interval against enumeration", false,
               parameterizationBad == 0 && intervalBad == 0,
               std::to_string(parameterizationBad) + " parameterization and " + std::to_string(intervalBad) +
                   " interval differences");
    checks.add(10, "equal CM and conic counts exactly when c=d=1, c=m=1 or d=n=1", false, corollaryBad == 0,
               std::to_string(corollaryBad) + " parameter sets where the predicate and the counts disagree");
  }

  std::stable_sort(report.checks.begin(), report.checks.end(),
                   [](const VerifyCheck& a, const VerifyCheck& b) { return a.criterion < b.criterion; });
  return report;
}

}  // namespace cmclass
