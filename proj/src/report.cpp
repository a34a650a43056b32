#include "cmclass/report.hpp"

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <map>
#include <sstream>

#include "cmclass/errors.hpp"
#include "cmclass/expr.hpp"
#include "cmclass/parallel.hpp"
#include "json.hpp"

namespace cmclass {
namespace {

using json = nlohmann::ordered_json;

std::int64_t parse_int(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty integer");
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(text, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad integer '" + text + "'");
  }
  if (used != text.size()) throw std::invalid_argument("bad integer '" + text + "'");
  return v;
}

std::string set_text(const std::vector<std::int64_t>& xs) {
  std::string out = "{";
  for (std::size_t k = 0; k < xs.size(); ++k) out += (k ? "," : "") + std::to_string(xs[k]);
  return out + "}";
}

char cell(bool cm, bool conic) { return conic ? 'C' : (cm ? 'M' : '.'); }

const char* cell_color(char c) {
  switch (c) {
    case 'C': return "#2b6cb0";
    case 'M': return "#dd6b20";
    default: return "#e2e8f0";
  }
}

Window clamp(Window full, std::optional<Window> display) {
  if (!display) return full;
  return {std::max(full.lo, display->lo), std::min(full.hi, display->hi)};
}

json certificate_json(const std::optional<Certificate>& c) {
  if (!c) return nullptr;
  const SVEvaluation& e = c->evaluation;
  return {{"pairing", c->pairing}, {"a1", e.a1},       {"r1", e.r1},
          {"a2", e.a2},           {"r2", e.r2},         {"dim1", e.dim1},
          {"dim2", e.dim2},       {"factor1CM", e.factor1CM}, {"factor2CM", e.factor2CM},
          {"ineq1", e.ineq1},     {"ineq2", e.ineq2},   {"verdict", to_string(e.verdict)}};
}

json serre_json(const std::optional<oracle::SerreCertificate>& s) {
  if (!s) return nullptr;
  return {{"muLowerBound", s->muLowerBound},
          {"ringMultiplicity", s->ringMultiplicity},
          {"degrees", {s->firstDegree, s->lastDegree}}};
}

std::string svg_header(int width, int height) {
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\" font-family=\"monospace\" font-size=\"10\">\n";
  return out.str();
}

std::string svg_legend(int x, int y) {
  std::ostringstream out;
  const char* names[] = {"conic", "CM, not conic", "not CM"};
  const char keys[] = {'C', 'M', '.'};
  for (int k = 0; k < 3; ++k) {
    out << "<rect x=\"" << x << "\" y=\"" << y + 14 * k << "\" width=\"10\" height=\"10\" fill=\""
        << cell_color(keys[k]) << "\"/>\n";
    out << "<text x=\"" << x + 14 << "\" y=\"" << y + 14 * k + 9 << "\">" << names[k] << "</text>\n";
  }
  return out.str();
}

constexpr int kCell = 14;

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "text") return Format::Text;
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  if (name == "svg") return Format::Svg;
  throw std::invalid_argument("unknown format '" + name + "' (text, csv, json, svg)");
}

Window parse_window(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("window must be written a:b");
  Window w{parse_int(text.substr(0, colon)), parse_int(text.substr(colon + 1))};
  if (w.lo > w.hi) throw std::invalid_argument("window " + text + " is empty");
  return w;
}

// ---------------------------------------------------------------- segre3

Segre3Report segre3_report(const Segre3Params& params, const Segre3ReportOptions& options) {
  params.validate();
  Segre3Report report;
  report.params = params;
  const Segre3Sweep sweep = sweep_segre3(params, options.threads);
  report.window = sweep.window;
  const auto cmRegion = cm_region_from_sweep(sweep);
  report.genericChecked = options.crossCheckGeneric;
  const auto conic = conic_set_segre3(params, ConicSetOptions{options.crossCheckGeneric});

  report.records.resize(sweep.labels.size());
  parallel_for(sweep.labels.size(), options.threads, [&](std::size_t k) {
    Segre3Record& r = report.records[k];
    r.label = sweep.labels[k];
    const CMDecision& d = sweep.decisions[k];
    r.cm = d.isCM;
    r.conic = std::binary_search(conic.begin(), conic.end(), r.label);
    if (const Certificate* c = d.deciding_certificate()) r.certificate = *c;
    if (r.cm || std::max(std::abs(r.label.i), std::abs(r.label.j)) <= options.serreRadius)
      r.serre = oracle::serre_noncm_certificate(params, r.label);
  });

  for (const auto& r : report.records) {
    const std::string where = "segre3 " + params.to_string() + " class (" + std::to_string(r.label.i) + "," +
                              std::to_string(r.label.j) + ")";
    if (r.conic && !r.cm) throw InvariantViolation(where + " is conic but not CM");
    if (r.cm && r.serre) throw InvariantViolation(where + " is CM but carries a Serre non-CM certificate");
    report.cmCount += r.cm;
    report.conicCount += r.conic;
  }
  report.formulas = count_formulas(params);
  report.caseTallies = case_tallies(cmRegion);
  for (int c = 0; c < 6; ++c)
    if (report.caseTallies[c] != report.formulas.regionCounts[c])
      report.discrepancies.push_back("case " + std::to_string(c + 1) + " tally " +
                                     std::to_string(report.caseTallies[c]) + " differs from formula " +
                                     std::to_string(report.formulas.regionCounts[c]));
  if (static_cast<std::int64_t>(report.cmCount) != report.formulas.cm)
    report.discrepancies.push_back("CM count " + std::to_string(report.cmCount) + " differs from formula " +
                                   std::to_string(report.formulas.cm));
  if (static_cast<std::int64_t>(report.conicCount) != report.formulas.conic)
    report.discrepancies.push_back("conic count " + std::to_string(report.conicCount) + " differs from formula " +
                                   std::to_string(report.formulas.conic));
  return report;
}

namespace {

std::string segre3_text(const Segre3Report& rep, Window w) {
  std::ostringstream out;
  const auto& p = rep.params;
  out << "segre3 m=" << p.m << " n=" << p.n << " p=" << p.p << "\n";
  out << "computed window: [" << -rep.window << "," << rep.window << "]^2\n";
  out << "CM classes: " << rep.cmCount << " (formula " << rep.formulas.cm << ")\n";
  out << "conic classes: " << rep.conicCount << " (formula " << rep.formulas.conic << ")\n";
  out << "CM but not conic: " << rep.cmCount - rep.conicCount << "\n";
  out << "generic enumerator cross-check: " << (rep.genericChecked ? "done" : "skipped") << "\n";
  out << "case tallies (computed/formula):";
  for (int c = 0; c < 6; ++c) out << ' ' << c + 1 << ':' << rep.caseTallies[c] << '/' << rep.formulas.regionCounts[c];
  out << "\n\nregion map (C conic, M CM not conic, . not CM), rows j, columns i\n";
  std::map<std::pair<std::int64_t, std::int64_t>, char> cells;
  for (const auto& r : rep.records) cells[{r.label.i, r.label.j}] = cell(r.cm, r.conic);
  out << "     i";
  for (std::int64_t i = w.lo; i <= w.hi; ++i) out << std::setw(4) << i;
  out << "\n   j\n";
  for (std::int64_t j = w.hi; j >= w.lo; --j) {
    out << std::setw(4) << j << "  ";
    for (std::int64_t i = w.lo; i <= w.hi; ++i) out << "   " << cells[{i, j}];
    out << "\n";
  }
  out << "\nclasses\n";
  out << "     i     j  cm     conic  pairing  a1  r1  a2  r2  serre\n";
  for (const auto& r : rep.records) {
    if (r.label.i < w.lo || r.label.i > w.hi || r.label.j < w.lo || r.label.j > w.hi) continue;
    out << std::setw(6) << r.label.i << std::setw(6) << r.label.j << "  " << std::left << std::setw(7)
        << (r.cm ? "CM" : "NotCM") << std::setw(7) << (r.conic ? "yes" : "no");
    if (r.certificate) {
      const auto& e = r.certificate->evaluation;
      out << std::setw(9) << r.certificate->pairing << std::right << std::setw(3) << e.a1 << std::setw(4) << e.r1
          << std::setw(4) << e.a2 << std::setw(4) << e.r2;
    } else {
      out << std::setw(9) << "-" << std::right << std::setw(3) << "-" << std::setw(4) << "-" << std::setw(4) << "-"
          << std::setw(4) << "-";
    }
    out << std::right << "  ";
    if (r.serre)
      out << "mu>=" << r.serre->muLowerBound << ">e=" << r.serre->ringMultiplicity;
    else
      out << "-";
    out << "\n";
  }
  out << "\ndiscrepancies:";
  if (rep.discrepancies.empty()) out << " none";
  out << "\n";
  for (const auto& d : rep.discrepancies) out << "  " << d << "\n";
  return out.str();
}

std::string segre3_csv(const Segre3Report& rep, Window w) {
  std::ostringstream out;
  out << "i,j,cm,conic,pairing,a1,r1,a2,r2\n";
  for (const auto& r : rep.records) {
    if (r.label.i < w.lo || r.label.i > w.hi || r.label.j < w.lo || r.label.j > w.hi) continue;
    out << r.label.i << ',' << r.label.j << ',' << (r.cm ? "CM" : "NotCM") << ',' << (r.conic ? "true" : "false")
        << ',';
    if (r.certificate) {
      const auto& e = r.certificate->evaluation;
      out << r.certificate->pairing << ',' << e.a1 << ',' << e.r1 << ',' << e.a2 << ',' << e.r2;
    } else {
      out << (r.serre ? "serre" : "none") << ",,,,";
    }
    out << '\n';
  }
  return out.str();
}

std::string segre3_json(const Segre3Report& rep, Window w) {
  json j;
  j["family"] = "segre3";
  j["params"] = {{"m", rep.params.m}, {"n", rep.params.n}, {"p", rep.params.p}};
  j["window"] = {{"computed", {-rep.window, rep.window}}, {"displayed", {w.lo, w.hi}}};
  j["counts"] = {{"cm", rep.cmCount}, {"conic", rep.conicCount}, {"cmNotConic", rep.cmCount - rep.conicCount}};
  json tallies = json::array();
  for (int c = 0; c < 6; ++c)
    tallies.push_back({{"case", c + 1},
                       {"computed", rep.caseTallies[c]},
                       {"formula", rep.formulas.regionCounts[c]},
                       {"agree", rep.caseTallies[c] == rep.formulas.regionCounts[c]}});
  j["formulas"] = {{"cm", rep.formulas.cm},
                   {"conic", rep.formulas.conic},
                   {"cmAgrees", static_cast<std::int64_t>(rep.cmCount) == rep.formulas.cm},
                   {"conicAgrees", static_cast<std::int64_t>(rep.conicCount) == rep.formulas.conic},
                   {"caseTallies", tallies}};
  j["genericCrossCheck"] = rep.genericChecked;
  json classes = json::array();
  for (const auto& r : rep.records) {
    if (r.label.i < w.lo || r.label.i > w.hi || r.label.j < w.lo || r.label.j > w.hi) continue;
    classes.push_back({{"i", r.label.i},
                       {"j", r.label.j},
                       {"cm", r.cm ? "CM" : "NotCM"},
                       {"conic", r.conic},
                       {"certificate", certificate_json(r.certificate)},
                       {"serre", serre_json(r.serre)}});
  }
  j["classes"] = classes;
  j["discrepancies"] = rep.discrepancies;
  return j.dump(2) + "\n";
}

std::string segre3_svg(const Segre3Report& rep, Window w) {
  const int cols = static_cast<int>(w.hi - w.lo + 1);
  const int left = 40, top = 30;
  const int width = left + cols * kCell + 150, height = top + cols * kCell + 40;
  std::ostringstream out;
  out << svg_header(width, height);
  out << "<text x=\"" << left << "\" y=\"14\">segre3 " << rep.params.to_string() << ": " << rep.cmCount << " CM, "
      << rep.conicCount << " conic</text>\n";
  std::map<std::pair<std::int64_t, std::int64_t>, char> cells;
  for (const auto& r : rep.records) cells[{r.label.i, r.label.j}] = cell(r.cm, r.conic);
  for (std::int64_t j = w.hi; j >= w.lo; --j) {
    const int y = top + static_cast<int>(w.hi - j) * kCell;
    out << "<text x=\"" << left - 4 << "\" y=\"" << y + 11 << "\" text-anchor=\"end\">" << j << "</text>\n";
    for (std::int64_t i = w.lo; i <= w.hi; ++i) {
      const int x = left + static_cast<int>(i - w.lo) * kCell;
      out << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << kCell - 1 << "\" height=\"" << kCell - 1
          << "\" fill=\"" << cell_color(cells[{i, j}]) << "\"/>\n";
    }
  }
  const int axisY = top + cols * kCell + 12;
  for (std::int64_t i = w.lo; i <= w.hi; ++i)
    out << "<text x=\"" << left + static_cast<int>(i - w.lo) * kCell + kCell / 2 << "\" y=\"" << axisY
        << "\" text-anchor=\"middle\">" << i << "</text>\n";
  out << "<text x=\"" << left + cols * kCell / 2 << "\" y=\"" << axisY + 14 << "\" text-anchor=\"middle\">i</text>\n";
  out << "<text x=\"10\" y=\"" << top + cols * kCell / 2 << "\">j</text>\n";
  out << svg_legend(left + cols * kCell + 16, top);
  out << "</svg>\n";
  return out.str();
}

}  // namespace

std::string render(const Segre3Report& report, Format format, std::optional<Window> display) {
  const Window w = clamp({-report.window, report.window}, display);
  switch (format) {
    case Format::Text: return segre3_text(report, w);
    case Format::Csv: return segre3_csv(report, w);
    case Format::Json: return segre3_json(report, w);
    case Format::Svg: return segre3_svg(report, w);
  }
  throw std::logic_error("unreachable format");
}

// ---------------------------------------------------------------- veronese2

Veronese2Report veronese2_report(const Veronese2Params& params) {
  params.validate();
  Veronese2Report rep;
  rep.params = params;
  const auto [lo, hi] = veronese2_window(params);
  rep.window = {lo, hi};
  rep.bezout = bezout_pair(params.c, params.d);
  rep.cmSet = cm_set_veronese2(params);
  rep.conic = conic_set_veronese2(params);
  rep.formulas = count_formulas(params);
  rep.guaranteed = {-static_cast<std::int64_t>(params.d) * params.m + 1,
                    static_cast<std::int64_t>(params.c) * params.n - 1};
  for (std::int64_t i = lo; i <= hi; ++i) {
    const Veronese2Classification cls = classify_veronese2(params, i);
    Veronese2Record r;
    r.label = i;
    r.cm = cls.decision.isCM;
    r.conic = std::binary_search(rep.conic.generic.begin(), rep.conic.generic.end(), i);
    r.inequalities = cls.inequalities;
    r.formulaLevel = cls.decision.formulaLevel;
    if (r.conic && !r.cm)
      throw InvariantViolation("veronese2 " + params.to_string() + " class " + std::to_string(i) +
                               " is conic but not CM");
    rep.records.push_back(r);
  }
  for (std::int64_t i : rep.cmSet)
    if (i < rep.guaranteed.lo || i > rep.guaranteed.hi) rep.cmOutsideGuaranteed.push_back(i);
  for (std::int64_t i = rep.guaranteed.lo; i <= rep.guaranteed.hi; ++i)
    if (!std::binary_search(rep.cmSet.begin(), rep.cmSet.end(), i))
      rep.discrepancies.push_back("class " + std::to_string(i) + " in the guaranteed range is not CM");
  rep.discrepancies.insert(rep.discrepancies.end(), rep.conic.discrepancies.begin(), rep.conic.discrepancies.end());
  return rep;
}

namespace {

std::string veronese2_text(const Veronese2Report& rep, Window w) {
  std::ostringstream out;
  const auto& p = rep.params;
  out << "veronese2 m=" << p.m << " n=" << p.n << " c=" << p.c << " d=" << p.d << "\n";
  out << "bezout pair: u=" << rep.bezout.u << " v=" << rep.bezout.v << "\n";
  out << "computed window: [" << rep.window.lo << "," << rep.window.hi << "]\n";
  if (p.m == 1 || p.n == 1) out << "verdicts are formula-level (no criterion cross-check)\n";
  for (const auto& warning : rep.conic.warnings) out << "warning: " << warning << "\n";
  out << "CM set: " << set_text(rep.cmSet) << " (" << rep.cmSet.size() << " classes)\n";
  out << "guaranteed CM range: [" << rep.guaranteed.lo << "," << rep.guaranteed.hi << "], lower bound "
      << rep.formulas.cmLowerBound << "\n";
  out << "CM outside the guaranteed range: " << set_text(rep.cmOutsideGuaranteed) << "\n";
  out << "conic set (enumerated): " << set_text(rep.conic.generic) << " (" << rep.conic.generic.size()
      << " classes)\n";
  out << "conic set (parameterization): " << set_text(rep.conic.parameterization) << " from "
      << rep.conic.parameterizationPairs << " pairs\n";
  out << "conic interval -dm<k<cn: " << set_text(rep.conic.interval) << "\n";
  out << "conic formula m+n+c+d-3: " << rep.conic.formula << " ("
      << (rep.conic.formula == static_cast<std::int64_t>(rep.conic.generic.size()) ? "agrees" : "disagrees")
      << ", equality case " << (rep.conic.equalityCase ? "yes" : "no") << ")\n";
  out << "\nclasses\n";
  out << "     i  cm     conic  lhs1  rhs1  lhs2  rhs2\n";
  for (const auto& r : rep.records) {
    if (r.label < w.lo || r.label > w.hi) continue;
    out << std::setw(6) << r.label << "  " << std::left << std::setw(7) << (r.cm ? "CM" : "NotCM") << std::setw(5)
        << (r.conic ? "yes" : "no") << std::right << std::setw(6) << r.inequalities.lhs1 << std::setw(6)
        << r.inequalities.rhs1 << std::setw(6) << r.inequalities.lhs2 << std::setw(6) << r.inequalities.rhs2
        << "\n";
  }
  out << "\ndiscrepancies:";
  if (rep.discrepancies.empty()) out << " none";
  out << "\n";
  for (const auto& d : rep.discrepancies) out << "  " << d << "\n";
  return out.str();
}

std::string veronese2_csv(const Veronese2Report& rep, Window w) {
  std::ostringstream out;
  out << "i,cm,conic,lhs1,rhs1,lhs2,rhs2\n";
  for (const auto& r : rep.records) {
    if (r.label < w.lo || r.label > w.hi) continue;
    out << r.label << ',' << (r.cm ? "CM" : "NotCM") << ',' << (r.conic ? "true" : "false") << ','
        << r.inequalities.lhs1 << ',' << r.inequalities.rhs1 << ',' << r.inequalities.lhs2 << ','
        << r.inequalities.rhs2 << '\n';
  }
  return out.str();
}

std::string veronese2_json(const Veronese2Report& rep, Window w) {
  json j;
  j["family"] = "veronese2";
  j["params"] = {{"m", rep.params.m}, {"n", rep.params.n}, {"c", rep.params.c}, {"d", rep.params.d}};
  j["bezout"] = {{"u", rep.bezout.u}, {"v", rep.bezout.v}};
  j["window"] = {{"computed", {rep.window.lo, rep.window.hi}}, {"displayed", {w.lo, w.hi}}};
  j["formulaLevel"] = rep.params.m == 1 || rep.params.n == 1;
  j["counts"] = {{"cm", rep.cmSet.size()}, {"conic", rep.conic.generic.size()}};
  j["sets"] = {{"cm", rep.cmSet},
               {"cmOutsideGuaranteed", rep.cmOutsideGuaranteed},
               {"conicEnumerated", rep.conic.generic},
               {"conicParameterization", rep.conic.parameterization},
               {"conicInterval", rep.conic.interval}};
  j["formulas"] = {
      {"conic", rep.conic.formula},
      {"conicAgrees", rep.conic.formula == static_cast<std::int64_t>(rep.conic.generic.size())},
      {"equalityCase", rep.conic.equalityCase},
      {"cmLowerBound", rep.formulas.cmLowerBound},
      {"guaranteedRange", {rep.guaranteed.lo, rep.guaranteed.hi}},
      {"parameterizationPairs", rep.conic.parameterizationPairs}};
  json classes = json::array();
  for (const auto& r : rep.records) {
    if (r.label < w.lo || r.label > w.hi) continue;
    classes.push_back({{"i", r.label},
                       {"cm", r.cm ? "CM" : "NotCM"},
                       {"conic", r.conic},
                       {"lhs1", r.inequalities.lhs1},
                       {"rhs1", r.inequalities.rhs1},
                       {"lhs2", r.inequalities.lhs2},
                       {"rhs2", r.inequalities.rhs2},
                       {"formulaLevel", r.formulaLevel}});
  }
  j["classes"] = classes;
  j["warnings"] = rep.conic.warnings;
  j["discrepancies"] = rep.discrepancies;
  return j.dump(2) + "\n";
}

std::string veronese2_svg(const Veronese2Report& rep, Window w) {
  const int cols = static_cast<int>(w.hi - w.lo + 1);
  const int left = 20, top = 30;
  const int width = std::max(left + cols * kCell + 20, 260), height = top + kCell + 30 + 50;
  std::ostringstream out;
  out << svg_header(width, height);
  out << "<text x=\"" << left << "\" y=\"14\">veronese2 " << rep.params.to_string() << ": " << rep.cmSet.size()
      << " CM, " << rep.conic.generic.size() << " conic</text>\n";
  for (const auto& r : rep.records) {
    if (r.label < w.lo || r.label > w.hi) continue;
    const int x = left + static_cast<int>(r.label - w.lo) * kCell;
    out << "<rect x=\"" << x << "\" y=\"" << top << "\" width=\"" << kCell - 1 << "\" height=\"" << kCell - 1
        << "\" fill=\"" << cell_color(cell(r.cm, r.conic)) << "\"/>\n";
    out << "<text x=\"" << x + kCell / 2 << "\" y=\"" << top + kCell + 11 << "\" text-anchor=\"middle\">" << r.label
        << "</text>\n";
  }
  out << svg_legend(left, top + kCell + 24);
  out << "</svg>\n";
  return out.str();
}

}  // namespace

std::string render(const Veronese2Report& report, Format format, std::optional<Window> display) {
  const Window w = clamp(report.window, display);
  switch (format) {
    case Format::Text: return veronese2_text(report, w);
    case Format::Csv: return veronese2_csv(report, w);
    case Format::Json: return veronese2_json(report, w);
    case Format::Svg: return veronese2_svg(report, w);
  }
  throw std::logic_error("unreachable format");
}

// ---------------------------------------------------------------- hilbert

HilbertReport hilbert_report(const std::string& text, std::optional<Window> range) {
  const GradedModuleExpr expr = parse_expr(text);
  HilbertReport rep;
  rep.expression = expr.to_string();
  rep.series = series_of(expr);
  if (!rep.series.is_zero()) {
    rep.a = a_invariant(rep.series);
    rep.r = initial_degree(rep.series);
  }
  if (rep.series.pole_order() > 0) rep.e = multiplicity(rep.series);
  try {
    rep.cm = is_cm_expr(expr) ? "CM" : "NotCM";
  } catch (const UndecidableError&) {
    rep.cm = "undecidable";
  }
  rep.range = range ? *range : Window{rep.r.value_or(0), rep.r.value_or(0) + 9};
  rep.coefficients = coefficients(rep.series, rep.range.lo, rep.range.hi);
  return rep;
}

std::string render(const HilbertReport& rep, Format format) {
  std::ostringstream out;
  switch (format) {
    case Format::Text: {
      out << "expression: " << rep.expression << "\n";
      out << "series: " << rep.series.to_string() << "\n";
      out << "a = " << (rep.a ? std::to_string(*rep.a) : "undefined") << "\n";
      out << "r = " << (rep.r ? std::to_string(*rep.r) : "undefined") << "\n";
      out << "e = " << (rep.e ? rep.e->get_str() : "undefined") << "\n";
      out << "cm: " << rep.cm << "\n";
      out << "coefficients t^" << rep.range.lo << "..t^" << rep.range.hi << ":";
      for (const auto& c : rep.coefficients) out << ' ' << c.get_str();
      out << "\n";
      return out.str();
    }
    case Format::Csv: {
      out << "k,coefficient\n";
      for (std::size_t k = 0; k < rep.coefficients.size(); ++k)
        out << rep.range.lo + static_cast<std::int64_t>(k) << ',' << rep.coefficients[k].get_str() << '\n';
      return out.str();
    }
    case Format::Json: {
      json j;
      j["expression"] = rep.expression;
      j["series"] = rep.series.to_string();
      j["a"] = rep.a ? json(*rep.a) : json(nullptr);
      j["r"] = rep.r ? json(*rep.r) : json(nullptr);
      j["e"] = rep.e ? json(rep.e->get_str()) : json(nullptr);
      j["cm"] = rep.cm;
      json coeffs = json::array();
      for (std::size_t k = 0; k < rep.coefficients.size(); ++k)
        coeffs.push_back({{"k", rep.range.lo + static_cast<std::int64_t>(k)}, {"value", rep.coefficients[k].get_str()}});
      j["coefficients"] = coeffs;
      return j.dump(2) + "\n";
    }
    case Format::Svg: throw std::invalid_argument("svg output is only available for region maps");
  }
  throw std::logic_error("unreachable format");
}

}  // namespace cmclass
