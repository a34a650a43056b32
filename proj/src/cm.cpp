#include "cmclass/cm.hpp"

#include <numeric>
#include <stdexcept>

#include "cmclass/errors.hpp"
#include "cmclass/intmath.hpp"
#include "cmclass/parallel.hpp"

namespace cmclass {

void Segre3Params::validate() const {
  if (m < 2 || n < 2 || p < 2) throw std::invalid_argument("segre3 needs m, n, p >= 2, got " + to_string());
}

std::string Segre3Params::to_string() const {
  return "(" + std::to_string(m) + "," + std::to_string(n) + "," + std::to_string(p) + ")";
}

void Veronese2Params::validate() const {
  if (m < 1 || n < 1 || c < 1 || d < 1)
    throw std::invalid_argument("veronese2 needs m, n, c, d >= 1, got " + to_string());
  if (std::gcd(c, d) != 1) throw std::invalid_argument("veronese2 needs gcd(c, d) = 1, got " + to_string());
}

std::string Veronese2Params::to_string() const {
  return "(" + std::to_string(m) + "," + std::to_string(n) + "," + std::to_string(c) + "," + std::to_string(d) + ")";
}

bool bruns_guerrieri(int m, int n, std::int64_t i) { return -(m - 1) <= i && i <= n - 1; }

bool is_cm_expr(const GradedModuleExpr& expr) {
  if (std::holds_alternative<PolyRingNode>(expr.node())) return true;
  if (const auto* s = std::get_if<ShiftNode>(&expr.node())) return is_cm_expr(*s->child);
  if (const auto* v = std::get_if<VeroneseNode>(&expr.node())) {
    // Veronese modules of a shifted polynomial ring are direct summands of it.
    if (as_shifted_poly_ring(*v->child)) return true;
    throw UndecidableError("undecidable by built-in criteria: " + expr.to_string());
  }
  const auto& sg = std::get<SegreNode>(expr.node());
  const auto left = as_shifted_poly_ring(*sg.left);
  const auto right = as_shifted_poly_ring(*sg.right);
  if (!left || !right) throw UndecidableError("undecidable by built-in criteria: " + expr.to_string());
  // left # right = (R1 # R2(-i))(-s1) with relative shift i.
  const std::int64_t i = right->shift - left->shift;
  if (left->vars >= 2 && right->vars >= 2) return bruns_guerrieri(left->vars, right->vars, i);
  if (left->vars == 1 && right->vars == 1) return true;
  // One side is K[X]: the product is the other ring, truncated below when i < 0.
  if (left->vars == 1) return i >= 0;
  return i <= 0;
}

BezoutPair bezout_pair(std::int64_t c, std::int64_t d) {
  if (c < 1 || d < 1 || std::gcd(c, d) != 1)
    throw std::invalid_argument("bezout_pair needs coprime c, d >= 1");
  for (std::int64_t v = 1;; ++v) {
    if ((1 + d * v) % c == 0) return {(1 + d * v) / c, v};
  }
}

std::string to_string(SVVerdict verdict) {
  switch (verdict) {
    case SVVerdict::CM:
      return "CM";
    case SVVerdict::NotCM:
      return "NotCM";
    case SVVerdict::Inapplicable:
      break;
  }
  return "Inapplicable";
}

SVEvaluation sv_test(const GradedModuleExpr& m1, const GradedModuleExpr& m2) {
  SVEvaluation ev;
  ev.factor1CM = is_cm_expr(m1);
  ev.factor2CM = is_cm_expr(m2);
  ev.dim1 = m1.krull_dim();
  ev.dim2 = m2.krull_dim();
  const HilbertSeries h1 = series_of(m1);
  const HilbertSeries h2 = series_of(m2);
  ev.a1 = a_invariant(h1);
  ev.r1 = initial_degree(h1);
  ev.a2 = a_invariant(h2);
  ev.r2 = initial_degree(h2);
  ev.ineq1 = ev.a1 + 1 <= ev.r2;
  ev.ineq2 = ev.a2 + 1 <= ev.r1;
  ev.applicable = ev.factor1CM && ev.factor2CM && ev.dim1 >= 2 && ev.dim2 >= 2;
  if (ev.applicable) ev.verdict = (ev.ineq1 && ev.ineq2) ? SVVerdict::CM : SVVerdict::NotCM;
  return ev;
}

const Certificate* CMDecision::deciding_certificate() const {
  const SVVerdict wanted = isCM ? SVVerdict::CM : SVVerdict::NotCM;
  for (const auto& c : certificates)
    if (c.evaluation.applicable && c.evaluation.verdict == wanted) return &c;
  return nullptr;
}

namespace {

CMDecision decide(std::vector<Certificate> certificates) {
  CMDecision out;
  out.certificates = std::move(certificates);
  bool sawCM = false;
  bool sawNotCM = false;
  for (const auto& c : out.certificates) {
    if (!c.evaluation.applicable) continue;
    (c.evaluation.verdict == SVVerdict::CM ? sawCM : sawNotCM) = true;
  }
  out.isCM = sawCM;
  out.consistent = !(sawCM && sawNotCM);
  return out;
}

}  // namespace

CMDecision classify_segre3(const Segre3Params& params, std::int64_t i, std::int64_t j) {
  params.validate();
  const auto r1 = poly(params.m);
  const auto r2 = poly(params.n);
  const auto r3 = poly(params.p);
  std::vector<Certificate> certs;
  certs.push_back({"A", sv_test(segre(r1, shift(r2, i)), shift(r3, j))});
  certs.push_back({"B", sv_test(segre(r1, shift(r3, j)), shift(r2, i))});
  certs.push_back({"C", sv_test(r1, shift(segre(r2, shift(r3, j - i)), i))});
  CMDecision out = decide(std::move(certs));
  if (!out.consistent)
    throw InconsistencyError("segre3 " + params.to_string() + " class (" + std::to_string(i) + "," +
                             std::to_string(j) + "): applicable pairings disagree");
  return out;
}

CeilingInequalities veronese2_inequalities(const Veronese2Params& params, const BezoutPair& uv, std::int64_t i) {
  const std::int64_t m = params.m, n = params.n, c = params.c, d = params.d;
  CeilingInequalities q;
  q.lhs1 = -ceil_div(m - uv.v * i, c) + 1;
  q.rhs1 = ceil_div(uv.u * i, d);
  q.lhs2 = -ceil_div(n - uv.u * i, d) + 1;
  q.rhs2 = ceil_div(uv.v * i, c);
  return q;
}

Veronese2Classification classify_veronese2(const Veronese2Params& params, std::int64_t i) {
  params.validate();
  Veronese2Classification out;
  out.bezout = bezout_pair(params.c, params.d);
  out.inequalities = veronese2_inequalities(params, out.bezout, i);
  out.decision.isCM = out.inequalities.holds();
  if (params.m >= 2 && params.n >= 2) {
    const auto m1 = veronese(shift(poly(params.m), out.bezout.v * i), params.c);
    const auto m2 = veronese(shift(poly(params.n), out.bezout.u * i), params.d);
    Certificate cert{"SV", sv_test(m1, m2)};
    const bool engineCM = cert.evaluation.verdict == SVVerdict::CM;
    if (!cert.evaluation.applicable || engineCM != out.decision.isCM ||
        cert.evaluation.ineq1 != out.inequalities.holds1() || cert.evaluation.ineq2 != out.inequalities.holds2())
      throw InconsistencyError("veronese2 " + params.to_string() + " class " + std::to_string(i) +
                               ": closed-form inequalities disagree with the series engine");
    out.decision.certificates.push_back(std::move(cert));
  } else {
    out.decision.formulaLevel = true;
  }
  return out;
}

std::int64_t segre3_window(const Segre3Params& params) { return params.m + params.n + params.p; }

std::pair<std::int64_t, std::int64_t> veronese2_window(const Veronese2Params& params) {
  const std::int64_t cd = static_cast<std::int64_t>(params.c) * params.d;
  return {-static_cast<std::int64_t>(params.d) * params.m - cd, static_cast<std::int64_t>(params.c) * params.n + cd};
}

Segre3Sweep sweep_segre3(const Segre3Params& params, unsigned threads) {
  params.validate();
  Segre3Sweep sweep;
  sweep.params = params;
  sweep.window = segre3_window(params);
  const std::int64_t w = sweep.window;
  for (std::int64_t i = -w; i <= w; ++i)
    for (std::int64_t j = -w; j <= w; ++j) sweep.labels.push_back({i, j});
  sweep.decisions.resize(sweep.labels.size());
  parallel_for(sweep.labels.size(), threads, [&](std::size_t k) {
    sweep.decisions[k] = classify_segre3(params, sweep.labels[k].i, sweep.labels[k].j);
  });
  return sweep;
}

std::vector<Label2> cm_region_from_sweep(const Segre3Sweep& sweep) {
  std::vector<Label2> out;
  const std::int64_t w = sweep.window;
  for (std::size_t k = 0; k < sweep.labels.size(); ++k) {
    if (!sweep.decisions[k].isCM) continue;
    const Label2 l = sweep.labels[k];
    if (l.i == -w || l.i == w || l.j == -w || l.j == w)
      throw InconsistencyError("segre3 " + sweep.params.to_string() + ": CM class on the window boundary");
    out.push_back(l);
  }
  return out;
}

std::vector<Label2> cm_region_segre3(const Segre3Params& params, unsigned threads) {
  return cm_region_from_sweep(sweep_segre3(params, threads));
}

std::vector<std::int64_t> cm_set_veronese2(const Veronese2Params& params) {
  params.validate();
  const auto [lo, hi] = veronese2_window(params);
  std::vector<std::int64_t> out;
  for (std::int64_t i = lo; i <= hi; ++i)
    if (classify_veronese2(params, i).decision.isCM) out.push_back(i);
  return out;
}

Segre3Formulas count_formulas(const Segre3Params& params) {
  const std::int64_t m = params.m, n = params.n, p = params.p;
  Segre3Formulas f;
  f.cm = (m * m + n * n + p * p) + (m * n + m * p + n * p) - 2 * (m + n + p) + 1;
  f.conic = (m * n + m * p + n * p) - (m + n + p) + 1;
  f.regionCounts = {
      p * n + (p - n) * (p - n + 1) / 2,
      p * (n - 1),
      n * (m - 1) + (n - m) * (n - m + 1) / 2,
      n * (m - 1),
      m * (p - 1),
      (m - 1) * (p - 1) + (p - m - 1) * (p - m) / 2,
  };
  return f;
}

Veronese2Formulas count_formulas(const Veronese2Params& params) {
  const std::int64_t m = params.m, n = params.n, c = params.c, d = params.d;
  return {m + n + c + d - 3, d * m + c * n - 1};
}

int segre3_case(std::int64_t i, std::int64_t j) {
  if (i >= 0) {
    if (j >= i) return 1;
    if (j >= 0) return 2;
    return 3;
  }
  if (j <= i) return 4;
  if (j <= 0) return 5;
  return 6;
}

std::array<std::int64_t, 6> case_tallies(const std::vector<Label2>& labels) {
  std::array<std::int64_t, 6> out{};
  for (const auto& l : labels) ++out[static_cast<std::size_t>(segre3_case(l.i, l.j) - 1)];
  return out;
}

}  // namespace cmclass
