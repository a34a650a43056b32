#include "cmclass/fourier_motzkin.hpp"

#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace cmclass {
namespace {

struct Tightest {
  mpq_class bound;
  bool strict;
};

using Reduced = std::map<std::vector<mpq_class>, Tightest>;

// Scales so the first nonzero coefficient is +-1 and keeps the tightest bound
// per direction. Returns false if a constant row is violated.
bool absorb(Reduced& into, LinearConstraint row) {
  std::size_t lead = 0;
  while (lead < row.coeffs.size() && row.coeffs[lead] == 0) ++lead;
  if (lead == row.coeffs.size()) return row.strict ? 0 < row.bound : 0 <= row.bound;
  const mpq_class scale = abs(row.coeffs[lead]);
  if (scale != 1) {
    for (auto& c : row.coeffs) c /= scale;
    row.bound /= scale;
  }
  auto [it, inserted] = into.try_emplace(std::move(row.coeffs), Tightest{row.bound, row.strict});
  if (!inserted) {
    Tightest& t = it->second;
    if (row.bound < t.bound || (row.bound == t.bound && row.strict && !t.strict)) t = {row.bound, row.strict};
  }
  return true;
}

std::vector<LinearConstraint> flatten(Reduced&& reduced) {
  std::vector<LinearConstraint> out;
  out.reserve(reduced.size());
  for (auto& [coeffs, t] : reduced) out.push_back({coeffs, t.bound, t.strict});
  return out;
}

// Variable whose elimination creates the fewest rows, or vars if none remain.
std::size_t pick_variable(const std::vector<LinearConstraint>& rows, std::size_t vars) {
  std::size_t best = vars;
  long bestCost = 0;
  for (std::size_t v = 0; v < vars; ++v) {
    long pos = 0, neg = 0;
    for (const auto& r : rows) {
      const int s = sgn(r.coeffs[v]);
      pos += s > 0;
      neg += s < 0;
    }
    if (pos + neg == 0) continue;
    const long cost = pos * neg - pos - neg;
    if (best == vars || cost < bestCost) {
      best = v;
      bestCost = cost;
    }
  }
  return best;
}

// Eliminates `v`; returns nullopt when a constant row becomes infeasible.
std::optional<std::vector<LinearConstraint>> eliminate(const std::vector<LinearConstraint>& rows, std::size_t v) {
  Reduced next;
  std::vector<const LinearConstraint*> upper, lower;
  for (const auto& r : rows) {
    const int s = sgn(r.coeffs[v]);
    if (s > 0)
      upper.push_back(&r);
    else if (s < 0)
      lower.push_back(&r);
    else if (!absorb(next, r))
      return std::nullopt;
  }
  for (const auto* u : upper)
    for (const auto* l : lower) {
      const mpq_class su = 1 / u->coeffs[v];
      const mpq_class sl = -1 / l->coeffs[v];
      LinearConstraint combined;
      combined.coeffs.resize(u->coeffs.size());
      for (std::size_t k = 0; k < combined.coeffs.size(); ++k)
        combined.coeffs[k] = u->coeffs[k] * su + l->coeffs[k] * sl;
      combined.coeffs[v] = 0;
      combined.bound = u->bound * su + l->bound * sl;
      combined.strict = u->strict || l->strict;
      if (!absorb(next, std::move(combined))) return std::nullopt;
    }
  return flatten(std::move(next));
}

struct Stage {
  std::size_t variable;
  std::vector<LinearConstraint> rows;
};

// Runs the elimination; fills `stages` with the system seen by each variable.
bool run(std::span<const LinearConstraint> constraints, std::size_t vars, std::vector<Stage>* stages) {
  Reduced initial;
  for (const auto& c : constraints) {
    if (c.coeffs.size() != vars) throw std::invalid_argument("constraint width does not match variable count");
    if (!absorb(initial, c)) return false;
  }
  std::vector<LinearConstraint> rows = flatten(std::move(initial));
  for (;;) {
    const std::size_t v = pick_variable(rows, vars);
    if (v == vars) return true;
    auto next = eliminate(rows, v);
    if (stages) stages->push_back({v, std::move(rows)});
    if (!next) return false;
    rows = std::move(*next);
  }
}


// Integer-row elimination for the feasibility question.
struct Overflow {};

struct Checked {
  using T = std::int64_t;
  static T mul(T a, T b) {
    T r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  static T add(T a, T b) {
    T r;
    if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  static T gcd(T a, T b) { return std::gcd(a, b); }
  static int sign(T a) { return (a > 0) - (a < 0); }
  static T div(T a, T b) { return a / b; }
};

struct Big {
  using T = mpz_class;
  static T mul(const T& a, const T& b) { return a * b; }
  static T add(const T& a, const T& b) { return a + b; }
  static T gcd(const T& a, const T& b) { return ::gcd(a, b); }
  static int sign(const T& a) { return sgn(a); }
  static T div(const T& a, const T& b) { return a / b; }
};

template <class A>
struct IntRow {
  std::vector<typename A::T> coeffs;
  typename A::T bound;
  bool strict;
};

// Key: primitive coefficient vector. Value: bound num/den (den > 0) and strictness.
template <class A>
struct IntBound {
  typename A::T num;
  typename A::T den;
  bool strict;
};

template <class A>
using IntReduced = std::map<std::vector<typename A::T>, IntBound<A>>;

template <class A>
bool int_absorb(IntReduced<A>& into, IntRow<A> row) {
  using T = typename A::T;
  T g = 0;
  for (const auto& c : row.coeffs) g = A::gcd(g, c);
  if (g == 0) return row.strict ? A::sign(row.bound) > 0 : A::sign(row.bound) >= 0;
  for (auto& c : row.coeffs) c = A::div(c, g);
  const T r = A::gcd(g, row.bound);
  IntBound<A> b{A::div(row.bound, r), A::div(g, r), row.strict};
  auto [it, inserted] = into.try_emplace(std::move(row.coeffs), b);
  if (!inserted) {
    auto& t = it->second;
    const T lhs = A::mul(b.num, t.den), rhs = A::mul(t.num, b.den);
    if (lhs < rhs || (lhs == rhs && b.strict && !t.strict)) t = b;
  }
  return true;
}

template <class A>
std::vector<IntRow<A>> int_flatten(IntReduced<A>&& reduced) {
  std::vector<IntRow<A>> out;
  out.reserve(reduced.size());
  for (auto& [coeffs, t] : reduced) {
    IntRow<A> row{coeffs, t.num, t.strict};
    if (t.den != 1)
      for (auto& c : row.coeffs) c = A::mul(c, t.den);
    out.push_back(std::move(row));
  }
  return out;
}

template <class A>
bool int_feasible(const std::vector<IntRow<A>>& input, std::size_t vars) {
  IntReduced<A> initial;
  for (const auto& r : input)
    if (!int_absorb<A>(initial, r)) return false;
  auto rows = int_flatten<A>(std::move(initial));
  for (;;) {
    std::size_t best = vars;
    long bestCost = 0;
    for (std::size_t v = 0; v < vars; ++v) {
      long pos = 0, neg = 0;
      for (const auto& r : rows) {
        const int s = A::sign(r.coeffs[v]);
        pos += s > 0;
        neg += s < 0;
      }
      if (pos + neg == 0) continue;
      const long cost = pos * neg - pos - neg;
      if (best == vars || cost < bestCost) {
        best = v;
        bestCost = cost;
      }
    }
    if (best == vars) return true;
    const std::size_t v = best;
    IntReduced<A> next;
    std::vector<const IntRow<A>*> upper, lower;
    for (const auto& r : rows) {
      const int s = A::sign(r.coeffs[v]);
      if (s > 0)
        upper.push_back(&r);
      else if (s < 0)
        lower.push_back(&r);
      else if (!int_absorb<A>(next, r))
        return false;
    }
    for (const auto* u : upper)
      for (const auto* l : lower) {
        const auto su = -l->coeffs[v];
        const auto sl = u->coeffs[v];
        IntRow<A> combined{std::vector<typename A::T>(vars), A::add(A::mul(u->bound, su), A::mul(l->bound, sl)),
                           u->strict || l->strict};
        for (std::size_t k = 0; k < vars; ++k)
          if (k != v) combined.coeffs[k] = A::add(A::mul(u->coeffs[k], su), A::mul(l->coeffs[k], sl));
        if (!int_absorb<A>(next, std::move(combined))) return false;
      }
    rows = int_flatten<A>(std::move(next));
  }
}

// Clears denominators row by row.
std::vector<IntRow<Big>> to_integer_rows(std::span<const LinearConstraint> constraints, std::size_t vars) {
  std::vector<IntRow<Big>> out;
  out.reserve(constraints.size());
  for (const auto& c : constraints) {
    if (c.coeffs.size() != vars) throw std::invalid_argument("constraint width does not match variable count");
    mpz_class l = c.bound.get_den();
    for (const auto& q : c.coeffs)
      if (q.get_den() != 1) l = lcm(l, q.get_den());
    IntRow<Big> row{std::vector<mpz_class>(vars), mpz_class(c.bound * l), c.strict};
    for (std::size_t k = 0; k < vars; ++k) row.coeffs[k] = mpz_class(c.coeffs[k] * l);
    out.push_back(std::move(row));
  }
  return out;
}

std::optional<std::vector<IntRow<Checked>>> narrow(const std::vector<IntRow<Big>>& rows) {
  std::vector<IntRow<Checked>> out;
  out.reserve(rows.size());
  for (const auto& r : rows) {
    if (!r.bound.fits_slong_p()) return std::nullopt;
    IntRow<Checked> n{std::vector<std::int64_t>(r.coeffs.size()), r.bound.get_si(), r.strict};
    for (std::size_t k = 0; k < r.coeffs.size(); ++k) {
      if (!r.coeffs[k].fits_slong_p()) return std::nullopt;
      n.coeffs[k] = r.coeffs[k].get_si();
    }
    out.push_back(std::move(n));
  }
  return out;
}

}  // namespace

bool LinearConstraint::satisfied_by(const std::vector<mpq_class>& x) const {
  mpq_class lhs = 0;
  for (std::size_t k = 0; k < coeffs.size(); ++k) lhs += coeffs[k] * x[k];
  return strict ? lhs < bound : lhs <= bound;
}

bool fourier_motzkin_feasible(std::span<const LinearConstraint> constraints, std::size_t vars) {
  const auto rows = to_integer_rows(constraints, vars);
  if (auto small = narrow(rows)) {
    try {
      return int_feasible<Checked>(*small, vars);
    } catch (const Overflow&) {
    }
  }
  return int_feasible<Big>(rows, vars);
}

bool fourier_motzkin_feasible_rational(std::span<const LinearConstraint> constraints, std::size_t vars) {
  return run(constraints, vars, nullptr);
}

std::optional<std::vector<mpq_class>> fourier_motzkin_solve(std::span<const LinearConstraint> constraints,
                                                            std::size_t vars) {
  std::vector<Stage> stages;
  if (!run(constraints, vars, &stages)) return std::nullopt;
  std::vector<mpq_class> x(vars);
  for (auto it = stages.rbegin(); it != stages.rend(); ++it) {
    const std::size_t v = it->variable;
    std::optional<Tightest> lo, hi;
    for (const auto& r : it->rows) {
      const mpq_class& a = r.coeffs[v];
      if (a == 0) continue;
      mpq_class rest = r.bound;
      for (std::size_t k = 0; k < vars; ++k)
        if (k != v) rest -= r.coeffs[k] * x[k];
      const mpq_class limit = rest / a;
      if (a > 0) {
        if (!hi || limit < hi->bound || (limit == hi->bound && r.strict)) hi = Tightest{limit, r.strict};
      } else {
        if (!lo || limit > lo->bound || (limit == lo->bound && r.strict)) lo = Tightest{limit, r.strict};
      }
    }
    if (lo && hi)
      x[v] = (lo->bound == hi->bound) ? lo->bound : mpq_class((lo->bound + hi->bound) / 2);
    else if (lo)
      x[v] = lo->bound + 1;
    else if (hi)
      x[v] = hi->bound - 1;
  }
  for (const auto& c : constraints)
    if (!c.satisfied_by(x)) throw std::logic_error("Fourier-Motzkin back-substitution produced an infeasible point");
  return x;
}

std::string rational_string(const mpq_class& q) { return q.get_str(); }

}  // namespace cmclass
