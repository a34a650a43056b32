#include "cmclass/oracle.hpp"

#include <algorithm>

#include "cmclass/cm.hpp"
#include "cmclass/errors.hpp"
#include "cmclass/expr.hpp"
#include "cmclass/intmath.hpp"
#include "cmclass/series.hpp"

namespace cmclass::oracle {
namespace {

using Vector = std::vector<std::int64_t>;

struct Block {
  std::int64_t total;
  int vars;
};

class Meter {
 public:
  explicit Meter(Budget budget) : budget_(budget) {}
  void tick(std::uint64_t n = 1) {
    used_ += n;
    if (used_ > budget_.maxVectors)
      throw BudgetExceeded("oracle enumeration exceeded " + std::to_string(budget_.maxVectors) + " vectors");
  }

 private:
  Budget budget_;
  std::uint64_t used_ = 0;
};

void compositions_into(std::int64_t total, int parts, Vector& prefix, std::vector<Vector>& out, Meter& meter) {
  if (parts == 1) {
    prefix.push_back(total);
    meter.tick();
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (std::int64_t first = 0; first <= total; ++first) {
    prefix.push_back(first);
    compositions_into(total - first, parts - 1, prefix, out, meter);
    prefix.pop_back();
  }
}

/// Exponent vectors in Z_+^parts with the given total, lexicographic.
std::vector<Vector> compositions(std::int64_t total, int parts, Meter& meter) {
  std::vector<Vector> out;
  if (total < 0) return out;
  Vector prefix;
  compositions_into(total, parts, prefix, out, meter);
  return out;
}

std::uint64_t count_compositions(std::int64_t total, int parts, Meter& meter) {
  if (total < 0) return 0;
  if (parts == 1) {
    meter.tick();
    return 1;
  }
  std::uint64_t n = 0;
  for (std::int64_t first = 0; first <= total; ++first) n += count_compositions(total - first, parts - 1, meter);
  return n;
}

std::vector<Block> segre3_blocks(const Segre3Params& p, Label2 label, std::int64_t k) {
  return {{k, p.m}, {k - label.i, p.n}, {k - label.j, p.p}};
}

std::vector<Block> veronese2_blocks(const Veronese2Params& p, std::int64_t label, std::int64_t k) {
  const BezoutPair uv = bezout_pair(p.c, p.d);
  return {{p.c * k - uv.v * label, p.m}, {p.d * k - uv.u * label, p.n}};
}

std::uint64_t count_blocks(const std::vector<Block>& blocks, Meter& meter) {
  std::uint64_t n = 1;
  for (const auto& b : blocks) {
    n *= count_compositions(b.total, b.vars, meter);
    if (n == 0) return 0;
  }
  return n;
}

MonomialSet product_set(std::int64_t degree, const std::vector<Block>& blocks, Meter& meter) {
  MonomialSet out;
  out.degree = degree;
  std::vector<std::vector<Vector>> factors;
  for (const auto& b : blocks) {
    factors.push_back(compositions(b.total, b.vars, meter));
    if (factors.back().empty()) return out;
  }
  // Odometer over the factors; lexicographic since each factor is.
  std::vector<std::size_t> at(factors.size(), 0);
  for (;;) {
    Vector v;
    for (std::size_t f = 0; f < factors.size(); ++f) v.insert(v.end(), factors[f][at[f]].begin(), factors[f][at[f]].end());
    meter.tick();
    out.exponents.push_back(std::move(v));
    std::size_t f = factors.size();
    while (f > 0) {
      --f;
      if (++at[f] < factors[f].size()) break;
      at[f] = 0;
      if (f == 0) return out;
    }
  }
}

/// |gens + previous| inside one block, by explicit set arithmetic.
std::uint64_t block_sumset_size(std::int64_t genDegree, const Block& previous, Meter& meter) {
  if (previous.total < 0) return 0;
  const auto gens = compositions(genDegree, previous.vars, meter);
  const auto prev = compositions(previous.total, previous.vars, meter);
  std::set<Vector> sums;
  for (const auto& g : gens)
    for (const auto& x : prev) {
      Vector s(g.size());
      for (std::size_t t = 0; t < s.size(); ++t) s[t] = g[t] + x[t];
      meter.tick();
      sums.insert(std::move(s));
    }
  return sums.size();
}

template <class BlocksFn>
std::uint64_t new_generators(BlocksFn blocks, const std::vector<std::int64_t>& genDegrees, std::int64_t first,
                             std::int64_t maxDegree, Meter& meter) {
  std::uint64_t mu = 0;
  for (std::int64_t d = first; d <= maxDegree; ++d) {
    const auto here = blocks(d);
    const std::uint64_t size = count_blocks(here, meter);
    const auto before = blocks(d - 1);
    std::uint64_t reached = 1;
    for (std::size_t b = 0; b < before.size() && reached; ++b) reached *= block_sumset_size(genDegrees[b], before[b], meter);
    if (reached > size) throw std::logic_error("sumset larger than the graded piece");
    mu += size - reached;
  }
  return mu;
}

std::optional<SerreCertificate> certificate(std::uint64_t mu, const mpz_class& e, std::int64_t first, int degrees) {
  if (mpz_class(static_cast<unsigned long>(mu)) <= e) return std::nullopt;
  return SerreCertificate{mu, e.get_ui(), first, first + degrees - 1};
}

}  // namespace

std::uint64_t hilbert_coeff_brute(const Segre3Params& params, Label2 label, std::int64_t k, Budget budget) {
  params.validate();
  Meter meter(budget);
  return count_blocks(segre3_blocks(params, label, k), meter);
}

std::uint64_t hilbert_coeff_brute(const Veronese2Params& params, std::int64_t label, std::int64_t k, Budget budget) {
  params.validate();
  Meter meter(budget);
  return count_blocks(veronese2_blocks(params, label, k), meter);
}

MonomialSet monomial_set(const Segre3Params& params, Label2 label, std::int64_t degree, Budget budget) {
  params.validate();
  Meter meter(budget);
  return product_set(degree, segre3_blocks(params, label, degree), meter);
}

MonomialSet monomial_set(const Veronese2Params& params, std::int64_t label, std::int64_t degree, Budget budget) {
  params.validate();
  Meter meter(budget);
  return product_set(degree, veronese2_blocks(params, label, degree), meter);
}

std::int64_t initial_degree_brute(const Segre3Params& params, Label2 label) {
  params.validate();
  return std::max<std::int64_t>({0, label.i, label.j});
}

std::int64_t initial_degree_brute(const Veronese2Params& params, std::int64_t label) {
  params.validate();
  const BezoutPair uv = bezout_pair(params.c, params.d);
  return std::max(ceil_div(uv.v * label, params.c), ceil_div(uv.u * label, params.d));
}

std::uint64_t mu_lower_bound(const Segre3Params& params, Label2 label, std::int64_t maxDegree, Budget budget) {
  Meter meter(budget);
  return new_generators([&](std::int64_t d) { return segre3_blocks(params, label, d); }, {1, 1, 1},
                        initial_degree_brute(params, label), maxDegree, meter);
}

std::uint64_t mu_lower_bound(const Veronese2Params& params, std::int64_t label, std::int64_t maxDegree,
                             Budget budget) {
  Meter meter(budget);
  return new_generators([&](std::int64_t d) { return veronese2_blocks(params, label, d); }, {params.c, params.d},
                        initial_degree_brute(params, label), maxDegree, meter);
}

std::optional<SerreCertificate> serre_noncm_certificate(const Segre3Params& params, Label2 label, int degrees,
                                                        Budget budget) {
  const std::int64_t first = initial_degree_brute(params, label);
  const std::uint64_t mu = mu_lower_bound(params, label, first + degrees - 1, budget);
  const mpz_class e = multiplicity(series_of(segre(segre(poly(params.m), poly(params.n)), poly(params.p))));
  return certificate(mu, e, first, degrees);
}

std::optional<SerreCertificate> serre_noncm_certificate(const Veronese2Params& params, std::int64_t label,
                                                        int degrees, Budget budget) {
  const std::int64_t first = initial_degree_brute(params, label);
  const std::uint64_t mu = mu_lower_bound(params, label, first + degrees - 1, budget);
  const mpz_class e =
      multiplicity(series_of(segre(veronese(poly(params.m), params.c), veronese(poly(params.n), params.d))));
  return certificate(mu, e, first, degrees);
}

std::set<ClassTuple> conic_grid_probe(const SupportPresentation& pres, const ClassGroup& group, int q, Budget budget) {
  if (q < 1) throw std::invalid_argument("grid resolution must be positive");
  const std::size_t rank = pres.rank();
  Meter meter(budget);
  std::uint64_t points = 1;
  for (std::size_t j = 0; j < rank; ++j) {
    points *= static_cast<std::uint64_t>(q);
    if (points > budget.maxVectors) meter.tick(points);
  }
  std::set<ClassTuple> out;
  std::vector<int> at(rank, 0);
  const IntMatrix& b = pres.latticeBasis;
  for (;;) {
    meter.tick();
    IntVector w(pres.ambientRank);
    for (std::size_t k = 0; k < pres.ambientRank; ++k) {
      mpz_class num = 0;
      for (std::size_t j = 0; j < rank; ++j) num += b(k, j) * at[j];
      mpz_cdiv_q_ui(w[k].get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(q));
    }
    out.insert(group.project(w));
    std::size_t j = rank;
    for (;;) {
      if (j == 0) return out;
      --j;
      if (++at[j] < q) break;
      at[j] = 0;
    }
  }
}

}  // namespace cmclass::oracle
