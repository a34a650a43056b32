#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "cmclass/geometry.hpp"
#include "cmclass/params.hpp"

/// Brute-force counts straight from the monomial descriptions. Nothing here
/// uses binomial coefficients or rational functions.
namespace cmclass::oracle {

/// Hard cap on the number of exponent vectors a single call may enumerate.
struct Budget {
  std::uint64_t maxVectors = 5'000'000;
};

/// Number of monomials of degree k in M_(i,j): |a| = k, |b| = k - i, |g| = k - j.
std::uint64_t hilbert_coeff_brute(const Segre3Params& params, Label2 label, std::int64_t k, Budget budget = {});

/// Number of monomials of degree k in M_i: |a| = ck - vi, |b| = dk - ui.
std::uint64_t hilbert_coeff_brute(const Veronese2Params& params, std::int64_t label, std::int64_t k,
                                  Budget budget = {});

struct MonomialSet {
  std::int64_t degree = 0;
  /// Lexicographically sorted, concatenated blocks (x, y[, z]).
  std::vector<std::vector<std::int64_t>> exponents;
};

MonomialSet monomial_set(const Segre3Params& params, Label2 label, std::int64_t degree, Budget budget = {});
MonomialSet monomial_set(const Veronese2Params& params, std::int64_t label, std::int64_t degree, Budget budget = {});

/// Lowest degree in which the module is nonzero.
std::int64_t initial_degree_brute(const Segre3Params& params, Label2 label);
std::int64_t initial_degree_brute(const Veronese2Params& params, std::int64_t label);

/// Sum over degrees up to maxDegree of |M_d| - |G + M_(d-1)|, G the degree-1
/// ring generators. A lower bound for the minimal number of generators.
std::uint64_t mu_lower_bound(const Segre3Params& params, Label2 label, std::int64_t maxDegree, Budget budget = {});
std::uint64_t mu_lower_bound(const Veronese2Params& params, std::int64_t label, std::int64_t maxDegree,
                             Budget budget = {});

struct SerreCertificate {
  std::uint64_t muLowerBound = 0;
  std::uint64_t ringMultiplicity = 0;
  std::int64_t firstDegree = 0;
  std::int64_t lastDegree = 0;
};

/// Certificate of non-CM when the generator lower bound over the first
/// `degrees` nonzero degrees exceeds the ring multiplicity.
std::optional<SerreCertificate> serre_noncm_certificate(const Segre3Params& params, Label2 label, int degrees = 6,
                                                        Budget budget = {});
std::optional<SerreCertificate> serre_noncm_certificate(const Veronese2Params& params, std::int64_t label,
                                                        int degrees = 6, Budget budget = {});

/// Classes of ceil(B lambda) for lambda on the (1/q)-grid of [0,1)^rank.
/// Every returned class is conic.
std::set<ClassTuple> conic_grid_probe(const SupportPresentation& pres, const ClassGroup& group, int q,
                                      Budget budget = {});

}  // namespace cmclass::oracle
