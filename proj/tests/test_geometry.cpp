#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "cmclass/cm.hpp"
#include "cmclass/geometry.hpp"
#include "cmclass/oracle.hpp"

using namespace cmclass;

namespace {

IntVector random_vector(std::mt19937& rng, std::size_t size, int range) {
  std::uniform_int_distribution<int> entry(-range, range);
  IntVector x(size);
  for (auto& v : x) v = entry(rng);
  return x;
}

IntVector plus(const IntVector& a, const IntVector& b) {
  IntVector out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k] + b[k];
  return out;
}

ClassTuple add(const ClassTuple& a, const ClassTuple& b) {
  ClassTuple out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k] + b[k];
  return out;
}

std::vector<Veronese2Params> coprime_veronese2(int max) {
  std::vector<Veronese2Params> out;
  for (int m = 1; m <= max; ++m)
    for (int n = 1; n <= max; ++n)
      for (int c = 1; c <= max; ++c)
        for (int d = 1; d <= max; ++d)
          if (std::gcd(c, d) == 1) out.push_back({m, n, c, d});
  return out;
}

// Closed predicate evaluated independently, in module labels.
std::vector<Label2> conic_by_predicate(int m, int n, int p, std::int64_t window) {
  std::vector<Label2> out;
  for (std::int64_t i = -window; i <= window; ++i)
    for (std::int64_t j = -window; j <= window; ++j)
      if (std::max({std::int64_t{0}, -i, -j}) < std::min({std::int64_t{m}, n - i, p - j})) out.push_back({i, j});
  return out;
}

}  // namespace

TEST_CASE("presentations: the lattice basis columns lie in the coset equations") {
  const auto pres = presentation(Segre3Params{2, 3, 4});
  CHECK(pres.ambientRank == 9);
  CHECK(pres.rank() == 7);
  CHECK(pres.coordinates.front() == "x1");
  CHECK(pres.coordinates.back() == "z4");
  for (std::size_t c = 0; c < pres.rank(); ++c) {
    const auto col = pres.latticeBasis.column(c);
    CHECK(segre3_label_of_vector({2, 3, 4}, col) == Label2{0, 0});
  }
  const auto v = presentation(Veronese2Params{2, 3, 3, 2});
  CHECK(v.rank() == 4);
  for (std::size_t c = 0; c < v.rank(); ++c) CHECK(veronese2_label_of_vector({2, 3, 3, 2}, v.latticeBasis.column(c)) == 0);
  CHECK(presentation(Veronese2Params{1, 2, 1, 1}).warnings.size() == 1);
  CHECK(presentation(Veronese2Params{2, 2, 1, 1}).warnings.empty());
}

TEST_CASE("class groups: Z^2 for segre3, Z for veronese2") {
  for (int m = 2; m <= 5; ++m)
    for (int n = 2; n <= 5; ++n)
      for (int p = 2; p <= 5; ++p) {
        const auto g = class_group(presentation(Segre3Params{m, n, p}));
        CHECK(g.freeRank == 2);
        CHECK(g.torsionInvariants.empty());
      }
  for (const auto& params : coprime_veronese2(4)) {
    if (params.m + params.n < 3) continue;
    const auto g = class_group(presentation(params));
    CHECK(g.freeRank == 1);
    CHECK(g.torsionInvariants.empty());
  }
}

TEST_CASE("projection kills the lattice and is additive") {
  std::mt19937 rng(9);
  for (const auto& params : {FamilyParams{Segre3Params{2, 3, 2}}, FamilyParams{Veronese2Params{2, 3, 2, 3}}}) {
    const auto pres = std::visit([](const auto& p) { return presentation(p); }, params);
    const auto g = class_group(pres);
    for (std::size_t c = 0; c < pres.rank(); ++c) CHECK(g.project(pres.latticeBasis.column(c)) == ClassTuple(g.freeRank));
    for (int trial = 0; trial < 100; ++trial) {
      const auto x = random_vector(rng, pres.ambientRank, 6);
      const auto y = random_vector(rng, pres.ambientRank, 6);
      CHECK(g.project(plus(x, y)) == add(g.project(x), g.project(y)));
      const auto lambda = random_vector(rng, pres.rank(), 4);
      CHECK(g.project(plus(x, pres.latticeBasis * lambda)) == g.project(x));
    }
  }
}

TEST_CASE("label bridge: the class of w is the class of its label") {
  std::mt19937 rng(13);
  const Segre3Params s{2, 2, 3};
  const auto sp = presentation(s);
  const auto sg = class_group(sp);
  for (int trial = 0; trial < 200; ++trial) {
    const auto w = random_vector(rng, sp.ambientRank, 5);
    CHECK(sg.project(w) == class_of_label(sp, sg, segre3_label_of_vector(s, w)));
  }
  for (const auto& params : coprime_veronese2(3)) {
    const auto vp = presentation(params);
    const auto vg = class_group(vp);
    for (int trial = 0; trial < 30; ++trial) {
      const auto w = random_vector(rng, vp.ambientRank, 5);
      CHECK(vg.project(w) == class_of_label(vp, vg, veronese2_label_of_vector(params, w)));
    }
  }
}

TEST_CASE("class_of_label is additive, injective and sends label 0 to zero") {
  const auto sp = presentation(Segre3Params{3, 2, 2});
  const auto sg = class_group(sp);
  CHECK(class_of_label(sp, sg, Label2{0, 0}) == ClassTuple{0, 0});
  std::set<ClassTuple> seen;
  for (std::int64_t i = -4; i <= 4; ++i)
    for (std::int64_t j = -4; j <= 4; ++j) {
      CHECK(class_of_label(sp, sg, Label2{i, j}) ==
            add(class_of_label(sp, sg, Label2{i, 0}), class_of_label(sp, sg, Label2{0, j})));
      seen.insert(class_of_label(sp, sg, Label2{i, j}));
    }
  CHECK(seen.size() == 81);
  CHECK_THROWS_AS(class_of_label(sp, sg, std::int64_t{1}), std::invalid_argument);

  const Veronese2Params vparams{2, 2, 2, 1};
  const auto vp = presentation(vparams);
  const auto vg = class_group(vp);
  CHECK(class_of_label(vp, vg, std::int64_t{0}) == ClassTuple{0});
  const auto one = class_of_label(vp, vg, std::int64_t{1});
  CHECK(abs(one[0]) == 1);
  for (std::int64_t i = -6; i <= 6; ++i) CHECK(class_of_label(vp, vg, i) == ClassTuple{one[0] * i});
  // The ceiling vector e_1 lies in the class of label -d.
  IntVector e1(vp.ambientRank);
  e1[0] = 1;
  CHECK(vg.project(e1) == class_of_label(vp, vg, std::int64_t{-vparams.d}));
}

TEST_CASE("generic enumerator: witnesses re-verify and beta = 0 gives label 0") {
  for (const auto& pres : {presentation(Segre3Params{2, 2, 2}), presentation(Segre3Params{2, 3, 2}),
                           presentation(Veronese2Params{2, 2, 2, 1}), presentation(Veronese2Params{3, 2, 2, 3})}) {
    const auto g = class_group(pres);
    ConicEnumerationStats stats;
    const auto witnesses = conic_classes_generic(pres, g, {}, &stats);
    CHECK(stats.nodesVisited >= witnesses.size());
    bool hasZero = false;
    for (const auto& w : witnesses) {
      CHECK(verify_witness(pres, g, w));
      hasZero |= w.classTuple == ClassTuple(g.freeRank);
      for (std::size_t k = 0; k < w.ceilVector.size(); ++k) {
        CHECK(w.point[k] <= w.ceilVector[k]);
        CHECK(w.point[k] > w.ceilVector[k] - 1);
      }
    }
    CHECK(hasZero);
    CHECK(std::is_sorted(witnesses.begin(), witnesses.end(),
                         [](const ConicWitness& a, const ConicWitness& b) { return a.classTuple < b.classTuple; }));
  }
}

TEST_CASE("verify_witness rejects tampered witnesses") {
  const auto pres = presentation(Segre3Params{2, 2, 2});
  const auto g = class_group(pres);
  auto w = conic_classes_generic(pres, g).front();
  auto shifted = w;
  shifted.ceilVector[0] += 3;
  CHECK_FALSE(verify_witness(pres, g, shifted));
  auto wrongClass = w;
  wrongClass.classTuple[0] += 1;
  CHECK_FALSE(verify_witness(pres, g, wrongClass));
}

TEST_CASE("generic enumerator is invariant under lattice translation of the parallelepiped") {
  for (const auto& pres : {presentation(Segre3Params{2, 2, 3}), presentation(Veronese2Params{2, 3, 3, 2})}) {
    const auto g = class_group(pres);
    std::set<ClassTuple> base;
    for (const auto& w : conic_classes_generic(pres, g)) base.insert(w.classTuple);
    for (const std::int64_t shift : {-2, 1, 3}) {
      IntVector offset(pres.rank());
      for (std::size_t k = 0; k < offset.size(); ++k) offset[k] = shift * static_cast<std::int64_t>(k % 2 ? 1 : -1);
      std::set<ClassTuple> moved;
      for (const auto& w : conic_classes_generic(pres, g, offset)) moved.insert(w.classTuple);
      CHECK(moved == base);
    }
  }
}

TEST_CASE("grid probe is a subset of the generic result and grows with refinement") {
  for (const auto& pres : {presentation(Segre3Params{2, 2, 2}), presentation(Veronese2Params{2, 2, 2, 1})}) {
    const auto g = class_group(pres);
    std::set<ClassTuple> generic;
    for (const auto& w : conic_classes_generic(pres, g)) generic.insert(w.classTuple);
    const auto q1 = oracle::conic_grid_probe(pres, g, 1);
    CHECK(q1.count(ClassTuple(g.freeRank)) == 1);
    const int qmax = pres.rank() > 5 ? 2 : 4;
    std::set<ClassTuple> previous = q1;
    for (int q = 2; q <= qmax; q *= 2) {
      const auto probe = oracle::conic_grid_probe(pres, g, q);
      CHECK(std::includes(probe.begin(), probe.end(), previous.begin(), previous.end()));
      CHECK(std::includes(generic.begin(), generic.end(), probe.begin(), probe.end()));
      previous = probe;
    }
  }
}

TEST_CASE("segre3 conic set: closed predicate, parameterization and enumerator agree") {
  for (int m = 2; m <= 3; ++m)
    for (int n = 2; n <= 3; ++n)
      for (int p = 2; p <= 3; ++p) {
        const Segre3Params params{m, n, p};
        const auto conic = conic_set_segre3(params);
        CHECK(conic == conic_by_predicate(m, n, p, m + n + p));
        CHECK(conic == segre3_parameterization(params));
        CHECK(static_cast<int>(conic.size()) == (m * n + m * p + n * p) - (m + n + p) + 1);
        const auto cm = cm_region_segre3(params, 2);
        CHECK(std::includes(cm.begin(), cm.end(), conic.begin(), conic.end()));
        for (std::int64_t i = -3; i <= 3; ++i)
          for (std::int64_t j = -3; j <= 3; ++j)
            CHECK(is_conic_segre3(params, i, j) == std::binary_search(conic.begin(), conic.end(), Label2{i, j}));
      }
  const std::vector<Label2> expected{{-1, -1}, {-1, 0}, {0, -1}, {0, 0}, {0, 1}, {1, 0}, {1, 1}};
  CHECK(conic_set_segre3({2, 2, 2}) == expected);
  CHECK(conic_set_segre3({2, 3, 4}, {.crossCheckGeneric = false}).size() == 18);
}

TEST_CASE("veronese2 conic comparison") {
  const auto a = conic_set_veronese2({2, 2, 1, 1});
  CHECK(a.generic == std::vector<std::int64_t>{-1, 0, 1});
  CHECK(a.parameterization == a.generic);
  CHECK(a.interval == a.generic);
  CHECK(a.equalityCase);
  CHECK(a.discrepancies.empty());

  const auto b = conic_set_veronese2({2, 2, 2, 1});
  CHECK(b.generic.size() == 5);
  CHECK(b.formula == 4);
  CHECK_FALSE(b.equalityCase);
  CHECK_FALSE(b.discrepancies.empty());

  for (const auto& params : coprime_veronese2(3)) {
    const auto r = conic_set_veronese2(params);
    const auto cm = cm_set_veronese2(params);
    CHECK(std::includes(cm.begin(), cm.end(), r.generic.begin(), r.generic.end()));
    CHECK(std::binary_search(r.generic.begin(), r.generic.end(), 0));
    if (r.equalityCase) CHECK(r.formula == static_cast<std::int64_t>(r.generic.size()));
  }
}
