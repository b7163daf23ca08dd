#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "uniso/gallery.hpp"
#include "uniso/iso.hpp"

using namespace uniso;

namespace {

// Checks that whatever witness a verdict carries actually is one.
void check_witnesses(const IsoVerdict& v, const Representation& l, const Representation& m) {
  CAPTURE(v.method);
  CAPTURE(v.reason);
  if (v.verdict == Verdict::Isomorphic) {
    REQUIRE(v.isomorphism);
    CHECK(v.isomorphism->source() == l);
    CHECK(v.isomorphism->target() == m);
    CHECK(v.isomorphism->satisfies_arrow_equations());
    CHECK(v.isomorphism->is_invertible());
  }
  if (v.fixed_point) {
    const FixedPointWitness& w = *v.fixed_point;
    CHECK(w.f.satisfies_arrow_equations());
    CHECK(w.g.satisfies_arrow_equations());
    CHECK_FALSE(w.x == zero_element(l));
    CHECK(compose(w.g, w.f).apply(w.x) == w.x);
  }
  if (v.tuple) {
    const auto& t = *v.tuple;
    REQUIRE_FALSE(t.empty());
    CHECK(t.front().source() == l);
    Intertwiner acc = t.front();
    for (std::size_t i = 1; i < t.size(); ++i) {
      CHECK(t[i].source() == t[i - 1].target());
      acc = compose(t[i], acc);
    }
    CHECK_FALSE(acc.is_zero());
  }
  if (v.mono_epi) {
    CHECK(classify(v.mono_epi->mono).injective);
    CHECK(classify(v.mono_epi->epi).surjective);
  }
}

struct Pair {
  std::string label;
  Representation l, m;
};

// Module pairs inside single gallery entries.
std::vector<Pair> gallery_pairs(const FieldSpec& f) {
  std::vector<Pair> out;
  const std::vector<std::pair<std::string, std::vector<long long>>> entries = {
      {"kronecker_Uk", {1}},        {"ex1_PQ", {}},           {"remark_loop", {}},
      {"remark_two_loops", {}},     {"euclidean_An", {3}},    {"commutative_two_loops", {3}},
      {"dynkin_An_injectives", {3}}, {"cyclic_uniserial", {1}}};
  for (const auto& [name, params] : entries) {
    const GalleryEntry e = gallery(name, params, &f);
    for (const auto& [a, x] : e.modules) {
      for (const auto& [b, y] : e.modules) out.push_back({name + " " + a + " " + b, x, y});
    }
  }
  return out;
}

}  // namespace

TEST_CASE("direct search examples") {
  const GalleryEntry kr = gallery("kronecker_Uk", {1});
  const IsoVerdict same = iso_direct(kr.module("U1"), kr.module("U1"));
  CHECK(same.verdict == Verdict::Isomorphic);
  CHECK(same.reason == "invertible intertwiner found");
  const IsoVerdict pres = iso_direct(kr.module("Pres"), kr.module("U1"));
  CHECK(pres.verdict == Verdict::Isomorphic);
  check_witnesses(pres, kr.module("Pres"), kr.module("U1"));
  const IsoVerdict diff = iso_direct(kr.module("U1"), kr.module("U2"));
  CHECK(diff.verdict == Verdict::NotIsomorphic);
  CHECK(diff.reason == "not_isomorphic, hom dimension 0");

  const GalleryEntry ex = gallery("ex1_PQ");
  const IsoVerdict pq = iso_direct(ex.module("P"), ex.module("Q"));
  CHECK(pq.verdict == Verdict::NotIsomorphic);
  CHECK(pq.reason == "dimension vectors differ: (2,1) vs (1,2)");
  CHECK(pq.hom_dim_lm == 1);
  CHECK(pq.hom_dim_ml == 1);

  const GalleryEntry two = gallery("remark_two_loops");
  const IsoVerdict lm = iso_direct(two.module("L"), two.module("M"));
  CHECK(lm.verdict == Verdict::NotIsomorphic);
  REQUIRE(lm.obstruction);
  CHECK(structural_obstruction(two.module("L"), two.module("M")) == lm.obstruction);
  CHECK_FALSE(structural_obstruction(kr.module("U1"), kr.module("U2")));
}

TEST_CASE("n-fold criterion examples") {
  const GalleryEntry kr = gallery("kronecker_Uk", {1});
  const IsoVerdict diff = nfold_criterion(kr.module("U1"), kr.module("U2"));
  CHECK(diff.verdict == Verdict::NotIsomorphic);
  CHECK(diff.reason == "not_isomorphic, hom dimension 0");
  const IsoVerdict same = nfold_criterion(kr.module("U3"), kr.module("U3"));
  CHECK(same.verdict == Verdict::Isomorphic);
  check_witnesses(same, kr.module("U3"), kr.module("U3"));

  const GalleryEntry ex = gallery("ex1_PQ");
  const IsoVerdict pq = nfold_criterion(ex.module("P"), ex.module("Q"));
  CHECK(pq.verdict == Verdict::NotIsomorphic);
  CHECK(pq.reason == "not_isomorphic, every 3-fold composition vanishes (hom dimension 1)");
  REQUIRE(pq.exhaustion);
  CHECK(pq.exhaustion->size == 1);

  const GalleryEntry loop = gallery("remark_loop");
  const IsoVerdict lm = nfold_criterion(loop.module("L"), loop.module("M"));
  CHECK(lm.verdict == Verdict::HypothesesNotMet);
  REQUIRE(lm.raw_found);
}

TEST_CASE("two-morphism criterion examples") {
  const GalleryEntry loop = gallery("remark_loop");
  const IsoVerdict lm = two_morphism_criterion(loop.module("L"), loop.module("M"));
  CHECK(lm.verdict == Verdict::HypothesesNotMet);
  REQUIRE(lm.raw_found);
  CHECK_FALSE(*lm.raw_found);
  CHECK(lm.reason == "modules are not both uniform of the same finite length; raw search: no fixed point");

  const GalleryEntry ex = gallery("ex1_PQ", {}, &FieldSpec::prime(3));
  const IsoVerdict pq = two_morphism_criterion(ex.module("P"), ex.module("Q"));
  CHECK(pq.verdict == Verdict::NotIsomorphic);
  CHECK(pq.reason == "no g∘f has a nonzero fixed point among all 9 pairs");

  const Representation u = gallery("cyclic_uniserial", {2}, &FieldSpec::prime(3)).module("U");
  const IsoVerdict uu = two_morphism_criterion(u, u);
  CHECK(uu.verdict == Verdict::Isomorphic);
  check_witnesses(uu, u, u);
}

TEST_CASE("mono-epi criterion examples") {
  const GalleryEntry eu = gallery("euclidean_An", {4}, &FieldSpec::prime(3));
  const IsoVerdict lm = mono_epi_criterion(eu.module("L"), eu.module("M"));
  CHECK(lm.verdict == Verdict::NotIsomorphic);
  const IsoVerdict rl = mono_epi_criterion(eu.module("RL"), eu.module("P2"));
  CHECK(rl.verdict == Verdict::Isomorphic);
  check_witnesses(rl, eu.module("RL"), eu.module("P2"));

  const GalleryEntry two = gallery("remark_two_loops");
  const IsoVerdict nu = mono_epi_criterion(two.module("L"), two.module("M"));
  CHECK(nu.verdict == Verdict::HypothesesNotMet);
  CHECK(nu.raw_found);
}

TEST_CASE("weakened bound examples") {
  const GalleryEntry ex = gallery("ex1_PQ");
  const WeakenedBound pq = verify_weakened_bound(ex.module("P"), ex.module("Q"), 2);
  CHECK(pq.some_mfold_nonzero);
  CHECK(pq.all_mplus1fold_zero);

  const Representation u = gallery("kronecker_Uk", {1}).module("U1");
  const WeakenedBound uu = verify_weakened_bound(u, u, 1);
  CHECK(uu.some_mfold_nonzero);
  CHECK_FALSE(uu.all_mplus1fold_zero);

  const GalleryEntry two = gallery("remark_two_loops");
  CHECK(verify_weakened_bound(two.module("L"), two.module("M"), 3).some_mfold_nonzero);

  const std::vector<std::size_t> lens = max_alternating_image_lengths(ex.module("P"), ex.module("Q"), 3);
  CHECK(lens == std::vector<std::size_t>{2, 1, 0});
}

TEST_CASE("alternating search sizes and order") {
  const GalleryEntry c = gallery("commutative_two_loops", {3}, &FieldSpec::prime(2));
  const HomBasis vw = hom_basis(c.module("V"), c.module("W"));
  const HomBasis wv = hom_basis(c.module("W"), c.module("V"));
  const AlternatingSearch s = alternating_search(vw, wv, 3);
  std::uint64_t expect = vw.dimension() * wv.dimension() * vw.dimension();
  CHECK(s.search_size == expect);
  CHECK_FALSE(s.found_nonzero);
  CHECK(s.compositions == expect);
  CHECK_THROWS_AS(alternating_search(vw, wv, 3, SearchOptions{1}), CapExceeded);
}

TEST_CASE("methods agree on gallery pairs") {
  for (const FieldSpec* f : {&FieldSpec::prime(2), &FieldSpec::prime(3)}) {
    for (const auto& p : gallery_pairs(*f)) {
      CAPTURE(p.label);
      CAPTURE(f->name());
      const bool truth = oracle::unknowns(p.l, p.m) <= 12 ? oracle::isomorphic(p.l, p.m)
                                                          : iso_direct(p.l, p.m).verdict == Verdict::Isomorphic;
      for (const auto& v : iso_all(p.l, p.m)) {
        check_witnesses(v, p.l, p.m);
        if (v.verdict == Verdict::Isomorphic) CHECK(truth);
        if (v.verdict == Verdict::NotIsomorphic) CHECK_FALSE(truth);
        CHECK(v.verdict != Verdict::Inconclusive);
        if (v.method == "direct") CHECK(v.verdict == (truth ? Verdict::Isomorphic : Verdict::NotIsomorphic));
      }
    }
  }
}

TEST_CASE("basis tuples decide the n-fold composition on random tuples") {
  std::mt19937_64 rng(77);
  const FieldSpec& f = FieldSpec::prime(3);
  std::vector<Pair> pairs;
  for (const auto& p : gallery_pairs(f)) {
    if (length(p.l) == length(p.m) && length(p.l) > 0) pairs.push_back(p);
  }
  REQUIRE(pairs.size() > 10);
  int nonzero = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const Pair& p = pairs[rng() % pairs.size()];
    CAPTURE(p.label);
    const HomBasis lm = hom_basis(p.l, p.m), ml = hom_basis(p.m, p.l);
    const std::size_t n = length(p.l);
    const AlternatingSearch s = alternating_search(lm, ml, n);
    auto random_map = [&](const HomBasis& h, const Representation& a, const Representation& b) {
      std::vector<Scalar> c;
      for (std::size_t i = 0; i < h.dimension(); ++i) c.push_back(f.element(rng() % 3));
      return h.dimension() == 0 ? Intertwiner::zero(a, b) : combination(h, c);
    };
    Intertwiner acc = random_map(lm, p.l, p.m);
    for (std::size_t k = 1; k < n; ++k) {
      acc = k % 2 ? compose(random_map(ml, p.m, p.l), acc) : compose(random_map(lm, p.l, p.m), acc);
    }
    if (!acc.is_zero()) {
      ++nonzero;
      CHECK(s.found_nonzero);
    }
    if (!s.found_nonzero) CHECK(acc.is_zero());
  }
  CHECK(nonzero > 20);
}

TEST_CASE("rational field behaviour") {
  const FieldSpec& q = FieldSpec::rationals();
  const GalleryEntry kr = gallery("kronecker_Uk", {1}, &q);
  auto name = [](long long k) { return "U" + (k < 0 ? "m" + std::to_string(-k) : std::to_string(k)); };
  for (long long k = -2; k <= 2; ++k) {
    for (long long l = -2; l <= 2; ++l) {
      const Representation& a = kr.module(name(k));
      const Representation& b = kr.module(name(l));
      const IsoVerdict d = iso_direct(a, b);
      const IsoVerdict n = nfold_criterion(a, b);
      CHECK(d.verdict == (k == l ? Verdict::Isomorphic : Verdict::NotIsomorphic));
      CHECK(n.verdict == (k == l ? Verdict::Isomorphic : Verdict::NotIsomorphic));
      check_witnesses(d, a, b);
      check_witnesses(n, a, b);
    }
  }

  const GalleryEntry ex = gallery("ex1_PQ", {}, &q);
  CHECK(nfold_criterion(ex.module("P"), ex.module("Q")).verdict == Verdict::NotIsomorphic);
  const IsoVerdict two = two_morphism_criterion(ex.module("P"), ex.module("Q"));
  CHECK(two.verdict == Verdict::Inconclusive);
  CHECK(two.reason == "no fixed point in the search battery over Q");
  const IsoVerdict me = mono_epi_criterion(ex.module("P"), ex.module("Q"));
  CHECK(me.verdict == Verdict::Inconclusive);

  const std::vector<Vector> battery = rational_battery(q, 2);
  // weight one: 4 vectors, weight two: 4 sign patterns
  CHECK(battery.size() == 8);
  for (const auto& v : battery) {
    std::size_t weight = 0;
    for (const auto& x : v) {
      if (x.is_zero()) continue;
      ++weight;
      CHECK((x == q.one() || x == -q.one()));
    }
    CHECK(weight >= 1);
    CHECK(weight <= 2);
  }
}

TEST_CASE("search caps") {
  const Representation u = gallery("cyclic_uniserial", {2}, &FieldSpec::prime(3)).module("U");
  const IsoVerdict d = iso_direct(u, u, SearchOptions{2});
  CHECK(d.verdict == Verdict::Inconclusive);
  CHECK(d.reason == "Hom(L,M) has 3^2 elements, beyond the search cap");
  CHECK(two_morphism_criterion(u, u, SearchOptions{10}).verdict == Verdict::Inconclusive);
  CHECK_THROWS_AS(find_isomorphism(u, u, SearchOptions{2}), CapExceeded);
  CHECK(find_isomorphism(u, u));
}

TEST_CASE("modules over different algebras are rejected") {
  const Representation a = gallery("kronecker_Uk", {1}).module("U1");
  const Representation b = gallery("cyclic_uniserial", {1}, &FieldSpec::prime(5)).module("U");
  CHECK_THROWS_AS(iso_direct(a, b), Error);
  CHECK_THROWS_AS(nfold_criterion(a, b), Error);
}
