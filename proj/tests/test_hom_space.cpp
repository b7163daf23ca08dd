#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "uniso/gallery.hpp"
#include "uniso/hom.hpp"

using namespace uniso;

namespace {

struct Named {
  std::string label;
  Representation module;
};

// Gallery modules over a small prime field, grouped by algebra.
std::vector<std::vector<Named>> module_families(const FieldSpec& f) {
  std::vector<std::vector<Named>> out;
  const std::vector<std::pair<std::string, std::vector<long long>>> entries = {
      {"kronecker_Uk", {1}},     {"ex1_PQ", {}},           {"remark_loop", {}},
      {"remark_two_loops", {}},  {"euclidean_An", {3}},    {"commutative_two_loops", {3}},
      {"dynkin_An_injectives", {4}}, {"cyclic_uniserial", {1}}};
  for (const auto& [name, params] : entries) {
    const GalleryEntry e = gallery(name, params, &f);
    std::vector<Named> fam;
    for (const auto& [n, m] : e.modules) fam.push_back({name + "/" + n, m});
    out.push_back(std::move(fam));
  }
  return out;
}

Vector flatten_family(const FieldSpec& f, const oracle::Family& fam) {
  Vector v;
  for (const auto& m : fam) {
    for (auto x : m.a) v.push_back(f.from_int(x));
  }
  return v;
}

Vector flatten_intertwiner(const FieldSpec& f, const Intertwiner& h) {
  oracle::Family fam;
  for (const auto& m : h.components()) fam.push_back(oracle::to_int(m));
  return flatten_family(f, fam);
}

std::uint64_t power(std::uint64_t p, std::size_t e) {
  std::uint64_t r = 1;
  while (e--) r *= p;
  return r;
}

}  // namespace

TEST_CASE("hom dimension examples") {
  const GalleryEntry ex = gallery("ex1_PQ");
  const Representation& p = ex.module("P");
  const Representation& q = ex.module("Q");
  CHECK(hom_basis(p, q).dimension() == 1);
  CHECK(hom_basis(q, p).dimension() == 1);
  CHECK(hom_basis(p, p).dimension() == 2);

  const GalleryEntry kr = gallery("kronecker_Uk", {1});
  for (long long k = 0; k < 5; ++k) {
    for (long long l = 0; l < 5; ++l) {
      const auto d = hom_basis(kr.module("U" + std::to_string(k)), kr.module("U" + std::to_string(l))).dimension();
      CHECK(d == (k == l ? 1u : 0u));
    }
  }

  const GalleryEntry loop = gallery("remark_loop");
  CHECK(hom_basis(loop.module("M"), loop.module("M")).dimension() == 1);
  CHECK(hom_basis(loop.module("L"), loop.module("M")).dimension() == 1);
  CHECK(hom_basis(loop.module("L"), loop.module("L")).dimension() == 2);
}

TEST_CASE("constructor rejects maps that break an arrow equation") {
  const GalleryEntry ex = gallery("ex1_PQ");
  const FieldSpec& f = *ex.field;
  const Representation& p = ex.module("P");
  const Representation& q = ex.module("Q");
  CHECK_THROWS_AS(Intertwiner(p, q, {Matrix::from_ints(f, 1, 2, {1, 0}), Matrix::from_ints(f, 2, 1, {1, 0})}), Error);
  CHECK_THROWS_AS(Intertwiner(p, q, {Matrix::from_ints(f, 1, 1, {1})}), Error);
  CHECK_FALSE(Intertwiner::unchecked(p, q, {Matrix::from_ints(f, 1, 2, {1, 0}), Matrix::from_ints(f, 2, 1, {1, 0})})
                  .satisfies_arrow_equations());
}

TEST_CASE("composition examples") {
  const GalleryEntry ex = gallery("ex1_PQ");
  const Intertwiner& f = ex.morphism("f");
  const Intertwiner& g = ex.morphism("g");
  const Intertwiner gf = compose(g, f), fg = compose(f, g);
  CHECK_FALSE(gf.is_zero());
  CHECK_FALSE(fg.is_zero());
  CHECK(compose(f, gf).is_zero());
  CHECK(compose(g, fg).is_zero());
  CHECK(image(gf) == socle(ex.module("P")));
  CHECK(image(fg) == socle(ex.module("Q")));
  CHECK(compose(Intertwiner::identity(ex.module("Q")), f) == f);
  CHECK(compose(f, Intertwiner::identity(ex.module("P"))) == f);
  CHECK_THROWS_AS(compose(f, f), Error);

  const GalleryEntry two = gallery("remark_two_loops");
  const Intertwiner fgf = compose(two.morphism("f"), compose(two.morphism("g"), two.morphism("f")));
  CHECK(fgf.apply(basis_element(two.module("L"), 0)) == basis_element(two.module("M"), 2));
}

TEST_CASE("classify examples") {
  const GalleryEntry loop = gallery("remark_loop");
  const Classification f = classify(loop.morphism("f"));
  CHECK(f.surjective);
  CHECK_FALSE(f.injective);
  CHECK(f.kernel == socle(loop.module("L")));
  CHECK_FALSE(f.fixed_space);
  const Classification g = classify(loop.morphism("g"));
  CHECK(g.injective);
  CHECK_FALSE(g.surjective);
  CHECK(g.image == socle(loop.module("L")));

  const Representation& u = gallery("kronecker_Uk", {2}).module("U2");
  const Intertwiner id = Intertwiner::identity(u);
  const Classification c = classify(id.scaled(u.field().from_int(3)));
  CHECK(c.injective);
  CHECK(c.surjective);
  REQUIRE(c.fixed_space);
  CHECK(c.fixed_space->dim() == 0);
  CHECK(fixed_space(id).dim() == 2);
  CHECK(kernel(Intertwiner::zero(u, u)) == whole(u));
  CHECK(image(Intertwiner::zero(u, u)).is_zero());
}

TEST_CASE("endomorphism ring examples") {
  const FieldSpec& f3 = FieldSpec::prime(3);
  const GalleryEntry dyn = gallery("dynkin_An_injectives", {5}, &f3);
  for (int j = 1; j <= 5; ++j) {
    const EndRingAnalysis a = end_ring_analysis(dyn.module("I" + std::to_string(j)));
    CHECK(a.dim == 1);
    CHECK(a.is_scalar_only);
    CHECK_FALSE(a.is_dual_numbers);
  }
  for (long long m = 1; m <= 3; ++m) {
    const Representation u = gallery("cyclic_uniserial", {m}, &f3).module("U");
    const EndRingAnalysis a = end_ring_analysis(u);
    CHECK(a.dim == 2);
    CHECK(a.is_dual_numbers);
    REQUIRE(a.nilpotent_witness);
    CHECK_FALSE(a.nilpotent_witness->is_zero());
    CHECK(compose(*a.nilpotent_witness, *a.nilpotent_witness).is_zero());
  }
  const EndRingAnalysis two = end_ring_analysis(gallery("remark_two_loops", {}, &f3).module("L"));
  CHECK_FALSE(two.is_scalar_only);
  CHECK_FALSE(two.is_dual_numbers);
}

TEST_CASE("hom basis matches exhaustive enumeration") {
  std::size_t pairs = 0;
  for (const FieldSpec* f : {&FieldSpec::prime(2), &FieldSpec::prime(3)}) {
    const std::uint64_t p = *f->order();
    for (const auto& fam : module_families(*f)) {
      for (const auto& l : fam) {
        for (const auto& m : fam) {
          if (power(p, oracle::unknowns(l.module, m.module)) > 200000) continue;
          CAPTURE(l.label);
          CAPTURE(m.label);
          const HomBasis h = hom_basis(l.module, m.module);
          std::vector<Vector> span;
          for (const auto& b : h.basis) {
            CHECK(b.satisfies_arrow_equations());
            span.push_back(flatten_intertwiner(*f, b));
          }
          const std::size_t n = oracle::unknowns(l.module, m.module);
          const Subspace s = Subspace::span(*f, n, span);
          CHECK(s.dim() == h.dimension());
          bool all_inside = true;
          const std::uint64_t count = oracle::for_each_hom(l.module, m.module, [&](const oracle::Family& fam) {
            all_inside = all_inside && s.contains(flatten_family(*f, fam));
          });
          CHECK(count == power(p, h.dimension()));
          CHECK(all_inside);
          ++pairs;
        }
      }
    }
  }
  CHECK(pairs > 60);
}

TEST_CASE("hom dimension is invariant under duality") {
  for (const auto& fam : module_families(FieldSpec::prime(3))) {
    const AlgebraPtr& alg = fam.front().module.algebra_ptr();
    const Algebra op = alg->opposite();
    const AlgebraPtr opp = make_algebra(op.quiver, op.relations);
    for (const auto& l : fam) {
      for (const auto& m : fam) {
        CAPTURE(l.label);
        CAPTURE(m.label);
        CHECK(hom_basis(l.module, m.module).dimension() ==
              hom_basis(dual(m.module, opp), dual(l.module, opp)).dimension());
      }
    }
  }
}

TEST_CASE("invertible iff injective and surjective on random endomorphisms") {
  std::mt19937_64 rng(5);
  const FieldSpec& f = FieldSpec::prime(3);
  int invertible = 0, singular = 0;
  for (const auto& fam : module_families(f)) {
    for (const auto& l : fam) {
      const HomBasis h = hom_basis(l.module, l.module);
      for (int trial = 0; trial < 20; ++trial) {
        std::vector<Scalar> c;
        for (std::size_t i = 0; i < h.dimension(); ++i) c.push_back(f.element(rng() % 3));
        const Intertwiner e = combination(h, c);
        const Classification k = classify(e);
        CHECK(e.is_invertible() == (k.injective && k.surjective));
        CHECK(k.injective == k.kernel.is_zero());
        CHECK(k.surjective == (k.image == whole(l.module)));
        CHECK(k.kernel.total_dim() + k.image.total_dim() == l.module.total_dim());
        (e.is_invertible() ? invertible : singular)++;
        // fixed vectors of an automorphism form a subspace preserved by it
        if (k.fixed_space) {
          for (const auto& v : k.fixed_space->basis_vectors()) {
            CHECK(flatten(l.module, e.apply(unflatten(l.module, v))) == v);
          }
        }
      }
    }
  }
  CHECK(invertible > 0);
  CHECK(singular > 0);
}

TEST_CASE("hom space is closed under addition, scaling and composition") {
  const FieldSpec& f = FieldSpec::prime(5);
  const GalleryEntry c = gallery("commutative_two_loops", {3}, &f);
  const Representation& l = c.module("V");
  const Representation& r = c.module("RV");
  const HomBasis lr = hom_basis(l, r), rl = hom_basis(r, l);
  REQUIRE(lr.dimension() > 0);
  REQUIRE(rl.dimension() > 0);
  for (const auto& x : lr.basis) {
    for (const auto& y : lr.basis) CHECK((x + y.scaled(f.from_int(2))).satisfies_arrow_equations());
    for (const auto& z : rl.basis) {
      CHECK(compose(z, x).satisfies_arrow_equations());
      CHECK(compose(x, z).satisfies_arrow_equations());
    }
  }
  const std::vector<Scalar> coeffs(lr.dimension(), f.one());
  Intertwiner sum = Intertwiner::zero(l, r);
  for (const auto& x : lr.basis) sum = sum + x;
  CHECK(combination(lr, coeffs) == sum);
}
