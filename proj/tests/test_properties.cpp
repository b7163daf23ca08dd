#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "uniso/iso.hpp"
#include "uniso/workspace.hpp"

using namespace uniso;

namespace {

// Random quiver on up to three vertices with a length bound, so every
// representation satisfying the relations is nilpotent.
AlgebraPtr random_algebra(std::mt19937_64& rng) {
  Quiver q;
  const std::size_t nv = 1 + rng() % 3;
  for (std::size_t v = 0; v < nv; ++v) q.add_vertex(std::to_string(v + 1));
  const std::size_t na = 1 + rng() % 3;
  for (std::size_t a = 0; a < na; ++a) {
    q.add_arrow("x" + std::to_string(a), std::to_string(1 + rng() % nv), std::to_string(1 + rng() % nv));
  }
  MonomialRelations rel;
  rel.set_length_bound(2 + rng() % 2);
  return make_algebra(q, rel);
}

Matrix random_matrix(const FieldSpec& f, std::size_t r, std::size_t c, std::mt19937_64& rng) {
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, f.element(rng() % *f.order()));
  }
  return m;
}

Matrix random_invertible(const FieldSpec& f, std::size_t n, std::mt19937_64& rng) {
  while (true) {
    Matrix m = random_matrix(f, n, n, rng);
    if (is_invertible(m)) return m;
  }
}

// Random sparse arrow maps, retried until the relations hold; falls back to a
// simple.
Representation random_rep(const AlgebraPtr& alg, const FieldSpec& f, std::mt19937_64& rng, std::size_t max_dim) {
  const Quiver& q = alg->quiver;
  for (int attempt = 0; attempt < 50; ++attempt) {
    std::vector<std::size_t> dims;
    for (VertexIndex v = 0; v < q.vertex_count(); ++v) dims.push_back(rng() % (max_dim + 1));
    std::vector<Matrix> maps;
    for (const auto& a : q.arrows()) {
      Matrix m = random_matrix(f, dims[a.target], dims[a.source], rng);
      // sparsify so relations have a chance
      for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
          if (rng() % 2) m.set(i, j, f.zero());
        }
      }
      maps.push_back(std::move(m));
    }
    const Representation r = Representation::unchecked(alg, f, dims, maps);
    if (validate(r).ok) return r;
  }
  return simple(alg, f, 0);
}

Representation conjugate(const Representation& r, std::mt19937_64& rng) {
  const FieldSpec& f = r.field();
  std::vector<Matrix> change;
  for (VertexIndex v = 0; v < r.quiver().vertex_count(); ++v) change.push_back(random_invertible(f, r.dim(v), rng));
  std::vector<Matrix> maps;
  for (ArrowIndex a = 0; a < r.quiver().arrow_count(); ++a) {
    const Arrow& arrow = r.quiver().arrow(a);
    maps.push_back(change[arrow.target] * r.map(a) * inverse(change[arrow.source]));
  }
  return Representation(r.algebra_ptr(), f, r.dims(), maps);
}

}  // namespace

TEST_CASE("hom out of a projective and into an injective counts vertex dimensions") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 60; ++trial) {
    const AlgebraPtr alg = random_algebra(rng);
    const FieldSpec& f = trial % 2 ? FieldSpec::prime(3) : FieldSpec::prime(2);
    const Representation m = random_rep(alg, f, rng, 2);
    for (VertexIndex x = 0; x < alg->quiver.vertex_count(); ++x) {
      CHECK(hom_basis(projective(alg, f, x), m).dimension() == m.dim(x));
      CHECK(hom_basis(m, injective(alg, f, x)).dimension() == m.dim(x));
      CHECK(hom_basis(simple(alg, f, x), m).dimension() == socle(m).parts[x].dim());
    }
  }
}

TEST_CASE("hom dimension is additive over direct sums") {
  std::mt19937_64 rng(102);
  for (int trial = 0; trial < 40; ++trial) {
    const AlgebraPtr alg = random_algebra(rng);
    const FieldSpec& f = FieldSpec::prime(2);
    const Representation a = random_rep(alg, f, rng, 2), b = random_rep(alg, f, rng, 2), c = random_rep(alg, f, rng, 2);
    CHECK(hom_basis(direct_sum(a, b), c).dimension() == hom_basis(a, c).dimension() + hom_basis(b, c).dimension());
    CHECK(hom_basis(c, direct_sum(a, b)).dimension() == hom_basis(c, a).dimension() + hom_basis(c, b).dimension());
  }
}

TEST_CASE("base change gives an isomorphic module and every method sees it") {
  std::mt19937_64 rng(103);
  int uniform_pairs = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const AlgebraPtr alg = random_algebra(rng);
    const FieldSpec& f = trial % 3 == 0 ? FieldSpec::prime(3) : FieldSpec::prime(2);
    const Representation m = random_rep(alg, f, rng, 2);
    const Representation n = conjugate(m, rng);
    CAPTURE(m.dims_string());
    const IsoVerdict d = iso_direct(m, n);
    CHECK(d.verdict == Verdict::Isomorphic);
    if (d.isomorphism) CHECK(d.isomorphism->is_invertible());
    CHECK_FALSE(structural_obstruction(m, n));
    if (m.total_dim() > 0 && is_uniform(m)) {
      ++uniform_pairs;
      CHECK(nfold_criterion(m, n).verdict == Verdict::Isomorphic);
      CHECK(two_morphism_criterion(m, n).verdict == Verdict::Isomorphic);
    }
  }
  CHECK(uniform_pairs > 10);
}

TEST_CASE("direct search agrees with the exhaustive oracle on random pairs") {
  std::mt19937_64 rng(104);
  int iso = 0, not_iso = 0;
  for (int trial = 0; trial < 1500; ++trial) {
    const AlgebraPtr alg = random_algebra(rng);
    const FieldSpec& f = FieldSpec::prime(2);
    const Representation a = random_rep(alg, f, rng, 2);
    const Representation b = random_rep(alg, f, rng, 2);
    if (a.dims() != b.dims() || oracle::unknowns(a, b) > 12) continue;
    const bool truth = oracle::isomorphic(a, b);
    CHECK((iso_direct(a, b).verdict == Verdict::Isomorphic) == truth);
    (truth ? iso : not_iso)++;
    if (is_uniform(a) && is_uniform(b)) {
      CHECK((nfold_criterion(a, b).verdict == Verdict::Isomorphic) == truth);
    }
  }
  CHECK(iso > 5);
  CHECK(not_iso > 5);
}

TEST_CASE("double dual returns the module") {
  std::mt19937_64 rng(105);
  for (int trial = 0; trial < 40; ++trial) {
    const AlgebraPtr alg = random_algebra(rng);
    const Representation m = random_rep(alg, FieldSpec::prime(3), rng, 2);
    const Representation dm = dual(m);
    CHECK(dm.dims() == m.dims());
    CHECK(dual(dm, alg) == m);
    CHECK(socle(dm).total_dim() == m.total_dim() - radical(m).total_dim());
  }
}

TEST_CASE("random workspaces survive export and reparse") {
  std::mt19937_64 rng(106);
  for (int trial = 0; trial < 30; ++trial) {
    const AlgebraPtr alg = random_algebra(rng);
    const FieldSpec& f = trial % 2 ? FieldSpec::extension(2, 2) : FieldSpec::prime(5);
    Workspace ws;
    ws.field = &f;
    ws.algebra = alg;
    for (int i = 0; i < 3; ++i) {
      const std::string name = "M" + std::to_string(i);
      ws.modules.push_back(NamedModule{name, "", random_rep(alg, f, rng, 2)});
    }
    ws.morphisms.push_back(NamedMorphism{"id0", Intertwiner::identity(ws.modules[0].module)});
    const Workspace back = parse_workspace(export_workspace(ws));
    CHECK(equivalent(ws, back));
    for (std::size_t i = 0; i < ws.modules.size(); ++i) CHECK(back.modules[i].module == ws.modules[i].module);
  }
}

TEST_CASE("socle and radical series lengths agree") {
  std::mt19937_64 rng(107);
  for (int trial = 0; trial < 60; ++trial) {
    const AlgebraPtr alg = random_algebra(rng);
    const Representation m = random_rep(alg, FieldSpec::prime(2), rng, 3);
    // Loewy length read from the radical series of M and of its dual.
    const std::size_t loewy = radical_series(m).size() - 1;
    CHECK(radical_series(dual(m)).size() - 1 == loewy);
    const UniserialCertificate c = is_uniserial(m);
    if (c.uniserial) CHECK(loewy == m.total_dim());
  }
}
