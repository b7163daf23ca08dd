#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "uniso/quiver.hpp"

using namespace uniso;

namespace {

Quiver kronecker() {
  Quiver q;
  q.add_vertex("1");
  q.add_vertex("2");
  q.add_arrow("a", "1", "2");
  q.add_arrow("b", "1", "2");
  return q;
}

Quiver two_loops() {
  Quiver q;
  q.add_vertex("1");
  q.add_arrow("a", "1", "1");
  q.add_arrow("b", "1", "1");
  return q;
}

// Two vertices, a: 1 -> 2, b: 2 -> 1.
Quiver two_cycle() {
  Quiver q;
  q.add_vertex("1");
  q.add_vertex("2");
  q.add_arrow("a", "1", "2");
  q.add_arrow("b", "2", "1");
  return q;
}

}  // namespace

TEST_CASE("quiver construction rejects duplicates and unknown vertices") {
  Quiver q = kronecker();
  CHECK(q.vertex_count() == 2);
  CHECK(q.arrow_count() == 2);
  CHECK(q.vertex("2") == 1);
  CHECK(q.arrow_index("b") == 1);
  CHECK_THROWS_AS(q.add_vertex("1"), Error);
  CHECK_THROWS_AS(q.add_arrow("a", "1", "2"), Error);
  CHECK_THROWS_AS(q.add_arrow("c", "1", "3"), Error);
  CHECK(q.is_acyclic());
  CHECK_FALSE(two_loops().is_acyclic());
  const Quiver op = q.opposite();
  CHECK(op.arrow(0).source == 1);
  CHECK(op.arrow(0).target == 0);
}

TEST_CASE("path words compose right to left") {
  const Quiver q = two_cycle();
  const PathWord w = PathWord::parse(q, "a b a");
  CHECK(w.length() == 3);
  CHECK(w.source() == 0);
  CHECK(w.target() == 1);
  CHECK(w.to_string(q) == "a b a");
  CHECK(PathWord::parse(q, "e(2)").is_trivial());
  CHECK(PathWord::parse(q, "e(2)").to_string(q) == "e(2)");
  CHECK_THROWS_AS(PathWord::parse(q, "a a"), NotComposable);
  CHECK_THROWS_AS(PathWord::parse(q, "c"), Error);
  CHECK(w.contains_subword(PathWord::parse(q, "b a")));
  CHECK_FALSE(w.contains_subword(PathWord::parse(q, "a b a b")));
}

TEST_CASE("compose examples") {
  SUBCASE("trivial path is an identity") {
    const Algebra alg{kronecker(), {}};
    const PathWord a = PathWord::parse(alg.quiver, "a");
    CHECK(compose(alg, PathWord::trivial(1), a) == a);
    CHECK(compose(alg, a, PathWord::trivial(0)) == a);
  }
  SUBCASE("aba and bab vanish") {
    Algebra alg{two_cycle(), {}};
    alg.relations.add(PathWord::parse(alg.quiver, "a b a"));
    alg.relations.add(PathWord::parse(alg.quiver, "b a b"));
    const auto ba = compose(alg, PathWord::parse(alg.quiver, "b"), PathWord::parse(alg.quiver, "a"));
    REQUIRE(ba);
    CHECK(ba->to_string(alg.quiver) == "b a");
    CHECK_FALSE(compose(alg, PathWord::parse(alg.quiver, "a"), *ba));
  }
  SUBCASE("two loops with paths of length two zero") {
    Algebra alg{two_loops(), {}};
    alg.relations.set_length_bound(2);
    CHECK_FALSE(compose(alg, PathWord::parse(alg.quiver, "a"), PathWord::parse(alg.quiver, "b")));
  }
  SUBCASE("mismatched endpoints are an error, not zero") {
    const Algebra alg{kronecker(), {}};
    CHECK_THROWS_AS(compose(alg, PathWord::parse(alg.quiver, "a"), PathWord::parse(alg.quiver, "b")), NotComposable);
  }
}

TEST_CASE("relations stay subword-reduced and reject short words") {
  const Quiver q = two_loops();
  MonomialRelations r;
  r.add(PathWord::parse(q, "a b a"));
  r.add(PathWord::parse(q, "b a"));
  CHECK(r.forbidden().size() == 1);
  CHECK(r.forbidden()[0].to_string(q) == "b a");
  r.add(PathWord::parse(q, "a b a"));
  CHECK(r.forbidden().size() == 1);
  CHECK_THROWS_AS(r.add(PathWord::parse(q, "a")), Error);
  CHECK_THROWS_AS(r.add(PathWord::trivial(0)), Error);
}

TEST_CASE("path basis examples") {
  SUBCASE("Kronecker") {
    const Algebra alg{kronecker(), {}};
    const PathBasis b = enumerate_path_basis(alg);
    CHECK(b.size() == 4);
    CHECK(b.between(0, 1).size() == 2);
    CHECK(b.starting_at(0).size() == 3);
  }
  SUBCASE("loop with a^2 = 0") {
    Quiver q;
    q.add_vertex("1");
    q.add_arrow("a", "1", "1");
    Algebra alg{q, {}};
    alg.relations.add(PathWord::parse(q, "a a"));
    const PathBasis b = enumerate_path_basis(alg);
    REQUIRE(b.size() == 2);
    CHECK(b.words[0].is_trivial());
    CHECK(b.words[1].to_string(q) == "a");
  }
  SUBCASE("free loop is infinite") {
    Quiver q;
    q.add_vertex("1");
    q.add_arrow("a", "1", "1");
    CHECK_THROWS_AS(enumerate_path_basis(Algebra{q, {}}, 100), InfiniteDimensional);
  }
  SUBCASE("two-cycle with aba = bab = 0") {
    Algebra alg{two_cycle(), {}};
    alg.relations.add(PathWord::parse(alg.quiver, "a b a"));
    alg.relations.add(PathWord::parse(alg.quiver, "b a b"));
    // e1 e2 a b ab ba
    CHECK(enumerate_path_basis(alg).size() == 6);
  }
}

TEST_CASE("path basis is subword closed and matches a depth-first oracle") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 40; ++trial) {
    Quiver q;
    const std::size_t nv = 1 + trial % 3;
    for (std::size_t v = 0; v < nv; ++v) q.add_vertex(std::to_string(v + 1));
    std::uniform_int_distribution<std::size_t> pick(0, nv - 1);
    const std::size_t na = 1 + trial % 4;
    for (std::size_t a = 0; a < na; ++a) {
      q.add_arrow("x" + std::to_string(a), q.vertex_name(pick(rng)), q.vertex_name(pick(rng)));
    }
    MonomialRelations rel;
    rel.set_length_bound(2 + trial % 3);
    // a few random forbidden words of length 2
    for (std::size_t a = 0; a < na; ++a) {
      for (std::size_t b = 0; b < na; ++b) {
        if (q.arrow(a).source == q.arrow(b).target && rng() % 3 == 0) rel.add(PathWord::from_arrows(q, {a, b}));
      }
    }
    const Algebra alg{q, rel};
    const PathBasis basis = enumerate_path_basis(alg);
    CHECK(basis.size() == oracle::path_count(alg));
    for (const auto& w : basis.words) {
      CHECK_FALSE(alg.relations.kills(w));
      if (w.length() >= 2) {
        std::vector<ArrowIndex> pre(w.arrows().begin() + 1, w.arrows().end());
        std::vector<ArrowIndex> suf(w.arrows().begin(), w.arrows().end() - 1);
        const auto in_basis = [&](const PathWord& x) {
          return std::find(basis.words.begin(), basis.words.end(), x) != basis.words.end();
        };
        CHECK(in_basis(PathWord::from_arrows(q, pre)));
        CHECK(in_basis(PathWord::from_arrows(q, suf)));
      }
    }
  }
}

TEST_CASE("compose is associative on nonzero triples") {
  Algebra alg{two_cycle(), {}};
  alg.relations.set_length_bound(6);
  const PathBasis b = enumerate_path_basis(alg);
  for (const auto& x : b.words) {
    for (const auto& y : b.words) {
      if (x.source() != y.target()) continue;
      for (const auto& z : b.words) {
        if (y.source() != z.target()) continue;
        const auto xy = compose(alg, x, y), yz = compose(alg, y, z);
        if (!xy || !yz) continue;
        CHECK(compose(alg, *xy, z) == compose(alg, x, *yz));
      }
    }
  }
}

TEST_CASE("opposite algebra reverses relation words") {
  Algebra alg{two_cycle(), {}};
  alg.relations.add(PathWord::parse(alg.quiver, "a b"));
  const Algebra op = alg.opposite();
  CHECK(op.relations.forbidden()[0].to_string(op.quiver) == "b a");
  CHECK(enumerate_path_basis(op).size() == enumerate_path_basis(alg).size());
}
