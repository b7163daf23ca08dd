#include "uniso/gallery.hpp"

#include <sstream>
#include <utility>

#include "uniso/error.hpp"
#include "uniso/iso.hpp"

namespace uniso {

const Representation& GalleryEntry::module(const std::string& name) const& {
  for (const auto& [n, m] : modules) {
    if (n == name) return m;
  }
  throw Error("gallery entry " + this->name + " has no module " + name);
}

Representation GalleryEntry::module(const std::string& name) && { return std::as_const(*this).module(name); }

const Intertwiner& GalleryEntry::morphism(const std::string& name) const& {
  for (const auto& [n, m] : morphisms) {
    if (n == name) return m;
  }
  throw Error("gallery entry " + this->name + " has no morphism " + name);
}

Intertwiner GalleryEntry::morphism(const std::string& name) && { return std::as_const(*this).morphism(name); }

std::vector<std::string> GalleryEntry::failing_facts() const {
  std::vector<std::string> out;
  for (const auto& f : facts) {
    if (!f.check()) out.push_back(f.claim);
  }
  return out;
}

std::vector<std::string> gallery_names() {
  return {"kronecker_Uk",         "ex1_PQ",         "remark_loop",      "remark_two_loops", "euclidean_An",
          "commutative_two_loops", "dynkin_An_injectives", "cyclic_uniserial", "triangular"};
}

namespace {

Quiver numbered_quiver(std::size_t n) {
  Quiver q;
  for (std::size_t i = 1; i <= n; ++i) q.add_vertex(std::to_string(i));
  return q;
}

PathWord word(const Algebra& alg, const std::string& text) { return PathWord::parse(alg.quiver, text); }

Matrix ints(const FieldSpec& f, std::size_t r, std::size_t c, std::initializer_list<long long> e) {
  return Matrix::from_ints(f, r, c, e);
}

void fact(GalleryEntry& e, std::string claim, std::function<bool()> check) {
  e.facts.push_back(ExpectedFact{std::move(claim), std::move(check)});
}

bool isomorphic(const Representation& a, const Representation& b) {
  return iso_direct(a, b).verdict == Verdict::Isomorphic;
}

bool all_methods_not_iso(const Representation& a, const Representation& b) {
  for (const auto& v : iso_all(a, b)) {
    if (v.verdict != Verdict::NotIsomorphic) return false;
  }
  return true;
}

Representation rad_module(const Representation& r) { return restrict_to(r, radical(r)).module; }
Representation top_quotient(const Representation& r) { return quotient(r, socle(r)).module; }

long long param(const std::vector<long long>& params, std::size_t i, long long fallback) {
  return i < params.size() ? params[i] : fallback;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw Error(message);
}

// ---------------------------------------------------------------------------

GalleryEntry kronecker(const std::vector<long long>& params, const FieldSpec& f) {
  require(params.size() <= 1, "kronecker_Uk takes one parameter k");
  const long long k = param(params, 0, 1);
  GalleryEntry e;
  e.name = "kronecker_Uk";
  e.parameters = {{"k", k}};
  e.field = &f;
  Quiver q = numbered_quiver(2);
  q.add_arrow("a", "1", "2");
  q.add_arrow("b", "1", "2");
  e.algebra = make_algebra(q);

  std::vector<std::pair<long long, Scalar>> values;
  if (f.is_finite()) {
    require(k >= 0 && static_cast<std::uint64_t>(k) < *f.order(), "k must be an element index of the field");
    for (std::uint64_t i = 0; i < *f.order(); ++i) values.emplace_back(static_cast<long long>(i), f.element(i));
  } else {
    require(k >= -2 && k <= 2, "over Q the entry covers k in -2..2");
    for (long long i = -2; i <= 2; ++i) values.emplace_back(i, f.from_int(i));
  }
  auto name_of = [](long long l) { return "U" + (l < 0 ? "m" + std::to_string(-l) : std::to_string(l)); };
  Scalar lambda = f.zero();
  for (const auto& [l, s] : values) {
    e.modules.emplace_back(name_of(l), Representation(e.algebra, f, {1, 1}, {ints(f, 1, 1, {1}), Matrix(f, 1, 1, {s})}));
    if (l == k) lambda = s;
  }
  const Quotient pres = presented_module(e.algebra, f, 0, {{{f.one(), word(*e.algebra, "b")}, {-lambda, word(*e.algebra, "a")}}});
  e.modules.emplace_back("Pres", pres.module);

  const std::string uk = name_of(k);
  const Representation u = e.module(uk);
  fact(e, "U_k is uniserial of length 2", [u] { return is_uniserial(u).uniserial && length(u) == 2; });
  fact(e, "P(1)/(b - k a) has dims (1,1) and is isomorphic to U_k",
       [u, p = pres.module] { return p.dims() == std::vector<std::size_t>{1, 1} && isomorphic(p, u); });
  e.assertions.push_back("uniserial(" + uk + ")");
  e.assertions.push_back("length(" + uk + ") = 2");
  e.assertions.push_back("iso(Pres," + uk + ") via direct");
  for (const auto& [l, s] : values) {
    const Representation ul = e.module(name_of(l));
    const std::size_t expected = l == k ? 1 : 0;
    fact(e, "dim Hom(U_k, U_" + std::to_string(l) + ") = " + std::to_string(expected),
         [u, ul, expected] { return hom_basis(u, ul).dimension() == expected; });
    e.assertions.push_back("homdim(" + uk + "," + name_of(l) + ") = " + std::to_string(expected));
    if (l != k) {
      fact(e, "U_k not isomorphic to U_" + std::to_string(l), [u, ul] { return !isomorphic(u, ul); });
      e.assertions.push_back("not-iso(" + uk + "," + name_of(l) + ") via nfold");
    } else {
      e.assertions.push_back("iso(" + uk + "," + uk + ") via nfold");
    }
  }
  return e;
}

GalleryEntry ex1_pq(const std::vector<long long>& params, const FieldSpec& f) {
  require(params.empty(), "ex1_PQ takes no parameters");
  GalleryEntry e;
  e.name = "ex1_PQ";
  e.field = &f;
  Quiver q = numbered_quiver(2);
  q.add_arrow("a", "1", "2");
  q.add_arrow("b", "2", "1");
  MonomialRelations rel;
  rel.add(PathWord::parse(q, "a b a"));
  rel.add(PathWord::parse(q, "b a b"));
  e.algebra = make_algebra(q, rel);
  // P = P(1): e1, b a at vertex 1 and a at vertex 2; Q = P(2): b at 1 and e2, a b at 2.
  const Representation p = projective(e.algebra, f, 0);
  const Representation qm = projective(e.algebra, f, 1);
  const Intertwiner fm(p, qm, {ints(f, 1, 2, {1, 0}), ints(f, 2, 1, {0, 1})});  // e1 -> b
  const Intertwiner gm(qm, p, {ints(f, 2, 1, {0, 1}), ints(f, 1, 2, {1, 0})});  // e2 -> a
  e.modules = {{"P", p}, {"Q", qm}};
  e.morphisms = {{"f", fm}, {"g", gm}};

  fact(e, "dims (2,1) and (1,2)", [p, qm] {
    return p.dims() == std::vector<std::size_t>{2, 1} && qm.dims() == std::vector<std::size_t>{1, 2};
  });
  fact(e, "both uniform of length 3", [p, qm] { return is_uniform(p) && is_uniform(qm) && length(p) == 3 && length(qm) == 3; });
  fact(e, "dim Hom(P,Q) = dim Hom(Q,P) = 1",
       [p, qm] { return hom_basis(p, qm).dimension() == 1 && hom_basis(qm, p).dimension() == 1; });
  fact(e, "g∘f and f∘g are nonzero", [fm, gm] { return !compose(gm, fm).is_zero() && !compose(fm, gm).is_zero(); });
  fact(e, "f∘g∘f = 0 and g∘f∘g = 0",
       [fm, gm] { return compose(fm, compose(gm, fm)).is_zero() && compose(gm, compose(fm, gm)).is_zero(); });
  fact(e, "(g∘f)(P) = Soc P and (f∘g)(Q) = Soc Q", [p, qm, fm, gm] {
    return image(compose(gm, fm)) == socle(p) && image(compose(fm, gm)) == socle(qm);
  });
  fact(e, "two alternating maps do not decide, three do", [p, qm] {
    const WeakenedBound b = verify_weakened_bound(p, qm, 2);
    return b.some_mfold_nonzero && b.all_mplus1fold_zero;
  });
  fact(e, "P and Q are not isomorphic", [p, qm] { return all_methods_not_iso(p, qm); });
  e.assertions = {"dims(P) = (2,1)",       "dims(Q) = (1,2)",       "uniform(P)",
                  "uniform(Q)",            "length(P) = 3",         "length(Q) = 3",
                  "homdim(P,Q) = 1",       "homdim(Q,P) = 1",       "nonzero(g∘f)",
                  "nonzero(f∘g)",          "zero(f∘g∘f)",           "zero(g∘f∘g)",
                  "image(g∘f) = soc(P)",   "image(f∘g) = soc(Q)",   "weakened-bound(P,Q,2)",
                  "not-iso(P,Q) via nfold", "not-iso(P,Q) via two-morphism", "not-iso(P,Q) via direct"};
  return e;
}

GalleryEntry remark_loop(const std::vector<long long>& params, const FieldSpec& f) {
  require(params.empty(), "remark_loop takes no parameters");
  GalleryEntry e;
  e.name = "remark_loop";
  e.field = &f;
  Quiver q = numbered_quiver(1);
  q.add_arrow("a", "1", "1");
  MonomialRelations rel;
  rel.add(PathWord::parse(q, "a a"));
  e.algebra = make_algebra(q, rel);
  const Representation l = projective(e.algebra, f, 0);  // e1, a
  const Representation m = simple(e.algebra, f, 0);
  const Intertwiner fm(l, m, {ints(f, 1, 2, {1, 0})});
  const Intertwiner gm(m, l, {ints(f, 2, 1, {0, 1})});
  e.modules = {{"L", l}, {"M", m}};
  e.morphisms = {{"f", fm}, {"g", gm}};
  fact(e, "g∘f is nonzero", [fm, gm] { return !compose(gm, fm).is_zero(); });
  fact(e, "lengths 2 and 1", [l, m] { return length(l) == 2 && length(m) == 1; });
  fact(e, "both uniform", [l, m] { return is_uniform(l) && is_uniform(m); });
  fact(e, "f surjective, g injective", [fm, gm] { return classify(fm).surjective && classify(gm).injective; });
  fact(e, "L and M are not isomorphic", [l, m] { return iso_direct(l, m).verdict == Verdict::NotIsomorphic; });
  e.assertions = {"nonzero(g∘f)", "length(L) = 2", "length(M) = 1", "uniform(L)", "uniform(M)",
                  "surjective(f)", "injective(g)", "not-iso(L,M) via direct"};
  return e;
}

GalleryEntry remark_two_loops(const std::vector<long long>& params, const FieldSpec& f) {
  require(params.empty(), "remark_two_loops takes no parameters");
  GalleryEntry e;
  e.name = "remark_two_loops";
  e.field = &f;
  Quiver q = numbered_quiver(1);
  q.add_arrow("a", "1", "1");
  q.add_arrow("b", "1", "1");
  MonomialRelations rel;
  rel.set_length_bound(2);
  e.algebra = make_algebra(q, rel);
  // L = P(1) with basis v1, v2 = a v1, v3 = b v1; M has basis v4, v5, v6 with a v4 = v6 = b v5.
  const Representation l = projective(e.algebra, f, 0);
  const Representation m(e.algebra, f, {3},
                         {ints(f, 3, 3, {0, 0, 0, 0, 0, 0, 1, 0, 0}), ints(f, 3, 3, {0, 0, 0, 0, 0, 0, 0, 1, 0})});
  const Intertwiner fm(l, m, {ints(f, 3, 3, {1, 0, 0, 0, 0, 0, 0, 1, 0})});  // v1->v4, v2->v6, v3->0
  const Intertwiner gm(m, l, {ints(f, 3, 3, {0, 0, 0, 1, 0, 0, 0, 0, 0})});  // v4->v2, v5,v6->0
  e.modules = {{"L", l}, {"M", m}};
  e.morphisms = {{"f", fm}, {"g", gm}};
  fact(e, "(f∘g∘f)(v1) = v6", [l, m, fm, gm] {
    const ModuleElement v1 = basis_element(l, 0);
    return compose(fm, compose(gm, fm)).apply(v1) == basis_element(m, 2);
  });
  fact(e, "Soc L is 2-dimensional, L not uniform", [l] { return socle(l).total_dim() == 2 && !is_uniform(l); });
  fact(e, "Soc M is 1-dimensional, M uniform", [m] { return socle(m).total_dim() == 1 && is_uniform(m); });
  fact(e, "L and M both have dimension 3", [l, m] { return l.total_dim() == 3 && m.total_dim() == 3; });
  fact(e, "L and M are not isomorphic by a structural invariant",
       [l, m] { return structural_obstruction(l, m).has_value(); });
  e.assertions = {"maps(f∘g∘f, 1:[1 0 0]) = 1:[0 0 1]", "socdims(L) = (2)", "socdims(M) = (1)", "not-uniform(L)",
                  "uniform(M)", "length(L) = 3", "length(M) = 3", "not-iso(L,M) via direct"};
  return e;
}

GalleryEntry euclidean(const std::vector<long long>& params, const FieldSpec& f) {
  require(params.size() <= 1, "euclidean_An takes one parameter n");
  const long long n = param(params, 0, 4);
  require(n >= 3 && n <= 64, "euclidean_An needs 3 <= n <= 64");
  GalleryEntry e;
  e.name = "euclidean_An";
  e.parameters = {{"n", n}};
  e.field = &f;
  Quiver q = numbered_quiver(static_cast<std::size_t>(n));
  for (long long i = 1; i < n; ++i) q.add_arrow("a" + std::to_string(i), std::to_string(i), std::to_string(i + 1));
  q.add_arrow("b", "1", std::to_string(n));
  e.algebra = make_algebra(q);
  std::string long_path;
  for (long long i = n - 1; i >= 1; --i) long_path += (i == n - 1 ? "" : " ") + ("a" + std::to_string(i));
  const PathWord lp = word(*e.algebra, long_path), b = word(*e.algebra, "b");
  const Representation l = presented_module(e.algebra, f, 0, {{{f.one(), lp}, {-f.one(), b}}}).module;
  const Representation m = presented_module(e.algebra, f, 0, {{{f.one(), b}}}).module;
  const Representation p2 = projective(e.algebra, f, 1);
  const Representation in1 = injective(e.algebra, f, static_cast<VertexIndex>(n - 2));
  const Representation rl = rad_module(l), rm = rad_module(m), ql = top_quotient(l), qm = top_quotient(m);
  e.modules = {{"L", l}, {"M", m}, {"P2", p2}, {"In1", in1}, {"RL", rl}, {"RM", rm}, {"QL", ql}, {"QM", qm}};
  const std::size_t len = static_cast<std::size_t>(n);
  fact(e, "L and M uniserial of length n", [l, m, len] {
    return is_uniserial(l).uniserial && is_uniserial(m).uniserial && length(l) == len && length(m) == len;
  });
  fact(e, "b L != 0 and b M = 0", [l, m, b] { return !l.word_matrix(b).is_zero() && m.word_matrix(b).is_zero(); });
  fact(e, "maximal submodules isomorphic to P(2)", [rl, rm, p2] { return isomorphic(rl, p2) && isomorphic(rm, p2); });
  fact(e, "maximal quotients isomorphic to I(n-1)", [ql, qm, in1] { return isomorphic(ql, in1) && isomorphic(qm, in1); });
  fact(e, "L and M are not isomorphic", [l, m] { return all_methods_not_iso(l, m); });
  e.assertions = {"uniserial(L)",          "uniserial(M)",          "length(L) = " + std::to_string(n),
                  "length(M) = " + std::to_string(n), "acts-nonzero(L, b)", "acts-zero(M, b)",
                  "iso(RL,P2) via direct", "iso(RM,P2) via direct", "iso(QL,In1) via direct",
                  "iso(QM,In1) via direct", "not-iso(L,M) via direct", "not-iso(L,M) via nfold",
                  "not-iso(L,M) via two-morphism", "not-iso(L,M) via mono-epi"};
  return e;
}

GalleryEntry commutative_two_loops(const std::vector<long long>& params, const FieldSpec& f) {
  require(params.size() <= 1, "commutative_two_loops takes one parameter n");
  const long long n = param(params, 0, 3);
  require(n >= 2 && n <= 64, "commutative_two_loops needs 2 <= n <= 64");
  const std::size_t d = static_cast<std::size_t>(n);
  GalleryEntry e;
  e.name = "commutative_two_loops";
  e.parameters = {{"n", n}};
  e.field = &f;
  Quiver q = numbered_quiver(1);
  q.add_arrow("a", "1", "1");
  q.add_arrow("b", "1", "1");
  MonomialRelations rel;
  std::string an = "a";
  for (std::size_t i = 1; i < d; ++i) an += " a";
  rel.add(PathWord::parse(q, an));
  rel.add(PathWord::parse(q, "b b"));
  rel.add(PathWord::parse(q, "a b"));
  rel.add(PathWord::parse(q, "b a"));
  e.algebra = make_algebra(q, rel);
  Matrix a(f, d, d), bv(f, d, d), bw(f, d, d);
  for (std::size_t i = 0; i + 1 < d; ++i) a.set(i + 1, i, f.one());
  bv.set(d - 1, 0, f.one());  // b v1 = vn
  const Representation v(e.algebra, f, {d}, {a, bv});
  const Representation w(e.algebra, f, {d}, {a, bw});
  const Representation rv = rad_module(v), rw = rad_module(w), qv = top_quotient(v), qw = top_quotient(w);
  e.modules = {{"V", v}, {"W", w}, {"RV", rv}, {"RW", rw}, {"QV", qv}, {"QW", qw}};
  fact(e, "V and W uniserial of length n", [v, w, d] {
    return is_uniserial(v).uniserial && is_uniserial(w).uniserial && length(v) == d && length(w) == d;
  });
  fact(e, "V and W are not isomorphic", [v, w] { return all_methods_not_iso(v, w); });
  fact(e, "the four length n-1 subquotients are pairwise isomorphic", [rv, rw, qv, qw] {
    const std::vector<Representation> s{rv, rw, qv, qw};
    for (std::size_t i = 0; i < s.size(); ++i) {
      for (std::size_t j = i + 1; j < s.size(); ++j) {
        if (!isomorphic(s[i], s[j])) return false;
      }
    }
    return true;
  });
  e.assertions = {"uniserial(V)", "uniserial(W)", "not-iso(V,W) via direct", "not-iso(V,W) via nfold",
                  "iso(RV,RW) via direct", "iso(RV,QV) via direct", "iso(RV,QW) via direct",
                  "iso(RW,QV) via direct", "iso(RW,QW) via direct", "iso(QV,QW) via direct"};
  return e;
}

GalleryEntry dynkin_injectives(const std::vector<long long>& params, const FieldSpec& f) {
  require(params.size() <= 1, "dynkin_An_injectives takes one parameter n");
  const long long n = param(params, 0, 5);
  require(n >= 1 && n <= 64, "dynkin_An_injectives needs 1 <= n <= 64");
  GalleryEntry e;
  e.name = "dynkin_An_injectives";
  e.parameters = {{"n", n}};
  e.field = &f;
  Quiver q = numbered_quiver(static_cast<std::size_t>(n));
  for (long long i = 1; i < n; ++i) q.add_arrow("a" + std::to_string(i), std::to_string(i), std::to_string(i + 1));
  e.algebra = make_algebra(q);
  for (long long j = 1; j <= n; ++j) {
    const Representation ij = injective(e.algebra, f, static_cast<VertexIndex>(j - 1));
    const std::string name = "I" + std::to_string(j);
    e.modules.emplace_back(name, ij);
    const std::size_t dj = static_cast<std::size_t>(j);
    fact(e, "dim I(" + std::to_string(j) + ") = " + std::to_string(j) + ", uniserial, End = K", [ij, dj] {
      return ij.total_dim() == dj && is_uniserial(ij).uniserial && end_ring_analysis(ij).is_scalar_only;
    });
    e.assertions.push_back("length(" + name + ") = " + std::to_string(j));
    e.assertions.push_back("uniserial(" + name + ")");
    e.assertions.push_back("endring(" + name + ") = scalar");
  }
  return e;
}

GalleryEntry cyclic_uniserial(const std::vector<long long>& params, const FieldSpec& f) {
  require(params.size() <= 1, "cyclic_uniserial takes one parameter m");
  const long long m = param(params, 0, 2);
  require(m >= 1 && m <= 64, "cyclic_uniserial needs 1 <= m <= 64");
  const std::size_t d = static_cast<std::size_t>(m);
  GalleryEntry e;
  e.name = "cyclic_uniserial";
  e.parameters = {{"m", m}};
  e.field = &f;
  Quiver q = numbered_quiver(d);
  for (std::size_t i = 1; i <= d; ++i) q.add_arrow("c" + std::to_string(i), std::to_string(i), std::to_string(i % d + 1));
  e.algebra = make_algebra(q);
  // u_1..u_m at vertices 1..m, u_{m+1} a second basis vector at vertex 1; c_i u_i = u_{i+1}.
  std::vector<std::size_t> dims(d, 1);
  dims[0] = 2;
  std::vector<Matrix> maps;
  for (std::size_t i = 1; i <= d; ++i) {
    const std::size_t src = i - 1, tgt = i % d;
    Matrix c(f, dims[tgt], dims[src]);
    const std::size_t row = tgt == 0 ? 1 : 0;  // landing at vertex 1 means u_{m+1}
    c.set(row, 0, f.one());
    maps.push_back(std::move(c));
  }
  const Representation u(e.algebra, f, dims, std::move(maps));
  e.modules = {{"U", u}};
  fact(e, "uniserial of length m+1", [u, d] { return is_uniserial(u).uniserial && length(u) == d + 1; });
  fact(e, "End = K[x]/(x^2)", [u] {
    const EndRingAnalysis a = end_ring_analysis(u);
    return a.dim == 2 && a.is_dual_numbers && a.nilpotent_witness && !a.nilpotent_witness->is_zero() &&
           compose(*a.nilpotent_witness, *a.nilpotent_witness).is_zero();
  });
  e.assertions = {"uniserial(U)", "length(U) = " + std::to_string(m + 1), "homdim(U,U) = 2", "endring(U) = dual-numbers"};
  return e;
}

GalleryEntry triangular(const std::vector<long long>& params) {
  require(params.size() <= 2, "triangular takes parameters p and k");
  const long long p = param(params, 0, 2), k = param(params, 1, 2);
  require(p >= 2 && k >= 1 && is_prime(static_cast<std::uint64_t>(p)), "triangular needs a prime p and k >= 1");
  GalleryEntry e;
  e.name = "triangular";
  e.parameters = {{"p", p}, {"k", k}};
  e.field = &FieldSpec::prime(static_cast<std::uint64_t>(p));
  const TriangularReport r = triangular_analysis(static_cast<std::uint64_t>(p), static_cast<unsigned>(k));
  e.triangular = r;
  std::uint64_t q = 1;
  for (long long i = 0; i < k; ++i) q *= static_cast<std::uint64_t>(p);
  fact(e, "proper nonzero left ideals: |D| + 3, the four families", [r, q] {
    return r.proper_nonzero_count == q + 3 && r.matches_family_list;
  });
  fact(e, "the |D| + 1 simple ideals are minimal and pairwise isomorphic", [r, q] {
    return r.simple_ideal_count == q + 1 && r.simple_ideals_minimal && r.explicit_maps_isomorphisms &&
           r.simple_ideals_pairwise_isomorphic;
  });
  fact(e, "dim_C Soc P = [D:C], dim_C P/Soc P = 1", [r] { return r.soc_p_c_dim == r.k && r.p_mod_soc_c_dim == 1; });
  fact(e, "P uniserial of length 2", [r] { return r.p_uniserial && r.p_length == 2; });
  return e;
}

}  // namespace

GalleryEntry gallery(const std::string& name, const std::vector<long long>& params, const FieldSpec* field) {
  const FieldSpec& f3 = field ? *field : FieldSpec::prime(3);
  if (name == "kronecker_Uk") return kronecker(params, field ? *field : FieldSpec::prime(5));
  if (name == "ex1_PQ") return ex1_pq(params, f3);
  if (name == "remark_loop") return remark_loop(params, f3);
  if (name == "remark_two_loops") return remark_two_loops(params, f3);
  if (name == "euclidean_An") return euclidean(params, f3);
  if (name == "commutative_two_loops") return commutative_two_loops(params, f3);
  if (name == "dynkin_An_injectives") return dynkin_injectives(params, f3);
  if (name == "cyclic_uniserial") return cyclic_uniserial(params, f3);
  if (name == "triangular") {
    if (field) throw Error("triangular fixes its own fields");
    return triangular(params);
  }
  throw Error("unknown gallery entry '" + name + "'");
}

}  // namespace uniso
