#include "uniso/triangular.hpp"

#include "uniso/error.hpp"

namespace uniso {

namespace {

constexpr std::size_t kSubspaceCap = 1'000'000;

Scalar t_power(const TriangularRing& r, unsigned i) { return i == 0 ? r.d().one() : r.d().generator().pow(i); }

struct Decoded {
  Vector v;
  Vector w;
};

Decoded decode(const TriangularRing& r, const TriangularModule& m, const Vector& x) {
  Decoded out{zero_vector(r.d(), m.v_dim), Vector(x.end() - static_cast<std::ptrdiff_t>(m.w_dim), x.end())};
  for (std::size_t i = 0; i < m.v_dim; ++i) {
    for (unsigned c = 0; c < r.k(); ++c) out.v[i] += r.embed(x[i * r.k() + c]) * t_power(r, c);
  }
  return out;
}

Vector theta_apply(const TriangularRing& r, const TriangularModule& m, const Vector& w) {
  Vector out = zero_vector(r.d(), m.v_dim);
  for (std::size_t j = 0; j < m.w_dim; ++j) {
    const Scalar wj = r.embed(w[j]);
    for (std::size_t i = 0; i < m.v_dim; ++i) out[i] += m.theta(i, j) * wj;
  }
  return out;
}

template <typename F>
Matrix c_linear_matrix(const TriangularRing& r, const TriangularModule& m, F&& act) {
  const std::size_t n = m.c_dim(r);
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < n; ++j) {
    Vector e = zero_vector(r.c(), n);
    e[j] = r.c().one();
    const Decoded d = decode(r, m, e);
    auto [v, w] = act(d.v, d.w);
    cols.push_back(to_c_coordinates(r, m, v, w));
  }
  return Matrix::from_columns(r.c(), n, cols);
}

Vector scaled_vector(const Vector& v, const Scalar& s) {
  Vector out;
  for (const auto& x : v) out.push_back(x * s);
  return out;
}

std::optional<Matrix> find_isomorphism_between(const Subspace& a, const Subspace& b, const std::vector<Matrix>& actions) {
  const FieldSpec& c = a.field();
  const std::size_t n = a.ambient_dim(), d = a.dim();
  if (b.dim() != d) return std::nullopt;
  std::optional<Matrix> found;
  for_each_vector(c, d * d, [&](const Vector& entries) {
    const Matrix coeffs(c, d, d, entries);
    if (!is_invertible(coeffs)) return true;
    // ambient map sending a's i-th basis vector to sum_j coeffs(j, i) b_j, zero on a complement
    const Matrix a_basis = a.basis().transpose();   // n x d
    const Matrix b_basis = b.basis().transpose();   // n x d
    const Matrix images = b_basis * coeffs;         // n x d
    std::vector<Vector> cols(n, zero_vector(c, n));
    for (std::size_t i = 0; i < d; ++i) cols[a.pivots()[i]] = images.column(i);
    Matrix f = Matrix::from_columns(c, n, cols);
    // a's RREF basis has a 1 at its pivot and zeros at the other pivots, so f(a_i) = images_i
    if (!(f * a_basis == images)) return true;
    if (is_r_linear_on(f, a, actions, actions)) {
      found = std::move(f);
      return false;
    }
    return true;
  });
  return found;
}

}  // namespace

TriangularRing::TriangularRing(std::uint64_t p, unsigned k)
    : p_(p), k_(k), d_(&FieldSpec::extension(p, k)), c_(&FieldSpec::prime(p)) {
  if (k == 0) throw Error("extension degree must be positive");
}

Scalar TriangularRing::embed(const Scalar& c) const {
  if (&c.field() != c_) throw FieldMismatch("embed expects an element of C");
  return d_->element(c.index());
}

TriangularModule regular_module(const TriangularRing& r) {
  Matrix theta(r.d(), 2, 1);
  theta.set(1, 0, r.d().one());
  return TriangularModule{2, 1, std::move(theta)};
}

TriangularModule column_module(const TriangularRing& r) {
  Matrix theta(r.d(), 1, 1);
  theta.set(0, 0, r.d().one());
  return TriangularModule{1, 1, std::move(theta)};
}

Vector to_c_coordinates(const TriangularRing& r, const TriangularModule& m, const Vector& v, const Vector& w) {
  if (v.size() != m.v_dim || w.size() != m.w_dim) throw DimensionMismatch("vector sizes differ from the module");
  Vector out;
  for (const auto& x : v) {
    const auto coeffs = x.coefficients();
    for (unsigned c = 0; c < r.k(); ++c) out.push_back(r.c().element(c < coeffs.size() ? coeffs[c] : 0));
  }
  for (const auto& x : w) out.push_back(x);
  return out;
}

std::vector<Matrix> generator_actions(const TriangularRing& r, const TriangularModule& m) {
  std::vector<Matrix> out;
  for (unsigned i = 0; i < r.k(); ++i) {
    const Scalar power = t_power(r, i);
    out.push_back(c_linear_matrix(r, m, [&](const Vector& v, const Vector& w) {
      return std::pair{scaled_vector(v, power), zero_vector(r.c(), w.size())};
    }));
    out.push_back(c_linear_matrix(r, m, [&](const Vector&, const Vector& w) {
      return std::pair{scaled_vector(theta_apply(r, m, w), power), zero_vector(r.c(), w.size())};
    }));
  }
  out.push_back(c_linear_matrix(r, m, [&](const Vector& v, const Vector& w) {
    return std::pair{zero_vector(r.d(), v.size()), w};
  }));
  return out;
}

bool is_submodule(const std::vector<Matrix>& actions, const Subspace& s) {
  for (const auto& b : s.basis_vectors()) {
    for (const auto& g : actions) {
      if (!s.contains(g * b)) return false;
    }
  }
  return true;
}

std::vector<Subspace> submodules(const TriangularRing& r, const TriangularModule& m, std::size_t cap) {
  const auto actions = generator_actions(r, m);
  std::vector<Subspace> out;
  for_each_subspace(r.c(), m.c_dim(r), cap, [&](const Subspace& s) {
    if (is_submodule(actions, s)) out.push_back(s);
    return true;
  });
  return out;
}

Subspace socle_of(const std::vector<Subspace>& lattice, std::size_t ambient, const FieldSpec& c) {
  Subspace soc(c, ambient);
  for (const auto& s : lattice) {
    if (s.is_zero()) continue;
    bool minimal = true;
    for (const auto& t : lattice) {
      if (!t.is_zero() && t.dim() < s.dim() && s.contains(t)) {
        minimal = false;
        break;
      }
    }
    if (minimal) soc = soc + s;
  }
  return soc;
}

std::size_t socle_series_length(const std::vector<Subspace>& lattice, std::size_t ambient, const FieldSpec& c) {
  Subspace current(c, ambient);
  std::size_t steps = 0;
  while (current.dim() < ambient) {
    Subspace next = current;
    for (const auto& s : lattice) {
      if (!s.contains(current) || s.dim() == current.dim()) continue;
      bool minimal = true;
      for (const auto& t : lattice) {
        if (t.contains(current) && t.dim() > current.dim() && t.dim() < s.dim() && s.contains(t)) {
          minimal = false;
          break;
        }
      }
      if (minimal) next = next + s;
    }
    if (next.dim() == current.dim()) throw Error("lattice does not reach the whole module");
    current = next;
    ++steps;
  }
  return steps;
}

bool is_r_linear_on(const Matrix& f, const Subspace& source, const std::vector<Matrix>& src_actions,
                    const std::vector<Matrix>& dst_actions) {
  if (src_actions.size() != dst_actions.size()) throw DimensionMismatch("action lists differ in length");
  for (const auto& b : source.basis_vectors()) {
    for (std::size_t g = 0; g < src_actions.size(); ++g) {
      if (f * (src_actions[g] * b) != dst_actions[g] * (f * b)) return false;
    }
  }
  return true;
}

TriangularReport triangular_analysis(std::uint64_t p, unsigned k) {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < k; ++i) q *= p;
  if (q > 9) throw CapExceeded("triangular analysis needs p^k <= 9, got " + std::to_string(q));
  const TriangularRing ring(p, k);
  const FieldSpec& d = ring.d();
  const FieldSpec& c = ring.c();

  TriangularReport rep;
  rep.p = p;
  rep.k = k;
  const TriangularModule reg = regular_module(ring);
  const std::size_t n = reg.c_dim(ring);
  rep.ring_c_dim = n;
  const auto actions = generator_actions(ring, reg);
  const auto ideals = submodules(ring, reg, kSubspaceCap);
  rep.left_ideal_count = ideals.size();
  rep.proper_nonzero_count = 0;
  for (const auto& s : ideals) {
    if (!s.is_zero() && s.dim() < n) ++rep.proper_nonzero_count;
  }

  // The expected families, spanned over C by t^i times the D-generators.
  auto span_of = [&](const std::vector<std::pair<Vector, Vector>>& d_gens) {
    std::vector<Vector> vecs;
    for (unsigned i = 0; i < k; ++i) {
      for (const auto& [v, w] : d_gens) vecs.push_back(to_c_coordinates(ring, reg, scaled_vector(v, t_power(ring, i)), w));
    }
    return Subspace::span(c, n, vecs);
  };
  const Vector no_w = zero_vector(c, 1);
  std::vector<Subspace> simple;
  std::vector<Scalar> lambdas;
  for (std::uint64_t i = 0; i < q; ++i) {
    lambdas.push_back(d.element(i));
    simple.push_back(span_of({{Vector{d.one(), d.element(i)}, no_w}}));
  }
  const Subspace i_inf = span_of({{Vector{d.zero(), d.one()}, no_w}});
  simple.push_back(i_inf);
  rep.simple_ideal_count = simple.size();
  std::vector<Subspace> expected = simple;
  expected.push_back(span_of({{Vector{d.one(), d.zero()}, no_w}, {Vector{d.zero(), d.one()}, no_w}}));
  {
    std::vector<Vector> vecs = span_of({{Vector{d.zero(), d.one()}, no_w}}).basis_vectors();
    vecs.push_back(to_c_coordinates(ring, reg, Vector{d.zero(), d.zero()}, Vector{c.one()}));
    expected.push_back(Subspace::span(c, n, vecs));
  }
  bool all_expected_found = true;
  for (const auto& e : expected) {
    bool hit = false;
    for (const auto& s : ideals) hit = hit || s == e;
    all_expected_found = all_expected_found && hit;
  }
  bool all_listed = true;
  for (const auto& s : ideals) {
    if (s.is_zero() || s.dim() == n) continue;
    bool hit = false;
    for (const auto& e : expected) hit = hit || s == e;
    all_listed = all_listed && hit;
  }
  rep.matches_family_list = all_expected_found && all_listed && rep.proper_nonzero_count == expected.size();

  rep.simple_ideals_minimal = true;
  for (const auto& s : simple) {
    for (const auto& t : ideals) {
      if (!t.is_zero() && t.dim() < s.dim() && s.contains(t)) rep.simple_ideals_minimal = false;
    }
  }

  // x -> (x, lambda x) and x -> (0, x) on I_0
  const Subspace& i0 = simple[0];
  auto ambient_map = [&](auto&& act) {
    return c_linear_matrix(ring, reg, [&](const Vector& v, const Vector&) { return std::pair{act(v[0]), no_w}; });
  };
  rep.explicit_maps_isomorphisms = true;
  for (std::size_t i = 0; i <= q; ++i) {
    const Matrix f = i < q ? ambient_map([&](const Scalar& x) { return Vector{x, lambdas[i] * x}; })
                           : ambient_map([&](const Scalar& x) { return Vector{d.zero(), x}; });
    std::vector<Vector> images;
    for (const auto& b : i0.basis_vectors()) images.push_back(f * b);
    const Subspace img = Subspace::span(c, n, images);
    const bool ok = is_r_linear_on(f, i0, actions, actions) && img.dim() == i0.dim() && img == simple[i];
    rep.explicit_maps_isomorphisms = rep.explicit_maps_isomorphisms && ok;
  }

  rep.simple_ideals_pairwise_isomorphic = true;
  for (std::size_t i = 0; i < simple.size(); ++i) {
    for (std::size_t j = i + 1; j < simple.size(); ++j) {
      if (!find_isomorphism_between(simple[i], simple[j], actions)) rep.simple_ideals_pairwise_isomorphic = false;
    }
  }

  const TriangularModule col = column_module(ring);
  const std::size_t np = col.c_dim(ring);
  const auto lattice = submodules(ring, col, kSubspaceCap);
  const Subspace soc = socle_of(lattice, np, c);
  rep.soc_p_c_dim = soc.dim();
  rep.p_mod_soc_c_dim = np - soc.dim();
  rep.p_length = socle_series_length(lattice, np, c);
  rep.p_uniserial = true;
  for (const auto& a : lattice) {
    for (const auto& b : lattice) {
      if (!a.contains(b) && !b.contains(a)) rep.p_uniserial = false;
    }
  }
  return rep;
}

}  // namespace uniso
