#include "uniso/hom.hpp"

#include <sstream>

namespace uniso {

namespace {

void check_shapes(const Representation& source, const Representation& target, const std::vector<Matrix>& comps) {
  require_same_algebra(source, target);
  if (comps.size() != source.dims().size()) throw DimensionMismatch("one component per vertex is required");
  for (VertexIndex v = 0; v < comps.size(); ++v) {
    if (&comps[v].field() != &source.field()) throw FieldMismatch("intertwiner component over another field");
    if (comps[v].rows() != target.dim(v) || comps[v].cols() != source.dim(v)) {
      std::ostringstream os;
      os << "component at vertex " << source.quiver().vertex_name(v) << " must be " << target.dim(v) << "x"
         << source.dim(v);
      throw DimensionMismatch(os.str());
    }
  }
}

}  // namespace

Intertwiner::Intertwiner(Trusted, Representation source, Representation target, std::vector<Matrix> components)
    : source_(std::move(source)), target_(std::move(target)), components_(std::move(components)) {}

Intertwiner::Intertwiner(Representation source, Representation target, std::vector<Matrix> components)
    : source_(std::move(source)), target_(std::move(target)), components_(std::move(components)) {
  check_shapes(source_, target_, components_);
  if (!satisfies_arrow_equations()) throw Error("matrices do not commute with the arrow actions");
}

Intertwiner Intertwiner::unchecked(Representation source, Representation target, std::vector<Matrix> components) {
  check_shapes(source, target, components);
  return Intertwiner(Trusted{}, std::move(source), std::move(target), std::move(components));
}

Intertwiner Intertwiner::identity(const Representation& r) {
  std::vector<Matrix> comps;
  for (std::size_t d : r.dims()) comps.push_back(Matrix::identity(r.field(), d));
  return Intertwiner(Trusted{}, r, r, std::move(comps));
}

Intertwiner Intertwiner::zero(const Representation& source, const Representation& target) {
  require_same_algebra(source, target);
  std::vector<Matrix> comps;
  for (VertexIndex v = 0; v < source.dims().size(); ++v) comps.emplace_back(source.field(), target.dim(v), source.dim(v));
  return Intertwiner(Trusted{}, source, target, std::move(comps));
}

bool Intertwiner::is_zero() const {
  for (const auto& c : components_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

bool Intertwiner::is_invertible() const {
  for (const auto& c : components_) {
    if (!uniso::is_invertible(c)) return false;
  }
  return true;
}

bool Intertwiner::satisfies_arrow_equations() const {
  const Quiver& q = source_.quiver();
  for (ArrowIndex a = 0; a < q.arrow_count(); ++a) {
    const Arrow& arrow = q.arrow(a);
    if (components_[arrow.target] * source_.map(a) != target_.map(a) * components_[arrow.source]) return false;
  }
  return true;
}

ModuleElement Intertwiner::apply(const ModuleElement& x) const {
  if (x.parts.size() != components_.size()) throw DimensionMismatch("element does not belong to the source");
  ModuleElement out;
  for (VertexIndex v = 0; v < components_.size(); ++v) out.parts.push_back(components_[v] * x.parts[v]);
  return out;
}

Vector Intertwiner::coordinates() const {
  Vector out;
  for (const auto& c : components_) {
    for (std::size_t col = 0; col < c.cols(); ++col) {
      for (std::size_t row = 0; row < c.rows(); ++row) out.push_back(c(row, col));
    }
  }
  return out;
}

Intertwiner Intertwiner::operator+(const Intertwiner& o) const {
  if (!(source_ == o.source_) || !(target_ == o.target_)) throw NotComposable("sum of morphisms with different endpoints");
  std::vector<Matrix> comps;
  for (std::size_t v = 0; v < components_.size(); ++v) comps.push_back(components_[v] + o.components_[v]);
  return Intertwiner(Trusted{}, source_, target_, std::move(comps));
}

Intertwiner Intertwiner::scaled(const Scalar& s) const {
  std::vector<Matrix> comps;
  for (const auto& c : components_) comps.push_back(c.scaled(s));
  return Intertwiner(Trusted{}, source_, target_, std::move(comps));
}

bool Intertwiner::operator==(const Intertwiner& o) const {
  return components_ == o.components_ && source_ == o.source_ && target_ == o.target_;
}

Intertwiner compose(const Intertwiner& g, const Intertwiner& f) {
  if (!f.target().same_object(g.source()) && !(f.target() == g.source())) {
    throw NotComposable("cannot compose: target of the first morphism differs from source of the second");
  }
  std::vector<Matrix> comps;
  comps.reserve(f.components().size());
  for (std::size_t v = 0; v < f.components().size(); ++v) comps.push_back(g.at(v) * f.at(v));
  return Intertwiner::unchecked(f.source(), g.target(), std::move(comps));
}

std::vector<std::size_t> hom_unknown_offsets(const Representation& l, const Representation& m) {
  std::vector<std::size_t> offsets;
  std::size_t total = 0;
  for (VertexIndex v = 0; v < l.dims().size(); ++v) {
    offsets.push_back(total);
    total += m.dim(v) * l.dim(v);
  }
  offsets.push_back(total);
  return offsets;
}

HomBasis hom_basis(const Representation& l, const Representation& m) {
  require_same_algebra(l, m);
  const FieldSpec& f = l.field();
  const Quiver& q = l.quiver();
  const std::vector<std::size_t> off = hom_unknown_offsets(l, m);
  const std::size_t unknowns = off.back();
  auto var = [&](VertexIndex v, std::size_t row, std::size_t col) { return off[v] + col * m.dim(v) + row; };

  std::size_t equations = 0;
  for (const auto& a : q.arrows()) equations += m.dim(a.target) * l.dim(a.source);
  Matrix system(f, equations, unknowns);
  std::size_t eq = 0;
  for (ArrowIndex a = 0; a < q.arrow_count(); ++a) {
    const Arrow& arrow = q.arrow(a);
    const Matrix& la = l.map(a);
    const Matrix& ma = m.map(a);
    const VertexIndex s = arrow.source, t = arrow.target;
    // (phi_t L_a - M_a phi_s)[i][j] = 0
    for (std::size_t i = 0; i < m.dim(t); ++i) {
      for (std::size_t j = 0; j < l.dim(s); ++j, ++eq) {
        for (std::size_t k = 0; k < l.dim(t); ++k) {
          if (la(k, j).is_zero()) continue;
          const std::size_t x = var(t, i, k);
          system.set(eq, x, system(eq, x) + la(k, j));
        }
        for (std::size_t k = 0; k < m.dim(s); ++k) {
          if (ma(i, k).is_zero()) continue;
          const std::size_t x = var(s, k, j);
          system.set(eq, x, system(eq, x) - ma(i, k));
        }
      }
    }
  }
  const Subspace solutions = kernel_basis(system);
  HomBasis out{l, m, {}};
  for (std::size_t b = 0; b < solutions.dim(); ++b) {
    const Vector coords = solutions.basis_vector(b);
    std::vector<Matrix> comps;
    for (VertexIndex v = 0; v < l.dims().size(); ++v) {
      Matrix c(f, m.dim(v), l.dim(v));
      for (std::size_t col = 0; col < l.dim(v); ++col) {
        for (std::size_t row = 0; row < m.dim(v); ++row) c.set(row, col, coords[var(v, row, col)]);
      }
      comps.push_back(std::move(c));
    }
    out.basis.push_back(Intertwiner::unchecked(l, m, std::move(comps)));
  }
  return out;
}

Intertwiner combination(const HomBasis& basis, std::span<const Scalar> coeffs) {
  if (coeffs.size() != basis.basis.size()) throw DimensionMismatch("coefficient count differs from hom dimension");
  std::vector<Matrix> comps;
  for (VertexIndex v = 0; v < basis.source.dims().size(); ++v) {
    comps.emplace_back(basis.source.field(), basis.target.dim(v), basis.source.dim(v));
  }
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i].is_zero()) continue;
    for (VertexIndex v = 0; v < comps.size(); ++v) {
      comps[v] = comps[v] + basis.basis[i].at(v).scaled(coeffs[i]);
    }
  }
  return Intertwiner::unchecked(basis.source, basis.target, std::move(comps));
}

Subrepresentation image(const Intertwiner& f) {
  Subrepresentation s;
  for (const auto& c : f.components()) s.parts.push_back(Subspace::column_space(c));
  return s;
}

Subrepresentation kernel(const Intertwiner& f) {
  Subrepresentation s;
  for (const auto& c : f.components()) s.parts.push_back(kernel_basis(c));
  return s;
}

Subspace fixed_space(const Intertwiner& f) {
  if (!f.is_endomorphism()) throw Error("fixed space requested for a morphism that is not an endomorphism");
  const Representation& r = f.source();
  const std::size_t n = r.total_dim();
  Matrix block(r.field(), n, n);
  for (VertexIndex v = 0; v < r.dims().size(); ++v) {
    const std::size_t o = r.offset(v);
    for (std::size_t i = 0; i < r.dim(v); ++i) {
      for (std::size_t j = 0; j < r.dim(v); ++j) {
        Scalar x = f.at(v)(i, j);
        if (i == j) x -= r.field().one();
        block.set(o + i, o + j, std::move(x));
      }
    }
  }
  return kernel_basis(block);
}

Classification classify(const Intertwiner& f) {
  Classification c{true, true, image(f), kernel(f), std::nullopt};
  c.injective = c.kernel.is_zero();
  c.surjective = c.image.total_dim() == f.target().total_dim();
  if (f.is_endomorphism()) c.fixed_space = fixed_space(f);
  return c;
}

EndRingAnalysis end_ring_analysis(const Representation& l) {
  const HomBasis end = hom_basis(l, l);
  EndRingAnalysis out;
  out.dim = end.dimension();
  out.is_scalar_only = out.dim == 1;
  if (out.dim != 2) return out;

  const FieldSpec& f = l.field();
  const std::size_t n = end.basis[0].coordinates().size();
  const Intertwiner id = Intertwiner::identity(l);
  const Vector id_coords = id.coordinates();
  std::vector<Vector> coords{end.basis[0].coordinates(), end.basis[1].coordinates()};
  if (!Subspace::span(f, n, coords).contains(id_coords)) return out;

  // Pick the basis element that together with id spans End.
  const Intertwiner& other =
      Subspace::span(f, n, {id_coords, coords[0]}).dim() == 2 ? end.basis[0] : end.basis[1];
  const Subspace plane = Subspace::span(f, n, {id_coords, other.coordinates()});
  const Intertwiner square = compose(other, other);
  // Express other^2 = alpha id + beta other.
  Matrix cols = Matrix::from_columns(f, n, {id_coords, other.coordinates()});
  Matrix aug(f, n, 3);
  const Vector sq = square.coordinates();
  for (std::size_t i = 0; i < n; ++i) {
    aug.set(i, 0, cols(i, 0));
    aug.set(i, 1, cols(i, 1));
    aug.set(i, 2, sq[i]);
  }
  if (!plane.contains(sq)) return out;
  const RrefResult r = rref(aug);
  if (r.rank != 2 || r.pivot_columns[1] != 1) return out;
  const Scalar alpha = r.form(0, 2), beta = r.form(1, 2);

  std::optional<Scalar> lambda;
  if (f.characteristic() == 2) {
    if (beta.is_zero()) lambda = alpha.pow(*f.order() / 2);  // inverse Frobenius
  } else {
    const Scalar half = f.from_int(2).inverse();
    const Scalar candidate = beta * half;
    if (candidate * candidate == -alpha) lambda = candidate;
  }
  if (!lambda) return out;
  Intertwiner nil = other + id.scaled(-*lambda);
  if (nil.is_zero() || !compose(nil, nil).is_zero()) return out;
  out.is_dual_numbers = true;
  out.nilpotent_witness = std::move(nil);
  return out;
}

}  // namespace uniso
