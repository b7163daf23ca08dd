#include "uniso/representation.hpp"

#include <numeric>
#include <sstream>

namespace uniso {

std::shared_ptr<const Representation::Data> Representation::build(AlgebraPtr algebra, const FieldSpec& field,
                                                                   std::vector<std::size_t> dims,
                                                                   std::vector<Matrix> maps) {
  if (!algebra) throw Error("representation without an algebra");
  const Quiver& q = algebra->quiver;
  if (dims.size() != q.vertex_count()) throw DimensionMismatch("dimension vector length differs from vertex count");
  if (maps.size() != q.arrow_count()) throw DimensionMismatch("one matrix per arrow is required");
  for (ArrowIndex a = 0; a < maps.size(); ++a) {
    const Arrow& arrow = q.arrow(a);
    if (&maps[a].field() != &field) throw FieldMismatch("matrix for arrow '" + arrow.name + "' over another field");
    if (maps[a].rows() != dims[arrow.target] || maps[a].cols() != dims[arrow.source]) {
      std::ostringstream os;
      os << "arrow '" << arrow.name << "' needs a " << dims[arrow.target] << "x" << dims[arrow.source]
         << " matrix, got " << maps[a].rows() << "x" << maps[a].cols();
      throw DimensionMismatch(os.str());
    }
  }
  auto d = std::make_shared<Data>();
  d->algebra = std::move(algebra);
  d->field = &field;
  d->offsets.resize(dims.size());
  std::size_t total = 0;
  for (std::size_t v = 0; v < dims.size(); ++v) {
    d->offsets[v] = total;
    total += dims[v];
  }
  d->total = total;
  d->dims = std::move(dims);
  d->maps = std::move(maps);
  return d;
}

Representation::Representation(AlgebraPtr algebra, const FieldSpec& field, std::vector<std::size_t> dims,
                               std::vector<Matrix> maps)
    : data_(build(std::move(algebra), field, std::move(dims), std::move(maps))) {
  const ValidationReport report = validate(*this);
  if (!report.ok) throw RelationViolated(report.message);
}

Representation Representation::unchecked(AlgebraPtr algebra, const FieldSpec& field, std::vector<std::size_t> dims,
                                         std::vector<Matrix> maps) {
  return Representation(build(std::move(algebra), field, std::move(dims), std::move(maps)));
}

Matrix Representation::word_matrix(const PathWord& w) const {
  if (w.is_trivial()) return Matrix::identity(field(), dim(w.source()));
  Matrix m = map(w.arrows().front());
  for (std::size_t i = 1; i < w.arrows().size(); ++i) m = m * map(w.arrows()[i]);
  return m;
}

bool Representation::operator==(const Representation& o) const {
  if (data_ == o.data_) return true;
  return data_->field == o.data_->field && same_algebra(*this, o) && data_->dims == o.data_->dims &&
         data_->maps == o.data_->maps;
}

std::string Representation::dims_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t v = 0; v < dims().size(); ++v) {
    if (v) os << ',';
    os << dims()[v];
  }
  os << ')';
  return os.str();
}

bool same_algebra(const Representation& a, const Representation& b) {
  return a.algebra_ptr() == b.algebra_ptr() || a.algebra() == b.algebra();
}

void require_same_algebra(const Representation& a, const Representation& b) {
  if (&a.field() != &b.field()) throw FieldMismatch("modules over different fields");
  if (!same_algebra(a, b)) throw AlgebraMismatch("modules over different algebras");
}

ValidationReport validate(const Representation& r) {
  const Quiver& q = r.quiver();
  const MonomialRelations& rel = r.algebra().relations;
  for (const auto& w : rel.forbidden()) {
    if (!r.word_matrix(w).is_zero()) {
      std::string text;
      for (std::size_t i = 0; i < w.arrows().size(); ++i) {
        if (i) text += "·";
        text += q.arrow(w.arrows()[i]).name;
      }
      return ValidationReport{false, "relation violated: " + text + " ≠ 0", w};
    }
  }
  if (auto bound = rel.length_bound()) {
    // Every nonzero path of length exactly `bound` must act as zero.
    std::vector<PathWord> frontier;
    for (VertexIndex v = 0; v < q.vertex_count(); ++v) frontier.push_back(PathWord::trivial(v));
    for (std::size_t len = 0; len < *bound; ++len) {
      std::vector<PathWord> next;
      for (const auto& w : frontier) {
        for (ArrowIndex a = 0; a < q.arrow_count(); ++a) {
          if (q.arrow(a).source != w.target()) continue;
          std::vector<ArrowIndex> arrows{a};
          arrows.insert(arrows.end(), w.arrows().begin(), w.arrows().end());
          next.push_back(PathWord::from_arrows(q, std::move(arrows)));
        }
      }
      frontier = std::move(next);
    }
    for (const auto& w : frontier) {
      if (!r.word_matrix(w).is_zero()) {
        return ValidationReport{false, "relation violated: path " + w.to_string(q) + " of length " +
                                           std::to_string(*bound) + " ≠ 0",
                                w};
      }
    }
  }
  return {};
}

bool ModuleElement::is_zero() const {
  for (const auto& p : parts) {
    if (!uniso::is_zero(p)) return false;
  }
  return true;
}

ModuleElement zero_element(const Representation& r) {
  ModuleElement x;
  for (std::size_t d : r.dims()) x.parts.push_back(zero_vector(r.field(), d));
  return x;
}

ModuleElement element_at(const Representation& r, VertexIndex vertex, Vector v) {
  if (v.size() != r.dim(vertex)) throw DimensionMismatch("element vector length does not match vertex dimension");
  ModuleElement x = zero_element(r);
  x.parts[vertex] = std::move(v);
  return x;
}

ModuleElement basis_element(const Representation& r, std::size_t index) {
  Vector v = zero_vector(r.field(), r.total_dim());
  v.at(index) = r.field().one();
  return unflatten(r, v);
}

Vector flatten(const Representation& r, const ModuleElement& x) {
  Vector out;
  out.reserve(r.total_dim());
  for (const auto& p : x.parts) out.insert(out.end(), p.begin(), p.end());
  if (out.size() != r.total_dim()) throw DimensionMismatch("element does not match the representation");
  return out;
}

ModuleElement unflatten(const Representation& r, std::span<const Scalar> v) {
  if (v.size() != r.total_dim()) throw DimensionMismatch("flat vector length mismatch");
  ModuleElement x;
  for (VertexIndex u = 0; u < r.dims().size(); ++u) {
    auto first = v.begin() + static_cast<std::ptrdiff_t>(r.offset(u));
    x.parts.emplace_back(first, first + static_cast<std::ptrdiff_t>(r.dim(u)));
  }
  return x;
}

ModuleElement act(const Representation& r, const PathWord& w, const ModuleElement& x) {
  if (x.parts.size() != r.dims().size()) throw DimensionMismatch("element does not match the representation");
  ModuleElement out = zero_element(r);
  out.parts[w.target()] = r.word_matrix(w) * x.parts[w.source()];
  return out;
}

std::size_t Subrepresentation::total_dim() const {
  std::size_t t = 0;
  for (const auto& p : parts) t += p.dim();
  return t;
}

std::vector<std::size_t> Subrepresentation::dims() const {
  std::vector<std::size_t> d;
  for (const auto& p : parts) d.push_back(p.dim());
  return d;
}

bool Subrepresentation::contains(const Subrepresentation& o) const {
  if (parts.size() != o.parts.size()) throw DimensionMismatch("subrepresentations of different modules");
  for (std::size_t v = 0; v < parts.size(); ++v) {
    if (!parts[v].contains(o.parts[v])) return false;
  }
  return true;
}

Subrepresentation zero_sub(const Representation& r) {
  Subrepresentation s;
  for (std::size_t d : r.dims()) s.parts.emplace_back(r.field(), d);
  return s;
}

Subrepresentation whole(const Representation& r) {
  Subrepresentation s;
  for (std::size_t d : r.dims()) s.parts.push_back(Subspace::full(r.field(), d));
  return s;
}

bool is_stable(const Representation& r, const Subrepresentation& s) {
  if (s.parts.size() != r.dims().size()) return false;
  for (VertexIndex v = 0; v < s.parts.size(); ++v) {
    if (s.parts[v].ambient_dim() != r.dim(v)) return false;
  }
  for (ArrowIndex a = 0; a < r.quiver().arrow_count(); ++a) {
    const Arrow& arrow = r.quiver().arrow(a);
    for (const auto& b : s.parts[arrow.source].basis_vectors()) {
      if (!s.parts[arrow.target].contains(r.map(a) * b)) return false;
    }
  }
  return true;
}

Subrepresentation sum(const Subrepresentation& a, const Subrepresentation& b) {
  Subrepresentation s;
  for (std::size_t v = 0; v < a.parts.size(); ++v) s.parts.push_back(a.parts[v] + b.parts.at(v));
  return s;
}

Subrepresentation intersect(const Subrepresentation& a, const Subrepresentation& b) {
  Subrepresentation s;
  for (std::size_t v = 0; v < a.parts.size(); ++v) s.parts.push_back(a.parts[v].intersect(b.parts.at(v)));
  return s;
}

namespace {

// Closes per-vertex seed vectors under every arrow.
Subrepresentation close_under_arrows(const Representation& r, std::vector<std::vector<Vector>> seeds) {
  Subrepresentation s = zero_sub(r);
  std::vector<Vector> queue_vectors;
  std::vector<VertexIndex> queue_vertices;
  for (VertexIndex v = 0; v < seeds.size(); ++v) {
    for (auto& x : seeds[v]) {
      queue_vectors.push_back(std::move(x));
      queue_vertices.push_back(v);
    }
  }
  while (!queue_vectors.empty()) {
    Vector x = std::move(queue_vectors.back());
    const VertexIndex v = queue_vertices.back();
    queue_vectors.pop_back();
    queue_vertices.pop_back();
    if (s.parts[v].contains(x)) continue;
    s.parts[v] = s.parts[v] + Subspace::span(r.field(), r.dim(v), {x});
    for (ArrowIndex a = 0; a < r.quiver().arrow_count(); ++a) {
      const Arrow& arrow = r.quiver().arrow(a);
      if (arrow.source != v) continue;
      Vector y = r.map(a) * x;
      if (is_zero(y)) continue;
      queue_vectors.push_back(std::move(y));
      queue_vertices.push_back(arrow.target);
    }
  }
  return s;
}

}  // namespace

Subrepresentation generated_sub(const Representation& r, const std::vector<ModuleElement>& gens) {
  std::vector<std::vector<Vector>> seeds(r.dims().size());
  for (const auto& g : gens) {
    if (g.parts.size() != r.dims().size()) throw DimensionMismatch("generator does not belong to the module");
    for (VertexIndex v = 0; v < g.parts.size(); ++v) {
      if (g.parts[v].size() != r.dim(v)) throw DimensionMismatch("generator does not belong to the module");
      if (!is_zero(g.parts[v])) seeds[v].push_back(g.parts[v]);
    }
  }
  return close_under_arrows(r, std::move(seeds));
}

Quotient quotient(const Representation& r, const Subrepresentation& s) {
  if (!is_stable(r, s)) throw Error("quotient by a family that is not arrow-stable");
  const FieldSpec& f = r.field();
  const std::size_t n = r.dims().size();
  std::vector<std::vector<std::size_t>> keep(n);
  std::vector<std::size_t> qdims(n);
  std::vector<Matrix> projection;
  for (VertexIndex v = 0; v < n; ++v) {
    keep[v] = s.parts[v].non_pivots();
    qdims[v] = keep[v].size();
    Matrix p(f, qdims[v], r.dim(v));
    for (std::size_t j = 0; j < r.dim(v); ++j) {
      Vector e = zero_vector(f, r.dim(v));
      e[j] = f.one();
      const Vector red = s.parts[v].reduce(e);
      for (std::size_t i = 0; i < qdims[v]; ++i) p.set(i, j, red[keep[v][i]]);
    }
    projection.push_back(std::move(p));
  }
  std::vector<Matrix> maps;
  for (ArrowIndex a = 0; a < r.quiver().arrow_count(); ++a) {
    const Arrow& arrow = r.quiver().arrow(a);
    // Lift coset representatives e_j (j non-pivot), apply the arrow, project.
    Matrix lift(f, r.dim(arrow.source), qdims[arrow.source]);
    for (std::size_t i = 0; i < qdims[arrow.source]; ++i) lift.set(keep[arrow.source][i], i, f.one());
    maps.push_back(projection[arrow.target] * r.map(a) * lift);
  }
  return Quotient{Representation(r.algebra_ptr(), f, std::move(qdims), std::move(maps)), std::move(projection)};
}

Submodule restrict_to(const Representation& r, const Subrepresentation& s) {
  if (!is_stable(r, s)) throw Error("restriction to a family that is not arrow-stable");
  const FieldSpec& f = r.field();
  std::vector<Matrix> inclusion;
  for (VertexIndex v = 0; v < s.parts.size(); ++v) inclusion.push_back(s.parts[v].basis().transpose());
  std::vector<Matrix> maps;
  for (ArrowIndex a = 0; a < r.quiver().arrow_count(); ++a) {
    const Arrow& arrow = r.quiver().arrow(a);
    const Subspace& src = s.parts[arrow.source];
    const Subspace& tgt = s.parts[arrow.target];
    Matrix m(f, tgt.dim(), src.dim());
    for (std::size_t j = 0; j < src.dim(); ++j) {
      const Vector c = tgt.coordinates(r.map(a) * src.basis_vector(j));
      for (std::size_t i = 0; i < c.size(); ++i) m.set(i, j, c[i]);
    }
    maps.push_back(std::move(m));
  }
  return Submodule{Representation(r.algebra_ptr(), f, s.dims(), std::move(maps)), std::move(inclusion)};
}

Subrepresentation radical_of(const Representation& r, const Subrepresentation& s) {
  Subrepresentation out = zero_sub(r);
  for (ArrowIndex a = 0; a < r.quiver().arrow_count(); ++a) {
    const Arrow& arrow = r.quiver().arrow(a);
    std::vector<Vector> images;
    for (const auto& b : s.parts[arrow.source].basis_vectors()) images.push_back(r.map(a) * b);
    out.parts[arrow.target] = out.parts[arrow.target] + Subspace::span(r.field(), r.dim(arrow.target), images);
  }
  return out;
}

Subrepresentation radical(const Representation& r) { return radical_of(r, whole(r)); }

Subrepresentation socle(const Representation& r) {
  Subrepresentation out = whole(r);
  for (ArrowIndex a = 0; a < r.quiver().arrow_count(); ++a) {
    const Arrow& arrow = r.quiver().arrow(a);
    out.parts[arrow.source] = out.parts[arrow.source].intersect(kernel_basis(r.map(a)));
  }
  return out;
}

std::vector<Subrepresentation> radical_series(const Representation& r) {
  std::vector<Subrepresentation> series{whole(r)};
  while (!series.back().is_zero()) {
    Subrepresentation next = radical_of(r, series.back());
    if (next.total_dim() == series.back().total_dim()) {
      throw Error("arrows do not act nilpotently; the radical series does not reach zero");
    }
    series.push_back(std::move(next));
  }
  return series;
}

UniserialCertificate is_uniserial(const Representation& r) {
  UniserialCertificate cert;
  cert.series = radical_series(r);
  cert.uniserial = true;
  for (std::size_t i = 0; i + 1 < cert.series.size(); ++i) {
    const std::size_t layer = cert.series[i].total_dim() - cert.series[i + 1].total_dim();
    cert.layer_dims.push_back(layer);
    if (layer > 1) cert.uniserial = false;
  }
  return cert;
}

bool is_uniform(const Representation& r) { return socle(r).total_dim() == 1; }

std::size_t length(const Representation& r) { return r.total_dim(); }

Representation simple(const AlgebraPtr& algebra, const FieldSpec& field, VertexIndex v) {
  const Quiver& q = algebra->quiver;
  if (v >= q.vertex_count()) throw Error("vertex index out of range");
  std::vector<std::size_t> dims(q.vertex_count(), 0);
  dims[v] = 1;
  std::vector<Matrix> maps;
  for (const auto& a : q.arrows()) maps.emplace_back(field, dims[a.target], dims[a.source]);
  return Representation(algebra, field, std::move(dims), std::move(maps));
}

Representation projective(const AlgebraPtr& algebra, const FieldSpec& field, VertexIndex x, std::size_t cap) {
  const Quiver& q = algebra->quiver;
  if (x >= q.vertex_count()) throw Error("vertex index out of range");
  const PathBasis basis = enumerate_path_basis(*algebra, cap);
  const std::vector<PathWord> words = basis.starting_at(x);
  // Local index of each word inside its target vertex block.
  std::vector<std::size_t> dims(q.vertex_count(), 0);
  std::vector<std::size_t> local(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) local[i] = dims[words[i].target()]++;
  std::vector<Matrix> maps;
  for (ArrowIndex a = 0; a < q.arrow_count(); ++a) {
    const Arrow& arrow = q.arrow(a);
    Matrix m(field, dims[arrow.target], dims[arrow.source]);
    const PathWord step = PathWord::from_arrows(q, {a});
    for (std::size_t i = 0; i < words.size(); ++i) {
      if (words[i].target() != arrow.source) continue;
      auto image = compose(*algebra, step, words[i]);
      if (!image) continue;
      for (std::size_t j = 0; j < words.size(); ++j) {
        if (words[j] == *image) {
          m.set(local[j], local[i], field.one());
          break;
        }
      }
    }
    maps.push_back(std::move(m));
  }
  return Representation(algebra, field, std::move(dims), std::move(maps));
}

Representation dual(const Representation& r, const AlgebraPtr& target) {
  if (!(*target == r.algebra().opposite())) throw AlgebraMismatch("dual must land on the opposite algebra");
  std::vector<Matrix> maps;
  for (const auto& m : r.maps()) maps.push_back(m.transpose());
  return Representation(target, r.field(), r.dims(), std::move(maps));
}

Representation dual(const Representation& r) { return dual(r, make_algebra(r.quiver().opposite(), r.algebra().relations.reversed())); }

Representation injective(const AlgebraPtr& algebra, const FieldSpec& field, VertexIndex x, std::size_t cap) {
  const AlgebraPtr op = std::make_shared<const Algebra>(algebra->opposite());
  return dual(projective(op, field, x, cap), algebra);
}

Representation direct_sum(const Representation& a, const Representation& b) {
  require_same_algebra(a, b);
  const FieldSpec& f = a.field();
  std::vector<std::size_t> dims;
  for (std::size_t v = 0; v < a.dims().size(); ++v) dims.push_back(a.dim(v) + b.dim(v));
  std::vector<Matrix> maps;
  for (ArrowIndex i = 0; i < a.quiver().arrow_count(); ++i) {
    const Arrow& arrow = a.quiver().arrow(i);
    Matrix m(f, dims[arrow.target], dims[arrow.source]);
    for (std::size_t r = 0; r < a.map(i).rows(); ++r) {
      for (std::size_t c = 0; c < a.map(i).cols(); ++c) m.set(r, c, a.map(i)(r, c));
    }
    for (std::size_t r = 0; r < b.map(i).rows(); ++r) {
      for (std::size_t c = 0; c < b.map(i).cols(); ++c) {
        m.set(a.dim(arrow.target) + r, a.dim(arrow.source) + c, b.map(i)(r, c));
      }
    }
    maps.push_back(std::move(m));
  }
  return Representation(a.algebra_ptr(), f, std::move(dims), std::move(maps));
}

}  // namespace uniso

namespace uniso {

ModuleElement projective_element(const Representation& p, VertexIndex x, const PathCombination& terms,
                                 std::size_t cap) {
  const Algebra& alg = p.algebra();
  const std::vector<PathWord> words = enumerate_path_basis(alg, cap).starting_at(x);
  ModuleElement out = zero_element(p);
  for (const auto& [coeff, word] : terms) {
    if (word.source() != x) throw NotComposable("path " + word.to_string(alg.quiver) + " does not start at the generator");
    if (&coeff.field() != &p.field()) throw FieldMismatch("coefficient over another field");
    std::size_t local = 0;
    for (const auto& w : words) {
      if (w == word) {
        out.parts[w.target()][local] += coeff;
        break;
      }
      if (w.target() == word.target()) ++local;
    }
  }
  return out;
}

Quotient presented_module(const AlgebraPtr& algebra, const FieldSpec& field, VertexIndex x,
                          const std::vector<PathCombination>& generators, std::size_t cap) {
  const Representation p = projective(algebra, field, x, cap);
  std::vector<ModuleElement> gens;
  for (const auto& g : generators) gens.push_back(projective_element(p, x, g, cap));
  return quotient(p, generated_sub(p, gens));
}

}  // namespace uniso
