#pragma once

// Finite-dimensional representations of a quiver with monomial relations.
//
// A representation assigns field^dims[v] to every vertex v and a
// dims[target] x dims[source] matrix to every arrow. Values are immutable and
// cheap to copy (shared storage).

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "uniso/field.hpp"
#include "uniso/matrix.hpp"
#include "uniso/quiver.hpp"

namespace uniso {

struct ValidationReport {
  bool ok = true;
  std::string message;
  std::optional<PathWord> violated;
};

class Representation {
 public:
  /// Validates shapes and relations; throws DimensionMismatch or RelationViolated.
  Representation(AlgebraPtr algebra, const FieldSpec& field, std::vector<std::size_t> dims,
                 std::vector<Matrix> maps);
  /// Checks shapes only. Used to build objects that validate() should reject.
  static Representation unchecked(AlgebraPtr algebra, const FieldSpec& field, std::vector<std::size_t> dims,
                                  std::vector<Matrix> maps);

  const Algebra& algebra() const { return *data_->algebra; }
  const AlgebraPtr& algebra_ptr() const { return data_->algebra; }
  const Quiver& quiver() const { return data_->algebra->quiver; }
  const FieldSpec& field() const { return *data_->field; }

  const std::vector<std::size_t>& dims() const { return data_->dims; }
  std::size_t dim(VertexIndex v) const { return data_->dims.at(v); }
  std::size_t total_dim() const { return data_->total; }
  /// Position of vertex v's block in flattened coordinates.
  std::size_t offset(VertexIndex v) const { return data_->offsets.at(v); }

  const Matrix& map(ArrowIndex a) const { return data_->maps.at(a); }
  const std::vector<Matrix>& maps() const { return data_->maps; }
  /// Product of arrow matrices along the word; identity for a trivial path.
  Matrix word_matrix(const PathWord& w) const;

  bool same_object(const Representation& o) const { return data_ == o.data_; }
  /// Same algebra, field, dimension vector and arrow matrices.
  bool operator==(const Representation& o) const;

  std::string dims_string() const;

 private:
  struct Data {
    AlgebraPtr algebra;
    const FieldSpec* field;
    std::vector<std::size_t> dims;
    std::vector<std::size_t> offsets;
    std::size_t total;
    std::vector<Matrix> maps;
  };
  explicit Representation(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
  static std::shared_ptr<const Data> build(AlgebraPtr algebra, const FieldSpec& field, std::vector<std::size_t> dims,
                                           std::vector<Matrix> maps);

  std::shared_ptr<const Data> data_;
};

bool same_algebra(const Representation& a, const Representation& b);
/// Throws AlgebraMismatch or FieldMismatch.
void require_same_algebra(const Representation& a, const Representation& b);

/// Reports the first relation word whose matrix product is nonzero.
ValidationReport validate(const Representation& r);

/// One coordinate vector per vertex.
struct ModuleElement {
  std::vector<Vector> parts;

  bool is_zero() const;
  bool operator==(const ModuleElement&) const = default;
};

ModuleElement zero_element(const Representation& r);
/// The element with vector v at vertex `vertex` and zeros elsewhere.
ModuleElement element_at(const Representation& r, VertexIndex vertex, Vector v);
/// Unit vector number `index` in flattened coordinates.
ModuleElement basis_element(const Representation& r, std::size_t index);
Vector flatten(const Representation& r, const ModuleElement& x);
ModuleElement unflatten(const Representation& r, std::span<const Scalar> v);

/// w acting on x: arrow matrices applied right to left; a trivial path
/// projects onto its vertex.
ModuleElement act(const Representation& r, const PathWord& w, const ModuleElement& x);

/// Per-vertex subspaces of a representation.
struct Subrepresentation {
  std::vector<Subspace> parts;

  std::size_t total_dim() const;
  std::vector<std::size_t> dims() const;
  bool is_zero() const { return total_dim() == 0; }
  bool contains(const Subrepresentation& o) const;
  bool operator==(const Subrepresentation& o) const { return parts == o.parts; }
};

Subrepresentation zero_sub(const Representation& r);
Subrepresentation whole(const Representation& r);
bool is_stable(const Representation& r, const Subrepresentation& s);
Subrepresentation sum(const Subrepresentation& a, const Subrepresentation& b);
Subrepresentation intersect(const Subrepresentation& a, const Subrepresentation& b);

/// Smallest arrow-stable family containing the generators.
Subrepresentation generated_sub(const Representation& r, const std::vector<ModuleElement>& gens);

struct Quotient {
  Representation module;
  /// Per vertex: dims_quotient[v] x dims_parent[v] projection matrix.
  std::vector<Matrix> projection;
};

/// Coset bases use the non-pivot coordinates of each RREF subspace basis.
/// Throws Error when s is not arrow-stable.
Quotient quotient(const Representation& r, const Subrepresentation& s);

struct Submodule {
  Representation module;
  /// Per vertex: dims_parent[v] x dims_sub[v] inclusion matrix (columns are the RREF basis).
  std::vector<Matrix> inclusion;
};

/// The subrepresentation as a module in its own right.
Submodule restrict_to(const Representation& r, const Subrepresentation& s);

/// Sum of arrow images landing at each vertex.
Subrepresentation radical(const Representation& r);
/// Radical of a subrepresentation: arrow images of s.
Subrepresentation radical_of(const Representation& r, const Subrepresentation& s);
/// Joint kernel of the arrows leaving each vertex.
Subrepresentation socle(const Representation& r);

/// r = rad^0 > rad^1 > ... > 0. Throws Error when arrows do not act nilpotently.
std::vector<Subrepresentation> radical_series(const Representation& r);

struct UniserialCertificate {
  bool uniserial = false;
  std::vector<Subrepresentation> series;
  /// Total dimension of each layer rad^i / rad^{i+1}.
  std::vector<std::size_t> layer_dims;
};

UniserialCertificate is_uniserial(const Representation& r);
bool is_uniform(const Representation& r);
/// Composition length (total dimension: every simple is one-dimensional).
std::size_t length(const Representation& r);

Representation simple(const AlgebraPtr& algebra, const FieldSpec& field, VertexIndex v);
/// Basis: nonzero paths starting at x, arrows acting by post-composition.
Representation projective(const AlgebraPtr& algebra, const FieldSpec& field, VertexIndex x,
                          std::size_t cap = kDefaultPathCap);
/// Dual of the projective at x over the opposite algebra.
Representation injective(const AlgebraPtr& algebra, const FieldSpec& field, VertexIndex x,
                         std::size_t cap = kDefaultPathCap);
/// Linear combination of paths starting at x, as an element of projective(x).
/// Paths killed by the relations contribute zero.
using PathCombination = std::vector<std::pair<Scalar, PathWord>>;
ModuleElement projective_element(const Representation& p, VertexIndex x, const PathCombination& terms,
                                 std::size_t cap = kDefaultPathCap);
/// P(x) / (submodule generated by the given combinations).
Quotient presented_module(const AlgebraPtr& algebra, const FieldSpec& field, VertexIndex x,
                          const std::vector<PathCombination>& generators, std::size_t cap = kDefaultPathCap);
/// Transposed matrices on reversed arrows, a representation of the opposite algebra.
Representation dual(const Representation& r);
/// Dual landing on a given algebra, which must equal the opposite of r's algebra.
Representation dual(const Representation& r, const AlgebraPtr& target);

Representation direct_sum(const Representation& a, const Representation& b);

}  // namespace uniso
