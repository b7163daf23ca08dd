#pragma once

// Module homomorphisms as intertwiners, and Hom(L, M) as the kernel of the
// assembled intertwiner equations phi_t L_a = M_a phi_s.

#include <cstddef>
#include <optional>
#include <vector>

#include "uniso/matrix.hpp"
#include "uniso/representation.hpp"

namespace uniso {

class Intertwiner {
 public:
  /// Throws DimensionMismatch on bad shapes and Error when an arrow equation fails.
  Intertwiner(Representation source, Representation target, std::vector<Matrix> components);
  /// Skips the arrow-equation check; the caller guarantees it holds.
  static Intertwiner unchecked(Representation source, Representation target, std::vector<Matrix> components);
  static Intertwiner identity(const Representation& r);
  static Intertwiner zero(const Representation& source, const Representation& target);

  const Representation& source() const { return source_; }
  const Representation& target() const { return target_; }
  const Matrix& at(VertexIndex v) const { return components_.at(v); }
  const std::vector<Matrix>& components() const { return components_; }

  bool is_zero() const;
  bool is_endomorphism() const { return source_ == target_; }
  /// Per-vertex square and invertible.
  bool is_invertible() const;
  /// Re-checks every arrow equation.
  bool satisfies_arrow_equations() const;

  ModuleElement apply(const ModuleElement& x) const;
  /// Stacked coordinates in the solver's unknown order.
  Vector coordinates() const;

  Intertwiner operator+(const Intertwiner& o) const;
  Intertwiner scaled(const Scalar& s) const;
  bool operator==(const Intertwiner& o) const;

 private:
  struct Trusted {};
  Intertwiner(Trusted, Representation source, Representation target, std::vector<Matrix> components);

  Representation source_;
  Representation target_;
  std::vector<Matrix> components_;
};

/// g after f. Throws NotComposable when target(f) != source(g).
Intertwiner compose(const Intertwiner& g, const Intertwiner& f);

struct HomBasis {
  Representation source;
  Representation target;
  std::vector<Intertwiner> basis;

  std::size_t dimension() const { return basis.size(); }
};

/// Canonical basis: the RREF kernel basis of the assembled system, unknowns
/// ordered vertex-major then column-major.
HomBasis hom_basis(const Representation& l, const Representation& m);

/// sum coeffs[i] * basis[i].
Intertwiner combination(const HomBasis& basis, std::span<const Scalar> coeffs);

struct Classification {
  bool injective;
  bool surjective;
  Subrepresentation image;
  Subrepresentation kernel;
  /// Only for endomorphisms: ker(phi - id) in flattened coordinates.
  std::optional<Subspace> fixed_space;
};

Classification classify(const Intertwiner& f);
/// Throws Error when f is not an endomorphism.
Subspace fixed_space(const Intertwiner& f);
Subrepresentation image(const Intertwiner& f);
Subrepresentation kernel(const Intertwiner& f);

struct EndRingAnalysis {
  std::size_t dim = 0;
  bool is_scalar_only = false;
  bool is_dual_numbers = false;
  /// N with End = K id + K N and N^2 = 0, when is_dual_numbers.
  std::optional<Intertwiner> nilpotent_witness;
};

EndRingAnalysis end_ring_analysis(const Representation& l);

/// The unknown ordering used by hom_basis: offset of phi_v in the stacked vector.
std::vector<std::size_t> hom_unknown_offsets(const Representation& l, const Representation& m);

}  // namespace uniso
