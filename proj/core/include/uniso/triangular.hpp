#pragma once

// Modules over the triangular ring R = [[D, D], [0, C]] with C = GF(p) inside
// D = GF(p^k). A left module is a triple (V, W, theta): V a D-space, W a
// C-space, theta: W -> V C-linear. The element [[x, y], [0, z]] acts by
// (v, w) -> (x v + y theta(w), z w).
//
// Everything is done over C: a module has C-dimension k dim V + dim W, and
// submodules are C-subspaces stable under the ring generators t^i e11,
// t^i e12 and e22, found by brute-force enumeration.

#include <cstdint>
#include <vector>

#include "uniso/matrix.hpp"

namespace uniso {

class TriangularRing {
 public:
  TriangularRing(std::uint64_t p, unsigned k);

  const FieldSpec& d() const { return *d_; }
  const FieldSpec& c() const { return *c_; }
  std::uint64_t p() const { return p_; }
  unsigned k() const { return k_; }

  /// C sits in D as the constant polynomials.
  Scalar embed(const Scalar& c) const;

 private:
  std::uint64_t p_;
  unsigned k_;
  const FieldSpec* d_;
  const FieldSpec* c_;
};

struct TriangularModule {
  std::size_t v_dim = 0;
  std::size_t w_dim = 0;
  /// v_dim x w_dim over D; column j is theta(w_j).
  Matrix theta;

  std::size_t c_dim(const TriangularRing& r) const { return r.k() * v_dim + w_dim; }
};

/// R as a left module over itself: V = D^2 (the top row), W = C, theta(c) = (0, c).
TriangularModule regular_module(const TriangularRing& r);
/// The second column of R: V = D, W = C, theta(c) = c.
TriangularModule column_module(const TriangularRing& r);

/// C-coordinates of (v, w): the k coefficients of each v_i (constant term
/// first), then w.
Vector to_c_coordinates(const TriangularRing& r, const TriangularModule& m, const Vector& v, const Vector& w);

/// The C-linear action matrices of the ring generators t^i e11, t^i e12 (i < k) and e22.
std::vector<Matrix> generator_actions(const TriangularRing& r, const TriangularModule& m);

bool is_submodule(const std::vector<Matrix>& actions, const Subspace& s);

/// All submodules, in the enumeration order of for_each_subspace.
std::vector<Subspace> submodules(const TriangularRing& r, const TriangularModule& m, std::size_t cap);

/// Sum of the minimal nonzero submodules.
Subspace socle_of(const std::vector<Subspace>& lattice, std::size_t ambient, const FieldSpec& c);

/// Steps of the socle series 0 < Soc < Soc_2 < ... < M, computed on the lattice.
std::size_t socle_series_length(const std::vector<Subspace>& lattice, std::size_t ambient, const FieldSpec& c);

/// Whether f (a C-linear map between ambients) commutes with the generator
/// actions on every vector of the source subspace.
bool is_r_linear_on(const Matrix& f, const Subspace& source, const std::vector<Matrix>& src_actions,
                    const std::vector<Matrix>& dst_actions);

struct TriangularReport {
  std::uint64_t p = 0;
  unsigned k = 0;
  std::size_t ring_c_dim = 0;
  /// Including 0 and R.
  std::size_t left_ideal_count = 0;
  std::size_t proper_nonzero_count = 0;
  /// Every enumerated ideal is one of I_lambda, I_inf, I_0 + I_inf, the column P, and each of those occurs.
  bool matches_family_list = false;
  /// |D| + 1 ideals I_lambda (lambda in D) and I_inf.
  std::size_t simple_ideal_count = 0;
  bool simple_ideals_minimal = false;
  /// x -> (x, lambda x) and x -> (0, x) out of I_0 are R-linear bijections.
  bool explicit_maps_isomorphisms = false;
  /// Brute-force search over C-linear bijections between every pair.
  bool simple_ideals_pairwise_isomorphic = false;
  std::size_t soc_p_c_dim = 0;
  std::size_t p_mod_soc_c_dim = 0;
  std::size_t p_length = 0;
  bool p_uniserial = false;
};

/// Requires p^k <= 9; throws CapExceeded otherwise.
TriangularReport triangular_analysis(std::uint64_t p, unsigned k);

}  // namespace uniso
