#pragma once

// Brute-force reference computations. Everything here works on plain
// integers mod p and only reads matrix entries out of the library types.

#include <cstdint>
#include <functional>
#include <vector>

#include <gmpxx.h>

#include "uniso/representation.hpp"

namespace oracle {

using Int = long long;

struct IntMat {
  std::size_t rows = 0, cols = 0;
  std::vector<Int> a;
  Int& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  Int at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

/// Entries of a prime-field matrix as residues.
IntMat to_int(const uniso::Matrix& m);
IntMat mul(const IntMat& x, const IntMat& y, Int p);
bool is_zero(const IntMat& m);

std::size_t rank_mod(IntMat m, Int p);
std::size_t rank_q(std::vector<std::vector<mpq_class>> m);

/// Number of subspaces of GF(p)^n, from Gaussian binomials.
std::uint64_t subspace_count(std::size_t n, std::uint64_t p);

/// Nonzero path count of a monomial algebra, by depth-first search over
/// arrow sequences and direct subword matching.
std::size_t path_count(const uniso::Algebra& alg, std::size_t max_len = 64);
std::size_t path_count_from(const uniso::Algebra& alg, uniso::VertexIndex x, std::size_t max_len = 64);

/// One morphism as per-vertex residue matrices.
using Family = std::vector<IntMat>;

/// Calls visit on every family of per-vertex matrices satisfying all arrow
/// equations (prime fields only). Returns the number visited.
std::uint64_t for_each_hom(const uniso::Representation& l, const uniso::Representation& m,
                           const std::function<void(const Family&)>& visit = {});

bool family_invertible(const Family& f, Int p);
/// Exhaustive: some morphism L -> M is invertible.
bool isomorphic(const uniso::Representation& l, const uniso::Representation& m);

/// Unknown count of Hom(L, M): sum over vertices of dim M_v * dim L_v.
std::size_t unknowns(const uniso::Representation& l, const uniso::Representation& m);

/// Number of left ideals (with 0 and R) of [[D, D], [0, C]], C = GF(p),
/// D = GF(p^k), k <= 2, by closing generator sets of size at most three.
std::size_t triangular_left_ideal_count(int p, int k);

}  // namespace oracle
