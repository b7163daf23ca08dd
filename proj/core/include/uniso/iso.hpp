#pragma once

// Isomorphism tests for finite-length modules: a direct search for an
// invertible intertwiner, and three morphism-composition criteria.
//
// Decisiveness:
//  - nfold_criterion decides over any field. The alternating composition
//    f_n o ... o f_1 is multilinear, so it vanishes for all morphisms iff it
//    vanishes on all tuples of basis morphisms.
//  - iso_direct, two_morphism_criterion and mono_epi_criterion enumerate whole
//    Hom spaces, which is exhaustive only over finite fields. Over Q they
//    search a fixed battery and report Inconclusive when it comes up empty.
//
// Every search is deterministic: coefficient vectors run in lexicographic
// order (first coordinate most significant) over the field's element order,
// basis tuples in lexicographic order of basis indices; the first witness wins.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "uniso/hom.hpp"
#include "uniso/representation.hpp"

namespace uniso {

enum class Verdict { Isomorphic, NotIsomorphic, Inconclusive, HypothesesNotMet };

std::string to_string(Verdict v);

inline constexpr std::uint64_t kDefaultSearchCap = 1'000'000;

struct SearchOptions {
  std::uint64_t cap = kDefaultSearchCap;
};

struct ExhaustionCertificate {
  std::string space;
  std::uint64_t size = 0;
};

struct FixedPointWitness {
  Intertwiner f;
  Intertwiner g;
  ModuleElement x;
};

struct MonoEpiWitness {
  Intertwiner mono;
  Intertwiner epi;
};

struct IsoVerdict {
  std::string method;
  Verdict verdict = Verdict::Inconclusive;
  /// One-line human-readable summary.
  std::string reason;
  /// Present whenever verdict == Isomorphic (re-validated invertible intertwiner).
  std::optional<Intertwiner> isomorphism;
  std::optional<FixedPointWitness> fixed_point;
  /// f_1, f_2, ... in application order.
  std::optional<std::vector<Intertwiner>> tuple;
  std::optional<MonoEpiWitness> mono_epi;
  std::optional<ExhaustionCertificate> exhaustion;
  std::optional<std::string> obstruction;
  /// For HypothesesNotMet: whether the raw search found what the criterion asks for.
  std::optional<bool> raw_found;
  std::uint64_t hom_dim_lm = 0;
  std::uint64_t hom_dim_ml = 0;
  /// Number of candidates (or composition steps) examined.
  std::uint64_t examined = 0;
};

/// Cheap invariants that differ between non-isomorphic modules: dimension
/// vectors, socle dimension vectors, radical layer dimensions.
std::optional<std::string> structural_obstruction(const Representation& l, const Representation& m);

/// Searches Hom(l, m) for an invertible element (exhaustive over finite
/// fields; over Q the small-integer battery followed by the grid {0..D}^d).
/// Throws CapExceeded when the search would exceed the cap.
std::optional<Intertwiner> find_isomorphism(const Representation& l, const Representation& m,
                                            const SearchOptions& opts = {});

IsoVerdict iso_direct(const Representation& l, const Representation& m, const SearchOptions& opts = {});
IsoVerdict nfold_criterion(const Representation& l, const Representation& m, const SearchOptions& opts = {});
IsoVerdict two_morphism_criterion(const Representation& l, const Representation& m, const SearchOptions& opts = {});
IsoVerdict mono_epi_criterion(const Representation& l, const Representation& m, const SearchOptions& opts = {});

/// Runs every method. mono-epi is included only when both modules are uniserial.
std::vector<IsoVerdict> iso_all(const Representation& l, const Representation& m, const SearchOptions& opts = {});

struct AlternatingSearch {
  bool found_nonzero = false;
  /// First nonzero tuple in lexicographic order.
  std::optional<std::vector<Intertwiner>> witness;
  /// dim Hom(L,M)^ceil(k/2) * dim Hom(M,L)^floor(k/2).
  std::uint64_t search_size = 0;
  std::uint64_t compositions = 0;
};

/// Alternating k-fold compositions of basis morphisms starting with L -> M.
AlternatingSearch alternating_search(const HomBasis& lm, const HomBasis& ml, std::size_t k,
                                     const SearchOptions& opts = {});

struct WeakenedBound {
  bool some_mfold_nonzero = false;
  bool all_mplus1fold_zero = false;
};

WeakenedBound verify_weakened_bound(const Representation& l, const Representation& m, std::size_t fold,
                                    const SearchOptions& opts = {});

/// For k = 1..n: the largest image length of an alternating k-fold
/// composition of basis morphisms. Entry k-1 holds the value for k.
std::vector<std::size_t> max_alternating_image_lengths(const Representation& l, const Representation& m,
                                                       std::size_t n, const SearchOptions& opts = {});

/// The fixed battery used over Q: every +-1 coefficient vector of weight 1 or 2.
std::vector<Vector> rational_battery(const FieldSpec& field, std::size_t dim);

}  // namespace uniso
