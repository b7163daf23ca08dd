#pragma once

// Symbolic uniserial modules: the submodule lattice is a chain embedded in
// Z u {-inf, +inf}, and a morphism is remembered only by its kernel index and
// the index of its image.
//
// Indexing:
//  - Finite(n):   L = L_0 > L_1 > ... > L_n = 0. A kernel index k means the
//                 kernel has length k; the image offset j means f(L) = M_j.
//  - Ascending:   0 = S_0 < S_1 < ... < L, every proper submodule of finite
//                 length. Kernel index k means ker = S_k; offset 0 means f(L) = M.
//  - Descending:  L = L_0 > L_1 > ... > 0. Offset j means f(L) = M_j.
//  - Full:        a chain of order type Z u {-inf, +inf}. Kernel index k means
//                 the kernel is the k-th submodule above 0 (any finite value).
// The zero morphism has kernel index and offset both infinite.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace uniso {

/// Extended natural number; nullopt is infinity.
using ExtNat = std::optional<std::uint64_t>;

std::string to_string(const ExtNat& n);

enum class ChainKind { Finite, Ascending, Descending, Full };

struct ChainClass {
  ChainKind kind = ChainKind::Finite;
  std::uint64_t length = 0;  // only for Finite

  static ChainClass finite(std::uint64_t n) { return {ChainKind::Finite, n}; }
  static ChainClass ascending() { return {ChainKind::Ascending, 0}; }
  static ChainClass descending() { return {ChainKind::Descending, 0}; }
  static ChainClass full() { return {ChainKind::Full, 0}; }

  std::string name() const;
  bool operator==(const ChainClass&) const = default;
};

std::vector<ChainClass> all_chain_kinds(std::uint64_t finite_length = 3);

struct ShiftMorphism {
  ChainClass source;
  ChainClass target;
  ExtNat kernel_index = 0;
  ExtNat image_offset = 0;

  bool is_zero() const { return !kernel_index.has_value(); }
  bool is_injective() const { return kernel_index == ExtNat{0}; }
  bool is_surjective() const { return image_offset == ExtNat{0}; }
  bool operator==(const ShiftMorphism&) const = default;
};

/// Validates the pair against the lattice shapes; throws Error when no module
/// morphism can have that kernel/image combination (for instance a nonzero
/// image offset with finite kernel on an ascending or full chain).
ShiftMorphism make_shift(const ChainClass& source, const ChainClass& target, ExtNat kernel_index,
                         ExtNat image_offset);
ShiftMorphism identity_shift(const ChainClass& c);
ShiftMorphism zero_shift(const ChainClass& source, const ChainClass& target);

/// g after f. Throws NotComposable on endpoint mismatch and Unsupported for
/// non-injective compositions outside the simple-kernel epimorphism case.
ShiftMorphism compose_shifts(const ShiftMorphism& g, const ShiftMorphism& f);

/// Whether the endomorphism h can map the submodule at index i onto itself.
/// Uses only the containment h(L_n) in L_{n+j}.
bool fixes_submodule(const ShiftMorphism& h, std::uint64_t index);

struct FixedPointReport {
  bool iso_forced = true;
  std::string argument;
  /// Offset the fixed point forces on f (always 0).
  std::uint64_t forced_offset = 0;
  /// Whether the given f, g are compatible with a fixed point at all.
  bool hypothesis_consistent = true;
};

/// Assumes g o f has a nonzero fixed point. f and g are then injective, and
/// the chain shape forces f to be onto.
FixedPointReport fixed_point_forces_iso(const ChainClass& cls, const ShiftMorphism& f, const ShiftMorphism& g,
                                        std::uint64_t fixed_index = 0);

struct PowerRow {
  std::uint64_t n = 0;
  ExtNat kernel_index;
  bool surjective = false;
  bool injective = false;
};

struct GfPowerReport {
  std::vector<PowerRow> powers;
  bool iso_claimed = false;
  bool fixed_point_forced = false;
};

/// f: L -> M and g: M -> L on ascending chains, both epimorphisms with simple
/// kernel. Powers of g o f stay surjective while the kernel grows.
GfPowerReport gf_power_scenario(std::uint64_t n_max);

struct InjectiveVariantReport {
  bool outside_scenario = true;
  bool would_force_iso = true;
};

InjectiveVariantReport gf_power_injective_variant();

/// Offsets j <= max_offset for which an injective self-shift of a full chain
/// exists. Only 0 survives, matching an endomorphism monoid of scalars.
std::vector<std::uint64_t> full_chain_injective_self_offsets(std::uint64_t max_offset);

struct LatticeScenario {
  std::string name;
  bool passed = false;
  std::string headline;
  std::vector<std::string> details;
};

std::vector<std::string> lattice_scenario_names();
/// Throws Error for an unknown name.
LatticeScenario run_lattice_scenario(const std::string& name);

}  // namespace uniso
