#pragma once

// Deterministic constructors for a fixed set of worked examples. Each entry
// returns its modules and morphisms, a list of machine-checkable facts, and
// workspace assertion lines stating the same facts for the CLI.
//
// Entries and parameters:
//   kronecker_Uk            k (element index, default 1)     field GF(5)
//   ex1_PQ                  -                                 field GF(3)
//   remark_loop             -
//   remark_two_loops        -
//   euclidean_An            n >= 3 (default 4)
//   commutative_two_loops   n >= 2 (default 3)
//   dynkin_An_injectives    n >= 1 (default 5)
//   cyclic_uniserial        m >= 1 (default 2)
//   triangular              p, k with p^k <= 9 (default 2, 2)

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "uniso/hom.hpp"
#include "uniso/representation.hpp"
#include "uniso/triangular.hpp"

namespace uniso {

struct ExpectedFact {
  std::string claim;
  std::function<bool()> check;
};

struct GalleryEntry {
  std::string name;
  std::vector<std::pair<std::string, long long>> parameters;
  /// Null for the triangular entry.
  AlgebraPtr algebra;
  const FieldSpec* field = nullptr;
  std::vector<std::pair<std::string, Representation>> modules;
  std::vector<std::pair<std::string, Intertwiner>> morphisms;
  std::vector<ExpectedFact> facts;
  /// Workspace `assert` bodies, in the workspace predicate syntax.
  std::vector<std::string> assertions;
  std::optional<TriangularReport> triangular;

  const Representation& module(const std::string& name) const&;
  Representation module(const std::string& name) &&;
  const Intertwiner& morphism(const std::string& name) const&;
  Intertwiner morphism(const std::string& name) &&;
  std::vector<std::string> failing_facts() const;
};

std::vector<std::string> gallery_names();

/// Throws Error for an unknown name or out-of-range parameters. A null field
/// selects the entry's default.
GalleryEntry gallery(const std::string& name, const std::vector<long long>& params = {},
                     const FieldSpec* field = nullptr);

}  // namespace uniso
