#pragma once

// The workspace text format: one field, one quiver, monomial relations,
// named modules and morphisms, and assertions about them.
//
//   field GF(3)                       # Q | GF(p) | GF(p^k) | GF(q)
//   quiver { vertex 1 2; arrow a 1 2; arrow b 1 2 }
//   relations { zero a b a; bound 3 }  # words in composition order
//   module U { dims 1:1 2:1; map a [1]; map b [2] }
//   module X = P(1) / gen(b - 2*a)
//   module Y = I(2)                    # also P(v), S(v), rad(M), soc(M), M / soc(M), M / rad(M)
//   morphism f : X -> U { at 1 [1]; at 2 [1] }
//   assert iso(X, U) via nfold
//
// Statements end at a newline or ';'. '#' starts a comment. Matrix rows are
// separated by ';' inside brackets, entries by spaces; an empty block is [].
// Unlisted dims are 0 and unlisted maps are zero.
//
// Assertions:
//   uniserial(M)  not-uniserial(M)  uniform(M)  not-uniform(M)
//   length(M) = n   dims(M) = (d1,...)   socdims(M) = (d1,...)
//   homdim(A,B) = n
//   iso(A,B) [via direct|nfold|two-morphism|mono-epi]   not-iso(A,B) [via ...]
//   nonzero(e)  zero(e)  injective(e)  surjective(e)  fixes(e, nontrivial)
//   image(e) = soc(M) | rad(M) | M | 0
//   maps(e, v:[x ...] ...) = v:[y ...] ...
//   endring(M) = scalar | dual-numbers
//   weakened-bound(A,B,m)
//   acts-zero(M, word)   acts-nonzero(M, word)
// where e is a composition g∘f (or g*f) of morphism names and id(M).

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "uniso/error.hpp"
#include "uniso/gallery.hpp"
#include "uniso/hom.hpp"
#include "uniso/iso.hpp"

namespace uniso {

struct SourceLocation {
  std::size_t line = 0;
  std::size_t column = 0;
};

/// Malformed text.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& message, SourceLocation loc, std::string token);
  SourceLocation location() const { return loc_; }
  const std::string& token() const { return token_; }
  const std::string& detail() const { return detail_; }

 private:
  SourceLocation loc_;
  std::string token_;
  std::string detail_;
};

/// Well-formed text that names something undefined, has bad shapes, or
/// describes an invalid module.
class SemanticError : public Error {
 public:
  SemanticError(const std::string& message, SourceLocation loc);
  SourceLocation location() const { return loc_; }
  const std::string& detail() const { return detail_; }

 private:
  SourceLocation loc_;
  std::string detail_;
};

/// Composition of named morphisms; factors[0] is applied last.
struct MorphismExpr {
  std::vector<std::string> factors;
  std::string text() const;
};

struct ElementSpec {
  std::string vertex;
  std::string raw;  // bracket contents
};

struct Assertion {
  std::string predicate;
  std::string text;
  SourceLocation loc;
  std::vector<std::string> modules;
  std::optional<MorphismExpr> expr;
  std::optional<std::string> method;
  std::optional<long long> number;
  std::vector<std::size_t> tuple;
  std::string value;
  std::vector<std::string> word;
  std::vector<ElementSpec> from;
  std::vector<ElementSpec> to;
};

struct NamedModule {
  std::string name;
  std::string definition;
  Representation module;
};

struct NamedMorphism {
  std::string name;
  Intertwiner morphism;
};

struct Workspace {
  const FieldSpec* field = nullptr;
  AlgebraPtr algebra;
  std::vector<NamedModule> modules;
  std::vector<NamedMorphism> morphisms;
  std::vector<Assertion> assertions;

  const NamedModule* find_module(const std::string& name) const;
  const NamedMorphism* find_morphism(const std::string& name) const;
  const Representation& module(const std::string& name) const;
  const Intertwiner& morphism(const std::string& name) const;
};

/// Throws SyntaxError or SemanticError.
Workspace parse_workspace(std::string_view text);

/// Explicit-matrix text for every module and morphism; reparses to an
/// equivalent workspace.
std::string export_workspace(const Workspace& ws, const std::string& header = "");
/// Throws Unsupported for entries without a quiver algebra.
std::string export_gallery(const GalleryEntry& entry);

/// Same field, algebra, module and morphism data (by name and order), and assertion texts.
bool equivalent(const Workspace& a, const Workspace& b);

Intertwiner evaluate_expr(const Workspace& ws, const MorphismExpr& e);

struct AssertionResult {
  bool passed = false;
  /// A search ran into its cap before deciding.
  bool cap_exceeded = false;
  std::string summary;
  std::optional<IsoVerdict> iso;
};

AssertionResult evaluate(const Workspace& ws, const Assertion& a, const SearchOptions& opts = {});

/// Parses the iso method names used in `via` clauses and on the command line.
IsoVerdict run_iso_method(const std::string& method, const Representation& l, const Representation& m,
                          const SearchOptions& opts = {});
bool is_iso_method(const std::string& method);

}  // namespace uniso
