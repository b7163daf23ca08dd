#pragma once

// Quivers, path words and monomial relations.
//
// Path words are stored in composition order: the word "q p" means q after p,
// so the leftmost arrow is applied last. Consecutive arrows x y in a word
// satisfy source(x) == target(y).

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "uniso/error.hpp"

namespace uniso {

using VertexIndex = std::size_t;
using ArrowIndex = std::size_t;

struct Arrow {
  std::string name;
  VertexIndex source;
  VertexIndex target;

  bool operator==(const Arrow&) const = default;
};

class Quiver {
 public:
  Quiver() = default;

  VertexIndex add_vertex(std::string name);
  ArrowIndex add_arrow(std::string name, const std::string& source, const std::string& target);

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t arrow_count() const { return arrows_.size(); }
  const std::string& vertex_name(VertexIndex v) const { return vertices_.at(v); }
  const std::vector<std::string>& vertex_names() const { return vertices_; }
  const Arrow& arrow(ArrowIndex a) const { return arrows_.at(a); }
  const std::vector<Arrow>& arrows() const { return arrows_; }

  std::optional<VertexIndex> find_vertex(const std::string& name) const;
  std::optional<ArrowIndex> find_arrow(const std::string& name) const;
  /// Throws Error when undefined.
  VertexIndex vertex(const std::string& name) const;
  ArrowIndex arrow_index(const std::string& name) const;

  /// Same vertices, every arrow reversed (names kept).
  Quiver opposite() const;
  bool is_acyclic() const;

  bool operator==(const Quiver& o) const { return vertices_ == o.vertices_ && arrows_ == o.arrows_; }

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::map<std::string, VertexIndex> vertex_lookup_;
  std::map<std::string, ArrowIndex> arrow_lookup_;
};

class PathWord {
 public:
  static PathWord trivial(VertexIndex v) { return PathWord(v, v, {}); }
  /// Arrows in composition order. Throws NotComposable when consecutive
  /// arrows do not chain, Error when empty.
  static PathWord from_arrows(const Quiver& q, std::vector<ArrowIndex> arrows);
  /// Space separated arrow names, composition order ("a b a").
  static PathWord parse(const Quiver& q, const std::string& text);

  bool is_trivial() const { return arrows_.empty(); }
  std::size_t length() const { return arrows_.size(); }
  VertexIndex source() const { return source_; }
  VertexIndex target() const { return target_; }
  const std::vector<ArrowIndex>& arrows() const { return arrows_; }

  /// True when other occurs as a contiguous block of this word.
  bool contains_subword(const PathWord& other) const;
  PathWord reversed() const;

  /// "a b a", or "e(1)" for a trivial path.
  std::string to_string(const Quiver& q) const;

  bool operator==(const PathWord&) const = default;
  auto operator<=>(const PathWord&) const = default;

 private:
  PathWord(VertexIndex s, VertexIndex t, std::vector<ArrowIndex> arrows)
      : source_(s), target_(t), arrows_(std::move(arrows)) {}

  VertexIndex source_;
  VertexIndex target_;
  std::vector<ArrowIndex> arrows_;
};

/// Forbidden subwords (length >= 2) plus an optional global bound: all paths
/// of length >= bound are zero.
class MonomialRelations {
 public:
  MonomialRelations() = default;

  /// Throws Error when the word has length < 2. Keeps the set subword-reduced.
  void add(PathWord word);
  void set_length_bound(std::size_t bound);

  const std::vector<PathWord>& forbidden() const { return forbidden_; }
  std::optional<std::size_t> length_bound() const { return length_bound_; }
  bool empty() const { return forbidden_.empty() && !length_bound_; }

  bool kills(const PathWord& w) const;
  MonomialRelations reversed() const;

  bool operator==(const MonomialRelations&) const = default;

 private:
  std::vector<PathWord> forbidden_;
  std::optional<std::size_t> length_bound_;
};

/// A quiver together with its monomial relations: the algebra KQ/I.
struct Algebra {
  Quiver quiver;
  MonomialRelations relations;

  Algebra opposite() const;
  bool operator==(const Algebra&) const = default;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

AlgebraPtr make_algebra(Quiver quiver, MonomialRelations relations = {});

/// q after p. Returns nullopt for the zero path; throws NotComposable when
/// source(q) != target(p).
std::optional<PathWord> compose(const Algebra& algebra, const PathWord& q, const PathWord& p);

struct PathBasis {
  /// All nonzero words: trivial paths first, then breadth-first by length.
  std::vector<PathWord> words;
  std::size_t size() const { return words.size(); }
  /// Nonzero words from u to v.
  std::vector<PathWord> between(VertexIndex u, VertexIndex v) const;
  std::vector<PathWord> starting_at(VertexIndex u) const;
  std::vector<PathWord> ending_at(VertexIndex v) const;
};

inline constexpr std::size_t kDefaultPathCap = 10000;

/// Throws InfiniteDimensional when more than cap nonzero words exist.
PathBasis enumerate_path_basis(const Algebra& algebra, std::size_t cap = kDefaultPathCap);

}  // namespace uniso
