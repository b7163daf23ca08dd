#include "uniso/quiver.hpp"

#include <algorithm>
#include <sstream>

namespace uniso {

VertexIndex Quiver::add_vertex(std::string name) {
  if (vertex_lookup_.count(name)) throw Error("duplicate vertex '" + name + "'");
  const VertexIndex v = vertices_.size();
  vertex_lookup_.emplace(name, v);
  vertices_.push_back(std::move(name));
  return v;
}

ArrowIndex Quiver::add_arrow(std::string name, const std::string& source, const std::string& target) {
  if (arrow_lookup_.count(name)) throw Error("duplicate arrow '" + name + "'");
  if (vertex_lookup_.count(name)) throw Error("arrow '" + name + "' clashes with a vertex name");
  const ArrowIndex a = arrows_.size();
  arrows_.push_back(Arrow{name, vertex(source), vertex(target)});
  arrow_lookup_.emplace(std::move(name), a);
  return a;
}

std::optional<VertexIndex> Quiver::find_vertex(const std::string& name) const {
  auto it = vertex_lookup_.find(name);
  if (it == vertex_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<ArrowIndex> Quiver::find_arrow(const std::string& name) const {
  auto it = arrow_lookup_.find(name);
  if (it == arrow_lookup_.end()) return std::nullopt;
  return it->second;
}

VertexIndex Quiver::vertex(const std::string& name) const {
  if (auto v = find_vertex(name)) return *v;
  throw Error("undefined vertex '" + name + "'");
}

ArrowIndex Quiver::arrow_index(const std::string& name) const {
  if (auto a = find_arrow(name)) return *a;
  throw Error("undefined arrow '" + name + "'");
}

Quiver Quiver::opposite() const {
  Quiver q;
  for (const auto& v : vertices_) q.add_vertex(v);
  for (const auto& a : arrows_) q.add_arrow(a.name, vertices_[a.target], vertices_[a.source]);
  return q;
}

bool Quiver::is_acyclic() const {
  // Kahn's algorithm; loops count as cycles.
  std::vector<std::size_t> indegree(vertices_.size(), 0);
  for (const auto& a : arrows_) ++indegree[a.target];
  std::vector<VertexIndex> ready;
  for (VertexIndex v = 0; v < vertices_.size(); ++v) {
    if (indegree[v] == 0) ready.push_back(v);
  }
  std::size_t seen = 0;
  while (!ready.empty()) {
    const VertexIndex v = ready.back();
    ready.pop_back();
    ++seen;
    for (const auto& a : arrows_) {
      if (a.source == v && --indegree[a.target] == 0) ready.push_back(a.target);
    }
  }
  return seen == vertices_.size();
}

PathWord PathWord::from_arrows(const Quiver& q, std::vector<ArrowIndex> arrows) {
  if (arrows.empty()) throw Error("use PathWord::trivial for the empty path");
  for (ArrowIndex a : arrows) {
    if (a >= q.arrow_count()) throw Error("arrow index out of range");
  }
  for (std::size_t i = 0; i + 1 < arrows.size(); ++i) {
    const Arrow& later = q.arrow(arrows[i]);
    const Arrow& earlier = q.arrow(arrows[i + 1]);
    if (later.source != earlier.target) {
      throw NotComposable("'" + later.name + "' cannot follow '" + earlier.name + "': source(" + later.name +
                          ") != target(" + earlier.name + ")");
    }
  }
  const VertexIndex s = q.arrow(arrows.back()).source;
  const VertexIndex t = q.arrow(arrows.front()).target;
  return PathWord(s, t, std::move(arrows));
}

PathWord PathWord::parse(const Quiver& q, const std::string& text) {
  std::istringstream is(text);
  std::vector<std::string> tokens;
  for (std::string tok; is >> tok;) tokens.push_back(tok);
  if (tokens.empty()) throw Error("empty path word");
  if (tokens.size() == 1 && tokens[0].size() > 3 && tokens[0].rfind("e(", 0) == 0 && tokens[0].back() == ')') {
    return trivial(q.vertex(tokens[0].substr(2, tokens[0].size() - 3)));
  }
  std::vector<ArrowIndex> arrows;
  for (const auto& t : tokens) arrows.push_back(q.arrow_index(t));
  return from_arrows(q, std::move(arrows));
}

bool PathWord::contains_subword(const PathWord& other) const {
  if (other.is_trivial()) {
    if (is_trivial()) return source_ == other.source_;
    return false;
  }
  if (other.length() > length()) return false;
  return std::search(arrows_.begin(), arrows_.end(), other.arrows_.begin(), other.arrows_.end()) != arrows_.end();
}

PathWord PathWord::reversed() const {
  std::vector<ArrowIndex> r(arrows_.rbegin(), arrows_.rend());
  return PathWord(target_, source_, std::move(r));
}

std::string PathWord::to_string(const Quiver& q) const {
  if (is_trivial()) return "e(" + q.vertex_name(source_) + ")";
  std::string out;
  for (std::size_t i = 0; i < arrows_.size(); ++i) {
    if (i) out += ' ';
    out += q.arrow(arrows_[i]).name;
  }
  return out;
}

void MonomialRelations::add(PathWord word) {
  if (word.length() < 2) throw Error("relation words must have length at least 2");
  for (const auto& f : forbidden_) {
    if (word.contains_subword(f)) return;
  }
  std::erase_if(forbidden_, [&](const PathWord& f) { return f.contains_subword(word); });
  forbidden_.push_back(std::move(word));
  std::sort(forbidden_.begin(), forbidden_.end());
}

void MonomialRelations::set_length_bound(std::size_t bound) {
  if (bound < 2) throw Error("length bound must be at least 2");
  length_bound_ = bound;
}

bool MonomialRelations::kills(const PathWord& w) const {
  if (length_bound_ && w.length() >= *length_bound_) return true;
  for (const auto& f : forbidden_) {
    if (w.contains_subword(f)) return true;
  }
  return false;
}

MonomialRelations MonomialRelations::reversed() const {
  MonomialRelations r;
  for (const auto& f : forbidden_) r.add(f.reversed());
  r.length_bound_ = length_bound_;
  return r;
}

Algebra Algebra::opposite() const { return Algebra{quiver.opposite(), relations.reversed()}; }

AlgebraPtr make_algebra(Quiver quiver, MonomialRelations relations) {
  return std::make_shared<const Algebra>(Algebra{std::move(quiver), std::move(relations)});
}

std::optional<PathWord> compose(const Algebra& algebra, const PathWord& q, const PathWord& p) {
  if (q.source() != p.target()) {
    throw NotComposable("cannot compose: source(" + q.to_string(algebra.quiver) + ") != target(" +
                        p.to_string(algebra.quiver) + ")");
  }
  if (q.is_trivial()) return algebra.relations.kills(p) ? std::nullopt : std::optional<PathWord>(p);
  if (p.is_trivial()) return algebra.relations.kills(q) ? std::nullopt : std::optional<PathWord>(q);
  std::vector<ArrowIndex> arrows = q.arrows();
  arrows.insert(arrows.end(), p.arrows().begin(), p.arrows().end());
  PathWord w = PathWord::from_arrows(algebra.quiver, std::move(arrows));
  if (algebra.relations.kills(w)) return std::nullopt;
  return w;
}

std::vector<PathWord> PathBasis::between(VertexIndex u, VertexIndex v) const {
  std::vector<PathWord> out;
  for (const auto& w : words) {
    if (w.source() == u && w.target() == v) out.push_back(w);
  }
  return out;
}

std::vector<PathWord> PathBasis::starting_at(VertexIndex u) const {
  std::vector<PathWord> out;
  for (const auto& w : words) {
    if (w.source() == u) out.push_back(w);
  }
  return out;
}

std::vector<PathWord> PathBasis::ending_at(VertexIndex v) const {
  std::vector<PathWord> out;
  for (const auto& w : words) {
    if (w.target() == v) out.push_back(w);
  }
  return out;
}

PathBasis enumerate_path_basis(const Algebra& algebra, std::size_t cap) {
  if (cap == 0) throw Error("path basis cap must be positive");
  const Quiver& q = algebra.quiver;
  PathBasis basis;
  std::vector<PathWord> frontier;
  for (VertexIndex v = 0; v < q.vertex_count(); ++v) frontier.push_back(PathWord::trivial(v));
  auto push = [&](PathWord w) {
    if (basis.words.size() >= cap) {
      throw InfiniteDimensional("infinite-dimensional algebra: more than " + std::to_string(cap) +
                                " nonzero paths");
    }
    basis.words.push_back(std::move(w));
  };
  for (const auto& w : frontier) push(w);
  while (!frontier.empty()) {
    std::vector<PathWord> next;
    for (const auto& w : frontier) {
      for (ArrowIndex a = 0; a < q.arrow_count(); ++a) {
        if (q.arrow(a).source != w.target()) continue;
        std::vector<ArrowIndex> arrows{a};
        arrows.insert(arrows.end(), w.arrows().begin(), w.arrows().end());
        PathWord extended = PathWord::from_arrows(q, std::move(arrows));
        if (algebra.relations.kills(extended)) continue;
        push(extended);
        next.push_back(std::move(extended));
      }
    }
    frontier = std::move(next);
  }
  return basis;
}

}  // namespace uniso
