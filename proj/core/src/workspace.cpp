#include "uniso/workspace.hpp"

#include <cctype>
#include <sstream>

namespace uniso {

namespace {

std::string where(SourceLocation loc) { return std::to_string(loc.line) + ":" + std::to_string(loc.column); }

}  // namespace

SyntaxError::SyntaxError(const std::string& message, SourceLocation loc, std::string token)
    : Error("syntax error at " + where(loc) + ": " + message + (token.empty() ? "" : " (near '" + token + "')")),
      loc_(loc),
      token_(std::move(token)),
      detail_(message) {}

SemanticError::SemanticError(const std::string& message, SourceLocation loc)
    : Error("error at " + where(loc) + ": " + message), loc_(loc), detail_(message) {}

std::string MorphismExpr::text() const {
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i) out += (i ? "∘" : "") + factors[i];
  return out;
}

const NamedModule* Workspace::find_module(const std::string& name) const {
  for (const auto& m : modules) {
    if (m.name == name) return &m;
  }
  return nullptr;
}

const NamedMorphism* Workspace::find_morphism(const std::string& name) const {
  for (const auto& m : morphisms) {
    if (m.name == name) return &m;
  }
  return nullptr;
}

const Representation& Workspace::module(const std::string& name) const {
  if (const auto* m = find_module(name)) return m->module;
  throw Error("undefined module '" + name + "'");
}

const Intertwiner& Workspace::morphism(const std::string& name) const {
  if (const auto* m = find_morphism(name)) return m->morphism;
  throw Error("undefined morphism '" + name + "'");
}

namespace {

// ---------------------------------------------------------------- lexer

enum class Tok { Word, LBrace, RBrace, LParen, RParen, Colon, Comma, Equals, Slash, Compose, Arrow, Sep, Matrix, Raw, Other, End };

struct Token {
  Tok kind;
  std::string text;
  SourceLocation loc;
  std::size_t begin = 0;  // byte offsets into the source
  std::size_t end = 0;
};

bool word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '\'' || c == '^';
}

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    int depth = 0;
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
        continue;
      }
      if (c == '\n') {
        if (depth == 0) out.push_back(make(Tok::Sep, "\\n", pos_, pos_ + 1));
        advance();
        continue;
      }
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
        continue;
      }
      const std::size_t start = pos_;
      const SourceLocation loc = here();
      if (c == '[') {
        advance();
        const std::size_t inner = pos_;
        while (pos_ < src_.size() && src_[pos_] != ']') {
          if (src_[pos_] == '[' || src_[pos_] == '#') throw SyntaxError("unexpected character inside matrix", here(), std::string(1, src_[pos_]));
          advance();
        }
        if (pos_ >= src_.size()) throw SyntaxError("unterminated matrix", loc, "[");
        out.push_back(Token{Tok::Matrix, std::string(src_.substr(inner, pos_ - inner)), loc, start, pos_ + 1});
        advance();
        continue;
      }
      if (word_char(c)) {
        while (pos_ < src_.size() &&
               (word_char(src_[pos_]) || (src_[pos_] == '-' && pos_ + 1 < src_.size() &&
                                          std::isalpha(static_cast<unsigned char>(src_[pos_ + 1]))))) {
          advance();
        }
        out.push_back(Token{Tok::Word, std::string(src_.substr(start, pos_ - start)), loc, start, pos_});
        if (out.back().text == "gen") capture_raw(out);
        continue;
      }
      if (src_.substr(pos_, 3) == "∘") {
        pos_ += 3;
        ++col_;
        out.push_back(Token{Tok::Compose, "∘", loc, start, pos_});
        continue;
      }
      if (c == '-' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') {
        advance();
        advance();
        out.push_back(Token{Tok::Arrow, "->", loc, start, pos_});
        continue;
      }
      Tok kind = Tok::Other;
      switch (c) {
        case '{': kind = Tok::LBrace; break;
        case '}': kind = Tok::RBrace; break;
        case '(': kind = Tok::LParen; ++depth; break;
        case ')': kind = Tok::RParen; depth = depth > 0 ? depth - 1 : 0; break;
        case ':': kind = Tok::Colon; break;
        case ',': kind = Tok::Comma; break;
        case '=': kind = Tok::Equals; break;
        case '/': kind = Tok::Slash; break;
        case '*': kind = Tok::Compose; break;
        case ';': kind = Tok::Sep; break;
        default: break;
      }
      std::size_t len = 1;
      if (kind == Tok::Other) {
        // one UTF-8 code point
        while (pos_ + len < src_.size() && (static_cast<unsigned char>(src_[pos_ + len]) & 0xC0) == 0x80) ++len;
      }
      const std::string text(src_.substr(pos_, len));
      pos_ += len;
      ++col_;
      out.push_back(Token{kind, text, loc, start, pos_});
    }
    out.push_back(Token{Tok::End, "", here(), src_.size(), src_.size()});
    return out;
  }

 private:
  SourceLocation here() const { return {line_, col_}; }

  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else if ((static_cast<unsigned char>(src_[pos_]) & 0xC0) != 0x80) {
      ++col_;
    }
    ++pos_;
  }

  Token make(Tok k, std::string text, std::size_t b, std::size_t e) { return Token{k, std::move(text), here(), b, e}; }

  // gen( ... ) is kept verbatim: scalars like t^2+1 and path words mix freely inside.
  void capture_raw(std::vector<Token>& out) {
    std::size_t p = pos_;
    while (p < src_.size() && (src_[p] == ' ' || src_[p] == '\t')) ++p;
    if (p >= src_.size() || src_[p] != '(') return;
    while (pos_ < p) advance();
    const SourceLocation loc = here();
    const std::size_t start = pos_;
    advance();
    int depth = 1;
    const std::size_t inner = pos_;
    while (pos_ < src_.size() && depth > 0) {
      if (src_[pos_] == '(') ++depth;
      if (src_[pos_] == ')') --depth;
      if (depth > 0) advance();
    }
    if (pos_ >= src_.size()) throw SyntaxError("unterminated gen(", loc, "(");
    out.push_back(Token{Tok::Raw, std::string(src_.substr(inner, pos_ - inner)), loc, start, pos_ + 1});
    advance();
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

// ---------------------------------------------------------------- helpers

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::vector<std::string>> split_matrix(const std::string& raw) {
  std::vector<std::vector<std::string>> rows;
  if (trim(raw).empty()) return rows;
  std::string row;
  std::istringstream all(raw);
  while (std::getline(all, row, ';')) {
    std::istringstream is(row);
    std::vector<std::string> entries;
    for (std::string e; is >> e;) entries.push_back(e);
    rows.push_back(std::move(entries));
  }
  return rows;
}

// Splits on separators at parenthesis depth 0; keeps the separator with the right piece when keep is set.
std::vector<std::string> split_top(const std::string& s, const std::string& seps, bool keep) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth == 0 && seps.find(c) != std::string::npos) {
      // a sign right after '^' or '*' belongs to the scalar
      const std::string t = trim(cur);
      if (!t.empty() && (t.back() == '^' || t.back() == '*' || t.back() == '/')) {
        cur += c;
        continue;
      }
      out.push_back(cur);
      cur = keep ? std::string(1, c) : std::string();
      continue;
    }
    cur += c;
  }
  out.push_back(cur);
  return out;
}

bool is_number(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Matrix build_matrix(const FieldSpec& f, const std::string& raw, std::size_t rows, std::size_t cols, SourceLocation loc,
                    const std::string& what) {
  const auto cells = split_matrix(raw);
  Matrix m(f, rows, cols);
  if (cells.empty()) {
    if (rows * cols != 0) {
      throw SemanticError(what + " must be " + std::to_string(rows) + "x" + std::to_string(cols) + ", got []", loc);
    }
    return m;
  }
  bool shape_ok = cells.size() == rows;
  for (const auto& r : cells) shape_ok = shape_ok && r.size() == cols;
  if (!shape_ok) {
    throw SemanticError(what + " must be " + std::to_string(rows) + "x" + std::to_string(cols) + ", got " +
                            std::to_string(cells.size()) + "x" + std::to_string(cells.front().size()),
                        loc);
  }
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      try {
        m.set(i, j, f.parse_scalar(cells[i][j]));
      } catch (const Error&) {
        throw SyntaxError("bad scalar for " + f.name(), loc, cells[i][j]);
      }
    }
  }
  return m;
}

void write_matrix(std::ostream& os, const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) {
    os << "[]";
    return;
  }
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) os << "; ";
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j).to_string();
  }
  os << ']';
}

// ---------------------------------------------------------------- parser

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src), toks_(Lexer(src).run()) {}

  Workspace run() {
    skip_seps();
    if (peek().kind == Tok::End) throw SyntaxError("missing field declaration", peek().loc, "");
    if (!(peek().kind == Tok::Word && peek().text == "field")) {
      throw SyntaxError("missing field declaration", peek().loc, peek().text);
    }
    while (true) {
      skip_seps();
      const Token& t = peek();
      if (t.kind == Tok::End) break;
      if (t.kind != Tok::Word) throw SyntaxError("expected a statement", t.loc, t.text);
      if (t.text == "field") {
        parse_field();
      } else if (t.text == "quiver") {
        parse_quiver();
      } else if (t.text == "relations") {
        parse_relations();
      } else if (t.text == "module") {
        parse_module();
      } else if (t.text == "morphism") {
        parse_morphism();
      } else if (t.text == "assert") {
        parse_assert();
      } else {
        throw SyntaxError("unknown statement", t.loc, t.text);
      }
      end_statement();
    }
    if (!have_quiver_) throw SyntaxError("missing quiver", peek().loc, "");
    freeze();
    return std::move(ws_);
  }

 private:
  const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }
  const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  void skip_seps() {
    while (peek().kind == Tok::Sep) ++pos_;
  }

  void end_statement() {
    const Token& t = peek();
    if (t.kind == Tok::Sep || t.kind == Tok::End) return;
    throw SyntaxError("expected end of statement", t.loc, t.text);
  }

  const Token& expect(Tok kind, const std::string& what) {
    const Token& t = peek();
    if (t.kind != kind) throw SyntaxError("expected " + what, t.loc, t.kind == Tok::Sep ? "end of line" : t.text);
    return next();
  }

  const Token& expect_word(const std::string& what) { return expect(Tok::Word, what); }

  void expect_keyword(const std::string& kw) {
    const Token& t = peek();
    if (t.kind != Tok::Word || t.text != kw) throw SyntaxError("expected '" + kw + "'", t.loc, t.text);
    next();
  }

  long long expect_number(const std::string& what) {
    const Token& t = expect_word(what);
    if (!is_number(t.text)) throw SyntaxError("expected " + what, t.loc, t.text);
    try {
      return std::stoll(t.text);
    } catch (const std::exception&) {
      throw SyntaxError("number out of range", t.loc, t.text);
    }
  }

  void require_field(const Token& t) {
    if (!ws_.field) throw SyntaxError("missing field declaration", t.loc, t.text);
  }

  void require_quiver(const Token& t) {
    if (!have_quiver_) throw SemanticError("the quiver must be declared before '" + t.text + "'", t.loc);
  }

  void freeze() {
    if (!ws_.algebra) ws_.algebra = make_algebra(quiver_, relations_);
  }

  void parse_field() {
    const Token kw = next();
    if (ws_.field) throw SyntaxError("duplicate field declaration", kw.loc, kw.text);
    std::string text;
    const Token& first = peek();
    while (peek().kind != Tok::Sep && peek().kind != Tok::End) text += next().text;
    try {
      ws_.field = &FieldSpec::parse(text);
    } catch (const Error& e) {
      throw SyntaxError(std::string("unknown field: ") + e.what(), first.loc, text);
    }
  }

  void parse_quiver() {
    const Token kw = next();
    require_field(kw);
    if (have_quiver_) throw SyntaxError("duplicate quiver declaration", kw.loc, kw.text);
    expect(Tok::LBrace, "'{'");
    while (true) {
      skip_seps();
      if (peek().kind == Tok::RBrace) {
        next();
        break;
      }
      const Token& item = expect_word("'vertex', 'arrow' or '}'");
      if (item.text == "vertex") {
        if (peek().kind != Tok::Word) throw SyntaxError("expected a vertex name", peek().loc, peek().text);
        while (peek().kind == Tok::Word) {
          const Token& v = next();
          if (quiver_.find_vertex(v.text)) throw SemanticError("duplicate vertex '" + v.text + "'", v.loc);
          quiver_.add_vertex(v.text);
        }
      } else if (item.text == "arrow") {
        const Token& name = expect_word("an arrow name");
        const Token& s = expect_word("a source vertex");
        const Token& t = expect_word("a target vertex");
        if (quiver_.find_arrow(name.text)) throw SemanticError("duplicate arrow '" + name.text + "'", name.loc);
        for (const Token* v : {&s, &t}) {
          if (!quiver_.find_vertex(v->text)) throw SemanticError("undefined vertex '" + v->text + "'", v->loc);
        }
        quiver_.add_arrow(name.text, s.text, t.text);
      } else {
        throw SyntaxError("expected 'vertex' or 'arrow'", item.loc, item.text);
      }
      if (peek().kind != Tok::Sep && peek().kind != Tok::RBrace) throw SyntaxError("expected end of line", peek().loc, peek().text);
    }
    have_quiver_ = true;
  }

  PathWord parse_word_tokens(const std::vector<const Token*>& words) {
    std::vector<ArrowIndex> arrows;
    for (const Token* w : words) {
      const auto a = quiver_.find_arrow(w->text);
      if (!a) throw SemanticError("undefined arrow '" + w->text + "'", w->loc);
      arrows.push_back(*a);
    }
    try {
      return PathWord::from_arrows(quiver_, arrows);
    } catch (const Error& e) {
      throw SemanticError(e.what(), words.front()->loc);
    }
  }

  void parse_relations() {
    const Token kw = next();
    require_quiver(kw);
    if (have_relations_) throw SyntaxError("duplicate relations block", kw.loc, kw.text);
    if (ws_.algebra) throw SemanticError("relations must come before modules and morphisms", kw.loc);
    expect(Tok::LBrace, "'{'");
    while (true) {
      skip_seps();
      if (peek().kind == Tok::RBrace) {
        next();
        break;
      }
      const Token& item = expect_word("'zero', 'bound' or '}'");
      if (item.text == "zero") {
        std::vector<const Token*> words;
        while (peek().kind == Tok::Word) words.push_back(&next());
        if (words.empty()) throw SyntaxError("expected a path word", peek().loc, peek().text);
        const PathWord w = parse_word_tokens(words);
        try {
          relations_.add(w);
        } catch (const Error& e) {
          throw SemanticError(e.what(), item.loc);
        }
      } else if (item.text == "bound") {
        const Token& n = peek();
        const long long b = expect_number("a length bound");
        try {
          relations_.set_length_bound(static_cast<std::size_t>(b));
        } catch (const Error& e) {
          throw SemanticError(e.what(), n.loc);
        }
      } else {
        throw SyntaxError("expected 'zero' or 'bound'", item.loc, item.text);
      }
      if (peek().kind != Tok::Sep && peek().kind != Tok::RBrace) throw SyntaxError("expected end of line", peek().loc, peek().text);
    }
    have_relations_ = true;
  }

  void check_fresh(const Token& name) {
    if (ws_.find_module(name.text) || ws_.find_morphism(name.text)) {
      throw SemanticError("duplicate name '" + name.text + "'", name.loc);
    }
  }

  const Representation& module_ref(const Token& t) {
    const NamedModule* m = ws_.find_module(t.text);
    if (!m) throw SemanticError("undefined module '" + t.text + "'", t.loc);
    return m->module;
  }

  VertexIndex vertex_ref(const Token& t) {
    const auto v = quiver_.find_vertex(t.text);
    if (!v) throw SemanticError("undefined vertex '" + t.text + "'", t.loc);
    return *v;
  }

  void parse_module() {
    const Token kw = next();
    require_quiver(kw);
    freeze();
    const Token name = expect_word("a module name");
    check_fresh(name);
    if (peek().kind == Tok::LBrace) {
      parse_explicit_module(name);
      return;
    }
    expect(Tok::Equals, "'{' or '='");
    const std::size_t begin = peek().begin;
    Representation r = parse_module_expr();
    const std::string def = trim(src_.substr(begin, toks_[pos_ - 1].end - begin));
    ws_.modules.push_back(NamedModule{name.text, def, std::move(r)});
  }

  Representation parse_module_expr() {
    const Token& head = expect_word("a module expression");
    const FieldSpec& f = *ws_.field;
    auto wrap = [&](auto&& build) -> Representation {
      try {
        return build();
      } catch (const SemanticError&) {
        throw;
      } catch (const SyntaxError&) {
        throw;
      } catch (const Error& e) {
        throw SemanticError(e.what(), head.loc);
      }
    };
    if ((head.text == "P" || head.text == "I" || head.text == "S") && peek().kind == Tok::LParen) {
      next();
      const Token& v = expect_word("a vertex");
      const VertexIndex x = vertex_ref(v);
      expect(Tok::RParen, "')'");
      if (head.text == "P" && peek().kind == Tok::Slash) {
        next();
        expect_keyword("gen");
        const Token& raw = expect(Tok::Raw, "'(' after gen");
        const auto gens = parse_generators(raw, x);
        return wrap([&] { return presented_module(ws_.algebra, f, x, gens).module; });
      }
      if (head.text == "P") return wrap([&] { return projective(ws_.algebra, f, x); });
      if (head.text == "I") return wrap([&] { return injective(ws_.algebra, f, x); });
      return wrap([&] { return simple(ws_.algebra, f, x); });
    }
    if ((head.text == "rad" || head.text == "soc") && peek().kind == Tok::LParen) {
      next();
      const Token& m = expect_word("a module name");
      const Representation r = module_ref(m);
      expect(Tok::RParen, "')'");
      return wrap([&] { return restrict_to(r, head.text == "rad" ? radical(r) : socle(r)).module; });
    }
    const Representation r = module_ref(head);
    if (peek().kind != Tok::Slash) return r;
    next();
    const Token& op = expect_word("'soc' or 'rad'");
    if (op.text != "soc" && op.text != "rad") throw SyntaxError("expected 'soc' or 'rad'", op.loc, op.text);
    expect(Tok::LParen, "'('");
    const Token& m = expect_word("a module name");
    if (m.text != head.text) throw SemanticError("quotient must be by a submodule of " + head.text, m.loc);
    expect(Tok::RParen, "')'");
    return wrap([&] { return quotient(r, op.text == "soc" ? socle(r) : radical(r)).module; });
  }

  std::vector<PathCombination> parse_generators(const Token& raw, VertexIndex x) {
    const FieldSpec& f = *ws_.field;
    std::vector<PathCombination> out;
    for (const auto& gen : split_top(raw.text, ",", false)) {
      if (trim(gen).empty()) throw SyntaxError("empty generator", raw.loc, raw.text);
      PathCombination comb;
      for (auto term : split_top(gen, "+-", true)) {
        term = trim(term);
        if (term.empty()) continue;
        Scalar sign = f.one();
        if (term[0] == '+' || term[0] == '-') {
          if (term[0] == '-') sign = -sign;
          term = trim(term.substr(1));
        }
        Scalar coeff = f.one();
        std::string word = term;
        const auto star = term.rfind('*');
        if (star != std::string::npos) {
          std::string c = trim(term.substr(0, star));
          if (c.size() >= 2 && c.front() == '(' && c.back() == ')') c = c.substr(1, c.size() - 2);
          try {
            coeff = f.parse_scalar(c);
          } catch (const Error&) {
            throw SyntaxError("bad scalar for " + f.name(), raw.loc, c);
          }
          word = trim(term.substr(star + 1));
        }
        if (word.empty()) throw SyntaxError("missing path word", raw.loc, term);
        PathWord w = PathWord::trivial(x);
        try {
          w = PathWord::parse(quiver_, word);
        } catch (const Error& e) {
          throw SemanticError(std::string(e.what()) + " in '" + word + "'", raw.loc);
        }
        if (w.source() != x) throw SemanticError("path '" + word + "' does not start at the generator vertex", raw.loc);
        comb.emplace_back(sign * coeff, w);
      }
      if (comb.empty()) throw SyntaxError("empty generator", raw.loc, gen);
      out.push_back(std::move(comb));
    }
    return out;
  }

  void parse_explicit_module(const Token& name) {
    next();  // '{'
    const FieldSpec& f = *ws_.field;
    std::vector<std::size_t> dims(quiver_.vertex_count(), 0);
    std::vector<std::pair<const Token*, const Token*>> maps(quiver_.arrow_count(), {nullptr, nullptr});
    while (true) {
      skip_seps();
      if (peek().kind == Tok::RBrace) {
        next();
        break;
      }
      const Token& item = expect_word("'dims', 'map' or '}'");
      if (item.text == "dims") {
        if (peek().kind != Tok::Word) throw SyntaxError("expected vertex:dimension", peek().loc, peek().text);
        while (peek().kind == Tok::Word) {
          const Token& v = next();
          expect(Tok::Colon, "':'");
          dims[vertex_ref(v)] = static_cast<std::size_t>(expect_number("a dimension"));
        }
      } else if (item.text == "map") {
        const Token& a = expect_word("an arrow name");
        const auto idx = quiver_.find_arrow(a.text);
        if (!idx) throw SemanticError("undefined arrow '" + a.text + "'", a.loc);
        const Token& m = expect(Tok::Matrix, "a matrix");
        maps[*idx] = {&a, &m};
      } else {
        throw SyntaxError("expected 'dims' or 'map'", item.loc, item.text);
      }
      if (peek().kind != Tok::Sep && peek().kind != Tok::RBrace) throw SyntaxError("expected end of line", peek().loc, peek().text);
    }
    std::vector<Matrix> mats;
    for (ArrowIndex a = 0; a < quiver_.arrow_count(); ++a) {
      const Arrow& arrow = quiver_.arrow(a);
      if (maps[a].second) {
        mats.push_back(build_matrix(f, maps[a].second->text, dims[arrow.target], dims[arrow.source], maps[a].second->loc,
                                    "map " + arrow.name));
      } else {
        mats.emplace_back(f, dims[arrow.target], dims[arrow.source]);
      }
    }
    try {
      ws_.modules.push_back(NamedModule{name.text, "explicit", Representation(ws_.algebra, f, dims, std::move(mats))});
    } catch (const Error& e) {
      throw SemanticError(std::string("module ") + name.text + ": " + e.what(), name.loc);
    }
  }

  void parse_morphism() {
    const Token kw = next();
    require_quiver(kw);
    freeze();
    const Token name = expect_word("a morphism name");
    check_fresh(name);
    expect(Tok::Colon, "':'");
    const Token& a = expect_word("a source module");
    expect(Tok::Arrow, "'->'");
    const Token& b = expect_word("a target module");
    const Representation src = module_ref(a), tgt = module_ref(b);
    expect(Tok::LBrace, "'{'");
    std::vector<const Token*> comps(quiver_.vertex_count(), nullptr);
    while (true) {
      skip_seps();
      if (peek().kind == Tok::RBrace) {
        next();
        break;
      }
      expect_keyword("at");
      const Token& v = expect_word("a vertex");
      comps[vertex_ref(v)] = &expect(Tok::Matrix, "a matrix");
      if (peek().kind != Tok::Sep && peek().kind != Tok::RBrace) throw SyntaxError("expected end of line", peek().loc, peek().text);
    }
    std::vector<Matrix> mats;
    for (VertexIndex v = 0; v < quiver_.vertex_count(); ++v) {
      if (comps[v]) {
        mats.push_back(build_matrix(*ws_.field, comps[v]->text, tgt.dim(v), src.dim(v), comps[v]->loc,
                                    "component at " + quiver_.vertex_name(v)));
      } else {
        mats.emplace_back(*ws_.field, tgt.dim(v), src.dim(v));
      }
    }
    try {
      ws_.morphisms.push_back(NamedMorphism{name.text, Intertwiner(src, tgt, std::move(mats))});
    } catch (const Error& e) {
      throw SemanticError("morphism " + name.text + ": " + e.what(), name.loc);
    }
  }

  MorphismExpr parse_expr() {
    MorphismExpr e;
    const SourceLocation loc = peek().loc;
    while (true) {
      const Token& t = expect_word("a morphism name");
      if (t.text == "id" && peek().kind == Tok::LParen) {
        next();
        const Token& m = expect_word("a module name");
        module_ref(m);
        expect(Tok::RParen, "')'");
        e.factors.push_back("id(" + m.text + ")");
      } else {
        if (!ws_.find_morphism(t.text)) throw SemanticError("undefined morphism '" + t.text + "'", t.loc);
        e.factors.push_back(t.text);
      }
      if (peek().kind != Tok::Compose) break;
      next();
    }
    try {
      evaluate_expr(ws_, e);
    } catch (const Error& err) {
      throw SemanticError(err.what(), loc);
    }
    return e;
  }

  std::vector<ElementSpec> parse_elements(const Representation& r) {
    std::vector<ElementSpec> out;
    while (peek().kind == Tok::Word) {
      const Token& v = next();
      const VertexIndex idx = vertex_ref(v);
      expect(Tok::Colon, "':'");
      const Token& m = expect(Tok::Matrix, "a vector");
      build_matrix(*ws_.field, m.text, 1, r.dim(idx), m.loc, "vector at " + v.text);
      out.push_back(ElementSpec{v.text, m.text});
    }
    if (out.empty()) throw SyntaxError("expected vertex:[vector]", peek().loc, peek().text);
    return out;
  }

  std::vector<std::size_t> parse_tuple() {
    std::vector<std::size_t> out;
    expect(Tok::LParen, "'('");
    while (true) {
      out.push_back(static_cast<std::size_t>(expect_number("a dimension")));
      if (peek().kind == Tok::Comma) {
        next();
        continue;
      }
      expect(Tok::RParen, "')'");
      return out;
    }
  }

  std::string module_arg(Assertion& a) {
    const Token& m = expect_word("a module name");
    module_ref(m);
    a.modules.push_back(m.text);
    return m.text;
  }

  void parse_assert() {
    const Token kw = next();
    require_quiver(kw);
    freeze();
    Assertion a;
    const Token& pred = expect_word("a predicate");
    a.predicate = pred.text;
    a.loc = pred.loc;
    const std::size_t begin = pred.begin;
    const std::string& p = pred.text;
    expect(Tok::LParen, "'('");
    if (p == "uniserial" || p == "not-uniserial" || p == "uniform" || p == "not-uniform") {
      module_arg(a);
      expect(Tok::RParen, "')'");
    } else if (p == "length" || p == "dims" || p == "socdims" || p == "endring") {
      module_arg(a);
      expect(Tok::RParen, "')'");
      expect(Tok::Equals, "'='");
      if (p == "length") {
        a.number = expect_number("a length");
      } else if (p == "endring") {
        const Token& v = expect_word("'scalar' or 'dual-numbers'");
        if (v.text != "scalar" && v.text != "dual-numbers") throw SyntaxError("expected 'scalar' or 'dual-numbers'", v.loc, v.text);
        a.value = v.text;
      } else {
        a.tuple = parse_tuple();
      }
    } else if (p == "homdim" || p == "iso" || p == "not-iso" || p == "weakened-bound") {
      module_arg(a);
      expect(Tok::Comma, "','");
      module_arg(a);
      if (p == "weakened-bound") {
        expect(Tok::Comma, "','");
        a.number = expect_number("a fold count");
      }
      expect(Tok::RParen, "')'");
      if (p == "homdim") {
        expect(Tok::Equals, "'='");
        a.number = expect_number("a dimension");
      }
      if ((p == "iso" || p == "not-iso") && peek().kind == Tok::Word && peek().text == "via") {
        next();
        const Token& m = expect_word("a method");
        if (!is_iso_method(m.text)) throw SyntaxError("unknown method", m.loc, m.text);
        a.method = m.text;
      }
    } else if (p == "nonzero" || p == "zero" || p == "injective" || p == "surjective") {
      a.expr = parse_expr();
      expect(Tok::RParen, "')'");
    } else if (p == "fixes") {
      a.expr = parse_expr();
      expect(Tok::Comma, "','");
      const Token& v = expect_word("'nontrivial'");
      if (v.text != "nontrivial") throw SyntaxError("expected 'nontrivial'", v.loc, v.text);
      a.value = v.text;
      expect(Tok::RParen, "')'");
    } else if (p == "image") {
      a.expr = parse_expr();
      expect(Tok::RParen, "')'");
      expect(Tok::Equals, "'='");
      const Token& v = expect_word("'soc(M)', 'rad(M)', a module name or 0");
      if ((v.text == "soc" || v.text == "rad") && peek().kind == Tok::LParen) {
        next();
        a.value = v.text;
        module_arg(a);
        expect(Tok::RParen, "')'");
      } else if (v.text == "0") {
        a.value = "0";
      } else {
        module_ref(v);
        a.value = "whole";
        a.modules.push_back(v.text);
      }
    } else if (p == "maps") {
      a.expr = parse_expr();
      const Intertwiner f = evaluate_expr(ws_, *a.expr);
      expect(Tok::Comma, "','");
      a.from = parse_elements(f.source());
      expect(Tok::RParen, "')'");
      expect(Tok::Equals, "'='");
      a.to = parse_elements(f.target());
    } else if (p == "acts-zero" || p == "acts-nonzero") {
      module_arg(a);
      expect(Tok::Comma, "','");
      std::vector<const Token*> words;
      while (peek().kind == Tok::Word) words.push_back(&next());
      if (words.empty()) throw SyntaxError("expected a path word", peek().loc, peek().text);
      parse_word_tokens(words);
      for (const Token* w : words) a.word.push_back(w->text);
      expect(Tok::RParen, "')'");
    } else {
      throw SyntaxError("unknown predicate", pred.loc, pred.text);
    }
    a.text = trim(src_.substr(begin, toks_[pos_ - 1].end - begin));
    ws_.assertions.push_back(std::move(a));
  }

  std::string_view src_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  Workspace ws_;
  Quiver quiver_;
  MonomialRelations relations_;
  bool have_quiver_ = false;
  bool have_relations_ = false;
};

// ---------------------------------------------------------------- export

using ModuleList = std::vector<std::pair<std::string, Representation>>;
using MorphismList = std::vector<std::pair<std::string, Intertwiner>>;

std::string module_name_for(const ModuleList& modules, const Representation& r) {
  for (const auto& [n, m] : modules) {
    if (m.same_object(r)) return n;
  }
  for (const auto& [n, m] : modules) {
    if (m == r) return n;
  }
  throw Error("morphism endpoint is not a listed module");
}

std::string write_workspace(const std::string& header, const FieldSpec& field, const Algebra& alg,
                            const ModuleList& modules, const MorphismList& morphisms,
                            const std::vector<std::string>& assertions) {
  std::ostringstream os;
  if (!header.empty()) {
    std::istringstream hs(header);
    for (std::string line; std::getline(hs, line);) os << "# " << line << '\n';
  }
  const Quiver& q = alg.quiver;
  os << "field " << field.name() << "\n\nquiver {\n  vertex";
  for (const auto& v : q.vertex_names()) os << ' ' << v;
  os << '\n';
  for (const auto& a : q.arrows()) os << "  arrow " << a.name << ' ' << q.vertex_name(a.source) << ' ' << q.vertex_name(a.target) << '\n';
  os << "}\n";
  if (!alg.relations.empty()) {
    os << "\nrelations {\n";
    for (const auto& w : alg.relations.forbidden()) os << "  zero " << w.to_string(q) << '\n';
    if (auto b = alg.relations.length_bound()) os << "  bound " << *b << '\n';
    os << "}\n";
  }
  for (const auto& [name, m] : modules) {
    if (!(m.algebra() == alg) || &m.field() != &field) throw Error("module " + name + " lives over another algebra");
    os << "\nmodule " << name << " {\n  dims";
    for (VertexIndex v = 0; v < q.vertex_count(); ++v) os << ' ' << q.vertex_name(v) << ':' << m.dim(v);
    os << '\n';
    for (ArrowIndex a = 0; a < q.arrow_count(); ++a) {
      os << "  map " << q.arrow(a).name << ' ';
      write_matrix(os, m.map(a));
      os << '\n';
    }
    os << "}\n";
  }
  for (const auto& [name, f] : morphisms) {
    os << "\nmorphism " << name << " : " << module_name_for(modules, f.source()) << " -> "
       << module_name_for(modules, f.target()) << " {\n";
    for (VertexIndex v = 0; v < q.vertex_count(); ++v) {
      os << "  at " << q.vertex_name(v) << ' ';
      write_matrix(os, f.at(v));
      os << '\n';
    }
    os << "}\n";
  }
  if (!assertions.empty()) os << '\n';
  for (const auto& a : assertions) os << "assert " << a << '\n';
  return os.str();
}

Vector parse_vector(const FieldSpec& f, const std::string& raw, std::size_t n) {
  const Matrix m = build_matrix(f, raw, 1, n, {}, "vector");
  return m.row(0);
}

ModuleElement build_element(const Representation& r, const std::vector<ElementSpec>& parts) {
  ModuleElement x = zero_element(r);
  for (const auto& p : parts) {
    const VertexIndex v = r.quiver().vertex(p.vertex);
    const Vector vec = parse_vector(r.field(), p.raw, r.dim(v));
    for (std::size_t i = 0; i < vec.size(); ++i) x.parts[v][i] += vec[i];
  }
  return x;
}

std::string tuple_text(const std::vector<std::size_t>& d) {
  std::string out = "(";
  for (std::size_t i = 0; i < d.size(); ++i) out += (i ? "," : "") + std::to_string(d[i]);
  return out + ")";
}

std::string element_text(const Representation& r, const ModuleElement& x) {
  std::string out;
  for (VertexIndex v = 0; v < x.parts.size(); ++v) {
    if (r.dim(v) == 0) continue;
    if (!out.empty()) out += ' ';
    out += r.quiver().vertex_name(v) + ":[";
    for (std::size_t i = 0; i < x.parts[v].size(); ++i) out += (i ? " " : "") + x.parts[v][i].to_string();
    out += ']';
  }
  return out.empty() ? "0" : out;
}

}  // namespace

Workspace parse_workspace(std::string_view text) { return Parser(text).run(); }

std::string export_workspace(const Workspace& ws, const std::string& header) {
  ModuleList modules;
  for (const auto& m : ws.modules) modules.emplace_back(m.name, m.module);
  MorphismList morphisms;
  for (const auto& m : ws.morphisms) morphisms.emplace_back(m.name, m.morphism);
  std::vector<std::string> assertions;
  for (const auto& a : ws.assertions) assertions.push_back(a.text);
  return write_workspace(header, *ws.field, *ws.algebra, modules, morphisms, assertions);
}

std::string export_gallery(const GalleryEntry& entry) {
  if (!entry.algebra) throw Unsupported("gallery entry " + entry.name + " has no quiver algebra to export");
  std::string header = "gallery " + entry.name;
  for (const auto& [k, v] : entry.parameters) header += " " + k + "=" + std::to_string(v);
  return write_workspace(header, *entry.field, *entry.algebra, entry.modules, entry.morphisms, entry.assertions);
}

bool equivalent(const Workspace& a, const Workspace& b) {
  if (a.field != b.field || !a.algebra || !b.algebra || !(*a.algebra == *b.algebra)) return false;
  if (a.modules.size() != b.modules.size() || a.morphisms.size() != b.morphisms.size() ||
      a.assertions.size() != b.assertions.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.modules.size(); ++i) {
    if (a.modules[i].name != b.modules[i].name || !(a.modules[i].module == b.modules[i].module)) return false;
  }
  for (std::size_t i = 0; i < a.morphisms.size(); ++i) {
    if (a.morphisms[i].name != b.morphisms[i].name || !(a.morphisms[i].morphism == b.morphisms[i].morphism)) return false;
  }
  for (std::size_t i = 0; i < a.assertions.size(); ++i) {
    if (a.assertions[i].text != b.assertions[i].text) return false;
  }
  return true;
}

Intertwiner evaluate_expr(const Workspace& ws, const MorphismExpr& e) {
  if (e.factors.empty()) throw Error("empty morphism expression");
  std::optional<Intertwiner> acc;
  for (auto it = e.factors.rbegin(); it != e.factors.rend(); ++it) {
    const std::string& f = *it;
    Intertwiner next = f.rfind("id(", 0) == 0 ? Intertwiner::identity(ws.module(f.substr(3, f.size() - 4)))
                                              : ws.morphism(f);
    acc = acc ? compose(next, *acc) : next;
  }
  return *acc;
}

bool is_iso_method(const std::string& method) {
  return method == "direct" || method == "nfold" || method == "two-morphism" || method == "mono-epi";
}

IsoVerdict run_iso_method(const std::string& method, const Representation& l, const Representation& m,
                          const SearchOptions& opts) {
  if (method == "direct") return iso_direct(l, m, opts);
  if (method == "nfold") return nfold_criterion(l, m, opts);
  if (method == "two-morphism") return two_morphism_criterion(l, m, opts);
  if (method == "mono-epi") return mono_epi_criterion(l, m, opts);
  throw Error("unknown iso method '" + method + "'");
}

AssertionResult evaluate(const Workspace& ws, const Assertion& a, const SearchOptions& opts) {
  AssertionResult r;
  const std::string& p = a.predicate;
  try {
    if (p == "uniserial" || p == "not-uniserial") {
      const bool u = is_uniserial(ws.module(a.modules[0])).uniserial;
      r.passed = (p == "uniserial") == u;
      r.summary = u ? "uniserial" : "not uniserial";
    } else if (p == "uniform" || p == "not-uniform") {
      const Representation& m = ws.module(a.modules[0]);
      const bool u = is_uniform(m);
      r.passed = (p == "uniform") == u;
      r.summary = (u ? "uniform" : "not uniform") + std::string(", socle dims ") + tuple_text(socle(m).dims());
    } else if (p == "length") {
      const std::size_t n = length(ws.module(a.modules[0]));
      r.passed = static_cast<long long>(n) == *a.number;
      r.summary = "length " + std::to_string(n);
    } else if (p == "dims" || p == "socdims") {
      const Representation& m = ws.module(a.modules[0]);
      const auto d = p == "dims" ? m.dims() : socle(m).dims();
      r.passed = d == a.tuple;
      r.summary = (p == "dims" ? "dims " : "socle dims ") + tuple_text(d);
    } else if (p == "endring") {
      const EndRingAnalysis e = end_ring_analysis(ws.module(a.modules[0]));
      r.passed = a.value == "scalar" ? e.is_scalar_only : e.is_dual_numbers;
      r.summary = "dim End = " + std::to_string(e.dim) +
                  (e.is_scalar_only ? ", scalars only" : e.is_dual_numbers ? ", K[x]/(x^2)" : "");
    } else if (p == "homdim") {
      const std::size_t d = hom_basis(ws.module(a.modules[0]), ws.module(a.modules[1])).dimension();
      r.passed = static_cast<long long>(d) == *a.number;
      r.summary = "hom dimension " + std::to_string(d);
    } else if (p == "iso" || p == "not-iso") {
      const std::string method = a.method.value_or("direct");
      IsoVerdict v = run_iso_method(method, ws.module(a.modules[0]), ws.module(a.modules[1]), opts);
      r.passed = v.verdict == (p == "iso" ? Verdict::Isomorphic : Verdict::NotIsomorphic);
      r.cap_exceeded = v.verdict == Verdict::Inconclusive && ws.field->is_finite();
      r.summary = to_string(v.verdict) + " via " + method + ": " + v.reason;
      r.iso = std::move(v);
    } else if (p == "weakened-bound") {
      const WeakenedBound b =
          verify_weakened_bound(ws.module(a.modules[0]), ws.module(a.modules[1]), static_cast<std::size_t>(*a.number), opts);
      r.passed = b.some_mfold_nonzero && b.all_mplus1fold_zero;
      r.summary = std::string(b.some_mfold_nonzero ? "some " : "no ") + std::to_string(*a.number) +
                  "-fold composition nonzero; " + (b.all_mplus1fold_zero ? "all " : "not all ") +
                  std::to_string(*a.number + 1) + "-fold compositions zero";
    } else if (p == "nonzero" || p == "zero") {
      const bool z = evaluate_expr(ws, *a.expr).is_zero();
      r.passed = (p == "zero") == z;
      r.summary = a.expr->text() + (z ? " = 0" : " ≠ 0");
    } else if (p == "injective" || p == "surjective") {
      const Classification c = classify(evaluate_expr(ws, *a.expr));
      r.passed = p == "injective" ? c.injective : c.surjective;
      r.summary = a.expr->text() + (c.injective ? " injective" : " not injective") +
                  (c.surjective ? ", surjective" : ", not surjective");
    } else if (p == "fixes") {
      const Intertwiner h = evaluate_expr(ws, *a.expr);
      if (!h.is_endomorphism()) {
        r.summary = a.expr->text() + " is not an endomorphism";
      } else {
        const Subspace fixed = fixed_space(h);
        r.passed = !fixed.is_zero();
        r.summary = "fixed space of " + a.expr->text() + " has dimension " + std::to_string(fixed.dim());
        if (r.passed) r.summary += ", e.g. " + element_text(h.source(), unflatten(h.source(), fixed.basis_vector(0)));
      }
    } else if (p == "image") {
      const Intertwiner f = evaluate_expr(ws, *a.expr);
      const Subrepresentation img = image(f);
      if (a.value == "0") {
        r.passed = img.is_zero();
      } else {
        const Representation& m = ws.module(a.modules[0]);
        if (!(m == f.target())) {
          r.summary = a.modules[0] + " is not the target of " + a.expr->text();
          return r;
        }
        const Subrepresentation want = a.value == "soc" ? socle(m) : a.value == "rad" ? radical(m) : whole(m);
        r.passed = img == want;
      }
      r.summary = "image of " + a.expr->text() + " has dims " + tuple_text(img.dims());
    } else if (p == "maps") {
      const Intertwiner f = evaluate_expr(ws, *a.expr);
      const ModuleElement x = build_element(f.source(), a.from);
      const ModuleElement y = f.apply(x);
      r.passed = y == build_element(f.target(), a.to);
      r.summary = a.expr->text() + " sends " + element_text(f.source(), x) + " to " + element_text(f.target(), y);
    } else if (p == "acts-zero" || p == "acts-nonzero") {
      const Representation& m = ws.module(a.modules[0]);
      std::string text;
      for (const auto& w : a.word) text += (text.empty() ? "" : " ") + w;
      const bool z = m.word_matrix(PathWord::parse(m.quiver(), text)).is_zero();
      r.passed = (p == "acts-zero") == z;
      r.summary = text + (z ? " acts as zero on " : " acts nonzero on ") + a.modules[0];
    } else {
      throw Error("unknown predicate '" + p + "'");
    }
  } catch (const CapExceeded& e) {
    r.passed = false;
    r.cap_exceeded = true;
    r.summary = e.what();
  }
  return r;
}

}  // namespace uniso
