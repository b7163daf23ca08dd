#include "uniso/field.hpp"

#include <cctype>
#include <charconv>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <sstream>
#include <tuple>

namespace uniso {

namespace {

std::uint64_t ipow(std::uint64_t base, unsigned e) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) r *= base;
  return r;
}

// p < 2^31 for every supported field, so a * b cannot overflow.
std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return (a % p) * (b % p) % p; }

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

using Poly = std::vector<std::uint64_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo a monic-or-not b over GF(p); b nonzero.
Poly poly_mod(Poly a, const Poly& b, std::uint64_t p) {
  trim(a);
  const std::uint64_t lead_inv = powmod(b.back(), p - 2, p);
  while (a.size() >= b.size()) {
    const std::uint64_t factor = mulmod(a.back(), lead_inv, p);
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) {
      a[shift + i] = (a[shift + i] + p - mulmod(factor, b[i], p)) % p;
    }
    trim(a);
  }
  return a;
}

// Table of moduli fixed for reproducibility.
const std::map<std::pair<std::uint64_t, unsigned>, Poly>& builtin_moduli() {
  static const std::map<std::pair<std::uint64_t, unsigned>, Poly> table = {
      {{2, 2}, {1, 1, 1}},     // t^2 + t + 1
      {{2, 3}, {1, 1, 0, 1}},  // t^3 + t + 1
      {{3, 2}, {1, 0, 1}},     // t^2 + 1
  };
  return table;
}

Poly find_irreducible(std::uint64_t p, unsigned k) {
  const std::uint64_t count = ipow(p, k);
  for (std::uint64_t code = 0; code < count; ++code) {
    Poly poly(k + 1, 0);
    std::uint64_t c = code;
    for (unsigned i = 0; i < k; ++i) {
      poly[i] = c % p;
      c /= p;
    }
    poly[k] = 1;
    if (is_irreducible(poly, p)) return poly;
  }
  throw Error("no irreducible polynomial found");
}

std::string trim_copy(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

bool parse_uint(std::string_view s, std::uint64_t& out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_irreducible(const std::vector<std::uint64_t>& poly, std::uint64_t p) {
  Poly f = poly;
  trim(f);
  if (f.size() < 2) return false;
  const unsigned deg = static_cast<unsigned>(f.size() - 1);
  if (deg == 1) return true;
  // Trial division by every monic polynomial of degree 1..deg/2.
  for (unsigned d = 1; d <= deg / 2; ++d) {
    const std::uint64_t count = ipow(p, d);
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly g(d + 1, 0);
      std::uint64_t c = code;
      for (unsigned i = 0; i < d; ++i) {
        g[i] = c % p;
        c /= p;
      }
      g[d] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

struct FieldRegistry {
  std::mutex mutex;
  std::map<std::tuple<int, std::uint64_t, unsigned>, std::unique_ptr<FieldSpec>> fields;

  static FieldRegistry& instance() {
    static FieldRegistry registry;
    return registry;
  }

  const FieldSpec& get(FieldKind kind, std::uint64_t p, unsigned k) {
    std::lock_guard lock(mutex);
    auto key = std::make_tuple(static_cast<int>(kind), p, k);
    auto it = fields.find(key);
    if (it != fields.end()) return *it->second;
    Poly modulus;
    if (kind == FieldKind::Extension) {
      auto b = builtin_moduli().find({p, k});
      modulus = b != builtin_moduli().end() ? b->second : find_irreducible(p, k);
    }
    auto spec = std::unique_ptr<FieldSpec>(new FieldSpec(kind, p, k, std::move(modulus)));
    const FieldSpec& ref = *spec;
    fields.emplace(key, std::move(spec));
    return ref;
  }
};

FieldSpec::FieldSpec(FieldKind kind, std::uint64_t p, unsigned k, std::vector<std::uint64_t> modulus)
    : kind_(kind), p_(p), k_(k), order_(kind == FieldKind::Rationals ? 0 : ipow(p, k)),
      modulus_(std::move(modulus)) {}

const FieldSpec& FieldSpec::rationals() {
  return FieldRegistry::instance().get(FieldKind::Rationals, 0, 1);
}

const FieldSpec& FieldSpec::prime(std::uint64_t p) {
  if (!is_prime(p)) throw Error("GF(" + std::to_string(p) + "): " + std::to_string(p) + " is not prime");
  if (p > (std::uint64_t{1} << 31)) throw Error("prime too large");
  return FieldRegistry::instance().get(FieldKind::Prime, p, 1);
}

const FieldSpec& FieldSpec::extension(std::uint64_t p, unsigned k) {
  if (k == 0) throw Error("extension degree must be at least 1");
  if (k == 1) return prime(p);
  if (!is_prime(p)) throw Error("GF(p^k): " + std::to_string(p) + " is not prime");
  long double size = 1;
  for (unsigned i = 0; i < k; ++i) size *= static_cast<long double>(p);
  if (size > static_cast<long double>(std::uint64_t{1} << 31)) throw Error("extension field too large");
  return FieldRegistry::instance().get(FieldKind::Extension, p, k);
}

const FieldSpec& FieldSpec::of_order(std::uint64_t q) {
  for (std::uint64_t p = 2; p <= q; ++p) {
    if (q % p != 0) continue;
    if (!is_prime(p)) break;
    unsigned k = 0;
    std::uint64_t r = q;
    while (r % p == 0) {
      r /= p;
      ++k;
    }
    if (r != 1) break;
    return extension(p, k);
  }
  throw Error("GF(" + std::to_string(q) + "): order is not a prime power");
}

const FieldSpec& FieldSpec::parse(std::string_view text) {
  const std::string s = trim_copy(text);
  if (s == "Q" || s == "QQ") return rationals();
  if (s.size() > 4 && s.rfind("GF(", 0) == 0 && s.back() == ')') {
    const std::string inner = trim_copy(std::string_view(s).substr(3, s.size() - 4));
    const auto caret = inner.find('^');
    std::uint64_t p = 0, k = 0;
    if (caret == std::string::npos) {
      if (!parse_uint(inner, p)) throw Error("bad field order in '" + s + "'");
      return of_order(p);
    }
    if (!parse_uint(trim_copy(std::string_view(inner).substr(0, caret)), p) ||
        !parse_uint(trim_copy(std::string_view(inner).substr(caret + 1)), k) || k == 0 || k > 64) {
      throw Error("bad field '" + s + "'");
    }
    return extension(p, static_cast<unsigned>(k));
  }
  throw Error("unknown field '" + s + "' (expected Q, GF(p) or GF(p^k))");
}

std::optional<std::uint64_t> FieldSpec::order() const {
  if (kind_ == FieldKind::Rationals) return std::nullopt;
  return order_;
}

std::string FieldSpec::name() const {
  switch (kind_) {
    case FieldKind::Rationals:
      return "Q";
    case FieldKind::Prime:
      return "GF(" + std::to_string(p_) + ")";
    case FieldKind::Extension:
      return "GF(" + std::to_string(p_) + "^" + std::to_string(k_) + ")";
  }
  return "?";
}

Scalar FieldSpec::zero() const {
  if (kind_ == FieldKind::Rationals) return Scalar(*this, mpq_class(0));
  return Scalar(*this, std::uint64_t{0});
}

Scalar FieldSpec::one() const {
  if (kind_ == FieldKind::Rationals) return Scalar(*this, mpq_class(1));
  return Scalar(*this, std::uint64_t{1});
}

Scalar FieldSpec::from_int(long long value) const {
  if (kind_ == FieldKind::Rationals) return Scalar(*this, mpq_class(mpz_class(std::to_string(value))));
  const auto p = static_cast<long long>(p_);
  long long r = value % p;
  if (r < 0) r += p;
  return Scalar(*this, static_cast<std::uint64_t>(r));
}

Scalar FieldSpec::rational(const mpq_class& value) const {
  if (kind_ == FieldKind::Rationals) return Scalar(*this, value);
  // Map num/den into GF(p); the denominator must be a unit.
  mpz_class num = value.get_num() % mpz_class(p_);
  mpz_class den = value.get_den() % mpz_class(p_);
  if (num < 0) num += p_;
  if (den == 0) throw Error("denominator vanishes in " + name());
  Scalar n(*this, static_cast<std::uint64_t>(num.get_ui()));
  Scalar d(*this, static_cast<std::uint64_t>(den.get_ui()));
  return n / d;
}

Scalar FieldSpec::element(std::uint64_t index) const {
  if (!is_finite()) throw Error("element(index) requires a finite field");
  if (index >= order_) throw Error("field element index out of range");
  return Scalar(*this, index);
}

Scalar FieldSpec::generator() const {
  if (kind_ != FieldKind::Extension) throw Error("generator t only exists in extension fields");
  return Scalar(*this, p_);
}

std::uint64_t FieldSpec::add_code(std::uint64_t a, std::uint64_t b) const {
  if (kind_ == FieldKind::Prime) {
    const std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint64_t r = 0, place = 1;
  for (unsigned i = 0; i < k_; ++i) {
    r += ((a % p_ + b % p_) % p_) * place;
    a /= p_;
    b /= p_;
    place *= p_;
  }
  return r;
}

std::uint64_t FieldSpec::neg_code(std::uint64_t a) const {
  if (kind_ == FieldKind::Prime) return a == 0 ? 0 : p_ - a;
  std::uint64_t r = 0, place = 1;
  for (unsigned i = 0; i < k_; ++i) {
    r += ((p_ - a % p_) % p_) * place;
    a /= p_;
    place *= p_;
  }
  return r;
}

std::uint64_t FieldSpec::mul_code(std::uint64_t a, std::uint64_t b) const {
  if (kind_ == FieldKind::Prime) return mulmod(a, b, p_);
  Poly pa(k_), pb(k_);
  for (unsigned i = 0; i < k_; ++i) {
    pa[i] = a % p_;
    a /= p_;
    pb[i] = b % p_;
    b /= p_;
  }
  Poly prod(2 * k_, 0);
  for (unsigned i = 0; i < k_; ++i) {
    if (pa[i] == 0) continue;
    for (unsigned j = 0; j < k_; ++j) {
      prod[i + j] = (prod[i + j] + mulmod(pa[i], pb[j], p_)) % p_;
    }
  }
  Poly rem = poly_mod(std::move(prod), modulus_, p_);
  std::uint64_t r = 0, place = 1;
  for (std::size_t i = 0; i < rem.size(); ++i) {
    r += rem[i] * place;
    place *= p_;
  }
  return r;
}

std::uint64_t FieldSpec::inv_code(std::uint64_t a) const {
  if (a == 0) throw Error("division by zero in " + name());
  if (kind_ == FieldKind::Prime) return powmod(a, p_ - 2, p_);
  // a^(q-2) by square and multiply.
  std::uint64_t e = order_ - 2, r = 1, base = a;
  while (e) {
    if (e & 1) r = mul_code(r, base);
    base = mul_code(base, base);
    e >>= 1;
  }
  return r;
}

namespace {

Scalar parse_integer_like(const FieldSpec& f, std::string_view s) {
  const std::string t = trim_copy(s);
  if (t.empty()) throw Error("empty scalar literal");
  bool neg = false;
  std::size_t pos = 0;
  if (t[0] == '-' || t[0] == '+') {
    neg = t[0] == '-';
    pos = 1;
  }
  const std::string body = trim_copy(std::string_view(t).substr(pos));
  if (f.kind() == FieldKind::Rationals) {
    mpq_class q;
    const auto slash = body.find('/');
    auto digits = [](const std::string& x) {
      return !x.empty() && x.find_first_not_of("0123456789") == std::string::npos;
    };
    if (slash == std::string::npos) {
      if (!digits(body)) throw Error("bad rational literal '" + t + "'");
      q = mpq_class(mpz_class(body));
    } else {
      const std::string n = trim_copy(std::string_view(body).substr(0, slash));
      const std::string d = trim_copy(std::string_view(body).substr(slash + 1));
      if (!digits(n) || !digits(d) || mpz_class(d) == 0) throw Error("bad rational literal '" + t + "'");
      q = mpq_class(mpz_class(n), mpz_class(d));
      q.canonicalize();
    }
    if (neg) q = -q;
    return f.rational(q);
  }
  std::uint64_t v = 0;
  if (!parse_uint(body, v)) throw Error("bad " + f.name() + " literal '" + t + "'");
  Scalar r = f.from_int(static_cast<long long>(v % f.characteristic()));
  return neg ? -r : r;
}

}  // namespace

Scalar FieldSpec::parse_scalar(std::string_view text) const {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw Error("empty scalar literal");
  if (kind_ != FieldKind::Extension) {
    if (s.find('t') != std::string::npos) throw Error("'t' only exists in extension fields: '" + s + "'");
    return parse_integer_like(*this, s);
  }
  // Sum of terms c*t^e, c*t, t^e, t, c with optional signs.
  Scalar total = zero();
  std::size_t i = 0;
  bool first = true;
  while (i < s.size()) {
    bool neg = false;
    if (s[i] == '+' || s[i] == '-') {
      neg = s[i] == '-';
      ++i;
    } else if (!first) {
      throw Error("bad " + name() + " literal '" + s + "'");
    }
    first = false;
    std::size_t j = i;
    while (j < s.size() && s[j] != '+' && s[j] != '-') ++j;
    std::string term = s.substr(i, j - i);
    i = j;
    if (term.empty()) throw Error("bad " + name() + " literal '" + s + "'");
    Scalar coef = one();
    std::string mono = term;
    const auto tpos = term.find('t');
    if (tpos == std::string::npos) {
      coef = parse_integer_like(*this, term);
      mono.clear();
    } else {
      std::string c = term.substr(0, tpos);
      if (!c.empty() && c.back() == '*') c.pop_back();
      if (!c.empty()) coef = parse_integer_like(*this, c);
      mono = term.substr(tpos);
    }
    Scalar value = coef;
    if (!mono.empty()) {
      std::uint64_t e = 1;
      if (mono.size() > 1) {
        if (mono[1] != '^' || !parse_uint(std::string_view(mono).substr(2), e)) {
          throw Error("bad " + name() + " literal '" + s + "'");
        }
      }
      value = coef * generator().pow(e);
    }
    total += neg ? -value : value;
  }
  return total;
}

Scalar::Scalar(const FieldSpec& field, std::uint64_t code) : field_(&field), value_(code) {
  if (!field.is_finite()) {
    value_ = mpq_class(mpz_class(std::to_string(code)));
  } else if (code >= *field.order()) {
    throw Error("field code out of range");
  }
}

Scalar::Scalar(const FieldSpec& field, mpq_class value) : field_(&field), value_(std::uint64_t{0}) {
  if (field.is_finite()) {
    *this = field.rational(value);
    return;
  }
  value.canonicalize();
  value_ = std::move(value);
}

void Scalar::require_same_field(const Scalar& o) const {
  if (field_ != o.field_) throw FieldMismatch("cross-field arithmetic: " + field_->name() + " vs " + o.field_->name());
}

bool Scalar::is_zero() const {
  if (auto c = std::get_if<std::uint64_t>(&value_)) return *c == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Scalar::is_one() const {
  if (auto c = std::get_if<std::uint64_t>(&value_)) return *c == 1;
  return std::get<mpq_class>(value_) == 1;
}

Scalar Scalar::operator+(const Scalar& o) const {
  require_same_field(o);
  if (field_->is_finite()) {
    return Scalar(*field_, field_->add_code(std::get<std::uint64_t>(value_), std::get<std::uint64_t>(o.value_)));
  }
  return Scalar(*field_, mpq_class(std::get<mpq_class>(value_) + std::get<mpq_class>(o.value_)));
}

Scalar Scalar::operator-() const {
  if (field_->is_finite()) return Scalar(*field_, field_->neg_code(std::get<std::uint64_t>(value_)));
  return Scalar(*field_, mpq_class(-std::get<mpq_class>(value_)));
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  require_same_field(o);
  if (field_->is_finite()) {
    return Scalar(*field_, field_->mul_code(std::get<std::uint64_t>(value_), std::get<std::uint64_t>(o.value_)));
  }
  return Scalar(*field_, mpq_class(std::get<mpq_class>(value_) * std::get<mpq_class>(o.value_)));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error("inverse of zero");
  if (field_->is_finite()) return Scalar(*field_, field_->inv_code(std::get<std::uint64_t>(value_)));
  return Scalar(*field_, mpq_class(1 / std::get<mpq_class>(value_)));
}

Scalar Scalar::operator/(const Scalar& o) const {
  require_same_field(o);
  return *this * o.inverse();
}

Scalar Scalar::pow(std::uint64_t e) const {
  Scalar r = field_->one(), base = *this;
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

bool Scalar::operator==(const Scalar& o) const {
  return field_ == o.field_ && value_ == o.value_;
}

std::uint64_t Scalar::index() const {
  if (!field_->is_finite()) throw Error("index() requires a finite field");
  return std::get<std::uint64_t>(value_);
}

std::vector<std::uint64_t> Scalar::coefficients() const {
  std::uint64_t c = index();
  std::vector<std::uint64_t> out(field_->degree());
  for (auto& x : out) {
    x = c % field_->characteristic();
    c /= field_->characteristic();
  }
  return out;
}

const mpq_class& Scalar::rational() const {
  if (field_->is_finite()) throw Error("rational() requires Q");
  return std::get<mpq_class>(value_);
}

std::string Scalar::to_string() const {
  switch (field_->kind()) {
    case FieldKind::Rationals:
      return std::get<mpq_class>(value_).get_str();
    case FieldKind::Prime:
      return std::to_string(std::get<std::uint64_t>(value_));
    case FieldKind::Extension: {
      const auto coeffs = coefficients();
      std::ostringstream os;
      bool any = false;
      for (std::size_t i = coeffs.size(); i-- > 0;) {
        if (coeffs[i] == 0) continue;
        if (any) os << '+';
        any = true;
        if (i == 0) {
          os << coeffs[i];
          continue;
        }
        if (coeffs[i] != 1) os << coeffs[i] << '*';
        os << 't';
        if (i > 1) os << '^' << i;
      }
      return any ? os.str() : "0";
    }
  }
  return "?";
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace uniso
