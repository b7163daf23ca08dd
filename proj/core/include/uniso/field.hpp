#pragma once

// Exact fields: the rationals, prime fields GF(p) and extension fields
// GF(p^k) = GF(p)[t]/(m(t)).
//
// FieldSpec values are interned: every distinct field exists exactly once for
// the lifetime of the process, so a `const FieldSpec*` is a stable handle and
// field equality is pointer equality.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "uniso/error.hpp"

namespace uniso {

class Scalar;

enum class FieldKind { Rationals, Prime, Extension };

class FieldSpec {
 public:
  static const FieldSpec& rationals();
  /// Throws Error if p is not prime.
  static const FieldSpec& prime(std::uint64_t p);
  /// GF(p^k). k == 1 returns the prime field. Uses the built-in modulus
  /// table (GF(4): t^2+t+1, GF(8): t^3+t+1, GF(9): t^2+1) and otherwise the
  /// lexicographically smallest monic irreducible of degree k.
  static const FieldSpec& extension(std::uint64_t p, unsigned k);
  /// GF(q) for a prime power q.
  static const FieldSpec& of_order(std::uint64_t q);
  /// Parses "Q", "GF(p)", "GF(p^k)" or "GF(q)".
  static const FieldSpec& parse(std::string_view text);

  FieldSpec(const FieldSpec&) = delete;
  FieldSpec& operator=(const FieldSpec&) = delete;

  FieldKind kind() const { return kind_; }
  bool is_finite() const { return kind_ != FieldKind::Rationals; }
  /// Characteristic (0 for Q).
  std::uint64_t characteristic() const { return p_; }
  unsigned degree() const { return k_; }
  /// Number of elements; nullopt for Q.
  std::optional<std::uint64_t> order() const;
  /// Modulus coefficients, constant term first, monic (size degree()+1).
  /// Empty for Q and prime fields.
  const std::vector<std::uint64_t>& modulus() const { return modulus_; }

  /// "Q", "GF(5)", "GF(2^2)".
  std::string name() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long long value) const;
  Scalar rational(const mpq_class& value) const;
  /// The index-th element in the fixed enumeration order
  /// 0, 1, ..., p-1 for GF(p); for GF(p^k) index = sum c_i p^i, so the
  /// top-degree coefficient is most significant.
  Scalar element(std::uint64_t index) const;
  /// The element t of GF(p^k).
  Scalar generator() const;
  /// Parses a scalar literal: "p/q" or "n" for Q, "n" for GF(p), polynomials
  /// in t such as "t^2+2*t+1" for GF(p^k).
  Scalar parse_scalar(std::string_view text) const;

  // Raw arithmetic on canonical finite-field codes.
  std::uint64_t add_code(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t neg_code(std::uint64_t a) const;
  std::uint64_t mul_code(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t inv_code(std::uint64_t a) const;

 private:
  FieldSpec(FieldKind kind, std::uint64_t p, unsigned k, std::vector<std::uint64_t> modulus);

  friend struct FieldRegistry;

  FieldKind kind_;
  std::uint64_t p_;
  unsigned k_;
  std::uint64_t order_;
  std::vector<std::uint64_t> modulus_;
};

bool is_prime(std::uint64_t n);

/// True iff the monic polynomial (constant term first) is irreducible over GF(p).
bool is_irreducible(const std::vector<std::uint64_t>& poly, std::uint64_t p);

/// An element of a FieldSpec. Representatives are canonical: reduced
/// fractions with positive denominator for Q, residues in [0, q) encoded as
/// sum c_i p^i for finite fields.
class Scalar {
 public:
  Scalar(const FieldSpec& field, std::uint64_t code);
  Scalar(const FieldSpec& field, mpq_class value);

  const FieldSpec& field() const { return *field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  /// Throws Error on zero.
  Scalar inverse() const;
  Scalar pow(std::uint64_t e) const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Finite fields only: position in the fixed enumeration order.
  std::uint64_t index() const;
  /// Finite fields only: coefficients c_0..c_{k-1} over GF(p).
  std::vector<std::uint64_t> coefficients() const;
  /// Q only.
  const mpq_class& rational() const;

  /// Canonical notation: "3", "-1/2", "t^2+t+1".
  std::string to_string() const;

 private:
  void require_same_field(const Scalar& o) const;

  const FieldSpec* field_;
  std::variant<std::uint64_t, mpq_class> value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace uniso
