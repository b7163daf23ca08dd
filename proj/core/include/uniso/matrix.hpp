#pragma once

// Dense exact matrices, reduced row-echelon form, kernels and subspaces.

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "uniso/field.hpp"

namespace uniso {

using Vector = std::vector<Scalar>;

Vector zero_vector(const FieldSpec& field, std::size_t n);
bool is_zero(std::span<const Scalar> v);

class Matrix {
 public:
  Matrix(const FieldSpec& field, std::size_t rows, std::size_t cols);
  /// Row-major entries; entries.size() must equal rows * cols.
  Matrix(const FieldSpec& field, std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

  static Matrix identity(const FieldSpec& field, std::size_t n);
  static Matrix from_rows(const FieldSpec& field, std::size_t cols, const std::vector<Vector>& rows);
  static Matrix from_columns(const FieldSpec& field, std::size_t rows, const std::vector<Vector>& cols);
  /// Convenience for tests and gallery data: integer entries mapped into the field.
  static Matrix from_ints(const FieldSpec& field, std::size_t rows, std::size_t cols,
                          std::initializer_list<long long> entries);

  const FieldSpec& field() const { return *field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, Scalar value);

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  const std::vector<Scalar>& entries() const { return data_; }

  Matrix operator*(const Matrix& o) const;
  Vector operator*(std::span<const Scalar> v) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Scalar& s) const;
  Matrix transpose() const;

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  /// Rows of *this followed by rows of o.
  Matrix stack_below(const Matrix& o) const;

  /// "[1 0; 0 1]", "[]" for empty shapes.
  std::string to_string() const;

 private:
  const FieldSpec* field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

std::ostream& operator<<(std::ostream& os, const Matrix& m);

struct RrefResult {
  Matrix form;
  std::size_t rank;
  std::vector<std::size_t> pivot_columns;
};

/// Unique reduced row-echelon form (zero rows kept at the bottom).
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);
bool is_invertible(const Matrix& m);
/// Throws Error when singular or non-square.
Matrix inverse(const Matrix& m);

/// A linear subspace of field^ambient stored by its canonical RREF basis.
class Subspace {
 public:
  /// The zero subspace.
  Subspace(const FieldSpec& field, std::size_t ambient);
  static Subspace full(const FieldSpec& field, std::size_t ambient);
  static Subspace span(const FieldSpec& field, std::size_t ambient, const std::vector<Vector>& vectors);
  /// Row space of m.
  static Subspace row_space(const Matrix& m);
  /// Column space of m (a subspace of field^rows).
  static Subspace column_space(const Matrix& m);

  const FieldSpec& field() const { return basis_.field(); }
  std::size_t ambient_dim() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }

  /// dim() x ambient_dim() matrix in RREF.
  const Matrix& basis() const { return basis_; }
  Vector basis_vector(std::size_t i) const { return basis_.row(i); }
  std::vector<Vector> basis_vectors() const;
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(std::span<const Scalar> v) const;
  bool contains(const Subspace& o) const;

  /// v minus its projection along the pivot coordinates; zero iff v is in the subspace.
  Vector reduce(std::span<const Scalar> v) const;
  /// Coordinates of v (which must lie in the subspace) in basis().
  Vector coordinates(std::span<const Scalar> v) const;
  /// Ambient coordinates that are not pivots: they index a canonical coset basis.
  std::vector<std::size_t> non_pivots() const;

  Subspace operator+(const Subspace& o) const;
  Subspace intersect(const Subspace& o) const;

  bool operator==(const Subspace& o) const;
  bool operator!=(const Subspace& o) const { return !(*this == o); }

 private:
  explicit Subspace(RrefResult r);
  void require_compatible(const Subspace& o) const;

  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Canonical basis of { v : m v = 0 }.
Subspace kernel_basis(const Matrix& m);

struct SubspaceRelations {
  Subspace sum;
  Subspace intersection;
  bool contains;  ///< a contains b
  bool equal;
};

/// Throws DimensionMismatch when ambients differ.
SubspaceRelations subspace_ops(const Subspace& a, const Subspace& b);

/// Calls visit for every subspace of field^ambient (finite fields only) in a
/// fixed order; stops early when visit returns false. Throws CapExceeded if
/// more than cap subspaces would be produced.
void for_each_subspace(const FieldSpec& field, std::size_t ambient, std::size_t cap,
                       const std::function<bool(const Subspace&)>& visit);

/// Calls visit on every vector of field^n (finite fields only), coordinates in
/// lexicographic order with the first coordinate most significant.
void for_each_vector(const FieldSpec& field, std::size_t n, const std::function<bool(const Vector&)>& visit);

}  // namespace uniso
