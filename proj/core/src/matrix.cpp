#include "uniso/matrix.hpp"

#include <ostream>
#include <sstream>
#include <utility>

namespace uniso {

Vector zero_vector(const FieldSpec& field, std::size_t n) { return Vector(n, field.zero()); }

bool is_zero(std::span<const Scalar> v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Matrix::Matrix(const FieldSpec& field, std::size_t rows, std::size_t cols)
    : field_(&field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

Matrix::Matrix(const FieldSpec& field, std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : field_(&field), rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) throw DimensionMismatch("matrix entry count does not match shape");
  for (const auto& x : data_) {
    if (&x.field() != field_) throw FieldMismatch("matrix entry from another field");
  }
}

Matrix Matrix::identity(const FieldSpec& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = field.one();
  return m;
}

Matrix Matrix::from_rows(const FieldSpec& field, std::size_t cols, const std::vector<Vector>& rows) {
  Matrix m(field, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw DimensionMismatch("row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

Matrix Matrix::from_columns(const FieldSpec& field, std::size_t rows, const std::vector<Vector>& cols) {
  Matrix m(field, rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw DimensionMismatch("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m.set(i, j, cols[j][i]);
  }
  return m;
}

Matrix Matrix::from_ints(const FieldSpec& field, std::size_t rows, std::size_t cols,
                         std::initializer_list<long long> entries) {
  if (entries.size() != rows * cols) throw DimensionMismatch("matrix entry count does not match shape");
  std::vector<Scalar> data;
  data.reserve(entries.size());
  for (long long e : entries) data.push_back(field.from_int(e));
  return Matrix(field, rows, cols, std::move(data));
}

void Matrix::set(std::size_t r, std::size_t c, Scalar value) {
  if (&value.field() != field_) throw FieldMismatch("matrix entry from another field");
  data_[r * cols_ + c] = std::move(value);
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, c));
  return v;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (field_ != o.field_) throw FieldMismatch("matrix product across fields");
  if (cols_ != o.rows_) throw DimensionMismatch("matrix product shape mismatch");
  Matrix out(*field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Scalar& b = o(k, j);
        if (b.is_zero()) continue;
        out.data_[i * o.cols_ + j] += a * b;
      }
    }
  }
  return out;
}

Vector Matrix::operator*(std::span<const Scalar> v) const {
  if (v.size() != cols_) throw DimensionMismatch("matrix-vector shape mismatch");
  Vector out = zero_vector(*field_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      const Scalar& a = (*this)(i, j);
      if (a.is_zero() || v[j].is_zero()) continue;
      out[i] += a * v[j];
    }
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (field_ != o.field_) throw FieldMismatch("matrix sum across fields");
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sum shape mismatch");
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += o.data_[i];
  return out;
}

Matrix Matrix::operator-(const Matrix& o) const { return *this + o.scaled(-field_->one()); }

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix out = *this;
  for (auto& x : out.data_) x *= s;
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(*field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out.data_[j * rows_ + i] = (*this)(i, j);
  }
  return out;
}

bool Matrix::is_zero() const { return uniso::is_zero(data_); }

bool Matrix::operator==(const Matrix& o) const {
  return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

Matrix Matrix::stack_below(const Matrix& o) const {
  if (field_ != o.field_) throw FieldMismatch("stacking across fields");
  if (cols_ != o.cols_) throw DimensionMismatch("stacking matrices with different column counts");
  std::vector<Scalar> data = data_;
  data.insert(data.end(), o.data_.begin(), o.data_.end());
  return Matrix(*field_, rows_ + o.rows_, cols_, std::move(data));
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << "; ";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ' ';
      os << (*this)(i, j).to_string();
    }
  }
  os << ']';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) { return os << m.to_string(); }

RrefResult rref(const Matrix& m) {
  Matrix a = m;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = r;
    while (sel < rows && a(sel, c).is_zero()) ++sel;
    if (sel == rows) continue;
    if (sel != r) {
      for (std::size_t j = 0; j < cols; ++j) {
        Scalar tmp = a(r, j);
        a.set(r, j, a(sel, j));
        a.set(sel, j, std::move(tmp));
      }
    }
    const Scalar inv = a(r, c).inverse();
    for (std::size_t j = c; j < cols; ++j) a.set(r, j, a(r, j) * inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      const Scalar factor = a(i, c);
      for (std::size_t j = c; j < cols; ++j) {
        if (a(r, j).is_zero()) continue;
        a.set(i, j, a(i, j) - factor * a(r, j));
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return RrefResult{std::move(a), r, std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

bool is_invertible(const Matrix& m) { return m.is_square() && rank(m) == m.rows(); }

Matrix inverse(const Matrix& m) {
  if (!m.is_square()) throw DimensionMismatch("inverse of non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(m.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.set(i, j, m(i, j));
    aug.set(i, n + i, m.field().one());
  }
  RrefResult r = rref(aug);
  if (r.rank < n || (n > 0 && r.pivot_columns[n - 1] != n - 1)) throw Error("matrix is singular");
  Matrix out(m.field(), n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out.set(i, j, r.form(i, n + j));
  }
  return out;
}

namespace {

Matrix first_rows(const Matrix& m, std::size_t count) {
  std::vector<Scalar> data(m.entries().begin(), m.entries().begin() + static_cast<std::ptrdiff_t>(count * m.cols()));
  return Matrix(m.field(), count, m.cols(), std::move(data));
}

}  // namespace

Subspace::Subspace(const FieldSpec& field, std::size_t ambient) : basis_(field, 0, ambient) {}

Subspace::Subspace(RrefResult r) : basis_(first_rows(r.form, r.rank)), pivots_(std::move(r.pivot_columns)) {}

Subspace Subspace::full(const FieldSpec& field, std::size_t ambient) {
  return Subspace(rref(Matrix::identity(field, ambient)));
}

Subspace Subspace::span(const FieldSpec& field, std::size_t ambient, const std::vector<Vector>& vectors) {
  return Subspace(rref(Matrix::from_rows(field, ambient, vectors)));
}

Subspace Subspace::row_space(const Matrix& m) { return Subspace(rref(m)); }

Subspace Subspace::column_space(const Matrix& m) { return Subspace(rref(m.transpose())); }

std::vector<Vector> Subspace::basis_vectors() const {
  std::vector<Vector> out;
  out.reserve(dim());
  for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_.row(i));
  return out;
}

void Subspace::require_compatible(const Subspace& o) const {
  if (&field() != &o.field()) throw FieldMismatch("subspaces over different fields");
  if (ambient_dim() != o.ambient_dim()) throw DimensionMismatch("subspaces with different ambient dimensions");
}

Vector Subspace::reduce(std::span<const Scalar> v) const {
  if (v.size() != ambient_dim()) throw DimensionMismatch("vector length does not match ambient dimension");
  Vector out(v.begin(), v.end());
  for (std::size_t i = 0; i < dim(); ++i) {
    const Scalar c = out[pivots_[i]];
    if (c.is_zero()) continue;
    for (std::size_t j = pivots_[i]; j < ambient_dim(); ++j) {
      if (!basis_(i, j).is_zero()) out[j] -= c * basis_(i, j);
    }
  }
  return out;
}

bool Subspace::contains(std::span<const Scalar> v) const { return uniso::is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& o) const {
  require_compatible(o);
  for (std::size_t i = 0; i < o.dim(); ++i) {
    if (!contains(o.basis_vector(i))) return false;
  }
  return true;
}

Vector Subspace::coordinates(std::span<const Scalar> v) const {
  if (!contains(v)) throw Error("vector does not lie in the subspace");
  Vector out;
  out.reserve(dim());
  for (std::size_t i = 0; i < dim(); ++i) out.push_back(v[pivots_[i]]);
  return out;
}

std::vector<std::size_t> Subspace::non_pivots() const {
  std::vector<std::size_t> out;
  std::size_t k = 0;
  for (std::size_t j = 0; j < ambient_dim(); ++j) {
    if (k < pivots_.size() && pivots_[k] == j) {
      ++k;
      continue;
    }
    out.push_back(j);
  }
  return out;
}

Subspace Subspace::operator+(const Subspace& o) const {
  require_compatible(o);
  return Subspace(rref(basis_.stack_below(o.basis_)));
}

Subspace Subspace::intersect(const Subspace& o) const {
  require_compatible(o);
  // Solve x^T A = y^T B: kernel of [A^T | -B^T], then map back through A^T.
  const std::size_t n = ambient_dim(), da = dim(), db = o.dim();
  Matrix system(field(), n, da + db);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < da; ++j) system.set(i, j, basis_(j, i));
    for (std::size_t j = 0; j < db; ++j) system.set(i, da + j, -o.basis_(j, i));
  }
  const Subspace ker = kernel_basis(system);
  std::vector<Vector> vectors;
  for (std::size_t k = 0; k < ker.dim(); ++k) {
    Vector v = zero_vector(field(), n);
    for (std::size_t j = 0; j < da; ++j) {
      const Scalar& c = ker.basis()(k, j);
      if (c.is_zero()) continue;
      for (std::size_t i = 0; i < n; ++i) v[i] += c * basis_(j, i);
    }
    vectors.push_back(std::move(v));
  }
  return span(field(), n, vectors);
}

bool Subspace::operator==(const Subspace& o) const { return basis_ == o.basis_; }

Subspace kernel_basis(const Matrix& m) {
  const RrefResult r = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : r.pivot_columns) is_pivot[c] = true;
  std::vector<Vector> vectors;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vector v = zero_vector(m.field(), n);
    v[free] = m.field().one();
    for (std::size_t i = 0; i < r.rank; ++i) v[r.pivot_columns[i]] = -r.form(i, free);
    vectors.push_back(std::move(v));
  }
  return Subspace::span(m.field(), n, vectors);
}

SubspaceRelations subspace_ops(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("subspaces with different ambient dimensions");
  Subspace sum = a + b;
  Subspace inter = a.intersect(b);
  const bool contains = a.contains(b);
  return SubspaceRelations{std::move(sum), std::move(inter), contains, a == b};
}

void for_each_vector(const FieldSpec& field, std::size_t n, const std::function<bool(const Vector&)>& visit) {
  if (!field.is_finite()) throw Error("vector enumeration requires a finite field");
  const std::uint64_t q = *field.order();
  std::vector<std::uint64_t> idx(n, 0);
  Vector v = zero_vector(field, n);
  while (true) {
    if (!visit(v)) return;
    std::size_t pos = n;
    while (pos > 0) {
      --pos;
      if (++idx[pos] < q) {
        v[pos] = field.element(idx[pos]);
        break;
      }
      idx[pos] = 0;
      v[pos] = field.zero();
      if (pos == 0) return;
    }
    if (n == 0) return;
  }
}

void for_each_subspace(const FieldSpec& field, std::size_t ambient, std::size_t cap,
                       const std::function<bool(const Subspace&)>& visit) {
  if (!field.is_finite()) throw Error("subspace enumeration requires a finite field");
  std::size_t produced = 0;
  bool stop = false;
  // Enumerate RREF matrices by pivot set, then by free entries.
  for (std::size_t rank = 0; rank <= ambient && !stop; ++rank) {
    std::vector<std::size_t> pivots(rank);
    for (std::size_t i = 0; i < rank; ++i) pivots[i] = i;
    while (!stop) {
      std::vector<std::pair<std::size_t, std::size_t>> free_cells;
      for (std::size_t i = 0; i < rank; ++i) {
        std::size_t next_pivot = 0;
        for (std::size_t j = pivots[i] + 1; j < ambient; ++j) {
          while (next_pivot < rank && pivots[next_pivot] < j) ++next_pivot;
          if (next_pivot < rank && pivots[next_pivot] == j) continue;
          free_cells.emplace_back(i, j);
        }
      }
      for_each_vector(field, free_cells.size(), [&](const Vector& values) {
        if (++produced > cap) throw CapExceeded("subspace enumeration exceeds cap of " + std::to_string(cap));
        Matrix m(field, rank, ambient);
        for (std::size_t i = 0; i < rank; ++i) m.set(i, pivots[i], field.one());
        for (std::size_t c = 0; c < free_cells.size(); ++c) m.set(free_cells[c].first, free_cells[c].second, values[c]);
        if (!visit(Subspace::row_space(m))) {
          stop = true;
          return false;
        }
        return true;
      });
      // Next combination of pivot columns.
      std::size_t i = rank;
      while (i > 0 && pivots[i - 1] == ambient - rank + (i - 1)) --i;
      if (i == 0) break;
      ++pivots[i - 1];
      for (std::size_t j = i; j < rank; ++j) pivots[j] = pivots[j - 1] + 1;
    }
  }
}

}  // namespace uniso
