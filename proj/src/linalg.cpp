#include "gsp4/linalg.hpp"

#include <sstream>
#include <stdexcept>

namespace gsp4 {

namespace {

std::int64_t reduce(std::int64_t x, std::int64_t m) {
  std::int64_t r = x % m;
  return r < 0 ? r + m : r;
}

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t m) {
  return static_cast<std::int64_t>(static_cast<__int128>(a) * b % m);
}

std::int64_t inv_mod(std::int64_t a, std::int64_t m) {
  std::int64_t g0 = m, g1 = reduce(a, m), x0 = 0, x1 = 1;
  while (g1 != 0) {
    const std::int64_t q = g0 / g1;
    std::int64_t t = g0 - q * g1;
    g0 = g1;
    g1 = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
  }
  if (g0 != 1) throw std::domain_error("inverse of a non-unit");
  return reduce(x0, m);
}

void check_same_shape(const Matrix& a, const Matrix& b) {
  if (a.modulus() != b.modulus() || a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("Matrix: shape or modulus mismatch");
}

// Row echelon form in place; returns pivot columns.
std::vector<std::size_t> echelon(Matrix& m) {
  const auto p = m.modulus();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, c) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < m.cols(); ++j) {
        const auto t = m(r, j);
        m.set(r, j, m(piv, j));
        m.set(piv, j, t);
      }
    const auto inv = inv_mod(m(r, c), p);
    for (std::size_t j = 0; j < m.cols(); ++j) m.set(r, j, mulmod(m(r, j), inv, p));
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      const auto f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m.set(i, j, m(i, j) - mulmod(f, m(r, j), p));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Matrix::Matrix(std::int64_t modulus, std::size_t rows, std::size_t cols)
    : mod_(modulus), rows_(rows), cols_(cols), a_(rows * cols, 0) {
  if (modulus < 2) throw std::invalid_argument("Matrix: modulus must be >= 2");
}

Matrix::Matrix(std::int64_t modulus, std::size_t rows, std::size_t cols,
               const std::vector<std::int64_t>& entries)
    : Matrix(modulus, rows, cols) {
  if (entries.size() != rows * cols) throw std::invalid_argument("Matrix: wrong number of entries");
  for (std::size_t i = 0; i < entries.size(); ++i) a_[i] = reduce(entries[i], mod_);
}

Matrix Matrix::identity(std::int64_t modulus, std::size_t n) {
  Matrix m(modulus, n, n);
  for (std::size_t i = 0; i < n; ++i) m.a_[i * n + i] = 1;
  return m;
}

void Matrix::set(std::size_t i, std::size_t j, std::int64_t v) { a_[i * cols_ + j] = reduce(v, mod_); }

std::vector<std::int64_t> Matrix::column(std::size_t j) const {
  std::vector<std::int64_t> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

std::vector<std::int64_t> Matrix::row(std::size_t i) const {
  return {a_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
          a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

bool Matrix::is_zero() const {
  for (auto x : a_)
    if (x != 0) return false;
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(mod_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.a_[j * rows_ + i] = (*this)(i, j);
  return t;
}

Matrix Matrix::columns(std::size_t first, std::size_t count) const {
  if (first + count > cols_) throw std::out_of_range("Matrix::columns");
  Matrix out(mod_, rows_, count);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < count; ++j) out.a_[i * count + j] = (*this)(i, first + j);
  return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
  check_same_shape(*this, o);
  Matrix r = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = reduce(a_[i] + o.a_[i], mod_);
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  check_same_shape(*this, o);
  Matrix r = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = reduce(a_[i] - o.a_[i], mod_);
  return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (mod_ != o.mod_ || cols_ != o.rows_) throw std::invalid_argument("Matrix: product shape mismatch");
  Matrix r(mod_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const auto x = (*this)(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        r.a_[i * o.cols_ + j] = (r.a_[i * o.cols_ + j] + mulmod(x, o(k, j), mod_)) % mod_;
    }
  return r;
}

Matrix Matrix::scaled(std::int64_t s) const {
  Matrix r = *this;
  s = reduce(s, mod_);
  for (auto& x : r.a_) x = mulmod(x, s, mod_);
  return r;
}

Matrix Matrix::pow(std::uint64_t e) const {
  if (!is_square()) throw std::invalid_argument("Matrix::pow: not square");
  Matrix result = identity(mod_, rows_), base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

bool Matrix::operator==(const Matrix& o) const {
  return mod_ == o.mod_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j);
    os << "]";
  }
  os << "]";
  return os.str();
}

Matrix hconcat(const Matrix& a, const Matrix& b) {
  if (a.modulus() != b.modulus() || a.rows() != b.rows())
    throw std::invalid_argument("hconcat: shape mismatch");
  Matrix out(a.modulus(), a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out.set(i, j, a(i, j));
    for (std::size_t j = 0; j < b.cols(); ++j) out.set(i, a.cols() + j, b(i, j));
  }
  return out;
}

Matrix column_vector(std::int64_t modulus, const std::vector<std::int64_t>& v) {
  return Matrix(modulus, v.size(), 1, v);
}

std::size_t rank(const Matrix& a) {
  Matrix m = a;
  return echelon(m).size();
}

Matrix kernel(const Matrix& a) {
  Matrix m = a;
  const auto pivots = echelon(m);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < a.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Matrix k(a.modulus(), a.cols(), free_cols.size());
  for (std::size_t f = 0; f < free_cols.size(); ++f) {
    k.set(free_cols[f], f, 1);
    for (std::size_t r = 0; r < pivots.size(); ++r) k.set(pivots[r], f, -m(r, free_cols[f]));
  }
  return k;
}

Matrix column_basis(const Matrix& a) {
  Matrix m = a;
  const auto pivots = echelon(m);
  Matrix out(a.modulus(), a.rows(), pivots.size());
  for (std::size_t j = 0; j < pivots.size(); ++j)
    for (std::size_t i = 0; i < a.rows(); ++i) out.set(i, j, a(i, pivots[j]));
  return out;
}

Matrix complement_basis(const Matrix& a) {
  const Matrix ext = hconcat(a, Matrix::identity(a.modulus(), a.rows()));
  Matrix m = ext;
  const auto pivots = echelon(m);
  std::vector<std::size_t> extra;
  for (auto c : pivots)
    if (c >= a.cols()) extra.push_back(c - a.cols());
  Matrix out(a.modulus(), a.rows(), extra.size());
  for (std::size_t j = 0; j < extra.size(); ++j) out.set(extra[j], j, 1);
  return out;
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve: shape mismatch");
  Matrix m = hconcat(a, b);
  const auto pivots = echelon(m);
  for (auto c : pivots)
    if (c >= a.cols()) return std::nullopt;
  Matrix x(a.modulus(), a.cols(), b.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r)
    for (std::size_t j = 0; j < b.cols(); ++j) x.set(pivots[r], j, m(r, a.cols() + j));
  return x;
}

bool in_span(const Matrix& a, const Matrix& b) { return solve(a, b).has_value(); }

}  // namespace gsp4
