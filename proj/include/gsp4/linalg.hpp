#pragma once

// Dense matrices over Z/n.  The elimination routines require n prime.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gsp4 {

class Matrix {
 public:
  Matrix(std::int64_t modulus, std::size_t rows, std::size_t cols);
  /// Row-major entries, reduced mod modulus.
  Matrix(std::int64_t modulus, std::size_t rows, std::size_t cols, const std::vector<std::int64_t>& entries);
  static Matrix identity(std::int64_t modulus, std::size_t n);

  std::int64_t modulus() const { return mod_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  std::int64_t operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, std::int64_t v);

  std::vector<std::int64_t> column(std::size_t j) const;
  std::vector<std::int64_t> row(std::size_t i) const;
  const std::vector<std::int64_t>& data() const { return a_; }

  bool is_zero() const;
  Matrix transpose() const;
  /// Columns [first, first + count).
  Matrix columns(std::size_t first, std::size_t count) const;

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix scaled(std::int64_t s) const;
  Matrix pow(std::uint64_t e) const;
  bool operator==(const Matrix& o) const;

  std::string to_string() const;

 private:
  std::int64_t mod_;
  std::size_t rows_, cols_;
  std::vector<std::int64_t> a_;
};

/// [A | B].
Matrix hconcat(const Matrix& a, const Matrix& b);

/// Column vector from entries.
Matrix column_vector(std::int64_t modulus, const std::vector<std::int64_t>& v);

// --- over a prime field ----------------------------------------------------

std::size_t rank(const Matrix& a);

/// Columns form a basis of {x : A x = 0}.
Matrix kernel(const Matrix& a);

/// A maximal linearly independent subset of the columns, as a matrix.
Matrix column_basis(const Matrix& a);

/// Columns of B that extend the column span of A to the whole space, chosen
/// among the standard basis vectors.
Matrix complement_basis(const Matrix& a);

/// Some X with A X = B, if one exists.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

/// Is every column of B in the column span of A?
bool in_span(const Matrix& a, const Matrix& b);

}  // namespace gsp4
