#pragma once

// Sym^d of the standard rank-2 module with basis f1^(d-i) f2^i at index i,
// the extension of the GL2 action to all integer matrices, and the
// contraction Sym^d (x) Sym^2 -> Sym^(d-2).

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "gsp4/bqf.hpp"
#include "gsp4/padic.hpp"

namespace gsp4 {

class SymVector {
 public:
  /// The zero vector of degree d.
  SymVector(const ScalarCtx& ctx, int d);
  /// Coefficients are reduced mod p^m; the degree is size - 1.
  SymVector(const ScalarCtx& ctx, std::vector<std::int64_t> coeffs);

  /// m f1^2 + r f1 f2 + n f2^2.
  static SymVector from_form(const ScalarCtx& ctx, const BQF& q);
  /// f1^(d-i) f2^i.
  static SymVector basis(const ScalarCtx& ctx, int d, int i);

  const ScalarCtx& ctx() const { return ctx_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  std::int64_t operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
  const std::vector<std::int64_t>& coeffs() const { return c_; }
  bool is_zero() const;

  SymVector& operator+=(const SymVector& o);
  SymVector& operator-=(const SymVector& o);
  friend SymVector operator+(SymVector x, const SymVector& y) { return x += y; }
  friend SymVector operator-(SymVector x, const SymVector& y) { return x -= y; }
  SymVector scaled(std::int64_t s) const;
  /// Throws IntegralityError for negative valuation.
  SymVector scaled(const PValuedScalar& s) const;
  /// Reduce to a smaller exponent of the same prime.
  SymVector reduced_to(const ScalarCtx& smaller) const;

  bool operator==(const SymVector& o) const { return ctx_ == o.ctx_ && c_ == o.c_; }

  std::string to_string() const;

 private:
  ScalarCtx ctx_;
  std::vector<std::int64_t> c_;
};

std::ostream& operator<<(std::ostream& os, const SymVector& v);

/// Row-major [[a, b], [c, d]], possibly singular (e.g. rank-1 matrices mod p).
using Mat2 = std::array<std::int64_t, 4>;

inline Mat2 to_mat2(const GL2Mat& g) { return g.entries(); }

/// rho(M) on Sym^d: f1 -> a f1 + c f2, f2 -> b f1 + d f2.  This is a
/// homomorphism in M and sends the vector of Q to that of M Q M^T.
SymVector rho_apply(const Mat2& mat, const SymVector& v);
inline SymVector rho_apply(const GL2Mat& mat, const SymVector& v) {
  return rho_apply(to_mat2(mat), v);
}

/// The (d+1)x(d+1) matrix of rho(M), column i the image of basis vector i.
std::vector<std::vector<std::int64_t>> rho_matrix(const Mat2& mat, int d, const ScalarCtx& ctx);

/// Q^vee = m e1^2 + r e1 e2 + n e2^2.
struct DualQuadric {
  std::int64_t m = 0;
  std::int64_t r = 0;
  std::int64_t n = 0;
  static DualQuadric of(const BQF& q) { return {q.m, q.r, q.n}; }
};

/// Integer tensor of con on degree d: for basis index i and dual slot
/// s in {0: e1^2, 1: e1 e2, 2: e2^2}, con sends f1^(d-i) f2^i (x) slot s to
/// coeff[i][s] times basis vector target(i, s) of degree d-2.
class ContractionTensor {
 public:
  explicit ContractionTensor(int d);

  int degree() const { return d_; }
  std::int64_t coeff(int i, int slot) const { return coeff_[static_cast<std::size_t>(i)][static_cast<std::size_t>(slot)]; }
  /// Output index; only meaningful when coeff(i, slot) != 0.
  int target(int i, int slot) const { return i - 2 + slot; }

  /// Monomial pairs with nonzero contraction, as (power of f1, power of e1).
  std::vector<std::pair<int, int>> support() const;

 private:
  int d_;
  std::vector<std::array<std::int64_t, 3>> coeff_;
};

/// con(v (x) Q^vee) = -(m d^2/df2^2 - r d^2/df1 df2 + n d^2/df1^2) v.
/// Requires degree >= 2 and p > degree.
SymVector contract(const SymVector& v, const DualQuadric& qd);

}  // namespace gsp4
