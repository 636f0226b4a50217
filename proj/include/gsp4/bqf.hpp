#pragma once

// Integral binary quadratic forms Q = m x^2 + r x y + n y^2, stored as the
// half-integral matrix [[m, r/2], [r/2, n]], together with the GL2 action
// M.Q = (det M)^-1 M Q M^T and the degree-p neighbour structure.

#include <array>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace gsp4 {

struct BQF {
  std::int64_t m = 0;
  std::int64_t r = 0;
  std::int64_t n = 0;

  /// r^2 - 4mn.
  std::int64_t discriminant() const { return r * r - 4 * m * n; }
  bool is_positive_semidefinite() const { return m >= 0 && n >= 0 && 4 * m * n >= r * r; }
  bool is_positive_definite() const { return m > 0 && 4 * m * n > r * r; }
  bool divisible_by(std::int64_t d) const { return m % d == 0 && r % d == 0 && n % d == 0; }
  std::int64_t evaluate(std::int64_t x, std::int64_t y) const { return m * x * x + r * x * y + n * y * y; }

  BQF scaled(std::int64_t c) const { return {c * m, c * r, c * n}; }

  auto operator<=>(const BQF&) const = default;
};

std::ostream& operator<<(std::ostream& os, const BQF& q);
std::string to_string(const BQF& q);

/// Integer 2x2 matrix [[a, b], [c, d]] with nonzero determinant.
class GL2Mat {
 public:
  GL2Mat(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);
  static GL2Mat identity() { return {1, 0, 0, 1}; }

  std::int64_t a() const { return a_; }
  std::int64_t b() const { return b_; }
  std::int64_t c() const { return c_; }
  std::int64_t d() const { return d_; }
  std::int64_t det() const { return det_; }

  /// det * inverse, i.e. [[d, -b], [-c, a]].
  GL2Mat adjugate() const { return {d_, -b_, -c_, a_}; }
  GL2Mat transpose() const { return {a_, c_, b_, d_}; }
  /// Exact inverse; requires det = +-1.
  GL2Mat inverse_unimodular() const;

  friend GL2Mat operator*(const GL2Mat& x, const GL2Mat& y);
  bool operator==(const GL2Mat& o) const {
    return a_ == o.a_ && b_ == o.b_ && c_ == o.c_ && d_ == o.d_;
  }

  std::array<std::int64_t, 4> entries() const { return {a_, b_, c_, d_}; }

 private:
  std::int64_t a_, b_, c_, d_, det_;
};

std::ostream& operator<<(std::ostream& os, const GL2Mat& g);

/// M Q M^T without the determinant normalisation.
BQF congruence(const GL2Mat& mat, const BQF& q);

/// M.Q = (det M)^-1 M Q M^T, or nullopt when the result is not integral.
std::optional<BQF> act(const GL2Mat& mat, const BQF& q);

/// p+1 integer matrices of determinant p, one per coset M * SL2(Z) in
/// SL2(Z) diag(p,1) SL2(Z): [[1,0],[a,p]] for a in a residue system mod p
/// (symmetric around 0 for odd p, {0, 1} for p = 2), then [[p,0],[0,1]].
std::vector<GL2Mat> coset_reps(std::int64_t p);

/// The projective point of P^1(F_p) attached to a coset representative:
/// M.^{-1}Q is integral exactly when Q vanishes there.
struct ProjPoint {
  std::int64_t x = 0;
  std::int64_t y = 1;
  auto operator<=>(const ProjPoint&) const = default;
};
ProjPoint coset_point(const GL2Mat& rep, std::int64_t p);

/// Marker for a form divisible by p.
struct PDivisible {
  bool operator==(const PDivisible&) const = default;
};

struct FormClassification {
  std::int64_t discriminant = 0;
  bool p_primitive = true;
  /// Legendre symbol of the discriminant, or PDivisible when p | Q.
  std::variant<int, PDivisible> legendre_class;

  /// -1, 0, +1 or nullopt for p-divisible forms.
  std::optional<int> legendre() const;
};

FormClassification classify_form(const BQF& q, std::int64_t p);

/// Zeros of Q in P^1(F_p), ordered [x:1] by x, then [1:0].
std::vector<ProjPoint> zeros_in_P1(const BQF& q, std::int64_t p);

struct Neighbor {
  BQF form;    // P with M.P = Q
  GL2Mat mat;  // M, a coset representative
};

/// The multiset F(Q): one entry per coset representative M with M^{-1}.Q
/// integral.
std::vector<Neighbor> neighbors(const BQF& q, std::int64_t p);

struct Reduction {
  BQF reduced;
  GL2Mat transform;  // in SL2(Z), transform.Q = reduced
};

/// Gauss reduction of a positive definite form: |r| <= m <= n, with r >= 0
/// whenever |r| = m or m = n.  Throws std::invalid_argument otherwise.
Reduction reduce_form(const BQF& q);

bool is_reduced(const BQF& q);

/// All reduced positive definite forms of discriminant d < 0 (including
/// imprimitive ones), by direct enumeration.
std::vector<BQF> reduced_forms_of_discriminant(std::int64_t d);

std::int64_t content(const BQF& q);

struct OrbitCycle {
  int length = 0;  // s
  GL2Mat forward;  // A with A Q A^T = p^s Q
  GL2Mat backward; // B, walking the cycle the other way
  std::vector<BQF> classes;  // reduced forms visited, starting at [Q]
};

/// Walks the cycle of [Q] under the neighbour dynamic, with (D/p) = +1.
/// Throws std::invalid_argument on the wrong Legendre class or a form that is
/// not positive definite and p-primitive.
OrbitCycle orbit_cycle(const BQF& q, std::int64_t p);

}  // namespace gsp4
