#pragma once

// Truncated Siegel q-expansions indexed by semi-definite forms Q = (m, r, n)
// with m, n <= B, and the primitive Hecke-type operators acting on them.
//
// Operators are evaluated on demand: a CoefficientSource answers a(F, Q) for
// any Q in its box, and applying an operator wraps a source in another one.
// Only the final result is enumerated over its box.

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gsp4/bqf.hpp"
#include "gsp4/padic.hpp"
#include "gsp4/symrep.hpp"

namespace gsp4 {

struct Weight {
  int j = 2;
  int k = 2;
  int degree() const { return j - k; }
  bool operator==(const Weight&) const = default;
};

std::string to_string(const Weight& w);

enum class Op { Id, U, Z, V, Z2, X2, V2, S, U2 };

std::string op_name(Op op);
std::optional<Op> op_from_name(const std::string& name);

/// Precision cap for V and V2, which would otherwise grow the box.
inline constexpr std::int64_t kDefaultPrecisionCap = std::int64_t{1} << 20;

class CoefficientSource {
 public:
  CoefficientSource(const ScalarCtx& ctx, Weight w, std::int64_t precision);
  virtual ~CoefficientSource() = default;

  const ScalarCtx& ctx() const { return ctx_; }
  Weight weight() const { return w_; }
  std::int64_t precision() const { return prec_; }

  bool in_box(const BQF& q) const { return q.m <= prec_ && q.n <= prec_; }

  /// a(F, Q).  Forms that are not positive semi-definite give zero; forms
  /// outside the box throw PrecisionError.
  SymVector coefficient(const BQF& q) const;

  SymVector zero() const { return SymVector(ctx_, w_.degree()); }

 protected:
  /// Called only for semi-definite Q inside the box.
  virtual SymVector raw_coefficient(const BQF& q) const = 0;

 private:
  ScalarCtx ctx_;
  Weight w_;
  std::int64_t prec_;
};

using SourcePtr = std::shared_ptr<const CoefficientSource>;

/// All semi-definite (m, r, n) with m, n <= B, in (m, r, n) order.
std::vector<BQF> box_keys(std::int64_t B);

/// Stored expansion; absent keys are zero.
class SiegelExpansion : public CoefficientSource {
 public:
  SiegelExpansion(const ScalarCtx& ctx, Weight w, std::int64_t precision);

  /// Stores v at Q (zero vectors are dropped).  Rejects keys outside the box,
  /// non-semidefinite keys and wrong degrees.
  void set(const BQF& q, const SymVector& v);

  const std::map<BQF, SymVector>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Same coefficients restricted to the smaller box B' <= B.
  SiegelExpansion truncated(std::int64_t B) const;
  /// Coefficients reduced modulo p^e, e <= m.
  SiegelExpansion reduced_mod(int e) const;
  /// Copy with a different weight label (coefficients untouched).
  SiegelExpansion relabeled(Weight w) const;

  /// Equality of weight, context, precision and coefficients.
  bool operator==(const SiegelExpansion& o) const;

 protected:
  SymVector raw_coefficient(const BQF& q) const override;

 private:
  std::map<BQF, SymVector> coeffs_;
};

/// Enumerates the box of src at its precision.
SiegelExpansion materialize(const CoefficientSource& src);

/// Pseudo-random coefficients derived from a hash of (seed, Q), independent
/// for each key; no equivariance.
class RandomExpansion : public CoefficientSource {
 public:
  RandomExpansion(const ScalarCtx& ctx, Weight w, std::int64_t precision, std::uint64_t seed);

 protected:
  SymVector raw_coefficient(const BQF& q) const override;

 private:
  std::uint64_t seed_;
};

/// Pseudo-random coefficients satisfying a(M.Q) = rho(M) a(Q) for M in
/// SL2(Z): a random vector on each reduced form, summed over its stabiliser,
/// transported to the rest of the class.  Singular forms get zero except
/// Q = 0 in scalar weight.
class EquivariantRandomExpansion : public CoefficientSource {
 public:
  EquivariantRandomExpansion(const ScalarCtx& ctx, Weight w, std::int64_t precision, std::uint64_t seed);

 protected:
  SymVector raw_coefficient(const BQF& q) const override;

 private:
  std::uint64_t seed_;
};

/// Coefficients given by a function; used for test vectors.
class FunctionExpansion : public CoefficientSource {
 public:
  FunctionExpansion(const ScalarCtx& ctx, Weight w, std::int64_t precision,
                    std::function<SymVector(const BQF&)> fn);

 protected:
  SymVector raw_coefficient(const BQF& q) const override { return fn_(q); }

 private:
  std::function<SymVector(const BQF&)> fn_;
};

/// SL2(Z) matrices fixing q (q positive definite), by search over small
/// entries.
std::vector<GL2Mat> stabilizer(const BQF& q);

/// Output precision of op applied at precision B; zero means exhausted.
std::int64_t op_precision(Op op, std::int64_t B, std::int64_t p,
                          std::int64_t cap = kDefaultPrecisionCap);

/// op F as a lazy source.  Throws PrecisionError when the box is exhausted,
/// and IntegralityError for S with a negative exponent.
SourcePtr apply_lazy(Op op, SourcePtr src, std::int64_t cap = kDefaultPrecisionCap);

/// The same, enumerated.
SiegelExpansion apply_primitive(Op op, const SiegelExpansion& f,
                                std::int64_t cap = kDefaultPrecisionCap);

/// Scalar value p^(j+k-6) of S as a p-valued scalar.
PValuedScalar s_scalar(const ScalarCtx& ctx, Weight w);

/// Theta on parallel weight: a(Q) -> det(Q) a(Q), det(Q) = (4mn - r^2)/4.
/// Requires j == k and p > 3.  Weight becomes (k+p+1, k+p+1).
SiegelExpansion theta(const SiegelExpansion& f);

/// theta_1: a(Q) -> det(Q) con(a(Q), Q^vee).  Requires j - k >= 2 and
/// p > j - k.  Weight becomes (j+p-1, k+p+1).
SiegelExpansion theta1(const SiegelExpansion& f);

/// Multiplication by the s-th power of the Hasse invariant: weight shifts by
/// s(p-1) in both entries, coefficients unchanged.
SiegelExpansion hasse_shift(const SiegelExpansion& f, int s);

struct EquivarianceViolation {
  BQF q;
  std::string generator;
  SymVector expected;  // rho(M) a(Q)
  SymVector actual;    // a(M.Q)
};

struct EquivarianceReport {
  std::size_t checked = 0;
  std::vector<EquivarianceViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks a(M.Q) = rho(M) a(Q) for M in {[[1,1],[0,1]], [[0,-1],[1,0]]}
/// over all box keys Q with M.Q in the box.
EquivarianceReport check_equivariance(const CoefficientSource& f);

/// One-variable expansion sum a_n q^n, n <= B, with a diamond value <p>.
struct EllipticExpansion {
  ScalarCtx ctx;
  int weight = 1;
  std::int64_t diamond = 1;
  std::int64_t precision = 0;
  std::vector<std::int64_t> coeffs;  // size precision + 1

  EllipticExpansion(const ScalarCtx& c, int w, std::int64_t diamond_value, std::int64_t B);
  std::int64_t operator[](std::int64_t n) const;
  void set(std::int64_t n, std::int64_t v);
  /// Restriction to a smaller precision.
  EllipticExpansion truncated(std::int64_t B) const;
  bool operator==(const EllipticExpansion& o) const;
};

enum class EllipticOp { U, V, T };

/// U: a_n <- a_(np), precision B/p.  V: a_n <- a_(n/p), precision pB.
/// T = U + <p> V at the smaller precision.
EllipticExpansion elliptic_ops(EllipticOp op, const EllipticExpansion& f);

}  // namespace gsp4
