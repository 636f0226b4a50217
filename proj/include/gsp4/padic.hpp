#pragma once

// Exact residue arithmetic modulo p^m and p-valued scalars u * p^v.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace gsp4 {

/// Raised when an operator coefficient has negative p-adic valuation at the
/// point where it must be reduced to a residue modulo p^m.
struct IntegralityError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Raised when an operation would need coefficients beyond the tracked box
/// or beyond the known relative precision of a scalar.
struct PrecisionError : std::range_error {
  using std::range_error::range_error;
};

/// valuation(0) has no finite value; this is reported separately from bad
/// arguments so callers can tell the two apart.
struct ValuationOfZero : std::domain_error {
  ValuationOfZero() : std::domain_error("p-adic valuation of zero is +infinity") {}
};

bool is_prime(std::int64_t n);

/// Largest v with p^v | n.  Throws ValuationOfZero for n == 0.
int valuation(std::int64_t n, std::int64_t p);

std::int64_t ipow(std::int64_t base, int exp);

/// Coefficient ring Z/p^m for an odd prime p.
class ScalarCtx {
 public:
  ScalarCtx(std::int64_t p, int m);

  std::int64_t p() const { return p_; }
  int m() const { return m_; }
  /// p^m.
  std::int64_t modulus() const { return modulus_; }

  std::int64_t reduce(std::int64_t a) const {
    std::int64_t r = a % modulus_;
    return r < 0 ? r + modulus_ : r;
  }
  std::int64_t add(std::int64_t a, std::int64_t b) const { return reduce(a + b); }
  std::int64_t sub(std::int64_t a, std::int64_t b) const { return reduce(a - b); }
  std::int64_t mul(std::int64_t a, std::int64_t b) const {
    return static_cast<std::int64_t>((static_cast<__int128>(a) * b) % modulus_ + modulus_) %
           modulus_;
  }
  std::int64_t pow(std::int64_t a, std::int64_t e) const;
  /// Inverse of a unit modulo p^m.
  std::int64_t inverse(std::int64_t a) const;
  /// p^e mod p^m (zero once e >= m).
  std::int64_t ppow(int e) const { return e >= m_ ? 0 : ipow(p_, e); }

  /// Legendre symbol (a / p) in {-1, 0, +1}.
  int legendre(std::int64_t a) const;

  /// The same prime at a smaller exponent.
  ScalarCtx with_exponent(int m) const { return ScalarCtx(p_, m); }

  bool operator==(const ScalarCtx&) const = default;

 private:
  std::int64_t p_;
  int m_;
  std::int64_t modulus_;
};

int legendre(std::int64_t a, const ScalarCtx& ctx);

/// A scalar u * p^v with u a p-adic unit known modulo p^rel, rel <= m.
///
/// The valuation may be negative; such scalars only live inside operator
/// expressions.  Normal form: zero has unit 0, val 0, rel m; otherwise
/// 0 < unit < p^rel and p does not divide unit.
class PValuedScalar {
 public:
  /// The zero scalar.
  explicit PValuedScalar(const ScalarCtx& ctx);
  /// The exact integer n (zero allowed).
  PValuedScalar(const ScalarCtx& ctx, std::int64_t n);
  /// unit * p^val; unit is renormalized if divisible by p.
  PValuedScalar(const ScalarCtx& ctx, std::int64_t unit, int val);

  static PValuedScalar power_of_p(const ScalarCtx& ctx, int e) { return {ctx, 1, e}; }

  const ScalarCtx& ctx() const { return ctx_; }
  bool is_zero() const { return zero_; }
  std::int64_t unit() const { return unit_; }
  int val() const { return val_; }
  /// Number of p-adic digits of the unit that are known.
  int rel_prec() const { return rel_; }

  /// Residue modulo p^m.  Throws IntegralityError when val < 0 and
  /// PrecisionError when the known digits do not reach p^m.
  std::int64_t to_residue() const { return residue_mod(ctx_); }
  /// Residue in Z/p^e for a context of the same prime with e <= m.
  std::int64_t residue_mod(const ScalarCtx& target) const;

  PValuedScalar operator-() const;
  friend PValuedScalar operator+(const PValuedScalar& x, const PValuedScalar& y);
  friend PValuedScalar operator-(const PValuedScalar& x, const PValuedScalar& y) { return x + (-y); }
  friend PValuedScalar operator*(const PValuedScalar& x, const PValuedScalar& y);

  /// Drop everything of valuation >= e and keep the unit modulo p^(e - val);
  /// used to reduce formal expressions modulo p^e.
  PValuedScalar truncated(int e) const;

  bool operator==(const PValuedScalar& o) const;

  std::string to_string() const;

 private:
  void normalize(std::int64_t raw_unit, int val, int rel);

  ScalarCtx ctx_;
  bool zero_ = true;
  std::int64_t unit_ = 0;
  int val_ = 0;
  int rel_ = 0;
};

std::ostream& operator<<(std::ostream& os, const PValuedScalar& s);

}  // namespace gsp4
