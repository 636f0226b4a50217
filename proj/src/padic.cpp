#include "gsp4/padic.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <tuple>
#include <utility>

namespace gsp4 {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

int valuation(std::int64_t n, std::int64_t p) {
  if (n == 0) throw ValuationOfZero();
  if (p < 2) throw std::invalid_argument("valuation: p must be >= 2");
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

std::int64_t ipow(std::int64_t base, int exp) {
  if (exp < 0) throw std::invalid_argument("ipow: negative exponent");
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

ScalarCtx::ScalarCtx(std::int64_t p, int m) : p_(p), m_(m) {
  if (p < 3 || !is_prime(p)) throw std::invalid_argument("ScalarCtx: p must be an odd prime");
  if (m < 1) throw std::invalid_argument("ScalarCtx: m must be positive");
  __int128 mod = 1;
  for (int i = 0; i < m; ++i) {
    mod *= p;
    if (mod > (static_cast<__int128>(1) << 31))
      throw std::invalid_argument("ScalarCtx: p^m must stay below 2^31");
  }
  modulus_ = static_cast<std::int64_t>(mod);
}

std::int64_t ScalarCtx::pow(std::int64_t a, std::int64_t e) const {
  std::int64_t base = reduce(a);
  std::int64_t r = reduce(1);
  while (e > 0) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

std::int64_t ScalarCtx::inverse(std::int64_t a) const {
  // extended Euclid against p^m
  std::int64_t g0 = modulus_, g1 = reduce(a);
  std::int64_t x0 = 0, x1 = 1;
  while (g1 != 0) {
    std::int64_t q = g0 / g1;
    std::tie(g0, g1) = std::pair{g1, g0 - q * g1};
    std::tie(x0, x1) = std::pair{x1, x0 - q * x1};
  }
  if (g0 != 1) throw std::domain_error("ScalarCtx::inverse: not a unit");
  return reduce(x0);
}

int ScalarCtx::legendre(std::int64_t a) const {
  std::int64_t r = a % p_;
  if (r < 0) r += p_;
  if (r == 0) return 0;
  // Euler's criterion in Z/p
  std::int64_t e = (p_ - 1) / 2, base = r, acc = 1;
  while (e > 0) {
    if (e & 1) acc = acc * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  return acc == 1 ? 1 : -1;
}

int legendre(std::int64_t a, const ScalarCtx& ctx) { return ctx.legendre(a); }

// --- PValuedScalar ---------------------------------------------------------

PValuedScalar::PValuedScalar(const ScalarCtx& ctx) : ctx_(ctx), rel_(ctx.m()) {}

PValuedScalar::PValuedScalar(const ScalarCtx& ctx, std::int64_t n) : ctx_(ctx), rel_(ctx.m()) {
  if (n == 0) return;
  int v = valuation(n, ctx.p());
  std::int64_t u = n;
  for (int i = 0; i < v; ++i) u /= ctx.p();
  normalize(u, v, ctx.m());
}

PValuedScalar::PValuedScalar(const ScalarCtx& ctx, std::int64_t unit, int val)
    : ctx_(ctx), rel_(ctx.m()) {
  normalize(unit, val, ctx.m());
}

void PValuedScalar::normalize(std::int64_t raw_unit, int val, int rel) {
  rel = std::min(rel, ctx_.m());
  std::int64_t mod = ipow(ctx_.p(), rel);
  std::int64_t u = raw_unit % mod;
  if (u < 0) u += mod;
  if (u == 0) {
    zero_ = true;
    unit_ = 0;
    val_ = 0;
    rel_ = ctx_.m();
    return;
  }
  int t = 0;
  while (u % ctx_.p() == 0) {
    u /= ctx_.p();
    ++t;
  }
  // digits shifted out of the unit are lost from the relative precision
  rel -= t;
  mod = ipow(ctx_.p(), rel);
  zero_ = false;
  unit_ = u % mod;
  val_ = val + t;
  rel_ = rel;
}

std::int64_t PValuedScalar::residue_mod(const ScalarCtx& target) const {
  if (target.p() != ctx_.p() || target.m() > ctx_.m())
    throw std::invalid_argument("residue_mod: target ring is not a quotient");
  if (zero_) return 0;
  if (val_ < 0)
    throw IntegralityError("coefficient " + to_string() + " has negative valuation");
  if (val_ >= target.m()) return 0;
  if (val_ + rel_ < target.m())
    throw PrecisionError("coefficient " + to_string() + " is not known modulo p^" +
                         std::to_string(target.m()));
  return target.mul(target.reduce(unit_), ipow(ctx_.p(), val_));
}

PValuedScalar PValuedScalar::operator-() const {
  if (zero_) return *this;
  PValuedScalar r(ctx_);
  r.normalize(-unit_, val_, rel_);
  return r;
}

PValuedScalar operator+(const PValuedScalar& x, const PValuedScalar& y) {
  if (x.zero_) return y;
  if (y.zero_) return x;
  const auto& ctx = x.ctx_;
  const int v = std::min(x.val_, y.val_);
  // absolute precision of the sum, measured from p^v
  const int abs_prec = std::min(x.val_ + x.rel_, y.val_ + y.rel_) - v;
  const std::int64_t mod = ipow(ctx.p(), abs_prec);
  auto shifted = [&](const PValuedScalar& s) -> std::int64_t {
    int gap = s.val_ - v;
    if (gap >= abs_prec) return 0;
    return static_cast<std::int64_t>(static_cast<__int128>(s.unit_) * ipow(ctx.p(), gap) % mod);
  };
  std::int64_t raw = (shifted(x) + shifted(y)) % mod;
  PValuedScalar r(ctx);
  r.normalize(raw, v, abs_prec);
  return r;
}

PValuedScalar operator*(const PValuedScalar& x, const PValuedScalar& y) {
  PValuedScalar r(x.ctx_);
  if (x.zero_ || y.zero_) return r;
  const int rel = std::min(x.rel_, y.rel_);
  const std::int64_t mod = ipow(x.ctx_.p(), rel);
  std::int64_t u = static_cast<std::int64_t>(static_cast<__int128>(x.unit_) * y.unit_ % mod);
  r.normalize(u, x.val_ + y.val_, rel);
  return r;
}

PValuedScalar PValuedScalar::truncated(int e) const {
  if (zero_ || val_ >= e) return PValuedScalar(ctx_);
  PValuedScalar r(ctx_);
  r.normalize(unit_, val_, std::min(rel_, e - val_));
  return r;
}

bool PValuedScalar::operator==(const PValuedScalar& o) const {
  if (zero_ || o.zero_) return zero_ == o.zero_;
  return val_ == o.val_ && rel_ == o.rel_ && unit_ == o.unit_;
}

std::string PValuedScalar::to_string() const {
  std::ostringstream os;
  if (zero_) {
    os << "0";
  } else {
    // print small negative representatives as negatives
    std::int64_t mod = ipow(ctx_.p(), rel_);
    std::int64_t u = unit_ > mod / 2 ? unit_ - mod : unit_;
    if (val_ == 0)
      os << u;
    else if (u == 1)
      os << "p^" << val_;
    else if (u == -1)
      os << "-p^" << val_;
    else
      os << u << "*p^" << val_;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const PValuedScalar& s) { return os << s.to_string(); }

}  // namespace gsp4
