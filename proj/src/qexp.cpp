#include "gsp4/qexp.hpp"

#include <cstdlib>
#include <stdexcept>

namespace gsp4 {

std::string to_string(const Weight& w) {
  return "(" + std::to_string(w.j) + "," + std::to_string(w.k) + ")";
}

std::string op_name(Op op) {
  switch (op) {
    case Op::Id: return "Id";
    case Op::U: return "U";
    case Op::Z: return "Z";
    case Op::V: return "V";
    case Op::Z2: return "Z2";
    case Op::X2: return "X2";
    case Op::V2: return "V2";
    case Op::S: return "S";
    case Op::U2: return "U2";
  }
  return "?";
}

std::optional<Op> op_from_name(const std::string& name) {
  for (Op op : {Op::Id, Op::U, Op::Z, Op::V, Op::Z2, Op::X2, Op::V2, Op::S, Op::U2})
    if (op_name(op) == name) return op;
  return std::nullopt;
}

// --- sources ---------------------------------------------------------------

CoefficientSource::CoefficientSource(const ScalarCtx& ctx, Weight w, std::int64_t precision)
    : ctx_(ctx), w_(w), prec_(precision) {
  if (w.k < 2 || w.j < w.k) throw std::invalid_argument("weight must satisfy j >= k >= 2");
  if (precision <= 0) throw PrecisionError("precision exhausted (B = 0)");
}

SymVector CoefficientSource::coefficient(const BQF& q) const {
  if (!q.is_positive_semidefinite()) return zero();
  if (!in_box(q))
    throw PrecisionError("coefficient at " + to_string(q) + " lies outside the box B = " +
                         std::to_string(prec_));
  return raw_coefficient(q);
}

std::vector<BQF> box_keys(std::int64_t B) {
  std::vector<BQF> out;
  // sorted by (m, r, n)
  for (std::int64_t m = 0; m <= B; ++m) {
    std::int64_t rmax = 0;
    while ((rmax + 1) * (rmax + 1) <= 4 * m * B) ++rmax;
    for (std::int64_t r = -rmax; r <= rmax; ++r)
      for (std::int64_t n = 0; n <= B; ++n)
        if (4 * m * n >= r * r) out.push_back({m, r, n});
  }
  return out;
}

SiegelExpansion::SiegelExpansion(const ScalarCtx& ctx, Weight w, std::int64_t precision)
    : CoefficientSource(ctx, w, precision) {}

void SiegelExpansion::set(const BQF& q, const SymVector& v) {
  if (!q.is_positive_semidefinite())
    throw std::invalid_argument("SiegelExpansion: key " + to_string(q) + " is not semi-definite");
  if (!in_box(q))
    throw std::invalid_argument("SiegelExpansion: key " + to_string(q) + " outside the box");
  if (v.degree() != weight().degree())
    throw std::invalid_argument("SiegelExpansion: coefficient has the wrong degree");
  if (!(v.ctx() == ctx())) throw std::invalid_argument("SiegelExpansion: coefficient ring mismatch");
  if (v.is_zero())
    coeffs_.erase(q);
  else
    coeffs_.insert_or_assign(q, v);
}

SymVector SiegelExpansion::raw_coefficient(const BQF& q) const {
  auto it = coeffs_.find(q);
  return it == coeffs_.end() ? zero() : it->second;
}

SiegelExpansion SiegelExpansion::truncated(std::int64_t B) const {
  if (B > precision()) throw PrecisionError("truncated: cannot enlarge the box");
  SiegelExpansion out(ctx(), weight(), B);
  for (const auto& [q, v] : coeffs_)
    if (q.m <= B && q.n <= B) out.coeffs_.emplace(q, v);
  return out;
}

SiegelExpansion SiegelExpansion::reduced_mod(int e) const {
  const ScalarCtx small = ctx().with_exponent(e);
  SiegelExpansion out(small, weight(), precision());
  for (const auto& [q, v] : coeffs_) out.set(q, v.reduced_to(small));
  return out;
}

SiegelExpansion SiegelExpansion::relabeled(Weight w) const {
  if (w.degree() != weight().degree()) throw std::invalid_argument("relabeled: degree must not change");
  SiegelExpansion out(ctx(), w, precision());
  out.coeffs_ = coeffs_;
  return out;
}

bool SiegelExpansion::operator==(const SiegelExpansion& o) const {
  return ctx() == o.ctx() && weight() == o.weight() && precision() == o.precision() &&
         coeffs_ == o.coeffs_;
}

SiegelExpansion materialize(const CoefficientSource& src) {
  SiegelExpansion out(src.ctx(), src.weight(), src.precision());
  for (const auto& q : box_keys(src.precision())) {
    SymVector v = src.coefficient(q);
    if (!v.is_zero()) out.set(q, v);
  }
  return out;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t hash_key(std::uint64_t seed, const BQF& q, int i) {
  std::uint64_t h = splitmix64(seed);
  h = splitmix64(h ^ static_cast<std::uint64_t>(q.m));
  h = splitmix64(h ^ static_cast<std::uint64_t>(q.r));
  h = splitmix64(h ^ static_cast<std::uint64_t>(q.n));
  return splitmix64(h ^ static_cast<std::uint64_t>(i));
}

SymVector hashed_vector(const ScalarCtx& ctx, int d, std::uint64_t seed, const BQF& q) {
  std::vector<std::int64_t> c(static_cast<std::size_t>(d + 1));
  const auto mod = static_cast<std::uint64_t>(ctx.modulus());
  for (int i = 0; i <= d; ++i) c[i] = static_cast<std::int64_t>(hash_key(seed, q, i) % mod);
  return SymVector(ctx, std::move(c));
}

}  // namespace

RandomExpansion::RandomExpansion(const ScalarCtx& ctx, Weight w, std::int64_t precision,
                                 std::uint64_t seed)
    : CoefficientSource(ctx, w, precision), seed_(seed) {}

SymVector RandomExpansion::raw_coefficient(const BQF& q) const {
  return hashed_vector(ctx(), weight().degree(), seed_, q);
}

std::vector<GL2Mat> stabilizer(const BQF& q) {
  // automorphisms of definite forms have entries in {-1, 0, 1} once the
  // form is reduced; callers pass reduced forms
  std::vector<GL2Mat> out;
  for (int a = -1; a <= 1; ++a)
    for (int b = -1; b <= 1; ++b)
      for (int c = -1; c <= 1; ++c)
        for (int d = -1; d <= 1; ++d) {
          if (a * d - b * c != 1) continue;
          GL2Mat g(a, b, c, d);
          if (congruence(g, q) == q) out.push_back(g);
        }
  return out;
}

EquivariantRandomExpansion::EquivariantRandomExpansion(const ScalarCtx& ctx, Weight w,
                                                       std::int64_t precision, std::uint64_t seed)
    : CoefficientSource(ctx, w, precision), seed_(seed) {}

SymVector EquivariantRandomExpansion::raw_coefficient(const BQF& q) const {
  const int d = weight().degree();
  if (q == BQF{0, 0, 0}) return d == 0 ? hashed_vector(ctx(), 0, seed_, q) : zero();
  if (!q.is_positive_definite()) return zero();
  const Reduction red = reduce_form(q);
  const SymVector x = hashed_vector(ctx(), d, seed_, red.reduced);
  SymVector b = zero();
  for (const auto& h : stabilizer(red.reduced)) b += rho_apply(h, x);
  return rho_apply(red.transform.inverse_unimodular(), b);
}

FunctionExpansion::FunctionExpansion(const ScalarCtx& ctx, Weight w, std::int64_t precision,
                                     std::function<SymVector(const BQF&)> fn)
    : CoefficientSource(ctx, w, precision), fn_(std::move(fn)) {}

// --- primitive operators ---------------------------------------------------

std::int64_t op_precision(Op op, std::int64_t B, std::int64_t p, std::int64_t cap) {
  switch (op) {
    case Op::U:
    case Op::Z: return B / p;
    case Op::Z2: return B / (p * p);
    case Op::V: return std::max(B, std::min(B * p, cap));
    case Op::V2: return std::max(B, std::min(B * p * p, cap));
    default: return B;
  }
}

PValuedScalar s_scalar(const ScalarCtx& ctx, Weight w) {
  return PValuedScalar::power_of_p(ctx, w.j + w.k - 6);
}

namespace {

// a(X2 F, Q) / a(F, Q) as an integer
std::int64_t x2_factor(const BQF& q, std::int64_t p) {
  const auto cls = classify_form(q, p);
  if (!cls.p_primitive) return p;
  return *cls.legendre();
}

class OpSource : public CoefficientSource {
 public:
  OpSource(Op op, SourcePtr src, std::int64_t precision)
      : CoefficientSource(src->ctx(), src->weight(), precision), op_(op), src_(std::move(src)) {
    if (op_ == Op::S) s_residue_ = s_scalar(ctx(), weight()).to_residue();
    if (op_ == Op::Z || op_ == Op::Z2) {
      for (const auto& rep : coset_reps(ctx().p())) {
        reps_.push_back(rep);
        rho_.push_back(rho_matrix(rep.entries(), weight().degree(), ctx()));
      }
    }
  }

 protected:
  SymVector raw_coefficient(const BQF& q) const override {
    const std::int64_t p = ctx().p();
    switch (op_) {
      case Op::Id: return src_->coefficient(q);
      case Op::U: return src_->coefficient(q.scaled(p));
      case Op::Z: return coset_sum(q);
      case Op::Z2: return coset_sum(q.scaled(p));
      case Op::X2: return src_->coefficient(q).scaled(x2_factor(q, p));
      case Op::U2: return src_->coefficient(q).scaled(-1 + p * x2_factor(q, p));
      case Op::V:
        if (!q.divisible_by(p)) return zero();
        return src_->coefficient({q.m / p, q.r / p, q.n / p});
      case Op::V2:
        if (!q.divisible_by(p * p)) return zero();
        return src_->coefficient({q.m / (p * p), q.r / (p * p), q.n / (p * p)});
      case Op::S: return src_->coefficient(q).scaled(s_residue_);
    }
    throw std::logic_error("OpSource: unknown operator");
  }

 private:
  // sum over M of rho(M) a(F, M^{-1}.Q), integral terms only
  SymVector coset_sum(const BQF& q) const {
    // neighbors(q, p), with the rho matrices of the coset reps cached
    const int d = weight().degree();
    const ScalarCtx& c = ctx();
    std::vector<std::int64_t> acc(static_cast<std::size_t>(d + 1), 0);
    for (std::size_t k = 0; k < reps_.size(); ++k) {
      const auto form = act(reps_[k].adjugate(), q);
      if (!form) continue;
      const SymVector v = src_->coefficient(*form);
      const auto& rm = rho_[k];
      for (int row = 0; row <= d; ++row)
        for (int i = 0; i <= d; ++i) acc[row] = c.add(acc[row], c.mul(rm[row][i], v[i]));
    }
    return SymVector(c, std::move(acc));
  }

  Op op_;
  SourcePtr src_;
  std::int64_t s_residue_ = 0;
  std::vector<GL2Mat> reps_;
  std::vector<std::vector<std::vector<std::int64_t>>> rho_;
};

}  // namespace

SourcePtr apply_lazy(Op op, SourcePtr src, std::int64_t cap) {
  if (op == Op::Id) return src;
  const std::int64_t B = op_precision(op, src->precision(), src->ctx().p(), cap);
  if (B <= 0)
    throw PrecisionError(op_name(op) + " exhausts precision B = " + std::to_string(src->precision()));
  if (op == Op::S && s_scalar(src->ctx(), src->weight()).val() < 0)
    throw IntegralityError("S acts by p^" +
                           std::to_string(src->weight().j + src->weight().k - 6) +
                           " in weight " + to_string(src->weight()) +
                           ", which is not integral outside an operator expression");
  return std::make_shared<OpSource>(op, std::move(src), B);
}

SiegelExpansion apply_primitive(Op op, const SiegelExpansion& f, std::int64_t cap) {
  auto src = std::make_shared<SiegelExpansion>(f);
  return materialize(*apply_lazy(op, src, cap));
}

// --- theta operators -------------------------------------------------------

namespace {

std::int64_t det_residue(const BQF& q, const ScalarCtx& ctx) {
  return ctx.mul(ctx.reduce(4 * q.m * q.n - q.r * q.r), ctx.inverse(4));
}

}  // namespace

SiegelExpansion theta(const SiegelExpansion& f) {
  const Weight w = f.weight();
  const auto p = f.ctx().p();
  if (w.j != w.k) throw std::invalid_argument("theta: needs parallel weight");
  if (p <= 3) throw std::invalid_argument("theta: needs p > 3");
  const int kk = w.k + static_cast<int>(p) + 1;
  SiegelExpansion out(f.ctx(), {kk, kk}, f.precision());
  for (const auto& [q, v] : f.coeffs()) out.set(q, v.scaled(det_residue(q, f.ctx())));
  return out;
}

SiegelExpansion theta1(const SiegelExpansion& f) {
  const Weight w = f.weight();
  const auto p = f.ctx().p();
  if (w.degree() < 2) throw std::invalid_argument("theta1: needs j - k >= 2");
  if (p <= w.degree()) throw std::invalid_argument("theta1: needs p > j - k");
  const Weight nw{w.j + static_cast<int>(p) - 1, w.k + static_cast<int>(p) + 1};
  SiegelExpansion out(f.ctx(), nw, f.precision());
  for (const auto& [q, v] : f.coeffs())
    out.set(q, contract(v, DualQuadric::of(q)).scaled(det_residue(q, f.ctx())));
  return out;
}

SiegelExpansion hasse_shift(const SiegelExpansion& f, int s) {
  if (s < 0) throw std::invalid_argument("hasse_shift: s must be nonnegative");
  const int shift = s * static_cast<int>(f.ctx().p() - 1);
  return f.relabeled({f.weight().j + shift, f.weight().k + shift});
}

EquivarianceReport check_equivariance(const CoefficientSource& f) {
  EquivarianceReport rep;
  const std::pair<std::string, GL2Mat> gens[] = {{"[[1,1],[0,1]]", GL2Mat(1, 1, 0, 1)},
                                                 {"[[0,-1],[1,0]]", GL2Mat(0, -1, 1, 0)}};
  for (const auto& q : box_keys(f.precision())) {
    const SymVector a = f.coefficient(q);
    for (const auto& [name, g] : gens) {
      const BQF mq = congruence(g, q);
      if (!f.in_box(mq)) continue;
      ++rep.checked;
      SymVector expected = rho_apply(g, a);
      SymVector actual = f.coefficient(mq);
      if (!(expected == actual)) rep.violations.push_back({q, name, expected, actual});
    }
  }
  return rep;
}

// --- elliptic expansions ---------------------------------------------------

EllipticExpansion::EllipticExpansion(const ScalarCtx& c, int w, std::int64_t diamond_value,
                                     std::int64_t B)
    : ctx(c), weight(w), diamond(c.reduce(diamond_value)), precision(B) {
  if (B < 0) throw PrecisionError("elliptic expansion with negative precision");
  coeffs.assign(static_cast<std::size_t>(B + 1), 0);
}

std::int64_t EllipticExpansion::operator[](std::int64_t n) const {
  if (n < 0 || n > precision) throw PrecisionError("elliptic coefficient outside precision");
  return coeffs[static_cast<std::size_t>(n)];
}

void EllipticExpansion::set(std::int64_t n, std::int64_t v) {
  if (n < 0 || n > precision) throw PrecisionError("elliptic coefficient outside precision");
  coeffs[static_cast<std::size_t>(n)] = ctx.reduce(v);
}

EllipticExpansion EllipticExpansion::truncated(std::int64_t B) const {
  if (B > precision) throw PrecisionError("truncated: cannot enlarge precision");
  EllipticExpansion out(ctx, weight, diamond, B);
  for (std::int64_t n = 0; n <= B; ++n) out.coeffs[n] = coeffs[n];
  return out;
}

bool EllipticExpansion::operator==(const EllipticExpansion& o) const {
  return ctx == o.ctx && weight == o.weight && diamond == o.diamond && precision == o.precision &&
         coeffs == o.coeffs;
}

EllipticExpansion elliptic_ops(EllipticOp op, const EllipticExpansion& f) {
  const std::int64_t p = f.ctx.p();
  switch (op) {
    case EllipticOp::U: {
      EllipticExpansion out(f.ctx, f.weight, f.diamond, f.precision / p);
      for (std::int64_t n = 0; n <= out.precision; ++n) out.coeffs[n] = f[n * p];
      return out;
    }
    case EllipticOp::V: {
      EllipticExpansion out(f.ctx, f.weight, f.diamond, f.precision * p);
      for (std::int64_t n = 0; n <= f.precision; ++n) out.coeffs[n * p] = f[n];
      return out;
    }
    case EllipticOp::T: {
      const EllipticExpansion u = elliptic_ops(EllipticOp::U, f);
      const EllipticExpansion v = elliptic_ops(EllipticOp::V, f);
      EllipticExpansion out = u;
      for (std::int64_t n = 0; n <= out.precision; ++n)
        out.coeffs[n] = f.ctx.add(u[n], f.ctx.mul(f.diamond, v[n]));
      return out;
    }
  }
  throw std::logic_error("elliptic_ops: unknown operator");
}

}  // namespace gsp4
