#include "gsp4/symrep.hpp"

#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace gsp4 {

SymVector::SymVector(const ScalarCtx& ctx, int d) : ctx_(ctx) {
  if (d < 0) throw std::invalid_argument("SymVector: negative degree");
  c_.assign(static_cast<std::size_t>(d + 1), 0);
}

SymVector::SymVector(const ScalarCtx& ctx, std::vector<std::int64_t> coeffs)
    : ctx_(ctx), c_(std::move(coeffs)) {
  if (c_.empty()) throw std::invalid_argument("SymVector: need at least one coefficient");
  for (auto& x : c_) x = ctx_.reduce(x);
}

SymVector SymVector::from_form(const ScalarCtx& ctx, const BQF& q) {
  return SymVector(ctx, {q.m, q.r, q.n});
}

SymVector SymVector::basis(const ScalarCtx& ctx, int d, int i) {
  SymVector v(ctx, d);
  v.c_.at(static_cast<std::size_t>(i)) = ctx.reduce(1);
  return v;
}

bool SymVector::is_zero() const {
  for (auto x : c_)
    if (x != 0) return false;
  return true;
}

SymVector& SymVector::operator+=(const SymVector& o) {
  if (o.degree() != degree()) throw std::invalid_argument("SymVector: degree mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = ctx_.add(c_[i], o.c_[i]);
  return *this;
}

SymVector& SymVector::operator-=(const SymVector& o) {
  if (o.degree() != degree()) throw std::invalid_argument("SymVector: degree mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = ctx_.sub(c_[i], o.c_[i]);
  return *this;
}

SymVector SymVector::scaled(std::int64_t s) const {
  SymVector r = *this;
  const std::int64_t sr = ctx_.reduce(s);
  for (auto& x : r.c_) x = ctx_.mul(x, sr);
  return r;
}

SymVector SymVector::scaled(const PValuedScalar& s) const { return scaled(s.to_residue()); }

SymVector SymVector::reduced_to(const ScalarCtx& smaller) const {
  if (smaller.p() != ctx_.p() || smaller.m() > ctx_.m())
    throw std::invalid_argument("SymVector::reduced_to: not a quotient ring");
  return SymVector(smaller, c_);
}

std::string SymVector::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i];
  os << "]";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const SymVector& v) { return os << v.to_string(); }

namespace {

using Poly = std::vector<std::int64_t>;  // coefficient of f2^i at index i

Poly poly_mul(const Poly& x, const Poly& y, const ScalarCtx& ctx) {
  Poly out(x.size() + y.size() - 1, 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) out[i + j] = ctx.add(out[i + j], ctx.mul(x[i], y[j]));
  }
  return out;
}

}  // namespace

std::vector<std::vector<std::int64_t>> rho_matrix(const Mat2& mat, int d, const ScalarCtx& ctx) {
  const auto [a, b, c, dd] = mat;
  const Poly img1{ctx.reduce(a), ctx.reduce(c)};   // image of f1
  const Poly img2{ctx.reduce(b), ctx.reduce(dd)};  // image of f2
  std::vector<Poly> pow1(static_cast<std::size_t>(d + 1)), pow2(static_cast<std::size_t>(d + 1));
  pow1[0] = pow2[0] = Poly{ctx.reduce(1)};
  for (int e = 1; e <= d; ++e) {
    pow1[e] = poly_mul(pow1[e - 1], img1, ctx);
    pow2[e] = poly_mul(pow2[e - 1], img2, ctx);
  }
  std::vector<std::vector<std::int64_t>> out(static_cast<std::size_t>(d + 1),
                                             std::vector<std::int64_t>(static_cast<std::size_t>(d + 1), 0));
  for (int i = 0; i <= d; ++i) {
    const Poly col = poly_mul(pow1[d - i], pow2[i], ctx);
    for (int row = 0; row <= d; ++row) out[row][i] = col[row];
  }
  return out;
}

SymVector rho_apply(const Mat2& mat, const SymVector& v) {
  const int d = v.degree();
  const auto& ctx = v.ctx();
  const auto rm = rho_matrix(mat, d, ctx);
  std::vector<std::int64_t> out(static_cast<std::size_t>(d + 1), 0);
  for (int row = 0; row <= d; ++row)
    for (int i = 0; i <= d; ++i) out[row] = ctx.add(out[row], ctx.mul(rm[row][i], v[i]));
  return SymVector(ctx, std::move(out));
}

ContractionTensor::ContractionTensor(int d) : d_(d) {
  if (d < 2) throw std::invalid_argument("ContractionTensor: degree must be at least 2");
  coeff_.resize(static_cast<std::size_t>(d + 1));
  for (int i = 0; i <= d; ++i) {
    const std::int64_t f1 = d - i, f2 = i;
    coeff_[i][0] = -f2 * (f2 - 1);  // m: d^2/df2^2
    coeff_[i][1] = f1 * f2;         // r: d^2/df1 df2
    coeff_[i][2] = -f1 * (f1 - 1);  // n: d^2/df1^2
  }
}

std::vector<std::pair<int, int>> ContractionTensor::support() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i <= d_; ++i)
    for (int slot = 0; slot < 3; ++slot)
      if (coeff(i, slot) != 0) out.emplace_back(d_ - i, 2 - slot);
  return out;
}

SymVector contract(const SymVector& v, const DualQuadric& qd) {
  const int d = v.degree();
  const auto& ctx = v.ctx();
  if (d < 2) throw std::invalid_argument("contract: degree must be at least 2");
  if (ctx.p() <= d) throw std::invalid_argument("contract: requires p > degree");
  static thread_local std::map<int, ContractionTensor> cache;
  auto it = cache.find(d);
  if (it == cache.end()) it = cache.emplace(d, ContractionTensor(d)).first;
  const ContractionTensor& t = it->second;
  const std::int64_t q[3] = {qd.m, qd.r, qd.n};
  std::vector<std::int64_t> acc(static_cast<std::size_t>(d - 1), 0);
  for (int i = 0; i <= d; ++i) {
    if (v[i] == 0) continue;
    for (int slot = 0; slot < 3; ++slot) {
      const std::int64_t c = t.coeff(i, slot);
      if (c == 0) continue;
      const int tgt = t.target(i, slot);
      acc[tgt] = ctx.add(acc[tgt], ctx.mul(ctx.mul(c, q[slot]), v[i]));
    }
  }
  return SymVector(ctx, std::move(acc));
}

}  // namespace gsp4
