#include <doctest.h>

#include <map>
#include <random>

#include "gsp4/bqf.hpp"
#include "gsp4/symrep.hpp"

using namespace gsp4;

namespace {

// Homogeneous polynomials in f1, f2 as {power of f1 -> coefficient}, exact
// over Z; the test reduces at the end.
using Poly = std::map<int, std::int64_t>;

Poly poly_mul(const Poly& x, const Poly& y) {
  Poly r;
  for (const auto& [a, u] : x)
    for (const auto& [b, v] : y) r[a + b] += u * v;
  return r;
}

// rho(M) f1^(d-i) f2^i = (a f1 + c f2)^(d-i) (b f1 + d f2)^i, expanded.
Poly rho_oracle(const Mat2& m, int deg, int i) {
  const Poly img1{{1, m[0]}, {0, m[2]}}, img2{{1, m[1]}, {0, m[3]}};
  Poly r{{0, 1}};
  for (int k = 0; k < deg - i; ++k) r = poly_mul(r, img1);
  for (int k = 0; k < i; ++k) r = poly_mul(r, img2);
  return r;
}

// -(m d2/df2^2 - r d2/df1df2 + n d2/df1^2) of a degree-deg polynomial.
Poly con_oracle(const Poly& f, int deg, const BQF& q) {
  Poly r;
  for (const auto& [a, c] : f) {
    const int b = deg - a;  // power of f2
    if (b >= 2) r[a] -= q.m * c * b * (b - 1);
    if (a >= 1 && b >= 1) r[a - 1] += q.r * c * a * b;
    if (a >= 2) r[a - 2] -= q.n * c * a * (a - 1);
  }
  return r;
}

SymVector to_vec(const ScalarCtx& ctx, const Poly& f, int deg) {
  std::vector<std::int64_t> c(static_cast<std::size_t>(deg + 1), 0);
  for (const auto& [a, v] : f) c[static_cast<std::size_t>(deg - a)] = ctx.reduce(v);
  return SymVector(ctx, c);
}

Poly from_vec(const SymVector& v) {
  Poly f;
  for (int i = 0; i <= v.degree(); ++i) f[v.degree() - i] = v[i];
  return f;
}

}  // namespace

TEST_CASE("basis and forms") {
  const ScalarCtx c(7, 2);
  const SymVector q = SymVector::from_form(c, BQF{1, -2, 3});
  CHECK(q.degree() == 2);
  CHECK(q[0] == 1);
  CHECK(q[1] == c.reduce(-2));
  CHECK(q[2] == 3);
  CHECK(SymVector::basis(c, 4, 1)[1] == 1);
  CHECK((q - q).is_zero());
  CHECK(q.scaled(PValuedScalar(c, 1, 1))[0] == 7);
  CHECK_THROWS_AS(q.scaled(PValuedScalar(c, 1, -1)), IntegralityError);
  CHECK(q.reduced_to(c.with_exponent(1))[1] == 5);
}

TEST_CASE("rho against direct substitution") {
  const ScalarCtx c(11, 2);
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::int64_t> e(-20, 20);
  for (int t = 0; t < 200; ++t) {
    const Mat2 m{e(rng), e(rng), e(rng), e(rng)};
    const int d = static_cast<int>(rng() % 7);
    for (int i = 0; i <= d; ++i)
      CHECK(rho_apply(m, SymVector::basis(c, d, i)) == to_vec(c, rho_oracle(m, d, i), d));
  }
}

TEST_CASE("rho is a homomorphism and transports forms") {
  const ScalarCtx c(13, 3);
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<std::int64_t> e(-9, 9);
  for (int t = 0; t < 200; ++t) {
    const Mat2 a{e(rng), e(rng), e(rng), e(rng)}, b{e(rng), e(rng), e(rng), e(rng)};
    const Mat2 ab{a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
                  a[2] * b[1] + a[3] * b[3]};
    std::vector<std::int64_t> coeffs(5);
    for (auto& x : coeffs) x = e(rng);
    const SymVector v(c, coeffs);
    CHECK(rho_apply(ab, v) == rho_apply(a, rho_apply(b, v)));
    if (a[0] * a[3] - a[1] * a[2] == 0) continue;
    const GL2Mat g(a[0], a[1], a[2], a[3]);
    const BQF q{e(rng), e(rng), e(rng)};
    CHECK(rho_apply(g, SymVector::from_form(c, q)) == SymVector::from_form(c, congruence(g, q)));
  }
}

TEST_CASE("contraction against differentiation") {
  for (std::int64_t p : {5, 7, 11}) {
    const ScalarCtx c(p, 2);
    std::mt19937_64 rng(static_cast<std::uint64_t>(p));
    std::uniform_int_distribution<std::int64_t> e(-50, 50);
    for (int d = 2; d < p; ++d)
      for (int t = 0; t < 30; ++t) {
        std::vector<std::int64_t> coeffs(static_cast<std::size_t>(d + 1));
        for (auto& x : coeffs) x = e(rng);
        const SymVector v(c, coeffs);
        const BQF q{e(rng), e(rng), e(rng)};
        CHECK(contract(v, DualQuadric::of(q)) == to_vec(c, con_oracle(from_vec(v), d, q), d - 2));
      }
  }
}

TEST_CASE("contraction anchor") {
  const ScalarCtx c(7, 2);
  for (std::int64_t m = -6; m <= 6; ++m)
    for (std::int64_t r = -6; r <= 6; ++r)
      for (std::int64_t n = -6; n <= 6; ++n) {
        const BQF q{m, r, n};
        const SymVector k = contract(SymVector::from_form(c, q), DualQuadric::of(q));
        CHECK(k.degree() == 0);
        CHECK(k[0] == c.reduce(r * r - 4 * m * n));
      }
}

TEST_CASE("contraction is equivariant") {
  // con(rho(g) v, Q^vee) = rho(g) con(v, (adj(g) Q adj(g)^T)^vee)
  const ScalarCtx c(11, 2);
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<std::int64_t> e(-5, 5);
  for (int t = 0; t < 300; ++t) {
    const Mat2 a{e(rng), e(rng), e(rng), e(rng)};
    if (a[0] * a[3] - a[1] * a[2] == 0) continue;
    const GL2Mat g(a[0], a[1], a[2], a[3]);
    const int d = 2 + static_cast<int>(rng() % 6);
    std::vector<std::int64_t> coeffs(static_cast<std::size_t>(d + 1));
    for (auto& x : coeffs) x = e(rng);
    const SymVector v(c, coeffs);
    const BQF q{e(rng), e(rng), e(rng)};
    const SymVector lhs = contract(rho_apply(g, v), DualQuadric::of(q));
    const SymVector rhs = rho_apply(g, contract(v, DualQuadric::of(congruence(g.adjugate(), q))));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("contraction support") {
  for (int d = 2; d <= 8; ++d) {
    const ContractionTensor t(d);
    const auto s = t.support();
    for (int a = 0; a <= d; ++a)
      for (int e = 0; e <= 2; ++e) {
        const bool in = std::find(s.begin(), s.end(), std::pair{a, e}) != s.end();
        CHECK(in == (a + e >= 2 && a + e <= d));
      }
  }
  CHECK_THROWS(ContractionTensor(1));
  CHECK_THROWS(contract(SymVector(ScalarCtx(5, 1), 6), DualQuadric{1, 0, 1}));
}
