#include <doctest.h>

#include <random>

#include "gsp4/commalg.hpp"
#include "gsp4/linalg.hpp"
#include "oracles.hpp"

using namespace gsp4;

namespace {

void check_against_oracles(const GroupRingModule& m) {
  const TorDims t = tor_dims(m);
  const oracle::Tor a = oracle::tor_tate(m), b = oracle::tor_raw(m);
  CHECK(t.t0 == a.t0);
  CHECK(t.t1 == a.t1);
  CHECK(t.t0 == b.t0);
  CHECK(t.t1 == b.t1);
}

// t^e in k[t]/(t^n)
std::vector<std::int64_t> monomial(std::size_t n, std::size_t e) {
  std::vector<std::int64_t> f(n, 0);
  f[e] = 1;
  return f;
}

}  // namespace

TEST_CASE("linear algebra over F_p") {
  const Matrix a(7, 2, 3, {1, 2, 3, 2, 4, 6});
  CHECK(rank(a) == 1);
  const Matrix k = kernel(a);
  CHECK(k.cols() == 2);
  CHECK((a * k).is_zero());
  const Matrix b(7, 2, 1, {3, 6});
  const auto x = solve(a, b);
  REQUIRE(x);
  CHECK(a * *x == b);
  CHECK_FALSE(solve(a, Matrix(7, 2, 1, {1, 0})));
  CHECK(rank(hconcat(a, complement_basis(a))) == 2);
  CHECK(Matrix(5, 2, 2, {1, 1, 0, 1}).pow(5) == Matrix::identity(5, 2));
}

TEST_CASE("module validation") {
  CHECK_THROWS_AS(GroupRingModule(4, 1, 1, {Matrix::identity(4, 1)}), std::invalid_argument);
  CHECK_THROWS_AS(GroupRingModule(3, 1, 2, {Matrix::identity(3, 2)}), std::invalid_argument);
  // non-commuting generators
  const Matrix g(3, 2, 2, {1, 1, 0, 1}), h(3, 2, 2, {1, 0, 1, 1});
  CHECK_THROWS_AS(GroupRingModule(3, 1, 2, {g, h}), std::invalid_argument);
  // a Jordan block of size p + 1 is not killed by (g-1)^p
  Matrix big = Matrix::identity(3, 4);
  for (std::size_t i = 0; i + 1 < 4; ++i) big.set(i, i + 1, 1);
  CHECK_THROWS_AS(GroupRingModule(3, 1, 1, {big}), std::invalid_argument);
  CHECK_NOTHROW(GroupRingModule(3, 2, 1, {big}));
}

TEST_CASE("defect examples") {
  for (std::int64_t p : {2, 3, 5, 7}) {
    CAPTURE(p);
    CHECK(defect_balanced(regular_module(p, 1, 1)).d == 1);
    CHECK(defect_balanced(trivial_module(p, 1, 1, 1)).d == 0);
    CHECK(defect_balanced(trivial_module(p, 1, 2, 1)).d == -1);
    CHECK_FALSE(defect_balanced(trivial_module(p, 1, 2, 1)).balanced);
  }
}

TEST_CASE("free modules have defect equal to their rank") {
  for (std::int64_t p : {2, 3})
    for (int N : {1, 2})
      for (int q : {1, 2}) {
        if (q == 2 && N == 2 && p == 3) continue;  // dim 81
        const GroupRingModule s = regular_module(p, N, q);
        for (std::size_t r = 1; r <= 2; ++r) {
          GroupRingModule f = s;
          for (std::size_t i = 1; i < r; ++i) f = direct_sum(f, s);
          if (f.dim() > 40) continue;
          CAPTURE(p);
          CAPTURE(N);
          CAPTURE(q);
          const TorDims t = tor_dims(f);
          CHECK(t.t0 == r);
          CHECK(t.t1 == 0);
        }
      }
}

TEST_CASE("Tor dimensions against two independent computations") {
  std::mt19937_64 rng(11);
  for (std::int64_t p : {2, 3, 5}) {
    check_against_oracles(trivial_module(p, 1, 1, 2));
    check_against_oracles(trivial_module(p, 1, 2, 1));
    check_against_oracles(regular_module(p, 1, 1));
    check_against_oracles(quotient_module(p, 1, 1, monomial(static_cast<std::size_t>(p), p == 2 ? 1 : 2)));
  }
  check_against_oracles(trivial_module(2, 1, 3, 1));
  check_against_oracles(trivial_module(2, 2, 2, 1));
  const GroupRingModule s = regular_module(3, 1, 2);
  check_against_oracles(submodule(s, augmentation_image(s)));
  for (int t = 0; t < 30; ++t) {
    const std::int64_t p = (t % 2) ? 3 : 2;
    const int q = 1 + t % 3 / 2 + (p == 2 ? t % 2 : 0);
    const GroupRingModule m = random_balanced_module(p, 1, q, 12, rng);
    CAPTURE(t);
    check_against_oracles(m);
    CHECK(defect_balanced(m).balanced);
  }
}

TEST_CASE("k[Z/p^2] modules") {
  // k[t]/(t^9) over Z/9: S/(t^3) has Tor^0 = 1, Tor^1 = 1
  const GroupRingModule m = quotient_module(3, 2, 1, monomial(9, 3));
  CHECK(m.dim() == 3);
  CHECK(tor_dims(m).t0 == 1);
  CHECK(tor_dims(m).t1 == 1);
  check_against_oracles(m);
}

TEST_CASE("defect is additive and basis independent") {
  std::mt19937_64 rng(3);
  const GroupRingModule a = trivial_module(3, 1, 2, 1), b = regular_module(3, 1, 2);
  const auto ab = change_basis(direct_sum(a, b), random_invertible(3, a.dim() + b.dim(), rng));
  CHECK(defect_balanced(ab).d == defect_balanced(a).d + defect_balanced(b).d);
  CHECK(defect_balanced(ab).d == 0);
}

TEST_CASE("square presentation of k over k[Z/p]") {
  const GroupRingModule k = trivial_module(5, 1, 1, 1);
  const SquarePresentation sp = square_presentation(k);
  CHECK(sp.d == 1);
  REQUIRE(sp.relations.size() == 1);
  // (t) up to a unit: no constant term, nonzero t coefficient
  CHECK(sp.relations[0][0][0] == 0);
  CHECK(sp.relations[0][0][1] != 0);
  const PresentationCheck pc = check_presentation(k, sp);
  CHECK(pc.ok());
  CHECK(pc.cokernel_dim == 1);
  CHECK_THROWS_AS(square_presentation(trivial_module(5, 1, 2, 1)), std::invalid_argument);
}

TEST_CASE("square presentations of random balanced modules") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 20; ++t) {
    const std::int64_t p = t % 2 ? 3 : 5;
    const GroupRingModule m = random_balanced_module(p, 1, 1 + (p == 3 && t % 4 == 1), 12, rng);
    const SquarePresentation sp = square_presentation(m);
    const PresentationCheck pc = check_presentation(m, sp);
    CAPTURE(t);
    CHECK(pc.ok());
    CHECK(pc.cokernel_dim == m.dim());
    CHECK(sp.d == tor_dims(m).t0);
  }
}

TEST_CASE("a wrong presentation is caught") {
  const GroupRingModule k = trivial_module(5, 1, 1, 1);
  SquarePresentation sp = square_presentation(k);
  sp.relations[0][0] = GroupRingElement(5, 0);
  sp.relations[0][0][2] = 1;  // t^2 generates less than ker phi
  CHECK_FALSE(check_presentation(k, sp).ok());
}

TEST_CASE("group ring multiplication") {
  // (1 + t)^p = 1 + t^p = 1 in k[t]/(t^p)
  GroupRingElement g(3, 0);
  g[0] = 1;
  g[1] = 1;
  const GroupRingElement g2 = group_ring_multiply(3, 1, 1, g, g);
  CHECK(group_ring_multiply(3, 1, 1, g2, g) == GroupRingElement{1, 0, 0});
  // t1 * t2 in k[t1,t2]/(t1^2, t2^2), monomial index e1 + 2 e2
  const GroupRingElement t1{0, 1, 0, 0}, t2{0, 0, 1, 0};
  CHECK(group_ring_multiply(2, 1, 2, t1, t2) == GroupRingElement{0, 0, 0, 1});
  CHECK(group_ring_multiply(2, 1, 2, t1, t1) == GroupRingElement{0, 0, 0, 0});
}

TEST_CASE("coinvariants") {
  CHECK(coinvariants(regular_module(5, 1, 1)).dim == 1);
  CHECK(coinvariants(trivial_module(5, 1, 2, 3)).dim == 3);
  const GroupRingModule m = direct_sum(regular_module(3, 1, 1), trivial_module(3, 1, 1, 2));
  const Coinvariants c = coinvariants(m);
  CHECK(c.dim == 3);
  CHECK(c.projection.rows() == 3);
  for (int i = 0; i < m.q(); ++i) CHECK((c.projection * m.t(i)).is_zero());
  CHECK(rank(c.projection) == 3);
}

TEST_CASE("patching shape checker") {
  const GroupRingModule s = regular_module(3, 1, 1);
  const Matrix t = s.t(0);
  PatchingReport r = check_patching_shape(s, 1, {}, {t});
  CHECK(r.augmentation_in_image);
  CHECK(r.coinvariants_match);
  CHECK(r.finite_balanced);
  CHECK(r.ok());
  CHECK_FALSE(check_patching_shape(s, 2, {}, {t}).coinvariants_match);
  // kernel generated by t^2 misses t
  CHECK_FALSE(check_patching_shape(s, 1, {}, {t * t}).augmentation_in_image);
  CHECK_FALSE(check_patching_shape(trivial_module(3, 1, 2, 1), 1, {}, {}).finite_balanced);
}

TEST_CASE("ordinary idempotent examples") {
  const std::int64_t p = 5, pm = 125;
  const Matrix id = Matrix::identity(pm, 3);
  CHECK(ordinary_idempotent(id).e == id);
  CHECK(ordinary_idempotent(id.scaled(p)).e.is_zero());
  const Matrix d(pm, 2, 2, {2, 0, 0, p});
  const IdempotentResult e = ordinary_idempotent(d);
  CHECK(e.e == Matrix(pm, 2, 2, {1, 0, 0, 0}));
  const IdempotentCertificate c = certify_idempotent(d, e.e, p);
  CHECK(c.ok());
  CHECK(c.rank_mod_p == 1);
  CHECK(c.nilpotency_index == 3);
  // a non-idempotent is rejected
  CHECK_FALSE(certify_idempotent(d, Matrix(pm, 2, 2, {2, 0, 0, 0}), p).idempotent);
  CHECK_THROWS(ordinary_idempotent(Matrix(pm, 2, 3)));
}

TEST_CASE("ordinary idempotent of a conjugated block matrix") {
  // P diag(u, p) P^{-1} has e = P diag(1, 0) P^{-1}
  const std::int64_t pm = 49;
  const Matrix P(pm, 2, 2, {1, 1, 0, 1}), Pinv(pm, 2, 2, {1, 48, 0, 1});
  REQUIRE(P * Pinv == Matrix::identity(pm, 2));
  const Matrix a = P * Matrix(pm, 2, 2, {3, 0, 0, 7}) * Pinv;
  CHECK(ordinary_idempotent(a).e == P * Matrix(pm, 2, 2, {1, 0, 0, 0}) * Pinv);
}

TEST_CASE("Tor is invariant under change of basis") {
  std::mt19937_64 rng(9);
  const GroupRingModule m = random_balanced_module(3, 1, 1, 9, rng);
  const Matrix P = random_invertible(3, m.dim(), rng);
  const GroupRingModule n = change_basis(m, P);
  CHECK(tor_dims(n).t0 == tor_dims(m).t0);
  CHECK(tor_dims(n).t1 == tor_dims(m).t1);
}
