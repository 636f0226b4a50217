#include <doctest.h>

#include <random>

#include "gsp4/rootdata.hpp"

using namespace gsp4;

namespace {

std::vector<BigInt> big(std::initializer_list<long long> xs) {
  std::vector<BigInt> out;
  for (long long x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("roots, coroots and the pairing") {
  for (int i = 1; i <= 4; ++i) {
    CAPTURE(i);
    // long roots alpha_2, alpha_4 pair to 2 with their coroots, as do the short ones
    CHECK(pairing(root(i), coroot(i)) == Rational(2));
  }
  CHECK(pairing(root(3), coroot(1)) == Rational(0));
  CHECK(pairing(rho(), coroot(1)) == Rational(1));
  CHECK(pairing(rho(), coroot(2)) == Rational(1));
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::int64_t> d(-50, 50);
  for (int t = 0; t < 100; ++t) {
    const WeightGSp4 mu{d(rng), d(rng), Rational(d(rng), 2)};
    CHECK(pairing(mu + rho(), coroot(3)) == Rational(mu.a + mu.b + 3));
  }
  CHECK(root(3) == root(1) + root(2));
  CHECK(root(4) == root(1) + root(3));
}

TEST_CASE("Weyl representatives") {
  const WeightGSp4 w{4, 2, 1};
  CHECK(weyl_act(WeylElement::W2Tilde, w) == WeightGSp4{2, -4, 5});
  CHECK(weyl_act(WeylElement::W1Tilde, w) == WeightGSp4{4, -2, 3});
  CHECK(weyl_act(WeylElement::W3Tilde, w) == WeightGSp4{-2, -4, 7});
  CHECK(weyl_act(WeylElement::Longest, w) == WeightGSp4{2, 4, 1});
  CHECK(weyl_act(WeylElement::W0Tilde, w) == w);
  // the dot action fixes -rho
  const WeightGSp4 mrho = WeightGSp4{} - rho();
  for (auto e : {WeylElement::W1Tilde, WeylElement::W2Tilde, WeylElement::W3Tilde, WeylElement::Longest})
    CHECK(weyl_act(e, mrho, true) == mrho);
}

TEST_CASE("dot actions shifted by (t, t)") {
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<std::int64_t> d(-100, 100);
  for (int i = 0; i < 100; ++i) {
    const std::int64_t al = d(rng), be = d(rng), t = d(rng);
    const WeightGSp4 mu{al, be, Rational(d(rng))};
    const auto r1 = weyl_act(WeylElement::W1Tilde, mu, true);
    const auto r2 = weyl_act(WeylElement::W2Tilde, mu, true);
    const auto r3 = weyl_act(WeylElement::W3Tilde, mu, true);
    CHECK(std::pair{r1.a - t, r1.b - t} == std::pair{al - t, -be - 2 - t});
    CHECK(std::pair{r2.a - t, r2.b - t} == std::pair{be - 1 - t, -al - 3 - t});
    CHECK(std::pair{r3.a - t, r3.b - t} == std::pair{-be - 3 - t, -al - 3 - t});
  }
}

TEST_CASE("chamber classification") {
  CHECK(chamber_classify(5, 3).cls == WeightClass::Regular);
  CHECK(chamber_classify(5, 3).chambers == std::vector<int>{0});
  CHECK(chamber_classify(1, 0).cls == WeightClass::LimitOfDiscreteSeries);
  for (std::int64_t a = 2; a <= 9; ++a) CHECK(chamber_classify(a, 2).cls == WeightClass::LimitOfDiscreteSeries);
  CHECK(chamber_classify(1, 2).cls == WeightClass::Degenerate);  // (0, 0) lies on every chamber
  CHECK(lds_families(2, 2) == std::vector<int>{1});
  CHECK(lds_families(2, 1) == std::vector<int>{2});
  CHECK(lds_families(1, 0) == std::vector<int>{3});
  CHECK(lds_families(5, 5).empty());
}

TEST_CASE("LDS weights are exactly three families") {
  for (std::int64_t a = -10; a <= 10; ++a)
    for (std::int64_t b = -10; b <= 10; ++b) {
      const bool family = (b == 2 && a >= 2) || (b == 3 - a && a >= 2) || (a == 1 && b <= 1);
      CAPTURE(a);
      CAPTURE(b);
      CHECK((chamber_classify(a, b).cls == WeightClass::LimitOfDiscreteSeries) == family);
      CHECK(lds_families(a, b).empty() == !family);
    }
}

TEST_CASE("vanishing predicates") {
  CHECK(lan_suh_vanishing(4, 2, 7) == std::set<int>{2, 3});
  CHECK(lan_suh_vanishing(4, 2, 11) == std::set<int>{2, 3});
  CHECK(lan_suh_vanishing(5, 5, 7) == std::set<int>{1, 2, 3});
  CHECK(lan_suh_vanishing(3, 1, 7) == std::set<int>{3});
  CHECK(lan_suh_vanishing(0, 0, 7).empty());
}

TEST_CASE("Serre duality") {
  CHECK(serre_dual_weight(2, 1) == std::pair<std::int64_t, std::int64_t>{2, 1});
  for (std::int64_t a = -5; a <= 8; ++a) {
    CHECK(serre_dual_weight(a, 2) == std::pair<std::int64_t, std::int64_t>{1, 3 - a});
    for (std::int64_t b = -5; b <= 8; ++b) {
      const auto d = serre_dual_weight(a, b);
      CHECK(serre_dual_weight(d.first, d.second) == std::pair{a, b});
      CHECK((d == std::pair{a, b}) == (b == 3 - a));
    }
  }
}

TEST_CASE("Hecke polynomial") {
  const auto h = hecke_poly(2, 1, 1, 1);
  CHECK(std::vector<BigInt>(h.begin(), h.end()) == big({1, -1, 12, -8, 64}));
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long long> d(-30, 30);
  for (int t = 0; t < 50; ++t) {
    const BigInt x = 1 + (rng() % 7), t1 = d(rng), t2 = d(rng), s = d(rng);
    const auto q = hecke_poly(x, t1, t2, s);
    CHECK(q[3] == x * x * x * s * q[1]);
    CHECK(q[4] == (x * x * x * s) * (x * x * x * s));
  }
}

TEST_CASE("polynomials from roots and Newton slopes") {
  CHECK(poly_from_roots(big({1, 2})) == big({1, -3, 2}));
  // roots 1, 5, 25, 125 over p = 5
  const auto slopes = newton_slopes(poly_from_roots(big({1, 5, 25, 125})), 5);
  CHECK(slopes == std::vector<Rational>{0, 1, 2, 3});
  // x^2 - 5 has both roots of valuation 1/2
  CHECK(newton_slopes(big({1, 0, -5}), 5) == std::vector<Rational>{Rational(1, 2), Rational(1, 2)});
  CHECK_THROWS(newton_slopes(big({1, 3, 0}), 5));
}

TEST_CASE("ordinary root valuations") {
  CHECK(ordinary_root_valuations(4, 2) == std::array<std::int64_t, 4>{0, 0, 3, 3});
  CHECK(ordinary_root_valuations(2, 2) == std::array<std::int64_t, 4>{0, 0, 1, 1});
  for (std::int64_t a = 2; a <= 12; ++a)
    for (std::int64_t b = 2; b <= a; ++b) {
      const auto v = ordinary_root_valuations(a, b);
      CHECK(v[0] + v[1] + v[2] + v[3] == 6 + 2 * (a + b - 6));
    }
  CHECK_THROWS(ordinary_root_valuations(2, 3));
  // a constructed ordinary polynomial at p = 7 in weight (5, 3)
  const BigInt p = 7;
  const std::vector<BigInt> roots{2, 3 * p, 5 * p * p * p * p, 4 * p * p * p * p * p};
  std::vector<Rational> want{0, 1, 4, 5};
  CHECK(newton_slopes(poly_from_roots(roots), 7) == want);
}

TEST_CASE("infinitesimal character") {
  const auto t = infinitesimal_char(3, 3, 0);
  CHECK(t == std::array<Rational, 4>{Rational(3, 2), Rational(1, 2), Rational(-1, 2), Rational(-3, 2)});
  for (std::int64_t a = 2; a <= 10; ++a)
    for (std::int64_t b = 2; b <= a; ++b) {
      const std::int64_t w = a + b - 6;
      const auto x = infinitesimal_char(a, b, w);
      CHECK(x[0] + x[3] == Rational(-w));
      CHECK(x[1] + x[2] == Rational(-w));
      const bool strict = x[0] > x[1] && x[1] > x[2] && x[2] > x[3];
      CHECK(strict == (b > 2));
    }
}

TEST_CASE("tangent dimension ledger") {
  for (int q = 0; q <= 6; ++q) {
    CHECK(gw_tangent_dim(0, q) == q - 1);
    CHECK(gw_tangent_dim(q, 0) == q - 1);
    CHECK(gw_tangent_dim_ledger(q, q) == gw_tangent_dim(q, q));
  }
  CHECK(gw_tangent_dim(1, 0) == 0);
  CHECK(LocalSelmerData::fl_term() == LocalSelmerData::at_p);
}
