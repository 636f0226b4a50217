#include <doctest.h>

#include <map>
#include <set>

#include "gsp4/bqf.hpp"
#include "gsp4/padic.hpp"
#include "oracles.hpp"

using namespace gsp4;

TEST_CASE("Legendre symbol against the list of squares") {
  for (std::int64_t p : {3, 5, 7, 11, 13, 101}) {
    const ScalarCtx ctx(p, 1);
    for (std::int64_t a = -3 * p; a <= 3 * p; ++a) {
      CAPTURE(p);
      CAPTURE(a);
      CHECK(ctx.legendre(a) == oracle::legendre_brute(a, p));
      CHECK(ctx.legendre(a) * ctx.legendre(a + 1) == ctx.legendre(a * (a + 1)));
    }
  }
}

TEST_CASE("GL2 matrices") {
  CHECK_THROWS_AS(GL2Mat(1, 2, 2, 4), std::invalid_argument);
  const GL2Mat g(2, 1, 1, 1), h(1, 3, 0, 1);
  CHECK((g * h).det() == g.det() * h.det());
  CHECK(g * g.inverse_unimodular() == GL2Mat::identity());
  CHECK(g * g.adjugate() == GL2Mat(g.det(), 0, 0, g.det()));
  CHECK_THROWS_AS(GL2Mat(std::int64_t{1} << 40, 0, 0, std::int64_t{1} << 40), std::overflow_error);
}

TEST_CASE("action and congruence") {
  const BQF q{1, 1, 3};
  const GL2Mat t(1, 1, 0, 1);
  // [[1,1],[0,1]] [[m, r/2],[r/2, n]] [[1,0],[1,1]]
  CHECK(congruence(t, q) == BQF{5, 7, 3});
  CHECK(act(t, q) == BQF{5, 7, 3});
  CHECK_FALSE(act(GL2Mat(1, 0, 0, 3), BQF{1, 1, 1}).has_value());
  CHECK(act(GL2Mat(3, 0, 0, 1), BQF{1, 0, 3}) == BQF{3, 0, 1});
}

TEST_CASE("coset representatives cover the determinant-p matrices") {
  // every small integer matrix of determinant p lies in exactly one M SL2(Z)
  for (std::int64_t p : {2, 3, 5, 7}) {
    const auto reps = coset_reps(p);
    REQUIRE(reps.size() == static_cast<std::size_t>(p + 1));
    for (const auto& r : reps) CHECK(r.det() == p);
    std::set<std::size_t> hit;
    const std::int64_t L = 2 * p;
    for (std::int64_t a = -L; a <= L; ++a)
      for (std::int64_t b = -L; b <= L; ++b)
        for (std::int64_t c = -L; c <= L; ++c)
          for (std::int64_t d = -L; d <= L; ++d) {
            if (a * d - b * c != p) continue;
            const GL2Mat x(a, b, c, d);
            int found = 0;
            for (std::size_t i = 0; i < reps.size(); ++i) {
              // M^{-1} x = adj(M) x / p
              const GL2Mat y = reps[i].adjugate() * x;
              if (y.a() % p == 0 && y.b() % p == 0 && y.c() % p == 0 && y.d() % p == 0) {
                ++found;
                hit.insert(i);
              }
            }
            CAPTURE(x);
            CHECK(found == 1);
          }
    CHECK(hit.size() == reps.size());
  }
}

TEST_CASE("classification") {
  const auto c = classify_form(BQF{1, 0, 1}, 5);
  CHECK(c.discriminant == -4);
  CHECK(c.legendre() == 1);
  CHECK(classify_form(BQF{1, 0, 1}, 3).legendre() == -1);
  CHECK(classify_form(BQF{1, 1, 2}, 7).legendre() == 0);
  const auto d = classify_form(BQF{5, 5, 10}, 5);
  CHECK_FALSE(d.p_primitive);
  CHECK_FALSE(d.legendre().has_value());
  CHECK(std::holds_alternative<PDivisible>(d.legendre_class));
}

TEST_CASE("zeros in P^1 against enumeration") {
  for (std::int64_t p : {3, 5, 7})
    for (std::int64_t m = -4; m <= 4; ++m)
      for (std::int64_t r = -4; r <= 4; ++r)
        for (std::int64_t n = -4; n <= 4; ++n) {
          const BQF q{m, r, n};
          if (q.divisible_by(p)) continue;
          CHECK(static_cast<int>(zeros_in_P1(q, p).size()) == oracle::projective_zero_count(m, r, n, p));
        }
}

TEST_CASE("neighbour counts") {
  CHECK(neighbors(BQF{1, 0, 1}, 5).size() == 2);
  CHECK(neighbors(BQF{1, 0, 1}, 3).empty());
  CHECK(neighbors(BQF{1, 1, 2}, 7).size() == 1);
  CHECK(neighbors(BQF{5, 0, 5}, 5).size() == 6);
  for (std::int64_t p : {3, 5, 7, 11})
    for (std::int64_t d = -3; d >= -200; --d)
      for (const auto& f : oracle::reduced_forms(d)) {
        const BQF q{f[0], f[1], f[2]};
        const auto nb = neighbors(q, p);
        const int expected = q.divisible_by(p) ? static_cast<int>(p + 1) : oracle::projective_zero_count(q.m, q.r, q.n, p);
        CAPTURE(q);
        CHECK(static_cast<int>(nb.size()) == expected);
        for (const auto& x : nb) {
          CHECK(act(x.mat, x.form) == q);
          CHECK(x.form.discriminant() == q.discriminant());
        }
      }
}

TEST_CASE("reduction") {
  const Reduction r = reduce_form(BQF{3, 2, 2});
  CHECK(r.reduced == BQF{2, 2, 3});
  CHECK(is_reduced(r.reduced));
  CHECK(r.transform.det() == 1);
  CHECK(act(r.transform, BQF{3, 2, 2}) == r.reduced);
  CHECK_THROWS_AS(reduce_form(BQF{1, 3, 1}), std::invalid_argument);
  CHECK(reduce_form(BQF{1, -1, 1}).reduced == BQF{1, 1, 1});
}

TEST_CASE("class numbers against an independent enumeration") {
  const std::map<std::int64_t, std::size_t> known{{-3, 1}, {-4, 1}, {-23, 3}, {-47, 5}, {-71, 7}, {-12, 2}};
  for (const auto& [d, h] : known) CHECK(reduced_forms_of_discriminant(d).size() == h);
  for (std::int64_t d = -3; d >= -600; --d) {
    if (((d % 4) + 4) % 4 > 1) continue;
    const auto ours = reduced_forms_of_discriminant(d);
    const auto ref = oracle::reduced_forms(d);
    std::set<BQF> a(ours.begin(), ours.end()), b;
    for (const auto& f : ref) b.insert(BQF{f[0], f[1], f[2]});
    CAPTURE(d);
    CHECK(a == b);
    CHECK(ours.size() == a.size());
  }
}

TEST_CASE("reduction lands in the enumerated set") {
  for (std::int64_t m = 1; m <= 12; ++m)
    for (std::int64_t r = -15; r <= 15; ++r)
      for (std::int64_t n = 1; n <= 12; ++n) {
        const BQF q{m, r, n};
        if (!q.is_positive_definite()) continue;
        const auto forms = reduced_forms_of_discriminant(q.discriminant());
        const BQF red = reduce_form(q).reduced;
        CHECK(std::find(forms.begin(), forms.end(), red) != forms.end());
      }
}

TEST_CASE("orbit cycles") {
  const OrbitCycle oc = orbit_cycle(BQF{1, 0, 1}, 5);
  CHECK(oc.length == 1);
  CHECK(congruence(oc.forward, BQF{1, 0, 1}) == BQF{5, 0, 5});
  CHECK(oc.forward.det() == 5);
  CHECK_THROWS_AS(orbit_cycle(BQF{1, 0, 1}, 3), std::invalid_argument);
  CHECK_THROWS_AS(orbit_cycle(BQF{5, 0, 5}, 5), std::invalid_argument);
  for (std::int64_t p : {3, 5, 7})
    for (std::int64_t d = -3; d >= -150; --d) {
      if (((d % 4) + 4) % 4 > 1) continue;
      const std::size_t h = oracle::reduced_forms(d).size();
      for (const BQF& q : reduced_forms_of_discriminant(d)) {
        const auto cls = classify_form(q, p);
        if (!cls.p_primitive || cls.legendre() != 1) continue;
        const OrbitCycle o = orbit_cycle(q, p);
        std::int64_t ps = 1;
        for (int i = 0; i < o.length; ++i) ps *= p;
        CAPTURE(q);
        CAPTURE(p);
        CHECK(o.length >= 1);
        CHECK(static_cast<std::size_t>(o.length) <= h);
        CHECK(congruence(o.forward, q) == q.scaled(ps));
        CHECK(congruence(o.backward, q) == q.scaled(ps));
        CHECK(o.forward.det() == ps);
        CHECK(o.backward.det() == ps);
        CHECK(o.classes.front() == q);
      }
    }
}
