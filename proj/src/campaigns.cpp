#include "gsp4/campaigns.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "gsp4/bqf.hpp"
#include "gsp4/commalg.hpp"
#include "gsp4/operators.hpp"
#include "gsp4/rootdata.hpp"
#include "gsp4/symrep.hpp"

namespace gsp4 {

namespace {

CheckResult pass(std::string name, std::string detail, std::optional<std::int64_t> precision = std::nullopt) {
  return {std::move(name), true, std::move(detail), std::nullopt, precision};
}

CheckResult fail(std::string name, std::string detail, std::string counterexample,
                 std::optional<std::int64_t> precision = std::nullopt) {
  return {std::move(name), false, std::move(detail), std::move(counterexample), precision};
}

// First key where two sources differ, over the box of the smaller one.
std::optional<std::string> first_difference(const CoefficientSource& a, const CoefficientSource& b) {
  const std::int64_t B = std::min(a.precision(), b.precision());
  for (const BQF& q : box_keys(B)) {
    const SymVector x = a.coefficient(q), y = b.coefficient(q);
    if (!(x == y)) return "at " + to_string(q) + ": " + x.to_string() + " vs " + y.to_string();
  }
  return std::nullopt;
}

std::string wname(Weight w) { return "weight " + to_string(w); }

bool is_reduced_pd_family(const BQF& q, std::int64_t p) {
  const auto cls = classify_form(q, p);
  return cls.p_primitive && cls.legendre() == 1;
}

// Reduced p-primitive forms with (D/p) = +1 and |D| <= max_disc.
std::vector<BQF> split_forms(std::int64_t p, std::int64_t max_disc) {
  std::vector<BQF> out;
  for (std::int64_t d = -3; d >= -max_disc; --d) {
    if (((d % 4) + 4) % 4 > 1) continue;
    for (const BQF& q : reduced_forms_of_discriminant(d))
      if (is_reduced_pd_family(q, p)) out.push_back(q);
  }
  return out;
}

// Orbit matrices stay below 2^62 when p^h is small.
bool orbit_fits(std::int64_t p, std::int64_t d) {
  const auto h = reduced_forms_of_discriminant(d).size();
  std::int64_t v = 1;
  for (std::size_t i = 0; i < h; ++i) {
    v *= p;
    if (v > (std::int64_t{1} << 24)) return false;
  }
  return true;
}

std::int64_t mod(std::int64_t x, std::int64_t p) { return ((x % p) + p) % p; }

using M2 = std::array<std::int64_t, 4>;

M2 mul(const M2& x, const M2& y, std::int64_t p) {
  return {mod(x[0] * y[0] + x[1] * y[2], p), mod(x[0] * y[1] + x[1] * y[3], p),
          mod(x[2] * y[0] + x[3] * y[2], p), mod(x[2] * y[1] + x[3] * y[3], p)};
}

M2 transpose(const M2& x) { return {x[0], x[2], x[1], x[3]}; }
M2 adj(const M2& x, std::int64_t p) { return {x[3], mod(-x[1], p), mod(-x[2], p), x[0]}; }
M2 gram(const BQF& q, std::int64_t p) { return {mod(2 * q.m, p), mod(q.r, p), mod(q.r, p), mod(2 * q.n, p)}; }

std::string m2_string(const M2& x) {
  return "[[" + std::to_string(x[0]) + "," + std::to_string(x[1]) + "],[" + std::to_string(x[2]) + "," +
         std::to_string(x[3]) + "]]";
}

// First basis vector x of Sym^d with con(rho(A) x, Q^vee) != 0 mod p.
std::optional<std::string> kernel_violation(const M2& a, const BQF& q, int d, std::int64_t p) {
  const ScalarCtx k(p, 1);
  for (int i = 0; i <= d; ++i) {
    const SymVector img = contract(rho_apply(a, SymVector::basis(k, d, i)), DualQuadric::of(q));
    if (!img.is_zero())
      return "Q=" + to_string(q) + " A=" + m2_string(a) + " x=f1^" + std::to_string(d - i) + "*f2^" +
             std::to_string(i) + " con=" + img.to_string();
  }
  return std::nullopt;
}

enum class KernelCondition { IsotropicOnly, Shadow };

CheckResult kernel_scan(const std::string& name, std::int64_t p, int j, std::int64_t max_disc,
                        KernelCondition cond) {
  const int d = j - 2;
  std::size_t tested = 0;
  for (const BQF& q : split_forms(p, max_disc)) {
    const M2 g = gram(q, p);
    for (std::int64_t a = 0; a < p; ++a)
      for (std::int64_t b = 0; b < p; ++b)
        for (std::int64_t c = 0; c < p; ++c)
          for (std::int64_t e = 0; e < p; ++e) {
            const M2 A{a, b, c, e};
            if (mod(a * e - b * c, p) != 0) continue;
            const M2 aga = mul(mul(A, g, p), transpose(A), p);
            if (aga != M2{0, 0, 0, 0}) continue;
            if (cond == KernelCondition::Shadow && mul(g, transpose(A), p) != mul(adj(A, p), g, p)) continue;
            ++tested;
            if (auto v = kernel_violation(A, q, d, p))
              return fail(name, "p=" + std::to_string(p) + " j=" + std::to_string(j), *v);
          }
  }
  return pass(name, "p=" + std::to_string(p) + " j=" + std::to_string(j) + ", " + std::to_string(tested) +
                        " (form, matrix) pairs");
}

}  // namespace

// --- operators -------------------------------------------------------------

CheckResult check_z2_equals_uz(std::int64_t p, Weight w, int trials, std::uint64_t seed, std::int64_t compare_at) {
  const std::string name = "Z2 = U*Z, p=" + std::to_string(p) + ", " + wname(w);
  const ScalarCtx ctx(p, 2);
  const std::int64_t B = p * p * compare_at;
  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    auto f = std::make_shared<RandomExpansion>(ctx, w, B, rng());
    const SiegelExpansion lhs = materialize(*apply_lazy(Op::Z2, f)).truncated(compare_at);
    const SiegelExpansion rhs = materialize(*apply_lazy(Op::U, apply_lazy(Op::Z, f))).truncated(compare_at);
    if (auto diff = first_difference(lhs, rhs))
      return fail(name, "trial " + std::to_string(t), *diff, B);
  }
  return pass(name, std::to_string(trials) + " expansions, B=" + std::to_string(B), B);
}

CheckResult check_z2x2_zero(std::int64_t p, Weight w, int trials, std::uint64_t seed, std::int64_t compare_at) {
  const std::string name = "Z2*X2 = 0 mod p, p=" + std::to_string(p) + ", " + wname(w);
  const ScalarCtx ctx(p, 1);
  const std::int64_t B = p * p * compare_at;
  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    auto f = std::make_shared<RandomExpansion>(ctx, w, B, rng());
    const SiegelExpansion r = materialize(*apply_lazy(Op::Z2, apply_lazy(Op::X2, f)));
    if (!r.is_zero()) {
      const auto& [q, v] = *r.coeffs().begin();
      return fail(name, "trial " + std::to_string(t), "at " + to_string(q) + ": " + v.to_string(), B);
    }
  }
  return pass(name, std::to_string(trials) + " expansions, B=" + std::to_string(B), B);
}

CheckResult check_q2_formal(std::int64_t p, int j) {
  const Weight w{j, 2};
  const std::string name = "Q2 integral and reduces mod p, p=" + std::to_string(p) + ", " + wname(w);
  const ScalarCtx target(p, 1);
  const Simplified s = simplify_expr(build_expr("Q2", w, target));
  if (!s.min_valuation || *s.min_valuation < 0)
    return fail(name, "simplified Q2 = " + s.expr.to_string(),
                "minimum valuation " + (s.min_valuation ? std::to_string(*s.min_valuation) : "none"));
  std::map<Word, std::int64_t> reduced;
  for (const auto& [word, c] : s.expr.terms())
    if (const auto r = c.residue_mod(target); r != 0) reduced[word] = r;
  std::map<Word, std::int64_t> expected{{Word{Op::Z2}, 1}};
  if (j == 2) expected[Word{Op::X2}] = 1;
  std::ostringstream got;
  for (const auto& [word, c] : reduced) got << c << "*" << word_to_string(word) << " ";
  if (reduced != expected) return fail(name, "simplified Q2 = " + s.expr.to_string(), "mod p: " + got.str());
  return pass(name, "Q2 = " + s.expr.to_string() + ", mod p: " + got.str());
}

CheckResult check_q2_numeric(std::int64_t p, int j, int trials, std::uint64_t seed, std::int64_t compare_at) {
  const Weight w{j, 2};
  const std::string name = "Q2 F = " + std::string(j == 2 ? "(Z2+X2) F" : "Z2 F") + " mod p, p=" +
                           std::to_string(p) + ", " + wname(w);
  const ScalarCtx ctx(p, 1);
  const std::int64_t B = p * p * compare_at;
  const OperatorExpr q2 = build_expr("Q2", w, ctx);
  const OperatorExpr ref = parse_expr(j == 2 ? "Z2 + X2" : "Z2", w, ctx);
  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    SourcePtr f = std::make_shared<RandomExpansion>(ctx, w, B, rng());
    const SiegelExpansion lhs = materialize(*evaluate_lazy(q2, f)).truncated(compare_at);
    const SiegelExpansion rhs = materialize(*evaluate_lazy(ref, f)).truncated(compare_at);
    if (auto diff = first_difference(lhs, rhs)) return fail(name, "trial " + std::to_string(t), *diff, B);
  }
  return pass(name, std::to_string(trials) + " expansions, B=" + std::to_string(B), B);
}

CheckResult check_elliptic_uv(std::int64_t p, int trials, std::uint64_t seed) {
  const std::string name = "U*V = Id on one-variable expansions, p=" + std::to_string(p);
  const ScalarCtx ctx(p, 2);
  const std::int64_t B = 60;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> coef(0, ctx.modulus() - 1);
  for (int t = 0; t < trials; ++t) {
    EllipticExpansion f(ctx, 2 + static_cast<int>(rng() % 10), coef(rng), B);
    for (std::int64_t n = 0; n <= B; ++n) f.set(n, coef(rng));
    const EllipticExpansion uv = elliptic_ops(EllipticOp::U, elliptic_ops(EllipticOp::V, f));
    if (!(uv == f)) {
      for (std::int64_t n = 0; n <= B; ++n)
        if (uv[n] != f[n])
          return fail(name, "trial " + std::to_string(t),
                      "a_" + std::to_string(n) + ": " + std::to_string(uv[n]) + " vs " + std::to_string(f[n]), B);
      return fail(name, "trial " + std::to_string(t), "metadata differs", B);
    }
  }
  return pass(name, std::to_string(trials) + " expansions, B=" + std::to_string(B), B);
}

// --- binary quadratic forms ------------------------------------------------

CheckResult check_neighbor_laws(std::int64_t p, std::int64_t max_disc) {
  const std::string name = "neighbour count and symmetry laws, p=" + std::to_string(p);
  std::size_t forms = 0;
  for (std::int64_t d = -3; d >= -max_disc; --d) {
    if (((d % 4) + 4) % 4 > 1) continue;
    for (const BQF& q : reduced_forms_of_discriminant(d)) {
      ++forms;
      const auto cls = classify_form(q, p);
      const auto nb = neighbors(q, p);
      const std::size_t expected =
          cls.p_primitive ? static_cast<std::size_t>(1 + *cls.legendre()) : static_cast<std::size_t>(p + 1);
      if (nb.size() != expected)
        return fail(name, "count law", to_string(q) + " has " + std::to_string(nb.size()) + " neighbours, expected " +
                                           std::to_string(expected));
      const BQF home = reduce_form(q).reduced;
      for (const auto& n : nb) {
        if (!(act(n.mat, n.form) == std::optional<BQF>(q)))
          return fail(name, "witness", to_string(q) + ": M.P != Q for P=" + to_string(n.form));
        bool found = false;
        for (const auto& back : neighbors(n.form, p))
          if (reduce_form(back.form).reduced == home) found = true;
        if (!found)
          return fail(name, "symmetry law", "[" + to_string(q) + "] not among the neighbours of " + to_string(n.form));
      }
    }
  }
  return pass(name, std::to_string(forms) + " reduced forms with |D| <= " + std::to_string(max_disc));
}

CheckResult check_orbit_cycles(std::int64_t p, int count, std::uint64_t seed) {
  const std::string name = "orbit cycles A Q A^T = p^s Q, p=" + std::to_string(p);
  std::vector<BQF> pool;
  for (const BQF& q : split_forms(p, 1000))
    if (orbit_fits(p, q.discriminant())) pool.push_back(q);
  std::mt19937_64 rng(seed);
  std::shuffle(pool.begin(), pool.end(), rng);
  if (static_cast<int>(pool.size()) > count) pool.resize(static_cast<std::size_t>(count));
  int max_s = 0;
  for (const BQF& q : pool) {
    const OrbitCycle oc = orbit_cycle(q, p);
    std::int64_t ps = 1;
    for (int i = 0; i < oc.length; ++i) ps *= p;
    const auto h = static_cast<int>(reduced_forms_of_discriminant(q.discriminant()).size());
    for (const GL2Mat* a : {&oc.forward, &oc.backward}) {
      if (!(congruence(*a, q) == q.scaled(ps)) || a->det() != ps)
        return fail(name, "identity", to_string(q) + " s=" + std::to_string(oc.length));
    }
    if (oc.length <= 0 || oc.length > h)
      return fail(name, "length bound", to_string(q) + " s=" + std::to_string(oc.length) + " h=" + std::to_string(h));
    max_s = std::max(max_s, oc.length);
  }
  return pass(name, std::to_string(pool.size()) + " forms, max s=" + std::to_string(max_s));
}

// --- contraction -----------------------------------------------------------

CheckResult check_contraction_anchor(std::int64_t p, int m, int trials, std::uint64_t seed) {
  const std::string name = "con(Q (x) Q^vee) = r^2 - 4mn, p=" + std::to_string(p) + ", m=" + std::to_string(m);
  const ScalarCtx ctx(p, m);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> coef(-1000, 1000);
  for (int t = 0; t < trials; ++t) {
    const BQF q{coef(rng), coef(rng), coef(rng)};
    const SymVector c = contract(SymVector::from_form(ctx, q), DualQuadric::of(q));
    if (c.degree() != 0 || c[0] != ctx.reduce(q.discriminant()))
      return fail(name, "trial " + std::to_string(t), to_string(q) + ": " + c.to_string());
  }
  return pass(name, std::to_string(trials) + " forms");
}

CheckResult check_kernel_shadow(std::int64_t p, int j, std::int64_t max_disc) {
  return kernel_scan("contraction kills rho(A)x for A Q A^T = 0 and Q A^T = adj(A) Q", p, j, max_disc,
                     KernelCondition::Shadow);
}

CheckResult check_kernel_isotropic_only(std::int64_t p, int j, std::int64_t max_disc) {
  return kernel_scan("contraction kills rho(A)x for all rank <= 1 A with A Q A^T = 0", p, j, max_disc,
                     KernelCondition::IsotropicOnly);
}

CheckResult check_kernel_orbit(std::int64_t p, int j, std::int64_t max_disc) {
  const std::string name = "contraction kills rho(A)x for orbit matrices A, B mod p";
  std::size_t tested = 0;
  for (const BQF& q : split_forms(p, max_disc)) {
    if (!orbit_fits(p, q.discriminant())) continue;
    const OrbitCycle oc = orbit_cycle(q, p);
    for (const GL2Mat* a : {&oc.forward, &oc.backward}) {
      const M2 abar{mod(a->a(), p), mod(a->b(), p), mod(a->c(), p), mod(a->d(), p)};
      ++tested;
      if (auto v = kernel_violation(abar, q, j - 2, p))
        return fail(name, "p=" + std::to_string(p) + " j=" + std::to_string(j), *v);
    }
  }
  return pass(name, "p=" + std::to_string(p) + " j=" + std::to_string(j) + ", " + std::to_string(tested) + " matrices");
}

// --- root data -------------------------------------------------------------

CheckResult check_dot_actions(int trials, std::uint64_t seed) {
  const std::string name = "dot actions of w1, w2, w3 shifted by (t,t)";
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> dist(-100, 100);
  for (int i = 0; i < trials; ++i) {
    const std::int64_t al = dist(rng), be = dist(rng), t = dist(rng);
    const WeightGSp4 mu{al, be, Rational(dist(rng), 2)};
    const std::array<std::pair<WeylElement, std::pair<std::int64_t, std::int64_t>>, 3> cases{{
        {WeylElement::W1Tilde, {al - t, -be - 2 - t}},
        {WeylElement::W2Tilde, {be - 1 - t, -al - 3 - t}},
        {WeylElement::W3Tilde, {-be - 3 - t, -al - 3 - t}},
    }};
    for (const auto& [w, want] : cases) {
      const WeightGSp4 r = weyl_act(w, mu, true);
      if (r.a - t != want.first || r.b - t != want.second)
        return fail(name, "trial " + std::to_string(i),
                    "mu=" + to_string(mu) + " t=" + std::to_string(t) + " gave " + to_string(r));
    }
  }
  return pass(name, std::to_string(trials) + " random (alpha, beta, t)");
}

CheckResult check_lds_families(std::int64_t lo, std::int64_t hi) {
  const std::string name = "LDS weights are exactly the three families";
  std::size_t lds = 0;
  for (std::int64_t a = lo; a <= hi; ++a)
    for (std::int64_t b = lo; b <= hi; ++b) {
      const bool family = (b == 2 && a >= 2) || (b == 3 - a && a >= 2) || (a == 1 && b <= 1);
      const bool is_lds = chamber_classify(a, b).cls == WeightClass::LimitOfDiscreteSeries;
      if (family != is_lds)
        return fail(name, "scan", "(" + std::to_string(a) + "," + std::to_string(b) + ") LDS=" +
                                      (is_lds ? "yes" : "no") + " family=" + (family ? "yes" : "no"));
      lds += is_lds;
    }
  return pass(name, std::to_string(lds) + " LDS weights in [" + std::to_string(lo) + "," + std::to_string(hi) + "]^2");
}

CheckResult check_serre_involution(std::int64_t lo, std::int64_t hi) {
  const std::string name = "Serre duality is an involution fixing exactly (a,3-a)";
  for (std::int64_t a = lo; a <= hi; ++a)
    for (std::int64_t b = lo; b <= hi; ++b) {
      const auto d = serre_dual_weight(a, b);
      const auto dd = serre_dual_weight(d.first, d.second);
      const bool fixed = d == std::pair{a, b};
      if (dd != std::pair{a, b} || fixed != (b == 3 - a))
        return fail(name, "scan", "(" + std::to_string(a) + "," + std::to_string(b) + ")");
    }
  return pass(name, "scan [" + std::to_string(lo) + "," + std::to_string(hi) + "]^2");
}

CheckResult check_weyl_cones(std::int64_t range) {
  const std::string name = "Weyl representatives: dominant cones and chambers C_i = w_i(C_0)";
  const WeylElement ws[4] = {WeylElement::W0Tilde, WeylElement::W1Tilde, WeylElement::W2Tilde, WeylElement::W3Tilde};
  for (std::int64_t a = 0; a <= range; ++a)
    for (std::int64_t b = 0; b <= a; ++b)
      for (int i = 1; i < 4; ++i) {
        const WeightGSp4 r = weyl_act(ws[i], {a, b, 0});
        if (r.a < r.b)
          return fail(name, "dominance", "w" + std::to_string(i) + "(" + std::to_string(a) + "," + std::to_string(b) + ")");
      }
  for (int i = 0; i < 4; ++i) {
    std::set<std::pair<std::int64_t, std::int64_t>> image;
    for (std::int64_t x = 0; x <= 2 * range; ++x)
      for (std::int64_t y = 0; y <= x; ++y) {
        const WeightGSp4 r = weyl_act(ws[i], {x, y, 0});
        image.insert({r.a, r.b});
      }
    for (std::int64_t x = -range; x <= range; ++x)
      for (std::int64_t y = -range; y <= range; ++y)
        if (in_chamber(i, x, y) != (image.count({x, y}) > 0))
          return fail(name, "chamber C" + std::to_string(i), "(" + std::to_string(x) + "," + std::to_string(y) + ")");
  }
  return pass(name, "scan |a|,|b| <= " + std::to_string(range));
}

CheckResult check_hecke_ordinary(std::int64_t p, int trials, std::uint64_t seed) {
  const std::string name = "ordinary Hecke polynomials: slopes and root symmetry, p=" + std::to_string(p);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> ab(2, 7), unit(1, 50);
  auto draw_unit = [&] {
    std::int64_t u;
    do u = unit(rng) * ((rng() & 1) ? 1 : -1);
    while (u % p == 0);
    return BigInt(u);
  };
  auto pw = [&](std::int64_t e) {
    BigInt r = 1;
    for (std::int64_t i = 0; i < e; ++i) r *= p;
    return r;
  };
  for (int t = 0; t < trials; ++t) {
    std::int64_t a = ab(rng), b = ab(rng);
    if (a < b) std::swap(a, b);
    if (a + b < 6) a = 6 - b;
    const BigInt u1 = draw_unit(), u2 = draw_unit(), c = draw_unit();
    const std::vector<BigInt> roots{u1, u2 * pw(b - 2), u1 * c * pw(a - 1), u2 * c * pw(a + b - 3)};
    const BigInt x = p, S = u1 * u2 * c * pw(a + b - 6);
    const std::string tag = "(a,b)=(" + std::to_string(a) + "," + std::to_string(b) + ")";
    const auto poly = poly_from_roots(roots);
    const auto slopes = newton_slopes(poly, p);
    const auto want = ordinary_root_valuations(a, b);
    std::vector<Rational> want_r(want.begin(), want.end());
    std::sort(want_r.begin(), want_r.end());
    if (slopes != want_r) return fail(name, "slopes", tag);
    std::multiset<BigInt> rs(roots.begin(), roots.end()), flipped;
    for (const auto& r : roots) {
      if ((x * x * x * S) % r != 0) return fail(name, "symmetry", tag);
      flipped.insert(x * x * x * S / r);
    }
    if (rs != flipped) return fail(name, "symmetry", tag);
    const BigInt t1 = poly[1] * -1, rest = poly[2] - (x * x * x + x) * S;
    if (rest % x == 0) {
      const auto hp = hecke_poly(x, t1, rest / x, S);
      if (!std::equal(hp.begin(), hp.end(), poly.begin())) return fail(name, "coefficients", tag);
    }
    if (poly[3] != x * x * x * S * poly[1] || poly[4] != (x * x * x * S) * (x * x * x * S))
      return fail(name, "coefficient symmetry", tag);
  }
  return pass(name, std::to_string(trials) + " constructed ordinary factorizations");
}

CheckResult check_tau_walls(std::int64_t lo, std::int64_t hi) {
  const std::string name = "tau strictly decreasing off the wall b = 2 (a >= b >= 2)";
  for (std::int64_t a = std::max<std::int64_t>(lo, 2); a <= hi; ++a)
    for (std::int64_t b = 2; b <= a; ++b) {
      const auto tau = infinitesimal_char(a, b, a + b - 6);
      const bool strict = tau[0] > tau[1] && tau[1] > tau[2] && tau[2] > tau[3];
      const bool lds = chamber_classify(a, b).cls == WeightClass::LimitOfDiscreteSeries;
      if (strict != (b > 2) || strict == lds || tau[0] + tau[3] != tau[1] + tau[2])
        return fail(name, "scan", "(" + std::to_string(a) + "," + std::to_string(b) + ")");
    }
  return pass(name, "scan a,b in [2," + std::to_string(hi) + "]");
}

CheckResult check_lan_suh_monotone(std::int64_t p, std::int64_t range) {
  const std::string name = "vanishing rules grow along (a,b) -> (a+1,b+1), p=" + std::to_string(p);
  for (std::int64_t a = -range; a <= range; ++a)
    for (std::int64_t b = -range; b <= range; ++b) {
      const auto s = lan_suh_vanishing(a, b, p), t = lan_suh_vanishing(a + 1, b + 1, p);
      if (!std::includes(t.begin(), t.end(), s.begin(), s.end()))
        return fail(name, "scan", "(" + std::to_string(a) + "," + std::to_string(b) + ")");
      // degrees are upward closed in {1,2,3}
      for (int i : s)
        for (int k = i; k <= 3; ++k)
          if (!s.count(k)) return fail(name, "closure", "(" + std::to_string(a) + "," + std::to_string(b) + ")");
    }
  for (std::int64_t a = 4; a <= p; ++a) {
    const auto s = lan_suh_vanishing(a, 2, p);
    if (!s.count(2) || !s.count(3))
      return fail(name, "(a,2) with 4 <= a <= p", "(" + std::to_string(a) + ",2)");
  }
  return pass(name, "scan |a|,|b| <= " + std::to_string(range));
}

CheckResult check_selmer_ledger(int range) {
  const std::string name = "tangent dimension equals the local ledger";
  for (int dual = 0; dual <= range; ++dual)
    for (int nq = 0; nq <= range; ++nq)
      if (gw_tangent_dim(dual, nq) != gw_tangent_dim_ledger(dual, nq))
        return fail(name, "scan", "dual=" + std::to_string(dual) + " nQ=" + std::to_string(nq));
  if (LocalSelmerData::fl_term() != LocalSelmerData::at_p) return fail(name, "local term at p", "2+3-2-0 != 3");
  return pass(name, "dual, nQ in [0," + std::to_string(range) + "]");
}

// --- commutative algebra ---------------------------------------------------

CheckResult check_defect_examples(std::int64_t p) {
  const std::string name = "defect examples, p=" + std::to_string(p);
  struct Case {
    const char* label;
    GroupRingModule m;
    std::size_t t0, t1;
  };
  const std::vector<Case> cases{
      {"S over k[Z/p]", regular_module(p, 1, 1), 1, 0},
      {"k over k[Z/p]", trivial_module(p, 1, 1, 1), 1, 1},
      {"k over k[(Z/p)^2]", trivial_module(p, 1, 2, 1), 1, 2},
  };
  for (const auto& c : cases) {
    const TorDims t = tor_dims(c.m);
    if (t.t0 != c.t0 || t.t1 != c.t1)
      return fail(name, c.label, "(t0,t1)=(" + std::to_string(t.t0) + "," + std::to_string(t.t1) + ")");
  }
  const SquarePresentation sp = square_presentation(trivial_module(p, 1, 1, 1));
  const PresentationCheck pc = check_presentation(trivial_module(p, 1, 1, 1), sp);
  // the relation generates the maximal ideal: zero constant term, nonzero t coefficient
  if (sp.d != 1 || !pc.ok() || pc.cokernel_dim != 1 || sp.relations[0][0][0] != 0 || sp.relations[0][0][1] == 0)
    return fail(name, "square presentation of k", "relation does not generate (t)");
  return pass(name, "(1,0), (1,1), (1,2) and relation (t)");
}

CheckResult check_defect_additivity(std::int64_t p, int trials, std::uint64_t seed) {
  const std::string name = "defect additivity on direct sums, p=" + std::to_string(p);
  std::mt19937_64 rng(seed);
  const int q = p <= 3 ? 2 : 1;
  auto pick = [&]() -> GroupRingModule {
    switch (rng() % 3) {
      case 0: return regular_module(p, 1, q);
      case 1: return trivial_module(p, 1, q, 1 + rng() % 2);
      default: return random_balanced_module(p, 1, q, 12, rng);
    }
  };
  for (int t = 0; t < trials; ++t) {
    const GroupRingModule a = pick(), b = pick();
    const auto da = defect_balanced(a).d, db = defect_balanced(b).d;
    const auto dab = defect_balanced(change_basis(direct_sum(a, b), random_invertible(p, a.dim() + b.dim(), rng))).d;
    if (dab != da + db)
      return fail(name, "trial " + std::to_string(t),
                  std::to_string(dab) + " != " + std::to_string(da) + " + " + std::to_string(db));
  }
  return pass(name, std::to_string(trials) + " pairs");
}

CheckResult check_square_presentations(std::int64_t p, int trials, std::uint64_t seed, std::size_t max_dim) {
  const std::string name = "square presentations of balanced modules, p=" + std::to_string(p);
  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    const int q = (static_cast<std::size_t>(p * p) <= max_dim && (rng() & 1)) ? 2 : 1;
    const GroupRingModule m = random_balanced_module(p, 1, q, max_dim, rng);
    const SquarePresentation sp = square_presentation(m);
    const PresentationCheck pc = check_presentation(m, sp);
    if (!pc.ok() || pc.cokernel_dim != m.dim())
      return fail(name, "trial " + std::to_string(t),
                  "dim=" + std::to_string(m.dim()) + " q=" + std::to_string(q) + " cokernel=" +
                      std::to_string(pc.cokernel_dim));
  }
  return pass(name, std::to_string(trials) + " random balanced modules, dim <= " + std::to_string(max_dim));
}

CheckResult check_idempotents(std::int64_t p, int m, int trials, std::uint64_t seed) {
  const std::string name = "ordinary idempotents, p=" + std::to_string(p) + ", m=" + std::to_string(m);
  std::int64_t pm = 1;
  for (int i = 0; i < m; ++i) pm *= p;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> coef(0, pm - 1);
  for (int t = 0; t < trials; ++t) {
    const std::size_t n = 1 + rng() % 5;
    Matrix r(pm, n, n), d(pm, n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) r.set(i, k, coef(rng));
      d.set(i, i, (rng() % 3 == 0) ? p * coef(rng) : coef(rng));
    }
    const Matrix a = r * d;
    const IdempotentResult e = ordinary_idempotent(a);
    const IdempotentCertificate c = certify_idempotent(a, e.e, p);
    if (!c.ok()) return fail(name, "trial " + std::to_string(t), "A=" + a.to_string());
  }
  return pass(name, std::to_string(trials) + " random matrices");
}

// --- suites ----------------------------------------------------------------

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"operators", "bqf", "contraction", "rootdata", "commalg", "all"};
  return names;
}

Report run_suite(const std::string& name, const SuiteOptions& opt) {
  if (std::find(suite_names().begin(), suite_names().end(), name) == suite_names().end())
    throw std::invalid_argument("unknown suite '" + name + "'");
  Report rep{name, opt.p, opt.trials, opt.seed, {}};
  const std::int64_t p = opt.p;
  const int n = opt.trials;
  const std::uint64_t s = opt.seed;
  auto add = [&](CheckResult c) { rep.checks.push_back(std::move(c)); };
  auto want = [&](const char* suite) { return name == "all" || name == suite; };
  if (want("operators")) {
    for (Weight w : {Weight{2, 2}, Weight{4, 2}, Weight{6, 2}}) {
      add(check_z2_equals_uz(p, w, n, s));
      add(check_z2x2_zero(p, w, n, s + 1));
    }
    for (int j = 2; j <= p - 2; ++j) {
      add(check_q2_formal(p, j));
      add(check_q2_numeric(p, j, std::max(1, n / 4), s + 2));
    }
    add(check_elliptic_uv(p, n, s + 3));
  }
  if (want("bqf")) {
    add(check_neighbor_laws(p, 500));
    add(check_orbit_cycles(p, n, s));
  }
  if (want("contraction")) {
    if (p < 3) {
      add(fail("contraction", "needs p >= 3", "p=" + std::to_string(p)));
    } else {
      add(check_contraction_anchor(p, 1, 10 * n, s));
      add(check_contraction_anchor(p, 2, 10 * n, s + 1));
      for (int j : {4, 6})
        if (j - 2 < p) {
          add(check_kernel_shadow(p, j, 100));
          add(check_kernel_orbit(p, j, 300));
        }
    }
  }
  if (want("rootdata")) {
    add(check_dot_actions(n, s));
    add(check_lds_families(-10, 10));
    add(check_serre_involution(-10, 10));
    add(check_weyl_cones(20));
    add(check_hecke_ordinary(p, n, s));
    add(check_tau_walls(2, 10));
    add(check_lan_suh_monotone(p, 20));
    add(check_selmer_ledger(10));
  }
  if (want("commalg")) {
    add(check_defect_examples(p));
    add(check_defect_additivity(p, n, s));
    add(check_square_presentations(p, n, s, 12));
    for (int m = 1; m <= 3; ++m) add(check_idempotents(p, m, n, s + static_cast<std::uint64_t>(m)));
  }
  return rep;
}

}  // namespace gsp4
