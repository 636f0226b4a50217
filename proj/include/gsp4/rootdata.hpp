#pragma once

// Weight-lattice combinatorics for GSp4 with weights written (a, b; c).

#include <array>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

namespace gsp4 {

using Rational = boost::rational<std::int64_t>;
using BigInt = boost::multiprecision::cpp_int;

struct WeightGSp4 {
  std::int64_t a = 0;
  std::int64_t b = 0;
  Rational c = 0;

  bool operator==(const WeightGSp4&) const = default;
  WeightGSp4 operator+(const WeightGSp4& o) const { return {a + o.a, b + o.b, c + o.c}; }
  WeightGSp4 operator-(const WeightGSp4& o) const { return {a - o.a, b - o.b, c - o.c}; }
};

std::string to_string(const WeightGSp4& w);

struct Coweight {
  std::int64_t alpha = 0;
  std::int64_t beta = 0;
  std::int64_t gamma = 0;
};

/// Half-sum of positive roots (2, 1; -3/2).
WeightGSp4 rho();

/// Simple and positive roots alpha_1 = (1,-1;0), alpha_2 = (0,2;-1), and the
/// remaining positive roots alpha_3 = (1,1;-1), alpha_4 = (2,0;-1).
WeightGSp4 root(int i);
/// Coroots alpha_1^v = (1,-1;0), alpha_2^v = (0,1;0), alpha_3^v = (1,1;0),
/// alpha_4^v = (1,0;0).
Coweight coroot(int i);

Rational pairing(const WeightGSp4& w, const Coweight& c);

enum class WeylElement { W0Tilde, W1Tilde, W2Tilde, W3Tilde, Longest };

/// Linear action, or the dot action w(lambda + rho) - rho when dot is set.
WeightGSp4 weyl_act(WeylElement w, const WeightGSp4& lambda, bool dot = false);

/// Closed chambers C0..C3 in the (a, b) plane.
bool in_chamber(int i, std::int64_t x, std::int64_t y);
bool in_chamber_interior(int i, std::int64_t x, std::int64_t y);

enum class WeightClass { Regular, LimitOfDiscreteSeries, Degenerate };

std::string to_string(WeightClass c);

struct ChamberInfo {
  std::vector<int> chambers;  // indices i with (a-1, b-2) in C_i
  WeightClass cls = WeightClass::Degenerate;
};

/// Chamber membership of (a-1, b-2): regular when it lies in the interior of
/// exactly one chamber, limit of discrete series when it lies in exactly
/// two, degenerate otherwise.
ChamberInfo chamber_classify(std::int64_t a, std::int64_t b);

/// Which of the three limit of discrete series families (1, 2, 3) contain
/// (a, b): (a,2) with a >= 2, (a,3-a) with a >= 2, (1,b) with b <= 1.
std::vector<int> lds_families(std::int64_t a, std::int64_t b);

/// Degrees i for which H^i of the subcanonical bundle of weight (a,b) over
/// k vanishes by the three mod-p vanishing rules.
std::set<int> lan_suh_vanishing(std::int64_t a, std::int64_t b, std::int64_t p);

std::pair<std::int64_t, std::int64_t> serre_dual_weight(std::int64_t a, std::int64_t b);

/// Coefficients of X^4 - t1 X^3 + (x t2 + (x^3 + x) s) X^2 - x^3 s t1 X + x^6 s^2,
/// leading coefficient first.
std::array<BigInt, 5> hecke_poly(const BigInt& x, const BigInt& t1, const BigInt& t2, const BigInt& s);

/// Monic polynomial with the given roots, leading coefficient first.
std::vector<BigInt> poly_from_roots(const std::vector<BigInt>& roots);

/// p-adic valuations of the roots of a polynomial (leading coefficient
/// first, nonzero constant term), from its Newton polygon, ascending.
std::vector<Rational> newton_slopes(const std::vector<BigInt>& coeffs, std::int64_t p);

/// (0, b-2, a-1, a+b-3).  Requires a >= b >= 2.
std::array<std::int64_t, 4> ordinary_root_valuations(std::int64_t a, std::int64_t b);

/// ((a+b-3-w)/2, (a-b+1-w)/2, (-a+b-1-w)/2, (-a-b+3-w)/2).
std::array<Rational, 4> infinitesimal_char(std::int64_t a, std::int64_t b, std::int64_t w);

/// Local terms of the tangent-space count: 3 at p, 1 at each auxiliary
/// prime, 0 at other finite places, and h^0 = 4 at infinity.
struct LocalSelmerData {
  static constexpr int at_p = 3;
  static constexpr int at_aux = 1;
  static constexpr int elsewhere = 0;
  static constexpr int at_infinity = 4;
  /// 2 + h^1(u) - h^0(b/u) - h^0(u) with h^1(u) = 3, h^0(b/u) = 2, h^0(u) = 0.
  static constexpr int fl_term() { return 2 + 3 - 2 - 0; }
};

/// dual_dim - 1 + nQ.
std::int64_t gw_tangent_dim(std::int64_t dual_dim, std::int64_t nQ);
/// The same number summed from the local terms.
std::int64_t gw_tangent_dim_ledger(std::int64_t dual_dim, std::int64_t nQ);

}  // namespace gsp4
