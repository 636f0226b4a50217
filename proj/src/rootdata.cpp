#include "gsp4/rootdata.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace gsp4 {

std::string to_string(const WeightGSp4& w) {
  std::ostringstream os;
  os << "(" << w.a << "," << w.b << ";" << w.c.numerator();
  if (w.c.denominator() != 1) os << "/" << w.c.denominator();
  os << ")";
  return os.str();
}

WeightGSp4 rho() { return {2, 1, Rational(-3, 2)}; }

WeightGSp4 root(int i) {
  switch (i) {
    case 1: return {1, -1, 0};
    case 2: return {0, 2, -1};
    case 3: return {1, 1, -1};
    case 4: return {2, 0, -1};
  }
  throw std::invalid_argument("root: index must be 1..4");
}

Coweight coroot(int i) {
  switch (i) {
    case 1: return {1, -1, 0};
    case 2: return {0, 1, 0};
    case 3: return {1, 1, 0};
    case 4: return {1, 0, 0};
  }
  throw std::invalid_argument("coroot: index must be 1..4");
}

Rational pairing(const WeightGSp4& w, const Coweight& c) {
  return Rational(w.a * c.alpha + w.b * c.beta) + w.c * c.gamma;
}

namespace {

WeightGSp4 linear(WeylElement w, const WeightGSp4& l) {
  switch (w) {
    case WeylElement::W0Tilde: return l;
    case WeylElement::W1Tilde: return {l.a, -l.b, l.c + l.b};
    case WeylElement::W2Tilde: return {l.b, -l.a, l.c + l.a};
    case WeylElement::W3Tilde: return {-l.b, -l.a, l.c + l.a + l.b};
    case WeylElement::Longest: return {l.b, l.a, l.c};
  }
  throw std::invalid_argument("weyl_act: unknown element");
}

}  // namespace

WeightGSp4 weyl_act(WeylElement w, const WeightGSp4& lambda, bool dot) {
  if (!dot) return linear(w, lambda);
  return linear(w, lambda + rho()) - rho();
}

bool in_chamber(int i, std::int64_t x, std::int64_t y) {
  switch (i) {
    case 0: return x >= y && y >= 0;
    case 1: return x >= -y && -y >= 0;
    case 2: return -y >= x && x >= 0;
    case 3: return -y >= -x && -x >= 0;
  }
  throw std::invalid_argument("in_chamber: index must be 0..3");
}

bool in_chamber_interior(int i, std::int64_t x, std::int64_t y) {
  switch (i) {
    case 0: return x > y && y > 0;
    case 1: return x > -y && -y > 0;
    case 2: return -y > x && x > 0;
    case 3: return -y > -x && -x > 0;
  }
  throw std::invalid_argument("in_chamber_interior: index must be 0..3");
}

std::string to_string(WeightClass c) {
  switch (c) {
    case WeightClass::Regular: return "regular";
    case WeightClass::LimitOfDiscreteSeries: return "LDS";
    case WeightClass::Degenerate: return "degenerate";
  }
  return "?";
}

ChamberInfo chamber_classify(std::int64_t a, std::int64_t b) {
  const std::int64_t x = a - 1, y = b - 2;
  ChamberInfo info;
  for (int i = 0; i < 4; ++i)
    if (in_chamber(i, x, y)) info.chambers.push_back(i);
  if (info.chambers.size() == 1 && in_chamber_interior(info.chambers[0], x, y))
    info.cls = WeightClass::Regular;
  else if (info.chambers.size() == 2)
    info.cls = WeightClass::LimitOfDiscreteSeries;
  return info;
}

std::vector<int> lds_families(std::int64_t a, std::int64_t b) {
  std::vector<int> out;
  if (b == 2 && a >= 2) out.push_back(1);
  if (b == 3 - a && a >= 2) out.push_back(2);
  if (a == 1 && b <= 1) out.push_back(3);
  return out;
}

std::set<int> lan_suh_vanishing(std::int64_t a, std::int64_t b, std::int64_t p) {
  std::set<int> out;
  const std::int64_t diff = a - b;
  if (a >= 3 && 2 <= diff && diff <= p - 2) out.insert(3);
  if (a + b >= 6 && 2 <= diff && diff <= p - 2) out.insert({2, 3});
  if (b >= 4 && 0 <= diff && diff <= p - 4) out.insert({1, 2, 3});
  return out;
}

std::pair<std::int64_t, std::int64_t> serre_dual_weight(std::int64_t a, std::int64_t b) {
  return {3 - b, 3 - a};
}

std::array<BigInt, 5> hecke_poly(const BigInt& x, const BigInt& t1, const BigInt& t2, const BigInt& s) {
  const BigInt x3 = x * x * x;
  return {BigInt(1), -t1, x * t2 + (x3 + x) * s, -x3 * s * t1, x3 * x3 * s * s};
}

std::vector<BigInt> poly_from_roots(const std::vector<BigInt>& roots) {
  std::vector<BigInt> c{BigInt(1)};
  for (const auto& r : roots) {
    std::vector<BigInt> next(c.size() + 1, BigInt(0));
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i] += c[i];
      next[i + 1] -= r * c[i];
    }
    c = std::move(next);
  }
  return c;
}

std::vector<Rational> newton_slopes(const std::vector<BigInt>& coeffs, std::int64_t p) {
  if (coeffs.size() < 2) return {};
  const std::size_t n = coeffs.size() - 1;
  if (coeffs.back() == 0) throw std::invalid_argument("newton_slopes: zero constant term");
  // points (k, v(a_k)) where a_k is the coefficient of X^k
  std::vector<std::pair<std::int64_t, std::int64_t>> pts;
  for (std::size_t k = 0; k <= n; ++k) {
    BigInt c = coeffs[n - k];
    if (c == 0) continue;
    if (c < 0) c = -c;
    std::int64_t v = 0;
    while (c % p == 0) {
      c /= p;
      ++v;
    }
    pts.emplace_back(static_cast<std::int64_t>(k), v);
  }
  // lower convex hull, left to right
  std::vector<std::pair<std::int64_t, std::int64_t>> hull;
  for (const auto& pt : pts) {
    while (hull.size() >= 2) {
      const auto& o = hull[hull.size() - 2];
      const auto& a = hull.back();
      const std::int64_t cross =
          (a.first - o.first) * (pt.second - o.second) - (a.second - o.second) * (pt.first - o.first);
      if (cross <= 0)
        hull.pop_back();
      else
        break;
    }
    hull.push_back(pt);
  }
  std::vector<Rational> out;
  for (std::size_t i = 1; i < hull.size(); ++i) {
    const std::int64_t dk = hull[i].first - hull[i - 1].first;
    const Rational slope(hull[i].second - hull[i - 1].second, dk);
    for (std::int64_t j = 0; j < dk; ++j) out.push_back(-slope);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::array<std::int64_t, 4> ordinary_root_valuations(std::int64_t a, std::int64_t b) {
  if (!(a >= b && b >= 2)) throw std::invalid_argument("ordinary_root_valuations: need a >= b >= 2");
  return {0, b - 2, a - 1, a + b - 3};
}

std::array<Rational, 4> infinitesimal_char(std::int64_t a, std::int64_t b, std::int64_t w) {
  return {Rational(a + b - 3 - w, 2), Rational(a - b + 1 - w, 2), Rational(-a + b - 1 - w, 2),
          Rational(-a - b + 3 - w, 2)};
}

std::int64_t gw_tangent_dim(std::int64_t dual_dim, std::int64_t nQ) {
  if (dual_dim < 0 || nQ < 0) throw std::invalid_argument("gw_tangent_dim: negative input");
  return dual_dim - 1 + nQ;
}

std::int64_t gw_tangent_dim_ledger(std::int64_t dual_dim, std::int64_t nQ) {
  if (dual_dim < 0 || nQ < 0) throw std::invalid_argument("gw_tangent_dim: negative input");
  // h^0(ad) and h^0(ad(1)) vanish
  return dual_dim + 0 - 0 + LocalSelmerData::at_p + nQ * LocalSelmerData::at_aux -
         LocalSelmerData::at_infinity;
}

}  // namespace gsp4
