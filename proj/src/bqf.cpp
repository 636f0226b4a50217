#include "gsp4/bqf.hpp"

#include <cstdlib>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "gsp4/padic.hpp"

namespace gsp4 {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t mod_p(std::int64_t a, std::int64_t p) {
  std::int64_t r = a % p;
  return r < 0 ? r + p : r;
}

ProjPoint normalize_point(std::int64_t x, std::int64_t y, std::int64_t p) {
  x = mod_p(x, p);
  y = mod_p(y, p);
  if (y != 0) {
    std::int64_t inv = 1;
    while (inv * y % p != 1) ++inv;
    return {x * inv % p, 1};
  }
  return {1, 0};
}

}  // namespace

std::ostream& operator<<(std::ostream& os, const BQF& q) {
  return os << "(" << q.m << "," << q.r << "," << q.n << ")";
}

std::string to_string(const BQF& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

namespace {

// x*y + z*w, throwing instead of wrapping around
std::int64_t dot2(std::int64_t x, std::int64_t y, std::int64_t z, std::int64_t w) {
  std::int64_t a, b, r;
  if (__builtin_mul_overflow(x, y, &a) || __builtin_mul_overflow(z, w, &b) || __builtin_add_overflow(a, b, &r))
    throw std::overflow_error("integer overflow in 2x2 matrix arithmetic");
  return r;
}

std::int64_t checked_mul(std::int64_t x, std::int64_t y) { return dot2(x, y, 0, 0); }

}  // namespace

GL2Mat::GL2Mat(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d)
    : a_(a), b_(b), c_(c), d_(d), det_(dot2(a, d, -b, c)) {
  if (det_ == 0) throw std::invalid_argument("GL2Mat: singular matrix");
}

GL2Mat GL2Mat::inverse_unimodular() const {
  if (det_ == 1) return adjugate();
  if (det_ == -1) return {-d_, b_, c_, -a_};
  throw std::invalid_argument("GL2Mat::inverse_unimodular: determinant is not +-1");
}

GL2Mat operator*(const GL2Mat& x, const GL2Mat& y) {
  return {dot2(x.a_, y.a_, x.b_, y.c_), dot2(x.a_, y.b_, x.b_, y.d_), dot2(x.c_, y.a_, x.d_, y.c_),
          dot2(x.c_, y.b_, x.d_, y.d_)};
}

std::ostream& operator<<(std::ostream& os, const GL2Mat& g) {
  return os << "[[" << g.a() << "," << g.b() << "],[" << g.c() << "," << g.d() << "]]";
}

BQF congruence(const GL2Mat& mat, const BQF& q) {
  const auto a = mat.a(), b = mat.b(), c = mat.c(), d = mat.d();
  auto quad = [](std::int64_t x, std::int64_t y, std::int64_t z, std::int64_t u, std::int64_t v,
                 std::int64_t w) {
    return dot2(checked_mul(x, y), 1, dot2(checked_mul(z, u), 1, checked_mul(v, w), 1), 1);
  };
  return {quad(checked_mul(a, a), q.m, checked_mul(a, b), q.r, checked_mul(b, b), q.n),
          quad(checked_mul(2 * a, c), q.m, dot2(a, d, b, c), q.r, checked_mul(2 * b, d), q.n),
          quad(checked_mul(c, c), q.m, checked_mul(c, d), q.r, checked_mul(d, d), q.n)};
}

std::optional<BQF> act(const GL2Mat& mat, const BQF& q) {
  const BQF raw = congruence(mat, q);
  const auto det = mat.det();
  if (raw.m % det != 0 || raw.r % det != 0 || raw.n % det != 0) return std::nullopt;
  return BQF{raw.m / det, raw.r / det, raw.n / det};
}

std::vector<GL2Mat> coset_reps(std::int64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("coset_reps: p must be prime");
  std::vector<GL2Mat> reps;
  reps.reserve(static_cast<std::size_t>(p + 1));
  // alpha runs over a symmetric residue system so that the neighbours of a
  // form with m, n <= B/p stay inside the box m, n <= B
  const std::int64_t lo = p == 2 ? 0 : -(p - 1) / 2;
  for (std::int64_t alpha = lo; alpha < lo + p; ++alpha) reps.emplace_back(1, 0, alpha, p);
  reps.emplace_back(p, 0, 0, 1);
  return reps;
}

ProjPoint coset_point(const GL2Mat& rep, std::int64_t p) {
  // The zero is J applied to the image line of rep mod p, J(x,y) = (y,-x).
  std::int64_t x = mod_p(rep.a(), p), y = mod_p(rep.c(), p);
  if (x == 0 && y == 0) {
    x = mod_p(rep.b(), p);
    y = mod_p(rep.d(), p);
  }
  if (x == 0 && y == 0) throw std::invalid_argument("coset_point: matrix vanishes mod p");
  return normalize_point(y, -x, p);
}

std::optional<int> FormClassification::legendre() const {
  if (const int* v = std::get_if<int>(&legendre_class)) return *v;
  return std::nullopt;
}

FormClassification classify_form(const BQF& q, std::int64_t p) {
  FormClassification out;
  out.discriminant = q.discriminant();
  out.p_primitive = !q.divisible_by(p);
  if (out.p_primitive)
    out.legendre_class = ScalarCtx(p, 1).legendre(out.discriminant);
  else
    out.legendre_class = PDivisible{};
  return out;
}

std::vector<ProjPoint> zeros_in_P1(const BQF& q, std::int64_t p) {
  std::vector<ProjPoint> out;
  for (std::int64_t x = 0; x < p; ++x)
    if (mod_p(q.evaluate(x, 1), p) == 0) out.push_back({x, 1});
  if (mod_p(q.m, p) == 0) out.push_back({1, 0});
  return out;
}

std::vector<Neighbor> neighbors(const BQF& q, std::int64_t p) {
  std::vector<Neighbor> out;
  for (const auto& rep : coset_reps(p)) {
    if (auto pform = act(rep.adjugate(), q)) out.push_back({*pform, rep});
  }
  return out;
}

bool is_reduced(const BQF& q) {
  if (!q.is_positive_definite()) return false;
  if (std::llabs(q.r) > q.m || q.m > q.n) return false;
  if ((std::llabs(q.r) == q.m || q.m == q.n) && q.r < 0) return false;
  return true;
}

Reduction reduce_form(const BQF& q) {
  if (!q.is_positive_definite())
    throw std::invalid_argument("reduce_form: " + to_string(q) + " is not positive definite");
  const GL2Mat swap(0, 1, -1, 0);
  BQF cur = q;
  GL2Mat g = GL2Mat::identity();
  auto apply = [&](const GL2Mat& step) {
    cur = congruence(step, cur);
    g = step * g;
  };
  for (;;) {
    if (cur.m > cur.n) {
      apply(swap);
      continue;
    }
    if (std::llabs(cur.r) > cur.m) {
      apply(GL2Mat(1, 0, floor_div(cur.m - cur.r, 2 * cur.m), 1));
      continue;
    }
    break;
  }
  if (cur.r < 0) {
    if (-cur.r == cur.m)
      apply(GL2Mat(1, 0, 1, 1));
    else if (cur.m == cur.n)
      apply(swap);
  }
  return {cur, g};
}

std::vector<BQF> reduced_forms_of_discriminant(std::int64_t d) {
  if (d >= 0 || mod_p(d, 4) > 1)
    throw std::invalid_argument("reduced_forms_of_discriminant: need d < 0 with d = 0,1 mod 4");
  std::vector<BQF> out;
  // reduced forms satisfy 3m^2 <= |d|
  for (std::int64_t m = 1; 3 * m * m <= -d; ++m) {
    for (std::int64_t r = -m; r <= m; ++r) {
      const std::int64_t num = r * r - d;
      if (num % (4 * m) != 0) continue;
      BQF f{m, r, num / (4 * m)};
      if (is_reduced(f)) out.push_back(f);
    }
  }
  return out;
}

std::int64_t content(const BQF& q) {
  return std::gcd(std::gcd(std::llabs(q.m), std::llabs(q.r)), std::llabs(q.n));
}

namespace {

// One direction of the cycle: first_choice picks which of the two neighbours
// of Q0 starts the walk.
struct Walk {
  int length;
  GL2Mat mat;
  std::vector<BQF> classes;
};

bool zero_mod(const GL2Mat& g, std::int64_t p) {
  return mod_p(g.a(), p) == 0 && mod_p(g.b(), p) == 0 && mod_p(g.c(), p) == 0 &&
         mod_p(g.d(), p) == 0;
}

Walk walk_cycle(const BQF& q0, std::int64_t p, std::size_t first_choice, int max_steps) {
  const Reduction start = reduce_form(q0);
  BQF cur = q0;
  GL2Mat total = GL2Mat::identity();
  std::optional<GL2Mat> last_step;
  std::vector<BQF> classes{start.reduced};
  for (int step = 1; step <= max_steps; ++step) {
    std::vector<GL2Mat> forward;
    for (const auto& nb : neighbors(cur, p)) {
      const GL2Mat back = nb.mat.adjugate();
      if (last_step && zero_mod(back * *last_step, p)) continue;
      forward.push_back(back);
    }
    if (forward.empty() || (last_step && forward.size() != 1))
      throw std::logic_error("orbit_cycle: unexpected neighbour structure at " + to_string(cur));
    const GL2Mat& adj = forward[last_step ? 0 : first_choice];
    const BQF next = *act(adj, cur);
    const Reduction red = reduce_form(next);
    const GL2Mat n_step = red.transform * adj;
    total = n_step * total;
    last_step = n_step;
    cur = red.reduced;
    if (cur == start.reduced) return {step, start.transform.inverse_unimodular() * total, classes};
    classes.push_back(cur);
  }
  throw std::runtime_error("orbit_cycle: no return within " + std::to_string(max_steps) + " steps");
}

}  // namespace

OrbitCycle orbit_cycle(const BQF& q, std::int64_t p) {
  if (!q.is_positive_definite())
    throw std::invalid_argument("orbit_cycle: " + to_string(q) + " is not positive definite");
  const auto cls = classify_form(q, p);
  if (!cls.p_primitive)
    throw std::invalid_argument("orbit_cycle: " + to_string(q) + " is divisible by p");
  if (cls.legendre() != 1)
    throw std::invalid_argument("orbit_cycle: discriminant " + std::to_string(cls.discriminant) +
                                " is not a nonzero square mod " + std::to_string(p));
  // the cycle length is at most the number of classes of this discriminant
  const int bound = static_cast<int>(reduced_forms_of_discriminant(q.discriminant()).size());
  Walk fwd = walk_cycle(q, p, 0, bound);
  Walk bwd = walk_cycle(q, p, 1, bound);
  if (fwd.length != bwd.length)
    throw std::logic_error("orbit_cycle: the two directions have different lengths");
  return {fwd.length, fwd.mat, bwd.mat, fwd.classes};
}

}  // namespace gsp4
