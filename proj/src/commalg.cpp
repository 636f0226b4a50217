#include "gsp4/commalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace gsp4 {

namespace {

std::size_t ipow(std::size_t b, int e) {
  std::size_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// t_i applied blockwise to each column of V; rows of V are blocks of |S|
// monomial coordinates.
Matrix shift(const Matrix& v, int i, std::size_t n, int q) {
  const std::size_t s = ipow(n, q), stride = ipow(n, i);
  if (v.rows() % s != 0) throw std::logic_error("shift: not a free module vector");
  Matrix out(v.modulus(), v.rows(), v.cols());
  for (std::size_t row = 0; row < v.rows(); ++row) {
    const std::size_t idx = row % s;
    if ((idx / stride) % n == n - 1) continue;
    for (std::size_t c = 0; c < v.cols(); ++c) out.set(row + stride, c, v(row, c));
  }
  return out;
}

// All monomial multiples t^e v of the columns of v.
Matrix monomial_span(const Matrix& v, std::size_t n, int q) {
  const std::size_t s = ipow(n, q);
  Matrix out(v.modulus(), v.rows(), v.cols() * s);
  for (std::size_t c = 0; c < v.cols(); ++c) {
    // idx walks monomials; each is t_i times an earlier one
    std::vector<Matrix> cols;
    cols.reserve(s);
    for (std::size_t idx = 0; idx < s; ++idx) {
      if (idx == 0) {
        cols.push_back(v.columns(c, 1));
        continue;
      }
      int i = 0;
      std::size_t stride = 1;
      while ((idx / stride) % n == 0) {
        stride *= n;
        ++i;
      }
      cols.push_back(shift(cols[idx - stride], i, n, q));
    }
    for (std::size_t idx = 0; idx < s; ++idx)
      for (std::size_t r = 0; r < v.rows(); ++r) out.set(r, c * s + idx, cols[idx](r, 0));
  }
  return out;
}

Matrix regular_t(std::int64_t p, int N, int q, int i) {
  const std::size_t n = ipow(static_cast<std::size_t>(p), N);
  const std::size_t s = ipow(n, q);
  return shift(Matrix::identity(p, s), i, n, q);
}

Matrix inverse(const Matrix& a) {
  auto x = solve(a, Matrix::identity(a.modulus(), a.rows()));
  if (!x || a.rows() != a.cols()) throw std::invalid_argument("matrix is not invertible");
  return *x;
}

Matrix stack_columns(const std::vector<Matrix>& ms, std::int64_t p, std::size_t rows) {
  Matrix out(p, rows, 0);
  for (const auto& m : ms) out = hconcat(out, m);
  return out;
}

Matrix flatten(const Matrix& m) {
  return column_vector(m.modulus(), m.data());
}

}  // namespace

GroupRingModule::GroupRingModule(std::int64_t p, int N, int q, std::vector<Matrix> gens)
    : p_(p), N_(N), q_(q), gens_(std::move(gens)) {
  if (!is_prime(p)) throw std::invalid_argument("GroupRingModule: p must be prime");
  if (N < 1 || q < 1) throw std::invalid_argument("GroupRingModule: need N >= 1 and q >= 1");
  if (static_cast<int>(gens_.size()) != q)
    throw std::invalid_argument("GroupRingModule: expected " + std::to_string(q) + " generators, got " +
                                std::to_string(gens_.size()));
  order_ = ipow(static_cast<std::size_t>(p), N);
  dim_ = gens_[0].rows();
  for (const auto& g : gens_)
    if (g.modulus() != p || !g.is_square() || g.rows() != dim_)
      throw std::invalid_argument("GroupRingModule: generators must be square of size dim over F_p");
  for (int i = 0; i < q; ++i) {
    for (int j = i + 1; j < q; ++j)
      if (!(gens_[i] * gens_[j] == gens_[j] * gens_[i]))
        throw std::invalid_argument("GroupRingModule: generators " + std::to_string(i) + " and " +
                                    std::to_string(j) + " do not commute");
    if (!t(i).pow(order_).is_zero())
      throw std::invalid_argument("GroupRingModule: generator " + std::to_string(i) +
                                  " does not have order dividing p^N");
  }
}

Matrix GroupRingModule::t(int i) const { return gens_.at(static_cast<std::size_t>(i)) - Matrix::identity(p_, dim_); }

GroupRingModule regular_module(std::int64_t p, int N, int q) {
  std::vector<Matrix> gens;
  for (int i = 0; i < q; ++i) {
    const Matrix t = regular_t(p, N, q, i);
    gens.push_back(t + Matrix::identity(p, t.rows()));
  }
  return GroupRingModule(p, N, q, std::move(gens));
}

GroupRingModule trivial_module(std::int64_t p, int N, int q, std::size_t n) {
  return GroupRingModule(p, N, q, std::vector<Matrix>(static_cast<std::size_t>(q), Matrix::identity(p, n)));
}

GroupRingModule quotient_module(std::int64_t p, int N, int q, const std::vector<std::int64_t>& f) {
  const std::size_t n = ipow(static_cast<std::size_t>(p), N), s = ipow(n, q);
  if (f.size() != s) throw std::invalid_argument("quotient_module: f has the wrong length");
  const Matrix ideal = column_basis(monomial_span(column_vector(p, f), n, q));
  const Matrix comp = complement_basis(ideal);
  const Matrix full = hconcat(ideal, comp);
  std::vector<Matrix> gens;
  for (int i = 0; i < q; ++i) {
    const Matrix image = regular_t(p, N, q, i) * comp;
    const Matrix coords = *solve(full, image);
    Matrix t(p, comp.cols(), comp.cols());
    for (std::size_t r = 0; r < comp.cols(); ++r)
      for (std::size_t c = 0; c < comp.cols(); ++c) t.set(r, c, coords(ideal.cols() + r, c));
    gens.push_back(t + Matrix::identity(p, comp.cols()));
  }
  return GroupRingModule(p, N, q, std::move(gens));
}

GroupRingModule direct_sum(const GroupRingModule& a, const GroupRingModule& b) {
  if (a.p() != b.p() || a.N() != b.N() || a.q() != b.q())
    throw std::invalid_argument("direct_sum: modules over different rings");
  const std::size_t da = a.dim(), db = b.dim();
  std::vector<Matrix> gens;
  for (int i = 0; i < a.q(); ++i) {
    Matrix g(a.p(), da + db, da + db);
    for (std::size_t r = 0; r < da; ++r)
      for (std::size_t c = 0; c < da; ++c) g.set(r, c, a.gens()[i](r, c));
    for (std::size_t r = 0; r < db; ++r)
      for (std::size_t c = 0; c < db; ++c) g.set(da + r, da + c, b.gens()[i](r, c));
    gens.push_back(std::move(g));
  }
  return GroupRingModule(a.p(), a.N(), a.q(), std::move(gens));
}

GroupRingModule change_basis(const GroupRingModule& m, const Matrix& P) {
  const Matrix pinv = inverse(P);
  std::vector<Matrix> gens;
  for (const auto& g : m.gens()) gens.push_back(pinv * g * P);
  return GroupRingModule(m.p(), m.N(), m.q(), std::move(gens));
}

GroupRingModule submodule(const GroupRingModule& m, const Matrix& basis) {
  const Matrix b = column_basis(basis);
  std::vector<Matrix> gens;
  for (const auto& g : m.gens()) {
    auto x = solve(b, g * b);
    if (!x) throw std::invalid_argument("submodule: subspace is not stable");
    gens.push_back(*x);
  }
  return GroupRingModule(m.p(), m.N(), m.q(), std::move(gens));
}

Matrix augmentation_image(const GroupRingModule& m) {
  std::vector<Matrix> ts;
  for (int i = 0; i < m.q(); ++i) ts.push_back(m.t(i));
  return column_basis(stack_columns(ts, m.p(), m.dim()));
}

MinimalCover minimal_cover(const GroupRingModule& m) {
  const std::size_t n = m.order(), s = ipow(n, m.q());
  MinimalCover mc{0, complement_basis(augmentation_image(m)), Matrix(m.p(), m.dim(), 0), Matrix(m.p(), 0, 0)};
  mc.t0 = mc.generators.cols();
  std::vector<Matrix> ts;
  for (int i = 0; i < m.q(); ++i) ts.push_back(m.t(i));
  Matrix phi(m.p(), m.dim(), mc.t0 * s);
  for (std::size_t j = 0; j < mc.t0; ++j) {
    std::vector<Matrix> cols;
    cols.reserve(s);
    for (std::size_t idx = 0; idx < s; ++idx) {
      if (idx == 0) {
        cols.push_back(mc.generators.columns(j, 1));
      } else {
        int i = 0;
        std::size_t stride = 1;
        while ((idx / stride) % n == 0) {
          stride *= n;
          ++i;
        }
        cols.push_back(ts[static_cast<std::size_t>(i)] * cols[idx - stride]);
      }
      for (std::size_t r = 0; r < m.dim(); ++r) phi.set(r, j * s + idx, cols[idx](r, 0));
    }
  }
  mc.phi = phi;
  mc.kernel = kernel(phi);
  return mc;
}

namespace {

// Column basis of mK for K given by a column basis inside a free module.
Matrix kernel_augmentation(const Matrix& k, std::size_t n, int q) {
  std::vector<Matrix> parts;
  for (int i = 0; i < q; ++i) parts.push_back(shift(k, i, n, q));
  return column_basis(stack_columns(parts, k.modulus(), k.rows()));
}

}  // namespace

TorDims tor_dims(const GroupRingModule& m) {
  const MinimalCover mc = minimal_cover(m);
  const Matrix mk = kernel_augmentation(mc.kernel, m.order(), m.q());
  return {mc.t0, mc.kernel.cols() - mk.cols()};
}

Defect defect_balanced(const GroupRingModule& m) {
  const TorDims t = tor_dims(m);
  const auto d = static_cast<std::int64_t>(t.t0) - static_cast<std::int64_t>(t.t1);
  return {d, d >= 0};
}

SquarePresentation square_presentation(const GroupRingModule& m) {
  const MinimalCover mc = minimal_cover(m);
  const std::size_t n = m.order(), s = ipow(n, m.q());
  Matrix span = kernel_augmentation(mc.kernel, n, m.q());
  const std::size_t t1 = mc.kernel.cols() - span.cols();
  if (t1 > mc.t0)
    throw std::invalid_argument("square_presentation: module is not balanced (t0 = " +
                                std::to_string(mc.t0) + ", t1 = " + std::to_string(t1) + ")");
  // kernel vectors outside mK, chosen greedily, generate K by Nakayama
  std::vector<std::size_t> chosen;
  std::size_t r = span.cols();
  for (std::size_t c = 0; c < mc.kernel.cols() && chosen.size() < t1; ++c) {
    Matrix trial = hconcat(span, mc.kernel.columns(c, 1));
    const std::size_t tr = rank(trial);
    if (tr > r) {
      chosen.push_back(c);
      span = trial;
      r = tr;
    }
  }
  SquarePresentation sp;
  sp.d = mc.t0;
  sp.phi = mc.phi;
  for (std::size_t i = 0; i < sp.d; ++i) {
    std::vector<GroupRingElement> rel(sp.d, GroupRingElement(s, 0));
    if (i < chosen.size())
      for (std::size_t j = 0; j < sp.d; ++j)
        for (std::size_t idx = 0; idx < s; ++idx) rel[j][idx] = mc.kernel(j * s + idx, chosen[i]);
    sp.relations.push_back(std::move(rel));
  }
  return sp;
}

PresentationCheck check_presentation(const GroupRingModule& m, const SquarePresentation& sp) {
  const std::size_t n = m.order(), s = ipow(n, m.q());
  PresentationCheck pc;
  if (sp.phi.rows() != m.dim() || sp.phi.cols() != sp.d * s || sp.relations.size() != sp.d) return pc;
  pc.phi_surjective = rank(sp.phi) == m.dim();
  pc.phi_linear = true;
  const Matrix free_id = Matrix::identity(m.p(), sp.d * s);
  for (int i = 0; i < m.q(); ++i)
    if (!(sp.phi * shift(free_id, i, n, m.q()) == m.t(i) * sp.phi)) pc.phi_linear = false;
  Matrix rels(m.p(), sp.d * s, sp.d);
  for (std::size_t i = 0; i < sp.d; ++i)
    for (std::size_t j = 0; j < sp.d; ++j)
      for (std::size_t idx = 0; idx < s; ++idx) rels.set(j * s + idx, i, sp.relations[i][j][idx]);
  const Matrix image = monomial_span(rels, n, m.q());
  const std::size_t image_rank = rank(image);
  pc.cokernel_dim = sp.d * s - image_rank;
  const std::size_t ker_dim = sp.d * s - rank(sp.phi);
  pc.relations_span_kernel = (sp.phi * image).is_zero() && image_rank == ker_dim;
  return pc;
}

GroupRingElement group_ring_multiply(std::int64_t p, int N, int q, const GroupRingElement& a,
                                     const GroupRingElement& b) {
  const std::size_t n = ipow(static_cast<std::size_t>(p), N), s = ipow(n, q);
  if (a.size() != s || b.size() != s) throw std::invalid_argument("group_ring_multiply: wrong length");
  GroupRingElement out(s, 0);
  for (std::size_t x = 0; x < s; ++x) {
    if (a[x] % p == 0) continue;
    for (std::size_t y = 0; y < s; ++y) {
      if (b[y] % p == 0) continue;
      std::size_t z = 0, stride = 1;
      bool vanish = false;
      for (int i = 0; i < q; ++i, stride *= n) {
        const std::size_t e = (x / stride) % n + (y / stride) % n;
        if (e >= n) {
          vanish = true;
          break;
        }
        z += e * stride;
      }
      if (!vanish) out[z] = ((out[z] + a[x] * b[y]) % p + p) % p;
    }
  }
  return out;
}

Coinvariants coinvariants(const GroupRingModule& m) {
  const Matrix mm = augmentation_image(m);
  Matrix proj = kernel(mm.transpose()).transpose();
  return {proj.rows(), std::move(proj)};
}

PatchingReport check_patching_shape(const GroupRingModule& m, std::size_t h_dim,
                                    const std::vector<Matrix>& ring_ops,
                                    const std::vector<Matrix>& kernel_ops) {
  PatchingReport rep;
  const std::int64_t p = m.p();
  const std::size_t dim = m.dim(), dd = dim * dim;
  for (const auto& op : ring_ops)
    if (op.modulus() != p || op.rows() != dim || op.cols() != dim)
      throw std::invalid_argument("check_patching_shape: ring operator of the wrong shape");
  for (const auto& op : kernel_ops)
    if (op.modulus() != p || op.rows() != dim || op.cols() != dim)
      throw std::invalid_argument("check_patching_shape: kernel operator of the wrong shape");

  // algebra generated by everything, as flattened matrices
  std::vector<Matrix> gens = ring_ops;
  gens.insert(gens.end(), kernel_ops.begin(), kernel_ops.end());
  for (int i = 0; i < m.q(); ++i) gens.push_back(m.t(i));
  std::vector<Matrix> alg{Matrix::identity(p, dim)};
  Matrix alg_span = flatten(alg[0]);
  for (std::size_t k = 0; k < alg.size(); ++k)
    for (const auto& g : gens) {
      Matrix prod = g * alg[k];
      const Matrix f = flatten(prod);
      if (!in_span(alg_span, f)) {
        alg_span = hconcat(alg_span, f);
        alg.push_back(std::move(prod));
      }
    }
  Matrix ideal(p, dd, 0);
  for (const auto& kop : kernel_ops)
    for (const auto& a : alg) ideal = hconcat(ideal, flatten(kop * a));
  rep.augmentation_in_image = true;
  for (int i = 0; i < m.q(); ++i) {
    const Matrix f = flatten(m.t(i));
    if (f.is_zero()) continue;
    if (ideal.cols() == 0 || !in_span(ideal, f)) rep.augmentation_in_image = false;
  }
  rep.coinvariants_match = coinvariants(m).dim == h_dim;
  rep.finite_balanced = defect_balanced(m).balanced;
  return rep;
}

IdempotentResult ordinary_idempotent(const Matrix& a, int max_steps) {
  if (!a.is_square()) throw std::invalid_argument("ordinary_idempotent: matrix is not square");
  Matrix b = a;
  for (int n = 1; n <= max_steps; ++n) {
    if (n > 1) b = b.pow(static_cast<std::uint64_t>(n));
    if (b * b == b) return {b, n};
  }
  throw std::runtime_error("ordinary_idempotent: A^{n!} did not stabilize within " +
                           std::to_string(max_steps) + " steps");
}

IdempotentCertificate certify_idempotent(const Matrix& a, const Matrix& e, std::int64_t p) {
  IdempotentCertificate c;
  const std::size_t dim = a.rows();
  int m = 0;
  for (std::int64_t x = a.modulus(); x > 1; x /= p) {
    if (x % p != 0) throw std::invalid_argument("certify_idempotent: modulus is not a power of p");
    ++m;
  }
  c.idempotent = e * e == e;
  c.commutes = e * a == a * e;
  const Matrix x = (Matrix::identity(a.modulus(), dim) - e) * a;
  Matrix pw = x;
  for (int k = 1; k <= static_cast<int>(dim) * m; ++k) {
    if (pw.is_zero()) {
      c.nilpotency_index = k;
      break;
    }
    pw = pw * x;
  }
  if (dim == 0) c.nilpotency_index = 0;
  Matrix red(p, dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) red.set(i, j, e(i, j));
  c.rank_mod_p = rank(red);
  return c;
}

Matrix random_invertible(std::int64_t p, std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> dist(0, p - 1);
  for (;;) {
    Matrix m(p, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m.set(i, j, dist(rng));
    if (rank(m) == n) return m;
  }
}

GroupRingModule random_balanced_module(std::int64_t p, int N, int q, std::size_t max_dim,
                                       std::mt19937_64& rng) {
  const std::size_t n = ipow(static_cast<std::size_t>(p), N), s = ipow(n, q);
  if (s > max_dim) throw std::invalid_argument("random_balanced_module: max_dim is smaller than |S|");
  std::uniform_int_distribution<int> kind(0, 2);
  std::uniform_int_distribution<std::int64_t> coef(0, p - 1);
  std::optional<GroupRingModule> acc;
  std::int64_t budget = 0;  // running defect
  std::size_t dim = 0;
  for (int tries = 0; tries < 16; ++tries) {
    std::optional<GroupRingModule> piece;
    std::int64_t d = 0;
    switch (kind(rng)) {
      case 0:
        piece = regular_module(p, N, q);
        d = 1;
        break;
      case 1: {
        GroupRingElement f(s, 0);
        while (std::all_of(f.begin(), f.end(), [](std::int64_t x) { return x == 0; }))
          for (std::size_t i = 1; i < s; ++i) f[i] = coef(rng);
        piece = quotient_module(p, N, q, f);
        d = 0;
        break;
      }
      default:
        piece = trivial_module(p, N, q, 1);
        d = 1 - q;
        break;
    }
    if (dim + piece->dim() > max_dim || budget + d < 0) continue;
    budget += d;
    dim += piece->dim();
    acc = acc ? direct_sum(*acc, *piece) : *piece;
  }
  if (!acc) acc = regular_module(p, N, q);
  return change_basis(*acc, random_invertible(p, acc->dim(), rng));
}

}  // namespace gsp4
