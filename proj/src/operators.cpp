#include "gsp4/operators.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace gsp4 {

std::string word_to_string(const Word& w) {
  if (w.empty()) return "Id";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) out += (i ? "*" : "") + op_name(w[i]);
  return out;
}

OperatorExpr::OperatorExpr(const ScalarCtx& ctx, Weight w) : ctx_(ctx), w_(w) {}

OperatorExpr OperatorExpr::letter(const ScalarCtx& ctx, Weight w, Op op) {
  OperatorExpr e(ctx, w);
  e.add_term(op == Op::Id ? Word{} : Word{op}, PValuedScalar(ctx, 1));
  return e;
}

OperatorExpr OperatorExpr::scalar(const ScalarCtx& ctx, Weight w, const PValuedScalar& c) {
  OperatorExpr e(ctx, w);
  e.add_term({}, c);
  return e;
}

void OperatorExpr::add_term(const Word& w, const PValuedScalar& c) {
  if (!(c.ctx() == ctx_)) throw std::invalid_argument("OperatorExpr: coefficient ring mismatch");
  Word clean;
  for (Op op : w)
    if (op != Op::Id) clean.push_back(op);
  auto it = terms_.find(clean);
  if (it == terms_.end()) {
    if (!c.is_zero()) terms_.emplace(clean, c);
    return;
  }
  it->second = it->second + c;
  if (it->second.is_zero()) terms_.erase(it);
}

OperatorExpr OperatorExpr::operator-() const {
  OperatorExpr out(ctx_, w_);
  for (const auto& [w, c] : terms_) out.terms_.emplace(w, -c);
  return out;
}

namespace {

void check_compatible(const OperatorExpr& x, const OperatorExpr& y) {
  if (!(x.ctx() == y.ctx()) || !(x.weight() == y.weight()))
    throw std::invalid_argument("OperatorExpr: mixing rings or weights");
}

}  // namespace

OperatorExpr operator+(const OperatorExpr& x, const OperatorExpr& y) {
  check_compatible(x, y);
  OperatorExpr out = x;
  for (const auto& [w, c] : y.terms_) out.add_term(w, c);
  return out;
}

OperatorExpr operator*(const OperatorExpr& x, const OperatorExpr& y) {
  check_compatible(x, y);
  OperatorExpr out(x.ctx_, x.w_);
  for (const auto& [wx, cx] : x.terms_)
    for (const auto& [wy, cy] : y.terms_) {
      Word w = wx;
      w.insert(w.end(), wy.begin(), wy.end());
      out.add_term(w, cx * cy);
    }
  return out;
}

OperatorExpr operator*(const PValuedScalar& c, const OperatorExpr& x) {
  return OperatorExpr::scalar(x.ctx_, x.w_, c) * x;
}

std::optional<int> OperatorExpr::min_valuation() const {
  std::optional<int> v;
  for (const auto& [w, c] : terms_) v = v ? std::min(*v, c.val()) : c.val();
  return v;
}

bool OperatorExpr::operator==(const OperatorExpr& o) const {
  return ctx_ == o.ctx_ && w_ == o.w_ && terms_ == o.terms_;
}

std::string OperatorExpr::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    const std::string cs = c.to_string();
    if (cs == "1")
      os << word_to_string(w);
    else if (w.empty())
      os << cs;
    else
      os << "(" << cs << ")*" << word_to_string(w);
  }
  return os.str();
}

ScalarCtx expression_ctx(const ScalarCtx& target) {
  // as many guard digits as fit (up to 8) under the 2^31 modulus bound
  int guard = 0;
  __int128 mod = target.modulus();
  while (guard < 8 && mod * target.p() < (static_cast<__int128>(1) << 31)) {
    mod *= target.p();
    ++guard;
  }
  return target.with_exponent(target.m() + guard);
}

OperatorExpr build_expr(const std::string& name, Weight w, const ScalarCtx& target) {
  if (w.k < 2 || w.j < w.k) throw std::invalid_argument("build_expr: weight must satisfy j >= k >= 2");
  const ScalarCtx ctx = expression_ctx(target);
  const int j = w.j, k = w.k;
  auto pp = [&](int e) { return PValuedScalar::power_of_p(ctx, e); };
  auto op = [&](Op o) { return OperatorExpr::letter(ctx, w, o); };
  if (name == "T") return op(Op::U) + pp(k - 2) * op(Op::Z) + pp(k + j - 3) * op(Op::V);
  const OperatorExpr t2 =
      pp(k + j - 6) * op(Op::U2) + pp(k - 3) * op(Op::Z2) + pp(2 * k + j - 6) * op(Op::V2);
  if (name == "T2") return t2;
  if (name == "Q2") return pp(2 - k) * (pp(1) * t2 + (pp(1) + pp(3)) * op(Op::S));
  throw std::invalid_argument("build_expr: unknown operator '" + name + "'");
}

Simplified simplify_expr(const OperatorExpr& e) {
  const ScalarCtx& ctx = e.ctx();
  const Weight w = e.weight();
  OperatorExpr out(ctx, w);
  const PValuedScalar s_value = s_scalar(ctx, w);
  for (const auto& [word, coeff] : e.terms()) {
    // expand letter by letter into (coefficient, word) pairs
    std::vector<std::pair<PValuedScalar, Word>> partial{{coeff, {}}};
    for (Op op : word) {
      std::vector<std::pair<PValuedScalar, Word>> next;
      for (auto& [c, wd] : partial) {
        if (op == Op::S) {
          next.emplace_back(c * s_value, wd);
        } else if (op == Op::U2) {
          next.emplace_back(-c, wd);
          Word wx = wd;
          wx.push_back(Op::X2);
          next.emplace_back(c * PValuedScalar::power_of_p(ctx, 1), wx);
        } else {
          Word wx = wd;
          wx.push_back(op);
          next.emplace_back(c, wx);
        }
      }
      partial = std::move(next);
    }
    for (const auto& [c, wd] : partial) out.add_term(wd, c);
  }
  auto v = out.min_valuation();
  return {std::move(out), v};
}

OperatorExpr reduce_mod(const OperatorExpr& e, int exponent) {
  OperatorExpr out(e.ctx(), e.weight());
  for (const auto& [w, c] : e.terms()) {
    if (c.val() < 0)
      throw IntegralityError("term " + word_to_string(w) + " has coefficient " + c.to_string() +
                             " of negative valuation");
    out.add_term(w, c.truncated(exponent));
  }
  return out;
}

namespace {

class SumSource : public CoefficientSource {
 public:
  SumSource(const SourcePtr& like, std::int64_t precision,
            std::vector<std::pair<std::int64_t, SourcePtr>> parts)
      : CoefficientSource(like->ctx(), like->weight(), precision), parts_(std::move(parts)) {}

 protected:
  SymVector raw_coefficient(const BQF& q) const override {
    SymVector acc = zero();
    for (const auto& [c, src] : parts_) acc += src->coefficient(q).scaled(c);
    return acc;
  }

 private:
  std::vector<std::pair<std::int64_t, SourcePtr>> parts_;
};

}  // namespace

SourcePtr evaluate_lazy(const OperatorExpr& e, SourcePtr f, std::int64_t cap) {
  if (!(e.weight() == f->weight()))
    throw std::invalid_argument("evaluate: expression weight " + to_string(e.weight()) +
                                " does not match expansion weight " + to_string(f->weight()));
  const Simplified s = simplify_expr(e);
  std::vector<std::pair<std::int64_t, SourcePtr>> parts;
  std::int64_t precision = f->precision();
  for (const auto& [word, coeff] : s.expr.terms()) {
    if (coeff.val() < 0)
      throw IntegralityError("term " + word_to_string(word) + " has coefficient " +
                             coeff.to_string() + " of negative valuation");
    const std::int64_t c = coeff.residue_mod(f->ctx());
    SourcePtr cur = f;
    for (auto it = word.rbegin(); it != word.rend(); ++it) cur = apply_lazy(*it, cur, cap);
    precision = std::min(precision, cur->precision());
    if (c != 0) parts.emplace_back(c, cur);
  }
  return std::make_shared<SumSource>(f, precision, std::move(parts));
}

SiegelExpansion evaluate_expr(const OperatorExpr& e, const SiegelExpansion& f, std::int64_t cap) {
  return materialize(*evaluate_lazy(e, std::make_shared<SiegelExpansion>(f), cap));
}

// --- parser ----------------------------------------------------------------

namespace {

class Parser {
 public:
  Parser(const std::string& text, Weight w, const ScalarCtx& target)
      : s_(text), w_(w), target_(target), ctx_(expression_ctx(target)) {}

  OperatorExpr parse() {
    OperatorExpr e = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw std::invalid_argument("operator expression \"" + s_ + "\": " + msg + " at position " +
                                std::to_string(pos_));
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  OperatorExpr expr() {
    OperatorExpr e = term();
    for (;;) {
      if (accept('+'))
        e = e + term();
      else if (accept('-'))
        e = e - term();
      else
        return e;
    }
  }

  OperatorExpr term() {
    OperatorExpr e = factor();
    while (accept('*')) e = e * factor();
    return e;
  }

  long long integer() {
    skip_ws();
    bool neg = false;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) neg = s_[pos_++] == '-';
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    const long long v = std::stoll(s_.substr(start, pos_ - start));
    return neg ? -v : v;
  }

  OperatorExpr factor() {
    if (accept('-')) return -factor();
    if (accept('(')) {
      OperatorExpr e = expr();
      if (!accept(')')) fail("expected ')'");
      return e;
    }
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end");
    if (std::isdigit(static_cast<unsigned char>(s_[pos_])))
      return OperatorExpr::scalar(ctx_, w_, PValuedScalar(ctx_, integer()));
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    const std::string name = s_.substr(start, pos_ - start);
    if (name.empty()) fail("expected an operator, scalar or '('");
    if (name == "p") {
      int e = 1;
      if (accept('^')) e = static_cast<int>(integer());
      return OperatorExpr::scalar(ctx_, w_, PValuedScalar::power_of_p(ctx_, e));
    }
    if (name == "T" || name == "T2" || name == "Q2") return build_expr(name, w_, target_);
    if (name == "I") return OperatorExpr::letter(ctx_, w_, Op::Id);
    if (auto op = op_from_name(name)) return OperatorExpr::letter(ctx_, w_, *op);
    pos_ = start;
    fail("unknown name '" + name + "'");
  }

  std::string s_;
  Weight w_;
  ScalarCtx target_;
  ScalarCtx ctx_;
  std::size_t pos_ = 0;
};

}  // namespace

OperatorExpr parse_expr(const std::string& text, Weight w, const ScalarCtx& target) {
  return Parser(text, w, target).parse();
}

}  // namespace gsp4
