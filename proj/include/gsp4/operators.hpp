#pragma once

// Formal p-valued linear combinations of words in the primitive operators,
// with symbolic simplification and integrality-checked evaluation.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gsp4/padic.hpp"
#include "gsp4/qexp.hpp"

namespace gsp4 {

/// A composition of primitive operators; the last letter acts first.  Id is
/// never stored, so the empty word is the identity.
using Word = std::vector<Op>;

std::string word_to_string(const Word& w);

class OperatorExpr {
 public:
  /// The zero operator.  ctx is the working ring of the coefficients.
  OperatorExpr(const ScalarCtx& ctx, Weight w);

  static OperatorExpr letter(const ScalarCtx& ctx, Weight w, Op op);
  static OperatorExpr scalar(const ScalarCtx& ctx, Weight w, const PValuedScalar& c);

  const ScalarCtx& ctx() const { return ctx_; }
  Weight weight() const { return w_; }
  const std::map<Word, PValuedScalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Word& w, const PValuedScalar& c);

  OperatorExpr operator-() const;
  friend OperatorExpr operator+(const OperatorExpr& x, const OperatorExpr& y);
  friend OperatorExpr operator-(const OperatorExpr& x, const OperatorExpr& y) { return x + (-y); }
  /// Composition: (x * y) F = x(y(F)).
  friend OperatorExpr operator*(const OperatorExpr& x, const OperatorExpr& y);
  friend OperatorExpr operator*(const PValuedScalar& c, const OperatorExpr& x);

  /// Smallest coefficient valuation, nullopt for the zero operator.
  std::optional<int> min_valuation() const;

  bool operator==(const OperatorExpr& o) const;
  std::string to_string() const;

 private:
  ScalarCtx ctx_;
  Weight w_;
  std::map<Word, PValuedScalar> terms_;
};

/// Working ring for expressions whose results are read modulo target: the
/// same prime with extra digits, so that cancellations between negative
/// powers of p do not eat the precision that survives to the result.
ScalarCtx expression_ctx(const ScalarCtx& target);

/// T, T2 or Q2 in weight w, unsimplified.
OperatorExpr build_expr(const std::string& name, Weight w, const ScalarCtx& target);

struct Simplified {
  OperatorExpr expr;
  std::optional<int> min_valuation;
};

/// Replaces S by p^(j+k-6) and U2 by -Id + p X2, then collects words.
Simplified simplify_expr(const OperatorExpr& e);

/// Coefficients reduced modulo p^e; an expression with negative valuations
/// throws IntegralityError.
OperatorExpr reduce_mod(const OperatorExpr& e, int exponent = 1);

/// Sum over terms of coefficient times the word applied to f, lazily.
/// Simplifies first; negative valuations throw IntegralityError and an
/// exhausted box throws PrecisionError.  The output precision is the minimum
/// over the terms.
SourcePtr evaluate_lazy(const OperatorExpr& e, SourcePtr f, std::int64_t cap = kDefaultPrecisionCap);

SiegelExpansion evaluate_expr(const OperatorExpr& e, const SiegelExpansion& f,
                              std::int64_t cap = kDefaultPrecisionCap);

/// Parses e.g. "Z2 - U*Z", "p^-1*U2 + X2", "(U + Z)*V", "Q2".  Names are the
/// primitives Id, U, Z, V, Z2, X2, V2, S, U2 and the composites T, T2, Q2;
/// "p", "p^e" and integers are scalars; '*' is composition.
OperatorExpr parse_expr(const std::string& text, Weight w, const ScalarCtx& target);

}  // namespace gsp4
