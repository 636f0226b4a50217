#include <doctest.h>

#include <map>

#include "gsp4/operators.hpp"

using namespace gsp4;

namespace doctest {
template <>
struct StringMaker<OperatorExpr> {
  static String convert(const OperatorExpr& e) { return e.to_string().c_str(); }
};
}  // namespace doctest

namespace {

OperatorExpr letter(const ScalarCtx& c, Weight w, Op op) { return OperatorExpr::letter(c, w, op); }
PValuedScalar pp(const ScalarCtx& c, int e) { return PValuedScalar::power_of_p(c, e); }

// Nonzero residues modulo p^e, word by word.  Scalars also carry their known
// precision, which differs between equal expressions built different ways.
std::map<Word, std::int64_t> residues(const OperatorExpr& x, int e) {
  const ScalarCtx r(x.ctx().p(), e);
  std::map<Word, std::int64_t> out;
  for (const auto& [w, c] : x.terms())
    if (const auto v = c.residue_mod(r); v != 0) out[w] = v;
  return out;
}

}  // namespace

TEST_CASE("expression ring keeps guard digits under 2^31") {
  CHECK(expression_ctx(ScalarCtx(5, 1)).m() == 9);
  CHECK(expression_ctx(ScalarCtx(101, 1)).m() == 4);
  CHECK(expression_ctx(ScalarCtx(3, 2)).modulus() < (std::int64_t{1} << 31));
}

TEST_CASE("expression algebra") {
  const ScalarCtx c(5, 4);
  const Weight w{4, 2};
  const OperatorExpr u = letter(c, w, Op::U), z = letter(c, w, Op::Z);
  CHECK((u - u).is_zero());
  const OperatorExpr uz = u * z;
  REQUIRE(uz.terms().size() == 1);
  CHECK(uz.terms().begin()->first == Word{Op::U, Op::Z});
  CHECK((pp(c, -1) * u).min_valuation() == -1);
  CHECK(letter(c, w, Op::Id).terms().begin()->first.empty());
  CHECK_THROWS_AS(u + letter(c, {2, 2}, Op::U), std::invalid_argument);
}

TEST_CASE("parser") {
  const ScalarCtx t(5, 1);
  const ScalarCtx c = expression_ctx(t);
  const Weight w{2, 2};
  CHECK(parse_expr("Z2 - U*Z", w, t) == letter(c, w, Op::Z2) - letter(c, w, Op::U) * letter(c, w, Op::Z));
  CHECK(parse_expr("p^-1*U2 + X2", w, t) == pp(c, -1) * letter(c, w, Op::U2) + letter(c, w, Op::X2));
  CHECK(parse_expr("(U + Z)*V", w, t) ==
        letter(c, w, Op::U) * letter(c, w, Op::V) + letter(c, w, Op::Z) * letter(c, w, Op::V));
  CHECK(parse_expr("2*U - -U", w, t) == PValuedScalar(c, 3) * letter(c, w, Op::U));
  CHECK(parse_expr("p", w, t) == OperatorExpr::scalar(c, w, pp(c, 1)));
  CHECK(parse_expr("Q2", w, t) == build_expr("Q2", w, t));
  CHECK_THROWS_AS(parse_expr("U +", w, t), std::invalid_argument);
  CHECK_THROWS_AS(parse_expr("W", w, t), std::invalid_argument);
  CHECK_THROWS_AS(parse_expr("(U", w, t), std::invalid_argument);
  CHECK_THROWS_AS(parse_expr("U)", w, t), std::invalid_argument);
}

TEST_CASE("T and T2 decompositions") {
  const ScalarCtx t(7, 1);
  const ScalarCtx c = expression_ctx(t);
  const Weight w{5, 3};
  CHECK(build_expr("T", w, t) ==
        letter(c, w, Op::U) + pp(c, 1) * letter(c, w, Op::Z) + pp(c, 5) * letter(c, w, Op::V));
  CHECK(build_expr("T2", w, t) == pp(c, 2) * letter(c, w, Op::U2) + letter(c, w, Op::Z2) +
                                      pp(c, 5) * letter(c, w, Op::V2));
  CHECK_THROWS_AS(build_expr("T3", w, t), std::invalid_argument);
  CHECK_THROWS_AS(build_expr("T", {2, 3}, t), std::invalid_argument);
}

TEST_CASE("T reduces to U + Z mod p in weight (j, 2)") {
  for (std::int64_t p : {5, 7})
    for (int j = 2; j <= 6; ++j) {
      const ScalarCtx t(p, 1);
      const Weight w{j, 2};
      const OperatorExpr r = reduce_mod(simplify_expr(build_expr("T", w, t)).expr, 1);
      const ScalarCtx c = expression_ctx(t);
      CHECK(residues(r, 1) == residues(letter(c, w, Op::U) + letter(c, w, Op::Z), 1));
    }
}

TEST_CASE("simplified Q2 in closed form") {
  // Q2 = Z2 + p^(j-2) X2 + p^(j+k-3) V2 + p^(j-1), expanded by hand
  for (std::int64_t p : {5, 7, 11})
    for (int k = 2; k <= 4; ++k)
      for (int j = k; j <= k + 4; ++j) {
        const ScalarCtx t(p, 1);
        const ScalarCtx c = expression_ctx(t);
        const Weight w{j, k};
        const Simplified s = simplify_expr(build_expr("Q2", w, t));
        const OperatorExpr expected = letter(c, w, Op::Z2) + pp(c, j - 2) * letter(c, w, Op::X2) +
                                      pp(c, j + k - 3) * letter(c, w, Op::V2) +
                                      OperatorExpr::scalar(c, w, pp(c, j - 1));
        CAPTURE(p);
        CAPTURE(j);
        CAPTURE(k);
        CHECK(residues(s.expr, 4) == residues(expected, 4));
        CHECK(s.min_valuation == 0);
      }
}

TEST_CASE("Q2 mod p") {
  const ScalarCtx t(5, 1);
  const ScalarCtx c = expression_ctx(t);
  const OperatorExpr r2 = reduce_mod(simplify_expr(build_expr("Q2", {2, 2}, t)).expr, 1);
  CHECK(residues(r2, 1) == residues(letter(c, {2, 2}, Op::Z2) + letter(c, {2, 2}, Op::X2), 1));
  const OperatorExpr r3 = reduce_mod(simplify_expr(build_expr("Q2", {3, 2}, t)).expr, 1);
  CHECK(residues(r3, 1) == residues(letter(c, {3, 2}, Op::Z2), 1));
  // unsimplified T2 carries p^(k-3) = p^-1 on Z2
  CHECK(build_expr("T2", {2, 2}, t).min_valuation() == -2);
  CHECK_THROWS_AS(reduce_mod(build_expr("T2", {2, 2}, t)), IntegralityError);
}

TEST_CASE("evaluation") {
  const ScalarCtx t(3, 1);
  const Weight w{2, 2};
  SourcePtr f = std::make_shared<RandomExpansion>(t, w, 9 * 4, 5);
  // Z2 - U Z vanishes identically
  CHECK(materialize(*evaluate_lazy(parse_expr("Z2 - U*Z", w, t), f)).is_zero());
  // the output box is the smallest of the terms
  CHECK(evaluate_lazy(parse_expr("U + Z2", w, t), f)->precision() == 4);
  CHECK_THROWS_AS(evaluate_lazy(parse_expr("p^-1*U", w, t), f), IntegralityError);
  CHECK_THROWS_AS(evaluate_lazy(parse_expr("Z2*Z2*Z2", w, t), f), PrecisionError);
  CHECK_THROWS_AS(evaluate_lazy(parse_expr("U", {4, 2}, t), f), std::invalid_argument);
  // T2 is not integral in weight (2, 2), Q2 is
  CHECK_THROWS_AS(evaluate_lazy(build_expr("T2", w, t), f), IntegralityError);
  const SiegelExpansion q2 = materialize(*evaluate_lazy(build_expr("Q2", w, t), f));
  const SiegelExpansion ref = materialize(*evaluate_lazy(parse_expr("Z2 + X2", w, t), f));
  CHECK(q2 == ref.truncated(q2.precision()));
}

TEST_CASE("evaluation modulo p^2 keeps the p-multiples") {
  const ScalarCtx t(5, 2);
  const Weight w{2, 2};
  auto f = std::make_shared<RandomExpansion>(t, w, 25 * 2, 9);
  const SiegelExpansion lhs = materialize(*evaluate_lazy(parse_expr("p*X2 + 3", w, t), f));
  for (const BQF& q : box_keys(2)) {
    const SymVector a = f->coefficient(q);
    const SymVector x = materialize(*apply_lazy(Op::X2, f)).coefficient(q);
    CHECK(lhs.coefficient(q) == x.scaled(5) + a.scaled(3));
  }
}
