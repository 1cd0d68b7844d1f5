#include <doctest.h>

#include "knotclasp/errors.hpp"
#include "knotclasp/json_io.hpp"
#include "knotclasp/pl_function.hpp"
#include "knotclasp/semigroup.hpp"
#include "knotclasp/step_function.hpp"
#include "knotclasp/torus_signature.hpp"

using namespace knotclasp;

namespace {
Rational r(long a, long b = 1) { return Rational(a, b); }

StepFunction trefoil() { return StepFunction({r(1, 6), r(5, 6)}, {0, -2, 0}); }
}  // namespace

TEST_CASE("rational parsing and normalization") {
  CHECK(Rational::parse("6/8") == r(3, 4));
  CHECK(Rational::parse("-3") == r(-3));
  CHECK(Rational::parse("-2/4") == r(-1, 2));
  CHECK(r(4, -6).denominator() == 3);
  CHECK(r(4, -6).numerator() == -2);
  CHECK(r(7, 2).floor() == 3);
  CHECK(r(-7, 2).ceil() == -3);
  CHECK(r(3, 9).str() == "1/3");
  CHECK_THROWS_AS(Rational::parse("1/0"), DomainError);
  CHECK_THROWS_AS(Rational::parse("x"), DomainError);
  CHECK_THROWS_AS(Rational(1, 0), DomainError);
}

TEST_CASE("step function construction keeps the minimal form") {
  const StepFunction f({r(1, 4), r(1, 2), r(3, 4)}, {1, 1, 2, 2});
  CHECK(f.breakpoints() == std::vector<Rational>{r(1, 2)});
  CHECK(f.values() == std::vector<long>{1, 2});
  CHECK_THROWS_AS(StepFunction({r(1, 2), r(1, 4)}, {0, 1, 0}), PreconditionError);
  CHECK_THROWS_AS(StepFunction({r(0)}, {0, 1}), DomainError);
  CHECK_THROWS_AS(StepFunction({r(1, 2)}, {0}), PreconditionError);
}

TEST_CASE("sf_eval") {
  CHECK(sf_eval(StepFunction(), r(1, 3)) == 0);
  CHECK(sf_eval(trefoil(), r(1, 2)) == -2);
  CHECK_THROWS_AS(sf_eval(trefoil(), r(1, 6)), EvaluationAtBreakpoint);
  CHECK_THROWS_AS(sf_eval(trefoil(), r(0)), DomainError);
  CHECK_THROWS_AS(sf_eval(trefoil(), r(1)), DomainError);
  CHECK(trefoil().value_on(r(1, 6), r(5, 6)) == -2);
  CHECK_FALSE(trefoil().value_on(r(0), r(1, 2)).has_value());
}

TEST_CASE("sf_add, sf_neg, sf_scale") {
  const auto f = trefoil();
  CHECK(sf_add(f, sf_neg(f)) == StepFunction());
  CHECK(sf_add(f, f) == StepFunction({r(1, 6), r(5, 6)}, {0, -4, 0}));
  const auto k = sf_add(signature_step_function(3, 7), sf_neg(signature_step_function(4, 5)));
  CHECK(k.value_on(r(3, 20), r(4, 21)) == 2);
  CHECK(sf_neg(StepFunction()) == StepFunction());
  CHECK(sf_neg(sf_neg(k)) == k);
  for (long n = 1; n <= 6; ++n) CHECK(sf_extrema_interior(sf_scale(k, n)).max == 2 * n);
  CHECK(sf_scale(k, 0) == StepFunction());
}

TEST_CASE("sf_add is commutative and associative") {
  const auto a = signature_step_function(2, 5), b = -signature_step_function(3, 4), c = signature_step_function(2, 7);
  CHECK(a + b == b + a);
  CHECK((a + b) + c == a + (b + c));
}

TEST_CASE("sf_extrema_interior") {
  const auto e0 = sf_extrema_interior(StepFunction());
  CHECK(e0.max == 0);
  CHECK(e0.min == 0);
  const auto e1 = sf_extrema_interior(signature_step_function(3, 7) - signature_step_function(4, 5));
  CHECK(e1.max == 2);
  CHECK(e1.min == -2);
  const auto e2 = sf_extrema_interior(signature_step_function(4, 15) - signature_step_function(5, 12));
  CHECK(e2.max == 2);
  CHECK(e2.min == -2);
}

TEST_CASE("pl_eval, pl_add, pl_neg") {
  const auto u = upsilon_Ki(2);
  CHECK(pl_eval(u, r(1)) == r(1));
  CHECK(pl_eval(u, r(1, 2)) == r(-1, 2));
  CHECK(pl_eval(u, r(1, 4)) == r(-1, 4));
  CHECK(pl_add(u, pl_neg(u)) == PLFunction());
  CHECK(pl_scale(u, 3).eval(r(3, 4)) == r(3, 4));
  CHECK_THROWS_AS(pl_eval(u, r(-1, 2)), DomainError);
  CHECK_THROWS_AS(pl_eval(u, r(5, 2)), DomainError);
  // Evaluation at a stored breakpoint returns the stored value verbatim.
  for (std::size_t k = 0; k < u.breakpoints().size(); ++k) CHECK(u.eval(u.breakpoints()[k]) == u.values()[k]);
}

TEST_CASE("PLFunction drops collinear points and validates the domain") {
  const PLFunction u({r(0), r(1), r(2)}, {r(0), r(1), r(2)});
  CHECK(u.breakpoints() == std::vector<Rational>{r(0), r(2)});
  CHECK_THROWS_AS(PLFunction({r(0), r(1)}, {r(0), r(0)}), DomainError);
  CHECK_THROWS_AS(PLFunction({r(0), r(1), r(1), r(2)}, {r(0), r(0), r(0), r(0)}), PreconditionError);
  CHECK(u.slope_after(r(1, 2)) == r(1));
}

TEST_CASE("pl_sup_ratio") {
  const auto u = upsilon_Ki(2);
  const auto s = sup_ratio(u);
  CHECK(s.value == r(1));
  CHECK(s.witness == r(1));
  const auto n = sup_ratio(pl_neg(u));
  CHECK(n.value == r(1));
  CHECK(n.witness > r(0));
  CHECK(n.witness <= r(1, 2));
  CHECK(pl_sup_ratio(PLFunction()) == r(0));
  const PLFunction bad({r(0), r(2)}, {r(1), r(1)});
  CHECK_THROWS_AS(sup_ratio(bad), PreconditionError);
  // sup_ratio(u) >= u(1) always.
  for (long i = 2; i <= 8; ++i) CHECK(pl_sup_ratio(upsilon_Ki(i)) >= upsilon_Ki(i).eval(r(1)));
}

TEST_CASE("upper envelope of affine functions") {
  const std::vector<AffineFunction> lines{{r(0), r(-1)}, {r(-2), r(1)}, {r(-3, 4), r(0)}};
  const auto env = upper_envelope(lines);
  CHECK(env.function.eval(r(0)) == r(0));
  CHECK(env.function.eval(r(1)) == r(-3, 4));
  CHECK(env.function.eval(r(2)) == r(0));
  CHECK(env.active == std::vector<std::size_t>{0, 2, 1});
  CHECK(env.switches == std::vector<Rational>{r(3, 4), r(5, 4)});
  // Brute maximum at many rational points.
  for (long k = 0; k <= 64; ++k) {
    const Rational t(k, 32);
    Rational best = lines[0](t);
    for (const auto& l : lines) best = std::max(best, l(t));
    CHECK(env.function.eval(t) == best);
  }
}

TEST_CASE("envelope ties go to the steeper line") {
  // Three lines through (1,-1): the constant line is never strictly on top.
  const std::vector<AffineFunction> lines{{r(0), r(-1)}, {r(-2), r(1)}, {r(-1), r(0)}};
  const auto env = upper_envelope(lines);
  CHECK(env.active == std::vector<std::size_t>{0, 1});
  CHECK(env.switches == std::vector<Rational>{r(1)});
}

TEST_CASE("json round trips") {
  const auto f = signature_step_function(3, 7) - signature_step_function(4, 5);
  CHECK(step_function_from_json(to_json(f)) == f);
  const auto u = upsilon_Ki(3);
  CHECK(pl_function_from_json(to_json(u)) == u);
  CHECK(rational_from_json(to_json(r(-7, 3))) == r(-7, 3));
  CHECK(to_json(trefoil()).dump() == R"({"breakpoints":["1/6","5/6"],"values":[0,-2,0]})");
}
