#include <doctest.h>

#include <cmath>

#include "mlexp/errors.hpp"
#include "mlexp/exp_repr.hpp"
#include "mlexp/series.hpp"
#include "mlexp/special.hpp"
#include "test_util.hpp"

using namespace mlexp;
using testutil::rel_err;

TEST_CASE("homogeneous_term anchors") {
  // frozen: e^{0.5} / sqrt(pi) at s=0, x=1, x0=0.5, rho=1, n=2
  CHECK(rel_err(homogeneous_term(0, 1.0, 0.5, {1.0, 0.0}, 2),
                {0.93019136710263286, 0.0}) <= 1e-13);
  // s = n-1 drops the power of x entirely
  CHECK(rel_err(homogeneous_term(2, 7.3, 0.4, {1.1, 0.0}, 3),
                complex_exp(complex_ipow({1.1, 0.0}, 3) * 0.4)) <= 1e-13);
  // rho = 0 leaves x^{(s+1)/n-1} / Gamma((s+1)/n)
  CHECK(rel_err(homogeneous_term(0, 2.0, 0.3, {0.0, 0.0}, 4),
                {std::pow(2.0, -0.75) * recip_gamma(0.25), 0.0}) <= 1e-14);
  CHECK_THROWS_AS(homogeneous_term(0, 1.0, 0.0, {1.0, 0.0}, 2), DomainError);
  CHECK_THROWS_AS(homogeneous_term(0, 0.1, 0.5, {1.0, 0.0}, 2), DomainError);
  CHECK_THROWS_AS(homogeneous_term(3, 1.0, 0.5, {1.0, 0.0}, 2), DomainError);
}

TEST_CASE("j_exp is exact at n = 1") {
  // order one: the representation telescopes to e^{rho x} analytically
  for (double x0 : {0.1, 0.3, 0.9}) {
    for (double rho : {-1.0, 0.5, 1.0}) {
      CAPTURE(x0);
      CAPTURE(rho);
      CHECK(rel_err(j_exp(0, 1.0, x0, {rho, 0.0}, 1).value.real(),
                    std::exp(rho)) <= 1e-13);
    }
  }
}

TEST_CASE("j_exp approaches j_series as x0 shrinks") {
  // frozen oracle pair at x0 = 1e-4: defect measured at 1.41e-9
  SeriesValue je = j_exp(0, 1.0, 1e-4, {1.0, 0.0}, 2);
  CHECK(rel_err(je.value.real(), 2.8548878344403560) <= 1e-12);
  double defect = std::abs(je.value.real() - 2.8548878358509945);
  CHECK(defect >= 1e-9);
  CHECK(defect <= 2e-9);
}

TEST_CASE("j_exp degenerate branches return the homogeneous part") {
  // x == x0: empty integration window
  SeriesValue at_base = j_exp(1, 0.7, 0.7, {1.3, 0.0}, 3);
  CHECK(at_base.value == homogeneous_term(1, 0.7, 0.7, {1.3, 0.0}, 3));
  CHECK(at_base.converged);
  CHECK(at_base.terms_used == 0);
  // rho = 0: the integral part carries a factor rho^n
  SeriesValue at_zero = j_exp(0, 2.0, 0.5, {0.0, 0.0}, 2);
  CHECK(at_zero.value == homogeneous_term(0, 2.0, 0.5, {0.0, 0.0}, 2));
  CHECK(at_zero.converged);
}

TEST_CASE("j_exp domain checks") {
  CHECK_THROWS_AS(j_exp(0, 1.0, 0.0, {1.0, 0.0}, 2), DomainError);
  CHECK_THROWS_AS(j_exp(0, 1.0, -0.5, {1.0, 0.0}, 2), DomainError);
  CHECK_THROWS_AS(j_exp(0, 0.3, 0.5, {1.0, 0.0}, 2), DomainError);
  CHECK_THROWS_AS(j_exp(5, 1.0, 0.5, {1.0, 0.0}, 2), DomainError);
}

TEST_CASE("h_exp anchors") {
  // n = 1 exactness for any x0
  CHECK(rel_err(h_exp(2.0, 0.5, {1.0, 0.0}, 1).value.real(), std::exp(2.0)) <=
        1e-13);
  // frozen oracle values
  CHECK(rel_err(h_exp(1.0, 1e-4, {1.0, 0.0}, 2).value.real(),
                5.5731696628994012) <= 1e-12);
  // the inner alternating sum at a(x - x0) ~ 7.8 costs a few digits
  CHECK(rel_err(h_exp(2.0, 0.05, {2.0, 0.0}, 2).value.real(),
                11923.852670085616) <= 5e-12);
  // rho = 0 keeps only the s = 0 homogeneous part
  CHECK(rel_err(h_exp(2.0, 0.3, {0.0, 0.0}, 4).value,
                homogeneous_term(0, 2.0, 0.3, {0.0, 0.0}, 4)) <= 1e-14);
}

TEST_CASE("h_exp discrepancy from the series is the measured O(x0^2) defect") {
  double got = h_exp(2.0, 0.05, {2.0, 0.0}, 2).value.real();
  double series = h_series(2.0, {2.0, 0.0}, 2).value.real();
  double rel = std::abs(got - series) / series;
  CHECK(rel >= 4e-8);
  CHECK(rel <= 6e-8);
}

TEST_CASE("h_exp discrepancy decreases strictly as x0 halves") {
  double prev = -1.0;
  double series = h_series(2.0, {1.0, 0.0}, 2).value.real();
  for (double x0 : {0.4, 0.2, 0.1, 0.05, 0.025}) {
    double err = std::abs(h_exp(2.0, x0, {1.0, 0.0}, 2).value.real() - series);
    if (prev >= 0.0) {
      CAPTURE(x0);
      CHECK(err < prev);
    }
    prev = err;
  }
}

TEST_CASE("h_exp_lambda takes the principal root first") {
  CHECK(rel_err(h_exp_lambda(1.0, 0.3, {1.0, 0.0}, RationalOrder{1, 1}).value
                    .real(),
                2.718281828459045) <= 1e-13);
  // lambda = 0: root is 0, only the s = 0 homogeneous part survives
  CHECK(rel_err(h_exp_lambda(2.0, 0.3, {0.0, 0.0}, RationalOrder{1, 2}).value,
                homogeneous_term(0, 2.0, 0.3, {0.0, 0.0}, 2)) <= 1e-14);

  ReprParams params;
  params.x0 = 0.3;
  params.order = RationalOrder{2, 3};
  params.lambda = {2.0, 0.0};
  CHECK(h_exp_lambda(2.0, params).value ==
        h_exp_lambda(2.0, 0.3, {2.0, 0.0}, RationalOrder{2, 3}).value);
}

TEST_CASE("lambda-substituted form agrees with the rho form") {
  const ComplexScalar lambdas[] = {
      {2.0, 0.0}, {0.7, 0.0}, {-1.2, 0.0}, {1.0, 0.5}};
  const RationalOrder orders[] = {{1, 1}, {1, 2}, {2, 3}, {3, 4}};
  for (ComplexScalar lambda : lambdas) {
    for (const RationalOrder& order : orders) {
      CAPTURE(lambda.real());
      CAPTURE(lambda.imag());
      CAPTURE(order.m);
      CAPTURE(order.n);
      ComplexScalar via_rho =
          h_exp_lambda(2.0, 0.3, lambda, order).value;
      ComplexScalar direct =
          h_exp_lambda_direct(2.0, 0.3, lambda, order).value;
      CHECK(rel_err(direct, via_rho) <= 1e-13);
    }
  }
}

TEST_CASE("negative real lambda rides the upper branch consistently") {
  // principal square root of -1.2 has positive imaginary part; both routes
  // must pick the same branch even when the imaginary part is -0.0
  ComplexScalar lambda{-1.2, -0.0};
  ComplexScalar a = h_exp_lambda(1.5, 0.2, lambda, RationalOrder{1, 2}).value;
  ComplexScalar b =
      h_exp_lambda_direct(1.5, 0.2, lambda, RationalOrder{1, 2}).value;
  CHECK(rel_err(a, b) <= 1e-13);
  ComplexScalar rho = principal_root(lambda, 2);
  CHECK(rho.imag() > 0.0);
}
