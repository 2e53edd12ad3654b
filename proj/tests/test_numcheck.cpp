#include <doctest.h>

#include <cmath>

#include "darboux/corpus.hpp"
#include "darboux/errors.hpp"
#include "darboux/numcheck.hpp"
#include "support.hpp"

using namespace testing;

namespace {

std::vector<double> random_point(Rng& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> x(n);
  for (auto& c : x) c = u(rng.engine());
  return x;
}

}  // namespace

TEST_SUITE("numcheck") {
  TEST_CASE("free motion in the q2 sector of S1") {
    auto s1 = load_builtin("s1");
    auto traj = integrate_rk4(s1, {0, 0, 0, 1}, 1e-3, 1.0);
    CHECK(traj.method == "rk4");
    CHECK(traj.h == 1e-3);
    REQUIRE(traj.samples.size() == 1001);
    CHECK(traj.samples.back().t == 1.0);
    for (std::size_t k = 1; k < traj.samples.size(); ++k) {
      const auto& s = traj.samples[k];
      REQUIRE(s.t > traj.samples[k - 1].t);
      REQUIRE(s.state.size() == 4);
      REQUIRE(std::fabs(s.state[1] - s.t) < 1e-12);
      REQUIRE(s.state[3] == 1.0);
      REQUIRE(s.state[0] == 0.0);
    }
  }

  TEST_CASE("shortened final step") {
    auto s2 = load_builtin("s2");
    auto traj = integrate_rk4(s2, {0.1, 0.2, 0.3, 0.4}, 0.3, 1.0);
    REQUIRE(traj.samples.size() == 5);
    CHECK(traj.samples.back().t == 1.0);
    CHECK(traj.samples[3].t == doctest::Approx(0.9));
  }

  TEST_CASE("input validation") {
    auto s2 = load_builtin("s2");
    CHECK_THROWS_AS(integrate_rk4(s2, {0, 0, 0, 1}, 0.0, 1.0), InputError);
    CHECK_THROWS_AS(integrate_rk4(s2, {0, 0, 0, 1}, -1e-3, 1.0), InputError);
    CHECK_THROWS_AS(integrate_rk4(s2, {0, 0, 0, 1}, 1e-3, 0.0), InputError);
    CHECK_THROWS_AS(integrate_rk4(s2, {0, 0, 1}, 1e-3, 1.0), InputError);
    auto s3 = load_builtin("s3");
    CHECK_THROWS_AS(drift(s3, P(s3, "i*p2 + sqrt(2)*q2^2"), {0, 0, 0, 1}, 1e-3, 1.0), InputError);
    CHECK_NOTHROW(drift(s3, P(s3, "p2^2 + 2*q2^4"), {0, 0, 0, 1}, 1e-3, 1.0));
    auto complex_mu = system("i, 1", "q1^4", QI(2));
    CHECK_THROWS_AS(integrate_rk4(complex_mu, {0, 0, 0, 1}, 1e-3, 1.0), InputError);
  }

  TEST_CASE("drift of integrals and non-integrals") {
    Rng rng(41);
    auto s2 = load_builtin("s2");
    auto s4 = load_builtin("s4");
    auto l = P(s2, "q1*p2 - q2*p1");
    auto f4 = P(s4, "p2*(p1*q2 - p2*q1) + 1/3*q2^2*(2*q1^3 + q1*q2^2)");
    double worst_p1 = 0;
    for (int k = 0; k < 16; ++k) {
      auto x0 = random_point(rng, 4);
      CHECK(drift(s2, l, x0, 1e-3, 1.0) <= 1e-6);
      CHECK(drift(s2, s2.hamiltonian(), x0, 1e-3, 1.0) <= 1e-8);
      CHECK(drift(s4, f4, x0, 1e-3, 1.0) <= 1e-6);
      worst_p1 = std::max(worst_p1, drift(s2, P(s2, "p1"), x0, 1e-3, 1.0));
    }
    CHECK(worst_p1 > 1e-2);
  }

  TEST_CASE("fourth-order convergence") {
    auto s2 = load_builtin("s2");
    const std::vector<double> x0 = {0.7, -0.4, 0.5, 0.9};
    const double e1 = drift(s2, s2.hamiltonian(), x0, 0.1, 1.0);
    const double e2 = drift(s2, s2.hamiltonian(), x0, 0.05, 1.0);
    const double e3 = drift(s2, s2.hamiltonian(), x0, 0.025, 1.0);
    CHECK(e1 / e2 >= 8.0);
    CHECK(e2 / e3 >= 8.0);
  }

  TEST_CASE("real evaluation") {
    auto s3 = load_builtin("s3");
    RealPoly f(P(s3, "1/2*p1^2 - 3*q1*q2^3 + 2"));
    CHECK(f({1.0, 2.0, 4.0, 0.0}) == doctest::Approx(8.0 - 24.0 + 2.0));
    CHECK_THROWS_AS(RealPoly(P(s3, "sqrt(2)*i*q1")), InputError);
    RealPoly g(P(s3, "sqrt(2)*q1"));
    CHECK(g({1.0, 0, 0, 0}) == doctest::Approx(std::sqrt(2.0)));
  }
}
