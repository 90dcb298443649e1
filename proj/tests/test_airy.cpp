#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "invlim/airy.hpp"

using namespace invlim;
namespace airy_detail = invlim::airy_detail;

TEST_CASE("airy reference values") {
  struct Ref {
    double x, ai, aip;
  };
  // reference: 25-digit evaluations of Ai, Ai'
  const Ref refs[] = {
      {0.0, 0.35502805388781723926, -0.25881940379280679841},
      {1.0, 0.13529241631288141552, -0.15914744129679321279},
      {-1.0, 0.53556088329235211880, -0.01016056711664520940},
      {2.3, 0.02183199318062263861, -0.03517312272081807206},
      {4.5, 3.3025032351430898366e-4, -7.1786656755750888869e-4},
      {-5.0, 0.35076100902411431979, 0.32719281855444313679},
      {-9.7, 0.28023750191629778381, 0.48628629123926627751},
      {5.0, 1.0834442813607441735e-4, -2.4741389086846247600e-4},
      {8.0, 4.6922076160992316256e-8, -1.3414392979067865743e-7},
      {10.0, 1.1047532552898685934e-10, -3.5206336767389236366e-10},
      {10.5, 2.2022745192834016435e-11, -7.1876967814515670913e-11},
      {14.0, 9.9202054911923772663e-17, -3.7293101100179006797e-16},
      {20.0, 1.6916728686705403136e-27, -7.5863916257483549605e-27},
  };
  for (const auto& r : refs) {
    CAPTURE(r.x);
    CHECK(airy_ai(r.x) == Catch::Approx(r.ai).epsilon(2e-13).margin(1e-280));
    CHECK(airy_ai_prime(r.x) ==
          Catch::Approx(r.aip).epsilon(2e-13).margin(1e-280));
  }
}

TEST_CASE("airy satisfies its equation") {
  for (double x : {-8.3, -3.1, 0.7, 2.9, 6.6, 9.4}) {
    const double h = 1e-3;
    const double second =
        (airy_ai(x - h) - 2.0 * airy_ai(x) + airy_ai(x + h)) / (h * h);
    CHECK(second == Catch::Approx(x * airy_ai(x)).margin(5e-7));
    const double first = (airy_ai(x + h) - airy_ai(x - h)) / (2.0 * h);
    CHECK(first == Catch::Approx(airy_ai_prime(x)).margin(5e-7));
  }
}

TEST_CASE("airy asymptotic branch matches series branch") {
  for (double x : {9.2, 9.75, 10.0}) {
    const double series = airy_detail::eval(x).value;
    const double asym = airy_detail::asymptotic(x).value;
    CHECK(std::fabs(series - asym) / asym < 1e-11);
  }
}

TEST_CASE("airy tail integrals") {
  CHECK(airy_tail_integral(0.0) == Catch::Approx(1.0 / 3.0).epsilon(1e-11));
  CHECK(airy_tail_integral(8.0) ==
        Catch::Approx(1.6090849759132706554e-8).epsilon(1e-9));
  CHECK(airy_sq_tail_integral(8.0) ==
        Catch::Approx(3.8114404962281290126e-16).epsilon(1e-8));
  CHECK(airy_weighted_sq_tail_integral(8.0) ==
        Catch::Approx(6.5335632069298490627e-17).epsilon(1e-8));
}
