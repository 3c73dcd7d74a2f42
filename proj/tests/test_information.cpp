#include <cmath>

#include <doctest.h>

#include "oracles.hpp"
#include "probekit/information.hpp"
#include "probekit/probe_model.hpp"

using namespace probekit;

namespace {
constexpr double kThird = ErrorRate::kMax;
}

TEST_CASE("overlap endpoints and anchor values") {
  CHECK(overlap_from_vectors(ErrorRate(0.0)).value() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(overlap_closed_form(ErrorRate(0.0)).value() == 1.0);
  CHECK(overlap_from_vectors(ErrorRate(kThird)).value() ==
        doctest::Approx(0.0).epsilon(1e-13));
  CHECK(overlap_closed_form(ErrorRate(kThird)).value() <= 1e-12);

  CHECK(overlap_from_vectors(ErrorRate(0.2)).value() == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(overlap_closed_form(ErrorRate(0.2)).value() == doctest::Approx(0.5).epsilon(1e-15));
  // sgn = -1 branch and the degenerate sgn = 0 point.
  CHECK(overlap_closed_form(ErrorRate(0.3)).value() ==
        doctest::Approx(1.0 / 7.0).epsilon(1e-15));
  CHECK(overlap_closed_form(ErrorRate(0.25)).value() ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("renyi information values") {
  CHECK(renyi_information(OverlapQ(1.0)).value == 0.0);
  CHECK(renyi_information(OverlapQ(0.0)).value == 1.0);
  CHECK(renyi_information(OverlapQ(0.5)).value ==
        doctest::Approx(0.8073549220576041).epsilon(1e-14));
  CHECK(renyi_information_from_error(ErrorRate(0.1)).value ==
        doctest::Approx(0.4803289595305630).epsilon(1e-14));
  CHECK(renyi_information_from_error(ErrorRate(0.3)).value ==
        doctest::Approx(0.9852029980719195).epsilon(1e-14));
}

TEST_CASE("overlap domain is validated") {
  CHECK_THROWS_AS(OverlapQ(1.5), std::domain_error);
  CHECK_THROWS_AS(OverlapQ(-0.1), std::domain_error);
  // Floating dust from the vector route is clamped, not rejected.
  CHECK(OverlapQ(-1e-13).value() == 0.0);
  CHECK(OverlapQ(1.0 + 1e-13).value() == 1.0);
}

TEST_CASE("route equivalence across both sign branches") {
  constexpr int kN = 1000;
  for (int i = 0; i < kN; ++i) {
    const double ev =
        i == kN - 1 ? kThird : kThird * static_cast<double>(i) / static_cast<double>(kN - 1);
    const ErrorRate e(ev);
    CHECK(std::abs(overlap_from_vectors(e).value() - overlap_closed_form(e).value()) <=
          1e-12);
  }
  // Include the sign-degenerate point explicitly.
  const ErrorRate quarter(0.25);
  CHECK(std::abs(overlap_from_vectors(quarter).value() -
                 overlap_closed_form(quarter).value()) <= 1e-12);
}

TEST_CASE("Q decreases and information increases in E") {
  constexpr int kN = 1000;
  double prev_q = 2.0;
  double prev_i = -1.0;
  for (int i = 0; i < kN; ++i) {
    const double ev =
        i == kN - 1 ? kThird : kThird * static_cast<double>(i) / static_cast<double>(kN - 1);
    const double q = overlap_closed_form(ErrorRate(ev)).value();
    const double bits = oracle::renyi_bits(q);
    if (i > 0) {
      CHECK(q < prev_q);
      CHECK(bits > prev_i);
    }
    prev_q = q;
    prev_i = bits;
  }
}

TEST_CASE("overlap equals the inconclusive rate of the optimal receiver") {
  for (int i = 0; i <= 100; ++i) {
    const double ev = i == 100 ? kThird : kThird * i / 100.0;
    const ErrorRate e(ev);
    CHECK(std::abs(overlap_closed_form(e).value() - inconclusive_from_error(e).value()) <=
          1e-12);
  }
}
