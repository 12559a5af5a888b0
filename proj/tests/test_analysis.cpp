#include <doctest.h>

#include <cmath>

#include "rudraksh/analysis.hpp"
#include "rudraksh/params.hpp"

using namespace rudraksh;
using analysis::Pmf;
using analysis::Real;

namespace {

Pmf delta0() { return Pmf(0, {Real(1)}); }

}  // namespace

TEST_SUITE("analysis") {

TEST_CASE("cbd pmf matches the binomial coefficients") {
  const Pmf d2 = analysis::cbd_pmf(2);
  CHECK(d2.lo() == -2);
  CHECK(d2.hi() == 2);
  CHECK(d2.at(-2) == Real(1) / 16);
  CHECK(d2.at(-1) == Real(4) / 16);
  CHECK(d2.at(0) == Real(6) / 16);
  CHECK(d2.at(1) == Real(4) / 16);
  CHECK(d2.at(2) == Real(1) / 16);
  CHECK(d2.variance() == doctest::Approx(1.0).epsilon(1e-12));  // eta/2

  const Pmf d1 = analysis::cbd_pmf(1);
  CHECK(d1.at(-1) == Real(1) / 4);
  CHECK(d1.at(0) == Real(2) / 4);
  CHECK(d1.at(1) == Real(1) / 4);
}

TEST_CASE("rounding pmf properties") {
  const Pmf r = analysis::rounding_pmf(10, 7681);
  CHECK(r.lo() == -4);
  CHECK(r.hi() == 4);
  CHECK(std::abs(r.total().convert_to<double>() - 1.0) < 1e-30);

  // lossless when d = log_q
  const Pmf lossless = analysis::rounding_pmf(13, 7681);
  CHECK(lossless.lo() == 0);
  CHECK(lossless.hi() == 0);
  CHECK(lossless.at(0) == Real(1));

  // error bound ceil(q / 2^(d+1)) for every width in use
  for (ParamName name : kAllParamNames) {
    const ParamSet& ps = paramset(name);
    for (unsigned d : {static_cast<unsigned>(ps.log_p), static_cast<unsigned>(ps.log_t + ps.B)}) {
      const Pmf e = analysis::rounding_pmf(d, ps.q);
      const long bound = (ps.q + (1l << (d + 1)) - 1) / (1l << (d + 1));
      CAPTURE(to_string(name));
      CAPTURE(d);
      CHECK(e.hi() <= bound);
      CHECK(-e.lo() <= bound);
    }
  }
}

TEST_CASE("convolution and product algebra") {
  const Pmf cbd = analysis::cbd_pmf(2);

  const Pmf ident = cbd.convolve(delta0());
  CHECK(ident.lo() == cbd.lo());
  for (long v = ident.lo(); v <= ident.hi(); ++v) CHECK(ident.at(v) == cbd.at(v));

  const Pmf sum = cbd.convolve(cbd);
  CHECK(std::abs(sum.mean()) < 1e-15);
  CHECK(sum.variance() == doctest::Approx(2.0 * cbd.variance()).epsilon(1e-15));

  const Pmf prod = cbd.product(cbd);
  CHECK(prod.lo() >= -4);
  CHECK(prod.hi() <= 4);
  CHECK(std::abs(prod.total().convert_to<double>() - 1.0) < 1e-30);

  const Pmf skew = cbd.convolve(analysis::rounding_pmf(3, 3329));
  const Pmf neg = skew.negate();
  CHECK(std::abs(neg.mean() + skew.mean()) < 1e-12);
  CHECK(neg.lo() == -skew.hi());
  CHECK(neg.at(neg.lo()) == skew.at(skew.hi()));

  const Pmf p8 = cbd.power_convolve(8);
  CHECK(p8.variance() == doctest::Approx(8.0 * cbd.variance()).epsilon(1e-12));
  const Pmf p1 = cbd.power_convolve(1);
  CHECK(p1.lo() == cbd.lo());
  CHECK(p1.at(0) == cbd.at(0));
}

TEST_CASE("per-coefficient noise pmf: normalization, moments, failure exponent") {
  // Values frozen from an independent float64 prototype of the same model.
  struct Expect {
    ParamName name;
    double mean, variance, log2_failure;
  };
  const Expect expected[] = {
      {ParamName::poly32, 0.003922, 10009.861, -113.972},
      {ParamName::poly64, 0.015623, 8720.056, -128.212},
      {ParamName::poly128, 0.062481, 15928.249, -179.939},
  };
  for (const Expect& e : expected) {
    const ParamSet& ps = paramset(e.name);
    CAPTURE(to_string(e.name));
    const Pmf noise = analysis::noise_pmf(ps);

    const double norm_err = std::abs((noise.total() - 1).convert_to<double>());
    CHECK(norm_err < std::ldexp(1.0, -80));

    CHECK(noise.mean() == doctest::Approx(e.mean).epsilon(2e-3));
    CHECK(noise.variance() == doctest::Approx(e.variance).epsilon(1e-4));
    CHECK(analysis::failure_log2(ps) == doctest::Approx(e.log2_failure).epsilon(0.0005));
  }
}

TEST_CASE("failure exponent decreases with an extra reconciliation bit") {
  ParamSet wider = paramset(ParamName::poly64);
  const double base = analysis::failure_log2(wider);
  wider.log_t += 1;
  const double more_bits = analysis::failure_log2(wider);
  CHECK(more_bits < base - 1.0);
}

TEST_CASE("repetition-code failure combinator") {
  CHECK(analysis::repeat_failure(0.0, 1) == 0.0);
  CHECK(analysis::repeat_failure(0.0, 3) == 0.0);
  CHECK(analysis::repeat_failure(0.0, 4) == 0.0);
  CHECK(analysis::repeat_failure(0.25, 1) == doctest::Approx(0.25));
  CHECK(analysis::repeat_failure(0.5, 3) == doctest::Approx(0.5));

  for (double f : {1e-4, 0.01, 0.2}) {
    CAPTURE(f);
    CHECK(analysis::repeat_failure(f, 3) ==
          doctest::Approx(3 * f * f * (1 - f) + f * f * f).epsilon(1e-12));
    CHECK(analysis::repeat_failure(f, 4) ==
          doctest::Approx(3 * f * f * (1 - f) * (1 - f) + 4 * f * f * f * (1 - f) +
                          f * f * f * f)
              .epsilon(1e-12));
  }
  const double tiny = std::ldexp(1.0, -10);
  CHECK(analysis::repeat_failure(tiny, 4) ==
        doctest::Approx(3 * tiny * tiny).epsilon(0.01));
}

TEST_CASE("memory footprint model") {
  using analysis::memory_footprint_bits;
  CHECK(memory_footprint_bits(64, 13, 9, 320) == 11456);
  CHECK(memory_footprint_bits(32, 15, 21, 320) == 12640);
  CHECK(memory_footprint_bits(128, 12, 4, 320) == 12928);
  CHECK(memory_footprint_bits(256, 12, 2, 1600) == 21632);
  CHECK(memory_footprint_bits(512, 14, 1, 1600) == 39040);
}

TEST_CASE("comparison table rows") {
  const auto rows = analysis::comparison_table();
  REQUIRE(rows.size() == 5);
  CHECK(rows[0].name == "poly32");
  CHECK(rows[1].name == "poly64");
  CHECK(rows[2].name == "poly128");
  CHECK(rows[3].name == "kyber512");
  CHECK(rows[4].name == "newhope512");

  CHECK(rows[1].memory_bits == 11456);
  for (const auto& row : rows) {
    if (row.name == "poly64") continue;
    CAPTURE(row.name);
    CHECK(rows[1].memory_bits < row.memory_bits);
  }
  CHECK(rows[3].xof_state_bits == 1600);
  CHECK(rows[4].xof_state_bits == 1600);
  CHECK(rows[1].pk_bytes == 952);
  CHECK(rows[1].sk_bytes == 1920);
  CHECK(rows[1].ct_bytes == 760);
  CHECK(rows[3].pk_bytes == 800);
  CHECK(rows[3].ct_bytes == 768);
  CHECK(rows[4].pk_bytes == 928);
  CHECK(rows[4].ct_bytes == 1120);
}

}  // TEST_SUITE
