#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "flowcast/latency.hpp"
#include "flowcast/rng.hpp"

using namespace flowcast;

TEST_CASE("horizon for the measured deployment profile") {
  LatencyProfile p; // 125 / 200 / 50 ms at a 100 ms control period
  CHECK(compute_horizon(p).h == 4);
}

TEST_CASE("horizon degenerate and fractional cases") {
  LatencyProfile p;
  p.delta_o = p.delta_i = p.delta_c = 0.0;
  CHECK(compute_horizon(p).h == 0);

  p.delta_o = 0.31; p.delta_i = 0.0; p.delta_c = 0.0;
  CHECK(compute_horizon(p).h == 4); // ceil(3.1)

  p.delta_o = 0.1; p.delta_i = 0.2; p.delta_c = 0.1;
  // The float sum is 0.4000000000000001; the near-multiple guard must keep
  // this at 4 instead of letting ceil produce 5.
  CHECK(compute_horizon(p).h == 4);
}

TEST_CASE("horizon margin adds whole steps") {
  LatencyProfile p;
  CHECK(compute_horizon(p, 0).h == 4);
  CHECK(compute_horizon(p, 2).h == 6);
  CHECK_THROWS_AS(compute_horizon(p, -1), std::invalid_argument);
}

TEST_CASE("horizon monotone in every component") {
  Rng rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    LatencyProfile p;
    p.delta_o = rng.uniform(0.0, 0.5);
    p.delta_i = rng.uniform(0.0, 0.5);
    p.delta_c = rng.uniform(0.0, 0.5);
    p.dt = rng.uniform(0.02, 0.3);
    int h = compute_horizon(p).h;
    CHECK(h >= 0);
    double bump = rng.uniform(0.0, 0.3);
    LatencyProfile q;

    q = p; q.delta_o += bump;
    CHECK(compute_horizon(q).h >= h);
    q = p; q.delta_i += bump;
    CHECK(compute_horizon(q).h >= h);
    q = p; q.delta_c += bump;
    CHECK(compute_horizon(q).h >= h);
    // Larger control period can only shrink the step count.
    q = p; q.dt = p.dt + rng.uniform(0.0, 0.2);
    CHECK(compute_horizon(q).h <= h);
  }
}

TEST_CASE("profile validation") {
  LatencyProfile p;
  p.dt = 0.0;
  CHECK_THROWS_AS(compute_horizon(p), std::invalid_argument);
  p = LatencyProfile{};
  p.delta_i = -0.01;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  p = LatencyProfile{};
  p.jitter_frac = 1.0;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
}

TEST_CASE("jitter sampling") {
  LatencyProfile p; // total 0.375

  SUBCASE("zero jitter returns the exact total") {
    Rng rng(123);
    for (int i = 0; i < 10; ++i)
      CHECK(sample_total_latency(p, rng) == p.total());
  }

  SUBCASE("draws stay inside the jitter band") {
    p.jitter_frac = 0.2;
    Rng rng(5);
    for (int i = 0; i < 1000; ++i) {
      double d = sample_total_latency(p, rng);
      CHECK(d >= p.total() * 0.8);
      CHECK(d <= p.total() * 1.2);
    }
  }

  SUBCASE("seeded draw is reproducible") {
    p.jitter_frac = 0.2;
    Rng a(42), b(42);
    double first = sample_total_latency(p, a);
    CHECK(first == sample_total_latency(p, b));
    // Frozen regression value for seed 42 (documented generator: splitmix64,
    // first draw mapped to [0.8, 1.2] of the 375 ms total).
    CHECK(first == doctest::Approx(0.41123473181577352).epsilon(1e-12));
  }
}

TEST_CASE("profile json round trip") {
  LatencyProfile p;
  p.delta_o = 0.08;
  p.jitter_frac = 0.15;
  LatencyProfile q = profile_from_json(profile_to_json(p));
  CHECK(q.delta_o == p.delta_o);
  CHECK(q.delta_i == p.delta_i);
  CHECK(q.delta_c == p.delta_c);
  CHECK(q.dt == p.dt);
  CHECK(q.jitter_frac == p.jitter_frac);
}

TEST_CASE("rng basics") {
  Rng a(9), b(9);
  for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
  Rng c(9);
  for (int i = 0; i < 1000; ++i) {
    double u = c.u01();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
  // Forked streams are decoupled from each other and the parent.
  Rng root(3);
  Rng f0 = root.fork(0), f1 = root.fork(1);
  CHECK(f0.next_u64() != f1.next_u64());
  CHECK(root.next_u64() != f0.next_u64());
}
