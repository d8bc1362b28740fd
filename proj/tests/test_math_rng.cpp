// Copyright 2026 The aims-mc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include "aims/math.hpp"
#include "aims/rng.hpp"

using namespace aims;

TEST_CASE("rng streams are deterministic and splittable") {
  Rng a(42);
  Rng b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());

  // Children depend on the seed identity, not on consumption.
  Rng c(42);
  c.normal();
  c.normal();
  CHECK(Rng(42).child(1, 7).next_u64() == c.child(1, 7).next_u64());
  CHECK(Rng(42).child(1, 7).next_u64() != Rng(42).child(1, 8).next_u64());
  CHECK(Rng(42).child(2, 7).next_u64() != Rng(42).child(1, 7).next_u64());
}

TEST_CASE("uniform01 is in [0,1) and roughly uniform") {
  Rng rng(7);
  double sum = 0.0;
  for (int i = 0; i < 100000; ++i) {
    const double u = rng.uniform01();
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
    sum += u;
  }
  CHECK(sum / 100000.0 == doctest::Approx(0.5).epsilon(0.01));
}

TEST_CASE("normal draws have the right moments") {
  Rng rng(11);
  const int n = 200000;
  double m = 0.0, s2 = 0.0;
  for (int i = 0; i < n; ++i) {
    const double z = rng.normal();
    m += z;
    s2 += z * z;
  }
  m /= n;
  s2 = s2 / n - m * m;
  CHECK(std::abs(m) < 4.0 / std::sqrt(static_cast<double>(n)));
  CHECK(s2 == doctest::Approx(1.0).epsilon(0.02));
}

TEST_CASE("log_sum_exp handles extreme and degenerate inputs") {
  CHECK(log_sum_exp(std::vector<double>{0.0, 0.0}) ==
        doctest::Approx(std::log(2.0)));
  CHECK(log_sum_exp(std::vector<double>{kNegInf, kNegInf}) == kNegInf);
  CHECK(log_sum_exp(std::vector<double>{kNegInf, 3.0}) == doctest::Approx(3.0));
  // No overflow with large shifts.
  CHECK(log_sum_exp(std::vector<double>{1000.0, 1000.0 + std::log(3.0)}) ==
        doctest::Approx(1000.0 + std::log(4.0)));
}

TEST_CASE("quantile and median") {
  std::vector<double> xs = {3.0, 1.0, 2.0};
  CHECK(median(xs) == doctest::Approx(2.0));
  CHECK(quantile({1.0, 2.0, 3.0, 4.0}, 0.0) == doctest::Approx(1.0));
  CHECK(quantile({1.0, 2.0, 3.0, 4.0}, 1.0) == doctest::Approx(4.0));
  CHECK(quantile({1.0, 2.0, 3.0, 4.0}, 0.5) == doctest::Approx(2.5));
}

TEST_CASE("lag-1 autocorrelation") {
  CHECK(lag1_autocorrelation(std::vector<double>{1.0, 1.0, 1.0}) == 0.0);
  Rng rng(3);
  std::vector<double> iid(20000);
  for (auto& v : iid) v = rng.normal();
  CHECK(std::abs(lag1_autocorrelation(iid)) < 0.03);
  // A persistent AR(1) sequence has high lag-1 correlation.
  std::vector<double> ar(20000);
  ar[0] = 0.0;
  for (std::size_t i = 1; i < ar.size(); ++i) {
    ar[i] = 0.9 * ar[i - 1] + rng.normal();
  }
  CHECK(lag1_autocorrelation(ar) == doctest::Approx(0.9).epsilon(0.03));
  CHECK(chain_ess_lag1(ar) < 0.1 * static_cast<double>(ar.size()));
}
