// Copyright 2026 The apxeq Authors
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

#include <limits>
#include <set>

#include "doctest.h"

#include "uniform/composition.hpp"
#include "uniform/selectors.hpp"

using namespace apxeq;

TEST_CASE("enumeration order for n=3, k=2") {
  const auto stream = enumerate_k_uniform(3, 2);
  const std::vector<std::vector<std::int64_t>> expected = {
      {2, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 2, 0}, {0, 1, 1}, {0, 0, 2}};
  REQUIRE(stream.size() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) CHECK(stream[i].counts == expected[i]);
}

TEST_CASE("single part and zero k") {
  const auto single = enumerate_k_uniform(1, 5);
  REQUIRE(single.size() == 1);
  CHECK(single[0].counts == std::vector<std::int64_t>{5});

  const auto zero = enumerate_k_uniform(4, 0);
  REQUIRE(zero.size() == 1);
  CHECK(zero[0].counts == std::vector<std::int64_t>{0, 0, 0, 0});
  CHECK_THROWS_AS(zero[0].to_strategy(), Error);
}

TEST_CASE("stream size and uniqueness up to n,k = 8") {
  for (std::size_t n = 1; n <= 8; ++n) {
    for (std::int64_t k = 0; k <= 8; ++k) {
      const auto stream = enumerate_k_uniform(n, k);
      CHECK(stream.size() == composition_count(n, k));
      std::set<std::vector<std::int64_t>> seen;
      for (const auto& cv : stream) {
        std::int64_t sum = 0;
        for (auto c : cv.counts) {
          CHECK(c >= 0);
          sum += c;
        }
        CHECK(sum == k);
        seen.insert(cv.counts);
      }
      CHECK(seen.size() == stream.size());
    }
  }
  CHECK(composition_count(4, 3) == 20);
}

TEST_CASE("worker slices reproduce the full stream in order") {
  const auto full = enumerate_k_uniform(5, 6);
  for (int workers : {1, 2, 3, 4, 7}) {
    std::vector<CountVector> merged;
    for (int w = 0; w < workers; ++w) {
      const auto part = enumerate_k_uniform_slice(5, 6, w, workers);
      merged.insert(merged.end(), part.begin(), part.end());
    }
    REQUIRE(merged.size() == full.size());
    for (std::size_t i = 0; i < full.size(); ++i) CHECK(merged[i].counts == full[i].counts);
  }
}

TEST_CASE("cursor seek agrees with sequential advance") {
  const auto full = enumerate_k_uniform(4, 7);
  for (std::uint64_t rank = 0; rank < full.size(); rank += 13) {
    CompositionCursor cursor(4, 7, rank);
    REQUIRE(!cursor.done());
    CHECK(cursor.count_vector().counts == full[rank].counts);
  }
}

TEST_CASE("k_for_lipschitz pinned values") {
  CHECK(k_for_lipschitz(2, 1, 2, 1, 0.5) == 512);
  CHECK(k_for_lipschitz(1, 1, 2, 1, 1) == 32);
  // Doubling epsilon divides k by four (up to the ceiling).
  CHECK(k_for_lipschitz(2, 1, 2, 1, 0.25) == 4 * 512);
  CHECK_THROWS_AS(k_for_lipschitz(2, 1, 2, 1, 0.0), Error);
}

TEST_CASE("l_for_regret pinned values") {
  CHECK(l_for_regret(1, 2, 1, 0.1) == 800);
  CHECK(l_for_regret(1, 2, 1, 1) == 8);
  CHECK(l_for_regret(2, 2, 1, 0.1) == 4 * 800);
}

TEST_CASE("l_for_penalty_br pinned values") {
  CHECK(l_for_penalty_br(1, 4, 0.5) == 136);
  CHECK(l_for_penalty_br(1, 4, 1) == 34);
  CHECK(l_for_penalty_br(3, 4, 1) == 9 * 34);
}

TEST_CASE("k_for_penalty minimality and pinned value") {
  // Frozen from a direct scan of B(k) over k = 1, 2, ...
  const std::int64_t k = k_for_penalty(10, 1, 2, 0.5);
  CHECK(k == 2049);
  CHECK(penalty_failure_bound(k, 10, 1, 2, 0.5) < 1.0);
  CHECK(penalty_failure_bound(k - 1, 10, 1, 2, 0.5) >= 1.0);
  CHECK(k_for_penalty(10, 1, 2, 1.0) == 513);

  // n never decreases k.
  CHECK(k_for_penalty(20, 1, 2, 0.5) >= k);
  CHECK_THROWS_AS(k_for_penalty(10, 1, 2, 1e-9), Error);
  try {
    k_for_penalty(10, 1, 2, 1e-9);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CapExceeded);
  }
}

TEST_CASE("selectors are monotone in epsilon and lambda") {
  double prev_k = 1e18, prev_l = 1e18, prev_kp = 1e18, prev_lp = 1e18;
  for (double eps : {0.1, 0.2, 0.4, 0.8}) {
    const auto k = static_cast<double>(k_for_lipschitz(2, 1.5, 2, 1, eps));
    const auto l = static_cast<double>(l_for_regret(1.5, 2, 1, eps));
    const auto kp = static_cast<double>(k_for_penalty(6, 1.5, 2, eps));
    const auto lp = static_cast<double>(l_for_penalty_br(1.5, 2, eps));
    CHECK(k <= prev_k);
    CHECK(l <= prev_l);
    CHECK(kp <= prev_kp);
    CHECK(lp <= prev_lp);
    prev_k = k;
    prev_l = l;
    prev_kp = kp;
    prev_lp = lp;
  }
  for (double lo = 0.5, hi = 1.0; hi <= 4.0; lo = hi, hi *= 2) {
    CHECK(k_for_lipschitz(2, hi, 2, 1, 0.3) >= k_for_lipschitz(2, lo, 2, 1, 0.3));
    CHECK(l_for_regret(hi, 2, 1, 0.3) >= l_for_regret(lo, 2, 1, 0.3));
    CHECK(k_for_penalty(6, hi, 2, 0.3) >= k_for_penalty(6, lo, 2, 0.3));
    CHECK(l_for_penalty_br(hi, 2, 0.3) >= l_for_penalty_br(lo, 2, 0.3));
  }
}

TEST_CASE("binomial saturates instead of overflowing") {
  CHECK(binomial_saturated(6, 3) == 20);
  CHECK(binomial_saturated(500, 250) == static_cast<std::uint64_t>(
                                            std::numeric_limits<std::int64_t>::max()));
}

TEST_CASE("oversized streams refuse to rank") {
  CHECK_THROWS_AS(CompositionCursor(50, 50, 0), Error);
  try {
    CompositionCursor cursor(50, 50, 0);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CapExceeded);
  }
}
