// Copyright 2026 The lorahop Authors
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


#include "lorahop/digest.h"

#include <gtest/gtest.h>

#include "lorahop/random.h"

namespace lorahop {
namespace {

TEST(Fnv1a, KnownVectors) {
  EXPECT_EQ(Fnv1a().value(), 0xcbf29ce484222325ULL);
  EXPECT_EQ(Fnv1a().update("a").value(), 0xaf63dc4c8601ec8cULL);
  EXPECT_EQ(Fnv1a().update("foobar").value(), 0x85944171f73967e8ULL);
  EXPECT_EQ(Fnv1a().update("foobar").hex(), "85944171f73967e8");
}

TEST(Fnv1a, IncrementalEqualsOneShot) {
  EXPECT_EQ(Fnv1a().update("foo").update("bar").value(),
            Fnv1a().update("foobar").value());
}

TEST(Fnv1a, FieldsAreLengthPrefixed) {
  EXPECT_NE(Fnv1a().field("ab").field("c").value(),
            Fnv1a().field("a").field("bc").value());
}

TEST(KeyedRandom, DrawsArePureFunctionsOfTheKey) {
  const KeyedRandom r(5);
  EXPECT_EQ(r.bits({1, 2, 3}), r.bits({1, 2, 3}));
  EXPECT_NE(r.bits({1, 2, 3}), r.bits({1, 2, 4}));
  EXPECT_NE(r.bits({1, 2}), r.bits({1, 2, 0}));
  EXPECT_NE(KeyedRandom(6).bits({1, 2, 3}), r.bits({1, 2, 3}));
  for (std::uint64_t k = 0; k < 1000; ++k) {
    const double u = r.uniform({k});
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
}

TEST(KeyedRandom, NormalHasRoughlyUnitMoments) {
  const KeyedRandom r(9);
  double sum = 0.0, sq = 0.0;
  constexpr int kDraws = 20000;
  for (std::uint64_t k = 0; k < kDraws; ++k) {
    const double z = r.normal({k});
    sum += z;
    sq += z * z;
  }
  EXPECT_NEAR(sum / kDraws, 0.0, 0.05);
  EXPECT_NEAR(sq / kDraws, 1.0, 0.05);
}

}  // namespace
}  // namespace lorahop
