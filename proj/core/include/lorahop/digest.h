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

#ifndef LORAHOP_DIGEST_H_
#define LORAHOP_DIGEST_H_

#include <cstdint>
#include <string>
#include <string_view>

namespace lorahop {

// 64-bit FNV-1a, incremental. Not cryptographic; identifies inputs in run
// manifests.
class Fnv1a {
 public:
  Fnv1a& update(std::string_view bytes);
  // Length-prefixed, so ("ab", "c") and ("a", "bc") differ.
  Fnv1a& field(std::string_view bytes);
  std::uint64_t value() const { return state_; }
  std::string hex() const;

 private:
  std::uint64_t state_ = 0xcbf29ce484222325ULL;
};

}  // namespace lorahop

#endif  // LORAHOP_DIGEST_H_
