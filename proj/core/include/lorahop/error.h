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

#ifndef LORAHOP_ERROR_H_
#define LORAHOP_ERROR_H_

#include <stdexcept>
#include <string>

namespace lorahop {

/// Malformed or inconsistent input: bad files, wrong dimensions, invalid
/// arguments. The CLI maps these to exit status 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A well-formed request that has no acceptable answer (an infeasible
/// scenario, a diverging training run). The CLI maps these to exit status 1.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Throws InputError with `what` when `condition` is false.
void require(bool condition, const std::string& what);

}  // namespace lorahop

#endif  // LORAHOP_ERROR_H_
