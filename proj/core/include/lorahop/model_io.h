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

// Flat model file, all fields little-endian:
//
//   offset  size  field
//        0     4  magic "FHOP"
//        4     4  u32 version (1)
//        8     4  u32 input_dim
//       12     4  u32 outputs (F)
//       16     4  u32 hidden width (10)
//       20     4  u32 activation (0 relu, 1 tanh)
//       24     4  u32 L1 layer mask (bit l set: kernel l penalised)
//       28     4  f32 l1_lambda
//       32        f32 tensors, per layer: kernel (row-major in x out), bias

#ifndef LORAHOP_MODEL_IO_H_
#define LORAHOP_MODEL_IO_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lorahop/fcnn.h"

namespace lorahop::predictor {

inline constexpr std::uint32_t kFlatVersion = 1;
inline constexpr std::size_t kFlatHeaderBytes = 32;

std::size_t flat_size(int input_dim, int outputs);

std::vector<std::uint8_t> export_flat(const FcnnModel& model);
// Throws InputError on bad magic, unknown version, truncation, trailing
// bytes or non-finite parameters.
FcnnModel import_flat(std::span<const std::uint8_t> bytes);

// C source declaring `const unsigned char <symbol>[]` holding export_flat
// bytes and `const unsigned int <symbol>_len`. Throws InputError unless
// `symbol` is a C identifier.
std::string export_c_array(const FcnnModel& model, std::string_view symbol);
// Extracts the byte initialiser of the first array in `text`.
std::vector<std::uint8_t> parse_c_array(std::string_view text);

}  // namespace lorahop::predictor

#endif  // LORAHOP_MODEL_IO_H_
