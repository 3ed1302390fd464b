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

#include "lorahop/model_io.h"

#include <bit>
#include <cctype>
#include <cmath>
#include <cstring>
#include <iomanip>
#include <sstream>

#include "lorahop/error.h"

namespace lorahop::predictor {
namespace {

constexpr char kMagic[4] = {'F', 'H', 'O', 'P'};

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int k = 0; k < 4; ++k) out.push_back(static_cast<std::uint8_t>(v >> (8 * k)));
}

void put_f32(std::vector<std::uint8_t>& out, float v) {
  put_u32(out, std::bit_cast<std::uint32_t>(v));
}

class Reader {
 public:
  explicit Reader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  std::uint32_t u32() {
    if (bytes_.size() - at_ < 4) {
      throw InputError("model file truncated at byte " + std::to_string(at_));
    }
    std::uint32_t v = 0;
    for (int k = 0; k < 4; ++k) v |= std::uint32_t{bytes_[at_ + k]} << (8 * k);
    at_ += 4;
    return v;
  }
  float f32() { return std::bit_cast<float>(u32()); }
  std::size_t remaining() const { return bytes_.size() - at_; }

 private:
  std::span<const std::uint8_t> bytes_;
  std::size_t at_ = 0;
};

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  const auto first = static_cast<unsigned char>(s[0]);
  if (!(std::isalpha(first) || first == '_')) return false;
  for (char c : s) {
    const auto u = static_cast<unsigned char>(c);
    if (!(std::isalnum(u) || u == '_')) return false;
  }
  return true;
}

}  // namespace

std::size_t flat_size(int input_dim, int outputs) {
  const std::size_t floats =
      static_cast<std::size_t>(input_dim) * kHiddenWidth + kHiddenWidth +
      kHiddenWidth * kHiddenWidth + kHiddenWidth +
      static_cast<std::size_t>(kHiddenWidth) * outputs + outputs;
  return kFlatHeaderBytes + 4 * floats;
}

std::vector<std::uint8_t> export_flat(const FcnnModel& model) {
  std::vector<std::uint8_t> out;
  out.reserve(flat_size(model.input_dim(), model.output_dim()));
  out.insert(out.end(), std::begin(kMagic), std::end(kMagic));
  put_u32(out, kFlatVersion);
  put_u32(out, static_cast<std::uint32_t>(model.input_dim()));
  put_u32(out, static_cast<std::uint32_t>(model.output_dim()));
  put_u32(out, kHiddenWidth);
  put_u32(out, static_cast<std::uint32_t>(model.activation));
  std::uint32_t mask = 0;
  for (int l = 0; l < kLayers; ++l) mask |= model.l1_layers[l] ? 1u << l : 0u;
  put_u32(out, mask);
  put_f32(out, model.l1_lambda);
  for (const DenseLayer& layer : model.layers) {
    for (float w : layer.kernel) put_f32(out, w);
    for (float b : layer.bias) put_f32(out, b);
  }
  return out;
}

FcnnModel import_flat(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 4 || std::memcmp(bytes.data(), kMagic, 4) != 0) {
    throw InputError("not a model file: bad magic");
  }
  Reader in(bytes.subspan(4));
  const std::uint32_t version = in.u32();
  if (version != kFlatVersion) {
    throw InputError("unsupported model file version " +
                     std::to_string(version));
  }
  const std::uint32_t input_dim = in.u32();
  const std::uint32_t outputs = in.u32();
  const std::uint32_t hidden = in.u32();
  const std::uint32_t activation = in.u32();
  const std::uint32_t mask = in.u32();
  const float lambda = in.f32();
  require(hidden == kHiddenWidth, "model file hidden width must be 10");
  require(activation <= 1, "model file names an unknown activation");
  require(mask < (1u << kLayers), "model file L1 mask has unknown bits");
  require(input_dim >= 1 && input_dim < (1u << 20), "bad model input_dim");
  require(outputs >= 2 && outputs < (1u << 16), "bad model output count");
  require(std::isfinite(lambda) && lambda >= 0.0f, "bad model l1_lambda");

  FcnnModel m = make_model(static_cast<int>(input_dim),
                           static_cast<int>(outputs),
                           static_cast<Activation>(activation));
  m.l1_lambda = lambda;
  for (int l = 0; l < kLayers; ++l) m.l1_layers[l] = (mask >> l) & 1u;
  const std::size_t expected =
      flat_size(static_cast<int>(input_dim), static_cast<int>(outputs)) -
      kFlatHeaderBytes;
  if (in.remaining() < expected) {
    throw InputError("model file truncated: " + std::to_string(expected) +
                     " tensor bytes expected, " +
                     std::to_string(in.remaining()) + " present");
  }
  if (in.remaining() > expected) {
    throw InputError("model file has trailing bytes");
  }
  for (DenseLayer& layer : m.layers) {
    for (float& w : layer.kernel) w = in.f32();
    for (float& b : layer.bias) b = in.f32();
    for (float v : layer.kernel) require(std::isfinite(v), "non-finite weight");
    for (float v : layer.bias) require(std::isfinite(v), "non-finite bias");
  }
  return m;
}

std::string export_c_array(const FcnnModel& model, std::string_view symbol) {
  if (!is_identifier(symbol)) {
    throw InputError("'" + std::string(symbol) + "' is not a C identifier");
  }
  const std::vector<std::uint8_t> bytes = export_flat(model);
  std::ostringstream out;
  out << "// Flat channel-predictor model (FHOP v" << kFlatVersion << ").\n";
  out << "const unsigned char " << symbol << "[] = {";
  out << std::hex << std::setfill('0');
  for (std::size_t k = 0; k < bytes.size(); ++k) {
    out << (k % 12 == 0 ? "\n  " : " ") << "0x" << std::setw(2)
        << static_cast<int>(bytes[k]) << (k + 1 < bytes.size() ? "," : "");
  }
  out << std::dec << "\n};\n";
  out << "const unsigned int " << symbol << "_len = " << bytes.size() << ";\n";
  return out.str();
}

std::vector<std::uint8_t> parse_c_array(std::string_view text) {
  const std::size_t open = text.find('{');
  const std::size_t close = text.find('}', open);
  require(open != std::string_view::npos && close != std::string_view::npos,
          "no array initialiser found");
  std::vector<std::uint8_t> out;
  std::string body(text.substr(open + 1, close - open - 1));
  std::istringstream items(body);
  std::string item;
  while (std::getline(items, item, ',')) {
    const auto b = item.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) continue;
    const auto e = item.find_last_not_of(" \t\r\n");
    const std::string token = item.substr(b, e - b + 1);
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(token, &used, 0);
    } catch (const std::exception&) {
      used = 0;
    }
    require(used == token.size() && v <= 0xff,
            "bad byte literal '" + token + "' in array");
    out.push_back(static_cast<std::uint8_t>(v));
  }
  return out;
}

}  // namespace lorahop::predictor
