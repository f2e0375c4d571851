// Copyright 2026 The cqbox Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "json.hpp"

#include "cqbox/boxes/cc_box.hpp"
#include "cqbox/boxes/cq_box.hpp"
#include "cqbox/core/error.hpp"
#include "cqbox/multipartite/w_phase.hpp"

namespace cqbox::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;

/// Malformed or inconsistent input document. The message names the line
/// (syntax errors) or the field path (structural errors).
class DocumentError : public Error {
 public:
  using Error::Error;
};

struct BoxMetadata {
  std::string label;
  std::optional<std::uint64_t> seed;
  double tolerance = kTolNum;
};

struct BoxDocument {
  std::variant<CCBox, CQBox> box;
  BoxMetadata metadata;

  bool is_cq() const { return std::holds_alternative<CQBox>(box); }
};

Json to_json(const CCBox& box, const BoxMetadata& meta);
/// Pure boxes are written as amplitude lists, others as density matrices.
Json to_json(const CQBox& box, const BoxMetadata& meta);
Json to_json(const BoxDocument& doc);

BoxDocument parse_box_document(std::string_view text);
BoxDocument box_document_from_json(const Json& j);

/// Phases indexed 4x + 2y + z, in radians.
Json to_json(const PhaseAssignment& p);
PhaseAssignment parse_phase_assignment(std::string_view text);

/// Two-space indented dump with a trailing newline.
std::string render(const Json& j);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& contents);

/// SHA-256 of the bytes as lowercase hex.
std::string digest(std::string_view bytes);

}  // namespace cqbox::cli
