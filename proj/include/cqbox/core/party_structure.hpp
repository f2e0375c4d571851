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

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cqbox {

struct Party {
  std::string label;
  int dim = 1;

  bool operator==(const Party&) const = default;
};

/// Ordered list of labelled subsystems. Basis index layout follows the list
/// order with the first party most significant, i.e. |a>|b> has index
/// a * dim(B) + b.
class PartyStructure {
 public:
  PartyStructure() = default;
  explicit PartyStructure(std::vector<Party> parties);

  /// Parties "A", "B", ... with the given local dimensions.
  static PartyStructure lettered(std::span<const int> dims);
  static PartyStructure bipartite(int dim_a, int dim_b);
  static PartyStructure qubits(std::size_t count);

  std::size_t size() const { return parties_.size(); }
  bool empty() const { return parties_.empty(); }
  const Party& operator[](std::size_t i) const { return parties_[i]; }
  const std::vector<Party>& parties() const { return parties_; }
  std::vector<std::string> labels() const;

  std::size_t total_dim() const { return total_dim_; }
  bool contains(std::string_view label) const;
  /// Position of a label; throws LabelError when absent.
  std::size_t index_of(std::string_view label) const;
  int dim_of(std::string_view label) const { return parties_[index_of(label)].dim; }

  /// Concatenation; labels of the two structures must be disjoint.
  PartyStructure concat(const PartyStructure& other) const;
  /// Restriction to the given labels, kept in this structure's order.
  PartyStructure restrict_to(std::span<const std::string> labels) const;

  /// Digits of a flat basis index, one per party.
  std::vector<int> digits(std::size_t index) const;
  std::size_t flat_index(std::span<const int> digits) const;

  bool operator==(const PartyStructure& other) const { return parties_ == other.parties_; }

 private:
  std::vector<Party> parties_;
  std::size_t total_dim_ = 1;
};

}  // namespace cqbox
