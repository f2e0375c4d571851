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
#include "cqbox/core/party_structure.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "cqbox/core/error.hpp"

namespace cqbox {

PartyStructure::PartyStructure(std::vector<Party> parties) : parties_(std::move(parties)) {
  std::set<std::string> seen;
  total_dim_ = 1;
  for (const auto& p : parties_) {
    if (p.dim < 1) {
      throw DimensionError("party '" + p.label + "' has local dimension < 1");
    }
    if (!seen.insert(p.label).second) {
      throw LabelError("duplicate party label '" + p.label + "'");
    }
    if (total_dim_ > std::numeric_limits<std::size_t>::max() / static_cast<std::size_t>(p.dim)) {
      throw DimensionError("total dimension overflows");
    }
    total_dim_ *= static_cast<std::size_t>(p.dim);
  }
}

PartyStructure PartyStructure::lettered(std::span<const int> dims) {
  if (dims.size() > 26) {
    throw LabelError("at most 26 lettered parties");
  }
  std::vector<Party> parties;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    parties.push_back(Party{std::string(1, static_cast<char>('A' + i)), dims[i]});
  }
  return PartyStructure(std::move(parties));
}

PartyStructure PartyStructure::bipartite(int dim_a, int dim_b) {
  const int dims[] = {dim_a, dim_b};
  return lettered(dims);
}

PartyStructure PartyStructure::qubits(std::size_t count) {
  std::vector<int> dims(count, 2);
  return lettered(dims);
}

std::vector<std::string> PartyStructure::labels() const {
  std::vector<std::string> out;
  out.reserve(parties_.size());
  for (const auto& p : parties_) {
    out.push_back(p.label);
  }
  return out;
}

bool PartyStructure::contains(std::string_view label) const {
  return std::any_of(parties_.begin(), parties_.end(),
                     [&](const Party& p) { return p.label == label; });
}

std::size_t PartyStructure::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < parties_.size(); ++i) {
    if (parties_[i].label == label) {
      return i;
    }
  }
  throw LabelError("unknown party label '" + std::string(label) + "'");
}

PartyStructure PartyStructure::concat(const PartyStructure& other) const {
  std::vector<Party> all = parties_;
  all.insert(all.end(), other.parties_.begin(), other.parties_.end());
  return PartyStructure(std::move(all));
}

PartyStructure PartyStructure::restrict_to(std::span<const std::string> labels) const {
  for (const auto& l : labels) {
    index_of(l);
  }
  std::vector<Party> kept;
  for (const auto& p : parties_) {
    if (std::find(labels.begin(), labels.end(), p.label) != labels.end()) {
      kept.push_back(p);
    }
  }
  return PartyStructure(std::move(kept));
}

std::vector<int> PartyStructure::digits(std::size_t index) const {
  std::vector<int> out(parties_.size());
  for (std::size_t i = parties_.size(); i-- > 0;) {
    const auto d = static_cast<std::size_t>(parties_[i].dim);
    out[i] = static_cast<int>(index % d);
    index /= d;
  }
  return out;
}

std::size_t PartyStructure::flat_index(std::span<const int> digits) const {
  if (digits.size() != parties_.size()) {
    throw DimensionError("digit count does not match party count");
  }
  std::size_t index = 0;
  for (std::size_t i = 0; i < parties_.size(); ++i) {
    if (digits[i] < 0 || digits[i] >= parties_[i].dim) {
      throw DimensionError("basis digit out of range for party '" + parties_[i].label + "'");
    }
    index = index * static_cast<std::size_t>(parties_[i].dim) + static_cast<std::size_t>(digits[i]);
  }
  return index;
}

}  // namespace cqbox
