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
#include <vector>

#include "cqbox/core/error.hpp"

namespace cqbox {

/// Flat indexing of tuples with per-position ranges, first position most
/// significant (the same convention as basis states).
class MixedRadix {
 public:
  MixedRadix() = default;
  explicit MixedRadix(std::vector<int> radices) : radices_(std::move(radices)) {
    size_ = 1;
    for (int r : radices_) {
      if (r < 1) throw DimensionError("alphabet size must be >= 1");
      size_ *= static_cast<std::size_t>(r);
    }
  }

  std::size_t size() const { return size_; }
  std::size_t positions() const { return radices_.size(); }
  const std::vector<int>& radices() const { return radices_; }

  std::vector<int> digits(std::size_t index) const {
    std::vector<int> out(radices_.size());
    for (std::size_t i = radices_.size(); i-- > 0;) {
      out[i] = static_cast<int>(index % static_cast<std::size_t>(radices_[i]));
      index /= static_cast<std::size_t>(radices_[i]);
    }
    return out;
  }

  std::size_t index(std::span<const int> digits) const {
    if (digits.size() != radices_.size()) {
      throw DimensionError("tuple length does not match");
    }
    std::size_t out = 0;
    for (std::size_t i = 0; i < radices_.size(); ++i) {
      if (digits[i] < 0 || digits[i] >= radices_[i]) {
        throw DimensionError("tuple entry out of range");
      }
      out = out * static_cast<std::size_t>(radices_[i]) + static_cast<std::size_t>(digits[i]);
    }
    return out;
  }

  bool operator==(const MixedRadix&) const = default;

 private:
  std::vector<int> radices_;
  std::size_t size_ = 1;
};

}  // namespace cqbox
