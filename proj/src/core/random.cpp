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
#include "cqbox/core/random.hpp"

#include <array>
#include <cmath>

#include "cqbox/core/error.hpp"

namespace cqbox {

Rng make_rng(RandomSeed seed, std::uint64_t stream) {
  const std::array<std::uint32_t, 4> words = {
      static_cast<std::uint32_t>(seed.value), static_cast<std::uint32_t>(seed.value >> 32),
      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  std::seed_seq seq(words.begin(), words.end());
  return Rng(seq);
}

namespace {

ComplexMatrix ginibre(int n, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix z(n, n);
  for (int c = 0; c < n; ++c) {
    for (int r = 0; r < n; ++r) {
      const double re = normal(rng);
      const double im = normal(rng);
      z(r, c) = Complex(re, im) / std::sqrt(2.0);
    }
  }
  return z;
}

}  // namespace

UnitaryOperator haar_unitary(int n, Rng& rng) {
  if (n < 1) {
    throw ParameterError("Haar unitary dimension must be >= 1");
  }
  const ComplexMatrix z = ginibre(n, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(z);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(n, n);
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int k = 0; k < n; ++k) {
    const Complex d = r(k, k);
    const double mag = std::abs(d);
    q.col(k) *= mag > 0.0 ? d / mag : Complex(1.0, 0.0);
  }
  return UnitaryOperator::assume_valid(std::move(q));
}

UnitaryOperator haar_unitary(int n, RandomSeed seed) {
  Rng rng = make_rng(seed);
  return haar_unitary(n, rng);
}

StateVector random_state(const PartyStructure& structure, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexVector v(static_cast<Eigen::Index>(structure.total_dim()));
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double re = normal(rng);
    const double im = normal(rng);
    v(i) = Complex(re, im);
  }
  return StateVector::normalized(std::move(v), structure);
}

}  // namespace cqbox
