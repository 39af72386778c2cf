// Copyright 2026 The CVQC Authors
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

#include "cvqc/statevector.h"

#include <bit>
#include <cmath>

namespace cvqc {

StateVector ZeroState(int num_qubits) { return BasisState(num_qubits, 0); }

StateVector BasisState(int num_qubits, std::uint64_t index) {
  if (num_qubits < 0 || num_qubits > kMaxExactQubits) {
    throw CapacityError("qubit count outside the exact-simulation range");
  }
  StateVector psi(std::size_t{1} << num_qubits);
  if (index >= psi.size()) throw InvalidArgument("basis index out of range");
  psi[index] = 1.0;
  return psi;
}

int QubitCount(const StateVector& psi) {
  if (psi.empty() || !std::has_single_bit(psi.size())) {
    throw InvalidArgument("statevector length is not a power of two");
  }
  return std::countr_zero(psi.size());
}

double Norm(const StateVector& psi) {
  double acc = 0.0;
  for (const auto& a : psi) acc += std::norm(a);
  return std::sqrt(acc);
}

void Normalize(StateVector& psi) {
  double n = Norm(psi);
  if (n == 0.0) throw InvalidArgument("cannot normalize the zero vector");
  for (auto& a : psi) a /= n;
}

void ApplyX(StateVector& psi, int qubit) {
  const std::size_t bit = std::size_t{1} << qubit;
  for (std::size_t i = 0; i < psi.size(); ++i) {
    if (!(i & bit)) std::swap(psi[i], psi[i | bit]);
  }
}

void ApplyZ(StateVector& psi, int qubit) {
  const std::size_t bit = std::size_t{1} << qubit;
  for (std::size_t i = 0; i < psi.size(); ++i) {
    if (i & bit) psi[i] = -psi[i];
  }
}

void ApplyH(StateVector& psi, int qubit) {
  const std::size_t bit = std::size_t{1} << qubit;
  const double s = 1.0 / std::sqrt(2.0);
  for (std::size_t i = 0; i < psi.size(); ++i) {
    if (i & bit) continue;
    Amplitude a0 = psi[i];
    Amplitude a1 = psi[i | bit];
    psi[i] = s * (a0 + a1);
    psi[i | bit] = s * (a0 - a1);
  }
}

double ProbabilityOne(const StateVector& psi, int qubit) {
  const std::size_t bit = std::size_t{1} << qubit;
  double p = 0.0;
  for (std::size_t i = 0; i < psi.size(); ++i) {
    if (i & bit) p += std::norm(psi[i]);
  }
  return p;
}

std::uint8_t MeasureQubit(StateVector& psi, int qubit, Rng& rng) {
  const std::size_t bit = std::size_t{1} << qubit;
  const double p1 = ProbabilityOne(psi, qubit);
  const std::uint8_t outcome = Uniform01(rng) < p1 ? 1 : 0;
  const double keep = outcome ? p1 : 1.0 - p1;
  const double scale = 1.0 / std::sqrt(keep);
  for (std::size_t i = 0; i < psi.size(); ++i) {
    const bool one = (i & bit) != 0;
    if (one == static_cast<bool>(outcome)) {
      psi[i] *= scale;
    } else {
      psi[i] = 0.0;
    }
  }
  return outcome;
}

std::uint64_t SampleBasisIndex(const StateVector& psi, Rng& rng) {
  double u = Uniform01(rng);
  double acc = 0.0;
  std::size_t last_nonzero = 0;
  for (std::size_t i = 0; i < psi.size(); ++i) {
    const double p = std::norm(psi[i]);
    if (p == 0.0) continue;
    last_nonzero = i;
    acc += p;
    if (u < acc) return i;
  }
  return last_nonzero;
}

Amplitude InnerProduct(const StateVector& a, const StateVector& b) {
  if (a.size() != b.size()) throw InvalidArgument("statevector dimension mismatch");
  Amplitude acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
  return acc;
}

}  // namespace cvqc
