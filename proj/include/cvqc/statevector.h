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

// Dense n-qubit statevectors. Qubit q corresponds to bit q of the basis
// index (qubit 0 is the least significant bit).

#ifndef CVQC_STATEVECTOR_H_
#define CVQC_STATEVECTOR_H_

#include <complex>
#include <cstdint>
#include <vector>

#include "cvqc/common.h"

namespace cvqc {

using Amplitude = std::complex<double>;
using StateVector = std::vector<Amplitude>;

inline constexpr int kMaxExactQubits = 12;

// |0...0> on num_qubits qubits.
StateVector ZeroState(int num_qubits);
StateVector BasisState(int num_qubits, std::uint64_t index);

// Returns log2(size); throws InvalidArgument if size is not a power of two.
int QubitCount(const StateVector& psi);

double Norm(const StateVector& psi);
void Normalize(StateVector& psi);

void ApplyX(StateVector& psi, int qubit);
void ApplyZ(StateVector& psi, int qubit);
void ApplyH(StateVector& psi, int qubit);

// Probability that `qubit` reads 1 in the computational basis.
double ProbabilityOne(const StateVector& psi, int qubit);

// Born-rule measurement of one qubit with collapse and renormalization.
std::uint8_t MeasureQubit(StateVector& psi, int qubit, Rng& rng);

// Samples a full basis index without collapsing.
std::uint64_t SampleBasisIndex(const StateVector& psi, Rng& rng);

// Overlap <a|b>.
Amplitude InnerProduct(const StateVector& a, const StateVector& b);

}  // namespace cvqc

#endif  // CVQC_STATEVECTOR_H_
