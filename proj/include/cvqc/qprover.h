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

// Honest prover simulation.
//
// After a coherent Samp on an ideal function family and measurement of the
// image register, each committed qubit is in one of two states:
//
//   NTIF key:  the logical qubit has collapsed to b and the preimage
//              register holds x_b.
//   NTCF key:  the logical amplitudes are untouched and the preimage
//              register is entangled as |0>|x0> + |1>|x1> (up to the
//              logical amplitudes).
//
// QuantumDevice keeps only the logical statevector of each copy plus these
// labels. Measuring the preimage register in the Hadamard basis with
// outcome d acts on the logical qubit as Z^{d.(x0 xor x1)}, which is how
// Hadamard-round responses are produced.

#ifndef CVQC_QPROVER_H_
#define CVQC_QPROVER_H_

#include <cstdint>
#include <span>
#include <vector>

#include "cvqc/common.h"
#include "cvqc/funcfam.h"
#include "cvqc/hamiltonian.h"
#include "cvqc/statevector.h"

namespace cvqc {

// r * k independent copies of an n-qubit state.
struct WitnessState {
  int num_qubits = 0;
  std::vector<StateVector> copies;
};

// Copies of the exact ground state of h.
WitnessState PrepareWitness(const ZXHamiltonian& h, int copies);

// Copies of an arbitrary state; normalized to 1 +- 1e-9 or rejected.
WitnessState InjectWitness(const StateVector& psi, int copies);

// X^beta Z^gamma on every copy; beta and gamma hold n bits per copy,
// copy-major. Applying the same pad twice restores the state up to phase.
void Pad(WitnessState& state, std::span<const std::uint8_t> beta,
         std::span<const std::uint8_t> gamma);

// One per-qubit message u = (w, t).
struct Response {
  std::uint8_t w = 0;
  Word t = 0;
  friend bool operator==(const Response&, const Response&) = default;
};

struct QubitRecord {
  FamilyKind kind = FamilyKind::kNtif;
  Word y = 0;
  Claw claw;            // claw-free keys
  Preimage collapsed;   // injective keys
  int domain_bits = 0;
};

// Post-commitment state in compact form.
struct CommittedState {
  int num_qubits = 0;
  std::vector<StateVector> copies;
  std::vector<QubitRecord> qubits;  // copies * n, copy-major
};

// The only holder of witness statevectors and of the coherent sampler.
// Single owner; measurements collapse the stored copies.
class QuantumDevice {
 public:
  explicit QuantumDevice(WitnessState witness);

  int num_qubits() const { return witness_.num_qubits; }
  int num_copies() const { return static_cast<int>(witness_.copies.size()); }
  bool committed() const { return committed_; }

  // Round P1. One key per qubit per copy, copy-major. Returns the images.
  std::vector<Word> Commit(std::span<const PublicKey> keys, Rng& rng);

  // Round P2 on one copy: computational or Hadamard basis measurement of the
  // logical and preimage registers.
  std::vector<Response> MeasureTest(int copy, Rng& rng);
  std::vector<Response> MeasureHadamard(int copy, Rng& rng);

  // Whole-state variants, copy-major.
  std::vector<Response> MeasureTest(Rng& rng);
  std::vector<Response> MeasureHadamard(Rng& rng);

  const CommittedState& state() const { return state_; }

 private:
  void RequireCommitted(int copy) const;

  WitnessState witness_;
  CommittedState state_;
  bool committed_ = false;
  CoherentSampler sampler_;
};

// Uniform nonzero d in {0,1}^bits.
Word SampleNonzero(int bits, Rng& rng);

}  // namespace cvqc

#endif  // CVQC_QPROVER_H_
