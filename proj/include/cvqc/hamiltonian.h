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

// 2-local ZX Hamiltonians
//
//   H = sum_{i<j} J_ij (X_i X_j + Z_i Z_j),   2 sum |J_ij| = 1,
//
// stored as a weighted term list. Each coupling contributes a ZZ and an XX
// term with weight |J_ij| and sign sign(J_ij); the weights form the term
// distribution used by the verifier. After one-time-pad conjugation the ZZ
// and XX signs of a pair may differ, which is why the term list (and not the
// coupling list) is the canonical representation.

#ifndef CVQC_HAMILTONIAN_H_
#define CVQC_HAMILTONIAN_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cvqc/bytes.h"
#include "cvqc/common.h"
#include "cvqc/statevector.h"

namespace cvqc {

enum class Pauli : std::uint8_t { kZZ = 0, kXX = 1 };

struct Coupling {
  int i = 0;
  int j = 0;
  double strength = 0.0;

  friend bool operator==(const Coupling&, const Coupling&) = default;
};

struct Term {
  int i = 0;
  int j = 0;
  Pauli pauli = Pauli::kZZ;
  double weight = 0.0;  // p_S, in (0, 1]
  int sign = 1;         // m_S, +1 or -1

  friend bool operator==(const Term&, const Term&) = default;
};

// Per-copy measurement bases: 0 = Z basis, 1 = X basis.
using BasisString = Bits;

class ZXHamiltonian {
 public:
  // Rescales the couplings so that 2 sum |J| = 1. Couplings with J = 0 are
  // dropped; duplicate pairs and out-of-range indices are rejected. Throws
  // InvalidArgument when no nonzero coupling remains.
  static ZXHamiltonian Normalize(int num_qubits, std::vector<Coupling> couplings,
                                 double a, double b);

  // Builds an instance directly from terms (weights must already sum to 1).
  static ZXHamiltonian FromTerms(int num_qubits, std::vector<Term> terms, double a,
                                 double b);

  int num_qubits() const { return num_qubits_; }
  double a() const { return a_; }
  double b() const { return b_; }
  double gap() const { return b_ - a_; }

  // Canonical order: sorted by (i, j), ZZ before XX.
  const std::vector<Term>& terms() const { return terms_; }

  // Coupling view; empty when some pair has mismatched ZZ/XX signs (padded
  // instances are not of coupling form).
  std::optional<std::vector<Coupling>> couplings() const;

  // Canonical byte encoding used for instance digests.
  Bytes Serialize() const;
  static ZXHamiltonian Parse(std::span<const std::uint8_t> bytes);
  Digest DigestBytes() const;

  friend bool operator==(const ZXHamiltonian&, const ZXHamiltonian&) = default;

 private:
  ZXHamiltonian() = default;

  int num_qubits_ = 0;
  std::vector<Term> terms_;
  double a_ = 0.0;
  double b_ = 0.0;
};

// Term sampling from 64 bits of randomness: u = s / 2^64 (most significant bit
// first) through the inverse CDF of the canonical term list. A value exactly
// on a CDF boundary selects the lower index.
const Term& SampleTerm(const ZXHamiltonian& h, std::uint64_t randomness);

// Same, reading the first 64 bits (MSB first) of a longer bit string.
const Term& SampleTerm(const ZXHamiltonian& h, std::span<const std::uint8_t> bits);

// True iff h carries the term's basis (1 for XX, 0 for ZZ) at both qubits.
bool IsConsistent(const Term& term, std::span<const std::uint8_t> h);

// True iff the decoded outcomes land in the -m_S eigenspace of the term:
// e_i xor e_j == (1 + m_S) / 2.
bool TermSatisfied(const Term& term, std::uint8_t e_i, std::uint8_t e_j);

// <psi|H|psi> for the unshifted H = sum m_S p_S S.
double Energy(const ZXHamiltonian& h, const StateVector& psi);

// Single-copy acceptance probability of the measurement check, (1 - E) / 2.
double MfAcceptProbability(const ZXHamiltonian& h, const StateVector& psi);

struct GroundState {
  double energy = 0.0;
  StateVector state;
};

// Exact diagonalization; n <= kMaxExactQubits.
GroundState MinEnergy(const ZXHamiltonian& h);
std::vector<double> Spectrum(const ZXHamiltonian& h);

// X^beta Z^gamma H Z^gamma X^beta. beta and gamma have length n.
ZXHamiltonian ConjugatePad(const ZXHamiltonian& h, std::span<const std::uint8_t> beta,
                           std::span<const std::uint8_t> gamma);

}  // namespace cvqc

#endif  // CVQC_HAMILTONIAN_H_
