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

#include "cvqc/qprover.h"

#include <cmath>

namespace cvqc {

WitnessState PrepareWitness(const ZXHamiltonian& h, int copies) {
  if (copies < 0) throw InvalidArgument("copy count must be nonnegative");
  return InjectWitness(MinEnergy(h).state, copies);
}

WitnessState InjectWitness(const StateVector& psi, int copies) {
  if (copies < 0) throw InvalidArgument("copy count must be nonnegative");
  const int n = QubitCount(psi);
  if (n > kMaxExactQubits) throw CapacityError("witness exceeds the exact-simulation cap");
  if (std::abs(Norm(psi) - 1.0) > 1e-9) throw InvalidArgument("witness is not normalized");
  WitnessState out;
  out.num_qubits = n;
  out.copies.assign(copies, psi);
  return out;
}

void Pad(WitnessState& state, std::span<const std::uint8_t> beta,
         std::span<const std::uint8_t> gamma) {
  const std::size_t want = state.copies.size() * state.num_qubits;
  if (beta.size() != want || gamma.size() != want) {
    throw InvalidArgument("pad length must be n bits per copy");
  }
  for (std::size_t c = 0; c < state.copies.size(); ++c) {
    for (int q = 0; q < state.num_qubits; ++q) {
      const std::size_t idx = c * state.num_qubits + q;
      if (gamma[idx] & 1) ApplyZ(state.copies[c], q);
      if (beta[idx] & 1) ApplyX(state.copies[c], q);
    }
  }
}

Word SampleNonzero(int bits, Rng& rng) {
  if (bits < 1 || bits > 64) throw InvalidArgument("width must be in [1, 64]");
  for (;;) {
    const Word d = rng() & LowMask(bits);
    if (d != 0) return d;
  }
}

QuantumDevice::QuantumDevice(WitnessState witness) : witness_(std::move(witness)) {}

std::vector<Word> QuantumDevice::Commit(std::span<const PublicKey> keys, Rng& rng) {
  if (committed_) throw InvalidArgument("device already committed");
  const int n = witness_.num_qubits;
  if (keys.size() != witness_.copies.size() * n) {
    throw InvalidArgument("need one key per qubit per copy");
  }
  state_.num_qubits = n;
  state_.copies = witness_.copies;
  state_.qubits.resize(keys.size());
  std::vector<Word> y(keys.size());
  for (std::size_t c = 0; c < state_.copies.size(); ++c) {
    for (int q = 0; q < n; ++q) {
      const std::size_t idx = c * n + q;
      const PublicKey& pk = keys[idx];
      QubitRecord& rec = state_.qubits[idx];
      rec.kind = pk.kind();
      rec.domain_bits = pk.domain_bits();
      if (pk.kind() == FamilyKind::kNtif) {
        // Images of the two branches are disjoint, so measuring y measures b.
        const std::uint8_t b = MeasureQubit(state_.copies[c], q, rng);
        const Word x = pk.SampleDomain(rng);
        rec.collapsed = {b, x};
        rec.y = pk.Eval(b, x);
      } else {
        const auto outcome = sampler_.SampleClawState(pk, rng);
        rec.claw = outcome.claw;
        rec.y = outcome.y;
      }
      y[idx] = rec.y;
    }
  }
  committed_ = true;
  return y;
}

void QuantumDevice::RequireCommitted(int copy) const {
  if (!committed_) throw InvalidArgument("device has not committed");
  if (copy < 0 || copy >= static_cast<int>(state_.copies.size())) {
    throw InvalidArgument("copy index out of range");
  }
}

std::vector<Response> QuantumDevice::MeasureTest(int copy, Rng& rng) {
  RequireCommitted(copy);
  const int n = state_.num_qubits;
  std::vector<Response> out(n);
  StateVector& psi = state_.copies[copy];
  for (int q = 0; q < n; ++q) {
    const QubitRecord& rec = state_.qubits[static_cast<std::size_t>(copy) * n + q];
    if (rec.kind == FamilyKind::kNtif) {
      out[q] = {rec.collapsed.b, rec.collapsed.x};
    } else {
      const std::uint8_t w = MeasureQubit(psi, q, rng);
      out[q] = {w, w ? rec.claw.x1 : rec.claw.x0};
    }
  }
  return out;
}

std::vector<Response> QuantumDevice::MeasureHadamard(int copy, Rng& rng) {
  RequireCommitted(copy);
  const int n = state_.num_qubits;
  std::vector<Response> out(n);
  StateVector& psi = state_.copies[copy];
  for (int q = 0; q < n; ++q) {
    const QubitRecord& rec = state_.qubits[static_cast<std::size_t>(copy) * n + q];
    if (rec.kind == FamilyKind::kNtif) {
      // Collapsed qubit: both registers read uniformly in the Hadamard basis.
      out[q].t = rng() & LowMask(rec.domain_bits);
    } else {
      const Word d = SampleNonzero(rec.domain_bits, rng);
      if (DotGf2(d, rec.claw.x0 ^ rec.claw.x1)) ApplyZ(psi, q);
      out[q].t = d;
    }
  }
  for (int q = 0; q < n; ++q) {
    const QubitRecord& rec = state_.qubits[static_cast<std::size_t>(copy) * n + q];
    if (rec.kind == FamilyKind::kNtif) {
      out[q].w = RandomBit(rng);
    } else {
      ApplyH(psi, q);
      out[q].w = MeasureQubit(psi, q, rng);
    }
  }
  return out;
}

std::vector<Response> QuantumDevice::MeasureTest(Rng& rng) {
  std::vector<Response> out;
  for (int c = 0; c < num_copies(); ++c) {
    auto part = MeasureTest(c, rng);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::vector<Response> QuantumDevice::MeasureHadamard(Rng& rng) {
  std::vector<Response> out;
  for (int c = 0; c < num_copies(); ++c) {
    auto part = MeasureHadamard(c, rng);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace cvqc
