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

#include "cvqc/hamiltonian.h"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <map>
#include <utility>

namespace cvqc {
namespace {

bool TermLess(const Term& x, const Term& y) {
  return std::tie(x.i, x.j, x.pauli) < std::tie(y.i, y.j, y.pauli);
}

void CheckThresholds(double a, double b) {
  if (!std::isfinite(a) || !std::isfinite(b) || !(b > a)) {
    throw InvalidArgument("thresholds must satisfy b > a");
  }
}

void CheckState(const ZXHamiltonian& h, const StateVector& psi) {
  if (psi.size() != (std::size_t{1} << h.num_qubits())) {
    throw InvalidArgument("statevector dimension does not match the instance");
  }
  if (std::abs(Norm(psi) - 1.0) > 1e-9) {
    throw InvalidArgument("statevector is not normalized");
  }
}

Eigen::MatrixXd DenseMatrix(const ZXHamiltonian& h) {
  const int n = h.num_qubits();
  if (n > kMaxExactQubits) {
    throw CapacityError("exact diagonalization is limited to 12 qubits");
  }
  const std::size_t dim = std::size_t{1} << n;
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
  for (const Term& t : h.terms()) {
    const double c = t.sign * t.weight;
    const std::size_t mask = (std::size_t{1} << t.i) | (std::size_t{1} << t.j);
    for (std::size_t k = 0; k < dim; ++k) {
      if (t.pauli == Pauli::kZZ) {
        m(k, k) += Parity(k & mask) ? -c : c;
      } else {
        m(k ^ mask, k) += c;
      }
    }
  }
  return m;
}

}  // namespace

ZXHamiltonian ZXHamiltonian::Normalize(int num_qubits, std::vector<Coupling> couplings,
                                       double a, double b) {
  if (num_qubits < 2) throw InvalidArgument("a ZX instance needs at least two qubits");
  CheckThresholds(a, b);
  std::map<std::pair<int, int>, double> by_pair;
  for (const Coupling& c : couplings) {
    if (c.i < 0 || c.j <= c.i || c.j >= num_qubits) {
      throw InvalidArgument("coupling indices must satisfy 0 <= i < j < n");
    }
    if (!std::isfinite(c.strength)) throw InvalidArgument("coupling is not finite");
    if (!by_pair.emplace(std::make_pair(c.i, c.j), c.strength).second) {
      throw InvalidArgument("duplicate coupling pair");
    }
  }
  double total = 0.0;
  for (const auto& [pair, j] : by_pair) total += 2.0 * std::abs(j);
  if (total == 0.0) throw InvalidArgument("invalid instance: all couplings are zero");

  ZXHamiltonian h;
  h.num_qubits_ = num_qubits;
  h.a_ = a;
  h.b_ = b;
  for (const auto& [pair, j] : by_pair) {
    if (j == 0.0) continue;
    const double w = std::abs(j) / total;
    const int sign = j > 0 ? 1 : -1;
    h.terms_.push_back({pair.first, pair.second, Pauli::kZZ, w, sign});
    h.terms_.push_back({pair.first, pair.second, Pauli::kXX, w, sign});
  }
  return h;
}

ZXHamiltonian ZXHamiltonian::FromTerms(int num_qubits, std::vector<Term> terms, double a,
                                       double b) {
  if (num_qubits < 2) throw InvalidArgument("a ZX instance needs at least two qubits");
  CheckThresholds(a, b);
  double total = 0.0;
  for (const Term& t : terms) {
    if (t.i < 0 || t.j <= t.i || t.j >= num_qubits) {
      throw InvalidArgument("term indices must satisfy 0 <= i < j < n");
    }
    if (!(t.weight > 0.0 && t.weight <= 1.0)) throw InvalidArgument("term weight outside (0,1]");
    if (t.sign != 1 && t.sign != -1) throw InvalidArgument("term sign must be +1 or -1");
    total += t.weight;
  }
  if (std::abs(total - 1.0) > 1e-9) throw InvalidArgument("term weights do not sum to 1");
  std::sort(terms.begin(), terms.end(), TermLess);
  for (std::size_t k = 1; k < terms.size(); ++k) {
    if (!TermLess(terms[k - 1], terms[k])) throw InvalidArgument("duplicate term");
  }
  ZXHamiltonian h;
  h.num_qubits_ = num_qubits;
  h.terms_ = std::move(terms);
  h.a_ = a;
  h.b_ = b;
  return h;
}

std::optional<std::vector<Coupling>> ZXHamiltonian::couplings() const {
  std::vector<Coupling> out;
  std::map<std::pair<int, int>, std::pair<const Term*, const Term*>> pairs;
  for (const Term& t : terms_) {
    auto& slot = pairs[{t.i, t.j}];
    (t.pauli == Pauli::kZZ ? slot.first : slot.second) = &t;
  }
  for (const auto& [pair, terms] : pairs) {
    const Term* zz = terms.first;
    const Term* xx = terms.second;
    if (zz == nullptr || xx == nullptr || zz->sign != xx->sign ||
        zz->weight != xx->weight) {
      return std::nullopt;
    }
    out.push_back({pair.first, pair.second, zz->sign * zz->weight});
  }
  return out;
}

Bytes ZXHamiltonian::Serialize() const {
  ByteWriter w;
  w.Raw("CVQC-ZX-v1");
  w.U32(static_cast<std::uint32_t>(num_qubits_));
  w.F64(a_);
  w.F64(b_);
  w.U64(terms_.size());
  for (const Term& t : terms_) {
    w.U32(static_cast<std::uint32_t>(t.i));
    w.U32(static_cast<std::uint32_t>(t.j));
    w.U8(static_cast<std::uint8_t>(t.pauli));
    w.F64(t.weight);
    w.U8(t.sign > 0 ? 1 : 0);
  }
  return w.Take();
}

ZXHamiltonian ZXHamiltonian::Parse(std::span<const std::uint8_t> bytes) {
  ByteReader r(bytes);
  if (r.Raw(10) != AsBytes("CVQC-ZX-v1")) throw InvalidArgument("not a ZX instance");
  const int n = static_cast<int>(r.U32());
  const double a = r.F64();
  const double b = r.F64();
  const std::uint64_t count = r.U64();
  if (count > r.remaining() / 18) throw InvalidArgument("truncated ZX instance");
  std::vector<Term> terms(count);
  for (Term& t : terms) {
    t.i = static_cast<int>(r.U32());
    t.j = static_cast<int>(r.U32());
    const std::uint8_t pauli = r.U8();
    if (pauli > 1) throw InvalidArgument("bad Pauli tag");
    t.pauli = static_cast<Pauli>(pauli);
    t.weight = r.F64();
    const std::uint8_t sign = r.U8();
    if (sign > 1) throw InvalidArgument("bad sign byte");
    t.sign = sign ? 1 : -1;
  }
  if (!r.done()) throw InvalidArgument("trailing bytes after ZX instance");
  ZXHamiltonian h = FromTerms(n, std::move(terms), a, b);
  // FromTerms sorts; a canonical encoding must already be sorted.
  if (h.Serialize() != Bytes(bytes.begin(), bytes.end())) {
    throw InvalidArgument("ZX instance encoding is not canonical");
  }
  return h;
}

Digest ZXHamiltonian::DigestBytes() const { return Sha256(Serialize()); }

const Term& SampleTerm(const ZXHamiltonian& h, std::uint64_t randomness) {
  const auto& terms = h.terms();
  // long double carries the full 64-bit fraction exactly.
  const long double u = std::ldexp(static_cast<long double>(randomness), -64);
  long double cumulative = 0.0L;
  for (const Term& t : terms) {
    cumulative += t.weight;
    if (u <= cumulative) return t;
  }
  return terms.back();
}

const Term& SampleTerm(const ZXHamiltonian& h, std::span<const std::uint8_t> bits) {
  if (bits.size() < 64) throw InvalidArgument("term sampling needs at least 64 bits");
  std::uint64_t s = 0;
  for (int k = 0; k < 64; ++k) s = (s << 1) | (bits[k] & 1);
  return SampleTerm(h, s);
}

bool IsConsistent(const Term& term, std::span<const std::uint8_t> h) {
  const std::uint8_t want = term.pauli == Pauli::kXX ? 1 : 0;
  return h[term.i] == want && h[term.j] == want;
}

bool TermSatisfied(const Term& term, std::uint8_t e_i, std::uint8_t e_j) {
  const std::uint8_t parity = (e_i ^ e_j) & 1;
  return parity == (term.sign > 0 ? 1 : 0);
}

double Energy(const ZXHamiltonian& h, const StateVector& psi) {
  CheckState(h, psi);
  double e = 0.0;
  for (const Term& t : h.terms()) {
    const std::size_t mask = (std::size_t{1} << t.i) | (std::size_t{1} << t.j);
    double expectation = 0.0;
    for (std::size_t k = 0; k < psi.size(); ++k) {
      if (t.pauli == Pauli::kZZ) {
        const double p = std::norm(psi[k]);
        expectation += Parity(k & mask) ? -p : p;
      } else {
        expectation += (std::conj(psi[k]) * psi[k ^ mask]).real();
      }
    }
    e += t.sign * t.weight * expectation;
  }
  return e;
}

double MfAcceptProbability(const ZXHamiltonian& h, const StateVector& psi) {
  return (1.0 - Energy(h, psi)) / 2.0;
}

GroundState MinEnergy(const ZXHamiltonian& h) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(DenseMatrix(h));
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigensolver failed");
  GroundState out;
  out.energy = solver.eigenvalues()(0);
  const Eigen::VectorXd v = solver.eigenvectors().col(0);
  out.state.resize(v.size());
  for (Eigen::Index k = 0; k < v.size(); ++k) out.state[k] = v(k);
  cvqc::Normalize(out.state);
  return out;
}

std::vector<double> Spectrum(const ZXHamiltonian& h) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(DenseMatrix(h),
                                                        Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigensolver failed");
  const Eigen::VectorXd& ev = solver.eigenvalues();
  return std::vector<double>(ev.data(), ev.data() + ev.size());
}

ZXHamiltonian ConjugatePad(const ZXHamiltonian& h, std::span<const std::uint8_t> beta,
                           std::span<const std::uint8_t> gamma) {
  const auto n = static_cast<std::size_t>(h.num_qubits());
  if (beta.size() != n || gamma.size() != n) {
    throw InvalidArgument("pad length does not match the qubit count");
  }
  std::vector<Term> terms = h.terms();
  for (Term& t : terms) {
    // X flips Z eigenvalues and Z flips X eigenvalues.
    const auto& key = t.pauli == Pauli::kZZ ? beta : gamma;
    if ((key[t.i] ^ key[t.j]) & 1) t.sign = -t.sign;
  }
  return ZXHamiltonian::FromTerms(h.num_qubits(), std::move(terms), h.a(), h.b());
}

}  // namespace cvqc
