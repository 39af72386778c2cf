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


#include "oracles.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <boost/math/distributions/chi_squared.hpp>

namespace cvqc::testing {
namespace {

Eigen::MatrixXd Kron(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  Eigen::MatrixXd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < a.cols(); ++c) out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
  }
  return out;
}

// P_i P_j on n qubits; the leftmost Kronecker factor is the highest qubit.
Eigen::MatrixXd PairOperator(int n, int i, int j, const Eigen::Matrix2d& p) {
  Eigen::MatrixXd out = Eigen::MatrixXd::Identity(1, 1);
  for (int q = n - 1; q >= 0; --q) {
    const Eigen::MatrixXd f = (q == i || q == j) ? Eigen::MatrixXd(p) : Eigen::MatrixXd::Identity(2, 2);
    out = Kron(out, f);
  }
  return out;
}

Eigen::Matrix2d PauliX() {
  Eigen::Matrix2d m;
  m << 0, 1, 1, 0;
  return m;
}

Eigen::Matrix2d PauliZ() {
  Eigen::Matrix2d m;
  m << 1, 0, 0, -1;
  return m;
}

}  // namespace

Eigen::MatrixXd DenseZX(int n, const std::vector<DenseCoupling>& couplings) {
  const int dim = 1 << n;
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
  for (const auto& c : couplings) {
    h += c.strength * (PairOperator(n, c.i, c.j, PauliX()) + PairOperator(n, c.i, c.j, PauliZ()));
  }
  return h;
}

Eigen::MatrixXd DenseZXSigned(int n, int i, int j, double zz, double xx) {
  return zz * PairOperator(n, i, j, PauliZ()) + xx * PairOperator(n, i, j, PauliX());
}

std::vector<double> SortedEigenvalues(const Eigen::MatrixXd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
  std::vector<double> ev(solver.eigenvalues().data(), solver.eigenvalues().data() + m.rows());
  std::sort(ev.begin(), ev.end());
  return ev;
}

// ---- literal register --------------------------------------------------------------

LiteralRegister::LiteralRegister(const StateVector& psi, std::span<const PublicKey> keys)
    : keys_(keys.begin(), keys.end()) {
  const int n = static_cast<int>(keys_.size());
  if (psi.size() != (std::size_t{1} << n)) throw std::invalid_argument("state size mismatch");
  int bits = 0;
  for (const PublicKey& pk : keys_) {
    offset_.push_back(bits);
    bits += 1 + pk.domain_bits();
  }
  if (bits > 20) throw std::invalid_argument("literal register too large");
  amp_.assign(std::size_t{1} << bits, 0.0);
  for (std::uint64_t idx = 0; idx < amp_.size(); ++idx) {
    std::uint64_t logical = 0;
    double weight = 1.0;
    bool in_domain = true;
    for (int l = 0; l < n; ++l) {
      logical |= std::uint64_t{BitOf(idx, l)} << l;
      const Word x = PreimageOf(idx, l);
      if (!keys_[l].IsDomainElement(x)) in_domain = false;
      weight /= std::sqrt(keys_[l].domain_size());
    }
    if (in_domain) amp_[idx] = psi[logical] * weight;
  }
}

std::uint8_t LiteralRegister::BitOf(std::uint64_t idx, int qubit) const {
  return (idx >> offset_[qubit]) & 1;
}

Word LiteralRegister::PreimageOf(std::uint64_t idx, int qubit) const {
  return (idx >> (offset_[qubit] + 1)) & LowMask(keys_[qubit].domain_bits());
}

std::uint64_t LiteralRegister::Sample(Rng& rng) const {
  double total = 0.0;
  for (const auto& a : amp_) total += std::norm(a);
  double u = Uniform01(rng) * total;
  std::uint64_t last = 0;
  for (std::uint64_t idx = 0; idx < amp_.size(); ++idx) {
    const double p = std::norm(amp_[idx]);
    if (p == 0.0) continue;
    last = idx;
    if (u < p) return idx;
    u -= p;
  }
  return last;
}

std::vector<Word> LiteralRegister::MeasureImages(Rng& rng) {
  const int n = static_cast<int>(keys_.size());
  auto images = [&](std::uint64_t idx) {
    std::vector<Word> y(n);
    for (int l = 0; l < n; ++l) y[l] = keys_[l].Eval(BitOf(idx, l), PreimageOf(idx, l));
    return y;
  };
  // Born probability of each image tuple.
  std::map<std::vector<Word>, double> dist;
  for (std::uint64_t idx = 0; idx < amp_.size(); ++idx) {
    if (std::norm(amp_[idx]) > 0.0) dist[images(idx)] += std::norm(amp_[idx]);
  }
  double u = Uniform01(rng);
  std::vector<Word> chosen = dist.rbegin()->first;
  for (const auto& [y, p] : dist) {
    if (u < p) {
      chosen = y;
      break;
    }
    u -= p;
  }
  double kept = 0.0;
  for (std::uint64_t idx = 0; idx < amp_.size(); ++idx) {
    if (std::norm(amp_[idx]) == 0.0) continue;
    if (images(idx) != chosen) {
      amp_[idx] = 0.0;
    } else {
      kept += std::norm(amp_[idx]);
    }
  }
  for (auto& a : amp_) a /= std::sqrt(kept);
  return chosen;
}

std::vector<Response> LiteralRegister::MeasureComputational(Rng& rng) {
  const std::uint64_t idx = Sample(rng);
  std::vector<Response> out;
  for (int l = 0; l < static_cast<int>(keys_.size()); ++l) out.push_back({BitOf(idx, l), PreimageOf(idx, l)});
  return out;
}

std::vector<Response> LiteralRegister::MeasureHadamard(std::span<const std::uint8_t> nonzero, Rng& rng) {
  // Walsh-Hadamard transform of the whole register.
  std::vector<std::complex<double>> a = amp_;
  const double s = 1.0 / std::sqrt(2.0);
  for (std::size_t h = 1; h < a.size(); h <<= 1) {
    for (std::size_t i = 0; i < a.size(); i += 2 * h) {
      for (std::size_t j = i; j < i + h; ++j) {
        const auto x = a[j];
        const auto y = a[j + h];
        a[j] = (x + y) * s;
        a[j + h] = (x - y) * s;
      }
    }
  }
  std::swap(a, amp_);
  std::vector<Response> out;
  for (;;) {
    const std::uint64_t idx = Sample(rng);
    bool ok = true;
    out.clear();
    for (int l = 0; l < static_cast<int>(keys_.size()); ++l) {
      const Word d = PreimageOf(idx, l);
      if (nonzero[l] && d == 0) ok = false;
      out.push_back({BitOf(idx, l), d});
    }
    if (ok) break;
  }
  std::swap(a, amp_);
  return out;
}

// ---- statistics ---------------------------------------------------------------------

double ChiSquareSurvival(double statistic, int dof) {
  if (dof <= 0) return 1.0;
  boost::math::chi_squared_distribution<double> dist(dof);
  return boost::math::cdf(boost::math::complement(dist, statistic));
}

ChiSquareResult TwoSampleChiSquare(const std::map<std::string, std::int64_t>& a,
                                   const std::map<std::string, std::int64_t>& b,
                                   std::int64_t min_count) {
  std::map<std::string, std::pair<double, double>> bins;
  for (const auto& [k, v] : a) bins[k].first += v;
  for (const auto& [k, v] : b) bins[k].second += v;
  double na = 0.0;
  double nb = 0.0;
  for (const auto& [k, v] : bins) {
    na += v.first;
    nb += v.second;
  }
  std::vector<std::pair<double, double>> cells;
  std::pair<double, double> pooled{0.0, 0.0};
  for (const auto& [k, v] : bins) {
    if (v.first + v.second < min_count) {
      pooled.first += v.first;
      pooled.second += v.second;
    } else {
      cells.push_back(v);
    }
  }
  if (pooled.first + pooled.second > 0) cells.push_back(pooled);
  ChiSquareResult out;
  const double ka = std::sqrt(nb / na);
  const double kb = std::sqrt(na / nb);
  for (const auto& [x, y] : cells) {
    if (x + y == 0) continue;
    out.statistic += (ka * x - kb * y) * (ka * x - kb * y) / (x + y);
  }
  out.dof = static_cast<int>(cells.size()) - 1;
  out.p_value = ChiSquareSurvival(out.statistic, out.dof);
  return out;
}

ChiSquareResult GoodnessOfFit(const std::map<std::string, std::int64_t>& observed,
                              const std::map<std::string, double>& expected) {
  double total = 0.0;
  for (const auto& [k, v] : observed) total += v;
  ChiSquareResult out;
  for (const auto& [k, p] : expected) {
    const auto it = observed.find(k);
    const double o = it == observed.end() ? 0.0 : it->second;
    const double e = p * total;
    if (e > 0) out.statistic += (o - e) * (o - e) / e;
  }
  for (const auto& [k, v] : observed) {
    if (!expected.count(k) && v > 0) out.statistic = 1e300;  // impossible category
  }
  out.dof = static_cast<int>(expected.size()) - 1;
  out.p_value = ChiSquareSurvival(out.statistic, out.dof);
  return out;
}

}  // namespace cvqc::testing
