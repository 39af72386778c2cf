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


#include "cvqc/analysis.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include <Eigen/Dense>

#include "cvqc/qprover.h"

namespace cvqc {
namespace {

std::string Fixed(double v, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

// ---- canonical cheaters ----------------------------------------------------------

// Shared state: one committed (b, x) per qubit and the domain width for
// answering Hadamard rounds.
class CommittingStrategy : public ClassicalStrategy {
 protected:
  void Remember(const PublicView& view) {
    params_ = view.params;
    mode_ = view.mode;
    domain_bits_.clear();
    for (const KeyOracle& k : view.keys) domain_bits_.push_back(k.domain_bits());
    b_.assign(view.keys.size(), 0);
    x_.assign(view.keys.size(), 0);
  }

  Word CommitQubit(const PublicView& view, std::size_t q, std::uint8_t b, Rng& rng) {
    b_[q] = b;
    x_[q] = view.keys[q].SampleDomain(rng);
    return view.keys[q].Eval(b, x_[q]);
  }

  Response Opening(std::size_t q) const { return {b_[q], x_[q]}; }

  // Hadamard-round answer aimed at the XX part: w is the preferred logical
  // bit and t a nonzero mask. Without a claw the decoded bit is w xor an
  // unknown hardcore bit.
  Response Tuned(std::size_t q, std::uint8_t w, Rng& rng) const {
    return {w, SampleNonzero(domain_bits_[q], rng)};
  }

  void Prefer(const PublicView& view) {
    const int n = view.params.n;
    if (view.h) {
      zz_ = BestClassicalAssignment(*view.h, Pauli::kZZ);
      xx_ = BestClassicalAssignment(*view.h, Pauli::kXX);
    } else {
      // CTQ accepts a decoded 0 in every Hadamard-round qubit.
      zz_.assign(n, 0);
      xx_.assign(n, 0);
    }
  }

  ProtocolParams params_;
  ProtocolMode mode_ = ProtocolMode::kHamiltonian;
  std::vector<int> domain_bits_;
  Bits b_;
  std::vector<Word> x_;
  Bits zz_;
  Bits xx_;
};

// Answers every round as a test round.
class TestOnlyStrategy final : public CommittingStrategy {
 public:
  std::string name() const override { return "test-only"; }
  std::vector<Word> Commit(const PublicView& view, Rng& rng) override {
    Remember(view);
    std::vector<Word> y(view.keys.size());
    for (std::size_t q = 0; q < y.size(); ++q) y[q] = CommitQubit(view, q, RandomBit(rng), rng);
    return y;
  }
  std::vector<Response> Respond(std::span<const std::uint8_t>, Rng&) override {
    std::vector<Response> u(b_.size());
    for (std::size_t q = 0; q < u.size(); ++q) u[q] = Opening(q);
    return u;
  }
};

// Precommits to a guessed challenge. Groups guessed as Hadamard rounds get
// ZZ-optimal committed bits and XX-tuned answers.
class GuessChallengeStrategy final : public CommittingStrategy {
 public:
  std::string name() const override { return "guess-challenge"; }
  std::vector<Word> Commit(const PublicView& view, Rng& rng) override {
    Remember(view);
    Prefer(view);
    guess_ = RandomBits(static_cast<std::size_t>(view.params.k), rng);
    const ProtocolParams& p = view.params;
    std::vector<Word> y(view.keys.size());
    for (int i = 0; i < p.k; ++i) {
      for (int j = 0; j < p.r; ++j) {
        for (int l = 0; l < p.n; ++l) {
          const std::size_t q = p.Index(i, j, l);
          y[q] = CommitQubit(view, q, guess_[i] ? zz_[l] : RandomBit(rng), rng);
        }
      }
    }
    return y;
  }
  std::vector<Response> Respond(std::span<const std::uint8_t> c, Rng& rng) override {
    const ProtocolParams& p = params_;
    std::vector<Response> u(b_.size());
    for (int i = 0; i < p.k; ++i) {
      const bool tuned = c[i] == 1 && guess_[i] == 1;
      for (int j = 0; j < p.r; ++j) {
        for (int l = 0; l < p.n; ++l) {
          const std::size_t q = p.Index(i, j, l);
          u[q] = tuned ? Tuned(q, xx_[l], rng) : Opening(q);
        }
      }
    }
    return u;
  }

 private:
  Bits guess_;
};

// In every group, the first half of the copies answer as test rounds and
// the second half are energy-tuned.
class HalfSplitStrategy final : public CommittingStrategy {
 public:
  std::string name() const override { return "half-split"; }
  std::vector<Word> Commit(const PublicView& view, Rng& rng) override {
    Remember(view);
    Prefer(view);
    const ProtocolParams& p = view.params;
    std::vector<Word> y(view.keys.size());
    for (int i = 0; i < p.k; ++i) {
      for (int j = 0; j < p.r; ++j) {
        for (int l = 0; l < p.n; ++l) {
          const std::size_t q = p.Index(i, j, l);
          y[q] = CommitQubit(view, q, Tuned(j) ? zz_[l] : RandomBit(rng), rng);
        }
      }
    }
    return y;
  }
  std::vector<Response> Respond(std::span<const std::uint8_t> c, Rng& rng) override {
    const ProtocolParams& p = params_;
    std::vector<Response> u(b_.size());
    for (int i = 0; i < p.k; ++i) {
      for (int j = 0; j < p.r; ++j) {
        for (int l = 0; l < p.n; ++l) {
          const std::size_t q = p.Index(i, j, l);
          u[q] = (c[i] == 1 && Tuned(j)) ? CommittingStrategy::Tuned(q, xx_[l], rng) : Opening(q);
        }
      }
    }
    return u;
  }

 private:
  bool Tuned(int j) const { return j >= params_.r / 2; }
};

// Uniform words everywhere.
class RandomNoiseStrategy final : public ClassicalStrategy {
 public:
  std::string name() const override { return "random-noise"; }
  std::vector<Word> Commit(const PublicView& view, Rng& rng) override {
    domain_bits_.clear();
    std::vector<Word> y;
    for (const KeyOracle& k : view.keys) {
      domain_bits_.push_back(k.domain_bits());
      y.push_back(rng() & LowMask(k.image_bits()));
    }
    return y;
  }
  std::vector<Response> Respond(std::span<const std::uint8_t>, Rng& rng) override {
    std::vector<Response> u;
    for (int bits : domain_bits_) u.push_back({RandomBit(rng), rng() & LowMask(bits)});
    return u;
  }

 private:
  std::vector<int> domain_bits_;
};

StateVector PlusState(int n) {
  StateVector psi(std::size_t{1} << n, Amplitude(std::pow(2.0, -0.5 * n), 0.0));
  return psi;
}

double Gaussian(Rng& rng) {
  // Box-Muller on the portable uniform; 1 - u keeps the log argument > 0.
  const double u = 1.0 - Uniform01(rng);
  const double v = Uniform01(rng);
  return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * 3.14159265358979323846 * v);
}

Eigen::MatrixXcd GaussianMatrix(int rows, int cols, Rng& rng) {
  Eigen::MatrixXcd g(rows, cols);
  for (int c = 0; c < cols; ++c) {
    for (int r = 0; r < rows; ++r) {
      const double re = Gaussian(rng);
      g(r, c) = std::complex<double>(re, Gaussian(rng));
    }
  }
  return g;
}

Eigen::MatrixXcd OrthonormalColumns(int dim, int cols, Rng& rng) {
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(GaussianMatrix(dim, cols, rng));
  return qr.householderQ() * Eigen::MatrixXcd::Identity(dim, cols);
}

}  // namespace

// ---- strategy plumbing ---------------------------------------------------------------

ClassicalProver::ClassicalProver(std::unique_ptr<ClassicalStrategy> strategy,
                                 const ZXHamiltonian* h)
    : strategy_(std::move(strategy)), h_(h) {}

std::vector<Word> ClassicalProver::Commit(const ProverSetup& setup, Rng& rng) {
  PublicView view;
  view.params = setup.params;
  view.mode = setup.mode;
  view.h = setup.mode == ProtocolMode::kHamiltonian ? h_ : nullptr;
  view.keys.reserve(setup.pk.size());
  for (const PublicKey& pk : setup.pk) view.keys.emplace_back(pk);
  return strategy_->Commit(view, rng);
}

std::vector<Response> ClassicalProver::Respond(std::span<const std::uint8_t> c, Rng& rng) {
  return strategy_->Respond(c, rng);
}

Bits BestClassicalAssignment(const ZXHamiltonian& h, Pauli pauli) {
  const int n = h.num_qubits();
  if (n > kMaxExactQubits) throw CapacityError("classical search limited to 12 qubits");
  double best = -1.0;
  std::uint64_t arg = 0;
  for (std::uint64_t z = 0; z < (std::uint64_t{1} << n); ++z) {
    double score = 0.0;
    for (const Term& t : h.terms()) {
      if (t.pauli != pauli) continue;
      if (TermSatisfied(t, (z >> t.i) & 1, (z >> t.j) & 1)) score += t.weight;
    }
    if (score > best + 1e-12) {
      best = score;
      arg = z;
    }
  }
  Bits out(n);
  for (int l = 0; l < n; ++l) out[l] = (arg >> l) & 1;
  return out;
}

std::vector<std::string> ClassicalStrategyNames() {
  return {"test-only", "guess-challenge", "half-split", "random-noise"};
}

std::vector<std::string> StrategyNames() {
  auto names = ClassicalStrategyNames();
  names.insert(names.begin(), "honest");
  return names;
}

std::unique_ptr<ClassicalStrategy> MakeClassicalStrategy(std::string_view name) {
  if (name == "test-only") return std::make_unique<TestOnlyStrategy>();
  if (name == "guess-challenge") return std::make_unique<GuessChallengeStrategy>();
  if (name == "half-split") return std::make_unique<HalfSplitStrategy>();
  if (name == "random-noise") return std::make_unique<RandomNoiseStrategy>();
  throw InvalidArgument("unknown strategy: " + std::string(name));
}

ProverFactory MakeProverFactory(std::string_view strategy, ProtocolMode mode,
                                const ZXHamiltonian* h, const ProtocolParams& params) {
  if (mode == ProtocolMode::kHamiltonian && !h) {
    throw InvalidArgument("Hamiltonian mode needs an instance");
  }
  if (strategy == "honest") {
    StateVector witness = mode == ProtocolMode::kHamiltonian ? MinEnergy(*h).state
                                                             : PlusState(params.n);
    return [witness = std::move(witness)]() -> std::unique_ptr<Prover> {
      return std::make_unique<HonestProver>(witness);
    };
  }
  MakeClassicalStrategy(strategy);  // validates the name
  const ZXHamiltonian* instance = mode == ProtocolMode::kHamiltonian ? h : nullptr;
  return [name = std::string(strategy), instance]() -> std::unique_ptr<Prover> {
    return std::make_unique<ClassicalProver>(MakeClassicalStrategy(name), instance);
  };
}

// ---- estimation ----------------------------------------------------------------------

int AnalysisThreads() {
  if (const char* env = std::getenv("CVQC_THREADS")) {
    const int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void ParallelFor(std::int64_t count, int threads,
                 const std::function<void(std::int64_t)>& body) {
  if (count <= 0) return;
  const int workers =
      static_cast<int>(std::min<std::int64_t>(count, threads > 0 ? threads : AnalysisThreads()));
  std::atomic<std::int64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto run = [&] {
    for (;;) {
      const std::int64_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mu);
        if (!failure) failure = std::current_exception();
        next.store(count);
        return;
      }
    }
  };
  if (workers <= 1) {
    run();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int t = 0; t < workers; ++t) pool.emplace_back(run);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);
}

double StdError(double rate, std::int64_t trials) {
  return trials > 0 ? std::sqrt(rate * (1.0 - rate) / static_cast<double>(trials)) : 0.0;
}

EstimateReport Estimate(const EstimateConfig& config, const ZXHamiltonian* h) {
  if (config.trials < 100) throw InvalidArgument("estimate needs at least 100 trials");
  config.params.Validate();
  if (config.mode == ProtocolMode::kHamiltonian) {
    if (!h) throw InvalidArgument("Hamiltonian mode needs an instance");
    if (h->num_qubits() != config.params.n) throw InvalidArgument("instance size does not match n");
  }
  const ProverFactory factory = MakeProverFactory(config.strategy, config.mode, h, config.params);

  std::vector<std::uint8_t> accepted(config.trials);
  std::vector<std::int32_t> hadamard(config.trials);
  std::vector<std::int32_t> empty(config.trials);
  ParallelFor(config.trials, config.threads, [&](std::int64_t t) {
    Rng rng(DeriveSeed(config.seed, static_cast<std::uint64_t>(t)));
    const SetupPair setup = config.mode == ProtocolMode::kCtq ? SetupCtq(config.params, rng)
                                                             : Setup(config.params, rng);
    auto prover = factory();
    VerdictReport report;
    const Transcript tr = config.mode == ProtocolMode::kCtq
                              ? RunCtq(setup, *prover, rng, &report)
                              : RunInteractive(*h, setup, *prover, rng, &report);
    accepted[t] = tr.accepted ? 1 : 0;
    for (const GroupOutcome& g : report.groups) {
      if (g.challenge != 1) continue;
      ++hadamard[t];
      if (config.mode == ProtocolMode::kHamiltonian && g.consistent == 0) ++empty[t];
    }
  });

  EstimateReport out;
  out.config = config;
  for (std::int64_t t = 0; t < config.trials; ++t) {
    out.successes += accepted[t];
    out.hadamard_groups += hadamard[t];
    out.empty_groups += empty[t];
  }
  out.rate = static_cast<double>(out.successes) / static_cast<double>(config.trials);
  out.std_error = StdError(out.rate, config.trials);
  return out;
}

void ApplyBound(EstimateReport& report, BoundKind kind, double bound, double sigmas) {
  report.bound_kind = kind;
  report.bound = bound;
  const double slack = sigmas * report.std_error;
  switch (kind) {
    case BoundKind::kNone:
      report.pass = true;
      break;
    case BoundKind::kAtMost:
      report.pass = report.rate <= bound + slack;
      break;
    case BoundKind::kAtLeast:
      report.pass = report.rate >= bound - slack;
      break;
  }
}

// ---- amplification bound -------------------------------------------------------------

double HoeffdingBound(int r, double g) {
  if (r < 1 || !(g > 0.0 && g <= 1.0)) throw InvalidArgument("need r >= 1 and g in (0, 1]");
  return 2.0 * std::exp(-r * g * g / 16.0);
}

bool RunModifiedMf(const ZXHamiltonian& h, const StateVector& psi, double a, double b, int r,
                   Rng& rng) {
  const int n = h.num_qubits();
  Bits basis(n);
  int consistent = 0;
  int satisfied = 0;
  for (int copy = 0; copy < r; ++copy) {
    for (auto& bit : basis) bit = RandomBit(rng);
    const Term& term = SampleTerm(h, rng());
    if (!IsConsistent(term, basis)) continue;
    ++consistent;
    StateVector phi = psi;
    for (int l = 0; l < n; ++l) {
      if (basis[l]) ApplyH(phi, l);
    }
    const std::uint64_t outcome = SampleBasisIndex(phi, rng);
    if (TermSatisfied(term, (outcome >> term.i) & 1, (outcome >> term.j) & 1)) ++satisfied;
  }
  return MeetsThreshold(satisfied, consistent, a, b);
}

MfErrorReport ModifiedMfError(const ZXHamiltonian& h, int r, double g, std::int64_t trials,
                              std::uint64_t seed, int threads) {
  if (r < 1 || !(g > 0.0 && g <= 1.0)) throw InvalidArgument("need r >= 1 and g in (0, 1]");
  if (trials < 1) throw InvalidArgument("need at least one trial");
  const GroundState gs = MinEnergy(h);
  const double e0 = gs.energy;
  std::vector<std::uint8_t> rejects(trials);
  std::vector<std::uint8_t> accepts(trials);
  ParallelFor(trials, threads, [&](std::int64_t t) {
    Rng yes(DeriveSeed(seed, 2 * static_cast<std::uint64_t>(t)));
    rejects[t] = RunModifiedMf(h, gs.state, e0, e0 + 2 * g, r, yes) ? 0 : 1;
    Rng no(DeriveSeed(seed, 2 * static_cast<std::uint64_t>(t) + 1));
    accepts[t] = RunModifiedMf(h, gs.state, e0 - 2 * g, e0, r, no) ? 1 : 0;
  });
  MfErrorReport out;
  out.r = r;
  out.g = g;
  out.trials = trials;
  out.ground_energy = e0;
  std::int64_t rej = 0;
  std::int64_t acc = 0;
  for (std::int64_t t = 0; t < trials; ++t) {
    rej += rejects[t];
    acc += accepts[t];
  }
  out.completeness_error = static_cast<double>(rej) / trials;
  out.soundness_error = static_cast<double>(acc) / trials;
  out.completeness_std_error = StdError(out.completeness_error, trials);
  out.soundness_std_error = StdError(out.soundness_error, trials);
  out.bound = HoeffdingBound(r, g);
  out.pass = out.completeness_error <= out.bound + 3 * out.completeness_std_error &&
             out.soundness_error <= out.bound + 3 * out.soundness_std_error;
  return out;
}

// ---- projector bound -----------------------------------------------------------------

ProjectorInequalityReport ProjectorInequalityCheck(int dim, int m, std::int64_t trials, Rng& rng, ProjectorFamily family) {
  if (dim < 2 || dim > 64 || m < 1 || m > 16) throw InvalidArgument("need 2 <= dim <= 64, 1 <= m <= 16");
  if (family == ProjectorFamily::kOrthogonal && m > dim) {
    throw InvalidArgument("orthogonal family needs m <= dim");
  }
  ProjectorInequalityReport out;
  out.dim = dim;
  out.m = m;
  out.family = family;
  out.trials = trials;
  std::vector<Eigen::MatrixXcd> proj(m);
  for (std::int64_t t = 0; t < trials; ++t) {
    if (family == ProjectorFamily::kRandom) {
      for (auto& a : proj) {
        const int rank = 1 + static_cast<int>(UniformBelow(rng, dim - 1));
        const Eigen::MatrixXcd q = OrthonormalColumns(dim, rank, rng);
        a = q * q.adjoint();
      }
    } else {
      // Disjoint column blocks of one random unitary; some columns may be
      // left unused.
      const Eigen::MatrixXcd u = OrthonormalColumns(dim, dim, rng);
      std::vector<int> owner(dim);
      for (int c = 0; c < dim; ++c) {
        owner[c] = c < m ? c : static_cast<int>(UniformBelow(rng, m + 1)) - 1;
      }
      for (auto& a : proj) a = Eigen::MatrixXcd::Zero(dim, dim);
      for (int c = 0; c < dim; ++c) {
        if (owner[c] >= 0) proj[owner[c]] += u.col(c) * u.col(c).adjoint();
      }
    }
    Eigen::VectorXcd psi = GaussianMatrix(dim, 1, rng).col(0);
    psi.normalize();

    std::vector<Eigen::VectorXcd> v(m);
    double lhs = 0.0;
    bool degenerate = false;
    for (int i = 0; i < m; ++i) {
      if ((proj[i] * proj[i] - proj[i]).norm() > 1e-9) degenerate = true;
      v[i] = proj[i] * psi;
      lhs += v[i].squaredNorm();
    }
    if (degenerate) ++out.degenerate;
    double sum = 0.0;
    for (int i = 0; i < m; ++i) {
      for (int j = i + 1; j < m; ++j) {
        // <psi| A_i A_j + A_j A_i |psi> = 2 Re <A_i psi, A_j psi>.
        double delta = 2.0 * v[i].dot(v[j]).real();
        if (delta < 0.0) {
          ++out.clamped_negative;
          delta = 0.0;
        }
        if (delta > 2.0) ++out.out_of_range;
        sum += delta;
      }
    }
    const double bound = 1.0 + std::sqrt(sum);
    out.max_lhs = std::max(out.max_lhs, lhs);
    out.max_excess = std::max(out.max_excess, lhs - bound);
    if (lhs > bound + 1e-9) ++out.violations;
  }
  out.pass = out.violations == 0;
  return out;
}

// ---- soundness curve -----------------------------------------------------------------

CurveReport SoundnessCurve(ProtocolMode mode, const ZXHamiltonian* h, ProtocolParams base,
                           int k_min, int k_max, const std::vector<std::string>& strategies,
                           std::int64_t trials, std::uint64_t seed, double tolerance,
                           int threads) {
  if (k_min < 1 || k_max > 10 || k_min > k_max) throw InvalidArgument("need 1 <= k_min <= k_max <= 10");
  if (strategies.empty()) throw InvalidArgument("no strategies given");
  CurveReport out;
  out.tolerance = tolerance;
  out.pass = true;
  for (int k = k_min; k <= k_max; ++k) {
    CurveRow row;
    row.k = k;
    row.reference = std::ldexp(1.0, -k);
    base.k = k;
    for (std::size_t s = 0; s < strategies.size(); ++s) {
      EstimateConfig cfg;
      cfg.mode = mode;
      cfg.params = base;
      cfg.strategy = strategies[s];
      cfg.trials = trials;
      cfg.seed = DeriveSeed(seed, static_cast<std::uint64_t>(k) * 64 + s);
      cfg.threads = threads;
      EstimateReport rep = Estimate(cfg, h);
      ApplyBound(rep, BoundKind::kAtMost, row.reference + tolerance, 0.0);
      if (row.reports.empty() || rep.rate > row.max_rate) {
        row.max_rate = rep.rate;
        row.max_strategy = rep.config.strategy;
      }
      row.reports.push_back(std::move(rep));
    }
    row.pass = row.max_rate <= row.reference + tolerance;
    out.pass = out.pass && row.pass;
    out.rows.push_back(std::move(row));
  }
  return out;
}

// ---- reporting -----------------------------------------------------------------------

nlohmann::json ToJson(const ProtocolParams& p) {
  return {{"lambda", p.lambda}, {"n", p.n}, {"r", p.r}, {"k", p.k},
          {"funcfam", BackendName(p.backend)}};
}

nlohmann::json ToJson(const EstimateReport& r) {
  nlohmann::json j = {
      {"mode", r.config.mode == ProtocolMode::kCtq ? "ctq" : "hamiltonian"},
      {"strategy", r.config.strategy},
      {"params", ToJson(r.config.params)},
      {"seed", r.config.seed},
      {"trials", r.config.trials},
      {"successes", r.successes},
      {"rate", r.rate},
      {"std_error", r.std_error},
      {"hadamard_groups", r.hadamard_groups},
      {"empty_consistent_groups", r.empty_groups},
  };
  if (r.bound_kind != BoundKind::kNone) {
    j["bound"] = {{"kind", r.bound_kind == BoundKind::kAtMost ? "at_most" : "at_least"},
                  {"value", r.bound},
                  {"pass", r.pass}};
  }
  return j;
}

nlohmann::json ToJson(const MfErrorReport& r) {
  return {{"r", r.r},
          {"g", r.g},
          {"trials", r.trials},
          {"ground_energy", r.ground_energy},
          {"completeness_error", r.completeness_error},
          {"completeness_std_error", r.completeness_std_error},
          {"soundness_error", r.soundness_error},
          {"soundness_std_error", r.soundness_std_error},
          {"bound", r.bound},
          {"pass", r.pass}};
}

nlohmann::json ToJson(const ProjectorInequalityReport& r) {
  return {{"dim", r.dim},
          {"m", r.m},
          {"family", r.family == ProjectorFamily::kRandom ? "random" : "orthogonal"},
          {"trials", r.trials},
          {"violations", r.violations},
          {"clamped_negative", r.clamped_negative},
          {"out_of_range", r.out_of_range},
          {"degenerate", r.degenerate},
          {"max_lhs", r.max_lhs},
          {"max_excess", r.max_excess},
          {"pass", r.pass}};
}

nlohmann::json ToJson(const CurveReport& r) {
  nlohmann::json rows = nlohmann::json::array();
  for (const CurveRow& row : r.rows) {
    nlohmann::json reports = nlohmann::json::array();
    for (const EstimateReport& rep : row.reports) reports.push_back(ToJson(rep));
    rows.push_back({{"k", row.k},
                    {"reference", row.reference},
                    {"max_rate", row.max_rate},
                    {"max_strategy", row.max_strategy},
                    {"pass", row.pass},
                    {"reports", std::move(reports)}});
  }
  return {{"tolerance", r.tolerance}, {"pass", r.pass}, {"rows", std::move(rows)}};
}

std::string FormatTable(const EstimateReport& r) {
  std::ostringstream os;
  os << "strategy   " << r.config.strategy << "\n"
     << "trials     " << r.config.trials << "\n"
     << "successes  " << r.successes << "\n"
     << "rate       " << Fixed(r.rate) << " +- " << Fixed(r.std_error) << "\n"
     << "empty A_i  " << r.empty_groups << " / " << r.hadamard_groups << " Hadamard groups\n";
  if (r.bound_kind != BoundKind::kNone) {
    os << "bound      " << (r.bound_kind == BoundKind::kAtMost ? "<= " : ">= ") << Fixed(r.bound)
       << (r.pass ? "  ok" : "  FAILED") << "\n";
  }
  return os.str();
}

std::string FormatTable(const std::vector<MfErrorReport>& rows) {
  std::ostringstream os;
  char line[160];
  std::snprintf(line, sizeof line, "%6s %6s %12s %12s %12s %6s\n", "r", "g", "compl_err",
                "sound_err", "bound", "ok");
  os << line;
  for (const MfErrorReport& r : rows) {
    std::snprintf(line, sizeof line, "%6d %6.3f %12.6f %12.6f %12.6f %6s\n", r.r, r.g,
                  r.completeness_error, r.soundness_error, r.bound, r.pass ? "yes" : "NO");
    os << line;
  }
  return os.str();
}

std::string FormatTable(const ProjectorInequalityReport& r) {
  std::ostringstream os;
  os << "dim " << r.dim << ", m " << r.m << ", "
     << (r.family == ProjectorFamily::kRandom ? "random" : "orthogonal") << ", trials "
     << r.trials << "\n"
     << "violations        " << r.violations << "\n"
     << "clamped overlaps  " << r.clamped_negative << "\n"
     << "overlaps above 2  " << r.out_of_range << "\n"
     << "degenerate        " << r.degenerate << "\n"
     << "max lhs           " << Fixed(r.max_lhs, 9) << "\n"
     << "max lhs - bound   " << Fixed(r.max_excess, 9) << "\n";
  return os.str();
}

std::string FormatTable(const CurveReport& r) {
  std::ostringstream os;
  char line[200];
  std::snprintf(line, sizeof line, "%4s %10s %10s %-16s %s\n", "k", "2^-k", "max_rate",
                "argmax", "ok");
  os << line;
  for (const CurveRow& row : r.rows) {
    std::snprintf(line, sizeof line, "%4d %10.6f %10.6f %-16s %s\n", row.k, row.reference,
                  row.max_rate, row.max_strategy.c_str(), row.pass ? "yes" : "NO");
    os << line;
  }
  return os.str();
}

}  // namespace cvqc
