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


// Monte Carlo estimation of acceptance rates, canonical cheating
// strategies, and numeric checks of the amplification and pairwise-overlap
// bounds.
//
// Classical strategies see a PublicView: instance, parameters and one
// KeyOracle per qubit. A KeyOracle exposes evaluation and checking only. It
// does not expose the key kind (which would reveal the basis string), the
// trapdoor, claws, or any statevector.

#ifndef CVQC_ANALYSIS_H_
#define CVQC_ANALYSIS_H_

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "cvqc/common.h"
#include "cvqc/funcfam.h"
#include "cvqc/hamiltonian.h"
#include "cvqc/protocol.h"

namespace cvqc {

// ---- strategies ----------------------------------------------------------------------

class KeyOracle {
 public:
  explicit KeyOracle(PublicKey pk) : pk_(std::move(pk)) {}

  int domain_bits() const { return pk_.domain_bits(); }
  int image_bits() const { return pk_.image_bits(); }
  bool IsDomainElement(Word x) const { return pk_.IsDomainElement(x); }
  Word SampleDomain(Rng& rng) const { return pk_.SampleDomain(rng); }
  Word Eval(std::uint8_t b, Word x) const { return pk_.Eval(b, x); }
  bool Check(std::uint8_t b, Word x, Word y) const { return pk_.Check(b, x, y); }

 private:
  PublicKey pk_;
};

struct PublicView {
  ProtocolParams params;
  ProtocolMode mode = ProtocolMode::kHamiltonian;
  const ZXHamiltonian* h = nullptr;  // null in CTQ mode
  std::vector<KeyOracle> keys;       // copy-major, n per copy
};

class ClassicalStrategy {
 public:
  virtual ~ClassicalStrategy() = default;
  virtual std::string name() const = 0;
  virtual std::vector<Word> Commit(const PublicView& view, Rng& rng) = 0;
  virtual std::vector<Response> Respond(std::span<const std::uint8_t> c, Rng& rng) = 0;
};

// Adapts a classical strategy to the protocol's Prover interface. The
// adapter is the only place that touches PublicKey objects.
class ClassicalProver final : public Prover {
 public:
  ClassicalProver(std::unique_ptr<ClassicalStrategy> strategy, const ZXHamiltonian* h);

  std::string name() const override { return strategy_->name(); }
  std::vector<Word> Commit(const ProverSetup& setup, Rng& rng) override;
  std::vector<Response> Respond(std::span<const std::uint8_t> c, Rng& rng) override;

 private:
  std::unique_ptr<ClassicalStrategy> strategy_;
  const ZXHamiltonian* h_;
};

// Classical assignment maximizing the weight of satisfied terms of one Pauli
// type (exhaustive over 2^n, n <= 12). Bits of qubits untouched by such terms
// are 0.
Bits BestClassicalAssignment(const ZXHamiltonian& h, Pauli pauli);

// "test-only", "guess-challenge", "half-split", "random-noise".
std::vector<std::string> ClassicalStrategyNames();
// The above plus "honest".
std::vector<std::string> StrategyNames();
std::unique_ptr<ClassicalStrategy> MakeClassicalStrategy(std::string_view name);

// Builds fresh provers for independent sessions; safe to call concurrently.
using ProverFactory = std::function<std::unique_ptr<Prover>()>;

// "honest" uses the exact ground state of h (Hamiltonian mode) or |+>^n
// (CTQ mode). `h` may be null only in CTQ mode.
ProverFactory MakeProverFactory(std::string_view strategy, ProtocolMode mode,
                                const ZXHamiltonian* h, const ProtocolParams& params);

// ---- estimation ----------------------------------------------------------------------

// Worker count: CVQC_THREADS if set (>= 1), else hardware concurrency.
int AnalysisThreads();

// Runs body(i) for i in [0, count) on up to `threads` workers (0 = default).
void ParallelFor(std::int64_t count, int threads, const std::function<void(std::int64_t)>& body);

enum class BoundKind { kNone, kAtMost, kAtLeast };

struct EstimateConfig {
  ProtocolMode mode = ProtocolMode::kHamiltonian;
  ProtocolParams params;
  std::string strategy = "honest";
  std::int64_t trials = 1000;  // >= 100
  std::uint64_t seed = 0;
  int threads = 0;
};

struct EstimateReport {
  EstimateConfig config;
  std::int64_t successes = 0;
  double rate = 0.0;
  double std_error = 0.0;  // sqrt(rate (1 - rate) / trials)
  // Hadamard-round groups seen, and how many of them had no consistent copy.
  std::int64_t hadamard_groups = 0;
  std::int64_t empty_groups = 0;
  BoundKind bound_kind = BoundKind::kNone;
  double bound = 0.0;
  bool pass = true;
};

// Independent sessions; trial t uses Rng(DeriveSeed(seed, t)). Results do
// not depend on the thread count.
EstimateReport Estimate(const EstimateConfig& config, const ZXHamiltonian* h);

// Sets bound fields and pass = rate compared with bound, widened by
// `sigmas` standard errors.
void ApplyBound(EstimateReport& report, BoundKind kind, double bound, double sigmas);

double StdError(double rate, std::int64_t trials);

// ---- amplification bound -------------------------------------------------------------

// 2 exp(-r g^2 / 16).
double HoeffdingBound(int r, double g);

// One run of the term-sampling MF verifier on r copies of psi: uniform
// bases per copy, one sampled term per copy, accept iff the satisfied count
// over consistent copies reaches (2 - a - b)|A| / 4.
bool RunModifiedMf(const ZXHamiltonian& h, const StateVector& psi, double a, double b, int r,
                   Rng& rng);

struct MfErrorReport {
  int r = 0;
  double g = 0.0;
  std::int64_t trials = 0;
  double ground_energy = 0.0;
  // Yes side: a = E0, b = E0 + 2g, witness = ground state; error = reject rate.
  double completeness_error = 0.0;
  // No side: a = E0 - 2g, b = E0, witness = ground state; error = accept rate.
  double soundness_error = 0.0;
  double completeness_std_error = 0.0;
  double soundness_std_error = 0.0;
  double bound = 0.0;
  bool pass = false;  // both errors <= bound + 3 sigma
};

MfErrorReport ModifiedMfError(const ZXHamiltonian& h, int r, double g, std::int64_t trials,
                              std::uint64_t seed, int threads = 0);

// ---- pairwise-overlap projector bound -------------------------------------------------

enum class ProjectorFamily { kRandom, kOrthogonal };

struct ProjectorInequalityReport {
  int dim = 0;
  int m = 0;
  ProjectorFamily family = ProjectorFamily::kRandom;
  std::int64_t trials = 0;
  std::int64_t violations = 0;        // lhs > 1 + sqrt(sum delta) + 1e-9
  std::int64_t clamped_negative = 0;  // overlaps below 0, raised to delta = 0
  std::int64_t out_of_range = 0;      // overlaps above 2 (hypothesis fails)
  std::int64_t degenerate = 0;        // projector idempotence error > 1e-9
  double max_lhs = 0.0;
  double max_excess = -1e300;         // max of lhs - bound
  bool pass = false;
};

// Random projectors of uniform rank in [1, dim - 1] from QR of complex
// Gaussian matrices and a Haar-random unit vector. dim <= 64, m <= 16.
ProjectorInequalityReport ProjectorInequalityCheck(int dim, int m, std::int64_t trials, Rng& rng,
                         ProjectorFamily family = ProjectorFamily::kRandom);

// ---- soundness curve -----------------------------------------------------------------

struct CurveRow {
  int k = 0;
  double reference = 0.0;  // 2^-k
  std::vector<EstimateReport> reports;
  double max_rate = 0.0;
  std::string max_strategy;
  bool pass = false;  // max_rate <= reference + tolerance
};

struct CurveReport {
  double tolerance = 0.02;
  std::vector<CurveRow> rows;
  bool pass = false;
};

// k in [k_min, k_max] (k_max <= 10); base.k is overridden per row.
CurveReport SoundnessCurve(ProtocolMode mode, const ZXHamiltonian* h, ProtocolParams base,
                           int k_min, int k_max, const std::vector<std::string>& strategies,
                           std::int64_t trials, std::uint64_t seed, double tolerance = 0.02,
                           int threads = 0);

// ---- reporting -----------------------------------------------------------------------

nlohmann::json ToJson(const ProtocolParams& p);
nlohmann::json ToJson(const EstimateReport& r);
nlohmann::json ToJson(const MfErrorReport& r);
nlohmann::json ToJson(const ProjectorInequalityReport& r);
nlohmann::json ToJson(const CurveReport& r);

std::string FormatTable(const EstimateReport& r);
std::string FormatTable(const std::vector<MfErrorReport>& rows);
std::string FormatTable(const ProjectorInequalityReport& r);
std::string FormatTable(const CurveReport& r);

}  // namespace cvqc

#endif  // CVQC_ANALYSIS_H_
