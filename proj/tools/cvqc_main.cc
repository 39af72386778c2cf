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


// cvqc: command-line front end.
//
// Exit codes: 0 success or accept, 1 reject, 2 usage or input error,
// 3 bound-check failure.

#include <cmath>
#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cvqc/analysis.h"
#include "cvqc/fiat_shamir.h"
#include "cvqc/hamiltonian.h"
#include "cvqc/io.h"
#include "cvqc/protocol.h"
#include "cvqc/zk/zk.h"

namespace {

using cvqc::io::json;

constexpr int kAccept = 0;
constexpr int kReject = 1;
constexpr int kUsage = 2;
constexpr int kBoundFailure = 3;

struct Options {
  std::string command;
  std::string instance;
  std::string setup;
  std::string transcript;
  std::string out;
  std::uint64_t seed = 1;
  int lambda = 8;
  int n = 2;
  int r = 16;
  int k = 5;
  std::int64_t trials = 1000;
  std::string strategy = "honest";
  std::vector<std::string> strategies;
  std::string funcfam = "mock";
  std::string fhe = "transparent";
  std::string nizk = "toy";
  double gap = 0.4;
  std::string kind = "yes";
  bool ctq = false;
  bool fs = false;
  bool with_state = false;
  int k_min = 1;
  int k_max = 6;
  double tolerance = 0.02;
  int dim = 8;
  int m = 4;
  std::string family = "random";
  std::string check = "projector";
  std::vector<int> grid_r = {25, 50, 100, 200, 400};
  std::vector<double> grid_g = {0.1, 0.2, 0.3, 0.4};
  std::optional<double> at_most;
  std::optional<double> at_least;
};

json ConfigJson(const Options& o) {
  return {{"command", o.command},   {"instance", o.instance}, {"setup", o.setup},
          {"seed", o.seed},         {"lambda", o.lambda},     {"n", o.n},
          {"r", o.r},               {"k", o.k},               {"trials", o.trials},
          {"strategy", o.strategy}, {"funcfam", o.funcfam},   {"fhe", o.fhe},
          {"nizk", o.nizk},         {"ctq", o.ctq}};
}

cvqc::ProtocolParams Params(const Options& o) {
  cvqc::ProtocolParams p;
  p.lambda = o.lambda;
  p.n = o.n;
  p.r = o.r;
  p.k = o.k;
  p.backend = cvqc::ParseBackend(o.funcfam);
  p.Validate();
  return p;
}

cvqc::ZXHamiltonian LoadInstance(const Options& o) {
  if (o.instance.empty()) throw cvqc::InvalidArgument("--instance is required");
  return cvqc::io::InstanceFromJson(cvqc::io::ReadJsonFile(o.instance));
}

void Emit(const Options& o, const json& doc) {
  if (!o.out.empty()) cvqc::io::WriteJsonFile(o.out, doc);
}

// Loads --setup when given, otherwise draws a fresh one from rng.
cvqc::SetupPair ObtainSetup(const Options& o, cvqc::ProtocolMode mode, cvqc::Rng& rng) {
  if (!o.setup.empty()) {
    cvqc::SetupPair s = cvqc::io::SetupFromJson(cvqc::io::ReadJsonFile(o.setup));
    if (s.verifier.mode != mode) throw cvqc::InvalidArgument("setup file is for another mode");
    return s;
  }
  const cvqc::ProtocolParams p = Params(o);
  return mode == cvqc::ProtocolMode::kCtq ? cvqc::SetupCtq(p, rng) : cvqc::Setup(p, rng);
}

cvqc::ZkBackends Backends(const Options& o) {
  return {cvqc::MakeFhe(o.fhe), cvqc::MakeNizk(o.nizk)};
}

// ---- commands ----------------------------------------------------------------------

int GenInstance(const Options& o) {
  if (o.n < 2 || o.n > cvqc::kMaxExactQubits) throw cvqc::InvalidArgument("--n must be in [2, 12]");
  if (!(o.gap > 0.0)) throw cvqc::InvalidArgument("--gap must be positive");
  cvqc::Rng rng(o.seed);
  std::vector<cvqc::Coupling> couplings;
  while (couplings.empty()) {
    for (int i = 0; i < o.n; ++i) {
      for (int j = i + 1; j < o.n; ++j) {
        if (cvqc::RandomBit(rng)) couplings.push_back({i, j, 2.0 * cvqc::Uniform01(rng) - 1.0});
      }
    }
  }
  // Thresholds are placed after normalization, around the exact ground energy.
  auto probe = cvqc::ZXHamiltonian::Normalize(o.n, couplings, 0.0, 1.0);
  const double e0 = cvqc::MinEnergy(probe).energy;
  double a = e0;
  double b = e0 + o.gap;
  if (o.kind == "no") {
    a = e0 - o.gap;
    b = e0;
  } else if (o.kind != "yes") {
    throw cvqc::InvalidArgument("--kind must be yes or no");
  }
  auto h = cvqc::ZXHamiltonian::Normalize(o.n, *probe.couplings(), a, b);
  json doc = cvqc::io::InstanceToJson(h);
  doc["version"] = cvqc::io::Version();
  doc["config"] = ConfigJson(o);
  cvqc::io::WriteJsonFile(o.out.empty() ? "-" : o.out, doc);
  return kAccept;
}

int GroundEnergy(const Options& o) {
  const auto h = LoadInstance(o);
  const auto gs = cvqc::MinEnergy(h);
  const auto spectrum = cvqc::Spectrum(h);
  const char* cls = gs.energy <= h.a() + 1e-12 ? "yes" : (gs.energy >= h.b() - 1e-12 ? "no" : "outside promise");
  std::cout << "ground energy  " << gs.energy << "\n"
            << "thresholds     a = " << h.a() << ", b = " << h.b() << "\n"
            << "instance       " << cls << "\n";
  json doc = cvqc::io::Envelope(cvqc::io::kReportSchema, ConfigJson(o));
  doc["ground_energy"] = gs.energy;
  doc["spectrum"] = spectrum;
  doc["classification"] = cls;
  doc["mf_accept_probability"] = cvqc::MfAcceptProbability(h, gs.state);
  if (o.with_state) doc["state"] = cvqc::io::StateToJson(gs.state);
  Emit(o, doc);
  return kAccept;
}

int SetupCommand(const Options& o) {
  cvqc::Rng rng(o.seed);
  const cvqc::ProtocolParams p = Params(o);
  const cvqc::SetupPair s = o.ctq ? cvqc::SetupCtq(p, rng) : cvqc::Setup(p, rng);
  cvqc::io::WriteJsonFile(o.out.empty() ? "-" : o.out, cvqc::io::SetupToJson(s, ConfigJson(o)));
  return kAccept;
}

void PrintReport(const cvqc::VerdictReport& rep) {
  for (std::size_t i = 0; i < rep.groups.size(); ++i) {
    const auto& g = rep.groups[i];
    std::cout << "group " << i << ": c=" << int(g.challenge)
              << (g.accepted ? " accept" : " reject");
    if (g.challenge == 1) {
      std::cout << "  satisfied " << g.satisfied << "/" << g.consistent << " (threshold "
                << g.threshold << ", decode failures " << g.decode_failures << ")";
    }
    std::cout << "\n";
  }
}

int Run(const Options& o, bool ctq) {
  cvqc::Rng rng(o.seed);
  const auto mode = ctq ? cvqc::ProtocolMode::kCtq : cvqc::ProtocolMode::kHamiltonian;
  std::optional<cvqc::ZXHamiltonian> h;
  if (!ctq) h = LoadInstance(o);
  const cvqc::SetupPair setup = ObtainSetup(o, mode, rng);
  if (h && h->num_qubits() != setup.prover.params.n) {
    throw cvqc::InvalidArgument("instance size does not match the setup");
  }
  auto factory = cvqc::MakeProverFactory(o.strategy, mode, h ? &*h : nullptr, setup.prover.params);
  auto prover = factory();
  cvqc::VerdictReport rep;
  const cvqc::Transcript t = ctq ? cvqc::RunCtq(setup, *prover, rng, &rep)
                                 : cvqc::RunInteractive(*h, setup, *prover, rng, &rep);
  PrintReport(rep);
  std::cout << "transcript " << cvqc::ToHex(t.DigestBytes()) << "\n"
            << (t.accepted ? "ACCEPT" : "REJECT") << "\n";
  Emit(o, cvqc::io::TranscriptToJson(t, ConfigJson(o)));
  return t.accepted ? kAccept : kReject;
}

int FsRun(const Options& o) {
  cvqc::Rng rng(o.seed);
  const auto h = LoadInstance(o);
  const cvqc::SetupPair setup = ObtainSetup(o, cvqc::ProtocolMode::kHamiltonian, rng);
  auto factory = cvqc::MakeProverFactory(o.strategy, cvqc::ProtocolMode::kHamiltonian, &h,
                                         setup.prover.params);
  auto prover = factory();
  const cvqc::RandomOracle oracle;
  cvqc::FsTranscript t = cvqc::FsProve(h, setup.prover, *prover, oracle, rng);
  const cvqc::FsCheck check = cvqc::FsVerify(h, setup.verifier, t, oracle);
  t.accepted = check.accepted;
  PrintReport(check.verdict);
  std::cout << "challenge " << cvqc::io::BitText(t.c) << "\n"
            << (t.accepted ? "ACCEPT" : "REJECT") << "\n";
  Emit(o, cvqc::io::TranscriptToJson(t, ConfigJson(o)));
  return t.accepted ? kAccept : kReject;
}

int ZkRun(const Options& o, bool fs) {
  cvqc::Rng rng(o.seed);
  const auto h = LoadInstance(o);
  const auto backends = Backends(o);
  const cvqc::ZkSetup setup = cvqc::SetupZk(Params(o), backends, rng);
  const auto witness = cvqc::MinEnergy(h).state;
  const cvqc::RandomOracle oracle("CVQC-FS-ZK-v1");
  const cvqc::ZkTranscript t =
      fs ? cvqc::FsZkProve(h, setup.prover, witness, backends, oracle, rng)
         : cvqc::ZkProve(h, setup.prover, witness, backends,
                         cvqc::UniformChallenges(setup.prover.setup.params.k, rng), rng);
  const bool ok = fs ? cvqc::FsZkVerify(setup.verifier, h, t, backends, oracle)
                     : cvqc::ZkVerify(setup.verifier, h, t, backends);
  std::cout << "challenge " << cvqc::io::BitText(t.c) << "\n" << (ok ? "ACCEPT" : "REJECT") << "\n";
  json doc = cvqc::io::TranscriptToJson(t, ConfigJson(o));
  doc["fiat_shamir"] = fs;
  doc["accepted"] = ok;
  Emit(o, doc);
  if (!o.setup.empty()) cvqc::io::WriteJsonFile(o.setup, cvqc::io::ZkSetupToJson(setup, ConfigJson(o)));
  return ok ? kAccept : kReject;
}

int ZkSimulate(const Options& o) {
  cvqc::Rng rng(o.seed);
  const auto h = LoadInstance(o);
  const auto backends = Backends(o);
  const cvqc::ZkSetup setup = cvqc::SetupZk(Params(o), backends, rng);
  const cvqc::Simulation sim = cvqc::Simulate(
      h, setup, backends, cvqc::UniformChallenges(setup.prover.setup.params.k, rng), rng);
  const cvqc::LInstance x{h, setup.verifier.setup, sim.transcript.xi, sim.transcript.y,
                          sim.transcript.c, sim.transcript.chi};
  const bool relation = cvqc::VerdictPrime(x, sim.witness);
  const bool verified = cvqc::ZkVerify(setup.verifier, h, sim.transcript, backends);
  std::cout << "relation holds  " << (relation ? "yes" : "no") << "\n"
            << "verifier        " << (verified ? "ACCEPT" : "REJECT") << "\n";
  json doc = cvqc::io::TranscriptToJson(sim.transcript, ConfigJson(o));
  doc["simulated"] = true;
  doc["relation_holds"] = relation;
  doc["accepted"] = verified;
  Emit(o, doc);
  return relation && verified ? kAccept : kReject;
}

int EstimateCommand(const Options& o) {
  std::optional<cvqc::ZXHamiltonian> h;
  if (!o.ctq) h = LoadInstance(o);
  cvqc::EstimateConfig cfg;
  cfg.mode = o.ctq ? cvqc::ProtocolMode::kCtq : cvqc::ProtocolMode::kHamiltonian;
  cfg.params = Params(o);
  cfg.strategy = o.strategy;
  cfg.trials = o.trials;
  cfg.seed = o.seed;
  cvqc::EstimateReport rep = cvqc::Estimate(cfg, h ? &*h : nullptr);
  if (o.at_most) {
    cvqc::ApplyBound(rep, cvqc::BoundKind::kAtMost, *o.at_most, 3.0);
  } else if (o.at_least) {
    cvqc::ApplyBound(rep, cvqc::BoundKind::kAtLeast, *o.at_least, 3.0);
  } else if (o.strategy != "honest") {
    cvqc::ApplyBound(rep, cvqc::BoundKind::kAtMost, std::ldexp(1.0, -o.k), 3.0);
  }
  std::cout << cvqc::FormatTable(rep);
  json doc = cvqc::io::Envelope(cvqc::io::kReportSchema, ConfigJson(o));
  doc["estimate"] = cvqc::ToJson(rep);
  Emit(o, doc);
  return rep.pass ? kAccept : kBoundFailure;
}

int SoundnessCurveCommand(const Options& o) {
  std::optional<cvqc::ZXHamiltonian> h;
  if (!o.ctq) h = LoadInstance(o);
  const auto strategies = o.strategies.empty() ? cvqc::ClassicalStrategyNames() : o.strategies;
  const cvqc::CurveReport rep = cvqc::SoundnessCurve(
      o.ctq ? cvqc::ProtocolMode::kCtq : cvqc::ProtocolMode::kHamiltonian, h ? &*h : nullptr,
      Params(o), o.k_min, o.k_max, strategies, o.trials, o.seed, o.tolerance);
  std::cout << cvqc::FormatTable(rep);
  json doc = cvqc::io::Envelope(cvqc::io::kReportSchema, ConfigJson(o));
  doc["soundness_curve"] = cvqc::ToJson(rep);
  Emit(o, doc);
  return rep.pass ? kAccept : kBoundFailure;
}

int LemmaCheck(const Options& o) {
  json doc = cvqc::io::Envelope(cvqc::io::kReportSchema, ConfigJson(o));
  bool pass = true;
  if (o.check == "projector") {
    cvqc::Rng rng(o.seed);
    const auto family =
        o.family == "orthogonal" ? cvqc::ProjectorFamily::kOrthogonal : cvqc::ProjectorFamily::kRandom;
    if (o.family != "orthogonal" && o.family != "random") {
      throw cvqc::InvalidArgument("--family must be random or orthogonal");
    }
    const auto rep = cvqc::ProjectorInequalityCheck(o.dim, o.m, o.trials, rng, family);
    std::cout << cvqc::FormatTable(rep);
    doc["projector"] = cvqc::ToJson(rep);
    pass = rep.pass;
  } else if (o.check == "hoeffding") {
    const auto h = LoadInstance(o);
    std::vector<cvqc::MfErrorReport> rows;
    json arr = json::array();
    for (int r : o.grid_r) {
      for (double g : o.grid_g) {
        rows.push_back(cvqc::ModifiedMfError(h, r, g, o.trials,
                                             cvqc::DeriveSeed(o.seed, rows.size())));
        arr.push_back(cvqc::ToJson(rows.back()));
        pass = pass && rows.back().pass;
      }
    }
    std::cout << cvqc::FormatTable(rows);
    doc["hoeffding"] = std::move(arr);
  } else {
    throw cvqc::InvalidArgument("--check must be projector or hoeffding");
  }
  doc["pass"] = pass;
  Emit(o, doc);
  return pass ? kAccept : kBoundFailure;
}

void PrintDiffs(const std::vector<cvqc::io::FieldDiff>& diffs) {
  for (const auto& d : diffs) {
    std::cout << "  " << d.path << ": canonical " << d.expected << ", file " << d.found << "\n";
  }
}

int Replay(const Options& o) {
  if (o.transcript.empty()) throw cvqc::InvalidArgument("--transcript is required");
  const json doc = cvqc::io::ReadJsonFile(o.transcript);
  const std::string schema = doc.value("schema", "");
  const cvqc::Bytes canonical = cvqc::FromHex(doc.at("canonical").get<std::string>());
  const bool digest_ok = cvqc::ToHex(cvqc::Sha256(canonical)) == doc.value("digest", "");
  json expected;
  bool stored = false;
  bool recomputed = false;
  std::vector<cvqc::io::FieldDiff> diffs;

  if (schema == cvqc::io::kTranscriptSchema) {
    const cvqc::Transcript tc = cvqc::Transcript::Parse(canonical);
    const cvqc::Transcript tf = cvqc::io::TranscriptFromFields(doc.at("fields"));
    diffs = cvqc::io::DiffJson(cvqc::io::FieldsOf(tc), doc.at("fields"));
    const cvqc::SetupPair setup = cvqc::io::SetupFromJson(cvqc::io::ReadJsonFile(o.setup));
    std::optional<cvqc::ZXHamiltonian> h;
    if (tf.mode == cvqc::ProtocolMode::kHamiltonian) h = LoadInstance(o);
    const cvqc::Digest want_instance = h ? h->DigestBytes() : cvqc::CtqInstanceDigest();
    if (tf.instance != want_instance) diffs.push_back({"fields.instance_digest", cvqc::ToHex(want_instance), cvqc::ToHex(tf.instance)});
    if (tf.setup != setup.prover.DigestBytes()) diffs.push_back({"fields.setup_digest", cvqc::ToHex(setup.prover.DigestBytes()), cvqc::ToHex(tf.setup)});
    stored = tf.accepted;
    recomputed = cvqc::ReplayDecision(h ? &*h : nullptr, setup.verifier, tf);
  } else if (schema == cvqc::io::kFsTranscriptSchema) {
    const cvqc::FsTranscript tc = cvqc::FsTranscript::Parse(canonical);
    const cvqc::FsTranscript tf = cvqc::io::FsTranscriptFromFields(doc.at("fields"));
    diffs = cvqc::io::DiffJson(cvqc::io::FieldsOf(tc), doc.at("fields"));
    const cvqc::SetupPair setup = cvqc::io::SetupFromJson(cvqc::io::ReadJsonFile(o.setup));
    const auto h = LoadInstance(o);
    stored = tf.accepted;
    recomputed = cvqc::FsVerify(h, setup.verifier, tf, cvqc::RandomOracle()).accepted;
  } else if (schema == cvqc::io::kZkTranscriptSchema) {
    const cvqc::ZkTranscript tc = cvqc::ZkTranscript::Parse(canonical);
    const cvqc::ZkTranscript tf = cvqc::io::ZkTranscriptFromFields(doc.at("fields"));
    diffs = cvqc::io::DiffJson(cvqc::io::FieldsOf(tc), doc.at("fields"));
    const cvqc::ZkSetup setup = cvqc::io::ZkSetupFromJson(cvqc::io::ReadJsonFile(o.setup));
    const auto h = LoadInstance(o);
    const auto backends = Backends(o);
    stored = doc.value("accepted", false);
    recomputed = doc.value("fiat_shamir", false)
                     ? cvqc::FsZkVerify(setup.verifier, h, tf, backends,
                                        cvqc::RandomOracle("CVQC-FS-ZK-v1"))
                     : cvqc::ZkVerify(setup.verifier, h, tf, backends);
  } else {
    throw cvqc::InvalidArgument("unknown transcript schema '" + schema + "'");
  }

  const bool agree = diffs.empty() && digest_ok && stored == recomputed;
  std::cout << "digest        " << (digest_ok ? "ok" : "MISMATCH") << "\n"
            << "fields        " << (diffs.empty() ? "ok" : std::to_string(diffs.size()) + " differ") << "\n";
  PrintDiffs(diffs);
  std::cout << "stored        " << (stored ? "accept" : "reject") << "\n"
            << "recomputed    " << (recomputed ? "accept" : "reject") << "\n"
            << (agree ? "AGREE" : "DISAGREE") << "\n";
  return agree && recomputed ? kAccept : kReject;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Classical verification of quantum computation: protocol runner and analysis"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(CVQC_VERSION));
  Options o;

  auto params = [&](CLI::App* c) {
    c->add_option("--seed", o.seed, "RNG seed");
    c->add_option("--lambda", o.lambda, "security parameter");
    c->add_option("--n", o.n, "qubits per copy");
    c->add_option("--r", o.r, "copies per group");
    c->add_option("--k", o.k, "parallel repetitions");
    c->add_option("--funcfam", o.funcfam, "function family: mock | toylwe");
    c->add_option("--out", o.out, "output JSON path ('-' for stdout)");
  };
  auto instance = [&](CLI::App* c) { c->add_option("--instance", o.instance, "instance JSON"); };

  auto* gen = app.add_subcommand("gen-instance", "random ZX instance with thresholds around E0");
  gen->add_option("--n", o.n, "qubits");
  gen->add_option("--seed", o.seed, "RNG seed");
  gen->add_option("--gap", o.gap, "b - a");
  gen->add_option("--kind", o.kind, "yes (a = E0) or no (b = E0)");
  gen->add_option("--out", o.out, "output path");

  auto* ground = app.add_subcommand("ground-energy", "exact diagonalization of an instance");
  instance(ground);
  ground->add_flag("--state", o.with_state, "include the ground state in the JSON output");
  ground->add_option("--out", o.out, "output JSON path");

  auto* setup = app.add_subcommand("setup", "instance-independent verifier setup");
  params(setup);
  setup->add_flag("--ctq", o.ctq, "all-X-basis keys for the CTQ mode");

  auto* run = app.add_subcommand("run", "interactive protocol");
  params(run);
  instance(run);
  run->add_option("--setup", o.setup, "setup JSON (fresh setup from --seed if omitted)");
  run->add_option("--strategy", o.strategy, "prover strategy");

  auto* fsrun = app.add_subcommand("fs-run", "non-interactive (Fiat-Shamir) protocol");
  params(fsrun);
  instance(fsrun);
  fsrun->add_option("--setup", o.setup, "setup JSON");
  fsrun->add_option("--strategy", o.strategy, "prover strategy");

  for (const char* name : {"zk-run", "zk-simulate"}) {
    auto* zk = app.add_subcommand(name, std::string(name) == "zk-run" ? "zero-knowledge protocol"
                                                                      : "zero-knowledge simulator");
    params(zk);
    instance(zk);
    zk->add_option("--fhe", o.fhe, "FHE backend: transparent");
    zk->add_option("--nizk", o.nizk, "NIZK backend: toy");
    if (std::string(name) == "zk-run") {
      zk->add_flag("--fs", o.fs, "derive challenges from the random oracle");
      zk->add_option("--setup", o.setup, "write the ZK setup to this path");
    }
  }

  auto* ctq = app.add_subcommand("ctq", "classical test of quantumness mode");
  params(ctq);
  ctq->add_option("--setup", o.setup, "CTQ setup JSON");
  ctq->add_option("--strategy", o.strategy, "prover strategy");

  auto* est = app.add_subcommand("estimate", "Monte Carlo acceptance rate");
  params(est);
  instance(est);
  est->add_option("--strategy", o.strategy, "prover strategy");
  est->add_option("--trials", o.trials, "independent sessions (>= 100)");
  est->add_flag("--ctq", o.ctq, "CTQ mode");
  est->add_option("--at-most", o.at_most, "fail (exit 3) if rate > bound + 3 sigma");
  est->add_option("--at-least", o.at_least, "fail (exit 3) if rate < bound - 3 sigma");

  auto* curve = app.add_subcommand("soundness-curve", "max cheating rate per k vs 2^-k");
  params(curve);
  instance(curve);
  curve->add_option("--strategies", o.strategies, "strategies (default: all classical)");
  curve->add_option("--trials", o.trials, "sessions per (k, strategy)");
  curve->add_option("--k-min", o.k_min, "first k");
  curve->add_option("--k-max", o.k_max, "last k (<= 10)");
  curve->add_option("--tolerance", o.tolerance, "allowed excess over 2^-k");
  curve->add_flag("--ctq", o.ctq, "CTQ mode");

  auto* lemma = app.add_subcommand("lemma-check", "numeric bound checks");
  lemma->add_option("--check", o.check, "projector | hoeffding");
  lemma->add_option("--dim", o.dim, "projector dimension");
  lemma->add_option("--m", o.m, "number of projectors");
  lemma->add_option("--family", o.family, "random | orthogonal");
  lemma->add_option("--trials", o.trials, "instances or runs per grid point");
  lemma->add_option("--seed", o.seed, "RNG seed");
  lemma->add_option("--r-grid", o.grid_r, "copy counts for the hoeffding grid");
  lemma->add_option("--g-grid", o.grid_g, "gaps for the hoeffding grid");
  lemma->add_option("--out", o.out, "output JSON path");
  instance(lemma);

  auto* replay = app.add_subcommand("replay", "re-verify a stored transcript");
  instance(replay);
  replay->add_option("--transcript", o.transcript, "transcript JSON")->required();
  replay->add_option("--setup", o.setup, "setup JSON")->required();
  replay->add_option("--fhe", o.fhe, "FHE backend (ZK transcripts)");
  replay->add_option("--nizk", o.nizk, "NIZK backend (ZK transcripts)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    CLI::App* sub = app.get_subcommands().front();
    o.command = sub->get_name();
    if (o.command == "gen-instance") return GenInstance(o);
    if (o.command == "ground-energy") return GroundEnergy(o);
    if (o.command == "setup") return SetupCommand(o);
    if (o.command == "run") return Run(o, false);
    if (o.command == "ctq") return Run(o, true);
    if (o.command == "fs-run") return FsRun(o);
    if (o.command == "zk-run") return ZkRun(o, o.fs);
    if (o.command == "zk-simulate") return ZkSimulate(o);
    if (o.command == "estimate") return EstimateCommand(o);
    if (o.command == "soundness-curve") return SoundnessCurveCommand(o);
    if (o.command == "lemma-check") return LemmaCheck(o);
    if (o.command == "replay") return Replay(o);
  } catch (const cvqc::InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const cvqc::CapacityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
