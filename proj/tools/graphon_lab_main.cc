// Copyright 2026 The Graphon Lab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// graphon-lab: command-line front end for the block graphon laboratory.

#include <atomic>
#include <csignal>
#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "graphon/align.hpp"
#include "graphon/error.hpp"
#include "graphon/experiment.hpp"
#include "graphon/info.hpp"
#include "graphon/matrix_io.hpp"
#include "graphon/packing.hpp"
#include "graphon/rates.hpp"
#include "graphon/risk.hpp"
#include "graphon/sampler.hpp"
#include "json.hpp"

namespace {

using graphon::Error;
using graphon::ErrorCode;
using nlohmann::json;

constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

std::atomic<bool> g_interrupted{false};

extern "C" void on_sigint(int) { g_interrupted.store(true); }

struct Globals {
  uint64_t seed = 0;
  int threads = 1;
  std::string out_dir = ".";
};

void print_json(const json& j) { std::cout << j.dump() << "\n"; }

graphon::BinarySymMatrix to_binary(const graphon::BlockMatrix& m) {
  std::vector<std::vector<int>> rows(m.k(), std::vector<int>(m.k()));
  for (int i = 0; i < m.k(); ++i)
    for (int j = 0; j < m.k(); ++j) {
      const double v = m(i, j);
      if (v != 0.0 && v != 1.0) throw Error(ErrorCode::kOutOfRange, "hamming metric needs 0/1 matrices");
      rows[i][j] = static_cast<int>(v);
    }
  return graphon::BinarySymMatrix::from_rows(rows);
}

json align_json(const graphon::AlignResult& r) {
  return {{"distance", r.distance},
          {"row_perm", r.row_perm.one_based()},
          {"col_perm", r.col_perm.one_based()},
          {"exact", r.exact}};
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNumericalBreakdown:
    case ErrorCode::kInfiniteDivergence:
    case ErrorCode::kExhaustedAttempts:
    case ErrorCode::kDegenerateParameters:
      return kExitNumerical;
    default:
      return kExitConfig;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Block graphon laboratory: alignment metrics, hard instances, KL/Fano bounds, "
               "and minimax risk experiments."};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--seed", g.seed, "Base RNG seed")->capture_default_str();
  app.add_option("--threads", g.threads, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--out-dir", g.out_dir, "Output directory for experiment files");
  app.fallthrough();

  // sample
  auto* sample = app.add_subcommand("sample", "Draw a W-random graph from a block matrix");
  std::string sample_matrix, sample_out, sample_path = "auto";
  int sample_n = 0;
  bool keep_latents = false;
  sample->add_option("--matrix", sample_matrix, "Block matrix file (CSV or JSON)")->required();
  sample->add_option("--n", sample_n, "Number of nodes")->required()->check(CLI::PositiveNumber);
  sample->add_flag("--keep-latents", keep_latents, "Write the labels sidecar");
  sample->add_option("--out", sample_out, "Graph file (stdout if omitted)");
  sample->add_option("--path", sample_path, "Sampling path")
      ->check(CLI::IsMember({"auto", "dense", "sparse"}));

  // dist
  auto* dist = app.add_subcommand("dist", "Alignment distance between two matrices");
  std::string dist_a, dist_b, metric = "hathat2";
  bool use_heuristic = false;
  bool use_exact = false;
  int dist_restarts = 20, dist_m = 2;
  dist->add_option("a", dist_a, "First matrix file")->required();
  dist->add_option("b", dist_b, "Second matrix file")->required();
  dist->add_option("--metric", metric, "hat2 | hathat2 | hamming | blowup")
      ->check(CLI::IsMember({"hat2", "hathat2", "hamming", "blowup"}));
  auto* exact_flag = dist->add_flag("--exact", use_exact, "Exhaustive search (default)");
  dist->add_flag("--heuristic", use_heuristic, "Heuristic search")->excludes(exact_flag);
  dist->add_option("--restarts", dist_restarts, "Heuristic restarts")->check(CLI::PositiveNumber);
  dist->add_option("--m", dist_m, "Blow-up factor for --metric blowup")->check(CLI::PositiveNumber);

  // pack
  auto* pack = app.add_subcommand("pack", "Sample a certified far-apart binary matrix family");
  int pack_k = 0, pack_count = 0, pack_target = -1, pack_attempts = 1000;
  pack->add_option("--k", pack_k, "Matrix size")->required()->check(CLI::PositiveNumber);
  pack->add_option("--count", pack_count, "Members wanted")->required();
  pack->add_option("--target", pack_target, "Minimum permuted Hamming distance (default k^2/8)");
  pack->add_option("--max-attempts", pack_attempts, "Draw budget");

  // kl
  auto* kl = app.add_subcommand("kl", "KL divergence between G_n(W) and G_n(W')");
  std::string kl_a, kl_b;
  int kl_n = 0;
  bool kl_bound = false, kl_exact = false, kl_lenient = false;
  kl->add_option("w", kl_a, "First matrix file")->required();
  kl->add_option("wp", kl_b, "Second matrix file")->required();
  kl->add_option("--n", kl_n, "Graph size")->required()->check(CLI::PositiveNumber);
  auto* kl_exact_flag = kl->add_flag("--exact", kl_exact, "Exact enumeration (default)");
  kl->add_flag("--bound", kl_bound, "8 n^2 ||W - W'||^2 bound")->excludes(kl_exact_flag);
  kl->add_flag("--lenient", kl_lenient, "Report infinite divergence instead of failing");

  // fano
  auto* fano = app.add_subcommand("fano", "Fano lower bound on the error probability");
  graphon::FanoInput fano_in;
  fano->add_option("--kl", fano_in.kl_diameter, "KL diameter (nats)")->required();
  fano->add_option("--M", fano_in.packing_count, "Packing number")->required();
  fano->add_option("--epsilon", fano_in.epsilon, "Packing radius")->required();

  // rates
  auto* rates = app.add_subcommand("rates", "Unit-constant minimax rate curves");
  graphon::RateQuery rq;
  rates->add_option("--n", rq.n)->required();
  rates->add_option("--k", rq.k)->required();
  rates->add_option("--rho", rq.rho)->required();

  // contiguity
  auto* contig = app.add_subcommand("contiguity", "Planted partition vs Erdos-Renyi contiguity check");
  int cg_n = 0, cg_k = 0;
  double cg_rho = 0.0;
  contig->add_option("--n", cg_n)->required();
  contig->add_option("--k", cg_k)->required();
  contig->add_option("--rho", cg_rho)->required();

  // risk
  auto* risk = app.add_subcommand("risk", "Monte-Carlo risk of one estimator against a truth");
  std::string risk_estimator = "trivial", risk_truth;
  int risk_n = 0, risk_trials = 10, risk_kfit = 0, risk_restarts = 5, risk_m = 1;
  risk->add_option("--estimator", risk_estimator, "trivial | density | blocklsq | oracle")
      ->check(CLI::IsMember({"trivial", "density", "blocklsq", "oracle"}));
  risk->add_option("--truth", risk_truth, "Truth matrix file")->required();
  risk->add_option("--n", risk_n)->required()->check(CLI::PositiveNumber);
  risk->add_option("--trials", risk_trials)->check(CLI::PositiveNumber);
  risk->add_option("--k-fit", risk_kfit, "Blocks for blocklsq (default: truth k)");
  risk->add_option("--restarts", risk_restarts)->check(CLI::PositiveNumber);
  risk->add_option("--blowup-m", risk_m)->check(CLI::PositiveNumber);

  // experiment
  auto* experiment = app.add_subcommand("experiment", "Run a configured risk sweep");
  std::string config_path;
  experiment->add_option("--config", config_path, "Experiment JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  const graphon::RngSeed seed{g.seed, 0};
  graphon::ExactOptions exact_opts;
  exact_opts.threads = g.threads;

  try {
    if (*sample) {
      const auto w = graphon::load_block_matrix(sample_matrix);
      const auto path = sample_path == "dense"    ? graphon::SamplingPath::kDense
                        : sample_path == "sparse" ? graphon::SamplingPath::kSparse
                                                  : graphon::SamplingPath::kAuto;
      const auto graph = graphon::sample_graph(w, sample_n, seed, keep_latents, path);
      const std::string text = graphon::graph_to_text(graph);
      if (sample_out.empty()) {
        std::cout << text;
        if (keep_latents) print_json(graphon::graph_sidecar(graph, seed));
      } else {
        graphon::write_file(sample_out, text);
        if (keep_latents)
          graphon::write_file(sample_out + ".json", graphon::graph_sidecar(graph, seed).dump(2) + "\n");
      }
    } else if (*dist) {
      const auto a = graphon::load_block_matrix(dist_a);
      const auto b = graphon::load_block_matrix(dist_b);
      if (metric == "hamming") {
        if (use_heuristic) throw Error(ErrorCode::kInvalidArgument, "hamming is exact only");
        const auto ba = to_binary(a);
        const auto bb = to_binary(b);
        const auto r = graphon::delta_hathat2_exact(ba.to_matrix(), bb.to_matrix(), exact_opts);
        const int ham = graphon::permuted_hamming_min(ba, bb, exact_opts);
        print_json({{"distance", ham},
                    {"row_perm", r.row_perm.one_based()},
                    {"col_perm", r.col_perm.one_based()},
                    {"exact", true}});
      } else if (metric == "blowup") {
        print_json(align_json(graphon::delta2_upper_via_blowup(a, b, dist_m, dist_restarts, seed, exact_opts)));
      } else if (metric == "hat2") {
        print_json(align_json(use_heuristic
                                  ? graphon::delta_hat2_heuristic(a.entries(), b.entries(), dist_restarts, seed)
                                  : graphon::delta_hat2_exact(a, b, exact_opts)));
      } else {
        print_json(align_json(use_heuristic ? graphon::delta_hathat2_heuristic(a, b, dist_restarts, seed)
                                            : graphon::delta_hathat2_exact(a, b, exact_opts)));
      }
    } else if (*pack) {
      const int target = pack_target >= 0 ? pack_target : graphon::default_packing_target(pack_k);
      const auto s = graphon::sample_packing_set(pack_k, pack_count, target, pack_attempts, seed, exact_opts);
      print_json(graphon::packing_to_json(s));
    } else if (*kl) {
      const auto w = graphon::load_block_matrix(kl_a);
      const auto wp = graphon::load_block_matrix(kl_b);
      if (kl_bound) {
        print_json({{"kl", graphon::kl_upper_bound(w, wp, kl_n)}, {"method", "bound"}, {"n", kl_n}});
      } else {
        const auto mode = kl_lenient ? graphon::DivergenceMode::kLenient : graphon::DivergenceMode::kStrict;
        const double v = graphon::exact_kl(w, wp, kl_n, mode, g.threads);
        json value = std::isinf(v) ? json("inf") : json(v);
        print_json({{"kl", value}, {"method", "exact"}, {"n", kl_n}});
      }
    } else if (*fano) {
      print_json({{"bound", graphon::fano_bound(fano_in)},
                  {"kl_diameter", fano_in.kl_diameter},
                  {"packing_count", fano_in.packing_count},
                  {"epsilon", fano_in.epsilon}});
    } else if (*rates) {
      const auto lo = graphon::lower_rate(rq);
      print_json({{"n", rq.n},
                  {"k", rq.k},
                  {"rho", rq.rho},
                  {"lower",
                   {{"total", lo.total},
                    {"sparse_floor", lo.sparse_floor},
                    {"klopp", lo.klopp},
                    {"this_paper", lo.hard_instance},
                    {"neeman", lo.neeman}}},
                  {"upper", graphon::upper_rate(rq)},
                  {"gap_factor", graphon::rate_gap_factor(rq)}});
    } else if (*contig) {
      const auto r = graphon::contiguity_report(cg_n, cg_k, cg_rho);
      print_json({{"n", r.n}, {"k", r.k}, {"rho", r.rho}, {"epsilon", r.epsilon}, {"q", r.q},
                  {"p", r.p}, {"d", r.d}, {"lambda", r.lambda}, {"lhs", r.lhs}, {"rhs", r.rhs},
                  {"condition_holds", r.condition_holds}, {"separation", r.separation}});
    } else if (*risk) {
      const auto truth = graphon::load_block_matrix(risk_truth);
      graphon::EstimatorSpec spec;
      spec.kind = graphon::parse_estimator(risk_estimator);
      spec.k_fit = risk_kfit > 0 ? risk_kfit : truth.k();
      spec.restarts = risk_restarts;
      graphon::RiskOptions opts;
      opts.blowup_m = risk_m;
      opts.threads = g.threads;
      opts.exact = exact_opts;
      const auto result = graphon::empirical_risk(spec, truth, risk_n, risk_trials, seed, opts);
      std::cout << graphon::risk_csv_header()
                << graphon::risk_csv_row(graphon::make_risk_record(spec, risk_n, truth, truth.rho(),
                                                                   risk_trials, result, g.seed));
    } else if (*experiment) {
      const std::filesystem::path cfg_path(config_path);
      json raw;
      try {
        raw = json::parse(graphon::read_file(cfg_path));
      } catch (const json::exception& e) {
        throw Error(ErrorCode::kConfigInvalid, e.what());
      }
      auto config = graphon::ExperimentConfig::from_json(raw, cfg_path.parent_path());
      if (app.get_option("--threads")->count() > 0) config.threads = g.threads;
      std::signal(SIGINT, on_sigint);
      const auto summary =
          graphon::run_experiment(config, g.out_dir, [] { return g_interrupted.load(); });
      print_json({{"rows", summary.rows},
                  {"complete", summary.complete},
                  {"config_hash", summary.config_hash},
                  {"csv", summary.csv_path.string()},
                  {"manifest", summary.manifest_path.string()}});
      if (!summary.complete) return kExitNumerical;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
  return 0;
}
