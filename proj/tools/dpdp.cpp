// Benchmark and verification CLI for the parallel DP library.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "dpdp/bench.hpp"
#include "dpdp/cost.hpp"
#include "dpdp/generate.hpp"
#include "dpdp/glws.hpp"
#include "dpdp/instance_io.hpp"
#include "dpdp/parallel.hpp"

namespace {

int cmd_gen(const std::string& problem, dpdp::Index n, dpdp::Index m, int alphabet,
            const std::string& distribution, std::uint64_t seed, dpdp::Index j_range,
            const std::string& out) {
  using dpdp::InstanceFile;
  if (problem == "glws") {
    dpdp::write_instance(out, dpdp::gen_glws(n, distribution, seed));
  } else if (problem == "seq") {
    dpdp::write_instance(out, dpdp::gen_sequence(n, alphabet, seed));
  } else if (problem == "lcs") {
    const auto [a, b] = dpdp::gen_lcs(n, m > 0 ? m : n, alphabet, seed);
    dpdp::write_instance(out + ".a", a);
    dpdp::write_instance(out + ".b", b);
  } else if (problem == "lis") {
    dpdp::write_instance(out, dpdp::gen_lis(n, seed));
  } else if (problem == "matchlist") {
    dpdp::write_instance(out, dpdp::gen_match_list(n, j_range, seed));
  } else {
    throw CLI::ValidationError("--problem", "unknown problem '" + problem + "'");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dpdp: parallel dynamic programming benchmark harness"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate a seeded instance file");
  std::string gen_problem = "glws", gen_dist = "uniform", gen_out = "instance.bin";
  dpdp::Index gen_n = 1000, gen_m = 0, gen_jrange = 1000;
  int gen_alphabet = 4;
  std::uint64_t gen_seed = 1;
  gen->add_option("--problem", gen_problem, "glws | seq | lcs | lis | matchlist");
  gen->add_option("--n", gen_n, "primary size");
  gen->add_option("--m", gen_m, "secondary size (lcs)");
  gen->add_option("--alphabet", gen_alphabet, "alphabet size for byte sequences");
  gen->add_option("--distribution", gen_dist, "coordinate distribution (uniform)");
  gen->add_option("--seed", gen_seed, "RNG seed");
  gen->add_option("--j-range", gen_jrange, "j range for matchlist generation");
  gen->add_option("-o,--out", gen_out, "output path (lcs writes <out>.a and <out>.b)");

  // run
  auto* run = app.add_subcommand("run", "run an algorithm over instance files");
  dpdp::RunOptions opt;
  std::vector<std::string> run_inputs;
  std::string run_out;
  std::string obst_weights = "freq";
  bool no_header = false;
  run->add_option("--algo", opt.algo,
                  "glws-seq | glws-par | lis | lcs | gap | kglws | obst | brute-*")
      ->required();
  run->add_option("--input,-i", run_inputs, "instance file(s)")->required();
  run->add_option("--cost", opt.cost, "cost spec, e.g. quad:C=10, median:C=5, sqrt:C=0,K=1048576");
  run->add_option("--cost1", opt.cost, "alias of --cost (gap's w1)");
  run->add_option("--cost2", opt.cost2, "gap's w2 cost spec");
  run->add_option("--threads", opt.threads, "fork-join pool size (0 = hardware)");
  run->add_option("--repeats", opt.repeats, "timed repetitions; median reported");
  run->add_option("--seed", opt.seed, "seed echoed into the CSV record");
  run->add_option("--k", opt.k, "cluster count for kglws");
  run->add_option("--obst-weights", obst_weights, "freq | leafgap");
  run->add_flag("--verify", opt.verify, "cross-check against the sequential counterpart");
  run->add_flag("--no-header", no_header, "omit the CSV header row");
  run->add_option("-o,--out", run_out, "CSV output path (default stdout)");

  // selftest
  auto* selftest = app.add_subcommand("selftest", "reduced-size oracle-equivalence suite");
  std::string selftest_dir = ".";
  selftest->add_option("--out-dir", selftest_dir, "directory for counterexample artifacts");

  // depth
  auto* depth = app.add_subcommand("depth", "print the depth report of a GLWS instance");
  std::string depth_input, depth_cost = "quad:C=10";
  depth->add_option("--input,-i", depth_input, "coordinate instance file")->required();
  depth->add_option("--cost", depth_cost, "cost spec");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      return cmd_gen(gen_problem, gen_n, gen_m, gen_alphabet, gen_dist, gen_seed, gen_jrange,
                     gen_out);
    }
    if (run->parsed()) {
      opt.obst_weights = obst_weights == "leafgap" ? dpdp::ObstWeights::LeafGap
                                                   : dpdp::ObstWeights::Frequencies;
      std::vector<dpdp::InstanceFile> inputs;
      inputs.reserve(run_inputs.size());
      for (const auto& path : run_inputs) inputs.push_back(dpdp::read_instance(path));
      const dpdp::RunOutcome outcome = dpdp::run_bench(opt, inputs);
      std::ostream* os = &std::cout;
      std::ofstream file;
      if (!run_out.empty()) {
        file.open(run_out, std::ios::trunc);
        if (!file) throw std::runtime_error("cannot open " + run_out);
        os = &file;
      }
      if (!no_header) *os << dpdp::BenchRecord::csv_header() << '\n';
      *os << outcome.record.csv_row() << '\n';
      if (!outcome.verify.empty()) {
        std::cerr << "verify: " << outcome.verify << '\n';
        if (outcome.verify == "fail") return 2;
      }
      return 0;
    }
    if (selftest->parsed()) {
      const dpdp::SelfTestReport report = dpdp::selftest(selftest_dir);
      if (report.ok) {
        std::cout << "selftest: all checks passed\n";
        return 0;
      }
      std::cerr << "selftest: FAILED: " << report.message << '\n';
      for (const auto& a : report.artifacts) std::cerr << "  wrote " << a << '\n';
      return 1;
    }
    if (depth->parsed()) {
      const dpdp::InstanceFile f = dpdp::read_instance(depth_input);
      std::vector<dpdp::Cost> pos(f.coords.size());
      for (std::size_t i = 0; i < pos.size(); ++i) {
        pos[i] = static_cast<dpdp::Cost>(std::llround(f.coords[i]));
      }
      const dpdp::CostModel model = dpdp::parse_cost_spec(depth_cost, std::move(pos));
      const dpdp::GlwsSolution sol = dpdp::glws_seq(model, model.size(), 0);
      const dpdp::DepthReport report = dpdp::depth_report(sol.best);
      std::cout << "n " << model.size() << "\nsolution_size " << sol.solution_size()
                << "\nperfect_depth " << report.perfect_depth << "\neffective_depth "
                << report.effective_depth << '\n';
      return 0;
    }
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return 1;
  }
  return 0;
}
