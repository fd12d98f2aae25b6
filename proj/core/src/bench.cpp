#include "dpdp/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

#include "dpdp/cost.hpp"
#include "dpdp/gap.hpp"
#include "dpdp/generate.hpp"
#include "dpdp/glws.hpp"
#include "dpdp/oracle.hpp"
#include "dpdp/parallel.hpp"
#include "dpdp/sequence.hpp"

namespace dpdp {

const char* BenchRecord::csv_header() {
  return "algo,n,m,k_out,rounds,wasted_states,threads,seed,cost_spec,time_ms";
}

std::string BenchRecord::csv_row() const {
  std::ostringstream os;
  os << algo << ',' << n << ',' << m << ',' << k_out << ',' << rounds << ','
     << wasted_states << ',' << threads << ',' << seed << ',' << cost_spec << ','
     << time_ms;
  return os.str();
}

namespace {

std::vector<Cost> to_positions(const InstanceFile& f) {
  if (f.kind != PayloadKind::Coordinates) {
    throw std::invalid_argument("run: coordinate instance required for this algorithm");
  }
  std::vector<Cost> xs(f.coords.size());
  for (std::size_t i = 0; i < xs.size(); ++i) xs[i] = static_cast<Cost>(std::llround(f.coords[i]));
  return xs;
}

std::vector<Cost> to_weights(const InstanceFile& f) {
  // OBST weights reuse the coordinate payload as a plain value vector
  if (f.kind != PayloadKind::Coordinates) {
    throw std::invalid_argument("run: coordinate instance required for obst");
  }
  std::vector<Cost> xs(f.coords.size());
  for (std::size_t i = 0; i < xs.size(); ++i) xs[i] = static_cast<Cost>(std::llround(f.coords[i]));
  return xs;
}

std::vector<Index> to_key_sequence(const InstanceFile& f) {
  std::vector<Index> keys;
  if (f.kind == PayloadKind::MatchListPairs) {
    keys.reserve(f.pairs.size());
    for (const auto& [i, j] : f.pairs) keys.push_back(static_cast<Index>(j));
  } else if (f.kind == PayloadKind::ByteSequence) {
    keys.reserve(f.bytes.size());
    for (auto b : f.bytes) keys.push_back(static_cast<Index>(b));
  } else {
    throw std::invalid_argument("run: lis needs a match-list or byte-sequence instance");
  }
  return keys;
}

MatchList to_match_list(const std::vector<InstanceFile>& inputs) {
  if (inputs.size() == 1 && inputs[0].kind == PayloadKind::MatchListPairs) {
    MatchList m;
    m.pairs.reserve(inputs[0].pairs.size());
    for (const auto& [i, j] : inputs[0].pairs) {
      m.pairs.push_back({static_cast<Index>(i), static_cast<Index>(j)});
    }
    return m;
  }
  if (inputs.size() == 2 && inputs[0].kind == PayloadKind::ByteSequence &&
      inputs[1].kind == PayloadKind::ByteSequence) {
    return build_match_list(inputs[0].bytes, inputs[1].bytes);
  }
  throw std::invalid_argument("run: lcs needs two byte sequences or one match list");
}

double time_median(int repeats, const std::function<void()>& fn) {
  fn();  // warm-up
  std::vector<double> times;
  times.reserve(static_cast<std::size_t>(std::max(repeats, 1)));
  for (int r = 0; r < std::max(repeats, 1); ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    times.push_back(
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count());
  }
  std::sort(times.begin(), times.end());
  return times[times.size() / 2];
}

const InstanceFile& one_input(const std::vector<InstanceFile>& inputs) {
  if (inputs.size() != 1) throw std::invalid_argument("run: exactly one instance file expected");
  return inputs[0];
}

}  // namespace

RunOutcome run_bench(const RunOptions& opt, const std::vector<InstanceFile>& inputs) {
  if (opt.threads > 0) set_num_workers(opt.threads);
  RunOutcome out;
  BenchRecord& rec = out.record;
  rec.algo = opt.algo;
  rec.threads = num_workers();
  rec.seed = opt.seed;
  rec.cost_spec = opt.cost;

  const std::string& a = opt.algo;
  if (a == "glws-seq" || a == "glws-par" || a == "brute-glws") {
    std::vector<Cost> pos = to_positions(one_input(inputs));
    const CostModel model = parse_cost_spec(opt.cost, pos);
    const Index n = model.size();
    rec.n = n;
    GlwsSolution sol;
    rec.time_ms = time_median(opt.repeats, [&] {
      if (a == "glws-seq") {
        sol = glws_seq(model, n, 0);
      } else if (a == "glws-par") {
        sol = glws_par(model, n, 0);
      } else {
        sol = oracle::brute_glws(model, n, 0);
      }
    });
    rec.k_out = sol.solution_size();
    rec.rounds = sol.stats.rounds;
    rec.wasted_states = sol.stats.wasted_states;
    if (opt.verify) {
      if (a == "glws-par") {
        const GlwsSolution ref = glws_seq(model, n, 0);
        out.verify = (sol.dp == ref.dp && sol.best == ref.best) ? "pass" : "fail";
      } else if (n <= 8192) {
        const GlwsSolution ref = oracle::brute_glws(model, n, 0);
        out.verify = (sol.dp == ref.dp && sol.best == ref.best) ? "pass" : "fail";
      } else {
        out.verify = "skipped";
      }
    }
  } else if (a == "lis" || a == "brute-lis") {
    std::vector<Index> keys = to_key_sequence(one_input(inputs));
    rec.n = static_cast<Index>(keys.size());
    if (a == "lis") {
      LisResult r;
      rec.time_ms = time_median(opt.repeats, [&] { r = lis<Index>(keys); });
      rec.k_out = r.k;
      rec.rounds = r.k;
      if (opt.verify) {
        out.verify = (r.k == oracle::patience_lis<Index>(keys)) ? "pass" : "fail";
      }
    } else {
      oracle::BruteLis r;
      rec.time_ms = time_median(opt.repeats, [&] { r = oracle::brute_lis<Index>(keys); });
      rec.k_out = r.k;
      if (opt.verify) out.verify = (r.k == oracle::patience_lis<Index>(keys)) ? "pass" : "fail";
    }
  } else if (a == "lcs" || a == "brute-lcs") {
    if (a == "brute-lcs") {
      if (inputs.size() != 2) throw std::invalid_argument("run: brute-lcs needs two byte sequences");
      rec.n = inputs[0].count();
      rec.m = inputs[1].count();
      Index k = 0;
      rec.time_ms = time_median(opt.repeats, [&] { k = oracle::brute_lcs(inputs[0].bytes, inputs[1].bytes); });
      rec.k_out = k;
    } else {
      const MatchList m = to_match_list(inputs);  // preprocessing, untimed
      rec.n = inputs[0].count();
      rec.m = inputs.size() == 2 ? inputs[1].count() : 0;
      SparseLcsResult r;
      rec.time_ms = time_median(opt.repeats, [&] { r = sparse_lcs(m); });
      rec.k_out = r.k;
      rec.rounds = r.k;
      if (opt.verify) {
        std::vector<Index> js;
        js.reserve(m.pairs.size());
        for (const auto& p : m.pairs) js.push_back(p.j);
        out.verify = (r.k == oracle::patience_lis<Index>(js)) ? "pass" : "fail";
      }
    }
  } else if (a == "gap" || a == "brute-gap") {
    if (inputs.size() != 2 || inputs[0].kind != PayloadKind::ByteSequence ||
        inputs[1].kind != PayloadKind::ByteSequence) {
      throw std::invalid_argument("run: gap needs two byte-sequence instances");
    }
    const Index n = inputs[0].count(), m = inputs[1].count();
    rec.n = n;
    rec.m = m;
    std::vector<Cost> pos1(static_cast<std::size_t>(n));
    std::vector<Cost> pos2(static_cast<std::size_t>(m));
    for (Index i = 0; i < n; ++i) pos1[static_cast<std::size_t>(i)] = i;
    for (Index j = 0; j < m; ++j) pos2[static_cast<std::size_t>(j)] = j;
    GapInstance inst = make_gap_instance(inputs[0].bytes, inputs[1].bytes,
                                         parse_cost_spec(opt.cost, std::move(pos1)),
                                         parse_cost_spec(opt.cost2, std::move(pos2)));
    if (a == "gap") {
      GapResult r;
      rec.time_ms = time_median(opt.repeats, [&] { r = gap_solve(inst); });
      rec.rounds = r.stats.rounds;
      rec.k_out = r.stats.rounds;
      rec.wasted_states = r.stats.wasted_states;
      if (opt.verify) {
        if ((n + 1) * (m + 1) * (n + m + 1) <= 100'000'000) {
          out.verify = (r.d == oracle::brute_gap(inst)) ? "pass" : "fail";
        } else {
          out.verify = "skipped";
        }
      }
    } else {
      std::vector<Cost> d;
      rec.time_ms = time_median(opt.repeats, [&] { d = oracle::brute_gap(inst); });
      rec.k_out = 0;
    }
  } else if (a == "kglws" || a == "brute-kglws") {
    std::vector<Cost> pos = to_positions(one_input(inputs));
    const CostModel model = parse_cost_spec(opt.cost, pos);
    const Index n = model.size();
    rec.n = n;
    rec.k_out = opt.k;
    if (a == "kglws") {
      KGlwsResult r;
      rec.time_ms = time_median(opt.repeats, [&] { r = k_glws(model, n, opt.k); });
      rec.rounds = r.rounds;
      if (opt.verify) {
        if (opt.k * n * n <= 500'000'000) {
          out.verify = (r.cost == oracle::brute_kglws(model, n, opt.k)) ? "pass" : "fail";
        } else {
          out.verify = "skipped";
        }
      }
    } else {
      Cost c = 0;
      rec.time_ms = time_median(opt.repeats, [&] { c = oracle::brute_kglws(model, n, opt.k); });
    }
  } else if (a == "obst" || a == "brute-obst") {
    std::vector<Cost> weights = to_weights(one_input(inputs));
    if (a == "obst") {
      ObstResult r;
      rec.time_ms = time_median(opt.repeats, [&] { r = obst(weights, opt.obst_weights, true); });
      rec.n = r.n;
      rec.k_out = r.n;
      rec.rounds = r.n;
      if (opt.verify) {
        const ObstResult seq = obst(weights, opt.obst_weights, false);
        out.verify = (r.d == seq.d && r.best == seq.best) ? "pass" : "fail";
      }
    } else {
      Cost c = 0;
      rec.time_ms = time_median(opt.repeats, [&] { c = oracle::brute_obst(weights, opt.obst_weights); });
      rec.n = static_cast<Index>(weights.size());
    }
  } else {
    throw std::invalid_argument("run: unknown algorithm '" + a + "'");
  }
  return out;
}

namespace {

struct SelfTestContext {
  std::filesystem::path out_dir;
  SelfTestReport report;

  bool fail(const std::string& message, const InstanceFile* instance = nullptr,
            const std::string& detail = {}) {
    report.ok = false;
    report.message = message;
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (instance != nullptr) {
      const auto path = out_dir / "selftest_counterexample.bin";
      write_instance(path, *instance);
      report.artifacts.push_back(path.string());
    }
    const auto txt = out_dir / "selftest_failure.txt";
    std::ofstream os(txt);
    os << message << "\n" << detail << "\n";
    report.artifacts.push_back(txt.string());
    return false;
  }
};

bool same_solution(const GlwsSolution& a, const GlwsSolution& b) {
  return a.dp == b.dp && a.best == b.best;
}

std::string dump_solution(const GlwsSolution& s) {
  std::ostringstream os;
  os << "D:";
  for (std::size_t i = 1; i < s.dp.size(); ++i) os << ' ' << s.dp[i];
  os << "  best:";
  for (std::size_t i = 1; i < s.best.size(); ++i) os << ' ' << s.best[i];
  return os.str();
}

CostModel selftest_model(const InstanceFile& coords, bool concave, Cost c, std::uint64_t seed) {
  CostModel base = concave
                       ? make_post_office_cost(std::vector<Cost>(coords.coords.begin(), coords.coords.end()),
                                               c, CostVariant::SqrtLength)
                       : make_post_office_cost(std::vector<Cost>(coords.coords.begin(), coords.coords.end()),
                                               c, CostVariant::SquaredLength);
  std::mt19937_64 rng(seed);
  std::vector<Cost> off(static_cast<std::size_t>(base.size()) + 1);
  for (auto& o : off) o = static_cast<Cost>(rng() % 64);
  return with_offsets(base, std::move(off));
}

bool selftest_glws(SelfTestContext& ctx) {
  // built-in smoke instance: quad+10, n = 6
  {
    std::vector<Cost> pos{1, 2, 3, 4, 5, 6};
    const CostModel model = make_post_office_cost(pos, 10, CostVariant::SquaredLength);
    const GlwsSolution brute = oracle::brute_glws(model, 6, 0);
    const std::vector<Cost> want{0, 11, 14, 19, 26, 33, 38};
    if (brute.dp != want) return ctx.fail("smoke glws: brute result drifted", nullptr, dump_solution(brute));
    const GlwsSolution par = glws_par(model, 6, 0);
    if (!same_solution(par, brute) || par.stats.rounds != 2) {
      return ctx.fail("smoke glws: parallel result mismatch", nullptr, dump_solution(par));
    }
  }
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    for (const bool concave : {false, true}) {
      const Index n = 1 + static_cast<Index>(seed % 32) * 4;
      const InstanceFile coords = gen_glws(n, "uniform", seed);
      const CostModel model = selftest_model(coords, concave, static_cast<Cost>(seed % 7) * 10, seed ^ 1);
      const GlwsSolution brute = oracle::brute_glws(model, n, 0);
      const GlwsSolution seq = glws_seq(model, n, 0);
      const GlwsSolution par = glws_par(model, n, 0);
      if (!same_solution(seq, brute)) {
        return ctx.fail("glws_seq disagrees with brute force", &coords,
                        "expected " + dump_solution(brute) + "\nactual   " + dump_solution(seq));
      }
      if (!same_solution(par, brute)) {
        return ctx.fail("glws_par disagrees with brute force", &coords,
                        "expected " + dump_solution(brute) + "\nactual   " + dump_solution(par));
      }
      const Index want_rounds = concave ? effective_depth_glws(par.best) : perfect_depth(par.best);
      if (par.stats.rounds != want_rounds) {
        return ctx.fail("glws_par round count violates the depth bound", &coords,
                        "rounds " + std::to_string(par.stats.rounds) + " want " + std::to_string(want_rounds));
      }
    }
  }
  return true;
}

bool selftest_sequence(SelfTestContext& ctx) {
  {
    const std::vector<std::uint8_t> a{'a', 'b', 'c', 'b'}, b{'b', 'c', 'a'};
    const MatchList m = build_match_list(a, b);
    const SparseLcsResult r = sparse_lcs(m);
    if (r.k != 2 || oracle::brute_lcs(a, b) != 2) {
      return ctx.fail("smoke lcs: abcb/bca should have LCS 2");
    }
  }
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Index n = 4 + static_cast<Index>(seed * 9 % 120);
    const InstanceFile perm = gen_lis(n, seed);
    std::vector<Index> keys;
    for (const auto& [i, j] : perm.pairs) keys.push_back(static_cast<Index>(j));
    const LisResult r = lis<Index>(keys);
    const oracle::BruteLis ref = oracle::brute_lis<Index>(keys);
    if (r.k != ref.k || r.round_of != ref.dp) {
      return ctx.fail("lis disagrees with the quadratic oracle", &perm);
    }
    const auto [fa, fb] = gen_lcs(n, n / 2 + 1, 4, seed);
    const SparseLcsResult lr = sparse_lcs(build_match_list(fa.bytes, fb.bytes));
    if (lr.k != oracle::brute_lcs(fa.bytes, fb.bytes)) {
      return ctx.fail("sparse_lcs disagrees with the dense oracle", &fa);
    }
  }
  return true;
}

bool selftest_gap(SelfTestContext& ctx) {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const Index n = 2 + static_cast<Index>(seed % 5) * 4;
    const Index m = 1 + static_cast<Index>(seed % 4) * 4;
    const auto [fa, fb] = gen_lcs(n, m, 3, seed);
    std::vector<Cost> p1, p2;
    for (Index i = 0; i < n; ++i) p1.push_back(i);
    for (Index j = 0; j < m; ++j) p2.push_back(j);
    const bool concave = seed % 2 == 1;
    const auto variant = concave ? CostVariant::SqrtLength : CostVariant::SquaredLength;
    GapInstance inst = make_gap_instance(fa.bytes, fb.bytes,
                                         make_post_office_cost(p1, 3, variant),
                                         make_post_office_cost(p2, 2, variant));
    const GapResult r = gap_solve(inst);
    if (r.d != oracle::brute_gap(inst)) {
      return ctx.fail("gap_solve disagrees with the triple-loop oracle", &fa);
    }
    if (r.stats.rounds != gap_effective_depth(inst, r)) {
      return ctx.fail("gap_solve round count violates the effective-depth bound", &fa);
    }
  }
  return true;
}

bool selftest_extras(SelfTestContext& ctx) {
  {
    std::vector<Cost> pos{1, 2, 3, 4};
    const CostModel model = make_post_office_cost(pos, 0, CostVariant::SquaredLength);
    const KGlwsResult r = k_glws(model, 4, 2);
    if (r.cost != 8 || r.cost != oracle::brute_kglws(model, 4, 2)) {
      return ctx.fail("smoke kglws: quad n=4 k=2 should cost 8");
    }
  }
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Index n = 2 + static_cast<Index>(seed % 6) * 5;
    const InstanceFile coords = gen_glws(n, "uniform", seed);
    const CostModel model = selftest_model(coords, false, 5, seed);
    const Index k = 1 + static_cast<Index>(seed % static_cast<std::uint64_t>(n));
    const KGlwsResult r = k_glws(model, n, k);
    if (r.cost != oracle::brute_kglws(model, n, k) || r.rounds != k) {
      return ctx.fail("k_glws disagrees with the brute oracle", &coords);
    }
    std::mt19937_64 rng(seed);
    std::vector<Cost> weights(static_cast<std::size_t>(n));
    for (auto& w : weights) w = static_cast<Cost>(rng() % 50);
    const ObstResult par = obst(weights, ObstWeights::Frequencies, true);
    const ObstResult s = obst(weights, ObstWeights::Frequencies, false);
    if (par.d != s.d || par.best != s.best ||
        par.cost != oracle::brute_obst(weights, ObstWeights::Frequencies)) {
      return ctx.fail("obst disagrees with the cubic oracle", &coords);
    }
  }
  return true;
}

}  // namespace

SelfTestReport selftest(const std::filesystem::path& out_dir) {
  SelfTestContext ctx{out_dir, {}};
  selftest_glws(ctx) && selftest_sequence(ctx) && selftest_gap(ctx) && selftest_extras(ctx);
  return ctx.report;
}

}  // namespace dpdp
