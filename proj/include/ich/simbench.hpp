#pragma once

// Benchmark harness: Zipf-drawn instances, four schemes side by side
// (naive, greedy matching, scalar XOR coloring, vector XOR coloring),
// parameter sweeps, and deterministic CSV / plot-data emission.

#include <algorithm>
#include <cstdio>
#include <string>
#include <vector>

#include "ich/codec.hpp"
#include "ich/instance.hpp"
#include "ich/rational.hpp"
#include "ich/sigraph.hpp"
#include "ich/util.hpp"
#include "ich/vectorcolor.hpp"
#include "ich/xorcolor.hpp"

namespace ich {

// ---------------------------------------------------------------------------
// Greedy matching baseline: scan undirected edges in (min id, max id)
// lexicographic order, pair greedily, send one XOR per matched edge and one
// uncoded packet for everyone else.

inline XorCode greedy_matching_code(const UndirectedSIGraph& g) {
  std::vector<char> matched(g.n, 0);
  XorCode code;
  code.n_users = g.n;
  for (int v = 0; v < g.n; ++v) {
    if (matched[v]) continue;
    for (int u : g.adj[v]) {
      if (u <= v || matched[u]) continue;
      matched[v] = matched[u] = 1;
      code.transmissions.push_back({v, u});
      break;
    }
  }
  for (int v = 0; v < g.n; ++v)
    if (!matched[v]) code.transmissions.push_back({v});
  return code;
}

inline long long greedy_matching(const UndirectedSIGraph& g) {
  return (long long)greedy_matching_code(g).transmissions.size();
}

// ---------------------------------------------------------------------------

struct TrialConfig {
  int k = 2;
  int users_per_helper = 10;
  int library_size = 100;
  double zipf_s = 0.5;
  int cache_size = 10;
  int trials = 1;
  long long seed = 0;
  bool run_matching = true;
  bool run_xor = true;
  bool run_vector = true;
};

struct TrialResult {
  long long naive = 0;
  long long matching = -1;    // -1 when disabled
  long long xor_length = -1;  // -1 when disabled or over budget
  bool has_vector = false;
  Rational vector_rate = 0;  // combined rate, whole instance
  bool has_gain = false;
  Rational gain = 0;  // naive / vector_rate
};

// One Zipf draw, all enabled schemes, every emitted code verified and
// decode-simulated before its count is reported. Deterministic in
// (cfg, trial_index).
inline TrialResult run_trial(const TrialConfig& cfg, int trial_index) {
  if (cfg.trials < 1) throw error("run_trial: trials must be >= 1");
  uint64_t seed = (uint64_t)cfg.seed ^ (uint64_t)trial_index;
  CanonicalInstance canon =
      zipf_instance(cfg.library_size, cfg.zipf_s, cfg.k, cfg.users_per_helper,
                    cfg.cache_size, seed);
  DirectedSIGraph gd = build_side_info_graph(canon);
  UndirectedSIGraph gu = underlying_undirected(gd);
  uint64_t decode_seed = mix_seed({seed, 0xdecau});

  TrialResult res;
  res.naive = canon.n_users;

  if (cfg.run_matching) {
    XorCode code = greedy_matching_code(gu);
    if (!simulate_decode(code, gd, 2, decode_seed))
      throw error("run_trial: matching code failed verification");
    res.matching = (long long)code.transmissions.size();
  }
  if (cfg.run_xor) {
    try {
      ScalarCodeResult scalar = scalar_code_for_instance(canon);
      if (!simulate_decode(scalar.code, gd, 2, decode_seed))
        throw error("run_trial: scalar code failed verification");
      res.xor_length = scalar.length;
    } catch (const error&) {
      res.xor_length = -1;  // enumeration budget exceeded: column stays n/a
    }
  }
  if (cfg.run_vector) {
    try {
      VectorCodeResult vec = vector_code_for_instance(canon);
      if (!simulate_decode(vec.code, gd, 2, decode_seed))
        throw error("run_trial: vector code failed verification");
      res.has_vector = true;
      res.vector_rate = vec.combined_rate;
    } catch (const error&) {
      res.has_vector = false;
    }
  }

  if (res.has_vector && res.xor_length >= 0 && res.vector_rate > res.xor_length)
    throw error("run_trial: vector rate exceeds scalar length");
  if (res.xor_length >= 0 && res.matching >= 0 && res.xor_length > res.matching)
    throw error("run_trial: scalar length exceeds matching count");
  if (res.matching >= 0 && res.matching > res.naive)
    throw error("run_trial: matching count exceeds naive count");
  if (res.has_vector && res.matching >= 0 && res.xor_length < 0 &&
      res.vector_rate > res.matching)
    throw error("run_trial: vector rate exceeds matching count");

  if (res.has_vector && res.vector_rate > 0) {
    res.has_gain = true;
    res.gain = Rational(res.naive) / res.vector_rate;
  }
  return res;
}

// ---------------------------------------------------------------------------
// Sweeps: cross product of helper counts and cache sizes, per-trial rows
// plus one aggregated mean row per configuration.

struct SweepConfig {
  std::vector<int> ks;
  std::vector<int> cache_sizes;
  int users_per_helper = 10;
  int library_size = 100;
  double zipf_s = 0.5;
  int trials = 1;
  long long seed = 0;
  bool run_matching = true;
  bool run_xor = true;
  bool run_vector = true;
};

struct SweepRow {
  int k = 0;
  int n = 0;
  int library = 0;
  double zipf_s = 0;
  int cache = 0;
  std::string trial;  // trial index, or "mean"
  std::string naive, matching, xor_length, vector_num, vector_den, gain;
};

namespace detail {

inline std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

}  // namespace detail

inline std::vector<SweepRow> sweep(const SweepConfig& cfg) {
  std::vector<SweepRow> rows;
  for (int k : cfg.ks)
    for (int cache : cfg.cache_sizes) {
      TrialConfig tc;
      tc.k = k;
      tc.users_per_helper = cfg.users_per_helper;
      tc.library_size = cfg.library_size;
      tc.zipf_s = cfg.zipf_s;
      tc.cache_size = cache;
      tc.trials = cfg.trials;
      tc.seed = cfg.seed;
      tc.run_matching = cfg.run_matching;
      tc.run_xor = cfg.run_xor;
      tc.run_vector = cfg.run_vector;

      int n = k * cfg.users_per_helper;
      long long naive_sum = 0, matching_sum = 0, xor_sum = 0;
      int matching_cnt = 0, xor_cnt = 0, vector_cnt = 0, gain_cnt = 0;
      Rational vector_sum = 0;
      for (int t = 0; t < cfg.trials; ++t) {
        TrialResult tr = run_trial(tc, t);
        SweepRow row;
        row.k = k;
        row.n = n;
        row.library = cfg.library_size;
        row.zipf_s = cfg.zipf_s;
        row.cache = cache;
        row.trial = std::to_string(t);
        row.naive = std::to_string(tr.naive);
        row.matching = tr.matching >= 0 ? std::to_string(tr.matching) : "n/a";
        row.xor_length =
            tr.xor_length >= 0 ? std::to_string(tr.xor_length) : "n/a";
        if (tr.has_vector) {
          row.vector_num = num(tr.vector_rate).str();
          row.vector_den = den(tr.vector_rate).str();
        } else {
          row.vector_num = row.vector_den = "n/a";
        }
        row.gain = tr.has_gain ? decimal_string(tr.gain, 4) : "n/a";
        rows.push_back(std::move(row));

        naive_sum += tr.naive;
        if (tr.matching >= 0) matching_sum += tr.matching, ++matching_cnt;
        if (tr.xor_length >= 0) xor_sum += tr.xor_length, ++xor_cnt;
        if (tr.has_vector) vector_sum += tr.vector_rate, ++vector_cnt;
        if (tr.has_gain) ++gain_cnt;
      }

      SweepRow mean;
      mean.k = k;
      mean.n = n;
      mean.library = cfg.library_size;
      mean.zipf_s = cfg.zipf_s;
      mean.cache = cache;
      mean.trial = "mean";
      mean.naive = decimal_string(Rational(naive_sum) / cfg.trials, 4);
      mean.matching = matching_cnt == cfg.trials
                          ? decimal_string(Rational(matching_sum) / cfg.trials, 4)
                          : "n/a";
      mean.xor_length = xor_cnt == cfg.trials
                            ? decimal_string(Rational(xor_sum) / cfg.trials, 4)
                            : "n/a";
      if (vector_cnt == cfg.trials) {
        Rational vmean = vector_sum / cfg.trials;
        mean.vector_num = num(vmean).str();
        mean.vector_den = den(vmean).str();
        mean.gain = vmean > 0
                        ? decimal_string(Rational(naive_sum) / cfg.trials / vmean, 4)
                        : "n/a";
      } else {
        mean.vector_num = mean.vector_den = mean.gain = "n/a";
      }
      rows.push_back(std::move(mean));
    }
  return rows;
}

inline std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out =
      "k,n,library,zipf_s,cache,trial,naive,matching,xor,vector_num,vector_den,"
      "gain\n";
  for (const SweepRow& r : rows) {
    out += std::to_string(r.k) + "," + std::to_string(r.n) + "," +
           std::to_string(r.library) + "," + detail::format_double(r.zipf_s) +
           "," + std::to_string(r.cache) + "," + r.trial + "," + r.naive + "," +
           r.matching + "," + r.xor_length + "," + r.vector_num + "," +
           r.vector_den + "," + r.gain + "\n";
  }
  return out;
}

// Mean rows only, one line per configuration: ready for a plotting tool.
inline std::string sweep_plot_tsv(const std::vector<SweepRow>& rows) {
  std::string out = "k\tcache\tnaive\tmatching\txor\tvector\tgain\n";
  for (const SweepRow& r : rows) {
    if (r.trial != "mean") continue;
    std::string vec = "n/a";
    if (r.vector_num != "n/a")
      vec = decimal_string(Rational(BigInt(r.vector_num), BigInt(r.vector_den)), 4);
    out += std::to_string(r.k) + "\t" + std::to_string(r.cache) + "\t" + r.naive +
           "\t" + r.matching + "\t" + r.xor_length + "\t" + vec + "\t" + r.gain +
           "\n";
  }
  return out;
}

}  // namespace ich
