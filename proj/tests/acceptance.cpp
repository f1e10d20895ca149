// End-to-end acceptance suite. Each criterion prints exactly one line:
//   criterion NN: PASS|FAIL  <what was checked> (<measured detail>)
// The process exit code is the number of failed criteria. Numeric windows
// and time limits are pinned as constants next to the checks that use them.

#include "ich/ich.hpp"

#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace ich;
using Clock = std::chrono::steady_clock;

namespace {

double secs(Clock::time_point a, Clock::time_point b) {
  return std::chrono::duration<double>(b - a).count();
}

struct Reporter {
  std::vector<std::string> lines;
  int failures = 0;

  void result(int idx, bool ok, const std::string& what,
              const std::string& detail) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "criterion %2d: %s  ", idx,
                  ok ? "PASS" : "FAIL");
    lines.push_back(std::string(buf) + what + " (" + detail + ")");
    if (!ok) ++failures;
    std::cerr << lines.back() << "\n";  // progress while the suite runs
  }
};

CanonicalInstance make_canonical(
    int n, std::vector<std::pair<std::vector<int>, std::vector<int>>> hs,
    const char* src) {
  HelperNetwork net;
  net.n_users = n;
  for (auto& [cache, nbhd] : hs) net.helpers.push_back(Helper{cache, nbhd});
  net.meta.source = src;
  net.normalize();
  return union_expansion(net);
}

CanonicalInstance seven_user_network() {
  return make_canonical(7, {{{0, 1, 2, 3}, {4, 5}}, {{4, 5, 6}, {1, 2}}},
                        "seven-user-two-helper");
}

CanonicalInstance pentagon_network() {
  return make_canonical(5,
                        {{{1, 3, 4}, {0, 2}},
                         {{0, 2}, {1}},
                         {{2, 4}, {3}},
                         {{0, 3}, {4}}},
                        "pentagon-witness");
}

// Random canonical instance: each user covered with probability cover_p by a
// uniformly chosen helper; caches are random subsets excluding the helper's
// own neighborhood; redraws until the expansion keeps exactly k helpers.
CanonicalInstance random_canonical(std::mt19937_64& rng, int k, int n,
                                   double cache_p, double cover_p) {
  for (int attempt = 0; attempt < 200; ++attempt) {
    HelperNetwork net;
    net.n_users = n;
    net.helpers.assign(k, {});
    std::vector<int> owner(n, -1);
    for (int u = 0; u < n; ++u) {
      if (std::uniform_real_distribution<>(0, 1)(rng) > cover_p) continue;
      owner[u] = (int)(rng() % k);
      net.helpers[owner[u]].neighborhood.push_back(u);
    }
    for (int j = 0; j < k; ++j)
      for (int u = 0; u < n; ++u)
        if (owner[u] != j &&
            std::uniform_real_distribution<>(0, 1)(rng) < cache_p)
          net.helpers[j].cache.push_back(u);
    net.normalize();
    bool live = true;
    for (const Helper& h : net.helpers)
      if (h.neighborhood.empty()) live = false;
    if (!live) continue;
    CanonicalInstance canon = union_expansion(net);
    if (canon.k() != k) continue;
    canon.meta.source = "random";
    return canon;
  }
  throw error("random_canonical: no valid draw");
}

// Two helpers with disjoint caches covering every packet: |C1| + |C2| = n.
CanonicalInstance random_two_helper_covering(std::mt19937_64& rng, int n) {
  for (int attempt = 0; attempt < 200; ++attempt) {
    std::vector<int> s1, s2, c1, c2;
    for (int u = 0; u < n; ++u) {
      switch (rng() % 3) {
        case 0: s1.push_back(u); c2.push_back(u); break;
        case 1: s2.push_back(u); c1.push_back(u); break;
        default: (rng() % 2 ? c1 : c2).push_back(u); break;
      }
    }
    if (s1.empty() || s2.empty() || c1.empty() || c2.empty()) continue;
    CanonicalInstance canon = make_canonical(n, {{c1, s1}, {c2, s2}}, "random-k2");
    if (canon.k() != 2) continue;
    return canon;
  }
  throw error("random_two_helper_covering: no valid draw");
}

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.1f", v);
  return buf;
}

// ---------------------------------------------------------------------------

void criterion_1(Reporter& rep) {
  constexpr double kTimeLimit = 60.0;
  auto t0 = Clock::now();
  std::mt19937_64 rng(4242);
  int agree = 0, mr_checked = 0, mr_agree = 0;
  for (int it = 0; it < 500; ++it) {
    int n = 4 + (int)(rng() % 27);
    CanonicalInstance canon = random_two_helper_covering(rng, n);
    TwoHelperResult th = two_helper_optimum(canon);
    long long c1 = (long long)canon.helpers[0].cache.size();
    long long c2 = (long long)canon.helpers[1].cache.size();
    long long a = (long long)intersect_sorted(canon.helpers[0].neighborhood,
                                              canon.helpers[1].cache).size();
    long long b = (long long)intersect_sorted(canon.helpers[1].neighborhood,
                                              canon.helpers[0].cache).size();
    long long formula = c1 + c2 - std::min(a, b);
    DirectedSIGraph gd = build_side_info_graph(canon);
    long long edges = 0;
    for (int v = 0; v < gd.n; ++v) edges += (long long)gd.out[v].size();
    bool small = n <= 15;
    long long bc = -1;
    if (small) {
      Decomposition dec = decompose(gd);
      bc = brute_clique_cover(dec.g2) + (long long)dec.out_vertices.size();
    }
    if (edges <= 22) {
      ++mr_checked;
      if (minrank_bruteforce(gd).value == th.length) ++mr_agree;
    }
    if (th.length == formula && (!small || th.length == bc)) ++agree;
  }
  double el = secs(t0, Clock::now());
  bool ok = agree == 500 && mr_checked == 129 && mr_agree == mr_checked &&
            el < kTimeLimit;
  std::ostringstream d;
  d << "formula/brute agree " << agree << "/500, rank oracle " << mr_agree
    << "/" << mr_checked << ", " << fmt_double(el) << "s < 60s";
  rep.result(1, ok, "two-helper closed form matches search, brute force, and rank",
             d.str());
}

void criterion_2(Reporter& rep) {
  CanonicalInstance canon = seven_user_network();
  DirectedSIGraph gd = build_side_info_graph(canon);
  TwoHelperResult th = two_helper_optimum(canon);
  std::vector<std::vector<int>> rows = th.code.transmissions;
  std::sort(rows.begin(), rows.end());
  std::vector<std::vector<int>> expect = {{0}, {1, 4}, {2, 5}, {3}, {6}};
  bool cross_pairing = true;
  std::vector<int> partner(7, -1);
  for (const auto& row : th.code.transmissions)
    if (row.size() == 2) partner[row[0]] = row[1], partner[row[1]] = row[0];
  // Users 1 and 2 must pair with distinct members of {4, 5}.
  cross_pairing = partner[1] >= 4 && partner[2] >= 4 && partner[1] != partner[2];
  bool ok = th.length == 5 && rows == expect && cross_pairing &&
            verify_xor_code(th.code, gd) && simulate_decode(th.code, gd, 100, 1);
  std::ostringstream d;
  d << "length " << th.length << ", pairs {1," << partner[1] << "} {2,"
    << partner[2] << "}, decoded";
  rep.result(2, ok, "seven-user network sends five coded transmissions", d.str());
}

struct K3CorpusStats {
  int agree = 0, holes = 0, imperfect = 0, nontrivial = 0;
  int ip_agree = 0, budget_ok = 0;
  double elapsed = 0;
};

K3CorpusStats run_k3_corpus() {
  K3CorpusStats st;
  auto t0 = Clock::now();
  std::mt19937_64 rng(12345);
  CliqueSystem cs = clique_system(3);
  GraverBasis gb = graver_basis(cs);
  for (int it = 0; it < 300; ++it) {
    CanonicalInstance canon =
        random_canonical(rng, 3, 6 + (int)(rng() % 10), 0.35, 0.9);
    DirectedSIGraph gd = build_side_info_graph(canon);
    Decomposition dec = decompose(gd);
    if (dec.g2.n == 0) { --it; continue; }
    Categorization cat = categorize(dec);
    MultiColoring mc = greedy_k3(cat.cg);
    long long f = k3_count_formula(cat.cg);
    int bc = brute_clique_cover(dec.g2);
    std::vector<long long> w(cat.cg.weight.begin(), cat.cg.weight.end());
    IntProgResult ip = optintprog(cs, w, gb);
    BnbResult bb = bnb_optimum(cat.cg);
    if (valid_multicoloring(mc, cat.cg) && mc.total == f && f == bc &&
        bc == ip.optimum && ip.optimum == bb.optimum)
      ++st.agree;
    if (ip.optimum == bb.optimum) ++st.ip_agree;
    long long total = 0;
    for (long long x : w) total += x;
    if (ip.augment_calls <= 2 * total * cs.f2()) ++st.budget_ok;
    if (dec.g2.edge_count() > 0) ++st.nontrivial;
    if (find_odd_hole(dec.g2)) ++st.holes;
    if (brute_clique_cover(dec.g2) != independence_number_brute(dec.g2))
      ++st.imperfect;
  }
  st.elapsed = secs(t0, Clock::now());
  return st;
}

void criterion_3(Reporter& rep, const K3CorpusStats& st) {
  constexpr double kTimeLimit = 300.0;
  bool ok = st.agree == 300 && st.elapsed < kTimeLimit;
  std::ostringstream d;
  d << "greedy=formula=augmentation=search=brute on " << st.agree << "/300 ("
    << st.nontrivial << " with edges), " << fmt_double(st.elapsed)
    << "s < 300s";
  rep.result(3, ok, "three-helper exact methods agree on random instances",
             d.str());
}

void criterion_4(Reporter& rep, const K3CorpusStats& st) {
  bool ok = st.holes == 0 && st.imperfect == 0;
  std::ostringstream d;
  d << st.holes << " odd holes, " << st.imperfect
    << " cover/independence gaps in 300 graphs";
  rep.result(4, ok,
             "three-helper conflict graphs are perfect: cover number equals "
             "independence number",
             d.str());
}

void criterion_5(Reporter& rep) {
  std::vector<long long> expect_edges = {1, 12, 96, 640, 3840, 21504, 114688};
  bool ok = true;
  long long v3 = 0, e3 = 0;
  for (int k = 2; k <= 8; ++k) {
    CategoryGraph cg = build_category_graph(k);
    long long e = 0;
    for (int v = 0; v < cg.size(); ++v) e += (long long)cg.adj[v].size();
    e /= 2;
    long long closed = (long long)k * ((1ll << (k - 1)) - 1);
    if (cg.size() != closed || e != expect_edges[k - 2]) ok = false;
    if (k == 3) v3 = cg.size(), e3 = e;
  }
  std::ostringstream d;
  d << "k=2..8 sizes match k(2^(k-1)-1); k=3 has " << v3 << " vertices, " << e3
    << " edges";
  rep.result(5, ok, "category skeleton sizes follow the closed form", d.str());
}

struct K4CorpusStats {
  int bnb_agree = 0, frac_agree = 0;
  double elapsed = 0;
};

K4CorpusStats run_k4_corpus() {
  K4CorpusStats st;
  auto t0 = Clock::now();
  std::mt19937_64 rng(777);
  for (int it = 0; it < 200; ++it) {
    int k = 2 + (int)(rng() % 3);
    CanonicalInstance canon =
        random_canonical(rng, k, 5 + (int)(rng() % 8), 0.35, 0.9);
    DirectedSIGraph gd = build_side_info_graph(canon);
    Decomposition dec = decompose(gd);
    if (dec.g2.n == 0) { --it; continue; }
    Categorization cat = categorize(dec);
    BnbResult bb = bnb_optimum(cat.cg);
    if (bb.optimum == brute_clique_cover(dec.g2)) ++st.bnb_agree;
    if (it < 100) {
      FractionalSolution fs = fractional_multicolor(cat.cg);
      if (fs.objective == fractional_chromatic_brute(dec.g2)) ++st.frac_agree;
    }
  }
  st.elapsed = secs(t0, Clock::now());
  return st;
}

void criterion_6(Reporter& rep, const K4CorpusStats& st) {
  bool ok = st.bnb_agree == 200;
  std::ostringstream d;
  d << "branch-and-bound = brute force on " << st.bnb_agree << "/200, "
    << fmt_double(st.elapsed) << "s";
  rep.result(6, ok, "integer search is exact on random instances up to four helpers",
             d.str());
}

void criterion_7(Reporter& rep, const K3CorpusStats& k3) {
  constexpr double kTimeLimit = 600.0;
  auto t0 = Clock::now();
  bool ok = true;
  std::ostringstream d;

  // Two-helper basis is exactly the one elementary move and its negation.
  CliqueSystem cs2 = clique_system(2);
  GraverBasis gb2 = graver_basis(cs2);
  std::vector<std::vector<int>> els2 = gb2.elements;
  std::sort(els2.begin(), els2.end());
  if (els2 != std::vector<std::vector<int>>{{-1, -1, 1}, {1, 1, -1}}) ok = false;

  // Three-helper basis: frozen shape, kernel membership, minimality and
  // completeness spot checks.
  CliqueSystem cs3 = clique_system(3);
  GraverBasis gb3 = graver_basis(cs3);
  if (gb3.elements.size() != 1250 || gb3.delta != 2 || gb3.rank != 9 ||
      gb3.enum_bound != 26)
    ok = false;

  std::mt19937_64 rng(910910);
  auto in_kernel = [&](const CliqueSystem& cs, const std::vector<int>& e) {
    std::vector<long long> v(e.begin(), e.end());
    for (long long s : apply_system(cs, v))
      if (s != 0) return false;
    return true;
  };
  for (const auto& e : gb2.elements)
    if (!in_kernel(cs2, e)) ok = false;
  for (int s = 0; s < 50; ++s)
    if (!in_kernel(cs3, gb3.elements[rng() % gb3.elements.size()])) ok = false;

  // Sign-compatible minimality: no sampled element dominates another.
  auto conforms = [](const std::vector<int>& u, const std::vector<int>& v) {
    for (size_t i = 0; i < u.size(); ++i) {
      if (u[i] == 0) continue;
      if ((long long)u[i] * v[i] <= 0 || std::abs(u[i]) > std::abs(v[i]))
        return false;
    }
    return true;
  };
  for (int s = 0; s < 2000; ++s) {
    size_t i = rng() % gb3.elements.size(), j = rng() % gb3.elements.size();
    if (i != j && conforms(gb3.elements[i], gb3.elements[j])) ok = false;
  }

  // Completeness spot check: random kernel vectors peel to zero through
  // sign-compatible basis elements.
  int peeled = 0;
  for (int s = 0; s < 25; ++s) {
    std::vector<long long> z(gb3.elements[0].size(), 0);
    for (int m = 0; m < 4; ++m) {
      const auto& e = gb3.elements[rng() % gb3.elements.size()];
      long long sign = (rng() % 2) ? 1 : -1;
      for (size_t i = 0; i < z.size(); ++i) z[i] += sign * e[i];
    }
    int guard = 0;
    while (++guard < 2000) {
      bool zero = true;
      for (long long x : z)
        if (x) { zero = false; break; }
      if (zero) break;
      bool progressed = false;
      for (const auto& e : gb3.elements) {
        bool fits = true;
        for (size_t i = 0; i < z.size(); ++i) {
          if (e[i] == 0) continue;
          if ((long long)e[i] * z[i] <= 0 ||
              std::abs((long long)e[i]) > std::abs(z[i])) { fits = false; break; }
        }
        if (fits) {
          for (size_t i = 0; i < z.size(); ++i) z[i] -= e[i];
          progressed = true;
          break;
        }
      }
      if (!progressed) break;
    }
    bool zero = true;
    for (long long x : z)
      if (x) zero = false;
    if (zero) ++peeled;
  }
  if (peeled != 25) ok = false;

  // Augmentation on the random corpus: agreed with search, within budget.
  if (k3.ip_agree != 300 || k3.budget_ok != 300) ok = false;

  double el = secs(t0, Clock::now());
  if (el >= kTimeLimit) ok = false;
  d << "bases exact (2 and 1250 elements), " << peeled
    << "/25 kernel vectors peeled, corpus agreement " << k3.ip_agree
    << "/300, call budget " << k3.budget_ok << "/300, " << fmt_double(el)
    << "s < 600s";
  rep.result(7, ok, "augmentation bases are minimal, complete, and call-bounded",
             d.str());
}

void criterion_8(Reporter& rep, const K4CorpusStats& st) {
  bool ok = st.frac_agree == 100;
  std::ostringstream d;
  d << "exact rational agreement on " << st.frac_agree << "/100";
  rep.result(8, ok,
             "fractional relaxation matches brute-force fractional covers",
             d.str());
}

void criterion_9(Reporter& rep) {
  CanonicalInstance canon = pentagon_network();
  DirectedSIGraph gd = build_side_info_graph(canon);
  Decomposition dec = decompose(gd);
  Categorization cat = categorize(dec);
  BnbResult bb = bnb_optimum(cat.cg);
  MinrankResult mr = minrank_bruteforce(gd);
  VectorCodeResult vec = vector_code_for_instance(canon);
  bool ok = canon.k() == 4 && bb.optimum == 3 && mr.value == 3 &&
            vec.fs.t == 5 && vec.fs.p == 2 &&
            vec.combined_rate == Rational(5, 2) &&
            verify_vector_code(vec.code, gd) &&
            simulate_decode(vec.code, gd, 100, 3) &&
            scalar_code_for_instance(canon).length == 3;
  std::ostringstream d;
  d << "sub-packet rate " << to_string(vec.combined_rate)
    << " beats integer optimum " << bb.optimum << " = rank bound " << mr.value;
  rep.result(9, ok, "pentagon witness separates split-packet from whole-packet coding",
             d.str());
}

void criterion_10(Reporter& rep) {
  constexpr double kTimeLimit = 600.0;
  const Rational kGainLo(19, 10), kGainHi(29, 10);
  auto t0 = Clock::now();

  TrialConfig tc;
  tc.k = 5;
  tc.users_per_helper = 120;
  tc.library_size = 1400;
  tc.zipf_s = 0.5;
  tc.cache_size = 450;
  tc.trials = 20;
  tc.seed = 7;

  int exceptions = 0, matching_cnt = 0, vector_cnt = 0;
  long long naive_sum = 0;
  Rational vector_sum = 0;
  for (int t = 0; t < 20; ++t) {
    try {
      TrialResult tr = run_trial(tc, t);
      naive_sum += tr.naive;
      if (tr.matching >= 0) ++matching_cnt;
      if (tr.has_vector) {
        ++vector_cnt;
        vector_sum += tr.vector_rate;
      }
    } catch (const error&) {
      ++exceptions;  // scheme ordering violations surface as throws
    }
  }
  bool have_gain = vector_cnt == 20 && vector_sum > 0;
  Rational gain = have_gain ? Rational(naive_sum) / vector_sum : Rational(0);
  bool in_window = have_gain && gain >= kGainLo && gain <= kGainHi;

  // Eight-helper point: heavier baselines still run; the split-packet
  // scheme is documented-absent because clique enumeration is over budget.
  TrialConfig t8 = tc;
  t8.k = 8;
  t8.users_per_helper = 75;
  t8.trials = 1;
  TrialResult tr8 = run_trial(t8, 0);
  bool k8_ok = tr8.naive == 600 && tr8.matching >= 0 && !tr8.has_vector;

  double el = secs(t0, Clock::now());
  bool ok = in_window && matching_cnt == 20 && exceptions == 0 && k8_ok &&
            el < kTimeLimit;
  std::ostringstream d;
  d << "measured mean gain " << (have_gain ? decimal_string(gain, 4) : "n/a")
    << (in_window ? " inside" : " OUTSIDE") << " [1.9000, 2.9000], "
    << matching_cnt << "/20 matching rows, " << exceptions
    << " ordering exceptions, eight-helper run "
    << (k8_ok ? "has baselines with split-packet column absent as documented"
              : "unexpected shape")
    << ", " << fmt_double(el) << "s < 600s";
  rep.result(10, ok, "benchmark reference point reaches the expected gain window",
             d.str());
}

void criterion_11(Reporter& rep) {
  auto t0 = Clock::now();
  std::mt19937_64 rng(31337);
  int done = 0, vec_done = 0;
  for (int it = 0; it < 1000; ++it) {
    int k = 2 + (int)(rng() % 4);
    int n = 4 + (int)(rng() % 12);
    HelperNetwork net;
    net.n_users = n;
    net.helpers.assign(k, {});
    for (int j = 0; j < k; ++j)
      for (int u = 0; u < n; ++u)
        if (rng() % 3 == 0) net.helpers[j].neighborhood.push_back(u);
    for (int j = 0; j < k; ++j)
      for (int u = 0; u < n; ++u)
        if (rng() % 3 == 0 && !contains_sorted(net.helpers[j].neighborhood, u))
          net.helpers[j].cache.push_back(u);
    net.normalize();
    CanonicalInstance canon = union_expansion(net);
    if (canon.k() < 2 || canon.k() > 5) { --it; continue; }
    DirectedSIGraph gd = build_side_info_graph(canon);
    ScalarCodeResult scr = scalar_code_for_instance(canon);
    if (verify_xor_code(scr.code, gd) && simulate_decode(scr.code, gd, 100, rng()))
      ++done;
    VectorCodeResult vec = vector_code_for_instance(canon);
    if (verify_vector_code(vec.code, gd) &&
        simulate_decode(vec.code, gd, 100, rng()))
      ++vec_done;
  }
  double el = secs(t0, Clock::now());
  bool ok = done == 1000 && vec_done == 1000;
  std::ostringstream d;
  d << done << "/1000 whole-packet and " << vec_done
    << "/1000 split-packet codes verified and decoded, " << fmt_double(el)
    << "s";
  rep.result(11, ok, "every emitted code survives structural and payload checks",
             d.str());
}

void criterion_12(Reporter& rep) {
  auto t0 = Clock::now();
  std::mt19937_64 rng(99);
  int ok_cnt = 0, grid_ok = 0, grid_checked = 0;
  for (int it = 0; it < 200; ++it) {
    int d = 1 + (int)(rng() % 3);
    int k = 2 + (int)(rng() % 11);
    GeometricLayout lay;
    lay.d_ply = d;
    std::uniform_real_distribution<> pos(0.0, 10.0), rad(0.5, 3.0);
    int guard = 0;
    while ((int)lay.helper_disks.size() < k && guard < 4000) {
      ++guard;
      Disk cand{pos(rng), pos(rng), rad(rng)};
      lay.helper_disks.push_back(cand);
      if (measured_ply(lay) > d) lay.helper_disks.pop_back();
    }
    if ((int)lay.helper_disks.size() < k) { --it; continue; }
    IntersectionFamily fam = enumerate_intersecting_sets(lay);
    if (fam.within_bound) ++ok_cnt;
    if (it < 50) {
      ++grid_checked;
      auto gsets = grid_intersecting_sets(lay, 140);
      bool sub = std::includes(fam.sets.begin(), fam.sets.end(), gsets.begin(),
                               gsets.end());
      int missed = 0;
      for (auto& s : fam.sets)
        if (!std::binary_search(gsets.begin(), gsets.end(), s) &&
            has_interior_witness(lay, s, 0.08))
          ++missed;
      if (sub && missed == 0) ++grid_ok;
    }
  }
  double el = secs(t0, Clock::now());
  bool ok = ok_cnt == 200 && grid_ok == 50 && grid_checked == 50;
  std::ostringstream d;
  d << ok_cnt << "/200 within the ply bound, grid agreement " << grid_ok << "/"
    << grid_checked << ", " << fmt_double(el) << "s";
  rep.result(12, ok, "bounded-ply layouts stay within the counting bound", d.str());
}

}  // namespace

int main() {
  Reporter rep;
  try {
    criterion_1(rep);
    criterion_2(rep);
    K3CorpusStats k3 = run_k3_corpus();
    criterion_3(rep, k3);
    criterion_4(rep, k3);
    criterion_5(rep);
    K4CorpusStats k4 = run_k4_corpus();
    criterion_6(rep, k4);
    criterion_7(rep, k3);
    criterion_8(rep, k4);
    criterion_9(rep);
    criterion_10(rep);
    criterion_11(rep);
    criterion_12(rep);
  } catch (const std::exception& e) {
    std::cerr << "acceptance suite aborted: " << e.what() << "\n";
    for (const std::string& line : rep.lines) std::cout << line << "\n";
    return 99;
  }
  for (const std::string& line : rep.lines) std::cout << line << "\n";
  std::cout << (rep.failures == 0
                    ? "all criteria passed"
                    : std::to_string(rep.failures) + " criterion(s) failed")
            << "\n";
  return rep.failures;
}
