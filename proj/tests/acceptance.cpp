// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
//
//   acceptance --cli <path to domrec> --data <tests/data>

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "domrec/domination.hpp"
#include "domrec/families.hpp"
#include "domrec/reconfig.hpp"
#include "domrec/separation.hpp"
#include "oracles.hpp"

using namespace domrec;

namespace {

const std::vector<std::pair<int, int>> kGrid{{3, 1}, {3, 2}, {4, 1}, {4, 2}, {4, 3}};

struct Outcome {
  bool ok = true;
  std::ostringstream note;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      if (ok) note << "first failure: " << what;
      ok = false;
    }
  }
};

std::vector<Graph> random_corpus() {
  std::mt19937_64 rng(20240607);
  std::vector<Graph> out;
  for (int i = 0; i < 200; ++i) {
    const int n = std::uniform_int_distribution<int>(4, 9)(rng);
    const double p = std::uniform_real_distribution<double>(0.1, 0.6)(rng);
    out.push_back(oracle::random_connected(rng, n, p));
  }
  return out;
}

std::string grid_name(const char* fam, int k, int r) {
  return std::string(fam) + "(" + std::to_string(k) + "," + std::to_string(r) + ")";
}

bool parity_bipartite(const ReconfigGraph& rg) {
  return std::all_of(rg.edges.begin(), rg.edges.end(), [&](auto e) {
    return std::abs(rg.verts[e.first].cardinality() - rg.verts[e.second].cardinality()) == 1;
  });
}

std::size_t dk_built = 0;

ReconfigGraph checked_dk(const Graph& g, int k, Outcome& bip) {
  ReconfigGraph rg = build_dk(g, k);
  ++dk_built;
  bip.expect(parity_bipartite(rg), "D_" + std::to_string(k) + " not parity-bipartite");
  return rg;
}

Outcome c1() {
  Outcome o;
  for (auto [k, r] : kGrid) {
    const Graph g = generate_gkr(k, r).graph;
    const DomFamily fam = enumerate_minimal_dominating(g);
    const int d0 = d0_direct(g, fam);
    o.expect(fam.Gamma == k && fam.gamma == r + 1 && d0 == k + r, grid_name("G", k, r));
    if (k == 4 && r == 3) o.note << "d0(G_{4,3})=" << d0;
  }
  return o;
}

Outcome c2() {
  Outcome o;
  for (auto [k, r] : kGrid) {
    const auto start = std::chrono::steady_clock::now();
    const Graph g = generate_qkr(k, r).graph;
    const DomFamily fam = enumerate_minimal_dominating(g);
    const int d0 = d0_direct(g, fam);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.expect(fam.Gamma == k && fam.gamma == r && d0 == k + r, grid_name("Q", k, r));
    if (k == 4 && r == 3) {
      o.expect(secs < 120.0, "Q_{4,3} took " + std::to_string(secs) + "s");
      o.note << "d0(Q_{4,3})=" << d0 << " in " << secs << "s";
    }
  }
  return o;
}

Outcome c3(const std::vector<Graph>& corpus) {
  Outcome o;
  std::vector<std::pair<std::string, Graph>> cases;
  for (auto [k, r] : kGrid) {
    cases.emplace_back(grid_name("G", k, r), generate_gkr(k, r).graph);
    cases.emplace_back(grid_name("Q", k, r), generate_qkr(k, r).graph);
  }
  for (int n = 3; n <= 6; ++n) cases.emplace_back("K_{1," + std::to_string(n) + "}", star_graph(n));
  cases.emplace_back("P3xK3", cartesian_product(path_graph(3), complete_graph(3)));
  for (std::size_t i = 0; i < corpus.size(); ++i) cases.emplace_back("corpus#" + std::to_string(i), corpus[i]);
  for (const auto& [name, g] : cases) {
    const DomFamily fam = enumerate_minimal_dominating(g);
    o.expect(sep_bottleneck(fam).sep == d0_direct(g, fam), name);
  }
  o.note << cases.size() << " instances";
  return o;
}

Outcome c4(const std::vector<Graph>& corpus) {
  Outcome o;
  int compared = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const DomFamily fam = enumerate_minimal_dominating(corpus[i]);
    if (fam.size() > kBruteForceMaxFamily) continue;
    ++compared;
    o.expect(sep_bottleneck(fam).sep == sep_brute_force(fam).sep, "corpus#" + std::to_string(i));
  }
  o.expect(compared > 0, "no corpus graph small enough");
  o.note << compared << " families compared";
  return o;
}

Outcome c5(Outcome& bip) {
  Outcome o;
  for (int n = 3; n <= 6; ++n) {
    const Graph g = star_graph(n);
    for (int j = 1; j <= n + 1; ++j) {
      const bool connected = checked_dk(g, j, bip).connected();
      o.expect(connected == (j != n), "K_{1," + std::to_string(n) + "} at j=" + std::to_string(j));
    }
    o.expect(d0_direct(g) == n + 1, "d0(K_{1," + std::to_string(n) + "})");
  }
  return o;
}

Outcome c6() {
  Outcome o;
  const Graph g = cartesian_product(path_graph(3), complete_graph(3));
  const DomFamily fam = enumerate_minimal_dominating(g);
  const int d0 = d0_direct(g, fam);
  o.expect(fam.gamma == 3 && fam.Gamma == 3 && d0 == 5 && d0 == fam.Gamma + 2, "P3xK3");
  o.note << "gamma=" << fam.gamma << " Gamma=" << fam.Gamma << " d0=" << d0;
  return o;
}

Outcome c7() {
  Outcome o;
  for (auto [k, r] : kGrid) {
    const LemmaCheck g = verify_gkr_lemmas(k, r);
    o.expect(g.passed() && g.family_size == g.expected_family_size, grid_name("G", k, r));
    const LemmaCheck q = verify_qkr_lemmas(k, r);
    o.expect(q.passed() && q.family_size == q.expected_family_size, grid_name("Q", k, r));
  }
  return o;
}

Outcome c8() {
  Outcome o;
  for (auto [k, r] : kGrid) {
    const Graph g = generate_gkr(k, r).graph;
    InvariantOptions opts;
    opts.ir = IrMode::Skip;
    const InvariantReport rep = invariant_report(g, opts);
    o.expect(rep.alpha == r + 1 && rep.well_covered, grid_name("G", k, r) + " alpha/well-covered");
    if (r == k - 1)
      o.expect(rep.well_dominated && d0_direct(g) == 2 * rep.Gamma - 1, grid_name("G", k, r) + " 2Gamma-1");
  }
  return o;
}

Outcome c9() {
  Outcome o;
  for (auto [k, r] : kGrid) {
    const auto [g, L] = generate_gkr(k, r);
    const VertexSet w = note_irredundant_witness(L);
    const int bound = r >= 2 ? k + r - 2 : k - 1;
    o.expect(is_irredundant(g, w) && w.cardinality() >= bound, grid_name("G", k, r));
  }
  return o;
}

Outcome c10(const std::vector<Graph>& corpus, Outcome& bip) {
  Outcome o;
  for (int n = 2; n <= 4; ++n) {
    const ReconfigGraph rg = checked_dk(complete_graph(n), n, bip);
    o.expect(rg.order() == (std::size_t{1} << n) - 1, "order of D_n(K_n)");
    o.expect(rg.size() == static_cast<std::size_t>(n) * (std::size_t{1} << (n - 1)) - n, "size of D_n(K_n)");
  }
  for (int n = 3; n <= 4; ++n) {
    const Graph star = star_graph(n);
    const ReconfigGraph rg = checked_dk(star, 2, bip);
    std::vector<int> deg;
    for (const auto& nb : rg.adjacency()) deg.push_back(static_cast<int>(nb.size()));
    std::sort(deg.rbegin(), deg.rend());
    o.expect(deg == star.degree_sequence(), "degree sequence of D_2(K_{1,n})");
    // centre -> {0}, leaf i -> {0,i}
    std::vector<VertexSet> image{VertexSet{0}};
    for (int i = 1; i <= n; ++i) image.push_back(VertexSet{0, i});
    bool iso = rg.order() == image.size() && rg.size() == star.size();
    for (auto [u, v] : star.edges()) {
      const auto iu = std::find(rg.verts.begin(), rg.verts.end(), image[u]) - rg.verts.begin();
      const auto iv = std::find(rg.verts.begin(), rg.verts.end(), image[v]) - rg.verts.begin();
      const std::pair<std::uint32_t, std::uint32_t> e(std::min(iu, iv), std::max(iu, iv));
      iso = iso && std::binary_search(rg.edges.begin(), rg.edges.end(), e);
    }
    o.expect(iso, "explicit isomorphism D_2(K_{1," + std::to_string(n) + "})");
  }
  for (const Graph& g : corpus)
    for (int k = 1; k <= g.order(); ++k) checked_dk(g, k, bip);
  for (auto [k, r] : kGrid) checked_dk(generate_gkr(k, r).graph, k + r, bip);
  o.expect(bip.ok, bip.note.str());
  o.note << dk_built << " D_k graphs parity-checked";
  return o;
}

Outcome c11(const std::vector<Graph>& corpus) {
  Outcome o;
  int anomalies = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const DomFamily fam = enumerate_minimal_dominating(corpus[i]);
    const int d0 = d0_direct(corpus[i], fam);
    o.expect(fam.Gamma + 1 <= d0 && d0 <= fam.Gamma + fam.gamma, "corpus#" + std::to_string(i));
    if (fam.Gamma >= 2 && d0 > 2 * fam.Gamma - 1) {
      ++anomalies;
      std::cout << "  note: corpus#" << i << " d0=" << d0 << " exceeds 2*Gamma-1 with Gamma=" << fam.Gamma
                << " (hypothesis anomaly, not a failure)\n";
    }
  }
  o.note << anomalies << " 2*Gamma-1 anomalies";
  return o;
}

std::string run(const std::string& cmd) {
  std::string out;
  FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
  if (!pipe) return "<popen failed>";
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  const int status = pclose(pipe);
  return out + "\n<status " + std::to_string(status) + ">";
}

Outcome c12(const std::string& cli, const std::string& data) {
  Outcome o;
  if (cli.empty()) {
    o.expect(false, "no --cli given");
    return o;
  }
  const std::vector<std::string> suite{
      cli + " gen gkr --k 4 --r 3 | " + cli + " d0 - --method both",
      cli + " gen qkr --k 4 --r 3 | " + cli + " invariants -",
      cli + " gen star --n 5 | " + cli + " profile -",
      cli + " gen cycle --n 6 | " + cli + " sep - --oracle",
      cli + " gen cartesian | " + cli + " sep -",
      cli + " gen complete --n 4 | " + cli + " dk - --k 4 --export dot",
      cli + " gen star --n 3 | " + cli + " dk - --k 2 --export json --diameter",
      cli + " gen star --n 3 | " + cli + " path - --from 1,2,3 --to 0 --k 4",
      cli + " verify qkr --k 4 --r 3",
      cli + " hunt --min-excess 1 < " + data + "/connected_upto7.g6",
  };
  std::size_t bytes = 0;
  for (const auto& cmd : suite) {
    const std::string first = run(cmd), second = run(cmd);
    o.expect(first == second, cmd);
    o.expect(first.find("<status 0>") != std::string::npos, "nonzero exit: " + cmd);
    bytes += first.size();
  }
  o.note << suite.size() << " commands, " << bytes << " bytes compared";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli, data = ".";
  for (int i = 1; i + 1 < argc; i += 2) {
    const std::string flag = argv[i];
    if (flag == "--cli") cli = argv[i + 1];
    else if (flag == "--data") data = argv[i + 1];
  }

  const std::vector<Graph> corpus = random_corpus();
  Outcome bip;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"G_{k,r}: Gamma=k, gamma=r+1, d0=k+r on the grid", c1},
      {"Q_{k,r}: Gamma=k, gamma=r, d0=k+r on the grid", c2},
      {"bottleneck separation equals d0", [&] { return c3(corpus); }},
      {"bottleneck equals brute-force separation", [&] { return c4(corpus); }},
      {"star connectivity profile", [&] { return c5(bip); }},
      {"P3xK3: gamma=Gamma=3, d0=5", c6},
      {"structure lemmas on the grid", c7},
      {"alpha, well-covered, well-dominated on the grid", c8},
      {"irredundant witness size", c9},
      {"D_k structure: bipartite, hypercube, stars", [&] { return c10(corpus, bip); }},
      {"Gamma+1 <= d0 <= Gamma+gamma", [&] { return c11(corpus); }},
      {"CLI output is deterministic", [&] { return c12(cli, data); }},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.ok = false;
      o.note << "exception: " << e.what();
    }
    if (!o.ok) ++failed;
    std::cout << (o.ok ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first;
    if (const std::string n = o.note.str(); !n.empty()) std::cout << " (" << n << ")";
    std::cout << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
