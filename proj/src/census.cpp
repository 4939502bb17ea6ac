#include "nonori/census.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

#include "nonori/error.hpp"
#include "nonori/isosig.hpp"
#include "nonori/records.hpp"
#include "nonori/spine.hpp"

namespace nonori {

namespace {

constexpr int kMaxTets = 8;

using AdjMatrix = std::vector<std::vector<int>>;

int degree_of(const AdjMatrix& a, int i) {
  int d = 0;
  for (int j = 0; j < static_cast<int>(a.size()); ++j) d += (i == j) ? 2 * a[i][j] : a[i][j];
  return d;
}

bool connected(const AdjMatrix& a) {
  int n = static_cast<int>(a.size());
  std::vector<bool> seen(n, false);
  std::vector<int> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    for (int j = 0; j < n; ++j)
      if (a[i][j] && !seen[j]) {
        seen[j] = true;
        stack.push_back(j);
      }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

// Node invariant: loop count, then sorted multiplicities to other nodes.
std::vector<int> node_invariant(const AdjMatrix& a, int i) {
  std::vector<int> row;
  for (int j = 0; j < static_cast<int>(a.size()); ++j)
    if (j != i && a[i][j]) row.push_back(a[i][j]);
  std::sort(row.begin(), row.end(), std::greater<>());
  row.insert(row.begin(), a[i][i]);
  return row;
}

// Smallest relabeled matrix over orderings that sort nodes by invariant.
AdjMatrix canonical(const AdjMatrix& a) {
  int n = static_cast<int>(a.size());
  std::vector<std::pair<std::vector<int>, int>> inv;
  for (int i = 0; i < n; ++i) inv.push_back({node_invariant(a, i), i});
  std::sort(inv.begin(), inv.end(), std::greater<>());
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = inv[i].second;
  // Class boundaries; permute within each class.
  std::vector<int> cls(n);
  for (int i = 1; i < n; ++i) cls[i] = cls[i - 1] + (inv[i].first != inv[i - 1].first);

  AdjMatrix best;
  std::vector<int> cur = order;
  // Iterate the product of per-class permutations via recursion.
  std::function<void(int)> rec = [&](int start) {
    if (start == n) {
      AdjMatrix m(n, std::vector<int>(n));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i][j] = a[cur[i]][cur[j]];
      if (best.empty() || m < best) best = std::move(m);
      return;
    }
    int end = start;
    while (end < n && cls[end] == cls[start]) ++end;
    std::sort(cur.begin() + start, cur.begin() + end);
    do {
      rec(end);
    } while (std::next_permutation(cur.begin() + start, cur.begin() + end));
  };
  rec(0);
  return best;
}

// Fills the upper triangle row by row; node i > 0 must have a neighbour
// below it, which every connected graph admits after relabeling.
void fill_graphs(AdjMatrix& a, int i, int j, std::set<AdjMatrix>& out) {
  int n = static_cast<int>(a.size());
  if (i == n) {
    if (connected(a)) out.insert(canonical(a));
    return;
  }
  if (j == n) {
    if (degree_of(a, i) != 4) return;
    if (i > 0) {
      bool below = false;
      for (int k = 0; k < i; ++k) below = below || a[i][k] > 0;
      if (!below) return;
    }
    fill_graphs(a, i + 1, i + 1, out);
    return;
  }
  int have = degree_of(a, i);
  int room = 4 - have;
  int max_mult = (i == j) ? room / 2 : std::min(room, 4 - degree_of(a, j));
  for (int m = 0; m <= max_mult; ++m) {
    a[i][j] = a[j][i] = m;
    fill_graphs(a, i, j + 1, out);
  }
  a[i][j] = a[j][i] = 0;
}

// Incremental gluing state. Tetrahedron edges are t*6+k, corners t*4+v.
struct State {
  std::array<std::int8_t, 6 * kMaxTets> e_parent{};
  std::array<std::uint8_t, 6 * kMaxTets> e_parity{};  // orientation relative to parent
  std::array<std::int8_t, 6 * kMaxTets> e_open{};
  std::array<std::int8_t, 6 * kMaxTets> e_size{};
  std::array<std::uint8_t, 6 * kMaxTets> e_tets{};
  std::array<std::int8_t, 4 * kMaxTets> v_parent{};
  std::array<std::uint8_t, 4 * kMaxTets> v_parity{};  // link triangle orientation relative to parent
  std::array<std::int8_t, 4 * kMaxTets> v_open{};
  std::array<std::int8_t, 4 * kMaxTets> v_size{};
  int edge_classes = 0;
  int closed_edges = 0;
};

struct Slot {
  int tet;
  int face;
};

struct Search {
  int n = 0;
  std::vector<std::array<Slot, 2>> pairs;
  std::vector<std::vector<Perm4>> choices;  // per pair, the 6 maps sending face a to face b
  const EnumerateOptions* opt = nullptr;
  bool prune_low_degree = false;
  std::vector<Perm4> chosen;
  std::set<std::string> found;
  long long leaves = 0;
  long long kept = 0;
  long long nodes = 0;

  int e_find(const State& s, int x, int& parity) const {
    parity = 0;
    while (s.e_parent[x] != x) {
      parity ^= s.e_parity[x];
      x = s.e_parent[x];
    }
    return x;
  }
  int v_find(const State& s, int x, int& parity) const {
    parity = 0;
    while (s.v_parent[x] != x) {
      parity ^= s.v_parity[x];
      x = s.v_parent[x];
    }
    return x;
  }

  // Returns false if the merge makes the gluing impossible to complete.
  bool merge_edge(State& s, int x, int y, int rel) const {
    int px, py;
    int rx = e_find(s, x, px);
    int ry = e_find(s, y, py);
    if (rx == ry) {
      if ((px ^ py) != rel) return false;
      s.e_open[rx] -= 2;
      if (s.e_open[rx] == 0) return close_edge(s, rx);
      return true;
    }
    if (s.e_size[rx] < s.e_size[ry]) std::swap(rx, ry);
    s.e_parent[ry] = static_cast<std::int8_t>(rx);
    s.e_parity[ry] = static_cast<std::uint8_t>(px ^ py ^ rel);
    s.e_open[rx] = static_cast<std::int8_t>(s.e_open[rx] + s.e_open[ry] - 2);
    s.e_size[rx] = static_cast<std::int8_t>(s.e_size[rx] + s.e_size[ry]);
    s.e_tets[rx] |= s.e_tets[ry];
    if (--s.edge_classes < n + 1) return false;
    if (s.e_open[rx] == 0) return close_edge(s, rx);
    return true;
  }

  bool close_edge(State& s, int r) const {
    if (++s.closed_edges > n + 1) return false;
    if (prune_low_degree) {
      int d = s.e_size[r];
      if (d <= 2) return false;
      if (d == 3 && std::popcount(static_cast<unsigned>(s.e_tets[r])) == 3) return false;
    }
    return true;
  }

  // The vertex link is a sphere, so it must stay orientable even when the
  // triangulation is not.
  bool merge_vertex(State& s, int x, int y, int rel) const {
    int px, py;
    int rx = v_find(s, x, px);
    int ry = v_find(s, y, py);
    if (rx == ry) {
      if ((px ^ py) != rel) return false;
      s.v_open[rx] -= 2;
    } else {
      if (s.v_size[rx] < s.v_size[ry]) std::swap(rx, ry);
      s.v_parent[ry] = static_cast<std::int8_t>(rx);
      s.v_parity[ry] = static_cast<std::uint8_t>(px ^ py ^ rel);
      s.v_open[rx] = static_cast<std::int8_t>(s.v_open[rx] + s.v_open[ry] - 2);
      s.v_size[rx] = static_cast<std::int8_t>(s.v_size[rx] + s.v_size[ry]);
    }
    return !(s.v_open[rx] == 0 && s.v_size[rx] < 4 * n);
  }

  bool apply(State& s, const Slot& a, const Slot& b, Perm4 p) const {
    for (int v = 0; v < 4; ++v) {
      if (v == a.face) continue;
      if (!merge_vertex(s, a.tet * 4 + v, b.tet * 4 + p[v], p.even() ? 1 : 0)) return false;
    }
    for (int k = 0; k < 6; ++k) {
      int u = kEdgeVertices[k][0], w = kEdgeVertices[k][1];
      if (u == a.face || w == a.face) continue;
      int pu = p[u], pw = p[w];
      int rel = pu > pw ? 1 : 0;
      if (!merge_edge(s, a.tet * 6 + k, b.tet * 6 + edge_index(pu, pw), rel)) return false;
    }
    return true;
  }

  void leaf() {
    ++leaves;
    Triangulation t(n);
    for (std::size_t i = 0; i < pairs.size(); ++i) t.join(pairs[i][0].tet, pairs[i][0].face, pairs[i][1].tet, chosen[i]);
    if (opt->non_orientable_only && is_orientable(t).orientable) return;
    const PruneOptions& pr = opt->prune;
    if (pr.any_leaf() || pr.low_degree) {
      PruningFlags fl = pruning_predicates(t);
      if ((pr.low_degree && fl.low_degree) || (pr.small_embedded_face && fl.small_embedded_face) ||
          (pr.loop_edge && fl.loop_edge) || (pr.edge_hit_twice && fl.edge_hit_twice) ||
          (pr.sw_sphere && fl.sw_sphere))
        return;
    }
    if (!opt->fingerprints.empty() && !opt->fingerprints.count(fingerprint(t).str())) return;
    ++kept;
    found.insert(iso_sig(t));
  }

  void run(std::size_t i, const State& s) {
    ++nodes;
    if (i == pairs.size()) {
      leaf();
      return;
    }
    for (Perm4 p : choices[i]) {
      State next = s;
      if (!apply(next, pairs[i][0], pairs[i][1], p)) continue;
      chosen[i] = p;
      run(i + 1, next);
    }
  }
};

std::vector<std::string> enumerate_graph(const FacePairingGraph& g, const EnumerateOptions& opt, long long& leaves,
                                         long long& kept, long long& nodes) {
  int n = g.n;
  Search se;
  se.n = n;
  se.opt = &opt;
  se.prune_low_degree = opt.prune.low_degree && n >= 3;

  // Faces of node i go to its incident edge ends in neighbour order.
  std::vector<std::vector<int>> ends(n);  // neighbour per face
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int mult = (i == j) ? 2 * g.adj[i][j] : g.adj[i][j];
      for (int m = 0; m < mult; ++m) ends[i].push_back(j);
    }
  // Match ends: the k-th end of i towards j pairs with the k-th end of j
  // towards i; loops pair consecutive ends.
  std::vector<std::array<int, 4>> partner_face(n);
  for (int i = 0; i < n; ++i)
    for (int f = 0; f < 4; ++f) partner_face[i][f] = -1;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      std::vector<int> fi, fj;
      for (int f = 0; f < 4; ++f) {
        if (ends[i][f] == j) fi.push_back(f);
        if (ends[j][f] == i) fj.push_back(f);
      }
      if (i == j) {
        for (std::size_t k = 0; k + 1 < fi.size(); k += 2) {
          partner_face[i][fi[k]] = fi[k + 1];
          partner_face[i][fi[k + 1]] = fi[k];
        }
      } else {
        for (std::size_t k = 0; k < fi.size(); ++k) {
          partner_face[i][fi[k]] = fj[k];
          partner_face[j][fj[k]] = fi[k];
        }
      }
    }
  // Pairs in breadth-first order from node 0.
  std::vector<int> order{0};
  std::vector<bool> seen(n, false);
  seen[0] = true;
  for (std::size_t q = 0; q < order.size(); ++q)
    for (int f = 0; f < 4; ++f) {
      int j = ends[order[q]][f];
      if (!seen[j]) {
        seen[j] = true;
        order.push_back(j);
      }
    }
  std::vector<std::array<bool, 4>> done(n, {false, false, false, false});
  for (int i : order)
    for (int f = 0; f < 4; ++f) {
      if (done[i][f]) continue;
      int j = ends[i][f], h = partner_face[i][f];
      done[i][f] = done[j][h] = true;
      se.pairs.push_back({Slot{i, f}, Slot{j, h}});
      std::vector<Perm4> ps;
      for (int c = 0; c < Perm4::kCount; ++c) {
        Perm4 p = Perm4::from_code(c);
        if (p[f] == h) ps.push_back(p);
      }
      se.choices.push_back(ps);
    }
  se.chosen.resize(se.pairs.size());

  State s;
  for (int x = 0; x < 6 * n; ++x) {
    s.e_parent[x] = static_cast<std::int8_t>(x);
    s.e_open[x] = 2;
    s.e_size[x] = 1;
    s.e_tets[x] = static_cast<std::uint8_t>(1u << (x / 6));
  }
  for (int x = 0; x < 4 * n; ++x) {
    s.v_parent[x] = static_cast<std::int8_t>(x);
    s.v_open[x] = 3;
    s.v_size[x] = 1;
  }
  s.edge_classes = 6 * n;
  se.run(0, s);
  leaves = se.leaves;
  kept = se.kept;
  nodes = se.nodes;
  return {se.found.begin(), se.found.end()};
}

// File name encodes every option that changes the output of one graph.
std::string checkpoint_path(const std::string& dir, const EnumerateOptions& opt, int graph) {
  const PruneOptions& p = opt.prune;
  std::ostringstream os;
  os << dir << "/n" << opt.n << (opt.non_orientable_only ? "_nonori" : "_all") << "_prune" << p.low_degree
     << p.loop_edge << p.edge_hit_twice << p.small_embedded_face << p.sw_sphere;
  if (!opt.fingerprints.empty()) {
    std::string joined;
    for (const auto& f : opt.fingerprints) joined += f + "/";
    os << "_fp" << std::hex << std::hash<std::string>{}(joined) << std::dec;
  }
  os << "_graph" << graph << ".txt";
  return os.str();
}

bool load_checkpoint(const std::string& path, std::vector<std::string>& out) {
  std::ifstream in(path);
  if (!in) return false;
  std::vector<std::string> lines;
  std::string line;
  bool complete = false;
  while (std::getline(in, line)) {
    if (line == "#done") {
      complete = true;
      break;
    }
    lines.push_back(line);
  }
  if (!complete) return false;
  out = std::move(lines);
  return true;
}

void save_checkpoint(const std::string& path, const std::vector<std::string>& sigs) {
  std::ofstream os(path);
  for (const auto& s : sigs) os << s << "\n";
  os << "#done\n";
}

}  // namespace

std::string FacePairingGraph::str() const {
  std::ostringstream os;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      for (int m = 0; m < adj[i][j]; ++m) os << (os.tellp() > 0 ? " " : "") << i << "-" << j;
  return os.str();
}

std::vector<FacePairingGraph> face_pairing_graphs(int n) {
  if (n < 1 || n > kMaxTets) throw DomainError("face pairing graphs need 1 <= n <= 8");
  AdjMatrix a(n, std::vector<int>(n, 0));
  std::set<AdjMatrix> out;
  fill_graphs(a, 0, 0, out);
  std::vector<FacePairingGraph> res;
  for (const auto& m : out) res.push_back({n, m});
  return res;
}

PruneOptions PruneOptions::all() {
  PruneOptions p;
  p.low_degree = p.loop_edge = p.edge_hit_twice = p.small_embedded_face = p.sw_sphere = true;
  return p;
}

PruneOptions PruneOptions::parse(std::string_view s) {
  if (s == "all") return all();
  if (s == "none" || s.empty()) return none();
  PruneOptions p;
  std::string str(s);
  std::istringstream is(str);
  std::string item;
  while (std::getline(is, item, ',')) {
    if (item == "low_degree") p.low_degree = true;
    else if (item == "loop_edge") p.loop_edge = true;
    else if (item == "edge_hit_twice") p.edge_hit_twice = true;
    else if (item == "small_embedded_face") p.small_embedded_face = true;
    else if (item == "sw_sphere") p.sw_sphere = true;
    else throw ParseError("unknown pruning predicate: " + item);
  }
  return p;
}

std::vector<std::string> enumerate(const EnumerateOptions& opt, EnumerateStats* stats) {
  if (opt.n < 1 || opt.n > kMaxTets) throw DomainError("enumerate needs 1 <= n <= 8");
  std::vector<FacePairingGraph> graphs = face_pairing_graphs(opt.n);
  std::vector<int> index(graphs.size());
  std::iota(index.begin(), index.end(), 0);
  if (!opt.graph_subset.empty()) {
    std::vector<FacePairingGraph> sub;
    for (int i : opt.graph_subset) {
      if (i < 0 || i >= static_cast<int>(graphs.size())) throw DomainError("graph index out of range");
      sub.push_back(graphs[i]);
    }
    graphs = std::move(sub);
    index = opt.graph_subset;
  }
  std::vector<std::vector<std::string>> per_graph(graphs.size());
  std::vector<long long> leaves(graphs.size(), 0), kept(graphs.size(), 0), nodes(graphs.size(), 0);
  if (!opt.checkpoint_dir.empty()) std::filesystem::create_directories(opt.checkpoint_dir);

  std::atomic<std::size_t> next{0};
  std::atomic<int> finished{0};
  std::mutex progress_mu;
  auto worker = [&]() {
    for (std::size_t i = next++; i < graphs.size(); i = next++) {
      std::string path = opt.checkpoint_dir.empty() ? "" : checkpoint_path(opt.checkpoint_dir, opt, index[i]);
      if (path.empty() || !load_checkpoint(path, per_graph[i])) {
        per_graph[i] = enumerate_graph(graphs[i], opt, leaves[i], kept[i], nodes[i]);
        if (!path.empty()) save_checkpoint(path, per_graph[i]);
      }
      int d = ++finished;
      if (opt.progress) {
        std::lock_guard<std::mutex> lock(progress_mu);
        opt.progress(d, static_cast<int>(graphs.size()));
      }
    }
  };
  int threads = std::max(1, opt.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int k = 0; k < threads; ++k) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  std::set<std::string> all;
  for (const auto& v : per_graph) all.insert(v.begin(), v.end());
  if (stats) {
    stats->graphs = static_cast<int>(graphs.size());
    stats->leaves = std::accumulate(leaves.begin(), leaves.end(), 0LL);
    stats->kept = std::accumulate(kept.begin(), kept.end(), 0LL);
    stats->nodes = std::accumulate(nodes.begin(), nodes.end(), 0LL);
  }
  return {all.begin(), all.end()};
}

const std::vector<Target>& target_table() {
  static const std::vector<Target> table = [] {
    std::vector<Target> t = {
        {"flat K-bundle (id)", 6, "Klein bottle bundle with identity monodromy", Fingerprint::parse("n;2;2;3;"), 6},
        {"flat K-bundle (psi)", 6, "Klein bottle bundle, Dehn twist along the two-sided curve",
         Fingerprint::parse("n;2;;3;"), 6},
        {"flat K-bundle (phi)", 6, "Klein bottle bundle, reflection of the two-sided curve",
         Fingerprint::parse("n;1;2,2;1;2,2"), 6},
        {"flat K-bundle (phi psi)", 6, "Klein bottle bundle, composite monodromy",
         Fingerprint::parse("n;1;4;1;2,2"), 6},
        {"Sol c=6 bundle", 6, "torus bundle with monodromy (1 1;1 0)", Fingerprint::parse("n;1;;1;"), 7},
        {"Sol c=7 bundle", 7, "torus bundle with monodromy (2 1;1 0)", Fingerprint::parse("n;1;2;1;2,2"), 9},
        {"H2xR RP2;(2,1)(3,1)", 7, "Seifert space over RP2 with fibers (2,1),(3,1)", Fingerprint::parse("n;1;;1;"), 8},
        {"H2xR Dbar;(2,1)(3,1)", 7, "Seifert space over the reflector disc with fibers (2,1),(3,1)",
         Fingerprint::parse("n;1;2;1;"), 8},
    };
    return t;
  }();
  return table;
}

std::string Recognition::verdict() const {
  if (matches.empty()) return "unknown";
  if (matches.size() == 1) return matches.front();
  std::string s = "ambiguous{";
  for (std::size_t i = 0; i < matches.size(); ++i) s += (i ? "," : "") + matches[i];
  return s + "}";
}

Recognition recognize(const Triangulation& t, const std::vector<CensusRecord>& records) {
  Recognition r;
  r.fingerprint = fingerprint(t);
  if (!r.fingerprint.orientable)
    for (const Target& tg : target_table())
      if (tg.fingerprint == r.fingerprint) r.matches.push_back(tg.name);
  for (const CensusRecord& rec : records)
    if (rec.fingerprint && *rec.fingerprint == r.fingerprint &&
        std::find(r.matches.begin(), r.matches.end(), rec.name) == r.matches.end())
      r.matches.push_back(rec.name);
  return r;
}

CollisionAudit audit_collision(const Triangulation& t) {
  CollisionAudit a;
  a.recognition = recognize(t);
  a.n = t.size();
  a.cover_bound = 2 * a.n;
  a.bound_source = "cover dual minus one face";
  if (!a.recognition.fingerprint.orientable) {
    LemmaCertificate c = lemma_pipeline(t);
    if (c.ok && c.collapse.remaining_vertices < a.cover_bound) {
      a.cover_bound = c.collapse.remaining_vertices;
      a.bound_source = "punch and collapse";
    }
  }
  a.excluded = !a.recognition.matches.empty();
  for (const std::string& name : a.recognition.matches)
    for (const Target& tg : target_table())
      if (tg.name == name && a.cover_bound >= tg.cover_complexity) a.excluded = false;
  return a;
}

}  // namespace nonori
