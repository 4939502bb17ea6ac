#include "nonori/triangulation.hpp"

#include <numeric>
#include <queue>
#include <regex>
#include <sstream>

#include "nonori/error.hpp"

namespace nonori {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

void Triangulation::join(int tet, int face, int other, Perm4 perm) {
  int n = size();
  if (tet < 0 || tet >= n || other < 0 || other >= n || face < 0 || face > 3)
    throw DomainError("join: index out of range");
  int g = perm[face];
  if (tet == other && face == g) throw DomainError("join: face glued to itself");
  if (g_[tet][face].glued() || g_[other][g].glued()) throw DomainError("join: face already glued");
  g_[tet][face] = {other, g, perm};
  g_[other][g] = {tet, face, perm.inverse()};
}

void Triangulation::unjoin(int tet, int face) {
  Gluing g = g_[tet][face];
  if (!g.glued()) return;
  g_[g.tet][g.face] = Gluing{};
  g_[tet][face] = Gluing{};
}

ValidityReport validate(const Triangulation& t) {
  ValidityReport r;
  int n = t.size();
  if (n == 0) {
    r.problems.emplace_back("empty triangulation");
    return r;
  }
  bool open = false, dangling = false, bad_perm = false, not_inv = false, self = false;
  for (int i = 0; i < n; ++i)
    for (int f = 0; f < 4; ++f) {
      const Gluing& g = t.gluing(i, f);
      if (!g.glued()) {
        open = true;
        continue;
      }
      if (g.tet >= n || g.face < 0 || g.face > 3) {
        dangling = true;
        continue;
      }
      if (g.perm[f] != g.face) bad_perm = true;
      if (g.tet == i && g.face == f) self = true;
      const Gluing& back = t.gluing(g.tet, g.face);
      if (back.tet != i || back.face != f || back.perm != g.perm.inverse()) not_inv = true;
    }
  if (open) r.problems.emplace_back("not closed");
  if (dangling) r.problems.emplace_back("gluing points outside the triangulation");
  if (bad_perm) r.problems.emplace_back("corner bijection does not carry face to face");
  if (not_inv) r.problems.emplace_back("not an involution");
  if (self) r.problems.emplace_back("face glued to itself");
  if (!dangling) {
    std::vector<bool> seen(n, false);
    std::vector<int> stack{0};
    seen[0] = true;
    int reached = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int f = 0; f < 4; ++f) {
        const Gluing& g = t.gluing(x, f);
        if (g.glued() && !seen[g.tet]) {
          seen[g.tet] = true;
          ++reached;
          stack.push_back(g.tet);
        }
      }
    }
    if (reached != n) r.problems.emplace_back("disconnected");
  }
  return r;
}

bool Skeleton::all_edges_valid() const {
  for (bool v : edge_valid)
    if (!v) return false;
  return true;
}

Skeleton compute_skeleton(const Triangulation& t) {
  int n = t.size();
  Skeleton sk;

  UnionFind corners(4 * n);
  for (int i = 0; i < n; ++i)
    for (int f = 0; f < 4; ++f) {
      const Gluing& g = t.gluing(i, f);
      for (int v = 0; v < 4; ++v)
        if (v != f) corners.unite(4 * i + v, 4 * g.tet + g.perm[v]);
    }
  sk.vertex_of.assign(n, {});
  std::vector<int> vid(4 * n, -1);
  for (int i = 0; i < n; ++i)
    for (int v = 0; v < 4; ++v) {
      int r = corners.find(4 * i + v);
      if (vid[r] < 0) vid[r] = sk.num_vertices++;
      sk.vertex_of[i][v] = vid[r];
    }

  sk.edge_of.assign(n, {-1, -1, -1, -1, -1, -1});
  sk.edge_sign.assign(n, {});
  for (int t0 = 0; t0 < n; ++t0)
    for (int e0 = 0; e0 < 6; ++e0) {
      if (sk.edge_of[t0][e0] >= 0) continue;
      int c = sk.num_edges++;
      sk.edge_ring.emplace_back();
      auto& ring = sk.edge_ring.back();
      int i = kEdgeVertices[e0][0], j = kEdgeVertices[e0][1];
      int a = -1, b = -1;
      for (int v = 0; v < 4; ++v)
        if (v != i && v != j) (a < 0 ? a : b) = v;
      int tet = t0;
      bool valid = true;
      while (true) {
        int idx = edge_index(i, j);
        if (sk.edge_of[tet][idx] >= 0) {
          // Back at an edge already on this ring: the start, possibly reversed.
          valid = (sk.edge_sign[tet][idx] == (i < j ? 1 : -1));
          break;
        }
        sk.edge_of[tet][idx] = c;
        sk.edge_sign[tet][idx] = i < j ? 1 : -1;
        ring.push_back({tet, idx, i < j ? 1 : -1, b});
        const Gluing& g = t.gluing(tet, b);
        int ni = g.perm[i], nj = g.perm[j], na = g.perm[b], nb = g.perm[a];
        tet = g.tet;
        i = ni;
        j = nj;
        a = na;
        b = nb;
      }
      sk.edge_valid.push_back(valid);
    }

  sk.triangle_of.assign(n, {-1, -1, -1, -1});
  for (int i = 0; i < n; ++i)
    for (int f = 0; f < 4; ++f) {
      if (sk.triangle_of[i][f] >= 0) continue;
      const Gluing& g = t.gluing(i, f);
      sk.triangle_of[i][f] = sk.triangle_of[g.tet][g.face] = sk.num_triangles++;
      sk.triangle_slot.push_back({i, f});
    }
  return sk;
}

int vertex_count(const Triangulation& t) {
  if (!validate(t).valid()) throw DomainError("vertex_count: invalid triangulation");
  return compute_skeleton(t).num_vertices;
}

ManifoldReport check_manifold(const Triangulation& t, const Skeleton& sk) {
  ManifoldReport r;
  for (int e = 0; e < sk.num_edges; ++e)
    if (!sk.edge_valid[e])
      r.problems.push_back("edge " + std::to_string(e) + " identified with itself in reverse");
  std::vector<long> chi(sk.num_vertices, 0);
  for (int e = 0; e < sk.num_edges; ++e) {
    const EdgeEmbedding& em = sk.edge_ring[e][0];
    chi[sk.vertex_of[em.tet][kEdgeVertices[em.edge][0]]] += 1;
    chi[sk.vertex_of[em.tet][kEdgeVertices[em.edge][1]]] += 1;
  }
  for (int k = 0; k < sk.num_triangles; ++k) {
    auto [tet, f] = sk.triangle_slot[k];
    for (int v = 0; v < 4; ++v)
      if (v != f) chi[sk.vertex_of[tet][v]] -= 1;
  }
  for (int i = 0; i < t.size(); ++i)
    for (int v = 0; v < 4; ++v) chi[sk.vertex_of[i][v]] += 1;
  for (int v = 0; v < sk.num_vertices; ++v)
    if (chi[v] != 2)
      r.problems.push_back("vertex " + std::to_string(v) + " link has Euler characteristic " +
                           std::to_string(chi[v]));
  return r;
}

ManifoldReport check_manifold(const Triangulation& t) {
  auto v = validate(t);
  if (!v.valid()) return ManifoldReport{v.problems};
  return check_manifold(t, compute_skeleton(t));
}

Orientation is_orientable(const Triangulation& t) {
  int n = t.size();
  Orientation o;
  o.cocycle.assign(n, {});
  for (int i = 0; i < n; ++i)
    for (int f = 0; f < 4; ++f) o.cocycle[i][f] = t.gluing(i, f).perm.even() ? 1 : 0;

  // Orientations o_t, o_u are compatible across a gluing iff o_u == -sign(perm) * o_t.
  std::vector<int> sign(n, 0);
  sign[0] = 1;
  std::queue<int> q;
  q.push(0);
  bool ok = true;
  int reached = 1;
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    for (int f = 0; f < 4; ++f) {
      const Gluing& g = t.gluing(x, f);
      int want = -g.perm.sign() * sign[x];
      if (sign[g.tet] == 0) {
        sign[g.tet] = want;
        ++reached;
        q.push(g.tet);
      } else if (sign[g.tet] != want) {
        ok = false;
      }
    }
  }
  if (reached != n) throw DomainError("is_orientable: disconnected triangulation");
  o.orientable = ok;
  if (ok) o.tet_sign = std::move(sign);
  return o;
}

int DoubleCover::deck(int cover_tet) const {
  int n = cover.size() / 2;
  return cover_tet < n ? cover_tet + n : cover_tet - n;
}

DoubleCover orientation_double_cover(const Triangulation& t) {
  auto v = validate(t);
  if (!v.valid()) throw DomainError("orientation_double_cover: invalid triangulation");
  if (is_orientable(t).orientable)
    throw DomainError("orientation_double_cover: input is orientable, cover would be disconnected");
  int n = t.size();
  DoubleCover dc;
  dc.cover = Triangulation(2 * n);
  dc.projection.resize(2 * n);
  for (int s = 0; s < 2; ++s)
    for (int i = 0; i < n; ++i) {
      dc.projection[i + s * n] = i;
      for (int f = 0; f < 4; ++f) {
        const Gluing& g = t.gluing(i, f);
        int s2 = s ^ (g.perm.even() ? 1 : 0);
        int from = i + s * n, to = g.tet + s2 * n;
        if (dc.cover.gluing(from, f).glued()) continue;
        dc.cover.join(from, f, to, g.perm);
      }
    }
  return dc;
}

Triangulation relabel(const Triangulation& t, const std::vector<int>& tet_map,
                      const std::vector<Perm4>& vertex_map) {
  int n = t.size();
  Triangulation r(n);
  for (int i = 0; i < n; ++i)
    for (int f = 0; f < 4; ++f) {
      const Gluing& g = t.gluing(i, f);
      if (!g.glued()) continue;
      int ni = tet_map[i], nf = vertex_map[i][f];
      if (r.gluing(ni, nf).glued()) continue;
      r.join(ni, nf, tet_map[g.tet], vertex_map[g.tet] * g.perm * vertex_map[i].inverse());
    }
  return r;
}

std::string to_text(const Triangulation& t) {
  std::ostringstream os;
  os << t.size() << ";";
  for (int i = 0; i < t.size(); ++i)
    for (int f = 0; f < 4; ++f) {
      const Gluing& g = t.gluing(i, f);
      if (!g.glued()) continue;
      if (g.tet < i || (g.tet == i && g.face < f)) continue;
      os << " t" << i << "f" << f << "->t" << g.tet << "f" << g.face << ":" << g.perm.str() << ";";
    }
  std::string s = os.str();
  if (s.back() == ';' && t.size() > 0 && s.find("->") != std::string::npos) s.pop_back();
  return s;
}

Triangulation from_text(std::string_view text) {
  std::string s(text);
  auto semi = s.find(';');
  std::string head = s.substr(0, semi);
  static const std::regex num_re(R"(^\s*(\d+)\s*$)");
  std::smatch m;
  if (!std::regex_match(head, m, num_re)) throw ParseError("triangulation text: bad tetrahedron count");
  int n = std::stoi(m[1]);
  if (n > 100000) throw ParseError("triangulation text: tetrahedron count too large");
  Triangulation t(n);
  if (semi == std::string::npos) return t;
  static const std::regex entry_re(R"(^\s*t(\d+)f([0-3])\s*->\s*t(\d+)f([0-3])\s*:\s*([0-3]{4})\s*$)");
  std::string rest = s.substr(semi + 1);
  std::stringstream ss(rest);
  std::string item;
  while (std::getline(ss, item, ';')) {
    if (item.find_first_not_of(" \t\r\n") == std::string::npos) continue;
    if (!std::regex_match(item, m, entry_re)) throw ParseError("triangulation text: bad gluing '" + item + "'");
    int a = std::stoi(m[1]), f = std::stoi(m[2]), b = std::stoi(m[3]), g = std::stoi(m[4]);
    auto p = Perm4::parse(m[5].str());
    if (!p) throw ParseError("triangulation text: bad permutation '" + m[5].str() + "'");
    if (a >= n || b >= n) throw ParseError("triangulation text: tetrahedron index out of range");
    if ((*p)[f] != g) throw ParseError("triangulation text: permutation does not carry face to face");
    const Gluing& cur = t.gluing(a, f);
    if (cur.glued()) {
      if (cur.tet == b && cur.face == g && cur.perm == *p) continue;
      throw ParseError("triangulation text: face glued twice");
    }
    try {
      t.join(a, f, b, *p);
    } catch (const DomainError& e) {
      throw ParseError(std::string("triangulation text: ") + e.what());
    }
  }
  return t;
}

}  // namespace nonori
