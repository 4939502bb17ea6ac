#include "nonori/spine.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include <boost/dynamic_bitset.hpp>

#include "nonori/error.hpp"

namespace nonori {

namespace {

// Tetrahedron edges lying on face f.
std::array<int, 3> face_edges(int f) {
  std::array<int, 3> out{};
  int c = 0;
  for (int k = 0; k < 6; ++k)
    if (kEdgeVertices[k][0] != f && kEdgeVertices[k][1] != f) out[c++] = k;
  return out;
}

struct ParityUnionFind {
  std::vector<int> parent, parity;
  explicit ParityUnionFind(int n) : parent(n), parity(n, 0) { std::iota(parent.begin(), parent.end(), 0); }
  std::pair<int, int> find(int x) {
    int p = 0;
    while (parent[x] != x) {
      p ^= parity[x];
      x = parent[x];
    }
    return {x, p};
  }
  // Imposes value(a) ^ value(b) == rel; false on contradiction.
  bool unite(int a, int b, int rel) {
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    if (ra == rb) return (pa ^ pb) == rel;
    parent[ra] = rb;
    parity[ra] = pa ^ pb ^ rel;
    return true;
  }
};

// Number of chosen germs at each tet face, i.e. at each end of a spine edge.
int chosen_on_face(const SpecialSpineView& sp, const std::vector<bool>& faces, int tet, int f) {
  int c = 0;
  for (int k : face_edges(f)) c += faces[sp.sk.edge_of[tet][k]] ? 1 : 0;
  return c;
}

}  // namespace

int SpecialSpineView::distinct_vertices(int face) const {
  std::set<int> s;
  for (const FaceCorner& c : boundary[face]) s.insert(c.vertex);
  return static_cast<int>(s.size());
}

std::array<int, 3> SpecialSpineView::faces_at_edge(int e) const {
  auto [t, f] = sk.triangle_slot[e];
  auto k = face_edges(f);
  return {sk.edge_of[t][k[0]], sk.edge_of[t][k[1]], sk.edge_of[t][k[2]]};
}

SpecialSpineView dual_polyhedron(const Triangulation& t) {
  auto rep = validate(t);
  if (!rep.valid()) throw DomainError("dual spine: " + rep.problems.front());
  SpecialSpineView sp;
  sp.tri = t;
  sp.sk = compute_skeleton(t);
  sp.boundary.resize(sp.sk.num_edges);
  for (int e = 0; e < sp.sk.num_edges; ++e)
    for (const EdgeEmbedding& emb : sp.sk.edge_ring[e])
      sp.boundary[e].push_back({emb.tet, sp.sk.triangle_of[emb.tet][emb.exit_face]});
  sp.edge_ends.resize(sp.sk.num_triangles);
  for (int e = 0; e < sp.sk.num_triangles; ++e) {
    auto [tet, f] = sp.sk.triangle_slot[e];
    sp.edge_ends[e] = {tet, t.gluing(tet, f).tet};
  }
  return sp;
}

SpecialSpineView dual_spine(const Triangulation& t) {
  SpecialSpineView sp = dual_polyhedron(t);
  if (sp.sk.num_vertices != 1)
    throw DomainError("dual_spine: triangulation has " + std::to_string(sp.sk.num_vertices) +
                      " vertices, expected 1");
  return sp;
}

SWSurface surface_from_faces(const SpecialSpineView& sp, const std::vector<bool>& faces) {
  if (static_cast<int>(faces.size()) != sp.num_faces()) throw DomainError("surface: face mask has wrong size");
  SWSurface s;
  s.faces = faces;
  s.num_faces = static_cast<int>(std::count(faces.begin(), faces.end(), true));

  for (int e = 0; e < sp.num_edges(); ++e) {
    auto [t, f] = sp.sk.triangle_slot[e];
    int c = chosen_on_face(sp, faces, t, f);
    if (c % 2 != 0) throw DomainError("surface: spine edge " + std::to_string(e) + " meets an odd number of faces");
    if (c == 2) ++s.g_edges;
  }

  std::vector<int> vertex_kind(sp.num_vertices(), 0);
  for (int v = 0; v < sp.num_vertices(); ++v) {
    std::array<bool, 6> on{};
    int c = 0;
    for (int k = 0; k < 6; ++k) {
      on[k] = faces[sp.sk.edge_of[v][k]];
      c += on[k];
    }
    if (c == 3) {
      // Must be the three edges at one corner: the surface cuts off that corner.
      bool star = false;
      for (int i = 0; i < 4 && !star; ++i) {
        star = true;
        for (int k = 0; k < 6; ++k)
          if (on[k] != (kEdgeVertices[k][0] == i || kEdgeVertices[k][1] == i)) star = false;
      }
      if (!star) throw DomainError("surface: vertex " + std::to_string(v) + " has a non-disc neighbourhood");
      ++s.n3;
    } else if (c == 4) {
      bool cycle = false;
      for (int k = 0; k < 3; ++k)
        if (!on[k] && !on[5 - k]) cycle = true;
      if (!cycle) throw DomainError("surface: vertex " + std::to_string(v) + " has a non-disc neighbourhood");
      ++s.n4;
    } else if (c != 0) {
      throw DomainError("surface: vertex " + std::to_string(v) + " has a non-disc neighbourhood");
    }
    vertex_kind[v] = c;
  }

  // Orient each face along its ring. A spine edge is passed by exactly two
  // chosen ring steps; orientations agree iff the steps run opposite ways.
  int nf = sp.num_faces();
  std::vector<std::vector<std::array<int, 2>>> passes(sp.num_edges());  // (face, direction)
  for (int e = 0; e < nf; ++e) {
    if (!faces[e]) continue;
    for (const EdgeEmbedding& emb : sp.sk.edge_ring[e]) {
      int tau = sp.sk.triangle_of[emb.tet][emb.exit_face];
      auto slot = sp.sk.triangle_slot[tau];
      int dir = (slot[0] == emb.tet && slot[1] == emb.exit_face) ? 0 : 1;
      passes[tau].push_back({e, dir});
    }
  }
  ParityUnionFind orient(nf);
  std::vector<int> comp(nf);
  std::iota(comp.begin(), comp.end(), 0);
  std::function<int(int)> root = [&](int x) { return comp[x] == x ? x : comp[x] = root(comp[x]); };
  for (int tau = 0; tau < sp.num_edges(); ++tau) {
    const auto& p = passes[tau];
    if (p.empty()) continue;
    if (p.size() != 2) throw DomainError("surface: spine edge " + std::to_string(tau) + " is not a surface edge");
    // Opposite directions with equal face orientations: rel = dir0 ^ dir1 ^ 1.
    if (!orient.unite(p[0][0], p[1][0], p[0][1] ^ p[1][1] ^ 1)) s.orientable = false;
    comp[root(p[0][0])] = root(p[1][0]);
  }

  std::vector<int> comp_index(nf, -1);
  std::vector<int> comp_v, comp_e, comp_f;
  for (int e = 0; e < nf; ++e) {
    if (!faces[e]) continue;
    int r = root(e);
    if (comp_index[r] < 0) {
      comp_index[r] = static_cast<int>(comp_f.size());
      comp_v.push_back(0);
      comp_e.push_back(0);
      comp_f.push_back(0);
    }
    ++comp_f[comp_index[r]];
  }
  for (int tau = 0; tau < sp.num_edges(); ++tau)
    if (!passes[tau].empty()) ++comp_e[comp_index[root(passes[tau][0][0])]];
  for (int v = 0; v < sp.num_vertices(); ++v) {
    if (!vertex_kind[v]) continue;
    for (int k = 0; k < 6; ++k) {
      int e = sp.sk.edge_of[v][k];
      if (faces[e]) {
        ++comp_v[comp_index[root(e)]];
        break;
      }
    }
  }
  s.component_orientable.assign(comp_f.size(), true);
  for (int tau = 0; tau < sp.num_edges(); ++tau) {
    const auto& p = passes[tau];
    if (p.empty()) continue;
    auto [r0, q0] = orient.find(p[0][0]);
    auto [r1, q1] = orient.find(p[1][0]);
    if ((q0 ^ q1) != (p[0][1] ^ p[1][1] ^ 1)) s.component_orientable[comp_index[root(p[0][0])]] = false;
    (void)r0;
    (void)r1;
  }
  for (std::size_t c = 0; c < comp_f.size(); ++c) s.component_euler.push_back(comp_v[c] - comp_e[c] + comp_f[c]);
  s.euler = (s.n3 + s.n4) - s.g_edges + s.num_faces;
  return s;
}

SWSurface sw_surface(const SpecialSpineView& sp, const W1Class& w) {
  const Triangulation& t = sp.tri;
  int n = t.size(), nf = sp.num_faces();
  if (static_cast<int>(w.bits.size()) != n) throw DomainError("sw_surface: class does not match the triangulation");
  using Row = boost::dynamic_bitset<>;
  std::vector<Row> rows;

  for (int tau = 0; tau < sp.num_edges(); ++tau) {
    Row r(nf + 1);
    for (int e : sp.faces_at_edge(tau)) r.flip(e);
    rows.push_back(r);
  }

  // Dual spanning tree and one loop per non-tree gluing.
  std::vector<std::array<int, 2>> parent(n, {-1, -1});  // (tet, face) leading here
  std::vector<bool> seen(n, false);
  std::vector<std::array<bool, 4>> tree(n, {false, false, false, false});
  std::queue<int> q;
  seen[0] = true;
  q.push(0);
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    for (int f = 0; f < 4; ++f) {
      const Gluing& g = t.gluing(x, f);
      if (seen[g.tet]) continue;
      seen[g.tet] = true;
      parent[g.tet] = {x, f};
      tree[x][f] = true;
      tree[g.tet][g.face] = true;
      q.push(g.tet);
    }
  }
  auto path_from_root = [&](int x) {
    std::vector<std::array<int, 2>> p;
    while (parent[x][0] >= 0) {
      p.push_back(parent[x]);
      x = parent[x][0];
    }
    std::reverse(p.begin(), p.end());
    return p;
  };
  for (int x = 0; x < n; ++x)
    for (int f = 0; f < 4; ++f) {
      const Gluing& g = t.gluing(x, f);
      if (tree[x][f] || std::make_pair(g.tet, g.face) < std::make_pair(x, f)) continue;
      std::vector<std::array<int, 2>> cross = path_from_root(x);
      cross.push_back({x, f});
      auto back = path_from_root(g.tet);
      for (auto it = back.rbegin(); it != back.rend(); ++it) {
        const Gluing& h = t.gluing((*it)[0], (*it)[1]);
        cross.push_back({h.tet, h.face});
      }
      // Push the dual loop onto the 1-skeleton by dragging a corner along.
      Row r(nf + 1);
      int tet = 0, corner = 0;
      for (auto [ct, cf] : cross) {
        if (ct != tet) throw DomainError("sw_surface: internal loop construction error");
        if (corner == cf) {
          int next = (cf + 1) % 4;
          r.flip(sp.sk.edge_of[tet][edge_index(corner, next)]);
          corner = next;
        }
        const Gluing& h = t.gluing(ct, cf);
        corner = h.perm[corner];
        tet = h.tet;
      }
      if (corner != 0) r.flip(sp.sk.edge_of[0][edge_index(corner, 0)]);
      if (w.evaluate(cross)) r.flip(nf);
      rows.push_back(r);
    }

  // Gaussian elimination over Z/2 with the right-hand side in column nf.
  int rank = 0;
  std::vector<int> pivot_col;
  for (int c = 0; c < nf && rank < static_cast<int>(rows.size()); ++c) {
    int p = -1;
    for (int i = rank; i < static_cast<int>(rows.size()); ++i)
      if (rows[i][c]) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(rows[rank], rows[p]);
    for (int i = 0; i < static_cast<int>(rows.size()); ++i)
      if (i != rank && rows[i][c]) rows[i] ^= rows[rank];
    pivot_col.push_back(c);
    ++rank;
  }
  for (int i = rank; i < static_cast<int>(rows.size()); ++i)
    if (rows[i][nf]) throw DomainError("sw_surface: no face subset is dual to the class");
  if (rank != nf)
    throw DomainError("sw_surface: solution is not unique (kernel dimension " + std::to_string(nf - rank) + ")");
  std::vector<bool> x(nf, false);
  for (int i = 0; i < rank; ++i) x[pivot_col[i]] = rows[i][nf];
  return surface_from_faces(sp, x);
}

SWSurface sw_surface(const SpecialSpineView& sp) { return sw_surface(sp, w1(sp.tri)); }

SWSurface lift_surface(const SpecialSpineView& base, const SWSurface& sigma, const SpecialSpineView& cover_sp,
                       const std::vector<int>& projection) {
  std::vector<bool> faces(cover_sp.num_faces(), false);
  for (int e = 0; e < cover_sp.num_faces(); ++e) {
    const EdgeEmbedding& emb = cover_sp.sk.edge_ring[e].front();
    faces[e] = sigma.faces[base.sk.edge_of[projection[emb.tet]][emb.edge]];
  }
  return surface_from_faces(cover_sp, faces);
}

SWSurface surface_between_balls(const SpecialSpineView& cover_sp) {
  if (cover_sp.sk.num_vertices != 2) throw DomainError("surface_between_balls: expected two complementary balls");
  std::vector<bool> faces(cover_sp.num_faces(), false);
  for (int e = 0; e < cover_sp.num_faces(); ++e) {
    const EdgeEmbedding& emb = cover_sp.sk.edge_ring[e].front();
    const auto& ends = kEdgeVertices[emb.edge];
    faces[e] = cover_sp.sk.vertex_of[emb.tet][ends[0]] != cover_sp.sk.vertex_of[emb.tet][ends[1]];
  }
  return surface_from_faces(cover_sp, faces);
}

boost::rational<std::int64_t> face_length_ratio(int n3_pairs, int n4, int euler) {
  std::int64_t f = std::int64_t{euler} + n3_pairs + n4;
  if (f <= 0) throw DomainError("face_length_ratio: chi + n3 + n4 must be a positive face count");
  return {6 * std::int64_t{n3_pairs} + 4 * std::int64_t{n4}, f};
}

FaceLengthStats average_face_length(const SpecialSpineView& cover_sp, const SWSurface& sigma) {
  if (sigma.empty()) throw DomainError("average_face_length: empty surface");
  if (sigma.n3 % 2 != 0) throw DomainError("average_face_length: odd number of 3-valent vertices");
  FaceLengthStats st;
  st.n3_pairs = sigma.n3 / 2;
  st.n4 = sigma.n4;
  st.euler = sigma.euler;
  st.f = sigma.num_faces;
  for (int e = 0; e < cover_sp.num_faces(); ++e)
    if (sigma.faces[e]) st.s += cover_sp.lgh(e);
  st.average = face_length_ratio(st.n3_pairs, st.n4, st.euler);
  if (st.f != st.euler + st.n3_pairs + st.n4 || st.s != 6 * st.n3_pairs + 4 * st.n4)
    throw DomainError("average_face_length: counts disagree with the valence formula");
  return st;
}

FaceChoice find_face_ge5(const SpecialSpineView& cover_sp, const SWSurface& sigma) {
  if (sigma.empty()) throw DomainError("find_face_ge5: empty surface (orientable input?)");
  FaceChoice best;
  for (int e = 0; e < cover_sp.num_faces(); ++e) {
    if (!sigma.faces[e]) continue;
    int d = cover_sp.distinct_vertices(e);
    if (d > best.distinct) best = {e, d, cover_sp.lgh(e)};
  }
  if (best.distinct < 5)
    throw DomainError("find_face_ge5: every surface face meets at most " + std::to_string(best.distinct) +
                      " distinct vertices");
  return best;
}

CollapseResult punch_and_collapse(const SpecialSpineView& sp, const SWSurface& sigma, int face) {
  if (face < 0 || face >= sp.num_faces() || !sigma.faces[face])
    throw DomainError("punch_and_collapse: face is not in the surface");
  int nv = sp.num_vertices(), ne = sp.num_edges(), nf = sp.num_faces();
  std::vector<bool> alive_v(nv, true), alive_e(ne, true), alive_f(nf, true);
  std::vector<int> face_count(ne, 0), edge_count(nv, 0);
  for (int f = 0; f < nf; ++f)
    for (const FaceCorner& c : sp.boundary[f]) ++face_count[c.edge];
  for (int e = 0; e < ne; ++e) {
    ++edge_count[sp.edge_ends[e][0]];
    ++edge_count[sp.edge_ends[e][1]];
  }
  auto kill_face = [&](int f) {
    alive_f[f] = false;
    for (const FaceCorner& c : sp.boundary[f]) --face_count[c.edge];
  };
  auto kill_edge = [&](int e) {
    alive_e[e] = false;
    --edge_count[sp.edge_ends[e][0]];
    --edge_count[sp.edge_ends[e][1]];
  };

  kill_face(face);
  bool progress = true;
  while (progress) {
    progress = false;
    for (int e = 0; e < ne; ++e) {
      if (!alive_e[e] || face_count[e] != 1) continue;
      int owner = -1;
      for (int f = 0; f < nf && owner < 0; ++f)
        if (alive_f[f])
          for (const FaceCorner& c : sp.boundary[f])
            if (c.edge == e) owner = f;
      kill_face(owner);
      kill_edge(e);
      progress = true;
    }
    for (int e = 0; e < ne; ++e) {
      if (!alive_e[e] || face_count[e] != 0) continue;
      auto [a, b] = sp.edge_ends[e];
      int free_end = a != b && edge_count[a] == 1 ? a : (a != b && edge_count[b] == 1 ? b : -1);
      if (free_end < 0) continue;
      kill_edge(e);
      alive_v[free_end] = false;
      progress = true;
    }
  }

  CollapseResult r;
  r.killed_by_face = sp.distinct_vertices(face);
  int v_alive = 0;
  for (int v = 0; v < nv; ++v) {
    if (!alive_v[v]) continue;
    ++v_alive;
    bool whole = true;
    for (int k = 0; k < 6; ++k) whole = whole && alive_f[sp.sk.edge_of[v][k]];
    r.remaining_vertices += whole;
  }
  r.remaining_edges = static_cast<int>(std::count(alive_e.begin(), alive_e.end(), true));
  r.remaining_faces = static_cast<int>(std::count(alive_f.begin(), alive_f.end(), true));
  r.euler = v_alive - r.remaining_edges + r.remaining_faces;
  return r;
}

std::string PruningFlags::str() const {
  std::string s;
  auto add = [&](bool b, const char* name) {
    if (!b) return;
    if (!s.empty()) s += ",";
    s += name;
  };
  add(low_degree, "low_degree");
  add(loop_edge, "loop_edge");
  add(edge_hit_twice, "edge_hit_twice");
  add(small_embedded_face, "small_embedded_face");
  add(forbidden_square, "forbidden_square");
  add(sw_sphere, "sw_sphere");
  return s.empty() ? "none" : s;
}

namespace {

bool has_loop_edge(const SpecialSpineView& sp, const SWSurface& s) {
  for (int tau = 0; tau < sp.num_edges(); ++tau) {
    auto [t, f] = sp.sk.triangle_slot[tau];
    if (chosen_on_face(sp, s.faces, t, f) == 2 && sp.edge_ends[tau][0] == sp.edge_ends[tau][1]) return true;
  }
  return false;
}

bool embedded(const SpecialSpineView& sp, int f) {
  std::set<int> v, e;
  for (const FaceCorner& c : sp.boundary[f]) {
    if (!v.insert(c.vertex).second || !e.insert(c.edge).second) return false;
  }
  return true;
}

std::vector<bool> g_edges(const SpecialSpineView& sp, const SWSurface& s) {
  std::vector<bool> g(sp.num_edges(), false);
  for (int tau = 0; tau < sp.num_edges(); ++tau) {
    auto [t, f] = sp.sk.triangle_slot[tau];
    g[tau] = chosen_on_face(sp, s.faces, t, f) == 2;
  }
  return g;
}

int chosen_germs(const SpecialSpineView& sp, const SWSurface& s, int v) {
  int c = 0;
  for (int k = 0; k < 6; ++k) c += s.faces[sp.sk.edge_of[v][k]];
  return c;
}

}  // namespace

PruningFlags pruning_predicates(const Triangulation& t) {
  PruningFlags fl;
  SpecialSpineView sp = dual_spine(t);
  int n = t.size();
  bool orientable = is_orientable(t).orientable;
  // Below three tetrahedra the exceptions with short faces are all
  // orientable, so non-orientable inputs are checked at every size.
  if (n >= 3 || !orientable) {
    for (int e = 0; e < sp.num_faces(); ++e) {
      int d = sp.lgh(e);
      if (d <= 2 || (d == 3 && sp.distinct_vertices(e) == 3)) fl.low_degree = true;
      if (d <= 3 && embedded(sp, e)) fl.small_embedded_face = true;
    }
  }
  if (orientable) return fl;

  SWSurface sigma = sw_surface(sp);
  for (int c : sigma.component_euler)
    if (c == 2) fl.sw_sphere = true;
  fl.loop_edge = has_loop_edge(sp, sigma);

  DoubleCover dc = orientation_double_cover(t);
  SpecialSpineView csp = dual_polyhedron(dc.cover);
  SWSurface lift = lift_surface(sp, sigma, csp, dc.projection);
  fl.loop_edge = fl.loop_edge || has_loop_edge(csp, lift);
  std::vector<bool> g = g_edges(csp, lift);
  for (int f = 0; f < csp.num_faces(); ++f) {
    bool in_sigma = lift.faces[f];
    bool boundary_in_g = true;
    std::vector<int> seen_g;
    for (const FaceCorner& c : csp.boundary[f]) {
      if (!g[c.edge]) {
        boundary_in_g = false;
        continue;
      }
      if (std::find(seen_g.begin(), seen_g.end(), c.edge) != seen_g.end() && in_sigma) fl.edge_hit_twice = true;
      seen_g.push_back(c.edge);
    }
    if (boundary_in_g && csp.lgh(f) <= 3 && embedded(csp, f)) fl.small_embedded_face = true;
    if (in_sigma && csp.lgh(f) == 4 && embedded(csp, f)) {
      const auto& b = csp.boundary[f];
      std::array<int, 4> val{};
      for (int i = 0; i < 4; ++i) val[i] = chosen_germs(csp, lift, b[i].vertex);
      if (val[0] != val[2] && val[1] != val[3]) fl.forbidden_square = true;
    }
  }
  return fl;
}

LemmaCertificate lemma_pipeline(const Triangulation& t) {
  LemmaCertificate c;
  c.n = t.size();
  auto fail = [&](std::string msg) {
    c.failure = std::move(msg);
    return c;
  };
  try {
    if (is_orientable(t).orientable) return fail("input is orientable");
    SpecialSpineView sp = dual_spine(t);
    c.sigma = sw_surface(sp);
    if (c.sigma.empty()) return fail("surface is empty");
    if (!c.sigma.orientable) return fail("surface is not orientable");
    if (c.sigma.euler > 0) return fail("surface has chi > 0");
    DoubleCover dc = orientation_double_cover(t);
    SpecialSpineView csp = dual_polyhedron(dc.cover);
    c.sigma_lift = lift_surface(sp, c.sigma, csp, dc.projection);
    c.lift_matches_balls = c.sigma_lift == surface_between_balls(csp);
    if (!c.lift_matches_balls) return fail("lift differs from the faces between the two balls");
    if (c.sigma_lift.euler != 2 * c.sigma.euler) return fail("chi of the lift is not twice chi of the surface");
    c.stats = average_face_length(csp, c.sigma_lift);
    if (c.stats.average < boost::rational<std::int64_t>(4)) return fail("average face length below 4");
    c.face = find_face_ge5(csp, c.sigma_lift);
    c.collapse = punch_and_collapse(csp, c.sigma_lift, c.face.face);
    if (c.collapse.euler != 1) return fail("collapsed polyhedron has chi != 1");
    if (c.collapse.remaining_vertices > 2 * c.n - c.face.distinct) return fail("collapse left too many vertices");
    if (c.collapse.remaining_vertices > 2 * c.n - 5) return fail("collapse count exceeds 2n - 5");
  } catch (const DomainError& e) {
    return fail(e.what());
  }
  c.ok = true;
  return c;
}

std::string dump(const SpecialSpineView& sp) {
  std::ostringstream os;
  os << "spine vertices=" << sp.num_vertices() << " edges=" << sp.num_edges() << " faces=" << sp.num_faces()
     << "\n";
  for (int f = 0; f < sp.num_faces(); ++f) {
    os << "face " << f << " lgh=" << sp.lgh(f) << " distinct=" << sp.distinct_vertices(f) << " :";
    for (const FaceCorner& c : sp.boundary[f]) os << " v" << c.vertex << "/e" << c.edge;
    os << "\n";
  }
  return os.str();
}

std::string dump(const SpecialSpineView& sp, const SWSurface& s) {
  std::ostringstream os;
  os << "surface faces={";
  bool first = true;
  for (int f = 0; f < sp.num_faces(); ++f)
    if (s.faces[f]) {
      os << (first ? "" : ",") << f;
      first = false;
    }
  os << "} lengths={";
  first = true;
  for (int f = 0; f < sp.num_faces(); ++f)
    if (s.faces[f]) {
      os << (first ? "" : ",") << sp.lgh(f);
      first = false;
    }
  os << "} n3=" << s.n3 << " n4=" << s.n4 << " chi=" << s.euler << " orientable=" << (s.orientable ? 1 : 0)
     << " components=" << s.component_euler.size() << "\n";
  return os.str();
}

}  // namespace nonori
