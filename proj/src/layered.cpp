#include "nonori/layered.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <tuple>
#include <vector>

#include "nonori/error.hpp"

namespace nonori {

namespace {

using Slope = std::array<std::int64_t, 2>;
using Tri = std::array<Slope, 3>;

Slope normalized(Slope s) {
  if (s[0] < 0 || (s[0] == 0 && s[1] < 0)) return {-s[0], -s[1]};
  return s;
}

Tri make_tri(Slope a, Slope b, Slope c) {
  Tri t{normalized(a), normalized(b), normalized(c)};
  std::sort(t.begin(), t.end());
  return t;
}

Slope act(const GL2Z& m, Slope s) { return {m.a * s[0] + m.b * s[1], m.c * s[0] + m.d * s[1]}; }
Tri act(const GL2Z& m, const Tri& t) { return make_tri(act(m, t[0]), act(m, t[1]), act(m, t[2])); }

bool same_slope(Slope p, Slope q) { return normalized(p) == normalized(q); }

// The two slopes other than t[k], signed so that t[k] == +-(v + w).
std::pair<Slope, Slope> edge_basis(const Tri& t, int k) {
  Slope v = t[(k + 1) % 3], w = t[(k + 2) % 3];
  if (!same_slope({v[0] + w[0], v[1] + w[1]}, t[k])) w = {-w[0], -w[1]};
  return {v, w};
}

Tri flip(const Tri& t, int k) {
  auto [v, w] = edge_basis(t, k);
  return make_tri(v, w, {v[0] - w[0], v[1] - w[1]});
}

bool contains(const Tri& t, Slope s) {
  s = normalized(s);
  return t[0] == s || t[1] == s || t[2] == s;
}

// Index k such that y lies beyond the edge of x opposite x[k].
int branch_toward(const Tri& x, const Tri& y) {
  Slope s{};
  bool found = false;
  for (const Slope& c : y)
    if (!contains(x, c)) {
      s = c;
      found = true;
      break;
    }
  if (!found) throw DomainError("farey: target equals source");
  for (int k = 0; k < 3; ++k) {
    auto [v, w] = edge_basis(x, k);
    std::int64_t det = v[0] * w[1] - v[1] * w[0];
    std::int64_t alpha = (s[0] * w[1] - s[1] * w[0]) / det;
    std::int64_t beta = (v[0] * s[1] - v[1] * s[0]) / det;
    if ((alpha < 0 && beta > 0) || (alpha > 0 && beta < 0)) return k;
  }
  throw DomainError("farey: no branch contains the target");
}

std::vector<Tri> geodesic(const Tri& from, const Tri& to) {
  std::vector<Tri> path{from};
  Tri cur = from;
  while (cur != to) {
    cur = flip(cur, branch_toward(cur, to));
    path.push_back(cur);
    if (path.size() > 100000) throw DomainError("farey: geodesic too long");
  }
  return path;
}

int distance(const Tri& x, const Tri& y) { return static_cast<int>(geodesic(x, y).size()) - 1; }

const Tri kBase = make_tri({1, 0}, {0, 1}, {1, 1});

void require_unimodular(const GL2Z& a) {
  if (!a.unimodular()) throw DomainError("monodromy must have determinant +-1");
}

// Triangles on the geodesic from the base to its image under g; for a tree
// automorphism this meets every triangle of minimal displacement's axis.
std::vector<Tri> candidates(const GL2Z& g) { return geodesic(kBase, act(g, kBase)); }

struct Vertex3 {
  Slope pos;
  int level;
};

struct Tet {
  std::array<Vertex3, 4> v;
};

// Vertex correspondence between face f1 of t1 and face f2 of t2 when
// m * p + shift carries the first face's points onto the second's.
std::optional<Perm4> match_faces(const Tet& t1, int f1, const Tet& t2, int f2, const GL2Z& m, bool use_level) {
  std::array<int, 3> a{}, b{};
  for (int i = 0, c = 0; i < 4; ++i)
    if (i != f1) a[c++] = i;
  for (int i = 0, c = 0; i < 4; ++i)
    if (i != f2) b[c++] = i;
  std::array<int, 3> perm{0, 1, 2};
  do {
    Slope p0 = act(m, t1.v[a[0]].pos);
    Slope q0 = t2.v[b[perm[0]]].pos;
    Slope shift{q0[0] - p0[0], q0[1] - p0[1]};
    bool ok = true;
    for (int k = 0; k < 3 && ok; ++k) {
      Slope p = act(m, t1.v[a[k]].pos);
      const Vertex3& q = t2.v[b[perm[k]]];
      if (p[0] + shift[0] != q.pos[0] || p[1] + shift[1] != q.pos[1]) ok = false;
      if (use_level && t1.v[a[k]].level != q.level) ok = false;
    }
    if (ok) {
      std::array<int, 4> im{};
      im[f1] = f2;
      for (int k = 0; k < 3; ++k) im[a[k]] = b[perm[k]];
      return Perm4::from_images(im[0], im[1], im[2], im[3]);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

bool face_at_level(const Tet& t, int f, int level) {
  for (int i = 0; i < 4; ++i)
    if (i != f && t.v[i].level != level) return false;
  return true;
}

}  // namespace

int lr_norm(const GL2Z& a) {
  require_unimodular(a);
  int best = -1;
  for (const Tri& s : candidates(a)) {
    int d = distance(s, act(a, s));
    if (best < 0 || d < best) best = d;
  }
  return best;
}

LayeredBundle layered_torus_bundle_detail(const GL2Z& a) {
  require_unimodular(a);
  if (a.is_identity()) throw DomainError("layered_torus_bundle: identity monodromy is degenerate");
  GL2Z ainv = a.inverse();

  // Bottom triangulation s, core top s2 (a neighbour of s), layers walk from
  // s2 to A^-1 s. Minimize the walk over triangles near the axis.
  Tri best_s{}, best_s2{};
  int best_len = -1;
  for (const Tri& s : candidates(ainv)) {
    Tri target = act(ainv, s);
    for (int k = 0; k < 3; ++k) {
      Tri s2 = flip(s, k);
      int len = distance(s2, target);
      if (best_len < 0 || len < best_len) {
        best_len = len;
        best_s = s;
        best_s2 = s2;
      }
    }
  }

  // Cube axes x, y along the shared edge {v, w} of s and s2, with v + w on s.
  Slope v{}, w{};
  for (int k = 0; k < 3; ++k)
    if (!contains(best_s2, best_s[k])) std::tie(v, w) = edge_basis(best_s, k);
  auto lift = [&](int x, int y, int z) {
    return Vertex3{{x * v[0] + y * w[0], x * v[1] + y * w[1]}, z};
  };

  // Six tetrahedra of a cube whose bottom diagonal joins (0,0)-(1,1) and top
  // diagonal joins (1,0)-(0,1); opposite side faces carry parallel diagonals.
  const int cube[6][4][3] = {
      {{0, 0, 0}, {0, 0, 1}, {0, 1, 1}, {1, 0, 1}}, {{0, 0, 0}, {0, 1, 0}, {0, 1, 1}, {1, 1, 1}},
      {{0, 0, 0}, {0, 1, 0}, {1, 1, 0}, {1, 1, 1}}, {{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 1}},
      {{0, 0, 0}, {1, 0, 0}, {1, 0, 1}, {1, 1, 1}}, {{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {1, 1, 1}}};
  std::vector<Tet> tets;
  for (const auto& c : cube) {
    Tet t;
    for (int i = 0; i < 4; ++i) t.v[i] = lift(c[i][0], c[i][1], c[i][2]);
    tets.push_back(t);
  }

  int n = 6 + best_len;
  LayeredBundle out;
  out.layers = best_len;
  out.tri = Triangulation(n);
  Triangulation& tri = out.tri;
  const GL2Z id{};

  for (int t1 = 0; t1 < 6; ++t1)
    for (int f1 = 0; f1 < 4; ++f1) {
      if (tri.gluing(t1, f1).glued() || face_at_level(tets[t1], f1, 0) || face_at_level(tets[t1], f1, 1)) continue;
      bool done = false;
      for (int t2 = 0; t2 < 6 && !done; ++t2)
        for (int f2 = 0; f2 < 4 && !done; ++f2) {
          if ((t1 == t2 && f1 == f2) || tri.gluing(t2, f2).glued()) continue;
          if (auto p = match_faces(tets[t1], f1, tets[t2], f2, id, true)) {
            tri.join(t1, f1, t2, *p);
            done = true;
          }
        }
      if (!done) throw DomainError("layered_torus_bundle: core face without partner");
    }

  struct Face {
    int tet, face;
  };
  std::vector<Face> top, bottom;
  for (int t = 0; t < 6; ++t)
    for (int f = 0; f < 4; ++f) {
      if (face_at_level(tets[t], f, 1)) top.push_back({t, f});
      if (face_at_level(tets[t], f, 0)) bottom.push_back({t, f});
    }

  auto glue_onto = [&](std::vector<Face>& surface, int t1, int f1, const GL2Z& m) {
    for (std::size_t i = 0; i < surface.size(); ++i) {
      auto [t2, f2] = surface[i];
      if (auto p = match_faces(tets[t1], f1, tets[t2], f2, m, false)) {
        tri.join(t1, f1, t2, *p);
        surface.erase(surface.begin() + static_cast<long>(i));
        return;
      }
    }
    throw DomainError("layered_torus_bundle: layer does not fit the surface");
  };

  Tri cur = best_s2, target = act(ainv, best_s);
  while (cur != target) {
    int k = branch_toward(cur, target);
    auto [p, q] = edge_basis(cur, k);
    // Parallelogram 0, p, q, p+q with old diagonal p+q and new diagonal q-p.
    Tet t;
    t.v[0] = {{0, 0}, 1};
    t.v[1] = {p, 1};
    t.v[2] = {q, 1};
    t.v[3] = {{p[0] + q[0], p[1] + q[1]}, 1};
    int id_new = static_cast<int>(tets.size());
    tets.push_back(t);
    glue_onto(top, id_new, 2, id);
    glue_onto(top, id_new, 1, id);
    top.push_back({id_new, 3});
    top.push_back({id_new, 0});
    cur = flip(cur, k);
  }

  // Top point x is identified with bottom point A x.
  for (auto [t, f] : std::vector<Face>(top)) glue_onto(bottom, t, f, a);

  auto rep = validate(tri);
  if (!rep.valid()) throw DomainError("layered_torus_bundle: construction produced an invalid triangulation");
  return out;
}

Triangulation layered_torus_bundle(const GL2Z& a) { return layered_torus_bundle_detail(a).tri; }

}  // namespace nonori
