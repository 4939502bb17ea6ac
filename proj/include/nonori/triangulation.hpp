#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "nonori/perm.hpp"

namespace nonori {

// Face f of a tetrahedron is the face opposite vertex f. A gluing of (t, f) to
// (u, g) carries vertex i of t to vertex perm[i] of u, so perm[f] == g.
struct Gluing {
  int tet = -1;
  int face = -1;
  Perm4 perm;

  bool glued() const { return tet >= 0; }
  bool operator==(const Gluing&) const = default;
};

class Triangulation {
 public:
  Triangulation() = default;
  explicit Triangulation(int n) : g_(n) {}

  int size() const { return static_cast<int>(g_.size()); }
  const Gluing& gluing(int tet, int face) const { return g_[tet][face]; }

  // Glues (tet, face) to (other, perm[face]) and the reverse slot with perm^-1.
  void join(int tet, int face, int other, Perm4 perm);
  void unjoin(int tet, int face);
  // Writes a single slot without touching its partner; only for building
  // deliberately broken inputs.
  void set_raw(int tet, int face, Gluing g) { g_[tet][face] = g; }

  bool operator==(const Triangulation&) const = default;

 private:
  std::vector<std::array<Gluing, 4>> g_;
};

struct ValidityReport {
  std::vector<std::string> problems;
  bool valid() const { return problems.empty(); }
};

// Checks the structural invariants: nonempty, closed, involutive, no face
// glued to itself, connected.
ValidityReport validate(const Triangulation& t);

// One edge of the ring around an edge class: tetrahedron edge `edge` of `tet`,
// with sign +1 when its vertex order agrees with the class orientation.
// `exit_face` is the face of `tet` through which the ring continues.
struct EdgeEmbedding {
  int tet;
  int edge;
  int sign;
  int exit_face;
};

struct Skeleton {
  int num_vertices = 0;
  std::vector<std::array<int, 4>> vertex_of;  // [tet][corner]
  int num_edges = 0;
  std::vector<std::array<int, 6>> edge_of;    // [tet][tet edge]
  std::vector<std::array<int, 6>> edge_sign;  // +1 / -1 relative to the class
  std::vector<std::vector<EdgeEmbedding>> edge_ring;
  std::vector<bool> edge_valid;               // false if identified with itself reversed
  int num_triangles = 0;
  std::vector<std::array<int, 4>> triangle_of;      // [tet][face]
  std::vector<std::array<int, 2>> triangle_slot;    // representative (tet, face)

  int degree(int e) const { return static_cast<int>(edge_ring[e].size()); }
  bool all_edges_valid() const;
};

// Precondition: validate(t).valid().
Skeleton compute_skeleton(const Triangulation& t);

int vertex_count(const Triangulation& t);

struct ManifoldReport {
  std::vector<std::string> problems;
  bool closed_manifold() const { return problems.empty(); }
};

// Invalid edges and vertex links that are not spheres.
ManifoldReport check_manifold(const Triangulation& t, const Skeleton& sk);
ManifoldReport check_manifold(const Triangulation& t);

struct Orientation {
  bool orientable = false;
  // +1/-1 per tetrahedron when orientable.
  std::vector<int> tet_sign;
  // 1 when the gluing reverses the standard vertex orientations, i.e. its
  // permutation is even. This is the raw w1 cocycle.
  std::vector<std::array<std::uint8_t, 4>> cocycle;
};

Orientation is_orientable(const Triangulation& t);

struct DoubleCover {
  Triangulation cover;
  // Cover tetrahedron t + s*n lies over base tetrahedron t on sheet s.
  std::vector<int> projection;
  int deck(int cover_tet) const;
};

DoubleCover orientation_double_cover(const Triangulation& t);

// Applies tetrahedron relabeling tet_map (old -> new) and per-tetrahedron
// vertex relabelings vertex_map[old tet] (old vertex -> new vertex).
Triangulation relabel(const Triangulation& t, const std::vector<int>& tet_map,
                      const std::vector<Perm4>& vertex_map);

// Text form: "n; t0f1->t2f3:1023; ..." listing each gluing once.
std::string to_text(const Triangulation& t);
Triangulation from_text(std::string_view text);

}  // namespace nonori
