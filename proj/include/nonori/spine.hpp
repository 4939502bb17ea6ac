#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "nonori/homology.hpp"
#include "nonori/triangulation.hpp"

namespace nonori {

// One step of a face boundary: the face passes spine vertex `vertex`
// (a tetrahedron) and then runs along spine edge `edge` (a triangle class).
struct FaceCorner {
  int vertex;
  int edge;
};

// Dual 2-skeleton of a triangulation. Spine vertices are tetrahedra, spine
// edges are triangle classes, spine faces are edge classes.
struct SpecialSpineView {
  Triangulation tri;
  Skeleton sk;
  std::vector<std::vector<FaceCorner>> boundary;  // per face, cyclic
  std::vector<std::array<int, 2>> edge_ends;      // per spine edge, its two vertices

  int num_vertices() const { return tri.size(); }
  int num_edges() const { return sk.num_triangles; }
  int num_faces() const { return sk.num_edges; }
  int lgh(int face) const { return static_cast<int>(boundary[face].size()); }
  int distinct_vertices(int face) const;
  // Faces of the three germs at spine edge e (edges of the triangle class).
  std::array<int, 3> faces_at_edge(int e) const;
};

// Requires a valid closed one-vertex triangulation.
SpecialSpineView dual_spine(const Triangulation& t);
// Same construction without the one-vertex requirement; used for covers,
// whose complement is one ball per vertex.
SpecialSpineView dual_polyhedron(const Triangulation& t);

struct SWSurface {
  std::vector<bool> faces;
  int num_faces = 0;
  // Vertices of G = S(P) ∩ Σ by valence, and edges of G.
  int n3 = 0;
  int n4 = 0;
  int g_edges = 0;
  int euler = 0;
  bool orientable = true;
  std::vector<int> component_euler;
  std::vector<bool> component_orientable;

  bool empty() const { return num_faces == 0; }
  bool operator==(const SWSurface& o) const { return faces == o.faces; }
};

// Builds the surface data for a face subset. Throws DomainError if some
// spine edge meets an odd number of chosen germs or a vertex neighbourhood
// is not a disc.
SWSurface surface_from_faces(const SpecialSpineView& sp, const std::vector<bool>& faces);

// The unique face subset that is a Z/2 cycle dual to w. Solves the cycle
// rows plus one pairing row per fundamental dual loop and throws unless the
// solution exists and the kernel is trivial.
SWSurface sw_surface(const SpecialSpineView& sp, const W1Class& w);
SWSurface sw_surface(const SpecialSpineView& sp);

// Pre-image in the cover spine of a surface in the base spine.
SWSurface lift_surface(const SpecialSpineView& base, const SWSurface& sigma, const SpecialSpineView& cover_sp,
                       const std::vector<int>& projection);
// Faces of a two-vertex spine whose dual edge joins the two vertices, i.e.
// faces adjacent to both complementary balls.
SWSurface surface_between_balls(const SpecialSpineView& cover_sp);

struct FaceLengthStats {
  int n3_pairs = 0;  // half the number of 3-valent vertices
  int n4 = 0;
  int euler = 0;
  int f = 0;
  int s = 0;
  boost::rational<std::int64_t> average;
};

// s/f from the valence counts; throws if chi + n3 + n4 <= 0.
boost::rational<std::int64_t> face_length_ratio(int n3_pairs, int n4, int euler);
FaceLengthStats average_face_length(const SpecialSpineView& cover_sp, const SWSurface& sigma);

struct FaceChoice {
  int face = -1;
  int distinct = 0;
  int lgh = 0;
};
// Face of the surface with the most distinct adjacent vertices; throws if
// fewer than 5.
FaceChoice find_face_ge5(const SpecialSpineView& cover_sp, const SWSurface& sigma);

struct CollapseResult {
  int remaining_vertices = 0;
  int remaining_edges = 0;
  int remaining_faces = 0;
  int killed_by_face = 0;  // distinct vertices adjacent to the punched face
  int euler = 0;
};
// Removes `face`, then collapses free edges and free vertices greedily.
// A spine vertex survives iff all six face germs at it survive.
CollapseResult punch_and_collapse(const SpecialSpineView& cover_sp, const SWSurface& sigma, int face);

struct PruningFlags {
  bool low_degree = false;  // degree <= 2 edge, or degree 3 on three tetrahedra
  bool loop_edge = false;
  bool edge_hit_twice = false;
  bool small_embedded_face = false;
  bool forbidden_square = false;  // detection only, never used to prune
  bool sw_sphere = false;         // Σ has a sphere component

  bool any_pruning() const { return low_degree || loop_edge || edge_hit_twice || small_embedded_face || sw_sphere; }
  std::string str() const;
};

PruningFlags pruning_predicates(const Triangulation& t);

struct LemmaCertificate {
  int n = 0;
  SWSurface sigma;
  SWSurface sigma_lift;
  bool lift_matches_balls = false;
  FaceLengthStats stats;
  FaceChoice face;
  CollapseResult collapse;
  bool ok = false;
  std::string failure;
};

// Runs the full chain on a non-orientable one-vertex triangulation and
// records the first failing check instead of throwing.
LemmaCertificate lemma_pipeline(const Triangulation& t);

std::string dump(const SpecialSpineView& sp);
std::string dump(const SpecialSpineView& sp, const SWSurface& sigma);

}  // namespace nonori
