#pragma once

#include "nonori/gl2z.hpp"
#include "nonori/triangulation.hpp"

namespace nonori {

// Minimal displacement of A on the dual tree of the Farey tessellation,
// min over Farey triangles s of dist(s, A s). For hyperbolic A with det +1
// this is the length of the cyclically reduced L/R word of its class; for
// det -1 it is half the word length of A^2.
int lr_norm(const GL2Z& a);

struct LayeredBundle {
  Triangulation tri;
  int core_tets = 6;
  int layers = 0;
};

// One-vertex triangulation of the torus bundle with monodromy A: a 6
// tetrahedron T x I whose two boundary tori differ by one diagonal flip,
// followed by one layered tetrahedron per further flip, top glued to bottom
// by A. Throws for A = identity and |det A| != 1.
LayeredBundle layered_torus_bundle_detail(const GL2Z& a);
Triangulation layered_torus_bundle(const GL2Z& a);

}  // namespace nonori
