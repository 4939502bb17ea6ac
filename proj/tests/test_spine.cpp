#include "doctest.h"
#include "nonori/error.hpp"
#include "nonori/layered.hpp"
#include "nonori/spine.hpp"

using namespace nonori;

TEST_CASE("dual spine counts") {
  Triangulation t = layered_torus_bundle(GL2Z{1, 1, 1, 0});
  SpecialSpineView sp = dual_spine(t);
  CHECK(sp.num_vertices() == 6);
  CHECK(sp.num_edges() == 12);
  CHECK(sp.num_faces() == 7);
  int total = 0;
  for (int f = 0; f < sp.num_faces(); ++f) total += sp.lgh(f);
  CHECK(total == 6 * sp.num_vertices());
  for (int e = 0; e < sp.num_edges(); ++e)
    for (int f : sp.faces_at_edge(e)) CHECK((f >= 0 && f < sp.num_faces()));
  DoubleCover dc = orientation_double_cover(t);
  CHECK_THROWS_AS(dual_spine(dc.cover), DomainError);
  CHECK(dual_polyhedron(dc.cover).num_vertices() == 12);
}

TEST_CASE("SW surface of the (1 1;1 0) bundle") {
  Triangulation t = layered_torus_bundle(GL2Z{1, 1, 1, 0});
  SpecialSpineView sp = dual_spine(t);
  SWSurface s = sw_surface(sp);
  CHECK(s.num_faces == 4);
  for (int f = 0; f < sp.num_faces(); ++f)
    if (s.faces[f]) CHECK(sp.lgh(f) == 5);
  CHECK(s.n3 == 4);
  CHECK(s.n4 == 2);
  CHECK(s.euler == 0);
  CHECK(s.orientable);
  // Uniqueness: the surface is determined by w1 alone.
  CHECK(sw_surface(sp, w1(t)) == s);
}

TEST_CASE("orientable input has the empty surface") {
  SpecialSpineView sp = dual_spine(layered_torus_bundle(GL2Z{2, 1, 1, 1}));
  CHECK(sw_surface(sp).empty());
}

TEST_CASE("surface_from_faces rejects non-cycles") {
  SpecialSpineView sp = dual_spine(layered_torus_bundle(GL2Z{1, 1, 1, 0}));
  std::vector<bool> one(sp.num_faces(), false);
  one[0] = true;
  CHECK_THROWS_AS(surface_from_faces(sp, one), DomainError);
}

TEST_CASE("lifted surface separates the two balls") {
  for (GL2Z a : {GL2Z{1, 1, 1, 0}, GL2Z{2, 1, 1, 0}, GL2Z{1, 0, 0, -1}}) {
    Triangulation t = layered_torus_bundle(a);
    SpecialSpineView sp = dual_spine(t);
    SWSurface s = sw_surface(sp);
    DoubleCover dc = orientation_double_cover(t);
    SpecialSpineView csp = dual_polyhedron(dc.cover);
    SWSurface lift = lift_surface(sp, s, csp, dc.projection);
    CHECK(lift == surface_between_balls(csp));
    CHECK(lift.euler == 2 * s.euler);
    CHECK(lift.orientable);
  }
}

TEST_CASE("face length ratio") {
  CHECK(face_length_ratio(4, 4, 0) == boost::rational<std::int64_t>(5));
  CHECK(face_length_ratio(0, 2, 0) == boost::rational<std::int64_t>(4));
  CHECK_THROWS_AS(face_length_ratio(0, 1, -1), DomainError);
  CHECK_THROWS_AS(face_length_ratio(0, 0, 0), DomainError);
  // s/f >= 4 whenever chi <= 0.
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b)
      for (int chi = -4; chi <= 0; chi += 2)
        if (chi + a + b > 0) CHECK(face_length_ratio(a, b, chi) >= boost::rational<std::int64_t>(4));
}

TEST_CASE("lemma pipeline on layered bundles") {
  struct Row {
    GL2Z a;
    int n;
    int remaining;
  };
  for (Row r : {Row{GL2Z{1, 1, 1, 0}, 6, 7}, Row{GL2Z{2, 1, 1, 0}, 7, 9}, Row{GL2Z{1, 0, 0, -1}, 6, 7}}) {
    LemmaCertificate c = lemma_pipeline(layered_torus_bundle(r.a));
    CAPTURE(r.a.str());
    CHECK(c.ok);
    CHECK(c.failure.empty());
    CHECK(c.n == r.n);
    CHECK(c.stats.average >= boost::rational<std::int64_t>(4));
    CHECK(c.face.distinct >= 5);
    CHECK(c.collapse.remaining_vertices == r.remaining);
    CHECK(c.collapse.remaining_vertices <= 2 * r.n - 5);
    CHECK(c.collapse.euler == 1);
  }
  LemmaCertificate o = lemma_pipeline(layered_torus_bundle(GL2Z{2, 1, 1, 1}));
  CHECK_FALSE(o.ok);
  CHECK(o.failure == "input is orientable");
}

TEST_CASE("pruning predicates") {
  CHECK_FALSE(pruning_predicates(layered_torus_bundle(GL2Z{1, 1, 1, 0})).any_pruning());
  CHECK_FALSE(pruning_predicates(layered_torus_bundle(GL2Z{2, 1, 1, 0})).any_pruning());
  PruningFlags swap = pruning_predicates(layered_torus_bundle(GL2Z{0, 1, 1, 0}));
  CHECK(swap.low_degree);
  CHECK(swap.small_embedded_face);
  CHECK(swap.str() == "low_degree,small_embedded_face");
  CHECK(PruningFlags{}.str() == "none");
}

TEST_CASE("dump format") {
  Triangulation t = layered_torus_bundle(GL2Z{1, 1, 1, 0});
  SpecialSpineView sp = dual_spine(t);
  std::string d = dump(sp, sw_surface(sp));
  CHECK(d.find("surface faces={0,1,2,6}") != std::string::npos);
  CHECK(d.find("n3=4 n4=2 chi=0") != std::string::npos);
  CHECK_FALSE(dump(sp).empty());
}
