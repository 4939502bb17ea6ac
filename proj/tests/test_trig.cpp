#include <random>

#include "doctest.h"
#include "nonori/error.hpp"
#include "nonori/isosig.hpp"
#include "nonori/layered.hpp"
#include "nonori/triangulation.hpp"

using namespace nonori;

namespace {

Triangulation shuffled(const Triangulation& t, std::mt19937& rng) {
  int n = t.size();
  std::vector<int> tm(n);
  for (int i = 0; i < n; ++i) tm[i] = i;
  std::shuffle(tm.begin(), tm.end(), rng);
  std::vector<Perm4> vm(n);
  for (auto& p : vm) p = Perm4::from_code(static_cast<int>(rng() % 24));
  return relabel(t, tm, vm);
}

}  // namespace

TEST_CASE("perm4 group tables") {
  for (int a = 0; a < 24; ++a) {
    Perm4 p = Perm4::from_code(a);
    CHECK((p * p.inverse()).is_identity());
    for (int b = 0; b < 24; ++b) {
      Perm4 q = Perm4::from_code(b);
      for (int i = 0; i < 4; ++i) CHECK((p * q)[i] == p[q[i]]);
      CHECK((p * q).sign() == p.sign() * q.sign());
    }
  }
  CHECK(Perm4::parse("1023")->sign() == -1);
  CHECK_FALSE(Perm4::parse("1123"));
  for (int k = 0; k < 6; ++k)
    CHECK(edge_index(kEdgeVertices[k][0], kEdgeVertices[k][1]) == k);
}

TEST_CASE("validate reports structural problems") {
  CHECK_FALSE(validate(Triangulation(0)).valid());
  Triangulation t(1);
  t.join(0, 0, 0, Perm4::from_images(1, 0, 2, 3));
  CHECK_FALSE(validate(t).valid());  // two faces open
  t.join(0, 2, 0, Perm4::from_images(0, 1, 3, 2));
  CHECK(validate(t).valid());
  Triangulation bad = t;
  bad.set_raw(0, 2, Gluing{0, 2, Perm4()});
  CHECK_FALSE(validate(bad).valid());
}

TEST_CASE("skeleton of a one-vertex bundle") {
  Triangulation t = layered_torus_bundle(GL2Z{1, 1, 1, 0});
  REQUIRE(validate(t).valid());
  Skeleton sk = compute_skeleton(t);
  CHECK(t.size() == 6);
  CHECK(sk.num_vertices == 1);
  CHECK(sk.num_edges == t.size() + 1);
  CHECK(sk.num_triangles == 2 * t.size());
  int total = 0;
  for (int e = 0; e < sk.num_edges; ++e) total += sk.degree(e);
  CHECK(total == 6 * t.size());
  CHECK(sk.all_edges_valid());
  CHECK(check_manifold(t, sk).closed_manifold());
}

TEST_CASE("orientation double cover") {
  for (GL2Z a : {GL2Z{1, 1, 1, 0}, GL2Z{2, 1, 1, 0}, GL2Z{1, 0, 0, -1}}) {
    Triangulation t = layered_torus_bundle(a);
    CHECK_FALSE(is_orientable(t).orientable);
    DoubleCover dc = orientation_double_cover(t);
    CHECK(dc.cover.size() == 2 * t.size());
    CHECK(validate(dc.cover).valid());
    CHECK(is_orientable(dc.cover).orientable);
    CHECK(vertex_count(dc.cover) == 2);
    for (int c = 0; c < dc.cover.size(); ++c) {
      CHECK(dc.projection[c] == c % t.size());
      CHECK(dc.deck(dc.deck(c)) == c);
    }
  }
  Triangulation ori = layered_torus_bundle(GL2Z{2, 1, 1, 1});
  CHECK(is_orientable(ori).orientable);
  CHECK_THROWS_AS(orientation_double_cover(ori), DomainError);
}

TEST_CASE("text form round trip") {
  Triangulation t = layered_torus_bundle(GL2Z{2, 1, 1, 0});
  CHECK(from_text(to_text(t)) == t);
  CHECK_THROWS_AS(from_text("2; t0f0->t9f1:0123"), ParseError);
}

TEST_CASE("iso_sig is a relabeling invariant") {
  std::mt19937 rng(7);
  for (GL2Z a : {GL2Z{1, 1, 1, 0}, GL2Z{2, 1, 1, 0}, GL2Z{2, 1, 1, 1}, GL2Z{0, 1, 1, 0}}) {
    Triangulation t = layered_torus_bundle(a);
    std::string sig = iso_sig(t);
    for (int k = 0; k < 20; ++k) CHECK(iso_sig(shuffled(t, rng)) == sig);
    Triangulation back = from_iso_sig(sig);
    CHECK(iso_sig(back) == sig);
    CHECK(validate(back).valid());
  }
  CHECK(iso_sig(layered_torus_bundle(GL2Z{1, 1, 1, 0})) != iso_sig(layered_torus_bundle(GL2Z{0, 1, 1, 0})));
}

TEST_CASE("layered bundle sizes follow the L/R norm") {
  CHECK(lr_norm(GL2Z{1, 1, 1, 0}) == 1);
  CHECK(lr_norm(GL2Z{2, 1, 1, 1}) == 2);
  CHECK(lr_norm(GL2Z{2, 1, 1, 0}) == 2);
  CHECK(lr_norm(GL2Z{5, 2, 2, 1}) == 4);
  CHECK(layered_torus_bundle(GL2Z{1, 1, 1, 0}).size() == 6);
  CHECK(layered_torus_bundle(GL2Z{2, 1, 1, 0}).size() == 7);
  CHECK_THROWS_AS(layered_torus_bundle(GL2Z{}), DomainError);
  CHECK_THROWS_AS(layered_torus_bundle(GL2Z{2, 0, 0, 1}), DomainError);
}
