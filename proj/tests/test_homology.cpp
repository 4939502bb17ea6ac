#include <random>

#include "doctest.h"
#include "nonori/census.hpp"
#include "nonori/error.hpp"
#include "nonori/homology.hpp"
#include "nonori/layered.hpp"
#include "nonori/smith.hpp"
#include "oracles.hpp"

using namespace nonori;

TEST_CASE("smith form factors as U D V") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    int r = 1 + static_cast<int>(rng() % 5), c = 1 + static_cast<int>(rng() % 5);
    IntMatrix b(r, c);
    for (auto& x : b.a) x = static_cast<int>(rng() % 13) - 6;
    SmithResult s = smith_normal_form(b);
    CHECK(multiply(multiply(s.U, s.D), s.V) == to_big(b));
    for (int i = 0; i < s.D.rows; ++i)
      for (int j = 0; j < s.D.cols; ++j)
        if (i != j) CHECK(s.D(i, j) == 0);
    for (std::size_t i = 0; i + 1 < s.diagonal.size(); ++i) CHECK(s.diagonal[i + 1] % s.diagonal[i] == 0);
    CHECK(invariant_factors(b) == s.diagonal);
  }
}

TEST_CASE("smith form survives int64 overflow") {
  IntMatrix b(2, 2);
  b(0, 0) = 3037000499LL;
  b(0, 1) = 3037000498LL;
  b(1, 0) = 3037000498LL;
  b(1, 1) = 3037000497LL;
  auto f = invariant_factors(b);
  REQUIRE(f.size() == 2);
  CHECK(f[0] == 1);
  CHECK(f[1] == 1);
}

TEST_CASE("homology of torus bundles matches the presentation oracle") {
  for (GL2Z a : {GL2Z{1, 1, 1, 0}, GL2Z{2, 1, 1, 0}, GL2Z{2, 1, 1, 1}, GL2Z{5, 2, 2, 1}, GL2Z{1, 0, 0, -1},
                 GL2Z{0, 1, 1, 0}, GL2Z{3, 1, 2, 1}, GL2Z{-2, -1, -1, -1}}) {
    CAPTURE(a.str());
    Triangulation t = layered_torus_bundle(a);
    oracle::Presentation p = oracle::torus_bundle(a);
    CHECK(h1_integral(t) == oracle::abelianize(p));
    CHECK(h1_z2(t) == oracle::abelianize(p).z2_dimension());
    if (a.det() == -1) CHECK(fingerprint(t) == oracle::fingerprint(p));
  }
}

TEST_CASE("target fingerprints equal the presentation oracle") {
  std::map<std::string, Fingerprint> want;
  for (const auto& [name, p] : oracle::klein_bundles()) want[name] = oracle::fingerprint(p);
  want["Sol c=6 bundle"] = oracle::fingerprint(oracle::torus_bundle(GL2Z{1, 1, 1, 0}));
  want["Sol c=7 bundle"] = oracle::fingerprint(oracle::torus_bundle(GL2Z{2, 1, 1, 0}));
  want["H2xR RP2;(2,1)(3,1)"] = oracle::fingerprint(oracle::seifert_rp2_23());
  want["H2xR Dbar;(2,1)(3,1)"] = oracle::fingerprint(oracle::seifert_dbar_23());
  REQUIRE(target_table().size() == 8);
  for (const Target& t : target_table()) {
    CAPTURE(t.name);
    REQUIRE(want.count(t.name));
    CHECK(t.fingerprint == want[t.name]);
  }
}

TEST_CASE("fingerprint text form") {
  for (const char* s : {"o;3;", "o;1;2,2", "n;1;;1;", "n;1;2;1;2,2", "n;2;2;3;"}) CHECK(Fingerprint::parse(s).str() == s);
  CHECK_THROWS_AS(Fingerprint::parse("x;1;"), ParseError);
  CHECK_THROWS_AS(Fingerprint::parse("n;1;2"), ParseError);
}

TEST_CASE("w1 vanishes exactly on orientable triangulations") {
  CHECK_FALSE(w1(layered_torus_bundle(GL2Z{2, 1, 1, 1})).nonzero);
  CHECK(w1(layered_torus_bundle(GL2Z{1, 1, 1, 0})).nonzero);
}

TEST_CASE("cover of the A bundle has the fingerprint of the A^2 bundle") {
  for (GL2Z a : {GL2Z{1, 1, 1, 0}, GL2Z{2, 1, 1, 0}}) {
    DoubleCover dc = orientation_double_cover(layered_torus_bundle(a));
    CHECK(fingerprint(dc.cover) == fingerprint(layered_torus_bundle(a * a)));
  }
}
