#include <filesystem>
#include <fstream>
#include <set>

#include "doctest.h"
#include "nonori/census.hpp"
#include "nonori/error.hpp"
#include "nonori/isosig.hpp"
#include "nonori/layered.hpp"
#include "nonori/records.hpp"
#include "oracles.hpp"

using namespace nonori;

namespace {

std::set<std::string> sig_set(const std::vector<std::string>& v) { return {v.begin(), v.end()}; }

EnumerateOptions opts(int n, bool non_orientable = false, PruneOptions prune = PruneOptions::none()) {
  EnumerateOptions o;
  o.n = n;
  o.non_orientable_only = non_orientable;
  o.prune = prune;
  return o;
}

}  // namespace

TEST_CASE("face pairing graph counts") {
  std::vector<std::size_t> want{1, 2, 4, 10, 28};
  for (int n = 1; n <= 5; ++n) {
    auto gs = face_pairing_graphs(n);
    CHECK(gs.size() == want[n - 1]);
    for (const auto& g : gs) {
      for (int i = 0; i < n; ++i) {
        int deg = 2 * g.adj[i][i];
        for (int j = 0; j < n; ++j)
          if (j != i) deg += g.adj[i][j];
        CHECK(deg == 4);
      }
    }
  }
}

TEST_CASE("enumeration matches the brute-force oracle") {
  for (int n = 1; n <= 2; ++n) {
    std::set<std::string> want;
    for (const auto& t : oracle::census(n)) want.insert(iso_sig(t));
    CHECK(sig_set(enumerate(opts(n))) == want);
  }
}

TEST_CASE("labeled gluings collapse to the same classes") {
  for (int n = 1; n <= 2; ++n) {
    std::vector<Triangulation> classes;
    for (const auto& t : oracle::labeled_census(n)) {
      bool seen = false;
      for (const auto& c : classes)
        if (oracle::isomorphic(t, c)) {
          seen = true;
          break;
        }
      if (!seen) classes.push_back(t);
    }
    CHECK(classes.size() == enumerate(opts(n)).size());
  }
}

TEST_CASE("enumerated triangulations are closed one-vertex manifolds") {
  for (int n = 1; n <= 3; ++n)
    for (const auto& s : enumerate(opts(n))) {
      Triangulation t = from_iso_sig(s);
      CHECK(validate(t).valid());
      CHECK(vertex_count(t) == 1);
      CHECK(check_manifold(t).closed_manifold());
    }
}

TEST_CASE("pruning only removes") {
  for (int n = 1; n <= 4; ++n) {
    auto all = sig_set(enumerate(opts(n, true)));
    auto pruned = sig_set(enumerate(opts(n, true, PruneOptions::all())));
    for (const auto& s : pruned) CHECK(all.count(s));
    auto any = sig_set(enumerate(opts(n)));
    for (const auto& s : all) CHECK(any.count(s));
  }
}

TEST_CASE("thread count and graph order do not change the output") {
  EnumerateOptions a = opts(4);
  EnumerateOptions b = opts(4);
  b.threads = 3;
  EnumerateOptions c = opts(4);
  for (int i = 9; i >= 0; --i) c.graph_subset.push_back(i);
  auto ra = enumerate(a);
  CHECK(enumerate(b) == ra);
  CHECK(enumerate(c) == ra);
  CHECK(std::is_sorted(ra.begin(), ra.end()));
}

TEST_CASE("checkpoints resume to the same output") {
  auto dir = std::filesystem::temp_directory_path() / "nonori_ckpt_test";
  std::filesystem::remove_all(dir);
  EnumerateOptions o = opts(4, true);
  o.checkpoint_dir = dir.string();
  EnumerateStats first, second;
  auto r1 = enumerate(o, &first);
  auto r2 = enumerate(o, &second);
  CHECK(r1 == r2);
  CHECK(first.nodes > 0);
  CHECK(second.nodes == 0);
  CHECK(r1 == enumerate(opts(4, true)));
  std::filesystem::remove_all(dir);
}

TEST_CASE("fingerprint filter") {
  EnumerateOptions o = opts(4, true);
  Fingerprint f = fingerprint(from_iso_sig(enumerate(o).front()));
  o.fingerprints = {f.str()};
  for (const auto& s : enumerate(o)) CHECK(fingerprint(from_iso_sig(s)) == f);
}

TEST_CASE("prune option parsing") {
  CHECK_FALSE(PruneOptions::parse("none").any_leaf());
  PruneOptions p = PruneOptions::parse("low_degree,sw_sphere");
  CHECK(p.low_degree);
  CHECK(p.sw_sphere);
  CHECK_FALSE(p.loop_edge);
  CHECK(PruneOptions::parse("all").small_embedded_face);
  CHECK_THROWS_AS(PruneOptions::parse("bogus"), ParseError);
}

TEST_CASE("recognition") {
  CHECK(recognize(layered_torus_bundle(GL2Z{2, 1, 1, 0})).verdict() == "Sol c=7 bundle");
  // The c=6 Sol bundle shares its fingerprint with an H2xR target.
  Recognition r = recognize(layered_torus_bundle(GL2Z{1, 1, 1, 0}));
  CHECK(r.matches.size() == 2);
  CHECK(r.verdict().rfind("ambiguous{", 0) == 0);
  CHECK(r.verdict().find("Sol c=6 bundle") != std::string::npos);
  // Orientable inputs only meet orientable records.
  Triangulation ori = layered_torus_bundle(GL2Z{2, 1, 1, 1});
  CHECK(recognize(ori).verdict() == "unknown");
  CensusRecord rec = parse_record("X|7|Sol|bundle:[[2,1],[1,1]]|" + fingerprint(ori).str() + "|-");
  CHECK(recognize(ori, {rec}).verdict() == "X");
}

TEST_CASE("collision audit") {
  CollisionAudit a = audit_collision(layered_torus_bundle(GL2Z{2, 1, 1, 0}));
  CHECK(a.n == 7);
  CHECK_FALSE(a.excluded);
  for (const auto& s : enumerate(opts(4, true, PruneOptions::all()))) {
    CollisionAudit c = audit_collision(from_iso_sig(s));
    if (!c.recognition.matches.empty()) CHECK(c.excluded);
  }
}

TEST_CASE("record ingestion") {
  CHECK(ingest_orientable_census_text("").empty());
  CHECK(ingest_orientable_census_text("# only a comment\n\n").empty());
  auto recs = ingest_orientable_census(default_census_path());
  CHECK(recs.size() > 20);
  for (const auto& r : recs) CHECK(parse_record(r.str()).str() == r.str());

  try {
    ingest_orientable_census_text("G1|6|E3|flat:G1|-|-\nbad line\n");
    FAIL("no throw");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  try {
    ingest_orientable_census_text("\nN|7|Nil|seifert:T;;0|-|-\n");
    FAIL("no throw");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(std::string(e.what()).find("inconsistent record") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_record("S|7|H2xR|bundle:[[2,1],[1,1]]|-|-"), ParseError);
  CHECK_THROWS_AS(parse_record("S|7|Sol|bundle:[[1,1],[1,0]]|-|-"), ParseError);
  CHECK_THROWS_AS(ingest_orientable_census("/nonexistent/file"), DomainError);
}

TEST_CASE("filter on single records") {
  FilterResult s2 = filter_orientable_record(parse_record("A|8|H2xR|seifert:S2;(2,1)(3,1)(2,-1)(3,-1)|-|-"));
  REQUIRE(s2.quotients.size() == 2);
  CHECK(s2.quotients[0].name == "(RP2,(2,1),(3,1))");
  CHECK(s2.quotients[1].name == "(Dbar,(2,1),(3,1))");
  CHECK(filter_orientable_record(parse_record("B|8|H2xR|seifert:RP2~;(3,1)(3,-1)|-|-")).quotients.empty());
  FilterResult k = filter_orientable_record(parse_record("C|7|H2xR|decomp:K:D;(2,1)(3,1)|-|-"));
  CHECK(k.quotients.empty());
  CHECK(k.reason == "odd number of K's");
  FilterResult sol = filter_orientable_record(parse_record("D|7|Sol|bundle:[[2,1],[1,1]]|-|-"));
  REQUIRE(sol.quotients.size() == 1);
  CHECK(sol.quotients[0].monodromy);
  CHECK(filter_orientable_record(parse_record("E|8|Sol|bundle:[[3,1],[2,1]]|-|-")).quotients.empty());
  CHECK(filter_orientable_record(parse_record("F|9|Hyp|hyperbolic|-|-")).quotients.empty());
}

TEST_CASE("classification report") {
  ClassificationReport r = reproduce_classification(ingest_orientable_census(default_census_path()));
  CHECK(r.counts == std::array<int, 8>{0, 0, 0, 0, 0, 0, 5, 3});
  CHECK(r.bullets.size() == 4);
  CHECK(r.manifolds.size() == 8);
  for (const auto& m : r.manifolds) {
    CAPTURE(m.name);
    CHECK(m.bound_consistent);
    CHECK(m.lower == m.upper);
  }
  CHECK(reproduce_classification({}).counts == std::array<int, 8>{});
}
