#pragma once

#include <array>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "nonori/homology.hpp"
#include "nonori/records.hpp"
#include "nonori/triangulation.hpp"

namespace nonori {

// Connected 4-regular multigraph with loops; adj[i][i] counts loops at i.
struct FacePairingGraph {
  int n = 0;
  std::vector<std::vector<int>> adj;
  std::string str() const;
  bool operator==(const FacePairingGraph&) const = default;
};

// All face-pairing graphs on n nodes up to isomorphism, in canonical form,
// sorted.
std::vector<FacePairingGraph> face_pairing_graphs(int n);

struct PruneOptions {
  bool low_degree = false;
  bool loop_edge = false;
  bool edge_hit_twice = false;
  bool small_embedded_face = false;
  bool sw_sphere = false;

  static PruneOptions all();
  static PruneOptions none() { return {}; }
  // "all", "none" or a comma separated list of predicate names.
  static PruneOptions parse(std::string_view s);
  bool any_leaf() const { return loop_edge || edge_hit_twice || small_embedded_face || sw_sphere; }
};

struct EnumerateOptions {
  int n = 1;
  bool non_orientable_only = false;
  PruneOptions prune;
  std::set<std::string> fingerprints;  // keep only these, when non-empty
  int threads = 1;
  std::vector<int> graph_subset;  // indices into face_pairing_graphs(n); empty means all
  std::string checkpoint_dir;     // one file per face-pairing graph
  std::function<void(int done, int total)> progress;
};

struct EnumerateStats {
  int graphs = 0;
  long long leaves = 0;  // one-vertex closed gluings reached
  long long kept = 0;    // before isomorphism dedup
  long long nodes = 0;   // partial gluings visited
};

// Closed one-vertex triangulations with n tetrahedra up to isomorphism, as
// sorted isomorphism signatures.
std::vector<std::string> enumerate(const EnumerateOptions& opt, EnumerateStats* stats = nullptr);

struct Target {
  std::string name;
  int complexity;
  std::string description;
  Fingerprint fingerprint;
  int cover_complexity;  // of the orientation double cover, from the orientable census
};

// The eight closed non-orientable P^2-irreducible manifolds of complexity
// at most 7, with fingerprints frozen from the presentation oracle.
const std::vector<Target>& target_table();

struct Recognition {
  Fingerprint fingerprint;
  std::vector<std::string> matches;  // target or record names
  std::string verdict() const;       // "unknown", the name, or "ambiguous{a,b}"
};


Recognition recognize(const Triangulation& t, const std::vector<CensusRecord>& records = {});

// A triangulation whose fingerprint matches targets. Its orientation cover
// has a simple spine with `cover_bound` vertices: 2n from the two-ball dual
// of the cover minus one face, or fewer from the punch-and-collapse
// certificate. It cannot be a matched target if the bound is below that
// target's cover complexity.
struct CollisionAudit {
  Recognition recognition;
  int n = 0;
  int cover_bound = 0;
  std::string bound_source;
  bool excluded = false;  // every matched target is ruled out
};
CollisionAudit audit_collision(const Triangulation& t);

}  // namespace nonori
