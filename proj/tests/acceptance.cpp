// Acceptance checks. Each criterion prints one line
//   criterion K: PASS|FAIL (seconds) detail
// and the process exits non-zero on FAIL.
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "nonori/census.hpp"
#include "nonori/homology.hpp"
#include "nonori/isosig.hpp"
#include "nonori/layered.hpp"
#include "nonori/records.hpp"
#include "nonori/seifert.hpp"
#include "nonori/sol.hpp"
#include "nonori/spine.hpp"
#include "oracles.hpp"

using namespace nonori;

namespace {

// Time budgets in seconds.
constexpr double kBudget1 = 1.0;
constexpr double kBudget2 = 10.0;
constexpr double kBudget3 = 1.0;
constexpr double kBudget4 = 5.0;
constexpr double kBudget5 = 1.0;
constexpr double kBudget6 = 30 * 60.0;
constexpr double kBudget7 = 10 * 60.0;

// n = 7 sample for criterion 6: every kSampleStride-th face-pairing graph.
constexpr int kSampleStride = 5;

struct Outcome {
  bool ok = true;
  std::ostringstream detail;
  void fail(const std::string& why) {
    ok = false;
    detail << " [" << why << "]";
  }
};

template <class T>
std::string join(const T& xs) {
  std::string s = "{";
  bool first = true;
  for (const auto& x : xs) {
    s += (first ? "" : ", ") + x;
    first = false;
  }
  return s + "}";
}

std::string tuple_str(const std::vector<std::int64_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

void criterion1(Outcome& o) {
  Rational thr(-1, 6);
  std::set<std::string> got_manifolds;
  for (const auto& m : small_h2r_manifolds(thr)) got_manifolds.insert(m.str());
  std::set<std::string> want_manifolds{"RP2;(2,1)(3,1)", "Dbar;(2,1)(3,1)"};
  if (got_manifolds != want_manifolds) o.fail("manifolds " + join(got_manifolds));
  o.detail << " manifolds=" << join(got_manifolds);

  std::set<std::string> triples, divisible, parity;
  for (const auto& f : enumerate_small_orbifolds(thr)) {
    if (f.base != BaseSymbol::S2 || f.cone_count() != 3) continue;
    triples.insert(f.str());
    FamilyScan s = scan_family(f);
    for (const auto& v : s.divisible) divisible.insert(tuple_str(v));
    for (const auto& v : s.realizable) parity.insert(tuple_str(v));
  }
  std::set<std::string> want_triples{"S2(2,3,>=7)", "S2(3,3,4..6)", "S2(2,4,5..12)"};
  std::set<std::string> want_divisible{"(2,4,8)"};
  o.detail << " triples=" << join(triples) << " divisible=" << join(divisible) << " parity=" << join(parity);
  if (triples != want_triples) o.fail("triple families differ from " + join(want_triples));
  if (divisible != want_divisible) o.fail("divisible set differs from {(2,4,8)}");
  if (!parity.empty()) o.fail("some triple passes parity");
}

void criterion2(Outcome& o) {
  std::map<std::int64_t, std::set<std::string>> classes;
  int scanned = 0, identity_failures = 0;
  for (int a = -5; a <= 5; ++a)
    for (int b = -5; b <= 5; ++b)
      for (int c = -5; c <= 5; ++c)
        for (int d = -5; d <= 5; ++d) {
          GL2Z m{a, b, c, d};
          if (m.det() != -1) continue;
          ++scanned;
          TraceSquare ts = tr_square_identity(m);
          if (!ts.holds() || ts.trace_square != m.trace() * m.trace() + 2) ++identity_failures;
          std::int64_t t = m.trace() < 0 ? -m.trace() : m.trace();
          if (t == 1 || t == 2) classes[t].insert(normalize(m).rep.str());
        }
  o.detail << " scanned=" << scanned << " |tr|=1 classes=" << join(classes[1]) << " |tr|=2 classes=" << join(classes[2])
           << " identity failures=" << identity_failures;
  if (classes[1].size() != 1) o.fail("|tr|=1 does not normalize to one class");
  if (classes[2].size() != 1) o.fail("|tr|=2 does not normalize to one class");
  if (identity_failures) o.fail("trace identity failed");
}

void criterion3(Outcome& o) {
  for (char s : {'T', 'K'}) {
    std::multiset<std::size_t> sizes;
    for (const auto& orbit : ibundle_orbits(s)) sizes.insert(orbit.size());
    std::string str;
    for (auto z : sizes) str += (str.empty() ? "" : ",") + std::to_string(z);
    o.detail << " " << s << "={" << str << "}";
    std::multiset<std::size_t> want = s == 'T' ? std::multiset<std::size_t>{1, 3} : std::multiset<std::size_t>{1, 1, 2};
    if (sizes != want) o.fail(std::string("orbit sizes for ") + s);
  }
}

void criterion4(Outcome& o) {
  for (GL2Z a : {GL2Z{1, 1, 1, 0}, GL2Z{2, 1, 1, 0}}) {
    DoubleCover dc = orientation_double_cover(layered_torus_bundle(a));
    Fingerprint cover = fingerprint(dc.cover);
    Fingerprint sq = fingerprint(layered_torus_bundle(a * a));
    o.detail << " " << a.str() << ":" << cover.str() << "/" << sq.str();
    if (!(cover == sq)) o.fail("cover of " + a.str() + " differs from the square bundle");
  }
  const SeifertData want = SeifertData::parse("S2;(2,1)(3,1)(2,-1)(3,-1)");
  for (const char* q : {"RP2;(2,1)(3,1)", "Dbar;(2,1)(3,1)"}) {
    SeifertData c = seifert_double_cover(SeifertData::parse(q));
    auto e = euler_number(c);
    Rational chi = chi_orb(c);
    o.detail << " " << q << "->" << c.str();
    if (!(c == want)) o.fail(std::string("cover of ") + q);
    if (!e || *e != Rational(0)) o.fail("e != 0");
    if (chi != Rational(-1, 3)) o.fail("chi != -1/3");
  }
}

void criterion5(Outcome& o) {
  ClassificationReport r = reproduce_classification(ingest_orientable_census(default_census_path()));
  std::array<int, 8> want{0, 0, 0, 0, 0, 0, 5, 3};
  o.detail << " counts=";
  for (int c : r.counts) o.detail << c;
  if (r.counts != want) o.fail("counts");
  std::vector<std::string> bullets{
      "c(M~)=6: flat, covers G1, G2, quotients flat B1, flat B2, flat B3, flat B4",
      "c(M~)=7: Sol torus bundles, cover (2 1;1 1), quotient (1 1;1 0)",
      "c(M~)=8: H2xR, cover H2xR S2, quotients (RP2,(2,1),(3,1)) and (Dbar,(2,1),(3,1))",
      "c(M~)=9: Sol torus bundles, cover (5 2;2 1), quotient (2 1;1 0)",
  };
  if (r.bullets != bullets) o.fail("bullets:\n" + r.str());
  for (const auto& m : r.manifolds)
    if (!m.bound_consistent) o.fail("bound inconsistent for " + m.name);
}

struct PipelineTally {
  int checked = 0;
  int failures = 0;
  std::string first_failure;
};

void run_pipeline(const std::vector<std::string>& sigs, PipelineTally& tally) {
  for (const auto& s : sigs) {
    LemmaCertificate c = lemma_pipeline(from_iso_sig(s));
    ++tally.checked;
    if (!c.ok) {
      ++tally.failures;
      if (tally.first_failure.empty()) tally.first_failure = s + ": " + c.failure;
    }
  }
}

EnumerateOptions pruned_non_orientable(int n) {
  EnumerateOptions opt;
  opt.n = n;
  opt.non_orientable_only = true;
  opt.prune = PruneOptions::all();
  return opt;
}

void criterion6(Outcome& o) {
  PipelineTally tally;
  for (int n = 1; n <= 6; ++n) {
    auto sigs = enumerate(pruned_non_orientable(n));
    o.detail << " n" << n << "=" << sigs.size();
    run_pipeline(sigs, tally);
  }
  EnumerateOptions seven = pruned_non_orientable(7);
  int total = static_cast<int>(face_pairing_graphs(7).size());
  for (int i = 0; i < total; i += kSampleStride) seven.graph_subset.push_back(i);
  auto sigs = enumerate(seven);
  o.detail << " n7(sample " << seven.graph_subset.size() << "/" << total << " graphs)=" << sigs.size();
  run_pipeline(sigs, tally);
  o.detail << " checked=" << tally.checked << " failures=" << tally.failures;
  if (tally.failures) o.fail(tally.first_failure);
}

void criterion7(Outcome& o) {
  // Exact agreement with the brute-force oracle.
  for (int n = 1; n <= 3; ++n) {
    EnumerateOptions opt;
    opt.n = n;
    auto sigs = enumerate(opt);
    std::set<std::string> from_oracle;
    for (const auto& t : oracle::census(n)) from_oracle.insert(iso_sig(t));
    std::set<std::string> ours(sigs.begin(), sigs.end());
    o.detail << " n" << n << ":" << ours.size() << "/" << from_oracle.size();
    if (ours != from_oracle) o.fail("enumeration differs from the oracle at n=" + std::to_string(n));
  }

  // All five c=6 target fingerprints at n=6.
  std::set<std::string> seen6;
  for (const auto& s : enumerate(pruned_non_orientable(6)))
    seen6.insert(fingerprint(from_iso_sig(s)).str());
  int present = 0;
  for (const Target& t : target_table())
    if (t.complexity == 6) {
      if (seen6.count(t.fingerprint.str()))
        ++present;
      else
        o.fail("missing at n=6: " + t.name);
    }
  o.detail << " c6 targets at n=6: " << present << "/5";

  // No target below n=6, up to audited collisions.
  int raw = 0, excluded = 0;
  for (int n = 1; n <= 5; ++n)
    for (const auto& s : enumerate(pruned_non_orientable(n))) {
      CollisionAudit a = audit_collision(from_iso_sig(s));
      if (a.recognition.matches.empty()) continue;
      ++raw;
      if (a.excluded)
        ++excluded;
      else
        o.fail("unexcluded collision at n=" + std::to_string(n) + ": " + s + " " + a.recognition.verdict());
    }
  o.detail << " n<=5 fingerprint collisions=" << raw << " excluded by cover bound=" << excluded;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance checks"};
  int criterion = 0;
  app.add_option("--criterion", criterion, "criterion number 1..7")->required()->check(CLI::Range(1, 7));
  CLI11_PARSE(app, argc, argv);

  const std::function<void(Outcome&)> checks[] = {criterion1, criterion2, criterion3, criterion4,
                                                   criterion5, criterion6, criterion7};
  const double budgets[] = {kBudget1, kBudget2, kBudget3, kBudget4, kBudget5, kBudget6, kBudget7};

  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  try {
    checks[criterion - 1](o);
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs > budgets[criterion - 1]) o.fail("over budget of " + std::to_string(budgets[criterion - 1]) + "s");
  std::cout << "criterion " << criterion << ": " << (o.ok ? "PASS" : "FAIL") << " (" << secs << "s)"
            << o.detail.str() << "\n";
  return o.ok ? 0 : 1;
}
