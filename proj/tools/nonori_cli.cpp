// nonori: batch front end. Exit status 0 ok, 1 domain error, 2 usage error.
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "nonori/census.hpp"
#include "nonori/error.hpp"
#include "nonori/homology.hpp"
#include "nonori/isosig.hpp"
#include "nonori/layered.hpp"
#include "nonori/records.hpp"
#include "nonori/seifert.hpp"
#include "nonori/sol.hpp"
#include "nonori/spine.hpp"

using namespace nonori;

namespace {

struct Rows {
  std::vector<std::pair<std::string, std::string>> kv;
  void add(std::string k, std::string v) { kv.emplace_back(std::move(k), std::move(v)); }
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void emit(const Rows& r, bool csv) {
  if (csv) std::cout << "key,value\n";
  for (const auto& [k, v] : r.kv) {
    if (csv)
      std::cout << csv_field(k) << "," << csv_field(v) << "\n";
    else
      std::cout << k << ": " << v << "\n";
  }
}

std::string rat(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

// A matrix literal builds the layered bundle, anything else is an iso sig.
Triangulation load_triangulation(const std::string& s) {
  if (s.rfind("[[", 0) == 0) return layered_torus_bundle(GL2Z::parse(s));
  return from_iso_sig(s);
}

std::string census_path(const std::string& data) { return data.empty() ? default_census_path() : data; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Census and recognition tools for small non-orientable 3-manifolds"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "csv"}));
  std::string data;
  app.add_option("--data", data, "orientable census record file (default: shipped data)");

  // enumerate
  auto* en = app.add_subcommand("enumerate", "closed one-vertex triangulations up to isomorphism");
  int n = 1, threads = 1;
  bool non_ori = false, show_fp = false;
  std::string prune = "none", checkpoint;
  std::vector<std::string> fps;
  en->add_option("-n", n, "number of tetrahedra")->required()->check(CLI::Range(1, 8));
  en->add_flag("--non-orientable", non_ori, "keep only non-orientable triangulations");
  en->add_option("--prune", prune, "all, none, or a comma list of predicates");
  en->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
  en->add_option("--fingerprint", fps, "keep only these fingerprints");
  en->add_option("--checkpoint-dir", checkpoint, "per-graph checkpoint directory");
  en->add_flag("--show-fingerprint", show_fp, "print fingerprint and verdict next to each signature");

  // recognize
  auto* rec = app.add_subcommand("recognize", "match a triangulation by fingerprint");
  std::string tri_in;
  rec->add_option("triangulation", tri_in, "iso sig or monodromy [[a,b],[c,d]]")->required();

  // cover
  auto* cov = app.add_subcommand("cover", "orientation double cover");
  cov->add_option("triangulation", tri_in, "iso sig or monodromy [[a,b],[c,d]]")->required();

  // spine-check
  auto* sc = app.add_subcommand("spine-check", "run the surface and spine certificate pipeline");
  bool dump_spine = false;
  sc->add_option("triangulation", tri_in, "iso sig or monodromy [[a,b],[c,d]]")->required();
  sc->add_flag("--dump", dump_spine, "print the dual spine and surface");

  // seifert
  auto* sf = app.add_subcommand("seifert", "Seifert fibration invariants");
  std::string seifert_op, seifert_arg;
  sf->add_option("op", seifert_op, "chi-orb, euler, geometry, cover, orbifolds")
      ->required()
      ->check(CLI::IsMember({"chi-orb", "euler", "geometry", "cover", "orbifolds"}));
  sf->add_option("data", seifert_arg, "Seifert data such as \"RP2;(2,1)(3,1)\", or a threshold for orbifolds");

  // sol
  auto* so = app.add_subcommand("sol", "torus bundle monodromy tools");
  std::string sol_op, matrix;
  so->add_option("op", sol_op, "normalize, classify, roots")
      ->required()
      ->check(CLI::IsMember({"normalize", "classify", "roots"}));
  so->add_option("matrix", matrix, "[[a,b],[c,d]]")->required();

  // filter
  auto* fi = app.add_subcommand("filter", "non-orientable quotients of each orientable record");
  int max_c = 9;
  fi->add_option("--max-c", max_c, "largest record complexity");

  // table1
  auto* tb = app.add_subcommand("table1", "non-orientable counts for c = 0..7");
  bool verbose = false;
  tb->add_flag("--verbose", verbose, "include quotients and excluded records");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  const bool csv = format == "csv";

  // Argument literals are validated up front; a malformed one is a usage error.
  try {
    if (*en) PruneOptions::parse(prune);
    if (*so) GL2Z::parse(matrix);
    if (*sf && seifert_op != "orbifolds" && !seifert_arg.empty()) SeifertData::parse(seifert_arg);
    if (!tri_in.empty()) load_triangulation(tri_in);
  } catch (const ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*en) {
      EnumerateOptions opt;
      opt.n = n;
      opt.non_orientable_only = non_ori;
      opt.prune = PruneOptions::parse(prune);
      opt.threads = threads;
      opt.fingerprints = {fps.begin(), fps.end()};
      opt.checkpoint_dir = checkpoint;
      opt.progress = [](int done, int total) { std::cerr << "graphs " << done << "/" << total << "\n"; };
      EnumerateStats st;
      auto sigs = enumerate(opt, &st);
      if (csv) std::cout << (show_fp ? "iso_sig,fingerprint,verdict\n" : "iso_sig\n");
      for (const auto& s : sigs) {
        if (!show_fp) {
          std::cout << s << "\n";
          continue;
        }
        Recognition r = recognize(from_iso_sig(s));
        if (csv)
          std::cout << s << "," << csv_field(r.fingerprint.str()) << "," << csv_field(r.verdict()) << "\n";
        else
          std::cout << s << " " << r.fingerprint.str() << " " << r.verdict() << "\n";
      }
      std::cerr << "graphs=" << st.graphs << " nodes=" << st.nodes << " leaves=" << st.leaves
                << " kept=" << st.kept << " classes=" << sigs.size() << "\n";
      return 0;
    }
    if (*rec) {
      Triangulation t = load_triangulation(tri_in);
      std::vector<CensusRecord> records;
      if (is_orientable(t).orientable) records = ingest_orientable_census(census_path(data));
      Recognition r = recognize(t, records);
      Rows out;
      out.add("fingerprint", r.fingerprint.str());
      out.add("verdict", r.verdict());
      if (!is_orientable(t).orientable) {
        CollisionAudit a = audit_collision(t);
        out.add("cover_spine_bound", std::to_string(a.cover_bound) + " (" + a.bound_source + ")");
        if (!r.matches.empty()) out.add("excluded_by_cover_bound", a.excluded ? "yes" : "no");
      }
      out.add("note", "fingerprint level: consistent with, not homeomorphic to");
      emit(out, csv);
      return 0;
    }
    if (*cov) {
      Triangulation t = load_triangulation(tri_in);
      DoubleCover dc = orientation_double_cover(t);
      Rows out;
      out.add("tetrahedra", std::to_string(dc.cover.size()));
      out.add("iso_sig", iso_sig(dc.cover));
      out.add("fingerprint", fingerprint(dc.cover).str());
      out.add("h1", h1_integral(dc.cover).str());
      emit(out, csv);
      return 0;
    }
    if (*sc) {
      Triangulation t = load_triangulation(tri_in);
      LemmaCertificate c = lemma_pipeline(t);
      Rows out;
      out.add("n", std::to_string(c.n));
      out.add("ok", c.ok ? "yes" : "no");
      if (!c.ok) out.add("failure", c.failure);
      if (!c.sigma.faces.empty()) {
        out.add("surface_faces", std::to_string(c.sigma.num_faces));
        out.add("surface_chi", std::to_string(c.sigma.euler));
        out.add("surface_orientable", c.sigma.orientable ? "yes" : "no");
      }
      if (c.ok) {
        out.add("average_face_length", rat(c.stats.average));
        out.add("punched_face_distinct_vertices", std::to_string(c.face.distinct));
        out.add("cover_spine_vertices", std::to_string(c.collapse.remaining_vertices));
        out.add("bound_2n_minus_5", std::to_string(2 * c.n - 5));
      }
      out.add("pruning_flags", pruning_predicates(t).str());
      emit(out, csv);
      if (dump_spine && !is_orientable(t).orientable) {
        SpecialSpineView sp = dual_spine(t);
        std::cout << dump(sp) << dump(sp, sw_surface(sp));
      }
      return c.ok ? 0 : 1;
    }
    if (*sf) {
      Rows out;
      if (seifert_op == "orbifolds") {
        Rational thr = seifert_arg.empty() ? Rational(-1, 6) : Rational(0);
        if (!seifert_arg.empty()) {
          auto slash = seifert_arg.find('/');
          if (slash == std::string::npos)
            thr = Rational(std::stoll(seifert_arg));
          else
            thr = Rational(std::stoll(seifert_arg.substr(0, slash)), std::stoll(seifert_arg.substr(slash + 1)));
        }
        for (const auto& f : enumerate_small_orbifolds(thr)) {
          FamilyScan s = scan_family(f);
          std::string v = "divisible=" + std::to_string(s.divisible.size()) +
                          " realizable=" + std::to_string(s.realizable.size());
          out.add(f.str(), v);
        }
        for (const auto& m : small_h2r_manifolds(thr)) out.add("manifold", m.str());
        emit(out, csv);
        return 0;
      }
      if (seifert_arg.empty()) throw ParseError("seifert " + seifert_op + " needs Seifert data");
      SeifertData sd = SeifertData::parse(seifert_arg);
      if (seifert_op == "chi-orb") {
        out.add("chi_orb", rat(chi_orb(sd)));
      } else if (seifert_op == "euler") {
        auto e = euler_number(sd);
        out.add("euler", e ? rat(*e) : "0 (non-orientable total space)");
      } else if (seifert_op == "geometry") {
        out.add("geometry", geometry_name(classify_geometry(sd)));
      } else {
        SeifertData c = seifert_double_cover(sd);
        out.add("cover", c.str());
        out.add("euler", rat(*euler_number(c)));
        out.add("chi_orb", rat(chi_orb(c)));
      }
      emit(out, csv);
      return 0;
    }
    if (*so) {
      GL2Z a = GL2Z::parse(matrix);
      if (!a.unimodular()) throw DomainError("matrix is not in GL(2,Z)");
      Rows out;
      if (sol_op == "normalize") {
        MonodromyClass mc = normalize(a);
        SolClass cl = classify_sol(a);
        out.add("class", mc.rep.str());
        out.add("abs_trace", std::to_string(mc.trace < 0 ? -mc.trace : mc.trace));
        out.add("det", std::to_string(mc.det));
        out.add("type", geometry_name(cl.geometry) + ", " + (cl.orientable ? "orientable" : "non-orientable"));
      } else if (sol_op == "classify") {
        SolClass cl = classify_sol(a);
        TraceSquare ts = tr_square_identity(a);
        out.add("geometry", geometry_name(cl.geometry));
        out.add("orientable", cl.orientable ? "yes" : "no");
        out.add("trace_square", std::to_string(ts.trace_square));
      } else {
        auto roots = det_minus_one_roots(a);
        for (const auto& r : roots) out.add("root", r.str());
        if (roots.empty()) out.add("root", "none");
      }
      emit(out, csv);
      return 0;
    }
    if (*fi) {
      auto records = ingest_orientable_census(census_path(data));
      if (csv) std::cout << "record,c,quotients,reason\n";
      for (const auto& r : records) {
        if (r.complexity > max_c) continue;
        FilterResult f = filter_orientable_record(r);
        std::string qs;
        for (const auto& q : f.quotients) qs += (qs.empty() ? "" : "; ") + q.name;
        if (csv)
          std::cout << csv_field(r.name) << "," << r.complexity << "," << csv_field(qs) << "," << csv_field(f.reason)
                    << "\n";
        else
          std::cout << r.name << " (c=" << r.complexity << "): " << (qs.empty() ? "none, " + f.reason : qs) << "\n";
      }
      return 0;
    }
    if (*tb) {
      ClassificationReport r = reproduce_classification(ingest_orientable_census(census_path(data)));
      if (csv) {
        std::cout << "c,non_orientable\n";
        for (int c = 0; c < 8; ++c) std::cout << c << "," << r.counts[c] << "\n";
      } else if (verbose) {
        std::cout << r.str();
      } else {
        std::cout << "c              0 1 2 3 4 5 6 7\nnon-orientable";
        for (int x : r.counts) std::cout << " " << x;
        std::cout << "\n";
        for (const auto& b : r.bullets) std::cout << "* " << b << "\n";
      }
      return 0;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
