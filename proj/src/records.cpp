#include "nonori/records.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "nonori/error.hpp"
#include "nonori/layered.hpp"
#include "nonori/sol.hpp"

namespace nonori {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i)
    if (i == s.size() || s[i] == sep) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  return out;
}

Rational frac(const Rational& x) {
  Rational f = x - Rational(boost::rational_cast<std::int64_t>(x));
  if (f < Rational(0)) f += Rational(1);
  return f;
}

Rational fiber_sum(const SeifertData& sd) {
  Rational e(sd.twist);
  for (const Fiber& f : sd.fibers) e += Rational(f.q, f.p);
  return e;
}

// Fibers as (p, q mod p) sorted, plus the total obstruction; equal keys
// mean equal closed Seifert data after the usual normalization.
struct SeifertKey {
  BaseSymbol base;
  bool twisted;
  std::vector<std::pair<std::int64_t, std::int64_t>> fibers;
  Rational total;
  bool operator==(const SeifertKey&) const = default;
};

SeifertKey seifert_key(const SeifertData& sd) {
  SeifertKey k{sd.base, sd.twisted, {}, fiber_sum(sd)};
  for (const Fiber& f : sd.fibers) k.fibers.push_back({f.p, ((f.q % f.p) + f.p) % f.p});
  std::sort(k.fibers.begin(), k.fibers.end());
  return k;
}

void check_consistency(const CensusRecord& r) {
  std::visit(
      [&](const auto& s) {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, SeifertData>) {
          if (!s.closed()) throw DomainError("seifert structure must be closed");
          if (!s.total_orientable()) throw DomainError("seifert structure is not orientable");
          Geometry g = classify_geometry(s);
          if (g != r.geometry)
            throw DomainError("geometry " + geometry_name(r.geometry) + " contradicts structure, which gives " +
                              geometry_name(g));
        } else if constexpr (std::is_same_v<S, GL2Z>) {
          if (s.det() != 1) throw DomainError("orientable torus bundle needs det 1");
          if (s.is_identity()) {
            if (r.geometry != Geometry::E3) throw DomainError("identity monodromy gives E3");
          } else if (classify_sol(s).geometry != r.geometry) {
            throw DomainError("geometry " + geometry_name(r.geometry) + " contradicts monodromy, which gives " +
                              geometry_name(classify_sol(s).geometry));
          }
        } else if constexpr (std::is_same_v<S, DecompositionDescriptor>) {
          if (s.blocks.empty()) throw DomainError("decomposition without blocks");
          if (s.tori + s.kleins == 0) throw DomainError("decomposition without surfaces");
        } else if constexpr (std::is_same_v<S, FlatTag>) {
          static const std::set<std::string> names{"G1", "G2", "G3", "G4", "G5", "G6"};
          if (!names.count(s.name)) throw DomainError("unknown flat manifold " + s.name);
          if (r.geometry != Geometry::E3) throw DomainError("flat tag needs geometry E3");
        } else {
          if (r.geometry != Geometry::Hyp) throw DomainError("hyperbolic structure needs geometry Hyp");
        }
      },
      r.structure);
  if (r.fingerprint && !r.fingerprint->orientable) throw DomainError("fingerprint is not orientable");
}

// Double covers among flat manifolds: the non-orientable flat manifolds and
// the orientable one covering each.
const std::map<std::string, std::vector<std::string>>& flat_quotients() {
  static const std::map<std::string, std::vector<std::string>> m{
      {"G1", {"B1", "B2"}}, {"G2", {"B3", "B4"}}, {"G3", {}}, {"G4", {}}, {"G5", {}}, {"G6", {}}};
  return m;
}

// Vertex counts of the skeletons used for the Seifert upper bound: the
// block (D,(2,1),(3,1)) with a marked boundary and the twisted I-bundle.
constexpr int kBlockSkeletonVertices = 4;
constexpr int kTwistedIBundleSkeletonVertices = 3;
// Every non-orientable flat manifold has a special spine with 6 vertices.
constexpr int kFlatUpperBound = 6;

std::string quotient_display(const GL2Z& m) {
  return "(" + std::to_string(m.a) + " " + std::to_string(m.b) + ";" + std::to_string(m.c) + " " +
         std::to_string(m.d) + ")";
}

std::string seifert_display(const SeifertData& sd) {
  std::string s = "(" + std::string(base_info(sd.base).name);
  for (const Fiber& f : sd.fibers) s += ",(" + std::to_string(f.p) + "," + std::to_string(f.q) + ")";
  return s + ")";
}

}  // namespace

std::string DecompositionDescriptor::str() const {
  std::string s(tori, 'T');
  s += std::string(kleins, 'K');
  s += ":";
  for (std::size_t i = 0; i < blocks.size(); ++i) s += (i ? "+" : "") + blocks[i].str();
  if (gluing) s += ":" + gluing->str();
  return s;
}

DecompositionDescriptor DecompositionDescriptor::parse(std::string_view text) {
  auto parts = split(text, ':');
  if (parts.size() < 2 || parts.size() > 3) throw ParseError("decomposition: expected 'surfaces:blocks[:gluing]'");
  DecompositionDescriptor d;
  for (char c : parts[0]) {
    if (c == 'T') ++d.tori;
    else if (c == 'K') ++d.kleins;
    else throw ParseError("decomposition: surfaces must be T or K");
  }
  for (const auto& b : split(parts[1], '+')) d.blocks.push_back(SeifertData::parse(b));
  if (parts.size() == 3) d.gluing = GL2Z::parse(parts[2]);
  return d;
}

std::string structure_str(const RecordStructure& s) {
  return std::visit(
      [](const auto& v) -> std::string {
        using S = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<S, SeifertData>) return "seifert:" + v.str();
        else if constexpr (std::is_same_v<S, GL2Z>) return "bundle:" + v.str();
        else if constexpr (std::is_same_v<S, DecompositionDescriptor>) return "decomp:" + v.str();
        else if constexpr (std::is_same_v<S, FlatTag>) return "flat:" + v.name;
        else return "hyperbolic";
      },
      s);
}

RecordStructure parse_structure(std::string_view s) {
  auto colon = s.find(':');
  std::string kind(trim(s.substr(0, colon)));
  std::string rest = colon == std::string_view::npos ? "" : trim(s.substr(colon + 1));
  if (kind == "seifert") return SeifertData::parse(rest);
  if (kind == "bundle") return GL2Z::parse(rest);
  if (kind == "decomp") return DecompositionDescriptor::parse(rest);
  if (kind == "flat") return FlatTag{rest};
  if (kind == "hyperbolic" && rest.empty()) return Hyperbolic{};
  throw ParseError("unknown structure '" + std::string(s) + "'");
}

std::string CensusRecord::str() const {
  std::ostringstream os;
  os << name << "|" << complexity << "|" << geometry_name(geometry) << "|" << structure_str(structure) << "|"
     << (fingerprint ? fingerprint->str() : "-") << "|" << (iso_sig ? *iso_sig : "-");
  return os.str();
}

CensusRecord parse_record(std::string_view text, int line) {
  auto f = split(text, '|');
  if (f.size() != 5 && f.size() != 6) throw ParseError("expected 5 or 6 '|' separated fields", line);
  CensusRecord r;
  try {
    r.name = f[0];
    if (r.name.empty()) throw ParseError("empty name");
    std::size_t used = 0;
    r.complexity = std::stoi(f[1], &used);
    if (used != f[1].size() || r.complexity < 0) throw ParseError("bad complexity '" + f[1] + "'");
    r.geometry = parse_geometry(f[2]);
    r.structure = parse_structure(f[3]);
    if (f[4] != "-" && !f[4].empty()) r.fingerprint = Fingerprint::parse(f[4]);
    if (f.size() == 6 && f[5] != "-" && !f[5].empty()) r.iso_sig = f[5];
    check_consistency(r);
  } catch (const ParseError& e) {
    if (e.line() > 0) throw;
    throw ParseError(e.what(), line);
  } catch (const std::invalid_argument&) {
    throw ParseError("bad complexity '" + f[1] + "'", line);
  } catch (const std::out_of_range&) {
    throw ParseError("complexity out of range", line);
  } catch (const DomainError& e) {
    throw ParseError(std::string("inconsistent record: ") + e.what(), line);
  }
  return r;
}

std::vector<CensusRecord> ingest_orientable_census_text(std::string_view text) {
  std::vector<CensusRecord> out;
  std::istringstream is{std::string(text)};
  std::string line;
  int no = 0;
  while (std::getline(is, line)) {
    ++no;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    out.push_back(parse_record(t, no));
  }
  return out;
}

std::vector<CensusRecord> ingest_orientable_census(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open census file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ingest_orientable_census_text(ss.str());
}

std::string default_census_path() { return std::string(NONORI_DATA_DIR) + "/orientable_census.txt"; }

FilterResult filter_orientable_record(const CensusRecord& rec) {
  FilterResult res;
  std::visit(
      [&](const auto& s) {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, SeifertData>) {
          auto e = euler_number(s);
          if (!e || *e != Rational(0)) {
            res.reason = "Euler number is not 0";
            return;
          }
          Rational chi = chi_orb(s);
          if (chi >= Rational(0)) {
            res.reason = "not of type H2xR; flat cases are handled by flat tags";
            return;
          }
          Rational half = chi / Rational(2);
          if (half <= Rational(-1, 2) || half >= Rational(0)) {
            res.reason = "quotient chi^orb outside the enumerated range";
            return;
          }
          SeifertKey key = seifert_key(s);
          for (const SeifertData& q : small_h2r_manifolds(half)) {
            if (q.total_orientable() || chi_orb(q) != half) continue;
            if (seifert_key(seifert_double_cover(q)) == key)
              res.quotients.push_back({Quotient::Kind::Seifert, seifert_display(q), q, std::nullopt});
          }
          if (res.quotients.empty()) res.reason = "no quotient with chi^orb " + std::to_string(half.numerator()) + "/" +
                                                  std::to_string(half.denominator()) + " has this cover";
        } else if constexpr (std::is_same_v<S, GL2Z>) {
          if (rec.geometry != Geometry::Sol) {
            res.reason = "torus bundle is not Sol";
            return;
          }
          std::vector<MonodromyClass> seen;
          for (const GL2Z& root : det_minus_one_roots(s)) {
            MonodromyClass c = normalize(root);
            if (std::find(seen.begin(), seen.end(), c) != seen.end()) continue;
            seen.push_back(c);
            // Display the root with non-negative entries when there is one.
            GL2Z show = root;
            for (const GL2Z& other : det_minus_one_roots(s))
              if (normalize(other) == c && other.a >= 0 && other.b >= 0 && other.c >= 0 && other.d >= 0) show = other;
            res.quotients.push_back({Quotient::Kind::Sol, "Sol " + quotient_display(show), std::nullopt, show});
          }
          if (res.quotients.empty())
            res.reason = "tr(A^2) = " + std::to_string(s.trace()) + " is not (tr A)^2 + 2 for an integer tr A";
        } else if constexpr (std::is_same_v<S, DecompositionDescriptor>) {
          if (s.kleins % 2 == 1) {
            res.reason = "odd number of K's";
            return;
          }
          for (const SeifertData& b : s.blocks) {
            if (frac(fiber_sum(b)) != Rational(0) && s.blocks.size() == 1) {
              Rational f = frac(fiber_sum(b));
              res.reason = "block Euler number e = " + std::to_string(f.numerator()) + "/" +
                           std::to_string(f.denominator()) + " != 0";
              return;
            }
          }
          if (s.tori == 1 && s.blocks.size() == 2) {
            bool exchange = false;
            if (s.gluing) {
              GL2Z g = *s.gluing;
              exchange = slopes_match_under_involution({g.b, g.d}, {0, 1});
            }
            bool both_zero = frac(fiber_sum(s.blocks[0])) == Rational(0) && frac(fiber_sum(s.blocks[1])) == Rational(0);
            if (!exchange && !both_zero) {
              res.reason = "fibers differ on the torus and some block has e != 0";
              return;
            }
          }
          res.reason = "decomposition not excluded by the parity and Euler tests";
        } else if constexpr (std::is_same_v<S, FlatTag>) {
          for (const auto& q : flat_quotients().at(s.name))
            res.quotients.push_back({Quotient::Kind::Flat, "flat " + q, std::nullopt, std::nullopt});
          if (res.quotients.empty()) res.reason = "no non-orientable flat manifold has this cover";
        } else {
          res.reason = "no orientation-reversing free isometric involution (curated isometry data)";
        }
      },
      rec.structure);
  return res;
}

ClassificationReport reproduce_classification(const std::vector<CensusRecord>& records) {
  ClassificationReport rep;
  std::map<int, std::vector<std::pair<const CensusRecord*, Quotient>>> by_cover;
  for (const CensusRecord& r : records) {
    if (r.complexity > 9) continue;
    FilterResult f = filter_orientable_record(r);
    if (f.quotients.empty()) {
      rep.excluded.push_back({r.name, f.reason});
      continue;
    }
    for (const Quotient& q : f.quotients) by_cover[r.complexity].push_back({&r, q});
  }

  for (const auto& [cc, items] : by_cover) {
    for (const auto& [rec, q] : items) {
      ClassifiedManifold m;
      m.name = q.name;
      m.cover = rec->name;
      m.cover_complexity = cc;
      m.lower = (cc + 5 + 1) / 2;
      switch (q.kind) {
        case Quotient::Kind::Flat:
          m.upper = kFlatUpperBound;
          m.witness = "flat spine";
          break;
        case Quotient::Kind::Sol: {
          LayeredBundle lb = layered_torus_bundle_detail(*q.monodromy);
          m.upper = lb.tri.size();
          m.witness = "layered triangulation with " + std::to_string(m.upper) + " tetrahedra";
          break;
        }
        case Quotient::Kind::Seifert: {
          const SeifertData& sd = *q.seifert;
          SeifertData block = SeifertData::parse("D;(2,1)(3,1)");
          bool found = false;
          for (BaseSymbol fb : {BaseSymbol::S, BaseSymbol::Abar}) {
            SeifertData glued = glue_block_to_ibundle(block, fb);
            if (seifert_key(glued) == seifert_key(sd)) found = true;
          }
          if (found && sd.fibers.size() == 2) {
            m.upper = kBlockSkeletonVertices + kTwistedIBundleSkeletonVertices;
            m.witness = "block (D,(2,1),(3,1)) glued to T~xI";
          } else {
            m.upper = 99;
            m.witness = "none";
          }
          break;
        }
      }
      m.bound_consistent = m.lower <= m.upper && cc <= 2 * m.upper - 5;
      if (m.lower == m.upper && m.upper < 8) ++rep.counts[m.upper];
      rep.manifolds.push_back(m);
    }
  }

  auto names = [&](int cc, Quotient::Kind kind) {
    std::vector<std::string> out;
    if (!by_cover.count(cc)) return out;
    for (const auto& [rec, q] : by_cover.at(cc))
      if (q.kind == kind) out.push_back(q.name);
    return out;
  };
  auto covers = [&](int cc) {
    std::vector<std::string> out;
    if (!by_cover.count(cc)) return out;
    for (const auto& [rec, q] : by_cover.at(cc))
      if (std::find(out.begin(), out.end(), rec->name) == out.end()) out.push_back(rec->name);
    return out;
  };
  auto join = [](const std::vector<std::string>& v, const std::string& sep) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
    return s;
  };
  auto sol_bullet = [&](int cc) {
    std::vector<std::string> parts;
    if (!by_cover.count(cc)) return std::string("c(M~)=" + std::to_string(cc) + ": none");
    for (const auto& [rec, q] : by_cover.at(cc))
      if (q.kind == Quotient::Kind::Sol)
        parts.push_back("cover " + quotient_display(std::get<GL2Z>(rec->structure)) + ", quotient " +
                        quotient_display(*q.monodromy));
    return "c(M~)=" + std::to_string(cc) + ": Sol torus bundles, " + join(parts, "; ");
  };
  {
    auto flats = names(6, Quotient::Kind::Flat);
    rep.bullets.push_back("c(M~)=6: flat, covers " + join(covers(6), ", ") + ", quotients " + join(flats, ", "));
  }
  rep.bullets.push_back(sol_bullet(7));
  {
    auto sf = names(8, Quotient::Kind::Seifert);
    rep.bullets.push_back("c(M~)=8: H2xR, cover " + join(covers(8), ", ") + ", quotients " + join(sf, " and "));
  }
  rep.bullets.push_back(sol_bullet(9));
  return rep;
}

std::string ClassificationReport::str() const {
  std::ostringstream os;
  os << "non-orientable counts c=0..7:";
  for (int c : counts) os << " " << c;
  os << "\n";
  for (const auto& b : bullets) os << "* " << b << "\n";
  os << "quotients (consistent with, fingerprint level):\n";
  for (const auto& m : manifolds)
    os << "  " << m.name << " <- " << m.cover << " c~=" << m.cover_complexity << " lower=" << m.lower
       << " upper=" << m.upper << " [" << m.witness << "] " << (m.bound_consistent ? "ok" : "INCONSISTENT") << "\n";
  os << "excluded records:\n";
  for (const auto& [n, r] : excluded) os << "  " << n << ": " << r << "\n";
  return os.str();
}

}  // namespace nonori
