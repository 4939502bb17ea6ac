#include "nonori/seifert.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <regex>
#include <set>

#include "nonori/error.hpp"

namespace nonori {

namespace {

constexpr std::array<BaseInfo, 11> kBases{{
    {BaseSymbol::S2, "S2", 2, true, 0, 0, 0},
    {BaseSymbol::RP2, "RP2", 1, false, 0, 0, 0},
    {BaseSymbol::T, "T", 0, true, 0, 0, 0},
    {BaseSymbol::K, "K", 0, false, 0, 0, 0},
    {BaseSymbol::D, "D", 1, true, 1, 0, 0},
    {BaseSymbol::Dbar, "Dbar", 1, true, 0, 1, 0},
    {BaseSymbol::Ddot, "Ddot", 1, true, 1, 0, 1},
    {BaseSymbol::Dddot, "Dddot", 1, true, 2, 0, 2},
    {BaseSymbol::A, "A", 0, true, 2, 0, 0},
    {BaseSymbol::Abar, "Abar", 0, true, 1, 1, 0},
    {BaseSymbol::S, "S", 0, false, 1, 0, 0},
}};

void check_fiber(const Fiber& f) {
  if (f.p < 2) throw DomainError("fiber (" + std::to_string(f.p) + "," + std::to_string(f.q) + "): need p >= 2");
  if (std::gcd(f.p, f.q) != 1)
    throw DomainError("fiber (" + std::to_string(f.p) + "," + std::to_string(f.q) + "): p and q not coprime");
}

std::int64_t product(const std::vector<std::int64_t>& v) {
  std::int64_t r = 1;
  for (auto x : v) r *= x;
  return r;
}

// Residue search: q_i coprime to p_i with sum q_i/p_i integral.
std::optional<std::vector<std::int64_t>> integral_residues(const std::vector<std::int64_t>& ps) {
  if (product(ps) > 10'000'000) throw DomainError("e_zero_realizable: residue search too large");
  std::vector<std::int64_t> q(ps.size(), 0);
  std::function<bool(std::size_t, Rational)> go = [&](std::size_t i, Rational acc) {
    if (i == ps.size()) return acc.denominator() == 1;
    for (std::int64_t r = 1; r < ps[i]; ++r) {
      if (std::gcd(r, ps[i]) != 1) continue;
      q[i] = r;
      if (go(i + 1, acc + Rational(r, ps[i]))) return true;
    }
    return false;
  };
  if (go(0, Rational(0))) return q;
  return std::nullopt;
}

}  // namespace

const BaseInfo& base_info(BaseSymbol s) { return kBases[static_cast<int>(s)]; }

BaseSymbol parse_base(std::string_view name) {
  for (const BaseInfo& b : kBases)
    if (name == b.name) return b.symbol;
  throw ParseError("unknown base orbifold '" + std::string(name) + "'");
}

bool has_mirrors(BaseSymbol s) {
  const BaseInfo& b = base_info(s);
  return b.mirror_circles > 0 || b.mirror_segments > 0;
}

bool SeifertData::closed() const { return base_info(base).true_boundary == 0; }

bool SeifertData::total_orientable() const {
  if (has_mirrors(base)) return false;
  return base_info(base).orientable_surface != twisted;
}

std::vector<std::int64_t> SeifertData::cone_orders() const {
  std::vector<std::int64_t> v;
  for (const Fiber& f : fibers) v.push_back(f.p);
  return v;
}

std::string SeifertData::str() const {
  std::string s = base_info(base).name;
  if (twisted) s += "~";
  s += ";";
  for (const Fiber& f : fibers) s += "(" + std::to_string(f.p) + "," + std::to_string(f.q) + ")";
  if (twist != 0) s += ";" + std::to_string(twist);
  return s;
}

SeifertData SeifertData::parse(std::string_view text) {
  static const std::regex whole(R"(^\s*([A-Za-z0-9]+)(~?)\s*(?:;\s*((?:\(\s*-?\d+\s*,\s*-?\d+\s*\)\s*)*))?(?:;\s*(-?\d+)\s*)?$)");
  static const std::regex fiber(R"(\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\))");
  std::string s(text);
  std::smatch m;
  if (!std::regex_match(s, m, whole)) throw ParseError("seifert data: expected 'base; (p,q)...; b', got '" + s + "'");
  SeifertData sd;
  sd.base = parse_base(m[1].str());
  sd.twisted = m[2].length() > 0;
  std::string fibers = m[3].str();
  for (auto it = std::sregex_iterator(fibers.begin(), fibers.end(), fiber); it != std::sregex_iterator(); ++it) {
    Fiber f{std::stoll((*it)[1]), std::stoll((*it)[2])};
    try {
      check_fiber(f);
    } catch (const DomainError& e) {
      throw ParseError(std::string("seifert data: ") + e.what());
    }
    sd.fibers.push_back(f);
  }
  if (m[4].matched) sd.twist = std::stoll(m[4]);
  return sd;
}

Rational chi_orb(BaseSymbol base, const std::vector<std::int64_t>& cones) {
  const BaseInfo& b = base_info(base);
  Rational chi(b.underlying_euler);
  chi -= Rational(b.mirror_segments, 2);
  for (auto p : cones) {
    if (p < 2) throw DomainError("chi_orb: cone order must be >= 2");
    chi -= Rational(1) - Rational(1, p);
  }
  return chi;
}

Rational chi_orb(const SeifertData& sd) { return chi_orb(sd.base, sd.cone_orders()); }

std::optional<Rational> euler_number(const SeifertData& sd) {
  for (const Fiber& f : sd.fibers) check_fiber(f);
  if (sd.closed() && !sd.total_orientable()) return std::nullopt;
  Rational e(sd.twist);
  for (const Fiber& f : sd.fibers) e += Rational(f.q, f.p);
  return e;
}

std::string geometry_name(Geometry g) {
  switch (g) {
    case Geometry::S3: return "S3";
    case Geometry::S2xR: return "S2xR";
    case Geometry::E3: return "E3";
    case Geometry::Nil: return "Nil";
    case Geometry::H2xR: return "H2xR";
    case Geometry::SL2R: return "SL2R";
    case Geometry::Sol: return "Sol";
    case Geometry::Hyp: return "Hyp";
  }
  return "?";
}

Geometry parse_geometry(std::string_view s) {
  for (Geometry g : {Geometry::S3, Geometry::S2xR, Geometry::E3, Geometry::Nil, Geometry::H2xR, Geometry::SL2R,
                     Geometry::Sol, Geometry::Hyp})
    if (s == geometry_name(g)) return g;
  throw ParseError("unknown geometry '" + std::string(s) + "'");
}

Geometry geometry_from_invariants(const Rational& chi, bool e_zero) {
  if (chi > Rational(0)) return e_zero ? Geometry::S2xR : Geometry::S3;
  if (chi == Rational(0)) return e_zero ? Geometry::E3 : Geometry::Nil;
  return e_zero ? Geometry::H2xR : Geometry::SL2R;
}

Geometry classify_geometry(const SeifertData& sd) {
  if (!sd.closed()) throw DomainError("classify_geometry: data has boundary");
  auto e = euler_number(sd);
  return geometry_from_invariants(chi_orb(sd), !e || *e == Rational(0));
}

std::string OrbifoldFamily::str() const {
  std::string s = std::string(base_info(base).name) + "(";
  for (auto p : prefix) s += std::to_string(p) + ",";
  if (!bounded())
    s += ">=" + std::to_string(last_lo);
  else if (last_lo == last_hi)
    s += std::to_string(last_lo);
  else
    s += std::to_string(last_lo) + ".." + std::to_string(last_hi);
  return s + ")";
}

std::vector<OrbifoldFamily> enumerate_small_orbifolds(const Rational& threshold) {
  if (threshold >= Rational(0)) throw DomainError("enumerate_small_orbifolds: threshold must be negative");
  if (threshold <= Rational(-1, 2))
    throw DomainError("enumerate_small_orbifolds: thresholds <= -1/2 would admit bases beyond S2, RP2, Dbar");
  std::vector<OrbifoldFamily> out;
  for (BaseSymbol base : {BaseSymbol::S2, BaseSymbol::RP2, BaseSymbol::Dbar}) {
    Rational chi0 = chi_orb(base, {});
    // Each cone costs at least 1/2.
    int max_k = boost::rational_cast<int>((chi0 - threshold) * 2);
    for (int k = 1; k <= max_k; ++k) {
      std::vector<std::int64_t> prefix;
      std::function<void(Rational, int)> rec = [&](Rational chi, int remaining) {
        std::int64_t lo = prefix.empty() ? 2 : prefix.back();
        if (remaining == 1) {
          auto value = [&](std::int64_t h) { return chi - 1 + Rational(1, h); };
          std::int64_t h = lo;
          while (value(h) >= Rational(0)) {
            if (chi - 1 >= Rational(0)) return;  // never hyperbolic
            ++h;
          }
          if (value(h) < threshold) return;
          if (chi - 1 >= threshold) {
            out.push_back({base, prefix, h, -1});
            return;
          }
          std::int64_t hi = h;
          while (value(hi + 1) >= threshold) ++hi;
          out.push_back({base, prefix, h, hi});
          return;
        }
        if (chi - remaining >= Rational(0)) return;  // every completion has chi^orb > 0
        if (chi - remaining >= threshold)
          throw DomainError("enumerate_small_orbifolds: threshold admits a multi-parameter family");
        for (std::int64_t h = lo; chi - remaining + Rational(remaining, h) >= threshold; ++h) {
          prefix.push_back(h);
          rec(chi - 1 + Rational(1, h), remaining - 1);
          prefix.pop_back();
        }
      };
      rec(chi0, k);
    }
  }
  return out;
}

EZeroResult e_zero_realizable(const std::vector<std::int64_t>& ps) {
  EZeroResult r;
  std::int64_t all = product(ps);
  r.divisibility = true;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if ((all / ps[i]) % ps[i] != 0) {
      r.divisibility = false;
      r.obstruction = "p=" + std::to_string(ps[i]) + " does not divide the product of the other orders";
      return r;
    }
  }
  if (auto q = integral_residues(ps)) {
    r.realizable = true;
    r.witness_q = *q;
  } else {
    r.obstruction = "no q_i coprime to p_i make sum q_i/p_i integral";
  }
  return r;
}

FamilyScan scan_family(const OrbifoldFamily& f) {
  FamilyScan s{f, {}, {}};
  std::int64_t hi = f.bounded() ? f.last_hi : std::max(f.last_lo - 1, product(f.prefix));
  for (std::int64_t h = f.last_lo; h <= hi; ++h) {
    std::vector<std::int64_t> ps = f.prefix;
    ps.push_back(h);
    EZeroResult r = e_zero_realizable(ps);
    if (r.divisibility) s.divisible.push_back(ps);
    if (r.realizable) s.realizable.push_back(ps);
  }
  return s;
}

std::vector<SeifertData> small_h2r_manifolds(const Rational& threshold) {
  std::vector<SeifertData> out;
  for (const OrbifoldFamily& f : enumerate_small_orbifolds(threshold)) {
    if (f.base == BaseSymbol::S2) {
      for (const auto& ps : scan_family(f).realizable) {
        auto q = *integral_residues(ps);
        SeifertData sd{BaseSymbol::S2, {}, 0, false};
        Rational sum(0);
        for (std::size_t i = 0; i < ps.size(); ++i) {
          sd.fibers.push_back({ps[i], q[i]});
          sum += Rational(q[i], ps[i]);
        }
        sd.twist = -boost::rational_cast<std::int64_t>(sum);
        out.push_back(sd);
      }
      continue;
    }
    if (!f.bounded()) throw DomainError("small_h2r_manifolds: unbounded family over a non-orientable base");
    for (std::int64_t h = f.last_lo; h <= f.last_hi; ++h) {
      std::vector<std::int64_t> ps = f.prefix;
      ps.push_back(h);
      // Non-orientable: each q_i matters only up to sign mod p_i.
      std::vector<std::int64_t> q(ps.size());
      std::function<void(std::size_t)> go = [&](std::size_t i) {
        if (i == ps.size()) {
          SeifertData sd{f.base, {}, 0, false};
          for (std::size_t j = 0; j < ps.size(); ++j) sd.fibers.push_back({ps[j], q[j]});
          out.push_back(sd);
          return;
        }
        for (std::int64_t r = 1; 2 * r <= ps[i]; ++r)
          if (std::gcd(r, ps[i]) == 1) {
            q[i] = r;
            go(i + 1);
          }
      };
      go(0);
      // Orientable total space over RP2 (fibers reversed): e must vanish.
      if (f.base == BaseSymbol::RP2 && integral_residues(ps))
        throw DomainError("small_h2r_manifolds: unexpected orientable candidate over RP2");
    }
  }
  return out;
}

std::vector<std::vector<Z2Pair>> ibundle_orbits(char surface) {
  // Generator images of (a, b) in H_1 coordinates; only their parity matters.
  using Gen = std::array<std::array<int, 2>, 2>;
  std::vector<Gen> gens;
  if (surface == 'T') {
    gens = {Gen{{{1, 0}, {1, 1}}}, Gen{{{1, 1}, {0, 1}}}};
  } else if (surface == 'K') {
    gens = {Gen{{{1, 0}, {0, -1}}}, Gen{{{1, 0}, {1, 1}}}};
  } else {
    throw DomainError(std::string("ibundle_orbits: unsupported surface '") + surface + "'");
  }
  auto act = [](const Gen& g, Z2Pair alpha) {
    Z2Pair r{};
    for (int v = 0; v < 2; ++v) r[v] = ((alpha[0] * g[v][0] + alpha[1] * g[v][1]) % 2 + 2) % 2;
    return r;
  };
  std::vector<std::vector<Z2Pair>> orbits;
  std::set<Z2Pair> done;
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) {
      Z2Pair start{x, y};
      if (done.count(start)) continue;
      std::set<Z2Pair> orbit{start};
      std::vector<Z2Pair> stack{start};
      while (!stack.empty()) {
        Z2Pair cur = stack.back();
        stack.pop_back();
        for (const Gen& g : gens) {
          Z2Pair nxt = act(g, cur);
          if (orbit.insert(nxt).second) stack.push_back(nxt);
        }
      }
      done.insert(orbit.begin(), orbit.end());
      orbits.emplace_back(orbit.begin(), orbit.end());
    }
  return orbits;
}

std::vector<IBundle> ibundle_table() {
  auto sd = [](std::string_view s) { return SeifertData::parse(s); };
  std::vector<IBundle> out;
  for (char surface : {'T', 'K'}) {
    Z2Pair w1 = surface == 'T' ? Z2Pair{0, 0} : Z2Pair{0, 1};
    for (const auto& orbit : ibundle_orbits(surface)) {
      IBundle b;
      b.surface = surface;
      b.cocycle = orbit.front();
      b.orientable = b.cocycle == w1;
      bool trivial = b.cocycle == Z2Pair{0, 0};
      if (trivial)
        b.boundary = {surface, surface};
      else
        b.boundary = {(surface == 'T' || b.orientable) ? 'T' : 'K'};
      std::string s(1, surface);
      if (trivial) {
        b.name = s + "xI";
      } else if (surface == 'T' || !b.orientable) {
        b.name = s + (surface == 'K' ? "~~xI" : "~xI");
      } else {
        b.name = s + "~xI";
      }
      if (b.name == "TxI") b.fibrations = {sd("A")};
      if (b.name == "T~xI") b.fibrations = {sd("S"), sd("Abar")};
      if (b.name == "KxI") b.fibrations = {sd("A~"), sd("Dddot")};
      if (b.name == "K~xI") b.fibrations = {sd("S~"), sd("D;(2,1)(2,1)")};
      if (b.name == "K~~xI") b.fibrations = {sd("Abar~"), sd("Ddot;(2,1)")};
      for (const SeifertData& f : b.fibrations) {
        if (f.total_orientable() != b.orientable)
          throw DomainError("ibundle_table: fibration " + f.str() + " has the wrong orientability");
        if (base_info(f.base).true_boundary != static_cast<int>(b.boundary.size()))
          throw DomainError("ibundle_table: fibration " + f.str() + " has the wrong boundary");
        if (chi_orb(f) != Rational(0)) throw DomainError("ibundle_table: fibration " + f.str() + " is not Euclidean");
      }
      out.push_back(b);
    }
  }
  return out;
}

SeifertData glue_block_to_ibundle(const SeifertData& block, BaseSymbol fiber_base) {
  if (fiber_base != BaseSymbol::S && fiber_base != BaseSymbol::Abar)
    throw DomainError("glue_block_to_ibundle: T~xI fibers only over S and Abar");
  const BaseInfo& a = base_info(block.base);
  const BaseInfo& b = base_info(fiber_base);
  if (a.true_boundary != 1) throw DomainError("glue_block_to_ibundle: block must have one boundary torus");
  if (block.twisted || has_mirrors(block.base))
    throw DomainError("glue_block_to_ibundle: block boundary is not a fibered torus matching T~xI");
  int chi = a.underlying_euler + b.underlying_euler;
  bool ori = a.orientable_surface && b.orientable_surface;
  int bdry = a.true_boundary + b.true_boundary - 2;
  int circles = a.mirror_circles + b.mirror_circles;
  int segments = a.mirror_segments + b.mirror_segments;
  for (const BaseInfo& c : kBases) {
    if (c.underlying_euler != chi || c.orientable_surface != ori || c.true_boundary != bdry ||
        c.mirror_circles != circles || c.mirror_segments != segments)
      continue;
    SeifertData out{c.symbol, block.fibers, block.twist, false};
    if (chi_orb(out) != chi_orb(block) + chi_orb(fiber_base, {}))
      throw DomainError("glue_block_to_ibundle: chi^orb is not additive");
    return out;
  }
  throw DomainError("glue_block_to_ibundle: glued base is not a supported orbifold");
}

SeifertData seifert_double_cover(const SeifertData& sd) {
  if (sd.base != BaseSymbol::RP2 && sd.base != BaseSymbol::Dbar)
    throw DomainError("seifert_double_cover: base must be RP2 or Dbar");
  if (sd.total_orientable()) throw DomainError("seifert_double_cover: total space is orientable");
  SeifertData out{BaseSymbol::S2, sd.fibers, 0, false};
  for (const Fiber& f : sd.fibers) out.fibers.push_back({f.p, -f.q});
  auto e = euler_number(out);
  if (!e || *e != Rational(0)) throw DomainError("seifert_double_cover: cover has non-zero Euler number");
  if (chi_orb(out) != 2 * chi_orb(sd)) throw DomainError("seifert_double_cover: chi^orb did not double");
  return out;
}

bool slopes_match_under_involution(std::array<std::int64_t, 2> s1, std::array<std::int64_t, 2> s2) {
  return s1 == s2 || (s1[0] == -s2[0] && s1[1] == -s2[1]);
}

}  // namespace nonori
