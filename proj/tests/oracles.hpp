#pragma once

// Independent reference computations for the test suite. Nothing here calls
// the enumerator, iso_sig or the simplicial chain complex; only the Smith
// form of an integer matrix is shared with the library.

#include <functional>
#include <map>
#include <stdexcept>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "nonori/gl2z.hpp"
#include "nonori/homology.hpp"
#include "nonori/triangulation.hpp"

namespace oracle {

using nonori::HomologyResult;

// Finitely presented group with a Z/2 character on the generators.
struct Presentation {
  std::vector<std::string> gens;
  std::vector<std::vector<std::pair<int, int>>> relators;  // (generator, +-1)
  std::vector<int> character;

  // Words are space separated generator names, x' for the inverse.
  Presentation(std::vector<std::string> g, const std::vector<std::string>& rels, std::vector<int> chi)
      : gens(std::move(g)), character(std::move(chi)) {
    for (const auto& r : rels) {
      std::istringstream is(r);
      std::string tok;
      std::vector<std::pair<int, int>> word;
      while (is >> tok) {
        int e = 1;
        if (tok.back() == '\'') {
          e = -1;
          tok.pop_back();
        }
        int idx = -1;
        for (std::size_t i = 0; i < gens.size(); ++i)
          if (gens[i] == tok) idx = static_cast<int>(i);
        if (idx < 0) throw std::runtime_error("unknown generator " + tok);
        word.push_back({idx, e});
      }
      relators.push_back(word);
    }
  }
};

inline HomologyResult abelianize(const Presentation& p) {
  nonori::IntMatrix m(static_cast<int>(p.relators.size()), static_cast<int>(p.gens.size()));
  for (std::size_t r = 0; r < p.relators.size(); ++r)
    for (auto [g, e] : p.relators[r]) m(static_cast<int>(r), g) += e;
  return nonori::abelian_group_from_relations(m);
}

// Abelianized kernel of the character via Reidemeister-Schreier with
// transversal {1, s}, s the first generator with character 1.
inline HomologyResult kernel_abelianization(const Presentation& p) {
  int n = static_cast<int>(p.gens.size());
  int s = -1;
  for (int i = 0; i < n && s < 0; ++i)
    if (p.character[i]) s = i;
  if (s < 0) throw std::runtime_error("trivial character");
  // Schreier generator (g, coset) gets column g*2+coset; (s, 0) is trivial.
  auto col = [&](int g, int c) { return g * 2 + c; };
  nonori::IntMatrix m(static_cast<int>(p.relators.size()) * 2 + 1, 2 * n);
  int row = 0;
  for (const auto& rel : p.relators)
    for (int start = 0; start < 2; ++start) {
      int c = start;
      for (auto [g, e] : rel) {
        if (e == 1) {
          m(row, col(g, c)) += 1;
          c ^= p.character[g];
        } else {
          c ^= p.character[g];
          m(row, col(g, c)) -= 1;
        }
      }
      ++row;
    }
  m(row, col(s, 0)) = 1;
  return nonori::abelian_group_from_relations(m);
}

inline nonori::Fingerprint fingerprint(const Presentation& p) {
  nonori::Fingerprint f;
  f.orientable = false;
  f.h1 = abelianize(p);
  f.h1_cover = kernel_abelianization(p);
  return f;
}

// Mapping torus of A acting on Z^2 = <x, y>; t has character det-dependent.
inline Presentation torus_bundle(const nonori::GL2Z& a) {
  auto power = [](const std::string& g, std::int64_t k) {
    std::string w;
    for (std::int64_t i = 0; i < (k < 0 ? -k : k); ++i) w += " " + g + (k < 0 ? "'" : "");
    return w;
  };
  // t x t^-1 = A(x): column (a, c); t y t^-1 = A(y): column (b, d).
  std::string r1 = "t x t'" + power("y", -a.c) + power("x", -a.a);
  std::string r2 = "t y t'" + power("y", -a.d) + power("x", -a.b);
  return Presentation({"x", "y", "t"}, {"x y x' y'", r1, r2}, {0, 0, a.det() == -1 ? 1 : 0});
}

// Bundles over S^1 with Klein bottle fiber <x, y | x y x^-1 y>, x one-sided.
inline std::vector<std::pair<std::string, Presentation>> klein_bundles() {
  std::vector<std::string> g{"x", "y", "t"};
  std::string k = "x y x' y";
  return {
      {"flat K-bundle (id)", Presentation(g, {k, "t x t' x'", "t y t' y'"}, {1, 0, 0})},
      {"flat K-bundle (psi)", Presentation(g, {k, "t x t' x' y'", "t y t' y'"}, {1, 0, 0})},
      {"flat K-bundle (phi)", Presentation(g, {k, "t x t' x", "t y t' y'"}, {1, 0, 1})},
      {"flat K-bundle (phi psi)", Presentation(g, {k, "t x t' x y'", "t y t' y'"}, {1, 0, 1})},
  };
}

// Standard Seifert presentations with two exceptional fibers (2,1),(3,1):
// over RP^2 (cross-cap m, fiber l central) and over the reflector disc.
inline Presentation seifert_rp2_23() {
  return Presentation({"c1", "c2", "m", "l"},
                      {"c1 l c1' l'", "c2 l c2' l'", "c1 c1 l", "c2 c2 c2 l", "m l m' l'", "c1 c2 m' m'"},
                      {0, 0, 1, 0});
}
inline Presentation seifert_dbar_23() {
  return Presentation({"c1", "c2", "m", "l"},
                      {"c1 m m c1' m' m'", "c2 m m c2' m' m'", "c1 c1 m m", "c2 c2 c2 m m", "m l m' l'", "c1 c2 l'"},
                      {0, 0, 1, 0});
}

// Explicit isomorphism search: tetrahedron 0 goes to some u with some
// vertex map, and connectivity forces the rest.
inline bool isomorphic(const nonori::Triangulation& a, const nonori::Triangulation& b) {
  int n = a.size();
  if (b.size() != n) return false;
  for (int u = 0; u < n; ++u)
    for (int c = 0; c < nonori::Perm4::kCount; ++c) {
      std::vector<int> tmap(n, -1);
      std::vector<nonori::Perm4> vmap(n);
      tmap[0] = u;
      vmap[0] = nonori::Perm4::from_code(c);
      std::vector<int> queue{0};
      std::vector<bool> used(n, false);
      used[u] = true;
      bool ok = true;
      for (std::size_t q = 0; q < queue.size() && ok; ++q) {
        int t = queue[q];
        for (int f = 0; f < 4 && ok; ++f) {
          const auto& g = a.gluing(t, f);
          const auto& h = b.gluing(tmap[t], vmap[t][f]);
          // Image gluing must be vmap[g.tet] * g.perm * vmap[t]^-1.
          nonori::Perm4 want_v = h.perm * vmap[t] * g.perm.inverse();
          if (tmap[g.tet] < 0) {
            if (used[h.tet]) {
              ok = false;
              break;
            }
            tmap[g.tet] = h.tet;
            vmap[g.tet] = want_v;
            used[h.tet] = true;
            queue.push_back(g.tet);
          } else if (tmap[g.tet] != h.tet || !(vmap[g.tet] == want_v)) {
            ok = false;
          }
        }
      }
      if (ok && static_cast<int>(queue.size()) == n) return true;
    }
  return false;
}

inline bool one_vertex_manifold(const nonori::Triangulation& t) {
  if (!nonori::validate(t).valid()) return false;
  if (nonori::vertex_count(t) != 1) return false;
  return nonori::check_manifold(t).closed_manifold();
}

// Closed connected gluings of n tetrahedra, one per isomorphism class at
// least: the first free slot is glued either to a fresh tetrahedron (whose
// labeling is still free, so the identity map suffices) or to any later free
// slot with any of the six face maps.
inline void grow(nonori::Triangulation& t, int used, std::vector<nonori::Triangulation>& out) {
  int n = t.size();
  int tet = -1, face = -1;
  for (int i = 0; i < used && tet < 0; ++i)
    for (int f = 0; f < 4; ++f)
      if (!t.gluing(i, f).glued()) {
        tet = i;
        face = f;
        break;
      }
  if (tet < 0) {
    if (used == n) out.push_back(t);
    return;
  }
  if (used < n) {
    t.join(tet, face, used, nonori::Perm4());
    grow(t, used + 1, out);
    t.unjoin(tet, face);
  }
  for (int u = tet; u < used; ++u)
    for (int g = 0; g < 4; ++g) {
      if (u == tet && g <= face) continue;
      if (t.gluing(u, g).glued()) continue;
      for (int c = 0; c < nonori::Perm4::kCount; ++c) {
        nonori::Perm4 p = nonori::Perm4::from_code(c);
        if (p[face] != g) continue;
        t.join(tet, face, u, p);
        grow(t, used, out);
        t.unjoin(tet, face);
      }
    }
}

// Isomorphism classes of closed one-vertex triangulations with n tetrahedra.
inline std::vector<nonori::Triangulation> census(int n) {
  std::vector<nonori::Triangulation> all;
  nonori::Triangulation t(n);
  grow(t, 1, all);
  std::vector<nonori::Triangulation> classes;
  for (const auto& c : all) {
    if (!one_vertex_manifold(c)) continue;
    bool seen = false;
    for (const auto& r : classes)
      if (isomorphic(c, r)) {
        seen = true;
        break;
      }
    if (!seen) classes.push_back(c);
  }
  return classes;
}

// Every labeled gluing of n tetrahedra: all perfect matchings of the 4n
// slots times all face maps. Only feasible for n <= 2.
inline std::vector<nonori::Triangulation> labeled_census(int n) {
  std::vector<nonori::Triangulation> out;
  nonori::Triangulation t(n);
  std::vector<bool> done(4 * n, false);
  std::function<void()> rec = [&]() {
    int s = -1;
    for (int i = 0; i < 4 * n; ++i)
      if (!done[i]) {
        s = i;
        break;
      }
    if (s < 0) {
      if (one_vertex_manifold(t)) out.push_back(t);
      return;
    }
    done[s] = true;
    for (int o = s + 1; o < 4 * n; ++o) {
      if (done[o]) continue;
      done[o] = true;
      for (int c = 0; c < nonori::Perm4::kCount; ++c) {
        nonori::Perm4 p = nonori::Perm4::from_code(c);
        if (p[s % 4] != o % 4) continue;
        t.join(s / 4, s % 4, o / 4, p);
        rec();
        t.unjoin(s / 4, s % 4);
      }
      done[o] = false;
    }
    done[s] = false;
  };
  rec();
  return out;
}

}  // namespace oracle
