#include "nonori/homology.hpp"

#include <queue>
#include <sstream>

#include "nonori/error.hpp"

namespace nonori {

std::string HomologyResult::str() const {
  std::ostringstream os;
  bool first = true;
  if (rank > 0) {
    os << "Z";
    if (rank > 1) os << "^" << rank;
    first = false;
  }
  for (auto t : torsion) {
    if (!first) os << " + ";
    os << "Z/" << t;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

int HomologyResult::z2_dimension() const {
  int d = rank;
  for (auto t : torsion)
    if (t % 2 == 0) ++d;
  return d;
}

HomologyResult abelian_group_from_relations(const IntMatrix& relations) {
  HomologyResult h;
  auto factors = invariant_factors(relations);
  h.rank = relations.cols - static_cast<int>(factors.size());
  for (const auto& f : factors)
    if (f > 1) {
      if (f > INT64_MAX) throw DomainError("torsion coefficient exceeds 64 bits");
      h.torsion.push_back(static_cast<std::int64_t>(f));
    }
  return h;
}

IntMatrix boundary_d1(const Skeleton& sk) {
  IntMatrix d(sk.num_vertices, sk.num_edges);
  for (int e = 0; e < sk.num_edges; ++e) {
    const EdgeEmbedding& em = sk.edge_ring[e][0];
    int x = kEdgeVertices[em.edge][0], y = kEdgeVertices[em.edge][1];
    if (em.sign < 0) std::swap(x, y);
    d(sk.vertex_of[em.tet][y], e) += 1;
    d(sk.vertex_of[em.tet][x], e) -= 1;
  }
  return d;
}

IntMatrix boundary_d2(const Triangulation&, const Skeleton& sk) {
  IntMatrix d(sk.num_edges, sk.num_triangles);
  for (int k = 0; k < sk.num_triangles; ++k) {
    auto [tet, f] = sk.triangle_slot[k];
    int v[3], c = 0;
    for (int x = 0; x < 4; ++x)
      if (x != f) v[c++] = x;
    // boundary of [v0 v1 v2] = [v1 v2] - [v0 v2] + [v0 v1]
    const int pairs[3][3] = {{v[1], v[2], 1}, {v[0], v[2], -1}, {v[0], v[1], 1}};
    for (const auto& p : pairs) {
      int idx = edge_index(p[0], p[1]);
      d(sk.edge_of[tet][idx], k) += p[2] * sk.edge_sign[tet][idx];
    }
  }
  return d;
}

int rank_mod2(const IntMatrix& m) {
  int words = (m.cols + 63) / 64;
  std::vector<std::vector<std::uint64_t>> rows(m.rows, std::vector<std::uint64_t>(words, 0));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      if (m(i, j) % 2 != 0) rows[i][j / 64] |= std::uint64_t{1} << (j % 64);
  int rank = 0;
  for (int j = 0; j < m.cols && rank < m.rows; ++j) {
    std::uint64_t bit = std::uint64_t{1} << (j % 64);
    int piv = -1;
    for (int i = rank; i < m.rows; ++i)
      if (rows[i][j / 64] & bit) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[rank], rows[piv]);
    for (int i = 0; i < m.rows; ++i)
      if (i != rank && (rows[i][j / 64] & bit))
        for (int w = 0; w < words; ++w) rows[i][w] ^= rows[rank][w];
    ++rank;
  }
  return rank;
}

namespace {

void require_valid(const Triangulation& t, const char* what) {
  if (!validate(t).valid()) throw DomainError(std::string(what) + ": invalid triangulation");
}

}  // namespace

HomologyResult h1_integral(const Triangulation& t) {
  require_valid(t, "h1_integral");
  Skeleton sk = compute_skeleton(t);
  IntMatrix d1 = boundary_d1(sk), d2 = boundary_d2(t, sk);
  int r1 = static_cast<int>(invariant_factors(d1).size());
  auto f2 = invariant_factors(d2);
  HomologyResult h;
  h.rank = sk.num_edges - r1 - static_cast<int>(f2.size());
  for (const auto& f : f2)
    if (f > 1) h.torsion.push_back(static_cast<std::int64_t>(f));
  return h;
}

int h1_z2(const Triangulation& t) {
  require_valid(t, "h1_z2");
  Skeleton sk = compute_skeleton(t);
  return sk.num_edges - rank_mod2(boundary_d1(sk)) - rank_mod2(boundary_d2(t, sk));
}

int W1Class::evaluate(const std::vector<std::array<int, 2>>& crossings) const {
  int s = 0;
  for (auto [tet, face] : crossings) s ^= bits[tet][face];
  return s;
}

W1Class w1(const Triangulation& t) {
  require_valid(t, "w1");
  Orientation o = is_orientable(t);
  int n = t.size();
  std::vector<int> shift(n, -1);
  shift[0] = 0;
  std::queue<int> q;
  q.push(0);
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    for (int f = 0; f < 4; ++f) {
      const Gluing& g = t.gluing(x, f);
      if (shift[g.tet] < 0) {
        shift[g.tet] = shift[x] ^ o.cocycle[x][f];
        q.push(g.tet);
      }
    }
  }
  W1Class w;
  w.bits.assign(n, {});
  for (int i = 0; i < n; ++i)
    for (int f = 0; f < 4; ++f) {
      const Gluing& g = t.gluing(i, f);
      w.bits[i][f] = static_cast<std::uint8_t>(o.cocycle[i][f] ^ shift[i] ^ shift[g.tet]);
      if (w.bits[i][f]) w.nonzero = true;
    }
  return w;
}

namespace {

std::string torsion_str(const std::vector<std::int64_t>& t) {
  std::string s;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(t[i]);
  }
  return s;
}

std::vector<std::int64_t> parse_torsion(const std::string& s) {
  std::vector<std::int64_t> out;
  if (s.empty()) return out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (...) {
      throw ParseError("fingerprint: bad torsion '" + item + "'");
    }
    if (used != item.size() || v < 2) throw ParseError("fingerprint: bad torsion '" + item + "'");
    out.push_back(v);
  }
  return out;
}

int parse_rank(const std::string& s) {
  std::size_t used = 0;
  int v = -1;
  try {
    v = std::stoi(s, &used);
  } catch (...) {
    throw ParseError("fingerprint: bad rank '" + s + "'");
  }
  if (used != s.size() || v < 0) throw ParseError("fingerprint: bad rank '" + s + "'");
  return v;
}

}  // namespace

std::string Fingerprint::str() const {
  std::string s = orientable ? "o" : "n";
  s += ";" + std::to_string(h1.rank) + ";" + torsion_str(h1.torsion);
  if (h1_cover) s += ";" + std::to_string(h1_cover->rank) + ";" + torsion_str(h1_cover->torsion);
  return s;
}

Fingerprint Fingerprint::parse(std::string_view sv) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : sv) {
    if (c == ';') {
      parts.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  parts.push_back(cur);
  Fingerprint f;
  if (parts[0] == "o" && parts.size() == 3) {
    f.orientable = true;
  } else if (parts[0] == "n" && parts.size() == 5) {
    f.orientable = false;
    f.h1_cover = HomologyResult{parse_rank(parts[3]), parse_torsion(parts[4])};
  } else {
    throw ParseError("fingerprint: expected o;rank;torsion or n;rank;torsion;rank;torsion");
  }
  f.h1 = HomologyResult{parse_rank(parts[1]), parse_torsion(parts[2])};
  return f;
}

Fingerprint fingerprint(const Triangulation& t) {
  require_valid(t, "fingerprint");
  Fingerprint f;
  f.orientable = is_orientable(t).orientable;
  f.h1 = h1_integral(t);
  if (!f.orientable) f.h1_cover = h1_integral(orientation_double_cover(t).cover);
  return f;
}

}  // namespace nonori
