#include "nonori/sol.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <set>
#include <tuple>

#include "nonori/error.hpp"

namespace nonori {

namespace {

const GL2Z kMoves[4] = {{1, 0, 1, 1}, {1, 0, -1, 1}, {1, 1, 0, 1}, {1, -1, 0, 1}};

auto key(const GL2Z& m) { return std::make_tuple(m.max_abs(), m.a, m.b, m.c, m.d); }

std::vector<GL2Z> neighbours(const GL2Z& m) {
  std::vector<GL2Z> out;
  for (const GL2Z& b : kMoves) out.push_back(b.inverse() * m * b);
  out.push_back(m.inverse());
  return out;
}

}  // namespace

TraceSquare tr_square_identity(const GL2Z& a) {
  TraceSquare t;
  t.square = a * a;
  t.trace_square = t.square.trace();
  t.predicted = a.trace() * a.trace() - 2 * a.det();
  if (!t.holds()) throw DomainError("tr_square_identity: identity failed for " + a.str());
  return t;
}

bool rep_less(const GL2Z& x, const GL2Z& y) { return key(x) < key(y); }

MonodromyClass normalize(const GL2Z& a, int extra_cap) {
  if (!a.unimodular()) throw DomainError("normalize: determinant must be +-1");
  GL2Z cur = a;
  for (bool moved = true; moved;) {
    moved = false;
    for (const GL2Z& n : neighbours(cur))
      if (rep_less(n, cur)) {
        cur = n;
        moved = true;
        break;
      }
  }
  MonodromyClass mc;
  mc.cap = static_cast<int>(cur.max_abs()) + extra_cap;
  std::set<std::tuple<std::int64_t, std::int64_t, std::int64_t, std::int64_t>> seen;
  std::queue<GL2Z> q;
  GL2Z best = cur;
  seen.insert({cur.a, cur.b, cur.c, cur.d});
  q.push(cur);
  while (!q.empty()) {
    GL2Z m = q.front();
    q.pop();
    if (rep_less(m, best)) best = m;
    for (const GL2Z& n : neighbours(m)) {
      if (n.max_abs() > mc.cap) continue;
      if (n.trace() != m.trace() && n.trace() != -m.trace()) throw DomainError("normalize: move changed |trace|");
      if (n.det() != m.det()) throw DomainError("normalize: move changed the determinant");
      if (seen.insert({n.a, n.b, n.c, n.d}).second) q.push(n);
    }
  }
  mc.rep = best;
  mc.trace = best.trace();
  mc.det = best.det();
  mc.visited = static_cast<int>(seen.size());
  return mc;
}

bool same_class(const GL2Z& a, const GL2Z& b) { return normalize(a).rep == normalize(b).rep; }

SolClass classify_sol(const GL2Z& a) {
  if (!a.unimodular()) throw DomainError("classify_sol: determinant must be +-1");
  std::int64_t t = a.trace();
  if (a.det() == -1) return {t == 0 ? Geometry::E3 : Geometry::Sol, false};
  if (std::llabs(t) > 2) return {Geometry::Sol, true};
  if (std::llabs(t) < 2) return {Geometry::E3, true};
  if (a.b == 0 && a.c == 0) return {Geometry::E3, true};
  return {Geometry::Nil, true};
}

std::vector<GL2Z> det_minus_one_roots(const GL2Z& b) {
  if (b.det() != 1) return {};
  std::int64_t sq = b.trace() - 2;
  if (sq <= 0) return {};
  auto tau = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(sq))));
  if (tau * tau != sq) return {};
  std::vector<GL2Z> out;
  for (std::int64_t t : {tau, -tau}) {
    std::int64_t a = b.a - 1, bb = b.b, c = b.c, d = b.d - 1;
    if (a % t || bb % t || c % t || d % t) continue;
    GL2Z r{a / t, bb / t, c / t, d / t};
    if (r.det() == -1 && r * r == b) out.push_back(r);
  }
  return out;
}

}  // namespace nonori
