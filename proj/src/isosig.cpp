#include "nonori/isosig.hpp"

#include <vector>

#include "nonori/error.hpp"

namespace nonori {

namespace {

constexpr std::string_view kAlphabet =
    "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789+-";

int digit_value(char c) {
  auto p = kAlphabet.find(c);
  return p == std::string_view::npos ? -1 : static_cast<int>(p);
}

// Base-64 digits needed for tokens in [0, 1 + 24n).
int token_width(int n) {
  int w = 1;
  long cap = 64;
  while (cap < 1 + 24L * n) {
    cap *= 64;
    ++w;
  }
  return w;
}

// Token stream for the BFS relabeling started at tetrahedron `start` with
// vertex relabeling `pi`. Token 0 opens a new tetrahedron glued by the
// identity; 1 + 24*tet + perm glues to an already labeled one. Returns false
// as soon as the stream exceeds `best` (when `best` is nonempty).
bool bfs_tokens(const Triangulation& t, int start, Perm4 pi, const std::vector<int>& best,
                std::vector<int>& out) {
  int n = t.size();
  std::vector<int> old_to_new(n, -1), new_to_old(n, -1);
  std::vector<Perm4> rho(n);
  std::vector<std::array<bool, 4>> done(n, {false, false, false, false});
  old_to_new[start] = 0;
  new_to_old[0] = start;
  rho[start] = pi;
  int next = 1;
  out.clear();
  bool smaller = best.empty();
  auto emit = [&](int tok) {
    if (!smaller) {
      int b = best[out.size()];
      if (tok > b) return false;
      if (tok < b) smaller = true;
    }
    out.push_back(tok);
    return true;
  };
  for (int k = 0; k < n; ++k) {
    int x = new_to_old[k];
    if (x < 0) throw DomainError("iso_sig: disconnected triangulation");
    Perm4 rinv = rho[x].inverse();
    for (int F = 0; F < 4; ++F) {
      if (done[k][F]) continue;
      const Gluing& g = t.gluing(x, rinv[F]);
      if (!g.glued()) throw DomainError("iso_sig: triangulation is not closed");
      int u = g.tet;
      if (old_to_new[u] < 0) {
        old_to_new[u] = next;
        new_to_old[next] = u;
        rho[u] = rho[x] * g.perm.inverse();
        done[k][F] = done[next][F] = true;
        ++next;
        if (!emit(0)) return false;
      } else {
        int U = old_to_new[u];
        Perm4 P = rho[u] * g.perm * rinv;
        done[k][F] = done[U][P[F]] = true;
        if (!emit(1 + 24 * U + P.code())) return false;
      }
    }
  }
  return true;
}

}  // namespace

std::string iso_sig(const Triangulation& t) {
  int n = t.size();
  if (n == 0 || n >= 64) throw DomainError("iso_sig: size must be in 1..63");
  std::vector<int> best, cur;
  for (int s = 0; s < n; ++s)
    for (int c = 0; c < Perm4::kCount; ++c)
      if (bfs_tokens(t, s, Perm4::from_code(c), best, cur) && (best.empty() || cur < best)) best.swap(cur);
  int w = token_width(n);
  std::string sig(1, kAlphabet[n]);
  for (int tok : best) {
    std::string d(w, 'a');
    for (int i = w - 1; i >= 0; --i) {
      d[i] = kAlphabet[tok % 64];
      tok /= 64;
    }
    sig += d;
  }
  return sig;
}

Triangulation from_iso_sig(std::string_view sig) {
  if (sig.empty()) throw ParseError("iso_sig: empty signature");
  int n = digit_value(sig[0]);
  if (n <= 0) throw ParseError("iso_sig: bad size character");
  int w = token_width(n);
  std::size_t pos = 1;
  auto read = [&]() {
    if (pos + w > sig.size()) throw ParseError("iso_sig: truncated signature");
    int v = 0;
    for (int i = 0; i < w; ++i) {
      int d = digit_value(sig[pos++]);
      if (d < 0) throw ParseError("iso_sig: bad character");
      v = v * 64 + d;
    }
    return v;
  };
  Triangulation t(n);
  int next = 1;
  for (int k = 0; k < n; ++k) {
    if (k >= next) throw ParseError("iso_sig: disconnected signature");
    for (int F = 0; F < 4; ++F) {
      if (t.gluing(k, F).glued()) continue;
      int tok = read();
      try {
        if (tok == 0) {
          if (next >= n) throw ParseError("iso_sig: too many tetrahedra");
          t.join(k, F, next++, Perm4());
        } else {
          int U = (tok - 1) / 24, code = (tok - 1) % 24;
          if (U >= next) throw ParseError("iso_sig: forward reference");
          t.join(k, F, U, Perm4::from_code(code));
        }
      } catch (const ParseError&) {
        throw;
      } catch (const DomainError& e) {
        throw ParseError(std::string("iso_sig: ") + e.what());
      }
    }
  }
  if (pos != sig.size()) throw ParseError("iso_sig: trailing characters");
  return t;
}

}  // namespace nonori
