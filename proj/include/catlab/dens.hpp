#pragma once

// Dens, nests parameterized by partition tuples, the statistics a and dinv_p,
// the skew tuple nu(pi), LW dens and the nest-sum side of the main identity.

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "catlab/exactnum.hpp"
#include "catlab/llt.hpp"
#include "catlab/shapes.hpp"

namespace catlab {

struct Den {
  int h = 0;
  EpsReal p;
  std::vector<int> d;
  std::vector<int> e;
  friend bool operator==(const Den& a, const Den& b) {
    return a.h == b.h && a.p == b.p && a.d == b.d && a.e == b.e;
  }
};

struct Nest {
  std::vector<Partition> lambdas;  // lambda_(1) .. lambda_(h-1)
  friend bool operator==(const Nest& a, const Nest& b) { return a.lambdas == b.lambdas; }
};

// First violated den condition, or nullopt if valid.
inline std::optional<std::string> validate(const Den& D) {
  if (D.h < 1) return "h must be positive";
  if (static_cast<int>(D.d.size()) != D.h + 1 || static_cast<int>(D.e.size()) != D.h + 1)
    return "d and e must have length h+1";
  if (!D.p.irrational_like()) return "p must have a nonzero eps part";
  for (int i = 0; i <= D.h - 1; ++i)
    for (int j = i + 1; j <= D.h - 1; ++j)
      if (!(EpsReal(Rational(D.d[i] - D.d[j] + 1, j - i)) > D.p))
        return "head condition fails at i=" + std::to_string(i) + ", j=" + std::to_string(j);
  for (int i = 1; i <= D.h; ++i)
    for (int j = i + 1; j <= D.h; ++j)
      if (!(EpsReal(Rational(D.e[i] - D.e[j] - 1, j - i)) < D.p))
        return "foot condition fails at i=" + std::to_string(i) + ", j=" + std::to_string(j);
  if (!(D.d[0] > D.e[0])) return "need d_0 > e_0";
  if (!(D.d[D.h] < D.e[D.h])) return "need d_h < e_h";
  if (std::accumulate(D.d.begin(), D.d.end(), 0LL) != std::accumulate(D.e.begin(), D.e.end(), 0LL))
    return "need sum(d) = sum(e)";
  return std::nullopt;
}

inline void require_valid(const Den& D) {
  if (auto v = validate(D)) throw InputError("invalid den: " + *v);
}

inline std::vector<int> g_vector(const Den& D) {
  std::vector<int> g(D.h);
  int acc = 0;
  for (int k = 1; k <= D.h; ++k) {
    acc += D.d[k - 1] - D.e[k - 1];
    g[k - 1] = acc;
  }
  return g;
}

namespace detail {
inline int part(const std::vector<Partition>& lam, int k, int i) {  // (lambda_(k))_i, 1-based, 0 outside
  if (k <= 0 || k >= static_cast<int>(lam.size()) + 1) return 0;
  const auto& p = lam[k - 1];
  return i <= static_cast<int>(p.size()) ? p[i - 1] : 0;
}
}  // namespace detail

// y_{k,i}: heights of the east steps from x=k-1 to x=k.
inline std::vector<std::vector<int>> east_heights(const Den& D, const Nest& N) {
  auto g = g_vector(D);
  std::vector<std::vector<int>> y(D.h + 1);
  for (int k = 1; k <= D.h; ++k)
    for (int i = 1; i <= g[k - 1]; ++i) y[k].push_back(D.e[k] - g[k - 1] + i - detail::part(N.lambdas, k, i));
  return y;
}

// Interval [lo, hi] of heights of non-sink points of pi_i on x = k-1.
inline std::pair<int, int> path_interval(const Den& D, const std::vector<int>& g, const Nest& N, int k, int i) {
  int gk1 = k >= 2 ? g[k - 2] : 0;
  int lo = D.e[k] - g[k - 1] + i - detail::part(N.lambdas, k, i);
  int hi = D.e[k - 1] - gk1 + i - detail::part(N.lambdas, k - 1, i);
  return {lo, hi};
}

inline bool nest_is_valid(const Den& D, const Nest& N) {
  auto g = g_vector(D);
  if (static_cast<int>(N.lambdas.size()) != D.h - 1) return false;
  for (int k = 1; k < D.h; ++k) {
    const auto& p = N.lambdas[k - 1];
    if (!p.empty() && !is_partition(p)) return false;
    if (static_cast<int>(p.size()) > std::min(g[k - 1], g[k])) return false;
  }
  for (int k = 1; k <= D.h; ++k)
    for (int i = 1; i <= g[k - 1]; ++i) {
      auto [lo, hi] = path_interval(D, g, N, k, i);
      if (lo > hi) return false;
    }
  return true;
}

// Visit every nest; returns false if the cap stopped the enumeration early.
inline bool enumerate_nests(const Den& D, const std::function<void(const Nest&)>& visit,
                            std::optional<long long> cap = std::nullopt) {
  require_valid(D);
  auto g = g_vector(D);
  for (int x : g)
    if (x <= 0) return true;
  const int h = D.h;
  // Condition at k: lambda_(k)_i - lambda_(k-1)_i >= Dk for i <= g_k.
  std::vector<int> Dk(h + 1, 0);
  for (int k = 1; k <= h; ++k) {
    int gk1 = k >= 2 ? g[k - 2] : 0;
    Dk[k] = (D.e[k] - g[k - 1]) - (D.e[k - 1] - gk1);
  }
  int gmax = *std::max_element(g.begin(), g.end());
  // Lower bounds propagated from the left.
  std::vector<std::vector<int>> low(h + 1, std::vector<int>(gmax + 1, 0));
  for (int k = 1; k < h; ++k)
    for (int i = 1; i <= gmax; ++i)
      low[k][i] = i <= g[k - 1] ? std::max(0, low[k - 1][i] + Dk[k]) : 0;
  Nest cur;
  cur.lambdas.assign(std::max(0, h - 1), {});
  long long count = 0;
  bool complete = true;
  auto rec = [&](auto& self, int k) -> void {
    if (!complete) return;
    if (k == 0) {
      // Condition at k = 1 against lambda_(0) = empty.
      for (int i = 1; i <= g[0]; ++i)
        if (detail::part(cur.lambdas, 1, i) < Dk[1]) return;
      if (cap && count >= *cap) {
        complete = false;
        return;
      }
      ++count;
      visit(cur);
      return;
    }
    // Choose lambda_(k); upper bounds from the condition at k+1.
    int len = std::min(g[k - 1], g[k]);
    std::vector<int> ub(g[k] + 1, 0);
    for (int i = 1; i <= g[k]; ++i) ub[i] = detail::part(cur.lambdas, k + 1, i) - Dk[k + 1];
    for (int i = len + 1; i <= g[k]; ++i)
      if (ub[i] < 0) return;
    for (int i = len + 1; i <= g[k - 1]; ++i)
      if (low[k][i] > 0) return;
    std::vector<int> parts(len, 0);
    auto fill = [&](auto& fself, int i, int prev) -> void {
      if (i > len) {
        Partition p(parts.begin(), parts.end());
        while (!p.empty() && p.back() == 0) p.pop_back();
        cur.lambdas[k - 1] = p;
        self(self, k - 1);
        return;
      }
      int hi = std::min(prev, ub[i]);
      for (int v = low[k][i]; v <= hi; ++v) {
        parts[i - 1] = v;
        fself(fself, i + 1, v);
      }
    };
    fill(fill, 1, INT32_MAX);
    cur.lambdas[k - 1].clear();
  };
  if (h == 1) {
    // Single column pair: only the k=1 condition with both neighbours empty.
    if (0 >= Dk[1]) visit(cur);
    return true;
  }
  rec(rec, h - 1);
  return complete;
}

inline std::vector<Nest> all_nests(const Den& D) {
  std::vector<Nest> out;
  enumerate_nests(D, [&](const Nest& n) { out.push_back(n); });
  return out;
}

// Lattice points of each path from source to sink.
inline std::vector<std::vector<std::pair<int, int>>> nest_paths(const Den& D, const Nest& N) {
  auto g = g_vector(D);
  int r = *std::max_element(g.begin(), g.end());
  std::vector<std::vector<std::pair<int, int>>> paths(r);
  for (int i = 1; i <= r; ++i) {
    int k0 = -1, k1 = -1;
    for (int k = 1; k <= D.h; ++k)
      if (g[k - 1] >= i) {
        if (k0 < 0) k0 = k;
        k1 = k;
      }
    auto& P = paths[i - 1];
    for (int k = k0; k <= k1; ++k) {
      auto [lo, hi] = path_interval(D, g, N, k, i);
      for (int y = hi; y >= lo; --y) P.emplace_back(k - 1, y);
    }
    auto [lo, hi] = path_interval(D, g, N, k1, i);
    P.emplace_back(k1, lo);
  }
  return paths;
}

// Recover lambda parameters from explicit paths.
inline Nest nest_from_paths(const Den& D, const std::vector<std::vector<std::pair<int, int>>>& paths) {
  auto g = g_vector(D);
  Nest N;
  N.lambdas.assign(std::max(0, D.h - 1), {});
  for (int k = 1; k < D.h; ++k) {
    int rk = std::min(g[k - 1], g[k]);
    std::vector<int> lam(rk, 0);
    for (int i = 1; i <= rk; ++i) {
      const auto& P = paths[i - 1];
      // East step from x=k-1 to x=k: last point with x = k-1.
      int y = INT32_MIN;
      for (auto [x, yy] : P)
        if (x == k - 1) y = yy;
      lam[i - 1] = D.e[k] - g[k - 1] + i - y;
    }
    N.lambdas[k - 1] = normalize_partition(lam);
  }
  return N;
}

inline int area_stat(const Nest& N) {
  int a = 0;
  for (const auto& p : N.lambdas) a += partition_size(p);
  return a;
}

struct SouthStep {
  int path = 0;  // 1-based
  int x = 0;
  int y = 0;  // south endpoint height
};

inline std::vector<SouthStep> south_steps(const Den& D, const Nest& N) {
  auto g = g_vector(D);
  std::vector<SouthStep> out;
  for (int k = 1; k <= D.h; ++k)
    for (int i = 1; i <= g[k - 1]; ++i) {
      auto [lo, hi] = path_interval(D, g, N, k, i);
      for (int y = hi - 1; y >= lo; --y) out.push_back({i, k - 1, y});
    }
  return out;
}

inline int dinv_stat(const Den& D, const Nest& N) {
  auto g = g_vector(D);
  auto steps = south_steps(D, N);
  int count = 0;
  for (int k = 1; k <= D.h; ++k)
    for (int i = 1; i <= g[k - 1]; ++i) {
      auto [lo, hi] = path_interval(D, g, N, k, i);
      for (int y = lo; y <= hi; ++y) {
        EpsReal vp = EpsReal(y) + D.p * Rational(k - 1);
        for (const auto& S : steps) {
          if (S.x <= k - 1) continue;
          EpsReal diff = vp - (EpsReal(S.y) + D.p * Rational(S.x));
          if (EpsReal(0) < diff && diff < EpsReal(1)) ++count;
        }
      }
    }
  return count;
}

inline EpsReal default_intercept(const Den& D) {
  EpsReal s = EpsReal(D.d[0]);
  for (int i = 0; i <= D.h; ++i) {
    s = std::max(s, EpsReal(D.d[i]) + D.p * Rational(i));
    s = std::max(s, EpsReal(D.e[i]) + D.p * Rational(i));
  }
  return s;
}

struct NuOfNest {
  SkewTuple nu;
  Perm sigma;  // sigma(k) = rank of c_k
};

// Ranks of the gaps c_k = frac(s - p(k-1)), k = 1..h.
inline Perm gap_permutation(const Den& D, const EpsReal& s) {
  std::vector<EpsReal> c(D.h);
  for (int k = 1; k <= D.h; ++k) c[k - 1] = (s - D.p * Rational(k - 1)).frac();
  return relative_order(c);
}

inline NuOfNest nu_of_nest(const Den& D, const Nest& N, const EpsReal& s) {
  for (int i = 0; i <= D.h; ++i)
    if (EpsReal(D.d[i]) + D.p * Rational(i) > s || EpsReal(D.e[i]) + D.p * Rational(i) > s)
      throw InputError("nu_of_nest: line lies below a head or foot");
  auto g = g_vector(D);
  NuOfNest out;
  out.sigma = gap_permutation(D, s);
  out.nu.assign(D.h, {});
  for (int k = 1; k <= D.h; ++k) {
    int F = static_cast<int>((s - D.p * Rational(k - 1)).floor());
    std::vector<int> al, be;
    for (int i = 1; i <= g[k - 1]; ++i) {
      auto [w, y] = path_interval(D, g, N, k, i);
      al.push_back(F - y + i);
      be.push_back(F - w + i);
    }
    out.nu[out.sigma[k - 1] - 1] = SkewShape(al, be);
  }
  return out;
}
inline NuOfNest nu_of_nest(const Den& D, const Nest& N) { return nu_of_nest(D, N, default_intercept(D)); }

// For each box of nu_of_nest(D, N, s).nu in reading order, the index into south_steps(D, N).
inline std::vector<int> box_to_step(const Den& D, const Nest& N, const EpsReal& s) {
  auto nn = nu_of_nest(D, N, s);
  auto steps = south_steps(D, N);
  std::vector<int> out;
  for (const auto& b : reading_order(nn.nu)) {
    int k = 0;
    for (int kk = 1; kk <= D.h; ++kk)
      if (nn.sigma[kk - 1] == b.comp) k = kk;
    int F = static_cast<int>((s - D.p * Rational(k - 1)).floor());
    int l = F - b.content(), idx = -1;
    for (std::size_t t = 0; t < steps.size(); ++t)
      if (steps[t].path == b.y && steps[t].x == k - 1 && steps[t].y == l) idx = static_cast<int>(t);
    out.push_back(idx);
  }
  return out;
}

struct NestTerm {
  Nest nest;
  int a = 0;
  int dinv = 0;
  SchurPoly llt;  // G_nu(z; q^{-1})
};

inline std::vector<NestTerm> nest_terms(const Den& D, int l) {
  std::vector<NestTerm> out;
  enumerate_nests(D, [&](const Nest& N) {
    NestTerm t;
    t.nest = N;
    t.a = area_stat(N);
    t.dinv = dinv_stat(D, N);
    t.llt = llt_poly(nu_of_nest(D, N).nu, l, -1);
    out.push_back(std::move(t));
  });
  return out;
}

inline SchurPoly rhs_nest_sum(const Den& D, int l) {
  SchurPoly total(l);
  for (const auto& t : nest_terms(D, l)) total += t.llt.scaled(QtLaurent::monomial(t.dinv, t.a));
  return total;
}
inline SchurPoly rhs_nest_sum(const Den& D) {
  auto g = g_vector(D);
  return rhs_nest_sum(D, std::accumulate(g.begin(), g.end(), 0));
}

// ---------------------------------------------------------------------------
// LW dens

inline int hook_max(const Partition& mu) { return mu.empty() ? 0 : mu[0] + static_cast<int>(mu.size()) - 1; }

inline std::vector<int> lw_delta(const Partition& mu) {
  int H = hook_max(mu);
  std::vector<int> v(H + 1, 0);
  for (int i = 0; i <= H; ++i)
    for (std::size_t r = 0; r < mu.size(); ++r)
      if (mu[0] - 1 - i == mu[r] - static_cast<int>(r + 1)) v[i] = 1;
  return v;
}
inline std::vector<int> lw_epsilon(const Partition& mu) {
  int H = hook_max(mu);
  std::vector<int> v(H + 1, 0);
  for (int i = 0; i <= H; ++i) v[i] = i >= mu[0] ? 1 : 0;
  return v;
}

inline long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}
inline long long ceil_div(long long a, long long b) { return -floor_div(-a, b); }

inline Den lw_den(const Partition& mu, int m, int n) {
  if (mu.empty() || !is_partition(mu)) throw InputError("lw_den: need a nonempty partition");
  if (m <= 0 || n <= 0 || std::gcd(m, n) != 1) throw InputError("lw_den: m, n must be coprime positive");
  int H = hook_max(mu);
  auto del = lw_delta(mu);
  auto eps = lw_epsilon(mu);
  Den D;
  D.h = m * H;
  D.p = EpsReal(Rational(n, m), -1);
  D.d.resize(D.h + 1);
  D.e.resize(D.h + 1);
  for (int i = 0; i <= D.h; ++i) {
    if (i % m != 0) {
      D.d[i] = D.e[i] = static_cast<int>(floor_div(1LL * n * H * m - 1LL * i * n, m));
    } else {
      int j = i / m;
      D.d[i] = n * H - n * j + del[j] - 1;
      D.e[i] = n * H - n * j + eps[j] - 1;
    }
  }
  return D;
}

inline std::vector<int> b_vec(int m, int n) {
  if (m <= 0) throw InputError("b_vec: m must be positive");
  std::vector<int> b(m);
  for (int i = 1; i <= m; ++i) b[i - 1] = static_cast<int>(ceil_div(1LL * i * n, m) - ceil_div(1LL * (i - 1) * n, m));
  return b;
}

// ---------------------------------------------------------------------------
// Statistics for nests in an LW den with n = 1, p = 1/m - eps.

struct LWStats {
  int sshare = 0;
  int attacking = 0;
  int delta = 0;
  int lw_area = 0;
};

// South steps S(pi) with attacking relation 0 < c(S') - c(S) < 1.
inline bool steps_attack(const Den& D, const SouthStep& S, const SouthStep& T) {
  EpsReal diff = (EpsReal(S.y) + D.p * Rational(S.x)) - (EpsReal(T.y) + D.p * Rational(T.x));
  return EpsReal(0) < diff && diff < EpsReal(1);
}

inline LWStats lw_statistics(const Den& D, const Nest& N, int m) {
  auto steps = south_steps(D, N);
  auto g = g_vector(D);
  LWStats st;
  for (std::size_t a = 0; a < steps.size(); ++a)
    for (std::size_t b = a + 1; b < steps.size(); ++b)
      if (steps[a].x == steps[b].x && steps[a].y == steps[b].y) ++st.sshare;
  for (const auto& S : steps)
    for (const auto& T : steps)
      if (steps_attack(D, S, T)) ++st.attacking;
  // delta: pairs with S' strictly left of S and an endpoint of S' in the region B_S.
  // Work in units of 1/m: v(P) = m*y + x is m times the height of P above the line through the origin.
  for (const auto& S : steps) {
    long long lo = 1LL * m * S.y + S.x;  // lower boundary (closed)
    long long hi = lo + m;               // upper boundary (open)
    for (const auto& T : steps) {
      if (T.x >= S.x) continue;
      long long bot = 1LL * m * T.y + T.x, top = bot + m;
      int r = m - static_cast<int>(std::llabs(top - hi));
      if (r <= 0) continue;
      if (lo <= bot && bot < hi) st.delta += r - 1;  // lower endpoint inside, S' rising above
      else if (lo < top && top < hi) st.delta += r;  // upper endpoint strictly inside
    }
  }
  auto ys = east_heights(D, N);
  for (int k = 1; k <= D.h; ++k) {
    int top = static_cast<int>(floor_div(1LL * D.d[0] * m - k, m));
    for (int y : ys[k]) st.lw_area += top - y;
  }
  return st;
}

// dinv(G,R) for a negative labeling given on south steps, using the corrected definition.
inline int lw_dinv(const Den& D, const Nest& N, int m, int magic, const std::vector<int>& labels) {
  auto steps = south_steps(D, N);
  if (labels.size() != steps.size()) throw InputError("lw_dinv: label count mismatch");
  auto gval = [&](const SouthStep& S) { return 1LL * m * D.d[0] - S.x - 1LL * m * (S.y + 1); };
  int total = magic;
  for (std::size_t A = 0; A < steps.size(); ++A)
    for (std::size_t B = 0; B < steps.size(); ++B) {
      const auto& S = steps[A];
      const auto& T = steps[B];
      long long ga = gval(S), gb = gval(T), dg = gb - ga;
      int a = -(S.y + 1), b = -(T.y + 1), u = S.path, v = T.path;
      bool rl = labels[A] < labels[B];
      if (0 < dg && dg <= m && a >= b && rl) ++total;
      if (0 <= dg && dg < m && a < b && rl) ++total;
      if (0 <= dg && dg < m && a == b && u < v && rl) ++total;
      if (a > b || (a == b && u > v)) {
        long long lo = std::max<long long>(dg, 1), hi = std::min<long long>(dg + m - 1, m - 1);
        if (hi >= lo) total += static_cast<int>(hi - lo + 1);
      }
    }
  return total;
}

// ---------------------------------------------------------------------------
// Random valid dens for property tests.

// Total length of the south steps of any nest: sum of source heights minus sum of sink heights.
inline int nest_degree(const Den& D) {
  long long t = 0;
  for (int i = 0; i <= D.h; ++i) {
    for (int j = D.e[i] + 1; j <= D.d[i]; ++j) t += j;
    for (int j = D.d[i] + 1; j <= D.e[i]; ++j) t -= j;
  }
  return static_cast<int>(t);
}

inline Den random_den(std::mt19937_64& rng, int hmax, int gmax, bool require_nest = true, int max_degree = 8) {
  static const std::vector<Rational> slopes = {Rational(1, 2), Rational(1, 3), Rational(2, 3), Rational(1),
                                               Rational(3, 2), Rational(1, 4), Rational(3, 4), Rational(0),
                                               Rational(2),    Rational(2, 5), Rational(-1, 2), Rational(5, 4)};
  std::uniform_int_distribution<int> hd(1, hmax), sl(0, static_cast<int>(slopes.size()) - 1), sg(0, 1),
      off(0, 2), lift(0, 2), sd(0, 11);
  for (int round = 0; round < 10000; ++round) {
    const int h = std::max(hd(rng), hd(rng));
    for (int attempt = 0; attempt < 2000; ++attempt) {
      Den D;
      D.h = h;
      D.p = EpsReal(slopes[sl(rng)], sg(rng) ? 1 : -1);
      EpsReal s(Rational(sd(rng), 4) + 2 * D.h);
      D.d.resize(D.h + 1);
      D.e.resize(D.h + 1);
      for (int i = 0; i <= D.h; ++i) {
        int base = static_cast<int>((s - D.p * Rational(i)).floor());
        D.d[i] = base - (off(rng) == 0 ? 1 : 0);
        D.e[i] = base - (off(rng) == 0 ? 1 : 0);
      }
      D.d[0] += lift(rng);
      D.e[D.h] += lift(rng);
      D.d[D.h] -= lift(rng);
      D.e[0] -= lift(rng);
      long long diff =
          std::accumulate(D.d.begin(), D.d.end(), 0LL) - std::accumulate(D.e.begin(), D.e.end(), 0LL);
      if (diff > 0) D.e[D.h] += static_cast<int>(diff);
      else D.d[0] -= static_cast<int>(diff);
      if (validate(D)) continue;
      auto g = g_vector(D);
      if (std::accumulate(g.begin(), g.end(), 0) > gmax) continue;
      if (*std::min_element(g.begin(), g.end()) <= 0) continue;
      if (nest_degree(D) > max_degree) continue;
      if (require_nest) {
        bool any = false;
        enumerate_nests(D, [&](const Nest&) { any = true; }, 1);
        if (!any) continue;
      }
      return D;
    }
  }
  throw std::runtime_error("random_den: no valid den found");
}

}  // namespace catlab
