#pragma once

// Demazure-Lusztig operators, twisted non-symmetric and semi-symmetric
// Hall-Littlewood polynomials, the Levi inner product, LLT series
// coefficients, and the winding, Cauchy and stable-series identity checks.
//
// Variables are z_1..z_l; T_i acts on z_i, z_{i+1}. Permutations are in
// one-line notation with values 1..n.

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "catlab/catalanimal.hpp"
#include "catlab/dens.hpp"
#include "catlab/exactnum.hpp"
#include "catlab/llt.hpp"
#include "catlab/shapes.hpp"

namespace catlab {

namespace detail {
inline const QtLaurent& qc(int which) {
  static const QtLaurent q = QtLaurent::q_pow(1), qinv = QtLaurent::q_pow(-1), qm1 = q - QtLaurent(1),
                         one_mq = QtLaurent(1) - q, qinv_m1 = qinv - QtLaurent(1), one_mqinv = QtLaurent(1) - qinv;
  switch (which) {
    case 0: return q;
    case 1: return qinv;
    case 2: return qm1;
    case 3: return one_mq;
    case 4: return qinv_m1;
    default: return one_mqinv;
  }
}
}  // namespace detail

inline MultiLaurent demazure_lusztig(int i, const MultiLaurent& f, bool inverse = false) {
  const int l = f.nvars();
  if (i < 1 || i >= l) throw InputError("demazure_lusztig: index out of range");
  using detail::qc;
  MultiLaurent out(l);
  const int x = i - 1, y = i;
  for (const auto& [w, c] : f.terms()) {
    const int a = w[x], b = w[y];
    ZWeight u = w;
    auto put = [&](int ex, int ey, const QtLaurent& k) {
      u[x] = ex;
      u[y] = ey;
      out.add(u, c * k);
    };
    if (!inverse) {
      if (a > b) {
        put(b, a, qc(0));
        for (int k = 0; k < a - b; ++k) put(a - k, b + k, qc(2));
      } else if (a == b) {
        put(a, b, qc(0));
      } else {
        put(b, a, QtLaurent(1));
        for (int k = 1; k < b - a; ++k) put(b - k, a + k, qc(3));
      }
    } else {
      if (a < b) {
        put(b, a, qc(1));
        for (int k = 0; k < b - a; ++k) put(a + k, b - k, qc(4));
      } else if (a == b) {
        put(a, b, qc(1));
      } else {
        put(b, a, QtLaurent(1));
        for (int k = 1; k < a - b; ++k) put(b + k, a - k, qc(5));
      }
    }
  }
  return out;
}

inline bool is_dominant(const ZWeight& w) { return std::is_sorted(w.begin(), w.end(), std::greater<>()); }

// s_i sigma: swap the values i and i+1.
inline Perm left_transposition(Perm s, int i) {
  for (int& v : s) {
    if (v == i) v = i + 1;
    else if (v == i + 1) v = i;
  }
  return s;
}

namespace detail {
struct ECache {
  std::recursive_mutex mu;
  std::map<std::pair<ZWeight, Perm>, MultiLaurent> memo;
};
inline ECache& e_cache() {
  static ECache c;
  return c;
}

// E^sigma_lam for lam with minimum entry 0.
inline const MultiLaurent& ns_hl_E_normalized(const ZWeight& lam, const Perm& sigma) {
  auto& cache = e_cache();
  std::lock_guard<std::recursive_mutex> lock(cache.mu);
  auto key = std::make_pair(lam, sigma);
  auto it = cache.memo.find(key);
  if (it != cache.memo.end()) return it->second;
  const int l = static_cast<int>(lam.size());
  MultiLaurent val(l);
  std::size_t i = 0;
  while (i + 1 < lam.size() && lam[i] >= lam[i + 1]) ++i;
  if (i + 1 >= lam.size()) {
    val = MultiLaurent::monomial(lam);
  } else {
    const int k = static_cast<int>(i) + 1;  // T_k with lam_k < lam_{k+1}
    ZWeight lam2 = lam;
    std::swap(lam2[i], lam2[i + 1]);
    Perm s2 = left_transposition(sigma, k);
    int pk = 0, pk1 = 0;
    for (int j = 0; j < l; ++j) {
      if (sigma[j] == k) pk = j;
      if (sigma[j] == k + 1) pk1 = j;
    }
    const MultiLaurent& prev = ns_hl_E_normalized(lam2, s2);
    if (pk < pk1)
      val = demazure_lusztig(k, prev, false).scaled(qc(1));
    else
      val = demazure_lusztig(k, prev, true);
  }
  return cache.memo.emplace(std::move(key), std::move(val)).first->second;
}
}  // namespace detail

inline MultiLaurent ns_hl_E(const ZWeight& lam, const Perm& sigma) {
  const int l = static_cast<int>(lam.size());
  if (static_cast<int>(sigma.size()) != l) throw InputError("ns_hl_E: twist has wrong size");
  if (l == 0) return MultiLaurent::constant(0, QtLaurent(1));
  int m = *std::min_element(lam.begin(), lam.end());
  ZWeight base = lam;
  for (int& v : base) v -= m;
  const MultiLaurent& e = detail::ns_hl_E_normalized(base, sigma);
  if (m == 0) return e;
  return e.shifted(ZWeight(l, m));
}

inline Perm times_w0(const Perm& sigma) { return Perm(sigma.rbegin(), sigma.rend()); }

inline ZWeight negated(ZWeight w) {
  for (int& v : w) v = -v;
  return w;
}

inline MultiLaurent ns_hl_F(const ZWeight& lam, const Perm& sigma) {
  return ns_hl_E(negated(lam), times_w0(sigma)).bar();
}

// ---------------------------------------------------------------------------
// Levi data

inline int comp_size(const std::vector<int>& r) { return std::accumulate(r.begin(), r.end(), 0); }

inline std::vector<int> block_starts(const std::vector<int>& r) {
  std::vector<int> st(r.size(), 0);
  for (std::size_t i = 1; i < r.size(); ++i) st[i] = st[i - 1] + r[i - 1];
  return st;
}

inline void require_composition(const std::vector<int>& r) {
  for (int x : r)
    if (x < 0) throw InputError("composition entries must be nonnegative");
}

inline Perm sigma_hat(const Perm& sigma, const std::vector<int>& r) {
  const int k = static_cast<int>(r.size());
  if (static_cast<int>(sigma.size()) != k) throw InputError("sigma_hat: permutation size mismatch");
  require_composition(r);
  auto st = block_starts(r);
  Perm out(comp_size(r));
  int pos = 0;
  for (int i = 0; i < k; ++i) {
    int b = sigma[i] - 1;
    for (int j = 1; j <= r[b]; ++j) out[pos++] = st[b] + j;
  }
  return out;
}

// Drop zero blocks; the twist keeps the relative order of sigma^{-1} on the survivors.
inline std::pair<std::vector<int>, Perm> reduce_weak(const std::vector<int>& r, const Perm& sigma) {
  Perm inv = perm_inverse(sigma);
  std::vector<int> s, keys;
  for (std::size_t i = 0; i < r.size(); ++i)
    if (r[i] > 0) {
      s.push_back(r[i]);
      keys.push_back(inv[i]);
    }
  return {s, perm_inverse(relative_order(keys))};
}

inline bool is_regular_dominant_for(const ZWeight& mu, const std::vector<int>& r) {
  auto st = block_starts(r);
  for (std::size_t b = 0; b < r.size(); ++b)
    for (int j = 1; j < r[b]; ++j)
      if (mu[st[b] + j - 1] <= mu[st[b] + j]) return false;
  return true;
}

inline std::set<Root> levi_roots(const std::vector<int>& r) {
  std::set<Root> out;
  auto st = block_starts(r);
  for (std::size_t b = 0; b < r.size(); ++b)
    for (int i = 0; i < r[b]; ++i)
      for (int j = i + 1; j < r[b]; ++j) out.insert({st[b] + i, st[b] + j});
  return out;
}

inline std::set<Root> off_levi_roots(const std::vector<int>& r) {
  std::set<Root> out;
  auto in = levi_roots(r);
  for (const auto& a : all_positive_roots(comp_size(r)))
    if (!in.count(a)) out.insert(a);
  return out;
}

struct LeviData {
  std::vector<int> r;
  std::vector<int> maxima;
  std::vector<int> minima;

  // Nonempty blocks get minima M_i - r_i + 1; empty blocks take the given artificial minima.
  static LeviData from_maxima(std::vector<int> r, std::vector<int> M, std::vector<int> empty_minima = {}) {
    require_composition(r);
    if (M.size() != r.size()) throw InputError("LeviData: maxima length mismatch");
    LeviData L{std::move(r), std::move(M), {}};
    L.minima.resize(L.r.size());
    for (std::size_t i = 0; i < L.r.size(); ++i) {
      if (L.r[i] > 0) {
        L.minima[i] = L.maxima[i] - L.r[i] + 1;
      } else {
        int m = i < empty_minima.size() ? empty_minima[i] : L.maxima[i] + 1;
        if (m <= L.maxima[i]) throw InputError("LeviData: empty block needs minimum above maximum");
        L.minima[i] = m;
      }
    }
    return L;
  }
  static LeviData standard(const std::vector<int>& r) {
    std::vector<int> M(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) M[i] = r[i] - 1;
    return from_maxima(r, M);
  }
  int size() const { return comp_size(r); }
  ZWeight rho() const {
    ZWeight out;
    for (std::size_t i = 0; i < r.size(); ++i)
      for (int j = 0; j < r[i]; ++j) out.push_back(maxima[i] - j);
    return out;
  }
};

// ---------------------------------------------------------------------------
// Semi-symmetrization

namespace detail {
// z^rho_B chi_nu(Z_B) for a strictly decreasing block exponent v in len variables.
inline MultiLaurent block_character(const ZWeight& v) {
  const int len = static_cast<int>(v.size());
  ZWeight nu(len);
  for (int j = 0; j < len; ++j) nu[j] = v[j] - (len - 1 - j);
  int low = nu.back();
  Partition p;
  for (int x : nu) p.push_back(x - low);
  p = strip_zeros(p);
  ZWeight shift(len);
  for (int j = 0; j < len; ++j) shift[j] = low + (len - 1 - j);
  return schur_in_vars(p, len).shifted(shift);
}

inline MultiLaurent concat_product(const MultiLaurent& a, const MultiLaurent& b) {
  const int la = a.nvars(), lb = b.nvars();
  MultiLaurent out(la + lb);
  for (const auto& [u, c] : a.terms())
    for (const auto& [v, d] : b.terms()) {
      ZWeight w(u);
      w.insert(w.end(), v.begin(), v.end());
      out.add(std::move(w), c * d);
    }
  return out;
}
}  // namespace detail

inline MultiLaurent delta_r(const MultiLaurent& f, const std::vector<int>& r) {
  require_composition(r);
  const int l = f.nvars();
  if (comp_size(r) != l && !f.is_zero()) throw InputError("delta_r: composition does not match variable count");
  std::vector<int> blocks;
  for (int x : r)
    if (x > 0) blocks.push_back(x);
  if (std::all_of(blocks.begin(), blocks.end(), [](int x) { return x == 1; })) return f;
  std::map<ZWeight, QtLaurent> acc;
  for (const auto& [w, c] : f.terms()) {
    ZWeight key;
    key.reserve(l);
    int swaps = 0, pos = 0;
    bool singular = false;
    for (int len : blocks) {
      std::vector<int> v(w.begin() + pos, w.begin() + pos + len);
      for (int i = 1; i < len; ++i) {
        int x = v[i], j = i - 1;
        while (j >= 0 && v[j] < x) {
          v[j + 1] = v[j];
          --j;
          ++swaps;
        }
        v[j + 1] = x;
      }
      for (int i = 1; i < len; ++i)
        if (v[i] == v[i - 1]) singular = true;
      key.insert(key.end(), v.begin(), v.end());
      pos += len;
    }
    if (singular) continue;
    auto& slot = acc[key];
    slot += swaps % 2 ? -c : c;
  }
  MultiLaurent out(l);
  for (const auto& [key, c] : acc) {
    if (c.is_zero()) continue;
    MultiLaurent prod = MultiLaurent::constant(0, QtLaurent(1));
    int pos = 0;
    for (int len : blocks) {
      ZWeight v(key.begin() + pos, key.begin() + pos + len);
      prod = detail::concat_product(prod, detail::block_character(v));
      pos += len;
    }
    out += prod.scaled(c);
  }
  return out;
}

inline void require_regular_dominant(const ZWeight& mu, const std::vector<int>& r, const char* who) {
  if (static_cast<int>(mu.size()) != comp_size(r)) throw InputError(std::string(who) + ": weight length mismatch");
  if (!is_regular_dominant_for(mu, r))
    throw InputError(std::string(who) + ": weight is not regular dominant for the Levi subgroup");
}

inline MultiLaurent semi_E(const std::vector<int>& r, const Perm& sigma, const ZWeight& mu) {
  require_regular_dominant(mu, r, "semi_E");
  return delta_r(ns_hl_E(mu, sigma_hat(sigma, r)), r);
}

inline MultiLaurent semi_F(const std::vector<int>& r, const Perm& sigma, const ZWeight& mu) {
  require_regular_dominant(mu, r, "semi_F");
  return delta_r(ns_hl_F(mu, sigma_hat(sigma, r)), r);
}

// ---------------------------------------------------------------------------
// Constant terms and inner products

inline QtLaurent ct_root_denominators(const MultiLaurent& P, const std::set<Root>& denom_roots, const QtLaurent& unit,
                                      const ZWeight& target) {
  std::vector<Root> roots(denom_roots.begin(), denom_roots.end());
  QtLaurent total;
  const int l = P.nvars();
  if (static_cast<int>(target.size()) != l && !P.is_zero()) throw InputError("ct_root_denominators: length mismatch");
  for (const auto& [w, c] : P.terms()) {
    ZWeight nu(l);
    for (int i = 0; i < l; ++i) nu[i] = target[i] - w[i];
    QtLaurent k = kostant_q(nu, roots, unit);
    if (!k.is_zero()) total += c * k;
  }
  return total;
}

inline MultiLaurent root_product(int l, const std::set<Root>& roots, const QtLaurent& unit) {
  MultiLaurent f = MultiLaurent::constant(l, QtLaurent(1));
  for (const auto& a : roots) {
    ZWeight w(l, 0);
    w[a.i] = 1;
    w[a.j] = -1;
    MultiLaurent factor = MultiLaurent::constant(l, QtLaurent(1));
    factor.add(w, -unit);
    f = f * factor;
  }
  return f;
}

inline QtLaurent inner_product_r(const MultiLaurent& f, const MultiLaurent& g, const std::vector<int>& r) {
  const int l = comp_size(r);
  if (f.is_zero() || g.is_zero()) return {};
  if (f.nvars() != l || g.nvars() != l) throw InputError("inner_product_r: variable count mismatch");
  auto all = all_positive_roots(l);
  std::set<Root> rplus(all.begin(), all.end());
  const QtLaurent qinv = QtLaurent::q_pow(-1);
  MultiLaurent P = f * g * root_product(l, rplus, QtLaurent(1)) * root_product(l, levi_roots(r), qinv);
  return ct_root_denominators(P, rplus, qinv, ZWeight(l, 0));
}

// Coefficient of E^sigma_{r,mu} in f.
inline QtLaurent e_basis_coeff(const MultiLaurent& f, const std::vector<int>& r, const Perm& sigma, const ZWeight& mu) {
  return inner_product_r(f, semi_F(r, sigma, mu).bar(), r);
}

// chi_lam in l variables for a dominant weight lam (entries may be negative).
inline MultiLaurent character_monomials(const ZWeight& lam) {
  if (!is_dominant(lam)) throw InputError("character_monomials: weight must be weakly decreasing");
  const int l = static_cast<int>(lam.size());
  if (l == 0) return MultiLaurent::constant(0, QtLaurent(1));
  int low = lam.back();
  Partition p;
  for (int x : lam) p.push_back(x - low);
  return schur_in_vars(strip_zeros(p), l).shifted(ZWeight(l, low));
}

// ---------------------------------------------------------------------------
// LLT series

struct LLTSeriesSpec {
  std::vector<int> r;
  Perm sigma;
  ZWeight alpha, beta;
};

inline void require_spec(const LLTSeriesSpec& s) {
  require_composition(s.r);
  if (static_cast<int>(s.sigma.size()) != static_cast<int>(s.r.size()))
    throw InputError("LLT series: permutation size mismatch");
  require_regular_dominant(s.alpha, s.r, "LLT series alpha");
  require_regular_dominant(s.beta, s.r, "LLT series beta");
}

// <chi_lam> L^sigma_{r, beta/alpha}(z; q) from the defining structure constants.
inline QtLaurent llt_series_coeff(const LLTSeriesSpec& s, const ZWeight& lam) {
  require_spec(s);
  if (static_cast<int>(lam.size()) != comp_size(s.r)) throw InputError("llt_series_coeff: weight length mismatch");
  long long d = 0;
  for (std::size_t i = 0; i < lam.size(); ++i) d += lam[i] - s.beta[i] + s.alpha[i];
  if (d != 0) return {};
  Perm inv = perm_inverse(s.sigma);
  MultiLaurent f = character_monomials(lam) * semi_E(s.r, inv, s.alpha);
  return e_basis_coeff(f, s.r, inv, s.beta).invert(true, false);
}

// The same coefficient through the q-symmetrization formula.
inline QtLaurent llt_series_coeff_hq(const LLTSeriesSpec& s, const ZWeight& lam) {
  require_spec(s);
  Perm inv = perm_inverse(s.sigma);
  MultiLaurent P = (semi_F(s.r, inv, s.beta) * semi_E(s.r, inv, s.alpha).bar()).reversed();
  std::vector<int> rr(s.r.rbegin(), s.r.rend());
  return weyl_series_coefficient(P, off_levi_roots(rr), lam);
}

inline SkewTuple llt_series_tuple(const std::vector<int>& r, const ZWeight& alpha, const ZWeight& beta) {
  SkewTuple nu;
  auto st = block_starts(r);
  for (std::size_t b = 0; b < r.size(); ++b) {
    std::vector<int> a, c;
    for (int j = 1; j <= r[b]; ++j) {
      a.push_back(alpha[st[b] + j - 1] + j);
      c.push_back(beta[st[b] + j - 1] + j);
    }
    nu.emplace_back(a, c);
  }
  return nu;
}

// Polynomial part of L^sigma_{r, beta/alpha}(z; q) in l = |r| variables.
inline SchurPoly llt_series_pol(const LLTSeriesSpec& s) {
  require_spec(s);
  const int l = comp_size(s.r);
  for (int i = 0; i < l; ++i)
    if (s.alpha[i] > s.beta[i]) return SchurPoly(l);
  SkewTuple nu = llt_series_tuple(s.r, s.alpha, s.beta);
  int h = static_cast<int>(sigma_triples(nu, s.sigma).size());
  return llt_poly(permute_tuple(nu, s.sigma), l, -1).scaled(QtLaurent::q_pow(h));
}

// ---------------------------------------------------------------------------
// Winding permutations

struct WindingData {
  std::vector<int> eta;  // descent indicator
  Perm tau, theta;       // head and tail
};

inline WindingData winding_data(const Perm& sigma) {
  const int n = static_cast<int>(sigma.size());
  if (n < 2) throw InputError("winding_data: need at least two letters");
  WindingData w;
  for (int i = 0; i + 1 < n; ++i) w.eta.push_back(sigma[i] > sigma[i + 1] ? 1 : 0);
  w.tau = relative_order(std::vector<int>(sigma.begin(), sigma.end() - 1));
  w.theta = relative_order(std::vector<int>(sigma.begin() + 1, sigma.end()));
  return w;
}

// Relative order of frac(y + x i), i = 1..n.
inline Perm progression_permutation(const EpsReal& x, const EpsReal& y, int n) {
  std::vector<EpsReal> c;
  for (int i = 1; i <= n; ++i) c.push_back((y + x * Rational(i)).frac());
  return relative_order(c);
}

// All winding permutations in S_n reachable from progressions with small denominators.
inline std::vector<Perm> winding_permutations(int n) {
  std::set<Perm> found;
  const int den = 2 * n + 2;
  for (int b = 1; b <= den; ++b)
    for (int a = 0; a <= b; ++a)
      for (int e : {-1, 1})
        for (int dd = 1; dd <= 2 * den; ++dd)
          for (int cc = 0; cc < dd; ++cc) {
            EpsReal x(Rational(a, b), Rational(e)), y(Rational(cc, dd));
            found.insert(progression_permutation(x, y, n));
          }
  return {found.begin(), found.end()};
}

inline ZWeight block_constant(const std::vector<int>& r, const std::vector<int>& vals) {
  ZWeight out;
  for (std::size_t i = 0; i < r.size(); ++i)
    for (int j = 0; j < r[i]; ++j) out.push_back(vals[i]);
  return out;
}

// Both winding identities for sigma in S_{k+1}, r of length k, mu regular dominant for GL_r.
inline std::optional<std::string> winding_check(const Perm& sigma, const std::vector<int>& r, const ZWeight& mu) {
  if (sigma.size() != r.size() + 1) throw InputError("winding_check: need sigma in S_{k+1} for r of length k");
  require_regular_dominant(mu, r, "winding_check");
  auto w = winding_data(sigma);
  ZWeight eh = block_constant(r, w.eta);
  ZWeight shifted_mu = mu;
  for (std::size_t i = 0; i < mu.size(); ++i) shifted_mu[i] -= eh[i];
  Perm ti = perm_inverse(w.tau), hi = perm_inverse(w.theta);
  if (semi_E(r, hi, mu) != semi_E(r, ti, shifted_mu).shifted(eh))
    return "E winding identity fails for sigma=" + weight_string(sigma) + " r=" + weight_string(r) +
           " mu=" + weight_string(mu);
  if (semi_F(r, hi, mu) != semi_F(r, ti, shifted_mu).shifted(eh))
    return "F winding identity fails for sigma=" + weight_string(sigma) + " r=" + weight_string(r) +
           " mu=" + weight_string(mu);
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Cauchy identity

inline bool almost_decreasing(const std::vector<int>& m, const Perm& sigma) {
  Perm inv = perm_inverse(sigma);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (m[i] < m[j] - (inv[i] > inv[j] ? 1 : 0)) return false;
  return true;
}

inline bool almost_increasing(const std::vector<int>& m, const Perm& sigma) {
  Perm inv = perm_inverse(sigma);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (m[i] > m[j] + (inv[i] < inv[j] ? 1 : 0)) return false;
  return true;
}

inline std::optional<std::string> cauchy_hypotheses(const LeviData& R, const LeviData& S, const Perm& sigma) {
  if (R.r.size() != S.r.size() || sigma.size() != R.r.size()) return "block counts differ";
  if (R.maxima != S.maxima) return "block maxima differ";
  if (!almost_decreasing(R.minima, sigma)) return "minima of rho_r are not sigma-almost decreasing";
  if (!almost_increasing(S.minima, sigma)) return "minima of rho_s are not sigma-almost increasing";
  return std::nullopt;
}

namespace detail {
inline MultiLaurent truncate_t(const MultiLaurent& f, int tmax) {
  MultiLaurent out(f.nvars());
  for (const auto& [w, c] : f.terms()) out.add(w, c.truncate_t(tmax));
  return out;
}

inline MultiLaurent embed(const MultiLaurent& f, int before, int after) {
  MultiLaurent out(before + f.nvars() + after);
  for (const auto& [w, c] : f.terms()) {
    ZWeight u(before, 0);
    u.insert(u.end(), w.begin(), w.end());
    u.resize(before + f.nvars() + after, 0);
    out.add(std::move(u), c);
  }
  return out;
}

// Tuples of partitions with the given length bounds and total size n.
inline void partition_tuples(const std::vector<int>& max_len, int n,
                             const std::function<void(const std::vector<Partition>&)>& visit) {
  std::vector<Partition> cur(max_len.size());
  auto rec = [&](auto& self, std::size_t i, int rem) -> void {
    if (i == max_len.size()) {
      if (rem == 0) visit(cur);
      return;
    }
    for (int k = 0; k <= rem; ++k)
      for (const auto& p : partitions_of(k, max_len[i])) {
        if (max_len[i] == 0 && k > 0) continue;
        cur[i] = p;
        self(self, i + 1, rem - k);
      }
    cur[i].clear();
  };
  rec(rec, 0, n);
}

inline ZWeight pad_blocks(const std::vector<int>& r, const std::vector<Partition>& parts) {
  ZWeight out;
  for (std::size_t i = 0; i < r.size(); ++i) {
    for (int j = 0; j < r[i]; ++j) out.push_back(j < static_cast<int>(parts[i].size()) ? parts[i][j] : 0);
  }
  return out;
}
}  // namespace detail

// Left side of the Cauchy identity in variables (x, y), through t-degree tmax.
inline MultiLaurent cauchy_lhs(const std::vector<int>& r, const std::vector<int>& s, int tmax) {
  const int nr = comp_size(r), ns = comp_size(s), L = nr + ns;
  auto sr = block_starts(r), ss = block_starts(s);
  MultiLaurent f = MultiLaurent::constant(L, QtLaurent(1));
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = i; j < s.size(); ++j)
      for (int a = 0; a < r[i]; ++a)
        for (int b = 0; b < s[j]; ++b) {
          ZWeight w(L, 0);
          w[sr[i] + a] = 1;
          w[nr + ss[j] + b] = 1;
          MultiLaurent geo = MultiLaurent::constant(L, QtLaurent(1));
          ZWeight p(L, 0);
          for (int k = 1; k <= tmax; ++k) {
            for (int x = 0; x < L; ++x) p[x] += w[x];
            geo.add(p, QtLaurent::t_pow(k));
          }
          f = detail::truncate_t(f * geo, tmax);
          if (i < j) {
            MultiLaurent num = MultiLaurent::constant(L, QtLaurent(1));
            num.add(w, -QtLaurent::monomial(1, 1));
            f = detail::truncate_t(f * num, tmax);
          }
        }
  return f;
}

inline MultiLaurent cauchy_rhs(const LeviData& R, const LeviData& S, const Perm& sigma, int tmax) {
  const int nr = R.size(), ns = S.size();
  ZWeight rr = R.rho(), rs = S.rho();
  std::vector<int> max_len(R.r.size());
  for (std::size_t i = 0; i < R.r.size(); ++i) max_len[i] = std::min(R.r[i], S.r[i]);
  MultiLaurent total(nr + ns);
  for (int n = 0; n <= tmax; ++n) {
    detail::partition_tuples(max_len, n, [&](const std::vector<Partition>& lam) {
      ZWeight a = detail::pad_blocks(R.r, lam), b = detail::pad_blocks(S.r, lam);
      for (int i = 0; i < nr; ++i) a[i] += rr[i];
      for (int i = 0; i < ns; ++i) b[i] += rs[i];
      MultiLaurent e = semi_E(R.r, sigma, a).map_coeffs_invert_q().shifted(negated(rr));
      MultiLaurent f = semi_F(S.r, sigma, b).shifted(negated(rs));
      total += (detail::embed(e, 0, ns) * detail::embed(f, nr, 0)).scaled(QtLaurent::t_pow(n));
    });
  }
  return total;
}

inline std::optional<std::string> cauchy_check(const LeviData& R, const LeviData& S, const Perm& sigma, int tmax) {
  if (auto bad = cauchy_hypotheses(R, S, sigma)) throw InputError("cauchy_check: " + *bad);
  if (tmax < 0) throw InputError("cauchy_check: tmax must be nonnegative");
  MultiLaurent lhs = cauchy_lhs(R.r, S.r, tmax), rhs = cauchy_rhs(R, S, sigma, tmax);
  for (int j = 0; j <= tmax; ++j) {
    MultiLaurent a(lhs.nvars()), b(rhs.nvars());
    for (const auto& [w, c] : lhs.terms()) a.add(w, c.t_slice(j));
    for (const auto& [w, c] : rhs.terms()) b.add(w, c.t_slice(j));
    if (a != b) return "Cauchy identity fails in t-degree " + std::to_string(j);
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Stable series identity

struct StableInstance {
  int h = 0;
  EpsReal p, s;
  std::vector<int> u, v, gamma;
};

struct StableData {
  std::vector<int> b;  // b_1..b_{h+1}
  Perm sigma, tau, theta;
  Catalanimal H;
};

inline StableData stable_data(const StableInstance& I) {
  const int h = I.h;
  if (h < 1 || static_cast<int>(I.u.size()) != h || static_cast<int>(I.v.size()) != h ||
      static_cast<int>(I.gamma.size()) != h)
    throw InputError("stable instance: vectors must have length h");
  if (!I.p.irrational_like()) throw InputError("stable instance: p must have a nonzero eps part");
  StableData D;
  std::vector<EpsReal> c;
  for (int i = 1; i <= h + 1; ++i) {
    EpsReal a = I.s - I.p * Rational(i - 1), b = I.s - I.p * Rational(i);
    D.b.push_back(static_cast<int>(a.floor() - b.floor()));
    c.push_back(a.frac());
  }
  D.sigma = relative_order(c);
  auto w = winding_data(D.sigma);
  D.tau = w.tau;
  D.theta = w.theta;
  // u is theta^{-1}-almost decreasing, v is tau^{-1}-almost increasing.
  for (int i = 0; i < h; ++i)
    for (int j = i + 1; j < h; ++j) {
      if (I.u[i] < I.u[j] - (D.theta[i] > D.theta[j] ? 1 : 0))
        throw InputError("stable instance: u fails the almost-decreasing condition");
      if (I.v[i] > I.v[j] + (D.tau[i] < D.tau[j] ? 1 : 0))
        throw InputError("stable instance: v fails the almost-increasing condition");
    }
  for (int i = 0; i < h; ++i) {
    if (I.gamma[i] <= 0) throw InputError("stable instance: gamma must be positive");
    if (i + 1 < h && I.gamma[i + 1] - I.gamma[i] != I.u[i] - I.v[i + 1])
      throw InputError("stable instance: gamma differences do not match u and v");
  }
  std::vector<int> wt(h);
  for (int i = 0; i < h; ++i) wt[i] = I.u[i] - I.v[i] + D.b[i];
  D.H = block_catalanimal(I.gamma, wt);
  return D;
}

// u_i = f_i - e_i, v_i = f_{i-1} - d_{i-1}, gamma = g, with f_i = floor(s - p i).
inline StableInstance stable_instance_from_den(const Den& D) {
  require_valid(D);
  StableInstance I;
  I.h = D.h;
  I.p = D.p;
  I.s = default_intercept(D);
  std::vector<long long> f(D.h + 1);
  for (int i = 0; i <= D.h; ++i) f[i] = (I.s - D.p * Rational(i)).floor();
  for (int i = 1; i <= D.h; ++i) {
    I.u.push_back(static_cast<int>(f[i] - D.e[i]));
    I.v.push_back(static_cast<int>(f[i - 1] - D.d[i - 1]));
  }
  I.gamma = g_vector(D);
  return I;
}

struct StableTerm {
  std::vector<Partition> lambda;  // lambda_(h-1), ..., lambda_(1)
  LLTSeriesSpec spec;
};

// Right-hand terms with |lambda| = n.
inline std::vector<StableTerm> stable_terms(const StableInstance& I, const StableData& D, int n) {
  const int h = I.h;
  std::vector<int> rg(I.gamma.rbegin(), I.gamma.rend());
  std::vector<int> Mu(h), Mv(h);
  for (int i = 0; i < h; ++i) {
    Mu[i] = I.u[h - 1 - i] + rg[i] - 1;
    Mv[i] = I.v[h - 1 - i] + rg[i] - 1;
  }
  ZWeight rho = LeviData::from_maxima(rg, Mu).rho(), rhop = LeviData::from_maxima(rg, Mv).rho();
  std::vector<int> bvals(h);
  for (int i = 0; i < h; ++i) bvals[i] = D.b[h - 1 - i];
  ZWeight bw = block_constant(rg, bvals);
  std::vector<int> max_len(h > 1 ? h - 1 : 0);
  for (int a = 0; a + 1 < h; ++a) {
    int idx = h - 1 - a;  // lambda_(idx), 1-based
    max_len[a] = std::min(I.gamma[idx - 1], I.gamma[idx]);
  }
  std::vector<StableTerm> out;
  Perm tw = perm_compose(D.tau, perm_longest(h));
  detail::partition_tuples(max_len, n, [&](const std::vector<Partition>& lam) {
    std::vector<Partition> zl{{}}, lz = lam;
    zl.insert(zl.end(), lam.begin(), lam.end());
    lz.push_back({});
    StableTerm t;
    t.lambda = lam;
    t.spec.r = rg;
    t.spec.sigma = tw;
    t.spec.beta = detail::pad_blocks(rg, zl);
    t.spec.alpha = detail::pad_blocks(rg, lz);
    for (std::size_t i = 0; i < rho.size(); ++i) {
      t.spec.beta[i] += bw[i] + rho[i];
      t.spec.alpha[i] += rhop[i];
    }
    out.push_back(std::move(t));
  });
  return out;
}

struct StableComparison {
  ZWeight lam;
  QtLaurent lhs, rhs;
  bool ok() const { return lhs == rhs; }
};

// Right side through t-degree tmax at each weight.
inline std::vector<QtLaurent> stable_rhs(const StableInstance& I, const StableData& D, const std::vector<ZWeight>& weights,
                                         int tmax) {
  std::vector<QtLaurent> out(weights.size());
  for (int n = 0; n <= tmax; ++n)
    for (const auto& term : stable_terms(I, D, n)) {
      Perm inv = perm_inverse(term.spec.sigma);
      MultiLaurent P =
          (semi_F(term.spec.r, inv, term.spec.beta) * semi_E(term.spec.r, inv, term.spec.alpha).bar()).reversed();
      std::vector<int> rr(term.spec.r.rbegin(), term.spec.r.rend());
      auto roots = off_levi_roots(rr);
      for (std::size_t k = 0; k < weights.size(); ++k)
        out[k] += weyl_series_coefficient(P, roots, weights[k]) * QtLaurent::t_pow(n);
    }
  return out;
}

inline std::vector<StableComparison> stable_main_check(const StableInstance& I, const std::vector<ZWeight>& weights,
                                                       int tmax) {
  StableData D = stable_data(I);
  auto rhs = stable_rhs(I, D, weights, tmax);
  std::vector<StableComparison> out;
  for (std::size_t k = 0; k < weights.size(); ++k)
    out.push_back({weights[k], character_coefficient(D.H, weights[k]).truncate_t(tmax), rhs[k]});
  return out;
}

}  // namespace catlab
