#pragma once

// LLT polynomials from attacking inversions, their omega images from negative
// tableaux, sigma-triples and the N^sigma generating function.

#include <functional>
#include <map>
#include <vector>

#include "catlab/exactnum.hpp"
#include "catlab/shapes.hpp"

namespace catlab {

using TableauStat = std::function<int(const std::vector<int>&)>;

// Coefficients of the dominant monomials z^lam (lam weakly decreasing) in
// sum_T q^{qexp * stat(T)} z^T over tableaux with letters in [1, l].
// Letters are placed one value at a time, so content is dominant by construction.
inline std::map<Partition, QtLaurent> dominant_tableau_sum(const SkewTuple& nu, int l, bool negative,
                                                           const TableauStat& stat, int qexp) {
  TableauFrame fr(nu);
  const int n = static_cast<int>(fr.size());
  std::map<Partition, QtLaurent> out;
  if (n == 0) {
    out[{}] += QtLaurent::q_pow(qexp * stat({}));
    return out;
  }
  std::vector<int> T(n, 0);
  std::vector<int> counts;
  auto eligible = [&](int b, int v) {
    int L = fr.left[b], D = fr.below[b];
    if (negative) {
      if (L >= 0 && !(T[L] > 0 && T[L] < v)) return false;
      if (D >= 0 && T[D] == 0) return false;
    } else {
      if (L >= 0 && T[L] == 0) return false;
      if (D >= 0 && !(T[D] > 0 && T[D] < v)) return false;
    }
    return true;
  };
  // letter v, position k in fill_order, boxes used so far with this letter, remaining boxes, cap
  auto per_letter = [&](auto& self, int v, int k, int used, int remaining, int cap) -> void {
    if (k == n) {
      if (used == 0 && remaining > 0) return;
      int rem = remaining - used;
      counts.push_back(used);
      if (rem == 0) {
        Partition key(counts.begin(), counts.end());
        while (!key.empty() && key.back() == 0) key.pop_back();
        out[key] += QtLaurent::q_pow(qexp * stat(T));
      } else if (v < l && 1LL * used * (l - v) >= rem) {
        self(self, v + 1, 0, 0, rem, used);
      }
      counts.pop_back();
      return;
    }
    int b = fr.fill_order[k];
    // Skip this box.
    self(self, v, k + 1, used, remaining, cap);
    if (T[b] == 0 && used < cap && eligible(b, v)) {
      T[b] = v;
      self(self, v, k + 1, used + 1, remaining, cap);
      T[b] = 0;
    }
  };
  per_letter(per_letter, 1, 0, 0, n, n);
  return out;
}

inline int total_rows(const SkewTuple& nu) {
  int r = 0;
  for (const auto& s : nu) r += s.rows();
  return r;
}

// G_nu(z_1..z_l; q^qexp) in the Schur basis.
inline SchurPoly llt_poly(const SkewTuple& nu, int l, int qexp = 1) {
  TableauFrame fr(nu);
  auto pairs = attacking_pairs(nu);
  auto stat = [&](const std::vector<int>& T) { return tableau_inv(fr, pairs, T, false); };
  return schur_from_dominant(dominant_tableau_sum(nu, l, false, stat, qexp), l);
}
inline SchurPoly llt_poly(const SkewTuple& nu) { return llt_poly(nu, std::max(1, total_rows(nu))); }

// Generating function of negative tableaux in l variables, in the Schur basis.
inline SchurPoly omega_llt(const SkewTuple& nu, int l, int qexp = 1) {
  TableauFrame fr(nu);
  auto pairs = attacking_pairs(nu);
  auto stat = [&](const std::vector<int>& T) { return tableau_inv(fr, pairs, T, true); };
  return schur_from_dominant(dominant_tableau_sum(nu, l, true, stat, qexp), l);
}

// Brute-force LLT polynomial from the full monomial expansion (test oracle).
inline SchurPoly llt_poly_bruteforce(const SkewTuple& nu, int l, bool negative = false) {
  TableauFrame fr(nu);
  auto pairs = attacking_pairs(nu);
  MultiLaurent f(l);
  enumerate_ssyt(nu, l, negative, [&](const std::vector<int>& T) {
    f.add(tableau_content(T, l), QtLaurent::q_pow(tableau_inv(fr, pairs, T, negative)));
  });
  if (fr.size() == 0) f = MultiLaurent::constant(l, QtLaurent(1));
  std::map<Partition, QtLaurent> dom;
  for (const auto& [w, c] : f.terms())
    if (std::is_sorted(w.begin(), w.end(), std::greater<>())) dom[strip_zeros(w)] = c;
  return schur_from_dominant(dom, l);
}

// ---------------------------------------------------------------------------
// sigma-triples

struct SigmaTriple {
  int i = 0;  // component of b (1-based)
  int j = 0;  // component of a and c
  Box a, b, c;
  bool a_in = false;
  bool c_in = false;
};

// sigma in one-line notation on components 1..k.
inline std::vector<SigmaTriple> sigma_triples(const SkewTuple& nu, const Perm& sigma) {
  const int k = static_cast<int>(nu.size());
  if (static_cast<int>(sigma.size()) != k) throw InputError("sigma_triples: permutation size mismatch");
  std::vector<SigmaTriple> out;
  for (int i = 1; i <= k; ++i) {
    auto bi = nu[i - 1].boxes();
    for (int j = i + 1; j <= k; ++j) {
      const auto& sj = nu[j - 1];
      for (int r = 0; r < sj.rows(); ++r) {
        int y = sj.y0 + r + 1;
        for (int x = sj.alpha[r]; x <= sj.beta[r]; ++x) {
          int target = sigma[i - 1] < sigma[j - 1] ? (x + 1 - y) : (x - y);
          for (auto [bx, by] : bi) {
            if (bx - by != target) continue;
            SigmaTriple t;
            t.i = i;
            t.j = j;
            t.a = {j, x, y};
            t.c = {j, x + 1, y};
            t.b = {i, bx, by};
            t.a_in = x > sj.alpha[r];
            t.c_in = x + 1 <= sj.beta[r];
            out.push_back(t);
          }
        }
      }
    }
  }
  return out;
}

// sigma(nu) with sigma(nu)_(sigma(i)) = nu_(i).
inline SkewTuple permute_tuple(const SkewTuple& nu, const Perm& sigma) {
  SkewTuple out(nu.size());
  for (std::size_t i = 0; i < nu.size(); ++i) out[sigma[i] - 1] = nu[i];
  return out;
}

// N^sigma = sum over negative tableaux of q^{#increasing sigma-triples} x^T, in l variables.
inline SchurPoly n_sigma(const SkewTuple& nu, const Perm& sigma, int l) {
  TableauFrame fr(nu);
  auto triples = sigma_triples(nu, sigma);
  std::map<std::tuple<int, int, int>, int> where;
  for (std::size_t k = 0; k < fr.size(); ++k)
    where[{fr.boxes[k].comp, fr.boxes[k].x, fr.boxes[k].y}] = static_cast<int>(k);
  struct Idx {
    int a, b, c;
  };
  std::vector<Idx> idx;
  for (const auto& t : triples) {
    int a = t.a_in ? where.at({t.a.comp, t.a.x, t.a.y}) : -1;
    int c = t.c_in ? where.at({t.c.comp, t.c.x, t.c.y}) : -1;
    idx.push_back({a, where.at({t.b.comp, t.b.x, t.b.y}), c});
  }
  auto stat = [&](const std::vector<int>& T) {
    int h = 0;
    for (const auto& t : idx) {
      bool lo = t.a < 0 || T[t.a] < T[t.b];
      bool hi = t.c < 0 || T[t.b] < T[t.c];
      if (lo && hi) ++h;
    }
    return h;
  };
  return schur_from_dominant(dominant_tableau_sum(nu, l, true, stat, 1), l);
}

}  // namespace catlab
