#pragma once

// Catalanimals H(Rq, Rt, Rqt, lambda), their polynomial parts and single
// character coefficients by a pruned raising-operator expansion.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "catlab/dens.hpp"
#include "catlab/exactnum.hpp"
#include "catlab/shapes.hpp"

namespace catlab {

struct Catalanimal {
  int l = 0;
  std::set<Root> Rq, Rt, Rqt;
  ZWeight lam;

  friend bool operator==(const Catalanimal& a, const Catalanimal& b) {
    return a.l == b.l && a.Rq == b.Rq && a.Rt == b.Rt && a.Rqt == b.Rqt && a.lam == b.lam;
  }

  bool is_tame() const {
    auto bracket = [&](const std::set<Root>& A, const std::set<Root>& B) {
      for (const auto& a : A)
        for (const auto& b : B)
          if (a.j == b.i && !Rqt.count(Root{a.i, b.j})) return false;
      return true;
    };
    return bracket(Rq, Rt) && bracket(Rt, Rq);
  }
};

// Roots between distinct blocks go to Rq = Rt; between non-adjacent blocks also to Rqt.
inline Catalanimal block_catalanimal(const std::vector<int>& blocks, const std::vector<int>& block_weight) {
  Catalanimal H;
  std::vector<int> block_of;
  for (std::size_t k = 0; k < blocks.size(); ++k)
    for (int c = 0; c < blocks[k]; ++c) {
      block_of.push_back(static_cast<int>(k));
      H.lam.push_back(block_weight[k]);
    }
  H.l = static_cast<int>(block_of.size());
  for (int i = 0; i < H.l; ++i)
    for (int j = i + 1; j < H.l; ++j) {
      int gap = block_of[j] - block_of[i];
      if (gap >= 1) {
        H.Rq.insert({i, j});
        H.Rt.insert({i, j});
      }
      if (gap >= 2) H.Rqt.insert({i, j});
    }
  return H;
}

inline Catalanimal den_catalanimal(const Den& D) {
  require_valid(D);
  auto g = g_vector(D);
  std::vector<int> w(D.h);
  for (int k = 1; k <= D.h; ++k) w[k - 1] = D.d[k - 1] - D.e[k];
  return block_catalanimal(g, w);
}

inline Catalanimal schur_catalanimal(const Partition& mu, int m, int n, bool opposite) {
  if (mu.empty() || !is_partition(mu)) throw InputError("schur_catalanimal: need a nonempty partition");
  if (m <= 0 || std::gcd(m, n) != 1) throw InputError("schur_catalanimal: need m > 0 and gcd(m, n) = 1");
  SkewShape nu = opposite ? rotate180(mu) : SkewShape::from_partition(mu);
  SkewShape st = m_stretch(nu, m);
  std::map<int, int> diag;
  std::set<int> first, last;
  for (int j = 0; j < st.rows(); ++j) {
    if (st.beta[j] <= st.alpha[j]) continue;
    int y = st.y0 + j + 1;
    first.insert(st.alpha[j] + 1 - y);
    last.insert(st.beta[j] - y);
  }
  for (auto [x, y] : st.boxes()) ++diag[x - y];
  auto b = b_vec(m, n);
  std::vector<int> blocks, weight;
  for (auto [c, len] : diag) {
    int r = static_cast<int>(((c % m) + m) % m);
    int modm = r == 0 ? m : r;
    blocks.push_back(len);
    weight.push_back((first.count(c) ? 1 : 0) - (last.count(c) ? 1 : 0) + b[modm - 1]);
  }
  return block_catalanimal(blocks, weight);
}

namespace detail {

// Power series coefficients of (1 - qt x)^c / ((1 - q x)^a (1 - t x)^b).
class RootSeries {
 public:
  RootSeries(bool a, bool b, bool c) : a_(a), b_(b), c_(c) {}
  const QtLaurent& operator[](int k) {
    while (static_cast<int>(coef_.size()) <= k) extend();
    return coef_[k];
  }

 private:
  void extend() {
    int k = static_cast<int>(coef_.size());
    // Coefficient of x^k in 1/((1-qx)^a (1-tx)^b) is a sum of q^i t^{k-i}.
    auto base = [&](int kk) {
      if (kk < 0) return QtLaurent();
      if (a_ && b_) {
        QtLaurent s;
        for (int i = 0; i <= kk; ++i) s.add_term(i, kk - i, 1);
        return s;
      }
      if (a_) return QtLaurent::q_pow(kk);
      if (b_) return QtLaurent::t_pow(kk);
      return kk == 0 ? QtLaurent(1) : QtLaurent();
    };
    QtLaurent v = base(k);
    if (c_) v = v - QtLaurent::monomial(1, 1) * base(k - 1);
    coef_.push_back(v);
  }
  bool a_, b_, c_;
  std::vector<QtLaurent> coef_;
};

// Finalized values must be distinct; 'allowed' says whether a value may appear.
class RaisingExpander {
 public:
  RaisingExpander(const Catalanimal& H, std::optional<std::vector<int>> target)
      : H_(H), l_(H.l), target_(std::move(target)) {
    series_.reserve(8);
    for (int t = 0; t < 8; ++t) series_.emplace_back(t & 1, t & 2, t & 4);
    groups_.resize(l_);
    for (int j = 0; j < l_; ++j)
      for (int i = 0; i < j; ++i) {
        Root r{i, j};
        int type = (H.Rq.count(r) ? 1 : 0) | (H.Rt.count(r) ? 2 : 0) | (H.Rqt.count(r) ? 4 : 0);
        if (type != 0) groups_[j].push_back({i, type});
      }
    N_ = std::accumulate(H.lam.begin(), H.lam.end(), 0LL);
    if (target_) {
      target_set_ = std::set<int>(target_->begin(), target_->end());
    }
  }

  // Accumulates sign * coefficient per sorted value vector (descending v = lambda + rho).
  std::map<std::vector<int>, QtLaurent> run() { return run_from(H_.lam); }

  // Same expansion with z^lam replaced by z^start.
  std::map<std::vector<int>, QtLaurent> run_from(const ZWeight& start) {
    out_.clear();
    if (l_ == 0) {
      out_[{}] += QtLaurent(1);
      return out_;
    }
    v_.resize(l_);
    for (int i = 0; i < l_; ++i) v_[i] = start[i] + (l_ - 1 - i);
    used_.clear();
    group(l_ - 1, QtLaurent(1));
    return out_;
  }

 private:
  bool value_ok(int v) const {
    if (used_.count(v)) return false;
    if (target_) return target_set_.count(v) > 0;
    return v >= 0 && v <= N_ + l_ - 1;
  }

  // Feasibility for coordinates 0..j-1 given their total.
  bool rest_feasible(int j) const {
    long long rest = 0;
    for (int i = 0; i < j; ++i) rest += v_[i];
    if (target_) {
      long long need = 0;
      for (int x : target_set_)
        if (!used_.count(x)) need += x;
      return rest == need;
    }
    long long minsum = 0;
    int taken = 0;
    for (int x = 0; taken < j; ++x)
      if (!used_.count(x)) {
        minsum += x;
        ++taken;
      }
    return rest >= minsum;
  }

  void finish(const QtLaurent& coef) {
    if (!value_ok(v_[0])) return;
    std::vector<int> s = v_;
    int inv = 0;
    for (int a = 0; a < l_; ++a)
      for (int b = a + 1; b < l_; ++b)
        if (s[a] < s[b]) ++inv;
    std::sort(s.begin(), s.end(), std::greater<>());
    auto& slot = out_[s];
    slot += inv % 2 ? -coef : coef;
  }

  // Choose multiplicities for roots (i, j) in group j, then finalize coordinate j.
  void group(int j, const QtLaurent& coef) {
    if (j == 0) {
      finish(coef);
      return;
    }
    member(j, 0, coef);
  }

  void member(int j, std::size_t idx, const QtLaurent& coef) {
    const auto& roots = groups_[j];
    if (idx == roots.size()) {
      if (!value_ok(v_[j])) return;
      used_.insert(v_[j]);
      if (rest_feasible(j)) group(j - 1, coef);
      used_.erase(v_[j]);
      return;
    }
    auto [i, type] = roots[idx];
    const int lo = target_ ? *target_set_.begin() : 0;
    for (int k = 0; v_[j] - k >= lo; ++k) {
      const QtLaurent& c = series_[type][k];
      if (k > 0 && c.is_zero()) {
        if (type == 4) break;
        continue;
      }
      v_[j] -= k;
      v_[i] += k;
      member(j, idx + 1, k == 0 ? coef : coef * c);
      v_[j] += k;
      v_[i] -= k;
    }
  }

  const Catalanimal& H_;
  int l_;
  std::optional<std::vector<int>> target_;
  std::set<int> target_set_;
  std::vector<RootSeries> series_;
  std::vector<std::vector<std::pair<int, int>>> groups_;
  long long N_ = 0;
  std::vector<int> v_;
  std::set<int> used_;
  std::map<std::vector<int>, QtLaurent> out_;
};

}  // namespace detail

inline SchurPoly polynomial_part(const Catalanimal& H) {
  SchurPoly out(H.l);
  detail::RaisingExpander ex(H, std::nullopt);
  for (const auto& [v, c] : ex.run()) {
    ZWeight lam(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) lam[i] = v[i] - static_cast<int>(v.size() - 1 - i);
    out.add(strip_zeros(lam), c);
  }
  return out;
}

// Coefficient of chi_lam for a dominant weight lam of length l (entries may be negative).
inline QtLaurent character_coefficient(const Catalanimal& H, const ZWeight& lam) {
  if (static_cast<int>(lam.size()) != H.l) throw InputError("character_coefficient: weight length mismatch");
  if (!std::is_sorted(lam.begin(), lam.end(), std::greater<>()))
    throw InputError("character_coefficient: weight must be weakly decreasing");
  long long a = std::accumulate(lam.begin(), lam.end(), 0LL), b = std::accumulate(H.lam.begin(), H.lam.end(), 0LL);
  if (a != b) return QtLaurent();
  std::vector<int> target(H.l);
  for (int i = 0; i < H.l; ++i) target[i] = lam[i] + (H.l - 1 - i);
  detail::RaisingExpander ex(H, target);
  QtLaurent total;
  for (const auto& [v, c] : ex.run()) total += c;
  return total;
}

// Coefficient of chi_lam in sigma(P / prod_{roots} (1 - q z^alpha)), geometric series expanded.
inline QtLaurent weyl_series_coefficient(const MultiLaurent& P, const std::set<Root>& roots, const ZWeight& lam) {
  const int l = P.nvars();
  if (static_cast<int>(lam.size()) != l) throw InputError("weyl_series_coefficient: weight length mismatch");
  if (!std::is_sorted(lam.begin(), lam.end(), std::greater<>()))
    throw InputError("weyl_series_coefficient: weight must be weakly decreasing");
  Catalanimal H;
  H.l = l;
  H.Rq = roots;
  H.lam.assign(l, 0);
  std::vector<int> target(l);
  for (int i = 0; i < l; ++i) target[i] = lam[i] + (l - 1 - i);
  long long want = std::accumulate(lam.begin(), lam.end(), 0LL);
  detail::RaisingExpander ex(H, target);
  QtLaurent total;
  for (const auto& [w, c] : P.terms()) {
    if (std::accumulate(w.begin(), w.end(), 0LL) != want) continue;
    QtLaurent part;
    for (const auto& [v, k] : ex.run_from(w)) part += k;
    total += part * c;
  }
  return total;
}

}  // namespace catlab
