#pragma once

// Skew diagrams in French convention, tuples of them, diagonal statistics,
// m-stretching and semistandard tableau enumeration.
//
// Row j (1-based, bottom to top) of beta/alpha occupies the boxes whose
// northeast corners are (x, y0 + j) for alpha_j < x <= beta_j.

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <tuple>
#include <vector>

#include "catlab/exactnum.hpp"

namespace catlab {

struct SkewShape {
  std::vector<int> alpha;
  std::vector<int> beta;
  int y0 = 0;

  SkewShape() = default;
  SkewShape(std::vector<int> a, std::vector<int> b, int yoff = 0)
      : alpha(std::move(a)), beta(std::move(b)), y0(yoff) {
    if (alpha.size() != beta.size()) throw InputError("SkewShape: row vectors differ in length");
    for (std::size_t i = 0; i < alpha.size(); ++i)
      if (alpha[i] > beta[i]) throw InputError("SkewShape: alpha exceeds beta in a row");
  }
  static SkewShape from_partition(const Partition& lam) {
    return SkewShape(std::vector<int>(lam.size(), 0), std::vector<int>(lam.begin(), lam.end()));
  }

  int rows() const { return static_cast<int>(alpha.size()); }
  int size() const {
    int n = 0;
    for (int j = 0; j < rows(); ++j) n += beta[j] - alpha[j];
    return n;
  }
  bool contains(int x, int y) const {
    int j = y - y0 - 1;
    return j >= 0 && j < rows() && alpha[j] < x && x <= beta[j];
  }
  // Boxes (x, y) row by row from the bottom, left to right.
  std::vector<std::pair<int, int>> boxes() const {
    std::vector<std::pair<int, int>> out;
    for (int j = 0; j < rows(); ++j)
      for (int x = alpha[j] + 1; x <= beta[j]; ++x) out.emplace_back(x, y0 + j + 1);
    return out;
  }
  friend bool operator==(const SkewShape& a, const SkewShape& b) {
    return a.alpha == b.alpha && a.beta == b.beta && a.y0 == b.y0;
  }
};

using SkewTuple = std::vector<SkewShape>;

struct Box {
  int comp = 0;  // 1-based component index
  int x = 0;
  int y = 0;
  int content() const { return x - y; }
  EpsReal adjusted_content() const { return EpsReal(Rational(content()), Rational(comp)); }
  friend bool operator==(const Box& a, const Box& b) { return a.comp == b.comp && a.x == b.x && a.y == b.y; }
};

// Boxes of a tuple sorted in reading order.
inline std::vector<Box> reading_order(const SkewTuple& nu) {
  std::vector<Box> out;
  for (std::size_t i = 0; i < nu.size(); ++i)
    for (auto [x, y] : nu[i].boxes()) out.push_back({static_cast<int>(i) + 1, x, y});
  std::sort(out.begin(), out.end(), [](const Box& a, const Box& b) {
    return std::make_tuple(a.content(), a.comp, a.y) < std::make_tuple(b.content(), b.comp, b.y);
  });
  return out;
}

inline bool attacks(const Box& a, const Box& b) {
  // a precedes b in reading order and 0 < c~(b) - c~(a) < 1.
  return (b.content() == a.content() && b.comp > a.comp) || (b.content() == a.content() + 1 && b.comp < a.comp);
}

// Attacking pairs as index pairs into reading_order(nu).
inline std::vector<std::pair<int, int>> attacking_pairs(const SkewTuple& nu) {
  auto boxes = reading_order(nu);
  std::vector<std::pair<int, int>> out;
  for (std::size_t a = 0; a < boxes.size(); ++a)
    for (std::size_t b = a + 1; b < boxes.size(); ++b)
      if (attacks(boxes[a], boxes[b])) out.emplace_back(static_cast<int>(a), static_cast<int>(b));
  return out;
}

// Diagonal lengths in increasing content order over occupied contents.
inline std::vector<int> gamma_of(const SkewShape& nu) {
  std::map<int, int> diag;
  for (auto [x, y] : nu.boxes()) ++diag[x - y];
  std::vector<int> g;
  for (auto& [c, n] : diag) g.push_back(n);
  return g;
}

inline long long n_prime(const std::vector<int>& gamma) {
  long long s = 0;
  for (int g : gamma) s += 1LL * g * (g - 1) / 2;
  return s;
}

inline int magic_number(const SkewShape& nu) {
  std::map<int, int> diag;
  std::set<int> starts;
  for (int j = 0; j < nu.rows(); ++j)
    if (nu.beta[j] > nu.alpha[j]) starts.insert(nu.alpha[j] + 1 - (nu.y0 + j + 1));
  for (auto [x, y] : nu.boxes()) ++diag[x - y];
  int p = 0;
  for (auto& [c, n] : diag)
    if (!starts.count(c)) p += n;
  return p;
}

// Each box of content c in column x becomes m boxes of contents mc-m+1..mc in column x.
inline SkewShape m_stretch(const SkewShape& nu, int m) {
  if (m < 1) throw InputError("m_stretch: m must be positive");
  std::set<std::pair<int, int>> cells;
  for (auto [x, y] : nu.boxes()) {
    int c = x - y;
    for (int cc = m * c - m + 1; cc <= m * c; ++cc) cells.insert({x - cc, x});  // (row, column)
  }
  if (cells.empty()) return {};
  int ymin = cells.begin()->first, ymax = cells.rbegin()->first;
  SkewShape out;
  out.y0 = ymin - 1;
  for (int y = ymin; y <= ymax; ++y) {
    int lo = INT32_MAX, hi = INT32_MIN, cnt = 0;
    for (auto it = cells.lower_bound({y, INT32_MIN}); it != cells.end() && it->first == y; ++it) {
      lo = std::min(lo, it->second);
      hi = std::max(hi, it->second);
      ++cnt;
    }
    if (cnt == 0) {
      out.alpha.push_back(0);
      out.beta.push_back(0);
      continue;
    }
    if (hi - lo + 1 != cnt) throw InputError("m_stretch: row is not contiguous");
    out.alpha.push_back(lo - 1);
    out.beta.push_back(hi);
  }
  return out;
}

// 180 degree rotation of a partition diagram, as a skew shape with the same
// bounding box: row j from the bottom spans the last lambda_{l+1-j} columns.
inline SkewShape rotate180(const Partition& mu) {
  SkewShape out;
  if (mu.empty()) return out;
  int w = mu[0];
  int l = static_cast<int>(mu.size());
  for (int j = 0; j < l; ++j) {
    out.alpha.push_back(w - mu[l - 1 - j]);
    out.beta.push_back(w);
  }
  return out;
}

// Translate so every content increases by d.
inline SkewShape shift_content(const SkewShape& nu, int d) {
  SkewShape out = nu;
  for (auto& a : out.alpha) a += d;
  for (auto& b : out.beta) b += d;
  return out;
}

// Rotation nu' = (nu_{j+1}^+, ..., nu_k^+, nu_1, ..., nu_j).
inline SkewTuple rotate_tuple(const SkewTuple& nu, int j) {
  SkewTuple out;
  for (std::size_t i = j; i < nu.size(); ++i) out.push_back(shift_content(nu[i], 1));
  for (int i = 0; i < j; ++i) out.push_back(nu[i]);
  return out;
}

// ---------------------------------------------------------------------------
// Tableaux. A tableau is a vector of letters indexed like reading_order(nu).

struct TableauFrame {
  std::vector<Box> boxes;     // reading order
  std::vector<int> left;      // index of left neighbor in the same row, or -1
  std::vector<int> below;     // index of box directly below, or -1
  std::vector<int> fill_order;  // boxes in an order where left/below come first

  explicit TableauFrame(const SkewTuple& nu) : boxes(reading_order(nu)) {
    std::map<std::tuple<int, int, int>, int> where;
    for (std::size_t k = 0; k < boxes.size(); ++k) where[{boxes[k].comp, boxes[k].x, boxes[k].y}] = static_cast<int>(k);
    left.assign(boxes.size(), -1);
    below.assign(boxes.size(), -1);
    for (std::size_t k = 0; k < boxes.size(); ++k) {
      const auto& b = boxes[k];
      auto l = where.find({b.comp, b.x - 1, b.y});
      if (l != where.end()) left[k] = l->second;
      auto d = where.find({b.comp, b.x, b.y - 1});
      if (d != where.end()) below[k] = d->second;
    }
    fill_order.resize(boxes.size());
    std::iota(fill_order.begin(), fill_order.end(), 0);
    std::sort(fill_order.begin(), fill_order.end(), [&](int a, int b) {
      return std::make_tuple(boxes[a].comp, boxes[a].y, boxes[a].x) <
             std::make_tuple(boxes[b].comp, boxes[b].y, boxes[b].x);
    });
  }
  std::size_t size() const { return boxes.size(); }
};

// Visit all fillings with letters in [1, max_letter]. Positive: rows weak,
// columns strict. Negative: rows strict, columns weak.
inline void enumerate_ssyt(const SkewTuple& nu, int max_letter, bool negative,
                           const std::function<void(const std::vector<int>&)>& visit) {
  TableauFrame fr(nu);
  std::vector<int> T(fr.size(), 0);
  auto rec = [&](auto& self, std::size_t k) -> void {
    if (k == fr.size()) {
      visit(T);
      return;
    }
    int b = fr.fill_order[k];
    int lo = 1;
    if (fr.left[b] >= 0) lo = std::max(lo, T[fr.left[b]] + (negative ? 1 : 0));
    if (fr.below[b] >= 0) lo = std::max(lo, T[fr.below[b]] + (negative ? 0 : 1));
    for (int v = lo; v <= max_letter; ++v) {
      T[b] = v;
      self(self, k + 1);
    }
    T[b] = 0;
  };
  rec(rec, 0);
}

// Number of attacking inversions; negative tableaux also count equal letters.
inline int tableau_inv(const TableauFrame& fr, const std::vector<std::pair<int, int>>& pairs,
                       const std::vector<int>& T, bool negative) {
  int n = 0;
  for (auto [a, b] : pairs)
    if (T[a] > T[b] || (negative && T[a] == T[b])) ++n;
  return n;
}

inline ZWeight tableau_content(const std::vector<int>& T, int l) {
  ZWeight c(l, 0);
  for (int v : T) ++c[v - 1];
  return c;
}

}  // namespace catlab
