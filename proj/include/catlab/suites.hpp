#pragma once

// Seeded verification suites shared by the command-line tool and the
// acceptance runner. Each returns a case count and the failing cases.

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "catlab/catalanimal.hpp"
#include "catlab/dens.hpp"
#include "catlab/hallittlewood.hpp"
#include "catlab/nabla.hpp"

namespace catlab {

struct SuiteResult {
  long long cases = 0;
  std::vector<std::string> failures;
  bool ok() const { return cases > 0 && failures.empty(); }
  void fail(std::string msg) {
    if (failures.size() < 20) failures.push_back(std::move(msg));
    else if (failures.size() == 20) failures.push_back("further failures omitted");
  }
};

inline std::string perm_string(const Perm& p) { return weight_string(std::vector<int>(p.begin(), p.end())); }

// ---------------------------------------------------------------------------
// Nest identity on random dens

struct NestIdentityCase {
  Den den;
  SchurPoly lhs, rhs;
  bool ok() const { return lhs == rhs; }
};

inline NestIdentityCase nest_identity_case(const Den& D) {
  auto H = den_catalanimal(D);
  return {D, polynomial_part(H), rhs_nest_sum(D, H.l)};
}

inline SuiteResult nest_identity_random(std::uint64_t seed, int count, int hmax = 5, int gmax = 7) {
  SuiteResult res;
  std::mt19937_64 rng(seed);
  for (int k = 0; k < count; ++k) {
    Den D = random_den(rng, hmax, gmax);
    auto c = nest_identity_case(D);
    ++res.cases;
    std::string tag = "den #" + std::to_string(k) + " h=" + std::to_string(D.h) + " d=" + weight_string(D.d) +
                      " e=" + weight_string(D.e) + " p=" + D.p.to_string();
    if (!c.ok()) res.fail(tag + ": polynomial part differs from the nest sum");
    for (const auto& [lam, v] : c.lhs.coeffs) {
      if (!v.nonnegative() || !v.is_polynomial()) res.fail(tag + ": coefficient not in N[q,t]");
      if (v != v.swap_qt()) res.fail(tag + ": coefficient not q,t-symmetric");
    }
  }
  return res;
}

// ---------------------------------------------------------------------------
// Orthogonality

// Regular dominant weights lam + rho_r, lam a block partition with parts <= box, by size, at most cap.
inline std::vector<ZWeight> block_weight_box(const std::vector<int>& r, int box, std::size_t cap) {
  LeviData L = LeviData::standard(r);
  const int l = L.size();
  auto st = block_starts(r);
  std::vector<ZWeight> all;
  ZWeight cur;
  std::function<void(int)> rec = [&](int pos) {
    if (pos == l) {
      all.push_back(cur);
      return;
    }
    int b = 0;
    while (b + 1 < static_cast<int>(r.size()) && st[b + 1] <= pos) ++b;
    int cap_here = pos > st[b] ? cur[pos - 1] : box;
    for (int x = 0; x <= cap_here; ++x) {
      cur.push_back(x);
      rec(pos + 1);
      cur.pop_back();
    }
  };
  rec(0);
  std::stable_sort(all.begin(), all.end(), [](const ZWeight& a, const ZWeight& b) {
    return std::accumulate(a.begin(), a.end(), 0) < std::accumulate(b.begin(), b.end(), 0);
  });
  if (all.size() > cap) all.resize(cap);
  ZWeight rho = L.rho();
  for (auto& w : all)
    for (int i = 0; i < l; ++i) w[i] += rho[i];
  return all;
}

inline SuiteResult orthogonality_suite(const std::vector<int>& r, int box = 2, std::size_t cap = 20) {
  SuiteResult res;
  require_composition(r);
  auto ws = block_weight_box(r, box, cap);
  for (const auto& s : all_perms(static_cast<int>(r.size()))) {
    std::vector<MultiLaurent> Fs;
    for (const auto& b : ws) Fs.push_back(semi_F(r, s, b).bar());
    for (const auto& a : ws) {
      MultiLaurent E = semi_E(r, s, a);
      for (std::size_t j = 0; j < ws.size(); ++j) {
        ++res.cases;
        QtLaurent v = inner_product_r(E, Fs[j], r);
        if (v != QtLaurent(a == ws[j] ? 1 : 0))
          res.fail("r=" + weight_string(r) + " sigma=" + perm_string(s) + " lambda=" + weight_string(a) +
                   " mu=" + weight_string(ws[j]) + ": pairing " + v.to_string());
      }
    }
  }
  return res;
}

// ---------------------------------------------------------------------------
// Cauchy identity

struct CauchyInstance {
  LeviData R, S;
  Perm sigma;
};

inline std::string cauchy_tag(const CauchyInstance& c) {
  return "r=" + weight_string(c.R.r) + " s=" + weight_string(c.S.r) + " sigma=" + perm_string(c.sigma) +
         " M=" + weight_string(c.R.maxima) + " m_r=" + weight_string(c.R.minima) +
         " m_s=" + weight_string(c.S.minima);
}

// Random instances satisfying the hypotheses, k <= kmax, |r|, |s| in [1, size_max].
inline std::vector<CauchyInstance> random_cauchy_instances(std::uint64_t seed, int count, int kmax = 3,
                                                           int size_max = 4) {
  std::mt19937_64 rng(seed);
  std::vector<CauchyInstance> out;
  std::uniform_int_distribution<int> kd(1, kmax), len(0, 2), mx(0, 2), art(1, 3);
  std::set<std::string> seen;
  for (int attempt = 0; static_cast<int>(out.size()) < count && attempt < 200000; ++attempt) {
    int k = kd(rng);
    std::vector<int> r(k), s(k), M(k);
    for (int i = 0; i < k; ++i) {
      r[i] = len(rng);
      s[i] = len(rng);
      M[i] = mx(rng);
    }
    int nr = comp_size(r), ns = comp_size(s);
    if (nr < 1 || ns < 1 || nr > size_max || ns > size_max) continue;
    std::vector<int> er(k), es(k);
    for (int i = 0; i < k; ++i) {
      er[i] = M[i] + art(rng);
      es[i] = M[i] + art(rng);
    }
    Perm sigma = perm_identity(k);
    std::shuffle(sigma.begin(), sigma.end(), rng);
    CauchyInstance c{LeviData::from_maxima(r, M, er), LeviData::from_maxima(s, M, es), sigma};
    if (cauchy_hypotheses(c.R, c.S, c.sigma)) continue;
    if (!seen.insert(cauchy_tag(c)).second) continue;
    out.push_back(std::move(c));
  }
  return out;
}

inline SuiteResult cauchy_suite(const std::vector<CauchyInstance>& inst, int tmax) {
  SuiteResult res;
  for (const auto& c : inst) {
    ++res.cases;
    if (auto bad = cauchy_check(c.R, c.S, c.sigma, tmax)) res.fail(cauchy_tag(c) + ": " + *bad);
  }
  return res;
}

// ---------------------------------------------------------------------------
// LLT series

inline std::vector<ZWeight> regular_weights_in_box(const std::vector<int>& r, int lo, int hi) {
  const int l = comp_size(r);
  std::vector<ZWeight> out;
  ZWeight cur(l);
  std::function<void(int)> rec = [&](int pos) {
    if (pos == l) {
      if (is_regular_dominant_for(cur, r)) out.push_back(cur);
      return;
    }
    for (int x = lo; x <= hi; ++x) {
      cur[pos] = x;
      rec(pos + 1);
    }
  };
  rec(0);
  return out;
}

struct LLTSuiteStats {
  long long pairs = 0, vanishing = 0, coefficients = 0;
};

// All sigma and all alpha, beta in [0, hi] with |beta - alpha| <= max_size. Pairs with alpha <= beta compare the
// closed form to the definition; the others check that closed form and definition both vanish.
inline SuiteResult llt_series_suite(const std::vector<int>& r, int hi, int max_size, LLTSuiteStats* stats = nullptr,
                                    int vanishing_cap = 40) {
  SuiteResult res;
  LLTSuiteStats st;
  auto ws = regular_weights_in_box(r, 0, hi);
  const int l = comp_size(r);
  for (const auto& s : all_perms(static_cast<int>(r.size()))) {
    int vanishing_here = 0;
    for (const auto& a : ws)
      for (const auto& b : ws) {
        int n = 0;
        bool le = true;
        for (int i = 0; i < l; ++i) {
          n += b[i] - a[i];
          le = le && a[i] <= b[i];
        }
        if (n < 0 || n > max_size) continue;
        if (!le && vanishing_here >= vanishing_cap) continue;
        LLTSeriesSpec sp{r, s, a, b};
        SchurPoly pol = llt_series_pol(sp);
        std::string tag = "r=" + weight_string(r) + " sigma=" + perm_string(s) + " alpha=" + weight_string(a) +
                          " beta=" + weight_string(b);
        if (!le) {
          ++vanishing_here;
          ++st.vanishing;
          ++res.cases;
          if (!pol.is_zero()) res.fail(tag + ": closed form nonzero");
        } else {
          ++st.pairs;
          ++res.cases;
        }
        for (const auto& lam : partitions_of(n, l)) {
          QtLaurent c = llt_series_coeff(sp, pad(lam, l));
          ++st.coefficients;
          if (c != pol.coeff(lam))
            res.fail(tag + " lambda=" + weight_string(lam) + ": definition " + c.to_string() + " vs closed form " +
                     pol.coeff(lam).to_string());
        }
      }
  }
  if (stats) *stats = st;
  return res;
}

// ---------------------------------------------------------------------------
// Winding

inline SuiteResult winding_suite(int kmax, std::uint64_t seed, int per_perm = 2) {
  SuiteResult res;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> len(1, 2), ent(-1, 2);
  for (int n = 2; n <= kmax; ++n)
    for (const auto& s : winding_permutations(n)) {
      for (int rep = 0; rep < per_perm; ++rep) {
        std::vector<int> r(n - 1);
        for (int& x : r) x = len(rng);
        ZWeight mu;
        for (int b : r) {
          std::set<int> vals;
          while (static_cast<int>(vals.size()) < b) vals.insert(ent(rng) + static_cast<int>(vals.size()));
          std::vector<int> v(vals.rbegin(), vals.rend());
          mu.insert(mu.end(), v.begin(), v.end());
        }
        ++res.cases;
        if (auto bad = winding_check(s, r, mu)) res.fail(*bad);
      }
    }
  return res;
}

// ---------------------------------------------------------------------------
// Stable series

inline StableInstance stable_example_instance() {
  return StableInstance{4, EpsReal(Rational(2, 3), Rational(1)), EpsReal(Rational(13, 2)), {1, 2, 0, 0},
                        {1, 0, 3, 2}, {3, 4, 3, 1}};
}

// Sorted weights reached from 'level' by adding one positive root, excluding those already in 'seen'.
inline std::vector<ZWeight> raise_once(const std::vector<ZWeight>& level, std::set<ZWeight>& seen) {
  std::set<ZWeight> next;
  for (const auto& v : level) {
    const int l = static_cast<int>(v.size());
    for (int i = 0; i < l; ++i)
      for (int j = i + 1; j < l; ++j) {
        ZWeight u = v;
        ++u[i];
        --u[j];
        std::sort(u.begin(), u.end(), std::greater<>());
        if (seen.insert(u).second) next.insert(u);
      }
  }
  return {next.begin(), next.end()};
}

// Seeded sample of dominant weights, lowest raising level first, at most 'zeros' of them with vanishing
// left side. Returns each weight with its truncated left side.
inline std::vector<std::pair<ZWeight, QtLaurent>> sample_stable_weights(const StableData& D, std::uint64_t seed,
                                                                        int want, int tmax, int zeros = 3,
                                                                        int max_depth = 8) {
  std::mt19937_64 rng(seed);
  ZWeight start = D.H.lam;
  std::sort(start.begin(), start.end(), std::greater<>());
  std::set<ZWeight> seen{start};
  std::vector<ZWeight> level{start};
  std::vector<std::pair<ZWeight, QtLaurent>> out;
  int zero_count = 0;
  for (int depth = 0; depth <= max_depth && !level.empty(); ++depth) {
    auto shuffled = level;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    for (const auto& w : shuffled) {
      if (static_cast<int>(out.size()) >= want) return out;
      QtLaurent lhs = character_coefficient(D.H, w).truncate_t(tmax);
      if (lhs.is_zero() && zero_count >= zeros) continue;
      zero_count += lhs.is_zero();
      out.emplace_back(w, lhs);
    }
    level = raise_once(level, seen);
  }
  return out;
}

struct StableSuiteStats {
  long long weights = 0, nonzero = 0;
};

inline SuiteResult stable_suite(const StableInstance& I, std::uint64_t seed, int want, int tmax,
                                StableSuiteStats* stats = nullptr) {
  SuiteResult res;
  StableData D = stable_data(I);
  auto sample = sample_stable_weights(D, seed, want, tmax);
  std::vector<ZWeight> ws;
  for (const auto& [w, c] : sample) ws.push_back(w);
  auto rhs = stable_rhs(I, D, ws, tmax);
  StableSuiteStats st;
  for (std::size_t k = 0; k < ws.size(); ++k) {
    ++res.cases;
    ++st.weights;
    st.nonzero += !sample[k].second.is_zero();
    if (sample[k].second != rhs[k])
      res.fail("lambda=" + weight_string(ws[k]) + ": left " + sample[k].second.to_string() + " right " +
               rhs[k].to_string());
  }
  if (stats) *stats = st;
  return res;
}

inline std::string stable_tag(const StableInstance& I) {
  return "h=" + std::to_string(I.h) + " p=" + I.p.to_string() + " s=" + I.s.to_string() + " u=" + weight_string(I.u) +
         " v=" + weight_string(I.v) + " gamma=" + weight_string(I.gamma);
}

}  // namespace catlab
