#pragma once

// Modified Macdonald polynomials from the inv/maj monomial formula, nabla by
// exact basis change at rational specializations, and the LW check.

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "catlab/dens.hpp"
#include "catlab/exactnum.hpp"
#include "catlab/shapes.hpp"

namespace catlab {

inline constexpr int kNablaDegreeBound = 6;

// Schur expansion at a fixed rational (q, t).
struct SymFnSpec {
  int degree = 0;
  Rational q0, t0;
  std::map<Partition, Rational> coeffs;

  friend bool operator==(const SymFnSpec& a, const SymFnSpec& b) {
    return a.degree == b.degree && a.q0 == b.q0 && a.t0 == b.t0 && a.coeffs == b.coeffs;
  }
};

inline long long n_stat(const Partition& mu) {
  long long s = 0;
  for (std::size_t i = 0; i < mu.size(); ++i) s += static_cast<long long>(i) * mu[i];
  return s;
}

namespace detail {

struct FillingCell {
  int row, col;  // 0-based, row 0 at the bottom
};

inline std::map<Partition, QtLaurent> monomial_dominant(const Partition& mu) {
  const int n = partition_size(mu);
  Partition conj = transpose(mu);
  std::vector<FillingCell> cells;  // reading order: top row first, left to right
  for (int i = static_cast<int>(mu.size()) - 1; i >= 0; --i)
    for (int j = 0; j < mu[i]; ++j) cells.push_back({i, j});
  std::map<std::pair<int, int>, int> index;
  for (int k = 0; k < n; ++k) index[{cells[k].row, cells[k].col}] = k;
  std::vector<int> below(n, -1);
  std::vector<std::pair<int, int>> attacks;  // (earlier, later) in reading order
  for (int a = 0; a < n; ++a) {
    const auto& u = cells[a];
    if (u.row > 0) below[a] = index.at({u.row - 1, u.col});
    for (int b = a + 1; b < n; ++b) {
      const auto& v = cells[b];
      if (v.row == u.row || (v.row == u.row - 1 && v.col < u.col)) attacks.push_back({a, b});
    }
  }
  std::map<Partition, QtLaurent> out;
  for (const auto& lam : partitions_of(n)) {
    std::vector<int> word;
    for (std::size_t v = 0; v < lam.size(); ++v) word.insert(word.end(), lam[v], static_cast<int>(v) + 1);
    QtLaurent sum;
    do {
      int inv = 0, maj = 0;
      for (auto [a, b] : attacks)
        if (word[a] > word[b]) ++inv;
      for (int a = 0; a < n; ++a)
        if (below[a] >= 0 && word[a] > word[below[a]]) {
          const auto& u = cells[a];
          inv -= mu[u.row] - 1 - u.col;
          maj += conj[u.col] - u.row;
        }
      sum.add_term(inv, maj, 1);
    } while (std::next_permutation(word.begin(), word.end()));
    out[lam] = sum;
  }
  return out;
}

}  // namespace detail

// H~_mu(X; q, t) in the Schur basis, |mu| variables.
inline SchurPoly modified_macdonald(const Partition& mu, int bound = kNablaDegreeBound) {
  if (!is_partition(mu)) throw InputError("modified_macdonald: not a partition");
  const int n = partition_size(mu);
  if (n > bound) throw InputError("modified_macdonald: degree bound exceeded");
  if (n == 0) {
    SchurPoly one(0);
    one.add({}, QtLaurent(1));
    return one;
  }
  return schur_from_dominant(detail::monomial_dominant(mu), n);
}

inline SymFnSpec specialize(const SchurPoly& f, int degree, const Rational& q0, const Rational& t0) {
  SymFnSpec out{degree, q0, t0, {}};
  for (const auto& [lam, c] : f.coeffs) {
    if (partition_size(lam) != degree) throw InputError("specialize: input is not homogeneous");
    Rational v = c.evaluate(q0, t0);
    if (v != 0) out.coeffs[lam] = v;
  }
  return out;
}

struct SingularSpecialization : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

// Solves A x = b exactly; A is square.
inline std::vector<Rational> solve_exact(std::vector<std::vector<Rational>> A, std::vector<Rational> b) {
  const int n = static_cast<int>(b.size());
  for (int c = 0; c < n; ++c) {
    int piv = c;
    while (piv < n && A[piv][c] == 0) ++piv;
    if (piv == n) throw SingularSpecialization("singular transition matrix");
    std::swap(A[piv], A[c]);
    std::swap(b[piv], b[c]);
    for (int r = 0; r < n; ++r) {
      if (r == c || A[r][c] == 0) continue;
      Rational f = A[r][c] / A[c][c];
      for (int k = c; k < n; ++k) A[r][k] -= f * A[c][k];
      b[r] -= f * b[c];
    }
  }
  for (int c = 0; c < n; ++c) b[c] /= A[c][c];
  return b;
}

inline Rational rpow(const Rational& x, long long e) {
  Rational r = 1;
  for (long long i = 0; i < e; ++i) r *= x;
  return r;
}

}  // namespace detail

// nabla^m f, through the H~ basis at f's specialization.
inline SymFnSpec nabla_power(const SymFnSpec& f, int m) {
  const int d = f.degree;
  if (d > kNablaDegreeBound) throw InputError("nabla_power: degree bound exceeded");
  if (m < 0) throw InputError("nabla_power: m must be nonnegative");
  if (m == 0 || d == 0) return f;
  auto parts = partitions_of(d);
  const int N = static_cast<int>(parts.size());
  std::vector<SymFnSpec> basis;
  for (const auto& nu : parts) basis.push_back(specialize(modified_macdonald(nu), d, f.q0, f.t0));
  // A[row = Schur lam][col = nu]
  std::vector<std::vector<Rational>> A(N, std::vector<Rational>(N));
  std::vector<Rational> b(N);
  for (int r = 0; r < N; ++r) {
    for (int c = 0; c < N; ++c) {
      auto it = basis[c].coeffs.find(parts[r]);
      if (it != basis[c].coeffs.end()) A[r][c] = it->second;
    }
    auto it = f.coeffs.find(parts[r]);
    if (it != f.coeffs.end()) b[r] = it->second;
  }
  auto x = detail::solve_exact(A, b);
  SymFnSpec out{d, f.q0, f.t0, {}};
  for (int c = 0; c < N; ++c) {
    if (x[c] == 0) continue;
    Rational eig = detail::rpow(f.t0, n_stat(parts[c]) * m) * detail::rpow(f.q0, n_stat(transpose(parts[c])) * m);
    for (const auto& [lam, v] : basis[c].coeffs) out.coeffs[lam] += x[c] * eig * v;
  }
  for (auto it = out.coeffs.begin(); it != out.coeffs.end();)
    it = it->second == 0 ? out.coeffs.erase(it) : std::next(it);
  return out;
}

inline SymFnSpec schur_spec(const Partition& mu, const Rational& q0, const Rational& t0) {
  return SymFnSpec{partition_size(mu), q0, t0, {{mu, Rational(1)}}};
}

// Signed, scaled nest sum for the LW den (mu, m, 1), symbolic in q, t.
inline SchurPoly lw_nest_side(const Partition& mu, int m) {
  const int n = partition_size(mu);
  Den D = lw_den(mu, m, 1);
  SkewShape shape = SkewShape::from_partition(mu);
  int p = magic_number(shape);
  long long np = n_prime(gamma_of(shape));
  SchurPoly sum(n);
  for (const auto& t : nest_terms(D, n)) sum += omega(t.llt).scaled(QtLaurent::monomial(t.dinv, t.a));
  long long e = p + m * np;
  QtLaurent pre = QtLaurent::monomial(static_cast<int>(e), static_cast<int>(e), p % 2 ? -1 : 1);
  return sum.scaled(pre);
}

struct LWSpecResult {
  Rational q0, t0;
  SymFnSpec nest_side, nabla_side;
  bool ok() const { return nest_side.coeffs == nabla_side.coeffs; }
};

struct LWReport {
  Partition mu;
  int m = 0;
  std::vector<LWSpecResult> results;
  bool ok() const {
    return std::all_of(results.begin(), results.end(), [](const LWSpecResult& r) { return r.ok(); });
  }
};

// Compares the nest side with nabla^m s_mu at random positive rational specializations.
inline LWReport verify_mn_lw(const Partition& mu, int m, int specializations, std::uint64_t seed = 1) {
  if (mu.empty() || !is_partition(mu)) throw InputError("verify_mn_lw: need a nonempty partition");
  if (m <= 0) throw InputError("verify_mn_lw: m must be positive");
  const int n = partition_size(mu);
  if (n > kNablaDegreeBound) throw InputError("verify_mn_lw: degree bound exceeded");
  LWReport rep{mu, m, {}};
  SchurPoly lhs = lw_nest_side(mu, m);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(1, 29), den(1, 13);
  int attempts = 0;
  while (static_cast<int>(rep.results.size()) < specializations) {
    if (++attempts > 50 * (specializations + 1)) throw SingularSpecialization("no usable specialization found");
    Rational q0(num(rng), den(rng)), t0(num(rng), den(rng));
    if (q0 == 1 || t0 == 1 || q0 == t0) continue;
    try {
      LWSpecResult r{q0, t0, specialize(lhs, n, q0, t0), nabla_power(schur_spec(mu, q0, t0), m)};
      rep.results.push_back(std::move(r));
    } catch (const SingularSpecialization&) {
      continue;
    }
  }
  return rep;
}

}  // namespace catlab
