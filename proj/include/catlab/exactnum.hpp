#pragma once

// Exact coefficient arithmetic: Laurent polynomials in q,t over Z, the ordered
// field Q + Q*eps, Laurent polynomials in z_1..z_l, Weyl straightening and
// Schur-basis utilities.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace catlab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// QtLaurent

class QtLaurent {
 public:
  struct Term {
    int q = 0;
    int t = 0;
    BigInt c;
  };

  QtLaurent() = default;
  QtLaurent(long long c) {  // NOLINT(google-explicit-constructor)
    if (c != 0) terms_.push_back({0, 0, BigInt(c)});
  }
  static QtLaurent monomial(int a, int b, BigInt c = 1) {
    QtLaurent r;
    if (c != 0) r.terms_.push_back({a, b, std::move(c)});
    return r;
  }
  static QtLaurent q_pow(int a) { return monomial(a, 0); }
  static QtLaurent t_pow(int b) { return monomial(0, b); }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  // Coefficient of q^a t^b.
  BigInt coeff(int a, int b) const {
    auto it = find(a, b);
    if (it != terms_.end() && it->q == a && it->t == b) return it->c;
    return 0;
  }

  void add_term(int a, int b, const BigInt& c) {
    if (c == 0) return;
    auto it = find(a, b);
    if (it != terms_.end() && it->q == a && it->t == b) {
      it->c += c;
      if (it->c == 0) terms_.erase(it);
    } else {
      terms_.insert(it, Term{a, b, c});
    }
  }

  QtLaurent& operator+=(const QtLaurent& o) {
    if (o.terms_.empty()) return *this;
    if (terms_.empty()) {
      terms_ = o.terms_;
      return *this;
    }
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    while (a != terms_.end() || b != o.terms_.end()) {
      if (b == o.terms_.end() || (a != terms_.end() && key_less(*a, *b))) {
        out.push_back(std::move(*a++));
      } else if (a == terms_.end() || key_less(*b, *a)) {
        out.push_back(*b++);
      } else {
        BigInt c = a->c + b->c;
        if (c != 0) out.push_back({a->q, a->t, std::move(c)});
        ++a;
        ++b;
      }
    }
    terms_ = std::move(out);
    return *this;
  }
  QtLaurent& operator-=(const QtLaurent& o) { return *this += -o; }

  QtLaurent operator-() const {
    QtLaurent r = *this;
    for (auto& tm : r.terms_) tm.c = -tm.c;
    return r;
  }
  friend QtLaurent operator+(QtLaurent a, const QtLaurent& b) { return a += b; }
  friend QtLaurent operator-(QtLaurent a, const QtLaurent& b) { return a -= b; }

  friend QtLaurent operator*(const QtLaurent& a, const QtLaurent& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (b.terms_.size() == 1) return a.times_monomial(b.terms_[0].q, b.terms_[0].t, b.terms_[0].c);
    if (a.terms_.size() == 1) return b.times_monomial(a.terms_[0].q, a.terms_[0].t, a.terms_[0].c);
    std::map<std::pair<int, int>, BigInt> acc;
    for (const auto& x : a.terms_)
      for (const auto& y : b.terms_) acc[{x.q + y.q, x.t + y.t}] += x.c * y.c;
    QtLaurent r;
    r.terms_.reserve(acc.size());
    for (auto& [k, c] : acc)
      if (c != 0) r.terms_.push_back({k.first, k.second, std::move(c)});
    return r;
  }
  QtLaurent& operator*=(const QtLaurent& o) { return *this = *this * o; }

  QtLaurent times_monomial(int a, int b, const BigInt& c = 1) const {
    QtLaurent r;
    if (c == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& tm : terms_) r.terms_.push_back({tm.q + a, tm.t + b, tm.c * c});
    return r;
  }

  QtLaurent pow(int n) const {
    if (n < 0) throw std::invalid_argument("QtLaurent::pow: negative exponent");
    QtLaurent r(1), base = *this;
    while (n) {
      if (n & 1) r *= base;
      n >>= 1;
      if (n) base *= base;
    }
    return r;
  }

  // f(q,t) -> f(q^sq, t^st) for sq, st in {+1,-1}.
  QtLaurent invert(bool inv_q, bool inv_t) const {
    QtLaurent r;
    for (const auto& tm : terms_) r.add_term(inv_q ? -tm.q : tm.q, inv_t ? -tm.t : tm.t, tm.c);
    return r;
  }
  QtLaurent swap_qt() const {
    QtLaurent r;
    for (const auto& tm : terms_) r.add_term(tm.t, tm.q, tm.c);
    return r;
  }

  bool nonnegative() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const Term& x) { return x.c > 0; });
  }
  bool is_polynomial() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const Term& x) { return x.q >= 0 && x.t >= 0; });
  }
  int max_t_degree() const {
    int m = INT32_MIN;
    for (const auto& x : terms_) m = std::max(m, x.t);
    return m;
  }
  // Terms of a fixed t-degree.
  QtLaurent t_slice(int b) const {
    QtLaurent r;
    for (const auto& x : terms_)
      if (x.t == b) r.terms_.push_back(x);
    return r;
  }
  QtLaurent truncate_t(int bmax) const {
    QtLaurent r;
    for (const auto& x : terms_)
      if (x.t <= bmax) r.terms_.push_back(x);
    return r;
  }

  Rational evaluate(const Rational& q, const Rational& t) const {
    Rational s = 0;
    for (const auto& x : terms_) s += Rational(x.c) * rpow(q, x.q) * rpow(t, x.t);
    return s;
  }

  friend bool operator==(const QtLaurent& a, const QtLaurent& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
      const auto& x = a.terms_[i];
      const auto& y = b.terms_[i];
      if (x.q != y.q || x.t != y.t || x.c != y.c) return false;
    }
    return true;
  }
  friend bool operator!=(const QtLaurent& a, const QtLaurent& b) { return !(a == b); }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Highest degree first for readability.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      BigInt c = it->c;
      bool neg = c < 0;
      if (neg) c = -c;
      if (!first) os << (neg ? " - " : " + ");
      else if (neg) os << "-";
      first = false;
      bool unit = it->q == 0 && it->t == 0;
      if (c != 1 || unit) os << c;
      auto var = [&](const char* v, int e) {
        if (e == 0) return;
        os << v;
        if (e != 1) os << "^" << e;
      };
      var("q", it->q);
      var("t", it->t);
    }
    return os.str();
  }

  static Rational rpow(const Rational& x, int e) {
    Rational r = 1;
    Rational b = e >= 0 ? x : Rational(1) / x;
    unsigned n = static_cast<unsigned>(e >= 0 ? e : -e);
    while (n) {
      if (n & 1) r *= b;
      n >>= 1;
      if (n) b *= b;
    }
    return r;
  }

 private:
  static bool key_less(const Term& a, const Term& b) { return a.q != b.q ? a.q < b.q : a.t < b.t; }
  std::vector<Term>::iterator find(int a, int b) {
    return std::lower_bound(terms_.begin(), terms_.end(), std::make_pair(a, b),
                            [](const Term& x, const std::pair<int, int>& k) {
                              return x.q != k.first ? x.q < k.first : x.t < k.second;
                            });
  }
  std::vector<Term>::const_iterator find(int a, int b) const {
    return std::lower_bound(terms_.begin(), terms_.end(), std::make_pair(a, b),
                            [](const Term& x, const std::pair<int, int>& k) {
                              return x.q != k.first ? x.q < k.first : x.t < k.second;
                            });
  }
  std::vector<Term> terms_;
};

inline std::ostream& operator<<(std::ostream& os, const QtLaurent& f) { return os << f.to_string(); }

inline const QtLaurent& q_var() {
  static const QtLaurent v = QtLaurent::q_pow(1);
  return v;
}
inline const QtLaurent& t_var() {
  static const QtLaurent v = QtLaurent::t_pow(1);
  return v;
}

// ---------------------------------------------------------------------------
// EpsReal: a + b*eps with eps a positive infinitesimal.

class EpsReal {
 public:
  EpsReal() = default;
  EpsReal(Rational a, Rational b = 0) : a_(std::move(a)), b_(std::move(b)) {}  // NOLINT
  EpsReal(long long a) : a_(a), b_(0) {}                                        // NOLINT

  const Rational& std_part() const { return a_; }
  const Rational& eps_part() const { return b_; }
  bool irrational_like() const { return b_ != 0; }

  friend EpsReal operator+(const EpsReal& x, const EpsReal& y) { return {x.a_ + y.a_, x.b_ + y.b_}; }
  friend EpsReal operator-(const EpsReal& x, const EpsReal& y) { return {x.a_ - y.a_, x.b_ - y.b_}; }
  EpsReal operator-() const { return {-a_, -b_}; }
  // Scaling by a rational.
  friend EpsReal operator*(const Rational& r, const EpsReal& x) { return {r * x.a_, r * x.b_}; }
  friend EpsReal operator*(const EpsReal& x, const Rational& r) { return r * x; }

  friend bool operator==(const EpsReal& x, const EpsReal& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
  friend bool operator!=(const EpsReal& x, const EpsReal& y) { return !(x == y); }
  friend bool operator<(const EpsReal& x, const EpsReal& y) {
    return x.a_ != y.a_ ? x.a_ < y.a_ : x.b_ < y.b_;
  }
  friend bool operator>(const EpsReal& x, const EpsReal& y) { return y < x; }
  friend bool operator<=(const EpsReal& x, const EpsReal& y) { return !(y < x); }
  friend bool operator>=(const EpsReal& x, const EpsReal& y) { return !(x < y); }

  BigInt floor_big() const {
    BigInt n = numerator(a_), d = denominator(a_);
    BigInt f = n / d;
    if (n % d != 0) {
      if (n < 0) f -= 1;
      return f;
    }
    if (b_ < 0) f -= 1;
    return f;
  }
  long long floor() const { return static_cast<long long>(floor_big()); }
  EpsReal frac() const { return *this - EpsReal(Rational(floor_big())); }

  std::string to_string() const {
    std::ostringstream os;
    os << a_;
    if (b_ > 0) os << "+" << (b_ == 1 ? std::string() : b_.str()) << "eps";
    if (b_ < 0) os << "-" << (b_ == -1 ? std::string() : Rational(-b_).str()) << "eps";
    return os.str();
  }

 private:
  Rational a_ = 0;
  Rational b_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const EpsReal& x) { return os << x.to_string(); }

// ---------------------------------------------------------------------------
// Weights, partitions, Laurent polynomials in z.

using ZWeight = std::vector<int>;
using Partition = std::vector<int>;  // weakly decreasing, positive parts

inline Partition normalize_partition(std::vector<int> v) {
  std::sort(v.begin(), v.end(), std::greater<>());
  while (!v.empty() && v.back() == 0) v.pop_back();
  if (!v.empty() && v.back() < 0) throw InputError("partition with negative part");
  return v;
}

inline int partition_size(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

inline bool is_partition(const std::vector<int>& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] <= 0) return false;
    if (i && v[i] > v[i - 1]) return false;
  }
  return true;
}

inline Partition transpose(const Partition& p) {
  Partition t;
  if (p.empty()) return t;
  t.assign(p[0], 0);
  for (int r : p)
    for (int j = 0; j < r; ++j) ++t[j];
  return t;
}

inline ZWeight pad(const Partition& p, int l) {
  ZWeight w(p.begin(), p.end());
  if (static_cast<int>(w.size()) > l) throw InputError("partition longer than variable count");
  w.resize(l, 0);
  return w;
}

inline std::vector<Partition> partitions_of(int n, int max_len = -1, int max_part = -1) {
  std::vector<Partition> out;
  Partition cur;
  auto rec = [&](auto& self, int rem, int maxp) -> void {
    if (rem == 0) {
      out.push_back(cur);
      return;
    }
    if (max_len >= 0 && static_cast<int>(cur.size()) >= max_len) return;
    for (int k = std::min(rem, maxp); k >= 1; --k) {
      cur.push_back(k);
      self(self, rem - k, k);
      cur.pop_back();
    }
  };
  rec(rec, n, max_part < 0 ? n : max_part);
  return out;
}

inline std::string weight_string(const std::vector<int>& w) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
  os << ")";
  return os.str();
}

class MultiLaurent {
 public:
  using Map = std::map<ZWeight, QtLaurent>;

  MultiLaurent() = default;
  explicit MultiLaurent(int l) : l_(l) {}
  static MultiLaurent monomial(const ZWeight& w, const QtLaurent& c = QtLaurent(1)) {
    MultiLaurent f(static_cast<int>(w.size()));
    f.add(w, c);
    return f;
  }
  static MultiLaurent constant(int l, const QtLaurent& c) { return monomial(ZWeight(l, 0), c); }

  int nvars() const { return l_; }
  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  QtLaurent coeff(const ZWeight& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? QtLaurent() : it->second;
  }

  void add(const ZWeight& w, const QtLaurent& c) {
    if (c.is_zero()) return;
    if (static_cast<int>(w.size()) != l_) throw InputError("MultiLaurent: weight length mismatch");
    auto [it, fresh] = terms_.try_emplace(w, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  void add(ZWeight&& w, const QtLaurent& c) {
    if (c.is_zero()) return;
    if (static_cast<int>(w.size()) != l_) throw InputError("MultiLaurent: weight length mismatch");
    auto it = terms_.find(w);
    if (it == terms_.end()) {
      terms_.emplace(std::move(w), c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  MultiLaurent& operator+=(const MultiLaurent& o) {
    if (terms_.empty() && l_ == 0) l_ = o.l_;
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
  }
  MultiLaurent& operator-=(const MultiLaurent& o) {
    if (terms_.empty() && l_ == 0) l_ = o.l_;
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
  }
  friend MultiLaurent operator+(MultiLaurent a, const MultiLaurent& b) { return a += b; }
  friend MultiLaurent operator-(MultiLaurent a, const MultiLaurent& b) { return a -= b; }
  MultiLaurent operator-() const {
    MultiLaurent r = *this;
    for (auto& [w, c] : r.terms_) c = -c;
    return r;
  }

  MultiLaurent scaled(const QtLaurent& s) const {
    MultiLaurent r(l_);
    if (s.is_zero()) return r;
    for (const auto& [w, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), w, c * s);
    return r;
  }

  MultiLaurent shifted(const ZWeight& v) const {
    MultiLaurent r(l_);
    for (const auto& [w, c] : terms_) {
      ZWeight u = w;
      for (int i = 0; i < l_; ++i) u[i] += v[i];
      r.terms_.emplace(std::move(u), c);
    }
    return r;
  }

  friend MultiLaurent operator*(const MultiLaurent& a, const MultiLaurent& b) {
    MultiLaurent r(std::max(a.l_, b.l_));
    if (a.is_zero() || b.is_zero()) return r;
    if (a.l_ != b.l_) throw InputError("MultiLaurent: variable count mismatch");
    for (const auto& [u, c] : a.terms_) {
      for (const auto& [v, d] : b.terms_) {
        ZWeight w(u.size());
        for (std::size_t i = 0; i < u.size(); ++i) w[i] = u[i] + v[i];
        r.add(std::move(w), c * d);
      }
    }
    return r;
  }

  // Invert q, t and every z_i.
  MultiLaurent bar() const {
    MultiLaurent r(l_);
    for (const auto& [w, c] : terms_) {
      ZWeight u(w.size());
      for (std::size_t i = 0; i < w.size(); ++i) u[i] = -w[i];
      r.terms_.emplace(std::move(u), c.invert(true, true));
    }
    return r;
  }
  MultiLaurent map_coeffs_invert_q() const {
    MultiLaurent r(l_);
    for (const auto& [w, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), w, c.invert(true, false));
    return r;
  }
  // z_i -> z_{perm[i]} (0-based one-line notation).
  MultiLaurent permuted(const std::vector<int>& perm) const {
    MultiLaurent r(l_);
    for (const auto& [w, c] : terms_) {
      ZWeight u(w.size());
      for (std::size_t i = 0; i < w.size(); ++i) u[perm[i]] = w[i];
      r.terms_.emplace(std::move(u), c);
    }
    return r;
  }
  // Reverse the variable order (the longest permutation w0).
  MultiLaurent reversed() const {
    MultiLaurent r(l_);
    for (const auto& [w, c] : terms_) r.terms_.emplace(ZWeight(w.rbegin(), w.rend()), c);
    return r;
  }

  friend bool operator==(const MultiLaurent& a, const MultiLaurent& b) {
    return a.terms_ == b.terms_ && (a.is_zero() || a.l_ == b.l_);
  }
  friend bool operator!=(const MultiLaurent& a, const MultiLaurent& b) { return !(a == b); }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
      if (!first) os << " + ";
      first = false;
      os << "(" << c << ")*z^" << weight_string(w);
    }
    return os.str();
  }

 private:
  int l_ = 0;
  Map terms_;
};

// ---------------------------------------------------------------------------
// SchurPoly

struct SchurPoly {
  int l = 0;
  std::map<Partition, QtLaurent> coeffs;

  SchurPoly() = default;
  explicit SchurPoly(int nvars) : l(nvars) {}

  void add(const Partition& lam, const QtLaurent& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = coeffs.try_emplace(lam, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) coeffs.erase(it);
    }
  }
  QtLaurent coeff(const Partition& lam) const {
    auto it = coeffs.find(lam);
    return it == coeffs.end() ? QtLaurent() : it->second;
  }
  bool is_zero() const { return coeffs.empty(); }

  SchurPoly& operator+=(const SchurPoly& o) {
    l = std::max(l, o.l);
    for (const auto& [p, c] : o.coeffs) add(p, c);
    return *this;
  }
  SchurPoly& operator-=(const SchurPoly& o) {
    l = std::max(l, o.l);
    for (const auto& [p, c] : o.coeffs) add(p, -c);
    return *this;
  }
  SchurPoly scaled(const QtLaurent& s) const {
    SchurPoly r(l);
    if (s.is_zero()) return r;
    for (const auto& [p, c] : coeffs) r.coeffs.emplace(p, c * s);
    return r;
  }
  SchurPoly map_coeffs(const std::function<QtLaurent(const QtLaurent&)>& f) const {
    SchurPoly r(l);
    for (const auto& [p, c] : coeffs) r.add(p, f(c));
    return r;
  }
  // Drop partitions with more than n parts.
  SchurPoly truncated(int n) const {
    SchurPoly r(n);
    for (const auto& [p, c] : coeffs)
      if (static_cast<int>(p.size()) <= n) r.coeffs.emplace(p, c);
    return r;
  }
  // Equality of coefficient maps (the variable count is bookkeeping only).
  friend bool operator==(const SchurPoly& a, const SchurPoly& b) { return a.coeffs == b.coeffs; }
  friend bool operator!=(const SchurPoly& a, const SchurPoly& b) { return !(a == b); }

  std::string to_string() const {
    if (coeffs.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
      if (!first) os << " + ";
      first = false;
      os << "(" << it->second << ")*s" << weight_string(it->first);
    }
    return os.str();
  }
};

inline std::ostream& operator<<(std::ostream& os, const SchurPoly& f) { return os << f.to_string(); }

// ---------------------------------------------------------------------------
// Straightening sigma(z^mu) = sign * chi_lambda.

struct Straightened {
  int sign = 1;
  ZWeight lam;  // dominant weight of length l
};

enum class StraightenMode { polynomial_only, full };

inline std::optional<Straightened> straighten(const ZWeight& mu, int l,
                                              StraightenMode mode = StraightenMode::polynomial_only) {
  if (static_cast<int>(mu.size()) != l) throw InputError("straighten: length mismatch");
  std::vector<int> v(l);
  for (int i = 0; i < l; ++i) v[i] = mu[i] + (l - 1 - i);
  // Insertion sort into decreasing order, counting transpositions.
  int swaps = 0;
  for (int i = 1; i < l; ++i) {
    int x = v[i];
    int j = i - 1;
    while (j >= 0 && v[j] < x) {
      v[j + 1] = v[j];
      --j;
      ++swaps;
    }
    v[j + 1] = x;
  }
  for (int i = 1; i < l; ++i)
    if (v[i] == v[i - 1]) return std::nullopt;
  Straightened s;
  s.sign = (swaps % 2) ? -1 : 1;
  s.lam.resize(l);
  for (int i = 0; i < l; ++i) s.lam[i] = v[i] - (l - 1 - i);
  if (mode == StraightenMode::polynomial_only && l > 0 && s.lam[l - 1] < 0) return std::nullopt;
  return s;
}

inline Partition strip_zeros(const ZWeight& w) {
  Partition p(w.begin(), w.end());
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

// Polynomial part of sigma(f) in the Schur basis.
inline SchurPoly weyl_symmetrize(const MultiLaurent& f) {
  SchurPoly r(f.nvars());
  for (const auto& [w, c] : f.terms()) {
    auto s = straighten(w, f.nvars());
    if (!s) continue;
    r.add(strip_zeros(s->lam), s->sign > 0 ? c : -c);
  }
  return r;
}

// Full sigma(f) as a map from dominant weights (possibly negative) to coefficients.
inline std::map<ZWeight, QtLaurent> weyl_symmetrize_full(const MultiLaurent& f) {
  std::map<ZWeight, QtLaurent> r;
  for (const auto& [w, c] : f.terms()) {
    auto s = straighten(w, f.nvars(), StraightenMode::full);
    if (!s) continue;
    auto& slot = r[s->lam];
    slot += s->sign > 0 ? c : -c;
    if (slot.is_zero()) r.erase(s->lam);
  }
  return r;
}

inline SchurPoly omega(const SchurPoly& f) {
  SchurPoly r;
  for (const auto& [p, c] : f.coeffs) {
    Partition t = transpose(p);
    r.l = std::max<int>(r.l, static_cast<int>(t.size()));
    r.add(t, c);
  }
  return r;
}

// Monomial expansion of s_lambda(z_1..z_l) by semistandard tableaux, cached.
inline const MultiLaurent& schur_in_vars(const Partition& lam, int l) {
  static std::mutex mu;
  static std::map<std::pair<Partition, int>, MultiLaurent> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(lam, l);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  MultiLaurent f(l);
  if (static_cast<int>(lam.size()) <= l) {
    // Fill row by row (English rows, French orientation is irrelevant for content).
    std::vector<std::vector<int>> T(lam.size());
    for (std::size_t r = 0; r < lam.size(); ++r) T[r].assign(lam[r], 0);
    ZWeight content(l, 0);
    std::vector<std::pair<int, int>> cells;
    for (std::size_t r = 0; r < lam.size(); ++r)
      for (int c = 0; c < lam[r]; ++c) cells.emplace_back(static_cast<int>(r), c);
    auto rec = [&](auto& self, std::size_t k) -> void {
      if (k == cells.size()) {
        f.add(content, QtLaurent(1));
        return;
      }
      auto [r, c] = cells[k];
      int lo = 1;
      if (c > 0) lo = std::max(lo, T[r][c - 1]);
      if (r > 0) lo = std::max(lo, T[r - 1][c] + 1);
      for (int v = lo; v <= l; ++v) {
        T[r][c] = v;
        ++content[v - 1];
        self(self, k + 1);
        --content[v - 1];
      }
    };
    rec(rec, 0);
  }
  return cache.emplace(key, std::move(f)).first->second;
}

// Kostka number K_{lam, mu}: coefficient of z^mu in s_lam(z_1..z_len(mu)).
inline BigInt kostka(const Partition& lam, const ZWeight& mu) {
  const auto& s = schur_in_vars(lam, static_cast<int>(mu.size()));
  QtLaurent c = s.coeff(mu);
  return c.coeff(0, 0);
}

// Schur expansion of a symmetric polynomial given only its coefficients on
// dominant monomials z^lam (lam a partition padded to l), by unitriangular
// elimination in dominance order.
inline SchurPoly schur_from_dominant(std::map<Partition, QtLaurent> dom, int l) {
  SchurPoly r(l);
  while (!dom.empty()) {
    // Lexicographically largest partition is maximal in dominance order among those present.
    auto it = std::prev(dom.end());
    Partition lam = it->first;
    QtLaurent c = it->second;
    dom.erase(it);
    if (c.is_zero()) continue;
    r.add(lam, c);
    const auto& s = schur_in_vars(lam, l);
    for (const auto& [w, k] : s.terms()) {
      if (!std::is_sorted(w.begin(), w.end(), std::greater<>())) continue;
      Partition mu = strip_zeros(w);
      if (mu == lam) continue;
      auto& slot = dom[mu];
      slot -= c * k;
      if (slot.is_zero()) dom.erase(mu);
    }
  }
  return r;
}

// Monomial expansion of a Schur polynomial in l variables.
inline MultiLaurent schur_to_monomials(const SchurPoly& f, int l) {
  MultiLaurent r(l);
  for (const auto& [p, c] : f.coeffs) {
    if (static_cast<int>(p.size()) > l) continue;
    r += schur_in_vars(p, l).scaled(c);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Positive roots and Kostant-type partition functions.

struct Root {
  int i = 0;  // 0-based, i < j
  int j = 0;
  friend bool operator<(const Root& a, const Root& b) { return a.i != b.i ? a.i < b.i : a.j < b.j; }
  friend bool operator==(const Root& a, const Root& b) { return a.i == b.i && a.j == b.j; }
};

// Sum over N-combinations of the given positive roots equal to nu of unit^{total multiplicity}.
inline QtLaurent kostant_q(const ZWeight& nu, const std::vector<Root>& roots, const QtLaurent& unit) {
  const int l = static_cast<int>(nu.size());
  for (const auto& r : roots)
    if (!(0 <= r.i && r.i < r.j && r.j < l)) throw InputError("kostant_q: bad root");
  // Prefix sums of nu must be nonnegative and the total zero.
  long long pref = 0;
  for (int x : nu) {
    pref += x;
    if (pref < 0) return {};
  }
  if (pref != 0) return {};
  std::vector<std::vector<int>> out(l);  // out[i] = targets j of roots (i,j)
  for (const auto& r : roots) out[r.i].push_back(r.j);
  for (auto& v : out) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }
  // count[n] = number of solutions with total multiplicity n.
  std::map<int, BigInt> count;
  ZWeight res = nu;
  auto rec = [&](auto& self, int i, std::size_t k, int total) -> void {
    if (i == l) {
      count[total] += 1;
      return;
    }
    if (k == 0) {
      if (res[i] < 0) return;
      if (res[i] > 0 && out[i].empty()) return;
    }
    if (k == out[i].size()) {
      if (res[i] != 0) return;
      self(self, i + 1, 0, total);
      return;
    }
    int j = out[i][k];
    int maxm = res[i];
    for (int m = (k + 1 == out[i].size()) ? maxm : 0; m <= maxm; ++m) {
      res[i] -= m;
      res[j] += m;
      self(self, i, k + 1, total + m);
      res[i] += m;
      res[j] -= m;
    }
  };
  if (l == 0) return QtLaurent(1);
  rec(rec, 0, 0, 0);
  QtLaurent result;
  for (const auto& [n, c] : count) result += unit.pow(n) * QtLaurent::monomial(0, 0, c);
  return result;
}

inline std::vector<Root> all_positive_roots(int l) {
  std::vector<Root> r;
  for (int i = 0; i < l; ++i)
    for (int j = i + 1; j < l; ++j) r.push_back({i, j});
  return r;
}

// Permutation helpers (one-line notation, values 1..n).
using Perm = std::vector<int>;

inline Perm perm_inverse(const Perm& s) {
  Perm r(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) r[s[i] - 1] = static_cast<int>(i) + 1;
  return r;
}
inline Perm perm_compose(const Perm& a, const Perm& b) {  // (a b)(i) = a(b(i))
  Perm r(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = a[b[i] - 1];
  return r;
}
inline Perm perm_identity(int n) {
  Perm r(n);
  std::iota(r.begin(), r.end(), 1);
  return r;
}
inline Perm perm_longest(int n) {
  Perm r(n);
  for (int i = 0; i < n; ++i) r[i] = n - i;
  return r;
}
inline int perm_length(const Perm& s) {
  int c = 0;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (s[i] > s[j]) ++c;
  return c;
}
inline std::vector<Perm> all_perms(int n) {
  std::vector<Perm> out;
  Perm p = perm_identity(n);
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}
// Permutation listing the relative order of distinct keys: result[i] = rank of keys[i] (1-based).
template <class T>
Perm relative_order(const std::vector<T>& keys) {
  std::vector<int> idx(keys.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return keys[a] < keys[b]; });
  Perm r(keys.size());
  for (std::size_t k = 0; k < idx.size(); ++k) r[idx[k]] = static_cast<int>(k) + 1;
  return r;
}

}  // namespace catlab
