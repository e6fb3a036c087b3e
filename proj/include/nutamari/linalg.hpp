#pragma once

// Exact rational linear algebra helpers: fractions over long long, matrix
// rank, and polyhedral cone membership by Gaussian elimination plus
// Fourier-Motzkin elimination. Everything is exact; no floating point.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

namespace nutamari {

using IntVec = std::vector<long long>;

struct Frac {
  long long num = 0;
  long long den = 1;

  Frac() = default;
  Frac(long long n) : num(n), den(1) {}
  Frac(long long n, long long d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) throw std::logic_error("Frac: zero denominator");
    if (den < 0) { num = -num; den = -den; }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
  }

  bool is_zero() const { return num == 0; }
  bool is_negative() const { return num < 0; }
  bool is_positive() const { return num > 0; }

  friend Frac operator+(const Frac& a, const Frac& b) {
    return make(static_cast<__int128>(a.num) * b.den + static_cast<__int128>(b.num) * a.den,
                static_cast<__int128>(a.den) * b.den);
  }
  friend Frac operator-(const Frac& a, const Frac& b) {
    return make(static_cast<__int128>(a.num) * b.den - static_cast<__int128>(b.num) * a.den,
                static_cast<__int128>(a.den) * b.den);
  }
  friend Frac operator*(const Frac& a, const Frac& b) {
    return make(static_cast<__int128>(a.num) * b.num, static_cast<__int128>(a.den) * b.den);
  }
  friend Frac operator/(const Frac& a, const Frac& b) {
    if (b.num == 0) throw std::logic_error("Frac: division by zero");
    return make(static_cast<__int128>(a.num) * b.den, static_cast<__int128>(a.den) * b.num);
  }
  Frac operator-() const { Frac r; r.num = -num; r.den = den; return r; }
  friend bool operator==(const Frac& a, const Frac& b) { return a.num == b.num && a.den == b.den; }
  friend bool operator<(const Frac& a, const Frac& b) {
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
  }

 private:
  static Frac make(__int128 n, __int128 d) {
    if (d < 0) { n = -n; d = -d; }
    __int128 an = n < 0 ? -n : n;
    __int128 g = gcd128(an, d);
    if (g > 1) { n /= g; d /= g; }
    constexpr __int128 lim = 0x7fffffffffffffffLL;
    if (n > lim || n < -lim || d > lim)
      throw std::overflow_error("Frac: value out of range");
    Frac r;
    r.num = static_cast<long long>(n);
    r.den = static_cast<long long>(d);
    return r;
  }
  static __int128 gcd128(__int128 a, __int128 b) {
    while (b) { __int128 t = a % b; a = b; b = t; }
    return a;
  }
};

// Rank over the rationals of a list of integer row vectors.
inline int rank_rational(std::vector<IntVec> rows) {
  if (rows.empty()) return 0;
  size_t cols = rows[0].size();
  std::vector<std::vector<Frac>> m;
  m.reserve(rows.size());
  for (const auto& r : rows) {
    if (r.size() != cols) throw std::invalid_argument("rank_rational: ragged rows");
    std::vector<Frac> fr(r.begin(), r.end());
    m.push_back(std::move(fr));
  }
  int rank = 0;
  for (size_t col = 0; col < cols && rank < static_cast<int>(m.size()); ++col) {
    size_t pivot = m.size();
    for (size_t r = rank; r < m.size(); ++r)
      if (!m[r][col].is_zero()) { pivot = r; break; }
    if (pivot == m.size()) continue;
    std::swap(m[rank], m[pivot]);
    Frac inv = Frac(1) / m[rank][col];
    for (size_t c = col; c < cols; ++c) m[rank][c] = m[rank][c] * inv;
    for (size_t r = 0; r < m.size(); ++r) {
      if (static_cast<int>(r) == rank || m[r][col].is_zero()) continue;
      Frac f = m[r][col];
      for (size_t c = col; c < cols; ++c) m[r][c] = m[r][c] - f * m[rank][c];
    }
    ++rank;
  }
  return rank;
}

// Affine rank of a point set: rank of differences to the first point.
inline int affine_rank(const std::vector<IntVec>& points) {
  if (points.size() <= 1) return 0;
  std::vector<IntVec> diffs;
  diffs.reserve(points.size() - 1);
  for (size_t i = 1; i < points.size(); ++i) {
    IntVec d(points[i].size());
    for (size_t c = 0; c < d.size(); ++c) d[c] = points[i][c] - points[0][c];
    diffs.push_back(std::move(d));
  }
  return rank_rational(diffs);
}

namespace detail {

// One inequality sum(coef[i] * t_i) + constant >= 0 with rational data,
// stored with a common integer normalization so duplicates collapse.
struct Ineq {
  std::vector<Frac> coef;
  Frac cst;

  void normalize() {
    // scale so the first nonzero entry is +/-1-ish: divide by gcd of nums,
    // multiply by lcm of dens. Simpler: scale by 1/largest |coef| is not
    // exact-friendly; use gcd over integers after clearing denominators.
    long long lcm = 1;
    auto fold = [&](const Frac& f) {
      long long g = std::gcd(lcm, f.den);
      lcm = lcm / g * f.den;
    };
    for (const auto& f : coef) fold(f);
    fold(cst);
    std::vector<long long> ints;
    ints.reserve(coef.size() + 1);
    for (const auto& f : coef) ints.push_back(f.num * (lcm / f.den));
    ints.push_back(cst.num * (lcm / cst.den));
    long long g = 0;
    for (long long v : ints) g = std::gcd(g, v < 0 ? -v : v);
    if (g > 1)
      for (auto& v : ints) v /= g;
    for (size_t i = 0; i < coef.size(); ++i) coef[i] = Frac(ints[i]);
    cst = Frac(ints.back());
  }

  bool operator<(const Ineq& o) const {
    for (size_t i = 0; i < coef.size(); ++i) {
      if (coef[i] < o.coef[i]) return true;
      if (o.coef[i] < coef[i]) return false;
    }
    return cst < o.cst;
  }
};

}  // namespace detail

// Decides whether v is a nonnegative rational combination of the generators.
// Solves {G c = v, c >= 0} exactly: Gauss-Jordan on the equalities, then
// Fourier-Motzkin elimination of the free parameters.
inline bool cone_contains(const std::vector<IntVec>& gens, const IntVec& v) {
  size_t dim = v.size();
  size_t k = gens.size();
  bool vzero = std::all_of(v.begin(), v.end(), [](long long x) { return x == 0; });
  if (k == 0) return vzero;
  for (const auto& g : gens)
    if (g.size() != dim) throw std::invalid_argument("cone_contains: dimension mismatch");

  // Augmented system rows: sum_c M[r][c] * x_c = rhs[r].
  std::vector<std::vector<Frac>> m(dim, std::vector<Frac>(k));
  std::vector<Frac> rhs(dim);
  for (size_t r = 0; r < dim; ++r) {
    for (size_t c = 0; c < k; ++c) m[r][c] = Frac(gens[c][r]);
    rhs[r] = Frac(v[r]);
  }

  std::vector<int> pivot_col_of_row;
  std::vector<int> row_of_col(k, -1);
  size_t row = 0;
  for (size_t col = 0; col < k && row < dim; ++col) {
    size_t pr = dim;
    for (size_t r = row; r < dim; ++r)
      if (!m[r][col].is_zero()) { pr = r; break; }
    if (pr == dim) continue;
    std::swap(m[row], m[pr]);
    std::swap(rhs[row], rhs[pr]);
    Frac inv = Frac(1) / m[row][col];
    for (size_t c = col; c < k; ++c) m[row][c] = m[row][c] * inv;
    rhs[row] = rhs[row] * inv;
    for (size_t r = 0; r < dim; ++r) {
      if (r == row || m[r][col].is_zero()) continue;
      Frac f = m[r][col];
      for (size_t c = col; c < k; ++c) m[r][c] = m[r][c] - f * m[row][c];
      rhs[r] = rhs[r] - f * rhs[row];
    }
    row_of_col[col] = static_cast<int>(row);
    pivot_col_of_row.push_back(static_cast<int>(col));
    ++row;
  }
  // Inconsistent equality -> not in the linear span at all.
  for (size_t r = row; r < dim; ++r)
    if (!rhs[r].is_zero()) return false;

  std::vector<int> free_cols;
  for (size_t c = 0; c < k; ++c)
    if (row_of_col[c] < 0) free_cols.push_back(static_cast<int>(c));
  size_t nfree = free_cols.size();

  // Express every original coordinate c_i as an affine function of the free
  // parameters, then require c_i >= 0.
  std::vector<detail::Ineq> ineqs;
  for (size_t c = 0; c < k; ++c) {
    detail::Ineq q;
    q.coef.assign(nfree, Frac(0));
    if (row_of_col[c] >= 0) {
      int r = row_of_col[c];
      q.cst = rhs[r];
      for (size_t f = 0; f < nfree; ++f) q.coef[f] = -m[r][free_cols[f]];
    } else {
      q.cst = Frac(0);
      for (size_t f = 0; f < nfree; ++f)
        if (free_cols[f] == static_cast<int>(c)) q.coef[f] = Frac(1);
    }
    q.normalize();
    ineqs.push_back(std::move(q));
  }

  // Fourier-Motzkin.
  for (size_t var = 0; var < nfree; ++var) {
    std::vector<detail::Ineq> pos, neg, rest;
    for (auto& q : ineqs) {
      if (q.coef[var].is_positive()) pos.push_back(q);
      else if (q.coef[var].is_negative()) neg.push_back(q);
      else rest.push_back(q);
    }
    std::set<detail::Ineq> next(rest.begin(), rest.end());
    for (const auto& p : pos) {
      for (const auto& n : neg) {
        detail::Ineq q;
        q.coef.assign(nfree, Frac(0));
        Frac a = p.coef[var];
        Frac b = -n.coef[var];  // positive
        for (size_t f = 0; f < nfree; ++f)
          q.coef[f] = b * p.coef[f] + a * n.coef[f];
        q.cst = b * p.cst + a * n.cst;
        q.normalize();
        next.insert(std::move(q));
      }
    }
    ineqs.assign(next.begin(), next.end());
    if (ineqs.size() > 200000)
      throw std::logic_error("cone_contains: Fourier-Motzkin blow-up");
  }
  for (const auto& q : ineqs)
    if (q.cst.is_negative()) return false;
  return true;
}

}  // namespace nutamari
