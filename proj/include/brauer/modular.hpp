#pragma once

// Exact nullspace of an integer matrix by multi-modular elimination.
// The rank found modulo a prime never exceeds the rational rank, and every
// reconstructed null vector is checked exactly, so the answer is exact
// whenever the routine returns.

#include "brauer/field.hpp"
#include "brauer/linalg.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace brauer::modular {

/// Primes below 2^31, descending, starting at or below `start`.
class PrimeStream {
 public:
  explicit PrimeStream(std::uint64_t start = 2147483647ull) : next_(start) {}
  std::uint64_t next() {
    while (!is_prime(next_)) --next_;
    return next_--;
  }

 private:
  std::uint64_t next_;
};

struct ModRref {
  std::vector<std::uint64_t> data;  // rows x cols, reduced
  std::vector<std::size_t> pivots;
  std::size_t cols = 0;
  std::uint64_t p = 0;
  std::uint64_t at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

inline std::uint64_t reduce_mod(const Integer& v, std::uint64_t p) {
  Integer r = v % Integer(p);
  if (r < 0) r += p;
  return r.convert_to<std::uint64_t>();
}

inline std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) { return Fp(a, p).inverse().value(); }

inline ModRref rref_mod(const Matrix<Integer>& a, std::uint64_t p) {
  const std::size_t m = a.rows(), n = a.cols();
  ModRref out;
  out.cols = n;
  out.p = p;
  out.data.resize(m * n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) out.data[i * n + j] = reduce_mod(a(i, j), p);
  auto& d = out.data;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t piv = r;
    while (piv < m && d[piv * n + c] == 0) ++piv;
    if (piv == m) continue;
    if (piv != r)
      for (std::size_t j = 0; j < n; ++j) std::swap(d[piv * n + j], d[r * n + j]);
    std::uint64_t* pr = d.data() + r * n;
    const std::uint64_t inv = inv_mod(pr[c], p);
    for (std::size_t j = c; j < n; ++j) pr[j] = pr[j] * inv % p;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r) continue;
      std::uint64_t* pi = d.data() + i * n;
      const std::uint64_t f = pi[c];
      if (f == 0) continue;
      const std::uint64_t neg = p - f;
      for (std::size_t j = c; j < n; ++j)
        if (pr[j]) pi[j] = (pi[j] + neg * pr[j]) % p;
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.data.resize(r * n);
  return out;
}

/// Rank of an integer matrix modulo p.
inline std::size_t rank_mod(const Matrix<Integer>& a, std::uint64_t p) { return rref_mod(a, p).pivots.size(); }

/// Wang's rational reconstruction: a/b ≡ x mod m with |a|, b ≤ sqrt(m/2).
inline std::optional<Rational> reconstruct(const Integer& x, const Integer& m) {
  Integer bound = boost::multiprecision::sqrt(m / 2);
  Integer r0 = m, r1 = x % m;
  if (r1 < 0) r1 += m;
  Integer t0 = 0, t1 = 1;
  while (r1 > bound) {
    Integer q = r0 / r1;
    Integer r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    Integer t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  if (t1 == 0 || boost::multiprecision::abs(t1) > bound) return std::nullopt;
  if (boost::multiprecision::gcd(r1, t1) != 1) return std::nullopt;
  return Rational(r1, t1);
}

struct Nullspace {
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
  /// Basis vectors, each with a 1 in its free column.
  std::vector<std::vector<Rational>> basis;
};

namespace detail {

inline bool lex_less(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// a*v == 0 exactly for integer vectors v, checked modulo enough primes to exceed the bound.
inline bool verify_exact(const Matrix<Integer>& a, const std::vector<std::vector<Integer>>& vs) {
  if (vs.empty()) return true;
  Integer amax = 0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) amax = std::max(amax, boost::multiprecision::abs(a(i, j)));
  Integer bound = 0;
  for (const auto& v : vs) {
    Integer l1 = 0;
    for (const auto& e : v) l1 += boost::multiprecision::abs(e);
    bound = std::max(bound, l1 * amax);
  }
  Integer covered = 1;
  PrimeStream primes(1073741789ull);  // disjoint from the elimination primes
  const std::size_t m = a.rows(), n = a.cols();
  std::vector<std::uint64_t> am(m * n), vm(n);
  while (covered <= 2 * bound) {
    const std::uint64_t q = primes.next();
    covered *= q;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) am[i * n + j] = reduce_mod(a(i, j), q);
    for (const auto& v : vs) {
      for (std::size_t j = 0; j < n; ++j) vm[j] = reduce_mod(v[j], q);
      for (std::size_t i = 0; i < m; ++i) {
        std::uint64_t acc = 0;
        const std::uint64_t* ai = am.data() + i * n;
        for (std::size_t j = 0; j < n; ++j)
          if (vm[j] && ai[j]) acc = (acc + ai[j] * vm[j]) % q;
        if (acc != 0) return false;
      }
    }
  }
  return true;
}

}  // namespace detail

/// Exact nullspace of an integer matrix. Throws if no certificate is found within `max_primes`.
inline Nullspace certified_nullspace(const Matrix<Integer>& a, std::size_t max_primes = 400) {
  const std::size_t n = a.cols();
  PrimeStream primes;
  std::optional<ModRref> best;
  std::vector<std::size_t> free_cols;
  std::vector<Integer> residues;  // pivots.size() x free_cols.size(), CRT-combined
  Integer modulus = 1;
  std::vector<Rational> last;
  for (std::size_t used = 0; used < max_primes; ++used) {
    const std::uint64_t p = primes.next();
    ModRref red = rref_mod(a, p);
    bool restart = false;
    if (!best) {
      restart = true;
    } else if (red.pivots.size() > best->pivots.size() ||
               (red.pivots.size() == best->pivots.size() && detail::lex_less(red.pivots, best->pivots))) {
      restart = true;  // the previous primes were unlucky
    } else if (red.pivots != best->pivots) {
      continue;  // this prime is unlucky
    }
    const std::size_t r = red.pivots.size();
    if (restart) {
      best = red;
      free_cols.clear();
      std::vector<bool> is_pivot(n, false);
      for (auto c : red.pivots) is_pivot[c] = true;
      for (std::size_t c = 0; c < n; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
      residues.assign(r * free_cols.size(), Integer(0));
      modulus = 1;
      last.clear();
      if (free_cols.empty()) return Nullspace{r, red.pivots, {}};
    }
    // combine: x ≡ old mod M, x ≡ -R[i][free] mod p
    const Integer mp = modulus % p;
    const std::uint64_t minv = inv_mod(mp.convert_to<std::uint64_t>(), p);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < free_cols.size(); ++j) {
        const std::uint64_t target = (p - red.at(i, free_cols[j])) % p;
        Integer& x = residues[i * free_cols.size() + j];
        const std::uint64_t cur = reduce_mod(x, p);
        const std::uint64_t delta = (target + p - cur) % p * minv % p;
        x += modulus * delta;
      }
    modulus *= p;
    // try to reconstruct all entries
    std::vector<Rational> rec;
    rec.reserve(residues.size());
    bool ok = true;
    for (const auto& x : residues) {
      auto q = reconstruct(x, modulus);
      if (!q) {
        ok = false;
        break;
      }
      rec.push_back(*q);
    }
    if (!ok) continue;
    if (rec != last) {
      last = std::move(rec);
      continue;  // wait for one stable round before the exact check
    }
    std::vector<std::vector<Rational>> basis;
    std::vector<std::vector<Integer>> scaled;
    for (std::size_t j = 0; j < free_cols.size(); ++j) {
      std::vector<Rational> v(n, Rational(0));
      v[free_cols[j]] = 1;
      for (std::size_t i = 0; i < r; ++i) v[best->pivots[i]] = last[i * free_cols.size() + j];
      Integer l = 1;
      for (const auto& e : v) l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(e));
      std::vector<Integer> w(n);
      for (std::size_t c = 0; c < n; ++c)
        w[c] = boost::multiprecision::numerator(v[c]) * (l / boost::multiprecision::denominator(v[c]));
      scaled.push_back(std::move(w));
      basis.push_back(std::move(v));
    }
    if (detail::verify_exact(a, scaled)) return Nullspace{r, best->pivots, std::move(basis)};
  }
  throw std::runtime_error("multi-modular nullspace did not stabilise");
}

}  // namespace brauer::modular
