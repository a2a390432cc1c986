#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cctype>
#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace brauer {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

/// Thrown when an operation needs a coefficient field it cannot work over.
class unsupported_field : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline bool is_zero(const Rational& v) { return v.is_zero(); }
inline bool is_zero(const Integer& v) { return v.is_zero(); }
inline bool is_zero(long long v) { return v == 0; }

inline std::string to_string(const Rational& v) { return v.str(); }

/// Parse "a", "-a" or "a/b".
inline Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty scalar");
  for (char c : text)
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '/' || c == '+'))
      throw std::invalid_argument("bad scalar '" + text + "'");
  Rational r;
  try {
    r = Rational(text);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad scalar '" + text + "'");
  }
  return r;
}

/// Element of Z/pZ; carries its modulus so that generic code can stay field-agnostic.
class Fp {
 public:
  Fp() = default;
  Fp(std::uint64_t v, std::uint64_t p) : v_(v % p), p_(p) {}

  std::uint64_t value() const { return v_; }
  std::uint64_t modulus() const { return p_; }

  friend Fp operator+(Fp a, Fp b) {
    check(a, b);
    std::uint64_t s = a.v_ + b.v_;
    if (s >= a.p_) s -= a.p_;
    return Fp(s, a.p_);
  }
  friend Fp operator-(Fp a, Fp b) {
    check(a, b);
    return Fp(a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + a.p_ - b.v_, a.p_);
  }
  friend Fp operator*(Fp a, Fp b) {
    check(a, b);
    return Fp(static_cast<std::uint64_t>(static_cast<unsigned __int128>(a.v_) * b.v_ % a.p_), a.p_);
  }
  friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }
  Fp operator-() const { return Fp(v_ == 0 ? 0 : p_ - v_, p_); }
  Fp& operator+=(Fp o) { return *this = *this + o; }
  Fp& operator-=(Fp o) { return *this = *this - o; }
  Fp& operator*=(Fp o) { return *this = *this * o; }
  Fp& operator/=(Fp o) { return *this = *this / o; }
  friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_ && a.p_ == b.p_; }

  Fp inverse() const {
    if (v_ == 0) throw std::domain_error("division by zero in F_p");
    return pow(p_ - 2);
  }
  Fp pow(std::uint64_t e) const {
    Fp r(1, p_), b = *this;
    while (e) {
      if (e & 1) r *= b;
      b *= b;
      e >>= 1;
    }
    return r;
  }

 private:
  static void check(const Fp& a, const Fp& b) {
    if (a.p_ != b.p_) throw std::logic_error("mixed moduli");
  }
  std::uint64_t v_ = 0;
  std::uint64_t p_ = 2;
};

inline bool is_zero(const Fp& v) { return v.value() == 0; }
inline std::string to_string(const Fp& v) { return std::to_string(v.value()); }

/// The rationals.
struct RationalField {
  using value_type = Rational;
  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(long long v) const { return v; }
  value_type from_rational(const Rational& v) const { return v; }
  std::uint64_t characteristic() const { return 0; }
  std::string name() const { return "Q"; }
  bool operator==(const RationalField&) const = default;
};

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % d == 0) return n == d;
  }
  auto mulmod = [](std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
  };
  auto powmod = [&](std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1;
    while (e) {
      if (e & 1) r = mulmod(r, b, m);
      b = mulmod(b, b, m);
      e >>= 1;
    }
    return r;
  };
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // deterministic witness set for 64-bit inputs
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

/// Z/pZ for a prime p.
struct PrimeField {
  using value_type = Fp;
  std::uint64_t p;

  explicit PrimeField(std::uint64_t prime) : p(prime) {
    if (!is_prime(prime)) throw std::invalid_argument("modulus " + std::to_string(prime) + " is not prime");
  }
  value_type zero() const { return Fp(0, p); }
  value_type one() const { return Fp(1, p); }
  value_type from_int(long long v) const {
    long long r = v % static_cast<long long>(p);
    if (r < 0) r += static_cast<long long>(p);
    return Fp(static_cast<std::uint64_t>(r), p);
  }
  value_type from_rational(const Rational& v) const {
    Integer pp = p;
    Integer n = boost::multiprecision::numerator(v) % pp;
    Integer d = boost::multiprecision::denominator(v) % pp;
    if (n < 0) n += pp;
    if (d == 0) throw std::domain_error("denominator vanishes mod p");
    return Fp(n.convert_to<std::uint64_t>(), p) / Fp(d.convert_to<std::uint64_t>(), p);
  }
  std::uint64_t characteristic() const { return p; }
  std::string name() const { return "F_" + std::to_string(p); }
  bool operator==(const PrimeField&) const = default;
};

template <class F>
concept Field = requires(const F& k, const typename F::value_type& a, long long n) {
  { k.zero() } -> std::convertible_to<typename F::value_type>;
  { k.one() } -> std::convertible_to<typename F::value_type>;
  { k.from_int(n) } -> std::convertible_to<typename F::value_type>;
  { k.characteristic() } -> std::convertible_to<std::uint64_t>;
  { a + a } -> std::convertible_to<typename F::value_type>;
  { a - a } -> std::convertible_to<typename F::value_type>;
  { a * a } -> std::convertible_to<typename F::value_type>;
  { a / a } -> std::convertible_to<typename F::value_type>;
  { a == a } -> std::convertible_to<bool>;
  { is_zero(a) } -> std::convertible_to<bool>;
};

/// Integer power with exponent >= 0.
template <class V>
V power(const V& base, int e, const V& one) {
  V r = one;
  for (int i = 0; i < e; ++i) r = r * base;
  return r;
}

}  // namespace brauer
