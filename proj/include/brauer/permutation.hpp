#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace brauer {

/// Bijection of {1..m}. Products compose right to left: (a*b)(i) = a(b(i)).
class Permutation {
 public:
  Permutation() = default;

  /// images[i-1] = image of i.
  explicit Permutation(std::vector<int> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size() + 1, false);
    for (int v : img_) {
      if (v < 1 || v > static_cast<int>(img_.size()) || seen[v])
        throw std::invalid_argument("images do not form a permutation");
      seen[v] = true;
    }
  }

  static Permutation identity(int m) {
    std::vector<int> v(m);
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
  }

  static Permutation transposition(int m, int i, int j) {
    auto v = identity(m).img_;
    if (i < 1 || j < 1 || i > m || j > m) throw std::out_of_range("transposition index");
    std::swap(v[i - 1], v[j - 1]);
    return Permutation(std::move(v));
  }

  /// Adjacent transposition s_i = (i i+1).
  static Permutation simple(int m, int i) { return transposition(m, i, i + 1); }

  static Permutation from_cycles(int m, const std::vector<std::vector<int>>& cycles) {
    auto v = identity(m).img_;
    for (const auto& c : cycles)
      for (std::size_t t = 0; t < c.size(); ++t) v[c[t] - 1] = c[(t + 1) % c.size()];
    return Permutation(std::move(v));
  }

  /// All of S_m in lexicographic order of image sequences.
  static std::vector<Permutation> all(int m) {
    std::vector<Permutation> out;
    auto v = identity(m).img_;
    do {
      Permutation p;
      p.img_ = v;
      out.push_back(std::move(p));
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
  }

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_.at(i - 1); }
  const std::vector<int>& images() const { return img_; }

  Permutation inverse() const {
    std::vector<int> v(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) v[img_[i] - 1] = static_cast<int>(i) + 1;
    Permutation p;
    p.img_ = std::move(v);
    return p;
  }

  friend Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree()) throw std::invalid_argument("permutation degree mismatch");
    Permutation p;
    p.img_.resize(a.img_.size());
    for (std::size_t i = 0; i < a.img_.size(); ++i) p.img_[i] = a.img_[b.img_[i] - 1];
    return p;
  }

  int sign() const {
    int s = 1;
    std::vector<bool> seen(img_.size(), false);
    for (std::size_t i = 0; i < img_.size(); ++i) {
      if (seen[i]) continue;
      std::size_t len = 0;
      for (std::size_t j = i; !seen[j]; j = img_[j] - 1) {
        seen[j] = true;
        ++len;
      }
      if (len % 2 == 0) s = -s;
    }
    return s;
  }

  /// Cycle lengths in weakly decreasing order.
  std::vector<int> cycle_type() const {
    std::vector<int> lens;
    std::vector<bool> seen(img_.size(), false);
    for (std::size_t i = 0; i < img_.size(); ++i) {
      if (seen[i]) continue;
      int len = 0;
      for (std::size_t j = i; !seen[j]; j = img_[j] - 1) {
        seen[j] = true;
        ++len;
      }
      lens.push_back(len);
    }
    std::sort(lens.rbegin(), lens.rend());
    return lens;
  }

  bool is_identity() const {
    for (std::size_t i = 0; i < img_.size(); ++i)
      if (img_[i] != static_cast<int>(i) + 1) return false;
    return true;
  }

  /// Word in adjacent transpositions: *this = s_{w[0]} * s_{w[1]} * ...
  std::vector<int> reduced_word() const {
    // bubble sort the image sequence; each swap at (i,i+1) peels s_i off the right
    std::vector<int> v = img_, word;
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i + 1 < v.size(); ++i)
        if (v[i] > v[i + 1]) {
          std::swap(v[i], v[i + 1]);
          word.push_back(static_cast<int>(i) + 1);
          changed = true;
        }
    }
    std::reverse(word.begin(), word.end());
    return word;
  }

  std::string to_string() const {
    if (is_identity()) return "()";
    std::ostringstream os;
    std::vector<bool> seen(img_.size(), false);
    for (std::size_t i = 0; i < img_.size(); ++i) {
      if (seen[i] || img_[i] == static_cast<int>(i) + 1) continue;
      os << '(';
      bool first = true;
      for (std::size_t j = i; !seen[j]; j = img_[j] - 1) {
        seen[j] = true;
        if (!first) os << ' ';
        os << j + 1;
        first = false;
      }
      os << ')';
    }
    return os.str();
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> img_;
};

/// Position of p in Permutation::all(p.degree()) (Lehmer code).
inline std::size_t lex_rank(const Permutation& p) {
  const int m = p.degree();
  std::size_t r = 0;
  std::vector<bool> used(m + 1, false);
  for (int i = 1; i <= m; ++i) {
    int smaller = 0;
    for (int v = 1; v < p(i); ++v)
      if (!used[v]) ++smaller;
    used[p(i)] = true;
    std::size_t fact = 1;
    for (int t = 2; t <= m - i; ++t) fact *= t;
    r += smaller * fact;
  }
  return r;
}

}  // namespace brauer
