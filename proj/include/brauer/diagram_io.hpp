#pragma once

// Text encoding "f=4;12|34/13|24[;21]" and ASCII pictures of diagrams.
// Top arcs, then bottom arcs (bottom positions 1..f), then the images of the vertical permutation
// sigma_part(d) when it is not the identity. One digit per vertex, so f <= 9.

#include "brauer/diagram.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace brauer {

class parse_error : public std::invalid_argument {
 public:
  parse_error(std::size_t offset, const std::string& what)
      : std::invalid_argument("parse error at offset " + std::to_string(offset) + ": " + what), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

inline constexpr int kMaxTextF = 9;

inline std::string format_diagram(const Diagram& d) {
  if (d.f() > kMaxTextF) throw std::invalid_argument("text encoding supports f <= 9");
  const auto as = arc_structure(d);
  auto arcs = [](const Junction& j) {
    std::string s;
    for (std::size_t i = 0; i < j.arcs().size(); ++i) {
      if (i) s += '|';
      s += std::to_string(j.arcs()[i].first) + std::to_string(j.arcs()[i].second);
    }
    return s;
  };
  std::string out = "f=" + std::to_string(d.f()) + ";" + arcs(as.top) + "/" + arcs(as.bottom);
  const auto sigma = sigma_part(d);
  if (!sigma.is_identity()) {
    out += ';';
    for (int v : sigma.images()) out += std::to_string(v);
  }
  return out;
}

namespace detail {

class DiagramParser {
 public:
  explicit DiagramParser(const std::string& s) : s_(s) {}

  Diagram run() {
    expect('f');
    expect('=');
    f_ = digit();
    if (f_ < 1 || f_ > kMaxTextF) fail(pos_ - 1, "f must be 1..9");
    expect(';');
    auto top = arcs('/');
    expect('/');
    auto bottom = arcs(';');
    if (top.size() != bottom.size()) fail(pos_, "top and bottom arc counts differ");
    const int m = f_ - 2 * static_cast<int>(top.size());
    std::vector<int> images;
    if (pos_ < s_.size()) {
      expect(';');
      const std::size_t start = pos_;
      std::vector<bool> seen(m + 1, false);
      while (pos_ < s_.size()) {
        const std::size_t at = pos_;
        int v = digit();
        if (v < 1 || v > m || seen[v]) fail(at, "bad permutation image");
        seen[v] = true;
        images.push_back(v);
      }
      if (static_cast<int>(images.size()) != m) fail(start, "permutation needs " + std::to_string(m) + " images");
    } else {
      for (int i = 1; i <= m; ++i) images.push_back(i);
    }
    return reconstruct(Permutation(images), ArcStructure{Junction(f_, top), Junction(f_, bottom)});
  }

 private:
  [[noreturn]] void fail(std::size_t at, const std::string& what) const { throw parse_error(at, what); }

  void expect(char c) {
    if (pos_ >= s_.size() || s_[pos_] != c) fail(pos_, std::string("expected '") + c + "'");
    ++pos_;
  }

  int digit() {
    if (pos_ >= s_.size() || s_[pos_] < '0' || s_[pos_] > '9') fail(pos_, "expected a digit");
    return s_[pos_++] - '0';
  }

  std::vector<Pair> arcs(char stop) {
    std::vector<Pair> out;
    std::vector<bool> used(f_ + 1, false);
    if (pos_ < s_.size() && s_[pos_] == stop) return out;
    if (pos_ >= s_.size()) return out;
    while (true) {
      const std::size_t at = pos_;
      int a = digit(), b = digit();
      if (a < 1 || b < 1 || a > f_ || b > f_ || a == b) fail(at, "arc endpoints must be distinct and in 1..f");
      if (used[a] || used[b]) fail(at, "vertex used twice");
      used[a] = used[b] = true;
      out.emplace_back(std::min(a, b), std::max(a, b));
      if (pos_ < s_.size() && s_[pos_] == '|') {
        ++pos_;
        continue;
      }
      break;
    }
    if (2 * static_cast<int>(out.size()) > f_) fail(pos_, "too many arcs");
    return out;
  }

  const std::string& s_;
  std::size_t pos_ = 0;
  int f_ = 0;
};

/// Bracket layers for a set of arcs: layer 0 sits next to the vertex row.
inline std::vector<int> arc_layers(const std::vector<Pair>& arcs) {
  std::vector<std::size_t> order(arcs.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return arcs[a].second - arcs[a].first < arcs[b].second - arcs[b].first;
  });
  std::vector<int> layer(arcs.size(), 0);
  std::vector<bool> placed(arcs.size(), false);
  std::vector<std::vector<Pair>> used;
  for (std::size_t idx : order) {
    const auto [i, j] = arcs[idx];
    int l = 0;
    // an arc must clear every arc nested inside it
    for (std::size_t o = 0; o < arcs.size(); ++o)
      if (placed[o] && layer[o] >= l && arcs[o].first > i && arcs[o].second < j) l = layer[o] + 1;
    while (true) {
      if (static_cast<int>(used.size()) <= l) used.resize(l + 1);
      bool clash = false;
      for (auto [a, b] : used[l])
        if (!(b < i || j < a)) clash = true;
      if (!clash) break;
      ++l;
    }
    used[l].emplace_back(i, j);
    layer[idx] = l;
    placed[idx] = true;
  }
  return layer;
}

inline std::vector<std::string> bracket_rows(int f, const std::vector<Pair>& arcs, bool above) {
  const auto layer = arc_layers(arcs);
  int depth = 0;
  for (int l : layer) depth = std::max(depth, l + 1);
  const std::size_t width = static_cast<std::size_t>(2 * f - 1);
  std::vector<std::string> rows(depth, std::string(width, ' '));
  // rows[0] is adjacent to the vertices
  for (std::size_t a = 0; a < arcs.size(); ++a) {
    const std::size_t ci = 2 * (arcs[a].first - 1), cj = 2 * (arcs[a].second - 1);
    for (int r = 0; r < layer[a]; ++r) {
      rows[r][ci] = rows[r][ci] == '-' ? '+' : '|';
      rows[r][cj] = rows[r][cj] == '-' ? '+' : '|';
    }
  }
  for (std::size_t a = 0; a < arcs.size(); ++a) {
    const std::size_t ci = 2 * (arcs[a].first - 1), cj = 2 * (arcs[a].second - 1);
    auto& row = rows[layer[a]];
    row[ci] = above ? ',' : '`';
    row[cj] = above ? '.' : '\'';
    for (std::size_t c = ci + 1; c < cj; ++c) row[c] = row[c] == '|' ? '+' : '-';
  }
  if (above) std::reverse(rows.begin(), rows.end());
  return rows;
}

}  // namespace detail

/// Parse the text encoding; parse_error carries the offending offset.
inline Diagram parse_diagram(const std::string& text) { return detail::DiagramParser(text).run(); }

/// Two rows of vertex digits. Arcs are bracket paths above the top row and below the bottom row;
/// a straight vertical strand i+ to i- is a column of '|', other verticals share a letter at both ends.
inline std::string render_diagram(const Diagram& d) {
  const int f = d.f();
  const auto as = arc_structure(d);
  std::vector<Pair> bottom_arcs = as.bottom.arcs();
  std::vector<std::string> lines = detail::bracket_rows(f, as.top.arcs(), true);
  const std::size_t width = static_cast<std::size_t>(2 * f - 1);
  std::string top(width, ' '), bottom(width, ' '), upper(width, ' '), lower(width, ' ');
  for (int i = 1; i <= f; ++i) {
    top[2 * (i - 1)] = static_cast<char>('0' + i % 10);
    bottom[2 * (i - 1)] = static_cast<char>('0' + i % 10);
  }
  char letter = 'a';
  for (int i = 1; i <= f; ++i) {
    const int p = d.partner(i);
    if (p <= f) continue;
    const int j = p - f;
    if (i == j) {
      upper[2 * (i - 1)] = '|';
      lower[2 * (j - 1)] = '|';
    } else {
      upper[2 * (i - 1)] = letter;
      lower[2 * (j - 1)] = letter;
      letter = letter == 'z' ? 'a' : static_cast<char>(letter + 1);
    }
  }
  lines.push_back(top);
  lines.push_back(upper);
  lines.push_back(lower);
  lines.push_back(bottom);
  for (auto& r : detail::bracket_rows(f, bottom_arcs, false)) lines.push_back(r);
  std::string out;
  for (auto& l : lines) {
    auto end = l.find_last_not_of(' ');
    out += (end == std::string::npos ? std::string() : l.substr(0, end + 1)) + '\n';
  }
  return out;
}

}  // namespace brauer
