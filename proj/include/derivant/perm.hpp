#pragma once

#include <algorithm>
#include <cstdint>
#include <cctype>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "derivant/error.hpp"

namespace derivant {

/// Points are 0-based internally; all textual I/O is 1-based.
using Point = std::uint16_t;

/// Degrees are capped so that image entries fit in 16 bits (cache density).
inline constexpr std::size_t max_degree = 65535;

/// A permutation of {0, ..., n-1}, stored as its image sequence.
///
/// Actions are written on the right: the image of i under p is p[i], and
/// compose(p, q) applies p first, then q.
class Perm {
public:
  Perm() = default;

  /// Identity permutation of the given degree.
  explicit Perm(std::size_t degree) : img_(degree) {
    check_degree(degree);
    std::iota(img_.begin(), img_.end(), Point{0});
  }

  /// From an explicit image sequence; validates bijectivity.
  explicit Perm(std::vector<Point> images) : img_(std::move(images)) {
    check_degree(img_.size());
    std::vector<bool> seen(img_.size(), false);
    for (Point x : img_) {
      if (x >= img_.size() || seen[x])
        throw group_error("image sequence is not a bijection");
      seen[x] = true;
    }
  }

  std::size_t degree() const { return img_.size(); }

  Point operator[](Point i) const { return img_[i]; }

  bool is_identity() const {
    for (std::size_t i = 0; i < img_.size(); ++i)
      if (img_[i] != i)
        return false;
    return true;
  }

  /// Smallest point moved, or degree() if the identity.
  std::size_t min_moved() const {
    for (std::size_t i = 0; i < img_.size(); ++i)
      if (img_[i] != i)
        return i;
    return img_.size();
  }

  Perm inverse() const {
    Perm r;
    r.img_.resize(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i)
      r.img_[img_[i]] = static_cast<Point>(i);
    return r;
  }

  /// Multiplicative order (lcm of cycle lengths).
  std::uint64_t order() const {
    std::vector<bool> seen(img_.size(), false);
    std::uint64_t ord = 1;
    for (std::size_t i = 0; i < img_.size(); ++i) {
      if (seen[i])
        continue;
      std::uint64_t len = 0;
      for (std::size_t j = i; !seen[j]; j = img_[j]) {
        seen[j] = true;
        ++len;
      }
      ord = std::lcm(ord, len);
    }
    return ord;
  }

  friend bool operator==(const Perm &a, const Perm &b) { return a.img_ == b.img_; }
  friend bool operator!=(const Perm &a, const Perm &b) { return a.img_ != b.img_; }
  /// Lexicographic order on image sequences (the canonical order used for
  /// deterministic tie-breaking throughout).
  friend bool operator<(const Perm &a, const Perm &b) { return a.img_ < b.img_; }

  const std::vector<Point> &images() const { return img_; }

private:
  static void check_degree(std::size_t n) {
    if (n == 0)
      throw group_error("degree must be positive");
    if (n > max_degree)
      throw group_error("degree exceeds cap of 65535");
  }

  std::vector<Point> img_;
};

/// p then q:  (i)^(pq) = ((i)^p)^q.
inline Perm compose(const Perm &p, const Perm &q) {
  if (p.degree() != q.degree())
    throw group_error("degree mismatch in composition");
  std::vector<Point> img(p.degree());
  for (std::size_t i = 0; i < p.degree(); ++i)
    img[i] = q[p[i]];
  return Perm(std::move(img));
}

inline Perm operator*(const Perm &p, const Perm &q) { return compose(p, q); }

inline Perm inverse(const Perm &p) { return p.inverse(); }

/// x^y = y^-1 x y.
inline Perm conjugate(const Perm &x, const Perm &y) {
  return compose(compose(y.inverse(), x), y);
}

/// [x, y] = x^-1 y^-1 x y.
inline Perm commutator(const Perm &x, const Perm &y) {
  if (x.degree() != y.degree())
    throw group_error("degree mismatch in commutator");
  return compose(compose(compose(x.inverse(), y.inverse()), x), y);
}

struct PermHash {
  std::size_t operator()(const Perm &p) const {
    // FNV-1a over the image bytes.
    std::uint64_t h = 1469598103934665603ull;
    for (Point x : p.images()) {
      h ^= static_cast<std::uint64_t>(x & 0xff);
      h *= 1099511628211ull;
      h ^= static_cast<std::uint64_t>(x >> 8);
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

/// Parse disjoint-cycle notation, e.g. "(1 2 3)(4 6)"; "()" is the identity.
/// Points are 1-based in the text.  Rejects repeated points and points
/// outside 1..degree.
inline Perm parse_cycles(const std::string &text, std::size_t degree,
                         std::size_t line_for_errors = 1) {
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  std::vector<bool> used(degree, false);

  std::size_t i = 0;
  auto fail = [&](const std::string &msg, std::size_t col) -> void {
    throw parse_error(msg, line_for_errors, col + 1);
  };

  auto skip_ws = [&]() {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };

  skip_ws();
  if (i == text.size())
    fail("expected cycle notation", i);

  while (i < text.size()) {
    skip_ws();
    if (i == text.size())
      break;
    if (text[i] != '(')
      fail("expected '('", i);
    ++i;
    std::vector<Point> cycle;
    for (;;) {
      skip_ws();
      if (i == text.size())
        fail("unterminated cycle", i);
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        fail("expected point or ')'", i);
      std::size_t start = i;
      unsigned long v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + static_cast<unsigned long>(text[i] - '0');
        if (v > max_degree)
          fail("point out of range", start);
        ++i;
      }
      if (v == 0)
        fail("points are 1-based", start);
      if (v > degree)
        fail("point exceeds degree " + std::to_string(degree), start);
      Point pt = static_cast<Point>(v - 1);
      if (used[pt])
        fail("repeated point " + std::to_string(v), start);
      used[pt] = true;
      cycle.push_back(pt);
      if (i < text.size() && text[i] == ',')
        ++i; // tolerate comma separators
    }
    for (std::size_t k = 0; k + 1 < cycle.size(); ++k)
      img[cycle[k]] = cycle[k + 1];
    if (cycle.size() > 1)
      img[cycle.back()] = cycle.front();
  }
  return Perm(std::move(img));
}

/// Canonical disjoint-cycle form: cycles sorted by smallest element, each
/// cycle starting at its smallest element, fixed points omitted.  The
/// identity formats as "()".
inline std::string format_cycles(const Perm &p) {
  std::string out;
  std::vector<bool> seen(p.degree(), false);
  for (std::size_t i = 0; i < p.degree(); ++i) {
    if (seen[i] || p[static_cast<Point>(i)] == i)
      continue;
    out += '(';
    std::size_t j = i;
    bool first = true;
    do {
      if (!first)
        out += ' ';
      out += std::to_string(j + 1);
      seen[j] = true;
      first = false;
      j = p[static_cast<Point>(j)];
    } while (j != i);
    out += ')';
  }
  if (out.empty())
    out = "()";
  return out;
}

} // namespace derivant
