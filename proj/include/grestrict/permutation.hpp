#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace grestrict {

/// Points are stored 0-based. Text formats and reports use 1-based points.
using Point = std::uint32_t;

/// A bijection of {0..degree-1}. Acts on the right: the product `a * b` is
/// "a then b", so `(a * b)(p) == b(a(p))`.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::size_t degree);
  /// Throws InputError unless `images` is a bijection.
  explicit Permutation(std::vector<Point> images);

  /// Builds from disjoint or overlapping cycles (0-based), composed left to
  /// right.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(Point p) const noexcept { return images_[p]; }
  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  bool fixes(Point p) const noexcept { return images_[p] == p; }
  /// Smallest moved point, or degree() for the identity.
  Point first_moved_point() const noexcept;

  Permutation inverse() const;
  /// s^-1 * this * s.
  Permutation conjugate_by(const Permutation& s) const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);

  bool operator==(const Permutation&) const = default;
  std::strong_ordering operator<=>(const Permutation& other) const {
    return images_ <=> other.images_;
  }

  /// 1-based cycle notation, "()" for the identity.
  std::string to_cycle_string() const;
  /// 1-based image list "2 1 3".
  std::string to_image_string() const;

  std::size_t hash() const noexcept;

 private:
  std::vector<Point> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    return p.hash();
  }
};

/// Parses one generator in either cycle notation "(1 2)(4 5)" or as a
/// 1-based image list "2 1 3". `column_offset` shifts reported columns.
Permutation parse_permutation(std::string_view text, std::size_t degree,
                              std::size_t line = 1,
                              std::size_t column_offset = 0);

}  // namespace grestrict
