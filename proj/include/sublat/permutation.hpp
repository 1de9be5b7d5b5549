#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace sublat {

using Point = std::uint16_t;

/// A bijection on {0, ..., degree-1}.
///
/// Products are read left to right: `p * q` applies p first, then q, so
/// `(p * q)[x] == q[p[x]]`. Conjugation follows the same convention,
/// `h^g = g^-1 * h * g`.
class Permutation {
 public:
  /// Identity of the given degree.
  explicit Permutation(std::size_t degree = 1);

  /// Validates that `images` is a bijection.
  explicit Permutation(std::vector<Point> images);

  /// Builds a permutation from disjoint cycles on 0-based points.
  static Permutation from_cycles(std::size_t degree,
                                 std::initializer_list<std::initializer_list<Point>> cycles);
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](std::size_t x) const noexcept { return images_[x]; }
  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const noexcept;

  /// Order of the element (lcm of cycle lengths).
  std::uint64_t order() const;

  /// Smallest point moved, or degree() if none.
  std::size_t first_moved_point() const noexcept;

  /// Cycle notation; `base` is added to every point (1 for GAP-style output).
  std::string to_cycle_string(unsigned base = 0) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<Point> images_;
};

/// p then q. Throws DegreeMismatch.
Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);
Permutation power(const Permutation& p, std::int64_t k);

/// g^-1 * h * g.
Permutation conjugate(const Permutation& h, const Permutation& g);

/// h^-1 * g^-1 * h * g.
Permutation commutator(const Permutation& h, const Permutation& g);

inline Permutation operator*(const Permutation& p, const Permutation& q) { return compose(p, q); }

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace sublat

template <>
struct std::hash<sublat::Permutation> : sublat::PermutationHash {};
