#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sublat/perm_group.hpp"

namespace sublat {

/// Element of the prime field F_p.
class FpScalar {
 public:
  FpScalar(std::int64_t value, std::uint32_t modulus);

  std::uint32_t value() const noexcept { return value_; }
  std::uint32_t modulus() const noexcept { return modulus_; }

  FpScalar operator+(FpScalar o) const;
  FpScalar operator-(FpScalar o) const;
  FpScalar operator*(FpScalar o) const;
  FpScalar operator-() const;
  /// Throws ConstraintViolation for zero.
  FpScalar inverse() const;

  friend bool operator==(FpScalar, FpScalar) = default;

 private:
  std::uint32_t value_;
  std::uint32_t modulus_;
};

/// 2x2 matrix [[a, b], [c, d]] over F_p acting on row vectors.
struct Mat2 {
  FpScalar a, b, c, d;

  FpScalar det() const { return a * d - b * c; }
  Mat2 operator*(const Mat2& o) const;
  friend bool operator==(const Mat2&, const Mat2&) = default;
};

bool is_prime(std::uint64_t n);

PermGroup cyclic(std::int64_t n);
PermGroup symmetric(std::int64_t n);
PermGroup alternating(std::int64_t n);
PermGroup klein4();

/// Order 2n: rotation r = (0 1 ... n-1) and reflection x -> -x mod n.
PermGroup dihedral(std::int64_t n);

/// Checks the (n,m)-group parameters; throws ConstraintViolation naming the
/// first violated condition.
void validate_nm_parameters(std::int64_t n, std::int64_t m, std::int64_t t);

/// <s, r | s^n = r^m = 1, s^-1 r s = r^t> on m + n points: r cycles the
/// first m points, s multiplies them by t and cycles the last n points.
PermGroup nm_group(std::int64_t n, std::int64_t m, std::int64_t t);

/// Largest prime accepted by sl2/psl2.
inline constexpr std::int64_t kMaxFieldPrime = 13;

/// Generators [[1,1],[0,1]] and [[0,1],[-1,0]] of SL(2, p).
std::vector<Mat2> sl2_generator_matrices(std::int64_t p);

/// SL(2, p) acting on the p^2 - 1 nonzero row vectors of F_p^2.
PermGroup sl2(std::int64_t p);
/// PSL(2, p) acting on the p + 1 points of the projective line.
PermGroup psl2(std::int64_t p);

/// Index of the nonzero vector (x, y) in the sl2 action.
std::size_t sl2_point(std::uint32_t x, std::uint32_t y, std::uint32_t p);
Permutation sl2_permutation(const Mat2& m);
Permutation psl2_permutation(const Mat2& m);

/// Parsed group descriptor: C(n) D(n) S(n) A(n) K4 NM(n,m,t) SL(2,p) PSL(2,p) DP(spec,spec).
struct GroupSpec {
  enum class Kind { C, D, S, A, K4, NM, SL2, PSL2, DP };

  Kind kind = Kind::C;
  std::vector<std::int64_t> parameters;
  std::vector<GroupSpec> operands;  // two entries for DP

  /// Canonical text form, e.g. "NM(4,5,2)" or "DP(C(2),S(3))".
  std::string to_string() const;

  /// Checks the per-kind parameter constraints; throws ConstraintViolation.
  void validate() const;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

PermGroup build(const GroupSpec& spec);

/// Closed-form order of the group a spec describes.
std::uint64_t expected_order(const GroupSpec& spec);

}  // namespace sublat
