#include "sublat/constructors.hpp"

#include <numeric>
#include <string>

#include "sublat/errors.hpp"

namespace sublat {

namespace {

std::uint32_t reduce(std::int64_t v, std::uint32_t p) {
  std::int64_t r = v % static_cast<std::int64_t>(p);
  return static_cast<std::uint32_t>(r < 0 ? r + p : r);
}

void require_at_least(std::int64_t n, std::int64_t lo, const char* what) {
  if (n < lo)
    throw ConstraintViolation(std::string(what) + ": parameter must be >= " + std::to_string(lo) +
                              ", got " + std::to_string(n));
}

void require_degree_fits(std::int64_t n, const char* what) {
  if (n > 0xFFFF) throw ConstraintViolation(std::string(what) + ": degree too large");
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  base %= m;
  while (e) {
    if (e & 1) r = r * base % m;
    base = base * base % m;
    e >>= 1;
  }
  return r;
}

void require_field_prime(std::int64_t p, const char* what) {
  if (p < 2 || !is_prime(static_cast<std::uint64_t>(p)))
    throw ConstraintViolation(std::string(what) + ": p = " + std::to_string(p) + " is not prime");
  if (p > kMaxFieldPrime)
    throw ConstraintViolation(std::string(what) + ": p = " + std::to_string(p) +
                              " is above the supported cap " + std::to_string(kMaxFieldPrime));
}

Permutation cycle_on(std::size_t degree, std::size_t first, std::size_t length) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  for (std::size_t i = 0; i < length; ++i)
    images[first + i] = static_cast<Point>(first + (i + 1) % length);
  return Permutation(std::move(images));
}

}  // namespace

// ---------------------------------------------------------------------------
// Field arithmetic

FpScalar::FpScalar(std::int64_t value, std::uint32_t modulus) : modulus_(modulus) {
  if (modulus < 2) throw ConstraintViolation("FpScalar: modulus must be >= 2");
  value_ = reduce(value, modulus);
}

FpScalar FpScalar::operator+(FpScalar o) const {
  return FpScalar(std::int64_t{value_} + o.value_, modulus_);
}
FpScalar FpScalar::operator-(FpScalar o) const {
  return FpScalar(std::int64_t{value_} - o.value_, modulus_);
}
FpScalar FpScalar::operator*(FpScalar o) const {
  return FpScalar(static_cast<std::int64_t>(std::uint64_t{value_} * o.value_ % modulus_), modulus_);
}
FpScalar FpScalar::operator-() const { return FpScalar(-std::int64_t{value_}, modulus_); }

FpScalar FpScalar::inverse() const {
  if (value_ == 0) throw ConstraintViolation("FpScalar: zero has no inverse");
  return FpScalar(static_cast<std::int64_t>(pow_mod(value_, modulus_ - 2, modulus_)), modulus_);
}

Mat2 Mat2::operator*(const Mat2& o) const {
  return Mat2{a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Named families

PermGroup cyclic(std::int64_t n) {
  require_at_least(n, 1, "cyclic");
  require_degree_fits(n, "cyclic");
  if (n == 1) return PermGroup(1);
  return PermGroup(n, {cycle_on(n, 0, n)});
}

PermGroup symmetric(std::int64_t n) {
  require_at_least(n, 1, "symmetric");
  require_degree_fits(n, "symmetric");
  if (n == 1) return PermGroup(1);
  return PermGroup(n, {cycle_on(n, 0, n), cycle_on(n, 0, 2)});
}

PermGroup alternating(std::int64_t n) {
  require_at_least(n, 1, "alternating");
  require_degree_fits(n, "alternating");
  std::vector<Permutation> gens;
  for (std::int64_t k = 2; k < n; ++k)
    gens.push_back(Permutation::from_cycles(n, {{{0, 1, static_cast<Point>(k)}}}));
  return PermGroup(n, std::move(gens));
}

PermGroup klein4() {
  return PermGroup(4, {Permutation::from_cycles(4, {{0, 1}, {2, 3}}),
                       Permutation::from_cycles(4, {{0, 2}, {1, 3}})});
}

PermGroup dihedral(std::int64_t n) {
  require_at_least(n, 3, "dihedral");
  require_degree_fits(n, "dihedral");
  std::vector<Point> reflection(n);
  for (std::int64_t x = 0; x < n; ++x) reflection[x] = static_cast<Point>((n - x) % n);
  return PermGroup(n, {cycle_on(n, 0, n), Permutation(std::move(reflection))});
}

void validate_nm_parameters(std::int64_t n, std::int64_t m, std::int64_t t) {
  if (n < 2) throw ConstraintViolation("NM: n >= 2 violated (n = " + std::to_string(n) + ")");
  if (m < 3) throw ConstraintViolation("NM: m >= 3 violated (m = " + std::to_string(m) + ")");
  if (t <= 1 || t >= m)
    throw ConstraintViolation("NM: 1 < t < m violated (t = " + std::to_string(t) + ")");
  if (std::gcd(t, m) != 1)
    throw ConstraintViolation("NM: gcd(t, m) = 1 violated (gcd = " + std::to_string(std::gcd(t, m)) +
                              ")");
  std::uint64_t r = pow_mod(static_cast<std::uint64_t>(t), static_cast<std::uint64_t>(n),
                            static_cast<std::uint64_t>(m));
  if (r != 1)
    throw ConstraintViolation("NM: t^n = 1 (mod m) violated (" + std::to_string(t) + "^" +
                              std::to_string(n) + " = " + std::to_string(r) + " mod " +
                              std::to_string(m) + ")");
  if (n + m > 0xFFFF) throw ConstraintViolation("NM: degree too large");
}

PermGroup nm_group(std::int64_t n, std::int64_t m, std::int64_t t) {
  validate_nm_parameters(n, m, t);
  const std::size_t degree = static_cast<std::size_t>(m + n);
  Permutation r = cycle_on(degree, 0, m);
  std::vector<Point> s(degree);
  for (std::int64_t x = 0; x < m; ++x) s[x] = static_cast<Point>(x * t % m);
  for (std::int64_t y = 0; y < n; ++y) s[m + y] = static_cast<Point>(m + (y + 1) % n);
  return PermGroup(degree, {std::move(r), Permutation(std::move(s))});
}

// ---------------------------------------------------------------------------
// Linear groups over prime fields

std::vector<Mat2> sl2_generator_matrices(std::int64_t p) {
  require_field_prime(p, "SL(2,p)");
  auto P = static_cast<std::uint32_t>(p);
  auto f = [P](std::int64_t v) { return FpScalar(v, P); };
  return {Mat2{f(1), f(1), f(0), f(1)}, Mat2{f(0), f(1), f(-1), f(0)}};
}

std::size_t sl2_point(std::uint32_t x, std::uint32_t y, std::uint32_t p) {
  return static_cast<std::size_t>(x) * p + y - 1;
}

Permutation sl2_permutation(const Mat2& m) {
  const std::uint32_t p = m.a.modulus();
  std::vector<Point> images(static_cast<std::size_t>(p) * p - 1);
  for (std::uint32_t x = 0; x < p; ++x)
    for (std::uint32_t y = 0; y < p; ++y) {
      if (x == 0 && y == 0) continue;
      FpScalar vx(x, p), vy(y, p);
      FpScalar nx = vx * m.a + vy * m.c;
      FpScalar ny = vx * m.b + vy * m.d;
      images[sl2_point(x, y, p)] = static_cast<Point>(sl2_point(nx.value(), ny.value(), p));
    }
  return Permutation(std::move(images));
}

Permutation psl2_permutation(const Mat2& m) {
  const std::uint32_t p = m.a.modulus();
  // Point x < p is [x : 1]; point p is [1 : 0].
  auto index_of = [p](FpScalar x, FpScalar y) -> Point {
    if (y.value() == 0) return static_cast<Point>(p);
    return static_cast<Point>((x * y.inverse()).value());
  };
  std::vector<Point> images(p + 1);
  for (std::uint32_t i = 0; i <= p; ++i) {
    FpScalar vx = i < p ? FpScalar(i, p) : FpScalar(1, p);
    FpScalar vy = i < p ? FpScalar(1, p) : FpScalar(0, p);
    images[i] = index_of(vx * m.a + vy * m.c, vx * m.b + vy * m.d);
  }
  return Permutation(std::move(images));
}

PermGroup sl2(std::int64_t p) {
  std::vector<Permutation> gens;
  for (const auto& m : sl2_generator_matrices(p)) gens.push_back(sl2_permutation(m));
  return PermGroup(static_cast<std::size_t>(p * p - 1), std::move(gens));
}

PermGroup psl2(std::int64_t p) {
  std::vector<Permutation> gens;
  for (const auto& m : sl2_generator_matrices(p)) gens.push_back(psl2_permutation(m));
  return PermGroup(static_cast<std::size_t>(p + 1), std::move(gens));
}

// ---------------------------------------------------------------------------
// GroupSpec

std::string GroupSpec::to_string() const {
  auto params = [this] {
    std::string s;
    for (std::size_t i = 0; i < parameters.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(parameters[i]);
    }
    return s;
  };
  switch (kind) {
    case Kind::C: return "C(" + params() + ")";
    case Kind::D: return "D(" + params() + ")";
    case Kind::S: return "S(" + params() + ")";
    case Kind::A: return "A(" + params() + ")";
    case Kind::K4: return "K4";
    case Kind::NM: return "NM(" + params() + ")";
    case Kind::SL2: return "SL(2," + params() + ")";
    case Kind::PSL2: return "PSL(2," + params() + ")";
    case Kind::DP: return "DP(" + operands.at(0).to_string() + "," + operands.at(1).to_string() + ")";
  }
  return "?";
}

void GroupSpec::validate() const {
  auto need = [this](std::size_t count) {
    if (parameters.size() != count)
      throw ConstraintViolation(to_string() + ": expected " + std::to_string(count) +
                                " parameter(s)");
  };
  switch (kind) {
    case Kind::C:
    case Kind::S:
    case Kind::A:
      need(1);
      require_at_least(parameters[0], 1, "C/S/A");
      break;
    case Kind::D:
      need(1);
      require_at_least(parameters[0], 3, "D");
      break;
    case Kind::K4: need(0); break;
    case Kind::NM:
      need(3);
      validate_nm_parameters(parameters[0], parameters[1], parameters[2]);
      break;
    case Kind::SL2:
    case Kind::PSL2:
      need(1);
      if (parameters[0] < 2 || !is_prime(static_cast<std::uint64_t>(parameters[0])))
        throw ConstraintViolation(to_string() + ": p must be prime");
      break;
    case Kind::DP:
      if (operands.size() != 2) throw ConstraintViolation("DP: expected two operands");
      operands[0].validate();
      operands[1].validate();
      break;
  }
}

PermGroup build(const GroupSpec& spec) {
  spec.validate();
  const auto& p = spec.parameters;
  switch (spec.kind) {
    case GroupSpec::Kind::C: return cyclic(p[0]);
    case GroupSpec::Kind::D: return dihedral(p[0]);
    case GroupSpec::Kind::S: return symmetric(p[0]);
    case GroupSpec::Kind::A: return alternating(p[0]);
    case GroupSpec::Kind::K4: return klein4();
    case GroupSpec::Kind::NM: return nm_group(p[0], p[1], p[2]);
    case GroupSpec::Kind::SL2: return sl2(p[0]);
    case GroupSpec::Kind::PSL2: return psl2(p[0]);
    case GroupSpec::Kind::DP: return direct_product(build(spec.operands[0]), build(spec.operands[1]));
  }
  throw ConstraintViolation("unknown group kind");
}

std::uint64_t expected_order(const GroupSpec& spec) {
  spec.validate();
  auto factorial = [](std::uint64_t n) {
    std::uint64_t r = 1;
    for (std::uint64_t k = 2; k <= n; ++k)
      if (__builtin_mul_overflow(r, k, &r)) throw BoundExceeded("order overflows 64 bits");
    return r;
  };
  const auto& p = spec.parameters;
  switch (spec.kind) {
    case GroupSpec::Kind::C: return p[0];
    case GroupSpec::Kind::D: return 2 * p[0];
    case GroupSpec::Kind::S: return factorial(p[0]);
    case GroupSpec::Kind::A: return p[0] <= 2 ? 1 : factorial(p[0]) / 2;
    case GroupSpec::Kind::K4: return 4;
    case GroupSpec::Kind::NM: return p[0] * p[1];
    case GroupSpec::Kind::SL2: return p[0] * (p[0] * p[0] - 1);
    case GroupSpec::Kind::PSL2: return p[0] * (p[0] * p[0] - 1) / std::gcd<std::int64_t>(2, p[0] - 1);
    case GroupSpec::Kind::DP: return expected_order(spec.operands[0]) * expected_order(spec.operands[1]);
  }
  return 0;
}

}  // namespace sublat
