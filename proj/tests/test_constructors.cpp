#include <doctest.h>

#include "sublat/analysis.hpp"
#include "sublat/constructors.hpp"
#include "sublat/criteria.hpp"
#include "sublat/errors.hpp"
#include "sublat/series.hpp"
#include "support/corpus.hpp"
#include "support/oracle.hpp"

using namespace sublat;

namespace {

std::uint64_t factorial(std::uint64_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

// Sorted (order, class size, supersolvable, nilpotent) rows.
std::vector<std::tuple<std::uint64_t, std::size_t, bool, bool>> profile(const PermGroup& G) {
  SubgroupLattice lattice(G);
  auto flags = class_profiles(lattice);
  std::vector<std::tuple<std::uint64_t, std::size_t, bool, bool>> rows;
  for (std::size_t i = 0; i < flags.size(); ++i)
    rows.emplace_back(lattice.classes()[i].order, lattice.classes()[i].members.size(),
                      flags[i].supersolvable, flags[i].nilpotent);
  std::sort(rows.begin(), rows.end());
  return rows;
}

}  // namespace

TEST_CASE("closed-form orders of the named families") {
  for (int n = 1; n <= 12; ++n) CHECK(cyclic(n).order() == static_cast<std::uint64_t>(n));
  for (int n = 3; n <= 20; ++n) CHECK(dihedral(n).order() == static_cast<std::uint64_t>(2 * n));
  for (int n = 1; n <= 8; ++n) CHECK(symmetric(n).order() == factorial(n));
  for (int n = 3; n <= 8; ++n) CHECK(alternating(n).order() == factorial(n) / 2);
  CHECK(alternating(1).order() == 1);
  CHECK(alternating(2).order() == 1);
  CHECK(klein4().order() == 4);
  for (int p : {2, 3, 5, 7, 11, 13}) {
    std::uint64_t q = p;
    CHECK(sl2(p).order() == q * (q * q - 1));
    CHECK(psl2(p).order() == q * (q * q - 1) / (p == 2 ? 1 : 2));
  }
}

TEST_CASE("constructor domain errors") {
  CHECK_THROWS_AS(cyclic(0), ConstraintViolation);
  CHECK_THROWS_AS(dihedral(2), ConstraintViolation);
  CHECK_THROWS_AS(symmetric(-1), ConstraintViolation);
  CHECK_THROWS_AS(sl2(4), ConstraintViolation);
  CHECK_THROWS_AS(sl2(17), ConstraintViolation);
  CHECK_THROWS_AS(psl2(1), ConstraintViolation);
}

TEST_CASE("dihedral generators satisfy the defining relations") {
  for (int n = 3; n <= 12; ++n) {
    PermGroup D = dihedral(n);
    const auto& g = D.generators();
    REQUIRE(g.size() == 2);
    const Permutation& r = g[0];
    const Permutation& s = g[1];
    CHECK(r.order() == static_cast<std::uint64_t>(n));
    CHECK(s.order() == 2);
    CHECK(conjugate(r, s) == inverse(r));
  }
}

TEST_CASE("(n,m)-group parameter validation names the violated condition") {
  CHECK_NOTHROW(validate_nm_parameters(2, 5, 4));
  CHECK_NOTHROW(validate_nm_parameters(4, 5, 2));
  CHECK_THROWS_WITH_AS(validate_nm_parameters(3, 5, 2), doctest::Contains("t^n = 1"), ConstraintViolation);
  CHECK_THROWS_WITH_AS(validate_nm_parameters(2, 6, 4), doctest::Contains("gcd"), ConstraintViolation);
  CHECK_THROWS_WITH_AS(validate_nm_parameters(2, 5, 5), doctest::Contains("1 < t < m"), ConstraintViolation);
  CHECK_THROWS_WITH_AS(validate_nm_parameters(1, 5, 4), doctest::Contains("n >= 2"), ConstraintViolation);
  CHECK_THROWS_WITH_AS(validate_nm_parameters(2, 2, 1), doctest::Contains("m >= 3"), ConstraintViolation);
}

TEST_CASE("(n,m)-groups are semidirect products of two cyclic groups") {
  for (auto [n, m, t] : std::vector<std::tuple<int, int, int>>{
           {2, 5, 4}, {4, 5, 2}, {3, 7, 2}, {6, 7, 3}, {4, 13, 5}, {2, 9, 8}}) {
    CAPTURE(n);
    CAPTURE(m);
    PermGroup G = nm_group(n, m, t);
    CHECK(G.order() == static_cast<std::uint64_t>(n * m));
    const Permutation& r = G.generators()[0];
    const Permutation& s = G.generators()[1];
    CHECK(r.order() == static_cast<std::uint64_t>(m));
    CHECK(s.order() == static_cast<std::uint64_t>(n));
    CHECK(conjugate(r, s) == power(r, t));
    PermGroup R = group({r}, G.degree());
    PermGroup S = group({s}, G.degree());
    CHECK(is_normal(G, R));
    // <r> meets <s> trivially and together they fill G.
    std::size_t shared = 0;
    for (const auto& x : elements(R)) shared += S.contains(x);
    CHECK(shared == 1);
    CHECK(R.order() * S.order() == G.order());
  }
}

TEST_CASE("NM(2,5,4) has the subgroup profile of D(5)") {
  CHECK(profile(nm_group(2, 5, 4)) == profile(dihedral(5)));
}

TEST_CASE("PSL(2,5) has the subgroup profile of A(5)") {
  CHECK(profile(psl2(5)) == profile(alternating(5)));
  CHECK(profile(psl2(3)) == profile(alternating(4)));
  CHECK(profile(sl2(2)) == profile(symmetric(3)));
}

TEST_CASE("prime field arithmetic") {
  FpScalar a(3, 7), b(5, 7);
  CHECK((a + b).value() == 1);
  CHECK((a - b).value() == 5);
  CHECK((a * b).value() == 1);
  CHECK((-a).value() == 4);
  CHECK(a.inverse() == b);
  CHECK(FpScalar(-1, 13).value() == 12);
  for (std::uint32_t x = 1; x < 13; ++x) CHECK((FpScalar(x, 13) * FpScalar(x, 13).inverse()).value() == 1);
  CHECK_THROWS_AS(FpScalar(0, 5).inverse(), ConstraintViolation);
  CHECK(is_prime(13));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
}

TEST_CASE("SL(2,p) generators have determinant one and act homomorphically") {
  for (int p : {2, 3, 5, 7}) {
    auto mats = sl2_generator_matrices(p);
    for (const auto& m : mats) CHECK(m.det().value() == 1);
    const Mat2 prod = mats[0] * mats[1];
    CHECK(prod.det().value() == 1);
    CHECK(sl2_permutation(prod) == sl2_permutation(mats[0]) * sl2_permutation(mats[1]));
    CHECK(psl2_permutation(prod) == psl2_permutation(mats[0]) * psl2_permutation(mats[1]));
    // -I is trivial on the projective line only.
    FpScalar one(1, p), zero(0, p);
    Mat2 minus{-one, zero, zero, -one};
    CHECK(psl2_permutation(minus).is_identity());
    CHECK(sl2_permutation(minus).is_identity() == (p == 2));
  }
  CHECK(sl2_point(0, 1, 5) == 0);
  CHECK(sl2_point(4, 4, 5) == 23);
}

TEST_CASE("center of SL(2,p) is {I, -I}") {
  for (int p : {3, 5, 7}) CHECK(center(sl2(p)).order() == 2);
  CHECK(center(sl2(2)).order() == 1);
  CHECK(center(psl2(5)).order() == 1);
}

TEST_CASE("group specs build groups of the expected order") {
  for (const auto& text : corpus::groups_up_to_200()) {
    CAPTURE(text);
    GroupSpec spec = parse_spec(text);
    CHECK(spec.to_string() == text);
    CHECK(build(spec).order() == expected_order(spec));
  }
}
