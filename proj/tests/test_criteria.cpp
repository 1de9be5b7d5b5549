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

const Verdict& find(const CountsReport& r, Verdict::Criterion c) {
  for (const auto& v : r.verdicts)
    if (v.criterion == c) return v;
  FAIL("missing verdict");
  return r.verdicts.front();
}

}  // namespace

TEST_CASE("A5 counts and verdicts") {
  CountsReport r = counts(alternating(5));
  CHECK(r.total_subgroups == 59);
  CHECK(r.supersolvable_count == 53);
  CHECK(r.non_supersolvable_count == 6);
  CHECK(r.non_nilpotent_count == 22);
  CHECK(r.nilpotent_count == 37);
  CHECK_FALSE(r.is_solvable_direct);
  CHECK(r.identification == Identification::A5);
  REQUIRE(r.verdicts.size() == 3);
  for (const auto& v : r.verdicts) {
    CHECK(v.observed == v.threshold);
    CHECK_FALSE(v.implies_solvable);
    CHECK(v.boundary == Identification::A5);
  }
}

TEST_CASE("SL(2,5) counts and verdicts") {
  CountsReport r = counts(sl2(5));
  CHECK(r.total_subgroups == 76);
  CHECK(r.non_nilpotent_count == 22);
  CHECK(r.non_supersolvable_count == 6);
  CHECK(r.supersolvable_count == 70);
  CHECK(r.identification == Identification::SL2_5);
  CHECK(find(r, Verdict::Criterion::ZarrinNonNilpotent).boundary == Identification::SL2_5);
  CHECK(find(r, Verdict::Criterion::BrlNonSupersolvable).boundary == Identification::SL2_5);
  const Verdict& lw = find(r, Verdict::Criterion::LuWangSupersolvable);
  CHECK(lw.observed == 70);
  CHECK_FALSE(lw.implies_solvable);
  CHECK(lw.boundary == Identification::None);
}

TEST_CASE("solvable groups below the thresholds") {
  for (int p : {2, 3, 5, 7}) {
    CountsReport r = counts(cyclic(p));
    CHECK(r.total_subgroups == 2);
    CHECK(r.non_nilpotent_count == 0);
    CHECK(r.non_supersolvable_count == 0);
    for (const auto& v : r.verdicts) {
      CHECK(v.implies_solvable);
      CHECK(v.boundary == Identification::None);
    }
  }
  CountsReport s4 = counts(symmetric(4));
  CHECK(s4.total_subgroups == 30);
  CHECK(s4.non_supersolvable_count == 2);
  CHECK(s4.non_nilpotent_count == 6);
  CHECK(s4.is_solvable_direct);
  CHECK(find(s4, Verdict::Criterion::ZarrinNonNilpotent).implies_solvable);
}

TEST_CASE("counts agree with brute-force predicates") {
  for (const char* text : {"D(6)", "S(4)", "A(4)", "NM(4,5,2)", "SL(2,3)", "DP(S(3),C(2))", "C(12)", "D(4)"}) {
    CAPTURE(text);
    PermGroup G = build(parse_spec(text));
    auto subs = oracle::SubsetClosureOracle(oracle::closure(G.generators(), G.degree()), G.degree()).subgroups();
    auto expected = oracle::counts(subs);
    CountsReport r = counts(G);
    CHECK(r.total_subgroups == expected.total);
    CHECK(r.supersolvable_count == expected.supersolvable);
    CHECK(r.nilpotent_count == expected.nilpotent);
  }
}

TEST_CASE("D(6) is supersolvable throughout") {
  CountsReport r = counts(dihedral(6));
  CHECK(r.total_subgroups == 16);
  CHECK(r.non_supersolvable_count == 0);
  CHECK(r.identification == Identification::None);
}

TEST_CASE("verdict logic at the threshold") {
  CountsReport r;
  r.non_nilpotent_count = 22;
  r.is_solvable_direct = true;
  CHECK(zarrin_verdict(r).implies_solvable);
  CHECK(zarrin_verdict(r).boundary == Identification::None);
  r.is_solvable_direct = false;
  r.identification = Identification::A5;
  CHECK_FALSE(zarrin_verdict(r).implies_solvable);
  CHECK(zarrin_verdict(r).boundary == Identification::A5);
  r.non_nilpotent_count = 23;
  CHECK(zarrin_verdict(r).boundary == Identification::None);
  r.non_nilpotent_count = 21;
  CHECK(zarrin_verdict(r).implies_solvable);

  r.supersolvable_count = 53;
  r.identification = Identification::SL2_5;
  CHECK(luwang_verdict(r).boundary == Identification::None);
  CHECK(brl_verdict(r).threshold == 6);
  CHECK(luwang_verdict(r).threshold == 53);
}

TEST_CASE("threads do not change the result") {
  SubgroupLattice lattice(symmetric(5));
  auto one = counts(lattice, 1);
  for (unsigned t : {2u, 3u, 8u, 64u}) CHECK(counts(lattice, t) == one);
  CHECK(one.total_subgroups == 156);
}

TEST_CASE("closed formulas") {
  CHECK(psl2_order(5, 1) == 60);
  CHECK(psl2_order(7, 1) == 168);
  CHECK(psl2_order(2, 2) == 60);
  CHECK(psl2_order(2, 3) == 504);
  CHECK(psl2_order(3, 2) == 360);
  CHECK(psl2_order(5, 1) == psl2(5).order());
  CHECK(psl2_order(7, 1) == psl2(7).order());
  CHECK(suzuki_order(8) == 29120);
  CHECK(suzuki_order(32) == 32537600);
  CHECK(dickson_nonnilpotent_reference(4) == 17);
  CHECK(dickson_nonnilpotent_reference(5) == 11);
  CHECK(dickson_nonnilpotent_reference(7) == 29);
  CHECK(dickson_nonnilpotent_reference(9) == 37);
  CHECK(dickson_nonnilpotent_reference(11) == 122);
}

TEST_CASE("formula domain errors") {
  CHECK_THROWS_AS(psl2_order(4, 1), ConstraintViolation);
  CHECK_THROWS_AS(psl2_order(5, 0), ConstraintViolation);
  CHECK_THROWS_AS(suzuki_order(2), ConstraintViolation);
  CHECK_THROWS_AS(suzuki_order(16), ConstraintViolation);
  CHECK_THROWS_AS(suzuki_order(12), ConstraintViolation);
  CHECK_THROWS_AS(dickson_nonnilpotent_reference(3), ConstraintViolation);
  CHECK_THROWS_AS(dickson_nonnilpotent_reference(6), ConstraintViolation);
  CHECK_THROWS_AS(psl2_order(2, 64), ConstraintViolation);
}

TEST_CASE("identification") {
  CHECK(identify(alternating(5)) == Identification::A5);
  CHECK(identify(psl2(5)) == Identification::A5);
  CHECK(identify(sl2(5)) == Identification::SL2_5);
  CHECK(identify(symmetric(5)) == Identification::None);
  CHECK(identify(direct_product(alternating(5), cyclic(2))) == Identification::None);
  CHECK(identify(direct_product(alternating(4), cyclic(5))) == Identification::None);
  CHECK(identify(cyclic(60)) == Identification::None);
  CHECK(identify(dihedral(60)) == Identification::None);
  CHECK(identification_from_string(to_string(Identification::SL2_5)) == Identification::SL2_5);
  CHECK_THROWS_AS(identification_from_string("S5"), ConstraintViolation);
}
