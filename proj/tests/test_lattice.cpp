#include <doctest.h>

#include <algorithm>
#include <map>

#include "sublat/analysis.hpp"
#include "sublat/constructors.hpp"
#include "sublat/errors.hpp"
#include "sublat/lattice.hpp"
#include "sublat/series.hpp"
#include "support/oracle.hpp"

using namespace sublat;

namespace {

std::set<oracle::ElementSet> expanded(const SubgroupLattice& lattice) {
  std::set<oracle::ElementSet> out;
  for (const auto& cls : lattice.classes())
    for (const auto& m : cls.members) {
      oracle::ElementSet s;
      for (auto i : m.indices()) s.insert(lattice.table().element(i));
      out.insert(std::move(s));
    }
  return out;
}

std::set<oracle::ElementSet> brute(const PermGroup& G) {
  return oracle::SubsetClosureOracle(oracle::closure(G.generators(), G.degree()), G.degree()).subgroups();
}

std::map<std::uint64_t, std::vector<std::uint64_t>> sizes_by_order(const SubgroupLattice& lattice) {
  std::map<std::uint64_t, std::vector<std::uint64_t>> out;
  for (const auto& c : lattice.classes()) out[c.order].push_back(c.members.size());
  for (auto& [order, sizes] : out) std::sort(sizes.begin(), sizes.end());
  return out;
}

}  // namespace

TEST_CASE("bitset basics") {
  Bitset a(70), b(70);
  a.set(0);
  a.set(65);
  b.set(0);
  b.set(3);
  b.set(65);
  CHECK(a.count() == 2);
  CHECK(a.is_subset_of(b));
  CHECK_FALSE(b.is_subset_of(a));
  CHECK((a & b) == a);
  CHECK(b.indices() == std::vector<std::uint32_t>{0, 3, 65});
  CHECK(Bitset::lex_less(b, a));  // {0,3,65} < {0,65}
  CHECK_FALSE(Bitset::lex_less(a, a));
}

TEST_CASE("element table") {
  ElementTable table(symmetric(4));
  CHECK(table.size() == 24);
  CHECK(table.element(0).is_identity());
  for (std::uint32_t a = 0; a < table.size(); ++a) {
    CHECK(table.product(a, table.inverse(a)) == 0);
    CHECK(table.element(table.product(a, 5)) == table.element(a) * table.element(5));
    CHECK(table.element_order(a) == table.element(a).order());
  }
  CHECK(table.closure(table.group_generators()).count() == 24);
  CHECK(table.index_of(Permutation(4)) == 0u);
  CHECK_FALSE(table.index_of(Permutation(5)).has_value());

  Bounds tight;
  tight.max_lattice_order = 100;
  CHECK_THROWS_AS(ElementTable(symmetric(5), tight), BoundExceeded);
}

TEST_CASE("A5 lattice") {
  SubgroupLattice lattice(alternating(5));
  CHECK(lattice.classes().size() == 9);
  CHECK(lattice.total_subgroups() == 59);
  auto sizes = sizes_by_order(lattice);
  CHECK(sizes[1] == std::vector<std::uint64_t>{1});
  CHECK(sizes[2] == std::vector<std::uint64_t>{15});
  CHECK(sizes[3] == std::vector<std::uint64_t>{10});
  CHECK(sizes[4] == std::vector<std::uint64_t>{5});
  CHECK(sizes[5] == std::vector<std::uint64_t>{6});
  CHECK(sizes[6] == std::vector<std::uint64_t>{10});
  CHECK(sizes[10] == std::vector<std::uint64_t>{6});
  CHECK(sizes[12] == std::vector<std::uint64_t>{5});
  CHECK(sizes[60] == std::vector<std::uint64_t>{1});

  auto report = lattice.report();
  CHECK(report.class_count == 9);
  CHECK(report.total_subgroups == 59);
  for (const auto& c : report.classes) {
    CHECK(c.class_size * c.normalizer_order == 60);
    CHECK(c.representative.order() == c.member_order);
  }
}

TEST_CASE("classes are sorted and canonical") {
  SubgroupLattice lattice(symmetric(4));
  const auto& classes = lattice.classes();
  CHECK(classes.front().order == 1);
  CHECK(classes.back().order == 24);
  for (std::size_t i = 1; i < classes.size(); ++i) {
    const auto& a = classes[i - 1];
    const auto& b = classes[i];
    CHECK((a.order < b.order || (a.order == b.order && Bitset::lex_less(a.canonical, b.canonical))));
  }
  for (const auto& c : classes) {
    CHECK(c.members.front() == c.canonical);
    CHECK(std::is_sorted(c.members.begin(), c.members.end(), Bitset::lex_less));
    CHECK(lattice.table().closure(c.generators) == c.canonical);
    for (const auto& m : c.members) CHECK(m.count() == c.order);
  }
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (const auto& m : classes[i].members) CHECK(lattice.class_of(m) == i);
}

TEST_CASE("small lattices") {
  CHECK(all_subgroup_count(klein4()) == 5);
  for (int p : {2, 3, 5, 7, 11, 13}) CHECK(all_subgroup_count(cyclic(p)) == 2);
  CHECK(all_subgroup_count(cyclic(1)) == 1);
  CHECK(all_subgroup_count(cyclic(12)) == 6);
  CHECK(all_subgroup_count(symmetric(3)) == 6);
  CHECK(all_subgroup_count(symmetric(4)) == 30);
  CHECK(subgroup_classes(symmetric(4)).class_count == 11);
  CHECK(all_subgroup_count(dihedral(4)) == 10);
  CHECK(all_subgroup_count(sl2(3)) == 15);
}

TEST_CASE("lattice matches the subset-closure oracle") {
  for (const PermGroup& G : {cyclic(12), klein4(), dihedral(6), symmetric(4), alternating(4),
                             nm_group(4, 5, 2), direct_product(cyclic(2), dihedral(4))}) {
    CAPTURE(G.order());
    SubgroupLattice lattice(G);
    CHECK(expanded(lattice) == brute(G));
  }
}

TEST_CASE("maximal subgroups") {
  std::vector<std::uint64_t> orders;
  for (const auto& m : maximal_subgroups(alternating(5))) orders.push_back(m.member_order);
  std::sort(orders.begin(), orders.end());
  CHECK(orders == std::vector<std::uint64_t>{6, 10, 12});

  auto s3 = maximal_subgroups(symmetric(3));
  REQUIRE(s3.size() == 2);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> s3rows;
  for (const auto& m : s3) s3rows.emplace_back(m.member_order, m.class_size);
  std::sort(s3rows.begin(), s3rows.end());
  CHECK(s3rows == std::vector<std::pair<std::uint64_t, std::uint64_t>>{{2, 3}, {3, 1}});
  CHECK(maximal_subgroups(cyclic(1)).empty());
}

TEST_CASE("Frattini subgroup") {
  CHECK(frattini(alternating(5)).is_trivial());
  CHECK(frattini(cyclic(4)).order() == 2);
  CHECK(frattini(klein4()).is_trivial());
  CHECK(frattini(cyclic(8)).order() == 4);
  CHECK(frattini(dihedral(4)).order() == 2);
  CHECK(frattini(sl2(3)).order() == 2);
  CHECK(frattini(cyclic(1)).is_trivial());
}

TEST_CASE("lattice bound") {
  Bounds tight;
  tight.max_lattice_order = 59;
  CHECK_THROWS_AS(SubgroupLattice(alternating(5), tight), BoundExceeded);
}

TEST_CASE("SL(2,7) lattice equals the closures of element pairs") {
  // Every subgroup of SL(2,7) is generated by two elements.
  PermGroup G = sl2(7);
  SubgroupLattice lattice(G);
  const auto& t = lattice.table();
  std::set<Bitset, decltype(&Bitset::lex_less)> pairs(&Bitset::lex_less);
  for (std::uint32_t a = 0; a < t.size(); ++a)
    for (std::uint32_t b = a; b < t.size(); ++b) {
      std::uint32_t gens[2] = {a, b};
      pairs.insert(t.closure(gens));
    }
  std::set<Bitset, decltype(&Bitset::lex_less)> ours(&Bitset::lex_less);
  for (const auto& c : lattice.classes()) ours.insert(c.members.begin(), c.members.end());
  CHECK(ours.size() == 224);
  CHECK(std::equal(ours.begin(), ours.end(), pairs.begin(), pairs.end()));

  std::size_t non_nilpotent = 0;
  for (const auto& H : ours) {
    oracle::ElementSet s;
    for (auto i : H.indices()) s.insert(t.element(i));
    non_nilpotent += !oracle::is_nilpotent(s);
  }
  CHECK(non_nilpotent == 73);
}
