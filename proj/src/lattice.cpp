#include "sublat/lattice.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>
#include <unordered_set>

#include "sublat/errors.hpp"
#include "sublat/series.hpp"

namespace sublat {

// ---------------------------------------------------------------------------
// Bitset

std::size_t Bitset::count() const noexcept {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool Bitset::is_subset_of(const Bitset& other) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i]) return false;
  return true;
}

Bitset Bitset::operator&(const Bitset& other) const {
  Bitset r(size_);
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & other.words_[i];
  return r;
}

std::vector<std::uint32_t> Bitset::indices() const {
  std::vector<std::uint32_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t bits = words_[w];
    while (bits) {
      out.push_back(static_cast<std::uint32_t>(w * 64 + std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

bool Bitset::lex_less(const Bitset& a, const Bitset& b) noexcept {
  for (std::size_t w = 0; w < a.words_.size(); ++w) {
    std::uint64_t diff = a.words_[w] ^ b.words_[w];
    if (!diff) continue;
    std::uint64_t low = diff & -diff;
    const Bitset& holder = (a.words_[w] & low) ? a : b;
    const Bitset& other = (a.words_[w] & low) ? b : a;
    // The holder has the smaller next index unless the other sequence has
    // already ended, in which case the other is a proper prefix.
    bool other_continues = (other.words_[w] & ~(low | (low - 1))) != 0;
    for (std::size_t v = w + 1; !other_continues && v < other.words_.size(); ++v)
      other_continues = other.words_[v] != 0;
    bool holder_smaller = other_continues;
    return (&holder == &a) == holder_smaller;
  }
  return false;
}

std::size_t Bitset::Hash::operator()(const Bitset& b) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ull;
  for (auto w : b.words_) h = (h ^ w) * 0x100000001b3ull + (h >> 29);
  return h;
}

// ---------------------------------------------------------------------------
// ElementTable

ElementTable::ElementTable(const PermGroup& G, const Bounds& bounds) {
  if (G.order() > bounds.max_lattice_order)
    throw BoundExceeded("element table: |G| = " + std::to_string(G.order()) +
                        " exceeds the lattice order bound " +
                        std::to_string(bounds.max_lattice_order));
  elements_ = sublat::elements(G, bounds);
  const std::size_t n = elements_.size();
  index_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) index_.emplace(elements_[i], static_cast<std::uint32_t>(i));

  table_.resize(n * n);
  inverses_.resize(n);
  orders_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    orders_[a] = elements_[a].order();
    for (std::size_t b = 0; b < n; ++b) {
      std::uint32_t c = index_.at(elements_[a] * elements_[b]);
      table_[a * n + b] = c;
      if (c == 0) inverses_[a] = static_cast<std::uint32_t>(b);
    }
  }
  for (const auto& g : G.generators()) generators_.push_back(index_.at(g));
}

std::optional<std::uint32_t> ElementTable::index_of(const Permutation& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Bitset ElementTable::closure(std::span<const std::uint32_t> generators) const {
  Bitset members(size());
  std::vector<std::uint32_t> queue{0};
  members.set(0);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (std::uint32_t g : generators) {
      std::uint32_t next = product(queue[head], g);
      if (members.test(next)) continue;
      members.set(next);
      queue.push_back(next);
    }
  }
  return members;
}

Bitset ElementTable::conjugate(const Bitset& H, std::uint32_t g) const {
  Bitset result(size());
  for (std::uint32_t h : H.indices()) result.set(conjugate(h, g));
  return result;
}

// ---------------------------------------------------------------------------
// SubgroupLattice

SubgroupLattice::SubgroupLattice(const PermGroup& G, const Bounds& bounds)
    : group_(G), table_(G, bounds) {
  const std::size_t n = table_.size();

  // Cyclic subgroups of prime-power order, each with its least generator.
  std::vector<std::uint32_t> cyclic_generators;
  {
    std::unordered_set<Bitset, Bitset::Hash> seen;
    for (std::uint32_t x = 1; x < n; ++x) {
      if (prime_divisors(table_.element_order(x)).size() != 1) continue;
      std::uint32_t gen[] = {x};
      Bitset c = table_.closure(gen);
      if (!seen.insert(c).second) continue;
      cyclic_generators.push_back(x);
    }
  }

  register_class(table_.closure({}));
  for (std::size_t ci = 0; ci < classes_.size(); ++ci) {
    for (std::size_t k = 0; k < cyclic_generators.size(); ++k) {
      if (classes_[ci].canonical.test(cyclic_generators[k])) continue;
      std::vector<std::uint32_t> gens = classes_[ci].generators;
      gens.push_back(cyclic_generators[k]);
      Bitset join = table_.closure(gens);
      if (class_by_member_.contains(join)) continue;
      register_class(join);
    }
  }

  std::vector<std::size_t> order(classes_.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [this](std::size_t a, std::size_t b) {
    if (classes_[a].order != classes_[b].order) return classes_[a].order < classes_[b].order;
    return Bitset::lex_less(classes_[a].canonical, classes_[b].canonical);
  });
  std::vector<Class> sorted;
  sorted.reserve(classes_.size());
  for (std::size_t i : order) sorted.push_back(std::move(classes_[i]));
  classes_ = std::move(sorted);
  class_by_member_.clear();
  for (std::size_t i = 0; i < classes_.size(); ++i)
    for (const auto& m : classes_[i].members) class_by_member_.emplace(m, i);

  if (total_subgroups() != class_by_member_.size())
    throw InvariantViolation("lattice: a subgroup was registered in two classes");
}

std::size_t SubgroupLattice::register_class(const Bitset& subgroup) {
  const std::size_t id = classes_.size();
  Class cls;
  cls.order = subgroup.count();

  // Orbit under conjugation by the generators of G.
  cls.members.push_back(subgroup);
  class_by_member_.emplace(subgroup, id);
  for (std::size_t head = 0; head < cls.members.size(); ++head) {
    for (std::uint32_t g : table_.group_generators()) {
      Bitset next = table_.conjugate(cls.members[head], g);
      if (!class_by_member_.emplace(next, id).second) continue;
      cls.members.push_back(std::move(next));
    }
  }

  std::sort(cls.members.begin(), cls.members.end(), Bitset::lex_less);
  cls.canonical = cls.members[0];

  // Greedy generating set of the canonical member, independent of how the
  // class was discovered.
  cls.generators = greedy_generators(cls.canonical);
  classes_.push_back(std::move(cls));
  return id;
}

std::uint64_t SubgroupLattice::total_subgroups() const noexcept {
  std::uint64_t total = 0;
  for (const auto& c : classes_) total += c.members.size();
  return total;
}

std::optional<std::size_t> SubgroupLattice::class_of(const Bitset& subgroup) const {
  auto it = class_by_member_.find(subgroup);
  if (it == class_by_member_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::uint32_t> SubgroupLattice::greedy_generators(const Bitset& subgroup) const {
  std::vector<std::uint32_t> gens;
  Bitset generated = table_.closure(gens);
  for (std::uint32_t x : subgroup.indices()) {
    if (generated.test(x)) continue;
    gens.push_back(x);
    generated = table_.closure(gens);
  }
  return gens;
}

PermGroup SubgroupLattice::to_group(const Bitset& subgroup) const {
  std::vector<Permutation> gens;
  for (std::uint32_t x : greedy_generators(subgroup)) gens.push_back(table_.element(x));
  return PermGroup(group_.degree(), std::move(gens));
}

PermGroup SubgroupLattice::representative(std::size_t class_index) const {
  std::vector<Permutation> gens;
  for (std::uint32_t x : classes_.at(class_index).generators) gens.push_back(table_.element(x));
  return PermGroup(group_.degree(), std::move(gens));
}

std::vector<PermGroup> SubgroupLattice::members(std::size_t class_index) const {
  std::vector<PermGroup> out;
  for (const auto& m : classes_.at(class_index).members) out.push_back(to_group(m));
  return out;
}

LatticeReport SubgroupLattice::report() const {
  LatticeReport r;
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    SubgroupClass sc;
    sc.representative = representative(i);
    sc.member_order = classes_[i].order;
    sc.class_size = classes_[i].members.size();
    sc.normalizer_order = group_.order() / sc.class_size;
    r.classes.push_back(std::move(sc));
  }
  r.class_count = r.classes.size();
  r.total_subgroups = total_subgroups();
  return r;
}

std::vector<std::size_t> SubgroupLattice::maximal_class_indices() const {
  std::vector<std::size_t> result;
  const std::uint64_t n = group_.order();
  for (std::size_t a = 0; a < classes_.size(); ++a) {
    const Class& A = classes_[a];
    if (A.order == n) continue;
    bool contained = false;
    for (std::size_t b = 0; b < classes_.size() && !contained; ++b) {
      const Class& B = classes_[b];
      if (B.order <= A.order || B.order == n || B.order % A.order != 0) continue;
      for (const auto& m : B.members)
        if (A.canonical.is_subset_of(m)) {
          contained = true;
          break;
        }
    }
    if (!contained) result.push_back(a);
  }
  return result;
}

Bitset SubgroupLattice::frattini_set() const {
  Bitset result = classes_.back().canonical;  // G itself
  for (std::size_t c : maximal_class_indices())
    for (const auto& m : classes_[c].members) result = result & m;
  return result;
}

LatticeReport subgroup_classes(const PermGroup& G, const Bounds& bounds) {
  return SubgroupLattice(G, bounds).report();
}

std::uint64_t all_subgroup_count(const PermGroup& G, const Bounds& bounds) {
  return SubgroupLattice(G, bounds).total_subgroups();
}

std::vector<SubgroupClass> maximal_subgroups(const PermGroup& G, const Bounds& bounds) {
  SubgroupLattice lattice(G, bounds);
  LatticeReport report = lattice.report();
  std::vector<SubgroupClass> out;
  for (std::size_t c : lattice.maximal_class_indices()) out.push_back(report.classes[c]);
  return out;
}

PermGroup frattini(const PermGroup& G, const Bounds& bounds) {
  SubgroupLattice lattice(G, bounds);
  return lattice.to_group(lattice.frattini_set());
}

}  // namespace sublat
