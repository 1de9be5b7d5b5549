#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "sublat/perm_group.hpp"

namespace sublat {

/// Fixed-size set of element indices.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const noexcept { return size_; }
  void set(std::size_t i) noexcept { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool test(std::size_t i) const noexcept { return (words_[i / 64] >> (i % 64)) & 1; }
  std::size_t count() const noexcept;
  bool is_subset_of(const Bitset& other) const noexcept;
  Bitset operator&(const Bitset& other) const;
  std::vector<std::uint32_t> indices() const;

  /// Lexicographic order of the increasing index sequences.
  static bool lex_less(const Bitset& a, const Bitset& b) noexcept;

  friend bool operator==(const Bitset&, const Bitset&) = default;

  struct Hash {
    std::size_t operator()(const Bitset& b) const noexcept;
  };

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// The elements of G, indexed in lexicographic order (identity is 0), with
/// a full multiplication table.
class ElementTable {
 public:
  explicit ElementTable(const PermGroup& G, const Bounds& bounds = {});

  std::size_t size() const noexcept { return elements_.size(); }
  const Permutation& element(std::uint32_t i) const { return elements_[i]; }
  const std::vector<Permutation>& elements() const noexcept { return elements_; }
  std::optional<std::uint32_t> index_of(const Permutation& p) const;

  std::uint32_t product(std::uint32_t a, std::uint32_t b) const noexcept {
    return table_[static_cast<std::size_t>(a) * elements_.size() + b];
  }
  std::uint32_t inverse(std::uint32_t a) const noexcept { return inverses_[a]; }
  std::uint32_t conjugate(std::uint32_t h, std::uint32_t g) const noexcept {
    return product(product(inverses_[g], h), g);
  }
  std::uint64_t element_order(std::uint32_t a) const noexcept { return orders_[a]; }
  const std::vector<std::uint32_t>& group_generators() const noexcept { return generators_; }

  /// Subgroup generated by the given element indices.
  Bitset closure(std::span<const std::uint32_t> generators) const;
  /// H^g.
  Bitset conjugate(const Bitset& H, std::uint32_t g) const;

 private:
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, std::uint32_t> index_;
  std::vector<std::uint32_t> table_;
  std::vector<std::uint32_t> inverses_;
  std::vector<std::uint64_t> orders_;
  std::vector<std::uint32_t> generators_;
};

/// A conjugacy class of subgroups.
struct SubgroupClass {
  PermGroup representative;
  std::uint64_t normalizer_order = 0;
  std::uint64_t class_size = 0;
  std::uint64_t member_order = 0;
};

struct LatticeReport {
  std::vector<SubgroupClass> classes;
  std::size_t class_count = 0;
  std::uint64_t total_subgroups = 0;
};

/// All subgroups of G up to conjugacy.
///
/// Every subgroup is a join of cyclic subgroups of prime-power order, so the
/// classes are closed under "join a representative with one such cyclic
/// subgroup", starting from the trivial group. Classes are identified by
/// their lexicographically least member and sorted by (order, least member).
class SubgroupLattice {
 public:
  struct Class {
    Bitset canonical;                      // least member
    std::vector<std::uint32_t> generators; // of the canonical member
    std::vector<Bitset> members;           // all conjugates, in lexicographic order
    std::uint64_t order = 0;
  };

  explicit SubgroupLattice(const PermGroup& G, const Bounds& bounds = {});

  const PermGroup& group() const noexcept { return group_; }
  const ElementTable& table() const noexcept { return table_; }
  const std::vector<Class>& classes() const noexcept { return classes_; }
  std::uint64_t total_subgroups() const noexcept;

  /// Class index of an arbitrary subgroup of G.
  std::optional<std::size_t> class_of(const Bitset& subgroup) const;

  PermGroup to_group(const Bitset& subgroup) const;
  PermGroup representative(std::size_t class_index) const;
  std::vector<PermGroup> members(std::size_t class_index) const;

  LatticeReport report() const;
  std::vector<std::size_t> maximal_class_indices() const;
  Bitset frattini_set() const;

 private:
  std::size_t register_class(const Bitset& subgroup);
  std::vector<std::uint32_t> greedy_generators(const Bitset& subgroup) const;

  PermGroup group_;
  ElementTable table_;
  std::vector<Class> classes_;
  std::unordered_map<Bitset, std::size_t, Bitset::Hash> class_by_member_;
};

LatticeReport subgroup_classes(const PermGroup& G, const Bounds& bounds = {});
std::uint64_t all_subgroup_count(const PermGroup& G, const Bounds& bounds = {});
std::vector<SubgroupClass> maximal_subgroups(const PermGroup& G, const Bounds& bounds = {});
PermGroup frattini(const PermGroup& G, const Bounds& bounds = {});

}  // namespace sublat
