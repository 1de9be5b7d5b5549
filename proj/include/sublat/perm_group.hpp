#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "sublat/permutation.hpp"

namespace sublat {

/// Size guards for operations whose cost grows with |G| or an index.
struct Bounds {
  std::uint64_t max_elements = 1'000'000;   // element enumeration
  std::uint64_t max_coset_points = 100'000;  // coset action degree
  std::uint64_t max_lattice_order = 2000;   // subgroup lattice enumeration

  /// Defaults, overridden by SUBLAT_MAX_ELEMENTS, SUBLAT_MAX_COSETS and
  /// SUBLAT_MAX_ORDER when set.
  static Bounds from_environment();
};

/// Deterministic Schreier-Sims stabilizer chain.
///
/// Base points are always the smallest point moved by the generator that
/// forces a new level. Level i holds every strong generator fixing base
/// points 0..i-1 and a transversal of the orbit of base point i.
class StabilizerChain {
 public:
  struct Level {
    Point base;
    std::vector<Permutation> generators;
    std::vector<Point> orbit;  // BFS order, orbit[0] == base
    std::vector<std::optional<Permutation>> transversal;          // base^u == point
    std::vector<std::optional<Permutation>> inverse_transversal;  // u^-1
  };

  explicit StabilizerChain(std::size_t degree);
  StabilizerChain(std::size_t degree, std::span<const Permutation> generators);

  /// Adds g to the group if it is not already a member.
  void extend(const Permutation& g);

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Level>& levels() const noexcept { return levels_; }
  const std::vector<Permutation>& strong_generators() const noexcept { return strong_; }
  std::vector<Point> base() const;

  std::uint64_t order() const;

  /// Strips g through levels [from, end). Returns the residue and the level
  /// at which stripping stopped (levels().size() when it went all the way).
  std::pair<Permutation, std::size_t> sift(const Permutation& g, std::size_t from = 0) const;

  bool contains(const Permutation& g) const;

 private:
  void rebuild_levels();
  void schreier_sims(std::size_t start_level);

  std::size_t degree_;
  std::vector<Point> base_points_;
  std::vector<Permutation> strong_;
  std::vector<Level> levels_;
};

/// A permutation group given by generators, with its stabilizer chain.
/// Immutable once built; copies share the chain.
class PermGroup {
 public:
  /// Trivial group of the given degree.
  explicit PermGroup(std::size_t degree = 1);
  PermGroup(std::size_t degree, std::vector<Permutation> generators);

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  const StabilizerChain& chain() const noexcept { return *chain_; }
  std::uint64_t order() const noexcept { return order_; }
  bool is_trivial() const noexcept { return order_ == 1; }

  /// Throws DegreeMismatch when degrees differ.
  bool contains(const Permutation& p) const;
  bool is_subgroup_of(const PermGroup& other) const;

  /// Set equality: same degree and mutual containment.
  friend bool operator==(const PermGroup& a, const PermGroup& b);

 private:
  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::shared_ptr<const StabilizerChain> chain_;
  std::uint64_t order_;
};

PermGroup group(std::vector<Permutation> generators, std::size_t degree);
std::uint64_t order(const PermGroup& G);
bool contains(const PermGroup& G, const Permutation& p);

/// All elements, sorted lexicographically by image list, so the identity comes first.
std::vector<Permutation> elements(const PermGroup& G, const Bounds& bounds = {});

/// |G : H|. Throws NotSubgroup unless H <= G.
std::uint64_t index(const PermGroup& G, const PermGroup& H);

bool is_normal(const PermGroup& G, const PermGroup& H);
PermGroup normalizer(const PermGroup& G, const PermGroup& H, const Bounds& bounds = {});
PermGroup centralizer(const PermGroup& G, const PermGroup& H, const Bounds& bounds = {});
PermGroup center(const PermGroup& G, const Bounds& bounds = {});
PermGroup conjugate_subgroup(const PermGroup& H, const Permutation& g);
PermGroup normal_closure(const PermGroup& G, std::span<const Permutation> S);
PermGroup derived_subgroup(const PermGroup& G);
std::uint64_t exponent(const PermGroup& G, const Bounds& bounds = {});

/// G acting on the first |G| points and H on the next |H|.
PermGroup direct_product(const PermGroup& G, const PermGroup& H);

/// G acting by right multiplication on the right cosets Hx of H.
///
/// Coset 0 is H itself. The action is a homomorphism, so for normal H the
/// image is isomorphic to G/H.
class CosetAction {
 public:
  CosetAction(const PermGroup& G, const PermGroup& H, const Bounds& bounds = {});

  const PermGroup& image() const noexcept { return image_; }
  std::size_t coset_count() const noexcept { return representatives_.size(); }
  const std::vector<Permutation>& representatives() const noexcept { return representatives_; }

  /// Image of an arbitrary element of G.
  Permutation act(const Permutation& g) const;

  /// Index of the coset containing g.
  std::size_t coset_of(const Permutation& g) const;

 private:
  std::vector<Permutation> subgroup_elements_;
  std::vector<Permutation> representatives_;
  std::unordered_map<Permutation, std::size_t> coset_index_;  // keyed by minimal element
  PermGroup image_;
};

PermGroup coset_action(const PermGroup& G, const PermGroup& H, const Bounds& bounds = {});

}  // namespace sublat
