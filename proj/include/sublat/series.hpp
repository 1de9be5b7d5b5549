#pragma once

#include <cstdint>
#include <vector>

#include "sublat/perm_group.hpp"

namespace sublat {

struct SeriesReport {
  enum class Kind { Derived, UpperCentral };

  Kind kind = Kind::Derived;
  /// Orders of the terms: descending for the derived series, ascending for
  /// the upper central series. The last term repeats the stable value unless
  /// the series reached 1 (derived) or |G| (upper central).
  std::vector<std::uint64_t> terms;
  /// True when the series reached 1 (derived) or G (upper central).
  bool terminated = false;

  friend bool operator==(const SeriesReport&, const SeriesReport&) = default;
};

/// G = G^(0) >= G' >= G'' >= ...
std::vector<PermGroup> derived_series_groups(const PermGroup& G);
SeriesReport derived_series(const PermGroup& G);

/// 1 = Z_0 <= Z_1 <= ..., each Z_{i+1} pulled back from Z(G / Z_i).
std::vector<PermGroup> upper_central_series_groups(const PermGroup& G, const Bounds& bounds = {});
SeriesReport upper_central_series(const PermGroup& G, const Bounds& bounds = {});

/// The exact p-part of n.
std::uint64_t p_part(std::uint64_t n, std::uint64_t p);
/// Distinct prime divisors in increasing order.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

/// A Sylow p-subgroup. Grows a p-subgroup P by p-elements of N_G(P) outside P.
PermGroup sylow(const PermGroup& G, std::uint64_t p, const Bounds& bounds = {});
/// |G : N_G(P)| for a Sylow p-subgroup P.
std::uint64_t sylow_count(const PermGroup& G, std::uint64_t p, const Bounds& bounds = {});

bool is_abelian(const PermGroup& G);
bool is_cyclic(const PermGroup& G, const Bounds& bounds = {});
/// Every Sylow subgroup is normal.
bool is_nilpotent(const PermGroup& G, const Bounds& bounds = {});
bool is_solvable(const PermGroup& G);
/// Looks for a normal subgroup N of prime order and recurses on G/N.
bool is_supersolvable(const PermGroup& G, const Bounds& bounds = {});

}  // namespace sublat
