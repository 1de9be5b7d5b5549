#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sublat/lattice.hpp"

namespace sublat {

enum class Identification { None, A5, SL2_5 };

std::string to_string(Identification id);
Identification identification_from_string(const std::string& s);

/// Outcome of one subgroup-counting solvability theorem applied to a group.
struct Verdict {
  enum class Criterion {
    ZarrinNonNilpotent,   // fewer than 22 non-nilpotent subgroups
    BrlNonSupersolvable,  // fewer than 6 non-supersolvable subgroups
    LuWangSupersolvable,  // fewer than 53 supersolvable subgroups
  };

  Criterion criterion = Criterion::ZarrinNonNilpotent;
  std::uint64_t threshold = 0;
  std::uint64_t observed = 0;
  /// True only when the theorem's hypothesis holds; false makes no claim.
  bool implies_solvable = false;
  /// Set when the observation sits exactly at the threshold and the group is
  /// not solvable.
  Identification boundary = Identification::None;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

std::string to_string(Verdict::Criterion c);
Verdict::Criterion criterion_from_string(const std::string& s);

struct CountsReport {
  std::uint64_t total_subgroups = 0;
  std::uint64_t supersolvable_count = 0;
  std::uint64_t non_supersolvable_count = 0;
  std::uint64_t nilpotent_count = 0;
  std::uint64_t non_nilpotent_count = 0;
  bool is_solvable_direct = false;
  Identification identification = Identification::None;
  std::vector<Verdict> verdicts;

  friend bool operator==(const CountsReport&, const CountsReport&) = default;
};

/// Per-class predicate flags; conjugate subgroups share them.
struct ClassProfile {
  bool supersolvable = false;
  bool nilpotent = false;
};

/// Evaluates the predicates on each class representative. `threads` only
/// changes scheduling; results are stored per class index.
std::vector<ClassProfile> class_profiles(const SubgroupLattice& lattice, unsigned threads = 1,
                                         const Bounds& bounds = {});

/// Aggregates precomputed profiles, weighting each class by its size.
CountsReport counts(const SubgroupLattice& lattice, const std::vector<ClassProfile>& profiles,
                    const Bounds& bounds = {});
CountsReport counts(const SubgroupLattice& lattice, unsigned threads = 1, const Bounds& bounds = {});
CountsReport counts(const PermGroup& G, const Bounds& bounds = {}, unsigned threads = 1);

Verdict zarrin_verdict(const CountsReport& report);
Verdict brl_verdict(const CountsReport& report);
Verdict luwang_verdict(const CountsReport& report);

/// Number of non-nilpotent subgroups listed for SL(2, q), q >= 4 a prime
/// power; cases are tried in order q = 2^s, q = 2^f + 1, q = 2^f - 1, other.
std::uint64_t dickson_nonnilpotent_reference(std::uint64_t q);

/// p^f (p^f - 1)(p^f + 1) / gcd(2, p^f - 1).
std::uint64_t psl2_order(std::uint64_t p, std::uint64_t f);
/// (q^2 + 1) q^2 (q - 1) for q = 2^(2m+1), m > 0.
std::uint64_t suzuki_order(std::uint64_t q);

/// A5: order 60 with exactly two normal subgroups. SL2_5: order 120, center
/// of order 2, a unique involution, and central quotient identified as A5.
Identification identify(const SubgroupLattice& lattice, const Bounds& bounds = {});
Identification identify(const PermGroup& G, const Bounds& bounds = {});

}  // namespace sublat
