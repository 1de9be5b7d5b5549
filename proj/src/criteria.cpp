#include "sublat/criteria.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <exception>
#include <mutex>
#include <numeric>
#include <thread>

#include "sublat/constructors.hpp"
#include "sublat/errors.hpp"
#include "sublat/series.hpp"

namespace sublat {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw ConstraintViolation("formula value overflows 64 bits");
  return r;
}

bool is_power_of_two(std::uint64_t n) { return n && (n & (n - 1)) == 0; }

// q = p^f for a prime p and f >= 1.
bool is_prime_power(std::uint64_t q) {
  if (q < 2) return false;
  auto primes = prime_divisors(q);
  return primes.size() == 1;
}

Verdict make_verdict(Verdict::Criterion criterion, std::uint64_t threshold, std::uint64_t observed,
                     const CountsReport& report) {
  Verdict v;
  v.criterion = criterion;
  v.threshold = threshold;
  v.observed = observed;
  v.implies_solvable = observed < threshold || (observed == threshold && report.is_solvable_direct);
  if (observed == threshold && !report.is_solvable_direct) v.boundary = report.identification;
  return v;
}

}  // namespace

std::string to_string(Identification id) {
  switch (id) {
    case Identification::A5: return "A5";
    case Identification::SL2_5: return "SL2_5";
    case Identification::None: break;
  }
  return "none";
}

Identification identification_from_string(const std::string& s) {
  if (s == "A5") return Identification::A5;
  if (s == "SL2_5") return Identification::SL2_5;
  if (s == "none") return Identification::None;
  throw ConstraintViolation("unknown identification '" + s + "'");
}

std::string to_string(Verdict::Criterion c) {
  switch (c) {
    case Verdict::Criterion::ZarrinNonNilpotent: return "zarrin_nonnilpotent";
    case Verdict::Criterion::BrlNonSupersolvable: return "brl_nonsupersolvable";
    case Verdict::Criterion::LuWangSupersolvable: return "luwang_supersolvable";
  }
  return "?";
}

Verdict::Criterion criterion_from_string(const std::string& s) {
  if (s == "zarrin_nonnilpotent") return Verdict::Criterion::ZarrinNonNilpotent;
  if (s == "brl_nonsupersolvable") return Verdict::Criterion::BrlNonSupersolvable;
  if (s == "luwang_supersolvable") return Verdict::Criterion::LuWangSupersolvable;
  throw ConstraintViolation("unknown criterion '" + s + "'");
}

std::vector<ClassProfile> class_profiles(const SubgroupLattice& lattice, unsigned threads,
                                         const Bounds& bounds) {
  const std::size_t n = lattice.classes().size();
  std::vector<ClassProfile> profiles(n);
  auto evaluate = [&](std::size_t i) {
    PermGroup H = lattice.representative(i);
    profiles[i] = ClassProfile{is_supersolvable(H, bounds), is_nilpotent(H, bounds)};
  };

  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) evaluate(i);
    return profiles;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> workers;
  for (unsigned t = 0; t < threads; ++t) {
    workers.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < n;) {
        try {
          evaluate(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& w : workers) w.join();
  if (failure) std::rethrow_exception(failure);
  return profiles;
}

CountsReport counts(const SubgroupLattice& lattice, unsigned threads, const Bounds& bounds) {
  return counts(lattice, class_profiles(lattice, threads, bounds), bounds);
}

CountsReport counts(const SubgroupLattice& lattice, const std::vector<ClassProfile>& profiles,
                    const Bounds& bounds) {
  if (profiles.size() != lattice.classes().size())
    throw InvariantViolation("counts: one profile per class is required");
  CountsReport r;
  for (std::size_t i = 0; i < profiles.size(); ++i) {
    const std::uint64_t size = lattice.classes()[i].members.size();
    r.total_subgroups += size;
    (profiles[i].supersolvable ? r.supersolvable_count : r.non_supersolvable_count) += size;
    (profiles[i].nilpotent ? r.nilpotent_count : r.non_nilpotent_count) += size;
  }
  r.is_solvable_direct = is_solvable(lattice.group());
  r.identification = identify(lattice, bounds);
  r.verdicts = {zarrin_verdict(r), brl_verdict(r), luwang_verdict(r)};
  return r;
}

CountsReport counts(const PermGroup& G, const Bounds& bounds, unsigned threads) {
  return counts(SubgroupLattice(G, bounds), threads, bounds);
}

Verdict zarrin_verdict(const CountsReport& report) {
  return make_verdict(Verdict::Criterion::ZarrinNonNilpotent, 22, report.non_nilpotent_count, report);
}

Verdict brl_verdict(const CountsReport& report) {
  return make_verdict(Verdict::Criterion::BrlNonSupersolvable, 6, report.non_supersolvable_count,
                      report);
}

Verdict luwang_verdict(const CountsReport& report) {
  Verdict v =
      make_verdict(Verdict::Criterion::LuWangSupersolvable, 53, report.supersolvable_count, report);
  // Only A5 sits on this boundary.
  if (v.boundary == Identification::SL2_5) v.boundary = Identification::None;
  return v;
}

std::uint64_t dickson_nonnilpotent_reference(std::uint64_t q) {
  if (q < 4 || !is_prime_power(q))
    throw ConstraintViolation("dickson reference: q = " + std::to_string(q) +
                              " must be a prime power >= 4");
  const std::uint64_t q2 = checked_mul(q, q);
  if (is_power_of_two(q)) return q2 + 1;
  if (is_power_of_two(q - 1)) return (q2 - q + 2) / 2;
  if (is_power_of_two(q + 1)) return (q2 + q + 2) / 2;
  return q2 + 1;
}

std::uint64_t psl2_order(std::uint64_t p, std::uint64_t f) {
  if (!is_prime(p)) throw ConstraintViolation("psl2_order: p = " + std::to_string(p) + " is not prime");
  if (f < 1) throw ConstraintViolation("psl2_order: f must be >= 1");
  std::uint64_t q = 1;
  for (std::uint64_t i = 0; i < f; ++i) q = checked_mul(q, p);
  return checked_mul(checked_mul(q, q - 1), q + 1) / std::gcd<std::uint64_t>(2, q - 1);
}

std::uint64_t suzuki_order(std::uint64_t q) {
  // q = 2^(2m+1) with m > 0: an odd power of two, at least 8.
  bool valid = is_power_of_two(q) && q >= 8 && (std::countr_zero(q) % 2 == 1);
  if (!valid)
    throw ConstraintViolation("suzuki_order: q = " + std::to_string(q) +
                              " is not 2^(2m+1) with m > 0");
  const std::uint64_t q2 = checked_mul(q, q);
  return checked_mul(checked_mul(q2 + 1, q2), q - 1);
}

Identification identify(const SubgroupLattice& lattice, const Bounds& bounds) {
  const PermGroup& G = lattice.group();
  if (G.order() == 60) {
    auto normal = std::count_if(lattice.classes().begin(), lattice.classes().end(),
                                [](const auto& c) { return c.members.size() == 1; });
    return normal == 2 ? Identification::A5 : Identification::None;
  }
  if (G.order() == 120) {
    PermGroup Z = center(G, bounds);
    if (Z.order() != 2) return Identification::None;
    const auto& table = lattice.table();
    std::size_t involutions = 0;
    for (std::uint32_t x = 0; x < table.size(); ++x) involutions += table.element_order(x) == 2;
    if (involutions != 1) return Identification::None;
    PermGroup quotient = coset_action(G, Z, bounds);
    return identify(quotient, bounds) == Identification::A5 ? Identification::SL2_5
                                                            : Identification::None;
  }
  return Identification::None;
}

Identification identify(const PermGroup& G, const Bounds& bounds) {
  if (G.order() != 60 && G.order() != 120) return Identification::None;
  return identify(SubgroupLattice(G, bounds), bounds);
}

}  // namespace sublat
