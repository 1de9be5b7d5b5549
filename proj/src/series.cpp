#include "sublat/series.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "sublat/errors.hpp"

namespace sublat {

namespace {

bool is_power_of(std::uint64_t n, std::uint64_t p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

void require_prime(std::uint64_t p, const char* what) {
  bool prime = p >= 2;
  for (std::uint64_t d = 2; prime && d * d <= p; ++d) prime = p % d != 0;
  if (!prime) throw ConstraintViolation(std::string(what) + ": " + std::to_string(p) + " is not prime");
}

// Powers x^0 .. x^(k-1) of an element of order k.
std::vector<Permutation> cyclic_powers(const Permutation& x) {
  std::vector<Permutation> powers{Permutation(x.degree())};
  for (Permutation y = x; !y.is_identity(); y = y * x) powers.push_back(y);
  return powers;
}

}  // namespace

std::vector<PermGroup> derived_series_groups(const PermGroup& G) {
  std::vector<PermGroup> series{G};
  while (!series.back().is_trivial()) {
    PermGroup next = derived_subgroup(series.back());
    bool stable = next.order() == series.back().order();
    series.push_back(std::move(next));
    if (stable) break;
  }
  return series;
}

SeriesReport derived_series(const PermGroup& G) {
  SeriesReport report;
  report.kind = SeriesReport::Kind::Derived;
  for (const auto& H : derived_series_groups(G)) report.terms.push_back(H.order());
  report.terminated = report.terms.back() == 1;
  return report;
}

std::vector<PermGroup> upper_central_series_groups(const PermGroup& G, const Bounds& bounds) {
  std::vector<PermGroup> series{PermGroup(G.degree())};
  while (series.back().order() != G.order()) {
    const PermGroup& current = series.back();
    CosetAction action(G, current, bounds);
    PermGroup quotient_center = center(action.image(), bounds);
    StabilizerChain chain(G.degree(), current.generators());
    std::vector<Permutation> gens = current.generators();
    if (!quotient_center.is_trivial()) {
      for (const auto& g : elements(G, bounds)) {
        if (chain.contains(g)) continue;
        if (!quotient_center.contains(action.act(g))) continue;
        chain.extend(g);
        gens.push_back(g);
      }
    }
    PermGroup next(G.degree(), std::move(gens));
    bool stable = next.order() == current.order();
    series.push_back(std::move(next));
    if (stable) break;
  }
  return series;
}

SeriesReport upper_central_series(const PermGroup& G, const Bounds& bounds) {
  SeriesReport report;
  report.kind = SeriesReport::Kind::UpperCentral;
  for (const auto& Z : upper_central_series_groups(G, bounds)) report.terms.push_back(Z.order());
  report.terminated = report.terms.back() == G.order();
  return report;
}

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t part = 1;
  while (n % p == 0) {
    n /= p;
    part *= p;
  }
  return part;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> primes;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    primes.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) primes.push_back(n);
  return primes;
}

PermGroup sylow(const PermGroup& G, std::uint64_t p, const Bounds& bounds) {
  require_prime(p, "sylow");
  const std::uint64_t target = p_part(G.order(), p);
  PermGroup P(G.degree());
  while (P.order() < target) {
    PermGroup N = normalizer(G, P, bounds);
    bool grown = false;
    for (const auto& g : elements(N, bounds)) {
      if (g.is_identity() || !is_power_of(g.order(), p) || P.contains(g)) continue;
      std::vector<Permutation> gens = P.generators();
      gens.push_back(g);
      P = PermGroup(G.degree(), std::move(gens));
      grown = true;
      break;
    }
    if (!grown) throw InvariantViolation("sylow: normalizer has no p-element outside P");
  }
  if (P.order() != target) throw InvariantViolation("sylow: overshot the p-part");
  return P;
}

std::uint64_t sylow_count(const PermGroup& G, std::uint64_t p, const Bounds& bounds) {
  PermGroup P = sylow(G, p, bounds);
  return index(G, normalizer(G, P, bounds));
}

bool is_abelian(const PermGroup& G) {
  const auto& gens = G.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (gens[i] * gens[j] != gens[j] * gens[i]) return false;
  return true;
}

bool is_cyclic(const PermGroup& G, const Bounds& bounds) {
  if (G.generators().size() <= 1) return true;
  if (!is_abelian(G)) return false;
  return exponent(G, bounds) == G.order();
}

bool is_nilpotent(const PermGroup& G, const Bounds& bounds) {
  if (is_abelian(G)) return true;
  for (std::uint64_t p : prime_divisors(G.order()))
    if (!is_normal(G, sylow(G, p, bounds))) return false;
  return true;
}

bool is_solvable(const PermGroup& G) { return derived_series(G).terminated; }

bool is_supersolvable(const PermGroup& G, const Bounds& bounds) {
  if (G.is_trivial() || is_abelian(G)) return true;
  std::set<Permutation> tried;
  for (const auto& x : elements(G, bounds)) {
    if (x.is_identity() || tried.contains(x)) continue;
    const auto primes = prime_divisors(x.order());
    if (primes.size() != 1 || primes.front() != x.order()) continue;
    std::vector<Permutation> powers = cyclic_powers(x);
    tried.insert(powers.begin(), powers.end());
    std::sort(powers.begin(), powers.end());
    bool normal = std::all_of(G.generators().begin(), G.generators().end(), [&](const Permutation& g) {
      return std::binary_search(powers.begin(), powers.end(), conjugate(x, g));
    });
    if (!normal) continue;
    PermGroup N(G.degree(), {x});
    return is_supersolvable(coset_action(G, N, bounds), bounds);
  }
  return false;
}

}  // namespace sublat
