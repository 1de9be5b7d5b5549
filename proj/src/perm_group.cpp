#include "sublat/perm_group.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <string>

#include "sublat/errors.hpp"

namespace sublat {

namespace {

std::uint64_t env_or(const char* name, std::uint64_t fallback) {
  const char* value = std::getenv(name);
  if (!value || !*value) return fallback;
  char* end = nullptr;
  unsigned long long parsed = std::strtoull(value, &end, 10);
  if (*end != '\0' || parsed == 0) return fallback;
  return parsed;
}

void require_degree(std::size_t expected, const Permutation& p, const char* what) {
  if (p.degree() != expected)
    throw DegreeMismatch(std::string(what) + ": permutation of degree " +
                         std::to_string(p.degree()) + ", expected " + std::to_string(expected));
}

void require_subgroup(const PermGroup& G, const PermGroup& H, const char* what) {
  if (G.degree() != H.degree())
    throw DegreeMismatch(std::string(what) + ": groups of different degree");
  if (!H.is_subgroup_of(G)) throw NotSubgroup(std::string(what) + ": H is not a subgroup of G");
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw BoundExceeded("group order overflows 64 bits");
  return r;
}

}  // namespace

Bounds Bounds::from_environment() {
  Bounds b;
  b.max_elements = env_or("SUBLAT_MAX_ELEMENTS", b.max_elements);
  b.max_coset_points = env_or("SUBLAT_MAX_COSETS", b.max_coset_points);
  b.max_lattice_order = env_or("SUBLAT_MAX_ORDER", b.max_lattice_order);
  return b;
}

// ---------------------------------------------------------------------------
// StabilizerChain

StabilizerChain::StabilizerChain(std::size_t degree) : degree_(degree) {
  if (degree == 0) throw ConstraintViolation("group degree must be positive");
}

StabilizerChain::StabilizerChain(std::size_t degree, std::span<const Permutation> generators)
    : StabilizerChain(degree) {
  for (const auto& g : generators) {
    require_degree(degree_, g, "group");
    extend(g);
  }
}

std::vector<Point> StabilizerChain::base() const { return base_points_; }

std::uint64_t StabilizerChain::order() const {
  std::uint64_t result = 1;
  for (const auto& level : levels_) result = checked_mul(result, level.orbit.size());
  return result;
}

std::pair<Permutation, std::size_t> StabilizerChain::sift(const Permutation& g,
                                                          std::size_t from) const {
  Permutation x = g;
  for (std::size_t l = from; l < levels_.size(); ++l) {
    const auto& level = levels_[l];
    Point b = x[level.base];
    if (!level.transversal[b]) return {std::move(x), l};
    if (b != level.base) x = x * *level.inverse_transversal[b];
  }
  return {std::move(x), levels_.size()};
}

bool StabilizerChain::contains(const Permutation& g) const {
  require_degree(degree_, g, "contains");
  return sift(g).first.is_identity();
}

void StabilizerChain::extend(const Permutation& g) {
  require_degree(degree_, g, "extend");
  if (contains(g)) return;
  bool fixes_base = std::all_of(base_points_.begin(), base_points_.end(),
                                [&](Point b) { return g[b] == b; });
  if (fixes_base) base_points_.push_back(static_cast<Point>(g.first_moved_point()));
  strong_.push_back(g);
  rebuild_levels();
  schreier_sims(levels_.size() - 1);
}

void StabilizerChain::rebuild_levels() {
  levels_.assign(base_points_.size(), Level{});
  for (std::size_t l = 0; l < base_points_.size(); ++l) {
    Level& level = levels_[l];
    level.base = base_points_[l];
    for (const auto& s : strong_) {
      bool fixes = true;
      for (std::size_t k = 0; k < l && fixes; ++k) fixes = s[base_points_[k]] == base_points_[k];
      if (fixes) level.generators.push_back(s);
    }
    level.transversal.assign(degree_, std::nullopt);
    level.inverse_transversal.assign(degree_, std::nullopt);
    level.transversal[level.base] = Permutation(degree_);
    level.inverse_transversal[level.base] = Permutation(degree_);
    level.orbit = {level.base};
    for (std::size_t head = 0; head < level.orbit.size(); ++head) {
      Point a = level.orbit[head];
      for (const auto& s : level.generators) {
        Point b = s[a];
        if (level.transversal[b]) continue;
        Permutation u = *level.transversal[a] * s;
        level.inverse_transversal[b] = inverse(u);
        level.transversal[b] = std::move(u);
        level.orbit.push_back(b);
      }
    }
  }
}

// Holt's SCHREIERSIMS: every Schreier generator of level i must strip
// through levels i+1..; a failure adds the residue as a strong generator and
// restarts from the deepest level it affects.
void StabilizerChain::schreier_sims(std::size_t start_level) {
  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(start_level);
  while (i >= 0) {
    bool added = false;
    const std::size_t li = static_cast<std::size_t>(i);
    for (std::size_t oi = 0; oi < levels_[li].orbit.size() && !added; ++oi) {
      const Level& level = levels_[li];
      Point a = level.orbit[oi];
      for (std::size_t si = 0; si < level.generators.size(); ++si) {
        const Permutation& s = level.generators[si];
        Point b = s[a];
        Permutation schreier = *level.transversal[a] * s * *level.inverse_transversal[b];
        if (schreier.is_identity()) continue;
        auto [residue, stop] = sift(schreier, li + 1);
        if (residue.is_identity()) continue;
        if (stop == base_points_.size())
          base_points_.push_back(static_cast<Point>(residue.first_moved_point()));
        strong_.push_back(std::move(residue));
        rebuild_levels();
        i = static_cast<std::ptrdiff_t>(stop);
        added = true;
        break;
      }
    }
    if (!added) --i;
  }
}

// ---------------------------------------------------------------------------
// PermGroup

PermGroup::PermGroup(std::size_t degree)
    : degree_(degree), chain_(std::make_shared<StabilizerChain>(degree)), order_(1) {}

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators) : degree_(degree) {
  auto chain = std::make_shared<StabilizerChain>(degree);
  for (auto& g : generators) {
    require_degree(degree, g, "group");
    if (g.is_identity() || chain->contains(g)) continue;
    chain->extend(g);
    generators_.push_back(std::move(g));
  }
  order_ = chain->order();
  chain_ = std::move(chain);
}

bool PermGroup::contains(const Permutation& p) const {
  require_degree(degree_, p, "contains");
  return chain_->contains(p);
}

bool PermGroup::is_subgroup_of(const PermGroup& other) const {
  if (degree_ != other.degree_) return false;
  if (other.order_ % order_ != 0) return false;
  return std::all_of(generators_.begin(), generators_.end(),
                     [&](const Permutation& g) { return other.contains(g); });
}

bool operator==(const PermGroup& a, const PermGroup& b) {
  return a.degree_ == b.degree_ && a.order_ == b.order_ && a.is_subgroup_of(b);
}

PermGroup group(std::vector<Permutation> generators, std::size_t degree) {
  return PermGroup(degree, std::move(generators));
}

std::uint64_t order(const PermGroup& G) { return G.order(); }

bool contains(const PermGroup& G, const Permutation& p) { return G.contains(p); }

std::vector<Permutation> elements(const PermGroup& G, const Bounds& bounds) {
  if (G.order() > bounds.max_elements)
    throw BoundExceeded("elements: |G| = " + std::to_string(G.order()) + " exceeds bound " +
                        std::to_string(bounds.max_elements));
  const auto& levels = G.chain().levels();
  std::vector<Permutation> result{Permutation(G.degree())};
  result.reserve(G.order());
  // g = t_{k-1} * ... * t_1 * t_0 with t_i from the level-i transversal.
  for (std::size_t l = levels.size(); l-- > 0;) {
    std::vector<Permutation> next;
    next.reserve(result.size() * levels[l].orbit.size());
    for (const auto& partial : result)
      for (Point b : levels[l].orbit) next.push_back(partial * *levels[l].transversal[b]);
    result = std::move(next);
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::uint64_t index(const PermGroup& G, const PermGroup& H) {
  require_subgroup(G, H, "index");
  return G.order() / H.order();
}

bool is_normal(const PermGroup& G, const PermGroup& H) {
  require_subgroup(G, H, "is_normal");
  for (const auto& g : G.generators())
    for (const auto& h : H.generators())
      if (!H.contains(conjugate(h, g))) return false;
  return true;
}

PermGroup normalizer(const PermGroup& G, const PermGroup& H, const Bounds& bounds) {
  require_subgroup(G, H, "normalizer");
  if (is_normal(G, H)) return G;
  StabilizerChain chain(G.degree(), H.generators());
  std::vector<Permutation> gens = H.generators();
  for (const auto& g : elements(G, bounds)) {
    if (chain.contains(g)) continue;
    bool normalizes = std::all_of(H.generators().begin(), H.generators().end(),
                                  [&](const Permutation& h) { return H.contains(conjugate(h, g)); });
    if (!normalizes) continue;
    chain.extend(g);
    gens.push_back(g);
    if (chain.order() == G.order()) break;
  }
  return PermGroup(G.degree(), std::move(gens));
}

PermGroup centralizer(const PermGroup& G, const PermGroup& H, const Bounds& bounds) {
  require_subgroup(G, H, "centralizer");
  StabilizerChain chain(G.degree());
  std::vector<Permutation> gens;
  for (const auto& g : elements(G, bounds)) {
    if (chain.contains(g)) continue;
    bool commutes = std::all_of(H.generators().begin(), H.generators().end(),
                                [&](const Permutation& h) { return h * g == g * h; });
    if (!commutes) continue;
    chain.extend(g);
    gens.push_back(g);
  }
  return PermGroup(G.degree(), std::move(gens));
}

PermGroup center(const PermGroup& G, const Bounds& bounds) { return centralizer(G, G, bounds); }

PermGroup conjugate_subgroup(const PermGroup& H, const Permutation& g) {
  require_degree(H.degree(), g, "conjugate_subgroup");
  std::vector<Permutation> gens;
  gens.reserve(H.generators().size());
  for (const auto& h : H.generators()) gens.push_back(conjugate(h, g));
  return PermGroup(H.degree(), std::move(gens));
}

PermGroup normal_closure(const PermGroup& G, std::span<const Permutation> S) {
  for (const auto& s : S)
    if (!G.contains(s)) throw NotSubgroup("normal_closure: element outside G");
  StabilizerChain chain(G.degree());
  std::vector<Permutation> gens;
  std::deque<Permutation> pending(S.begin(), S.end());
  while (!pending.empty()) {
    Permutation x = std::move(pending.front());
    pending.pop_front();
    if (chain.contains(x)) continue;
    chain.extend(x);
    for (const auto& g : G.generators()) pending.push_back(conjugate(x, g));
    gens.push_back(std::move(x));
  }
  return PermGroup(G.degree(), std::move(gens));
}

PermGroup derived_subgroup(const PermGroup& G) {
  std::vector<Permutation> commutators;
  const auto& gens = G.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      Permutation c = commutator(gens[i], gens[j]);
      if (!c.is_identity()) commutators.push_back(std::move(c));
    }
  return normal_closure(G, commutators);
}

std::uint64_t exponent(const PermGroup& G, const Bounds& bounds) {
  std::uint64_t result = 1;
  for (const auto& g : elements(G, bounds)) result = std::lcm(result, g.order());
  return result;
}

PermGroup direct_product(const PermGroup& G, const PermGroup& H) {
  const std::size_t n = G.degree() + H.degree();
  std::vector<Permutation> gens;
  for (const auto& g : G.generators()) {
    std::vector<Point> images(n);
    std::iota(images.begin(), images.end(), Point{0});
    for (std::size_t x = 0; x < G.degree(); ++x) images[x] = g[x];
    gens.emplace_back(std::move(images));
  }
  for (const auto& h : H.generators()) {
    std::vector<Point> images(n);
    std::iota(images.begin(), images.end(), Point{0});
    for (std::size_t x = 0; x < H.degree(); ++x)
      images[G.degree() + x] = static_cast<Point>(G.degree() + h[x]);
    gens.emplace_back(std::move(images));
  }
  return PermGroup(n, std::move(gens));
}

// ---------------------------------------------------------------------------
// Coset action

namespace {

// Smallest element of the right coset H*x, used as its canonical key.
Permutation coset_key(const std::vector<Permutation>& subgroup_elements, const Permutation& x) {
  Permutation best = subgroup_elements.front() * x;
  for (std::size_t i = 1; i < subgroup_elements.size(); ++i) {
    Permutation y = subgroup_elements[i] * x;
    if (y < best) best = std::move(y);
  }
  return best;
}

}  // namespace

CosetAction::CosetAction(const PermGroup& G, const PermGroup& H, const Bounds& bounds) {
  require_subgroup(G, H, "coset_action");
  const std::uint64_t n = G.order() / H.order();
  if (n > bounds.max_coset_points)
    throw BoundExceeded("coset_action: index " + std::to_string(n) + " exceeds bound " +
                        std::to_string(bounds.max_coset_points));
  if (n > 0xFFFF) throw BoundExceeded("coset_action: index exceeds the maximal degree");
  subgroup_elements_ = elements(H, bounds);

  representatives_.push_back(Permutation(G.degree()));
  coset_index_.emplace(coset_key(subgroup_elements_, representatives_.front()), 0);
  std::vector<std::vector<Point>> images(G.generators().size());
  for (std::size_t head = 0; head < representatives_.size(); ++head) {
    for (std::size_t gi = 0; gi < G.generators().size(); ++gi) {
      Permutation next = representatives_[head] * G.generators()[gi];
      Permutation key = coset_key(subgroup_elements_, next);
      auto [it, inserted] = coset_index_.emplace(std::move(key), representatives_.size());
      if (inserted) representatives_.push_back(std::move(next));
      images[gi].push_back(static_cast<Point>(it->second));
    }
  }
  if (representatives_.size() != n)
    throw InvariantViolation("coset_action: orbit size disagrees with the index");
  std::vector<Permutation> gens;
  for (auto& im : images) gens.emplace_back(std::move(im));
  image_ = PermGroup(n, std::move(gens));
}

std::size_t CosetAction::coset_of(const Permutation& g) const {
  auto it = coset_index_.find(coset_key(subgroup_elements_, g));
  if (it == coset_index_.end()) throw NotSubgroup("coset_action: element outside G");
  return it->second;
}

Permutation CosetAction::act(const Permutation& g) const {
  std::vector<Point> images(representatives_.size());
  for (std::size_t i = 0; i < representatives_.size(); ++i)
    images[i] = static_cast<Point>(coset_of(representatives_[i] * g));
  return Permutation(std::move(images));
}

PermGroup coset_action(const PermGroup& G, const PermGroup& H, const Bounds& bounds) {
  return CosetAction(G, H, bounds).image();
}

}  // namespace sublat
