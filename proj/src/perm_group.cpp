#include "sylowlab/perm_group.hpp"

#include <algorithm>
#include <stdexcept>

namespace sylowlab {

Limits& limits() {
  static Limits instance;
  return instance;
}

namespace {

std::atomic<std::uint64_t> next_token{1};

}  // namespace

// ---------------------------------------------------------------------------
// Enumeration

Enumeration::Enumeration(std::vector<Permutation> sorted_elements, const std::vector<Permutation>& generators)
    : elements_(std::move(sorted_elements)) {
  const std::size_t n = elements_.size();
  index_.reserve(n * 2);
  for (std::size_t i = 0; i < n; ++i) index_.emplace(elements_[i], static_cast<ElementId>(i));

  inverse_.resize(n);
  orders_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    inverse_[i] = index_.at(elements_[i].inverse());
    orders_[i] = elements_[i].order();
  }

  if (n > 1 && n <= limits().table_cap) {
    // Generator columns by hashing, the rest by walking a BFS spanning tree:
    // a * b = (a * parent(b)) * s when b = parent(b) * s.
    std::vector<ElementId> gens;
    for (const auto& g : generators)
      if (!g.is_identity()) gens.push_back(index_.at(g));
    std::vector<std::vector<ElementId>> gen_col(gens.size(), std::vector<ElementId>(n));
    for (std::size_t s = 0; s < gens.size(); ++s)
      for (std::size_t a = 0; a < n; ++a) gen_col[s][a] = slow_mul(static_cast<ElementId>(a), gens[s]);

    std::vector<ElementId> bfs{0};
    std::vector<ElementId> parent(n, 0);
    std::vector<std::uint32_t> via(n, 0);
    std::vector<bool> seen(n, false);
    seen[0] = true;
    for (std::size_t k = 0; k < bfs.size(); ++k) {
      for (std::size_t s = 0; s < gens.size(); ++s) {
        ElementId y = gen_col[s][bfs[k]];
        if (!seen[y]) {
          seen[y] = true;
          parent[y] = bfs[k];
          via[y] = static_cast<std::uint32_t>(s);
          bfs.push_back(y);
        }
      }
    }
    table_.assign(n * n, 0);
    for (std::size_t a = 0; a < n; ++a) {
      ElementId* row = &table_[a * n];
      row[0] = static_cast<ElementId>(a);
      for (std::size_t k = 1; k < bfs.size(); ++k) {
        ElementId b = bfs[k];
        row[b] = gen_col[via[b]][row[parent[b]]];
      }
    }
  }
}

std::optional<ElementId> Enumeration::index_of(const Permutation& g) const {
  auto it = index_.find(g);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ElementId Enumeration::slow_mul(ElementId a, ElementId b) const {
  return index_.at(elements_[a] * elements_[b]);
}

ElementId Enumeration::pow(ElementId a, std::uint64_t e) const {
  e %= orders_[a];
  ElementId result = 0;
  ElementId base = a;
  while (e) {
    if (e & 1U) result = mul(result, base);
    base = mul(base, base);
    e >>= 1U;
  }
  return result;
}

// ---------------------------------------------------------------------------
// PermGroup

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators, std::string name)
    : degree_(degree), generators_(std::move(generators)), name_(std::move(name)), token_(next_token++) {}

std::shared_ptr<const PermGroup> PermGroup::build(std::size_t degree, std::vector<Permutation> generators,
                                                  std::string name) {
  if (degree == 0) throw std::invalid_argument("group degree must be positive");
  for (const auto& g : generators)
    if (g.degree() != degree) throw std::invalid_argument("generator degree mismatch");
  std::shared_ptr<PermGroup> group(new PermGroup(degree, std::move(generators), std::move(name)));
  group->schreier_sims();
  return group;
}

std::vector<Point> PermGroup::base() const {
  std::vector<Point> b;
  for (const auto& l : levels_) b.push_back(l.base_point);
  return b;
}

void PermGroup::rebuild_orbit(Level& level) const {
  level.orbit_slot.assign(degree_, -1);
  level.orbit = {level.base_point};
  level.transversal = {Permutation(degree_)};
  level.transversal_inv = {Permutation(degree_)};
  level.orbit_slot[level.base_point] = 0;
  for (std::size_t k = 0; k < level.orbit.size(); ++k) {
    for (const auto& s : level.generators) {
      Point img = s[level.orbit[k]];
      if (level.orbit_slot[img] >= 0) continue;
      level.orbit_slot[img] = static_cast<int>(level.orbit.size());
      level.orbit.push_back(img);
      level.transversal.push_back(level.transversal[k] * s);
      level.transversal_inv.push_back(level.transversal.back().inverse());
    }
  }
}

std::pair<Permutation, std::size_t> PermGroup::strip(Permutation g, std::size_t from) const {
  for (std::size_t l = from; l < levels_.size(); ++l) {
    const Level& level = levels_[l];
    int slot = level.orbit_slot[g[level.base_point]];
    if (slot < 0) return {std::move(g), l};
    g = g * level.transversal_inv[static_cast<std::size_t>(slot)];
  }
  return {std::move(g), levels_.size()};
}

void PermGroup::schreier_sims() {
  std::vector<Permutation> strong;
  for (const auto& g : generators_)
    if (!g.is_identity() && std::find(strong.begin(), strong.end(), g) == strong.end()) strong.push_back(g);
  if (strong.empty()) {
    order_ = 1;
    return;
  }

  auto fixes_base_prefix = [&](const Permutation& g, std::size_t upto) {
    for (std::size_t l = 0; l < upto; ++l)
      if (g[levels_[l].base_point] != levels_[l].base_point) return false;
    return true;
  };
  auto add_level = [&](Point bp) {
    Level level;
    level.base_point = bp;
    levels_.push_back(std::move(level));
  };
  auto check_cap = [&] {
    std::uint64_t bound = 1;
    for (const auto& l : levels_) {
      if (bound > limits().bsgs_order_cap / std::max<std::size_t>(l.orbit.size(), 1))
        throw CapExceeded("group order exceeds the BSGS cap of " + std::to_string(limits().bsgs_order_cap));
      bound *= std::max<std::size_t>(l.orbit.size(), 1);
    }
  };

  for (const auto& s : strong)
    if (fixes_base_prefix(s, levels_.size())) add_level(static_cast<Point>(s.first_moved_point()));
  for (std::size_t l = 0; l < levels_.size(); ++l) {
    for (const auto& s : strong)
      if (fixes_base_prefix(s, l)) levels_[l].generators.push_back(s);
    rebuild_orbit(levels_[l]);
  }
  check_cap();

  std::size_t i = levels_.size();
  while (i > 0) {
    std::size_t cur = i - 1;
    bool jumped = false;
    for (std::size_t k = 0; k < levels_[cur].orbit.size() && !jumped; ++k) {
      for (std::size_t gi = 0; gi < levels_[cur].generators.size(); ++gi) {
        const Level& level = levels_[cur];
        const Permutation& s = level.generators[gi];
        Point image = s[level.orbit[k]];
        Permutation schreier =
            level.transversal[k] * s * level.transversal_inv[static_cast<std::size_t>(level.orbit_slot[image])];
        if (schreier.is_identity()) continue;
        auto [residue, depth] = strip(std::move(schreier), cur + 1);
        if (residue.is_identity()) continue;
        if (depth == levels_.size()) add_level(static_cast<Point>(residue.first_moved_point()));
        for (std::size_t l = cur + 1; l <= depth; ++l) {
          levels_[l].generators.push_back(residue);
          rebuild_orbit(levels_[l]);
        }
        check_cap();
        i = depth + 1;
        jumped = true;
        break;
      }
    }
    if (!jumped) --i;
  }

  order_ = 1;
  for (const auto& l : levels_) order_ *= l.orbit.size();
}

bool PermGroup::contains(const Permutation& g) const {
  if (g.degree() != degree_) throw std::invalid_argument("degree mismatch in membership test");
  return strip(g, 0).first.is_identity();
}

const Enumeration& PermGroup::enumeration() const {
  std::call_once(enum_once_, [this] {
    if (order_ > limits().enumeration_cap)
      throw CapExceeded("group of order " + std::to_string(order_) + " exceeds the enumeration cap of " +
                        std::to_string(limits().enumeration_cap));
    std::vector<Permutation> elems{Permutation(degree_)};
    for (std::size_t l = levels_.size(); l-- > 0;) {
      std::vector<Permutation> next;
      next.reserve(elems.size() * levels_[l].transversal.size());
      for (const auto& x : elems)
        for (const auto& u : levels_[l].transversal) next.push_back(x * u);
      elems = std::move(next);
    }
    std::sort(elems.begin(), elems.end());
    enumeration_ = std::make_unique<Enumeration>(std::move(elems), generators_);
    has_enumeration_ = true;
  });
  return *enumeration_;
}

bool PermGroup::enumerated() const { return has_enumeration_; }

}  // namespace sylowlab
