#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_set>
#include <utility>
#include <vector>

#include "symcay/errors.hpp"
#include "symcay/limits.hpp"
#include "symcay/permutation.hpp"

namespace symcay {
namespace detail {

// Deterministic Schreier-Sims stabilizer chain with explicit transversals.
// Base points: an optional forced prefix, then the smallest point moved by
// each residue that gets stuck off the end of the chain.
class StabChain {
 public:
  StabChain(int degree, const std::vector<Permutation>& gens,
            const std::vector<int>& base_prefix)
      : degree_(degree) {
    for (int b : base_prefix) push_level(b);
    std::vector<Permutation> todo;
    for (const auto& g : gens)
      if (!g.is_identity()) todo.push_back(g);
    for (const auto& g : todo) {
      bool fixes_all = true;
      for (const auto& lv : levels_)
        if (g[lv.beta] != lv.beta) fixes_all = false;
      if (fixes_all) push_level(g.first_moved());
    }
    for (const auto& g : todo) place(g);
    for (int i = static_cast<int>(levels_.size()) - 1; i >= 0; --i)
      complete(static_cast<std::size_t>(i));
  }

  int degree() const { return degree_; }
  std::size_t num_levels() const { return levels_.size(); }
  std::size_t level_count() const { return levels_.size(); }
  int base_point(std::size_t level) const { return levels_[level].beta; }
  int level_beta(std::size_t level) const { return levels_[level].beta; }
  const std::vector<int>& level_orbit(std::size_t level) const {
    return levels_[level].orbit;
  }
  // Transversal element mapping the level's base point to the given orbit
  // point; the point must lie in the level orbit.
  const Permutation& level_transversal(std::size_t level, int point) const {
    return levels_[level].u[static_cast<std::size_t>(levels_[level].where[point])];
  }
  std::size_t orbit_size(std::size_t level) const {
    return levels_[level].orbit.size();
  }

  std::uint64_t order() const {
    std::uint64_t o = 1;
    for (const auto& lv : levels_) o *= lv.orbit.size();
    return o;
  }

  // Sift g through levels [from, end); returns the residue and the level at
  // which sifting stopped (== num_levels() when it ran off the chain).
  std::pair<Permutation, std::size_t> strip(Permutation g,
                                            std::size_t from) const {
    for (std::size_t i = from; i < levels_.size(); ++i) {
      if (g.is_identity()) return {std::move(g), i};
      const Level& lv = levels_[i];
      int q = g[lv.beta];
      if (lv.where[q] < 0) return {std::move(g), i};
      g = g * lv.u[lv.where[q]].inverse();
    }
    return {std::move(g), levels_.size()};
  }

  bool contains(const Permutation& g) const {
    return strip(g, 0).first.is_identity();
  }

  // Generators of the stabilizer of the level-0 base point (valid chain
  // levels below the first), i.e. all strong generators of level >= 1.
  std::vector<Permutation> level_generators(std::size_t level) const {
    std::vector<Permutation> out;
    if (level >= levels_.size()) return out;
    for (int idx : levels_[level].gen_idx) out.push_back(strong_[idx]);
    return out;
  }

  // All group elements, each as u_{L-1} * ... * u_0; caller sorts.
  std::vector<Permutation> elements() const {
    std::vector<Permutation> acc{Permutation::identity(degree_)};
    for (int i = static_cast<int>(levels_.size()) - 1; i >= 0; --i) {
      std::vector<Permutation> next;
      next.reserve(acc.size() * levels_[i].orbit.size());
      for (const auto& e : acc)
        for (const auto& u : levels_[i].u) next.push_back(e * u);
      acc = std::move(next);
    }
    return acc;
  }

 private:
  struct Level {
    int beta = 0;
    std::vector<int> gen_idx;     // indices into strong_
    std::vector<int> orbit;       // BFS order, orbit[0] == beta
    std::vector<int> where;       // point -> orbit index or -1
    std::vector<Permutation> u;   // transversal, u[i] maps beta -> orbit[i]
  };

  int degree_;
  std::vector<Permutation> strong_;
  std::vector<Level> levels_;

  void push_level(int beta) {
    Level lv;
    lv.beta = beta;
    levels_.push_back(std::move(lv));
    rebuild_orbit(levels_.size() - 1);
  }

  // Insert g into every level whose base prefix it fixes.
  void place(const Permutation& g) {
    int idx = static_cast<int>(strong_.size());
    strong_.push_back(g);
    for (auto& lv : levels_) {
      lv.gen_idx.push_back(idx);
      if (g[lv.beta] != lv.beta) break;
    }
  }

  void rebuild_orbit(std::size_t li) {
    Level& lv = levels_[li];
    lv.orbit.assign(1, lv.beta);
    lv.where.assign(degree_, -1);
    lv.where[lv.beta] = 0;
    lv.u.assign(1, Permutation::identity(degree_));
    for (std::size_t oi = 0; oi < lv.orbit.size(); ++oi) {
      int p = lv.orbit[oi];
      for (int gi : lv.gen_idx) {
        int q = strong_[gi][p];
        if (lv.where[q] < 0) {
          lv.where[q] = static_cast<int>(lv.orbit.size());
          lv.orbit.push_back(q);
          lv.u.push_back(lv.u[oi] * strong_[gi]);
        }
      }
    }
  }

  // Verify level li's Schreier generators sift to the identity through the
  // (already complete) deeper levels, extending the chain as needed.
  void complete(std::size_t li) {
    while (true) {
      rebuild_orbit(li);
      Level& lv = levels_[li];
      bool added = false;
      for (std::size_t oi = 0; oi < lv.orbit.size() && !added; ++oi) {
        for (std::size_t sgi = 0; sgi < lv.gen_idx.size() && !added; ++sgi) {
          const Permutation& s = strong_[lv.gen_idx[sgi]];
          int p = lv.orbit[oi];
          int q = s[p];
          Permutation sg = lv.u[oi] * s * lv.u[lv.where[q]].inverse();
          if (sg.is_identity()) continue;
          auto [res, m] = strip(std::move(sg), li + 1);
          if (res.is_identity()) continue;
          if (m == levels_.size()) push_level(res.first_moved());
          place_from(res, li + 1, m);
          for (std::size_t k = m;; --k) {
            complete(k);
            if (k == li + 1) break;
          }
          added = true;
        }
      }
      if (!added) return;
    }
  }

  // Insert res into levels [0, upto]; it fixes the base prefix of each.
  void place_from(const Permutation& res, std::size_t, std::size_t upto) {
    int idx = static_cast<int>(strong_.size());
    strong_.push_back(res);
    for (std::size_t k = 0; k <= upto && k < levels_.size(); ++k)
      levels_[k].gen_idx.push_back(idx);
  }
};

}  // namespace detail

// Finitely generated permutation group with a lazily built stabilizer chain.
// Value type; copies share the underlying (immutable once built) chain.
class PermGroup {
 public:
  PermGroup() : PermGroup(0) {}

  explicit PermGroup(int degree) : impl_(std::make_shared<Impl>()) {
    impl_->degree = degree;
  }

  PermGroup(int degree, std::vector<Permutation> gens)
      : impl_(std::make_shared<Impl>()) {
    impl_->degree = degree;
    for (auto& g : gens) {
      if (g.degree() != degree)
        throw hypothesis_error("generator degree mismatch: " +
                               std::to_string(g.degree()) + " vs " +
                               std::to_string(degree));
      if (g.is_identity()) continue;
      bool dup = false;
      for (const auto& h : impl_->gens) dup = dup || h == g;
      if (!dup) impl_->gens.push_back(std::move(g));
    }
  }

  // Extends generators to a common degree; convenience for text surfaces.
  static PermGroup generated(std::vector<Permutation> gens, int min_degree = 0) {
    int degree = min_degree;
    for (const auto& g : gens) degree = std::max(degree, g.degree());
    for (auto& g : gens) g = g.extended(degree);
    return PermGroup(degree, std::move(gens));
  }

  int degree() const { return impl_->degree; }
  const std::vector<Permutation>& generators() const { return impl_->gens; }
  bool is_trivial() const { return impl_->gens.empty(); }

  // Forces the first base points of the chain (must precede first chain use).
  PermGroup with_base_prefix(std::vector<int> prefix) const {
    PermGroup out(*this);
    out.impl_ = std::make_shared<Impl>();
    out.impl_->degree = impl_->degree;
    out.impl_->gens = impl_->gens;
    out.impl_->known_order = impl_->known_order;
    out.impl_->base_prefix = std::move(prefix);
    return out;
  }

  // Records an externally established order (e.g. from a faithful re-action)
  // so that order() does not need a chain on a large domain.
  PermGroup with_known_order(std::uint64_t order) const {
    PermGroup out = with_base_prefix(impl_->base_prefix);
    out.impl_->known_order = order;
    return out;
  }

  // Generator-wise conjugate g^-1 * <gens> * g; same order.
  PermGroup conjugated_by(const Permutation& g) const {
    std::vector<Permutation> gens;
    gens.reserve(impl_->gens.size());
    for (const auto& s : impl_->gens) gens.push_back(s.conjugated_by(g));
    PermGroup out(degree(), std::move(gens));
    if (impl_->known_order) out.impl_->known_order = impl_->known_order;
    return out;
  }

  std::vector<int> orbit(int point) const {
    if (point < 0 || point >= degree())
      throw hypothesis_error("point " + std::to_string(point) +
                             " outside domain of degree " +
                             std::to_string(degree()));
    std::vector<int> orb{point};
    std::vector<char> seen(degree(), 0);
    seen[point] = 1;
    for (std::size_t i = 0; i < orb.size(); ++i)
      for (const auto& g : impl_->gens) {
        int q = g[orb[i]];
        if (!seen[q]) {
          seen[q] = 1;
          orb.push_back(q);
        }
      }
    return orb;
  }

  // Orbits in increasing order of their minimal points; each orbit sorted.
  std::vector<std::vector<int>> orbits() const {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(degree(), 0);
    for (int p = 0; p < degree(); ++p) {
      if (seen[p]) continue;
      auto orb = orbit(p);
      for (int q : orb) seen[q] = 1;
      std::sort(orb.begin(), orb.end());
      out.push_back(std::move(orb));
    }
    return out;
  }

  // Element of the group mapping `from` to `to`, if in the same orbit.
  std::optional<Permutation> orbit_witness(int from, int to) const {
    std::vector<int> orb{from};
    std::vector<int> seen(degree(), -1);
    std::vector<Permutation> wit{Permutation::identity(degree())};
    seen[from] = 0;
    for (std::size_t i = 0; i < orb.size(); ++i) {
      if (orb[i] == to) return wit[i];
      for (const auto& g : impl_->gens) {
        int q = g[orb[i]];
        if (seen[q] < 0) {
          seen[q] = static_cast<int>(orb.size());
          orb.push_back(q);
          wit.push_back(wit[i] * g);
        }
      }
    }
    if (seen[to] >= 0) return wit[seen[to]];
    return std::nullopt;
  }

  std::uint64_t order() const {
    if (impl_->known_order) return *impl_->known_order;
    return chain().order();
  }

  // Order recomputed from the stabilizer chain, ignoring any recorded order;
  // used to cross-check externally supplied orders.
  std::uint64_t chain_order() const { return chain().order(); }

  bool contains(const Permutation& p) const {
    if (p.degree() != degree())
      throw hypothesis_error("degree mismatch in membership test");
    return chain().contains(p);
  }

  bool is_subgroup_of(const PermGroup& g) const {
    for (const auto& s : generators())
      if (!g.contains(s)) return false;
    return true;
  }

  // All elements, sorted lexicographically by image array.
  std::vector<Permutation> elements(std::uint64_t bound = 0) const {
    if (bound == 0) bound = limits().max_group_order;
    if (order() > bound)
      throw bound_error("group order " + std::to_string(order()) +
                        " exceeds enumeration bound " + std::to_string(bound));
    auto elems = chain().elements();
    std::sort(elems.begin(), elems.end());
    return elems;
  }

  // Stabilizer of a point, from a chain based at that point.
  PermGroup point_stabilizer(int point) const {
    detail::StabChain ch(degree(), impl_->gens, {point});
    return PermGroup(degree(), ch.level_generators(1));
  }

  const detail::StabChain& chain() const {
    std::call_once(impl_->chain_once, [this] {
      impl_->chain = std::make_unique<detail::StabChain>(
          impl_->degree, impl_->gens, impl_->base_prefix);
    });
    return *impl_->chain;
  }

 private:
  struct Impl {
    int degree = 0;
    std::vector<Permutation> gens;
    std::optional<std::uint64_t> known_order;
    std::vector<int> base_prefix;
    mutable std::once_flag chain_once;
    mutable std::unique_ptr<const detail::StabChain> chain;
  };

  std::shared_ptr<Impl> impl_;
};

// True iff h is normalized by every generator of x (h, x on one domain).
inline bool is_normal_in(const PermGroup& h, const PermGroup& x) {
  for (const auto& g : x.generators())
    for (const auto& s : h.generators())
      if (!h.contains(s.conjugated_by(g))) return false;
  return true;
}

// Largest subgroup of h normal in x. Requires h small enough to enumerate.
inline PermGroup core(const PermGroup& x, const PermGroup& h) {
  for (const auto& s : h.generators())
    if (!x.contains(s))
      throw hypothesis_error("core: h is not a subgroup of x");
  auto elems = h.elements(limits().max_brute_order);
  std::unordered_set<Permutation, PermutationHash> keep(elems.begin(),
                                                        elems.end());
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& g : x.generators()) {
      Permutation ginv = g.inverse();
      std::unordered_set<Permutation, PermutationHash> next;
      for (const auto& e : keep)
        if (keep.count(e.conjugated_by(ginv))) next.insert(e);
      if (next.size() != keep.size()) {
        keep = std::move(next);
        changed = true;
      }
    }
  }
  std::vector<Permutation> gens;
  for (const auto& e : keep)
    if (!e.is_identity()) gens.push_back(e);
  std::sort(gens.begin(), gens.end());
  return PermGroup(x.degree(), std::move(gens));
}

// N_x(h) by exact scan of x's elements; bounded by limits().max_brute_order.
inline PermGroup normalizer(const PermGroup& x, const PermGroup& h) {
  auto elems = x.elements(limits().max_brute_order);
  std::vector<Permutation> found;
  for (const auto& e : elems) {
    bool ok = true;
    for (const auto& s : h.generators())
      if (!h.contains(s.conjugated_by(e))) {
        ok = false;
        break;
      }
    if (ok && !e.is_identity()) found.push_back(e);
  }
  return PermGroup(x.degree(), std::move(found));
}

// C_x(s) by exact scan of x's elements; bounded by limits().max_brute_order.
inline PermGroup centralizer(const PermGroup& x, const PermGroup& s) {
  auto elems = x.elements(limits().max_brute_order);
  std::vector<Permutation> found;
  for (const auto& e : elems) {
    bool ok = true;
    for (const auto& g : s.generators())
      if (!(e * g == g * e)) {
        ok = false;
        break;
      }
    if (ok && !e.is_identity()) found.push_back(e);
  }
  return PermGroup(x.degree(), std::move(found));
}

}  // namespace symcay
