#pragma once

// Coset graphs Cos(X, H, H{g, g^-1}H): vertices are the right cosets of H in
// X, with Hx adjacent to Hdx for each coset Hd of a neighbor of the trivial
// coset.  Cosets are identified by a canonical representative: the element of
// H*x whose image array is lexicographically minimal.  That representative is
// computed greedily down a stabilizer chain of H based at (0, 1, 2, ...), so
// it is unique and needs no tie-breaking.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <numeric>
#include <queue>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "symcay/errors.hpp"
#include "symcay/graph.hpp"
#include "symcay/limits.hpp"
#include "symcay/perm_group.hpp"

namespace symcay {

// Valency the coset graph must have: k = |H : H meet H^g|, doubled when the
// double cosets HgH and Hg^-1H differ.
inline std::uint64_t predicted_valency(const PermGroup& x, const PermGroup& h, const Permutation& g) {
  (void)x;
  PermGroup hg = h.conjugated_by(g);
  std::uint64_t inter = 0;
  for (const auto& e : h.elements()) {
    if (hg.contains(e)) ++inter;
  }
  std::uint64_t k = h.order() / inter;
  // HgH == Hg^-1H iff g^-1 = h1 * g * h2 for some h1, h2 in H.
  bool same = false;
  for (const auto& h1 : h.elements()) {
    Permutation h2 = (h1 * g).inverse() * g.inverse();
    if (h.contains(h2)) { same = true; break; }
  }
  return same ? k : 2 * k;
}

// True iff the coset graph will be connected: <H, g> = X.
inline bool connectivity_criterion(const PermGroup& x, const PermGroup& h, const Permutation& g) {
  std::vector<Permutation> gens = h.generators();
  gens.push_back(g);
  return PermGroup(x.degree(), gens).order() == x.order();
}

class CosetAction {
 public:
  // Enumerates the cosets of h in x by BFS with x's generators, canonical
  // representative first.  Requires h <= x; |x : h| bounded by
  // limits().max_coset_index.
  CosetAction(const PermGroup& x, const PermGroup& h) : x_(x), h_(h) {
    if (x.degree() != h.degree()) throw hypothesis_error("subgroup degree mismatch");
    if (!h.is_subgroup_of(x)) throw hypothesis_error("H is not a subgroup of X");
    const std::uint64_t index = x.order() / h.order();
    if (index > limits().max_coset_index)
      throw bound_error("coset index " + std::to_string(index) + " exceeds limit " +
                        std::to_string(limits().max_coset_index));
    // Chain of H based at (0, 1, ..., deg-1) drives canonicalization.
    std::vector<int> base(static_cast<std::size_t>(h.degree()));
    std::iota(base.begin(), base.end(), 0);
    hchain_ = std::make_unique<detail::StabChain>(h.degree(), h.generators(), base);

    reps_.reserve(index);
    index_.reserve(index * 2);
    push_coset(minimal_rep(Permutation::identity(x.degree())));
    for (std::size_t i = 0; i < reps_.size(); ++i) {
      for (const auto& a : x.generators()) {
        Permutation r = minimal_rep(reps_[i] * a);
        if (!index_.count(r)) push_coset(std::move(r));
      }
    }
    if (reps_.size() != index)
      throw error("coset enumeration found " + std::to_string(reps_.size()) +
                  " cosets, expected " + std::to_string(index));
  }

  // Lexicographically minimal image array in H*p, found by choosing, level by
  // level along H's chain, the orbit point u minimizing p[u].
  Permutation minimal_rep(Permutation p) const {
    const auto& ch = *hchain_;
    for (std::size_t lv = 0; lv < ch.level_count(); ++lv) {
      const auto& orb = ch.level_orbit(lv);
      if (orb.size() <= 1) continue;
      int best_u = orb[0];
      for (int u : orb)
        if (p[u] < p[best_u]) best_u = u;
      if (best_u != ch.level_beta(lv)) p = ch.level_transversal(lv, best_u) * p;
    }
    return p;
  }

  std::size_t count() const { return reps_.size(); }
  const Permutation& rep(int i) const { return reps_[static_cast<std::size_t>(i)]; }

  int index_of(const Permutation& p) const {
    auto it = index_.find(minimal_rep(p));
    if (it == index_.end()) throw hypothesis_error("element outside the enumerated cosets");
    return it->second;
  }

  // Action of a group element on cosets by right multiplication.
  Permutation coset_perm(const Permutation& a) const {
    std::vector<int> img(reps_.size());
    for (std::size_t i = 0; i < reps_.size(); ++i) img[i] = index_of(reps_[i] * a);
    return Permutation(std::move(img));
  }

  const PermGroup& x() const { return x_; }
  const PermGroup& h() const { return h_; }

 private:
  void push_coset(Permutation r) {
    index_.emplace(r, static_cast<int>(reps_.size()));
    reps_.push_back(std::move(r));
  }

  PermGroup x_, h_;
  std::unique_ptr<detail::StabChain> hchain_;
  std::vector<Permutation> reps_;
  std::unordered_map<Permutation, int, PermutationHash> index_;
};

struct CosetGraph {
  Graph graph;
  std::shared_ptr<CosetAction> action;
  std::vector<Permutation> neighbor_reps;  // coset reps of the base vertex's neighbors
  Permutation vertex_perm(const Permutation& a) const { return action->coset_perm(a); }
};

// Builds Cos(X, H, H{g, g^-1}H).  Requires g in X \ H and H core-free in X
// (so X acts faithfully on the cosets).
inline CosetGraph coset_graph(const PermGroup& x, const PermGroup& h, const Permutation& g,
                              bool check_corefree = true) {
  if (!x.contains(g)) throw hypothesis_error("edge element g lies outside X");
  if (h.contains(g)) throw hypothesis_error("edge element g lies in H");
  if (check_corefree && core(x, h).order() != 1)
    throw hypothesis_error("H is not core-free in X");

  CosetGraph out;
  out.action = std::make_shared<CosetAction>(x, h);
  const auto& act = *out.action;

  // Neighbor cosets of the trivial coset: H g h and H g^-1 h for h in H.
  std::unordered_map<Permutation, int, PermutationHash> seen;
  Permutation gi = g.inverse();
  for (const auto& hh : h.elements()) {
    for (const Permutation& d : {g * hh, gi * hh}) {
      Permutation r = act.minimal_rep(d);
      if (!seen.count(r)) {
        seen.emplace(r, 1);
        out.neighbor_reps.push_back(std::move(r));
      }
    }
  }
  std::sort(out.neighbor_reps.begin(), out.neighbor_reps.end());

  std::uint64_t pv = predicted_valency(x, h, g);
  if (pv != out.neighbor_reps.size())
    throw error("neighbor coset count " + std::to_string(out.neighbor_reps.size()) +
                " does not match predicted valency " + std::to_string(pv));

  const int n = static_cast<int>(act.count());
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(n) * out.neighbor_reps.size() / 2);
  for (int i = 0; i < n; ++i) {
    for (const auto& d : out.neighbor_reps) {
      int j = act.index_of(d * act.rep(i));
      if (i < j) edges.emplace_back(i, j);
    }
  }
  out.graph = Graph(n, std::move(edges));
  return out;
}

}  // namespace symcay
