#pragma once

#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "symcay/errors.hpp"

namespace symcay {

// Permutation of {0, ..., degree-1} stored as an image array.
// Products apply the left factor first: (p * q)(i) == q(p(i)).
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<char> seen(images_.size(), 0);
    for (int v : images_) {
      if (v < 0 || v >= static_cast<int>(images_.size()) || seen[v])
        throw hypothesis_error("image array is not a bijection");
      seen[v] = 1;
    }
  }

  static Permutation identity(int degree) {
    Permutation p;
    p.images_.resize(degree);
    std::iota(p.images_.begin(), p.images_.end(), 0);
    return p;
  }

  int degree() const { return static_cast<int>(images_.size()); }

  int operator[](int point) const { return images_[point]; }

  int at(int point) const {
    if (point < 0 || point >= degree())
      throw hypothesis_error("point " + std::to_string(point) +
                             " outside domain of degree " +
                             std::to_string(degree()));
    return images_[point];
  }

  const std::vector<int>& images() const { return images_; }

  bool is_identity() const {
    for (int i = 0; i < degree(); ++i)
      if (images_[i] != i) return false;
    return true;
  }

  // Smallest moved point, or -1 for the identity.
  int first_moved() const {
    for (int i = 0; i < degree(); ++i)
      if (images_[i] != i) return i;
    return -1;
  }

  Permutation operator*(const Permutation& rhs) const {
    if (degree() != rhs.degree())
      throw hypothesis_error("degree mismatch in product: " +
                             std::to_string(degree()) + " vs " +
                             std::to_string(rhs.degree()));
    Permutation out;
    out.images_.resize(images_.size());
    for (int i = 0; i < degree(); ++i) out.images_[i] = rhs.images_[images_[i]];
    return out;
  }

  Permutation inverse() const {
    Permutation out;
    out.images_.resize(images_.size());
    for (int i = 0; i < degree(); ++i) out.images_[images_[i]] = i;
    return out;
  }

  // this^g = g^-1 * this * g
  Permutation conjugated_by(const Permutation& g) const {
    return g.inverse() * (*this * g);
  }

  Permutation extended(int degree) const {
    if (degree < this->degree())
      throw hypothesis_error("cannot shrink a permutation");
    Permutation out;
    out.images_ = images_;
    out.images_.resize(degree);
    for (int i = this->degree(); i < degree; ++i) out.images_[i] = i;
    return out;
  }

  Permutation power(long long e) const {
    int n = degree();
    Permutation r = identity(n);
    Permutation b = e >= 0 ? *this : inverse();
    unsigned long long k = e >= 0 ? e : -(unsigned long long)e;
    while (k) {
      if (k & 1) r = r * b;
      b = b * b;
      k >>= 1;
    }
    return r;
  }

  std::uint64_t order() const {
    std::uint64_t ord = 1;
    std::vector<char> seen(images_.size(), 0);
    for (int i = 0; i < degree(); ++i) {
      if (seen[i]) continue;
      std::uint64_t len = 0;
      for (int j = i; !seen[j]; j = images_[j]) {
        seen[j] = 1;
        ++len;
      }
      ord = std::lcm(ord, len);
    }
    return ord;
  }

  // Nontrivial cycles, each starting at its smallest point, sorted by
  // starting point.
  std::vector<std::vector<int>> cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(images_.size(), 0);
    for (int i = 0; i < degree(); ++i) {
      if (seen[i] || images_[i] == i) continue;
      std::vector<int> cyc;
      for (int j = i; !seen[j]; j = images_[j]) {
        seen[j] = 1;
        cyc.push_back(j);
      }
      out.push_back(std::move(cyc));
    }
    return out;
  }

  bool operator==(const Permutation& rhs) const = default;
  auto operator<=>(const Permutation& rhs) const = default;

  std::size_t hash() const {
    std::size_t h = 0xcbf29ce484222325ull;
    for (int v : images_) {
      h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) +
           (h >> 2);
    }
    return h;
  }

 private:
  std::vector<int> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const { return p.hash(); }
};

}  // namespace symcay
