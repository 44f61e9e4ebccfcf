#pragma once

// Builders for the permutation groups behind the graph families: affine
// Frobenius groups over finite fields, dihedral groups, PSL/PGL(2,q) as
// Moebius actions, and the block constructions with sign flips used for the
// larger coset families.  Every builder validates its arithmetic hypotheses
// up front and throws hypothesis_error naming the violated condition; derived
// quantities (element orders, group orders) are recomputed and cross-checked.

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "symcay/errors.hpp"
#include "symcay/gf.hpp"
#include "symcay/limits.hpp"
#include "symcay/perm_group.hpp"

namespace symcay {

inline Permutation perm_from_fn(int n, const std::function<int(int)>& f) {
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = f(i);
  return Permutation(std::move(img));
}

// True iff some prime k dividing d has n | k * (p^(d/k) - 1); for a primitive
// divisor n of p^d - 1 this decides whether the point stabilizer of the
// affine Frobenius group preserves a nontrivial subspace decomposition.
inline bool is_imprimitive_on_W(long long n, long long p, int d) {
  if (!is_primitive_divisor(n, p, d))
    throw hypothesis_error("n is not a primitive divisor of p^d - 1");
  for (auto [k, e] : detail::factorize_u64(static_cast<std::uint64_t>(d))) {
    (void)e;
    // k * (p^(d/k) - 1), with p^(d/k) <= p^d bounded by field limits upstream
    long long pk = 1;
    for (int i = 0; i < d / static_cast<int>(k); ++i) pk *= p;
    long long bound = static_cast<long long>(k) * (pk - 1);
    if (bound % n == 0) return true;
  }
  return false;
}

// Affine Frobenius group G = W : <h> on the p^d points of GF(p^d), where W is
// the translation group and h multiplies by an element of order n.
struct FrobeniusGroup {
  Field field;
  PermGroup G, W, H;
  Permutation h;
  std::vector<Permutation> w_gens;  // translations by 1, x, ..., x^(d-1)
  long long p;
  int d;
  long long n;
};

inline FrobeniusGroup frobenius_group(long long p, int d, long long n) {
  Field f(p, d);
  const std::uint64_t q = f.size();
  if (n < 2) throw hypothesis_error("n must be at least 2");
  if ((q - 1) % static_cast<std::uint64_t>(n) != 0)
    throw hypothesis_error("n does not divide p^d - 1");
  const int deg = static_cast<int>(q);

  auto translation = [&](const FieldElement& a) {
    return perm_from_fn(deg, [&](int i) {
      return static_cast<int>((f.from_index(static_cast<std::uint64_t>(i)) + a).index());
    });
  };

  FieldElement omega = f.primitive_element();
  FieldElement alpha = omega.pow((q - 1) / static_cast<std::uint64_t>(n));
  Permutation h = perm_from_fn(deg, [&](int i) {
    return static_cast<int>((f.from_index(static_cast<std::uint64_t>(i)) * alpha).index());
  });
  if (h.order() != static_cast<std::uint64_t>(n))
    throw error("multiplier order mismatch");

  std::vector<Permutation> w_gens;
  FieldElement xpow = f.one();
  FieldElement x = (d == 1) ? f.one() : f.from_index(static_cast<std::uint64_t>(p));
  for (int i = 0; i < d; ++i) {
    w_gens.push_back(translation(xpow));
    xpow = xpow * x;
  }

  std::vector<Permutation> g_gens = w_gens;
  g_gens.push_back(h);
  FrobeniusGroup out{f,
                     PermGroup(deg, g_gens).with_known_order(q * static_cast<std::uint64_t>(n)),
                     PermGroup(deg, w_gens).with_known_order(q),
                     PermGroup(deg, {h}).with_known_order(static_cast<std::uint64_t>(n)),
                     h,
                     w_gens,
                     p,
                     d,
                     n};
  if (out.G.chain_order() != q * static_cast<std::uint64_t>(n))
    throw error("Frobenius group order mismatch");
  return out;
}

// Dihedral group of order 2m in its natural action on m points.
inline PermGroup dihedral(int m) {
  if (m < 3) throw hypothesis_error("dihedral needs m >= 3");
  Permutation rot = perm_from_fn(m, [&](int i) { return (i + 1) % m; });
  Permutation refl = perm_from_fn(m, [&](int i) { return (m - i) % m; });
  return PermGroup(m, {rot, refl}).with_known_order(2ull * static_cast<std::uint64_t>(m));
}

namespace detail {

struct Mobius {
  Field f;
  int inf;  // point index of the projective infinity
  int deg() const { return inf + 1; }

  Permutation affine(const FieldElement& a, const FieldElement& b) const {
    // x -> a x + b, infinity fixed
    return perm_from_fn(deg(), [&](int i) {
      if (i == inf) return inf;
      return static_cast<int>((f.from_index(static_cast<std::uint64_t>(i)) * a + b).index());
    });
  }

  Permutation inversion(const FieldElement& c) const {
    // x -> c / x with 0 <-> infinity
    return perm_from_fn(deg(), [&](int i) {
      if (i == inf) return 0;
      FieldElement e = f.from_index(static_cast<std::uint64_t>(i));
      if (e.is_zero()) return inf;
      return static_cast<int>((c / e).index());
    });
  }
};

}  // namespace detail

// PGL(2,q) acting on the projective line: q field points (by index) plus
// infinity as point q.
inline PermGroup pgl2(long long q) {
  if (q < 3 || q > 32) throw bound_error("pgl2 supports 3 <= q <= 32");
  long long p = 0;
  int e = 0;
  for (long long c = 2; c <= q; ++c) {
    if (detail::is_prime_u64(static_cast<std::uint64_t>(c)) && q % c == 0) {
      p = c;
      long long v = q;
      while (v % c == 0) { v /= c; ++e; }
      if (v != 1) throw hypothesis_error("q is not a prime power");
      break;
    }
  }
  Field f(p, e);
  detail::Mobius mo{f, static_cast<int>(q)};
  FieldElement om = f.primitive_element();
  std::vector<Permutation> gens{mo.affine(f.one(), f.one()),  // x + 1
                                mo.affine(om, f.zero()),      // omega x
                                mo.inversion(f.one())};       // 1/x
  std::uint64_t order = static_cast<std::uint64_t>(q) * static_cast<std::uint64_t>(q - 1) *
                        static_cast<std::uint64_t>(q + 1);
  PermGroup g = PermGroup(static_cast<int>(q) + 1, gens).with_known_order(order);
  if (g.chain_order() != order) throw error("PGL(2,q) order mismatch");
  return g;
}

// PSL(2,q) on the projective line; equals PGL(2,q) for even q.
inline PermGroup psl2(long long q) {
  if (q < 3 || q > 32) throw bound_error("psl2 supports 3 <= q <= 32");
  if (q % 2 == 0) return pgl2(q);
  long long p = 0;
  int e = 0;
  for (long long c = 2; c <= q; ++c) {
    if (detail::is_prime_u64(static_cast<std::uint64_t>(c)) && q % c == 0) {
      p = c;
      long long v = q;
      while (v % c == 0) { v /= c; ++e; }
      if (v != 1) throw hypothesis_error("q is not a prime power");
      break;
    }
  }
  Field f(p, e);
  detail::Mobius mo{f, static_cast<int>(q)};
  FieldElement om = f.primitive_element();
  std::vector<Permutation> gens{mo.affine(f.one(), f.one()),   // x + 1
                                mo.affine(om * om, f.zero()),  // omega^2 x
                                mo.inversion(-f.one())};       // -1/x
  std::uint64_t order = static_cast<std::uint64_t>(q) * static_cast<std::uint64_t>(q - 1) *
                        static_cast<std::uint64_t>(q + 1) / 2;
  PermGroup g = PermGroup(static_cast<int>(q) + 1, gens).with_known_order(order);
  if (g.chain_order() != order) throw error("PSL(2,q) order mismatch");
  return g;
}

// Inner semidirect product from generator lists on a common domain; verifies
// that the h generators normalize <w_gens>.
struct SemidirectProduct {
  PermGroup group, w, h;
};

inline SemidirectProduct semidirect(const std::vector<Permutation>& w_gens,
                                    const std::vector<Permutation>& h_gens) {
  if (w_gens.empty()) throw hypothesis_error("semidirect needs at least one W generator");
  int deg = w_gens[0].degree();
  for (const auto& g : w_gens)
    if (g.degree() != deg) throw hypothesis_error("generator degree mismatch");
  for (const auto& g : h_gens)
    if (g.degree() != deg) throw hypothesis_error("generator degree mismatch");
  PermGroup w(deg, w_gens);
  for (const auto& a : h_gens)
    for (const auto& s : w_gens)
      if (!w.contains(s.conjugated_by(a)))
        throw hypothesis_error("h generators do not normalize W");
  std::vector<Permutation> all = w_gens;
  all.insert(all.end(), h_gens.begin(), h_gens.end());
  return SemidirectProduct{PermGroup(deg, all), w, PermGroup(deg, h_gens)};
}

// ---------------------------------------------------------------------------
// Block constructions on d blocks of Z_p points doubled by a sign bit.
// Point layout: block b in [0,d), sign s in {0,1}, value v in [0,p):
// index = b*2p + s*p + v.

namespace detail {

struct BlockDomain {
  long long p;
  int d;
  int deg() const { return static_cast<int>(2 * p * d); }
  int pt(int b, int s, long long v) const {
    return static_cast<int>(b * 2 * p + s * p + v);
  }

  // v -> v+1 on block b (both signs)
  Permutation shift(int b) const {
    return make([&](int bb, int s, long long v) {
      if (bb != b) return pt(bb, s, v);
      return pt(bb, s, (v + 1) % p);
    });
  }

  // v -> r*v on block b
  Permutation scale(int b, long long r) const {
    return make([&](int bb, int s, long long v) {
      if (bb != b) return pt(bb, s, v);
      return pt(bb, s, (v * r) % p);
    });
  }

  // sign flip on block b
  Permutation flip(int b) const {
    return make([&](int bb, int s, long long v) {
      if (bb != b) return pt(bb, s, v);
      return pt(bb, 1 - s, v);
    });
  }

  // b -> b+1 mod d, same sign and value
  Permutation block_cycle() const {
    return make([&](int b, int s, long long v) { return pt((b + 1) % d, s, v); });
  }

  Permutation make(const std::function<int(int, int, long long)>& f) const {
    std::vector<int> img(static_cast<std::size_t>(deg()));
    for (int b = 0; b < d; ++b)
      for (int s = 0; s < 2; ++s)
        for (long long v = 0; v < p; ++v)
          img[static_cast<std::size_t>(pt(b, s, v))] = f(b, s, v);
    return Permutation(std::move(img));
  }
};

inline long long smallest_primitive_root(long long p) {
  for (long long r = 2; r < p; ++r) {
    // r is a primitive root iff r^((p-1)/f) != 1 for every prime f | p-1
    bool ok = true;
    for (auto [f, e] : factorize_u64(static_cast<std::uint64_t>(p - 1))) {
      (void)e;
      long long ex = (p - 1) / static_cast<long long>(f);
      long long acc = 1;
      for (long long i = 0; i < ex; ++i) acc = acc * r % p;
      if (acc == 1) { ok = false; break; }
    }
    if (ok) return r;
  }
  throw error("no primitive root found");
}

inline void check_block_params(long long p, int ell, int m, int d) {
  if (ell < 1) throw hypothesis_error("ell must be at least 1");
  if (m < 3 || m % 2 == 0) throw hypothesis_error("m must be odd and at least 3");
  long long two_ell = 1;
  for (int i = 0; i < ell; ++i) two_ell *= 2;
  if (!is_prime_u64(static_cast<std::uint64_t>(p < 0 ? 0 : p)))
    throw hypothesis_error("p must be prime");
  if (p != two_ell * m + 1) throw hypothesis_error("p != 2^ell * m + 1");
}

}  // namespace detail

// Group data for the coset families on sign-doubled blocks.  X acts on the
// 2pd block points; W is the direct product of the per-block shift groups;
// N is the multiplier subgroup the graph takes cosets by; y is the edge
// element; G = W : <h> is the regular subgroup on the cosets.
struct BlockConstruction {
  PermGroup X, W, N, G;
  Permutation h, y;
  std::vector<Permutation> x_gens, tau_gens, c_gens, sigma_gens;
  long long p;
  int ell, m, d;
  long long n;  // order of h
};

// Family with N = Z_2^d: requires p = 2^ell*m + 1 prime with m >= 3 odd,
// d | m, d > 1, and 2md a primitive divisor of p^d - 1.
inline BlockConstruction construction_group_im(long long p, int ell, int m, int d) {
  detail::check_block_params(p, ell, m, d);
  if (d <= 1) throw hypothesis_error("d > 1 fails");
  if (m % d != 0) throw hypothesis_error("d does not divide m");
  long long n = 2ll * m * d;
  if (!is_primitive_divisor(n, p, d))
    throw hypothesis_error("2md not a primitive divisor of p^d - 1");

  detail::BlockDomain dom{p, d};
  long long r = detail::smallest_primitive_root(p);
  BlockConstruction out;
  out.p = p;
  out.ell = ell;
  out.m = m;
  out.d = d;
  for (int b = 0; b < d; ++b) {
    out.x_gens.push_back(dom.shift(b));
    out.tau_gens.push_back(dom.scale(b, r));
    out.c_gens.push_back(dom.flip(b));
    out.sigma_gens.push_back(out.tau_gens.back().power((p - 1) / 2));
  }
  Permutation pi = dom.block_cycle();
  out.h = out.c_gens[0] * out.tau_gens[0].power((p - 1) / (2 * m)) * pi;
  out.n = n;
  if (out.h.order() != static_cast<std::uint64_t>(n)) throw error("order of h mismatch");
  out.y = (out.x_gens[0] * out.h).inverse();

  std::uint64_t pw = 1;
  for (int i = 0; i < d; ++i) pw *= static_cast<std::uint64_t>(p);
  std::uint64_t two_d = 1ull << d;
  out.W = PermGroup(dom.deg(), out.x_gens).with_known_order(pw);
  out.N = PermGroup(dom.deg(), out.sigma_gens).with_known_order(two_d);
  std::vector<Permutation> ggens = out.x_gens;
  ggens.push_back(out.h);
  out.G = PermGroup(dom.deg(), ggens).with_known_order(pw * static_cast<std::uint64_t>(n));
  std::vector<Permutation> xgens = out.x_gens;
  xgens.insert(xgens.end(), out.sigma_gens.begin(), out.sigma_gens.end());
  xgens.push_back(out.h);
  std::uint64_t xorder = pw * two_d * static_cast<std::uint64_t>(n);
  out.X = PermGroup(dom.deg(), xgens).with_known_order(xorder);
  if (out.X.chain_order() != xorder) throw error("X order mismatch");
  if (out.G.chain_order() != pw * static_cast<std::uint64_t>(n)) throw error("G order mismatch");
  return out;
}

// Family with N = Z_2^(d-1) (the sign flip on one distinguished block is
// omitted): requires ell >= 2 so that 4m | p - 1, other hypotheses as above.
inline BlockConstruction construction_group_yin(long long p, int ell, int m, int d) {
  detail::check_block_params(p, ell, m, d);
  if (ell < 2) throw hypothesis_error("ell >= 2 fails (4m must divide p - 1)");
  if (d <= 1) throw hypothesis_error("d > 1 fails");
  if (m % d != 0) throw hypothesis_error("d does not divide m");
  long long n = 4ll * m * d;
  if (!is_primitive_divisor(2ll * m * d, p, d))
    throw hypothesis_error("2md not a primitive divisor of p^d - 1");

  detail::BlockDomain dom{p, d};
  long long r = detail::smallest_primitive_root(p);
  BlockConstruction out;
  out.p = p;
  out.ell = ell;
  out.m = m;
  out.d = d;
  for (int b = 0; b < d; ++b) {
    out.x_gens.push_back(dom.shift(b));
    out.tau_gens.push_back(dom.scale(b, r));
    out.c_gens.push_back(dom.flip(b));
    out.sigma_gens.push_back(out.tau_gens.back().power((p - 1) / 2));
  }
  Permutation pi = dom.block_cycle();
  out.h = out.tau_gens[0].power((p - 1) / (4 * m)) * pi;
  out.n = n;
  if (out.h.order() != static_cast<std::uint64_t>(n)) throw error("order of h mismatch");
  out.y = (out.x_gens[1] * out.h).inverse();

  std::uint64_t pw = 1;
  for (int i = 0; i < d; ++i) pw *= static_cast<std::uint64_t>(p);
  // N drops the sign flip on block min(2, d-1) (the third block when d >= 3).
  int skip = d >= 3 ? 2 : d - 1;
  std::vector<Permutation> ngens;
  for (int b = 0; b < d; ++b)
    if (b != skip) ngens.push_back(out.sigma_gens[static_cast<std::size_t>(b)]);
  std::uint64_t two_dm1 = 1ull << (d - 1);
  out.W = PermGroup(dom.deg(), out.x_gens).with_known_order(pw);
  out.N = PermGroup(dom.deg(), ngens).with_known_order(two_dm1);
  std::vector<Permutation> ggens = out.x_gens;
  ggens.push_back(out.h);
  out.G = PermGroup(dom.deg(), ggens).with_known_order(pw * static_cast<std::uint64_t>(n));
  std::vector<Permutation> xgens = out.x_gens;
  xgens.insert(xgens.end(), ngens.begin(), ngens.end());
  xgens.push_back(out.h);
  std::uint64_t xorder = pw * two_dm1 * static_cast<std::uint64_t>(n);
  out.X = PermGroup(dom.deg(), xgens).with_known_order(xorder);
  if (out.X.chain_order() != xorder) throw error("X order mismatch");
  if (out.G.chain_order() != pw * static_cast<std::uint64_t>(n)) throw error("G order mismatch");
  return out;
}

// Family on GF(2^d) x GF(4): X = V : <h> with V the translation group, h a
// diagonal multiplier of order n on the first factor and order 3 on the
// second; R is a Klein four-group of mixed translations.  Requires n odd,
// 3 | n, and n a primitive divisor of 2^d - 1.
struct D2pConstruction {
  Field field;
  PermGroup X, V, W, G, R;
  Permutation h;
  int d;
  long long n;
};

inline D2pConstruction construction_group_d2p(int d, long long n) {
  if (n < 3 || n % 2 == 0) throw hypothesis_error("n must be odd and at least 3");
  if (n % 3 != 0) throw hypothesis_error("3 does not divide n");
  if (!is_primitive_divisor(n, 2, d))
    throw hypothesis_error("n not a primitive divisor of 2^d - 1");
  if (d % 2 != 0) throw error("d must be even when 3 | n divides 2^d - 1");

  Field f(2, d);
  const std::uint64_t q = f.size();
  // GF(4) inside GF(2^d): the fixed field of x -> x^4.
  std::vector<FieldElement> sub;
  for (std::uint64_t i = 0; i < q; ++i) {
    FieldElement e = f.from_index(i);
    if (e.frobenius(2) == e) sub.push_back(e);
  }
  if (sub.size() != 4) throw error("GF(4) subfield not found");
  auto sub_pos = [&](const FieldElement& e) {
    for (std::size_t i = 0; i < sub.size(); ++i)
      if (sub[i] == e) return static_cast<int>(i);
    throw error("element escapes GF(4) subfield");
  };

  const int deg = static_cast<int>(q) * 4;
  auto pt = [&](std::uint64_t ui, int vi) { return static_cast<int>(ui) * 4 + vi; };
  auto make = [&](const std::function<std::pair<FieldElement, FieldElement>(
                      const FieldElement&, const FieldElement&)>& fn) {
    std::vector<int> img(static_cast<std::size_t>(deg));
    for (std::uint64_t ui = 0; ui < q; ++ui)
      for (int vi = 0; vi < 4; ++vi) {
        auto [u2, v2] = fn(f.from_index(ui), sub[static_cast<std::size_t>(vi)]);
        img[static_cast<std::size_t>(pt(ui, vi))] = pt(u2.index(), sub_pos(v2));
      }
    return Permutation(std::move(img));
  };

  auto translation = [&](const FieldElement& a, const FieldElement& b) {
    return make([&](const FieldElement& u, const FieldElement& v) {
      return std::make_pair(u + a, v + b);
    });
  };

  FieldElement omega = f.primitive_element();
  FieldElement alpha = omega.pow((q - 1) / static_cast<std::uint64_t>(n));
  FieldElement beta = alpha.pow(static_cast<std::uint64_t>(n / 3));
  Permutation h = make([&](const FieldElement& u, const FieldElement& v) {
    return std::make_pair(u * alpha, v * beta);
  });
  if (h.order() != static_cast<std::uint64_t>(n)) throw error("order of h mismatch");

  std::vector<Permutation> v_gens, w_gens;
  FieldElement xp = f.one();
  FieldElement x = f.from_index(2);
  for (int i = 0; i < d; ++i) {
    w_gens.push_back(translation(xp, f.zero()));
    xp = xp * x;
  }
  v_gens = w_gens;
  v_gens.push_back(translation(f.zero(), sub[1]));
  v_gens.push_back(translation(f.zero(), sub[2]));

  Permutation r0 = translation(f.one(), f.one());
  Permutation r1 = r0.conjugated_by(h);
  PermGroup R = PermGroup(deg, {r0, r1}).with_known_order(4);
  if (R.chain_order() != 4) throw error("R is not a Klein four-group");

  std::vector<Permutation> xgens = v_gens;
  xgens.push_back(h);
  std::uint64_t xorder = q * 4 * static_cast<std::uint64_t>(n);
  PermGroup X = PermGroup(deg, xgens).with_known_order(xorder);
  if (X.chain_order() != xorder) throw error("X order mismatch");
  std::vector<Permutation> ggens = w_gens;
  ggens.push_back(h);
  PermGroup G = PermGroup(deg, ggens).with_known_order(q * static_cast<std::uint64_t>(n));
  if (G.chain_order() != q * static_cast<std::uint64_t>(n)) throw error("G order mismatch");

  return D2pConstruction{f,
                         X,
                         PermGroup(deg, v_gens).with_known_order(q * 4),
                         PermGroup(deg, w_gens).with_known_order(q),
                         G,
                         R,
                         h,
                         d,
                         n};
}

// ---------------------------------------------------------------------------
// Module constructions: Z_p^4 acted on by A5 (deleted natural module via the
// differences e_5 - e_i) or by S5 (sum-zero coordinates) extended by -1.

namespace detail {

// Row i of the matrix is the image of basis vector i; vectors act on the
// right: mu -> sum_i mu_i * row_i.
struct VectorDomain {
  long long p;
  int dim;
  int deg() const {
    long long v = 1;
    for (int i = 0; i < dim; ++i) v *= p;
    return static_cast<int>(v);
  }
  std::vector<long long> unpack(int idx) const {
    std::vector<long long> v(static_cast<std::size_t>(dim));
    for (int i = 0; i < dim; ++i) {
      v[static_cast<std::size_t>(i)] = idx % p;
      idx = static_cast<int>(idx / p);
    }
    return v;
  }
  int pack(const std::vector<long long>& v) const {
    long long idx = 0;
    for (int i = dim - 1; i >= 0; --i) idx = idx * p + ((v[static_cast<std::size_t>(i)] % p) + p) % p;
    return static_cast<int>(idx);
  }
  Permutation translation(const std::vector<long long>& a) const {
    return perm_from_fn(deg(), [&](int i) {
      auto v = unpack(i);
      for (int k = 0; k < dim; ++k) v[static_cast<std::size_t>(k)] += a[static_cast<std::size_t>(k)];
      return pack(v);
    });
  }
  Permutation linear(const std::vector<std::vector<long long>>& rows) const {
    return perm_from_fn(deg(), [&](int i) {
      auto v = unpack(i);
      std::vector<long long> w(static_cast<std::size_t>(dim), 0);
      for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c)
          w[static_cast<std::size_t>(c)] += v[static_cast<std::size_t>(r)] * rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
      return pack(w);
    });
  }
};

}  // namespace detail

struct ModuleConstruction {
  PermGroup X, W, G, R, T;  // T is the top group (A5 or S5 x <-1>) as matrices
  Permutation h;            // linear part of order 5 generating G over W
  Permutation edge;         // edge element for the coset graph
  long long p;
};

// Z_p^4 : A5 with the deleted permutation module; R is the point stabilizer
// A4 inside A5.  Requires 5 a primitive divisor of p^4 - 1.
inline ModuleConstruction a5_module_group(long long p) {
  if (!detail::is_prime_u64(static_cast<std::uint64_t>(p < 0 ? 0 : p)))
    throw hypothesis_error("p must be prime");
  if (!is_primitive_divisor(5, p, 4))
    throw hypothesis_error("5 not a primitive divisor of p^4 - 1");
  detail::VectorDomain dom{p, 4};
  if (dom.deg() > 1 << 20) throw bound_error("p^4 exceeds limit 2^20");

  // Basis vector i represents ebar_{i+1} = e_5 - e_{i+1}; slot 4 is ebar_5 = 0.
  auto lin = [&](const Permutation& sigma5) {
    std::vector<std::vector<long long>> rows(4, std::vector<long long>(4, 0));
    auto ebar = [&](int j) {
      std::vector<long long> v(4, 0);
      if (j < 4) v[static_cast<std::size_t>(j)] = 1;
      return v;
    };
    for (int i = 0; i < 4; ++i) {
      auto vi = ebar(sigma5[i]);
      auto v5 = ebar(sigma5[4]);
      for (int c = 0; c < 4; ++c) rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] = vi[static_cast<std::size_t>(c)] - v5[static_cast<std::size_t>(c)];
    }
    return dom.linear(rows);
  };

  Permutation a5_cycle = Permutation({1, 2, 3, 4, 0});       // (0 1 2 3 4)
  Permutation a5_three = Permutation({0, 1, 3, 4, 2});       // (2 3 4)
  Permutation r_three = Permutation({0, 2, 3, 1, 4});        // (1 2 3), fixes 0
  Permutation r_double = Permutation({0, 2, 1, 4, 3});       // (1 2)(3 4), fixes 0
  Permutation g_inv = Permutation({4, 3, 2, 1, 0});          // (0 4)(1 3)

  std::vector<Permutation> w_gens;
  for (int i = 0; i < 4; ++i) {
    std::vector<long long> e(4, 0);
    e[static_cast<std::size_t>(i)] = 1;
    w_gens.push_back(dom.translation(e));
  }
  Permutation h = lin(a5_cycle);
  Permutation l3 = lin(a5_three);

  std::uint64_t pw = static_cast<std::uint64_t>(dom.deg());
  std::vector<Permutation> xgens = w_gens;
  xgens.push_back(h);
  xgens.push_back(l3);
  PermGroup X = PermGroup(dom.deg(), xgens).with_known_order(pw * 60);
  if (X.chain_order() != pw * 60) throw error("X order mismatch");
  std::vector<Permutation> ggens = w_gens;
  ggens.push_back(h);
  PermGroup G = PermGroup(dom.deg(), ggens).with_known_order(pw * 5);
  PermGroup R = PermGroup(dom.deg(), {lin(r_three), lin(r_double)}).with_known_order(12);
  if (R.chain_order() != 12) throw error("R order mismatch");
  PermGroup T = PermGroup(dom.deg(), {h, l3}).with_known_order(60);

  // Edge element ebar_1 * (0 4)(1 3); the linear part inverts ebar_1, so this
  // is an involution.  |R ∩ R^edge| = 3, giving valency 4.  Note <R, edge>
  // meets W trivially: W is irreducible, so <R, edge> ∩ W is 0 or W, and it
  // computes to 0 (an A5 complement).  The coset graph therefore splits into
  // p^4 components, each a complete graph on the 5 cosets of one complement.
  std::vector<long long> ebar1(4, 0);
  ebar1[0] = 1;
  Permutation edge = dom.translation(ebar1) * lin(g_inv);
  if (edge.order() != 2) throw error("edge element is not an involution");

  return ModuleConstruction{X, PermGroup(dom.deg(), w_gens).with_known_order(pw), G, R, T, h, edge, p};
}

// Z_p^4 : (S5 x <-1>) with sum-zero coordinates w_1..w_5; R is the diagonal
// S4.  Requires 10 a primitive divisor of p^4 - 1.
inline ModuleConstruction s5_module_group(long long p) {
  if (!detail::is_prime_u64(static_cast<std::uint64_t>(p < 0 ? 0 : p)))
    throw hypothesis_error("p must be prime");
  if (!is_primitive_divisor(10, p, 4))
    throw hypothesis_error("10 not a primitive divisor of p^4 - 1");
  detail::VectorDomain dom{p, 4};
  if (dom.deg() > 1 << 20) throw bound_error("p^4 exceeds limit 2^20");

  // Basis vector i represents w_{i+1}; w_5 = -(w_1 + w_2 + w_3 + w_4).
  auto lin = [&](const Permutation& sigma5) {
    std::vector<std::vector<long long>> rows(4, std::vector<long long>(4, 0));
    for (int i = 0; i < 4; ++i) {
      int img = sigma5[i];
      if (img < 4) {
        rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(img)] = 1;
      } else {
        for (int c = 0; c < 4; ++c) rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] = -1;
      }
    }
    return dom.linear(rows);
  };

  Permutation s5_cycle = Permutation({1, 2, 3, 4, 0});   // (0 1 2 3 4)
  Permutation s5_swap = Permutation({1, 0, 2, 3, 4});    // (0 1)
  Permutation r_cycle = Permutation({1, 2, 3, 0, 4});    // (0 1 2 3)
  Permutation swap_04 = Permutation({4, 1, 2, 3, 0});    // (0 4)

  std::vector<std::vector<long long>> neg_rows(4, std::vector<long long>(4, 0));
  for (int i = 0; i < 4; ++i) neg_rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = -1;
  Permutation neg = dom.linear(neg_rows);

  std::vector<Permutation> w_gens;
  for (int i = 0; i < 4; ++i) {
    std::vector<long long> e(4, 0);
    e[static_cast<std::size_t>(i)] = 1;
    w_gens.push_back(dom.translation(e));
  }
  Permutation h = lin(s5_cycle);
  Permutation l2 = lin(s5_swap);

  std::uint64_t pw = static_cast<std::uint64_t>(dom.deg());
  std::vector<Permutation> xgens = w_gens;
  xgens.push_back(h);
  xgens.push_back(l2);
  xgens.push_back(neg);
  PermGroup X = PermGroup(dom.deg(), xgens).with_known_order(pw * 240);
  if (X.chain_order() != pw * 240) throw error("X order mismatch");
  std::vector<Permutation> ggens = w_gens;
  ggens.push_back(h);
  ggens.push_back(neg);
  PermGroup G = PermGroup(dom.deg(), ggens).with_known_order(pw * 10);
  if (G.chain_order() != pw * 10) throw error("G order mismatch");
  PermGroup R = PermGroup(dom.deg(), {lin(r_cycle), lin(s5_swap)}).with_known_order(24);
  if (R.chain_order() != 24) throw error("R order mismatch");
  PermGroup T = PermGroup(dom.deg(), {h, l2, neg}).with_known_order(240);

  // w_1 + w_5 = e_0 - (1,1,1,1)
  std::vector<long long> w15{0, -1, -1, -1};
  Permutation edge = dom.translation(w15) * (lin(swap_04) * neg);
  if (edge.order() != 2) throw error("edge element is not an involution");

  return ModuleConstruction{X, PermGroup(dom.deg(), w_gens).with_known_order(pw), G, R, T, h, edge, p};
}

// Affine-semilinear package over GF(2^(p-1)) for a prime p >= 5 such that p is
// a primitive divisor of 2^(p-1) - 1, i.e. 2 is a primitive root mod p.  The
// domain is the 2^(p-1) field points; G = W : <h> with W the translations and
// h multiplication by alpha of order p; sigma is the order-2 field
// automorphism x -> x^(2^((p-1)/2)); X = G : <sigma>.  The edge element is
// t_w * h with w = omega^(2^((p-1)/2) + 1), a sigma-fixed field value.
struct SemilinearConstruction {
  Field field;
  PermGroup X, G, W, H;
  Permutation h, sigma, edge;
  long long p;
};

inline SemilinearConstruction affine_semilinear_group(long long p) {
  if (p < 5 || !detail::is_prime_u64(static_cast<std::uint64_t>(p)))
    throw hypothesis_error("p must be a prime >= 5, got " + std::to_string(p));
  const int d = static_cast<int>(p) - 1;
  if (!is_primitive_divisor(p, 2, d))
    throw hypothesis_error("p = " + std::to_string(p) +
                           " is not a primitive divisor of 2^(p-1) - 1 (2 must be a primitive root mod p)");
  if (d > 12)
    throw bound_error("point domain 2^" + std::to_string(d) + " exceeds the 4096-point builder limit");
  Field f(2, d);
  const std::uint64_t q = f.size();
  const int deg = static_cast<int>(q);

  auto translation = [&](const FieldElement& a) {
    return perm_from_fn(deg, [&](int i) {
      return static_cast<int>((f.from_index(static_cast<std::uint64_t>(i)) + a).index());
    });
  };

  FieldElement omega = f.primitive_element();
  FieldElement alpha = omega.pow((q - 1) / static_cast<std::uint64_t>(p));
  Permutation h = perm_from_fn(deg, [&](int i) {
    return static_cast<int>((f.from_index(static_cast<std::uint64_t>(i)) * alpha).index());
  });
  if (h.order() != static_cast<std::uint64_t>(p)) throw error("multiplier order mismatch");

  const int k = d / 2;  // sigma = k-fold squaring, an involution since 2k = p - 1
  Permutation sigma = perm_from_fn(deg, [&](int i) {
    return static_cast<int>(f.from_index(static_cast<std::uint64_t>(i)).frobenius(k).index());
  });
  if (sigma.order() != 2) throw error("field automorphism is not an involution");
  // 2^((p-1)/2) = -1 mod p, so conjugation by sigma inverts h.
  if (!(h.conjugated_by(sigma) == h.inverse())) throw error("sigma does not invert h");

  std::vector<Permutation> w_gens;
  FieldElement xpow = f.one();
  FieldElement x = f.from_index(2);
  for (int i = 0; i < d; ++i) {
    w_gens.push_back(translation(xpow));
    xpow = xpow * x;
  }

  const std::uint64_t s = 1ull << k;
  FieldElement w = omega.pow(s + 1);
  if (!(w.frobenius(k) == w)) throw error("edge translation value is not sigma-fixed");
  Permutation edge = translation(w) * h;
  if (sigma.conjugated_by(edge) == sigma) throw error("sigma is centralized by the edge element");

  std::vector<Permutation> g_gens = w_gens;
  g_gens.push_back(h);
  std::vector<Permutation> x_gens = g_gens;
  x_gens.push_back(sigma);
  PermGroup X = PermGroup(deg, x_gens).with_known_order(q * static_cast<std::uint64_t>(p) * 2);
  PermGroup G = PermGroup(deg, g_gens).with_known_order(q * static_cast<std::uint64_t>(p));
  if (deg <= 1024) {
    if (X.chain_order() != q * static_cast<std::uint64_t>(p) * 2) throw error("X order mismatch");
    if (G.chain_order() != q * static_cast<std::uint64_t>(p)) throw error("G order mismatch");
  }
  return SemilinearConstruction{f,
                                X,
                                G,
                                PermGroup(deg, w_gens).with_known_order(q),
                                PermGroup(deg, {sigma}).with_known_order(2),
                                h,
                                sigma,
                                edge,
                                p};
}

}  // namespace symcay
