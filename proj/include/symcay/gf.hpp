#pragma once

// Finite fields GF(p^d) with a deterministic choice of modulus: the
// lexicographically smallest monic irreducible polynomial of degree d,
// comparing coefficient tuples (a_{d-1}, ..., a_1, a_0).  Elements are
// coefficient vectors over Z_p; the index of an element is its value as a
// base-p numeral with the constant coefficient least significant, so index
// order equals lex order on (c_{d-1}, ..., c_0).

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "symcay/errors.hpp"

namespace symcay {

class FieldElement;

namespace detail {

inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t f = 2; f * f <= n; ++f)
    if (n % f == 0) return false;
  return true;
}

inline std::vector<std::pair<std::uint64_t, int>> factorize_u64(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, int>> fs;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      int e = 0;
      while (n % f == 0) { n /= f; ++e; }
      fs.emplace_back(f, e);
    }
  }
  if (n > 1) fs.emplace_back(n, 1);
  return fs;
}

// Dense polynomial arithmetic over Z_p; coefficient i is the x^i coefficient.
struct PolyMod {
  long long p;
  std::vector<int> mod;  // monic, degree d

  int deg(const std::vector<int>& a) const {
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
      if (a[i] != 0) return i;
    return -1;
  }

  std::vector<int> reduce(std::vector<int> a) const {
    const int d = static_cast<int>(mod.size()) - 1;
    for (int i = static_cast<int>(a.size()) - 1; i >= d; --i) {
      int c = a[i];
      if (c == 0) continue;
      a[i] = 0;
      for (int j = 0; j < d; ++j) {
        long long v = a[i - d + j] - static_cast<long long>(c) * mod[j];
        a[i - d + j] = static_cast<int>(((v % p) + p) % p);
      }
    }
    a.resize(static_cast<std::size_t>(d));
    return a;
  }

  std::vector<int> mul(const std::vector<int>& a, const std::vector<int>& b) const {
    std::vector<long long> acc(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j)
        acc[i + j] = (acc[i + j] + static_cast<long long>(a[i]) * b[j]) % p;
    }
    std::vector<int> r(acc.size());
    for (std::size_t i = 0; i < acc.size(); ++i) r[i] = static_cast<int>(acc[i]);
    return reduce(std::move(r));
  }

  std::vector<int> pow(std::vector<int> base, std::uint64_t e) const {
    std::vector<int> r(mod.size() - 1, 0);
    r[0] = 1;
    while (e > 0) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }

  std::vector<int> gcd(std::vector<int> a, std::vector<int> b) const {
    auto inv_mod_p = [&](long long v) {
      long long r = 1, base = ((v % p) + p) % p, e = p - 2;
      while (e > 0) {
        if (e & 1) r = r * base % p;
        base = base * base % p;
        e >>= 1;
      }
      return r;
    };
    while (deg(b) >= 0) {
      // a = a mod b
      int db = deg(b);
      long long lead_inv = inv_mod_p(b[db]);
      while (deg(a) >= db) {
        int da = deg(a);
        long long c = a[da] * lead_inv % p;
        for (int j = 0; j <= db; ++j) {
          long long v = a[da - db + j] - c * b[j];
          a[da - db + j] = static_cast<int>(((v % p) + p) % p);
        }
      }
      std::swap(a, b);
    }
    return a;
  }
};

// Rabin irreducibility test: f of degree d over Z_p is irreducible iff
// x^(p^d) == x (mod f) and gcd(x^(p^(d/k)) - x, f) = 1 for each prime k | d.
inline bool poly_irreducible(long long p, const std::vector<int>& f) {
  const int d = static_cast<int>(f.size()) - 1;
  PolyMod pm{p, f};
  std::vector<int> x(static_cast<std::size_t>(d), 0);
  if (d == 1) return true;
  x[1] = 1;
  auto pow_p = [&](std::vector<int> v, int times) {
    std::uint64_t pe = 1;
    for (int i = 0; i < times; ++i) pe *= static_cast<std::uint64_t>(p);
    return pm.pow(std::move(v), pe);
  };
  std::vector<int> xq = pow_p(x, d);
  if (xq != x) return false;
  for (auto [k, e] : factorize_u64(static_cast<std::uint64_t>(d))) {
    (void)e;
    std::vector<int> sub = pow_p(x, d / static_cast<int>(k));
    // sub - x
    std::vector<int> diff = sub;
    diff[1] = static_cast<int>(((diff[1] - 1) % p + p) % p);
    std::vector<int> g = pm.gcd(f, diff);
    if (pm.deg(g) > 0) return false;
  }
  return true;
}

struct FieldData {
  long long p;
  int d;
  std::uint64_t q;
  std::vector<int> modulus;  // length d+1, monic
  std::vector<std::pair<std::uint64_t, int>> qm1_factors;
};

}  // namespace detail

class Field {
 public:
  // Max field size accepted; keeps element tables and scans cheap.
  static constexpr std::uint64_t kMaxSize = 1ull << 20;

  Field(long long p, int d) {
    if (d < 1) throw hypothesis_error("field degree must be >= 1, got " + std::to_string(d));
    if (!detail::is_prime_u64(static_cast<std::uint64_t>(p < 0 ? 0 : p)))
      throw hypothesis_error("field characteristic must be prime, got " + std::to_string(p));
    std::uint64_t q = 1;
    for (int i = 0; i < d; ++i) {
      q *= static_cast<std::uint64_t>(p);
      if (q > kMaxSize)
        throw bound_error("field size " + std::to_string(p) + "^" + std::to_string(d) +
                          " exceeds limit 2^20");
    }
    auto data = std::make_shared<detail::FieldData>();
    data->p = p;
    data->d = d;
    data->q = q;
    data->modulus = find_modulus(p, d);
    data->qm1_factors = detail::factorize_u64(q - 1);
    data_ = std::move(data);
  }

  long long characteristic() const { return data_->p; }
  int degree() const { return data_->d; }
  std::uint64_t size() const { return data_->q; }
  const std::vector<int>& modulus() const { return data_->modulus; }

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_index(std::uint64_t idx) const;
  FieldElement element(std::vector<int> coeffs) const;  // coeff i is the x^i coefficient
  // Lex-smallest generator of the multiplicative group.
  FieldElement primitive_element() const;

  std::string modulus_string() const { return poly_string(data_->modulus); }

  bool operator==(const Field& o) const { return data_ == o.data_ || (data_->p == o.data_->p && data_->modulus == o.data_->modulus); }

 private:
  friend class FieldElement;
  std::shared_ptr<const detail::FieldData> data_;

  static std::vector<int> find_modulus(long long p, int d) {
    // Candidates in lex order of (a_{d-1}, ..., a_0); the free coefficients
    // form a base-p counter with a_0 least significant.
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= static_cast<std::uint64_t>(p);
    for (std::uint64_t k = 0; k < count; ++k) {
      std::vector<int> f(static_cast<std::size_t>(d) + 1, 0);
      f[static_cast<std::size_t>(d)] = 1;
      std::uint64_t rem = k;
      for (int i = 0; i < d; ++i) {
        f[static_cast<std::size_t>(i)] = static_cast<int>(rem % static_cast<std::uint64_t>(p));
        rem /= static_cast<std::uint64_t>(p);
      }
      if (detail::poly_irreducible(p, f)) return f;
    }
    throw error("no irreducible polynomial found");  // unreachable
  }

  std::string poly_string(const std::vector<int>& c) const {
    std::string s;
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
      if (c[static_cast<std::size_t>(i)] == 0) continue;
      if (!s.empty()) s += " + ";
      int co = c[static_cast<std::size_t>(i)];
      if (i == 0) {
        s += std::to_string(co);
      } else {
        if (co != 1) s += std::to_string(co) + "*";
        s += (i == 1) ? "x" : "x^" + std::to_string(i);
      }
    }
    return s.empty() ? "0" : s;
  }
};

class FieldElement {
 public:
  FieldElement() = default;

  const std::vector<int>& coeffs() const { return c_; }
  bool is_zero() const {
    for (int v : c_) if (v != 0) return false;
    return true;
  }

  // Base-p value with the x^(d-1) coefficient most significant; element order
  // by index equals lex order on (c_{d-1}, ..., c_0).
  std::uint64_t index() const {
    std::uint64_t v = 0;
    for (int i = static_cast<int>(c_.size()) - 1; i >= 0; --i)
      v = v * static_cast<std::uint64_t>(data_->p) + static_cast<std::uint64_t>(c_[static_cast<std::size_t>(i)]);
    return v;
  }

  FieldElement operator+(const FieldElement& o) const {
    check_same(o);
    FieldElement r = *this;
    for (std::size_t i = 0; i < c_.size(); ++i)
      r.c_[i] = static_cast<int>((r.c_[i] + o.c_[i]) % data_->p);
    return r;
  }

  FieldElement operator-() const {
    FieldElement r = *this;
    for (auto& v : r.c_) v = static_cast<int>((data_->p - v) % data_->p);
    return r;
  }

  FieldElement operator-(const FieldElement& o) const { return *this + (-o); }

  FieldElement operator*(const FieldElement& o) const {
    check_same(o);
    detail::PolyMod pm{data_->p, data_->modulus};
    FieldElement r = *this;
    r.c_ = pm.mul(c_, o.c_);
    return r;
  }

  FieldElement pow(std::uint64_t e) const {
    detail::PolyMod pm{data_->p, data_->modulus};
    FieldElement r = *this;
    r.c_ = pm.pow(c_, e);
    return r;
  }

  FieldElement inverse() const {
    if (is_zero()) throw hypothesis_error("inverse of zero field element");
    return pow(data_->q - 2);
  }

  FieldElement operator/(const FieldElement& o) const { return *this * o.inverse(); }

  // x -> x^(p^k), the k-th power of the Frobenius automorphism.
  FieldElement frobenius(int k) const {
    FieldElement r = *this;
    for (int i = 0; i < k; ++i) r = r.pow(static_cast<std::uint64_t>(data_->p));
    return r;
  }

  std::uint64_t multiplicative_order() const {
    if (is_zero()) throw hypothesis_error("multiplicative order of zero");
    std::uint64_t ord = data_->q - 1;
    for (auto [f, e] : data_->qm1_factors) {
      (void)e;
      while (ord % f == 0 && pow(ord / f).is_one()) ord /= f;
    }
    return ord;
  }

  bool is_one() const {
    if (c_.empty() || c_[0] != 1) return false;
    for (std::size_t i = 1; i < c_.size(); ++i)
      if (c_[i] != 0) return false;
    return true;
  }

  Field field() const {
    Field f(data_->p, 1);  // placeholder, replaced below
    f.data_ = data_;
    return f;
  }

  bool operator==(const FieldElement& o) const { return c_ == o.c_ && data_->p == o.data_->p && data_->modulus == o.data_->modulus; }
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

 private:
  friend class Field;
  FieldElement(std::shared_ptr<const detail::FieldData> d, std::vector<int> c)
      : data_(std::move(d)), c_(std::move(c)) {}

  void check_same(const FieldElement& o) const {
    if (data_->p != o.data_->p || data_->modulus != o.data_->modulus)
      throw hypothesis_error("field elements from different fields");
  }

  std::shared_ptr<const detail::FieldData> data_;
  std::vector<int> c_;
};

inline FieldElement Field::zero() const {
  return FieldElement(data_, std::vector<int>(static_cast<std::size_t>(data_->d), 0));
}

inline FieldElement Field::one() const {
  std::vector<int> c(static_cast<std::size_t>(data_->d), 0);
  c[0] = 1;
  return FieldElement(data_, std::move(c));
}

inline FieldElement Field::from_index(std::uint64_t idx) const {
  if (idx >= data_->q) throw hypothesis_error("field index out of range");
  std::vector<int> c(static_cast<std::size_t>(data_->d), 0);
  for (int i = 0; i < data_->d; ++i) {
    c[static_cast<std::size_t>(i)] = static_cast<int>(idx % static_cast<std::uint64_t>(data_->p));
    idx /= static_cast<std::uint64_t>(data_->p);
  }
  return FieldElement(data_, std::move(c));
}

inline FieldElement Field::element(std::vector<int> coeffs) const {
  if (coeffs.size() != static_cast<std::size_t>(data_->d))
    throw hypothesis_error("field element needs exactly " + std::to_string(data_->d) + " coefficients");
  for (auto& v : coeffs) {
    v = static_cast<int>(((v % static_cast<int>(data_->p)) + static_cast<int>(data_->p)) % static_cast<int>(data_->p));
  }
  return FieldElement(data_, std::move(coeffs));
}

inline FieldElement Field::primitive_element() const {
  for (std::uint64_t i = 1; i < data_->q; ++i) {
    FieldElement e = from_index(i);
    if (e.multiplicative_order() == data_->q - 1) return e;
  }
  throw error("no primitive element found");  // unreachable
}

// True iff n divides p^d - 1 but not p^k - 1 for any 1 <= k < d.
inline bool is_primitive_divisor(long long n, long long p, int d) {
  if (n <= 0 || d < 1) throw hypothesis_error("is_primitive_divisor requires n >= 1 and d >= 1");
  auto pow_mod = [&](int k) {
    // p^k mod n
    long long r = 1 % n;
    for (int i = 0; i < k; ++i) r = (r * (p % n)) % n;
    return r;
  };
  if (pow_mod(d) != 1 % n) return false;
  for (int k = 1; k < d; ++k)
    if (pow_mod(k) == 1 % n) return false;
  return true;
}

}  // namespace symcay
