#pragma once

#include <cstdint>
#include <cstdlib>
#include <string>

namespace symcay {

// Resource bounds. Exceeding one raises bound_error rather than silently
// degrading; callers may raise the bounds explicitly or via environment.
struct Limits {
  std::uint64_t max_group_order = 100000;  // element enumeration
  int max_aut_vertices = 1500;             // automorphism search
  std::uint64_t max_coset_index = 100000;  // coset enumeration
  std::uint64_t max_brute_order = 10000;   // normalizer/centralizer scans
  std::uint64_t max_aut_gs_order = 2048;   // group-automorphism backtracking
};

namespace detail {
inline std::uint64_t env_u64(const char* name, std::uint64_t fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  return std::strtoull(v, nullptr, 10);
}
}  // namespace detail

// Process-wide limits, seeded once from SYMCAY_MAX_* environment variables.
inline Limits& limits() {
  static Limits l = [] {
    Limits init;
    init.max_group_order =
        detail::env_u64("SYMCAY_MAX_GROUP_ORDER", init.max_group_order);
    init.max_aut_vertices = static_cast<int>(
        detail::env_u64("SYMCAY_MAX_AUT_VERTICES",
                        static_cast<std::uint64_t>(init.max_aut_vertices)));
    init.max_coset_index =
        detail::env_u64("SYMCAY_MAX_COSET_INDEX", init.max_coset_index);
    return init;
  }();
  return l;
}

}  // namespace symcay
