// Test-only brute-force oracles, independent of the library's own data
// structures wherever the point is to cross-check them.
#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace blab::testing {

// All perfect matchings on {0..2n-1} as flat partner arrays, enumerated by
// always pairing the smallest free vertex first.
inline std::vector<std::vector<int>> brute_force_matchings(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> partner(2 * n, -1);
  auto rec = [&](auto&& self) -> void {
    int v = 0;
    while (v < 2 * n && partner[v] >= 0) ++v;
    if (v == 2 * n) {
      out.push_back(partner);
      return;
    }
    for (int w = v + 1; w < 2 * n; ++w) {
      if (partner[w] >= 0) continue;
      partner[v] = w;
      partner[w] = v;
      self(self);
      partner[v] = partner[w] = -1;
    }
  };
  rec(rec);
  return out;
}

// Horizontal edges of a matching in the two-row layout (top = 0..n-1).
inline int top_arcs(const std::vector<int>& partner, int n) {
  int c = 0;
  for (int v = 0; v < n; ++v)
    if (partner[v] < n && partner[v] > v) ++c;
  return c;
}

inline long long double_factorial_odd(int n) {  // (2n-1)!!
  long long r = 1;
  for (int k = 2 * n - 1; k >= 1; k -= 2) r *= k;
  return r;
}

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(0x5eed5eedULL);
  return gen;
}

}  // namespace blab::testing
