// Partition bookkeeping for dominant sp_2m weights: conjugates, the type C
// dominance order, the saturated sets pi_f, hook lengths, and tableau data.
#pragma once

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "blab/perm.hpp"

namespace blab {

// Weakly decreasing positive parts; the empty vector is the zero partition.
using Partition = std::vector<int>;
// Integer weight vector of length m.
using Weight = std::vector<int>;

inline bool is_partition(const Partition& p) {
  for (size_t i = 0; i + 1 < p.size(); ++i)
    if (p[i] < p[i + 1]) return false;
  return p.empty() || p.back() > 0;
}

inline int partition_size(const Partition& p) {
  return std::accumulate(p.begin(), p.end(), 0);
}

inline Partition conjugate(const Partition& p) {
  Partition c;
  if (p.empty()) return c;
  c.resize(p[0]);
  for (int i = 0; i < static_cast<int>(c.size()); ++i) {
    int cnt = 0;
    for (int part : p)
      if (part >= i + 1) ++cnt;
    c[i] = cnt;
  }
  return c;
}

inline std::string partition_str(const Partition& p) {
  std::string s = "[";
  for (size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + "]";
}

// Weight attached to a partition with at most m parts (zero-padded).
inline Weight weight_of_partition(const Partition& p, int m) {
  if (static_cast<int>(p.size()) > m)
    throw std::invalid_argument("partition has more than m parts");
  Weight w(m, 0);
  for (size_t i = 0; i < p.size(); ++i) w[i] = p[i];
  return w;
}

// All partitions of k with at most max_parts parts, in lexicographically
// decreasing order.
inline std::vector<Partition> partitions_of(int k, int max_parts) {
  std::vector<Partition> out;
  Partition cur;
  auto rec = [&](auto&& self, int rem, int max_part, int parts_left) -> void {
    if (rem == 0) {
      out.push_back(cur);
      return;
    }
    if (parts_left == 0) return;
    for (int part = std::min(rem, max_part); part >= 1; --part) {
      cur.push_back(part);
      self(self, rem - part, part, parts_left - 1);
      cur.pop_back();
    }
  };
  if (k >= 0) rec(rec, k, k == 0 ? 1 : k, max_parts);
  return out;
}

// Partitions reachable by adding one box, keeping at most max_parts rows.
inline std::vector<Partition> add_box(const Partition& p, int max_parts) {
  std::vector<Partition> out;
  for (int row = 0; row <= static_cast<int>(p.size()) && row < max_parts; ++row) {
    if (row > 0 && row < static_cast<int>(p.size()) && p[row] == p[row - 1]) continue;
    Partition q = p;
    if (row == static_cast<int>(p.size()))
      q.push_back(1);
    else
      q[row]++;
    out.push_back(std::move(q));
  }
  return out;
}

// Partitions reachable by removing one box (only from a row strictly longer
// than the next, so the result stays a partition).
inline std::vector<Partition> remove_box(const Partition& p) {
  std::vector<Partition> out;
  for (int row = 0; row < static_cast<int>(p.size()); ++row) {
    if (row + 1 < static_cast<int>(p.size()) && p[row] == p[row + 1]) continue;
    Partition q = p;
    q[row]--;
    if (q[row] == 0) q.pop_back();
    out.push_back(std::move(q));
  }
  return out;
}

// Type C dominance: lam <= mu iff mu - lam is a non-negative integer
// combination of eps_i - eps_{i+1} (i < m) and 2 eps_m. Equivalently all
// prefix sums of mu - lam are non-negative and the total is even.
inline bool dominance_leq(const Partition& lam, const Partition& mu, int m) {
  long prefix = 0;
  for (int i = 0; i < m; ++i) {
    int l = i < static_cast<int>(lam.size()) ? lam[i] : 0;
    int u = i < static_cast<int>(mu.size()) ? mu[i] : 0;
    prefix += u - l;
    if (i < m - 1 && prefix < 0) return false;
  }
  return prefix >= 0 && prefix % 2 == 0;
}

// The set of dominant weights appearing in V^(n-2f): partitions of
// n-2f, n-2f-2, ... with at most m parts.
inline std::vector<Partition> pi_f(int m, int n, int f) {
  std::vector<Partition> out;
  for (int k = n - 2 * f; k >= 0; k -= 2)
    for (auto& p : partitions_of(k, m)) out.push_back(p);
  return out;
}

// Number of standard tableaux of shape p, by the hook length formula.
inline long long standard_tableaux_count(const Partition& p) {
  int k = partition_size(p);
  Partition conj = conjugate(p);
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), k);
  for (size_t i = 0; i < p.size(); ++i)
    for (int j = 0; j < p[i]; ++j) {
      int hook = (p[i] - j - 1) + (conj[j] - static_cast<int>(i) - 1) + 1;
      r /= hook;
    }
  if (!r.fits_slong_p()) throw std::overflow_error("standard_tableaux_count");
  return r.get_si();
}

// The permutation w_lambda with t^lambda * w_lambda = t_lambda, where
// t^lambda fills the diagram along rows and t_lambda along columns, and a
// permutation acts on a tableau by relabelling entries.
inline Permutation w_lambda(const Partition& p, int n) {
  int k = partition_size(p);
  if (k > n) throw std::invalid_argument("w_lambda: |lambda| > n");
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);

  // row-reading number of each cell, then column-reading number
  Partition conj = conjugate(p);
  int row_start = 0;
  for (size_t r = 0; r < p.size(); ++r) {
    for (int c = 0; c < p[r]; ++c) {
      int row_number = row_start + c + 1;  // t^lambda(cell)
      int col_number = 1;                  // t_lambda(cell)
      for (int cc = 0; cc < c; ++cc) col_number += conj[cc];
      col_number += static_cast<int>(r);
      img[row_number - 1] = col_number;
    }
    row_start += p[r];
  }
  return Permutation(std::move(img));
}

}  // namespace blab
