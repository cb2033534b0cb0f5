// Permutations of {1..n} in one-line notation. Products compose left to
// right ((a*b)(k) = b(a(k))), the natural convention for right actions.
#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace blab {

class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(int n) : img_(n) { std::iota(img_.begin(), img_.end(), 1); }
  explicit Permutation(std::vector<int> one_line) : img_(std::move(one_line)) {
    std::vector<char> seen(img_.size(), 0);
    for (int v : img_) {
      if (v < 1 || v > static_cast<int>(img_.size()) || seen[v - 1])
        throw std::invalid_argument("Permutation: not a bijection");
      seen[v - 1] = 1;
    }
  }
  static Permutation transposition(int n, int i) {  // adjacent swap s_i
    Permutation p(n);
    std::swap(p.img_[i - 1], p.img_[i]);
    return p;
  }

  int size() const { return static_cast<int>(img_.size()); }
  int operator()(int k) const { return img_[k - 1]; }
  const std::vector<int>& one_line() const { return img_; }

  bool is_identity() const {
    for (int k = 1; k <= size(); ++k)
      if (img_[k - 1] != k) return false;
    return true;
  }

  friend Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) throw std::invalid_argument("Permutation: size mismatch");
    Permutation r;
    r.img_.resize(a.size());
    for (int k = 1; k <= a.size(); ++k) r.img_[k - 1] = b(a(k));
    return r;
  }
  friend bool operator==(const Permutation& a, const Permutation& b) { return a.img_ == b.img_; }
  friend bool operator!=(const Permutation& a, const Permutation& b) { return a.img_ != b.img_; }
  friend bool operator<(const Permutation& a, const Permutation& b) { return a.img_ < b.img_; }

  Permutation inverse() const {
    Permutation r;
    r.img_.resize(size());
    for (int k = 1; k <= size(); ++k) r.img_[img_[k - 1] - 1] = k;
    return r;
  }

  // Coxeter length = inversion count of the one-line word.
  int length() const {
    int inv = 0;
    for (int i = 0; i < size(); ++i)
      for (int j = i + 1; j < size(); ++j)
        if (img_[i] > img_[j]) ++inv;
    return inv;
  }
  int sign() const { return length() % 2 == 0 ? 1 : -1; }

  // A reduced word s_{j1} s_{j2} ... whose left-to-right product is *this,
  // obtained by repeatedly peeling the first descent.
  std::vector<int> reduced_word() const {
    std::vector<int> w = img_, word;
    bool again = true;
    while (again) {
      again = false;
      for (int i = 0; i + 1 < size(); ++i) {
        if (w[i] > w[i + 1]) {
          word.push_back(i + 1);
          std::swap(w[i], w[i + 1]);
          again = true;
          break;
        }
      }
    }
    return word;
  }

  // Embeds a permutation of {1..k} into S_n fixing 1..offset pointwise.
  Permutation shifted(int n, int offset) const {
    if (offset + size() > n) throw std::invalid_argument("Permutation: bad embedding");
    Permutation r(n);
    for (int k = 1; k <= size(); ++k) r.img_[offset + k - 1] = offset + img_[k - 1];
    return r;
  }

  std::string str() const {
    std::string s = "[";
    for (int i = 0; i < size(); ++i) s += (i ? "," : "") + std::to_string(img_[i]);
    return s + "]";
  }

 private:
  std::vector<int> img_;
};

// All permutations of the Young subgroup S_lambda <= S_n (blocks of sizes
// lambda_1, lambda_2, ... on consecutive letters), in lexicographic order.
inline std::vector<Permutation> young_subgroup(const std::vector<int>& lambda, int n) {
  std::vector<std::pair<int, int>> blocks;  // [start, len], 1-based start
  int pos = 1;
  for (int part : lambda) {
    if (part > 0) blocks.emplace_back(pos, part);
    pos += part;
  }
  if (pos - 1 > n) throw std::invalid_argument("young_subgroup: lambda too large");

  std::vector<Permutation> out{Permutation(n)};
  for (auto [start, len] : blocks) {
    std::vector<int> base(len);
    std::iota(base.begin(), base.end(), start);
    std::vector<std::vector<int>> arrangements;
    std::vector<int> a = base;
    do arrangements.push_back(a);
    while (std::next_permutation(a.begin(), a.end()));

    std::vector<Permutation> next;
    next.reserve(out.size() * arrangements.size());
    for (const auto& p : out)
      for (const auto& arr : arrangements) {
        std::vector<int> img = p.one_line();
        for (int k = 0; k < len; ++k) img[start - 1 + k] = arr[k];
        next.push_back(Permutation(std::move(img)));
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace blab
