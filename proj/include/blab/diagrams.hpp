// Brauer n-diagrams as perfect matchings on two rows of n vertices, diagram
// composition with loop counting, and the Brauer algebra over an exact
// coefficient ring with configurable loop parameter delta.
//
// Vertex codes: top row i (1..n) -> i-1, bottom row i' -> n+i-1. A diagram
// stores the matching as a partner array, which is its canonical form.
#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "blab/partitions.hpp"
#include "blab/perm.hpp"

namespace blab {

class BrauerDiagram {
 public:
  BrauerDiagram() = default;
  BrauerDiagram(int n, std::vector<std::uint8_t> partner) : n_(n), partner_(std::move(partner)) {
    if (static_cast<int>(partner_.size()) != 2 * n) throw std::invalid_argument("BrauerDiagram: bad size");
    for (int v = 0; v < 2 * n; ++v) {
      int w = partner_[v];
      if (w == v || w < 0 || w >= 2 * n || partner_[w] != v)
        throw std::invalid_argument("BrauerDiagram: not a perfect matching");
    }
  }
  static BrauerDiagram identity(int n) {
    std::vector<std::uint8_t> p(2 * n);
    for (int i = 0; i < n; ++i) {
      p[i] = static_cast<std::uint8_t>(n + i);
      p[n + i] = static_cast<std::uint8_t>(i);
    }
    return BrauerDiagram(n, std::move(p));
  }

  int size() const { return n_; }
  int partner(int v) const { return partner_[v]; }
  const std::vector<std::uint8_t>& partners() const { return partner_; }

  // edges with smaller code first, sorted: exactly the canonical edge list
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> e;
    for (int v = 0; v < 2 * n_; ++v)
      if (partner_[v] > v) e.emplace_back(v, partner_[v]);
    return e;
  }

  int horizontal_top() const {
    int c = 0;
    for (int v = 0; v < n_; ++v)
      if (partner_[v] > v && partner_[v] < n_) ++c;
    return c;
  }
  int horizontal_bottom() const {
    int c = 0;
    for (int v = n_; v < 2 * n_; ++v)
      if (partner_[v] > v) ++c;
    return c;
  }

  bool is_permutation() const { return horizontal_top() == 0; }

  // top and bottom rows swapped; the * anti-involution on diagrams
  BrauerDiagram star() const {
    auto flip = [this](int v) { return v < n_ ? v + n_ : v - n_; };
    std::vector<std::uint8_t> p(2 * n_);
    for (int v = 0; v < 2 * n_; ++v) p[flip(v)] = static_cast<std::uint8_t>(flip(partner_[v]));
    return BrauerDiagram(n_, std::move(p));
  }

  // `n=3;[(1,2),(3,1'),(2',3')]`; bit-exact fixture/report format
  std::string str() const {
    auto label = [this](int v) {
      return v < n_ ? std::to_string(v + 1) : std::to_string(v - n_ + 1) + "'";
    };
    std::string s = "n=" + std::to_string(n_) + ";[";
    bool first = true;
    for (auto [a, b] : edges()) {
      if (!first) s += ",";
      first = false;
      s += "(" + label(a) + "," + label(b) + ")";
    }
    return s + "]";
  }

  friend bool operator==(const BrauerDiagram& a, const BrauerDiagram& b) {
    return a.n_ == b.n_ && a.partner_ == b.partner_;
  }
  friend bool operator<(const BrauerDiagram& a, const BrauerDiagram& b) {
    return a.partner_ < b.partner_;
  }

 private:
  int n_ = 0;
  std::vector<std::uint8_t> partner_;
};

struct ComposeResult {
  BrauerDiagram diagram;
  int loops = 0;
};

// Stacks d1 above d2, identifying d1's bottom row with d2's top row, and
// counts the interior loops removed.
ComposeResult compose(const BrauerDiagram& d1, const BrauerDiagram& d2);

// Generators as diagrams.
BrauerDiagram brauer_s(int i, int n);
BrauerDiagram brauer_e(int i, int n);
BrauerDiagram e_st(int s, int t, int n);
BrauerDiagram perm_diagram(const Permutation& p);

// Process-wide intern table; diagram ids are stable and unique per size n.
class DiagramRegistry {
 public:
  static DiagramRegistry& get();

  std::uint32_t intern(const BrauerDiagram& d);
  const BrauerDiagram& diagram(int n, std::uint32_t id) const;

  // Ids of all (2n-1)!! diagrams of size n, in canonical (lexicographic
  // partner array) order. Enumerated once per n.
  const std::vector<std::uint32_t>& all(int n);

 private:
  DiagramRegistry() = default;
  struct Table;
  Table& table(int n);
  const Table& table(int n) const;
};

// Ids of the diagrams spanning the ideal generated by e_1 e_3 ... e_{2f-1}:
// those with at least f horizontal edges per row. Canonical order.
std::vector<std::uint32_t> ideal_basis(int n, int f);

struct DiagramWord {
  Permutation sigma1;  // d = sigma1 . (e_1 e_3 ... e_{2f-1}) . sigma2, loop-free
  int f = 0;
  Permutation sigma2;
};

DiagramWord diagram_to_word(const BrauerDiagram& d);

// Factorization d = y . e_{s,t} for a diagram with exactly one horizontal
// edge per row; (s,t) is the bottom arc.
std::pair<Permutation, std::pair<int, int>> factor_two_horizontal(const BrauerDiagram& d);

// ---------------------------------------------------------------------------
// Linear combinations of diagrams over an exact coefficient ring R. The loop
// parameter delta is a ring element carried by the element itself.

template <class R>
struct AlgebraElement {
  int n = 0;
  R delta{};
  std::map<std::uint32_t, R> terms;  // diagram id -> nonzero coefficient

  static AlgebraElement one(int n, const R& delta) {
    AlgebraElement a{n, delta, {}};
    a.terms[DiagramRegistry::get().intern(BrauerDiagram::identity(n))] = R(1);
    return a;
  }
  static AlgebraElement of(const BrauerDiagram& d, const R& delta) {
    AlgebraElement a{d.size(), delta, {}};
    a.terms[DiagramRegistry::get().intern(d)] = R(1);
    return a;
  }

  void add_term(std::uint32_t id, const R& c) {
    if (c.is_zero()) return;
    auto it = terms.find(id);
    if (it == terms.end())
      terms.emplace(id, c);
    else {
      it->second += c;
      if (it->second.is_zero()) terms.erase(it);
    }
  }

  AlgebraElement& operator+=(const AlgebraElement& o) {
    check_compatible(o);
    for (const auto& [id, c] : o.terms) add_term(id, c);
    return *this;
  }
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }

  AlgebraElement scaled(const R& c) const {
    AlgebraElement r{n, delta, {}};
    if (c.is_zero()) return r;
    for (const auto& [id, cc] : terms) r.terms.emplace(id, cc * c);
    return r;
  }
  AlgebraElement operator-() const { return scaled(R(-1)); }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) {
    return a += b.scaled(R(-1));
  }

  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
    a.check_compatible(b);
    auto& reg = DiagramRegistry::get();
    AlgebraElement r{a.n, a.delta, {}};
    for (const auto& [ida, ca] : a.terms)
      for (const auto& [idb, cb] : b.terms) {
        ComposeResult cr = compose(reg.diagram(a.n, ida), reg.diagram(a.n, idb));
        R coeff = ca * cb;
        for (int k = 0; k < cr.loops; ++k) coeff *= a.delta;
        r.add_term(reg.intern(cr.diagram), coeff);
      }
    return r;
  }

  AlgebraElement star() const {
    auto& reg = DiagramRegistry::get();
    AlgebraElement r{n, delta, {}};
    for (const auto& [id, c] : terms) r.terms.emplace(reg.intern(reg.diagram(n, id).star()), c);
    return r;
  }

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.n == b.n && a.delta == b.delta && a.terms == b.terms;
  }

 private:
  void check_compatible(const AlgebraElement& o) const {
    if (n != o.n) throw std::invalid_argument("AlgebraElement: size mismatch");
    if (!(delta == o.delta)) throw std::invalid_argument("AlgebraElement: delta mismatch");
  }
};

// x_lambda = sum of S_lambda, y_lambda = signed sum; as algebra elements of
// size n with the Young subgroup on the first |lambda| letters.
template <class R>
AlgebraElement<R> x_lambda(const Partition& lam, int n, const R& delta) {
  AlgebraElement<R> a{n, delta, {}};
  for (const auto& w : young_subgroup(lam, n))
    a.add_term(DiagramRegistry::get().intern(perm_diagram(w)), R(1));
  return a;
}

template <class R>
AlgebraElement<R> y_lambda(const Partition& lam, int n, const R& delta) {
  AlgebraElement<R> a{n, delta, {}};
  for (const auto& w : young_subgroup(lam, n))
    a.add_term(DiagramRegistry::get().intern(perm_diagram(w)), R(w.sign()));
  return a;
}

}  // namespace blab
