#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "blab/linalg.hpp"
#include "blab/tensor.hpp"
#include "oracle_helpers.hpp"

using namespace blab;

namespace {

const Rationals fq;

TensorVector<Rational> basis(int m, std::vector<int> idx) {
  return TensorVector<Rational>::basis(m, static_cast<int>(idx.size()), code_of(idx));
}

TensorVector<Rational> random_vector(int m, int n, int terms = 4) {
  std::uniform_int_distribution<long> coeff(-5, 5);
  std::uniform_int_distribution<int> entry(1, 2 * m);
  TensorVector<Rational> v(m, n);
  for (int t = 0; t < terms; ++t) {
    std::vector<int> idx(n);
    for (auto& e : idx) e = entry(blab::testing::rng());
    v.add_term(code_of(idx), fq.from_int(coeff(blab::testing::rng())));
  }
  return v;
}

AlgebraElement<Rational> elem(const BrauerDiagram& d, int m) {
  return AlgebraElement<Rational>::of(d, Rational(-2 * m));
}

}  // namespace

TEST_CASE("form and dual basis") {
  CHECK(form_sign(1, 1, 2) == 1);
  CHECK(form_sign(1, 2, 1) == -1);
  CHECK(form_sign(1, 1, 1) == 0);
  CHECK(dual_index(2, 3) == std::make_pair(2, -1));
  CHECK(dual_index(2, 1) == std::make_pair(4, 1));

  // <v_i, v_j^*> = delta_ij
  for (int m = 1; m <= 3; ++m)
    for (int i = 1; i <= 2 * m; ++i)
      for (int j = 1; j <= 2 * m; ++j) {
        auto [jd, sign] = dual_index(m, j);
        CHECK(form_sign(m, i, jd) * sign == (i == j ? 1 : 0));
      }

  // Gram matrix of the form is J = sum_{i<=m} E_{i,i'} - sum_{i>m} E_{i,i'}
  int m = 2;
  for (int i = 1; i <= 2 * m; ++i)
    for (int j = 1; j <= 2 * m; ++j) {
      int expected = 0;
      if (j == 2 * m + 1 - i) expected = i <= m ? 1 : -1;
      CHECK(form_sign(m, i, j) == expected);
    }
}

TEST_CASE("generator action") {
  // (v1 (x) v2) s1 = -v2 (x) v1
  auto v = act_generator(fq, basis(1, {1, 2}), 's', 1);
  CHECK(v == basis(1, {2, 1}).scaled(Rational(-1)));

  // (v1 (x) v1) e1 = 0
  CHECK(act_generator(fq, basis(1, {1, 1}), 'e', 1).is_zero());

  // m=1: (v1 (x) v2) e1 = -(v1 (x) v2 - v2 (x) v1) = -alpha
  auto e = act_generator(fq, basis(1, {1, 2}), 'e', 1);
  auto al = alpha(fq, 1);
  CHECK(al == basis(1, {1, 2}) - basis(1, {2, 1}));
  CHECK(e == al.scaled(Rational(-1)));

  CHECK_THROWS(act_generator(fq, basis(1, {1, 2}), 's', 2));
}

TEST_CASE("element action basics") {
  int m = 1, n = 3;
  auto v = random_vector(m, n);
  auto one = AlgebraElement<Rational>::one(n, Rational(-2 * m));
  CHECK(act_element(fq, v, one) == v);

  // alpha . e_1 = -2m alpha
  for (int mm : {1, 2}) {
    auto al = alpha(fq, mm);
    auto res = act_element(fq, al, elem(brauer_e(1, 2), mm));
    CHECK(res == al.scaled(Rational(-2 * mm)));
  }

  // wrong loop parameter must be rejected
  auto bad = AlgebraElement<Rational>::of(brauer_e(1, 2), Rational(7));
  CHECK_THROWS((void)act_element(fq, alpha(fq, 1), bad));
}

TEST_CASE("diagram action is a right representation") {
  // act(act(v, d1), d2) = act(v, d1 * d2) exhaustively for n = 3, m = 1
  auto& reg = DiagramRegistry::get();
  for (int m : {1}) {
    for (auto id1 : reg.all(3))
      for (auto id2 : reg.all(3)) {
        auto v = random_vector(m, 3, 2);
        auto lhs = act_element(fq, act_element(fq, v, elem(reg.diagram(3, id1), m)),
                               elem(reg.diagram(3, id2), m));
        auto rhs = act_element(fq, v, elem(reg.diagram(3, id1), m) * elem(reg.diagram(3, id2), m));
        CHECK(lhs == rhs);
      }
  }
  // spot-checked pairs for n = 4, m = 2 over Q and F_3
  PrimeField f3(3);
  for (int t = 0; t < 60; ++t) {
    std::uniform_int_distribution<size_t> d(0, reg.all(4).size() - 1);
    auto d1 = reg.diagram(4, reg.all(4)[d(blab::testing::rng())]);
    auto d2 = reg.diagram(4, reg.all(4)[d(blab::testing::rng())]);
    Code c = all_codes(2, 4)[t % 256];
    {
      auto v = TensorVector<Rational>::basis(2, 4, c);
      auto a1 = elem(d1, 2), a2 = elem(d2, 2);
      CHECK(act_element(fq, act_element(fq, v, a1), a2) == act_element(fq, v, a1 * a2));
    }
    {
      auto v = TensorVector<Fp>::basis(2, 4, c);
      auto a1 = AlgebraElement<Fp>::of(d1, f3.from_int(-4));
      auto a2 = AlgebraElement<Fp>::of(d2, f3.from_int(-4));
      CHECK(act_element(f3, act_element(f3, v, a1), a2) == act_element(f3, v, a1 * a2));
    }
  }
}

TEST_CASE("contraction and expansion") {
  // C_{1,2}(v1 (x) v2) = <v1,v2> = 1 as a 0-tensor (m = 1)
  auto c = contraction(fq, basis(1, {1, 2}), 1, 2);
  CHECK(c.n == 0);
  REQUIRE(c.c.size() == 1);
  CHECK(c.c.begin()->second == Rational(1));

  // D_{1,2} of the empty tensor is alpha
  TensorVector<Rational> scalar(1, 0);
  scalar.add_term(0, fq.one());
  CHECK(expansion(fq, scalar, 1, 2) == alpha(fq, 1));

  // v . e_{s,t} = -C_{s,t} D_{s,t}(v) on random vectors, all pairs, n=4, m=2
  for (int s = 1; s <= 3; ++s)
    for (int t = s + 1; t <= 4; ++t)
      for (int trial = 0; trial < 5; ++trial) {
        auto v = random_vector(2, 4);
        auto lhs = act_element(fq, v, elem(e_st(s, t, 4), 2));
        auto rhs = expansion(fq, contraction(fq, v, s, t), s, t).scaled(Rational(-1));
        CHECK(lhs == rhs);
      }
}

TEST_CASE("bilinear form") {
  // <v1 (x) v2, v2 (x) v1> = form(1,2) * form(2,1) = -1 at m = 1
  CHECK(bilinear(fq, basis(1, {1, 2}), basis(1, {2, 1})) == Rational(-1));

  // adjointness <v x, w> = <v, w x*>
  auto& reg = DiagramRegistry::get();
  for (int t = 0; t < 40; ++t) {
    std::uniform_int_distribution<size_t> d(0, reg.all(3).size() - 1);
    auto x = elem(reg.diagram(3, reg.all(3)[d(blab::testing::rng())]), 1);
    auto v = random_vector(1, 3), w = random_vector(1, 3);
    CHECK(bilinear(fq, act_element(fq, v, x), w) == bilinear(fq, v, act_element(fq, w, x.star())));
  }

  // nondegeneracy: the Gram matrix over the full basis has rank (2m)^n
  auto codes = all_codes(1, 3);
  Mat<Rationals> G(fq, 8, 8);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      G.at(i, j) = bilinear(fq, TensorVector<Rational>::basis(1, 3, codes[i]),
                            TensorVector<Rational>::basis(1, 3, codes[j]));
  CHECK(rref_in_place(fq, G).rank == 8);
}

TEST_CASE("distinguished vectors") {
  // m=1: alpha = v1 (x) v2 - v2 (x) v1
  CHECK(alpha(fq, 1) == basis(1, {1, 2}) - basis(1, {2, 1}));

  // z(0,(2)) = v1 (x) v1
  CHECK(z_vector(fq, 1, 2, 0, {2}) == basis(1, {1, 1}));
  CHECK(z_vector(fq, 2, 2, 0, {2}) == basis(2, {1, 1}));

  // m=2: z(0,(1,1)) = v1 (x) v2 - v2 (x) v1
  CHECK(z_vector(fq, 2, 2, 0, {1, 1}) == basis(2, {1, 2}) - basis(2, {2, 1}));

  // z(g, empty) = alpha^(x)g
  CHECK(z_vector(fq, 1, 2, 1, {}) == alpha(fq, 1));

  // z(g,lambda) != 0 for all valid (g,lambda), m <= 3, n <= 6
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 6; ++n)
      for (int g = 0; 2 * g <= n; ++g)
        for (const auto& lam : partitions_of(n - 2 * g, m)) {
          CAPTURE(m);
          CAPTURE(n);
          CAPTURE(g);
          CHECK(!z_vector(fq, m, n, g, lam).is_zero());
        }

  CHECK_THROWS(z_vector(fq, 1, 3, 0, {1}));     // |lambda| != n - 2g
  CHECK_THROWS(z_vector(fq, 1, 4, 1, {1, 1}));  // too many parts
}

TEST_CASE("weights") {
  CHECK(weight_of(2, code_of({1, 1}), 2) == Weight{2, 0});
  CHECK(weight_of(1, code_of({1, 2}), 2) == Weight{0});
  CHECK(weight_of(2, code_of({3, 4, 1}), 3) == Weight{0, -1});

  // m=1, n=2: the zero-weight block is {(1,2),(2,1)}
  const auto& wb = WeightBlocks::get(1, 2);
  int b = wb.block_of(Weight{0});
  REQUIRE(b >= 0);
  CHECK(wb.codes[b] == std::vector<Code>{code_of({1, 2}), code_of({2, 1})});

  // weights are invariant under the place permutation of s_j
  for (int t = 0; t < 50; ++t) {
    std::uniform_int_distribution<int> entry(1, 4), pos(1, 3);
    std::vector<int> idx(4);
    for (auto& e : idx) e = entry(blab::testing::rng());
    int j = pos(blab::testing::rng());
    auto swapped = idx;
    std::swap(swapped[j - 1], swapped[j]);
    CHECK(weight_of(2, code_of(idx), 4) == weight_of(2, code_of(swapped), 4));
  }

  // block sizes add up to the full dimension
  for (int m = 1; m <= 2; ++m)
    for (int n = 1; n <= 4; ++n) {
      const auto& blocks = WeightBlocks::get(m, n);
      size_t total = 0;
      for (const auto& cs : blocks.codes) total += cs.size();
      CHECK(total == all_codes(m, n).size());
    }
}

TEST_CASE("brauer action preserves weight blocks") {
  auto& reg = DiagramRegistry::get();
  const auto& wb = WeightBlocks::get(2, 3);
  for (auto id : reg.all(3)) {
    for (Code c : all_codes(2, 3)) {
      auto img = act_element(fq, TensorVector<Rational>::basis(2, 3, c), elem(reg.diagram(3, id), 2));
      Weight w = weight_of(2, c, 3);
      for (const auto& [k, coeff] : img.c) CHECK(weight_of(2, k, 3) == w);
      (void)wb;
    }
  }
}

TEST_CASE("tensor text format") {
  auto v = basis(2, {1, 2, 4}) - basis(2, {2, 1, 4});
  CHECK(v.str(fq) == "m=2;n=3;{(1,2,4): 1/1, (2,1,4): -1/1}");
  CHECK(TensorVector<Rational>(1, 2).str(fq) == "m=1;n=2;{}");
}
