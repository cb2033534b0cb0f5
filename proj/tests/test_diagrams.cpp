#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "blab/diagrams.hpp"
#include "blab/scalars.hpp"
#include "oracle_helpers.hpp"

using namespace blab;

namespace {

AlgebraElement<Rational> elem(const BrauerDiagram& d, int m) {
  return AlgebraElement<Rational>::of(d, Rational(-2 * m));
}

std::uint32_t random_diagram_id(int n) {
  auto& all = DiagramRegistry::get().all(n);
  std::uniform_int_distribution<size_t> d(0, all.size() - 1);
  return all[d(blab::testing::rng())];
}

}  // namespace

TEST_CASE("composition of generators") {
  // e1 * e1 has one interior loop and reproduces e1
  auto r = compose(brauer_e(1, 2), brauer_e(1, 2));
  CHECK(r.diagram == brauer_e(1, 2));
  CHECK(r.loops == 1);

  // s1 * s1 is the identity, no loops
  r = compose(brauer_s(1, 2), brauer_s(1, 2));
  CHECK(r.diagram == BrauerDiagram::identity(2));
  CHECK(r.loops == 0);

  // e1 e2 e1 = e1 with no loops (n = 3)
  auto r12 = compose(brauer_e(1, 3), brauer_e(2, 3));
  CHECK(r12.loops == 0);
  auto r121 = compose(r12.diagram, brauer_e(1, 3));
  CHECK(r121.diagram == brauer_e(1, 3));
  CHECK(r121.loops == 0);

  CHECK_THROWS(compose(brauer_e(1, 2), brauer_e(1, 3)));
}

TEST_CASE("diagram text format") {
  CHECK(e_st(1, 3, 3).str() == "n=3;[(1,3),(2,2'),(1',3')]");
  CHECK(brauer_s(1, 2).str() == "n=2;[(1,2'),(2,1')]");
  CHECK(BrauerDiagram::identity(2).str() == "n=2;[(1,1'),(2,2')]");
}

TEST_CASE("generator diagrams") {
  CHECK(e_st(1, 2, 2) == brauer_e(1, 2));
  CHECK(e_st(2, 3, 5) == brauer_e(2, 5));
  CHECK_THROWS(e_st(3, 3, 4));
  CHECK_THROWS(brauer_s(4, 4));
}

TEST_CASE("algebra multiplication") {
  // e1^2 = -2m e1 at m = 1
  auto e1 = elem(brauer_e(1, 2), 1);
  CHECK(e1 * e1 == e1.scaled(Rational(-2)));

  // s1 e2 e1 = s2 e1 as diagrams (n = 3)
  auto s1 = elem(brauer_s(1, 3), 1);
  auto e2 = elem(brauer_e(2, 3), 1);
  auto e1n3 = elem(brauer_e(1, 3), 1);
  auto s2 = elem(brauer_s(2, 3), 1);
  CHECK(s1 * e2 * e1n3 == s2 * e1n3);

  // identity acts as the unit on 20 random diagrams
  auto one = AlgebraElement<Rational>::one(4, Rational(-2));
  for (int t = 0; t < 20; ++t) {
    auto d = elem(DiagramRegistry::get().diagram(4, random_diagram_id(4)), 1);
    CHECK(one * d == d);
    CHECK(d * one == d);
  }

  auto badDelta = AlgebraElement<Rational>::of(brauer_e(1, 2), Rational(-4));
  CHECK_THROWS((void)(e1 * badDelta));
}

TEST_CASE("star anti-involution") {
  CHECK(brauer_e(1, 2).star() == brauer_e(1, 2));
  CHECK(brauer_e(2, 5).star() == brauer_e(2, 5));
  CHECK(brauer_s(1, 3).star() == brauer_s(1, 3));

  // star of the diagram of s1 s2 is the diagram of s2 s1
  auto s1s2 = compose(brauer_s(1, 3), brauer_s(2, 3)).diagram;
  auto s2s1 = compose(brauer_s(2, 3), brauer_s(1, 3)).diagram;
  CHECK(s1s2.star() == s2s1);

  for (int t = 0; t < 20; ++t) {
    auto d = DiagramRegistry::get().diagram(4, random_diagram_id(4));
    CHECK(d.star().star() == d);
  }

  // (ab)* = b* a* on random algebra elements
  for (int t = 0; t < 20; ++t) {
    auto a = elem(DiagramRegistry::get().diagram(4, random_diagram_id(4)), 2);
    auto b = elem(DiagramRegistry::get().diagram(4, random_diagram_id(4)), 2);
    CHECK((a * b).star() == b.star() * a.star());
  }
}

TEST_CASE("diagram census matches (2n-1)!!") {
  for (int n = 1; n <= 6; ++n) {
    auto matchings = blab::testing::brute_force_matchings(n);  // independent oracle
    CHECK(static_cast<long long>(matchings.size()) == blab::testing::double_factorial_odd(n));
    CHECK(DiagramRegistry::get().all(n).size() == matchings.size());
  }
}

TEST_CASE("ideal bases") {
  auto& reg = DiagramRegistry::get();

  auto b21 = ideal_basis(2, 1);
  REQUIRE(b21.size() == 1);
  CHECK(reg.diagram(2, b21[0]) == brauer_e(1, 2));

  // oracle: matchings on 6 vertices with >= 2 horizontal edges
  int expected = 0;
  for (const auto& mtch : blab::testing::brute_force_matchings(3))
    if (blab::testing::top_arcs(mtch, 3) >= 1) ++expected;
  CHECK(expected == 9);
  CHECK(ideal_basis(3, 1).size() == 9);

  // 3 top matchings x 3 bottom matchings of 4 points
  CHECK(ideal_basis(4, 2).size() == 9);

  // empty ideal just beyond [n/2]
  CHECK(ideal_basis(4, 3).empty());
  CHECK(ideal_basis(5, 3).empty());
  CHECK_THROWS(ideal_basis(4, 4));
}

TEST_CASE("ideal closure under multiplication") {
  for (int n = 2; n <= 5; ++n) {
    auto& reg = DiagramRegistry::get();
    for (int f = 1; f <= n / 2; ++f) {
      auto basis_ids = ideal_basis(n, f);
      std::set<std::uint32_t> ideal(basis_ids.begin(), basis_ids.end());
      std::vector<BrauerDiagram> gens;
      for (int i = 1; i < n; ++i) {
        gens.push_back(brauer_s(i, n));
        gens.push_back(brauer_e(i, n));
      }
      for (auto id : ideal)
        for (const auto& g : gens) {
          CHECK(ideal.count(reg.intern(compose(reg.diagram(n, id), g).diagram)));
          CHECK(ideal.count(reg.intern(compose(g, reg.diagram(n, id)).diagram)));
        }
    }
  }
}

TEST_CASE("two-horizontal-edge factorization") {
  auto [y0, st0] = factor_two_horizontal(brauer_e(1, 2));
  CHECK(y0.is_identity());
  CHECK(st0 == std::make_pair(1, 2));

  auto [y1, st1] = factor_two_horizontal(e_st(1, 3, 3));
  CHECK(y1.is_identity());
  CHECK(st1 == std::make_pair(1, 3));

  // exhaustive over all diagrams with exactly one horizontal edge per row
  auto& reg = DiagramRegistry::get();
  int count = 0;
  for (auto id : reg.all(4)) {
    const auto& d = reg.diagram(4, id);
    if (d.horizontal_top() != 1) continue;
    ++count;
    auto [y, st] = factor_two_horizontal(d);
    auto r = compose(perm_diagram(y), e_st(st.first, st.second, 4));
    CHECK(r.loops == 0);
    CHECK(r.diagram == d);
  }
  CHECK(count == 72);  // 6 top arcs x 6 bottom arcs x 2 matchings of the through strands

  CHECK_THROWS(factor_two_horizontal(BrauerDiagram::identity(3)));
}

TEST_CASE("normal form sigma1 . e-block . sigma2") {
  auto w0 = diagram_to_word(BrauerDiagram::identity(3));
  CHECK(w0.f == 0);
  CHECK(w0.sigma1.is_identity());
  CHECK(w0.sigma2.is_identity());

  auto w1 = diagram_to_word(brauer_e(2, 3));
  CHECK(w1.f == 1);

  auto& reg = DiagramRegistry::get();
  for (int n = 1; n <= 4; ++n) {
    for (auto id : reg.all(n)) {
      const auto& d = reg.diagram(n, id);
      auto w = diagram_to_word(d);
      BrauerDiagram acc = perm_diagram(w.sigma1);
      int loops = 0;
      for (int i = 0; i < w.f; ++i) {
        auto r = compose(acc, brauer_e(2 * i + 1, n));
        acc = r.diagram;
        loops += r.loops;
      }
      auto r = compose(acc, perm_diagram(w.sigma2));
      acc = r.diagram;
      loops += r.loops;
      CHECK(acc == d);
      CHECK(loops == 0);
    }
  }
}

TEST_CASE("group elements") {
  // x_(2) = 1 + s1
  auto x2 = x_lambda<Rational>({2}, 2, Rational(-2));
  auto expected = AlgebraElement<Rational>::one(2, Rational(-2)) + elem(brauer_s(1, 2), 1);
  CHECK(x2 == expected);

  // w_(2,1) maps 1->1, 2->3, 3->2
  CHECK(w_lambda({2, 1}, 3).one_line() == std::vector<int>{1, 3, 2});
  CHECK(w_lambda({3}, 3).is_identity());
  CHECK(w_lambda({1, 1}, 2).is_identity());
  // column insertion order for a 2x2 shape
  CHECK(w_lambda({2, 2}, 4).one_line() == std::vector<int>{1, 3, 2, 4});

  // y_(2) = 1 - s1 is the signed sum over S_(2) = S_2; the Young subgroup
  // S_(1,1) is trivial, so y_(1,1) is the identity.
  auto y2 = y_lambda<Rational>({2}, 2, Rational(-2));
  auto expectedY = AlgebraElement<Rational>::one(2, Rational(-2)) - elem(brauer_s(1, 2), 1);
  CHECK(y2 == expectedY);
  CHECK(y_lambda<Rational>({1, 1}, 2, Rational(-2)) ==
        AlgebraElement<Rational>::one(2, Rational(-2)));

  CHECK_THROWS(x_lambda<Rational>({3, 1}, 3, Rational(-2)));
}

TEST_CASE("presentation relations hold on diagrams") {
  for (int m : {1, 2, 3}) {
    Rational delta(-2 * m);
    for (int n = 2; n <= 5; ++n) {
      auto S = [&](int i) { return AlgebraElement<Rational>::of(brauer_s(i, n), delta); };
      auto E = [&](int i) { return AlgebraElement<Rational>::of(brauer_e(i, n), delta); };
      auto one = AlgebraElement<Rational>::one(n, delta);
      for (int i = 1; i < n; ++i) {
        CHECK(S(i) * S(i) == one);                          // R1
        CHECK(E(i) * E(i) == E(i).scaled(delta));           // R2
        CHECK(E(i) * S(i) == E(i));                         // R3
        CHECK(S(i) * E(i) == E(i));                         // R3
        for (int j = i + 2; j < n; ++j) {
          CHECK(S(i) * S(j) == S(j) * S(i));                // R4
          CHECK(S(i) * E(j) == E(j) * S(i));                // R5
          CHECK(E(i) * E(j) == E(j) * E(i));                // R6
        }
        if (i + 1 < n) {
          CHECK(S(i) * S(i + 1) * S(i) == S(i + 1) * S(i) * S(i + 1));  // R7
          CHECK(E(i) * E(i + 1) * E(i) == E(i));                        // R8
          CHECK(E(i + 1) * E(i) * E(i + 1) == E(i + 1));                // R8
          CHECK(S(i) * E(i + 1) * E(i) == S(i + 1) * E(i));             // R9
          CHECK(E(i + 1) * E(i) * S(i + 1) == E(i + 1) * S(i));         // R10
        }
      }
    }
  }
}

TEST_CASE("multiplication is associative on random triples") {
  for (int n = 2; n <= 5; ++n) {
    for (int t = 0; t < 15; ++t) {
      auto a = elem(DiagramRegistry::get().diagram(n, random_diagram_id(n)), 1);
      auto b = elem(DiagramRegistry::get().diagram(n, random_diagram_id(n)), 1);
      auto c = elem(DiagramRegistry::get().diagram(n, random_diagram_id(n)), 1);
      CHECK((a * b) * c == a * (b * c));
    }
  }
}
