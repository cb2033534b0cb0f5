#include "blab/experiments.hpp"

#include <chrono>

namespace blab {

long long ideal_dimension_prediction(int m, int n, int fidx) {
  long long total = 0;
  for (const auto& lam : pi_f(m, n, fidx)) total += updown_count(lam, n, m) * dim_weyl(lam, m);
  return total;
}

long long commutant_prediction(int m, int n, int fidx) {
  long long total = 0;
  for (int s = 0; s < fidx; ++s)
    for (const auto& lam : partitions_of(n - 2 * s, m)) {
      long long mult = tensor_multiplicity(lam, n, m);
      total += mult * mult;
    }
  return total;
}

std::vector<std::string> suite_names() {
  return {"presentation", "basis-count", "dimension",     "duality", "maximal",
          "surjectivity", "injectivity", "decomposition", "bmw",     "harmonic-kernel"};
}

namespace {

using Clock = std::chrono::steady_clock;
using Params = std::vector<std::pair<std::string, std::string>>;

struct RowBuilder {
  std::vector<CheckResult>& out;
  std::string check;
  Params base;

  void add(Params extra, std::string expected, std::string provenance, std::string computed,
           bool pass, long long millis) {
    CheckResult r;
    r.check = check;
    r.params = base;
    for (auto& kv : extra) r.params.push_back(std::move(kv));
    r.expected = std::move(expected);
    r.expected_provenance = std::move(provenance);
    r.computed = std::move(computed);
    r.pass = pass;
    r.millis = millis;
    out.push_back(std::move(r));
  }
};

long long ms_since(Clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

std::string istr(long long v) { return std::to_string(v); }

// --------------------------------------------------------------- presentation

// Relation pairs (lhs, rhs) of one of the ten defining families.
template <class R>
std::vector<std::pair<AlgebraElement<R>, AlgebraElement<R>>> relation_equations(int n,
                                                                                const R& delta,
                                                                                int family) {
  auto S = [&](int i) { return AlgebraElement<R>::of(brauer_s(i, n), delta); };
  auto E = [&](int i) { return AlgebraElement<R>::of(brauer_e(i, n), delta); };
  auto one = AlgebraElement<R>::one(n, delta);

  std::vector<std::pair<AlgebraElement<R>, AlgebraElement<R>>> eqs;
  for (int i = 1; i < n; ++i) {
    switch (family) {
      case 1: eqs.emplace_back(S(i) * S(i), one); break;
      case 2: eqs.emplace_back(E(i) * E(i), E(i).scaled(delta)); break;
      case 3:
        eqs.emplace_back(E(i) * S(i), E(i));
        eqs.emplace_back(S(i) * E(i), E(i));
        break;
      default: break;
    }
    for (int j = i + 2; j < n; ++j) {
      switch (family) {
        case 4: eqs.emplace_back(S(i) * S(j), S(j) * S(i)); break;
        case 5: eqs.emplace_back(S(i) * E(j), E(j) * S(i)); break;
        case 6: eqs.emplace_back(E(i) * E(j), E(j) * E(i)); break;
        default: break;
      }
    }
    if (i + 1 < n) {
      switch (family) {
        case 7: eqs.emplace_back(S(i) * S(i + 1) * S(i), S(i + 1) * S(i) * S(i + 1)); break;
        case 8:
          eqs.emplace_back(E(i) * E(i + 1) * E(i), E(i));
          eqs.emplace_back(E(i + 1) * E(i) * E(i + 1), E(i + 1));
          break;
        case 9: eqs.emplace_back(S(i) * E(i + 1) * E(i), S(i + 1) * E(i)); break;
        case 10: eqs.emplace_back(E(i + 1) * E(i) * S(i + 1), E(i + 1) * S(i)); break;
        default: break;
      }
    }
  }
  return eqs;
}

// One side of a relation as a word in generator actions plus an overall
// scalar multiple of the loop parameter.
struct RelationSide {
  std::vector<std::pair<char, int>> word;  // ('s'|'e', index), applied left to right
  int delta_power = 0;                     // multiply by delta^power afterwards
};

// The ten defining relation families as pairs of generator words. Evaluating
// them by sequential generator actions keeps the check independent of the
// diagram-algebra product (which satisfies the same relations and is tested
// separately).
std::vector<std::pair<RelationSide, RelationSide>> relation_words(int n, int family) {
  std::vector<std::pair<RelationSide, RelationSide>> eqs;
  using W = std::vector<std::pair<char, int>>;
  for (int i = 1; i < n; ++i) {
    switch (family) {
      case 1: eqs.push_back({{W{{'s', i}, {'s', i}}}, {W{}}}); break;
      case 2: eqs.push_back({{W{{'e', i}, {'e', i}}}, {W{{'e', i}}, 1}}); break;
      case 3:
        eqs.push_back({{W{{'e', i}, {'s', i}}}, {W{{'e', i}}}});
        eqs.push_back({{W{{'s', i}, {'e', i}}}, {W{{'e', i}}}});
        break;
      default: break;
    }
    for (int j = i + 2; j < n; ++j) {
      switch (family) {
        case 4: eqs.push_back({{W{{'s', i}, {'s', j}}}, {W{{'s', j}, {'s', i}}}}); break;
        case 5: eqs.push_back({{W{{'s', i}, {'e', j}}}, {W{{'e', j}, {'s', i}}}}); break;
        case 6: eqs.push_back({{W{{'e', i}, {'e', j}}}, {W{{'e', j}, {'e', i}}}}); break;
        default: break;
      }
    }
    if (i + 1 < n) {
      switch (family) {
        case 7:
          eqs.push_back({{W{{'s', i}, {'s', i + 1}, {'s', i}}},
                         {W{{'s', i + 1}, {'s', i}, {'s', i + 1}}}});
          break;
        case 8:
          eqs.push_back({{W{{'e', i}, {'e', i + 1}, {'e', i}}}, {W{{'e', i}}}});
          eqs.push_back({{W{{'e', i + 1}, {'e', i}, {'e', i + 1}}}, {W{{'e', i + 1}}}});
          break;
        case 9:
          eqs.push_back({{W{{'s', i}, {'e', i + 1}, {'e', i}}}, {W{{'s', i + 1}, {'e', i}}}});
          break;
        case 10:
          eqs.push_back({{W{{'e', i + 1}, {'e', i}, {'s', i + 1}}}, {W{{'e', i + 1}, {'s', i}}}});
          break;
        default: break;
      }
    }
  }
  return eqs;
}

// Violations of the family as operator identities on the basis of V^(x)n,
// one side evaluated generator by generator.
template <class F>
long long relation_violations(const F& f, int m, int n, int family) {
  auto eqs = relation_words(n, family);
  auto codes = all_codes(m, n);
  typename F::Elem delta = f.from_int(-2 * m);

  auto evaluate = [&](const RelationSide& side, Code c) {
    auto v = TensorVector<typename F::Elem>::basis(m, n, c);
    for (const auto& [kind, j] : side.word) v = act_generator(f, v, kind, j);
    for (int p = 0; p < side.delta_power; ++p) v = v.scaled(delta);
    return v;
  };

  std::vector<long long> violations(eqs.size(), 0);
  par::for_each(eqs.size(), [&](std::size_t e) {
    for (Code c : codes)
      if (!(evaluate(eqs[e].first, c) == evaluate(eqs[e].second, c))) ++violations[e];
  });
  long long total = 0;
  for (auto v : violations) total += v;
  return total;
}

void suite_presentation(const ExperimentSpec& spec, std::vector<CheckResult>& out) {
  RowBuilder rb{out, "presentation", {{"m", istr(spec.m)}, {"n", istr(spec.n)}}};

  // diagram level: the relations hold in the algebra itself
  {
    auto t0 = Clock::now();
    long long bad = 0;
    for (int fam = 1; fam <= 10; ++fam)
      for (const auto& [lhs, rhs] : relation_equations(spec.n, Rational(-2 * spec.m), fam))
        if (!(lhs == rhs)) ++bad;
    rb.add({{"level", "diagrams"}}, "0 violations", "paper", istr(bad) + " violations", bad == 0,
           ms_since(t0));
  }

  for (const auto& fs : spec.fields) {
    for (int fam = 1; fam <= 10; ++fam) {
      auto t0 = Clock::now();
      long long bad =
          with_field(fs, [&](auto f) { return relation_violations(f, spec.m, spec.n, fam); });
      rb.add({{"relation", istr(fam)}, {"field", fs.name()}}, "0 violations", "paper",
             istr(bad) + " violations", bad == 0, ms_since(t0));
    }
  }
}

// ---------------------------------------------------------------- basis-count

void suite_basis_count(const ExperimentSpec& spec, std::vector<CheckResult>& out) {
  RowBuilder rb{out, "basis-count", {}};
  for (int n = 1; n <= spec.n; ++n) {
    auto t0 = Clock::now();
    long long expect = 1;
    for (int k = 2 * n - 1; k >= 1; k -= 2) expect *= k;
    long long got = static_cast<long long>(DiagramRegistry::get().all(n).size());
    rb.add({{"n", istr(n)}}, istr(expect), "paper", istr(got), got == expect, ms_since(t0));
  }
}

// ------------------------------------------------------------------ dimension

void suite_dimension(const ExperimentSpec& spec, std::vector<CheckResult>& out) {
  RowBuilder rb{out, "dimension", {{"m", istr(spec.m)}, {"n", istr(spec.n)}}};
  std::vector<int> fs_range;
  if (spec.f.has_value())
    fs_range.push_back(*spec.f);
  else
    for (int f = 0; f <= spec.n / 2; ++f) fs_range.push_back(f);

  for (int fidx : fs_range) {
    long long expect = ideal_dimension_prediction(spec.m, spec.n, fidx);
    std::vector<long long> dims;
    for (const auto& fs : spec.fields) {
      auto t0 = Clock::now();
      long long dim =
          with_field(fs, [&](auto f) { return ideal_image(f, spec.m, spec.n, fidx).total_dim(); });
      dims.push_back(dim);
      rb.add({{"f", istr(fidx)}, {"field", fs.name()}}, istr(expect), "derived", istr(dim),
             dim == expect, ms_since(t0));
    }
    bool same = true;
    for (auto d : dims) same = same && d == dims.front();
    rb.add({{"f", istr(fidx)}, {"field", "all"}}, "dimensions agree across fields", "paper",
           same ? "agree" : "differ", same, 0);
  }
}

// -------------------------------------------------------------------- duality

void suite_duality(const ExperimentSpec& spec, std::vector<CheckResult>& out) {
  RowBuilder rb{out, "duality", {{"m", istr(spec.m)}, {"n", istr(spec.n)}}};
  std::vector<int> fs_range;
  if (spec.f.has_value())
    fs_range.push_back(*spec.f);
  else
    for (int f = 0; f <= spec.n / 2; ++f) fs_range.push_back(f);

  for (const auto& fs : spec.fields) {
    with_field(fs, [&](auto f) {
      for (int fidx : fs_range) {
        auto t0 = Clock::now();
        auto img = ideal_image(f, spec.m, spec.n, fidx);
        auto img1 = ideal_image(f, spec.m, spec.n, fidx + 1);
        auto ht = harmonic_space(f, spec.m, spec.n, fidx);
        long long expect = img.total_dim() - img1.total_dim();
        long long dim = ht.total_dim();
        rb.add({{"f", istr(fidx)}, {"field", fs.name()}, {"part", "dimension"}}, istr(expect),
               "derived", istr(dim), dim == expect, ms_since(t0));

        t0 = Clock::now();
        long long rank = theta_pairing_rank(f, ht, img);
        rb.add({{"f", istr(fidx)}, {"field", fs.name()}, {"part", "pairing"}}, istr(dim), "paper",
               istr(rank), rank == dim, ms_since(t0));
      }
    });
  }
}

// -------------------------------------------------------------------- maximal

void suite_maximal(const ExperimentSpec& spec, std::vector<CheckResult>& out) {
  RowBuilder rb{out, "maximal", {{"m", istr(spec.m)}, {"n", istr(spec.n)}}};
  for (int g = 0; 2 * g <= spec.n; ++g) {
    for (const auto& lam : partitions_of(spec.n - 2 * g, spec.m)) {
      long long expect = updown_count(lam, spec.n, spec.m);
      Params id{{"g", istr(g)}, {"lambda", partition_str(lam)}};
      for (const auto& fs : spec.fields) {
        with_field(fs, [&](auto f) {
          auto t0 = Clock::now();
          auto zs = z_span(f, spec.m, spec.n, g, lam);
          auto mv = maximal_vectors(f, spec.m, spec.n, lam);
          bool equal = zs == mv;
          Params p = id;
          p.push_back({"field", fs.name()});
          p.push_back({"part", "span equality"});
          rb.add(std::move(p), "z-span equals the maximal vector space", "paper",
                 equal ? "equal" : "different", equal, ms_since(t0));

          Params p2 = id;
          p2.push_back({"field", fs.name()});
          p2.push_back({"part", "dimension"});
          rb.add(std::move(p2), istr(expect), "derived", istr(mv.dim()), mv.dim() == expect, 0);
        });
      }
      if (g == 0) {
        long long hooks = standard_tableaux_count(conjugate(lam));
        Params p = id;
        p.push_back({"part", "standard tableaux"});
        rb.add(std::move(p), istr(expect), "derived", istr(hooks), hooks == expect, 0);
      }
    }
  }
}

// --------------------------------------------------------------- surjectivity

void suite_surjectivity(const ExperimentSpec& spec, std::vector<CheckResult>& out) {
  RowBuilder rb{out, "surjectivity", {{"m", istr(spec.m)}, {"n", istr(spec.n)}}};
  std::vector<int> fs_range;
  if (spec.f.has_value())
    fs_range.push_back(*spec.f);
  else
    for (int f = 1; f <= spec.n / 2; ++f) fs_range.push_back(f);

  for (int fidx : fs_range) {
    long long pred = commutant_prediction(spec.m, spec.n, fidx);
    std::vector<long long> values;
    for (const auto& fs : spec.fields) {
      with_field(fs, [&](auto f) {
        auto t0 = Clock::now();
        auto W = ideal_image(f, spec.m, spec.n, fidx);
        long long r1 = brauer_image_rank_on_quotient(f, spec.m, spec.n, W);

        // The commutant solve is the single heaviest computation in the
        // harness and exact rational elimination costs far more per unknown
        // than a prime field does; charge it against the work budget and
        // say so when it is skipped rather than silently stalling.
        long long unknowns = commutant_unknowns(f, spec.m, spec.n, W);
        long long cap = f.characteristic() == 0 ? spec.budget / 10 : spec.budget;
        if (unknowns > cap) {
          bool pass = r1 == pred;
          rb.add({{"f", istr(fidx)}, {"field", fs.name()}}, "image rank = " + istr(pred),
                 "derived",
                 "image rank " + istr(r1) + ", commutant solve skipped (" + istr(unknowns) +
                     " unknowns exceed the work budget; raise --budget to force it)",
                 pass, ms_since(t0));
          return;
        }

        auto A = full_space(f, spec.m, spec.n);
        long long r2 = commutant_dimension(f, A, &W);
        values.push_back(r2);
        bool pass = r1 == r2 && r2 == pred;
        rb.add({{"f", istr(fidx)}, {"field", fs.name()}},
               "image rank = commutant dim = " + istr(pred), "derived",
               "image rank " + istr(r1) + ", commutant dim " + istr(r2), pass, ms_since(t0));
      });
    }
    bool same = true;
    for (auto v : values) same = same && v == values.front();
    if (!values.empty())
      rb.add({{"f", istr(fidx)}, {"field", "all"}}, "dimensions agree across fields", "paper",
             same ? "agree" : "differ", same, 0);

    // Exploratory, never asserted: the endomorphism algebra of the quotient
    // over the Brauer side, whose cross-field behaviour is an open question.
    // Only computed while the quotient stays small.
    long long qdim = 0;
    {
      long long power = 1;
      for (int i = 0; i < spec.n; ++i) power *= 2 * spec.m;
      qdim = power - ideal_dimension_prediction(spec.m, spec.n, fidx);
    }
    if (qdim > 0 && qdim <= 20) {
      for (const auto& fs : spec.fields) {
        with_field(fs, [&](auto f) {
          auto t0 = Clock::now();
          auto W = ideal_image(f, spec.m, spec.n, fidx);
          long long d = brauer_commutant_dimension(f, spec.m, spec.n, W);
          rb.add({{"f", istr(fidx)}, {"field", fs.name()}, {"part", "exploratory brauer-side"}},
                 "reported, not asserted", "trivial", istr(d), true, ms_since(t0));
        });
      }
    }
  }
}

// ---------------------------------------------------------------- injectivity

void suite_injectivity(const ExperimentSpec& spec, std::vector<CheckResult>& out) {
  RowBuilder rb{out, "injectivity", {{"m", istr(spec.m)}, {"n", istr(spec.n)}}};
  if (spec.m < spec.n) {
    rb.add({}, "m >= n required", "trivial", "skipped (m < n)", true, 0);
    return;
  }
  long long expect = 1;
  for (int k = 2 * spec.n - 1; k >= 1; k -= 2) expect *= k;
  for (const auto& fs : spec.fields) {
    auto t0 = Clock::now();
    long long rank = with_field(fs, [&](auto f) {
      BlockedSubspace<decltype(f)> empty{spec.m, spec.n, {}};
      return brauer_image_rank_on_quotient(f, spec.m, spec.n, empty);
    });
    rb.add({{"field", fs.name()}}, istr(expect), "paper", istr(rank), rank == expect,
           ms_since(t0));
  }
}

// -------------------------------------------------------------- decomposition

void suite_decomposition(const ExperimentSpec& spec, std::vector<CheckResult>& out) {
  RowBuilder rb{out, "decomposition", {{"m", istr(spec.m)}, {"n", istr(spec.n)}}};
  long long power = 1;
  for (int i = 0; i < spec.n; ++i) power *= 2 * spec.m;

  for (const auto& fs : spec.fields) {
    with_field(fs, [&](auto f) {
      auto t0 = Clock::now();
      long long total = 0;
      for (int g = 0; 2 * g <= spec.n; ++g)
        for (const auto& lam : partitions_of(spec.n - 2 * g, spec.m))
          total += dim_weyl(lam, spec.m) * z_span(f, spec.m, spec.n, g, lam).dim();
      rb.add({{"field", fs.name()}}, istr(power), "derived", istr(total), total == power,
             ms_since(t0));
    });
  }

  // the same bookkeeping on the character side alone
  long long char_total = 0;
  for (int g = 0; 2 * g <= spec.n; ++g)
    for (const auto& lam : partitions_of(spec.n - 2 * g, spec.m))
      char_total += dim_weyl(lam, spec.m) * updown_count(lam, spec.n, spec.m);
  rb.add({{"field", "characters"}}, istr(power), "derived", istr(char_total),
         char_total == power, 0);
}

// ------------------------------------------------------------------------ bmw

void suite_bmw(const ExperimentSpec& spec, std::vector<CheckResult>& out) {
  RowBuilder rb{out, "bmw", {{"m", istr(spec.m)}, {"n", istr(spec.n)}}};

  if (spec.n >= 2) {
    auto t0 = Clock::now();
    auto checks = check_bmw_relations(spec.m, spec.n);
    for (int fam = 1; fam <= 8; ++fam) {
      long long bad = 0, cnt = 0;
      std::string witness;
      for (const auto& rc : checks)
        if (rc.relation == fam) {
          ++cnt;
          if (!rc.pass) {
            ++bad;
            if (witness.empty()) witness = rc.indices + ": " + rc.witness;
          }
        }
      if (cnt == 0) continue;
      rb.add({{"relation", istr(fam)}}, "0 violations", "paper",
             bad == 0 ? "0 violations" : istr(bad) + " violations (" + witness + ")", bad == 0,
             ms_since(t0));
      t0 = Clock::now();
    }
  }

  // specialization of the generator matrices onto the Brauer action
  Rationals fq;
  Rational delta(-2 * spec.m);
  auto codes = all_codes(spec.m, spec.n);
  std::map<Code, int> pos;
  for (size_t i = 0; i < codes.size(); ++i) pos[codes[i]] = static_cast<int>(i);
  auto action_matrix = [&](const AlgebraElement<Rational>& a) {
    std::vector<std::vector<long>> M(codes.size(), std::vector<long>(codes.size(), 0));
    for (size_t c = 0; c < codes.size(); ++c) {
      auto img = act_element(fq, TensorVector<Rational>::basis(spec.m, spec.n, codes[c]), a);
      for (const auto& [code, x] : img.c) M[pos.at(code)][c] = x.num().get_si();
    }
    return M;
  };
  for (int j = 1; j < spec.n; ++j) {
    auto t0 = Clock::now();
    bool okT =
        phi_C('T', j, spec.n, spec.m).specialize_q1() ==
        action_matrix(AlgebraElement<Rational>::of(brauer_s(j, spec.n), delta).scaled(Rational(-1)));
    bool okE = phi_C('E', j, spec.n, spec.m).specialize_q1() ==
               action_matrix(AlgebraElement<Rational>::of(brauer_e(j, spec.n), delta));
    rb.add({{"j", istr(j)}, {"part", "specialization"}}, "T_j -> -s_j and E_j -> e_j at q=1",
           "paper", okT && okE ? "equal" : "different", okT && okE, ms_since(t0));
  }

  for (int g = 0; 2 * g <= spec.n; ++g)
    for (const auto& lam : partitions_of(spec.n - 2 * g, spec.m)) {
      auto t0 = Clock::now();
      bool ok =
          specialize_vector(Z_q(spec.m, spec.n, g, lam)) == z_vector(fq, spec.m, spec.n, g, lam);
      rb.add({{"g", istr(g)}, {"lambda", partition_str(lam)}, {"part", "Z specialization"}},
             "Z_{g,lambda} specializes to z_{g,lambda}", "paper", ok ? "equal" : "different", ok,
             ms_since(t0));
    }

  // Hecke layer: the quadratic/braid relations of beta-hat and the agreement
  // of the two word actions on v_lambda.
  if (spec.n >= 2) {
    auto t0 = Clock::now();
    long long bad = 0;
    std::string witness;
    for (const auto& rc : check_hecke_relations(spec.m, spec.n))
      if (!rc.pass) {
        ++bad;
        if (witness.empty()) witness = rc.indices + ": " + rc.witness;
      }
    rb.add({{"part", "hecke relations"}}, "0 violations", "paper",
           bad == 0 ? "0 violations" : istr(bad) + " violations (" + witness + ")", bad == 0,
           ms_since(t0));
  }
  for (const auto& lam : partitions_of(spec.n, spec.m)) {
    auto t0 = Clock::now();
    bool eigen = check_hecke_eigen(spec.m, lam);

    LaurentRing lr;
    auto v = v_lambda(lr, spec.m, lam);
    LaurentMat bp = beta_prime(spec.m);
    LaurentMat bh = beta_hat(spec.m);
    auto w = w_lambda(lam, spec.n);
    TensorVector<Laurent> viaC(spec.m, spec.n), viaA(spec.m, spec.n);
    auto rC = apply_T_word(v, w.reduced_word(), 0, bp, 2 * spec.m);
    auto rA = apply_T_word(v, w.reduced_word(), 0, bh, spec.m);
    for (const auto& u : young_subgroup(conjugate(lam), spec.n)) {
      Laurent c = Laurent::q_power(-u.length(), u.length() % 2 == 0 ? 1 : -1);
      viaC += apply_T_word(rC, u.reduced_word(), 0, bp, 2 * spec.m).scaled(c);
      viaA += apply_T_word(rA, u.reduced_word(), 0, bh, spec.m).scaled(c);
    }
    bool agree = viaC == viaA;
    rb.add({{"lambda", partition_str(lam)}, {"part", "hecke eigenvalue and word agreement"}},
           "v_lambda is a q^l eigenvector; both word actions agree", "paper",
           eigen && agree ? "holds" : "fails", eigen && agree, ms_since(t0));
  }
}

// ------------------------------------------------------------ harmonic-kernel

void suite_harmonic_kernel(const ExperimentSpec& spec, std::vector<CheckResult>& out) {
  RowBuilder rb{out, "harmonic-kernel", {{"m", istr(spec.m)}, {"n", istr(spec.n)}}};
  for (const auto& fs : spec.fields) {
    with_field(fs, [&](auto f) {
      auto t0 = Clock::now();
      auto ann = ideal_annihilator(f, spec.m, spec.n, 1);
      auto ck = contraction_kernel(f, spec.m, spec.n);
      auto ek = est_kernel(f, spec.m, spec.n);
      bool eq1 = ann == ck, eq2 = ck == ek;
      rb.add({{"field", fs.name()}, {"part", "W = cap Ker C"}},
             "annihilator of the first ideal equals the contraction kernel", "paper",
             eq1 ? "equal" : "different", eq1, ms_since(t0));
      rb.add({{"field", fs.name()}, {"part", "cap Ker C = cap Ker e"}},
             "contraction kernel equals the e_{s,t} kernel", "paper",
             eq2 ? "equal" : "different", eq2, 0);
    });
  }
}

}  // namespace

std::vector<CheckResult> run_suite(const ExperimentSpec& spec) {
  std::vector<CheckResult> out;
  if (spec.suite == "presentation")
    suite_presentation(spec, out);
  else if (spec.suite == "basis-count")
    suite_basis_count(spec, out);
  else if (spec.suite == "dimension")
    suite_dimension(spec, out);
  else if (spec.suite == "duality")
    suite_duality(spec, out);
  else if (spec.suite == "maximal")
    suite_maximal(spec, out);
  else if (spec.suite == "surjectivity")
    suite_surjectivity(spec, out);
  else if (spec.suite == "injectivity")
    suite_injectivity(spec, out);
  else if (spec.suite == "decomposition")
    suite_decomposition(spec, out);
  else if (spec.suite == "bmw")
    suite_bmw(spec, out);
  else if (spec.suite == "harmonic-kernel")
    suite_harmonic_kernel(spec, out);
  else
    throw std::invalid_argument("unknown suite: " + spec.suite);
  return out;
}

}  // namespace blab
