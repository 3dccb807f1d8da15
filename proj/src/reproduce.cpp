#include "algebroid/reproduce.hpp"

#include <functional>
#include <random>
#include <sstream>

#include <json.hpp>

#include "algebroid/catalog.hpp"
#include "algebroid/presentation_io.hpp"
#include "algebroid/separability.hpp"

namespace algd {

namespace {

Rational binomial(int n, int k) {
  if (k < 0 || k > n) return Rational(0);
  Rational r(1);
  for (int i = 0; i < k; ++i) r *= Rational(n - i, i + 1);
  r.canonicalize();
  return r;
}

Rational factorial(int n) {
  Rational r(1);
  for (int i = 2; i <= n; ++i) r *= Rational(i);
  return r;
}

/// Independent oracle for the jet coproduct: the partition sum
/// Delta(y_n) = sum n!/(k_1! ... k_n!) prod (y_i/i!)^{k_i} (x) y_{k_1+...+k_n}
/// over k_1 + 2 k_2 + ... + n k_n = n.
RingElement faa_di_bruno_oracle(const HopfPtr& H, int n) {
  const AlgebraPtr& T = H->total;
  const TensorModel& tm = H->tensor();
  RingElement acc = RingElement::zero(tm.model());
  std::vector<int> k(n + 1, 0);
  std::function<void(int, int)> rec = [&](int i, int remaining) {
    if (i > n) {
      if (remaining != 0) return;
      Rational coeff = factorial(n);
      int m = 0;
      RingElement left = RingElement::one(T);
      for (int idx = 1; idx <= n; ++idx) {
        if (k[idx] == 0) continue;
        m += k[idx];
        for (int t = 0; t < k[idx]; ++t) coeff /= factorial(idx);
        coeff /= factorial(k[idx]);
        left = left * RingElement::variable(T, "y" + std::to_string(idx)).pow(k[idx]);
      }
      coeff.canonicalize();
      RingElement right = RingElement::variable(T, "y" + std::to_string(m));
      acc += tm.tensor(left.scaled(coeff), right);
      return;
    }
    for (int c = 0; c * i <= remaining; ++c) {
      k[i] = c;
      rec(i + 1, remaining - c * i);
    }
    k[i] = 0;
  };
  rec(1, n);
  return acc;
}

std::string var_y(int n) {
  if (n == 0) return "y0";
  return "y" + std::to_string(n);
}

// random helpers for the fuzzing criteria -----------------------------------

RingElement random_base_element(std::mt19937& rng, const AlgebraPtr& A, int maxdeg) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> deg(0, maxdeg);
  Poly p = Poly::zero(A->nvars());
  for (int t = 0; t < 2; ++t) {
    Monomial m(A->nvars(), 0u);
    if (A->nvars() > 0) m[0] = static_cast<unsigned>(deg(rng));
    p += Poly::monomial(m, Rational(coeff(rng)));
  }
  if (p.is_zero()) p = Poly::constant(A->nvars(), Rational(1));
  return RingElement(A, p);
}

RawWord random_raw_word(std::mt19937& rng, const Envelope& U, int maxlen) {
  std::uniform_int_distribution<int> len(1, maxlen);
  std::uniform_int_distribution<int> gen(0, U.rank() - 1);
  std::uniform_int_distribution<int> kind(0, 3);
  RawWord w;
  int L = len(rng);
  for (int i = 0; i < L; ++i) {
    if (kind(rng) == 0)
      w.push_back(NCAtom::base(random_base_element(rng, U.A, 2)));
    else
      w.push_back(NCAtom::generator(gen(rng)));
  }
  return w;
}

NCElement random_nc_element(std::mt19937& rng, const Envelope& U, int maxdeg) {
  return U.normalize_raw({{random_raw_word(rng, U, maxdeg), Rational(1)}});
}

}  // namespace

std::vector<CriterionResult> run_acceptance(unsigned seed) {
  std::vector<CriterionResult> out;
  auto run = [&](int id, const std::string& name, auto&& fn) {
    CriterionResult r{id, name, false, ""};
    try {
      std::string detail;
      r.pass = fn(detail);
      r.detail = detail;
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = e.what();
    }
    out.push_back(std::move(r));
  };

  // 1. axiom suite
  run(1, "axiom_suite", [&](std::string& detail) {
    std::vector<HopfPtr> subjects{catalog::pair_groupoid(), catalog::split_example(),
                                  catalog::malgrange(1), catalog::malgrange(2),
                                  catalog::malgrange(3), catalog::malgrange(4),
                                  catalog::malgrange_quotient()};
    for (const HopfPtr& H : subjects) {
      AxiomReport rep = check_axioms(H);
      if (!rep.all_pass()) {
        detail = H->name + " fails:\n" + rep.summary();
        return false;
      }
    }
    detail = "7 presentations, all axiom checks pass";
    return true;
  });

  // 2. Faa di Bruno coproducts
  run(2, "faa_di_bruno_coproducts", [&](std::string& detail) {
    HopfPtr H = catalog::malgrange(5);
    const AlgebraPtr& T = H->total;
    auto displayed = [&](int n, const std::string& expr) {
      TensorExpr e = parse_tensor_expr(expr, T);
      RingElement acc = RingElement::zero(H->tensor().model());
      for (const auto& [l, r] : e) acc += H->tensor().tensor(l, r);
      return H->delta_var(T->var_index_checked(var_y(n))) == acc;
    };
    if (!displayed(1, "y1 (x) y1")) {
      detail = "Delta(y1)";
      return false;
    }
    if (!displayed(2, "y2 (x) y1 + y1^2 (x) y2")) {
      detail = "Delta(y2)";
      return false;
    }
    if (!displayed(3, "y3 (x) y1 + 3*y1*y2 (x) y2 + y1^3 (x) y3")) {
      detail = "Delta(y3)";
      return false;
    }
    for (int n = 4; n <= 5; ++n) {
      if (H->delta_var(T->var_index_checked(var_y(n))) != faa_di_bruno_oracle(H, n)) {
        detail = "Delta(y" + std::to_string(n) + ") disagrees with partition oracle";
        return false;
      }
    }
    detail = "displayed values y1..y3 exact; y4, y5 match the partition oracle";
    return true;
  });

  // 3. antipode
  run(3, "antipode", [&](std::string& detail) {
    HopfPtr H = catalog::malgrange(4, /*with_antipode=*/false);
    AlgebraMap S = derive_antipode(H);
    auto expect = [&](const std::string& v, const std::string& expr) {
      return S.images()[H->total->var_index_checked(v)] == parse_element(expr, H->total);
    };
    if (!expect("y1", "y1inv")) {
      detail = "S(y1)";
      return false;
    }
    if (!expect("y2", "-y2*y1inv^3")) {
      detail = "S(y2)";
      return false;
    }
    if (!expect("y3", "-y3*y1inv^4 + 3*y2^2*y1inv^5")) {
      detail = "S(y3)";
      return false;
    }
    for (int v = 0; v < H->total->nvars(); ++v) {
      RingElement gv = RingElement::variable(H->total, v);
      if (S.apply(S.apply(gv)) != gv) {
        detail = "S^2 != id at " + H->total->vars()[v];
        return false;
      }
    }
    detail = "S(y1), S(y2), S(y3) exact and S^2 = id";
    return true;
  });

  // 4. prop H1 Lie-Rinehart structure of H_4
  run(4, "differentiation_rank5_brackets", [&](std::string& detail) {
    HopfPtr H = catalog::malgrange(4);
    DiffResult D = differentiate(H, Flavor::S);
    if (D.lr.rank() != 5) {
      detail = "rank " + std::to_string(D.lr.rank());
      return false;
    }
    const AlgebraPtr& A = H->base;
    for (int k = 0; k < 5; ++k) {
      AlgebraDerivation expected =
          k == 0 ? AlgebraDerivation::checked(A, {RingElement::one(A)}, "d")
                 : AlgebraDerivation::zero(A);
      if (!(D.lr.anchor[k] == expected)) {
        detail = "anchor of basis " + std::to_string(k);
        return false;
      }
    }
    auto expected_c = [&](int i, int j, int k) {
      if (i == 0 || j == 0) return Rational(0);
      if (k != i + j - 1) return Rational(0);
      Rational r = binomial(k, i) - binomial(k, j);
      r.canonicalize();
      return r;
    };
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j)
        for (int k = 0; k < 5; ++k) {
          Rational e = i < j ? expected_c(i, j, k)
                             : (i == j ? Rational(0) : -expected_c(j, i, k));
          RingElement got = D.lr.c[i][j][k];
          RingElement want = RingElement::constant(A, e);
          if (got != want) {
            detail = "c[" + std::to_string(i) + "][" + std::to_string(j) + "][" +
                     std::to_string(k) + "] = " + got.str() + ", expected " + want.str();
            return false;
          }
        }
    AxiomReport rep = check_lie_rinehart(D.lr);
    if (!rep.all_pass()) {
      detail = "L(H4) fails its own axioms";
      return false;
    }
    detail = "rank 5, anchor a -> a0 d, all 10 bracket pairs match the binomial form";
    return true;
  });

  // 5. the quotient as a sub-Lie-Rinehart algebra
  run(5, "quotient_sub_lie_rinehart", [&](std::string& detail) {
    HopfMorphism proj = catalog::malgrange_projection(4);
    DiffResult Dq = differentiate(proj.cod, Flavor::S);
    DiffResult D4 = differentiate(proj.dom, Flavor::S);
    if (Dq.lr.rank() != 2) {
      detail = "quotient rank " + std::to_string(Dq.lr.rank());
      return false;
    }
    // bracket (a0 db0 - b0 da0, a0 db1 - b0 da1) on polynomial samples
    const AlgebraPtr& A = proj.dom->base;
    AlgebraDerivation d = AlgebraDerivation::checked(A, {RingElement::one(A)}, "d");
    std::vector<std::vector<RingElement>> samples{
        {parse_element("X", A), parse_element("X^2", A)},
        {parse_element("1 + X", A), parse_element("3", A)},
        {parse_element("X^3 - 2*X", A), parse_element("X", A)}};
    for (size_t s = 0; s + 1 < samples.size(); ++s) {
      const auto& a = samples[s];
      const auto& b = samples[s + 1];
      auto lhs = Dq.lr.bracket_vectors(a, b);
      RingElement c0 = a[0] * d.apply(b[0]) - b[0] * d.apply(a[0]);
      RingElement c1 = a[0] * d.apply(b[1]) - b[0] * d.apply(a[1]);
      if (lhs[0] != c0 || lhs[1] != c1) {
        detail = "closed-form bracket mismatch on sample " + std::to_string(s);
        return false;
      }
    }
    LRMorphism incl = l_on_morphism(proj, Dq, D4);
    AxiomReport rep = check_lr_morphism(incl);
    if (!rep.all_pass()) {
      detail = "L(projection) is not a Lie-Rinehart morphism:\n" + rep.summary();
      return false;
    }
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 5; ++j) {
        RingElement want = (i == j) ? RingElement::one(A) : RingElement::zero(A);
        if (incl.matrix[i][j] != want) {
          detail = "inclusion matrix is not the coordinate inclusion";
          return false;
        }
      }
    detail = "rank 2, closed-form bracket, realized inside L(H4) by L(projection)";
    return true;
  });

  // 6. PBW confluence and the beta suite
  run(6, "pbw_beta_suite", [&](std::string& detail) {
    for (const LieRinehart& L : {catalog::weyl_lr(), catalog::quotient_lr()}) {
      Envelope U = build_enveloping(L);
      std::mt19937 rng(seed + 17);
      for (int trial = 0; trial < 200; ++trial) {
        RawWord w = random_raw_word(rng, U, 4);
        std::mt19937 r1(seed + 1000 + trial), r2(seed + 2000 + trial);
        auto s1 = [&](size_t n) { return static_cast<size_t>(r1() % n); };
        auto s2 = [&](size_t n) { return static_cast<size_t>(r2() % n); };
        NCElement a = U.normalize_word(w, s1);
        NCElement b = U.normalize_word(w, s2);
        NCElement c = U.normalize_word(w);
        if (!(a == b) || !(a == c)) {
          detail = L.name + ": confluence failure at trial " + std::to_string(trial);
          return false;
        }
      }
      std::vector<NCElement> samples;
      for (int i = 0; i < 50; ++i) samples.push_back(random_nc_element(rng, U, 3));
      AxiomReport rep = check_cocomm_identities(U, samples);
      if (!rep.all_pass()) {
        detail = L.name + ":\n" + rep.summary();
        return false;
      }
    }
    detail = "confluence 200 words x 2 rule orders; beta1..beta9, counit laws, "
             "Takeuchi membership on generators and 50 random elements";
    return true;
  });

  // 7. primitive elements
  run(7, "primitives", [&](std::string& detail) {
    for (const LieRinehart& L : {catalog::weyl_lr(), catalog::quotient_lr()}) {
      Envelope U = build_enveloping(L);
      std::vector<NCElement> prims = primitives(U, 2);
      if (static_cast<int>(prims.size()) != L.rank()) {
        detail = L.name + ": " + std::to_string(prims.size()) + " primitives";
        return false;
      }
      for (int i = 0; i < L.rank(); ++i)
        if (!(prims[i] == U.gen(i))) {
          detail = L.name + ": primitive " + std::to_string(i) + " is not iota_L(e_i)";
          return false;
        }
      LieRinehart P = primitive_lie_rinehart(U, prims);
      for (int i = 0; i < L.rank(); ++i) {
        if (!(P.anchor[i] == L.anchor[i])) {
          detail = L.name + ": primitive anchor differs";
          return false;
        }
        for (int j = 0; j < L.rank(); ++j)
          for (int k = 0; k < L.rank(); ++k)
            if (P.c[i][j][k] != L.c[i][j][k]) {
              detail = L.name + ": primitive structure constants differ";
              return false;
            }
      }
    }
    detail = "primitives(V_A(L), 2) = iota_L(basis) with the input Lie-Rinehart structure";
    return true;
  });

  // 8. finite duals of group algebras
  run(8, "finite_dual_group_algebras", [&](std::string& detail) {
    for (int n = 2; n <= 4; ++n) {
      FiniteCocomm U = catalog::group_algebra(n);
      HopfPtr dual = finite_dual(U);
      AxiomReport rep = check_axioms(dual);
      if (!rep.all_pass()) {
        detail = U.name + " dual fails axioms:\n" + rep.summary();
        return false;
      }
      // pairing table against the brute-force convolution oracle
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          RingElement prod = RingElement::variable(dual->total, i) *
                             RingElement::variable(dual->total, j);
          std::vector<Rational> got = dual_functional(U, dual, prod);
          for (int k = 0; k < n; ++k) {
            Rational want(0);
            for (int a = 0; a < n; ++a)
              for (int b = 0; b < n; ++b)
                want += U.cop[k][a][b] * Rational(a == i ? 1 : 0) *
                        Rational(b == j ? 1 : 0);
            if (got[k] != want) {
              detail = U.name + ": pairing table mismatch";
              return false;
            }
          }
        }
    }
    {
      FiniteCocomm U1 = catalog::group_algebra(1);
      HopfPtr dual = finite_dual(U1);
      AxiomReport rep = check_axioms(dual);
      if (!rep.all_pass() ||
          RingElement::variable(dual->total, 0) != RingElement::one(dual->total)) {
        detail = "QC1 dual is not the trivial algebroid";
        return false;
      }
    }
    detail = "QC2, QC3, QC4 duals pass check_axioms with oracle-matched tables; "
             "QC1 gives the trivial algebroid";
    return true;
  });

  // 9. the Lie-Rinehart lift into the convolution algebra
  run(9, "lift_bridge", [&](std::string& detail) {
    HopfPtr H = catalog::malgrange(2);
    DiffResult D = differentiate(H, Flavor::S);
    LiftReport rep = lift_lr_morphism(D.lr, H, D.basis, 3);
    if (!rep.ok) {
      detail = std::to_string(rep.violations.size()) + " violations, first: " +
               rep.violations.front();
      return false;
    }
    detail = "both relations hold on all " + std::to_string(rep.words_checked) +
             " PBW words up to degree 3 against every generator pair";
    return true;
  });

  // 10. separability verdicts
  run(10, "separability", [&](std::string& detail) {
    SeparabilityReport incl = separability_report(make_morphism("inclusion:1:2"));
    if (!incl.separable() || !incl.consistent) {
      detail = "inclusion H1 -> H2 should be separable";
      return false;
    }
    if (!incl.retraction) {
      detail = "missing retraction certificate";
      return false;
    }
    Matrix check = matrix_mul(*incl.retraction, incl.q_matrix);
    const AlgebraPtr& A = incl.q_matrix[0][0].ring();
    Matrix id = matrix_identity(A, static_cast<int>(check.size()));
    if (!(check == id)) {
      detail = "retraction certificate invalid";
      return false;
    }
    SeparabilityReport uc = separability_report(make_morphism("unit_counit:malgrange:1"));
    if (uc.condition_a || uc.condition_b || uc.condition_d || !uc.consistent) {
      detail = "unit-counit composite should fail all three conditions";
      return false;
    }
    for (const std::string& spec :
         {std::string("identity:malgrange:2"), std::string("inclusion:2:3"),
          std::string("projection:3"), std::string("unit_counit:malgrange:2")}) {
      SeparabilityReport rep = separability_report(make_morphism(spec));
      if (!rep.consistent) {
        detail = "verdicts disagree on " + spec;
        return false;
      }
    }
    detail = "inclusion separable with valid retraction; unit-counit not separable; "
             "verdicts (a),(b),(d) agree on every bundled morphism";
    return true;
  });

  // 11. GL2 acting on the plane
  run(11, "gl2_exam_main", [&](std::string& detail) {
    SplitAlgebroid sp = catalog::gl2_plane();
    DiffResult DB = differentiate(sp.B, Flavor::S);
    if (DB.lr.rank() != 4) {
      detail = "Der(O(GL2)) rank " + std::to_string(DB.lr.rank());
      return false;
    }
    const AlgebraPtr& A = sp.A;
    auto delta_of = [&](int i, int j) {  // matrix unit with delta(Z_ij) = 1
      return DB.basis[2 * i + j];
    };
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        EpsDerivation tau = split_tau(sp, delta_of(i, j));
        AlgebraDerivation w = anchor(tau);
        // varpi(delta)(X_k) = delta(Z_k1) X1 + delta(Z_k2) X2
        for (int k = 0; k < 2; ++k) {
          RingElement want = RingElement::zero(A);
          if (k == i) want = RingElement::variable(A, j);
          if (w.images()[k] != want) {
            detail = "varpi mismatch at delta_" + std::to_string(i) + std::to_string(j);
            return false;
          }
        }
      }
    // M([d,d']) = [M(d), M(d')] for all 16 ordered pairs, brute-force commutator
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        for (int c = 0; c < 2; ++c)
          for (int d = 0; d < 2; ++d) {
            EpsDerivation br = eps_bracket(delta_of(a, b), delta_of(c, d));
            Rational M[2][2];
            for (int i = 0; i < 2; ++i)
              for (int j = 0; j < 2; ++j) {
                RingElement v = br.images()[sp.B->total->var_index_checked(
                    "Z" + std::to_string(i + 1) + std::to_string(j + 1))];
                M[i][j] = v.is_zero() ? Rational(0) : v.constant_value();
              }
            for (int i = 0; i < 2; ++i)
              for (int j = 0; j < 2; ++j) {
                // (E_ab E_cd - E_cd E_ab)_{ij}
                Rational lhs = Rational((i == a && b == c && d == j) ? 1 : 0) -
                               Rational((i == c && d == a && b == j) ? 1 : 0);
                if (M[i][j] != lhs) {
                  detail = "M-bracket mismatch";
                  return false;
                }
              }
          }
    // trace identity
    RingElement det = parse_element("Z11*Z22 - Z12*Z21", sp.B->total);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        EpsDerivation d = delta_of(i, j);
        RingElement want = d.images()[sp.B->total->var_index_checked("Z11")] +
                           d.images()[sp.B->total->var_index_checked("Z22")];
        if (d.eval(det) != want) {
          detail = "delta(det) trace identity";
          return false;
        }
      }
    detail = "varpi on X1, X2 for the four matrix units; M-bracket vs 2x2 commutators "
             "on 16 pairs; delta(det) = delta(Z11) + delta(Z22)";
    return true;
  });

  // 12. Kaehler module, representability and isotropy
  run(12, "kaehler_isotropy", [&](std::string& detail) {
    for (int r = 1; r <= 4; ++r) {
      HopfPtr H = catalog::malgrange(r);
      KaehlerPresentation K = kaehler_module(H);
      if (static_cast<int>(K.basis.size()) != r + 1) {
        detail = "Q(H" + std::to_string(r) + ") rank " + std::to_string(K.basis.size());
        return false;
      }
      DiffResult D = differentiate(H, Flavor::S);
      for (int k = 0; k < D.lr.rank(); ++k) {
        for (int v = 0; v < H->total->nvars(); ++v) {
          RingElement via_pi = RingElement::zero(H->base);
          for (size_t j = 0; j < K.basis.size(); ++j)
            via_pi += K.pi_images[v][j] * D.basis[k].images()[K.basis_vars[j]];
          if (via_pi != D.basis[k].images()[v]) {
            detail = "lemma rep round-trip fails on generators";
            return false;
          }
        }
        // and on a few products
        RingElement u = parse_element("y1*y0 + 2*x0^2", H->total);
        std::vector<RingElement> coords = K.pi(u);
        RingElement via_pi = RingElement::zero(H->base);
        for (size_t j = 0; j < K.basis.size(); ++j)
          via_pi += coords[j] * D.basis[k].images()[K.basis_vars[j]];
        if (via_pi != D.basis[k].eval(u)) {
          detail = "lemma rep round-trip fails on products";
          return false;
        }
      }
      for (long xval : {0L, 1L}) {
        AlgebraMap x = AlgebraMap::checked(
            H->base, PresentedAlgebra::rationals(),
            {RingElement::constant(PresentedAlgebra::rationals(), Rational(xval))},
            "point");
        IsotropyLieAlgebra iso = isotropy(H, x);
        if (iso.rank() != r) {
          detail = "isotropy rank at x=" + std::to_string(xval);
          return false;
        }
        std::string why;
        if (!isotropy_nabla_matches(iso, &why)) {
          detail = "nabla transport at x=" + std::to_string(xval) + ": " + why;
          return false;
        }
      }
    }
    detail = "Q(H_r) free of rank r+1, round-trip identity, isotropy rank r with "
             "nabla-matched brackets at x = 0, 1";
    return true;
  });

  return out;
}

std::string acceptance_table(const std::vector<CriterionResult>& results) {
  std::ostringstream os;
  bool all = true;
  for (const auto& r : results) {
    os << (r.pass ? "PASS" : "FAIL") << "  " << r.id << ". " << r.name;
    if (!r.detail.empty()) os << "  -- " << r.detail;
    os << "\n";
    all = all && r.pass;
  }
  os << (all ? "all criteria pass" : "SOME CRITERIA FAIL") << "\n";
  return os.str();
}

std::string acceptance_json(const std::vector<CriterionResult>& results) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& r : results)
    j.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
  return j.dump(2);
}

}  // namespace algd
