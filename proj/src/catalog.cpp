#include "algebroid/catalog.hpp"

#include <sstream>

namespace algd {
namespace catalog {

AlgebraPtr base_QX() { return PresentedAlgebra::make("A", {"X"}, {}, {}); }

HopfPtr pair_groupoid(AlgebraPtr A) {
  if (!A) A = base_QX();
  // total algebra A (x) A on left/right copies of the generators of A
  int na = A->nvars();
  std::vector<std::string> vars;
  for (const auto& v : A->vars()) vars.push_back(v + "l");
  for (const auto& v : A->vars()) vars.push_back(v + "r");
  std::vector<int> lmap(na), rmap(na);
  for (int v = 0; v < na; ++v) {
    lmap[v] = v;
    rmap[v] = na + v;
  }
  std::vector<std::pair<std::string, std::string>> inv;
  for (auto [a, b] : A->inverse_pairs()) {
    inv.emplace_back(vars[lmap[a]], vars[lmap[b]]);
    inv.emplace_back(vars[rmap[a]], vars[rmap[b]]);
  }
  std::vector<Poly> rels;
  for (const Poly& r : A->relations()) {
    rels.push_back(r.map_vars(lmap, 2 * na));
    rels.push_back(r.map_vars(rmap, 2 * na));
  }
  AlgebraPtr total = PresentedAlgebra::make("AxA", vars, inv, rels);

  std::vector<RingElement> s_imgs, t_imgs, eps, S;
  std::vector<TensorExpr> cop;
  for (int v = 0; v < na; ++v) s_imgs.push_back(RingElement::variable(total, lmap[v]));
  for (int v = 0; v < na; ++v) t_imgs.push_back(RingElement::variable(total, rmap[v]));
  for (int v = 0; v < na; ++v) eps.push_back(RingElement::variable(A, v));
  for (int v = 0; v < na; ++v) eps.push_back(RingElement::variable(A, v));
  for (int v = 0; v < na; ++v) {
    TensorExpr e;
    e.emplace_back(RingElement::variable(total, lmap[v]), RingElement::one(total));
    cop.push_back(std::move(e));
  }
  for (int v = 0; v < na; ++v) {
    TensorExpr e;
    e.emplace_back(RingElement::one(total), RingElement::variable(total, rmap[v]));
    cop.push_back(std::move(e));
  }
  for (int v = 0; v < na; ++v) S.push_back(RingElement::variable(total, rmap[v]));
  for (int v = 0; v < na; ++v) S.push_back(RingElement::variable(total, lmap[v]));
  return build_hopf_algebroid("pair_groupoid", A, total, std::move(s_imgs),
                              std::move(t_imgs), std::move(eps), std::move(cop),
                              std::move(S));
}

HopfPtr laurent_hopf_algebra() {
  AlgebraPtr Q = PresentedAlgebra::rationals();
  AlgebraPtr B = PresentedAlgebra::make("B", {"g", "ginv"}, {{"g", "ginv"}}, {});
  std::vector<RingElement> eps{RingElement::one(Q), RingElement::one(Q)};
  std::vector<TensorExpr> cop;
  {
    TensorExpr e;
    e.emplace_back(RingElement::variable(B, 0), RingElement::variable(B, 0));
    cop.push_back(std::move(e));
  }
  {
    TensorExpr e;
    e.emplace_back(RingElement::variable(B, 1), RingElement::variable(B, 1));
    cop.push_back(std::move(e));
  }
  std::vector<RingElement> S{RingElement::variable(B, 1), RingElement::variable(B, 0)};
  return build_hopf_algebroid("laurent", Q, B, {}, {}, std::move(eps), std::move(cop),
                              std::move(S));
}

HopfPtr split_example(AlgebraPtr A) {
  if (!A) A = base_QX();
  if (A->nvars() != 1)
    throw algebra_error("split_example expects a one-generator base");
  AlgebraPtr total = PresentedAlgebra::make("AxBxA", {"Xl", "g", "ginv", "Xr"},
                                            {{"g", "ginv"}}, {});
  auto v = [&](int i) { return RingElement::variable(total, i); };
  std::vector<RingElement> s_imgs{v(0)}, t_imgs{v(3)};
  std::vector<RingElement> eps{RingElement::variable(A, 0), RingElement::one(A),
                               RingElement::one(A), RingElement::variable(A, 0)};
  std::vector<TensorExpr> cop(4);
  cop[0].emplace_back(v(0), RingElement::one(total));
  cop[1].emplace_back(v(1), v(1));
  cop[2].emplace_back(v(2), v(2));
  cop[3].emplace_back(RingElement::one(total), v(3));
  std::vector<RingElement> S{v(3), v(2), v(1), v(0)};
  return build_hopf_algebroid("split", A, total, std::move(s_imgs), std::move(t_imgs),
                              std::move(eps), std::move(cop), std::move(S));
}

namespace {

/// Coproducts of the jet variables by the chain-rule recursion: from
/// Delta(y_n) = sum c * u (x) y_m derive
/// Delta(y_{n+1}) = sum c * (D u) (x) y_m + c * (u y1) (x) y_{m+1}, where D
/// is the shift derivation y_i -> y_{i+1} on the left-leg variables.
/// Left legs are monomials in y1..y_{n}; encoded over staging variables
/// y1..y_r with exponent vectors.
struct JetTerm {
  Monomial left;  // exponents of y1..y_r
  int m;          // right leg y_m
  Rational coeff;
};

std::vector<std::vector<JetTerm>> jet_coproducts(int r) {
  std::vector<std::vector<JetTerm>> delta(r + 1);
  if (r >= 1) {
    Monomial y1(r, 0u);
    y1[0] = 1;
    delta[1].push_back({y1, 1, Rational(1)});
  }
  for (int n = 1; n < r; ++n) {
    std::map<std::pair<Monomial, int>, Rational> acc;
    for (const JetTerm& t : delta[n]) {
      // shift-derivation of the left monomial
      for (int i = 0; i < r - 1; ++i) {
        if (t.left[i] == 0) continue;
        Monomial m2 = t.left;
        m2[i] -= 1;
        m2[i + 1] += 1;
        acc[{m2, t.m}] += t.coeff * Rational(static_cast<long>(t.left[i]));
      }
      // extra y1 on the left, shift of the right leg
      Monomial m3 = t.left;
      m3[0] += 1;
      acc[{m3, t.m + 1}] += t.coeff;
    }
    for (const auto& [key, c] : acc)
      if (sgn(c) != 0) delta[n + 1].push_back({key.first, key.second, c});
  }
  return delta;
}

}  // namespace

HopfPtr malgrange(int r, bool with_antipode, AlgebraPtr A) {
  if (r < 1) throw algebra_error("malgrange: r must be at least 1");
  if (!A) A = base_QX();
  std::vector<std::string> vars{"x0", "y0", "y1", "y1inv"};
  for (int n = 2; n <= r; ++n) vars.push_back("y" + std::to_string(n));
  AlgebraPtr total = PresentedAlgebra::make("H" + std::to_string(r), vars,
                                            {{"y1", "y1inv"}}, {});
  auto var_of_y = [&](int n) {  // index of y_n
    if (n == 0) return 1;
    if (n == 1) return 2;
    return 2 + n;  // y2 at 4, y3 at 5, ...
  };
  std::vector<RingElement> s_imgs{RingElement::variable(total, 0)};
  std::vector<RingElement> t_imgs{RingElement::variable(total, 1)};
  std::vector<RingElement> eps;
  eps.push_back(RingElement::variable(A, 0));  // x0 -> X
  eps.push_back(RingElement::variable(A, 0));  // y0 -> X
  eps.push_back(RingElement::one(A));          // y1 -> 1
  eps.push_back(RingElement::one(A));          // y1inv -> 1
  for (int n = 2; n <= r; ++n) eps.push_back(RingElement::zero(A));

  auto jets = jet_coproducts(r);
  std::vector<TensorExpr> cop(total->nvars());
  cop[0].emplace_back(RingElement::variable(total, 0), RingElement::one(total));
  cop[1].emplace_back(RingElement::one(total), RingElement::variable(total, 1));
  cop[3].emplace_back(RingElement::variable(total, 3), RingElement::variable(total, 3));
  for (int n = 1; n <= r; ++n) {
    TensorExpr e;
    for (const JetTerm& t : jets[n]) {
      Poly left = Poly::constant(total->nvars(), t.coeff);
      for (int i = 0; i < r; ++i)
        if (t.left[i] > 0)
          left = left * Poly::variable(total->nvars(), var_of_y(i + 1), t.left[i]);
      e.emplace_back(RingElement(total, left),
                     RingElement::variable(total, var_of_y(t.m)));
    }
    cop[var_of_y(n)] = std::move(e);
  }
  HopfPtr H = build_hopf_algebroid("malgrange_" + std::to_string(r), A, total,
                                   std::move(s_imgs), std::move(t_imgs), std::move(eps),
                                   std::move(cop), std::nullopt);
  if (with_antipode) derive_antipode(H);
  return H;
}

HopfPtr malgrange_quotient(AlgebraPtr A) {
  if (!A) A = base_QX();
  HopfPtr H = malgrange(1, true, A);
  H->name = "malgrange_quotient";
  return H;
}

HopfPtr gl2_hopf_algebra() {
  AlgebraPtr Q = PresentedAlgebra::rationals();
  std::vector<std::string> vars{"Z11", "Z12", "Z21", "Z22", "detinv"};
  AlgebraPtr B = PresentedAlgebra::make_parsed(
      "OGL2", vars, {}, {"(Z11*Z22 - Z12*Z21)*detinv - 1"});
  auto v = [&](const std::string& n) { return RingElement::variable(B, n); };
  std::vector<RingElement> eps{RingElement::one(Q), RingElement::zero(Q),
                               RingElement::zero(Q), RingElement::one(Q),
                               RingElement::one(Q)};
  std::vector<TensorExpr> cop(5);
  // Delta(Z_ij) = sum_k Z_ik (x) Z_kj
  cop[0].emplace_back(v("Z11"), v("Z11"));
  cop[0].emplace_back(v("Z12"), v("Z21"));
  cop[1].emplace_back(v("Z11"), v("Z12"));
  cop[1].emplace_back(v("Z12"), v("Z22"));
  cop[2].emplace_back(v("Z21"), v("Z11"));
  cop[2].emplace_back(v("Z22"), v("Z21"));
  cop[3].emplace_back(v("Z21"), v("Z12"));
  cop[3].emplace_back(v("Z22"), v("Z22"));
  cop[4].emplace_back(v("detinv"), v("detinv"));
  std::vector<RingElement> S{v("Z22") * v("detinv"), -(v("Z12") * v("detinv")),
                             -(v("Z21") * v("detinv")), v("Z11") * v("detinv"),
                             parse_element("Z11*Z22 - Z12*Z21", B)};
  return build_hopf_algebroid("OGL2", Q, B, {}, {}, std::move(eps), std::move(cop),
                              std::move(S));
}

SplitAlgebroid gl2_plane() {
  HopfPtr B = gl2_hopf_algebra();
  AlgebraPtr A = PresentedAlgebra::make("plane", {"X1", "X2"}, {}, {});
  return build_split_algebroid("gl2_plane", B, A,
                               {"Z11*X1 + Z12*X2", "Z21*X1 + Z22*X2"});
}

LieRinehart weyl_lr(AlgebraPtr A) {
  if (!A) A = base_QX();
  std::vector<AlgebraDerivation> anchor{AlgebraDerivation::checked(
      A, {RingElement::one(A)}, "weyl anchor")};
  std::vector<std::vector<std::vector<RingElement>>> c(
      1, std::vector<std::vector<RingElement>>(1,
                                               std::vector<RingElement>(
                                                   1, RingElement::zero(A))));
  return make_lie_rinehart("weyl_lr", A, {"D"}, std::move(anchor), std::move(c));
}

LieRinehart quotient_lr(AlgebraPtr A) {
  if (!A) A = base_QX();
  std::vector<AlgebraDerivation> anchor{
      AlgebraDerivation::checked(A, {RingElement::one(A)}, "quotient anchor e0"),
      AlgebraDerivation::zero(A)};
  std::vector<std::vector<std::vector<RingElement>>> c(
      2, std::vector<std::vector<RingElement>>(2,
                                               std::vector<RingElement>(
                                                   2, RingElement::zero(A))));
  return make_lie_rinehart("quotient_lr", A, {"e0", "e1"}, std::move(anchor),
                           std::move(c));
}

FiniteCocomm group_algebra(int n) {
  if (n < 1 || n > 16) throw algebra_error("group_algebra: 1 <= n <= 16");
  std::vector<std::string> basis;
  for (int i = 0; i < n; ++i) basis.push_back("g" + std::to_string(i));
  std::vector<Rational> unit(n, Rational(0));
  unit[0] = 1;
  std::vector<std::vector<std::vector<Rational>>> mult(
      n, std::vector<std::vector<Rational>>(n, std::vector<Rational>(n, Rational(0))));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) mult[i][j][(i + j) % n] = 1;
  std::vector<Rational> counit(n, Rational(1));
  std::vector<std::vector<std::vector<Rational>>> cop = mult;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) cop[i][j][k] = (j == i && k == i) ? 1 : 0;
  return make_finite_cocomm("QC" + std::to_string(n), std::move(basis), std::move(unit),
                            std::move(mult), std::move(counit), std::move(cop));
}

HopfMorphism malgrange_inclusion(int r1, int r2) {
  if (r1 > r2) throw algebra_error("inclusion needs r1 <= r2");
  AlgebraPtr A = base_QX();
  HopfPtr H1 = malgrange(r1, true, A);
  HopfPtr H2 = malgrange(r2, true, A);
  std::vector<RingElement> images;
  for (const auto& v : H1->total->vars())
    images.push_back(RingElement::variable(H2->total, v));
  AlgebraMap phi = AlgebraMap::checked(H1->total, H2->total, std::move(images),
                                       "malgrange_inclusion");
  return {"inclusion_H" + std::to_string(r1) + "_H" + std::to_string(r2), H1, H2, phi};
}

HopfMorphism malgrange_projection(int r) {
  AlgebraPtr A = base_QX();
  HopfPtr Hr = malgrange(r, true, A);
  HopfPtr H1 = malgrange_quotient(A);
  std::vector<RingElement> images;
  for (const auto& v : Hr->total->vars()) {
    if (H1->total->var_index(v) >= 0)
      images.push_back(RingElement::variable(H1->total, v));
    else
      images.push_back(RingElement::zero(H1->total));
  }
  AlgebraMap phi = AlgebraMap::checked(Hr->total, H1->total, std::move(images),
                                       "malgrange_projection");
  return {"projection_H" + std::to_string(r) + "_quotient", Hr, H1, phi};
}

HopfMorphism unit_counit(const HopfPtr& H) {
  std::vector<RingElement> images;
  for (int v = 0; v < H->total->nvars(); ++v)
    images.push_back(H->src.apply(H->counit.images()[v]));
  AlgebraMap phi = AlgebraMap::checked(H->total, H->total, std::move(images),
                                       "unit_counit");
  return {"unit_counit_" + H->name, H, H, phi};
}

HopfMorphism identity_morphism(const HopfPtr& H) {
  return {"identity_" + H->name, H, H, AlgebraMap::identity(H->total)};
}

}  // namespace catalog

// ---------------------------------------------------------------------------
// registry
// ---------------------------------------------------------------------------

namespace {

std::vector<std::string> split_spec(const std::string& s) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == ':') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

}  // namespace

ExampleObject make_example(const std::string& spec) {
  auto parts = split_spec(spec);
  const std::string& name = parts[0];
  auto int_arg = [&](size_t i, int dflt) {
    return parts.size() > i ? std::stoi(parts[i]) : dflt;
  };
  ExampleObject o;
  if (name == "pair_groupoid") {
    o.kind = ExampleObject::Kind::Hopf;
    o.hopf = catalog::pair_groupoid();
  } else if (name == "split") {
    o.kind = ExampleObject::Kind::Hopf;
    o.hopf = catalog::split_example();
  } else if (name == "malgrange") {
    o.kind = ExampleObject::Kind::Hopf;
    o.hopf = catalog::malgrange(int_arg(1, 2));
  } else if (name == "malgrange_quotient") {
    o.kind = ExampleObject::Kind::Hopf;
    o.hopf = catalog::malgrange_quotient();
  } else if (name == "gl2_plane") {
    o.kind = ExampleObject::Kind::Split;
    o.split = catalog::gl2_plane();
  } else if (name == "group_algebra") {
    o.kind = ExampleObject::Kind::Finite;
    o.finite = catalog::group_algebra(int_arg(1, 2));
  } else if (name == "weyl_lr") {
    o.kind = ExampleObject::Kind::LR;
    o.lr = catalog::weyl_lr();
  } else if (name == "quotient_lr") {
    o.kind = ExampleObject::Kind::LR;
    o.lr = catalog::quotient_lr();
  } else {
    throw algebra_error("unknown example '" + name + "'");
  }
  return o;
}

std::vector<std::string> catalog_names() {
  return {"pair_groupoid", "split",   "malgrange:<r>", "malgrange_quotient",
          "gl2_plane",     "group_algebra:<n>", "weyl_lr", "quotient_lr"};
}

HopfMorphism make_morphism(const std::string& spec) {
  auto parts = split_spec(spec);
  const std::string& name = parts[0];
  if (name == "inclusion")
    return catalog::malgrange_inclusion(std::stoi(parts.at(1)), std::stoi(parts.at(2)));
  if (name == "projection") return catalog::malgrange_projection(std::stoi(parts.at(1)));
  if (name == "unit_counit") {
    ExampleObject o = make_example(spec.substr(name.size() + 1));
    if (o.kind != ExampleObject::Kind::Hopf)
      throw algebra_error("unit_counit needs a Hopf algebroid example");
    return catalog::unit_counit(o.hopf);
  }
  if (name == "identity") {
    ExampleObject o = make_example(spec.substr(name.size() + 1));
    if (o.kind != ExampleObject::Kind::Hopf)
      throw algebra_error("identity needs a Hopf algebroid example");
    return catalog::identity_morphism(o.hopf);
  }
  throw algebra_error("unknown morphism '" + spec + "'");
}

std::vector<std::string> morphism_names() {
  return {"identity:<example>", "unit_counit:<example>", "inclusion:<r1>:<r2>",
          "projection:<r>"};
}

}  // namespace algd
