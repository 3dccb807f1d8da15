#include "algebroid/differentiation.hpp"

#include <algorithm>

namespace algd {

std::string flavor_name(Flavor f) { return f == Flavor::S ? "s" : "t"; }

// ---------------------------------------------------------------------------
// EpsDerivation
// ---------------------------------------------------------------------------

namespace {

/// eps-weighted Leibniz expansion: d(p) = sum_v eps(dp/dv) images[v].
RingElement leibniz_eval(const AlgebraMap& counit, const std::vector<RingElement>& images,
                         const Poly& p) {
  const AlgebraPtr& A = counit.codomain();
  RingElement acc = RingElement::zero(A);
  for (int v = 0; v < counit.domain()->nvars(); ++v) {
    if (images[v].is_zero()) continue;
    Poly dv = p.derivative(v);
    if (dv.is_zero()) continue;
    acc += counit.apply_raw(dv) * images[v];
  }
  return acc;
}

}  // namespace

EpsDerivation EpsDerivation::checked(HopfPtr parent, Flavor flavor,
                                     std::vector<RingElement> images,
                                     const std::string& what) {
  EpsDerivation d;
  d.parent_ = std::move(parent);
  d.flavor_ = flavor;
  d.images_ = std::move(images);
  const HopfPtr& H = d.parent_;
  if (static_cast<int>(d.images_.size()) != H->total->nvars())
    throw algebra_error(what + ": need one image per generator of H");
  for (const RingElement& im : d.images_)
    if (im.ring().get() != H->base.get())
      throw algebra_error(what + ": images must live in the base algebra");
  for (const Poly& r : H->total->relations())
    if (!d.eval_raw(r).is_zero())
      throw algebra_error(what + ": Leibniz expansion of relation " +
                          poly_to_string(r, H->total->vars()) + " is nonzero");
  const AlgebraMap& p = flavor == Flavor::S ? H->src : H->tgt;
  for (int a = 0; a < H->base->nvars(); ++a)
    if (!d.eval_raw(p.images()[a].poly()).is_zero())
      throw algebra_error(what + ": does not kill the " + flavor_name(flavor) +
                          " image of " + H->base->vars()[a]);
  return d;
}

RingElement EpsDerivation::eval_raw(const Poly& representative) const {
  return leibniz_eval(parent_->counit, images_, representative);
}

RingElement EpsDerivation::eval(const RingElement& u) const {
  if (u.ring().get() != parent_->total.get())
    throw algebra_error("EpsDerivation: argument not in H");
  return eval_raw(u.poly());
}

EpsDerivation EpsDerivation::operator+(const EpsDerivation& o) const {
  EpsDerivation d(*this);
  for (size_t i = 0; i < images_.size(); ++i) d.images_[i] = images_[i] + o.images_[i];
  return d;
}

EpsDerivation EpsDerivation::operator-(const EpsDerivation& o) const {
  EpsDerivation d(*this);
  for (size_t i = 0; i < images_.size(); ++i) d.images_[i] = images_[i] - o.images_[i];
  return d;
}

EpsDerivation EpsDerivation::scaled(const RingElement& a) const {
  EpsDerivation d(*this);
  for (size_t i = 0; i < images_.size(); ++i) d.images_[i] = a * images_[i];
  return d;
}

bool EpsDerivation::operator==(const EpsDerivation& o) const {
  return parent_.get() == o.parent_.get() && flavor_ == o.flavor_ &&
         images_ == o.images_;
}

bool EpsDerivation::is_zero() const {
  for (const auto& im : images_)
    if (!im.is_zero()) return false;
  return true;
}

RingElement eps_convolution_on_terms(const EpsDerivation& a, const EpsDerivation& b,
                                     const std::vector<TensorModel::Term>& terms) {
  const HopfPtr& H = a.parent();
  RingElement acc = RingElement::zero(H->base);
  for (const auto& t : terms) {
    if (a.flavor() == Flavor::S) {
      // a(u_1 t(b(u_2)))
      RingElement inner = H->tgt.apply(b.eval_raw(t.right));
      RingElement arg = RingElement(H->total, t.left) * inner;
      acc += a.eval(arg).scaled(t.coeff);
    } else {
      // a(s(b(u_1)) u_2)
      RingElement inner = H->src.apply(b.eval_raw(t.left));
      RingElement arg = inner * RingElement(H->total, t.right);
      acc += a.eval(arg).scaled(t.coeff);
    }
  }
  return acc;
}

EpsDerivation eps_bracket(const EpsDerivation& a, const EpsDerivation& b) {
  const HopfPtr& H = a.parent();
  if (H.get() != b.parent().get() || a.flavor() != b.flavor())
    throw algebra_error("eps_bracket: derivations on different data");
  std::vector<RingElement> images;
  for (int v = 0; v < H->total->nvars(); ++v) {
    auto terms = H->tensor().terms(H->delta_var(v));
    images.push_back(eps_convolution_on_terms(a, b, terms) -
                     eps_convolution_on_terms(b, a, terms));
  }
  return EpsDerivation::checked(H, a.flavor(), std::move(images), "eps_bracket");
}

AlgebraDerivation anchor(const EpsDerivation& d) {
  const HopfPtr& H = d.parent();
  const AlgebraMap& q = d.flavor() == Flavor::S ? H->tgt : H->src;
  std::vector<RingElement> images;
  for (int a = 0; a < H->base->nvars(); ++a)
    images.push_back(d.eval(q.images()[a]));
  return AlgebraDerivation::checked(H->base, std::move(images), "anchor");
}

EpsDerivation compose_antipode(const EpsDerivation& d) {
  const HopfPtr& H = d.parent();
  if (!H->antipode) throw algebra_error("compose_antipode: antipode missing");
  std::vector<RingElement> images;
  for (int v = 0; v < H->total->nvars(); ++v)
    images.push_back(d.eval(H->antipode->images()[v]));
  return EpsDerivation::checked(H, d.flavor() == Flavor::S ? Flavor::T : Flavor::S,
                                std::move(images), "compose_antipode");
}

// ---------------------------------------------------------------------------
// differentiate
// ---------------------------------------------------------------------------

namespace {

/// The common linear system: one unknown per generator of H, rows from the
/// relations of H and from the p-images of base generators.
LinearSystem derivation_system(const HopfPtr& H, Flavor flavor) {
  LinearSystem sys;
  sys.ring = H->base;
  sys.n_unknowns = H->total->nvars();
  auto add_row = [&](const Poly& p, const std::string& label) {
    std::vector<RingElement> row;
    for (int v = 0; v < sys.n_unknowns; ++v)
      row.push_back(H->counit.apply_raw(p.derivative(v)));
    sys.rows.push_back(std::move(row));
    sys.row_labels.push_back(label);
  };
  const AlgebraMap& p = flavor == Flavor::S ? H->src : H->tgt;
  for (int a = 0; a < H->base->nvars(); ++a)
    add_row(p.images()[a].poly(),
            flavor_name(flavor) + "(" + H->base->vars()[a] + ")");
  for (const Poly& r : H->total->relations())
    add_row(r, "relation " + poly_to_string(r, H->total->vars()));
  return sys;
}

}  // namespace

DiffResult differentiate(const HopfPtr& H, Flavor flavor) {
  DiffResult out;
  out.H = H;
  out.flavor = flavor;
  TriangularSolution sol = solve_triangular(derivation_system(H, flavor));

  // lexicographic basis order on the free generator names
  std::vector<int> order(sol.free_unknowns.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return H->total->vars()[sol.free_unknowns[a]] < H->total->vars()[sol.free_unknowns[b]];
  });
  for (int slot : order) out.free_vars.push_back(sol.free_unknowns[slot]);

  int rank = static_cast<int>(out.free_vars.size());
  for (int k = 0; k < rank; ++k) {
    std::vector<RingElement> images;
    for (int v = 0; v < H->total->nvars(); ++v)
      images.push_back(sol.expression[v][order[k]]);
    out.basis.push_back(EpsDerivation::checked(H, flavor, std::move(images),
                                               "differentiate basis"));
  }

  std::vector<std::string> names;
  std::vector<AlgebraDerivation> anchors;
  for (int k = 0; k < rank; ++k) {
    names.push_back("d_" + H->total->vars()[out.free_vars[k]]);
    anchors.push_back(anchor(out.basis[k]));
  }
  std::vector<std::vector<std::vector<RingElement>>> c(
      rank, std::vector<std::vector<RingElement>>(
                rank, std::vector<RingElement>(rank, RingElement::zero(H->base))));
  for (int i = 0; i < rank; ++i) {
    for (int j = i + 1; j < rank; ++j) {
      EpsDerivation br = eps_bracket(out.basis[i], out.basis[j]);
      std::vector<RingElement> coords;
      for (int k = 0; k < rank; ++k) coords.push_back(br.images()[out.free_vars[k]]);
      // the coordinates must reproduce the bracket on every generator
      EpsDerivation recon = out.basis[0].scaled(coords[0]);
      for (int k = 1; k < rank; ++k) recon = recon + out.basis[k].scaled(coords[k]);
      if (!(recon == br))
        throw algebra_error(H->name +
                            ": bracket leaves the chosen free basis, non-free L(H)");
      for (int k = 0; k < rank; ++k) {
        c[i][j][k] = coords[k];
        c[j][i][k] = -coords[k];
      }
    }
  }
  out.lr = make_lie_rinehart("L(" + H->name + ")_" + flavor_name(flavor), H->base,
                             std::move(names), std::move(anchors), std::move(c));
  return out;
}

std::vector<RingElement> DiffResult::coordinates(const EpsDerivation& d) const {
  std::vector<RingElement> coords;
  for (int v : free_vars) coords.push_back(d.images()[v]);
  return coords;
}

EpsDerivation DiffResult::combine(const std::vector<RingElement>& coords) const {
  EpsDerivation acc = basis[0].scaled(coords[0]);
  for (size_t k = 1; k < coords.size(); ++k) acc = acc + basis[k].scaled(coords[k]);
  return acc;
}

LRMorphism l_on_morphism(const HopfMorphism& phi, const DiffResult& diff_cod,
                         const DiffResult& diff_dom) {
  AxiomReport rep = check_hopf_morphism(phi);
  for (const auto& ch : rep.checks)
    if (!ch.pass)
      throw algebra_error(phi.name + ": not a Hopf algebroid morphism, " + ch.name +
                          " fails at " + ch.counterexample);
  if (diff_cod.H.get() != phi.cod.get() || diff_dom.H.get() != phi.dom.get())
    throw algebra_error(phi.name + ": DiffResult mismatch");

  LRMorphism f;
  f.name = "L(" + phi.name + ")";
  f.dom = diff_cod.lr;
  f.cod = diff_dom.lr;
  for (const EpsDerivation& dk : diff_cod.basis) {
    std::vector<RingElement> images;
    for (int v = 0; v < phi.dom->total->nvars(); ++v)
      images.push_back(dk.eval(phi.phi.images()[v]));
    EpsDerivation pulled = EpsDerivation::checked(phi.dom, diff_dom.flavor,
                                                  std::move(images), f.name);
    std::vector<RingElement> coords = diff_dom.coordinates(pulled);
    if (!(diff_dom.combine(coords) == pulled))
      throw algebra_error(f.name + ": pullback leaves the free basis");
    f.matrix.push_back(std::move(coords));
  }
  return f;
}

// ---------------------------------------------------------------------------
// Kaehler module
// ---------------------------------------------------------------------------

KaehlerPresentation kaehler_module(const HopfPtr& H) {
  KaehlerPresentation K;
  K.H = H;
  TriangularSolution sol = solve_triangular(derivation_system(H, Flavor::S));
  std::vector<int> order(sol.free_unknowns.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return H->total->vars()[sol.free_unknowns[a]] < H->total->vars()[sol.free_unknowns[b]];
  });
  for (int slot : order) {
    K.basis_vars.push_back(sol.free_unknowns[slot]);
    K.basis.push_back("q_" + H->total->vars()[sol.free_unknowns[slot]]);
  }
  int rank = static_cast<int>(K.basis_vars.size());
  for (int v = 0; v < H->total->nvars(); ++v) {
    std::vector<RingElement> coords;
    for (int k = 0; k < rank; ++k) coords.push_back(sol.expression[v][order[k]]);
    K.pi_images.push_back(std::move(coords));
  }
  // psi^s(v) = sum Delta(v) terms c * mL (x) pi^s(mR), coefficients moved
  // across the balanced tensor through t
  for (int v = 0; v < H->total->nvars(); ++v) {
    std::vector<RingElement> psi(rank, RingElement::zero(H->total));
    for (const auto& term : H->tensor().terms(H->delta_var(v))) {
      for (int w = 0; w < H->total->nvars(); ++w) {
        Poly dw = term.right.derivative(w);
        if (dw.is_zero()) continue;
        RingElement weight = H->counit.apply_raw(dw);  // in A
        for (int k = 0; k < rank; ++k) {
          RingElement a_k = weight * K.pi_images[w][k];
          if (a_k.is_zero()) continue;
          psi[k] += RingElement(H->total, term.left).scaled(term.coeff) *
                    H->tgt.apply(a_k);
        }
      }
    }
    K.psi_images.push_back(std::move(psi));
  }
  return K;
}

std::vector<RingElement> KaehlerPresentation::pi(const RingElement& u) const {
  int rank = static_cast<int>(basis_vars.size());
  std::vector<RingElement> coords(rank, RingElement::zero(H->base));
  for (int v = 0; v < H->total->nvars(); ++v) {
    Poly dv = u.poly().derivative(v);
    if (dv.is_zero()) continue;
    RingElement weight = H->counit.apply_raw(dv);
    for (int k = 0; k < rank; ++k) coords[k] += weight * pi_images[v][k];
  }
  return coords;
}

std::vector<RingElement> KaehlerPresentation::psi(const RingElement& u) const {
  int rank = static_cast<int>(basis_vars.size());
  std::vector<RingElement> out(rank, RingElement::zero(H->total));
  // psi is a derivation along eps: psi(uv) = psi(u) t(eps(v)) + ... ; evaluate
  // via u_1 (x) pi(u_2) on the coproduct of u
  RingElement du = H->delta(u);
  for (const auto& term : H->tensor().terms(du)) {
    for (int w = 0; w < H->total->nvars(); ++w) {
      Poly dw = term.right.derivative(w);
      if (dw.is_zero()) continue;
      RingElement weight = H->counit.apply_raw(dw);
      for (int k = 0; k < rank; ++k) {
        RingElement a_k = weight * pi_images[w][k];
        if (a_k.is_zero()) continue;
        out[k] += RingElement(H->total, term.left).scaled(term.coeff) * H->tgt.apply(a_k);
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// isotropy
// ---------------------------------------------------------------------------

namespace {

Rational point_eval(const AlgebraMap& point, const AlgebraMap& counit, const Poly& p) {
  RingElement r = point.apply(counit.apply_raw(p));
  return r.is_zero() ? Rational(0) : r.constant_value();
}

}  // namespace

Rational IsotropyLieAlgebra::eval(int k, const Poly& representative) const {
  Rational acc(0);
  for (int v = 0; v < H->total->nvars(); ++v) {
    if (algd::is_zero(basis[k][v])) continue;
    Poly dv = representative.derivative(v);
    if (dv.is_zero()) continue;
    acc += point_eval(point, H->counit, dv) * basis[k][v];
  }
  return acc;
}

IsotropyLieAlgebra isotropy(const HopfPtr& H, const AlgebraMap& x) {
  if (x.domain().get() != H->base.get() || !x.codomain()->trivial())
    throw algebra_error("isotropy: point must be an algebra map A -> Q");
  IsotropyLieAlgebra iso;
  iso.H = H;
  iso.point = x;
  iso.rationals = x.codomain();

  // delta o s = 0, delta o t = 0, Leibniz rows for the relations, all over Q
  LinearSystem sys;
  sys.ring = iso.rationals;
  sys.n_unknowns = H->total->nvars();
  auto add_row = [&](const Poly& p, const std::string& label) {
    std::vector<RingElement> row;
    for (int v = 0; v < sys.n_unknowns; ++v)
      row.push_back(RingElement::constant(iso.rationals,
                                          point_eval(x, H->counit, p.derivative(v))));
    sys.rows.push_back(std::move(row));
    sys.row_labels.push_back(label);
  };
  for (int a = 0; a < H->base->nvars(); ++a) {
    add_row(H->src.images()[a].poly(), "s(" + H->base->vars()[a] + ")");
    add_row(H->tgt.images()[a].poly(), "t(" + H->base->vars()[a] + ")");
  }
  for (const Poly& r : H->total->relations())
    add_row(r, "relation " + poly_to_string(r, H->total->vars()));
  TriangularSolution sol = solve_triangular(sys);

  std::vector<int> order(sol.free_unknowns.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return H->total->vars()[sol.free_unknowns[a]] < H->total->vars()[sol.free_unknowns[b]];
  });
  for (int slot : order) iso.free_vars.push_back(sol.free_unknowns[slot]);
  int rank = static_cast<int>(iso.free_vars.size());
  for (int k = 0; k < rank; ++k) {
    std::vector<Rational> images;
    for (int v = 0; v < H->total->nvars(); ++v) {
      const RingElement& e = sol.expression[v][order[k]];
      images.push_back(e.is_zero() ? Rational(0) : e.constant_value());
    }
    iso.basis.push_back(std::move(images));
  }

  // bracket of prop. isotropy: [d,d'](u) = d(u_1)d'(u_2) - d'(u_1)d(u_2)
  auto pair_eval = [&](int i, int j, int var) {
    Rational acc(0);
    for (const auto& term : H->tensor().terms(H->delta_var(var))) {
      acc += term.coeff * (iso.eval(i, term.left) * iso.eval(j, term.right) -
                           iso.eval(j, term.left) * iso.eval(i, term.right));
    }
    return acc;
  };
  iso.c.assign(rank, std::vector<std::vector<Rational>>(
                         rank, std::vector<Rational>(rank, Rational(0))));
  for (int i = 0; i < rank; ++i) {
    for (int j = i + 1; j < rank; ++j) {
      std::vector<Rational> values(H->total->nvars());
      for (int v = 0; v < H->total->nvars(); ++v) values[v] = pair_eval(i, j, v);
      for (int k = 0; k < rank; ++k) {
        iso.c[i][j][k] = values[iso.free_vars[k]];
        iso.c[j][i][k] = -iso.c[i][j][k];
      }
      // consistency on the non-free generators
      for (int v = 0; v < H->total->nvars(); ++v) {
        Rational recon(0);
        for (int k = 0; k < rank; ++k) recon += iso.c[i][j][k] * iso.basis[k][v];
        if (recon != values[v])
          throw algebra_error(H->name + ": isotropy bracket leaves the basis");
      }
    }
  }

  // the isotropy Hopf algebra H_x = Q_x (x)_A H (x)_A Q_x over the trivial base
  std::vector<Poly> rels = H->total->relations();
  int n = H->total->nvars();
  for (int a = 0; a < H->base->nvars(); ++a) {
    Rational xa = x.images()[a].is_zero() ? Rational(0) : x.images()[a].constant_value();
    rels.push_back(H->src.images()[a].poly() - Poly::constant(n, xa));
    rels.push_back(H->tgt.images()[a].poly() - Poly::constant(n, xa));
  }
  std::vector<std::pair<std::string, std::string>> inv;
  for (auto [a, b] : H->total->inverse_pairs())
    inv.emplace_back(H->total->vars()[a], H->total->vars()[b]);
  AlgebraPtr Hx = PresentedAlgebra::make(H->name + "_at_point", H->total->vars(), inv,
                                         std::move(rels));
  std::vector<RingElement> eps_x;
  for (int v = 0; v < n; ++v)
    eps_x.push_back(RingElement::constant(
        iso.rationals, point_eval(x, H->counit, Poly::variable(n, v))));
  std::vector<TensorExpr> cop;
  for (int v = 0; v < n; ++v) {
    TensorExpr e;
    for (const auto& term : H->tensor().terms(H->delta_var(v)))
      e.emplace_back(RingElement(Hx, term.left.scaled(term.coeff)),
                     RingElement(Hx, term.right));
    cop.push_back(std::move(e));
  }
  std::optional<std::vector<RingElement>> S_x;
  if (H->antipode) {
    std::vector<RingElement> imgs;
    for (int v = 0; v < n; ++v) imgs.push_back(RingElement(Hx, H->antipode->images()[v].poly()));
    S_x = std::move(imgs);
  }
  iso.isotropy_hopf = build_hopf_algebroid(H->name + "_x", iso.rationals, Hx, {}, {},
                                           std::move(eps_x), std::move(cop), std::move(S_x));
  return iso;
}

bool isotropy_nabla_matches(const IsotropyLieAlgebra& iso, std::string* detail) {
  DiffResult dx = differentiate(iso.isotropy_hopf, Flavor::S);
  int rank = iso.rank();
  if (dx.lr.rank() != rank) {
    if (detail) *detail = "rank mismatch";
    return false;
  }
  const AlgebraPtr& Q = iso.rationals;
  // transport each isotropy basis vector through nabla (same generator images)
  std::vector<std::vector<RingElement>> coords;
  for (int k = 0; k < rank; ++k) {
    std::vector<RingElement> images;
    for (int v = 0; v < iso.H->total->nvars(); ++v)
      images.push_back(RingElement::constant(Q, iso.basis[k][v]));
    EpsDerivation dk = EpsDerivation::checked(iso.isotropy_hopf, Flavor::S,
                                              std::move(images), "nabla");
    std::vector<RingElement> ck = dx.coordinates(dk);
    if (!(dx.combine(ck) == dk)) {
      if (detail) *detail = "nabla image leaves the basis";
      return false;
    }
    coords.push_back(std::move(ck));
  }
  // compare [nabla(d_i), nabla(d_j)] with nabla([d_i, d_j])
  for (int i = 0; i < rank; ++i) {
    for (int j = 0; j < rank; ++j) {
      std::vector<RingElement> lhs(rank, RingElement::zero(Q));
      auto bij = dx.lr.bracket_vectors(coords[i], coords[j]);
      std::vector<RingElement> rhs(rank, RingElement::zero(Q));
      for (int k = 0; k < rank; ++k)
        for (int m = 0; m < rank; ++m)
          rhs[m] += RingElement::constant(Q, iso.c[i][j][k]) * coords[k][m];
      for (int m = 0; m < rank; ++m)
        if (bij[m] != rhs[m]) {
          if (detail)
            *detail = "bracket mismatch at pair (" + std::to_string(i) + "," +
                      std::to_string(j) + ")";
          return false;
        }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// split algebroids
// ---------------------------------------------------------------------------

SplitAlgebroid build_split_algebroid(const std::string& name, const HopfPtr& B,
                                     const AlgebraPtr& A,
                                     const std::vector<std::string>& coaction_exprs) {
  if (!B->base->trivial())
    throw algebra_error(name + ": B must be a Hopf algebra over the trivial base");
  SplitAlgebroid sp;
  sp.B = B;
  sp.A = A;

  int nb = B->total->nvars(), na = A->nvars();
  std::vector<std::string> vars = B->total->vars();
  for (const auto& v : A->vars()) vars.push_back(v);
  sp.bvar_to_total.resize(nb);
  sp.avar_to_total.resize(na);
  for (int v = 0; v < nb; ++v) sp.bvar_to_total[v] = v;
  for (int v = 0; v < na; ++v) sp.avar_to_total[v] = nb + v;
  std::vector<std::pair<std::string, std::string>> inv;
  for (auto [a, b] : B->total->inverse_pairs())
    inv.emplace_back(B->total->vars()[a], B->total->vars()[b]);
  for (auto [a, b] : A->inverse_pairs())
    inv.emplace_back(A->vars()[a], A->vars()[b]);
  std::vector<Poly> rels;
  for (const Poly& r : B->total->relations())
    rels.push_back(r.map_vars(sp.bvar_to_total, nb + na));
  for (const Poly& r : A->relations())
    rels.push_back(r.map_vars(sp.avar_to_total, nb + na));
  AlgebraPtr total = PresentedAlgebra::make(name + "_total", vars, inv, std::move(rels));

  if (static_cast<int>(coaction_exprs.size()) != na)
    throw algebra_error(name + ": one coaction image per generator of A");
  std::vector<RingElement> rho;
  for (const std::string& e : coaction_exprs) rho.push_back(parse_element(e, total));
  sp.coaction = AlgebraMap::checked(A, total, rho, name + ".coaction");

  // validate the coaction: counit law and coassociativity on generators
  {
    std::vector<RingElement> to_A(nb + na, RingElement());
    for (int v = 0; v < nb; ++v) {
      RingElement eb = B->counit.images()[v];  // rational constant
      to_A[v] = RingElement::constant(A, eb.is_zero() ? Rational(0) : eb.constant_value());
    }
    for (int v = 0; v < na; ++v) to_A[nb + v] = RingElement::variable(A, v);
    AlgebraMap counit_collapse =
        AlgebraMap::checked(total, A, std::move(to_A), name + ".coaction_counit");
    for (int v = 0; v < na; ++v)
      if (counit_collapse.apply(sp.coaction.images()[v]) != RingElement::variable(A, v))
        throw algebra_error(name + ": coaction fails the counit law on " + A->vars()[v]);
  }
  {
    int n3 = 2 * nb + na;
    std::vector<std::string> vars3;
    for (const auto& v : B->total->vars()) vars3.push_back(v + "_1");
    for (const auto& v : B->total->vars()) vars3.push_back(v + "_2");
    for (const auto& v : A->vars()) vars3.push_back(v);
    std::vector<int> leg1(nb), leg2(nb), legA(na);
    for (int v = 0; v < nb; ++v) {
      leg1[v] = v;
      leg2[v] = nb + v;
    }
    for (int v = 0; v < na; ++v) legA[v] = 2 * nb + v;
    std::vector<std::pair<std::string, std::string>> inv3;
    for (auto [a, b] : B->total->inverse_pairs()) {
      inv3.emplace_back(vars3[leg1[a]], vars3[leg1[b]]);
      inv3.emplace_back(vars3[leg2[a]], vars3[leg2[b]]);
    }
    for (auto [a, b] : A->inverse_pairs())
      inv3.emplace_back(vars3[legA[a]], vars3[legA[b]]);
    std::vector<Poly> rels3;
    for (const Poly& r : B->total->relations()) {
      rels3.push_back(r.map_vars(leg1, n3));
      rels3.push_back(r.map_vars(leg2, n3));
    }
    for (const Poly& r : A->relations()) rels3.push_back(r.map_vars(legA, n3));
    AlgebraPtr bba = PresentedAlgebra::make(name + "_BBA", vars3, inv3, std::move(rels3));

    // side 1: apply Delta_B to the B part of rho; side 2: apply rho to the A part
    std::vector<RingElement> side1(nb + na, RingElement()), side2(nb + na, RingElement());
    std::vector<int> b_into_12(2 * nb);
    for (int w = 0; w < nb; ++w) {
      b_into_12[w] = leg1[w];
      b_into_12[nb + w] = leg2[w];
    }
    std::vector<int> total_into_2A(nb + na);
    for (int w = 0; w < nb; ++w) total_into_2A[w] = leg2[w];
    for (int w = 0; w < na; ++w) total_into_2A[nb + w] = legA[w];
    for (int v = 0; v < nb; ++v) {
      side1[v] = RingElement(bba, B->delta_var(v).poly().map_vars(b_into_12, n3));
      side2[v] = RingElement(bba, Poly::variable(nb, v).map_vars(leg1, n3));
    }
    for (int v = 0; v < na; ++v) {
      side1[nb + v] = RingElement(bba, Poly::variable(na, v).map_vars(legA, n3));
      side2[nb + v] =
          RingElement(bba, sp.coaction.images()[v].poly().map_vars(total_into_2A, n3));
    }
    AlgebraMap m1 = AlgebraMap::checked(total, bba, std::move(side1), name + ".coassoc1");
    AlgebraMap m2 = AlgebraMap::checked(total, bba, std::move(side2), name + ".coassoc2");
    for (int v = 0; v < na; ++v)
      if (m1.apply(sp.coaction.images()[v]) != m2.apply(sp.coaction.images()[v]))
        throw algebra_error(name + ": coaction is not coassociative on " + A->vars()[v]);
  }

  // structure maps of the split algebroid (A, B (x) A)
  std::vector<RingElement> s_imgs, t_imgs, eps_imgs, S_imgs;
  std::vector<TensorExpr> cop;
  for (int v = 0; v < na; ++v) {
    s_imgs.push_back(sp.coaction.images()[v]);
    t_imgs.push_back(RingElement::variable(total, nb + v));
  }
  for (int v = 0; v < nb; ++v) {
    RingElement eb = B->counit.images()[v];
    eps_imgs.push_back(
        RingElement::constant(A, eb.is_zero() ? Rational(0) : eb.constant_value()));
  }
  for (int v = 0; v < na; ++v) eps_imgs.push_back(RingElement::variable(A, v));

  auto embed_b = [&](const Poly& p) {
    return RingElement(total, p.map_vars(sp.bvar_to_total, nb + na));
  };
  for (int v = 0; v < nb; ++v) {
    TensorExpr e;
    for (const auto& term : B->tensor().terms(B->delta_var(v)))
      e.emplace_back(embed_b(term.left).scaled(term.coeff), embed_b(term.right));
    cop.push_back(std::move(e));
  }
  for (int v = 0; v < na; ++v) {
    TensorExpr e;
    e.emplace_back(RingElement::one(total), RingElement::variable(total, nb + v));
    cop.push_back(std::move(e));
  }
  if (!B->antipode) throw algebra_error(name + ": B needs an antipode");
  for (int v = 0; v < nb; ++v) S_imgs.push_back(embed_b(B->antipode->images()[v].poly()));
  for (int v = 0; v < na; ++v) S_imgs.push_back(sp.coaction.images()[v]);

  sp.split = build_hopf_algebroid(name, A, total, std::move(s_imgs), std::move(t_imgs),
                                  std::move(eps_imgs), std::move(cop), std::move(S_imgs));
  return sp;
}

EpsDerivation split_tau(const SplitAlgebroid& sp, const EpsDerivation& delta_B) {
  if (delta_B.parent().get() != sp.B.get())
    throw algebra_error("split_tau: derivation is not on B");
  int nb = sp.B->total->nvars(), na = sp.A->nvars();
  std::vector<RingElement> images;
  for (int v = 0; v < nb; ++v) {
    const RingElement& d = delta_B.images()[v];  // rational constant
    images.push_back(
        RingElement::constant(sp.A, d.is_zero() ? Rational(0) : d.constant_value()));
  }
  for (int v = 0; v < na; ++v) images.push_back(RingElement::zero(sp.A));
  return EpsDerivation::checked(sp.split, Flavor::T, std::move(images), "split_tau");
}

}  // namespace algd
