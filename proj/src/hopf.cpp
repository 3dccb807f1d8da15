#include "algebroid/hopf.hpp"

#include <map>
#include <sstream>

namespace algd {

bool AxiomReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

void AxiomReport::add(std::string name, bool pass, std::string detail) {
  checks.push_back({std::move(name), pass, std::move(detail)});
}

std::string AxiomReport::summary() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << (c.pass ? "  pass  " : "  FAIL  ") << c.name;
    if (!c.pass && !c.counterexample.empty()) os << "  [" << c.counterexample << "]";
    os << "\n";
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// tensor models
// ---------------------------------------------------------------------------

namespace {

std::vector<std::string> leg_names(const std::vector<std::string>& vars,
                                   const std::string& suffix) {
  std::vector<std::string> out;
  out.reserve(vars.size());
  for (const auto& v : vars) out.push_back(v + suffix);
  return out;
}

}  // namespace

TensorModel::TensorModel(const std::string& name, AlgebraPtr H, const AlgebraMap& src,
                         const AlgebraMap& tgt, bool op_transfer)
    : H_(std::move(H)) {
  int n = H_->nvars();
  std::vector<std::string> vars = leg_names(H_->vars(), "_l");
  for (const auto& v : leg_names(H_->vars(), "_r")) vars.push_back(v);
  left_map_.resize(n);
  right_map_.resize(n);
  for (int v = 0; v < n; ++v) {
    left_map_[v] = v;
    right_map_[v] = n + v;
  }
  std::vector<std::pair<std::string, std::string>> inv;
  for (auto [a, b] : H_->inverse_pairs()) {
    inv.emplace_back(vars[left_map_[a]], vars[left_map_[b]]);
    inv.emplace_back(vars[right_map_[a]], vars[right_map_[b]]);
  }
  std::vector<Poly> rels;
  for (const Poly& r : H_->relations()) {
    rels.push_back(r.map_vars(left_map_, 2 * n));
    rels.push_back(r.map_vars(right_map_, 2 * n));
  }
  // transfer relations: t(a) on one leg equals s(a) on the other
  const AlgebraPtr& A = src.domain();
  for (int a = 0; a < A->nvars(); ++a) {
    Poly tl = tgt.images()[a].poly().map_vars(op_transfer ? right_map_ : left_map_, 2 * n);
    Poly sr = src.images()[a].poly().map_vars(op_transfer ? left_map_ : right_map_, 2 * n);
    Poly rel = tl - sr;
    if (!rel.is_zero()) rels.push_back(rel);
  }
  model_ = PresentedAlgebra::make(name, vars, inv, rels);
}

RingElement TensorModel::include_left(const RingElement& h) const {
  return RingElement(model_, h.poly().map_vars(left_map_, model_->nvars()));
}

RingElement TensorModel::include_right(const RingElement& h) const {
  return RingElement(model_, h.poly().map_vars(right_map_, model_->nvars()));
}

RingElement TensorModel::tensor(const RingElement& a, const RingElement& b) const {
  return include_left(a) * include_right(b);
}

std::vector<TensorModel::Term> TensorModel::raw_terms(const Poly& p) const {
  int n = H_->nvars();
  std::vector<Term> out;
  for (const auto& [m, c] : p.terms()) {
    Monomial ml(n, 0u), mr(n, 0u);
    for (int v = 0; v < n; ++v) {
      ml[v] = m[v];
      mr[v] = m[n + v];
    }
    out.push_back({c, Poly::monomial(std::move(ml), Rational(1)),
                   Poly::monomial(std::move(mr), Rational(1))});
  }
  return out;
}

std::vector<TensorModel::Term> TensorModel::terms(const RingElement& t) const {
  if (t.ring().get() != model_.get())
    throw algebra_error("TensorModel::terms: element not in this model");
  return raw_terms(t.poly());
}

std::string TensorModel::str(const RingElement& t) const {
  if (t.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& term : terms(t)) {
    Rational c = term.coeff;
    if (first) {
      if (sgn(c) < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
      if (sgn(c) < 0) c = -c;
    }
    if (c != 1) os << c.get_str() << "*";
    os << poly_to_string(term.left, H_->vars()) << " (x) "
       << poly_to_string(term.right, H_->vars());
    first = false;
  }
  return os.str();
}

TripleModel::TripleModel(const std::string& name, AlgebraPtr H, const AlgebraMap& src,
                         const AlgebraMap& tgt)
    : H_(std::move(H)) {
  int n = H_->nvars();
  std::vector<std::string> vars = leg_names(H_->vars(), "_1");
  for (const auto& v : leg_names(H_->vars(), "_2")) vars.push_back(v);
  for (const auto& v : leg_names(H_->vars(), "_3")) vars.push_back(v);
  for (int leg = 0; leg < 3; ++leg) {
    maps_[leg].resize(n);
    for (int v = 0; v < n; ++v) maps_[leg][v] = leg * n + v;
  }
  std::vector<std::pair<std::string, std::string>> inv;
  std::vector<Poly> rels;
  for (int leg = 0; leg < 3; ++leg) {
    for (auto [a, b] : H_->inverse_pairs())
      inv.emplace_back(vars[maps_[leg][a]], vars[maps_[leg][b]]);
    for (const Poly& r : H_->relations()) rels.push_back(r.map_vars(maps_[leg], 3 * n));
  }
  const AlgebraPtr& A = src.domain();
  for (int a = 0; a < A->nvars(); ++a) {
    for (int leg = 0; leg < 2; ++leg) {
      Poly tl = tgt.images()[a].poly().map_vars(maps_[leg], 3 * n);
      Poly sr = src.images()[a].poly().map_vars(maps_[leg + 1], 3 * n);
      Poly rel = tl - sr;
      if (!rel.is_zero()) rels.push_back(rel);
    }
  }
  model_ = PresentedAlgebra::make(name, vars, inv, rels);
}

// ---------------------------------------------------------------------------
// construction
// ---------------------------------------------------------------------------

HopfPtr build_hopf_algebroid(std::string name, AlgebraPtr base, AlgebraPtr total,
                             std::vector<RingElement> s_images,
                             std::vector<RingElement> t_images,
                             std::vector<RingElement> counit_images,
                             std::vector<TensorExpr> coproduct_images,
                             std::optional<std::vector<RingElement>> antipode_images) {
  auto H = std::make_shared<HopfAlgebroid>();
  H->name = std::move(name);
  H->base = std::move(base);
  H->total = std::move(total);
  H->src = AlgebraMap::checked(H->base, H->total, std::move(s_images), H->name + ".source");
  H->tgt = AlgebraMap::checked(H->base, H->total, std::move(t_images), H->name + ".target");
  H->counit = AlgebraMap::checked(H->total, H->base, std::move(counit_images),
                                  H->name + ".counit");
  for (int a = 0; a < H->base->nvars(); ++a) {
    RingElement av = RingElement::variable(H->base, a);
    if (H->counit.apply(H->src.apply(av)) != av)
      throw algebra_error(H->name + ": counit o source is not the identity on " +
                          H->base->vars()[a]);
    if (H->counit.apply(H->tgt.apply(av)) != av)
      throw algebra_error(H->name + ": counit o target is not the identity on " +
                          H->base->vars()[a]);
  }
  H->tensor_ = TensorModel(H->name + "__t2", H->total, H->src, H->tgt);
  if (static_cast<int>(coproduct_images.size()) != H->total->nvars())
    throw algebra_error(H->name + ": coproduct image missing for some generator");
  std::vector<RingElement> delta;
  for (const TensorExpr& e : coproduct_images) {
    RingElement acc = RingElement::zero(H->tensor_.model());
    for (const auto& [l, r] : e) acc += H->tensor_.tensor(l, r);
    delta.push_back(acc);
  }
  H->coproduct = AlgebraMap::checked(H->total, H->tensor_.model(), std::move(delta),
                                     H->name + ".coproduct");
  if (antipode_images)
    H->antipode = AlgebraMap::checked(H->total, H->total, std::move(*antipode_images),
                                      H->name + ".antipode");
  return H;
}

const TensorModel& HopfAlgebroid::op_tensor() const {
  if (!op_tensor_)
    op_tensor_ = TensorModel(name + "__t2op", total, src, tgt, /*op_transfer=*/true);
  return *op_tensor_;
}

const TripleModel& HopfAlgebroid::triple() const {
  if (!triple_) triple_ = TripleModel(name + "__t3", total, src, tgt);
  return *triple_;
}

// ---------------------------------------------------------------------------
// axiom checks
// ---------------------------------------------------------------------------

namespace {

/// v_l -> images_l[v], v_r -> images_r[v], as a checked map out of the model.
AlgebraMap leg_map(const TensorModel& tm, AlgebraPtr codomain,
                   const std::vector<RingElement>& images_l,
                   const std::vector<RingElement>& images_r, const std::string& what) {
  std::vector<RingElement> images = images_l;
  images.insert(images.end(), images_r.begin(), images_r.end());
  return AlgebraMap::checked(tm.model(), std::move(codomain), std::move(images), what);
}

std::vector<RingElement> var_images(const AlgebraPtr& alg) {
  std::vector<RingElement> v;
  for (int i = 0; i < alg->nvars(); ++i) v.push_back(RingElement::variable(alg, i));
  return v;
}

std::vector<RingElement> mapped_images(const AlgebraPtr& H, const AlgebraMap& f) {
  std::vector<RingElement> v;
  for (int i = 0; i < H->nvars(); ++i) v.push_back(f.apply(RingElement::variable(H, i)));
  return v;
}

}  // namespace

AxiomReport check_axioms(const HopfPtr& H) {
  if (!H->antipode) throw algebra_error(H->name + ": check_axioms requires an antipode");
  AxiomReport rep;
  const AlgebraPtr& A = H->base;
  const AlgebraPtr& T = H->total;
  const AlgebraMap& S = *H->antipode;
  const TensorModel& tm = H->tensor();

  auto per_base = [&](const std::string& name, auto&& fn) {
    for (int a = 0; a < A->nvars(); ++a) {
      if (!fn(a)) {
        rep.add(name, false, A->vars()[a]);
        return;
      }
    }
    rep.add(name, true);
  };
  auto per_total = [&](const std::string& name, auto&& fn) {
    for (int g = 0; g < T->nvars(); ++g) {
      if (!fn(g)) {
        rep.add(name, false, T->vars()[g]);
        return;
      }
    }
    rep.add(name, true);
  };

  per_base("counit_source", [&](int a) {
    RingElement av = RingElement::variable(A, a);
    return H->counit.apply(H->src.apply(av)) == av;
  });
  per_base("counit_target", [&](int a) {
    RingElement av = RingElement::variable(A, a);
    return H->counit.apply(H->tgt.apply(av)) == av;
  });
  per_base("coproduct_source_leg", [&](int a) {
    RingElement sa = H->src.apply(RingElement::variable(A, a));
    return H->delta(sa) == tm.include_left(sa);
  });
  per_base("coproduct_target_leg", [&](int a) {
    RingElement ta = H->tgt.apply(RingElement::variable(A, a));
    return H->delta(ta) == tm.include_right(ta);
  });

  // coassociativity in the triple model
  try {
    const TripleModel& t3 = H->triple();
    int n3 = t3.model()->nvars();
    std::vector<RingElement> dl, dr, leg3, leg1;
    for (int v = 0; v < T->nvars(); ++v) {
      const Poly& d = H->delta_var(v).poly();
      std::vector<int> into12(2 * T->nvars()), into23(2 * T->nvars());
      for (int w = 0; w < T->nvars(); ++w) {
        into12[w] = t3.leg_map(0)[w];
        into12[T->nvars() + w] = t3.leg_map(1)[w];
        into23[w] = t3.leg_map(1)[w];
        into23[T->nvars() + w] = t3.leg_map(2)[w];
      }
      dl.push_back(RingElement(t3.model(), d.map_vars(into12, n3)));
      dr.push_back(RingElement(t3.model(), d.map_vars(into23, n3)));
      leg3.push_back(RingElement(t3.model(),
                                 Poly::variable(T->nvars(), v).map_vars(t3.leg_map(2), n3)));
      leg1.push_back(RingElement(t3.model(),
                                 Poly::variable(T->nvars(), v).map_vars(t3.leg_map(0), n3)));
    }
    AlgebraMap delta_left = leg_map(tm, t3.model(), dl, leg3, H->name + ".coassoc_l");
    AlgebraMap delta_right = leg_map(tm, t3.model(), leg1, dr, H->name + ".coassoc_r");
    per_total("coassociativity", [&](int g) {
      const RingElement& dg = H->delta_var(g);
      return delta_left.apply(dg) == delta_right.apply(dg);
    });
  } catch (const algebra_error& e) {
    rep.add("coassociativity", false, e.what());
  }

  // counit laws through leg collapse
  try {
    std::vector<RingElement> eps_s, eps_t, idv = var_images(T);
    for (int v = 0; v < T->nvars(); ++v) {
      RingElement ev = H->counit.images()[v];
      eps_s.push_back(H->src.apply(ev));
      eps_t.push_back(H->tgt.apply(ev));
    }
    AlgebraMap collapse_l = leg_map(tm, T, eps_s, idv, H->name + ".counit_l");
    AlgebraMap collapse_r = leg_map(tm, T, idv, eps_t, H->name + ".counit_r");
    per_total("counit_left", [&](int g) {
      return collapse_l.apply(H->delta_var(g)) == RingElement::variable(T, g);
    });
    per_total("counit_right", [&](int g) {
      return collapse_r.apply(H->delta_var(g)) == RingElement::variable(T, g);
    });
  } catch (const algebra_error& e) {
    rep.add("counit_left", false, e.what());
    rep.add("counit_right", false, e.what());
  }

  per_base("antipode_source", [&](int a) {
    RingElement av = RingElement::variable(A, a);
    return S.apply(H->src.apply(av)) == H->tgt.apply(av);
  });
  per_base("antipode_target", [&](int a) {
    RingElement av = RingElement::variable(A, a);
    return S.apply(H->tgt.apply(av)) == H->src.apply(av);
  });
  per_total("antipode_involutive", [&](int g) {
    RingElement gv = RingElement::variable(T, g);
    return S.apply(S.apply(gv)) == gv;
  });

  // S(u_1)u_2 = t(eps(u)) and u_1 S(u_2) = s(eps(u))
  try {
    std::vector<RingElement> s_images = mapped_images(T, S), idv = var_images(T);
    AlgebraMap fold_l = leg_map(tm, T, s_images, idv, H->name + ".antipode_fold_l");
    AlgebraMap fold_r = leg_map(tm, T, idv, s_images, H->name + ".antipode_fold_r");
    per_total("antipode_left_law", [&](int g) {
      return fold_l.apply(H->delta_var(g)) ==
             H->tgt.apply(H->counit.images()[g]);
    });
    per_total("antipode_right_law", [&](int g) {
      return fold_r.apply(H->delta_var(g)) ==
             H->src.apply(H->counit.images()[g]);
    });
  } catch (const algebra_error& e) {
    rep.add("antipode_left_law", false, e.what());
    rep.add("antipode_right_law", false, e.what());
  }

  // S(u_1) (x) S(u_2) = S(u)_2 (x) S(u)_1 in H_s (x) _tH
  try {
    const TensorModel& op = H->op_tensor();
    std::vector<RingElement> sl, sr, swap_l, swap_r;
    for (int v = 0; v < T->nvars(); ++v) {
      RingElement sv = S.apply(RingElement::variable(T, v));
      sl.push_back(op.include_left(sv));
      sr.push_back(op.include_right(sv));
      swap_l.push_back(op.include_right(RingElement::variable(T, v)));
      swap_r.push_back(op.include_left(RingElement::variable(T, v)));
    }
    AlgebraMap s_tensor_s = leg_map(tm, op.model(), sl, sr, H->name + ".anticocomm_lhs");
    AlgebraMap twist = leg_map(tm, op.model(), swap_l, swap_r, H->name + ".anticocomm_rhs");
    per_total("antipode_anticocommutative", [&](int g) {
      RingElement lhs = s_tensor_s.apply(H->delta_var(g));
      RingElement rhs = twist.apply(H->delta(S.apply(RingElement::variable(T, g))));
      return lhs == rhs;
    });
  } catch (const algebra_error& e) {
    rep.add("antipode_anticocommutative", false, e.what());
  }

  H->verified = rep.all_pass();
  return rep;
}

// ---------------------------------------------------------------------------
// antipode solving
// ---------------------------------------------------------------------------

namespace {

struct AntipodeSolver {
  const HopfPtr& H;
  std::vector<std::optional<RingElement>> solved;

  explicit AntipodeSolver(const HopfPtr& h)
      : H(h), solved(h->total->nvars()) {}

  // S applied to a monomial whose variables are all solved
  std::optional<RingElement> s_of_monomial(const Poly& mono) {
    RingElement acc = RingElement::one(H->total);
    const Monomial& m = mono.leading_monomial();
    for (size_t v = 0; v < m.size(); ++v) {
      for (unsigned k = 0; k < m[v]; ++k) {
        if (!solved[v]) return std::nullopt;
        acc = acc * *solved[v];
      }
    }
    return acc;
  }

  /// Attempt to solve generator g from one antipode law.  s_side selects
  /// which tensor leg the antipode is applied to (left for law 1).
  bool try_solve(int g, bool s_side_left) {
    const TensorModel& tm = H->tensor();
    auto terms = tm.terms(H->delta_var(g));
    RingElement known = RingElement::zero(H->total);
    RingElement coeff = RingElement::zero(H->total);
    for (const auto& t : terms) {
      const Poly& s_mono = s_side_left ? t.left : t.right;
      const Poly& plain_mono = s_side_left ? t.right : t.left;
      RingElement plain(H->total, plain_mono);
      const Monomial& m = s_mono.leading_monomial();
      unsigned g_power = m[g];
      if (g_power == 0) {
        auto sm = s_of_monomial(s_mono);
        if (!sm) return false;  // depends on another unsolved generator
        known += sm->scaled(t.coeff) * plain;
      } else if (g_power == 1) {
        Monomial rest_m(m);
        rest_m[g] = 0;
        auto sr = s_of_monomial(Poly::monomial(rest_m, Rational(1)));
        if (!sr) return false;
        coeff += sr->scaled(t.coeff) * plain;
      } else {
        return false;  // nonlinear in the unknown
      }
    }
    auto cinv = coeff.invert();
    if (!cinv) return false;
    RingElement rhs = s_side_left ? H->tgt.apply(H->counit.images()[g])
                                  : H->src.apply(H->counit.images()[g]);
    solved[g] = (rhs - known) * *cinv;
    return true;
  }
};

}  // namespace

AlgebraMap derive_antipode(const HopfPtr& H, const std::vector<int>& order) {
  AntipodeSolver solver(H);
  int n = H->total->nvars();
  std::vector<int> scan = order;
  if (scan.empty())
    for (int g = 0; g < n; ++g) scan.push_back(g);
  int remaining = n;
  bool progress = true;
  while (remaining > 0 && progress) {
    progress = false;
    for (int g : scan) {
      if (solver.solved[g]) continue;
      if (solver.try_solve(g, true) || solver.try_solve(g, false)) {
        --remaining;
        progress = true;
      }
    }
  }
  if (remaining > 0) {
    for (int g = 0; g < n; ++g)
      if (!solver.solved[g])
        throw algebra_error(H->name + ": antipode system not triangular, stuck at " +
                            H->total->vars()[g]);
  }
  std::vector<RingElement> images;
  for (int g = 0; g < n; ++g) images.push_back(*solver.solved[g]);
  AlgebraMap S = AlgebraMap::checked(H->total, H->total, std::move(images),
                                     H->name + ".derived_antipode");
  // verify both laws and S^2 = id before installing
  HopfPtr tmp = std::make_shared<HopfAlgebroid>(*H);
  tmp->antipode = S;
  AxiomReport rep = check_axioms(tmp);
  for (const auto& c : rep.checks)
    if (!c.pass)
      throw algebra_error(H->name + ": derived antipode inconsistent, " + c.name +
                          " fails at " + c.counterexample);
  H->antipode = S;
  H->verified = true;
  return S;
}

// ---------------------------------------------------------------------------
// morphisms
// ---------------------------------------------------------------------------

AxiomReport check_hopf_morphism(const HopfMorphism& f) {
  AxiomReport rep;
  const HopfPtr& Hd = f.dom;
  const HopfPtr& Hc = f.cod;
  if (Hd->base.get() != Hc->base.get())
    throw algebra_error(f.name + ": morphisms need the same base algebra");
  const AlgebraPtr& A = Hd->base;

  auto per_base = [&](const std::string& name, auto&& fn) {
    for (int a = 0; a < A->nvars(); ++a)
      if (!fn(a)) {
        rep.add(name, false, A->vars()[a]);
        return;
      }
    rep.add(name, true);
  };
  auto per_total = [&](const std::string& name, auto&& fn) {
    for (int g = 0; g < Hd->total->nvars(); ++g)
      if (!fn(g)) {
        rep.add(name, false, Hd->total->vars()[g]);
        return;
      }
    rep.add(name, true);
  };

  per_base("source_compat", [&](int a) {
    RingElement av = RingElement::variable(A, a);
    return f.phi.apply(Hd->src.apply(av)) == Hc->src.apply(av);
  });
  per_base("target_compat", [&](int a) {
    RingElement av = RingElement::variable(A, a);
    return f.phi.apply(Hd->tgt.apply(av)) == Hc->tgt.apply(av);
  });
  per_total("counit_compat", [&](int g) {
    return Hc->counit.apply(f.phi.apply(RingElement::variable(Hd->total, g))) ==
           Hd->counit.images()[g];
  });
  try {
    std::vector<RingElement> lft, rgt;
    for (int v = 0; v < Hd->total->nvars(); ++v) {
      RingElement pv = f.phi.images()[v];
      lft.push_back(Hc->tensor().include_left(pv));
      rgt.push_back(Hc->tensor().include_right(pv));
    }
    std::vector<RingElement> images = lft;
    images.insert(images.end(), rgt.begin(), rgt.end());
    AlgebraMap legwise = AlgebraMap::checked(Hd->tensor().model(), Hc->tensor().model(),
                                             std::move(images), f.name + ".legwise");
    per_total("coproduct_compat", [&](int g) {
      return legwise.apply(Hd->delta_var(g)) == Hc->delta(f.phi.images()[g]);
    });
  } catch (const algebra_error& e) {
    rep.add("coproduct_compat", false, e.what());
  }
  if (Hd->antipode && Hc->antipode) {
    per_total("antipode_compat", [&](int g) {
      RingElement gv = RingElement::variable(Hd->total, g);
      return f.phi.apply(Hd->antipode->apply(gv)) == Hc->antipode->apply(f.phi.apply(gv));
    });
  }
  return rep;
}

}  // namespace algd
