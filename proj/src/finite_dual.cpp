#include "algebroid/finite_dual.hpp"

#include <sstream>

namespace algd {

namespace {

using QMatrix = std::vector<std::vector<Rational>>;

QMatrix q_identity(int n) {
  QMatrix m(n, std::vector<Rational>(n, Rational(0)));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

/// Gaussian inverse over Q; empty on singular input.
QMatrix q_inverse(QMatrix m) {
  int n = static_cast<int>(m.size());
  QMatrix inv = q_identity(n);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (sgn(m[r][col]) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return {};
    std::swap(m[piv], m[col]);
    std::swap(inv[piv], inv[col]);
    Rational d = m[col][col];
    for (int j = 0; j < n; ++j) {
      m[col][j] /= d;
      inv[col][j] /= d;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || sgn(m[r][col]) == 0) continue;
      Rational f = m[r][col];
      for (int j = 0; j < n; ++j) {
        m[r][j] -= f * m[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

}  // namespace

FiniteCocomm make_finite_cocomm(std::string name, std::vector<std::string> basis,
                                std::vector<Rational> unit,
                                std::vector<std::vector<std::vector<Rational>>> mult,
                                std::vector<Rational> counit,
                                std::vector<std::vector<std::vector<Rational>>> cop) {
  FiniteCocomm U;
  U.name = std::move(name);
  U.basis = std::move(basis);
  U.n = static_cast<int>(U.basis.size());
  U.unit = std::move(unit);
  U.mult = std::move(mult);
  U.counit = std::move(counit);
  U.cop = std::move(cop);
  int n = U.n;
  if (static_cast<int>(U.unit.size()) != n || static_cast<int>(U.mult.size()) != n ||
      static_cast<int>(U.counit.size()) != n || static_cast<int>(U.cop.size()) != n)
    throw algebra_error(U.name + ": table arity mismatch");

  // beta(u_i (x) u_j) = u_i (u_j)_1 (x) (u_j)_2; invert to get translations
  QMatrix B(n * n, std::vector<Rational>(n * n, Rational(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          if (sgn(U.cop[j][a][b]) == 0) continue;
          for (int k = 0; k < n; ++k)
            B[k * n + b][i * n + j] += U.cop[j][a][b] * U.mult[i][a][k];
        }
  QMatrix Binv = q_inverse(std::move(B));
  if (Binv.empty()) throw algebra_error(U.name + ": canonical map beta is not invertible");
  U.trans.assign(n, std::vector<std::vector<Rational>>(
                        n, std::vector<Rational>(n, Rational(0))));
  for (int i = 0; i < n; ++i) {
    // coordinates of 1 (x) u_i
    std::vector<Rational> rhs(n * n, Rational(0));
    for (int m = 0; m < n; ++m) rhs[m * n + i] = U.unit[m];
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        Rational acc(0);
        for (size_t c = 0; c < rhs.size(); ++c) acc += Binv[a * n + b][c] * rhs[c];
        U.trans[i][a][b] = acc;
      }
  }
  return U;
}

AxiomReport check_finite_cocomm(const FiniteCocomm& U) {
  AxiomReport rep;
  int n = U.n;
  auto mul3 = [&](int i, int j, int k) {  // coordinates of (u_i u_j) u_k
    std::vector<Rational> lhs(n, Rational(0)), rhs(n, Rational(0));
    for (int m = 0; m < n; ++m) {
      if (sgn(U.mult[i][j][m]) != 0)
        for (int p = 0; p < n; ++p) lhs[p] += U.mult[i][j][m] * U.mult[m][k][p];
      if (sgn(U.mult[j][k][m]) != 0)
        for (int p = 0; p < n; ++p) rhs[p] += U.mult[j][k][m] * U.mult[i][m][p];
    }
    return lhs == rhs;
  };
  {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j)
        for (int k = 0; k < n && ok; ++k) ok = mul3(i, j, k);
    rep.add("associativity", ok);
  }
  {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      std::vector<Rational> l(n, Rational(0)), r(n, Rational(0));
      for (int m = 0; m < n; ++m) {
        for (int p = 0; p < n; ++p) {
          l[p] += U.unit[m] * U.mult[m][i][p];
          r[p] += U.unit[m] * U.mult[i][m][p];
        }
      }
      for (int p = 0; p < n; ++p)
        ok = ok && l[p] == Rational(p == i ? 1 : 0) && r[p] == Rational(p == i ? 1 : 0);
    }
    rep.add("unit", ok);
  }
  {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      std::vector<Rational> l(n, Rational(0)), r(n, Rational(0));
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          l[b] += U.cop[i][a][b] * U.counit[a];
          r[a] += U.cop[i][a][b] * U.counit[b];
        }
      for (int p = 0; p < n; ++p)
        ok = ok && l[p] == Rational(p == i ? 1 : 0) && r[p] == Rational(p == i ? 1 : 0);
    }
    rep.add("counit_laws", ok);
  }
  {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j) {
        Rational lhs(0);
        for (int k = 0; k < n; ++k) lhs += U.mult[i][j][k] * U.counit[k];
        if (lhs != U.counit[i] * U.counit[j]) ok = false;
      }
    rep.add("double_counit", ok);
  }
  {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int a = 0; a < n && ok; ++a)
        for (int b = 0; b < n && ok; ++b)
          if (U.cop[i][a][b] != U.cop[i][b][a]) ok = false;
    rep.add("cocommutativity", ok);
  }
  {
    // (Delta (x) id) Delta = (id (x) Delta) Delta
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      std::map<std::tuple<int, int, int>, Rational> lhs, rhs;
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          if (sgn(U.cop[i][a][b]) != 0)
            for (int p = 0; p < n; ++p)
              for (int q = 0; q < n; ++q) {
                if (sgn(U.cop[a][p][q]) != 0)
                  lhs[{p, q, b}] += U.cop[i][a][b] * U.cop[a][p][q];
                if (sgn(U.cop[b][p][q]) != 0)
                  rhs[{a, p, q}] += U.cop[i][a][b] * U.cop[b][p][q];
              }
        }
      std::erase_if(lhs, [](const auto& kv) { return sgn(kv.second) == 0; });
      std::erase_if(rhs, [](const auto& kv) { return sgn(kv.second) == 0; });
      ok = lhs == rhs;
    }
    rep.add("coassociativity", ok);
  }
  {
    // Delta multiplicative
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j) {
        std::map<std::pair<int, int>, Rational> lhs, rhs;
        for (int k = 0; k < n; ++k)
          if (sgn(U.mult[i][j][k]) != 0)
            for (int a = 0; a < n; ++a)
              for (int b = 0; b < n; ++b)
                lhs[{a, b}] += U.mult[i][j][k] * U.cop[k][a][b];
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b)
            if (sgn(U.cop[i][a][b]) != 0)
              for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d)
                  if (sgn(U.cop[j][c][d]) != 0)
                    for (int p = 0; p < n; ++p)
                      for (int q = 0; q < n; ++q)
                        rhs[{p, q}] += U.cop[i][a][b] * U.cop[j][c][d] *
                                       U.mult[a][c][p] * U.mult[b][d][q];
        std::erase_if(lhs, [](const auto& kv) { return sgn(kv.second) == 0; });
        std::erase_if(rhs, [](const auto& kv) { return sgn(kv.second) == 0; });
        ok = lhs == rhs;
      }
    rep.add("coproduct_multiplicative", ok);
  }
  {
    // beta(translation(u_i)) = 1 (x) u_i and u_- u_+ = eps(u) 1
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      std::map<std::pair<int, int>, Rational> img;
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          if (sgn(U.trans[i][a][b]) == 0) continue;
          for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q)
              for (int k = 0; k < n; ++k)
                img[{k, q}] += U.trans[i][a][b] * U.cop[b][p][q] * U.mult[a][p][k];
        }
      std::erase_if(img, [](const auto& kv) { return sgn(kv.second) == 0; });
      std::map<std::pair<int, int>, Rational> expect;
      for (int m = 0; m < n; ++m)
        if (sgn(U.unit[m]) != 0) expect[{m, i}] = U.unit[m];
      ok = img == expect;
      std::vector<Rational> prod(n, Rational(0));
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          if (sgn(U.trans[i][a][b]) != 0)
            for (int k = 0; k < n; ++k) prod[k] += U.trans[i][a][b] * U.mult[a][b][k];
      for (int k = 0; k < n; ++k)
        if (prod[k] != U.counit[i] * U.unit[k]) ok = false;
    }
    rep.add("translation", ok);
  }
  return rep;
}

HopfPtr finite_dual(const FiniteCocomm& U) {
  int n = U.n;
  if (n > 16) throw algebra_error(U.name + ": finite_dual rank cap is 16");
  AxiomReport pre = check_finite_cocomm(U);
  for (const auto& ch : pre.checks)
    if (!ch.pass)
      throw algebra_error(U.name + ": inconsistent tables, " + ch.name + " fails");

  AlgebraPtr Q = PresentedAlgebra::rationals("Q");
  std::vector<std::string> vars;
  for (const std::string& b : U.basis) vars.push_back(b + "_d");
  int nv = n;
  std::vector<Poly> rels;
  // products collapse to linear combinations via the convolution table
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Poly p = Poly::variable(nv, i) * Poly::variable(nv, j);
      for (int k = 0; k < n; ++k)
        p -= Poly::variable(nv, k).scaled(U.cop[k][i][j]);
      if (!p.is_zero()) rels.push_back(p);
    }
  {
    Poly unit_rel = -Poly::constant(nv, Rational(1));
    for (int i = 0; i < n; ++i) unit_rel += Poly::variable(nv, i).scaled(U.counit[i]);
    if (!unit_rel.is_zero()) rels.push_back(unit_rel);
  }
  AlgebraPtr total = PresentedAlgebra::make(U.name + "_dual", vars, {}, std::move(rels));

  std::vector<RingElement> eps;
  for (int i = 0; i < n; ++i) eps.push_back(RingElement::constant(Q, U.unit[i]));
  std::vector<TensorExpr> cop;
  for (int k = 0; k < n; ++k) {
    TensorExpr e;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        const Rational& c = U.mult[b][a][k];
        if (sgn(c) == 0) continue;
        e.emplace_back(RingElement::variable(total, a).scaled(c),
                       RingElement::variable(total, b));
      }
    cop.push_back(std::move(e));
  }
  std::vector<RingElement> antipode;
  for (int k = 0; k < n; ++k) {
    Poly p = Poly::zero(nv);
    for (int i = 0; i < n; ++i) {
      Rational acc(0);
      for (int b = 0; b < n; ++b) acc += U.trans[i][k][b] * U.counit[b];
      if (sgn(acc) != 0) p += Poly::variable(nv, i).scaled(acc);
    }
    antipode.push_back(RingElement(total, p));
  }
  return build_hopf_algebroid(U.name + "_dual", Q, total, {}, {}, std::move(eps),
                              std::move(cop), std::move(antipode));
}

FiniteCocomm dual_as_cocommutative(const FiniteCocomm& U) {
  int n = U.n;
  std::vector<std::string> basis;
  for (const std::string& b : U.basis) basis.push_back(b + "_d");
  std::vector<std::vector<std::vector<Rational>>> mult(
      n, std::vector<std::vector<Rational>>(n, std::vector<Rational>(n, Rational(0))));
  std::vector<std::vector<std::vector<Rational>>> cop = mult;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        mult[i][j][k] = U.cop[k][i][j];
        cop[k][i][j] = U.mult[j][i][k];
      }
  // cocommutativity of the repackaged dual requires U commutative
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (U.mult[i][j][k] != U.mult[j][i][k])
          throw algebra_error(U.name + ": dual of a noncommutative U is not cocommutative");
  return make_finite_cocomm(U.name + "_dual", std::move(basis), U.counit, std::move(mult),
                            U.unit, std::move(cop));
}

std::vector<Rational> dual_functional(const FiniteCocomm& U, const HopfPtr& dual,
                                      const RingElement& x) {
  if (x.ring().get() != dual->total.get())
    throw algebra_error("dual_functional: element not in the dual presentation");
  std::vector<Rational> out(U.n, Rational(0));
  for (const auto& [m, c] : x.poly().terms()) {
    unsigned deg = total_degree(m);
    if (deg == 0) {
      // the unit functional is eps
      for (int i = 0; i < U.n; ++i) out[i] += c * U.counit[i];
    } else if (deg == 1) {
      for (int v = 0; v < U.n; ++v)
        if (m[v] == 1) out[v] += c;
    } else {
      throw algebra_error("dual_functional: normal form is not linear");
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// sigma and the Lie-Rinehart lift
// ---------------------------------------------------------------------------

SigmaMap::SigmaMap(Envelope U, HopfPtr H, std::vector<EpsDerivation> h_images)
    : U_(std::move(U)), H_(std::move(H)), h_(std::move(h_images)) {
  if (static_cast<int>(h_.size()) != U_.rank())
    throw algebra_error("SigmaMap: one eps-derivation per basis element required");
  if (U_.A.get() != H_->base.get())
    throw algebra_error("SigmaMap: base algebras differ");
}

RingElement SigmaMap::eval_word(const Word& w, const RingElement& x) const {
  if (w.empty()) return H_->counit.apply(x);
  Word rest(w.begin() + 1, w.end());
  const EpsDerivation& d = h_[w.front()];
  RingElement acc = RingElement::zero(H_->base);
  for (const auto& term : H_->tensor().terms(H_->delta(x))) {
    RingElement val = -d.eval_raw(term.right);  // sigma(iota_L(X)) = -h(X)
    if (val.is_zero()) continue;
    RingElement arg = RingElement(H_->total, term.left) * H_->tgt.apply(val);
    acc += eval_word(rest, arg).scaled(term.coeff);
  }
  return acc;
}

RingElement SigmaMap::eval(const NCElement& u, const RingElement& x) const {
  RingElement acc = RingElement::zero(H_->base);
  for (const auto& [w, c] : u.terms) acc += c * eval_word(w, x);
  return acc;
}

LiftReport lift_lr_morphism(const LieRinehart& L, const HopfPtr& H,
                            const std::vector<EpsDerivation>& h_images, int degree_cap) {
  DiffResult LH = differentiate(H, Flavor::S);
  {
    LRMorphism f;
    f.name = "h~";
    f.dom = L;
    f.cod = LH.lr;
    for (const EpsDerivation& d : h_images) f.matrix.push_back(LH.coordinates(d));
    AxiomReport rep = check_lr_morphism(f);
    for (const auto& ch : rep.checks)
      if (!ch.pass)
        throw algebra_error("lift_lr_morphism: h is not a Lie-Rinehart morphism (" +
                            ch.name + " at " + ch.counterexample + ")");
  }
  Envelope U = build_enveloping(L);
  SigmaMap sigma(U, H, h_images);
  LiftReport rep;

  std::vector<RingElement> base_gens{RingElement::one(H->base)};
  for (int a = 0; a < H->base->nvars(); ++a)
    base_gens.push_back(RingElement::variable(H->base, a));
  std::vector<RingElement> total_gens;
  for (int v = 0; v < H->total->nvars(); ++v)
    total_gens.push_back(RingElement::variable(H->total, v));

  for (const Word& w : pbw_words(U.rank(), degree_cap)) {
    ++rep.words_checked;
    NCElement u;
    u.add(w, RingElement::one(U.A));
    // relation 1: sigma(u)(eta(a (x) b)) = eps(iota_A(b) u) a
    for (const RingElement& a : base_gens) {
      for (const RingElement& b : base_gens) {
        RingElement lhs = sigma.eval_word(w, H->src.apply(a) * H->tgt.apply(b));
        RingElement rhs = U.counit(U.mul(U.embed_base(b), u)) * a;
        if (lhs != rhs) {
          rep.ok = false;
          rep.violations.push_back("eta relation at word " + u.str(U) + ", a=" + a.str() +
                                   ", b=" + b.str());
        }
      }
    }
    // relation 2: sigma(u)(xy) = sigma(u_1)(x) sigma(u_2)(y)
    TensorNC du = U.delta_word(w, RingElement::one(U.A));
    for (const RingElement& x : total_gens) {
      for (const RingElement& y : total_gens) {
        RingElement lhs = sigma.eval_word(w, x * y);
        RingElement rhs = RingElement::zero(H->base);
        for (const auto& [k, c] : du.terms)
          rhs += sigma.eval_word(k.first, x) * sigma.eval_word(k.second, y) * c;
        if (lhs != rhs) {
          rep.ok = false;
          rep.violations.push_back("product relation at word " + u.str(U) + ", x=" +
                                   x.str() + ", y=" + y.str());
        }
      }
    }
    if (rep.violations.size() > 16) return rep;  // enough evidence
  }
  return rep;
}

}  // namespace algd
