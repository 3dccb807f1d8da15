#include "algebroid/lie_rinehart.hpp"

#include <json.hpp>

namespace algd {

std::vector<RingElement> LieRinehart::basis_vector(int i) const {
  std::vector<RingElement> v(rank(), RingElement::zero(base));
  v[i] = RingElement::one(base);
  return v;
}

AlgebraDerivation LieRinehart::anchor_of(const std::vector<RingElement>& coeffs) const {
  AlgebraDerivation d = AlgebraDerivation::zero(base);
  for (int i = 0; i < rank(); ++i) {
    if (coeffs[i].is_zero()) continue;
    d = d + anchor[i].scaled(coeffs[i]);
  }
  return d;
}

std::vector<RingElement> LieRinehart::bracket_vectors(
    const std::vector<RingElement>& a, const std::vector<RingElement>& b) const {
  int n = rank();
  std::vector<RingElement> out(n, RingElement::zero(base));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (a[i].is_zero() || b[j].is_zero()) continue;
      RingElement ab = a[i] * b[j];
      for (int k = 0; k < n; ++k) out[k] += ab * c[i][j][k];
    }
  }
  AlgebraDerivation wa = anchor_of(a), wb = anchor_of(b);
  for (int j = 0; j < n; ++j) {
    out[j] += wa.apply(b[j]);
    out[j] -= wb.apply(a[j]);
  }
  return out;
}

LieRinehart make_lie_rinehart(std::string name, AlgebraPtr base,
                              std::vector<std::string> basis,
                              std::vector<AlgebraDerivation> anchor,
                              std::vector<std::vector<std::vector<RingElement>>> c) {
  LieRinehart L;
  L.name = std::move(name);
  L.base = std::move(base);
  L.basis = std::move(basis);
  L.anchor = std::move(anchor);
  L.c = std::move(c);
  size_t n = L.basis.size();
  if (L.anchor.size() != n || L.c.size() != n)
    throw algebra_error(L.name + ": anchor/structure constant arity mismatch");
  for (const auto& row : L.c)
    if (row.size() != n)
      throw algebra_error(L.name + ": structure constant arity mismatch");
  return L;
}

AxiomReport check_lie_rinehart(const LieRinehart& L) {
  AxiomReport rep;
  int n = L.rank();

  {
    bool ok = true;
    std::string bad;
    for (int i = 0; i < n && ok; ++i)
      if (!L.anchor[i].well_defined(&bad)) {
        ok = false;
        rep.add("anchor_derivation", false, L.basis[i] + ": " + bad);
      }
    if (ok) rep.add("anchor_derivation", true);
  }

  {
    bool ok = true;
    std::string bad;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j)
        for (int k = 0; k < n && ok; ++k)
          if (L.c[i][j][k] != -L.c[j][i][k]) {
            ok = false;
            bad = "(" + L.basis[i] + "," + L.basis[j] + ")";
          }
    rep.add("antisymmetry", ok, bad);
  }

  {
    bool ok = true;
    std::string bad;
    for (int i = 0; i < n && ok; ++i)
      for (int j = i + 1; j < n && ok; ++j) {
        AlgebraDerivation lhs = L.anchor_of(L.c[i][j]);
        AlgebraDerivation rhs = L.anchor[i].bracket(L.anchor[j]);
        if (!(lhs == rhs)) {
          ok = false;
          bad = "(" + L.basis[i] + "," + L.basis[j] + ")";
        }
      }
    rep.add("anchor_lie_morphism", ok, bad);
  }

  {
    bool ok = true;
    std::string bad;
    for (int i = 0; i < n && ok; ++i)
      for (int j = i + 1; j < n && ok; ++j)
        for (int k = j + 1; k < n && ok; ++k) {
          auto ei = L.basis_vector(i), ej = L.basis_vector(j), ek = L.basis_vector(k);
          auto jac = L.bracket_vectors(ei, L.bracket_vectors(ej, ek));
          auto t2 = L.bracket_vectors(ej, L.bracket_vectors(ek, ei));
          auto t3 = L.bracket_vectors(ek, L.bracket_vectors(ei, ej));
          for (int m = 0; m < n; ++m) jac[m] += t2[m] + t3[m];
          for (int m = 0; m < n; ++m)
            if (!jac[m].is_zero()) {
              ok = false;
              bad = "(" + L.basis[i] + "," + L.basis[j] + "," + L.basis[k] + ")";
            }
        }
    rep.add("jacobi", ok, bad);
  }

  {
    // [e_i, a e_j] = a [e_i, e_j] + w(e_i)(a) e_j for A-generator coefficients
    bool ok = true;
    std::string bad;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j)
        for (int g = 0; g < L.base->nvars() && ok; ++g) {
          RingElement a = RingElement::variable(L.base, g);
          auto aej = L.basis_vector(j);
          aej[j] = a;
          auto lhs = L.bracket_vectors(L.basis_vector(i), aej);
          auto rhs = L.basis_vector(j);
          rhs[j] = L.anchor[i].apply(a);
          for (int k = 0; k < n; ++k) rhs[k] += a * L.c[i][j][k];
          for (int k = 0; k < n; ++k)
            if (lhs[k] != rhs[k]) {
              ok = false;
              bad = "(" + L.basis[i] + ", " + a.str() + "*" + L.basis[j] + ")";
            }
        }
    rep.add("leibniz", ok, bad);
  }
  return rep;
}

AxiomReport check_lr_morphism(const LRMorphism& f) {
  AxiomReport rep;
  if (f.dom.base.get() != f.cod.base.get())
    throw algebra_error(f.name + ": Lie-Rinehart morphisms need the same base");
  int n = f.dom.rank();

  {
    bool ok = true;
    std::string bad;
    for (int i = 0; i < n && ok; ++i) {
      AlgebraDerivation lhs = f.cod.anchor_of(f.matrix[i]);
      if (!(lhs == f.dom.anchor[i])) {
        ok = false;
        bad = f.dom.basis[i];
      }
    }
    rep.add("anchor_compat", ok, bad);
  }

  {
    bool ok = true;
    std::string bad;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j) {
        std::vector<RingElement> lhs(f.cod.rank(), RingElement::zero(f.cod.base));
        for (int k = 0; k < n; ++k)
          for (int m = 0; m < f.cod.rank(); ++m)
            lhs[m] += f.dom.c[i][j][k] * f.matrix[k][m];
        auto rhs = f.cod.bracket_vectors(f.matrix[i], f.matrix[j]);
        for (int m = 0; m < f.cod.rank(); ++m)
          if (lhs[m] != rhs[m]) {
            ok = false;
            bad = "(" + f.dom.basis[i] + "," + f.dom.basis[j] + ")";
          }
      }
    rep.add("bracket_compat", ok, bad);
  }
  return rep;
}

std::string lie_rinehart_to_json(const LieRinehart& L, const AxiomReport* checks) {
  nlohmann::json j;
  j["name"] = L.name;
  j["base"] = L.base->name();
  j["rank"] = L.rank();
  j["basis"] = L.basis;
  nlohmann::json anchors = nlohmann::json::object();
  for (int i = 0; i < L.rank(); ++i) {
    nlohmann::json a = nlohmann::json::object();
    for (int v = 0; v < L.base->nvars(); ++v)
      a[L.base->vars()[v]] = L.anchor[i].images()[v].str();
    anchors[L.basis[i]] = a;
  }
  j["anchor"] = anchors;
  nlohmann::json sc = nlohmann::json::array();
  for (int i = 0; i < L.rank(); ++i)
    for (int k = 0; k < L.rank(); ++k)
      for (int m = 0; m < L.rank(); ++m)
        if (!L.c[i][k][m].is_zero())
          sc.push_back({{"i", L.basis[i]},
                        {"j", L.basis[k]},
                        {"k", L.basis[m]},
                        {"c", L.c[i][k][m].str()}});
  j["structure_constants"] = sc;
  if (checks) {
    nlohmann::json cj = nlohmann::json::array();
    for (const auto& ch : checks->checks)
      cj.push_back({{"name", ch.name}, {"pass", ch.pass}, {"detail", ch.counterexample}});
    j["checks"] = cj;
  }
  return j.dump(2);
}

}  // namespace algd
