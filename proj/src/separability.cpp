#include "algebroid/separability.hpp"

#include <functional>

#include <json.hpp>

namespace algd {

Matrix matrix_identity(const AlgebraPtr& A, int n) {
  Matrix m(n, std::vector<RingElement>(n, RingElement::zero(A)));
  for (int i = 0; i < n; ++i) m[i][i] = RingElement::one(A);
  return m;
}

Matrix matrix_mul(const Matrix& a, const Matrix& b) {
  int n = static_cast<int>(a.size());
  int m = static_cast<int>(b[0].size());
  int k = static_cast<int>(b.size());
  const AlgebraPtr& A = a[0][0].ring();
  Matrix r(n, std::vector<RingElement>(m, RingElement::zero(A)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j)
      for (int t = 0; t < k; ++t) r[i][j] += a[i][t] * b[t][j];
  return r;
}

// ---------------------------------------------------------------------------
// Euclidean arithmetic over Q and Q[X]
// ---------------------------------------------------------------------------

namespace {

struct Euclid {
  AlgebraPtr A;
  bool field;

  long deg(const RingElement& a) const {
    if (a.is_zero()) return -1;
    return field ? 0 : static_cast<long>(a.poly().degree());
  }
  bool is_unit(const RingElement& a) const { return !a.is_zero() && deg(a) == 0; }
  std::pair<RingElement, RingElement> divmod(const RingElement& a,
                                             const RingElement& b) const {
    if (b.is_zero()) throw algebra_error("division by zero");
    if (field) return {a * *b.invert(), RingElement::zero(A)};
    Poly r = a.poly();
    Poly q = Poly::zero(1);
    const Poly& d = b.poly();
    while (!r.is_zero() && r.degree() >= d.degree()) {
      Monomial shift{r.leading_monomial()[0] - d.leading_monomial()[0]};
      Rational c = r.leading_coefficient() / d.leading_coefficient();
      Poly t = Poly::monomial(shift, c);
      q += t;
      r -= d * t;
    }
    return {RingElement(A, q), RingElement(A, r)};
  }
};

Euclid euclid_for(const AlgebraPtr& A) {
  if (A->trivial()) return {A, true};
  if (A->nvars() == 1 && A->relations().empty()) return {A, false};
  throw algebra_error("separability: base algebra restricted to Q and Q[X]");
}

void row_axpy(Matrix& M, int dst, int src, const RingElement& c) {
  for (size_t j = 0; j < M[dst].size(); ++j) M[dst][j] -= c * M[src][j];
}

void col_axpy(Matrix& M, int dst, int src, const RingElement& c) {
  for (size_t i = 0; i < M.size(); ++i) M[i][dst] -= c * M[i][src];
}

}  // namespace

SmithResult smith_normal_form(const Matrix& M, const AlgebraPtr& A) {
  Euclid e = euclid_for(A);
  int q = static_cast<int>(M.size());
  int p = q ? static_cast<int>(M[0].size()) : 0;
  SmithResult out;
  out.D = M;
  out.E = matrix_identity(A, q);
  out.F = matrix_identity(A, p);
  Matrix& D = out.D;

  int steps = std::min(p, q);
  for (int t = 0; t < steps; ++t) {
    for (;;) {
      // smallest-degree pivot in the trailing submatrix
      int pi = -1, pj = -1;
      long best = -1;
      for (int i = t; i < q; ++i)
        for (int j = t; j < p; ++j) {
          if (D[i][j].is_zero()) continue;
          long dg = e.deg(D[i][j]);
          if (pi < 0 || dg < best) {
            pi = i;
            pj = j;
            best = dg;
          }
        }
      if (pi < 0) {
        t = steps;  // the rest of the matrix is zero
        break;
      }
      std::swap(D[pi], D[t]);
      std::swap(out.E[pi], out.E[t]);
      if (pj != t) {
        for (int i = 0; i < q; ++i) std::swap(D[i][pj], D[i][t]);
        for (int i = 0; i < p; ++i) std::swap(out.F[i][pj], out.F[i][t]);
      }
      bool clean = true;
      for (int i = t + 1; i < q; ++i) {
        if (D[i][t].is_zero()) continue;
        auto [qq, r] = e.divmod(D[i][t], D[t][t]);
        row_axpy(D, i, t, qq);
        row_axpy(out.E, i, t, qq);
        if (!D[i][t].is_zero()) clean = false;
      }
      if (!clean) continue;
      for (int j = t + 1; j < p; ++j) {
        if (D[t][j].is_zero()) continue;
        auto [qq, r] = e.divmod(D[t][j], D[t][t]);
        col_axpy(D, j, t, qq);
        col_axpy(out.F, j, t, qq);
        if (!D[t][j].is_zero()) clean = false;
      }
      if (!clean) continue;
      // divisibility chain
      bool fixed = false;
      for (int i = t + 1; i < q && !fixed; ++i)
        for (int j = t + 1; j < p && !fixed; ++j) {
          if (D[i][j].is_zero()) continue;
          if (!e.divmod(D[i][j], D[t][t]).second.is_zero()) {
            for (int jj = 0; jj < p; ++jj) D[t][jj] += D[i][jj];
            for (int jj = 0; jj < q; ++jj) out.E[t][jj] += out.E[i][jj];
            fixed = true;
          }
        }
      if (fixed) continue;
      break;
    }
    if (t >= steps) break;
    if (!D[t][t].is_zero()) {
      // make the invariant factor monic
      Rational lc = D[t][t].poly().leading_coefficient();
      RingElement inv = RingElement::constant(A, Rational(1) / lc);
      for (int j = 0; j < p; ++j) D[t][j] = D[t][j] * inv;
      for (int j = 0; j < q; ++j) out.E[t][j] = out.E[t][j] * inv;
    }
  }
  for (int t = 0; t < steps; ++t)
    if (!D[t][t].is_zero()) out.invariant_factors.push_back(D[t][t]);
  return out;
}

bool SmithResult::all_units() const {
  for (const RingElement& f : invariant_factors) {
    if (f.is_zero()) return false;
    if (!(f.poly().is_constant())) return false;
  }
  return true;
}

SplitInjectivity is_split_injective(const Matrix& M, const AlgebraPtr& A) {
  SplitInjectivity out;
  int q = static_cast<int>(M.size());
  int p = q ? static_cast<int>(M[0].size()) : 0;
  if (p == 0) {
    out.split_injective = true;
    out.retraction = Matrix{};
    return out;
  }
  SmithResult snf = smith_normal_form(M, A);
  if (static_cast<int>(snf.invariant_factors.size()) != p || !snf.all_units()) return out;
  // R = F D+ E with D+ the p x q diagonal pseudo-inverse
  Matrix Dplus(p, std::vector<RingElement>(q, RingElement::zero(A)));
  for (int i = 0; i < p; ++i) Dplus[i][i] = *snf.D[i][i].invert();
  out.retraction = matrix_mul(matrix_mul(snf.F, Dplus), snf.E);
  out.split_injective = true;
  return out;
}

bool is_surjective(const Matrix& M, const AlgebraPtr& A) {
  int q = static_cast<int>(M.size());
  if (q == 0) return true;
  SmithResult snf = smith_normal_form(M, A);
  return static_cast<int>(snf.invariant_factors.size()) == q && snf.all_units();
}

// ---------------------------------------------------------------------------
// the three verdicts
// ---------------------------------------------------------------------------

Matrix q_map(const HopfMorphism& phi, const KaehlerPresentation& QK,
             const KaehlerPresentation& QH) {
  int p = static_cast<int>(QK.basis_vars.size());
  int q = static_cast<int>(QH.basis_vars.size());
  Matrix M(q, std::vector<RingElement>(p, RingElement::zero(phi.dom->base)));
  for (int j = 0; j < p; ++j) {
    RingElement image = phi.phi.images()[QK.basis_vars[j]];
    std::vector<RingElement> col = QH.pi(image);
    for (int i = 0; i < q; ++i) M[i][j] = col[i];
  }
  return M;
}

namespace {

RingElement determinant(const Matrix& M) {
  int n = static_cast<int>(M.size());
  const AlgebraPtr& A = M[0][0].ring();
  if (n == 1) return M[0][0];
  RingElement acc = RingElement::zero(A);
  for (int i = 0; i < n; ++i) {
    if (M[i][0].is_zero()) continue;
    Matrix minor;
    for (int r = 0; r < n; ++r) {
      if (r == i) continue;
      std::vector<RingElement> row(M[r].begin() + 1, M[r].end());
      minor.push_back(std::move(row));
    }
    RingElement term = M[i][0] * determinant(minor);
    acc += (i % 2 == 0) ? term : -term;
  }
  return acc;
}

/// surjectivity of the map H^m -> H^n given by an n x m matrix over H: the
/// n x n minors must generate the unit ideal.
bool fitting_surjective(const Matrix& N, const AlgebraPtr& H) {
  int n = static_cast<int>(N.size());
  int m = n ? static_cast<int>(N[0].size()) : 0;
  if (n == 0) return true;
  if (m < n) return false;
  std::vector<Poly> gens = H->relations();
  std::vector<int> cols(n);
  std::function<void(int, int)> choose = [&](int start, int k) {
    if (k == n) {
      Matrix sub(n, std::vector<RingElement>(n, RingElement::zero(H)));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) sub[i][j] = N[i][cols[j]];
      Poly d = determinant(sub).poly();
      if (!d.is_zero()) gens.push_back(d);
      return;
    }
    for (int c = start; c < m; ++c) {
      cols[k] = c;
      choose(c + 1, k + 1);
    }
  };
  choose(0, 0);
  std::vector<Poly> gb = groebner_basis(gens);
  for (const Poly& g : gb)
    if (g.is_constant() && !g.is_zero()) return true;
  return false;
}

}  // namespace

SeparabilityReport separability_report(const HopfMorphism& phi) {
  SeparabilityReport rep;
  rep.morphism = phi.name;
  const AlgebraPtr& A = phi.dom->base;

  KaehlerPresentation QK = kaehler_module(phi.dom);
  KaehlerPresentation QH = kaehler_module(phi.cod);
  rep.q_matrix = q_map(phi, QK, QH);
  SplitInjectivity si = is_split_injective(rep.q_matrix, A);
  rep.condition_a = si.split_injective;
  rep.retraction = si.retraction;

  DiffResult LH = differentiate(phi.cod, Flavor::S);
  DiffResult LK = differentiate(phi.dom, Flavor::S);
  LRMorphism lphi = l_on_morphism(phi, LH, LK);
  int nH = LH.lr.rank(), nK = LK.lr.rank();
  Matrix Mt(nK, std::vector<RingElement>(nH, RingElement::zero(A)));
  for (int i = 0; i < nH; ++i)
    for (int j = 0; j < nK; ++j) Mt[j][i] = lphi.matrix[i][j];
  rep.condition_b = is_surjective(Mt, A);

  // condition (d): the same matrix over H through t, Fitting-ideal test
  Matrix Nt(nK, std::vector<RingElement>(nH, RingElement::zero(phi.cod->total)));
  for (int i = 0; i < nH; ++i)
    for (int j = 0; j < nK; ++j) Nt[j][i] = phi.cod->tgt.apply(lphi.matrix[i][j]);
  rep.condition_d = fitting_surjective(Nt, phi.cod->total);

  rep.consistent = (rep.condition_a == rep.condition_b) &&
                   (rep.condition_b == rep.condition_d);
  return rep;
}

std::string separability_to_json(const SeparabilityReport& r) {
  nlohmann::json j;
  j["morphism"] = r.morphism;
  j["split_injective_Q"] = r.condition_a;
  j["L_surjective"] = r.condition_b;
  j["DerH_surjective"] = r.condition_d;
  j["consistent"] = r.consistent;
  j["separable"] = r.separable();
  auto mat_json = [](const Matrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : m) {
      nlohmann::json r2 = nlohmann::json::array();
      for (const auto& e : row) r2.push_back(e.str());
      rows.push_back(r2);
    }
    return rows;
  };
  j["q_matrix"] = mat_json(r.q_matrix);
  if (r.retraction) j["retraction"] = mat_json(*r.retraction);
  return j.dump(2);
}

}  // namespace algd
