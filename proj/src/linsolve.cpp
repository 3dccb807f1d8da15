#include "algebroid/linsolve.hpp"

#include <map>
#include <optional>

namespace algd {

namespace {

using Form = std::map<int, RingElement>;  // unknown index -> coefficient

void add_scaled(Form& acc, const Form& f, const RingElement& c) {
  for (const auto& [u, q] : f) {
    RingElement t = q * c;
    if (t.is_zero()) continue;
    auto it = acc.find(u);
    if (it == acc.end())
      acc.emplace(u, t);
    else {
      it->second += t;
      if (it->second.is_zero()) acc.erase(it);
    }
  }
}

}  // namespace

TriangularSolution solve_triangular(const LinearSystem& sys) {
  const AlgebraPtr& A = sys.ring;
  int n = sys.n_unknowns;
  std::vector<std::optional<Form>> value(n);  // assigned -> linear form

  // substitute assigned unknowns until only unassigned remain
  auto expand = [&](Form f) {
    for (;;) {
      bool changed = false;
      Form out;
      for (const auto& [u, c] : f) {
        if (value[u]) {
          add_scaled(out, *value[u], c);
          changed = true;
        } else {
          add_scaled(out, Form{{u, RingElement::one(A)}}, c);
        }
      }
      f = std::move(out);
      if (!changed) return f;
    }
  };

  std::vector<bool> used(sys.rows.size(), false);
  bool progress = true;
  while (progress) {
    progress = false;
    for (size_t r = 0; r < sys.rows.size(); ++r) {
      if (used[r]) continue;
      Form f;
      for (int u = 0; u < n; ++u)
        if (!sys.rows[r][u].is_zero()) f.emplace(u, sys.rows[r][u]);
      f = expand(std::move(f));
      if (f.empty()) {
        used[r] = true;
        progress = true;
        continue;
      }
      // eliminate the largest-indexed unknown with an invertible coefficient
      int pick = -1;
      RingElement pick_inv;
      for (auto it = f.rbegin(); it != f.rend(); ++it) {
        auto inv = it->second.invert();
        if (inv) {
          pick = it->first;
          pick_inv = *inv;
          break;
        }
      }
      if (pick < 0) continue;  // postpone, maybe later substitutions help
      Form rest;
      for (const auto& [u, c] : f)
        if (u != pick) add_scaled(rest, Form{{u, RingElement::one(A)}}, -(c * pick_inv));
      value[pick] = std::move(rest);
      used[r] = true;
      progress = true;
    }
  }
  for (size_t r = 0; r < sys.rows.size(); ++r)
    if (!used[r])
      throw algebra_error("non-triangular constraint system, stuck at " +
                          (r < sys.row_labels.size() ? sys.row_labels[r]
                                                     : "row " + std::to_string(r)));

  TriangularSolution sol;
  for (int u = 0; u < n; ++u)
    if (!value[u]) sol.free_unknowns.push_back(u);
  std::map<int, int> slot;
  for (size_t k = 0; k < sol.free_unknowns.size(); ++k)
    slot[sol.free_unknowns[k]] = static_cast<int>(k);

  sol.expression.assign(n, std::vector<RingElement>(sol.free_unknowns.size(),
                                                    RingElement::zero(A)));
  for (int u = 0; u < n; ++u) {
    Form f = expand(value[u] ? *value[u] : Form{{u, RingElement::one(A)}});
    for (const auto& [w, c] : f) sol.expression[u][slot.at(w)] = c;
  }
  return sol;
}

}  // namespace algd
