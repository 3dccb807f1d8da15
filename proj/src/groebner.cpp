#include "algebroid/groebner.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace algd {

Poly reduce(const Poly& p, const std::vector<Poly>& basis) {
  Poly rem;
  Poly work(p);
  while (!work.is_zero()) {
    const Monomial& lm = work.leading_monomial();
    const Rational& lc = work.leading_coefficient();
    bool reduced = false;
    for (const Poly& g : basis) {
      if (g.is_zero()) continue;
      if (monomial_divides(g.leading_monomial(), lm)) {
        Monomial q = monomial_quotient(lm, g.leading_monomial());
        work -= g.times_monomial(q, lc / g.leading_coefficient());
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      rem.add_term(lm, lc);
      Poly t = Poly::monomial(lm, lc);
      work -= t;
    }
  }
  return rem;
}

Poly s_polynomial(const Poly& f, const Poly& g) {
  Monomial l = monomial_lcm(f.leading_monomial(), g.leading_monomial());
  Poly a = f.times_monomial(monomial_quotient(l, f.leading_monomial()),
                            Rational(1) / f.leading_coefficient());
  Poly b = g.times_monomial(monomial_quotient(l, g.leading_monomial()),
                            Rational(1) / g.leading_coefficient());
  return a - b;
}

namespace {

struct PairKey {
  int i, j;
  bool operator<(const PairKey& o) const {
    return std::tie(i, j) < std::tie(o.i, o.j);
  }
};

std::vector<Poly> interreduce(std::vector<Poly> basis) {
  // minimalize: drop g whose leading monomial is divisible by another's
  std::vector<Poly> minimal;
  for (size_t i = 0; i < basis.size(); ++i) {
    bool keep = true;
    for (size_t j = 0; j < basis.size(); ++j) {
      if (i == j) continue;
      if (basis[j].is_zero()) continue;
      if (monomial_divides(basis[j].leading_monomial(),
                           basis[i].leading_monomial())) {
        if (basis[j].leading_monomial() == basis[i].leading_monomial() && j > i)
          continue;  // duplicates: keep the first
        keep = false;
        break;
      }
    }
    if (keep) minimal.push_back(basis[i]);
  }
  // tail-reduce each element against the rest and make monic
  std::vector<Poly> out;
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Poly> others;
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Poly r = reduce(minimal[i], others);
    if (!r.is_zero()) out.push_back(r.scaled(Rational(1) / r.leading_coefficient()));
  }
  std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) {
    return degrevlex_less(a.leading_monomial(), b.leading_monomial());
  });
  return out;
}

}  // namespace

std::vector<Poly> groebner_basis(std::vector<Poly> gens) {
  std::vector<Poly> basis;
  for (Poly& g : gens)
    if (!g.is_zero()) basis.push_back(g.scaled(Rational(1) / g.leading_coefficient()));
  if (basis.empty()) return basis;

  std::set<PairKey> pending, done;
  auto enqueue_with = [&](int k) {
    for (int i = 0; i < k; ++i) pending.insert({i, k});
  };
  for (size_t k = 0; k < basis.size(); ++k) enqueue_with(static_cast<int>(k));

  while (!pending.empty()) {
    PairKey pk = *pending.begin();
    pending.erase(pending.begin());
    done.insert(pk);
    const Poly& f = basis[pk.i];
    const Poly& g = basis[pk.j];
    // product criterion
    if (monomial_coprime(f.leading_monomial(), g.leading_monomial())) continue;
    // chain criterion
    Monomial l = monomial_lcm(f.leading_monomial(), g.leading_monomial());
    bool skip = false;
    for (int k = 0; k < static_cast<int>(basis.size()) && !skip; ++k) {
      if (k == pk.i || k == pk.j) continue;
      if (!monomial_divides(basis[k].leading_monomial(), l)) continue;
      PairKey a{std::min(pk.i, k), std::max(pk.i, k)};
      PairKey b{std::min(pk.j, k), std::max(pk.j, k)};
      if (done.count(a) && done.count(b)) skip = true;
    }
    if (skip) continue;
    Poly r = reduce(s_polynomial(f, g), basis);
    if (!r.is_zero()) {
      basis.push_back(r.scaled(Rational(1) / r.leading_coefficient()));
      enqueue_with(static_cast<int>(basis.size()) - 1);
    }
  }
  return interreduce(std::move(basis));
}

std::vector<Poly> naive_spoly_saturation(std::vector<Poly> gens, int max_basis) {
  std::vector<Poly> basis;
  for (Poly& g : gens)
    if (!g.is_zero()) basis.push_back(std::move(g));
  bool grew = true;
  while (grew) {
    grew = false;
    size_t n = basis.size();
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = i + 1; j < n; ++j) {
        Poly r = reduce(s_polynomial(basis[i], basis[j]), basis);
        if (!r.is_zero()) {
          basis.push_back(r);
          grew = true;
          if (static_cast<int>(basis.size()) > max_basis)
            throw std::runtime_error("naive_spoly_saturation: basis blow-up");
        }
      }
    }
  }
  return basis;
}

bool in_ideal(const Poly& p, const std::vector<Poly>& groebner) {
  return reduce(p, groebner).is_zero();
}

}  // namespace algd
