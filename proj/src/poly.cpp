#include "algebroid/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace algd {

unsigned total_degree(const Monomial& m) {
  unsigned d = 0;
  for (unsigned e : m) d += e;
  return d;
}

bool degrevlex_less(const Monomial& a, const Monomial& b) {
  unsigned da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  // reverse lexicographic tie break: the last differing exponent decides,
  // larger exponent there means smaller monomial
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return false;
}

bool monomial_divides(const Monomial& d, const Monomial& m) {
  for (size_t i = 0; i < d.size(); ++i)
    if (d[i] > m[i]) return false;
  return true;
}

Monomial monomial_quotient(const Monomial& m, const Monomial& d) {
  Monomial q(m.size());
  for (size_t i = 0; i < m.size(); ++i) q[i] = m[i] - d[i];
  return q;
}

Monomial monomial_lcm(const Monomial& a, const Monomial& b) {
  Monomial l(a.size());
  for (size_t i = 0; i < a.size(); ++i) l[i] = std::max(a[i], b[i]);
  return l;
}

bool monomial_coprime(const Monomial& a, const Monomial& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

Poly Poly::zero(int) { return Poly(); }

Poly Poly::constant(int nvars, const Rational& c) {
  Poly p;
  if (!algd::is_zero(c)) p.terms_.emplace(Monomial(nvars, 0u), c);
  return p;
}

Poly Poly::variable(int nvars, int index, unsigned power) {
  Poly p;
  Monomial m(nvars, 0u);
  m[index] = power;
  p.terms_.emplace(std::move(m), Rational(1));
  return p;
}

Poly Poly::monomial(Monomial m, const Rational& c) {
  Poly p;
  if (!algd::is_zero(c)) p.terms_.emplace(std::move(m), c);
  return p;
}

bool Poly::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && total_degree(terms_.begin()->first) == 0;
}

Rational Poly::constant_value() const {
  if (terms_.empty()) return Rational(0);
  return terms_.begin()->second;
}

int Poly::nvars() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(terms_.begin()->first.size());
}

const Monomial& Poly::leading_monomial() const {
  if (terms_.empty()) throw std::logic_error("leading_monomial of zero");
  return terms_.begin()->first;
}

const Rational& Poly::leading_coefficient() const {
  if (terms_.empty()) throw std::logic_error("leading_coefficient of zero");
  return terms_.begin()->second;
}

unsigned Poly::degree() const {
  return terms_.empty() ? 0u : total_degree(terms_.begin()->first);
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (algd::is_zero(c)) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (algd::is_zero(it->second)) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r(*this);
  r += o;
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r(*this);
  r -= o;
  return r;
}

Poly Poly::operator-() const {
  Poly r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  Poly r;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      Monomial m(ma.size());
      for (size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

Poly Poly::scaled(const Rational& c) const {
  Poly r;
  if (algd::is_zero(c)) return r;
  for (const auto& [m, q] : terms_) r.terms_.emplace(m, q * c);
  return r;
}

Poly Poly::times_monomial(const Monomial& mm, const Rational& c) const {
  Poly r;
  if (algd::is_zero(c)) return r;
  for (const auto& [m, q] : terms_) {
    Monomial t(m.size());
    for (size_t i = 0; i < t.size(); ++i) t[i] = m[i] + mm[i];
    r.terms_.emplace(std::move(t), q * c);
  }
  return r;
}

Poly Poly::pow(unsigned e, int nv) const {
  Poly r = Poly::constant(nv, Rational(1));
  Poly b(*this);
  while (e > 0) {
    if (e & 1u) r = r * b;
    e >>= 1u;
    if (e) b = b * b;
  }
  return r;
}

Poly Poly::derivative(int var) const {
  Poly r;
  for (const auto& [m, c] : terms_) {
    if (m[var] == 0) continue;
    Monomial d(m);
    Rational k(static_cast<long>(d[var]));
    d[var] -= 1;
    r.add_term(d, c * k);
  }
  return r;
}

Poly Poly::substitute(const std::vector<Poly>& images, int image_nvars) const {
  Poly r = Poly::zero(image_nvars);
  // memoized powers per variable
  std::vector<std::vector<Poly>> powers(images.size());
  auto power_of = [&](int v, unsigned e) -> const Poly& {
    auto& cache = powers[v];
    if (cache.empty()) cache.push_back(Poly::constant(image_nvars, Rational(1)));
    while (cache.size() <= e) cache.push_back(cache.back() * images[v]);
    return cache[e];
  };
  for (const auto& [m, c] : terms_) {
    Poly t = Poly::constant(image_nvars, c);
    for (size_t v = 0; v < m.size(); ++v)
      if (m[v] > 0) t = t * power_of(static_cast<int>(v), m[v]);
    r += t;
  }
  return r;
}

Poly Poly::map_vars(const std::vector<int>& var_map, int new_nvars) const {
  Poly r;
  for (const auto& [m, c] : terms_) {
    Monomial t(new_nvars, 0u);
    for (size_t v = 0; v < m.size(); ++v)
      if (m[v] > 0) t[var_map[v]] += m[v];
    r.add_term(t, c);
  }
  return r;
}

std::vector<int> Poly::support(int nvars) const {
  std::vector<bool> used(nvars, false);
  for (const auto& [m, c] : terms_) {
    (void)c;
    for (int v = 0; v < nvars; ++v)
      if (m[v] > 0) used[v] = true;
  }
  std::vector<int> out;
  for (int v = 0; v < nvars; ++v)
    if (used[v]) out.push_back(v);
  return out;
}

namespace {

void append_monomial(std::ostringstream& os, const Monomial& m,
                     const std::vector<std::string>& vars, bool lead_coeff_one) {
  bool first = lead_coeff_one;
  for (size_t v = 0; v < m.size(); ++v) {
    if (m[v] == 0) continue;
    if (!first) os << "*";
    os << vars[v];
    if (m[v] > 1) os << "^" << m[v];
    first = false;
  }
}

}  // namespace

std::string poly_to_string(const Poly& p, const std::vector<std::string>& vars) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    Rational a = c;
    if (first) {
      if (sgn(a) < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (sgn(a) < 0 ? " - " : " + ");
      if (sgn(a) < 0) a = -a;
    }
    bool coeff_one = (a == 1) && total_degree(m) > 0;
    if (!coeff_one) os << a.get_str();
    append_monomial(os, m, vars, coeff_one);
    first = false;
  }
  return os.str();
}

}  // namespace algd
