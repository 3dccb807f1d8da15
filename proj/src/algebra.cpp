#include "algebroid/algebra.hpp"

#include <cctype>
#include <sstream>

namespace algd {

namespace {

bool valid_identifier(const std::string& s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

}  // namespace

AlgebraPtr PresentedAlgebra::make(std::string name, std::vector<std::string> vars,
                                  std::vector<std::pair<std::string, std::string>> inverse_pairs,
                                  std::vector<Poly> relations) {
  auto alg = std::shared_ptr<PresentedAlgebra>(new PresentedAlgebra());
  alg->name_ = std::move(name);
  alg->vars_ = std::move(vars);
  for (size_t i = 0; i < alg->vars_.size(); ++i) {
    const std::string& v = alg->vars_[i];
    if (!valid_identifier(v))
      throw algebra_error("invalid variable name '" + v + "' in algebra " + alg->name_);
    if (!alg->var_index_.emplace(v, static_cast<int>(i)).second)
      throw algebra_error("duplicate variable '" + v + "' in algebra " + alg->name_);
  }
  alg->inverse_of_.assign(alg->vars_.size(), -1);
  int nv = alg->nvars();
  for (auto& [v, vinv] : inverse_pairs) {
    int a = alg->var_index(v), b = alg->var_index(vinv);
    if (a < 0 || b < 0)
      throw algebra_error("inverse pair names unknown in algebra " + alg->name_);
    alg->inverse_pairs_.emplace_back(a, b);
    alg->inverse_of_[a] = b;
    alg->inverse_of_[b] = a;
    Poly rel = Poly::variable(nv, a) * Poly::variable(nv, b) -
               Poly::constant(nv, Rational(1));
    bool present = false;
    for (const Poly& r : relations)
      if (r == rel || r == -rel) present = true;
    if (!present) relations.push_back(rel);
  }
  for (const Poly& r : relations) {
    if (r.is_zero())
      throw algebra_error("zero relation rejected in algebra " + alg->name_);
    if (!r.terms().empty() && r.nvars() != nv)
      throw algebra_error("relation arity mismatch in algebra " + alg->name_);
  }
  alg->relations_ = std::move(relations);
  alg->groebner_ = groebner_basis(alg->relations_);
  return alg;
}

AlgebraPtr PresentedAlgebra::make_parsed(std::string name, std::vector<std::string> vars,
                                         std::vector<std::pair<std::string, std::string>> inverse_pairs,
                                         const std::vector<std::string>& relation_exprs) {
  // bootstrap: a relation-free algebra for parsing the relation expressions
  AlgebraPtr raw = make(name + "__raw", vars, {}, {});
  std::vector<Poly> rels;
  for (const std::string& e : relation_exprs)
    rels.push_back(parse_element(e, raw).poly());
  return make(std::move(name), std::move(vars), std::move(inverse_pairs), std::move(rels));
}

AlgebraPtr PresentedAlgebra::rationals(std::string name) {
  return make(std::move(name), {}, {}, {});
}

int PresentedAlgebra::var_index(const std::string& v) const {
  auto it = var_index_.find(v);
  return it == var_index_.end() ? -1 : it->second;
}

int PresentedAlgebra::var_index_checked(const std::string& v) const {
  int i = var_index(v);
  if (i < 0) throw algebra_error("unknown variable '" + v + "' in algebra " + name_);
  return i;
}

int PresentedAlgebra::inverse_of(int v) const { return inverse_of_[v]; }

RingElement::RingElement(AlgebraPtr ring, Poly representative)
    : ring_(std::move(ring)), poly_(ring_->normal_form(representative)) {}

RingElement RingElement::zero(const AlgebraPtr& ring) {
  return RingElement(ring, Poly::zero(ring->nvars()));
}

RingElement RingElement::one(const AlgebraPtr& ring) {
  return constant(ring, Rational(1));
}

RingElement RingElement::constant(const AlgebraPtr& ring, const Rational& c) {
  return RingElement(ring, Poly::constant(ring->nvars(), c));
}

RingElement RingElement::variable(const AlgebraPtr& ring, const std::string& name) {
  return variable(ring, ring->var_index_checked(name));
}

RingElement RingElement::variable(const AlgebraPtr& ring, int index) {
  return RingElement(ring, Poly::variable(ring->nvars(), index));
}

void RingElement::check_same_ring(const RingElement& o) const {
  if (ring_.get() != o.ring_.get())
    throw algebra_error("ring mismatch between '" + (ring_ ? ring_->name() : "?") +
                        "' and '" + (o.ring_ ? o.ring_->name() : "?") + "'");
}

RingElement RingElement::operator+(const RingElement& o) const {
  check_same_ring(o);
  return RingElement(ring_, poly_ + o.poly_);
}

RingElement RingElement::operator-(const RingElement& o) const {
  check_same_ring(o);
  return RingElement(ring_, poly_ - o.poly_);
}

RingElement RingElement::operator-() const { return RingElement(ring_, -poly_); }

RingElement RingElement::operator*(const RingElement& o) const {
  check_same_ring(o);
  return RingElement(ring_, poly_ * o.poly_);
}

RingElement& RingElement::operator+=(const RingElement& o) {
  *this = *this + o;
  return *this;
}

RingElement& RingElement::operator-=(const RingElement& o) {
  *this = *this - o;
  return *this;
}

RingElement RingElement::scaled(const Rational& c) const {
  return RingElement(ring_, poly_.scaled(c));
}

RingElement RingElement::pow(unsigned e) const {
  RingElement r = one(ring_);
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

bool RingElement::operator==(const RingElement& o) const {
  check_same_ring(o);
  return poly_ == o.poly_;
}

std::optional<RingElement> RingElement::invert() const {
  if (is_zero()) return std::nullopt;
  if (poly_.terms().size() != 1) return std::nullopt;
  const auto& [m, c] = *poly_.terms().begin();
  Monomial inv(m.size(), 0u);
  for (size_t v = 0; v < m.size(); ++v) {
    if (m[v] == 0) continue;
    int w = ring_->inverse_of(static_cast<int>(v));
    if (w < 0) return std::nullopt;
    inv[w] += m[v];
  }
  return RingElement(ring_, Poly::monomial(inv, Rational(1) / c));
}

std::string RingElement::str() const { return poly_to_string(poly_, ring_->vars()); }

// ---------------------------------------------------------------------------
// expression parser
// ---------------------------------------------------------------------------

namespace {

struct Token {
  enum Kind { Ident, Int, Plus, Minus, Star, Slash, Caret, LParen, RParen, End } kind;
  std::string text;
  size_t pos;
};

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) {}
  Token next() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    size_t start = i_;
    if (i_ >= s_.size()) return {Token::End, "", start};
    char c = s_[i_];
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t j = i_;
      while (j < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_')) ++j;
      Token t{Token::Ident, s_.substr(i_, j - i_), start};
      i_ = j;
      return t;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i_;
      while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
      Token t{Token::Int, s_.substr(i_, j - i_), start};
      i_ = j;
      return t;
    }
    ++i_;
    switch (c) {
      case '+': return {Token::Plus, "+", start};
      case '-': return {Token::Minus, "-", start};
      case '*': return {Token::Star, "*", start};
      case '/': return {Token::Slash, "/", start};
      case '^': return {Token::Caret, "^", start};
      case '(': return {Token::LParen, "(", start};
      case ')': return {Token::RParen, ")", start};
      default:
        throw parse_error(std::string("unexpected character '") + c + "'", start);
    }
  }

 private:
  const std::string& s_;
  size_t i_ = 0;
};

class ExprParser {
 public:
  ExprParser(const std::string& s, const AlgebraPtr& ring) : ring_(ring), lex_(s) {
    advance();
  }

  Poly parse() {
    Poly p = expr();
    expect(Token::End, "end of expression");
    return p;
  }

 private:
  void advance() { tok_ = lex_.next(); }
  void expect(Token::Kind k, const std::string& what) {
    if (tok_.kind != k)
      throw parse_error("expected " + what + ", found '" + tok_.text + "'", tok_.pos);
    if (k != Token::End) advance();
  }

  unsigned parse_nat() {
    if (tok_.kind != Token::Int)
      throw parse_error("expected integer, found '" + tok_.text + "'", tok_.pos);
    unsigned long v = std::stoul(tok_.text);
    advance();
    return static_cast<unsigned>(v);
  }

  Poly expr() {
    bool neg = false;
    if (tok_.kind == Token::Minus) {
      neg = true;
      advance();
    }
    Poly p = term();
    if (neg) p = -p;
    while (tok_.kind == Token::Plus || tok_.kind == Token::Minus) {
      bool minus = tok_.kind == Token::Minus;
      advance();
      Poly q = term();
      if (minus)
        p -= q;
      else
        p += q;
    }
    return p;
  }

  Poly term() {
    Poly p = factor();
    for (;;) {
      if (tok_.kind == Token::Star) {
        advance();
        p = p * factor();
      } else if (tok_.kind == Token::Slash) {
        size_t pos = tok_.pos;
        advance();
        unsigned d = parse_nat();
        if (d == 0) throw parse_error("division by zero", pos);
        p = p.scaled(Rational(1, static_cast<long>(d)));
      } else {
        break;
      }
    }
    return p;
  }

  Poly factor() {
    Poly a = atom();
    if (tok_.kind == Token::Caret) {
      advance();
      unsigned e = parse_nat();
      a = a.pow(e, ring_->nvars());
    }
    return a;
  }

  Poly atom() {
    int nv = ring_->nvars();
    if (tok_.kind == Token::Int) {
      Rational c(tok_.text);
      advance();
      return Poly::constant(nv, c);
    }
    if (tok_.kind == Token::Ident) {
      int idx = ring_->var_index(tok_.text);
      if (idx < 0)
        throw parse_error("unknown variable '" + tok_.text + "'", tok_.pos);
      advance();
      return Poly::variable(nv, idx);
    }
    if (tok_.kind == Token::LParen) {
      advance();
      Poly p = expr();
      expect(Token::RParen, "')'");
      return p;
    }
    throw parse_error("expected value, found '" + tok_.text + "'", tok_.pos);
  }

  AlgebraPtr ring_;
  Lexer lex_;
  Token tok_;
};

}  // namespace

RingElement parse_element(const std::string& text, const AlgebraPtr& ring) {
  ExprParser p(text, ring);
  return RingElement(ring, p.parse());
}

RingElement derive_poly(const RingElement& e, const std::string& var) {
  const AlgebraPtr& ring = e.ring();
  int v = ring->var_index_checked(var);
  int vinv = ring->inverse_of(v);
  for (const Poly& r : ring->relations()) {
    auto sup = r.support(ring->nvars());
    bool touches = false;
    for (int w : sup)
      if (w == v || (vinv >= 0 && w == vinv)) touches = true;
    if (!touches) continue;
    // only the defining inverse-pair relation may involve var
    if (vinv >= 0) {
      Poly pair_rel = Poly::variable(ring->nvars(), v) * Poly::variable(ring->nvars(), vinv) -
                      Poly::constant(ring->nvars(), Rational(1));
      if (r == pair_rel || r == -pair_rel) continue;
    }
    throw algebra_error("derive_poly: variable '" + var + "' occurs in relation " +
                        poly_to_string(r, ring->vars()));
  }
  Poly result = e.poly().derivative(v);
  if (vinv >= 0) {
    // d(v_inv)/dv = -v_inv^2
    Poly dvinv = e.poly().derivative(vinv);
    Poly minus_sq = -(Poly::variable(ring->nvars(), vinv).pow(2, ring->nvars()));
    result += dvinv * minus_sq;
  }
  return RingElement(ring, result);
}

// ---------------------------------------------------------------------------
// AlgebraMap
// ---------------------------------------------------------------------------

AlgebraMap AlgebraMap::unchecked(AlgebraPtr domain, AlgebraPtr codomain,
                                 std::vector<RingElement> images) {
  if (static_cast<int>(images.size()) != domain->nvars())
    throw algebra_error("AlgebraMap: need one image per domain variable");
  AlgebraMap f;
  f.domain_ = std::move(domain);
  f.codomain_ = std::move(codomain);
  f.images_ = std::move(images);
  for (const RingElement& im : f.images_) {
    if (im.ring().get() != f.codomain_.get())
      throw algebra_error("AlgebraMap: image not in codomain");
    f.image_polys_.push_back(im.poly());
  }
  return f;
}

AlgebraMap AlgebraMap::checked(AlgebraPtr domain, AlgebraPtr codomain,
                               std::vector<RingElement> images, const std::string& what) {
  AlgebraMap f = unchecked(std::move(domain), std::move(codomain), std::move(images));
  std::string bad;
  if (!f.well_defined(&bad))
    throw algebra_error(what + ": not well defined, relation " + bad +
                        " does not map to zero");
  return f;
}

AlgebraMap AlgebraMap::identity(const AlgebraPtr& a) {
  std::vector<RingElement> images;
  for (int v = 0; v < a->nvars(); ++v) images.push_back(RingElement::variable(a, v));
  return unchecked(a, a, std::move(images));
}

RingElement AlgebraMap::apply(const RingElement& e) const {
  if (e.ring().get() != domain_.get())
    throw algebra_error("AlgebraMap: argument not in domain");
  return apply_raw(e.poly());
}

RingElement AlgebraMap::apply_raw(const Poly& representative) const {
  Poly img = representative.substitute(image_polys_, codomain_->nvars());
  return RingElement(codomain_, std::move(img));
}

bool AlgebraMap::well_defined(std::string* violated_relation) const {
  for (const Poly& r : domain_->relations()) {
    if (!apply_raw(r).is_zero()) {
      if (violated_relation) *violated_relation = poly_to_string(r, domain_->vars());
      return false;
    }
  }
  return true;
}

AlgebraMap compose(const AlgebraMap& g, const AlgebraMap& f) {
  if (f.codomain().get() != g.domain().get())
    throw algebra_error("compose: domain/codomain mismatch");
  std::vector<RingElement> images;
  for (const RingElement& im : f.images()) images.push_back(g.apply(im));
  return AlgebraMap::unchecked(f.domain(), g.codomain(), std::move(images));
}

// ---------------------------------------------------------------------------
// AlgebraDerivation
// ---------------------------------------------------------------------------

AlgebraDerivation AlgebraDerivation::zero(const AlgebraPtr& ring) {
  std::vector<RingElement> images(ring->nvars(), RingElement::zero(ring));
  AlgebraDerivation d;
  d.ring_ = ring;
  d.images_ = std::move(images);
  return d;
}

AlgebraDerivation AlgebraDerivation::checked(AlgebraPtr ring, std::vector<RingElement> images,
                                             const std::string& what) {
  if (static_cast<int>(images.size()) != ring->nvars())
    throw algebra_error(what + ": need one image per variable");
  AlgebraDerivation d;
  d.ring_ = std::move(ring);
  d.images_ = std::move(images);
  std::string bad;
  if (!d.well_defined(&bad))
    throw algebra_error(what + ": Leibniz expansion of relation " + bad + " is nonzero");
  return d;
}

RingElement AlgebraDerivation::apply(const RingElement& e) const {
  if (e.ring().get() != ring_.get())
    throw algebra_error("AlgebraDerivation: argument not in ring");
  RingElement acc = RingElement::zero(ring_);
  for (int v = 0; v < ring_->nvars(); ++v) {
    if (images_[v].is_zero()) continue;
    Poly dv = e.poly().derivative(v);
    if (dv.is_zero()) continue;
    acc += RingElement(ring_, dv) * images_[v];
  }
  return acc;
}

bool AlgebraDerivation::well_defined(std::string* violated_relation) const {
  for (const Poly& r : ring_->relations()) {
    RingElement acc = RingElement::zero(ring_);
    for (int v = 0; v < ring_->nvars(); ++v) {
      Poly dv = r.derivative(v);
      if (dv.is_zero() || images_[v].is_zero()) continue;
      acc += RingElement(ring_, dv) * images_[v];
    }
    if (!acc.is_zero()) {
      if (violated_relation) *violated_relation = poly_to_string(r, ring_->vars());
      return false;
    }
  }
  return true;
}

AlgebraDerivation AlgebraDerivation::operator+(const AlgebraDerivation& o) const {
  AlgebraDerivation d;
  d.ring_ = ring_;
  for (size_t i = 0; i < images_.size(); ++i) d.images_.push_back(images_[i] + o.images_[i]);
  return d;
}

AlgebraDerivation AlgebraDerivation::scaled(const RingElement& a) const {
  AlgebraDerivation d;
  d.ring_ = ring_;
  for (const RingElement& im : images_) d.images_.push_back(a * im);
  return d;
}

AlgebraDerivation AlgebraDerivation::bracket(const AlgebraDerivation& o) const {
  AlgebraDerivation d;
  d.ring_ = ring_;
  for (int v = 0; v < ring_->nvars(); ++v) {
    RingElement xv = RingElement::variable(ring_, v);
    d.images_.push_back(apply(o.apply(xv)) - o.apply(apply(xv)));
  }
  return d;
}

bool AlgebraDerivation::operator==(const AlgebraDerivation& o) const {
  return ring_.get() == o.ring_.get() && images_ == o.images_;
}

}  // namespace algd
