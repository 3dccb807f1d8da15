#include "algebroid/enveloping.hpp"

#include <cctype>
#include <sstream>

#include "algebroid/linsolve.hpp"

namespace algd {

// ---------------------------------------------------------------------------
// NCElement / TensorNC / TripleNC containers
// ---------------------------------------------------------------------------

void NCElement::add(const Word& w, const RingElement& c) {
  if (c.is_zero()) return;
  auto it = terms.find(w);
  if (it == terms.end())
    terms.emplace(w, c);
  else {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

NCElement NCElement::operator+(const NCElement& o) const {
  NCElement r(*this);
  for (const auto& [w, c] : o.terms) r.add(w, c);
  return r;
}

NCElement NCElement::operator-(const NCElement& o) const {
  NCElement r(*this);
  for (const auto& [w, c] : o.terms) r.add(w, -c);
  return r;
}

NCElement NCElement::scaled(const RingElement& c) const {
  NCElement r;
  for (const auto& [w, q] : terms) r.add(w, q * c);
  return r;
}

unsigned NCElement::degree() const {
  unsigned d = 0;
  for (const auto& [w, c] : terms) {
    (void)c;
    d = std::max<unsigned>(d, static_cast<unsigned>(w.size()));
  }
  return d;
}

std::string NCElement::str(const Envelope& U) const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms) {
    if (!first) os << " + ";
    first = false;
    bool wrote = false;
    for (int g : w) {
      if (wrote) os << ".";
      os << U.L.basis[g];
      wrote = true;
    }
    if (!wrote) {
      os << "iA(" << c.str() << ")";
    } else if (!(c.is_constant() && c.constant_value() == 1)) {
      os << ".iA(" << c.str() << ")";
    }
  }
  return os.str();
}

void TensorNC::add(const Word& l, const Word& r, const RingElement& c) {
  if (c.is_zero()) return;
  auto key = std::make_pair(l, r);
  auto it = terms.find(key);
  if (it == terms.end())
    terms.emplace(key, c);
  else {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

TensorNC TensorNC::operator+(const TensorNC& o) const {
  TensorNC r(*this);
  for (const auto& [k, c] : o.terms) r.add(k.first, k.second, c);
  return r;
}

TensorNC TensorNC::operator-(const TensorNC& o) const {
  TensorNC r(*this);
  for (const auto& [k, c] : o.terms) r.add(k.first, k.second, -c);
  return r;
}

std::string TensorNC::str(const Envelope& U) const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  auto word_str = [&](const Word& w) {
    if (w.empty()) return std::string("1");
    std::string s;
    for (int g : w) {
      if (!s.empty()) s += ".";
      s += U.L.basis[g];
    }
    return s;
  };
  for (const auto& [k, c] : terms) {
    if (!first) os << " + ";
    first = false;
    os << word_str(k.first) << " (x) " << word_str(k.second) << ".iA(" << c.str() << ")";
  }
  return os.str();
}

void TripleNC::add(const Word& a, const Word& b, const Word& c, const RingElement& q) {
  if (q.is_zero()) return;
  auto key = std::make_tuple(a, b, c);
  auto it = terms.find(key);
  if (it == terms.end())
    terms.emplace(key, q);
  else {
    it->second += q;
    if (it->second.is_zero()) terms.erase(it);
  }
}

// ---------------------------------------------------------------------------
// PBW rewriting
// ---------------------------------------------------------------------------

RawWord Envelope::word_atoms(const Word& w, const RingElement& c) const {
  RawWord out;
  for (int g : w) out.push_back(NCAtom::generator(g));
  if (!(c.is_constant() && c.constant_value() == 1)) out.push_back(NCAtom::base(c));
  return out;
}

NCElement Envelope::normalize_raw(const std::vector<std::pair<RawWord, Rational>>& raw,
                                  const Strategy& strategy) const {
  NCElement out;
  std::vector<std::pair<RawWord, Rational>> stack(raw);
  while (!stack.empty()) {
    auto [w, q] = std::move(stack.back());
    stack.pop_back();
    if (algd::is_zero(q)) continue;
    // merge adjacent base coefficients
    RawWord m;
    bool dead = false;
    for (const NCAtom& at : w) {
      if (at.gen < 0) {
        if (at.coeff.is_zero()) {
          dead = true;
          break;
        }
        if (!m.empty() && m.back().gen < 0)
          m.back().coeff = m.back().coeff * at.coeff;
        else
          m.push_back(at);
      } else {
        m.push_back(at);
      }
    }
    if (dead) continue;

    std::vector<size_t> candidates;
    for (size_t i = 0; i + 1 < m.size(); ++i) {
      const NCAtom& a = m[i];
      const NCAtom& b = m[i + 1];
      if (a.gen < 0 && b.gen >= 0) candidates.push_back(i);
      else if (a.gen >= 0 && b.gen >= 0 && a.gen > b.gen) candidates.push_back(i);
    }
    if (candidates.empty()) {
      Word word;
      RingElement c = RingElement::one(A);
      for (const NCAtom& at : m) {
        if (at.gen >= 0)
          word.push_back(at.gen);
        else
          c = c * at.coeff;
      }
      out.add(word, c.scaled(q));
      continue;
    }
    size_t pos = candidates[strategy ? strategy(candidates.size()) % candidates.size() : 0];
    const NCAtom a = m[pos];
    const NCAtom b = m[pos + 1];
    auto splice = [&](std::vector<NCAtom> replacement) {
      RawWord nw(m.begin(), m.begin() + pos);
      for (auto& at : replacement) nw.push_back(std::move(at));
      nw.insert(nw.end(), m.begin() + pos + 2, m.end());
      stack.emplace_back(std::move(nw), q);
    };
    if (a.gen < 0) {
      // a e_i -> e_i a - w(e_i)(a)
      splice({b, a});
      RingElement da = L.anchor[b.gen].apply(a.coeff);
      if (!da.is_zero()) splice({NCAtom::base(-da)});
    } else {
      // e_j e_i -> e_i e_j + [e_j, e_i]
      splice({b, a});
      for (int k = 0; k < rank(); ++k) {
        const RingElement& ck = L.c[a.gen][b.gen][k];
        if (!ck.is_zero()) splice({NCAtom::generator(k), NCAtom::base(ck)});
      }
    }
  }
  return out;
}

NCElement Envelope::normalize_word(const RawWord& w, const Strategy& strategy) const {
  return normalize_raw({{w, Rational(1)}}, strategy);
}

NCElement Envelope::one() const {
  NCElement r;
  r.add({}, RingElement::one(A));
  return r;
}

NCElement Envelope::gen(int i) const {
  NCElement r;
  r.add({i}, RingElement::one(A));
  return r;
}

NCElement Envelope::embed_base(const RingElement& a) const {
  NCElement r;
  r.add({}, a);
  return r;
}

NCElement Envelope::mul(const NCElement& x, const NCElement& y) const {
  std::vector<std::pair<RawWord, Rational>> raw;
  for (const auto& [wx, cx] : x.terms) {
    for (const auto& [wy, cy] : y.terms) {
      RawWord w = word_atoms(wx, cx);
      RawWord w2 = word_atoms(wy, cy);
      w.insert(w.end(), w2.begin(), w2.end());
      raw.emplace_back(std::move(w), Rational(1));
    }
  }
  return normalize_raw(raw);
}

RingElement Envelope::counit(const NCElement& u) const {
  auto it = u.terms.find(Word{});
  return it == u.terms.end() ? RingElement::zero(A) : it->second;
}

// ---------------------------------------------------------------------------
// tensor calculus over the left/right leg model
// ---------------------------------------------------------------------------

namespace {

void add_canonical_pair(const Envelope& U, TensorNC& out, const RawWord& left,
                        const RawWord& right, const Rational& q) {
  NCElement ln = U.normalize_raw({{left, Rational(1)}});
  for (const auto& [wl, cl] : ln.terms) {
    RawWord r2;
    if (!(cl.is_constant() && cl.constant_value() == 1)) r2.push_back(NCAtom::base(cl));
    r2.insert(r2.end(), right.begin(), right.end());
    NCElement rn = U.normalize_raw({{r2, q}});
    for (const auto& [wr, cr] : rn.terms) out.add(wl, wr, cr);
  }
}

}  // namespace

TensorNC Envelope::tensor(const NCElement& x, const NCElement& y) const {
  TensorNC out;
  for (const auto& [wx, cx] : x.terms)
    for (const auto& [wy, cy] : y.terms) {
      RawWord l = word_atoms(wx, cx);
      RawWord r = word_atoms(wy, cy);
      add_canonical_pair(*this, out, l, r, Rational(1));
    }
  return out;
}

TensorNC Envelope::tensor_mul(const TensorNC& x, const TensorNC& y) const {
  TensorNC out;
  for (const auto& [kx, cx] : x.terms) {
    for (const auto& [ky, cy] : y.terms) {
      RawWord l = word_atoms(kx.first, RingElement::one(A));
      RawWord l2 = word_atoms(ky.first, RingElement::one(A));
      l.insert(l.end(), l2.begin(), l2.end());
      RawWord r = word_atoms(kx.second, cx);
      RawWord r2 = word_atoms(ky.second, cy);
      r.insert(r.end(), r2.begin(), r2.end());
      add_canonical_pair(*this, out, l, r, Rational(1));
    }
  }
  return out;
}

TensorNC Envelope::sandwich(const TensorNC& x, const TensorNC& y) const {
  // beta3: (uv)_- (x) (uv)_+ = v_- u_- (x) u_+ v_+  with x = trans(u), y = trans(v)
  TensorNC out;
  for (const auto& [kx, cx] : x.terms) {
    for (const auto& [ky, cy] : y.terms) {
      RawWord l = word_atoms(ky.first, RingElement::one(A));
      RawWord l2 = word_atoms(kx.first, RingElement::one(A));
      l.insert(l.end(), l2.begin(), l2.end());
      RawWord r = word_atoms(kx.second, cx);
      RawWord r2 = word_atoms(ky.second, cy);
      r.insert(r.end(), r2.begin(), r2.end());
      add_canonical_pair(*this, out, l, r, Rational(1));
    }
  }
  return out;
}

TensorNC Envelope::flip(const TensorNC& x) const {
  TensorNC out;
  for (const auto& [k, c] : x.terms) {
    RawWord l = word_atoms(k.second, c);
    RawWord r = word_atoms(k.first, RingElement::one(A));
    add_canonical_pair(*this, out, l, r, Rational(1));
  }
  return out;
}

TensorNC Envelope::act_left_leg(const RingElement& a, const TensorNC& x) const {
  TensorNC out;
  for (const auto& [k, c] : x.terms) {
    RawWord l;
    l.push_back(NCAtom::base(a));
    RawWord lw = word_atoms(k.first, RingElement::one(A));
    l.insert(l.end(), lw.begin(), lw.end());
    add_canonical_pair(*this, out, l, word_atoms(k.second, c), Rational(1));
  }
  return out;
}

TensorNC Envelope::act_right_leg(const RingElement& a, const TensorNC& x) const {
  TensorNC out;
  for (const auto& [k, c] : x.terms) {
    RawWord r;
    r.push_back(NCAtom::base(a));
    RawWord rw = word_atoms(k.second, c);
    r.insert(r.end(), rw.begin(), rw.end());
    add_canonical_pair(*this, out, word_atoms(k.first, RingElement::one(A)), r, Rational(1));
  }
  return out;
}

TensorNC Envelope::act_right_leg_from_right(const TensorNC& x, const RingElement& a) const {
  TensorNC out;
  for (const auto& [k, c] : x.terms) out.add(k.first, k.second, c * a);
  return out;
}

bool Envelope::takeuchi_member(const TensorNC& x) const {
  for (int g = 0; g < A->nvars(); ++g) {
    RingElement a = RingElement::variable(A, g);
    if (!(act_left_leg(a, x) == act_right_leg(a, x))) return false;
  }
  return true;
}

TensorNC Envelope::delta_word(const Word& w, const RingElement& c) const {
  TensorNC t;
  t.add({}, {}, RingElement::one(A));
  for (int g : w) {
    TensorNC prim;
    prim.add({g}, {}, RingElement::one(A));
    prim.add({}, {g}, RingElement::one(A));
    t = tensor_mul(t, prim);
  }
  TensorNC tail;
  tail.add({}, {}, c);
  return tensor_mul(t, tail);
}

TensorNC Envelope::delta(const NCElement& u) const {
  TensorNC out;
  for (const auto& [w, c] : u.terms) out = out + delta_word(w, c);
  return out;
}

TensorNC Envelope::translation_word(const Word& w, const RingElement& c) const {
  TensorNC t;
  t.add({}, {}, c);  // iota_A(c)_- (x) iota_A(c)_+ = 1 (x) c
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    TensorNC letter;
    letter.add({}, {*it}, RingElement::one(A));
    letter.add({*it}, {}, -RingElement::one(A));
    t = sandwich(letter, t);
  }
  return t;
}

TensorNC Envelope::translation(const NCElement& u) const {
  TensorNC out;
  for (const auto& [w, c] : u.terms) out = out + translation_word(w, c);
  return out;
}

TripleNC Envelope::canonical_triple(const RawWord& a, const RawWord& b, const RawWord& c,
                                    const Rational& q) const {
  TripleNC out;
  NCElement an = normalize_raw({{a, Rational(1)}});
  for (const auto& [w1, c1] : an.terms) {
    RawWord b2;
    if (!(c1.is_constant() && c1.constant_value() == 1)) b2.push_back(NCAtom::base(c1));
    b2.insert(b2.end(), b.begin(), b.end());
    NCElement bn = normalize_raw({{b2, Rational(1)}});
    for (const auto& [w2, c2] : bn.terms) {
      RawWord c3;
      if (!(c2.is_constant() && c2.constant_value() == 1)) c3.push_back(NCAtom::base(c2));
      c3.insert(c3.end(), c.begin(), c.end());
      NCElement cn = normalize_raw({{c3, q}});
      for (const auto& [w3, q3] : cn.terms) out.add(w1, w2, w3, q3);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// construction
// ---------------------------------------------------------------------------

Envelope build_enveloping(const LieRinehart& L, std::string name) {
  AxiomReport rep = check_lie_rinehart(L);
  for (const auto& c : rep.checks)
    if (!c.pass)
      throw algebra_error("build_enveloping(" + L.name + "): input fails " + c.name +
                          " at " + c.counterexample);
  Envelope U;
  U.L = L;
  U.A = L.base;
  U.name = name.empty() ? "V(" + L.name + ")" : std::move(name);
  return U;
}

NCElement pbw_normalize(const Envelope& U,
                        const std::vector<std::pair<RawWord, Rational>>& raw) {
  return U.normalize_raw(raw);
}

// ---------------------------------------------------------------------------
// primitives
// ---------------------------------------------------------------------------

std::vector<Word> pbw_words(int rank, int maxdeg) {
  std::vector<Word> out{{}};
  std::vector<Word> frontier{{}};
  for (int d = 1; d <= maxdeg; ++d) {
    std::vector<Word> next;
    for (const Word& w : frontier) {
      int lo = w.empty() ? 0 : w.back();
      for (int g = lo; g < rank; ++g) {
        Word nw(w);
        nw.push_back(g);
        next.push_back(nw);
      }
    }
    for (const Word& w : next) out.push_back(w);
    frontier = std::move(next);
  }
  return out;
}

std::vector<NCElement> primitives(const Envelope& U, int max_degree) {
  if (max_degree > 4) throw algebra_error("primitives: degree cap is 4");
  std::vector<Word> words = pbw_words(U.rank(), max_degree);
  std::map<Word, int> index;
  for (size_t i = 0; i < words.size(); ++i) index[words[i]] = static_cast<int>(i);

  LinearSystem sys;
  sys.ring = U.A;
  sys.n_unknowns = static_cast<int>(words.size());
  std::map<std::pair<Word, Word>, std::vector<RingElement>> rows;
  auto row_of = [&](const std::pair<Word, Word>& key) -> std::vector<RingElement>& {
    auto it = rows.find(key);
    if (it == rows.end())
      it = rows.emplace(key, std::vector<RingElement>(words.size(),
                                                      RingElement::zero(U.A))).first;
    return it->second;
  };
  for (size_t i = 0; i < words.size(); ++i) {
    TensorNC dw = U.delta_word(words[i], RingElement::one(U.A));
    for (const auto& [k, c] : dw.terms) row_of(k)[i] += c;
    row_of({words[i], {}})[i] -= RingElement::one(U.A);
    row_of({{}, words[i]})[i] -= RingElement::one(U.A);
  }
  for (auto& [k, row] : rows) {
    bool nonzero = false;
    for (const auto& c : row)
      if (!c.is_zero()) nonzero = true;
    if (!nonzero) continue;
    sys.rows.push_back(row);
    sys.row_labels.push_back("tensor key");
  }
  {
    // eps(u) = 0 pins the empty word
    std::vector<RingElement> row(words.size(), RingElement::zero(U.A));
    row[index.at(Word{})] = RingElement::one(U.A);
    sys.rows.push_back(std::move(row));
    sys.row_labels.push_back("counit");
  }
  TriangularSolution sol = solve_triangular(sys);
  std::vector<NCElement> basis;
  for (size_t k = 0; k < sol.free_unknowns.size(); ++k) {
    NCElement p;
    for (size_t w = 0; w < words.size(); ++w) p.add(words[w], sol.expression[w][k]);
    basis.push_back(std::move(p));
  }
  return basis;
}

LieRinehart primitive_lie_rinehart(const Envelope& U, const std::vector<NCElement>& prims) {
  int n = static_cast<int>(prims.size());
  // coordinates through the distinguished words of each primitive: the
  // solver returns duals of free words, so each p_k has a word w_k with
  // coefficient 1 in p_k and 0 in the others
  std::vector<Word> markers;
  for (int k = 0; k < n; ++k) {
    for (const auto& [w, c] : prims[k].terms) {
      bool marker = c.is_constant() && c.constant_value() == 1;
      if (!marker) continue;
      bool elsewhere = false;
      for (int j = 0; j < n && !elsewhere; ++j)
        if (j != k && prims[j].terms.count(w)) elsewhere = true;
      if (!elsewhere) {
        markers.push_back(w);
        break;
      }
    }
  }
  if (static_cast<int>(markers.size()) != n)
    throw algebra_error("primitive_lie_rinehart: no dual coordinate system");

  auto coords = [&](const NCElement& q) {
    std::vector<RingElement> c;
    for (int k = 0; k < n; ++k) {
      auto it = q.terms.find(markers[k]);
      c.push_back(it == q.terms.end() ? RingElement::zero(U.A) : it->second);
    }
    NCElement recon;
    for (int k = 0; k < n; ++k) recon = recon + prims[k].scaled(c[k]);
    if (!(recon == q))
      throw algebra_error("primitive_lie_rinehart: element leaves the primitive span");
    return c;
  };

  std::vector<std::string> names;
  std::vector<AlgebraDerivation> anchors;
  for (int k = 0; k < n; ++k) {
    names.push_back("p" + std::to_string(k));
    std::vector<RingElement> imgs;
    for (int a = 0; a < U.A->nvars(); ++a) {
      RingElement av = RingElement::variable(U.A, a);
      imgs.push_back(-U.counit(U.mul(U.embed_base(av), prims[k])));
    }
    anchors.push_back(AlgebraDerivation::checked(U.A, std::move(imgs), "primitive anchor"));
  }
  std::vector<std::vector<std::vector<RingElement>>> c(
      n, std::vector<std::vector<RingElement>>(n, std::vector<RingElement>(
                                                      n, RingElement::zero(U.A))));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      NCElement br = U.mul(prims[i], prims[j]) - U.mul(prims[j], prims[i]);
      c[i][j] = coords(br);
    }
  return make_lie_rinehart("Prim(" + U.name + ")", U.A, std::move(names),
                           std::move(anchors), std::move(c));
}

// ---------------------------------------------------------------------------
// identity suite
// ---------------------------------------------------------------------------

AxiomReport check_cocomm_identities(const Envelope& U,
                                    const std::vector<NCElement>& samples) {
  AxiomReport rep;
  auto gens = [&]() {
    std::vector<NCElement> g;
    for (int i = 0; i < U.rank(); ++i) g.push_back(U.gen(i));
    return g;
  }();
  std::vector<NCElement> all = gens;
  all.insert(all.end(), samples.begin(), samples.end());

  auto per_sample = [&](const std::string& name, auto&& fn) {
    for (size_t i = 0; i < all.size(); ++i)
      if (!fn(all[i])) {
        rep.add(name, false, "sample " + std::to_string(i));
        return;
      }
    rep.add(name, true);
  };

  per_sample("counit_left", [&](const NCElement& u) {
    NCElement lhs;
    for (const auto& [k, c] : U.delta(u).terms)
      if (k.first.empty()) lhs.add(k.second, c);
    return lhs == u;
  });
  per_sample("counit_right", [&](const NCElement& u) {
    NCElement lhs;
    for (const auto& [k, c] : U.delta(u).terms)
      if (k.second.empty()) lhs.add(k.first, c);
    return lhs == u;
  });
  per_sample("coassociativity", [&](const NCElement& u) {
    TripleNC lhs, rhs;
    for (const auto& [k, c] : U.delta(u).terms) {
      for (const auto& [k2, d] : U.delta_word(k.first, RingElement::one(U.A)).terms) {
        TripleNC piece = U.canonical_triple(U.word_atoms(k2.first, RingElement::one(U.A)),
                                            U.word_atoms(k2.second, d),
                                            U.word_atoms(k.second, c), Rational(1));
        for (const auto& [t, q] : piece.terms)
          lhs.add(std::get<0>(t), std::get<1>(t), std::get<2>(t), q);
      }
      for (const auto& [k2, d] : U.delta_word(k.second, c).terms) {
        TripleNC piece = U.canonical_triple(U.word_atoms(k.first, RingElement::one(U.A)),
                                            U.word_atoms(k2.first, RingElement::one(U.A)),
                                            U.word_atoms(k2.second, d), Rational(1));
        for (const auto& [t, q] : piece.terms)
          rhs.add(std::get<0>(t), std::get<1>(t), std::get<2>(t), q);
      }
    }
    return lhs == rhs;
  });
  per_sample("cocommutativity", [&](const NCElement& u) {
    TensorNC d = U.delta(u);
    return U.flip(d) == d;
  });
  per_sample("takeuchi_membership", [&](const NCElement& u) {
    return U.takeuchi_member(U.delta(u));
  });
  {
    bool ok = true;
    for (size_t i = 0; i + 1 < all.size() && ok; ++i) {
      const NCElement& u = all[i];
      const NCElement& v = all[i + 1];
      ok = U.counit(U.mul(u, v)) == U.counit(U.mul(U.embed_base(U.counit(u)), v));
    }
    rep.add("double_counit", ok);
  }

  // beta identities
  auto base_gens = [&]() {
    std::vector<RingElement> g;
    for (int a = 0; a < U.A->nvars(); ++a) g.push_back(RingElement::variable(U.A, a));
    return g;
  }();

  per_sample("beta1", [&](const NCElement& u) {
    for (const RingElement& a : base_gens) {
      TensorNC lhs = U.translation(U.mul(U.embed_base(a), u));
      TensorNC rhs = U.act_right_leg(a, U.translation(u));
      if (!(lhs == rhs)) return false;
    }
    return true;
  });
  per_sample("beta2", [&](const NCElement& u) {
    for (const RingElement& a : base_gens) {
      TensorNC t = U.translation(u);
      if (!(U.act_left_leg(a, t) == U.act_right_leg_from_right(t, a))) return false;
    }
    return true;
  });
  {
    bool ok = true;
    for (size_t i = 0; i + 1 < all.size() && ok; ++i) {
      const NCElement& u = all[i];
      const NCElement& v = all[i + 1];
      ok = U.translation(U.mul(u, v)) == U.sandwich(U.translation(u), U.translation(v));
    }
    rep.add("beta3", ok);
  }
  {
    TensorNC expect;
    expect.add({}, {}, RingElement::one(U.A));
    rep.add("beta4", U.translation(U.one()) == expect);
  }
  per_sample("beta5", [&](const NCElement& u) {
    TripleNC lhs, rhs;
    for (const auto& [k, c] : U.translation(u).terms) {
      for (const auto& [k2, d] : U.delta_word(k.first, RingElement::one(U.A)).terms) {
        TripleNC piece = U.canonical_triple(U.word_atoms(k2.first, RingElement::one(U.A)),
                                            U.word_atoms(k2.second, d),
                                            U.word_atoms(k.second, c), Rational(1));
        for (const auto& [t, q] : piece.terms)
          lhs.add(std::get<0>(t), std::get<1>(t), std::get<2>(t), q);
      }
      for (const auto& [k2, e] : U.translation_word(k.second, c).terms) {
        TripleNC piece = U.canonical_triple(U.word_atoms(k2.first, RingElement::one(U.A)),
                                            U.word_atoms(k.first, RingElement::one(U.A)),
                                            U.word_atoms(k2.second, e), Rational(1));
        for (const auto& [t, q] : piece.terms)
          rhs.add(std::get<0>(t), std::get<1>(t), std::get<2>(t), q);
      }
    }
    return lhs == rhs;
  });
  per_sample("beta6", [&](const NCElement& u) {
    TripleNC lhs, rhs;
    for (const auto& [k, c] : U.translation(u).terms)
      for (const auto& [k2, d] : U.delta_word(k.second, c).terms) {
        TripleNC piece = U.canonical_triple(U.word_atoms(k.first, RingElement::one(U.A)),
                                            U.word_atoms(k2.first, RingElement::one(U.A)),
                                            U.word_atoms(k2.second, d), Rational(1));
        for (const auto& [t, q] : piece.terms)
          lhs.add(std::get<0>(t), std::get<1>(t), std::get<2>(t), q);
      }
    for (const auto& [k, c] : U.delta(u).terms)
      for (const auto& [k2, e] : U.translation_word(k.first, RingElement::one(U.A)).terms) {
        TripleNC piece = U.canonical_triple(U.word_atoms(k2.first, RingElement::one(U.A)),
                                            U.word_atoms(k2.second, e),
                                            U.word_atoms(k.second, c), Rational(1));
        for (const auto& [t, q] : piece.terms)
          rhs.add(std::get<0>(t), std::get<1>(t), std::get<2>(t), q);
      }
    return lhs == rhs;
  });
  per_sample("beta7", [&](const NCElement& u) {
    std::vector<std::pair<RawWord, Rational>> raw;
    for (const auto& [k, c] : U.translation(u).terms) {
      RawWord w = U.word_atoms(k.first, RingElement::one(U.A));
      RawWord r = U.word_atoms(k.second, c);
      w.insert(w.end(), r.begin(), r.end());
      raw.emplace_back(std::move(w), Rational(1));
    }
    return U.normalize_raw(raw) == U.embed_base(U.counit(u));
  });
  per_sample("beta8", [&](const NCElement& u) {
    TensorNC lhs;
    for (const auto& [k, c] : U.translation(u).terms)
      for (const auto& [k2, e] : U.translation_word(k.first, RingElement::one(U.A)).terms) {
        RawWord r = U.word_atoms(k2.second, e);
        RawWord r2 = U.word_atoms(k.second, c);
        r.insert(r.end(), r2.begin(), r2.end());
        add_canonical_pair(U, lhs, U.word_atoms(k2.first, RingElement::one(U.A)), r,
                           Rational(1));
      }
    return lhs == U.tensor(u, U.one());
  });
  per_sample("beta9", [&](const NCElement& u) {
    TensorNC lhs;
    for (const auto& [k, c] : U.delta(u).terms)
      for (const auto& [k2, e] : U.translation_word(k.second, c).terms) {
        RawWord l = U.word_atoms(k.first, RingElement::one(U.A));
        RawWord l2 = U.word_atoms(k2.first, RingElement::one(U.A));
        l.insert(l.end(), l2.begin(), l2.end());
        add_canonical_pair(U, lhs, l, U.word_atoms(k2.second, e), Rational(1));
      }
    return lhs == U.tensor(U.one(), u);
  });
  return rep;
}

// ---------------------------------------------------------------------------
// parser for noncommutative expressions
// ---------------------------------------------------------------------------

namespace {

struct NCParser {
  const std::string& s;
  const Envelope& U;
  size_t i = 0;

  explicit NCParser(const std::string& text, const Envelope& u) : s(text), U(u) {}

  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool peek(char c) {
    skip();
    return i < s.size() && s[i] == c;
  }
  bool eat(char c) {
    if (peek(c)) {
      ++i;
      return true;
    }
    return false;
  }

  NCElement parse() {
    NCElement e = expr();
    skip();
    if (i != s.size()) throw parse_error("trailing input in NC expression", i);
    return e;
  }

  NCElement expr() {
    bool neg = eat('-');
    NCElement e = term();
    if (neg) e = e.scaled(-RingElement::one(U.A));
    for (;;) {
      if (eat('+'))
        e = e + term();
      else if (eat('-'))
        e = e - term();
      else
        return e;
    }
  }

  NCElement term() {
    NCElement e = factor();
    while (eat('.')) e = U.mul(e, factor());
    return e;
  }

  NCElement factor() {
    NCElement a = atom();
    if (eat('^')) {
      skip();
      size_t start = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      if (i == start) throw parse_error("expected exponent", i);
      unsigned e = std::stoul(s.substr(start, i - start));
      NCElement r = U.one();
      for (unsigned k = 0; k < e; ++k) r = U.mul(r, a);
      return r;
    }
    return a;
  }

  NCElement atom() {
    skip();
    if (i >= s.size()) throw parse_error("unexpected end of NC expression", i);
    if (eat('(')) {
      NCElement e = expr();
      if (!eat(')')) throw parse_error("expected ')'", i);
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      size_t start = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      Rational q(s.substr(start, i - start));
      if (eat('/')) {
        skip();
        size_t ds = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == ds) throw parse_error("expected denominator", i);
        q /= Rational(s.substr(ds, i - ds));
        q.canonicalize();
      }
      return U.embed_base(RingElement::constant(U.A, q));
    }
    size_t start = i;
    while (i < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
      ++i;
    if (i == start) throw parse_error("expected NC atom", i);
    std::string word = s.substr(start, i - start);
    if (word == "iA") {
      skip();
      if (!eat('(')) throw parse_error("expected '(' after iA", i);
      int depth = 1;
      size_t inner_start = i;
      while (i < s.size() && depth > 0) {
        if (s[i] == '(') ++depth;
        if (s[i] == ')') --depth;
        ++i;
      }
      if (depth != 0) throw parse_error("unbalanced iA(...)", i);
      std::string inner = s.substr(inner_start, i - 1 - inner_start);
      return U.embed_base(parse_element(inner, U.A));
    }
    for (int g = 0; g < U.rank(); ++g)
      if (U.L.basis[g] == word) return U.gen(g);
    throw parse_error("unknown NC atom '" + word + "'", start);
  }
};

}  // namespace

NCElement parse_nc(const std::string& text, const Envelope& U) {
  NCParser p(text, U);
  return p.parse();
}

}  // namespace algd
