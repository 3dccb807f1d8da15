#ifndef ALGEBROID_ENVELOPING_HPP
#define ALGEBROID_ENVELOPING_HPP

#include <functional>
#include <map>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "algebroid/lie_rinehart.hpp"

namespace algd {

/// PBW word: nondecreasing sequence of basis indices.
using Word = std::vector<int>;

class Envelope;

/// Element of V_A(L) in PBW normal form: words with A-coefficients gathered
/// on the right.
class NCElement {
 public:
  std::map<Word, RingElement> terms;

  bool is_zero() const { return terms.empty(); }
  void add(const Word& w, const RingElement& c);
  NCElement operator+(const NCElement& o) const;
  NCElement operator-(const NCElement& o) const;
  NCElement scaled(const RingElement& c) const;
  bool operator==(const NCElement& o) const { return terms == o.terms; }
  bool operator!=(const NCElement& o) const { return !(*this == o); }
  unsigned degree() const;
  std::string str(const Envelope& U) const;
};

/// Element of the left-leg/right-leg model of V (x)_A V; the balancing
/// relation moves all A-coefficients to the right of the right leg.
class TensorNC {
 public:
  std::map<std::pair<Word, Word>, RingElement> terms;
  void add(const Word& l, const Word& r, const RingElement& c);
  TensorNC operator+(const TensorNC& o) const;
  TensorNC operator-(const TensorNC& o) const;
  bool operator==(const TensorNC& o) const { return terms == o.terms; }
  bool operator!=(const TensorNC& o) const { return !(*this == o); }
  bool is_zero() const { return terms.empty(); }
  std::string str(const Envelope& U) const;
};

class TripleNC {
 public:
  std::map<std::tuple<Word, Word, Word>, RingElement> terms;
  void add(const Word& a, const Word& b, const Word& c, const RingElement& q);
  bool operator==(const TripleNC& o) const { return terms == o.terms; }
  bool operator!=(const TripleNC& o) const { return !(*this == o); }
};

/// Atom of a raw noncommutative expression: a generator or an A-coefficient.
struct NCAtom {
  int gen = -1;        // basis index when >= 0
  RingElement coeff;   // used when gen < 0
  static NCAtom generator(int g) { return {g, RingElement()}; }
  static NCAtom base(RingElement c) { return {-1, std::move(c)}; }
};
using RawWord = std::vector<NCAtom>;

/// The universal enveloping Hopf algebroid V_A(L): PBW rewriting with the
/// commutator rule e_j e_i -> e_i e_j + [e_j, e_i] and the transposition rule
/// a e_i -> e_i a - w(e_i)(a), plus the cocommutative structure maps.
class Envelope {
 public:
  LieRinehart L;
  AlgebraPtr A;
  std::string name;

  int rank() const { return L.rank(); }

  /// Picks which reducible position to rewrite next; argument is the number
  /// of current candidates.  Default: leftmost.
  using Strategy = std::function<size_t(size_t)>;

  NCElement normalize_raw(const std::vector<std::pair<RawWord, Rational>>& raw,
                          const Strategy& strategy = {}) const;
  NCElement normalize_word(const RawWord& w, const Strategy& strategy = {}) const;

  NCElement one() const;
  NCElement gen(int i) const;
  NCElement embed_base(const RingElement& a) const;
  NCElement mul(const NCElement& x, const NCElement& y) const;

  RingElement counit(const NCElement& u) const;
  TensorNC delta(const NCElement& u) const;
  TensorNC delta_word(const Word& w, const RingElement& c) const;
  TensorNC translation(const NCElement& u) const;
  TensorNC translation_word(const Word& w, const RingElement& c) const;

  TensorNC tensor_mul(const TensorNC& x, const TensorNC& y) const;
  /// the translation composition law: result legs (Ly Lx) and (Rx Ry)
  TensorNC sandwich(const TensorNC& x, const TensorNC& y) const;
  TensorNC flip(const TensorNC& x) const;
  TensorNC tensor(const NCElement& x, const NCElement& y) const;
  /// left-multiplication of a base element into one leg
  TensorNC act_left_leg(const RingElement& a, const TensorNC& x) const;
  TensorNC act_right_leg(const RingElement& a, const TensorNC& x) const;
  TensorNC act_right_leg_from_right(const TensorNC& x, const RingElement& a) const;
  bool takeuchi_member(const TensorNC& x) const;

  TripleNC canonical_triple(const RawWord& a, const RawWord& b, const RawWord& c,
                            const Rational& q) const;
  RawWord word_atoms(const Word& w, const RingElement& c) const;
};

Envelope build_enveloping(const LieRinehart& L, std::string name = "");

/// conversion helper for raw expressions
NCElement pbw_normalize(const Envelope& U, const std::vector<std::pair<RawWord, Rational>>& raw);

/// `iA(expr)` and basis names joined with '.', '+'/'-' and '^' supported.
NCElement parse_nc(const std::string& text, const Envelope& U);

/// All PBW words of degree <= maxdeg in nondecreasing order.
std::vector<Word> pbw_words(int rank, int maxdeg);

/// Basis of the solutions of Delta(u) = u (x) 1 + 1 (x) u, eps(u) = 0 over
/// words of degree <= max_degree.
std::vector<NCElement> primitives(const Envelope& U, int max_degree);

/// Lie-Rinehart structure carried by a set of primitives: anchor
/// w(p)(a) = -eps(iA(a) p), bracket the commutator.
LieRinehart primitive_lie_rinehart(const Envelope& U, const std::vector<NCElement>& prims);

/// beta1..beta9, counit, coassociativity, cocommutativity, double-counit and
/// Takeuchi membership on the given samples.
AxiomReport check_cocomm_identities(const Envelope& U, const std::vector<NCElement>& samples);

}  // namespace algd

#endif
