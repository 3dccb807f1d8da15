#ifndef ALGEBROID_CATALOG_HPP
#define ALGEBROID_CATALOG_HPP

#include <string>
#include <vector>

#include "algebroid/differentiation.hpp"
#include "algebroid/finite_dual.hpp"

namespace algd {

/// Constructors for the worked examples; every object passes its verifier.
namespace catalog {

AlgebraPtr base_QX();  // Q[X]

HopfPtr pair_groupoid(AlgebraPtr A = nullptr);
HopfPtr split_example(AlgebraPtr A = nullptr);  // (A, A (x) Q[g,ginv] (x) A)
/// Jet-type algebroid truncated at y_r; the antipode is solved from the
/// axioms unless with_antipode is false.
HopfPtr malgrange(int r, bool with_antipode = true, AlgebraPtr A = nullptr);
HopfPtr malgrange_quotient(AlgebraPtr A = nullptr);  // the y_n = 0 (n >= 2) quotient
HopfPtr laurent_hopf_algebra();                      // Q[g, ginv] over the trivial base
HopfPtr gl2_hopf_algebra();                          // O(GL_2) over the trivial base
SplitAlgebroid gl2_plane();

FiniteCocomm group_algebra(int n);  // Q C_n

LieRinehart weyl_lr(AlgebraPtr A = nullptr);
LieRinehart quotient_lr(AlgebraPtr A = nullptr);

HopfMorphism malgrange_inclusion(int r1, int r2);  // H_{r1} -> H_{r2}
HopfMorphism malgrange_projection(int r);          // H_r -> H_r/(y_n, n>=2)
HopfMorphism unit_counit(const HopfPtr& H);        // s o eps
HopfMorphism identity_morphism(const HopfPtr& H);

}  // namespace catalog

/// CLI-facing registry: "malgrange:3", "group_algebra:4", "pair_groupoid", ...
struct ExampleObject {
  enum class Kind { Hopf, Split, LR, Finite } kind;
  HopfPtr hopf;
  SplitAlgebroid split;
  LieRinehart lr;
  FiniteCocomm finite;
};

ExampleObject make_example(const std::string& spec);
std::vector<std::string> catalog_names();

/// "identity:<example>", "unit_counit:<example>", "inclusion:r1:r2",
/// "projection:r".
HopfMorphism make_morphism(const std::string& spec);
std::vector<std::string> morphism_names();

}  // namespace algd

#endif
