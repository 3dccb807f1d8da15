#ifndef ALGEBROID_PRESENTATION_IO_HPP
#define ALGEBROID_PRESENTATION_IO_HPP

#include <string>

#include "algebroid/hopf.hpp"

namespace algd {

/// Text presentation format: sections [base], [total], [source], [target],
/// [counit], [coproduct], [antipode] of `name = expr` lines.  [base] and
/// [total] take the keys `name`, `vars` (comma list), `inverse_pairs`
/// (comma list of v:vinv) and `relations` (comma list of expressions);
/// coproduct lines use the infix token (x) for the tensor product.
HopfPtr read_presentation(const std::string& text);
HopfPtr read_presentation_file(const std::string& path);

std::string write_presentation(const HopfPtr& H);

/// Parse a sum of simple tensors `a (x) b + ...` over the given algebra.
TensorExpr parse_tensor_expr(const std::string& text, const AlgebraPtr& total);

std::string axiom_report_to_json(const AxiomReport& rep, const std::string& subject);

}  // namespace algd

#endif
