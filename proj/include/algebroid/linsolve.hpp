#ifndef ALGEBROID_LINSOLVE_HPP
#define ALGEBROID_LINSOLVE_HPP

#include <string>
#include <vector>

#include "algebroid/algebra.hpp"

namespace algd {

/// Homogeneous linear system over a coefficient algebra A.
struct LinearSystem {
  AlgebraPtr ring;
  int n_unknowns = 0;
  std::vector<std::vector<RingElement>> rows;  // dense, length n_unknowns
  std::vector<std::string> row_labels;
};

/// Solution of a triangular system: every unknown expressed as an A-linear
/// combination of the free unknowns.
struct TriangularSolution {
  std::vector<int> free_unknowns;                    // ascending
  std::vector<std::vector<RingElement>> expression;  // [unknown][free slot]
  int rank() const { return static_cast<int>(free_unknowns.size()); }
};

/// Eliminate unknowns one row at a time.  A row may (after substituting what
/// is already known) eliminate at most one unknown, and that unknown's
/// coefficient must be invertible in A; otherwise the system is reported as
/// non-triangular.  Over the trivial algebra this degenerates to Gaussian
/// elimination.
TriangularSolution solve_triangular(const LinearSystem& sys);

}  // namespace algd

#endif
