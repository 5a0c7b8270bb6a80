#pragma once

#include <utility>
#include <vector>

#include "crg/matrix.hpp"
#include "crg/param_poly.hpp"

namespace crg {

// det(M - m I); Berkowitz up to dimension 64, Krylov route beyond.
ParamPoly char_poly(const RationalMatrix& m);
ParamPoly char_poly_berkowitz(const RationalMatrix& m);

struct RootFactorization {
  int sign = 1;
  // (root, multiplicity), roots in decreasing order.
  std::vector<std::pair<long, int>> factors;
  // Positive leading coefficient, no integer roots.
  ParamPoly remainder;

  ParamPoly expand() const;
};

RootFactorization integer_roots(const ParamPoly& p);

}  // namespace crg
