#include "crg/matrix.hpp"

namespace crg {

RationalMatrix evaluate(const ParamMatrix& m, const Rational& m0) {
  std::vector<Rational> out;
  out.reserve(m.entries().size());
  for (const auto& p : m.entries()) out.push_back(p(m0));
  return RationalMatrix(m.rows(), m.cols(), std::move(out));
}

}  // namespace crg
