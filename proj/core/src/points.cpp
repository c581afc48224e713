// SPDX-License-Identifier: MIT
#include "rotset/points.hpp"

namespace rotset {

LatticePoint make_lattice_point(const RhoParam& rho, std::int64_t m,
                                std::int64_t n, int sign_x, int sign_y) {
  if ((sign_x != 1 && sign_x != -1) || (sign_y != 1 && sign_y != -1))
    throw DomainError("quadrant signs must be +1 or -1");
  LatticePoint pt;
  pt.m = m;
  pt.n = n;
  pt.sign_x = sign_x;
  pt.sign_y = sign_y;
  Int den(m + n + 1);
  pt.x = make_rat(sign_x * ceil_mul(rho, m), den);
  pt.y = make_rat(sign_y * ceil_mul(rho, n), den);
  return pt;
}

}  // namespace rotset
