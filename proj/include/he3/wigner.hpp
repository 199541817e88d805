#pragma once

#include "he3/halfint.hpp"

namespace he3 {

/// Wigner 6j symbol {j1 j2 j3; j4 j5 j6} by the Racah sum with exact integer
/// factorial arithmetic, converted to double at the boundary.
/// Triads violating a triangle condition give 0; negative j is a domain error.
double wigner6j(HalfInt j1, HalfInt j2, HalfInt j3,
                HalfInt j4, HalfInt j5, HalfInt j6);

/// Clebsch-Gordan coefficient <j1 m1 j2 m2 | J M>, exact-rational Racah sum.
double clebsch_gordan(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2,
                      HalfInt J, HalfInt M);

} // namespace he3
