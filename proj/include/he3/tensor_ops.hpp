#pragma once

#include <complex>
#include <map>
#include <utility>

#include <Eigen/Dense>

#include "he3/halfint.hpp"

namespace he3 {

using ComplexMatrix = Eigen::MatrixXcd;

/// Spin matrices and normalized irreducible tensor operators t^l_m for one
/// F manifold, basis ordered by increasing m. Tr[t^l_m (t^l_m)+] = 1 and
/// (t^l_m)+ = (-1)^m t^l_{-m}.
struct TensorOperatorSet {
    HalfInt F;
    ComplexMatrix Fx, Fy, Fz, Fplus, Fminus;
    std::map<std::pair<int, int>, ComplexMatrix> t;    // (l, m), l = 0..2F
    std::map<std::pair<int, int>, ComplexMatrix> rt;   // Re t^l_m, m >= 1
    std::map<std::pair<int, int>, ComplexMatrix> it;   // Im t^l_m, m >= 1
    std::map<std::pair<int, int>, double> norm;        // signed n^l_m

    int dim() const { return F.twice + 1; }
    int max_rank() const { return F.twice; }
};

/// Supported manifolds: F = 1/2 and F = 3/2.
TensorOperatorSet build_tensor_ops(HalfInt F);

using TensorKey = std::pair<int, int>;                       // (l, m)
using TensorExpansion = std::map<TensorKey, std::complex<double>>;

/// Decompose [t^l1_m1, t^l2_m2] numerically in the t^L_M basis.
TensorExpansion commutator_in_basis(const TensorOperatorSet& set,
                                    TensorKey lhs, TensorKey rhs);

/// Closed-form expansion of the same commutator via 6j + Clebsch-Gordan.
TensorExpansion commutator_closed_form(HalfInt F, TensorKey lhs, TensorKey rhs);

/// All pairwise commutator expansions of the stored t^l_m.
std::map<std::pair<TensorKey, TensorKey>, TensorExpansion>
commutator_table(const TensorOperatorSet& set);

} // namespace he3
