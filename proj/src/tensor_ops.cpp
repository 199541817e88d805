#include "he3/tensor_ops.hpp"

#include "he3/wigner.hpp"

#include <cmath>

namespace he3 {
namespace {

using cd = std::complex<double>;

ComplexMatrix raw_op(int l, int m, const ComplexMatrix& Fz, const ComplexMatrix& Fp,
                     const ComplexMatrix& Fm, double f2) {
    const int d = static_cast<int>(Fz.rows());
    const ComplexMatrix I = ComplexMatrix::Identity(d, d);
    const ComplexMatrix F2 = f2 * I;
    const ComplexMatrix& L = (m >= 0) ? Fp : Fm;
    switch (l) {
        case 0: return I;
        case 1: return m == 0 ? Fz : L;
        case 2:
            if (m == 0) return 3.0 * Fz * Fz - F2;
            if (std::abs(m) == 1) return L * Fz + Fz * L;
            return L * L;
        case 3:
            if (m == 0) return (5.0 * Fz * Fz - 3.0 * F2 + I) * Fz;
            if (std::abs(m) == 1) {
                const ComplexMatrix A = 5.0 * Fz * Fz - F2 - 0.5 * I;
                return A * L + L * A;
            }
            if (std::abs(m) == 2) return L * L * Fz + L * Fz * L + Fz * L * L;
            return L * L * L;
        default:
            throw std::invalid_argument("tensor rank > 3 not implemented");
    }
}

} // namespace

TensorOperatorSet build_tensor_ops(HalfInt F) {
    if (F.twice != 1 && F.twice != 3)
        throw std::invalid_argument("build_tensor_ops: supported F are 1/2 and 3/2");
    const int d = F.twice + 1;
    const double f = F.value();

    TensorOperatorSet set;
    set.F = F;
    set.Fz = ComplexMatrix::Zero(d, d);
    set.Fplus = ComplexMatrix::Zero(d, d);
    for (int a = 0; a < d; ++a) set.Fz(a, a) = -f + a;
    for (int a = 0; a + 1 < d; ++a) {
        const double m = -f + a;
        set.Fplus(a + 1, a) = std::sqrt(f * (f + 1.0) - m * (m + 1.0));
    }
    set.Fminus = set.Fplus.adjoint();
    set.Fx = 0.5 * (set.Fplus + set.Fminus);
    set.Fy = cd(0.0, -0.5) * (set.Fplus - set.Fminus);

    const double f2 = f * (f + 1.0);
    for (int l = 0; l <= F.twice; ++l) {
        for (int m = -l; m <= l; ++m) {
            ComplexMatrix raw = raw_op(l, m, set.Fz, set.Fplus, set.Fminus, f2);
            const double norm2 = (raw * raw.adjoint()).trace().real();
            const double sign = (m > 0 && m % 2 != 0) ? -1.0 : 1.0;
            const double nf = sign / std::sqrt(norm2);
            set.norm[{l, m}] = nf;
            set.t[{l, m}] = nf * raw;
        }
        for (int m = 1; m <= l; ++m) {
            const ComplexMatrix& tm = set.t[{l, m}];
            set.rt[{l, m}] = (tm + tm.adjoint()) / std::sqrt(2.0);
            set.it[{l, m}] = (tm - tm.adjoint()) / cd(0.0, std::sqrt(2.0));
        }
    }
    return set;
}

TensorExpansion commutator_in_basis(const TensorOperatorSet& set,
                                    TensorKey lhs, TensorKey rhs) {
    const ComplexMatrix& A = set.t.at(lhs);
    const ComplexMatrix& B = set.t.at(rhs);
    const ComplexMatrix C = A * B - B * A;
    TensorExpansion out;
    for (const auto& [key, tm] : set.t) {
        const cd c = (C * tm.adjoint()).trace();
        if (std::abs(c) > 1e-14) out[key] = c;
    }
    return out;
}

TensorExpansion commutator_closed_form(HalfInt F, TensorKey lhs, TensorKey rhs) {
    const auto [l1, m1] = lhs;
    const auto [l2, m2] = rhs;
    TensorExpansion out;
    const int M = m1 + m2;
    for (int L = std::abs(l1 - l2); L <= std::min(l1 + l2, F.twice); ++L) {
        if ((l1 + l2 + L) % 2 == 0) continue;   // [1 - (-1)^(l1+l2+L)] selects odd sums
        if (std::abs(M) > L) continue;
        const double sixj = wigner6j(HalfInt::from_int(l1), HalfInt::from_int(l2),
                                     HalfInt::from_int(L), F, F, F);
        const double cg = clebsch_gordan(HalfInt::from_int(l1), HalfInt::from_int(m1),
                                         HalfInt::from_int(l2), HalfInt::from_int(m2),
                                         HalfInt::from_int(L), HalfInt::from_int(M));
        const double phase = ((L + F.twice) % 2 == 0) ? 1.0 : -1.0;
        const double c = phase * std::sqrt((2.0 * l1 + 1.0) * (2.0 * l2 + 1.0)) * sixj * cg * 2.0;
        if (std::abs(c) > 1e-15) out[{L, M}] = c;
    }
    return out;
}

std::map<std::pair<TensorKey, TensorKey>, TensorExpansion>
commutator_table(const TensorOperatorSet& set) {
    std::map<std::pair<TensorKey, TensorKey>, TensorExpansion> table;
    for (const auto& [k1, t1] : set.t)
        for (const auto& [k2, t2] : set.t)
            table[{k1, k2}] = commutator_in_basis(set, k1, k2);
    return table;
}

} // namespace he3
