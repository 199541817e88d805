#include "he3/wigner.hpp"

#include <cmath>
#include <numeric>

namespace he3 {
namespace {

// Small exact rational on long long; arguments here keep everything tiny,
// but intermediates go through __int128 before reduction.
struct Rat {
    long long num = 0, den = 1;

    static Rat of(long long n, long long d = 1) {
        Rat r{n, d};
        r.normalize();
        return r;
    }
    void normalize() {
        if (den < 0) { num = -num; den = -den; }
        long long g = std::gcd(std::abs(num), den);
        if (g > 1) { num /= g; den /= g; }
        if (num == 0) den = 1;
    }
    static Rat from128(__int128 n, __int128 d) {
        if (d < 0) { n = -n; d = -d; }
        __int128 a = n < 0 ? -n : n;
        __int128 b = d;
        while (b) { __int128 t = a % b; a = b; b = t; }
        if (a == 0) a = 1;
        n /= a; d /= a;
        return Rat{static_cast<long long>(n), static_cast<long long>(d)};
    }
    friend Rat operator*(Rat a, Rat b) {
        return from128(static_cast<__int128>(a.num) * b.num,
                       static_cast<__int128>(a.den) * b.den);
    }
    friend Rat operator/(Rat a, Rat b) {
        return from128(static_cast<__int128>(a.num) * b.den,
                       static_cast<__int128>(a.den) * b.num);
    }
    friend Rat operator+(Rat a, Rat b) {
        return from128(static_cast<__int128>(a.num) * b.den + static_cast<__int128>(b.num) * a.den,
                       static_cast<__int128>(a.den) * b.den);
    }
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

Rat factorial(int n) {
    Rat r = Rat::of(1);
    for (int k = 2; k <= n; ++k) r = r * Rat::of(k);
    return r;
}

// (a+b-c)! (a-b+c)! (-a+b+c)! / (a+b+c+1)!   with HalfInt args (integer sums).
Rat triangle_delta(HalfInt a, HalfInt b, HalfInt c) {
    const int p = (a.twice + b.twice - c.twice) / 2;
    const int q = (a.twice - b.twice + c.twice) / 2;
    const int r = (-a.twice + b.twice + c.twice) / 2;
    const int s = (a.twice + b.twice + c.twice) / 2 + 1;
    return factorial(p) * factorial(q) * factorial(r) / factorial(s);
}

int as_int(HalfInt a, HalfInt b, int sign_b) {
    const int t = a.twice + sign_b * b.twice;
    if (t % 2 != 0) throw std::domain_error("wigner: non-integer factorial argument");
    return t / 2;
}

} // namespace

double wigner6j(HalfInt j1, HalfInt j2, HalfInt j3,
                HalfInt j4, HalfInt j5, HalfInt j6) {
    for (HalfInt j : {j1, j2, j3, j4, j5, j6})
        if (j.twice < 0) throw std::domain_error("wigner6j: negative angular momentum");
    if (!triangle_ok(j1, j2, j3) || !triangle_ok(j1, j5, j6) ||
        !triangle_ok(j4, j2, j6) || !triangle_ok(j4, j5, j3))
        return 0.0;

    const Rat radicand = triangle_delta(j1, j2, j3) * triangle_delta(j1, j5, j6) *
                         triangle_delta(j4, j2, j6) * triangle_delta(j4, j5, j3);

    const int s123 = (j1.twice + j2.twice + j3.twice) / 2;
    const int s156 = (j1.twice + j5.twice + j6.twice) / 2;
    const int s426 = (j4.twice + j2.twice + j6.twice) / 2;
    const int s453 = (j4.twice + j5.twice + j3.twice) / 2;
    const int s1245 = (j1.twice + j2.twice + j4.twice + j5.twice) / 2;
    const int s2356 = (j2.twice + j3.twice + j5.twice + j6.twice) / 2;
    const int s3164 = (j3.twice + j1.twice + j6.twice + j4.twice) / 2;

    const int tmin = std::max({s123, s156, s426, s453});
    const int tmax = std::min({s1245, s2356, s3164});

    Rat sum = Rat::of(0);
    for (int t = tmin; t <= tmax; ++t) {
        Rat term = factorial(t + 1) /
                   (factorial(t - s123) * factorial(t - s156) * factorial(t - s426) *
                    factorial(t - s453) * factorial(s1245 - t) * factorial(s2356 - t) *
                    factorial(s3164 - t));
        if (t % 2 != 0) term = term * Rat::of(-1);
        sum = sum + term;
    }
    return std::sqrt(radicand.value()) * sum.value();
}

double clebsch_gordan(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2,
                      HalfInt J, HalfInt M) {
    if (m1.twice + m2.twice != M.twice) return 0.0;
    if (!triangle_ok(j1, j2, J)) return 0.0;
    if (abs(m1) > j1 || abs(m2) > j2 || abs(M) > J) return 0.0;

    const Rat radicand = Rat::of(J.twice + 1) * triangle_delta(j1, j2, J) *
                         factorial(as_int(J, M, +1)) * factorial(as_int(J, M, -1)) *
                         factorial(as_int(j1, m1, +1)) * factorial(as_int(j1, m1, -1)) *
                         factorial(as_int(j2, m2, +1)) * factorial(as_int(j2, m2, -1));

    const int a1 = (j1.twice + j2.twice - J.twice) / 2;   // j1+j2-J
    const int a2 = as_int(j1, m1, -1);                     // j1-m1
    const int a3 = as_int(j2, m2, +1);                     // j2+m2
    const int a4 = (J.twice - j2.twice + m1.twice) / 2;    // J-j2+m1
    const int a5 = (J.twice - j1.twice - m2.twice) / 2;    // J-j1-m2

    const int tmin = std::max({0, -a4, -a5});
    const int tmax = std::min({a1, a2, a3});

    Rat sum = Rat::of(0);
    for (int t = tmin; t <= tmax; ++t) {
        Rat term = Rat::of(1) / (factorial(t) * factorial(a1 - t) * factorial(a2 - t) *
                                 factorial(a3 - t) * factorial(a4 + t) * factorial(a5 + t));
        if (t % 2 != 0) term = term * Rat::of(-1);
        sum = sum + term;
    }
    return std::sqrt(radicand.value()) * sum.value();
}

} // namespace he3
