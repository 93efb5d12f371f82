#include "octa/special.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace octa {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kZeta2 = kPi * kPi / 6.0;

// B_{2k} / (2k+1)! for k = 1..
constexpr std::array<double, 20> kBernoulliOverFact = {
    0.027777777777777776,
    -0.0002777777777777778,
    4.72411186696901e-06,
    -9.185773074661964e-08,
    1.8978869988971e-09,
    -4.0647616451442256e-11,
    8.921691020456452e-13,
    -1.9939295860721074e-14,
    4.518980029619918e-16,
    -1.0356517612181247e-17,
    2.395218621026187e-19,
    -5.581785874325009e-21,
    1.3091507554183213e-22,
    -3.0874198024267403e-24,
    7.315975652702203e-26,
    -1.740845657234001e-27,
    4.1576356446139e-29,
    -9.962148488284622e-31,
    2.3940344248961652e-32,
    -5.76834735536739e-34,
};

cx li2_series(cx z) {
    // |z| <= 1/2
    cx term = z, sum = 0;
    for (int k = 1; k < 200; ++k) {
        cx add = term / static_cast<double>(k * k);
        sum += add;
        if (std::abs(add) < 1e-18 * std::abs(sum)) break;
        term *= z;
    }
    return sum;
}

cx li2_bernoulli(cx z) {
    // |z| <= 1, Re z <= 1/2: expansion in u = -log(1-z)
    cx u = -std::log(1.0 - z);
    cx u2 = u * u;
    cx sum = u - u2 / 4.0;
    cx p = u;
    for (double c : kBernoulliOverFact) {
        p *= u2;
        cx add = c * p;
        sum += add;
        if (std::abs(add) < 1e-18 * std::abs(sum)) break;
    }
    return sum;
}

cx li2_unit_disk(cx z) {
    if (std::abs(z) <= 0.5) return li2_series(z);
    if (z.real() > 0.5) {
        // reflection
        cx w = 1.0 - z;
        return kZeta2 - std::log(z) * std::log(w) - (std::abs(w) <= 0.5 ? li2_series(w) : li2_bernoulli(w));
    }
    return li2_bernoulli(z);
}

}  // namespace

cx principal_log(cx z) {
    // std::log picks arg(-x - 0i) = -pi; normalise signed zeros first
    return std::log(cx(z.real() + 0.0, z.imag() + 0.0));
}

cx principal_sqrt(cx z) {
    cx r = std::sqrt(cx(z.real() + 0.0, z.imag() + 0.0));
    return r;
}

cx dilog(cx z) {
    z = cx(z.real() + 0.0, z.imag() + 0.0);
    if (z == cx(0.0)) return 0.0;
    if (z == cx(1.0)) return kZeta2;
    if (std::abs(z) <= 1.0) return li2_unit_disk(z);
    // inversion; z real > 1 gives Im = -pi log z, the limit from below
    cx l = principal_log(-z);
    return -kZeta2 - 0.5 * l * l - li2_unit_disk(1.0 / z);
}

double bloch_wigner(cx z) {
    if (z == cx(0.0) || z == cx(1.0)) throw Error(ErrorKind::Domain, "Bloch-Wigner function undefined at 0 and 1");
    if (z.imag() == 0.0) return 0.0;
    return dilog(z).imag() + std::log(std::abs(z)) * std::arg(1.0 - z);
}

}  // namespace octa
