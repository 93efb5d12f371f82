#pragma once

#include <array>
#include <string>
#include <vector>

#include "octa/ptolemy.hpp"

namespace octa {

struct ProjMat2 {
    std::array<cx, 4> m{1.0, 0.0, 0.0, 1.0};  // row major

    static ProjMat2 identity() { return {}; }
    static ProjMat2 upper(cx x) { return {{1.0, x, 0.0, 1.0}}; }
    cx det() const { return m[0] * m[3] - m[1] * m[2]; }
    cx trace() const { return m[0] + m[3]; }
    ProjMat2 inverse() const;  // adjugate divided by det
    ProjMat2 normalized() const;
};

ProjMat2 operator*(const ProjMat2& x, const ProjMat2& y);
// max entry distance to +y or -y, whichever is smaller, relative to max(1, |y|)
double sign_distance(const ProjMat2& x, const ProjMat2& y);

int obstruction_class(const Diagram& d, const Assignment& a);

struct CuspResult {
    std::vector<cx> lambda;        // in under-pass order c_1..c_n
    std::vector<cx> lambda_prime;
    cx lambda_sum;
    cx lambda_prime_sum;
    cx shape;
};

CuspResult cusp_shape(const Diagram& d, const Assignment& a, int start = -1);

struct Peripheral {
    ProjMat2 meridian;
    ProjMat2 longitude;
};

Peripheral peripheral_holonomy(const Diagram& d, const Assignment& a, int start = -1);

struct WirtingerResult {
    UnderPassOrder order;
    std::vector<ProjMat2> M;     // M(c_i)
    std::vector<ProjMat2> mu_e;  // rho(mu_i^{e_i})
    std::vector<ProjMat2> mu;    // rho(mu_i)
    ProjMat2 longitude_word;     // product of mu_i^{e_i}
};

ProjMat2 crossing_matrix(const Diagram& d, const Assignment& a, int crossing);
WirtingerResult wirtinger_matrices(const Diagram& d, const Assignment& a, int start = -1);

struct WirtingerReport {
    bool ok = true;
    bool trivial = false;  // every generator is +-identity
    std::vector<std::string> failures;
    double max_relation_error = 0;
    double max_trace_error = 0;
};

// mats[i] = rho(mu_i) for the crossing c_i of the given order
WirtingerReport verify_wirtinger(const Diagram& d, const UnderPassOrder& order, const std::vector<ProjMat2>& mats);

struct VolumeResult {
    cx potential;
    cx v0;
    double vol = 0;
    double cs = 0;
    std::vector<long long> lattice;  // x dV/dx / (2 pi i), per variable
    double max_lattice_error = 0;
};

// potential and its analytic x d/dx derivatives (no lattice check)
cx potential(const Diagram& d, const Assignment& a, std::vector<cx>* derivs = nullptr);
VolumeResult complex_volume(const Diagram& d, const Assignment& a);

struct OracleResult {
    double volume = 0;
    int tetrahedra = 0;
    int flat = 0;
    std::vector<std::string> warnings;
};

OracleResult tetra_volume_oracle(const Diagram& d, const Assignment& a);

struct InvariantReport {
    Mode mode = Mode::Z;
    int obstruction = 0;
    std::vector<int> order;          // crossing indices c_1..c_n
    std::vector<cx> sigma;           // in under-pass order
    CuspResult cusp;
    WirtingerResult wirtinger;
    WirtingerReport wirtinger_check;
    VolumeResult volume;
    OracleResult oracle;
    double max_residual = 0;
    bool volume_agrees = false;
};

InvariantReport compute_invariants(const Diagram& d, const Assignment& a, int start = -1, double verify_tol = 1e-9);

}  // namespace octa
