#include "octa/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "octa/special.hpp"

namespace octa {

namespace {

constexpr double kPi = std::numbers::pi;
const cx kTwoPiI(0.0, 2.0 * kPi);

std::array<cx, 4> frame_values(const Diagram& d, const Assignment& a, int crossing) {
    std::array<int, 4> ids = a.mode == Mode::Z ? d.crossings.at(crossing).seg : d.corner_region.at(crossing);
    return {a[ids[0]], a[ids[1]], a[ids[2]], a[ids[3]]};
}

std::array<int, 4> frame_ids(const Diagram& d, Mode mode, int crossing) {
    return mode == Mode::Z ? d.crossings.at(crossing).seg : d.corner_region.at(crossing);
}

void require_nondegenerate(const Diagram& d, const Assignment& a) {
    if (auto v = check_nondegenerate(d, a)) throw Error(ErrorKind::NonDegeneracy, *v);
}

cx lambda_at(const Diagram& d, const Assignment& a, int c) {
    auto [A, B, C, D] = frame_values(d, a, c);
    if (a.mode == Mode::Z) return B * D * (C - A) / (A * C * (B - D));
    return (A * C - B * D) / ((A - D) * (C - B));
}

cx lambda_prime_at(const Diagram& d, const Assignment& a, int c) {
    auto [A, B, C, D] = frame_values(d, a, c);
    if (a.mode == Mode::Z) return (B - D) / (C - A);
    return (A * C - B * D) / ((A - B) * (C - D));
}

double reduce_cs(double x) {
    const double p2 = kPi * kPi;
    double r = std::fmod(x, p2);
    if (r <= -p2 / 2) r += p2;
    if (r > p2 / 2) r -= p2;
    return r;
}

}  // namespace

ProjMat2 ProjMat2::inverse() const {
    cx dt = det();
    return {{m[3] / dt, -m[1] / dt, -m[2] / dt, m[0] / dt}};
}

ProjMat2 ProjMat2::normalized() const {
    cx r = principal_sqrt(det());
    ProjMat2 out;
    for (int k = 0; k < 4; ++k) out.m[k] = m[k] / r;
    for (int k = 0; k < 4; ++k) {
        if (out.m[k] == cx(0.0)) continue;
        double arg = std::arg(out.m[k]);
        if (!(arg > -kPi / 2 && arg <= kPi / 2))
            for (cx& v : out.m) v = -v;
        break;
    }
    for (cx& v : out.m) v = cx(v.real() + 0.0, v.imag() + 0.0);
    return out;
}

ProjMat2 operator*(const ProjMat2& x, const ProjMat2& y) {
    return {{x.m[0] * y.m[0] + x.m[1] * y.m[2], x.m[0] * y.m[1] + x.m[1] * y.m[3],
             x.m[2] * y.m[0] + x.m[3] * y.m[2], x.m[2] * y.m[1] + x.m[3] * y.m[3]}};
}

double sign_distance(const ProjMat2& x, const ProjMat2& y) {
    double plus = 0, minus = 0, scale = 1;
    for (int k = 0; k < 4; ++k) {
        plus = std::max(plus, std::abs(x.m[k] - y.m[k]));
        minus = std::max(minus, std::abs(x.m[k] + y.m[k]));
        scale = std::max(scale, std::abs(y.m[k]));
    }
    return std::min(plus, minus) / scale;
}

int obstruction_class(const Diagram& d, const Assignment& a) {
    cx prod = 1.0;
    for (cx s : sigmas(d, a)) prod *= s;
    double to_plus = std::abs(prod - 1.0), to_minus = std::abs(prod + 1.0);
    if (std::min(to_plus, to_minus) > 1e-6)
        throw Error(ErrorKind::Verification, "not on gluing variety: product of sigma values is (" +
                                                 std::to_string(prod.real()) + ", " + std::to_string(prod.imag()) + ")");
    return to_plus < to_minus ? 1 : -1;
}

CuspResult cusp_shape(const Diagram& d, const Assignment& a, int start) {
    require_nondegenerate(d, a);
    CuspResult r;
    for (int c : under_pass_order(d, start).crossings) {
        r.lambda.push_back(lambda_at(d, a, c));
        r.lambda_prime.push_back(lambda_prime_at(d, a, c));
        r.lambda_sum += r.lambda.back();
        r.lambda_prime_sum += r.lambda_prime.back();
    }
    r.shape = r.lambda_sum - static_cast<double>(d.writhe);
    double scale = 1.0;
    for (std::size_t i = 0; i < r.lambda.size(); ++i)
        scale = std::max({scale, std::abs(r.lambda[i]), std::abs(r.lambda_prime[i])});
    if (!(std::abs(r.lambda_sum - r.lambda_prime_sum) < 1e-9 * scale))
        throw Error(ErrorKind::Verification, "cusp shape from lambda and lambda' disagree");
    return r;
}

Peripheral peripheral_holonomy(const Diagram& d, const Assignment& a, int start) {
    CuspResult c = cusp_shape(d, a, start);
    return {ProjMat2::upper(1.0), ProjMat2::upper(c.lambda_sum)};
}

ProjMat2 crossing_matrix(const Diagram& d, const Assignment& a, int crossing) {
    auto [A, B, C, D] = frame_values(d, a, crossing);
    if (a.mode == Mode::Z) {
        cx s = A / C;
        return {{s, B * D * (C - A) / (C * C * (B - D)), (A - C) * (B - D) / (B * D), 2.0 - s}};
    }
    cx s = (A - D) / (B - C);
    cx S = A - B + C - D;
    return {{s, (B * D - A * C) / ((B - C) * (B - C)), S * S / (A * C - B * D), 2.0 - s}};
}

WirtingerResult wirtinger_matrices(const Diagram& d, const Assignment& a, int start) {
    require_nondegenerate(d, a);
    WirtingerResult w;
    w.order = under_pass_order(d, start);
    ProjMat2 P = ProjMat2::identity();
    cx partial = 0;
    for (int c : w.order.crossings) {
        partial += lambda_at(d, a, c);
        ProjMat2 M = crossing_matrix(d, a, c);
        ProjMat2 T = ProjMat2::upper(partial);
        ProjMat2 X = P.inverse() * T * M * T.inverse() * P;
        w.M.push_back(M);
        w.mu_e.push_back(X);
        w.mu.push_back(d.crossings[c].sign > 0 ? X : X.inverse());
        P = P * X;
    }
    w.longitude_word = P;
    return w;
}

WirtingerReport verify_wirtinger(const Diagram& d, const UnderPassOrder& order, const std::vector<ProjMat2>& mats) {
    const int n = d.n();
    WirtingerReport rep;
    if (static_cast<int>(mats.size()) != n) throw Error(ErrorKind::Config, "one matrix per crossing expected");
    auto fail = [&](const std::string& what) {
        rep.ok = false;
        rep.failures.push_back(what);
    };

    std::vector<ProjMat2> gen(n + 1);
    std::vector<bool> known(n + 1, false);
    for (int i = 0; i < n; ++i) {
        int arc = order.over_arc[i];
        if (!known[arc]) {
            gen[arc] = mats[i];
            known[arc] = true;
        } else if (double e = sign_distance(mats[i], gen[arc]); e > 1e-8) {
            fail("generators of arc " + std::to_string(arc) + " disagree at crossing " +
                 std::to_string(order.crossings[i] + 1));
        }
    }
    auto conj = [&](int i, const ProjMat2& x) {
        const ProjMat2& o = gen[order.over_arc[i]];
        return d.crossings[order.crossings[i]].sign > 0 ? o.inverse() * x * o : o * x * o.inverse();
    };
    // arcs that are never over-passed get their generator from the relations
    for (int sweep = 0; sweep < n; ++sweep)
        for (int i = 0; i < n; ++i) {
            int before = order.arcs[(i + n - 1) % n], after = order.arcs[i];
            if (known[before] && known[order.over_arc[i]] && !known[after]) {
                gen[after] = conj(i, gen[before]);
                known[after] = true;
            }
        }
    for (int arc = 1; arc <= n; ++arc)
        if (!known[arc]) fail("no generator determined for arc " + std::to_string(arc));
    if (!rep.ok) return rep;

    rep.trivial = true;
    for (int arc = 1; arc <= n; ++arc) {
        const ProjMat2& g = gen[arc];
        double t = std::min(std::abs(g.trace() - 2.0), std::abs(g.trace() + 2.0));
        rep.max_trace_error = std::max(rep.max_trace_error, t);
        if (t > 1e-8) fail("generator of arc " + std::to_string(arc) + " is not parabolic");
        if (sign_distance(g, ProjMat2::identity()) > 1e-8) rep.trivial = false;
    }
    for (int i = 0; i < n; ++i) {
        int before = order.arcs[(i + n - 1) % n], after = order.arcs[i];
        double e = sign_distance(conj(i, gen[before]), gen[after]);
        rep.max_relation_error = std::max(rep.max_relation_error, e);
        if (e > 1e-8) fail("Wirtinger relation fails at crossing " + std::to_string(order.crossings[i] + 1));
    }
    return rep;
}

cx potential(const Diagram& d, const Assignment& a, std::vector<cx>* derivs) {
    require_nondegenerate(d, a);
    std::vector<cx> dv(a.values.size(), cx(0));
    cx total = 0;
    // s * Li2(prod x_k^e_k)
    auto li2 = [&](double s, std::initializer_list<std::pair<int, int>> mono) {
        cx u = 1.0;
        for (auto [id, e] : mono) u *= e > 0 ? a[id] : 1.0 / a[id];
        total += s * dilog(u);
        cx l = principal_log(1.0 - u);
        for (auto [id, e] : mono) dv[id - 1] -= s * static_cast<double>(e) * l;
    };
    for (int c = 0; c < d.n(); ++c) {
        auto [A, B, C, D] = frame_ids(d, a.mode, c);
        if (a.mode == Mode::Z) {
            li2(1, {{C, 1}, {B, -1}});
            li2(-1, {{C, 1}, {D, -1}});
            li2(1, {{A, 1}, {D, -1}});
            li2(-1, {{A, 1}, {B, -1}});
        } else if (d.crossings[c].sign > 0) {
            li2(-1, {{D, 1}, {A, -1}});
            li2(-1, {{D, 1}, {C, -1}});
            li2(1, {{B, 1}, {D, 1}, {A, -1}, {C, -1}});
            li2(1, {{A, 1}, {B, -1}});
            li2(1, {{C, 1}, {B, -1}});
            cx l1 = principal_log(a[A] / a[B]), l2 = principal_log(a[C] / a[B]);
            total += -kPi * kPi / 6 + l1 * l2;
            dv[A - 1] += l2;
            dv[C - 1] += l1;
            dv[B - 1] -= l1 + l2;
        } else {
            li2(1, {{A, 1}, {B, -1}});
            li2(1, {{A, 1}, {D, -1}});
            li2(-1, {{A, 1}, {C, 1}, {B, -1}, {D, -1}});
            li2(-1, {{B, 1}, {C, -1}});
            li2(-1, {{D, 1}, {C, -1}});
            cx l1 = principal_log(a[B] / a[C]), l2 = principal_log(a[D] / a[C]);
            total += kPi * kPi / 6 - l1 * l2;
            dv[B - 1] -= l2;
            dv[D - 1] -= l1;
            dv[C - 1] += l1 + l2;
        }
    }
    if (derivs) *derivs = dv;
    return total;
}

VolumeResult complex_volume(const Diagram& d, const Assignment& a) {
    VolumeResult r;
    std::vector<cx> dv;
    r.potential = potential(d, a, &dv);
    r.v0 = r.potential;
    for (std::size_t v = 0; v < dv.size(); ++v) {
        cx k = dv[v] / kTwoPiI;
        double nearest = std::round(k.real());
        double err = std::abs(k - nearest);
        r.max_lattice_error = std::max(r.max_lattice_error, err);
        if (err > 1e-8)
            throw Error(ErrorKind::Verification, "not a gluing-variety point or branch failure: correction term of variable " +
                                                     std::to_string(v + 1) + " is off the 2 pi i lattice");
        r.lattice.push_back(static_cast<long long>(nearest));
        r.v0 -= kTwoPiI * nearest * principal_log(a.values[v]);
    }
    r.vol = r.v0.imag();
    r.cs = reduce_cs(-r.v0.real());
    return r;
}

OracleResult tetra_volume_oracle(const Diagram& d, const Assignment& a) {
    require_nondegenerate(d, a);
    OracleResult r;
    const auto& tets = a.mode == Mode::Z ? t4_tetrahedra() : t5_tetrahedra();
    int real_shapes = 0;
    for (int c = 0; c < d.n(); ++c) {
        auto col = decoration_columns(d, a, 1.0, c);
        for (std::size_t t = 0; t < tets.size(); ++t) {
            ++r.tetrahedra;
            cx z = cross_ratio(col, tets[t]);
            bool finite = std::isfinite(z.real()) && std::isfinite(z.imag());
            if (!finite || std::abs(z) < 1e-14 || std::abs(z - 1.0) < 1e-14 || std::abs(z) > 1e14) {
                ++r.flat;
                r.warnings.push_back("degenerate tetrahedron " + std::to_string(t + 1) + " at crossing " +
                                     std::to_string(c + 1) + " excluded");
                continue;
            }
            if (std::abs(z.imag()) <= 1e-12 * std::abs(z)) {
                ++r.flat;
                ++real_shapes;
                continue;
            }
            r.volume += bloch_wigner(z);
        }
    }
    if (real_shapes)
        r.warnings.push_back(std::to_string(real_shapes) + " flat tetrahedra with real shape contribute 0");
    return r;
}

InvariantReport compute_invariants(const Diagram& d, const Assignment& a, int start, double verify_tol) {
    InvariantReport rep;
    rep.mode = a.mode;
    GluingSystem sys = build_system(d, a.mode);
    rep.max_residual = max_norm(residuals(sys, a));
    if (!(rep.max_residual < verify_tol))
        throw Error(ErrorKind::Verification, "assignment is not a solution: max residual " +
                                                 std::to_string(rep.max_residual));
    rep.obstruction = obstruction_class(d, a);
    rep.order = under_pass_order(d, start).crossings;
    for (int c : rep.order) rep.sigma.push_back(sigma_at_crossing(d, a, c));
    rep.cusp = cusp_shape(d, a, start);
    rep.wirtinger = wirtinger_matrices(d, a, start);
    rep.wirtinger_check = verify_wirtinger(d, rep.wirtinger.order, rep.wirtinger.mu);
    rep.volume = complex_volume(d, a);
    rep.oracle = tetra_volume_oracle(d, a);
    rep.volume_agrees = std::abs(rep.volume.vol - rep.oracle.volume) < 1e-6;
    return rep;
}

}  // namespace octa
