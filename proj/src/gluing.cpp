#include "octa/gluing.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace octa {

namespace {

Poly var(int v) { return {{1.0, {v}}}; }
Poly diff(int u, int v) { return {{1.0, {u}}, {-1.0, {v}}}; }
// x_u x_v - x_s x_t
Poly quad(int u, int v, int s, int t) { return {{1.0, {u, v}}, {-1.0, {s, t}}}; }

void check_assignment(const GluingSystem& s, const Assignment& a) {
    if (a.mode != s.mode)
        throw Error(ErrorKind::Config, std::string("assignment mode ") + mode_name(a.mode) +
                                           " does not match system mode " + mode_name(s.mode));
    if (static_cast<int>(a.values.size()) != s.nvars)
        throw Error(ErrorKind::Config, "assignment has " + std::to_string(a.values.size()) +
                                           " values, system expects " + std::to_string(s.nvars));
    if (auto v = first_violation(s.constraints, a.values)) throw Error(ErrorKind::NonDegeneracy, *v);
}

}  // namespace

cx eval_poly(const Poly& p, const std::vector<cx>& x) {
    cx sum = 0;
    for (const Term& t : p) {
        cx prod = t.coef;
        for (int v : t.vars) prod *= x[v];
        sum += prod;
    }
    return sum;
}

cx eval_poly_derivative(const Poly& p, const std::vector<cx>& x, int v) {
    cx sum = 0;
    for (const Term& t : p)
        for (std::size_t j = 0; j < t.vars.size(); ++j) {
            if (t.vars[j] != v) continue;
            cx prod = t.coef;
            for (std::size_t k = 0; k < t.vars.size(); ++k)
                if (k != j) prod *= x[t.vars[k]];
            sum += prod;
        }
    return sum;
}

std::vector<Constraint> nondegeneracy_constraints(const Diagram& d, Mode mode) {
    std::vector<Constraint> cs;
    const char* sym = mode == Mode::Z ? "z" : "w";
    const int nv = mode == Mode::Z ? 2 * d.n() : d.n() + 2;
    for (int v = 0; v < nv; ++v)
        cs.push_back({var(v), 1, std::string(sym) + "_" + std::to_string(v + 1) + " is zero"});
    if (mode == Mode::Z) {
        std::set<std::pair<int, int>> seen;
        for (int c = 0; c < d.n(); ++c) {
            const auto& x = d.crossings[c].seg;
            for (int i = 0; i < 4; ++i)
                for (int j = i + 1; j < 4; ++j) {
                    int u = std::min(x[i], x[j]), v = std::max(x[i], x[j]);
                    std::string what = "z_" + std::to_string(u) + " = z_" + std::to_string(v) + " at crossing " +
                                       std::to_string(c + 1);
                    if (u == v) {
                        cs.push_back({Poly{}, 1, what});
                        continue;
                    }
                    if (!seen.insert({u, v}).second) continue;
                    cs.push_back({diff(u - 1, v - 1), 1, what});
                }
        }
    } else {
        for (const Segment& s : d.segments)
            cs.push_back({diff(s.left_region - 1, s.right_region - 1), 1,
                          "w_" + std::to_string(s.left_region) + " = w_" + std::to_string(s.right_region) +
                              " across segment " + std::to_string(s.id)});
        for (int c = 0; c < d.n(); ++c) {
            auto r = d.corner_region[c];
            cs.push_back({quad(r[0] - 1, r[2] - 1, r[1] - 1, r[3] - 1), 2,
                          "w_a w_c = w_b w_d at crossing " + std::to_string(c + 1)});
        }
    }
    return cs;
}

std::optional<std::string> first_violation(const std::vector<Constraint>& cs, const std::vector<cx>& x) {
    double scale = 0;
    for (const cx& v : x) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return std::string("non-finite value");
        scale = std::max(scale, std::abs(v));
    }
    for (const Constraint& c : cs)
        if (!(std::abs(eval_poly(c.base, x)) > 1e-12 * std::pow(scale, c.degree))) return c.what;
    return std::nullopt;
}

std::optional<std::string> check_nondegenerate(const Diagram& d, const Assignment& a) {
    const std::size_t nv = a.mode == Mode::Z ? 2 * d.n() : d.n() + 2;
    if (a.values.size() != nv)
        throw Error(ErrorKind::Config, "assignment has " + std::to_string(a.values.size()) + " values, expected " +
                                           std::to_string(nv));
    return first_violation(nondegeneracy_constraints(d, a.mode), a.values);
}

GluingSystem build_t4_system(const Diagram& d) {
    if (d.has_kink()) throw Error(ErrorKind::Degenerate, "T4 degenerate: diagram has a kink");
    GluingSystem s;
    s.mode = Mode::Z;
    s.nvars = 2 * d.n();
    for (const SegmentFrame& f : segment_frames(d)) {
        const int a = f.a - 1, b = f.b - 1, c = f.segment - 1, dd = f.d - 1, e = f.e - 1;
        Equation eq;
        eq.id = f.segment;
        auto& F = eq.factors;
        switch (f.kase) {
            case SegmentCase::A:
                F = {{diff(c, a), 1}, {diff(c, b), -1}, {var(dd), 1}, {diff(c, e), 1}, {var(e), -1}, {diff(c, dd), -1}};
                break;
            case SegmentCase::B:
                F = {{var(a), 1}, {diff(c, b), 1}, {var(b), -1}, {diff(c, a), -1}, {diff(c, dd), 1}, {diff(c, e), -1}};
                break;
            case SegmentCase::C:
                F = {{diff(c, a), 1}, {diff(c, b), -1}, {diff(c, e), 1}, {diff(c, dd), -1}};
                break;
            case SegmentCase::D:
                F = {{var(a), 1}, {diff(c, b), 1}, {var(b), -1}, {diff(c, a), -1},
                     {var(e), 1}, {diff(c, dd), 1}, {var(dd), -1}, {diff(c, e), -1}};
                break;
        }
        s.equations.push_back(std::move(eq));
    }
    s.constraints = nondegeneracy_constraints(d, Mode::Z);
    return s;
}

GluingSystem build_t5_system(const Diagram& d) {
    GluingSystem s;
    s.mode = Mode::W;
    s.nvars = d.n() + 2;
    for (const Region& r : d.regions) {
        Equation eq;
        eq.id = r.id;
        for (const Corner& k : r.corners) {
            auto w = d.corner_region[k.crossing];
            const int a = w[0] - 1, b = w[1] - 1, c = w[2] - 1, dd = w[3] - 1;
            auto& F = eq.factors;
            switch (k.pos) {
                case 0:  // (b-a)(d-a)/(bd-ac)
                    F.push_back({diff(b, a), 1});
                    F.push_back({diff(dd, a), 1});
                    F.push_back({quad(b, dd, a, c), -1});
                    break;
                case 1:  // (ac-bd)/((a-b)(c-b))
                    F.push_back({quad(a, c, b, dd), 1});
                    F.push_back({diff(a, b), -1});
                    F.push_back({diff(c, b), -1});
                    break;
                case 2:  // (b-c)(d-c)/(bd-ac)
                    F.push_back({diff(b, c), 1});
                    F.push_back({diff(dd, c), 1});
                    F.push_back({quad(b, dd, a, c), -1});
                    break;
                default:  // (ac-bd)/((a-d)(c-d))
                    F.push_back({quad(a, c, b, dd), 1});
                    F.push_back({diff(a, dd), -1});
                    F.push_back({diff(c, dd), -1});
                    break;
            }
        }
        s.equations.push_back(std::move(eq));
    }
    s.constraints = nondegeneracy_constraints(d, Mode::W);
    return s;
}

GluingSystem build_system(const Diagram& d, Mode mode) {
    return mode == Mode::Z ? build_t4_system(d) : build_t5_system(d);
}

std::vector<cx> equation_values(const GluingSystem& s, const Assignment& a) {
    check_assignment(s, a);
    std::vector<cx> out;
    out.reserve(s.equations.size());
    for (const Equation& e : s.equations) {
        cx v = 1;
        for (const Factor& f : e.factors) {
            cx b = eval_poly(f.base, a.values);
            v *= f.exponent >= 0 ? std::pow(b, f.exponent) : cx(1) / std::pow(b, -f.exponent);
        }
        out.push_back(v);
    }
    return out;
}

std::vector<cx> residuals(const GluingSystem& s, const Assignment& a) {
    auto v = equation_values(s, a);
    for (cx& x : v) x -= 1.0;
    return v;
}

double max_norm(const std::vector<cx>& v) {
    double m = 0;
    for (const cx& x : v) m = std::max(m, std::abs(x));
    return m;
}

Eigen::MatrixXcd log_derivatives(const GluingSystem& s, const Assignment& a) {
    check_assignment(s, a);
    Eigen::MatrixXcd J = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(s.equations.size()), s.nvars);
    for (std::size_t e = 0; e < s.equations.size(); ++e)
        for (const Factor& f : s.equations[e].factors) {
            cx b = eval_poly(f.base, a.values);
            std::set<int> vars;
            for (const Term& t : f.base) vars.insert(t.vars.begin(), t.vars.end());
            for (int v : vars)
                J(static_cast<Eigen::Index>(e), v) +=
                    static_cast<double>(f.exponent) * a.values[v] * eval_poly_derivative(f.base, a.values, v) / b;
        }
    return J;
}

}  // namespace octa
