#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "octa/diagram.hpp"

namespace octa {

struct Assignment {
    Mode mode = Mode::Z;
    std::vector<cx> values;  // index id-1

    cx operator[](int id) const { return values.at(id - 1); }
};

// coef * product of variables (0-based indices, repeats allowed)
struct Term {
    double coef = 1.0;
    std::vector<int> vars;
};

using Poly = std::vector<Term>;

struct Factor {
    Poly base;
    int exponent = 1;
};

struct Equation {
    int id = 0;  // segment id (T4) or region id (T5)
    std::vector<Factor> factors;
};

struct Constraint {
    Poly base;  // must stay away from zero
    int degree = 1;
    std::string what;
};

struct GluingSystem {
    Mode mode = Mode::Z;
    int nvars = 0;
    std::vector<Equation> equations;
    std::vector<Constraint> constraints;
};

cx eval_poly(const Poly& p, const std::vector<cx>& x);
cx eval_poly_derivative(const Poly& p, const std::vector<cx>& x, int v);

std::vector<Constraint> nondegeneracy_constraints(const Diagram& d, Mode mode);

GluingSystem build_t4_system(const Diagram& d);
GluingSystem build_t5_system(const Diagram& d);
GluingSystem build_system(const Diagram& d, Mode mode);

std::optional<std::string> first_violation(const std::vector<Constraint>& cs, const std::vector<cx>& x);
std::optional<std::string> check_nondegenerate(const Diagram& d, const Assignment& a);

// throws NonDegeneracy on a degenerate assignment
std::vector<cx> equation_values(const GluingSystem& s, const Assignment& a);
std::vector<cx> residuals(const GluingSystem& s, const Assignment& a);
double max_norm(const std::vector<cx>& v);
Eigen::MatrixXcd log_derivatives(const GluingSystem& s, const Assignment& a);

}  // namespace octa
