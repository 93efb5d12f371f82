#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace octa {

using cx = std::complex<double>;

enum class Mode { Z, W };

inline const char* mode_name(Mode m) { return m == Mode::Z ? "z" : "w"; }

enum class ErrorKind {
    Parse,        // malformed PD or JSON input
    Topology,     // multi-component, disconnected, non-planar
    Degenerate,   // T4 on a kinked diagram
    NonDegeneracy,
    Verification, // not on the gluing variety, failed identities
    Config,
    Domain,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

const char* error_kind_name(ErrorKind k);

}  // namespace octa
