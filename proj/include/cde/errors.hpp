#pragma once

#include <stdexcept>
#include <string>

namespace cde {

/// Base class for all library errors. Catching cde::Error distinguishes
/// domain failures from programming errors (std::logic_error and friends).
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// -- validation errors (CLI exit code 1) -------------------------------------

struct NonPositiveParam : Error {
    std::string name;
    explicit NonPositiveParam(std::string param)
        : Error("parameter '" + param + "' must be positive"), name(std::move(param)) {}
};

struct GammaWithoutDecay : Error {
    GammaWithoutDecay() : Error("gamma > 0 requires mu > 0 (production needs a finite gamma/mu)") {}
};

struct EmptyTable : Error {
    EmptyTable() : Error("tabulated function has no samples") {}
};

struct UnsortedTable : Error {
    UnsortedTable() : Error("tabulated abscissae must be strictly increasing") {}
};

struct TraceOutOfRange : Error {
    double t;
    explicit TraceOutOfRange(double time)
        : Error("time " + std::to_string(time) + " precedes the exit trace's first sample"),
          t(time) {}
};

struct ConfigParse : Error {
    int line;
    ConfigParse(int line_no, const std::string& msg)
        : Error("config line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
};

struct IoFailure : Error {
    std::string path;
    IoFailure(std::string file, const std::string& what)
        : Error("io failure on '" + file + "': " + what), path(std::move(file)) {}
};

// -- numerical errors (CLI exit code 2) ---------------------------------------

struct QuadratureNotConverged : Error {
    explicit QuadratureNotConverged(const std::string& which)
        : Error("adaptive quadrature hit the recursion cap in " + which) {}
};

struct RootNotBracketed : Error {
    int n;
    explicit RootNotBracketed(int index)
        : Error("eigenvalue root " + std::to_string(index) +
                " lost its bracket (solver bug, not bad input)"),
          n(index) {}
};

struct NonPositiveTime : Error {
    NonPositiveTime() : Error("heat kernel requires t > 0") {}
};

struct EvaluationAtBoundary : Error {
    EvaluationAtBoundary()
        : Error("half-line field at x = 0 is the Dirichlet datum; evaluate G(t) directly") {}
};

struct UnboundedForcing : Error {
    explicit UnboundedForcing(const std::string& msg) : Error(msg) {}
};

struct CellPecletTooLarge : Error {
    double value;
    explicit CellPecletTooLarge(double pe)
        : Error("cell Peclet number " + std::to_string(pe) + " exceeds 2; refine the grid"),
          value(pe) {}
};

struct LinearSolveFailure : Error {
    explicit LinearSolveFailure(const std::string& msg) : Error("linear solve failed: " + msg) {}
};

struct SingularSystem : Error {
    SingularSystem() : Error("boundary-condition system is singular") {}
};

}  // namespace cde
