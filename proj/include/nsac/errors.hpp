#pragma once

#include <stdexcept>
#include <string>

namespace nsac {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thermodynamic argument outside the admissible domain (v <= b+h, theta <= 0).
struct DomainError : Error {
    using Error::Error;
};

// Requested isotherm has no spinodal points (theta >= theta_c).
struct NoSpinodal : Error {
    using Error::Error;
};

// The volume cutoff b+h hides part of the requested construction.
struct CutoffConflict : Error {
    using Error::Error;
};

// The Maxwell equal-area equation has no admissible positive pressure.
struct NoPositiveEquilibrium : Error {
    using Error::Error;
};

// A discrete field violates the pointwise state bounds.
struct BoundViolation : Error {
    using Error::Error;
};

// Initial-condition profile cannot be built as requested.
struct ProfileError : Error {
    using Error::Error;
};

// Far-field pair (v_bar, theta_bar) is not in the stable region.
struct AdmissibilityError : Error {
    using Error::Error;
};

// Tridiagonal system failed the diagonal-dominance / pivot checks.
struct SingularSystem : Error {
    using Error::Error;
};

// Snapshot cadence too coarse for the time quadrature.
struct InsufficientCadence : Error {
    using Error::Error;
};

// A check's hypothesis does not hold for the given state.
struct PreconditionFailed : Error {
    using Error::Error;
};

// Configuration file or artifact-layout problems (CLI exit code 2).
struct ConfigError : Error {
    using Error::Error;
};

struct MissingArtifacts : Error {
    using Error::Error;
};

// Runtime aborts raised while stepping (CLI exit code 3). Carries the
// offending time and node; the driver fills in the step index.
struct SolverAbort : Error {
    SolverAbort(const std::string& what, double time, int node)
        : Error(what), time(time), node(node) {}
    double time = 0.0;
    int node = -1;
    int step = -1;
};

struct CflViolation : SolverAbort {
    using SolverAbort::SolverAbort;
};

struct NonpositiveTemperature : SolverAbort {
    using SolverAbort::SolverAbort;
};

struct VolumeCutoff : SolverAbort {
    using SolverAbort::SolverAbort;
};

struct NoConvergence : SolverAbort {
    using SolverAbort::SolverAbort;
};

}  // namespace nsac
