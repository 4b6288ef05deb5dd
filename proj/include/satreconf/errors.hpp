#pragma once

#include <stdexcept>
#include <string>

namespace satreconf {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Undeclared mode, event, component or state in an automaton operation.
struct ModelError : Error {
    using Error::Error;
};

/// Non-finite value encountered where a finite real is required.
struct NumericError : Error {
    using Error::Error;
};

/// Missing interval spec or inconsistent declarations.
struct ConfigError : Error {
    using Error::Error;
};

/// Undeclared atom during CNF conversion.
struct EncodingError : Error {
    using Error::Error;
};

/// Constraint authored over the wrong atom domain.
struct AuthoringError : Error {
    using Error::Error;
};

/// Malformed scenario/model/observation document.
struct SchemaError : Error {
    using Error::Error;
};

/// Scenario refers to a component the system does not have.
struct ScenarioError : Error {
    using Error::Error;
};

/// Problem too large for an enumeration-based oracle.
struct OracleScopeError : Error {
    using Error::Error;
};

/// Internal contract violation (e.g. assign() on an unsatisfiable formula).
struct SolverContractError : Error {
    using Error::Error;
};

} // namespace satreconf
