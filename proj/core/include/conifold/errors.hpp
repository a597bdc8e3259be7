#pragma once

#include <stdexcept>
#include <string>

namespace conifold {

/// Malformed or out-of-contract input (bad dimensions, non-skew pairing, bad index).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Evaluation at the pole q = -1 of the quantum multiplication matrix.
class PoleError : public InputError {
public:
    using InputError::InputError;
};

/// A computation exceeded a configured budget (element cap, step budget).
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The adaptive integrator could not make progress (step size underflow).
class IntegrationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An identity that must hold exactly was found violated.
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace conifold
