#ifndef LEGVAR_ERRORS_HPP
#define LEGVAR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace legvar {

/// Bad argument or violated precondition. CLI maps this to exit code 2.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A computation that could not be completed (e.g. rational reconstruction
/// ran out of primes). CLI maps this to exit code 3.
class ComputationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace legvar

#endif
