/**
 * Exception types shared by all diffcoh modules.
 *
 * The command-line front end maps these onto exit codes: InvalidInput and
 * SchemaError are usage errors, BoundExceeded is a resource error and
 * CheckFailed marks a failed mathematical verification.
 */
#ifndef DIFFCOH_ERRORS_HPP
#define DIFFCOH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace diffcoh
{

/// Malformed mathematical input (non-group table, ill-defined hom, ...).
class InvalidInput : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

/// JSON input that does not follow the documented schema.
class SchemaError : public InvalidInput
{
public:
    using InvalidInput::InvalidInput;
};

/// A brute-force enumeration would exceed its configured budget.
class BoundExceeded : public std::runtime_error
{
public:
    BoundExceeded(const std::string& what, double estimate)
        : std::runtime_error(what + " (estimated size " + std::to_string(estimate) + ")"),
          estimate_(estimate)
    {
    }

    double estimate() const noexcept { return estimate_; }

private:
    double estimate_;
};

/// An operation that needs a finite group received an infinite one.
class InfiniteGroup : public std::domain_error
{
public:
    InfiniteGroup() : std::domain_error("infinite group") {}
};

/// A mathematical self-check (exactness, oracle agreement) failed.
class CheckFailed : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

} // namespace diffcoh

#endif // DIFFCOH_ERRORS_HPP
