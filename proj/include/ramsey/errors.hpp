#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ramsey
{
    class Error : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    /// Input outside the domain where a formula or operation is defined.
    class DomainError : public Error
    {
    public:
        using Error::Error;
    };

    /// Instance exceeds a configured size cap for an exhaustive routine.
    class CapacityError : public Error
    {
    public:
        using Error::Error;
    };

    /// A caller-checked precondition does not hold (e.g. a red K_s is present).
    class PreconditionError : public Error
    {
    public:
        using Error::Error;
    };

    /// An algorithm reached a state its correctness argument rules out.
    class ContractViolation : public Error
    {
    public:
        using Error::Error;
    };

    class ParseError : public Error
    {
    public:
        ParseError(std::size_t line, const std::string & message) :
            Error("line " + std::to_string(line) + ": " + message),
            _line(line)
        {
        }

        auto line() const -> std::size_t { return _line; }

    private:
        std::size_t _line;
    };
}
