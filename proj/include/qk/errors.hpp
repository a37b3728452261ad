#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qk
{
    // Base of every error thrown by the library.
    class Error : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    // An argument broke an operation's contract (vertex out of range,
    // mismatched universes, malformed ordering).
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

        auto line() const noexcept -> std::size_t { return _line; }

    private:
        std::size_t _line;
    };

    // The input graph or set does not satisfy a construction's hypothesis.
    class PreconditionError : public Error
    {
    public:
        using Error::Error;
    };

    // An exponential routine hit its configured vertex or subset cap.
    class ResourceLimitError : public Error
    {
    public:
        using Error::Error;
    };

    class IoError : public Error
    {
    public:
        using Error::Error;
    };

    // A construction produced something that failed self-verification.
    class VerificationError : public Error
    {
    public:
        using Error::Error;
    };
}
