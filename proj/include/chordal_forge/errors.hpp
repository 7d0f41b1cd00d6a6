#ifndef CHORDAL_FORGE_ERRORS_HPP
#define CHORDAL_FORGE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace chordal_forge
{
    /// Base of every error raised by the library.
    class Error : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    /// Malformed graph input: out-of-range endpoint, self-loop, duplicate edge.
    class GraphError : public Error
    {
        public:
            using Error::Error;
    };

    /// A caller-side precondition does not hold (wrong edge count, anchor is
    /// not a clique, parameters out of range).
    class PreconditionError : public Error
    {
        public:
            using Error::Error;
    };

    /// A chordal certificate or builder step is invalid.
    class CertificateError : public Error
    {
        public:
            using Error::Error;
    };

    /// Exhaustive search refused because the instance is above its size cap.
    class CapExceeded : public Error
    {
        public:
            using Error::Error;
    };

    /// An existence step of an inductive argument found nothing, or a counted
    /// quantity disagrees with what the argument guarantees. This always means
    /// the transcription of the argument is wrong, never bad user input.
    class InternalInvariantError : public Error
    {
        public:
            explicit InternalInvariantError(const std::string & what) :
                Error("internal invariant violated: " + what)
            {
            }
    };
}

#endif
