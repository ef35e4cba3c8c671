#ifndef EMUL_GUARD_INCLUDE_EMUL_ERRORS_HH
#define EMUL_GUARD_INCLUDE_EMUL_ERRORS_HH 1

#include <stdexcept>
#include <string>

namespace emul
{
    class Error : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    class ParseError : public Error
    {
        private:
            int _line;

        public:
            ParseError(int line, const std::string & message);

            auto line() const -> int { return _line; }
    };

    class UnknownVertex : public Error
    {
        public:
            explicit UnknownVertex(const std::string & label);
    };

    class UnknownEdge : public Error
    {
        public:
            UnknownEdge(const std::string & u, const std::string & v);
    };

    class DuplicateVertex : public Error
    {
        public:
            explicit DuplicateVertex(const std::string & label);
    };

    class DegreeMismatch : public Error
    {
        public:
            using Error::Error;
    };

    class NotATriangle : public Error
    {
        public:
            using Error::Error;
    };

    class NotIndependent : public Error
    {
        public:
            using Error::Error;
    };

    class BudgetExceeded : public Error
    {
        public:
            explicit BudgetExceeded(const std::string & where);
    };

    class CorruptRotation : public Error
    {
        public:
            using Error::Error;
    };

    class InvalidSeparation : public Error
    {
        public:
            using Error::Error;
    };

    class InvalidInput : public Error
    {
        public:
            using Error::Error;
    };

    // raised when an operation produces output that fails its own post-check
    class InvariantBroken : public Error
    {
        public:
            using Error::Error;
    };

    class PreconditionUnmet : public Error
    {
        public:
            using Error::Error;
    };

    class SearchFailed : public Error
    {
        public:
            using Error::Error;
    };

    class AssemblyFailed : public Error
    {
        public:
            using Error::Error;
    };

    class TraceMismatch : public Error
    {
        public:
            using Error::Error;
    };

    class IdentificationFailed : public Error
    {
        public:
            using Error::Error;
    };

    class UnknownName : public Error
    {
        public:
            explicit UnknownName(const std::string & name);
    };
}

#endif
