#ifndef LINDO_ERROR_HPP
#define LINDO_ERROR_HPP

#include <stdexcept>
#include <string>

namespace lindo {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input file; message carries the offending line number.
struct ParseError : Error {
    ParseError(int line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line(line) {}
    int line;
};

// Caller violated a documented precondition.
struct ContractViolation : Error {
    using Error::Error;
};

// Exhaustive procedure would exceed its work budget; refuse loudly
// instead of returning a partial answer.
struct ScaleGuardError : Error {
    using Error::Error;
};

} // namespace lindo

#endif
