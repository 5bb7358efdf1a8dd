#ifndef URSA_ERROR_HPP
#define URSA_ERROR_HPP

#include <stdexcept>
#include <string>

namespace ursa {

// Position within a source text; line and column are 1-based, 0 means unknown.
struct SourceLoc {
    int line = 0;
    int col = 0;
};

class Error : public std::runtime_error {
public:
    explicit Error(std::string msg, SourceLoc loc = {})
        : std::runtime_error(std::move(msg)), loc_(loc) {}

    SourceLoc loc() const { return loc_; }

private:
    SourceLoc loc_;
};

// Lexical problem: illegal character, unterminated comment, ...
class LexError : public Error {
public:
    using Error::Error;
};

// Grammar or kind violation detected while parsing.
class ParseError : public Error {
public:
    using Error::Error;
};

// Violation of the execution rules: symbolic control-flow condition,
// symbolic array index, recursion, bad procedure call.
class RuntimeError : public Error {
public:
    using Error::Error;
};

// Raised by the `halt` statement to unwind to the session loop.
struct HaltSignal {};

}  // namespace ursa

#endif
