#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cbtree {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class AlphabetMismatch : public Error {
public:
    AlphabetMismatch() : Error("alphabet mismatch") {}
    explicit AlphabetMismatch(const std::string &what) : Error("alphabet mismatch: " + what) {}
};

class EmptyTreeError : public Error {
public:
    using Error::Error;
};

class NotABranch : public Error {
public:
    using Error::Error;
};

// DSL syntax errors carry the byte offset of the offending token.
class ParseError : public Error {
public:
    ParseError(const std::string &what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// A regular-only combinator applied to a plugged value, or the reverse.
class RepresentationMismatch : public Error {
public:
    using Error::Error;
};

// Declared rank pattern disagrees with a computed component rank.
class ProbeMismatch : public Error {
public:
    ProbeMismatch(const std::string &what, std::size_t index)
        : Error(what + " (component " + std::to_string(index) + ")"), index_(index) {}

    std::size_t index() const { return index_; }

private:
    std::size_t index_;
};

} // namespace cbtree
