#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace grasp {

struct SourcePos {
    int line = 0;
    int col = 0;
};

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Lexical error: unexpected character in the input stream.
class LexError : public Error {
public:
    LexError(SourcePos pos, const std::string& msg)
        : Error(msg), pos_(pos) {}
    SourcePos pos() const { return pos_; }

private:
    SourcePos pos_;
};

class ParseError : public Error {
public:
    ParseError(SourcePos pos, const std::string& msg)
        : Error(msg), pos_(pos) {}
    SourcePos pos() const { return pos_; }

private:
    SourcePos pos_;
};

// `..` inside a term: intervals must be written out as separate ground facts.
class RangeSyntaxError : public ParseError {
public:
    using ParseError::ParseError;
};

// Uppercase- or underscore-led token: the input is not a ground program.
class VariableError : public ParseError {
public:
    using ParseError::ParseError;
};

class CycleBudgetExceeded : public Error {
public:
    explicit CycleBudgetExceeded(std::uint64_t cap)
        : Error("cycle enumeration exceeded the cap of " + std::to_string(cap) + " cycles"),
          cap_(cap) {}
    std::uint64_t cap() const { return cap_; }

private:
    std::uint64_t cap_;
};

class TooManyAtoms : public Error {
public:
    TooManyAtoms(std::size_t atoms, std::size_t cap)
        : Error("program has " + std::to_string(atoms) +
                " atoms; brute-force enumeration is capped at " + std::to_string(cap)) {}
};

class IncompleteWorld : public Error {
public:
    using Error::Error;
};

class AtomNotTrue : public Error {
public:
    using Error::Error;
};

class AtomNotFalse : public Error {
public:
    using Error::Error;
};

class UnknownAtom : public Error {
public:
    using Error::Error;
};

// A violated internal precondition; indicates a bug, not bad input.
class PreconditionError : public Error {
public:
    using Error::Error;
};

} // namespace grasp
