#pragma once

#include <stdexcept>
#include <string>

namespace cellmap {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Structurally malformed input: bad matchings, label-set mismatches,
// broken map invariants.
struct ValidationError : Error {
    using Error::Error;
};

// Operation called outside its stated domain, e.g. cutting a class III map
// with varsigma.
struct PreconditionError : Error {
    using Error::Error;
};

// No result exists for the given input, e.g. decomposing a genus 0 map.
struct DomainError : Error {
    using Error::Error;
};

// Text that does not parse; positions are 1-based.
struct ParseError : Error {
    int line;
    int column;
    ParseError(const std::string& msg, int line_, int column_)
        : Error(msg + " (line " + std::to_string(line_) + ", column " +
                std::to_string(column_) + ")"),
          line(line_),
          column(column_) {}
};

// A "cannot happen" condition on already-validated data.
struct InternalError : Error {
    using Error::Error;
};

}  // namespace cellmap
