#pragma once

#include <stdexcept>
#include <string>

namespace hyperarr {

// Violation of a mathematical precondition (non-central input, flat not in
// the lattice, candidate not logarithmic, ...). The CLI maps this to exit 2.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed textual input (polynomial strings, arrangement JSON). Exit 65.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hyperarr
