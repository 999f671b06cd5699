#pragma once

#include <stdexcept>
#include <string>

namespace localcross {

/// Malformed or out-of-contract input (unknown edge, wrong side, bad parameter).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Text or JSON that does not parse.
class ParseError : public InputError {
public:
    using InputError::InputError;
};

/// A configured table or enumeration cap was exceeded.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An internal invariant failed; indicates a bug, not bad input.
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace localcross
