#pragma once

#include <stdexcept>
#include <string>

namespace hdr {

// Malformed input or a violated precondition. The CLI maps this to exit 4.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A computed object failed one of its own contracts. Exit 2.
class ContractViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An enumeration or iteration limit was hit before a decision. Exit 3.
class GuardExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace hdr
