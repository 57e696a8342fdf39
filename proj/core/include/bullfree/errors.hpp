#pragma once

#include <stdexcept>
#include <string>

namespace bullfree {

// Malformed input: bad file, invalid trigraph, violated precondition.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// The instance is outside the class an algorithm handles (a bull, or a
// non-monogamous trigraph). Carries a human-readable witness.
class NotInClass : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An instance exceeded a hard size limit of a brute-force routine.
class SizeLimitExceeded : public std::length_error {
public:
    using std::length_error::length_error;
};

class WeightOverflow : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

}  // namespace bullfree
