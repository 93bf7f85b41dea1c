#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace charclass {

// Malformed textual input. `position` is a 0-based byte offset into the text.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position)
        : std::runtime_error(message + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// An operation was called outside its domain (mismatched characteristic,
// non-unit constant term, non-effective element, ...).
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// An internal cross-check disagreed. Reaching this means an arithmetic bug
// or a falsified identity.
class VerificationError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

inline void require(bool condition, const std::string& message)
{
    if (!condition) throw PreconditionError(message);
}

} // namespace charclass
