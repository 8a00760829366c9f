#ifndef BISIMLAB_ERRORS_HPP
#define BISIMLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bisimlab {

// Argument violates an operation's contract (out-of-range state, malformed
// partition, unparsable file, ...).
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Input is well formed but outside the shape an algorithm supports
// (e.g. a multi-action system handed to the one-action cycle classifier).
class UnsupportedInputError : public std::runtime_error {
public:
    explicit UnsupportedInputError(const std::string& what) : std::runtime_error(what) {}
};

// An exhaustive search would exceed its configured state bound.
class BoundError : public std::runtime_error {
public:
    explicit BoundError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace bisimlab

#endif
