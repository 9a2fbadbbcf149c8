#ifndef NOVIKOV_ERRORS_HPP
#define NOVIKOV_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace novikov {

// Bad user-supplied data: malformed text, rank mismatches, out-of-range
// indices, violated preconditions. Maps to CLI exit code 2.
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// Text that failed to parse; position is a 0-based byte offset.
class parse_error : public input_error {
public:
    parse_error(const std::string& what, std::size_t position)
        : input_error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// A violated structural invariant: boundary matrices that do not square to
// zero, a negative Betti number out of the rank formula. Maps to CLI exit
// code 3.
class invariant_error : public std::logic_error {
public:
    explicit invariant_error(const std::string& what) : std::logic_error(what) {}
};

} // namespace novikov

#endif
