#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hopfdiag {

// Requested size is above a configured enumeration bound.
class BoundExceeded : public std::length_error {
public:
    BoundExceeded(const std::string& what_, std::size_t requested, std::size_t bound)
        : std::length_error(what_ + ": requested " + std::to_string(requested) +
                            " exceeds bound " + std::to_string(bound)),
          requested_(requested), bound_(bound) {}

    std::size_t requested() const noexcept { return requested_; }
    std::size_t bound() const noexcept { return bound_; }

private:
    std::size_t requested_;
    std::size_t bound_;
};

// Malformed textual input; position is a 0-based character offset.
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& msg, std::size_t position)
        : std::invalid_argument(msg + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

} // namespace hopfdiag
