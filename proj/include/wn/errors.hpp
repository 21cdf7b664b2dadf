#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wn {

// Operands live in different ambient rings P_n.
class DimensionMismatch : public std::invalid_argument {
public:
    DimensionMismatch(std::size_t lhs, std::size_t rhs)
        : std::invalid_argument("ambient dimension mismatch: " + std::to_string(lhs) + " vs " +
                                std::to_string(rhs)) {}
};

// 1-based variable index outside 1..n.
class IndexOutOfRange : public std::out_of_range {
public:
    IndexOutOfRange(std::size_t index, std::size_t n)
        : std::out_of_range("variable index " + std::to_string(index) + " out of range 1.." +
                            std::to_string(n)) {}
};

// An operation's documented precondition does not hold for the given input.
class PreconditionError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

}  // namespace wn
