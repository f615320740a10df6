#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rrnht {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Two residues/sequences/vectors from different rings were combined.
class RingMismatchError : public Error {
public:
    using Error::Error;
};

// mod_inv on a residue with gcd(a, q) != 1 (includes a == 0).
class NotInvertibleError : public Error {
public:
    using Error::Error;
};

// A sequence failed the ideal-autocorrelation requirement where one is needed.
class NotIdealError : public Error {
public:
    using Error::Error;
};

// N*N^T is not a scalar multiple of the identity; carries the first bad entry.
class OrthogonalityError : public Error {
public:
    OrthogonalityError(std::string msg, std::size_t row, std::size_t col)
        : Error(std::move(msg)), row_(row), col_(col) {}
    std::size_t row() const noexcept { return row_; }
    std::size_t col() const noexcept { return col_; }

private:
    std::size_t row_;
    std::size_t col_;
};

// Vector/frame length does not match what the operation requires.
class DimensionError : public Error {
public:
    using Error::Error;
};

// More users requested than distinct circular shifts exist.
class TooManyUsersError : public Error {
public:
    using Error::Error;
};

// A zero symbol would spread to an all-zero block and be undecodable.
class ZeroSymbolError : public Error {
public:
    using Error::Error;
};

// Symbol outside the symbol map's domain.
class UnknownSymbolError : public Error {
public:
    using Error::Error;
};

// Exhaustive search would exceed its candidate-evaluation budget.
class BudgetError : public Error {
public:
    using Error::Error;
};

// Malformed or invalid input file (sequence/block/config/report).
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace rrnht
