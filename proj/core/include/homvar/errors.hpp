#pragma once

#include <stdexcept>
#include <string>

namespace homvar {

// Multi-index subtraction produced a negative count.
struct DegenerateIndex : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Interior product applied to a 0-form.
struct ContractDegreeZero : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A pipeline operation that requires a homogeneous Lagrangian was given one
// that fails the homogeneity conditions.
struct NotHomogeneous : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operation restricted to first-order Lagrangians was given k != 1.
struct OrderMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SyntaxError : std::runtime_error {
    int line;
    int column;
    SyntaxError(const std::string& msg, int line_, int column_)
        : std::runtime_error(msg + " at " + std::to_string(line_) + ":" +
                             std::to_string(column_)),
          line(line_),
          column(column_) {}
};

// Variable index outside the declared (m, n, k) ranges.
struct IndexOutOfRange : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exact polynomial division left a remainder where none was expected.
struct NonDivisible : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace homvar
