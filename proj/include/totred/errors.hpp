#pragma once

#include <stdexcept>
#include <string>

namespace totred {

// Conformability failures: non-square input, mismatched sizes.
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A 1-based index outside 1..n.
class IndexError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

// Arguments outside the mathematical domain (negative order, division by zero, bad literal).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class SingularMatrixError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A finite sequence ran out of values (shift past the horizon, too-short forcing term).
class HorizonError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Mixed element variants, origins or horizons inside one column.
class HeterogeneousColumnError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace totred
