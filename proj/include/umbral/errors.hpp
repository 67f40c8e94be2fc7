#pragma once

#include <stdexcept>

namespace umbral {

// Exact polynomial division left a remainder; indicates a caller bug
// (e.g. an index vector that is not weakly decreasing).
struct NonExactDivision : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A truncated-series computation ran out of provably correct terms.
struct InsufficientPrecision : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A series-form delta operator was applied beyond its declared order.
struct TruncationTooShort : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The requested operation needs an exact functional rule that only the
// built-in operators provide.
struct UnsupportedOperator : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Evaluation points must be pairwise distinct (alternant denominators).
struct RepeatedEvaluationPoint : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A partition does not fit in the requested box.
struct OutOfBox : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A determinant row index is negative; use the evaluation-based path.
struct NegativeRowIndex : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace umbral
