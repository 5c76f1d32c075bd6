#pragma once

#include <stdexcept>
#include <string>

namespace macd {

// Base class for all errors raised by the library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct dimension_mismatch : error {
    using error::error;
};

struct invalid_arguments : error {
    using error::error;
};

struct inexact_division : error {
    using error::error;
};

struct negative_q_unit : error {
    using error::error;
};

struct index_out_of_range : error {
    using error::error;
};

struct box_outside_diagram : error {
    using error::error;
};

struct attacking_filling : error {
    using error::error;
};

struct unequal_column_heights : error {
    using error::error;
};

struct row_out_of_range : error {
    using error::error;
};

struct precondition_violated : error {
    using error::error;
};

struct not_a_partition : error {
    using error::error;
};

} // namespace macd
