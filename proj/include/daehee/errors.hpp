/**
 * @file errors.hpp
 * @brief Exception types shared by every module.
 */
#pragma once

#include <stdexcept>
#include <string>

namespace daehee {

/// Input outside the mathematical domain of an operation (zero denominator,
/// negative degree, empty parameter range, ...).
struct domain_error : std::domain_error {
    using std::domain_error::domain_error;
};

/// Index past the stored extent of a finite object (e.g. a truncated series).
struct range_error : std::out_of_range {
    using std::out_of_range::out_of_range;
};

/// Unknown name in a registry (identity ids, family names, suite names).
struct lookup_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace daehee
