#pragma once

#include <stdexcept>
#include <string>

namespace sunisb {

// Group rank N outside the supported range (N >= 2).
struct invalid_rank : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Row or color index outside 1..N-1 / 1..N.
struct index_out_of_range : std::out_of_range {
  using std::out_of_range::out_of_range;
};

// Two operands built for different N.
struct rank_mismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A label, multi-index or totals vector with the wrong shape or ordering.
struct shape_mismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// An ISB coefficient with a vanishing denominator: the occupations lie
// outside the ordered Young-diagram regime.
struct singular_coefficient : std::domain_error {
  using std::domain_error::domain_error;
};

// An algebraic identity that should hold exactly did not.
struct algebra_violation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed serialized document.
struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace sunisb
