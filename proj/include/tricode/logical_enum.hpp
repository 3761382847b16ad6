#pragma once

#include <cstdint>
#include <vector>

#include "tricode/code.hpp"

namespace tricode {

/// Which single-qubit Paulis an error channel can produce.
enum class ErrorAlphabet { X, XZ, XYZ };

const char* alphabet_name(ErrorAlphabet a);

/// Exact count of weight-w Pauli operators, all of whose single-qubit factors
/// lie in the alphabet, that commute with every stabilizer and act as a
/// nontrivial logical. Operators are counted up to overall sign.
///
/// Enumerates weight-w supports with per-support alphabet assignments; throws
/// std::length_error when the search space exceeds `budget` assignments.
uint64_t count_min_weight_logicals(const StabilizerCode& code, ErrorAlphabet alphabet, int w,
                                   uint64_t budget = 2'000'000'000ull);

/// Same search, returning the witnesses themselves.
std::vector<PauliOperator> enumerate_min_weight_logicals(const StabilizerCode& code, ErrorAlphabet alphabet, int w,
                                                         uint64_t budget = 400'000'000ull);

}  // namespace tricode
