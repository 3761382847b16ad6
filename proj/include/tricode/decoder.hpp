#pragma once

#include "tricode/decoding_graph.hpp"
#include "tricode/matching.hpp"

namespace tricode {

struct DecodeResult {
    PauliOperator recovery;                   // data-qubit correction (identity on ancillas)
    int64_t matched_weight = 0;               // total path weight of the matching
    std::vector<std::pair<int, int>> pairs;   // matched defect node pairs; second = -1 for boundary
};

/// Minimum-weight perfect matching decode: pairs up defect nodes (or matches
/// them to the boundary) along shortest paths, then lifts the matched paths
/// to a Pauli recovery (X per red edge, Z per blue edge; vertical edges cost
/// weight but contribute no data correction).
DecodeResult decode(const DecodingGraph& graph, const StabilizerCode& code, const std::vector<int>& defects);

/// Convenience: single-layer ideal-syndrome decode of an error.
DecodeResult decode_error(const DecodingGraph& graph, const StabilizerCode& code, const PauliOperator& error);

}  // namespace tricode
