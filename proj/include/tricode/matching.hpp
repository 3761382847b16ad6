#pragma once

#include <cstdint>
#include <vector>

namespace tricode {

struct WeightedEdge {
    int u, v;
    int64_t weight;
};

/// Maximum-weight matching on a general graph (blossom algorithm, exact
/// integer arithmetic). Returns mate[v] = partner or -1. With
/// `max_cardinality` the matching has maximum size among all matchings, and
/// maximum weight among those.
std::vector<int> max_weight_matching(int num_vertices, const std::vector<WeightedEdge>& edges,
                                     bool max_cardinality = false);

/// Minimum-weight perfect matching on a graph where one exists (callers pass
/// an even vertex count and enough edges). Implemented by weight reflection
/// on top of max_weight_matching. Throws if no perfect matching exists.
std::vector<int> min_weight_perfect_matching(int num_vertices, const std::vector<WeightedEdge>& edges);

}  // namespace tricode
