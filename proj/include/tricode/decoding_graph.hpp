#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tricode/code.hpp"

namespace tricode {

enum class EdgeKind { Red, Blue, Vertical };  // red = X error, blue = Z error

/// Which error species a graph decodes. The triangle code uses one combined
/// graph; the rotated surface code processes bit and phase flips separately.
enum class GraphSector { Combined, XErrors, ZErrors };

struct GraphEdge {
    int u;              // node id
    int v;              // node id, or -1 for a boundary edge
    EdgeKind kind;
    int qubit;          // data qubit for red/blue, generator id for vertical
    int layer;          // layer of a horizontal edge; lower layer for vertical
    int64_t weight;
    int side;           // boundary side 0/1/2, or -1
};

/// Stack of per-round stabilizer graphs. Node (g, layer) is generator g's
/// syndrome bit in a given measurement round; horizontal edges are single
/// data errors, vertical edges are syndrome-bit flips between rounds.
struct DecodingGraph {
    GraphSector sector = GraphSector::Combined;
    int layers = 1;
    std::vector<int> gen_ids;       // node column -> generator index in the code
    std::vector<int> gen_to_node;   // generator index -> node column, or -1
    std::vector<GraphEdge> edges;
    std::vector<std::vector<int>> adj;  // node -> incident edge ids (boundary edges included)

    int stabs_per_layer() const { return int(gen_ids.size()); }
    int num_nodes() const { return layers * stabs_per_layer(); }
    int node(int gen_column, int layer) const { return layer * stabs_per_layer() + gen_column; }

    std::string to_json() const;
};

struct GraphWeights {
    int64_t horizontal = 1;
    int64_t vertical = 1;
};

DecodingGraph build_decoding_graph(const StabilizerCode& code, int layers,
                                   GraphSector sector = GraphSector::Combined, GraphWeights weights = {});

/// Edge ids touched by a data error in the given layer (red edge per X/Y
/// site, blue edge per Z/Y site, restricted to the graph's sector).
std::vector<int> error_to_edges(const DecodingGraph& graph, const StabilizerCode& code, const PauliOperator& error,
                                int layer = 0);

/// Defect nodes from a syndrome history: one bit-vector per measurement
/// round, over the code's full generator list. A node lights up when the
/// generator's bit differs from the previous round (round -1 reads all zero).
std::vector<int> defects_from_history(const DecodingGraph& graph, const std::vector<std::vector<uint8_t>>& rounds);

/// Defect nodes of a single-layer graph for one error with ideal syndrome.
std::vector<int> defects_of_error(const DecodingGraph& graph, const StabilizerCode& code, const PauliOperator& error);

}  // namespace tricode
