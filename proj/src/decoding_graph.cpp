#include "tricode/decoding_graph.hpp"

#include <stdexcept>

#include "json.hpp"

namespace tricode {

namespace {

bool gen_detects(const PauliOperator& gen, size_t q, bool x_error) {
    char c = gen.pauli_at(q);
    if (x_error) {
        return c == 'Z' || c == 'Y';
    }
    return c == 'X' || c == 'Y';
}

// Side label for a boundary edge, from the geometry of the qubit it sits on.
int boundary_side_of(const StabilizerCode& code, size_t q) {
    const Coord& c = code.coords[q];
    if (code.spec.kind == CodeSpec::Kind::Triangle) {
        if (c[0] == code.spec.r - 1) {
            return 0;
        }
        if (c[1] == code.spec.s - 1) {
            return 1;
        }
        if (c[2] == code.spec.t - 1) {
            return 2;
        }
        return 0;  // degenerate shapes: axis boundary
    }
    if (c[0] == 0 || c[0] == code.spec.d - 1) {
        return 0;
    }
    return 2;
}

}  // namespace

DecodingGraph build_decoding_graph(const StabilizerCode& code, int layers, GraphSector sector, GraphWeights weights) {
    if (layers < 1) {
        throw std::invalid_argument("layer count must be positive");
    }
    DecodingGraph g;
    g.sector = sector;
    g.layers = layers;
    auto gens = code.generators();
    g.gen_to_node.assign(gens.size(), -1);
    for (size_t gi = 0; gi < gens.size(); gi++) {
        bool in_graph = false;
        if (sector == GraphSector::Combined) {
            in_graph = true;
        } else {
            // A generator participates in the sector's graph if it can detect
            // that error species on some qubit.
            bool x_side = false, z_side = false;
            for (size_t q = 0; q < code.n; q++) {
                x_side |= gen_detects(gens[gi], q, true);
                z_side |= gen_detects(gens[gi], q, false);
            }
            in_graph = sector == GraphSector::XErrors ? x_side : z_side;
        }
        if (in_graph) {
            g.gen_to_node[gi] = int(g.gen_ids.size());
            g.gen_ids.push_back(int(gi));
        }
    }

    for (int layer = 0; layer < layers; layer++) {
        for (size_t q = 0; q < code.n; q++) {
            for (bool x_error : {true, false}) {
                if (sector == GraphSector::XErrors && !x_error) {
                    continue;
                }
                if (sector == GraphSector::ZErrors && x_error) {
                    continue;
                }
                std::vector<int> hit;
                for (size_t gi = 0; gi < gens.size(); gi++) {
                    if (g.gen_to_node[gi] >= 0 && gen_detects(gens[gi], q, x_error)) {
                        hit.push_back(g.gen_to_node[gi]);
                    }
                }
                if (hit.empty()) {
                    continue;
                }
                if (hit.size() > 2) {
                    throw std::logic_error("single error flips more than two checks; graph assumption broken");
                }
                GraphEdge e;
                e.kind = x_error ? EdgeKind::Red : EdgeKind::Blue;
                e.qubit = int(q);
                e.layer = layer;
                e.weight = weights.horizontal;
                e.u = g.node(hit[0], layer);
                e.v = hit.size() == 2 ? g.node(hit[1], layer) : -1;
                e.side = hit.size() == 2 ? -1 : boundary_side_of(code, q);
                g.edges.push_back(e);
            }
        }
        if (layer + 1 < layers) {
            for (int col = 0; col < g.stabs_per_layer(); col++) {
                GraphEdge e;
                e.kind = EdgeKind::Vertical;
                e.qubit = g.gen_ids[col];
                e.layer = layer;
                e.weight = weights.vertical;
                e.u = g.node(col, layer);
                e.v = g.node(col, layer + 1);
                e.side = -1;
                g.edges.push_back(e);
            }
        }
    }

    g.adj.assign(g.num_nodes(), {});
    for (size_t ei = 0; ei < g.edges.size(); ei++) {
        g.adj[g.edges[ei].u].push_back(int(ei));
        if (g.edges[ei].v >= 0) {
            g.adj[g.edges[ei].v].push_back(int(ei));
        }
    }
    return g;
}

std::vector<int> error_to_edges(const DecodingGraph& graph, const StabilizerCode& code, const PauliOperator& error,
                                int layer) {
    std::vector<int> out;
    for (size_t ei = 0; ei < graph.edges.size(); ei++) {
        const auto& e = graph.edges[ei];
        if (e.kind == EdgeKind::Vertical || e.layer != layer) {
            continue;
        }
        char c = error.pauli_at(e.qubit);
        bool has_x = c == 'X' || c == 'Y';
        bool has_z = c == 'Z' || c == 'Y';
        if ((e.kind == EdgeKind::Red && has_x) || (e.kind == EdgeKind::Blue && has_z)) {
            out.push_back(int(ei));
        }
    }
    (void)code;
    return out;
}

std::vector<int> defects_from_history(const DecodingGraph& graph, const std::vector<std::vector<uint8_t>>& rounds) {
    if (int(rounds.size()) != graph.layers) {
        throw std::invalid_argument("syndrome history length must equal graph layers");
    }
    std::vector<int> defects;
    std::vector<uint8_t> prev(graph.gen_ids.size(), 0);
    for (int layer = 0; layer < graph.layers; layer++) {
        for (size_t col = 0; col < graph.gen_ids.size(); col++) {
            uint8_t bit = rounds[layer].at(graph.gen_ids[col]);
            if (bit != prev[col]) {
                defects.push_back(graph.node(int(col), layer));
            }
            prev[col] = bit;
        }
    }
    return defects;
}

std::vector<int> defects_of_error(const DecodingGraph& graph, const StabilizerCode& code,
                                  const PauliOperator& error) {
    return defects_from_history(graph, {code.syndrome(error)});
}

std::string DecodingGraph::to_json() const {
    nlohmann::ordered_json j;
    j["layers"] = layers;
    j["stabs_per_layer"] = stabs_per_layer();
    j["generators"] = gen_ids;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& e : edges) {
        nlohmann::ordered_json je;
        je["u"] = e.u;
        je["v"] = e.v;
        je["kind"] = e.kind == EdgeKind::Red ? "red" : e.kind == EdgeKind::Blue ? "blue" : "vertical";
        je["qubit"] = e.qubit;
        je["layer"] = e.layer;
        je["weight"] = e.weight;
        je["side"] = e.side;
        arr.push_back(je);
    }
    j["edges"] = arr;
    return j.dump(2);
}

}  // namespace tricode
