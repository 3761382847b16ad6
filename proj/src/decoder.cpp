#include "tricode/decoder.hpp"

#include <limits>
#include <queue>
#include <stdexcept>

namespace tricode {

namespace {

constexpr int64_t kInf = std::numeric_limits<int64_t>::max() / 4;

struct ShortestPaths {
    std::vector<int64_t> dist;
    std::vector<int> pred;  // incoming edge id on the shortest path tree
};

using PQItem = std::pair<int64_t, int>;

// Deterministic Dijkstra: ties broken by node id, neighbors relaxed in edge
// id order, so equal-weight paths resolve to the lowest edge ids.
ShortestPaths dijkstra_from(const DecodingGraph& g, int source) {
    ShortestPaths sp;
    sp.dist.assign(g.num_nodes(), kInf);
    sp.pred.assign(g.num_nodes(), -1);
    std::priority_queue<PQItem, std::vector<PQItem>, std::greater<>> pq;
    sp.dist[source] = 0;
    pq.push({0, source});
    while (!pq.empty()) {
        auto [d, u] = pq.top();
        pq.pop();
        if (d != sp.dist[u]) {
            continue;
        }
        for (int ei : g.adj[u]) {
            const auto& e = g.edges[ei];
            int w = e.u == u ? e.v : e.u;
            if (w < 0) {
                continue;  // boundary stub
            }
            int64_t nd = d + e.weight;
            if (nd < sp.dist[w]) {
                sp.dist[w] = nd;
                sp.pred[w] = ei;
                pq.push({nd, w});
            }
        }
    }
    return sp;
}

// Multi-source shortest paths to the boundary. boundary_entry[u] is the
// boundary edge used when u is a tree root; interior nodes chain via pred.
struct BoundaryPaths {
    std::vector<int64_t> dist;
    std::vector<int> pred;
    std::vector<int> boundary_entry;
};

BoundaryPaths boundary_paths(const DecodingGraph& g) {
    BoundaryPaths bp;
    bp.dist.assign(g.num_nodes(), kInf);
    bp.pred.assign(g.num_nodes(), -1);
    bp.boundary_entry.assign(g.num_nodes(), -1);
    std::priority_queue<PQItem, std::vector<PQItem>, std::greater<>> pq;
    for (size_t ei = 0; ei < g.edges.size(); ei++) {
        const auto& e = g.edges[ei];
        if (e.v == -1 && e.weight < bp.dist[e.u]) {
            bp.dist[e.u] = e.weight;
            bp.boundary_entry[e.u] = int(ei);
        }
    }
    for (int u = 0; u < g.num_nodes(); u++) {
        if (bp.dist[u] < kInf) {
            pq.push({bp.dist[u], u});
        }
    }
    while (!pq.empty()) {
        auto [d, u] = pq.top();
        pq.pop();
        if (d != bp.dist[u]) {
            continue;
        }
        for (int ei : g.adj[u]) {
            const auto& e = g.edges[ei];
            int w = e.u == u ? e.v : e.u;
            if (w < 0) {
                continue;
            }
            int64_t nd = d + e.weight;
            if (nd < bp.dist[w]) {
                bp.dist[w] = nd;
                bp.pred[w] = ei;
                bp.boundary_entry[w] = -1;
                pq.push({nd, w});
            }
        }
    }
    return bp;
}

void apply_edge(PauliOperator& rec, const GraphEdge& e) {
    if (e.kind == EdgeKind::Vertical) {
        return;
    }
    PauliOperator p = PauliOperator::single(rec.num_qubits(), e.qubit, e.kind == EdgeKind::Red ? 'X' : 'Z');
    rec *= p;
}

}  // namespace

DecodeResult decode(const DecodingGraph& graph, const StabilizerCode& code, const std::vector<int>& defects) {
    DecodeResult out;
    out.recovery = PauliOperator::identity(code.n);
    int k = int(defects.size());
    if (k == 0) {
        return out;
    }
    std::vector<ShortestPaths> sps;
    sps.reserve(k);
    for (int i = 0; i < k; i++) {
        sps.push_back(dijkstra_from(graph, defects[i]));
    }
    BoundaryPaths bp = boundary_paths(graph);

    auto pair_dist = [&](int i, int j) { return sps[i].dist[defects[j]]; };
    auto bdry_dist = [&](int i) { return bp.dist[defects[i]]; };
    auto lift_pair = [&](int i, int j) {
        PauliOperator rec = PauliOperator::identity(code.n);
        int cur = defects[j];
        while (cur != defects[i]) {
            int ei = sps[i].pred[cur];
            const auto& e = graph.edges[ei];
            apply_edge(rec, e);
            cur = (e.u == cur) ? e.v : e.u;
        }
        return rec;
    };
    auto lift_boundary = [&](int i) {
        PauliOperator rec = PauliOperator::identity(code.n);
        int cur = defects[i];
        while (bp.boundary_entry[cur] < 0) {
            int ei = bp.pred[cur];
            const auto& e = graph.edges[ei];
            apply_edge(rec, e);
            cur = (e.u == cur) ? e.v : e.u;
        }
        apply_edge(rec, graph.edges[bp.boundary_entry[cur]]);
        return rec;
    };

    // Matching instance: defects 0..k-1, boundary copies k..2k-1.
    std::vector<WeightedEdge> medges;
    for (int i = 0; i < k; i++) {
        for (int j = i + 1; j < k; j++) {
            int64_t d = pair_dist(i, j);
            if (d < kInf) {
                medges.push_back({i, j, d});
            }
        }
        if (bdry_dist(i) < kInf) {
            medges.push_back({i, k + i, bdry_dist(i)});
        }
        for (int j = i + 1; j < k; j++) {
            medges.push_back({k + i, k + j, 0});
        }
    }
    std::vector<int> mate;
    try {
        mate = min_weight_perfect_matching(2 * k, medges);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("defect set admits no pairing; inconsistent input");
    }

    // partner[i]: defect index it pairs with, or -1 for the boundary.
    // bchoice[i]: for boundary elements, the boundary edge id actually used
    // (-1 = multi-hop tree path).
    std::vector<int> partner(k);
    std::vector<int> bchoice(k, -2);
    for (int i = 0; i < k; i++) {
        partner[i] = mate[i] < k ? mate[i] : -1;
    }

    // All weight-minimal single-edge boundary lifts available at a defect.
    auto boundary_lifts = [&](int i) {
        std::vector<std::pair<int, PauliOperator>> opts;
        int node = defects[i];
        if (bp.boundary_entry[node] >= 0) {
            for (int ei : graph.adj[node]) {
                const auto& e = graph.edges[ei];
                if (e.v == -1 && e.weight == bp.dist[node]) {
                    PauliOperator rec = PauliOperator::identity(code.n);
                    apply_edge(rec, e);
                    opts.emplace_back(ei, rec);
                }
            }
        } else {
            opts.emplace_back(-1, lift_boundary(i));
        }
        return opts;
    };
    auto lift_of = [&](int i) -> PauliOperator {
        if (partner[i] >= 0) {
            return lift_pair(std::min(i, partner[i]), std::max(i, partner[i]));
        }
        if (bchoice[i] >= 0) {
            PauliOperator rec = PauliOperator::identity(code.n);
            apply_edge(rec, graph.edges[bchoice[i]]);
            return rec;
        }
        return lift_boundary(i);
    };
    auto weight_of = [&](int i) { return partner[i] >= 0 ? pair_dist(std::min(i, partner[i]), std::max(i, partner[i]))
                                                         : bdry_dist(i); };
    for (int i = 0; i < k; i++) {
        if (partner[i] < 0) {
            bchoice[i] = boundary_lifts(i)[0].first;
        }
    }

    PauliOperator total = PauliOperator::identity(code.n);
    for (int i = 0; i < k; i++) {
        if (partner[i] < 0 || partner[i] > i) {
            total *= lift_of(i);
        }
    }

    // Equal-weight tie-break: prefer pairings whose combined lift acts on
    // fewer qubits, merging an X and a Z on one qubit into a Y. Plain
    // minimum-weight matching is indifferent between such ties, but at d = 3
    // the unmerged choice can differ from the merged one by a logical.
    // Weight-preserving local exchanges, run to a deterministic fixpoint.
    bool improved = true;
    int guard = 0;
    while (improved && guard++ < 4 * k + 8) {
        improved = false;
        for (int i = 0; i < k && !improved; i++) {
            for (int j = i + 1; j < k && !improved; j++) {
                int pi = partner[i], pj = partner[j];
                if (pi == j) {
                    // (i,j) paired: try splitting both to the boundary.
                    if (bdry_dist(i) >= kInf || bdry_dist(j) >= kInf ||
                        bdry_dist(i) + bdry_dist(j) != weight_of(i)) {
                        continue;
                    }
                    PauliOperator base = total * lift_of(i);  // element removed
                    for (auto& [ei_opt, lift_i] : boundary_lifts(i)) {
                        for (auto& [ej_opt, lift_j] : boundary_lifts(j)) {
                            PauliOperator cand = base * lift_i * lift_j;
                            if (cand.weight() < total.weight()) {
                                partner[i] = partner[j] = -1;
                                bchoice[i] = ei_opt;
                                bchoice[j] = ej_opt;
                                total = cand;
                                improved = true;
                                break;
                            }
                        }
                        if (improved) {
                            break;
                        }
                    }
                    continue;
                }
                if (pi < 0 && pj < 0) {
                    // Two boundary elements: try pairing them directly.
                    if (pair_dist(i, j) >= kInf || pair_dist(i, j) != bdry_dist(i) + bdry_dist(j)) {
                        continue;
                    }
                    PauliOperator cand = total * lift_of(i) * lift_of(j) * lift_pair(i, j);
                    if (cand.weight() < total.weight()) {
                        partner[i] = j;
                        partner[j] = i;
                        total = cand;
                        improved = true;
                    }
                    continue;
                }
                if (pi >= 0 && pj < 0 && pi != j) {
                    // Pair (i,pi) + boundary j -> pair (i,j) + boundary pi.
                    if (pair_dist(std::min(i, j), std::max(i, j)) >= kInf || bdry_dist(pi) >= kInf) {
                        continue;
                    }
                    int64_t alt = pair_dist(std::min(i, j), std::max(i, j)) + bdry_dist(pi);
                    if (alt != weight_of(i) + bdry_dist(j)) {
                        continue;
                    }
                    PauliOperator base = total * lift_of(i) * lift_of(j);
                    PauliOperator pair_lift = lift_pair(std::min(i, j), std::max(i, j));
                    for (auto& [e_opt, lift_pi] : boundary_lifts(pi)) {
                        PauliOperator cand = base * pair_lift * lift_pi;
                        if (cand.weight() < total.weight()) {
                            partner[i] = j;
                            partner[j] = i;
                            partner[pi] = -1;
                            bchoice[pi] = e_opt;
                            total = cand;
                            improved = true;
                            break;
                        }
                    }
                    continue;
                }
                if (pi >= 0 && pj >= 0 && pi != j && pj != i) {
                    // Two pairs: rewire to (i,j) + (pi,pj).
                    if (pair_dist(std::min(i, j), std::max(i, j)) >= kInf ||
                        pair_dist(std::min(pi, pj), std::max(pi, pj)) >= kInf) {
                        continue;
                    }
                    int64_t alt = pair_dist(std::min(i, j), std::max(i, j)) +
                                  pair_dist(std::min(pi, pj), std::max(pi, pj));
                    if (alt != weight_of(i) + weight_of(j)) {
                        continue;
                    }
                    PauliOperator cand = total * lift_of(i) * lift_of(j) *
                                         lift_pair(std::min(i, j), std::max(i, j)) *
                                         lift_pair(std::min(pi, pj), std::max(pi, pj));
                    if (cand.weight() < total.weight()) {
                        partner[i] = j;
                        partner[j] = i;
                        partner[pi] = pj;
                        partner[pj] = pi;
                        total = cand;
                        improved = true;
                    }
                }
            }
        }
    }

    for (int i = 0; i < k; i++) {
        if (partner[i] > i) {
            out.matched_weight += weight_of(i);
            out.pairs.emplace_back(defects[i], defects[partner[i]]);
            out.recovery *= lift_of(i);
        } else if (partner[i] < 0) {
            out.matched_weight += bdry_dist(i);
            out.pairs.emplace_back(defects[i], -1);
            out.recovery *= lift_of(i);
        }
    }
    return out;
}

DecodeResult decode_error(const DecodingGraph& graph, const StabilizerCode& code, const PauliOperator& error) {
    return decode(graph, code, defects_of_error(graph, code, error));
}

}  // namespace tricode
