// Blossom-based maximum weight matching over general graphs, following the
// O(n^3) primal-dual structure of Galil's survey as organized in van
// Rantwijk's widely used reference implementation. Weights are doubled
// internally so all dual variables stay integral; the result is exact.

#include "tricode/matching.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace tricode {

namespace {

constexpr int kNone = -1;

struct Matcher {
    int nvertex;
    int nedge;
    std::vector<int> endpoint;            // endpoint[p]: vertex at endpoint p; edge p/2
    std::vector<int64_t> weight;          // per edge (already doubled)
    std::vector<std::vector<int>> neighbend;  // v -> list of remote endpoints
    bool maxcardinality;

    std::vector<int> mate;                // v -> remote endpoint p or kNone
    std::vector<int> label;               // b in [0, 2n): 0 free, 1 S, 2 T
    std::vector<int> labelend;
    std::vector<int> inblossom;           // v -> top-level blossom
    std::vector<int> blossomparent;
    std::vector<int> blossombase;
    std::vector<std::vector<int>> blossomchilds;
    std::vector<std::vector<int>> blossomendps;
    std::vector<int> bestedge;
    std::vector<std::vector<int>> blossombestedges;
    std::vector<int> unusedblossoms;
    std::vector<int64_t> dualvar;
    std::vector<char> allowedge;
    std::vector<int> queue;

    Matcher(int n, const std::vector<WeightedEdge>& edges, bool maxcard)
        : nvertex(n), nedge(int(edges.size())), maxcardinality(maxcard) {
        endpoint.resize(2 * nedge);
        weight.resize(nedge);
        neighbend.resize(nvertex);
        for (int k = 0; k < nedge; k++) {
            const auto& e = edges[k];
            if (e.u == e.v || e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
                throw std::invalid_argument("bad matching edge");
            }
            endpoint[2 * k] = e.u;
            endpoint[2 * k + 1] = e.v;
            weight[k] = 2 * e.weight;
            neighbend[e.u].push_back(2 * k + 1);
            neighbend[e.v].push_back(2 * k);
        }
        int64_t maxw = 0;
        for (int k = 0; k < nedge; k++) {
            maxw = std::max(maxw, weight[k]);
        }
        mate.assign(nvertex, kNone);
        label.assign(2 * nvertex, 0);
        labelend.assign(2 * nvertex, kNone);
        inblossom.resize(nvertex);
        for (int v = 0; v < nvertex; v++) {
            inblossom[v] = v;
        }
        blossomparent.assign(2 * nvertex, kNone);
        blossombase.assign(2 * nvertex, kNone);
        for (int v = 0; v < nvertex; v++) {
            blossombase[v] = v;
        }
        blossomchilds.assign(2 * nvertex, {});
        blossomendps.assign(2 * nvertex, {});
        bestedge.assign(2 * nvertex, kNone);
        blossombestedges.assign(2 * nvertex, {});
        for (int b = nvertex; b < 2 * nvertex; b++) {
            unusedblossoms.push_back(b);
        }
        dualvar.assign(2 * nvertex, 0);
        for (int v = 0; v < nvertex; v++) {
            dualvar[v] = maxw / 2;  // weights are even after doubling
        }
        allowedge.assign(nedge, 0);
    }

    int64_t slack(int k) const { return dualvar[endpoint[2 * k]] + dualvar[endpoint[2 * k + 1]] - weight[k]; }

    void blossom_leaves(int b, std::vector<int>& out) const {
        if (b < nvertex) {
            out.push_back(b);
        } else {
            for (int t : blossomchilds[b]) {
                blossom_leaves(t, out);
            }
        }
    }

    void assign_label(int w, int t, int p) {
        int b = inblossom[w];
        label[w] = label[b] = t;
        labelend[w] = labelend[b] = p;
        bestedge[w] = bestedge[b] = kNone;
        if (t == 1) {
            std::vector<int> leaves;
            blossom_leaves(b, leaves);
            for (int v : leaves) {
                queue.push_back(v);
            }
        } else if (t == 2) {
            int base = blossombase[b];
            if (mate[base] == kNone) {
                throw std::logic_error("T-blossom base unmatched");
            }
            assign_label(endpoint[mate[base]], 1, mate[base] ^ 1);
        }
    }

    int scan_blossom(int v, int w) {
        std::vector<int> path;
        int base = kNone;
        while (v != kNone || w != kNone) {
            int b = inblossom[v];
            if (label[b] & 4) {
                base = blossombase[b];
                break;
            }
            path.push_back(b);
            label[b] = label[b] | 4;
            if (labelend[b] == kNone) {
                v = kNone;
            } else {
                v = endpoint[labelend[b]];
                b = inblossom[v];
                v = endpoint[labelend[b]];
            }
            if (w != kNone) {
                std::swap(v, w);
            }
        }
        for (int b : path) {
            label[b] = label[b] & ~4;
        }
        return base;
    }

    void add_blossom(int base, int k) {
        int v = endpoint[2 * k];
        int w = endpoint[2 * k + 1];
        int bb = inblossom[base];
        int bv = inblossom[v];
        int bw = inblossom[w];
        int b = unusedblossoms.back();
        unusedblossoms.pop_back();
        blossombase[b] = base;
        blossomparent[b] = kNone;
        blossomparent[bb] = b;
        auto& path = blossomchilds[b];
        auto& endps = blossomendps[b];
        path.clear();
        endps.clear();
        while (bv != bb) {
            blossomparent[bv] = b;
            path.push_back(bv);
            endps.push_back(labelend[bv]);
            v = endpoint[labelend[bv]];
            bv = inblossom[v];
        }
        path.push_back(bb);
        std::reverse(path.begin(), path.end());
        std::reverse(endps.begin(), endps.end());
        endps.push_back(2 * k);
        while (bw != bb) {
            blossomparent[bw] = b;
            path.push_back(bw);
            endps.push_back(labelend[bw] ^ 1);
            w = endpoint[labelend[bw]];
            bw = inblossom[w];
        }
        label[b] = 1;
        labelend[b] = labelend[bb];
        dualvar[b] = 0;
        std::vector<int> leaves;
        blossom_leaves(b, leaves);
        for (int leaf : leaves) {
            if (label[inblossom[leaf]] == 2) {
                queue.push_back(leaf);
            }
            inblossom[leaf] = b;
        }
        // Best-edge lists for delta3 bookkeeping.
        std::vector<int> bestedgeto(2 * nvertex, kNone);
        for (int child : path) {
            std::vector<int> nblists;
            std::vector<std::vector<int>> lists;
            if (!blossombestedges[child].empty()) {
                lists.push_back(blossombestedges[child]);
            } else {
                std::vector<int> all;
                std::vector<int> cl;
                blossom_leaves(child, cl);
                for (int leaf : cl) {
                    for (int p : neighbend[leaf]) {
                        all.push_back(p / 2);
                    }
                }
                lists.push_back(all);
            }
            for (auto& lst : lists) {
                for (int kk : lst) {
                    int i = endpoint[2 * kk], j = endpoint[2 * kk + 1];
                    if (inblossom[j] == b) {
                        std::swap(i, j);
                    }
                    int bj = inblossom[j];
                    if (bj != b && label[bj] == 1 &&
                        (bestedgeto[bj] == kNone || slack(kk) < slack(bestedgeto[bj]))) {
                        bestedgeto[bj] = kk;
                    }
                }
            }
            blossombestedges[child].clear();
            bestedge[child] = kNone;
        }
        auto& bbe = blossombestedges[b];
        bbe.clear();
        for (int kk : bestedgeto) {
            if (kk != kNone) {
                bbe.push_back(kk);
            }
        }
        bestedge[b] = kNone;
        for (int kk : bbe) {
            if (bestedge[b] == kNone || slack(kk) < slack(bestedge[b])) {
                bestedge[b] = kk;
            }
        }
    }

    void expand_blossom(int b, bool endstage) {
        for (int s : blossomchilds[b]) {
            blossomparent[s] = kNone;
            if (s < nvertex) {
                inblossom[s] = s;
            } else if (endstage && dualvar[s] == 0) {
                expand_blossom(s, endstage);
            } else {
                std::vector<int> leaves;
                blossom_leaves(s, leaves);
                for (int v : leaves) {
                    inblossom[v] = s;
                }
            }
        }
        if (!endstage && label[b] == 2) {
            // Relabel the path that attached this T-blossom.
            int entrychild = inblossom[endpoint[labelend[b] ^ 1]];
            int j = int(std::find(blossomchilds[b].begin(), blossomchilds[b].end(), entrychild) -
                        blossomchilds[b].begin());
            int jstep, endptrick;
            if (j & 1) {
                j -= int(blossomchilds[b].size());
                jstep = 1;
                endptrick = 0;
            } else {
                jstep = -1;
                endptrick = 1;
            }
            int p = labelend[b];
            while (j != 0) {
                label[endpoint[p ^ 1]] = 0;
                int idx = ((j - endptrick) % int(blossomchilds[b].size()) + int(blossomchilds[b].size())) %
                          int(blossomchilds[b].size());
                label[endpoint[blossomendps[b][idx] ^ endptrick ^ 1]] = 0;
                assign_label(endpoint[p ^ 1], 2, p);
                allowedge[blossomendps[b][idx] / 2] = 1;
                j += jstep;
                int idx2 = ((j - endptrick) % int(blossomchilds[b].size()) + int(blossomchilds[b].size())) %
                           int(blossomchilds[b].size());
                p = blossomendps[b][idx2] ^ endptrick;
                allowedge[p / 2] = 1;
                j += jstep;
            }
            int bv = blossomchilds[b][((j % int(blossomchilds[b].size())) + int(blossomchilds[b].size())) %
                                      int(blossomchilds[b].size())];
            label[endpoint[p ^ 1]] = label[bv] = 2;
            labelend[endpoint[p ^ 1]] = labelend[bv] = p;
            bestedge[bv] = kNone;
            // Continue along the path, making the even-position children T-reachable.
            j += jstep;
            while (blossomchilds[b][((j % int(blossomchilds[b].size())) + int(blossomchilds[b].size())) %
                                    int(blossomchilds[b].size())] != entrychild) {
                bv = blossomchilds[b][((j % int(blossomchilds[b].size())) + int(blossomchilds[b].size())) %
                                      int(blossomchilds[b].size())];
                if (label[bv] == 1) {
                    j += jstep;
                    continue;
                }
                std::vector<int> leaves;
                blossom_leaves(bv, leaves);
                int v = kNone;
                for (int leaf : leaves) {
                    if (label[leaf] != 0) {
                        v = leaf;
                        break;
                    }
                }
                if (v != kNone) {
                    label[v] = 0;
                    label[endpoint[mate[blossombase[bv]]]] = 0;
                    assign_label(v, 2, labelend[v]);
                }
                j += jstep;
            }
        }
        label[b] = labelend[b] = kNone;
        label[b] = 0;
        labelend[b] = kNone;
        blossomchilds[b].clear();
        blossomendps[b].clear();
        blossombase[b] = kNone;
        blossombestedges[b].clear();
        bestedge[b] = kNone;
        unusedblossoms.push_back(b);
    }

    void augment_blossom(int b, int v) {
        int t = v;
        while (blossomparent[t] != b) {
            t = blossomparent[t];
        }
        if (t >= nvertex) {
            augment_blossom(t, v);
        }
        int i = int(std::find(blossomchilds[b].begin(), blossomchilds[b].end(), t) - blossomchilds[b].begin());
        int j = i;
        int jstep, endptrick;
        int sz = int(blossomchilds[b].size());
        if (i & 1) {
            j -= sz;
            jstep = 1;
            endptrick = 0;
        } else {
            jstep = -1;
            endptrick = 1;
        }
        while (j != 0) {
            j += jstep;
            int idx = ((j % sz) + sz) % sz;
            int t2 = blossomchilds[b][idx];
            int idx_p = (((j - endptrick) % sz) + sz) % sz;
            int p = blossomendps[b][idx_p] ^ endptrick;
            if (t2 >= nvertex) {
                augment_blossom(t2, endpoint[p]);
            }
            j += jstep;
            int idx3 = ((j % sz) + sz) % sz;
            int t3 = blossomchilds[b][idx3];
            if (t3 >= nvertex) {
                augment_blossom(t3, endpoint[p ^ 1]);
            }
            mate[endpoint[p]] = p ^ 1;
            mate[endpoint[p ^ 1]] = p;
        }
        std::rotate(blossomchilds[b].begin(), blossomchilds[b].begin() + i, blossomchilds[b].end());
        std::rotate(blossomendps[b].begin(), blossomendps[b].begin() + i, blossomendps[b].end());
        blossombase[b] = blossombase[blossomchilds[b][0]];
        if (blossombase[b] != v) {
            throw std::logic_error("blossom base mismatch after augment");
        }
    }

    void augment_matching(int k) {
        int v = endpoint[2 * k];
        int w = endpoint[2 * k + 1];
        for (auto [s, p] : {std::pair{v, 2 * k + 1}, std::pair{w, 2 * k}}) {
            while (true) {
                int bs = inblossom[s];
                if (label[bs] != 1) {
                    throw std::logic_error("augment path not S-labeled");
                }
                if (labelend[bs] != kNone && labelend[bs] != mate[blossombase[bs]]) {
                    throw std::logic_error("augment path broken");
                }
                if (bs >= nvertex) {
                    augment_blossom(bs, s);
                }
                mate[s] = p;
                if (labelend[bs] == kNone) {
                    break;
                }
                int t = endpoint[labelend[bs]];
                int bt = inblossom[t];
                if (label[bt] != 2) {
                    throw std::logic_error("augment path T expected");
                }
                v = endpoint[labelend[bt]];
                w = endpoint[labelend[bt] ^ 1];
                if (blossombase[bt] != t) {
                    throw std::logic_error("augment path base mismatch");
                }
                if (bt >= nvertex) {
                    augment_blossom(bt, w);
                }
                mate[w] = labelend[bt];
                p = labelend[bt] ^ 1;
                s = v;
            }
        }
    }

    std::vector<int> run() {
        if (nedge == 0) {
            return std::vector<int>(nvertex, kNone);
        }
        for (int t = 0; t < nvertex; t++) {
            std::fill(label.begin(), label.end(), 0);
            std::fill(bestedge.begin(), bestedge.end(), kNone);
            for (int b = nvertex; b < 2 * nvertex; b++) {
                blossombestedges[b].clear();
            }
            std::fill(allowedge.begin(), allowedge.end(), 0);
            queue.clear();
            for (int v = 0; v < nvertex; v++) {
                if (mate[v] == kNone && label[inblossom[v]] == 0) {
                    assign_label(v, 1, kNone);
                }
            }
            bool augmented = false;
            while (true) {
                while (!queue.empty() && !augmented) {
                    int v = queue.back();
                    queue.pop_back();
                    if (label[inblossom[v]] != 1) {
                        throw std::logic_error("queue vertex not S");
                    }
                    for (int p : neighbend[v]) {
                        int k = p / 2;
                        int w = endpoint[p];
                        if (inblossom[v] == inblossom[w]) {
                            continue;
                        }
                        int64_t kslack = 0;
                        if (!allowedge[k]) {
                            kslack = slack(k);
                            if (kslack <= 0) {
                                allowedge[k] = 1;
                            }
                        }
                        if (allowedge[k]) {
                            if (label[inblossom[w]] == 0) {
                                assign_label(w, 2, p ^ 1);
                            } else if (label[inblossom[w]] == 1) {
                                int base = scan_blossom(v, w);
                                if (base >= 0) {
                                    add_blossom(base, k);
                                } else {
                                    augment_matching(k);
                                    augmented = true;
                                    break;
                                }
                            } else if (label[w] == 0) {
                                label[w] = 2;
                                labelend[w] = p ^ 1;
                            }
                        } else if (label[inblossom[w]] == 1) {
                            int b = inblossom[v];
                            if (bestedge[b] == kNone || kslack < slack(bestedge[b])) {
                                bestedge[b] = k;
                            }
                        } else if (label[w] == 0) {
                            if (bestedge[w] == kNone || kslack < slack(bestedge[w])) {
                                bestedge[w] = k;
                            }
                        }
                    }
                }
                if (augmented) {
                    break;
                }
                // Dual adjustment.
                int deltatype = -1;
                int64_t delta = 0;
                int deltaedge = kNone, deltablossom = kNone;
                if (!maxcardinality) {
                    deltatype = 1;
                    delta = std::numeric_limits<int64_t>::max();
                    for (int v = 0; v < nvertex; v++) {
                        delta = std::min(delta, dualvar[v]);
                    }
                }
                for (int v = 0; v < nvertex; v++) {
                    if (label[inblossom[v]] == 0 && bestedge[v] != kNone) {
                        int64_t d = slack(bestedge[v]);
                        if (deltatype == -1 || d < delta) {
                            delta = d;
                            deltatype = 2;
                            deltaedge = bestedge[v];
                        }
                    }
                }
                for (int b = 0; b < 2 * nvertex; b++) {
                    if (blossomparent[b] == kNone && label[b] == 1 && bestedge[b] != kNone) {
                        int64_t kslack = slack(bestedge[b]);
                        int64_t d = kslack / 2;
                        if (deltatype == -1 || d < delta) {
                            delta = d;
                            deltatype = 3;
                            deltaedge = bestedge[b];
                        }
                    }
                }
                for (int b = nvertex; b < 2 * nvertex; b++) {
                    if (blossombase[b] >= 0 && blossomparent[b] == kNone && label[b] == 2 &&
                        (deltatype == -1 || dualvar[b] < delta)) {
                        delta = dualvar[b];
                        deltatype = 4;
                        deltablossom = b;
                    }
                }
                if (deltatype == -1) {
                    // No further progress possible (max cardinality reached).
                    deltatype = 1;
                    int64_t mn = std::numeric_limits<int64_t>::max();
                    for (int v = 0; v < nvertex; v++) {
                        mn = std::min(mn, dualvar[v]);
                    }
                    delta = std::max<int64_t>(0, mn);
                }
                for (int v = 0; v < nvertex; v++) {
                    if (label[inblossom[v]] == 1) {
                        dualvar[v] -= delta;
                    } else if (label[inblossom[v]] == 2) {
                        dualvar[v] += delta;
                    }
                }
                for (int b = nvertex; b < 2 * nvertex; b++) {
                    if (blossombase[b] >= 0 && blossomparent[b] == kNone) {
                        if (label[b] == 1) {
                            dualvar[b] += delta;
                        } else if (label[b] == 2) {
                            dualvar[b] -= delta;
                        }
                    }
                }
                if (deltatype == 1) {
                    break;
                } else if (deltatype == 2) {
                    allowedge[deltaedge] = 1;
                    int v = endpoint[2 * deltaedge];
                    if (label[inblossom[v]] == 0) {
                        v = endpoint[2 * deltaedge + 1];
                    }
                    queue.push_back(v);
                } else if (deltatype == 3) {
                    allowedge[deltaedge] = 1;
                    queue.push_back(endpoint[2 * deltaedge]);
                } else {
                    expand_blossom(deltablossom, false);
                }
            }
            if (!augmented) {
                break;
            }
            for (int b = nvertex; b < 2 * nvertex; b++) {
                if (blossomparent[b] == kNone && blossombase[b] >= 0 && label[b] == 1 && dualvar[b] == 0) {
                    expand_blossom(b, true);
                }
            }
        }
        std::vector<int> result(nvertex, kNone);
        for (int v = 0; v < nvertex; v++) {
            if (mate[v] != kNone) {
                result[v] = endpoint[mate[v]];
            }
        }
        for (int v = 0; v < nvertex; v++) {
            if (result[v] != kNone && result[result[v]] != v) {
                throw std::logic_error("matching postcondition violated");
            }
        }
        return result;
    }
};

}  // namespace

std::vector<int> max_weight_matching(int num_vertices, const std::vector<WeightedEdge>& edges, bool max_cardinality) {
    Matcher m(num_vertices, edges, max_cardinality);
    return m.run();
}

std::vector<int> min_weight_perfect_matching(int num_vertices, const std::vector<WeightedEdge>& edges) {
    if (num_vertices % 2 != 0) {
        throw std::invalid_argument("perfect matching needs an even vertex count");
    }
    // Reflect weights so max-weight matching prefers perfect matchings: with
    // every transformed weight positive and large, cardinality dominates.
    int64_t maxw = 1;
    for (const auto& e : edges) {
        maxw = std::max(maxw, e.weight);
    }
    int64_t shift = maxw * int64_t(num_vertices) + 1;
    std::vector<WeightedEdge> flipped;
    flipped.reserve(edges.size());
    for (const auto& e : edges) {
        flipped.push_back({e.u, e.v, shift - e.weight});
    }
    auto mate = max_weight_matching(num_vertices, flipped, true);
    for (int v = 0; v < num_vertices; v++) {
        if (mate[v] < 0) {
            throw std::runtime_error("no perfect matching exists");
        }
    }
    return mate;
}

}  // namespace tricode
