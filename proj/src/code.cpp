#include "tricode/code.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace tricode {

const char* check_kind_name(CheckKind k) {
    switch (k) {
        case CheckKind::X:
            return "X";
        case CheckKind::Z:
            return "Z";
        case CheckKind::Mixed:
            return "mixed";
        case CheckKind::MixedCentral:
            return "mixed-central";
    }
    return "?";
}

std::string CodeSpec::str() const {
    std::ostringstream ss;
    if (kind == Kind::Triangle) {
        ss << "triangle(" << r << "," << s << "," << t << ")";
    } else {
        ss << "rotated_surface(" << d << ")";
    }
    return ss.str();
}

std::vector<PauliOperator> StabilizerCode::generators() const {
    std::vector<PauliOperator> out;
    out.reserve(plaquettes.size() + loops.size());
    for (const auto& c : plaquettes) {
        out.push_back(c.pauli);
    }
    for (const auto& c : loops) {
        out.push_back(c.pauli);
    }
    return out;
}

size_t StabilizerCode::qubit_at(const Coord& c) const {
    auto it = index_of.find(c);
    if (it == index_of.end()) {
        throw std::out_of_range("no qubit at requested coordinate");
    }
    return it->second;
}

const PauliOperator& StabilizerCode::logical(int which) const {
    switch (which) {
        case 0:
            return logical_x;
        case 1:
            return logical_y;
        case 2:
            return logical_z;
    }
    throw std::out_of_range("logical index");
}

std::vector<uint8_t> StabilizerCode::syndrome(const PauliOperator& error) const {
    std::vector<uint8_t> out;
    out.reserve(plaquettes.size() + loops.size());
    for (const auto& c : plaquettes) {
        out.push_back(c.pauli.commutes_with(error) ? 0 : 1);
    }
    for (const auto& c : loops) {
        out.push_back(c.pauli.commutes_with(error) ? 0 : 1);
    }
    return out;
}

namespace {

struct Builder {
    int r, s, t;
    std::vector<Coord> coords;
    std::map<Coord, size_t> index;

    void add_qubit(const Coord& c) {
        if (!index.count(c)) {
            index[c] = coords.size();
            coords.push_back(c);
        }
    }
};

// Qubit order: xy-plane lexicographic in (x,y), then xz-plane (x,z) for z>0,
// then yz-plane (y,z) for y>0, z>0. Axis qubits land in the earliest plane.
Builder enumerate_triangle_qubits(int r, int s, int t) {
    Builder b{r, s, t, {}, {}};
    for (int x = 0; x < r; x++) {
        for (int y = 0; y < s; y++) {
            b.add_qubit({x, y, 0});
        }
    }
    for (int x = 0; x < r; x++) {
        for (int z = 1; z < t; z++) {
            b.add_qubit({x, 0, z});
        }
    }
    for (int y = 1; y < s; y++) {
        for (int z = 1; z < t; z++) {
            b.add_qubit({0, y, z});
        }
    }
    return b;
}

// Boundary walk: x-side, then z-side, then y-side, corners visited once.
// Returns the ordered cycle (or path, for line-shaped codes) together with a
// side label per position (0=x, 1=y, 2=z).
void boundary_walk(int r, int s, int t, std::vector<Coord>& walk, std::vector<int>& side) {
    auto push = [&](Coord c, int sd) {
        if (std::find(walk.begin(), walk.end(), c) == walk.end()) {
            walk.push_back(c);
            side.push_back(sd);
        }
    };
    for (int j = s - 1; j >= 0; j--) {
        push({r - 1, j, 0}, 0);
    }
    for (int k = 1; k < t; k++) {
        push({r - 1, 0, k}, 0);
    }
    for (int i = r - 2; i >= 0; i--) {
        push({i, 0, t - 1}, 2);
    }
    for (int j = 1; j < s; j++) {
        push({0, j, t - 1}, 2);
    }
    for (int k = t - 2; k >= 0; k--) {
        push({0, s - 1, k}, 1);
    }
    for (int i = 1; i <= r - 2; i++) {
        push({i, s - 1, 0}, 1);
    }
}

struct LoopCandidate {
    size_t qa, qb;
    int side;
    std::vector<std::pair<char, char>> options;  // surviving Pauli assignments
    int chosen = -1;
};

bool loop_commutes(const PauliOperator& gen, size_t qa, size_t qb, char pa, char pb) {
    auto anti = [&](size_t q, char p) {
        char g = gen.pauli_at(q);
        if (g == 'I' || g == p) {
            return 0;
        }
        return 1;  // distinct non-identity single-qubit Paulis anticommute
    };
    return ((anti(qa, pa) + anti(qb, pb)) & 1) == 0;
}

// Assigns loop Paulis by constraint propagation plus backtracking over the
// remaining ambiguity. Returns false if no consistent assignment exists.
bool solve_loops(std::vector<LoopCandidate>& cands, size_t pos, size_t n) {
    if (pos == cands.size()) {
        return true;
    }
    auto& lc = cands[pos];
    for (size_t oi = 0; oi < lc.options.size(); oi++) {
        auto [pa, pb] = lc.options[oi];
        bool ok = true;
        // Overlapping earlier loops (line-shaped codes) must agree pointwise.
        for (size_t e = 0; e < pos && ok; e++) {
            const auto& other = cands[e];
            auto [oa, ob] = other.options[other.chosen];
            auto entry = [&](const LoopCandidate& l, char ea, char eb, size_t q) -> char {
                if (l.qa == q) {
                    return ea;
                }
                if (l.qb == q) {
                    return eb;
                }
                return 'I';
            };
            int antis = 0;
            for (size_t q : {lc.qa, lc.qb}) {
                char mine = entry(lc, pa, pb, q);
                char theirs = entry(other, oa, ob, q);
                if (mine != 'I' && theirs != 'I' && mine != theirs) {
                    antis++;
                }
            }
            ok = (antis & 1) == 0;
        }
        if (!ok) {
            continue;
        }
        lc.chosen = static_cast<int>(oi);
        if (solve_loops(cands, pos + 1, n)) {
            return true;
        }
        lc.chosen = -1;
    }
    return false;
}

}  // namespace

StabilizerCode build_triangle(int r, int s, int t) {
    if (r < 1 || s < 1 || t < 1) {
        throw std::invalid_argument("triangle parameters must be positive");
    }
    Builder b = enumerate_triangle_qubits(r, s, t);
    StabilizerCode code;
    code.spec = CodeSpec::triangle(r, s, t);
    code.coords = b.coords;
    code.index_of = b.index;
    code.n = b.coords.size();
    code.distances = {s + t - 1, r + t - 1, r + s - 1};
    size_t n = code.n;

    auto Q = [&](int x, int y, int z) { return code.qubit_at({x, y, z}); };

    // Plaquettes.
    if (r >= 2 && s >= 2) {
        // xy-plane: mixed column at i=0, alternating pure checkerboard beyond.
        for (int i = 0; i + 1 < r; i++) {
            for (int j = 0; j + 1 < s; j++) {
                Check c;
                c.center2 = {2 * i + 1, 2 * j + 1, 0};
                c.is_plaquette = true;
                c.boundary_side = -1;
                PauliOperator p(n);
                if (i == 0) {
                    char a = (j % 2 == 0) ? 'X' : 'Z';
                    char bb = (a == 'X') ? 'Z' : 'X';
                    p.set_pauli(Q(0, j, 0), a);
                    p.set_pauli(Q(0, j + 1, 0), a);
                    p.set_pauli(Q(1, j, 0), bb);
                    p.set_pauli(Q(1, j + 1, 0), bb);
                    if (j == 0) {
                        p.set_pauli(Q(0, 0, 0), 'Y');
                        c.kind = CheckKind::MixedCentral;
                    } else {
                        c.kind = CheckKind::Mixed;
                    }
                } else {
                    char ty = ((i + j) % 2 == 1) ? 'X' : 'Z';
                    c.kind = (ty == 'X') ? CheckKind::X : CheckKind::Z;
                    p.set_pauli(Q(i, j, 0), ty);
                    p.set_pauli(Q(i + 1, j, 0), ty);
                    p.set_pauli(Q(i, j + 1, 0), ty);
                    p.set_pauli(Q(i + 1, j + 1, 0), ty);
                }
                c.pauli = p;
                code.plaquettes.push_back(std::move(c));
            }
        }
    }
    if (r >= 2 && t >= 2) {
        // xz-plane: pure checkerboard, X-type anchored at (1/2, 0, 1/2).
        for (int i = 0; i + 1 < r; i++) {
            for (int k = 0; k + 1 < t; k++) {
                char ty = ((i + k) % 2 == 0) ? 'X' : 'Z';
                Check c;
                c.center2 = {2 * i + 1, 0, 2 * k + 1};
                c.is_plaquette = true;
                c.boundary_side = -1;
                c.kind = (ty == 'X') ? CheckKind::X : CheckKind::Z;
                PauliOperator p(n);
                p.set_pauli(Q(i, 0, k), ty);
                p.set_pauli(Q(i + 1, 0, k), ty);
                p.set_pauli(Q(i, 0, k + 1), ty);
                p.set_pauli(Q(i + 1, 0, k + 1), ty);
                c.pauli = p;
                code.plaquettes.push_back(std::move(c));
            }
        }
    }
    if (s >= 2 && t >= 2) {
        // yz-plane: pure checkerboard, Z-type anchored at (0, 1/2, 1/2).
        for (int j = 0; j + 1 < s; j++) {
            for (int k = 0; k + 1 < t; k++) {
                char ty = ((j + k) % 2 == 0) ? 'Z' : 'X';
                Check c;
                c.center2 = {0, 2 * j + 1, 2 * k + 1};
                c.is_plaquette = true;
                c.boundary_side = -1;
                c.kind = (ty == 'X') ? CheckKind::X : CheckKind::Z;
                PauliOperator p(n);
                p.set_pauli(Q(0, j, k), ty);
                p.set_pauli(Q(0, j + 1, k), ty);
                p.set_pauli(Q(0, j, k + 1), ty);
                p.set_pauli(Q(0, j + 1, k + 1), ty);
                c.pauli = p;
                code.plaquettes.push_back(std::move(c));
            }
        }
    }

    // Logical operators. Eqs hold literally when the mixed column exists; the
    // degenerate sheet/line cases use the equivalent corner-Y representatives
    // (the literal strings fail to commute there).
    {
        PauliOperator lx(n), ly(n), lz(n);
        if (r == 1 && s == 1 && t == 1) {
            lx.set_pauli(0, 'X');
            ly.set_pauli(0, 'Y');
            lz.set_pauli(0, 'Z');
        } else if (r == 1) {
            lx.set_pauli(Q(0, 0, 0), 'Y');
            for (int j = 1; j < s; j++) {
                lx.set_pauli(Q(0, j, 0), 'Z');
            }
            for (int k = 1; k < t; k++) {
                lx.set_pauli(Q(0, 0, k), 'X');
            }
            for (int k = 0; k < t; k++) {
                ly.set_pauli(Q(0, s - 1, k), 'X');
            }
            for (int j = 0; j < s; j++) {
                lz.set_pauli(Q(0, j, t - 1), 'Z');
            }
        } else if (s == 1) {
            for (int k = 0; k < t; k++) {
                lx.set_pauli(Q(r - 1, 0, k), 'X');
            }
            ly.set_pauli(Q(0, 0, 0), 'Y');
            for (int i = 1; i < r; i++) {
                ly.set_pauli(Q(i, 0, 0), 'Z');
            }
            for (int k = 1; k < t; k++) {
                ly.set_pauli(Q(0, 0, k), 'X');
            }
            for (int i = 1; i < r; i++) {
                lz.set_pauli(Q(i, 0, t - 1), 'Z');
            }
            lz.set_pauli(Q(0, 0, t - 1), 'Z');
        } else {
            for (int j = 1; j < s; j++) {
                lx.set_pauli(Q(r - 1, j, 0), 'X');
            }
            for (int k = 0; k < t; k++) {
                lx.set_pauli(Q(r - 1, 0, k), 'X');
            }
            for (int i = 1; i < r; i++) {
                ly.set_pauli(Q(i, s - 1, 0), 'Z');
            }
            for (int k = 0; k < t; k++) {
                ly.set_pauli(Q(0, s - 1, k), 'X');
            }
            for (int i = 1; i < r; i++) {
                lz.set_pauli(Q(i, 0, t - 1), 'Z');
            }
            for (int j = 0; j < s; j++) {
                lz.set_pauli(Q(0, j, t - 1), 'Z');
            }
        }
        code.logical_x = lx;
        code.logical_y = ly;
        code.logical_z = lz;
    }

    // Loops along the boundary walk.
    size_t expected_loops = static_cast<size_t>(r + s + t - 3);
    if (expected_loops > 0) {
        std::vector<Coord> walk;
        std::vector<int> side;
        boundary_walk(r, s, t, walk, side);

        auto make_candidates = [&](int phase) -> std::vector<LoopCandidate> {
            std::vector<LoopCandidate> cands;
            size_t w = walk.size();
            if (w == 2 * expected_loops) {
                for (size_t e = 0; e < expected_loops; e++) {
                    size_t a = (2 * e + phase) % w;
                    size_t bq = (2 * e + 1 + phase) % w;
                    cands.push_back(LoopCandidate{code.qubit_at(walk[a]), code.qubit_at(walk[bq]), side[a], {}, -1});
                }
            } else if (w == expected_loops + 1 && phase == 0) {
                // Line-shaped code: loops on every adjacent pair.
                for (size_t e = 0; e + 1 < w; e++) {
                    cands.push_back(LoopCandidate{code.qubit_at(walk[e]), code.qubit_at(walk[e + 1]), side[e], {}, -1});
                }
            } else if (w != expected_loops + 1) {
                throw std::logic_error("boundary walk size inconsistent with loop count");
            }
            return cands;
        };

        std::array<PauliOperator, 3> logicals{code.logical_x, code.logical_y, code.logical_z};
        bool solved = false;
        for (int phase = 0; phase < 2 && !solved; phase++) {
            auto cands = make_candidates(phase);
            if (cands.empty()) {
                continue;
            }
            bool feasible = true;
            for (auto& lc : cands) {
                bool on_x_side = r >= 2 && code.coords[lc.qa][0] == r - 1 && code.coords[lc.qb][0] == r - 1;
                std::vector<std::pair<char, char>> opts;
                // Pure types first so ambiguous loops resolve deterministically.
                for (auto [pa, pb] : {std::pair{'Z', 'Z'}, {'X', 'X'}, {'X', 'Z'}, {'Z', 'X'}}) {
                    if (on_x_side && !(pa == 'Z' && pb == 'Z')) {
                        continue;
                    }
                    bool ok = true;
                    for (const auto& pl : code.plaquettes) {
                        if (!loop_commutes(pl.pauli, lc.qa, lc.qb, pa, pb)) {
                            ok = false;
                            break;
                        }
                    }
                    for (const auto& lg : logicals) {
                        if (ok && !loop_commutes(lg, lc.qa, lc.qb, pa, pb)) {
                            ok = false;
                        }
                    }
                    if (ok) {
                        opts.emplace_back(pa, pb);
                    }
                }
                if (opts.empty()) {
                    feasible = false;
                    break;
                }
                lc.options = std::move(opts);
            }
            if (!feasible || !solve_loops(cands, 0, n)) {
                continue;
            }
            // Candidate assignment found; accept if the generator set has full
            // rank n-1 (this rejects the wrong tiling phase).
            std::vector<Check> loops;
            for (const auto& lc : cands) {
                auto [pa, pb] = lc.options[lc.chosen];
                Check c;
                const Coord& ca = code.coords[lc.qa];
                const Coord& cb = code.coords[lc.qb];
                c.center2 = {ca[0] + cb[0], ca[1] + cb[1], ca[2] + cb[2]};
                c.is_plaquette = false;
                c.boundary_side = lc.side;
                PauliOperator p(n);
                p.set_pauli(lc.qa, pa);
                p.set_pauli(lc.qb, pb);
                if (pa == pb) {
                    c.kind = (pa == 'X') ? CheckKind::X : CheckKind::Z;
                } else {
                    c.kind = CheckKind::Mixed;
                }
                c.pauli = p;
                loops.push_back(std::move(c));
            }
            code.loops = loops;
            auto gens = code.generators();
            if (gens.size() == n - 1 && symplectic_rank(gens) == n - 1) {
                solved = true;
            } else {
                code.loops.clear();
            }
        }
        if (!solved) {
            throw std::logic_error("no consistent loop assignment found for " + code.spec.str());
        }
    }
    return code;
}

StabilizerCode build_rotated_surface(int d) {
    if (d < 3 || d % 2 == 0) {
        throw std::invalid_argument("rotated surface code requires odd d >= 3");
    }
    StabilizerCode code;
    code.spec = CodeSpec::rotated_surface(d);
    code.distances = {d, 2 * d - 1, d};
    for (int a = 0; a < d; a++) {
        for (int bb = 0; bb < d; bb++) {
            Coord c{a, bb, 0};
            code.index_of[c] = code.coords.size();
            code.coords.push_back(c);
        }
    }
    code.n = code.coords.size();
    size_t n = code.n;
    auto Q = [&](int a, int bb) { return code.qubit_at({a, bb, 0}); };

    for (int a = 0; a + 1 < d; a++) {
        for (int bb = 0; bb + 1 < d; bb++) {
            char ty = ((a + bb) % 2 == 0) ? 'X' : 'Z';
            Check c;
            c.center2 = {2 * a + 1, 2 * bb + 1, 0};
            c.is_plaquette = true;
            c.boundary_side = -1;
            c.kind = (ty == 'X') ? CheckKind::X : CheckKind::Z;
            PauliOperator p(n);
            p.set_pauli(Q(a, bb), ty);
            p.set_pauli(Q(a + 1, bb), ty);
            p.set_pauli(Q(a, bb + 1), ty);
            p.set_pauli(Q(a + 1, bb + 1), ty);
            c.pauli = p;
            code.plaquettes.push_back(std::move(c));
        }
    }
    auto add_pair = [&](int a1, int b1, int a2, int b2, char ty, int side) {
        Check c;
        c.center2 = {a1 + a2, b1 + b2, 0};
        c.is_plaquette = false;
        c.boundary_side = side;
        c.kind = (ty == 'X') ? CheckKind::X : CheckKind::Z;
        PauliOperator p(n);
        p.set_pauli(Q(a1, b1), ty);
        p.set_pauli(Q(a2, b2), ty);
        c.pauli = p;
        code.loops.push_back(std::move(c));
    };
    for (int a = 1; a + 1 < d; a += 2) {
        add_pair(a, 0, a + 1, 0, 'X', 2);  // top row: X checks
    }
    for (int a = 0; a + 1 < d; a += 2) {
        add_pair(a, d - 1, a + 1, d - 1, 'X', 2);  // bottom row
    }
    for (int bb = 0; bb + 1 < d; bb += 2) {
        add_pair(0, bb, 0, bb + 1, 'Z', 0);  // left column: Z checks
    }
    for (int bb = 1; bb + 1 < d; bb += 2) {
        add_pair(d - 1, bb, d - 1, bb + 1, 'Z', 0);  // right column
    }

    PauliOperator lx(n), lz(n);
    for (int bb = 0; bb < d; bb++) {
        lx.set_pauli(Q(0, bb), 'X');
    }
    for (int a = 0; a < d; a++) {
        lz.set_pauli(Q(a, 0), 'Z');
    }
    PauliOperator ly = lx;
    ly *= lz;
    ly.mul_phase(1);
    code.logical_x = lx;
    code.logical_y = ly;
    code.logical_z = lz;
    return code;
}

StabilizerCode build_code(const CodeSpec& spec) {
    if (spec.kind == CodeSpec::Kind::Triangle) {
        return build_triangle(spec.r, spec.s, spec.t);
    }
    return build_rotated_surface(spec.d);
}

std::string ValidationReport::summary() const {
    std::ostringstream ss;
    if (ok()) {
        ss << "all " << passed.size() << " checks passed";
    } else {
        ss << failures.size() << " failure(s):";
        for (const auto& f : failures) {
            ss << "\n  [" << f.check << "] " << f.detail;
        }
    }
    return ss.str();
}

ValidationReport validate(const StabilizerCode& code, bool brute_force_distance) {
    ValidationReport rep;
    auto record = [&](const std::string& name, bool ok, const std::string& detail) {
        if (ok) {
            rep.passed.push_back(name);
        } else {
            rep.failures.push_back({name, detail});
        }
    };

    bool coord_ok = true;
    if (code.spec.kind == CodeSpec::Kind::Triangle) {
        for (const auto& c : code.coords) {
            if (c[0] != 0 && c[1] != 0 && c[2] != 0) {
                coord_ok = false;
            }
            if (c[0] < 0 || c[0] >= code.spec.r || c[1] < 0 || c[1] >= code.spec.s || c[2] < 0 ||
                c[2] >= code.spec.t) {
                coord_ok = false;
            }
        }
    }
    record("coordinates", coord_ok, "qubit coordinate out of range or off the three planes");

    auto gens = code.generators();
    bool commute_ok = true;
    std::string commute_detail;
    for (size_t i = 0; i < gens.size() && commute_ok; i++) {
        for (size_t j = i + 1; j < gens.size(); j++) {
            if (!gens[i].commutes_with(gens[j])) {
                commute_ok = false;
                commute_detail = "generators " + std::to_string(i) + " and " + std::to_string(j) + " anticommute";
                break;
            }
        }
    }
    record("generator_commutation", commute_ok, commute_detail);

    record("generator_count", gens.size() == code.n - (code.n > 0 ? 1 : 0),
           "expected n-1 generators, found " + std::to_string(gens.size()));
    record("generator_independence", symplectic_rank(gens) == gens.size(), "generators are dependent");

    bool log_comm = true;
    for (int l = 0; l < 3; l++) {
        for (const auto& g : gens) {
            if (!code.logical(l).commutes_with(g)) {
                log_comm = false;
            }
        }
    }
    record("logicals_commute_with_stabilizers", log_comm, "a logical anticommutes with a generator");

    bool log_anti = !code.logical_x.commutes_with(code.logical_y) &&
                    !code.logical_y.commutes_with(code.logical_z) &&
                    !code.logical_x.commutes_with(code.logical_z);
    if (code.n == 1) {
        log_anti = true;  // single-qubit X, Y, Z
    }
    record("logicals_pairwise_anticommute", log_anti, "logicals do not pairwise anticommute");

    if (commute_ok && log_comm) {
        PauliOperator prod = code.logical_x;
        prod *= code.logical_y;
        prod *= code.logical_z;
        auto ph = phase_in_group(gens, prod);
        record("xyz_product_in_group", ph.has_value() && ((*ph) & 1) == 1,
               "logical X*Y*Z is not +-i times a stabilizer");
    }

    int mixed_bad = 0;
    for (const auto& p : code.plaquettes) {
        if (p.kind == CheckKind::Mixed) {
            int nx = 0, nz = 0;
            for (size_t q = 0; q < code.n; q++) {
                char c = p.pauli.pauli_at(q);
                nx += c == 'X';
                nz += c == 'Z';
            }
            if (nx != 2 || nz != 2) {
                mixed_bad++;
            }
        }
    }
    record("mixed_plaquettes_half_and_half", mixed_bad == 0,
           std::to_string(mixed_bad) + " mixed plaquette(s) are not 2 X + 2 Z");

    if (code.spec.kind == CodeSpec::Kind::Triangle && code.spec.r >= 2 && code.spec.s >= 2) {
        int y_count = 0;
        bool central_ok = false;
        for (const auto& p : code.plaquettes) {
            for (size_t q = 0; q < code.n; q++) {
                if (p.pauli.pauli_at(q) == 'Y') {
                    y_count++;
                    central_ok = p.center2 == std::array<int, 3>{1, 1, 0} && code.coords[q] == Coord{0, 0, 0};
                }
            }
        }
        record("central_twist", y_count == 1 && central_ok,
               "expected exactly one Y, on qubit (0,0,0) of the plaquette at (1/2,1/2,0)");
    }

    if (brute_force_distance && gens.size() <= 26 && commute_ok) {
        auto bf = brute_force_distances(code);
        record("distances", bf == code.distances,
               "brute-force distances (" + std::to_string(bf[0]) + "," + std::to_string(bf[1]) + "," +
                   std::to_string(bf[2]) + ") differ from formula");
    }
    return rep;
}

std::array<int, 3> brute_force_distances(const StabilizerCode& code) {
    auto gens = code.generators();
    return {coset_min_weight(gens, code.logical_x), coset_min_weight(gens, code.logical_y),
            coset_min_weight(gens, code.logical_z)};
}

int logical_class(const StabilizerCode& code, const PauliOperator& p) {
    for (const auto& g : code.generators()) {
        if (!g.commutes_with(p)) {
            throw std::invalid_argument("operator anticommutes with a stabilizer; no logical class");
        }
    }
    bool anti_z = !p.commutes_with(code.logical_z);
    bool anti_x = !p.commutes_with(code.logical_x);
    if (!anti_z && !anti_x) {
        return 0;
    }
    if (anti_z && !anti_x) {
        return 1;  // X class
    }
    if (anti_z && anti_x) {
        return 2;  // Y class
    }
    return 3;  // Z class
}

TransversalSh transversal_sh(const StabilizerCode& code) {
    if (code.spec.kind != CodeSpec::Kind::Triangle || code.spec.r != code.spec.s || code.spec.s != code.spec.t) {
        throw std::invalid_argument("transversal SH requires a symmetric triangle code");
    }
    TransversalSh out;
    // Order-3 transversal Clifford for this construction's plaquette
    // conventions: H everywhere off the xy-plane interior, conjugation by
    // H*Sdg (X -> Y -> Z -> X) on the central twist qubit, followed by the
    // coordinate rotation (x,y,z) -> (z,x,y).
    for (size_t q = 0; q < code.n; q++) {
        const Coord& c = code.coords[q];
        if (c == Coord{0, 0, 0}) {
            out.gates.emplace_back(Gate::SDG, q);
            out.gates.emplace_back(Gate::H, q);
        } else if (c[2] > 0 || (c[0] == 0 && c[1] > 0)) {
            out.gates.emplace_back(Gate::H, q);
        }
    }

    auto conjugated = [&](const PauliOperator& p) {
        PauliOperator r = p;
        for (auto [g, q] : out.gates) {
            switch (g) {
                case Gate::H:
                    r.apply_h(q);
                    break;
                case Gate::SDG:
                    r.apply_sdg(q);
                    break;
                default:
                    break;
            }
        }
        return r;
    };
    auto relabel = [&](const PauliOperator& p, const std::vector<size_t>& perm) {
        PauliOperator r(code.n);
        for (size_t q = 0; q < code.n; q++) {
            char c = p.pauli_at(q);
            if (c != 'I') {
                r.set_pauli(perm[q], c);
            }
        }
        if (p.sign() < 0) {
            r.negate();
        }
        return r;
    };

    std::vector<size_t> perm(code.n);
    for (size_t q = 0; q < code.n; q++) {
        const Coord& c = code.coords[q];
        perm[q] = code.qubit_at({c[2], c[0], c[1]});
    }
    auto gens = code.generators();
    std::vector<PauliOperator> mapped;
    for (const auto& g : gens) {
        mapped.push_back(relabel(conjugated(g), perm));
    }
    if (!groups_equal(mapped, gens, true)) {
        throw std::logic_error("transversal SH failed to fix the stabilizer group");
    }
    out.permutation = perm;
    return out;
}

// --- JSON ---

namespace {

using nlohmann::ordered_json;

ordered_json check_to_json(const Check& c) {
    ordered_json j;
    j["center2"] = c.center2;
    j["kind"] = check_kind_name(c.kind);
    j["pauli"] = c.pauli.str();
    j["side"] = c.boundary_side;
    return j;
}

Check check_from_json(const ordered_json& j, bool is_plaquette) {
    Check c;
    auto arr = j.at("center2");
    c.center2 = {arr.at(0).get<int>(), arr.at(1).get<int>(), arr.at(2).get<int>()};
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "X") {
        c.kind = CheckKind::X;
    } else if (kind == "Z") {
        c.kind = CheckKind::Z;
    } else if (kind == "mixed") {
        c.kind = CheckKind::Mixed;
    } else {
        c.kind = CheckKind::MixedCentral;
    }
    c.pauli = PauliOperator::from_string(j.at("pauli").get<std::string>());
    c.boundary_side = j.at("side").get<int>();
    c.is_plaquette = is_plaquette;
    return c;
}

}  // namespace

std::string code_to_json(const StabilizerCode& code) {
    ordered_json j;
    j["format"] = "tricode-code-v1";
    j["kind"] = code.spec.kind == CodeSpec::Kind::Triangle ? "triangle" : "rotated_surface";
    if (code.spec.kind == CodeSpec::Kind::Triangle) {
        j["params"] = {{"r", code.spec.r}, {"s", code.spec.s}, {"t", code.spec.t}};
    } else {
        j["params"] = {{"d", code.spec.d}};
    }
    j["n"] = code.n;
    j["coords"] = code.coords;
    j["plaquettes"] = ordered_json::array();
    for (const auto& c : code.plaquettes) {
        j["plaquettes"].push_back(check_to_json(c));
    }
    j["loops"] = ordered_json::array();
    for (const auto& c : code.loops) {
        j["loops"].push_back(check_to_json(c));
    }
    j["logicals"] = {{"x", code.logical_x.str()}, {"y", code.logical_y.str()}, {"z", code.logical_z.str()}};
    j["distances"] = code.distances;
    j["gauge"] = "loop types resolved by commutation; ambiguous loops take the first of ZZ,XX,XZ,ZX";
    return j.dump(2);
}

StabilizerCode code_from_json(const std::string& text) {
    ordered_json j = ordered_json::parse(text);
    StabilizerCode code;
    if (j.at("kind").get<std::string>() == "triangle") {
        code.spec = CodeSpec::triangle(j["params"]["r"].get<int>(), j["params"]["s"].get<int>(),
                                       j["params"]["t"].get<int>());
    } else {
        code.spec = CodeSpec::rotated_surface(j["params"]["d"].get<int>());
    }
    code.n = j.at("n").get<size_t>();
    for (const auto& c : j.at("coords")) {
        Coord cc{c.at(0).get<int>(), c.at(1).get<int>(), c.at(2).get<int>()};
        code.index_of[cc] = code.coords.size();
        code.coords.push_back(cc);
    }
    for (const auto& c : j.at("plaquettes")) {
        code.plaquettes.push_back(check_from_json(c, true));
    }
    for (const auto& c : j.at("loops")) {
        code.loops.push_back(check_from_json(c, false));
    }
    code.logical_x = PauliOperator::from_string(j["logicals"]["x"].get<std::string>());
    code.logical_y = PauliOperator::from_string(j["logicals"]["y"].get<std::string>());
    code.logical_z = PauliOperator::from_string(j["logicals"]["z"].get<std::string>());
    auto d = j.at("distances");
    code.distances = {d.at(0).get<int>(), d.at(1).get<int>(), d.at(2).get<int>()};
    return code;
}

}  // namespace tricode
