#include "tricode/tableau.hpp"

#include <bit>
#include <stdexcept>

namespace tricode {

StabilizerTableau::StabilizerTableau(size_t n) : n_(n) {
    destab_.reserve(n);
    stab_.reserve(n);
    for (size_t q = 0; q < n; q++) {
        destab_.push_back(PauliOperator::single(n, q, 'X'));
        stab_.push_back(PauliOperator::single(n, q, 'Z'));
    }
}

StabilizerTableau StabilizerTableau::zero_state(size_t n) {
    return StabilizerTableau(n);
}

void StabilizerTableau::apply_gate(Gate g, size_t a, size_t b) {
    if (a >= n_ || (gate_is_two_qubit(g) && (b >= n_ || a == b))) {
        throw std::invalid_argument("gate target out of range");
    }
    auto apply_row = [&](PauliOperator& row) {
        switch (g) {
            case Gate::H:
                row.apply_h(a);
                break;
            case Gate::S:
                row.apply_s(a);
                break;
            case Gate::SDG:
                row.apply_sdg(a);
                break;
            case Gate::SH:
                row.apply_sh(a);
                break;
            case Gate::X:
                row.apply_x(a);
                break;
            case Gate::Y:
                row.apply_y(a);
                break;
            case Gate::Z:
                row.apply_z(a);
                break;
            case Gate::CNOT:
                row.apply_cnot(a, b);
                break;
            case Gate::CZ:
                row.apply_cz(a, b);
                break;
            case Gate::CY:
                row.apply_cy(a, b);
                break;
        }
    };
    for (auto& row : destab_) {
        apply_row(row);
    }
    for (auto& row : stab_) {
        apply_row(row);
    }
}

void StabilizerTableau::apply_pauli(const PauliOperator& p) {
    for (auto& row : destab_) {
        if (!row.commutes_with(p)) {
            row.negate();
        }
    }
    for (auto& row : stab_) {
        if (!row.commutes_with(p)) {
            row.negate();
        }
    }
}

MeasureResult StabilizerTableau::measure_pauli(const PauliOperator& p, std::optional<int> forced,
                                               const RandomBitFn& rng) {
    if (p.num_qubits() != n_) {
        throw std::invalid_argument("measurement operator dimension mismatch");
    }
    if (!p.is_hermitian()) {
        throw std::invalid_argument("measurement operator must be Hermitian");
    }
    size_t pivot = SIZE_MAX;
    for (size_t k = 0; k < n_; k++) {
        if (!stab_[k].commutes_with(p)) {
            pivot = k;
            break;
        }
    }
    if (pivot == SIZE_MAX) {
        // Deterministic: P = +-(product of stabilizers). The subset is read off
        // from destabilizer anticommutation.
        PauliOperator acc = PauliOperator::identity(n_);
        for (size_t k = 0; k < n_; k++) {
            if (!destab_[k].commutes_with(p)) {
                acc *= stab_[k];
            }
        }
        if (!acc.bits_equal(p)) {
            throw std::logic_error("tableau inconsistency in deterministic measurement");
        }
        int diff = (acc.raw_phase() - p.raw_phase()) & 3;
        return MeasureResult{diff == 0 ? +1 : -1, true};
    }

    int outcome;
    if (forced.has_value()) {
        outcome = *forced;
        if (outcome != +1 && outcome != -1) {
            throw std::invalid_argument("forced outcome must be +1 or -1");
        }
    } else if (rng) {
        outcome = rng() ? -1 : +1;
    } else {
        throw std::invalid_argument("random measurement outcome requires forced value or rng");
    }

    PauliOperator fixer = stab_[pivot];
    for (size_t k = 0; k < n_; k++) {
        if (k != pivot && !stab_[k].commutes_with(p)) {
            stab_[k] *= fixer;
        }
        if (!destab_[k].commutes_with(p)) {
            if (k == pivot) {
                continue;  // replaced below
            }
            destab_[k] *= fixer;
        }
    }
    destab_[pivot] = fixer;
    stab_[pivot] = p;
    if (outcome == -1) {
        stab_[pivot].negate();
    }
    return MeasureResult{outcome, false};
}

std::optional<int> StabilizerTableau::expectation(const PauliOperator& p) const {
    for (size_t k = 0; k < n_; k++) {
        if (!stab_[k].commutes_with(p)) {
            return std::nullopt;
        }
    }
    PauliOperator acc = PauliOperator::identity(n_);
    for (size_t k = 0; k < n_; k++) {
        if (!destab_[k].commutes_with(p)) {
            acc *= stab_[k];
        }
    }
    int diff = (acc.raw_phase() - p.raw_phase()) & 3;
    return diff == 0 ? +1 : -1;
}

bool StabilizerTableau::check_invariants() const {
    for (size_t i = 0; i < n_; i++) {
        for (size_t j = 0; j < n_; j++) {
            if (!stab_[i].commutes_with(stab_[j])) {
                return false;
            }
            if (!destab_[i].commutes_with(destab_[j])) {
                return false;
            }
            bool anti = !destab_[i].commutes_with(stab_[j]);
            if (anti != (i == j)) {
                return false;
            }
        }
        if ((stab_[i].sign_power_of_i() & 1) || (destab_[i].sign_power_of_i() & 1)) {
            return false;
        }
    }
    return true;
}

// --- group helpers ---

namespace {

// Row-reduces a copy of the generators over GF(2)^(2n); also usable to reduce
// a target Pauli against the basis. Rows are kept as Paulis so signs ride
// along automatically.
struct Reducer {
    std::vector<PauliOperator> basis;      // in echelon form
    std::vector<size_t> pivot_cols;        // pivot column per basis row

    static size_t col_of(const PauliOperator& p, size_t n, size_t c) {
        return c < n ? p.x_bit(c) : p.z_bit(c - n);
    }

    explicit Reducer(std::span<const PauliOperator> gens) {
        if (gens.empty()) {
            return;
        }
        size_t n = gens[0].num_qubits();
        for (const auto& g : gens) {
            PauliOperator row = g;
            reduce(row, n);
            if (!row.is_identity()) {
                size_t pc = first_col(row, n);
                basis.push_back(row);
                pivot_cols.push_back(pc);
            }
        }
    }

    static size_t first_col(const PauliOperator& p, size_t n) {
        for (size_t c = 0; c < 2 * n; c++) {
            if (col_of(p, n, c)) {
                return c;
            }
        }
        return 2 * n;
    }

    void reduce(PauliOperator& row, size_t n) const {
        bool progress = true;
        while (progress && !row.is_identity()) {
            progress = false;
            size_t pc = first_col(row, n);
            for (size_t i = 0; i < basis.size(); i++) {
                if (pivot_cols[i] == pc) {
                    row *= basis[i];
                    progress = true;
                    break;
                }
            }
        }
    }
};

}  // namespace

size_t symplectic_rank(std::span<const PauliOperator> gens) {
    return Reducer(gens).basis.size();
}

std::optional<int> phase_in_group(std::span<const PauliOperator> gens, const PauliOperator& p) {
    if (gens.empty()) {
        return p.is_identity() ? std::optional<int>(p.raw_phase() & 3) : std::nullopt;
    }
    Reducer red(gens);
    PauliOperator row = p;
    red.reduce(row, p.num_qubits());
    if (!row.is_identity()) {
        return std::nullopt;
    }
    // Reduction computed p * g_{i1} * g_{i2} * ... = i^k * I, so p = i^k * G
    // with G = (g_{i1} g_{i2} ...)^{-1}, itself a product of generators.
    return row.raw_phase() & 3;
}

bool in_group_up_to_sign(std::span<const PauliOperator> gens, const PauliOperator& p) {
    Reducer red(gens);
    PauliOperator row = p;
    red.reduce(row, p.num_qubits());
    return row.is_identity();
}

bool groups_equal(std::span<const PauliOperator> a, std::span<const PauliOperator> b, bool check_signs) {
    for (const auto& g : a) {
        if (check_signs) {
            auto ph = phase_in_group(b, g);
            if (!ph.has_value() || (*ph & 3) != 0) {
                return false;
            }
        } else if (!in_group_up_to_sign(b, g)) {
            return false;
        }
    }
    for (const auto& g : b) {
        if (check_signs) {
            auto ph = phase_in_group(a, g);
            if (!ph.has_value() || (*ph & 3) != 0) {
                return false;
            }
        } else if (!in_group_up_to_sign(a, g)) {
            return false;
        }
    }
    return true;
}

void enumerate_group(std::span<const PauliOperator> gens, const std::function<bool(const PauliOperator&)>& fn) {
    if (gens.empty()) {
        return;
    }
    // Reduce to an independent basis first so the walk has no repeats.
    Reducer red(gens);
    const auto& basis = red.basis;
    size_t k = basis.size();
    if (k > 62) {
        throw std::invalid_argument("group too large to enumerate");
    }
    size_t n = gens[0].num_qubits();
    PauliOperator cur = PauliOperator::identity(n);
    if (!fn(cur)) {
        return;
    }
    uint64_t count = uint64_t{1} << k;
    for (uint64_t i = 1; i < count; i++) {
        // Gray code: flip the generator at the index of the lowest set bit of i.
        int bit = std::countr_zero(i);
        cur *= basis[bit];
        if (!fn(cur)) {
            return;
        }
    }
}

int coset_min_weight(std::span<const PauliOperator> gens, const PauliOperator& rep) {
    int best = rep.weight();
    if (gens.empty()) {
        return best;
    }
    enumerate_group(gens, [&](const PauliOperator& g) {
        PauliOperator e = g;
        e *= rep;
        int w = e.weight();
        if (w < best) {
            best = w;
        }
        return best > 0;
    });
    return best;
}

PauliOperator coset_min_weight_element(std::span<const PauliOperator> gens, const PauliOperator& rep) {
    PauliOperator best = rep;
    int bw = rep.weight();
    if (gens.empty()) {
        return best;
    }
    enumerate_group(gens, [&](const PauliOperator& g) {
        PauliOperator e = g;
        e *= rep;
        int w = e.weight();
        if (w < bw) {
            bw = w;
            best = e;
        }
        return bw > 0;
    });
    return best;
}

}  // namespace tricode
