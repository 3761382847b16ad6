#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "tricode/pauli.hpp"

namespace tricode {

/// Source of single random bits for non-deterministic measurement outcomes.
/// The simulator itself never owns randomness; callers supply it so runs
/// replay exactly from a seed.
using RandomBitFn = std::function<bool()>;

struct MeasureResult {
    int outcome;  // +1 or -1
    bool deterministic;
};

/// Full-rank stabilizer state tableau (n stabilizer and n destabilizer rows)
/// supporting arbitrary-Pauli measurement with exact sign tracking.
class StabilizerTableau {
  public:
    explicit StabilizerTableau(size_t n);

    /// |0...0>: stabilizers Z_q, destabilizers X_q.
    static StabilizerTableau zero_state(size_t n);

    size_t num_qubits() const { return n_; }

    void apply_gate(Gate g, size_t a, size_t b = SIZE_MAX);
    void apply_h(size_t q) { apply_gate(Gate::H, q); }
    void apply_s(size_t q) { apply_gate(Gate::S, q); }
    void apply_cnot(size_t c, size_t t) { apply_gate(Gate::CNOT, c, t); }
    void apply_cz(size_t a, size_t b) { apply_gate(Gate::CZ, a, b); }

    /// Conjugates the state by a Pauli (applies it as a gate).
    void apply_pauli(const PauliOperator& p);

    /// Measures Hermitian Pauli P. If the outcome is random, `forced` is used
    /// when provided, otherwise a bit is drawn from `rng` (which must then be
    /// non-null). Returns the +-1 outcome and updates the state.
    MeasureResult measure_pauli(const PauliOperator& p, std::optional<int> forced = std::nullopt,
                                const RandomBitFn& rng = nullptr);

    /// +1/-1 if P (up to sign) is in the stabilizer group, nullopt if the
    /// outcome would be random. Does not modify the state.
    std::optional<int> expectation(const PauliOperator& p) const;

    const PauliOperator& stabilizer(size_t k) const { return stab_[k]; }
    const PauliOperator& destabilizer(size_t k) const { return destab_[k]; }
    const std::vector<PauliOperator>& stabilizers() const { return stab_; }

    /// Debug check: rows pairwise satisfy the tableau commutation relations.
    bool check_invariants() const;

  private:
    size_t n_;
    std::vector<PauliOperator> destab_, stab_;
};

/// --- Pauli group helpers (rank, membership, canonical forms) ---
///
/// These operate on arbitrary generator lists (not necessarily full rank),
/// which is what code-level checks need.

/// Rank of the generators viewed as vectors over GF(2)^(2n).
size_t symplectic_rank(std::span<const PauliOperator> gens);

/// If p equals i^k * (product of generators) for some subset, returns k mod 4
/// (0 or 2 for Hermitian inputs). Otherwise nullopt.
std::optional<int> phase_in_group(std::span<const PauliOperator> gens, const PauliOperator& p);

/// True iff p's X/Z bit pattern lies in the span of the generators (signs ignored).
bool in_group_up_to_sign(std::span<const PauliOperator> gens, const PauliOperator& p);

/// True iff the two generator lists span the same signed group.
bool groups_equal(std::span<const PauliOperator> a, std::span<const PauliOperator> b, bool check_signs = true);

/// Visits every element of the group generated by `gens` exactly once
/// (including identity), using a Gray-code walk. Callback may return false to
/// stop early. Cost: one Pauli multiply per element.
void enumerate_group(std::span<const PauliOperator> gens, const std::function<bool(const PauliOperator&)>& fn);

/// Minimum weight over the coset rep * <gens>.
int coset_min_weight(std::span<const PauliOperator> gens, const PauliOperator& rep);

/// Minimum-weight element of the coset rep * <gens> (ties broken by the
/// Gray-code visit order, which is deterministic).
PauliOperator coset_min_weight_element(std::span<const PauliOperator> gens, const PauliOperator& rep);

}  // namespace tricode
