#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tricode/pauli.hpp"
#include "tricode/tableau.hpp"

namespace tricode {

using Coord = std::array<int, 3>;  // (x, y, z) integer lattice point

enum class CheckKind { X, Z, Mixed, MixedCentral };

const char* check_kind_name(CheckKind k);

/// A stabilizer generator: weight-4 plaquette or weight-2 boundary loop.
struct Check {
    std::array<int, 3> center2;  // center coordinates times 2 (plaquettes sit at half-integer points)
    bool is_plaquette;
    CheckKind kind;
    PauliOperator pauli;
    int boundary_side;  // -1 for none, else 0=x-side, 1=y-side, 2=z-side (loops only)
};

struct CodeSpec {
    enum class Kind { Triangle, RotatedSurface };
    Kind kind;
    int r = 0, s = 0, t = 0;  // triangle parameters
    int d = 0;                // rotated surface distance

    static CodeSpec triangle(int r, int s, int t) { return CodeSpec{Kind::Triangle, r, s, t, 0}; }
    static CodeSpec rotated_surface(int d) { return CodeSpec{Kind::RotatedSurface, 0, 0, 0, d}; }
    std::string str() const;
};

/// One logical qubit's worth of code data: qubit layout, typed generators,
/// boundary logical representatives, and the distance triple.
struct StabilizerCode {
    CodeSpec spec;
    size_t n = 0;
    std::vector<Coord> coords;          // qubit index -> lattice point
    std::map<Coord, size_t> index_of;   // lattice point -> qubit index
    std::vector<Check> plaquettes;
    std::vector<Check> loops;
    PauliOperator logical_x, logical_y, logical_z;
    std::array<int, 3> distances{};  // (d_x, d_y, d_z) from the closed formulas

    std::vector<PauliOperator> generators() const;
    size_t qubit_at(const Coord& c) const;
    bool has_qubit(const Coord& c) const { return index_of.count(c) != 0; }
    const PauliOperator& logical(int which) const;  // 0 -> X, 1 -> Y, 2 -> Z

    /// Syndrome of an error: bit per generator (plaquettes then loops), set
    /// when the generator anticommutes with the error.
    std::vector<uint8_t> syndrome(const PauliOperator& error) const;
};

/// Builds the r x s x t triangle code. Qubits live at integer points with at
/// least one coordinate zero; plaquette types follow the checkerboard rules
/// anchored at the X-type plaquette (1/2,0,1/2), with the mixed-type column
/// along +y and the central twist carrying Y on the origin. Loop positions
/// and types are resolved by commutation constraints.
StabilizerCode build_triangle(int r, int s, int t);

/// Builds the distance-d rotated surface code on a d x d grid (d odd).
StabilizerCode build_rotated_surface(int d);

StabilizerCode build_code(const CodeSpec& spec);

/// logical_operators(code) -> the stored boundary representatives.
inline std::array<PauliOperator, 3> logical_operators(const StabilizerCode& code) {
    return {code.logical_x, code.logical_y, code.logical_z};
}

struct ValidationIssue {
    std::string check;
    std::string detail;
};

struct ValidationReport {
    std::vector<std::string> passed;
    std::vector<ValidationIssue> failures;
    bool ok() const { return failures.empty(); }
    std::string summary() const;
};

/// Structural validation: commutation, independence, generator count, logical
/// algebra, mixed-plaquette composition, and (for small codes) brute-force
/// distances against the closed formulas.
ValidationReport validate(const StabilizerCode& code, bool brute_force_distance = true);

/// Exact distances by minimizing weight over each nontrivial logical coset.
/// Feasible for generator counts up to ~26.
std::array<int, 3> brute_force_distances(const StabilizerCode& code);

/// Coset of `p` (which must commute with all generators) in N(S)/S:
/// 0 -> I, 1 -> X, 2 -> Y, 3 -> Z. Throws if p anticommutes with a generator.
int logical_class(const StabilizerCode& code, const PauliOperator& p);

/// Physical gate list plus qubit relabeling realizing the transversal order-3
/// Clifford of symmetric triangle codes. Applying the gates and then renaming
/// qubit q to permutation[q] maps the stabilizer group onto itself and cycles
/// the logical classes X -> Y -> Z -> X.
struct TransversalSh {
    std::vector<std::pair<Gate, size_t>> gates;
    std::vector<size_t> permutation;
};

TransversalSh transversal_sh(const StabilizerCode& code);

/// JSON (de)serialization with bit-exact round-trip.
std::string code_to_json(const StabilizerCode& code);
StabilizerCode code_from_json(const std::string& text);

}  // namespace tricode
