#include "tricode/logical_enum.hpp"

#include <algorithm>
#include <stdexcept>

namespace tricode {

const char* alphabet_name(ErrorAlphabet a) {
    switch (a) {
        case ErrorAlphabet::X:
            return "X";
        case ErrorAlphabet::XZ:
            return "X,Z";
        case ErrorAlphabet::XYZ:
            return "X,Y,Z";
    }
    return "?";
}

namespace {

int anti(char a, char b) {
    return (a != 'I' && b != 'I' && a != b) ? 1 : 0;
}

// Depth-first support walk with per-generator commutation pruning: once the
// last qubit of a generator's support is decided, its anticommutation parity
// must already be zero. This is what makes d = 7 and 9 tractable.
struct Enumerator {
    const StabilizerCode& code;
    ErrorAlphabet alphabet;
    int w;
    bool single_sector;
    std::vector<PauliOperator> gens;
    std::vector<std::vector<size_t>> gens_touching;   // qubit -> generator ids
    std::vector<std::vector<size_t>> finalized_at;    // qubit -> generator ids whose support ends here
    std::vector<int> parity;
    std::vector<char> letter;
    int placed = 0;
    bool any_x = false, any_z = false;
    std::function<void(const PauliOperator&)> accept;

    Enumerator(const StabilizerCode& c, ErrorAlphabet a, int w_) : code(c), alphabet(a), w(w_) {
        single_sector = code.spec.kind == CodeSpec::Kind::RotatedSurface;
        gens = code.generators();
        gens_touching.resize(code.n);
        finalized_at.resize(code.n);
        parity.assign(gens.size(), 0);
        letter.assign(code.n, 'I');
        for (size_t g = 0; g < gens.size(); g++) {
            size_t last = 0;
            for (size_t q = 0; q < code.n; q++) {
                if (gens[g].pauli_at(q) != 'I') {
                    gens_touching[q].push_back(g);
                    last = q;
                }
            }
            finalized_at[last].push_back(g);
        }
    }

    void run(const std::function<void(const PauliOperator&)>& fn) {
        accept = fn;
        dfs(0);
    }

    void dfs(size_t q) {
        if (placed == w) {
            // Remaining qubits are identity; all remaining generators must
            // already have even parity.
            for (size_t g = 0; g < gens.size(); g++) {
                if (parity[g]) {
                    return;
                }
            }
            emit();
            return;
        }
        if (q >= code.n || code.n - q < size_t(w - placed)) {
            return;
        }
        const char options_xyz[3] = {'X', 'Z', 'Y'};
        int letters = alphabet == ErrorAlphabet::X ? 1 : alphabet == ErrorAlphabet::XZ ? 2 : 3;
        // Try placing each allowed letter at q, then identity.
        for (int li = 0; li < letters; li++) {
            char L = options_xyz[li];
            if (single_sector) {
                bool lx = L == 'X' || L == 'Y';
                bool lz = L == 'Z' || L == 'Y';
                if ((any_z && lx) || (any_x && lz)) {
                    continue;
                }
            }
            letter[q] = L;
            placed++;
            bool ox = any_x, oz = any_z;
            any_x |= L == 'X' || L == 'Y';
            any_z |= L == 'Z' || L == 'Y';
            for (size_t g : gens_touching[q]) {
                parity[g] ^= anti(L, gens[g].pauli_at(q));
            }
            if (check_finalized(q)) {
                dfs(q + 1);
            }
            for (size_t g : gens_touching[q]) {
                parity[g] ^= anti(L, gens[g].pauli_at(q));
            }
            letter[q] = 'I';
            placed--;
            any_x = ox;
            any_z = oz;
        }
        if (check_finalized(q)) {
            dfs(q + 1);
        }
    }

    bool check_finalized(size_t q) const {
        for (size_t g : finalized_at[q]) {
            if (parity[g]) {
                return false;
            }
        }
        return true;
    }

    void emit() {
        PauliOperator p(code.n);
        for (size_t q = 0; q < code.n; q++) {
            if (letter[q] != 'I') {
                p.set_pauli(q, letter[q]);
            }
        }
        if (!p.commutes_with(code.logical_x) || !p.commutes_with(code.logical_y) ||
            !p.commutes_with(code.logical_z)) {
            accept(p);
        }
    }
};

uint64_t binomial(uint64_t n, uint64_t k) {
    if (k > n) {
        return 0;
    }
    uint64_t r = 1;
    for (uint64_t i = 0; i < k; i++) {
        r = r * (n - i) / (i + 1);
    }
    return r;
}

uint64_t ipow(uint64_t b, int e) {
    uint64_t r = 1;
    while (e-- > 0) {
        r *= b;
    }
    return r;
}

void check_budget(const StabilizerCode& code, ErrorAlphabet alphabet, int w, uint64_t budget) {
    int letters = alphabet == ErrorAlphabet::X ? 1 : alphabet == ErrorAlphabet::XZ ? 2 : 3;
    uint64_t space = binomial(code.n, w) * ipow(letters, w);
    if (space > budget) {
        throw std::length_error("enumeration space " + std::to_string(space) + " exceeds budget " +
                                std::to_string(budget));
    }
}

}  // namespace

uint64_t count_min_weight_logicals(const StabilizerCode& code, ErrorAlphabet alphabet, int w, uint64_t budget) {
    check_budget(code, alphabet, w, budget);
    uint64_t count = 0;
    Enumerator e(code, alphabet, w);
    e.run([&](const PauliOperator&) { count++; });
    return count;
}

std::vector<PauliOperator> enumerate_min_weight_logicals(const StabilizerCode& code, ErrorAlphabet alphabet, int w,
                                                         uint64_t budget) {
    check_budget(code, alphabet, w, budget);
    std::vector<PauliOperator> out;
    Enumerator e(code, alphabet, w);
    e.run([&](const PauliOperator& p) { out.push_back(p); });
    return out;
}

}  // namespace tricode
