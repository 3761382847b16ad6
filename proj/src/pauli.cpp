#include "tricode/pauli.hpp"

#include <bit>
#include <stdexcept>

namespace tricode {

namespace {

int parity_of_and(const std::vector<uint64_t>& a, const std::vector<uint64_t>& b) {
    uint64_t acc = 0;
    for (size_t i = 0; i < a.size(); i++) {
        acc ^= a[i] & b[i];
    }
    return std::popcount(acc) & 1;
}

int popcount_of_and(const std::vector<uint64_t>& a, const std::vector<uint64_t>& b) {
    int acc = 0;
    for (size_t i = 0; i < a.size(); i++) {
        acc += std::popcount(a[i] & b[i]);
    }
    return acc;
}

}  // namespace

PauliOperator PauliOperator::single(size_t n, size_t q, char p) {
    PauliOperator out(n);
    out.set_pauli(q, p);
    return out;
}

PauliOperator PauliOperator::from_string(std::string_view s) {
    int phase = 0;
    size_t k = 0;
    if (k < s.size() && (s[k] == '+' || s[k] == '-')) {
        if (s[k] == '-') {
            phase = 2;
        }
        k++;
    }
    if (k < s.size() && s[k] == 'i') {
        phase += 1;
        k++;
    }
    PauliOperator out(s.size() - k);
    for (size_t q = 0; k < s.size(); k++, q++) {
        out.set_pauli(q, s[k]);
    }
    out.mul_phase(phase);
    return out;
}

void PauliOperator::set_x_bit(size_t q, bool v) {
    uint64_t m = uint64_t{1} << (q & 63);
    x_[q >> 6] = v ? (x_[q >> 6] | m) : (x_[q >> 6] & ~m);
}

void PauliOperator::set_z_bit(size_t q, bool v) {
    uint64_t m = uint64_t{1} << (q & 63);
    z_[q >> 6] = v ? (z_[q >> 6] | m) : (z_[q >> 6] & ~m);
}

char PauliOperator::pauli_at(size_t q) const {
    bool x = x_bit(q), z = z_bit(q);
    return x ? (z ? 'Y' : 'X') : (z ? 'Z' : 'I');
}

void PauliOperator::set_pauli(size_t q, char p) {
    // Keeps the operator Hermitian: writing a Y adjusts the i-exponent so the
    // stored word pattern i^phase X^x Z^z equals ...Y... on that site.
    bool had_y = x_bit(q) && z_bit(q);
    switch (p) {
        case 'I':
            set_x_bit(q, false);
            set_z_bit(q, false);
            break;
        case 'X':
            set_x_bit(q, true);
            set_z_bit(q, false);
            break;
        case 'Z':
            set_x_bit(q, false);
            set_z_bit(q, true);
            break;
        case 'Y':
            set_x_bit(q, true);
            set_z_bit(q, true);
            break;
        default:
            throw std::invalid_argument("unknown Pauli character");
    }
    bool has_y = x_bit(q) && z_bit(q);
    if (has_y && !had_y) {
        mul_phase(1);
    } else if (!has_y && had_y) {
        mul_phase(3);
    }
}

int PauliOperator::weight() const {
    int acc = 0;
    for (size_t i = 0; i < x_.size(); i++) {
        acc += std::popcount(x_[i] | z_[i]);
    }
    return acc;
}

int PauliOperator::sign_power_of_i() const {
    return (phase_ - popcount_of_and(x_, z_)) & 3;
}

int PauliOperator::sign() const {
    int s = sign_power_of_i();
    if (s & 1) {
        throw std::logic_error("sign() called on non-Hermitian Pauli");
    }
    return s == 0 ? +1 : -1;
}

PauliOperator& PauliOperator::operator*=(const PauliOperator& o) {
    if (n_ != o.n_) {
        throw std::invalid_argument("Pauli dimension mismatch");
    }
    // (X^a Z^b)(X^c Z^d) reorders Z^b past X^c, picking up (-1)^{b & c}.
    int flips = parity_of_and(z_, o.x_);
    phase_ = static_cast<uint8_t>((phase_ + o.phase_ + 2 * flips) & 3);
    for (size_t i = 0; i < x_.size(); i++) {
        x_[i] ^= o.x_[i];
        z_[i] ^= o.z_[i];
    }
    return *this;
}

bool PauliOperator::commutes_with(const PauliOperator& o) const {
    if (n_ != o.n_) {
        throw std::invalid_argument("Pauli dimension mismatch");
    }
    return (parity_of_and(x_, o.z_) ^ parity_of_and(z_, o.x_)) == 0;
}

bool PauliOperator::is_identity() const {
    for (size_t i = 0; i < x_.size(); i++) {
        if (x_[i] | z_[i]) {
            return false;
        }
    }
    return true;
}

void PauliOperator::apply_h(size_t q) {
    bool x = x_bit(q), z = z_bit(q);
    set_x_bit(q, z);
    set_z_bit(q, x);
    if (x && z) {
        mul_phase(2);  // Y -> -Y
    }
}

void PauliOperator::apply_s(size_t q) {
    if (x_bit(q)) {
        set_z_bit(q, !z_bit(q));
        mul_phase(1);
    }
}

void PauliOperator::apply_sdg(size_t q) {
    if (x_bit(q)) {
        set_z_bit(q, !z_bit(q));
        mul_phase(3);
    }
}

void PauliOperator::apply_sh(size_t q) {
    apply_h(q);
    apply_s(q);
}

void PauliOperator::apply_x(size_t q) {
    if (z_bit(q)) {
        mul_phase(2);
    }
}

void PauliOperator::apply_z(size_t q) {
    if (x_bit(q)) {
        mul_phase(2);
    }
}

void PauliOperator::apply_y(size_t q) {
    if (x_bit(q) != z_bit(q)) {
        mul_phase(2);
    }
}

void PauliOperator::apply_cnot(size_t c, size_t t) {
    // In the i^s X^x Z^z convention CNOT needs no phase correction.
    set_x_bit(t, x_bit(t) ^ x_bit(c));
    set_z_bit(c, z_bit(c) ^ z_bit(t));
}

void PauliOperator::apply_cz(size_t a, size_t b) {
    bool xa = x_bit(a), xb = x_bit(b);
    if (xa && xb) {
        mul_phase(2);
    }
    set_z_bit(a, z_bit(a) ^ xb);
    set_z_bit(b, z_bit(b) ^ xa);
}

void PauliOperator::apply_cy(size_t c, size_t t) {
    bool xc = x_bit(c), xt = x_bit(t), zt = z_bit(t);
    if (xc) {
        mul_phase(1);
        if (xt) {
            mul_phase(2);
        }
    }
    set_z_bit(c, z_bit(c) ^ xt ^ zt);
    set_x_bit(t, xt ^ xc);
    set_z_bit(t, zt ^ xc);
}

std::string PauliOperator::str() const {
    std::string out;
    switch (sign_power_of_i()) {
        case 0:
            out += '+';
            break;
        case 1:
            out += "+i";
            break;
        case 2:
            out += '-';
            break;
        case 3:
            out += "-i";
            break;
    }
    for (size_t q = 0; q < n_; q++) {
        out += pauli_at(q);
    }
    return out;
}

size_t PauliOperator::hash() const {
    uint64_t h = 0x9e3779b97f4a7c15ull ^ (n_ * 0xff51afd7ed558ccdull) ^ phase_;
    auto mix = [&h](uint64_t v) {
        h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    };
    for (uint64_t w : x_) {
        mix(w);
    }
    for (uint64_t w : z_) {
        mix(w * 0xc2b2ae3d27d4eb4full);
    }
    return static_cast<size_t>(h);
}

const char* gate_name(Gate g) {
    switch (g) {
        case Gate::H:
            return "H";
        case Gate::S:
            return "S";
        case Gate::SDG:
            return "SDG";
        case Gate::SH:
            return "SH";
        case Gate::X:
            return "X";
        case Gate::Y:
            return "Y";
        case Gate::Z:
            return "Z";
        case Gate::CNOT:
            return "CNOT";
        case Gate::CZ:
            return "CZ";
        case Gate::CY:
            return "CY";
    }
    return "?";
}

bool gate_is_two_qubit(Gate g) {
    return g == Gate::CNOT || g == Gate::CZ || g == Gate::CY;
}

std::optional<Gate> gate_from_name(std::string_view name) {
    for (Gate g : {Gate::H, Gate::S, Gate::SDG, Gate::SH, Gate::X, Gate::Y, Gate::Z, Gate::CNOT, Gate::CZ, Gate::CY}) {
        if (name == gate_name(g)) {
            return g;
        }
    }
    return std::nullopt;
}

}  // namespace tricode
