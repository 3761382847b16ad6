#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tricode {

/// An n-qubit Pauli operator stored in symplectic form:
///
///     P = i^phase * X^xbits * Z^zbits
///
/// with the phase exponent tracked mod 4 and the convention Y = i*X*Z.
/// Bits are packed little-endian into 64-bit words. All sign bookkeeping
/// (products, Clifford conjugation) is exact.
class PauliOperator {
  public:
    PauliOperator() : n_(0), phase_(0) {}
    explicit PauliOperator(size_t n) : n_(n), x_((n + 63) / 64, 0), z_((n + 63) / 64, 0), phase_(0) {}

    static PauliOperator identity(size_t n) { return PauliOperator(n); }

    /// Single-qubit Pauli p ('I','X','Y','Z') embedded at qubit q of an n-qubit register.
    static PauliOperator single(size_t n, size_t q, char p);

    /// Parses strings like "XZIY", "+XX", "-ZZ", "iY", "-iXZ".
    static PauliOperator from_string(std::string_view s);

    size_t num_qubits() const { return n_; }

    bool x_bit(size_t q) const { return (x_[q >> 6] >> (q & 63)) & 1; }
    bool z_bit(size_t q) const { return (z_[q >> 6] >> (q & 63)) & 1; }
    void set_x_bit(size_t q, bool v);
    void set_z_bit(size_t q, bool v);

    char pauli_at(size_t q) const;
    void set_pauli(size_t q, char p);

    /// Number of qubits acted on non-trivially.
    int weight() const;

    /// Exponent of i in the overall sign when written as a tensor of I,X,Y,Z
    /// (0 -> +1, 1 -> +i, 2 -> -1, 3 -> -i).
    int sign_power_of_i() const;
    bool is_hermitian() const { return (sign_power_of_i() & 1) == 0; }
    /// +1 or -1; requires a Hermitian operator.
    int sign() const;
    void negate() { phase_ = (phase_ + 2) & 3; }
    /// Multiplies the overall operator by i^k.
    void mul_phase(int k) { phase_ = static_cast<uint8_t>((phase_ + (k & 3)) & 3); }
    uint8_t raw_phase() const { return phase_; }

    PauliOperator& operator*=(const PauliOperator& o);
    friend PauliOperator operator*(PauliOperator a, const PauliOperator& b) {
        a *= b;
        return a;
    }

    bool commutes_with(const PauliOperator& o) const;

    /// Equality of the X/Z support, ignoring sign.
    bool bits_equal(const PauliOperator& o) const { return n_ == o.n_ && x_ == o.x_ && z_ == o.z_; }
    bool operator==(const PauliOperator& o) const { return bits_equal(o) && phase_ == o.phase_; }
    bool operator!=(const PauliOperator& o) const { return !(*this == o); }
    bool is_identity() const;

    /// In-place conjugation P -> U P U^dag by elementary Clifford gates.
    void apply_h(size_t q);
    void apply_s(size_t q);
    void apply_sdg(size_t q);
    /// SH means: first H, then S (conjugation X->Z->Y->X).
    void apply_sh(size_t q);
    void apply_x(size_t q);
    void apply_y(size_t q);
    void apply_z(size_t q);
    void apply_cnot(size_t c, size_t t);
    void apply_cz(size_t a, size_t b);
    void apply_cy(size_t c, size_t t);

    std::string str() const;

    const std::vector<uint64_t>& x_words() const { return x_; }
    const std::vector<uint64_t>& z_words() const { return z_; }

    size_t hash() const;

  private:
    size_t n_;
    std::vector<uint64_t> x_, z_;
    uint8_t phase_;  // exponent of i, mod 4
};

enum class Gate {
    H,
    S,
    SDG,
    SH,
    X,
    Y,
    Z,
    CNOT,
    CZ,
    CY,
};

const char* gate_name(Gate g);
bool gate_is_two_qubit(Gate g);
std::optional<Gate> gate_from_name(std::string_view name);

}  // namespace tricode
