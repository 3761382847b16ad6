#include <complex>
#include <random>
#include <vector>

#include "doctest.h"
#include "tricode/tableau.hpp"

using namespace tricode;

namespace {

// Dense state-vector oracle used to cross-check the tableau simulator on
// small instances. Slow and simple on purpose.
struct DenseState {
    size_t n;
    std::vector<std::complex<double>> amp;

    explicit DenseState(size_t n_) : n(n_), amp(size_t{1} << n_, 0.0) { amp[0] = 1.0; }

    void apply1(size_t q, const std::complex<double> m[4]) {
        size_t bit = size_t{1} << q;
        for (size_t i = 0; i < amp.size(); i++) {
            if (!(i & bit)) {
                auto a0 = amp[i], a1 = amp[i | bit];
                amp[i] = m[0] * a0 + m[1] * a1;
                amp[i | bit] = m[2] * a0 + m[3] * a1;
            }
        }
    }

    void apply_gate(Gate g, size_t a, size_t b = SIZE_MAX) {
        using namespace std::complex_literals;
        const double isq = 1.0 / std::sqrt(2.0);
        if (g == Gate::H) {
            std::complex<double> m[4] = {isq, isq, isq, -isq};
            apply1(a, m);
        } else if (g == Gate::S) {
            std::complex<double> m[4] = {1, 0, 0, 1i};
            apply1(a, m);
        } else if (g == Gate::SDG) {
            std::complex<double> m[4] = {1, 0, 0, -1i};
            apply1(a, m);
        } else if (g == Gate::SH) {
            apply_gate(Gate::H, a);
            apply_gate(Gate::S, a);
        } else if (g == Gate::CNOT || g == Gate::CZ || g == Gate::CY) {
            size_t ca = size_t{1} << a, cb = size_t{1} << b;
            std::vector<std::complex<double>> out(amp.size());
            for (size_t i = 0; i < amp.size(); i++) {
                if (!(i & ca)) {
                    out[i] += amp[i];
                } else if (g == Gate::CNOT) {
                    out[i ^ cb] += amp[i];
                } else if (g == Gate::CZ) {
                    out[i] += (i & cb) ? -amp[i] : amp[i];
                } else {  // CY
                    out[i ^ cb] += (i & cb) ? -1i * amp[i] : 1i * amp[i];
                }
            }
            amp = std::move(out);
        }
    }

    // <psi| P |psi> for a Pauli with +-1/-+i phases.
    std::complex<double> expectation(const PauliOperator& p) const {
        using namespace std::complex_literals;
        std::complex<double> phase = 1.0;
        switch (p.raw_phase() & 3) {
            case 1:
                phase = 1i;
                break;
            case 2:
                phase = -1.0;
                break;
            case 3:
                phase = -1i;
                break;
        }
        std::complex<double> acc = 0.0;
        for (size_t i = 0; i < amp.size(); i++) {
            // P|i> = phase * (-1)^{z.(i^x ... )} |i ^ x>; applying X^x Z^z to
            // basis state |i>: Z first contributes (-1)^{popcount(z&i)}.
            size_t j = i;
            std::complex<double> f = phase;
            int zpar = 0;
            for (size_t q = 0; q < n; q++) {
                bool x = p.x_bit(q), z = p.z_bit(q);
                if (z && ((i >> q) & 1)) {
                    zpar ^= 1;
                }
                if (x) {
                    j ^= size_t{1} << q;
                }
            }
            if (zpar) {
                f = -f;
            }
            acc += std::conj(amp[j]) * f * amp[i];
        }
        return acc;
    }

    // Projects onto the outcome eigenspace of Hermitian P and renormalizes.
    void project(const PauliOperator& p, int outcome) {
        using namespace std::complex_literals;
        std::vector<std::complex<double>> out(amp.size());
        std::complex<double> phase = 1.0;
        switch (p.raw_phase() & 3) {
            case 1:
                phase = 1i;
                break;
            case 2:
                phase = -1.0;
                break;
            case 3:
                phase = -1i;
                break;
        }
        for (size_t i = 0; i < amp.size(); i++) {
            size_t j = i;
            std::complex<double> f = phase;
            int zpar = 0;
            for (size_t q = 0; q < n; q++) {
                if (p.z_bit(q) && ((i >> q) & 1)) {
                    zpar ^= 1;
                }
                if (p.x_bit(q)) {
                    j ^= size_t{1} << q;
                }
            }
            if (zpar) {
                f = -f;
            }
            // (I + o P)/2 |i> contribution: |i>/2 + o/2 * P|i>.
            out[i] += 0.5 * amp[i];
            out[j] += 0.5 * double(outcome) * f * amp[i];
        }
        double norm = 0;
        for (auto& a : out) {
            norm += std::norm(a);
        }
        norm = std::sqrt(norm);
        for (auto& a : out) {
            a /= norm;
        }
        amp = std::move(out);
    }
};

}  // namespace

TEST_CASE("H maps stabilizer Z to X") {
    StabilizerTableau t = StabilizerTableau::zero_state(1);
    t.apply_h(0);
    CHECK(*t.expectation(PauliOperator::from_string("X")) == 1);
    CHECK(!t.expectation(PauliOperator::from_string("Z")).has_value());
}

TEST_CASE("CNOT propagates X on control") {
    StabilizerTableau t = StabilizerTableau::zero_state(2);
    t.apply_h(0);
    t.apply_cnot(0, 1);
    CHECK(*t.expectation(PauliOperator::from_string("XX")) == 1);
    CHECK(*t.expectation(PauliOperator::from_string("ZZ")) == 1);
}

TEST_CASE("measuring Z on |0> is deterministic +1 and leaves state fixed") {
    StabilizerTableau t = StabilizerTableau::zero_state(1);
    auto r = t.measure_pauli(PauliOperator::from_string("Z"));
    CHECK(r.outcome == 1);
    CHECK(r.deterministic);
}

TEST_CASE("measuring X on |0> with forced +1 yields |+>") {
    StabilizerTableau t = StabilizerTableau::zero_state(1);
    auto r = t.measure_pauli(PauliOperator::from_string("X"), +1);
    CHECK(!r.deterministic);
    CHECK(r.outcome == 1);
    CHECK(*t.expectation(PauliOperator::from_string("X")) == 1);
}

TEST_CASE("repeated measurement of the same Pauli is stable") {
    std::mt19937_64 rng(99);
    StabilizerTableau t = StabilizerTableau::zero_state(4);
    for (int i = 0; i < 6; i++) {
        t.apply_gate(Gate::H, i % 4);
        t.apply_gate(Gate::CNOT, i % 4, (i + 1) % 4);
        t.apply_gate(Gate::S, (i + 2) % 4);
    }
    PauliOperator p = PauliOperator::from_string("XZIY");
    auto r1 = t.measure_pauli(p, +1);
    auto r2 = t.measure_pauli(p);
    CHECK(r2.deterministic);
    CHECK(r1.outcome == r2.outcome);
    CHECK(t.check_invariants());
}

TEST_CASE("tableau agrees with dense state-vector oracle on random 10-qubit circuits") {
    std::mt19937_64 rng(20240517);
    const size_t n = 10;
    const int cases = 1000;
    const char paulis[] = {'I', 'X', 'Y', 'Z'};
    for (int iter = 0; iter < cases; iter++) {
        StabilizerTableau tab = StabilizerTableau::zero_state(n);
        DenseState dense(n);
        int gates = 12 + int(rng() % 20);
        for (int gi = 0; gi < gates; gi++) {
            int which = int(rng() % 6);
            size_t a = rng() % n;
            size_t b = rng() % n;
            while (b == a) {
                b = rng() % n;
            }
            Gate g = which == 0   ? Gate::H
                     : which == 1 ? Gate::S
                     : which == 2 ? Gate::SDG
                     : which == 3 ? Gate::CNOT
                     : which == 4 ? Gate::CZ
                                  : Gate::CY;
            tab.apply_gate(g, a, gate_is_two_qubit(g) ? b : SIZE_MAX);
            dense.apply_gate(g, a, b);
        }
        // Compare the outcome distribution of three random Pauli measurements,
        // collapsing both simulators consistently.
        for (int mi = 0; mi < 3; mi++) {
            PauliOperator p(n);
            while (p.is_identity()) {
                for (size_t q = 0; q < n; q++) {
                    p.set_pauli(q, paulis[rng() % 4]);
                }
            }
            auto expect_tab = tab.expectation(p);
            auto expect_dense = dense.expectation(p);
            if (expect_tab.has_value()) {
                CHECK(std::abs(expect_dense.real() - double(*expect_tab)) < 1e-9);
                CHECK(std::abs(expect_dense.imag()) < 1e-9);
                tab.measure_pauli(p);
            } else {
                CHECK(std::abs(expect_dense.real()) < 1e-9);
                int forced = (rng() & 1) ? 1 : -1;
                tab.measure_pauli(p, forced);
                dense.project(p, forced);
            }
        }
        if (iter % 100 == 0) {
            CHECK(tab.check_invariants());
        }
    }
}

TEST_CASE("group helpers: rank, membership, coset weight") {
    std::vector<PauliOperator> gens = {PauliOperator::from_string("XXI"), PauliOperator::from_string("IXX")};
    CHECK(symplectic_rank(gens) == 2);
    CHECK(phase_in_group(gens, PauliOperator::from_string("XIX")).value() == 0);
    CHECK(phase_in_group(gens, PauliOperator::from_string("-XIX")).value() == 2);
    CHECK(!phase_in_group(gens, PauliOperator::from_string("ZZI")).has_value());
    CHECK(in_group_up_to_sign(gens, PauliOperator::from_string("-XXI")));
    // Coset of ZZZ over <XXI, IXX>: weight stays 3.
    CHECK(coset_min_weight(gens, PauliOperator::from_string("ZZZ")) == 3);
    // Coset of XII: elements XII, IXI (via XXI), XXX-ish... minimum weight 1.
    CHECK(coset_min_weight(gens, PauliOperator::from_string("XII")) == 1);
    int count = 0;
    enumerate_group(gens, [&](const PauliOperator&) {
        count++;
        return true;
    });
    CHECK(count == 4);
}
