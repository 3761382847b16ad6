#include <set>
#include <stdexcept>

#include "doctest.h"
#include "tricode/code.hpp"

using namespace tricode;

TEST_CASE("triangle qubit counts match (3d^2+1)/4 for symmetric codes") {
    for (int d : {3, 5, 7, 9, 11}) {
        int half = (d + 1) / 2;
        auto code = build_triangle(half, half, half);
        CHECK(code.n == size_t((3 * d * d + 1) / 4));
        CHECK(code.generators().size() == code.n - 1);
    }
    CHECK(build_triangle(2, 2, 2).n == 7);
    CHECK(build_triangle(3, 3, 3).n == 19);
}

TEST_CASE("rotated surface code counts") {
    auto s3 = build_rotated_surface(3);
    CHECK(s3.n == 9);
    CHECK(s3.generators().size() == 8);
    CHECK(build_rotated_surface(5).n == 25);
    for (const auto& g : s3.generators()) {
        bool has_x = false, has_z = false;
        for (size_t q = 0; q < s3.n; q++) {
            has_x |= g.pauli_at(q) == 'X';
            has_z |= g.pauli_at(q) == 'Z';
        }
        CHECK(!(has_x && has_z));  // CSS
    }
}

TEST_CASE("validator passes for constructed codes") {
    for (auto spec : {CodeSpec::triangle(2, 2, 2), CodeSpec::triangle(3, 3, 3), CodeSpec::triangle(2, 3, 4),
                      CodeSpec::triangle(3, 2, 2), CodeSpec::rotated_surface(3), CodeSpec::rotated_surface(5)}) {
        auto code = build_code(spec);
        auto rep = validate(code);
        CAPTURE(spec.str());
        CHECK(rep.ok());
        if (!rep.ok()) {
            MESSAGE(rep.summary());
        }
    }
}

TEST_CASE("validator catches a type-flipped generator") {
    auto code = build_triangle(2, 2, 2);
    // Flip X <-> Z on one plaquette: commutation must break.
    auto& p = code.plaquettes[1].pauli;
    PauliOperator flipped(code.n);
    for (size_t q = 0; q < code.n; q++) {
        char c = p.pauli_at(q);
        flipped.set_pauli(q, c == 'X' ? 'Z' : c == 'Z' ? 'X' : c);
    }
    p = flipped;
    auto rep = validate(code, false);
    CHECK(!rep.ok());

    // A sign flip alone must NOT break validation.
    auto code2 = build_triangle(2, 2, 2);
    code2.plaquettes[0].pauli.negate();
    CHECK(validate(code2, false).ok());
}

TEST_CASE("degenerate triangle codes validate across the sweep r,s,t <= 4") {
    for (int r = 1; r <= 4; r++) {
        for (int s = 1; s <= 4; s++) {
            for (int t = 1; t <= 4; t++) {
                auto code = build_triangle(r, s, t);
                CAPTURE(r);
                CAPTURE(s);
                CAPTURE(t);
                CHECK(code.generators().size() == code.n - 1);
                auto rep = validate(code, false);
                CHECK(rep.ok());
                if (!rep.ok()) {
                    MESSAGE(rep.summary());
                }
            }
        }
    }
}

TEST_CASE("triangle(1,1,1) is a bare qubit") {
    auto code = build_triangle(1, 1, 1);
    CHECK(code.n == 1);
    CHECK(code.generators().empty());
    CHECK(code.logical_x == PauliOperator::from_string("X"));
    CHECK(code.logical_y == PauliOperator::from_string("Y"));
    CHECK(code.logical_z == PauliOperator::from_string("Z"));
}

TEST_CASE("triangle(2,2,2) logical Z matches Eq. form and weights") {
    auto code = build_triangle(2, 2, 2);
    PauliOperator expect_z(code.n);
    expect_z.set_pauli(code.qubit_at({1, 0, 1}), 'Z');
    expect_z.set_pauli(code.qubit_at({0, 0, 1}), 'Z');
    expect_z.set_pauli(code.qubit_at({0, 1, 1}), 'Z');
    CHECK(code.logical_z == expect_z);
    CHECK(code.logical_z.weight() == 3);
    CHECK(code.logical_y.weight() == 3);  // r + t - 1
    // X*Y*Z lands in +-i times the stabilizer group.
    PauliOperator prod = code.logical_x * code.logical_y * code.logical_z;
    auto gens = code.generators();
    auto ph = phase_in_group(gens, prod);
    REQUIRE(ph.has_value());
    CHECK((*ph & 1) == 1);
}

TEST_CASE("brute-force distances match formulas for all shapes with n <= 19") {
    for (int r = 1; r <= 5; r++) {
        for (int s = 1; s <= 5; s++) {
            for (int t = 1; t <= 5; t++) {
                int n = r * s + s * t + r * t - r - s - t + 1;
                if (n > 19) {
                    continue;
                }
                auto code = build_triangle(r, s, t);
                CAPTURE(r);
                CAPTURE(s);
                CAPTURE(t);
                CHECK(brute_force_distances(code) == code.distances);
            }
        }
    }
    auto s3 = build_rotated_surface(3);
    CHECK(brute_force_distances(s3) == std::array<int, 3>{3, 5, 3});
}

TEST_CASE("pairwise generator commutation for triangle(2,2,2) is exhaustive") {
    auto code = build_triangle(2, 2, 2);
    auto gens = code.generators();
    REQUIRE(gens.size() == 6);
    for (size_t i = 0; i < gens.size(); i++) {
        for (size_t j = 0; j < gens.size(); j++) {
            CHECK(gens[i].commutes_with(gens[j]));
        }
    }
}

TEST_CASE("d x 1 x d triangle is check-structure isomorphic to the rotated surface code") {
    for (int d : {3, 5}) {
        auto tri = build_triangle(d, 1, d);
        auto surf = build_rotated_surface(d);
        REQUIRE(tri.n == surf.n);
        auto tri_gens = tri.generators();
        // Try the 8 dihedral relabelings of the d x d grid.
        bool found = false;
        for (int refl = 0; refl < 2 && !found; refl++) {
            for (int rot = 0; rot < 4 && !found; rot++) {
                std::vector<size_t> perm(tri.n);
                for (size_t q = 0; q < tri.n; q++) {
                    auto c = tri.coords[q];  // (x, 0, z)
                    int a = c[0], b = c[2];
                    if (refl) {
                        std::swap(a, b);
                    }
                    for (int k = 0; k < rot; k++) {
                        int na = d - 1 - b, nb = a;
                        a = na;
                        b = nb;
                    }
                    perm[q] = surf.qubit_at({a, b, 0});
                }
                std::vector<PauliOperator> mapped;
                for (const auto& g : tri_gens) {
                    PauliOperator m(surf.n);
                    for (size_t q = 0; q < tri.n; q++) {
                        char p = g.pauli_at(q);
                        if (p != 'I') {
                            m.set_pauli(perm[q], p);
                        }
                    }
                    mapped.push_back(m);
                }
                if (groups_equal(mapped, surf.generators(), false)) {
                    found = true;
                }
            }
        }
        CAPTURE(d);
        CHECK(found);
    }
}

TEST_CASE("transversal SH fixes the stabilizer group and cycles logicals") {
    for (int half : {2, 3}) {
        auto code = build_triangle(half, half, half);
        auto sh = transversal_sh(code);
        REQUIRE(sh.permutation.size() == code.n);

        auto transform = [&](const PauliOperator& p) {
            PauliOperator r = p;
            for (auto [g, q] : sh.gates) {
                switch (g) {
                    case Gate::H:
                        r.apply_h(q);
                        break;
                    case Gate::SH:
                        r.apply_sh(q);
                        break;
                    case Gate::S:
                        r.apply_s(q);
                        break;
                    case Gate::SDG:
                        r.apply_sdg(q);
                        break;
                    default:
                        FAIL("unexpected gate in transversal SH list");
                }
            }
            PauliOperator out(code.n);
            for (size_t q = 0; q < code.n; q++) {
                char c = r.pauli_at(q);
                if (c != 'I') {
                    out.set_pauli(sh.permutation[q], c);
                }
            }
            if (r.sign() < 0) {
                out.negate();
            }
            return out;
        };

        auto gens = code.generators();
        std::vector<PauliOperator> mapped;
        for (const auto& g : gens) {
            mapped.push_back(transform(g));
        }
        CHECK(groups_equal(mapped, gens, true));

        // Logical classes cycle X -> Y -> Z -> X.
        CHECK(logical_class(code, transform(code.logical_x)) == 2);
        CHECK(logical_class(code, transform(code.logical_y)) == 3);
        CHECK(logical_class(code, transform(code.logical_z)) == 1);

        // Order 3 on classes.
        PauliOperator thrice = transform(transform(transform(code.logical_x)));
        CHECK(logical_class(code, thrice) == 1);
    }
}

TEST_CASE("non-symmetric codes reject transversal SH") {
    auto code = build_triangle(2, 2, 3);
    CHECK_THROWS_AS(transversal_sh(code), std::invalid_argument);
}

TEST_CASE("logical_class basics") {
    auto code = build_triangle(2, 2, 2);
    CHECK(logical_class(code, PauliOperator::identity(code.n)) == 0);
    CHECK(logical_class(code, code.generators()[0]) == 0);
    CHECK(logical_class(code, code.logical_x) == 1);
    CHECK(logical_class(code, code.logical_y) == 2);
    CHECK(logical_class(code, code.logical_z) == 3);
    PauliOperator shifted = code.logical_x * code.generators()[2];
    CHECK(logical_class(code, shifted) == 1);
    PauliOperator bad = PauliOperator::single(code.n, 0, 'X');
    CHECK_THROWS_AS(logical_class(code, bad), std::invalid_argument);
}

TEST_CASE("code JSON round trip is bit exact") {
    for (auto spec : {CodeSpec::triangle(2, 2, 2), CodeSpec::triangle(3, 2, 4), CodeSpec::rotated_surface(3)}) {
        auto code = build_code(spec);
        std::string once = code_to_json(code);
        auto back = code_from_json(once);
        CHECK(code_to_json(back) == once);
        CHECK(back.generators().size() == code.generators().size());
    }
}

TEST_CASE("mixed plaquettes other than central are half X half Z") {
    auto code = build_triangle(4, 4, 4);
    int mixed = 0;
    for (const auto& p : code.plaquettes) {
        if (p.kind == CheckKind::Mixed) {
            mixed++;
            int nx = 0, nz = 0;
            for (size_t q = 0; q < code.n; q++) {
                nx += p.pauli.pauli_at(q) == 'X';
                nz += p.pauli.pauli_at(q) == 'Z';
            }
            CHECK(nx == 2);
            CHECK(nz == 2);
        }
    }
    CHECK(mixed == 2);  // s - 2 non-central mixed plaquettes
}
