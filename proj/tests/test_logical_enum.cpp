#include <set>
#include <stdexcept>

#include "doctest.h"
#include "tricode/logical_enum.hpp"

using namespace tricode;

namespace {

// Independent oracle: expand the three nontrivial logical cosets by walking
// the full stabilizer group, then filter by weight and alphabet. Feasible for
// generator counts up to ~24.
uint64_t coset_expansion_count(const StabilizerCode& code, ErrorAlphabet alphabet, int w) {
    auto gens = code.generators();
    bool single_sector = code.spec.kind == CodeSpec::Kind::RotatedSurface;
    auto fits = [&](const PauliOperator& p) {
        if (p.weight() != w) {
            return false;
        }
        bool has_x = false, has_z = false;
        for (size_t q = 0; q < code.n; q++) {
            char c = p.pauli_at(q);
            has_x |= c == 'X' || c == 'Y';
            has_z |= c == 'Z' || c == 'Y';
            if (c == 'Y' && alphabet != ErrorAlphabet::XYZ) {
                return false;
            }
            if (c == 'Z' && alphabet == ErrorAlphabet::X) {
                return false;
            }
        }
        if (single_sector && has_x && has_z) {
            return false;
        }
        return true;
    };
    uint64_t count = 0;
    for (const PauliOperator* rep : {&code.logical_x, &code.logical_y, &code.logical_z}) {
        enumerate_group(gens, [&](const PauliOperator& g) {
            PauliOperator e = g;
            e *= *rep;
            if (fits(e)) {
                count++;
            }
            return true;
        });
    }
    return count;
}

}  // namespace

TEST_CASE("published counting-table values at d=3") {
    auto tri = build_triangle(2, 2, 2);
    CHECK(count_min_weight_logicals(tri, ErrorAlphabet::X, 3) == 3);
    CHECK(count_min_weight_logicals(tri, ErrorAlphabet::XZ, 3) == 14);
    CHECK(count_min_weight_logicals(tri, ErrorAlphabet::XYZ, 3) == 30);
    auto surf = build_rotated_surface(3);
    CHECK(count_min_weight_logicals(surf, ErrorAlphabet::X, 3) == 8);
    CHECK(count_min_weight_logicals(surf, ErrorAlphabet::XZ, 3) == 16);
    CHECK(count_min_weight_logicals(surf, ErrorAlphabet::XYZ, 3) == 16);
}

TEST_CASE("published counting-table values at d=5") {
    auto tri = build_triangle(3, 3, 3);
    CHECK(count_min_weight_logicals(tri, ErrorAlphabet::X, 5) == 20);
    CHECK(count_min_weight_logicals(tri, ErrorAlphabet::XZ, 5) == 86);
    CHECK(count_min_weight_logicals(tri, ErrorAlphabet::XYZ, 5) == 204);
    auto surf = build_rotated_surface(5);
    CHECK(count_min_weight_logicals(surf, ErrorAlphabet::X, 5) == 52);
    CHECK(count_min_weight_logicals(surf, ErrorAlphabet::XZ, 5) == 104);
    CHECK(count_min_weight_logicals(surf, ErrorAlphabet::XYZ, 5) == 104);
}

TEST_CASE("witness lists match counts and verify as logicals") {
    auto tri = build_triangle(2, 2, 2);
    auto wits = enumerate_min_weight_logicals(tri, ErrorAlphabet::X, 3);
    CHECK(wits.size() == 3);
    for (const auto& wgt : wits) {
        // Pure-X strings of the x-side family anticommute with logical Z.
        CHECK(!wgt.commutes_with(tri.logical_z));
        for (const auto& g : tri.generators()) {
            CHECK(g.commutes_with(wgt));
        }
    }
}

TEST_CASE("surface XZ and XYZ witness sets coincide at d=3") {
    auto surf = build_rotated_surface(3);
    auto a = enumerate_min_weight_logicals(surf, ErrorAlphabet::XZ, 3);
    auto bb = enumerate_min_weight_logicals(surf, ErrorAlphabet::XYZ, 3);
    REQUIRE(a.size() == bb.size());
    std::set<std::string> sa, sb;
    for (const auto& p : a) {
        sa.insert(p.str());
    }
    for (const auto& p : bb) {
        sb.insert(p.str());
    }
    CHECK(sa == sb);
}

TEST_CASE("alphabet monotonicity and minimality sanity") {
    for (auto spec : {CodeSpec::triangle(2, 2, 2), CodeSpec::triangle(2, 2, 3), CodeSpec::rotated_surface(3)}) {
        auto code = build_code(spec);
        int d = *std::min_element(code.distances.begin(), code.distances.end());
        auto cx = count_min_weight_logicals(code, ErrorAlphabet::X, d);
        auto cxz = count_min_weight_logicals(code, ErrorAlphabet::XZ, d);
        auto cxyz = count_min_weight_logicals(code, ErrorAlphabet::XYZ, d);
        CAPTURE(spec.str());
        CHECK(cx <= cxz);
        CHECK(cxz <= cxyz);
    }
    // Witness times stabilizer generator has weight >= d.
    auto tri = build_triangle(2, 2, 2);
    auto gens = tri.generators();
    for (const auto& wgt : enumerate_min_weight_logicals(tri, ErrorAlphabet::XYZ, 3)) {
        for (const auto& g : gens) {
            PauliOperator prod = wgt;
            prod *= g;
            CHECK(prod.weight() >= 3);
        }
    }
}

TEST_CASE("counts invariant under the transversal SH relabeling") {
    auto tri = build_triangle(2, 2, 2);
    auto sh = transversal_sh(tri);
    auto wits = enumerate_min_weight_logicals(tri, ErrorAlphabet::XYZ, 3);
    std::set<std::string> orig, mapped;
    for (const auto& p : wits) {
        orig.insert(p.str().substr(p.str().find_first_of("IXYZ")));
        PauliOperator r = p;
        for (auto [g, q] : sh.gates) {
            if (g == Gate::H) {
                r.apply_h(q);
            } else if (g == Gate::SDG) {
                r.apply_sdg(q);
            }
        }
        PauliOperator out(tri.n);
        for (size_t q = 0; q < tri.n; q++) {
            if (r.pauli_at(q) != 'I') {
                out.set_pauli(sh.permutation[q], r.pauli_at(q));
            }
        }
        std::string s = out.str();
        mapped.insert(s.substr(s.find_first_of("IXYZ")));
    }
    CHECK(orig == mapped);
}

TEST_CASE("independent coset-expansion oracle agrees for n <= 19") {
    for (auto spec : {CodeSpec::triangle(2, 2, 2), CodeSpec::triangle(3, 3, 3), CodeSpec::triangle(2, 3, 3),
                      CodeSpec::rotated_surface(3)}) {
        auto code = build_code(spec);
        for (auto alpha : {ErrorAlphabet::X, ErrorAlphabet::XZ, ErrorAlphabet::XYZ}) {
            for (int w : {code.distances[0], code.distances[0] > 2 ? code.distances[0] - 1 : 2}) {
                CAPTURE(spec.str());
                CAPTURE(alphabet_name(alpha));
                CAPTURE(w);
                CHECK(count_min_weight_logicals(code, alpha, w) == coset_expansion_count(code, alpha, w));
            }
        }
    }
}

TEST_CASE("budget overflow raises a resource error") {
    auto surf = build_rotated_surface(5);
    CHECK_THROWS_AS(count_min_weight_logicals(surf, ErrorAlphabet::XYZ, 9, 1000), std::length_error);
}
