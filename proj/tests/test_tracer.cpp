#include <doctest.h>

#include "torusham/tracer.hpp"

#include <algorithm>
#include <set>

using namespace torusham;

namespace {

std::set<int> vset(const TracedCycle& c) {
    return std::set<int>(c.vertices.begin(), c.vertices.end());
}

bool same_cyclic(std::vector<int> a, std::vector<int> b) {
    if (a.size() != b.size()) return false;
    const int n = static_cast<int>(a.size());
    for (int flip = 0; flip < 2; ++flip) {
        for (int s = 0; s < n; ++s) {
            bool ok = true;
            for (int i = 0; i < n && ok; ++i) ok = a[i] == b[(s + i) % n];
            if (ok) return true;
        }
        std::reverse(b.begin(), b.end());
    }
    return false;
}

} // namespace

TEST_CASE("A1 rows trace the base cycles of the grid") {
    auto [m, lab] = generate(type_33344(), 6, 4, 1);
    CHECK(successor(m, lab, CycleKind::A1, 0, 1) == 2);
    auto c = trace_cycle(m, lab, CycleKind::A1, 0, 1);
    CHECK(c.length() == 6);
    CHECK(vset(c) == std::set<int>({0, 1, 2, 3, 4, 5}));
    CHECK(c.homology == std::make_pair(1L, 0L));

    // Lemma 1.1: same-kind cycles sharing a vertex coincide
    auto c2 = trace_cycle(m, lab, CycleKind::A1, 3, 4);
    CHECK(vset(c2) == vset(c));

    // the A3 column is the second cut: it passes straight up
    auto col = trace_cycle(m, lab, CycleKind::A3, 0, 6);
    CHECK(col.length() == 24); // k=1 makes one vertical orbit cover everything
    CHECK(col.homology.second != 0);

    // A2 shares the vertical edge but leaves along the other diagonal
    auto diag = trace_cycle(m, lab, CycleKind::A2, 0, 6);
    CHECK(diag.length() > 0);
    CHECK(diag.vertices != col.vertices);
}

TEST_CASE("X1 traces rows and diagonals of the kagome map") {
    auto [m, lab] = generate(type_3636(), 8, 2, 6);
    auto row = trace_cycle(m, lab, CycleKind::X1, 0, 1);
    CHECK(row.length() == 8);
    CHECK(vset(row) == std::set<int>({0, 1, 2, 3, 4, 5, 6, 7}));
    CHECK(row.homology == std::make_pair(1L, 0L));

    // the second cut v1 -> v9 -> v13 -> v21 -> v7 is an X1 path
    CHECK(successor(m, lab, CycleKind::X1, 0, 8) == 12);
    CHECK(successor(m, lab, CycleKind::X1, 8, 12) == 20);
    auto diag = trace_cycle(m, lab, CycleKind::X1, 0, 8);
    CHECK(diag.homology.second != 0);
}

TEST_CASE("B1 rows on the snub square map") {
    auto [m, lab] = generate(type_33434(), 6, 4, 2);
    auto fam = homologous_family(m, lab);
    REQUIRE(fam.size() == 4);
    for (const auto& c : fam) CHECK(c.length() == 6);
    // Lemma 2.1: cycles sharing an edge are identical
    auto again = trace_cycle(m, lab, CycleKind::B1, 2, 3);
    CHECK(same_cyclic(again.vertices, fam[0].vertices));
}

TEST_CASE("Y1 rows on the snub hexagonal map, and the reversed tracing") {
    auto [m, lab] = generate(type_33336(), 9, 6, 3);
    auto fam = homologous_family(m, lab);
    REQUIRE(fam.size() == 6);
    for (const auto& c : fam) {
        CHECK(c.length() == 9);
        CHECK(c.homology == std::make_pair(1L, 0L));
    }
    // Defs 4.1 and 4.2 define the same cycle: reversed seed, reversed cycle
    auto fwd = trace_cycle(m, lab, CycleKind::Y1, 0, 1);
    auto rev = trace_cycle(m, lab, CycleKind::Y1, 1, 0);
    CHECK(same_cyclic(fwd.vertices, rev.vertices));
}

TEST_CASE("run kinds trace the horizontal rows of their maps") {
    struct Case {
        FaceSequenceType t;
        int r, s, k;
    };
    const std::vector<Case> cases = {
        {type_488(), 8, 3, 4},
        {type_31212(), 24, 2, 9},
        {type_4612(), 12, 4, 6},
        {type_6434(), 6, 4, 3},
    };
    for (const auto& c : cases) {
        CAPTURE(c.t.str());
        auto [m, lab] = generate(c.t, c.r, c.s, c.k);
        auto fam = homologous_family(m, lab);
        REQUIRE(static_cast<int>(fam.size()) == c.s);
        for (const auto& cyc : fam) {
            CHECK(cyc.length() == c.r);
            CHECK(cyc.homology == std::make_pair(1L, 0L));
        }
    }
}

TEST_CASE("G1 base row of T(24,2,9) is the printed 24-cycle") {
    auto [m, lab] = generate(type_31212(), 24, 2, 9);
    auto c = trace_cycle(m, lab, CycleKind::G1, 0, 1);
    std::vector<int> expect(24);
    for (int i = 0; i < 24; ++i) expect[i] = i;
    CHECK(same_cyclic(c.vertices, expect));
}

TEST_CASE("cylinders have boundaries of the core's length") {
    auto [m, lab] = generate(type_33344(), 6, 6, 1);
    auto core = trace_cycle(m, lab, CycleKind::A1, 6, 7); // row 1
    auto cyl = build_cylinder(m, lab, core);
    REQUIRE(cyl.boundary.size() == 2);
    CHECK(cyl.boundary[0].length() == core.length());
    CHECK(cyl.boundary[1].length() == core.length());
    // Figure 1: the cylinder around row w is bounded by rows v and x
    std::set<int> want0, want2;
    for (int mcol = 0; mcol < 6; ++mcol) {
        want0.insert(mcol);
        want2.insert(12 + mcol);
    }
    std::set<int> b0 = vset(cyl.boundary[0]), b1 = vset(cyl.boundary[1]);
    CHECK(((b0 == want0 && b1 == want2) || (b0 == want2 && b1 == want0)));
}

TEST_CASE("homology of face boundaries vanishes") {
    auto [m, lab] = generate(type_33336(), 9, 6, 3);
    for (const auto& f : m.faces()) {
        auto h = homology_class(m, lab, f.vertices);
        CHECK(h == std::make_pair(0L, 0L));
    }
}

TEST_CASE("tracing rejects mismatched kinds") {
    auto [m, lab] = generate(type_488(), 8, 3, 4);
    CHECK_THROWS_AS(static_cast<void>(trace_cycle(m, lab, CycleKind::A1, 0, 1)), MapError);
}

TEST_CASE("kind names round-trip") {
    for (CycleKind k : {CycleKind::A1, CycleKind::B1, CycleKind::X1, CycleKind::Y1, CycleKind::Z1,
                        CycleKind::G1, CycleKind::H1, CycleKind::W1})
        CHECK(kind_from_name(kind_name(k)) == k);
    CHECK_THROWS_AS(static_cast<void>(kind_from_name("Q7")), MapError);
}
