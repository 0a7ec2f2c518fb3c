#include <doctest.h>

#include "torusham/hamilton.hpp"
#include "torusham/oracle.hpp"

#include <algorithm>
#include <set>

using namespace torusham;

namespace {

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

TEST_CASE("T(8,2,6) construction reproduces the boundary cycle of the proof") {
    auto [m, lab] = generate(type_3636(), 8, 2, 6);
    auto cert = construct_3636(m, lab);
    auto res = verify_certificate(m, lab, cert);
    CAPTURE(res.detail);
    REQUIRE(res.ok);
    CHECK(cert.cycle.length() == 24);
    CHECK(cert.contractible);
    // the explicit boundary cycle printed in the proof, ids = labels - 1
    std::vector<int> paper = {0,  8,  19, 12, 20, 13, 9,  14, 21, 15, 10, 16,
                              22, 17, 18, 11, 7,  6,  5,  4,  23, 3,  2,  1};
    CHECK(same_cyclic(cert.cycle.vertices, paper));
}

TEST_CASE("quad band pairing on {3^3,4^2}") {
    for (auto [r, s, k] : {std::tuple<int, int, int>{6, 4, 1}, {6, 2, 2}, {5, 6, 3}}) {
        CAPTURE(r);
        CAPTURE(s);
        CAPTURE(k);
        auto [m, lab] = generate(type_33344(), r, s, k);
        auto cert = construct_33344(m, lab);
        auto res = verify_certificate(m, lab, cert);
        CAPTURE(res.detail);
        CHECK(res.ok);
        CHECK(cert.contractible);
        CHECK(cert.cycle.homology == std::make_pair(0L, 0L));
    }
}

TEST_CASE("every construction verifies and the oracle concurs on small instances") {
    struct Case {
        FaceSequenceType t;
        int r, s, k;
    };
    const std::vector<Case> cases = {
        {type_33344(), 6, 4, 1}, {type_33344(), 3, 4, 0}, {type_33434(), 6, 4, 2},
        {type_33434(), 8, 2, 4}, {type_3636(), 8, 2, 6},  {type_3636(), 14, 1, 6},
        {type_3636(), 6, 3, 2},  {type_3636(), 8, 4, 0},  {type_3636(), 8, 5, 2},
        {type_33336(), 9, 6, 3}, {type_33336(), 6, 2, 3}, {type_33336(), 9, 4, 0},
        {type_488(), 8, 3, 4},   {type_488(), 12, 2, 4},  {type_488(), 8, 4, 0},
        {type_488(), 12, 1, 4},  {type_4612(), 12, 4, 0}, {type_4612(), 18, 2, 12},
        {type_6434(), 6, 4, 0},  {type_6434(), 9, 4, 3},  {type_6434(), 6, 6, 3},
    };
    for (const auto& c : cases) {
        CAPTURE(c.t.str());
        CAPTURE(c.r);
        CAPTURE(c.s);
        CAPTURE(c.k);
        auto [m, lab] = generate(c.t, c.r, c.s, c.k);
        auto cert = construct_hamiltonian(m, lab);
        auto res = verify_certificate(m, lab, cert);
        CAPTURE(res.detail);
        CAPTURE(cert.strategy);
        REQUIRE(res.ok);
        auto verdict = find_hamiltonian(m);
        CHECK(verdict.status == OracleStatus::Hamiltonian);
        if (cert.contractible) {
            CHECK(cert.cycle.homology == std::make_pair(0L, 0L));
            CHECK(!cert.disk_faces.empty());
        }
    }
}

TEST_CASE("the dispatcher refuses {3,12,12}") {
    auto [m, lab] = generate(type_31212(), 24, 2, 9);
    CHECK_THROWS_AS(static_cast<void>(construct_hamiltonian(m, lab)), NonHamiltonianType);
}

TEST_CASE("verify_certificate catches broken certificates") {
    auto [m, lab] = generate(type_3636(), 8, 2, 6);
    auto cert = construct_3636(m, lab);
    REQUIRE(verify_certificate(m, lab, cert).ok);

    auto swapped = cert;
    std::swap(swapped.cycle.vertices[3], swapped.cycle.vertices[10]);
    auto res = verify_certificate(m, lab, swapped);
    CHECK_FALSE(res.ok);
    CHECK(res.detail.find("not an edge") != std::string::npos);

    auto truncated = cert;
    truncated.cycle.vertices.pop_back();
    CHECK_FALSE(verify_certificate(m, lab, truncated).ok);

    auto wrong_disk = cert;
    REQUIRE(!wrong_disk.disk_faces.empty());
    wrong_disk.disk_faces.pop_back();
    CHECK_FALSE(verify_certificate(m, lab, wrong_disk).ok);
}

TEST_CASE("disk_of_cycle certifies face boundaries and rejects rows") {
    auto [m, lab] = generate(type_33344(), 6, 4, 1);
    // a facial quadrangle bounds a disk: itself
    const auto& f = m.faces()[0];
    auto d = disk_of_cycle(m, f.vertices);
    CHECK(d.size() == 1);
    // a base row is non-separating
    std::vector<int> row = {0, 1, 2, 3, 4, 5};
    CHECK(disk_of_cycle(m, row).empty());
}
