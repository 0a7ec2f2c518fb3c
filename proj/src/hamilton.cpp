#include "torusham/hamilton.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace torusham {

namespace {

// face below the rightward dart u->v in the planar cut; with counter-
// clockwise rotations the next-dart orbit of u->v walks the face clockwise,
// which lies on the dart's right
int face_right_of(const ToroidalMap& m, int u, int v) { return m.face_at(u, m.slot_of(u, v)); }
// face above the rightward dart u->v
int face_left_of(const ToroidalMap& m, int u, int v) { return m.face_at(v, m.slot_of(v, u)); }

int face_of_size_at_edge(const ToroidalMap& m, int u, int v, int size) {
    auto [f1, f2] = m.edge_faces(u, v);
    if (m.faces()[f1].size() == size) return f1;
    if (m.faces()[f2].size() == size) return f2;
    throw MapError(MapErrorCode::RuleViolation, "no face of size " + std::to_string(size) +
                                                    " at edge " + std::to_string(u) + "-" +
                                                    std::to_string(v));
}

std::set<std::pair<int, int>> face_edge_set(const ToroidalMap& m, const std::set<int>& faces) {
    std::set<std::pair<int, int>> edges;
    for (int f : faces) {
        const auto& vs = m.faces()[f].vertices;
        for (size_t i = 0; i < vs.size(); ++i) {
            auto key = std::minmax(vs[i], vs[(i + 1) % vs.size()]);
            edges.insert(key);
        }
    }
    return edges;
}

// edges lying on exactly one face of the set
std::set<std::pair<int, int>> boundary_edges(const ToroidalMap& m, const std::set<int>& faces) {
    std::map<std::pair<int, int>, int> count;
    for (int f : faces) {
        const auto& vs = m.faces()[f].vertices;
        for (size_t i = 0; i < vs.size(); ++i) {
            auto key = std::minmax(vs[i], vs[(i + 1) % vs.size()]);
            ++count[{key.first, key.second}];
        }
    }
    std::set<std::pair<int, int>> out;
    for (auto [e, c] : count)
        if (c == 1) out.insert(e);
    return out;
}

// boundary of a disk-shaped face set as a single simple cycle
std::vector<int> boundary_cycle(const ToroidalMap& m, const std::set<int>& faces) {
    auto bedges = boundary_edges(m, faces);
    if (bedges.empty())
        throw MapError(MapErrorCode::RuleViolation, "face set has no boundary");
    std::map<int, std::vector<int>> adj;
    for (auto [a, b] : bedges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    for (const auto& [v, nb] : adj)
        if (nb.size() != 2)
            throw MapError(MapErrorCode::RuleViolation,
                           "carrier boundary pinches at vertex " + std::to_string(v));
    std::vector<int> cyc;
    int start = adj.begin()->first;
    int prev = -1, cur = start;
    do {
        cyc.push_back(cur);
        int nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
        prev = cur;
        cur = nxt;
    } while (cur != start);
    if (cyc.size() != bedges.size())
        throw MapError(MapErrorCode::RuleViolation, "carrier boundary is not a single cycle");
    return cyc;
}

long carrier_euler(const ToroidalMap& m, const std::set<int>& faces) {
    std::set<int> verts;
    for (int f : faces)
        for (int v : m.faces()[f].vertices) verts.insert(v);
    return static_cast<long>(verts.size()) - static_cast<long>(face_edge_set(m, faces).size()) +
           static_cast<long>(faces.size());
}

// splice two cycles that share exactly the edge (x,y) and no other vertex
std::vector<int> concat_cycles(const std::vector<int>& A, const std::vector<int>& B, int x,
                               int y) {
    auto orient = [&](const std::vector<int>& C) {
        // rotate/flip so the list runs y ... x (edge x-y removed)
        const int n = static_cast<int>(C.size());
        int pos = -1;
        for (int i = 0; i < n; ++i)
            if (C[i] == x) pos = i;
        if (pos < 0) throw MapError(MapErrorCode::RuleViolation, "concat: missing vertex");
        std::vector<int> out;
        if (C[(pos + 1) % n] == y) {
            for (int i = 0; i < n; ++i) out.push_back(C[(pos + 1 + i) % n]);
        } else if (C[(pos - 1 + n) % n] == y) {
            for (int i = 0; i < n; ++i) out.push_back(C[(pos - 1 - i + 2 * n) % n]);
        } else {
            throw MapError(MapErrorCode::RuleViolation, "concat: cycles do not share the edge");
        }
        return out; // starts at y, ends at x
    };
    std::vector<int> pa = orient(A), pb = orient(B);
    // pa: y..x, pb reversed gives x..y; drop the duplicated endpoints
    std::reverse(pb.begin(), pb.end());
    std::vector<int> out = pa;
    for (size_t i = 1; i + 1 < pb.size(); ++i) out.push_back(pb[i]);
    return out;
}

HamiltonianCertificate finish(const ToroidalMap& m, const GridLabeling& lab,
                              std::vector<int> cycle, const std::string& strategy) {
    HamiltonianCertificate cert;
    cert.cycle.vertices = std::move(cycle);
    cert.cycle.kind = CycleKind::Constructed;
    cert.cycle.homology = homology_class(m, lab, cert.cycle.vertices);
    cert.strategy = strategy;
    cert.disk_faces = disk_of_cycle(m, cert.cycle.vertices);
    cert.contractible = !cert.disk_faces.empty();
    return cert;
}

// ---------------------------------------------------------------- band types

// {3^3,4^2} and {3^2,4,3,4}: pair rows (2p,2p+1) into band disks (all cells
// of band 2p except the wrap cell), then bridge consecutive pairs through
// the cell at columns (0,1) of the odd band between them.
HamiltonianCertificate construct_band_pairs(const ToroidalMap& m, const GridLabeling& lab,
                                            const std::string& strategy) {
    const int r = lab.rep.r, s = lab.rep.s;
    if (s % 2 != 0)
        throw MapError(MapErrorCode::InvalidParameters, "odd row count");
    auto row = [&](int i, int mm) { return lab.vertex_of_row(i, mm); };
    std::set<int> S;
    auto add_cell = [&](int a, int j) {
        S.insert(face_left_of(m, row(a, j), row(a, j + 1)));
        S.insert(face_right_of(m, row(a + 1, j), row(a + 1, j + 1)));
    };
    for (int p = 0; p < s / 2; ++p)
        for (int j = 0; j + 1 < r; ++j) add_cell(2 * p, j);
    for (int p = 0; p + 1 < s / 2; ++p) add_cell(2 * p + 1, 0);
    return finish(m, lab, boundary_cycle(m, S), strategy);
}

// ------------------------------------------------------------------ {6,3,6,3}

struct Kagome {
    const ToroidalMap& m;
    const GridLabeling& lab;
    int r, s, half;
    Kagome(const ToroidalMap& m_, const GridLabeling& lab_)
        : m(m_), lab(lab_), r(lab_.rep.r), s(lab_.rep.s), half(lab_.rep.r / 2) {}
    int row(int i, int mm) const { return lab.vertex_of_row(i, mm); }
    int hex(int a, int j) const { return face_left_of(m, row(a, 2 * j - 1), row(a, 2 * j)); }
    int dtri(int a, int j) const { return face_left_of(m, row(a, 2 * j), row(a, 2 * j + 1)); }
    int utri(int a, int j) const {
        return face_right_of(m, row(a + 1, 2 * j - 1), row(a + 1, 2 * j));
    }
    int apex_above(int a, int mm) const { // apex between (a,mm) and (a,mm+1), mm even
        int t = dtri(a, mm / 2);
        for (int v : m.faces()[t].vertices)
            if (v != row(a, mm) && v != row(a, mm + 1)) return v;
        throw MapError(MapErrorCode::RuleViolation, "apex not found");
    }
    int apex_below(int a, int mm) const { // apex of band a-1 under edge (mm, mm+1), mm odd
        int t = utri(a - 1, ((mm + 1) / 2) % half);
        for (int v : m.faces()[t].vertices)
            if (v != row(a, mm) && v != row(a, mm + 1)) return v;
        throw MapError(MapErrorCode::RuleViolation, "apex not found");
    }
};

// repair pass shared by the kagome cases: add triangles that pick up
// vertices missing from the boundary, each glued along one boundary edge
void repair_uncovered(const ToroidalMap& m, std::set<int>& S, const std::set<int>& target) {
    for (int rounds = 0; rounds < m.n(); ++rounds) {
        auto bedges = boundary_edges(m, S);
        std::set<int> carrier_vertices;
        auto cedges = face_edge_set(m, S);
        for (auto [a, b] : cedges) {
            carrier_vertices.insert(a);
            carrier_vertices.insert(b);
        }
        std::set<int> on_boundary;
        for (auto [a, b] : bedges) {
            on_boundary.insert(a);
            on_boundary.insert(b);
        }
        int missing = -1;
        for (int v : target)
            if (!on_boundary.count(v)) {
                missing = v;
                break;
            }
        if (missing < 0) return;
        if (carrier_vertices.count(missing))
            throw MapError(MapErrorCode::RuleViolation,
                           "vertex " + std::to_string(missing) + " buried inside the disk");
        bool added = false;
        for (int slot = 0; slot < m.degree(missing) && !added; ++slot) {
            int f = m.face_at(missing, slot);
            if (S.count(f)) continue;
            const auto& vs = m.faces()[f].vertices;
            // the face must meet the carrier in exactly one boundary edge
            std::vector<std::pair<int, int>> shared;
            bool clean = true;
            for (size_t i = 0; i < vs.size(); ++i) {
                auto key = std::minmax(vs[i], vs[(i + 1) % vs.size()]);
                std::pair<int, int> e{key.first, key.second};
                if (cedges.count(e)) {
                    shared.push_back(e);
                    if (!bedges.count(e)) clean = false;
                }
            }
            if (!clean || shared.size() != 1) continue;
            std::set<int> shared_vs = {shared[0].first, shared[0].second};
            for (int v : vs)
                if (!shared_vs.count(v) && carrier_vertices.count(v)) clean = false;
            if (!clean) continue;
            S.insert(f);
            added = true;
        }
        if (!added)
            throw MapError(MapErrorCode::RuleViolation,
                           "no repair face for vertex " + std::to_string(missing));
    }
    throw MapError(MapErrorCode::RuleViolation, "repair loop did not converge");
}

HamiltonianCertificate construct_3636_impl(const ToroidalMap& m, const GridLabeling& lab) {
    Kagome K(m, lab);
    const int t = K.s, r = K.r;

    if (t == 1) {
        // weave the single row through every apex above it
        std::vector<int> cyc;
        for (int mm = 0; mm < r; ++mm) {
            cyc.push_back(K.row(0, mm));
            if (mm % 2 == 0) cyc.push_back(K.apex_above(0, mm));
        }
        return finish(m, lab, cyc, "single-row-weave");
    }

    // bands whose hexagon chains enter the disk: disjoint pairs of rows,
    // with the last two bands adjacent when t is odd (they share a row)
    std::vector<int> bands;
    if (t % 2 == 0) {
        for (int a = 0; a < t; a += 2) bands.push_back(a);
    } else {
        for (int a = 0; a + 4 < t; a += 2) bands.push_back(a);
        bands.push_back(t - 3);
        bands.push_back(t - 2);
    }
    // each band's chain omits one hexagon to cut the wrap; the omission in
    // band 0 dodges the column where the seam shift would otherwise block
    // both candidate triangles of a wrap-band apex
    const int e0 = ((lab.rep.k / 2 - 1) % K.half + K.half) % K.half == 0 ? 1 : 0;
    std::set<int> S;
    for (int a : bands) {
        int skip = (a == 0) ? e0 : 0;
        for (int j = 0; j < K.half; ++j)
            if (j != skip) S.insert(K.hex(a, j));
        for (int j = 0; j < K.half; ++j) S.insert(K.dtri(a, j));
    }
    // bridge bands two rows apart through one triangle and one hexagon of
    // the band between them; adjacent bands already share row edges
    for (size_t i = 0; i + 1 < bands.size(); ++i) {
        if (bands[i + 1] != bands[i] + 2) continue;
        int b = bands[i] + 1;
        S.insert(K.dtri(b, 1));
        S.insert(K.hex(b, 1));
    }
    std::set<int> all;
    for (int v = 0; v < m.n(); ++v) all.insert(v);
    repair_uncovered(m, S, all);
    return finish(m, lab, boundary_cycle(m, S),
                  t % 2 == 0 ? "paired-hexagon-disks" : "paired-hexagon-disks+band-triple");
}

// ------------------------------------------------------------------- {3^4,6}

HamiltonianCertificate construct_33336_impl(const ToroidalMap& m, const GridLabeling& lab) {
    const int r = lab.rep.r, s = lab.rep.s, B = r / 3;
    auto row = [&](int i, int mm) { return lab.vertex_of_row(i, mm); };
    std::set<int> S;
    for (int a = 1; a < s; a += 2) {
        for (int j = 0; j < B; ++j) S.insert(face_left_of(m, row(a, 3 * j), row(a, 3 * j + 1)));
        for (int j = 0; j + 1 < B; ++j) {
            S.insert(face_left_of(m, row(a, 3 * j + 2), row(a, 3 * j + 3)));
            S.insert(face_right_of(m, row(a + 1, 3 * j + 1), row(a + 1, 3 * j + 2)));
        }
    }
    for (int a = 1; a + 2 < s; a += 2) {
        int e = a + 1; // triangle band between the hexagon bands a and a+2
        S.insert(face_left_of(m, row(e, 0), row(e, 1)));
        S.insert(face_right_of(m, row(e + 1, 0), row(e + 1, 1)));
    }
    return finish(m, lab, boundary_cycle(m, S), "hexagon-chain-disk");
}

// ------------------------------------------------------------------- {4,8,8}

HamiltonianCertificate construct_488_impl(const ToroidalMap& m, const GridLabeling& lab) {
    const int r = lab.rep.r, s = lab.rep.s;
    auto row = [&](int i, int mm) { return lab.vertex_of_row(i, mm); };

    if (s == 1) {
        std::vector<int> cyc;
        for (int mm = 0; mm < r; ++mm) cyc.push_back(row(0, mm));
        return finish(m, lab, cyc, "single-row");
    }

    std::set<int> S;
    for (int p = 0; 2 * p + 1 < s; ++p) {
        int a = 2 * p;
        int skip = face_left_of(m, row(a, 0), row(a, 1));
        for (int mm = 0; mm < r; ++mm) {
            int f = face_left_of(m, row(a, mm), row(a, mm + 1));
            if (f != skip) S.insert(f);
        }
    }
    for (int p = 0; 2 * p + 3 < s; ++p)
        S.insert(face_left_of(m, row(2 * p + 1, 0), row(2 * p + 1, 1)));

    std::vector<int> cyc = boundary_cycle(m, S);
    if (s % 2 == 0) return finish(m, lab, cyc, "octagon-band-pairing");

    // odd s: insert the whole last row through the two verticals of the
    // square sitting over the row-(s-2) edge (0,1)
    std::vector<int> detour;
    detour.push_back(row(s - 1, 2));
    detour.push_back(row(s - 1, 1));
    detour.push_back(row(s - 1, 0));
    for (int mm = r - 1; mm >= 3; --mm) detour.push_back(row(s - 1, mm));
    // replace edge (row(s-2,0), row(s-2,1)) by the detour
    int x = row(s - 2, 0), y = row(s - 2, 1);
    std::vector<int> out;
    const int n = static_cast<int>(cyc.size());
    for (int i = 0; i < n; ++i) {
        out.push_back(cyc[i]);
        int a = cyc[i], b = cyc[(i + 1) % n];
        if (a == x && b == y) {
            for (int w : detour) out.push_back(w);
        } else if (a == y && b == x) {
            for (auto it = detour.rbegin(); it != detour.rend(); ++it) out.push_back(*it);
        }
    }
    if (out.size() != cyc.size() + detour.size())
        throw MapError(MapErrorCode::RuleViolation, "splice edge not on the band boundary");
    return finish(m, lab, out, "octagon-band-pairing+last-row-splice");
}

// ------------------------------------------------------- {4,6,12} and {6,4,3,4}

HamiltonianCertificate construct_chain_disk(const ToroidalMap& m, const GridLabeling& lab,
                                            int period, const std::string& strategy) {
    const int r = lab.rep.r, s = lab.rep.s, B = r / period, L = s / 2;
    auto row = [&](int i, int mm) { return lab.vertex_of_row(i, mm); };
    const int big = period * 2; // 12-gon or hexagon
    std::set<int> S;
    for (int l = 0; l < L; ++l) {
        for (int j = 0; j < B; ++j) {
            int v = row(2 * l, period * j);
            int f = -1;
            for (int slot = 0; slot < m.degree(v); ++slot)
                if (m.faces()[m.face_at(v, slot)].size() == big) f = m.face_at(v, slot);
            S.insert(f);
        }
        for (int j = 0; j + 1 < B; ++j) {
            int u = row(2 * l, period * j + period - 1);
            int w = row(2 * l + 1, period * j + period - 1);
            S.insert(face_of_size_at_edge(m, u, w, 4));
        }
    }
    for (int l = 0; l + 1 < L; ++l) {
        int u = row(2 * l + 1, period == 6 ? 4 : 2);
        int w = row(2 * l + 2, period == 6 ? 2 : 1);
        S.insert(face_of_size_at_edge(m, u, w, 4));
    }
    return finish(m, lab, boundary_cycle(m, S), strategy);
}

} // namespace

HamiltonianCertificate construct_33344(const ToroidalMap& m, const GridLabeling& lab) {
    return construct_band_pairs(m, lab, "quad-band-pairing");
}
HamiltonianCertificate construct_33434(const ToroidalMap& m, const GridLabeling& lab) {
    return construct_band_pairs(m, lab, "mixed-band-pairing");
}
HamiltonianCertificate construct_3636(const ToroidalMap& m, const GridLabeling& lab) {
    return construct_3636_impl(m, lab);
}
HamiltonianCertificate construct_33336(const ToroidalMap& m, const GridLabeling& lab) {
    return construct_33336_impl(m, lab);
}
HamiltonianCertificate construct_488(const ToroidalMap& m, const GridLabeling& lab) {
    return construct_488_impl(m, lab);
}
HamiltonianCertificate construct_4612(const ToroidalMap& m, const GridLabeling& lab) {
    return construct_chain_disk(m, lab, 6, "twelvegon-chain-disk");
}
HamiltonianCertificate construct_6434(const ToroidalMap& m, const GridLabeling& lab) {
    return construct_chain_disk(m, lab, 3, "hexagon-square-chain-disk");
}

HamiltonianCertificate construct_hamiltonian(const ToroidalMap& m, const GridLabeling& lab) {
    const auto& t = m.type_tag();
    if (t == type_33344()) return construct_33344(m, lab);
    if (t == type_33434()) return construct_33434(m, lab);
    if (t == type_3636()) return construct_3636(m, lab);
    if (t == type_33336()) return construct_33336(m, lab);
    if (t == type_488()) return construct_488(m, lab);
    if (t == type_4612()) return construct_4612(m, lab);
    if (t == type_6434()) return construct_6434(m, lab);
    throw NonHamiltonianType("no construction strategy covers type " + t.str());
}

std::vector<int> disk_of_cycle(const ToroidalMap& m, const std::vector<int>& cycle) {
    std::set<std::pair<int, int>> cedges;
    const int n = static_cast<int>(cycle.size());
    for (int i = 0; i < n; ++i) {
        auto key = std::minmax(cycle[i], cycle[(i + 1) % n]);
        cedges.insert({key.first, key.second});
    }
    // flood fill faces across non-cycle edges
    const int F = static_cast<int>(m.faces().size());
    std::vector<int> comp(F, -1);
    int ncomp = 0;
    for (int f0 = 0; f0 < F; ++f0) {
        if (comp[f0] >= 0) continue;
        std::vector<int> stack = {f0};
        comp[f0] = ncomp;
        while (!stack.empty()) {
            int f = stack.back();
            stack.pop_back();
            const auto& vs = m.faces()[f].vertices;
            for (size_t i = 0; i < vs.size(); ++i) {
                int a = vs[i], b = vs[(i + 1) % vs.size()];
                auto key = std::minmax(a, b);
                if (cedges.count({key.first, key.second})) continue;
                auto [g1, g2] = m.edge_faces(a, b);
                for (int g : {g1, g2})
                    if (comp[g] < 0) {
                        comp[g] = ncomp;
                        stack.push_back(g);
                    }
            }
        }
        ++ncomp;
    }
    if (ncomp < 2) return {};
    for (int c = 0; c < ncomp; ++c) {
        std::set<int> region;
        for (int f = 0; f < F; ++f)
            if (comp[f] == c) region.insert(f);
        if (carrier_euler(m, region) != 1) continue;
        if (boundary_edges(m, region) == cedges) return std::vector<int>(region.begin(),
                                                                         region.end());
    }
    return {};
}

VerifyResult verify_certificate(const ToroidalMap& m, const GridLabeling& lab,
                                const HamiltonianCertificate& cert) {
    const auto& cyc = cert.cycle.vertices;
    if (static_cast<int>(cyc.size()) != m.n())
        return {false, "cycle has " + std::to_string(cyc.size()) + " vertices, map has " +
                           std::to_string(m.n())};
    std::set<int> uniq(cyc.begin(), cyc.end());
    if (static_cast<int>(uniq.size()) != m.n()) return {false, "cycle repeats a vertex"};
    for (size_t i = 0; i < cyc.size(); ++i) {
        int a = cyc[i], b = cyc[(i + 1) % cyc.size()];
        if (!m.adjacent(a, b))
            return {false, "consecutive pair " + std::to_string(a) + "," + std::to_string(b) +
                               " is not an edge"};
    }
    if (cert.contractible) {
        if (homology_class(m, lab, cyc) != std::make_pair(0L, 0L))
            return {false, "claimed contractible but homology class is nonzero"};
        if (cert.disk_faces.empty()) return {false, "claimed contractible without disk faces"};
        std::set<int> region(cert.disk_faces.begin(), cert.disk_faces.end());
        if (carrier_euler(m, region) != 1)
            return {false, "disk faces have Euler count " +
                               std::to_string(carrier_euler(m, region))};
        std::set<std::pair<int, int>> cedges;
        for (size_t i = 0; i < cyc.size(); ++i) {
            auto key = std::minmax(cyc[i], cyc[(i + 1) % cyc.size()]);
            cedges.insert({key.first, key.second});
        }
        if (boundary_edges(m, region) != cedges)
            return {false, "disk boundary differs from the cycle"};
    }
    return {true, ""};
}

} // namespace torusham
