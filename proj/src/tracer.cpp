#include "torusham/tracer.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace torusham {

namespace {

using Arc = std::vector<int>;
using Split = std::pair<Arc, Arc>;

// faces met rotating counter-clockwise from the edge toward `from` to the
// edge toward `to`; face between rotation slots (s, s+1) is face_at(v, s+1)
Arc ccw_arc(const ToroidalMap& m, int v, int from, int to) {
    int a = m.slot_of(v, from), b = m.slot_of(v, to);
    int d = m.degree(v);
    Arc sizes;
    for (int s = a; s % d != b % d; ++s)
        sizes.push_back(m.faces()[m.face_at(v, (s + 1) % d)].size());
    return sizes;
}

Split split_at(const ToroidalMap& m, int v, int prev, int next) {
    return {ccw_arc(m, v, prev, next), ccw_arc(m, v, next, prev)};
}

const std::vector<Split>& splits_of(CycleKind k) {
    static const std::map<CycleKind, std::vector<Split>> table = {
        {CycleKind::A1, {{{4, 4}, {3, 3, 3}}, {{3, 3, 3}, {4, 4}}}},
        {CycleKind::A2, {{{4, 3}, {3, 3, 4}}, {{3, 3, 4}, {4, 3}}}},
        {CycleKind::A3, {{{4, 3, 3}, {3, 4}}, {{3, 4}, {4, 3, 3}}}},
        {CycleKind::B1,
         {{{4, 3, 3}, {4, 3}}, {{4, 3}, {4, 3, 3}}, {{3, 4}, {3, 3, 4}}, {{3, 3, 4}, {3, 4}}}},
        {CycleKind::X1, {{{3, 6}, {3, 6}}, {{6, 3}, {6, 3}}}},
    };
    return table.at(k);
}

bool is_split_kind(CycleKind k) {
    switch (k) {
        case CycleKind::A1:
        case CycleKind::A2:
        case CycleKind::A3:
        case CycleKind::B1:
        case CycleKind::X1: return true;
        default: return false;
    }
}

// allowed intersection path lengths per face size, for the run kinds
const std::map<int, std::set<int>>& runs_of(CycleKind k) {
    static const std::map<CycleKind, std::map<int, std::set<int>>> table = {
        {CycleKind::Y1, {{3, {1}}, {6, {2}}}},
        {CycleKind::Z1, {{4, {1}}, {8, {3}}}},
        {CycleKind::G1, {{3, {1}}, {12, {3}}}},
        // the five-edge 12-gon runs of H1 force a single transversal edge on
        // the hexagon in the middle of each crossing, so single hexagon
        // edges are admitted alongside the three-edge runs
        {CycleKind::H1, {{4, {1}}, {6, {1, 3}}, {12, {5}}}},
        {CycleKind::W1, {{3, {1}}, {4, {1}}, {6, {2}}}},
    };
    return table.at(k);
}

struct RunState {
    // per touched face: number of cycle edges so far and status
    enum Status { Active, Pending, Closed };
    std::map<int, std::pair<int, Status>> faces;
    std::set<int> seed_faces; // runs possibly cut in two by the seed edge

    static int max_len(const std::map<int, std::set<int>>& allowed, int size) {
        auto it = allowed.find(size);
        return it == allowed.end() ? 0 : *it->second.rbegin();
    }

    bool feasible(const ToroidalMap& m, const std::map<int, std::set<int>>& allowed, int cur,
                  int cand) const {
        auto [f1, f2] = m.edge_faces(cur, cand);
        for (int f : {f1, f2}) {
            auto it = faces.find(f);
            int count = it == faces.end() ? 0 : it->second.first;
            if (it != faces.end() && it->second.second == Closed) return false;
            if (it != faces.end() && it->second.second == Pending && !seed_faces.count(f))
                return false;
            if (count + 1 > max_len(allowed, m.faces()[f].size())) return false;
        }
        for (const auto& [f, st] : faces) {
            if (st.second != Active || f == f1 || f == f2) continue;
            const auto& ok = allowed.at(m.faces()[f].size());
            if (!ok.count(st.first) && !seed_faces.count(f)) return false;
        }
        return true;
    }

    void advance(const ToroidalMap& m, int cur, int cand) {
        auto [f1, f2] = m.edge_faces(cur, cand);
        for (auto& [f, st] : faces) {
            if (f == f1 || f == f2) continue;
            if (st.second == Active) st.second = seed_faces.count(f) ? Pending : Closed;
        }
        for (int f : {f1, f2}) {
            auto& st = faces[f];
            if (st.first == 0) st = {1, Active};
            else {
                ++st.first;
                st.second = Active;
            }
        }
    }
};

std::vector<int> candidate_order(const ToroidalMap& m, const GridLabeling& lab, int cur,
                                 int prev) {
    // deterministic preference: stay in the row, then small column moves
    std::vector<int> cands;
    for (int w : m.neighbors(cur))
        if (w != prev) cands.push_back(w);
    std::stable_sort(cands.begin(), cands.end(), [&](int a, int b) {
        auto da = lab.disp(cur, m.slot_of(cur, a));
        auto db = lab.disp(cur, m.slot_of(cur, b));
        auto ka = std::make_tuple(std::labs(da.first), std::labs(da.second), a);
        auto kb = std::make_tuple(std::labs(db.first), std::labs(db.second), b);
        return ka < kb;
    });
    return cands;
}

int split_successor(const ToroidalMap& m, CycleKind kind, int prev, int cur) {
    const auto& pats = splits_of(kind);
    int found = -1;
    for (int w : m.neighbors(cur)) {
        if (w == prev) continue;
        Split sp = split_at(m, cur, prev, w);
        if (std::find(pats.begin(), pats.end(), sp) == pats.end()) continue;
        if (found >= 0)
            throw MapError(MapErrorCode::RuleViolation,
                           "ambiguous " + kind_name(kind) + " continuation at vertex " +
                               std::to_string(cur));
        found = w;
    }
    if (found < 0)
        throw MapError(MapErrorCode::RuleViolation,
                       "no " + kind_name(kind) + " continuation at vertex " + std::to_string(cur));
    return found;
}

// check that the edges of a closed cycle meet each face in a path of an
// allowed length
void validate_runs(const ToroidalMap& m, CycleKind kind, const std::vector<int>& cyc) {
    const auto& allowed = runs_of(kind);
    std::map<int, std::vector<std::pair<int, int>>> by_face;
    const int n = static_cast<int>(cyc.size());
    for (int i = 0; i < n; ++i) {
        int u = cyc[i], v = cyc[(i + 1) % n];
        auto [f1, f2] = m.edge_faces(u, v);
        by_face[f1].push_back({u, v});
        by_face[f2].push_back({u, v});
    }
    for (const auto& [f, edges] : by_face) {
        int size = m.faces()[f].size();
        auto it = allowed.find(size);
        if (it == allowed.end() || !it->second.count(static_cast<int>(edges.size())))
            throw MapError(MapErrorCode::RuleViolation,
                           kind_name(kind) + " cycle meets a " + std::to_string(size) +
                               "-gon in " + std::to_string(edges.size()) + " edges");
        std::map<int, int> deg;
        for (auto [a, b] : edges) {
            ++deg[a];
            ++deg[b];
        }
        int endpoints = 0;
        for (auto [v, d] : deg) {
            if (d > 2) throw MapError(MapErrorCode::RuleViolation, "branching face intersection");
            if (d == 1) ++endpoints;
        }
        if (endpoints != 2)
            throw MapError(MapErrorCode::RuleViolation,
                           kind_name(kind) + " cycle meets face " + std::to_string(f) +
                               " in a disconnected set");
    }
}

} // namespace

std::string kind_name(CycleKind k) {
    switch (k) {
        case CycleKind::A1: return "A1";
        case CycleKind::A2: return "A2";
        case CycleKind::A3: return "A3";
        case CycleKind::B1: return "B1";
        case CycleKind::X1: return "X1";
        case CycleKind::Y1: return "Y1";
        case CycleKind::Z1: return "Z1";
        case CycleKind::G1: return "G1";
        case CycleKind::H1: return "H1";
        case CycleKind::W1: return "W1";
        case CycleKind::Constructed: return "constructed";
    }
    return "?";
}

CycleKind kind_from_name(const std::string& name) {
    for (CycleKind k : {CycleKind::A1, CycleKind::A2, CycleKind::A3, CycleKind::B1, CycleKind::X1,
                        CycleKind::Y1, CycleKind::Z1, CycleKind::G1, CycleKind::H1, CycleKind::W1})
        if (kind_name(k) == name) return k;
    throw MapError(MapErrorCode::InvalidParameters, "unknown cycle kind " + name);
}

CycleKind horizontal_kind(const FaceSequenceType& type) {
    if (type == type_33344()) return CycleKind::A1;
    if (type == type_33434()) return CycleKind::B1;
    if (type == type_3636()) return CycleKind::X1;
    if (type == type_33336()) return CycleKind::Y1;
    if (type == type_488()) return CycleKind::Z1;
    if (type == type_31212()) return CycleKind::G1;
    if (type == type_4612()) return CycleKind::H1;
    if (type == type_6434()) return CycleKind::W1;
    throw MapError(MapErrorCode::InvalidParameters, "no kind for type " + type.str());
}

bool kind_compatible(CycleKind k, const FaceSequenceType& type) {
    switch (k) {
        case CycleKind::A1:
        case CycleKind::A2:
        case CycleKind::A3: return type == type_33344();
        case CycleKind::B1: return type == type_33434();
        case CycleKind::X1: return type == type_3636();
        case CycleKind::Y1: return type == type_33336();
        case CycleKind::Z1: return type == type_488();
        case CycleKind::G1: return type == type_31212();
        case CycleKind::H1: return type == type_4612();
        case CycleKind::W1: return type == type_6434();
        case CycleKind::Constructed: return true;
    }
    return false;
}

int successor(const ToroidalMap& map, const GridLabeling& lab, CycleKind kind, int prev,
              int cur) {
    if (!map.adjacent(prev, cur))
        throw MapError(MapErrorCode::InvalidParameters, "successor: prev-cur is not an edge");
    if (!kind_compatible(kind, map.type_tag()))
        throw MapError(MapErrorCode::InvalidParameters,
                       kind_name(kind) + " is not defined on type " + map.type_tag().str());
    if (is_split_kind(kind)) return split_successor(map, kind, prev, cur);
    const auto& allowed = runs_of(kind);
    RunState st;
    auto [f1, f2] = map.edge_faces(prev, cur);
    st.faces[f1] = {1, RunState::Active};
    st.faces[f2] = {1, RunState::Active};
    st.seed_faces = {f1, f2};
    for (int w : candidate_order(map, lab, cur, prev))
        if (st.feasible(map, allowed, cur, w)) return w;
    throw MapError(MapErrorCode::RuleViolation,
                   "no " + kind_name(kind) + " continuation at vertex " + std::to_string(cur));
}

TracedCycle trace_cycle(const ToroidalMap& map, const GridLabeling& lab, CycleKind kind, int u,
                        int v) {
    if (!map.adjacent(u, v))
        throw MapError(MapErrorCode::InvalidParameters, "trace_cycle: u-v is not an edge");
    if (!kind_compatible(kind, map.type_tag()))
        throw MapError(MapErrorCode::InvalidParameters,
                       kind_name(kind) + " is not defined on type " + map.type_tag().str());

    std::vector<int> cyc = {u, v};
    const long guard = 4 * map.edge_count() + 8;
    bool closed = false;

    if (is_split_kind(kind)) {
        int prev = u, cur = v;
        for (long steps = 0; steps < guard && !closed; ++steps) {
            int nxt = split_successor(map, kind, prev, cur);
            if (nxt == u) {
                // closing corner must carry the pattern as well
                Split sp = split_at(map, u, cur, v);
                const auto& pats = splits_of(kind);
                if (std::find(pats.begin(), pats.end(), sp) == pats.end())
                    throw MapError(MapErrorCode::RuleViolation,
                                   kind_name(kind) + " path does not close onto its seed");
                closed = true;
                break;
            }
            cyc.push_back(nxt);
            prev = cur;
            cur = nxt;
        }
    } else {
        const auto& allowed = runs_of(kind);
        RunState st;
        auto [f1, f2] = map.edge_faces(u, v);
        st.faces[f1] = {1, RunState::Active};
        st.faces[f2] = {1, RunState::Active};
        st.seed_faces = {f1, f2};
        int prev = u, cur = v;
        for (long steps = 0; steps < guard && !closed; ++steps) {
            int nxt = -1;
            for (int w : candidate_order(map, lab, cur, prev))
                if (st.feasible(map, allowed, cur, w)) {
                    nxt = w;
                    break;
                }
            if (nxt < 0)
                throw MapError(MapErrorCode::RuleViolation,
                               "no " + kind_name(kind) + " continuation at vertex " +
                                   std::to_string(cur));
            if (nxt == u) {
                closed = true; // run consistency checked on the closed cycle
                break;
            }
            st.advance(map, cur, nxt);
            cyc.push_back(nxt);
            prev = cur;
            cur = nxt;
        }
    }
    if (!closed)
        throw MapError(MapErrorCode::RuleViolation,
                       kind_name(kind) + " trace did not close onto its seed edge");

    std::set<int> uniq(cyc.begin(), cyc.end());
    if (uniq.size() != cyc.size())
        throw MapError(MapErrorCode::NonSimple,
                       "maximal " + kind_name(kind) + " path revisits a vertex");
    if (!is_split_kind(kind)) validate_runs(map, kind, cyc);

    TracedCycle out;
    out.vertices = cyc;
    out.kind = kind;
    out.homology = homology_class(map, lab, cyc);
    return out;
}

Cylinder build_cylinder(const ToroidalMap& map, const GridLabeling& lab, const TracedCycle& core) {
    std::set<int> star;
    for (int v : core.vertices)
        for (int s = 0; s < map.degree(v); ++s) star.insert(map.face_at(v, s));

    // boundary edges of the carrier lie on exactly one face of the star
    std::map<std::pair<int, int>, int> count;
    for (int f : star) {
        const auto& vs = map.faces()[f].vertices;
        for (size_t i = 0; i < vs.size(); ++i) {
            auto key = std::minmax(vs[i], vs[(i + 1) % vs.size()]);
            ++count[{key.first, key.second}];
        }
    }
    std::map<int, std::vector<int>> badj;
    for (const auto& [e, c] : count)
        if (c == 1) {
            badj[e.first].push_back(e.second);
            badj[e.second].push_back(e.first);
        }
    if (badj.empty())
        throw MapError(MapErrorCode::InvalidParameters,
                       "closed star of the cycle covers the whole torus");

    Cylinder cyl;
    cyl.core = core;
    cyl.faces.assign(star.begin(), star.end());
    std::set<int> seen;
    for (const auto& [v0, nb] : badj) {
        if (seen.count(v0)) continue;
        if (nb.size() != 2)
            throw MapError(MapErrorCode::RuleViolation, "carrier boundary is not a cycle union");
        std::vector<int> walk = {v0};
        seen.insert(v0);
        int prev = -1, cur = v0;
        while (true) {
            int nxt = -1;
            for (int w : badj.at(cur))
                if (w != prev) nxt = w;
            if (nxt == walk.front()) break;
            walk.push_back(nxt);
            seen.insert(nxt);
            prev = cur;
            cur = nxt;
        }
        TracedCycle b;
        b.vertices = walk;
        b.kind = core.kind;
        b.homology = homology_class(map, lab, walk);
        cyl.boundary.push_back(std::move(b));
    }
    if (cyl.boundary.size() == 1) cyl.boundary.push_back(cyl.boundary.front());
    if (cyl.boundary.size() != 2)
        throw MapError(MapErrorCode::RuleViolation, "closed star has more than two boundaries");
    return cyl;
}

std::vector<TracedCycle> homologous_family(const ToroidalMap& map, const GridLabeling& lab) {
    CycleKind kind = horizontal_kind(map.type_tag());
    std::vector<TracedCycle> fam;
    for (size_t i = 0; i < lab.row_start.size(); ++i) {
        int u = lab.row_start[i];
        int v = lab.vertex_of_row(static_cast<int>(i), 1);
        fam.push_back(trace_cycle(map, lab, kind, u, v));
    }
    return fam;
}

std::pair<long, long> homology_class(const ToroidalMap& map, const GridLabeling& lab,
                                     const std::vector<int>& cycle) {
    long R = 0, C = 0;
    const int n = static_cast<int>(cycle.size());
    for (int i = 0; i < n; ++i) {
        int u = cycle[i], v = cycle[(i + 1) % n];
        int s = map.slot_of(u, v);
        if (s < 0) throw MapError(MapErrorCode::InvalidParameters, "homology_class: not a cycle");
        auto d = lab.disp(u, s);
        R += d.first;
        C += d.second;
    }
    long wr = lab.wrap_row.first;  // row-lift period
    long wc = lab.wrap_col.second; // column-lift period
    long shift = lab.wrap_row.second;
    if (R % wr != 0)
        throw MapError(MapErrorCode::RuleViolation, "cycle does not close in the lift");
    long p = R / wr;
    long cc = C - p * shift;
    if (cc % wc != 0)
        throw MapError(MapErrorCode::RuleViolation, "cycle does not close in the lift");
    return {cc / wc, p};
}

} // namespace torusham
