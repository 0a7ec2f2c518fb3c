#include "torusham/map.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>

namespace torusham {

namespace {

std::vector<int> canonical_cycle(std::vector<int> v) {
    std::vector<int> best = v;
    const int n = static_cast<int>(v.size());
    for (int flip = 0; flip < 2; ++flip) {
        for (int s = 0; s < n; ++s) {
            std::vector<int> cand(n);
            for (int i = 0; i < n; ++i) cand[i] = v[(s + i) % n];
            if (cand < best) best = cand;
        }
        std::reverse(v.begin(), v.end());
    }
    return best;
}

} // namespace

std::vector<std::vector<Dart>> trace_faces(const std::vector<std::vector<int>>& rotation) {
    const int n = static_cast<int>(rotation.size());
    std::vector<std::vector<char>> seen(n);
    for (int v = 0; v < n; ++v) seen[v].assign(rotation[v].size(), 0);

    auto slot_of = [&](int v, int u) {
        const auto& r = rotation[v];
        for (size_t i = 0; i < r.size(); ++i)
            if (r[i] == u) return static_cast<int>(i);
        return -1;
    };

    std::vector<std::vector<Dart>> walks;
    for (int v = 0; v < n; ++v) {
        for (int s = 0; s < static_cast<int>(rotation[v].size()); ++s) {
            if (seen[v][s]) continue;
            std::vector<Dart> walk;
            int cv = v, cs = s;
            do {
                seen[cv][cs] = 1;
                walk.push_back({cv, cs});
                int w = rotation[cv][cs];
                int back = slot_of(w, cv);
                int ns = (back + 1) % static_cast<int>(rotation[w].size());
                cv = w;
                cs = ns;
            } while (!(cv == v && cs == s));
            walks.push_back(std::move(walk));
        }
    }
    return walks;
}

ToroidalMap ToroidalMap::build(int n, std::vector<std::vector<int>> rotation,
                               std::optional<FaceSequenceType> expected_type) {
    if (n <= 0 || static_cast<int>(rotation.size()) != n)
        throw MapError(MapErrorCode::InvalidParameters, "rotation size mismatch");

    for (int v = 0; v < n; ++v) {
        std::set<int> uniq;
        for (int u : rotation[v]) {
            if (u < 0 || u >= n)
                throw MapError(MapErrorCode::VertexOutOfRange,
                               "neighbor id out of range at vertex " + std::to_string(v));
            if (u == v)
                throw MapError(MapErrorCode::LoopOrMultiEdge,
                               "loop at vertex " + std::to_string(v));
            if (!uniq.insert(u).second)
                throw MapError(MapErrorCode::LoopOrMultiEdge,
                               "parallel edge at vertex " + std::to_string(v));
        }
    }
    for (int v = 0; v < n; ++v)
        for (int u : rotation[v]) {
            bool back = std::find(rotation[u].begin(), rotation[u].end(), v) != rotation[u].end();
            if (!back)
                throw MapError(MapErrorCode::NonSymmetricAdjacency,
                               "edge " + std::to_string(v) + "-" + std::to_string(u) +
                                   " is one-sided");
        }

    // connectivity
    {
        std::vector<char> vis(n, 0);
        std::queue<int> q;
        q.push(0);
        vis[0] = 1;
        int cnt = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int u : rotation[v])
                if (!vis[u]) {
                    vis[u] = 1;
                    ++cnt;
                    q.push(u);
                }
        }
        if (cnt != n)
            throw MapError(MapErrorCode::DisconnectedGraph, "graph is disconnected");
    }

    ToroidalMap m;
    m.n_ = n;
    m.rot_ = std::move(rotation);
    long deg_sum = 0;
    for (int v = 0; v < n; ++v) deg_sum += m.degree(v);
    m.edges_ = deg_sum / 2;

    m.trace_faces_();

    long f = static_cast<long>(m.faces_.size());
    if (n - m.edges_ + f != 0)
        throw MapError(MapErrorCode::NonToroidal,
                       "V-E+F = " + std::to_string(n - m.edges_ + f) + ", expected 0");

    m.validate_polyhedral_();

    FaceSequenceType found = m.verify_semi_equivelar();
    if (expected_type && found != *expected_type)
        throw MapError(MapErrorCode::NotSemiEquivelar,
                       "map has type " + found.str() + ", expected " + expected_type->str());
    m.type_ = found;
    return m;
}

void ToroidalMap::trace_faces_() {
    auto walks = trace_faces(rot_);
    face_at_.assign(n_, {});
    for (int v = 0; v < n_; ++v) face_at_[v].assign(rot_[v].size(), -1);
    faces_.clear();
    for (const auto& w : walks) {
        FacialWalk fw;
        for (const Dart& d : w) {
            fw.vertices.push_back(d.v);
            face_at_[d.v][d.slot] = static_cast<int>(faces_.size());
        }
        faces_.push_back(std::move(fw));
    }
    // facial walks of a polyhedral map never repeat a vertex
    for (size_t i = 0; i < faces_.size(); ++i) {
        const auto& vs = faces_[i].vertices;
        if (vs.size() < 3)
            throw MapError(MapErrorCode::NonPolyhedral,
                           "facial walk of size " + std::to_string(vs.size()));
        std::set<int> uniq(vs.begin(), vs.end());
        if (uniq.size() != vs.size())
            throw MapError(MapErrorCode::NonPolyhedral,
                           "facial walk " + std::to_string(i) + " repeats a vertex");
    }
}

void ToroidalMap::validate_polyhedral_() const {
    // two faces may share at most one edge (equivalently: at most two
    // vertices, and then exactly along a common edge)
    std::map<std::pair<int, int>, std::vector<int>> pair_faces;
    for (size_t f = 0; f < faces_.size(); ++f) {
        const auto& vs = faces_[f].vertices;
        for (size_t a = 0; a < vs.size(); ++a)
            for (size_t b = a + 1; b < vs.size(); ++b) {
                auto key = std::minmax(vs[a], vs[b]);
                pair_faces[{key.first, key.second}].push_back(static_cast<int>(f));
            }
    }
    for (const auto& [pr, fs] : pair_faces) {
        if (fs.size() < 2) continue;
        if (!adjacent(pr.first, pr.second))
            throw MapError(MapErrorCode::NonPolyhedral,
                           "faces meet in non-adjacent vertices " + std::to_string(pr.first) +
                               "," + std::to_string(pr.second));
        if (fs.size() > 2)
            throw MapError(MapErrorCode::NonPolyhedral,
                           "edge " + std::to_string(pr.first) + "-" + std::to_string(pr.second) +
                               " lies on more than two faces");
        // two faces sharing two adjacent vertices must share the edge itself;
        // since every edge lies on exactly two traced faces this is implied
        // by the counts above, so nothing further to check here.
    }
}

bool ToroidalMap::adjacent(int u, int v) const {
    return slot_of(u, v) >= 0;
}

int ToroidalMap::slot_of(int v, int neighbor) const {
    if (v < 0 || v >= n_)
        throw MapError(MapErrorCode::VertexOutOfRange, "vertex " + std::to_string(v));
    const auto& r = rot_[v];
    for (size_t i = 0; i < r.size(); ++i)
        if (r[i] == neighbor) return static_cast<int>(i);
    return -1;
}

std::pair<int, int> ToroidalMap::edge_faces(int u, int v) const {
    int su = slot_of(u, v);
    int sv = slot_of(v, u);
    if (su < 0 || sv < 0)
        throw MapError(MapErrorCode::InvalidParameters,
                       "not an edge: " + std::to_string(u) + "-" + std::to_string(v));
    return {face_at(u, su), face_at(v, sv)};
}

std::vector<int> ToroidalMap::face_sequence_at(int v) const {
    if (v < 0 || v >= n_)
        throw MapError(MapErrorCode::VertexOutOfRange, "vertex " + std::to_string(v));
    // face between rotation neighbors rot_[v][i] and rot_[v][i+1] is the one
    // containing dart (v, i): next-dart orbits start clockwise of the dart.
    std::vector<int> seq;
    for (int s = 0; s < degree(v); ++s) seq.push_back(faces_[face_at(v, s)].size());
    return seq;
}

FaceSequenceType ToroidalMap::verify_semi_equivelar() const {
    std::vector<int> first = canonical_cycle(face_sequence_at(0));
    for (int v = 1; v < n_; ++v) {
        std::vector<int> here = canonical_cycle(face_sequence_at(v));
        if (here != first) {
            std::ostringstream os;
            os << "vertex " << v << " has face sequence (";
            for (size_t i = 0; i < here.size(); ++i) os << (i ? "," : "") << here[i];
            os << "), vertex 0 has (";
            for (size_t i = 0; i < first.size(); ++i) os << (i ? "," : "") << first[i];
            os << ")";
            throw MapError(MapErrorCode::NotSemiEquivelar, os.str());
        }
    }
    return FaceSequenceType(first);
}

} // namespace torusham
