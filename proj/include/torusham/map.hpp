#pragma once

#include "torusham/face_sequence.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace torusham {

enum class MapErrorCode {
    NonSymmetricAdjacency,
    LoopOrMultiEdge,
    DisconnectedGraph,
    NonToroidal,
    NonPolyhedral,
    NotSemiEquivelar,
    VertexOutOfRange,
    InvalidParameters,
    RuleViolation,
    NonSimple,
};

struct MapError : std::runtime_error {
    MapErrorCode code;
    MapError(MapErrorCode c, const std::string& what) : std::runtime_error(what), code(c) {}
};

// A directed half-edge: slot-th outgoing edge of vertex v in rotation order.
struct Dart {
    int v = -1;
    int slot = -1;
    bool operator==(const Dart& o) const { return v == o.v && slot == o.slot; }
};

struct FacialWalk {
    std::vector<int> vertices; // cyclic, one per dart of the walk
    int size() const { return static_cast<int>(vertices.size()); }
};

// Combinatorial map on the torus: vertices 0..n-1, counter-clockwise
// rotation at each vertex, faces derived by the next-dart rule.
// Immutable once built; the constructor validates everything.
class ToroidalMap {
  public:
    // Validates simplicity, symmetry, connectivity, Euler characteristic 0,
    // polyhedrality, and (when expected_type is set) the face sequence at
    // every vertex.
    static ToroidalMap build(int n, std::vector<std::vector<int>> rotation,
                             std::optional<FaceSequenceType> expected_type = std::nullopt);

    int n() const { return n_; }
    long edge_count() const { return edges_; }
    int degree(int v) const { return static_cast<int>(rot_[v].size()); }
    const std::vector<int>& neighbors(int v) const { return rot_[v]; }
    const std::vector<std::vector<int>>& rotation() const { return rot_; }
    bool adjacent(int u, int v) const;
    int slot_of(int v, int neighbor) const; // -1 if absent

    const std::vector<FacialWalk>& faces() const { return faces_; }
    // face on the orbit of dart (v, slot) under the next-dart rule
    int face_at(int v, int slot) const { return face_at_[v][slot]; }
    // the two faces incident to edge {u,v}
    std::pair<int, int> edge_faces(int u, int v) const;

    const FaceSequenceType& type_tag() const { return type_; }

    // cyclic list of face sizes around v in rotation order
    std::vector<int> face_sequence_at(int v) const;

    // common type if all vertices agree up to rotation/reflection; throws
    // NotSemiEquivelar with the first disagreeing vertex otherwise
    FaceSequenceType verify_semi_equivelar() const;

  private:
    ToroidalMap() = default;
    void trace_faces_();
    void validate_polyhedral_() const;

    int n_ = 0;
    long edges_ = 0;
    std::vector<std::vector<int>> rot_;
    std::vector<FacialWalk> faces_;
    std::vector<std::vector<int>> face_at_;
    FaceSequenceType type_;
};

// Standalone face tracing of a rotation system (no torus validation);
// used by build() and directly testable on small systems.
std::vector<std::vector<Dart>> trace_faces(const std::vector<std::vector<int>>& rotation);

} // namespace torusham
