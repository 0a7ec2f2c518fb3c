#pragma once

#include "torusham/map.hpp"

#include <tuple>
#include <utility>
#include <vector>

namespace torusham {

// (r,s,k) parameters of the planar cut: base horizontal cycle of length r,
// s horizontal cycles stacked upward, top row identified with the bottom one
// shifted by k positions.
struct Representation {
    FaceSequenceType type;
    int r = 0, s = 0, k = 0;
};

enum class Sublattice { Row, Apex, PairLower, PairUpper };

struct VertexLabel {
    Sublattice tag = Sublattice::Row;
    int layer = 0; // row index i, or band index for apex/pair vertices
    int index = 0; // position m along the row, or apex/pair index j
    long lift_row = 0, lift_col = 0; // planar lift coordinates (scaled integers)
};

// Vertex coordinates of the planar cut plus the data needed to lift cycles
// to the universal cover (per-dart displacements and the two deck
// transformations of the torus).
struct GridLabeling {
    Representation rep;
    std::vector<VertexLabel> labels;
    // displacement of each dart in lift coordinates, aligned with rotation
    std::vector<std::vector<std::pair<long, long>>> dart_disp;
    // deck transformations: horizontal wrap and vertical wrap (with shift)
    std::pair<long, long> wrap_col; // (0, r*colscale)
    std::pair<long, long> wrap_row; // (rowlift period, -shift*colscale)
    // vertex id of (row i, position 0) for each of the s rows
    std::vector<int> row_start;
    // number of positions per row
    int row_len = 0;

    int vertex_of_row(int i, int m) const;
    std::pair<long, long> disp(int v, int slot) const { return dart_disp[v][slot]; }
};

// Build the semi-equivelar map of the given type from its
// (r,s,k)-representation. Throws MapError(InvalidParameters) for parameters
// violating the type's period and parity constraints, and propagates
// validation failures when the identification degenerates.
std::pair<ToroidalMap, GridLabeling> generate(const FaceSequenceType& type, int r, int s, int k);

// Closed-form vertex count of the planar construction.
long vertex_count(const FaceSequenceType& type, long r, long s);

// All (r,s,k) with n <= max_n for which generate succeeds, ascending.
std::vector<std::tuple<int, int, int>> admissible_parameters(const FaceSequenceType& type,
                                                             int max_n);

} // namespace torusham
