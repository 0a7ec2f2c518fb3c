#pragma once

#include "torusham/generators.hpp"

#include <string>
#include <vector>

namespace torusham {

// The paper's locally defined path kinds. A1..A3 live on {3^3,4^2}, B1 on
// {3^2,4,3,4}, X1 on {6,3,6,3}, Y1 on {3^4,6}, Z1 on {4,8,8}, G1 on
// {3,12,12}, H1 on {4,6,12}, W1 on {6,4,3,4}.
enum class CycleKind { A1, A2, A3, B1, X1, Y1, Z1, G1, H1, W1, Constructed };

std::string kind_name(CycleKind k);
CycleKind kind_from_name(const std::string& name);

// the kind traced by the horizontal rows of the generator's labeling
CycleKind horizontal_kind(const FaceSequenceType& type);
bool kind_compatible(CycleKind k, const FaceSequenceType& type);

struct TracedCycle {
    std::vector<int> vertices; // simple closed sequence
    CycleKind kind = CycleKind::Constructed;
    std::pair<long, long> homology{0, 0};
    int length() const { return static_cast<int>(vertices.size()); }
};

struct Cylinder {
    TracedCycle core;
    std::vector<TracedCycle> boundary; // one or two cycles
    std::vector<int> faces;            // closed star of the core's vertices
};

// Next vertex after prev->cur on a kind-path. For the locally determined
// kinds (A1,A2,A3,B1,X1) this is the unique pattern-preserving neighbor.
// The run-counting kinds (Y1,Z1,G1,H1,W1) need the run state, which this
// entry point seeds at the given edge; remaining ties resolve toward the
// smallest lift displacement, rows first.
int successor(const ToroidalMap& map, const GridLabeling& lab, CycleKind kind, int prev, int cur);

// Trace the maximal kind-path through the directed edge u->v; the theorems
// guarantee it closes into a simple cycle. RuleViolation or NonSimple signal
// a generator/tracer mismatch, never user error.
TracedCycle trace_cycle(const ToroidalMap& map, const GridLabeling& lab, CycleKind kind, int u,
                        int v);

Cylinder build_cylinder(const ToroidalMap& map, const GridLabeling& lab, const TracedCycle& core);

// All horizontal cycles of the labeling's primary kind, in cylinder order.
std::vector<TracedCycle> homologous_family(const ToroidalMap& map, const GridLabeling& lab);

// Winding numbers of a closed simple cycle in the basis of the two cuts:
// the base row maps to (1,0), a face boundary to (0,0).
std::pair<long, long> homology_class(const ToroidalMap& map, const GridLabeling& lab,
                                     const std::vector<int>& cycle);

} // namespace torusham
