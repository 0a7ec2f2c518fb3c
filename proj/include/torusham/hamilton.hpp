#pragma once

#include "torusham/tracer.hpp"

#include <string>
#include <vector>

namespace torusham {

struct HamiltonianCertificate {
    TracedCycle cycle; // kind = Constructed, visits every vertex once
    bool contractible = false;
    std::string strategy;
    std::vector<int> disk_faces; // faces of the disk the cycle bounds, when contractible
};

struct VerifyResult {
    bool ok = false;
    std::string detail; // first violated condition
    explicit operator bool() const { return ok; }
};

// Per-type constructions. Preconditions: the map/labeling pair comes from
// generate() with the matching type.
HamiltonianCertificate construct_33344(const ToroidalMap&, const GridLabeling&);
HamiltonianCertificate construct_33434(const ToroidalMap&, const GridLabeling&);
HamiltonianCertificate construct_3636(const ToroidalMap&, const GridLabeling&);
HamiltonianCertificate construct_33336(const ToroidalMap&, const GridLabeling&);
HamiltonianCertificate construct_488(const ToroidalMap&, const GridLabeling&);
HamiltonianCertificate construct_4612(const ToroidalMap&, const GridLabeling&);
HamiltonianCertificate construct_6434(const ToroidalMap&, const GridLabeling&);

// Dispatch on the map's type. Refuses {3,12,12} with NonHamiltonianType:
// the construction family does not cover it.
HamiltonianCertificate construct_hamiltonian(const ToroidalMap&, const GridLabeling&);

struct NonHamiltonianType : MapError {
    explicit NonHamiltonianType(const std::string& what)
        : MapError(MapErrorCode::InvalidParameters, what) {}
};

// True iff the cycle is Hamiltonian and, when contractible is claimed, the
// disk faces tile a disk (Euler count 1) whose boundary is the cycle and the
// homology class vanishes.
VerifyResult verify_certificate(const ToroidalMap&, const GridLabeling&,
                                const HamiltonianCertificate&);

// The face regions on both sides of a simple cycle; used to certify
// contractibility structurally. Returns the face set of a disk bounded by
// the cycle, or empty when the cycle is non-separating or bounds no disk.
std::vector<int> disk_of_cycle(const ToroidalMap&, const std::vector<int>& cycle);

} // namespace torusham
