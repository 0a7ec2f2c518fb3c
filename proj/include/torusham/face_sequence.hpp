#pragma once

#include <map>
#include <string>
#include <vector>

namespace torusham {

// Cyclic sequence of face sizes around a vertex, e.g. (3,3,3,4,4).
// Stored in canonical form: lexicographically smallest rotation over both
// orientations, so two sequences compare equal iff they agree up to
// rotation and reflection.
class FaceSequenceType {
  public:
    FaceSequenceType() = default;
    explicit FaceSequenceType(std::vector<int> entries);

    const std::vector<int>& entries() const { return entries_; }
    int degree() const { return static_cast<int>(entries_.size()); }

    // face size t -> number of t-gons incident at a vertex
    std::map<int, int> incidence() const;

    // d/2 - 1 == sum over entries of 1/t, exactly in rationals
    bool euler_balanced() const;

    // dotted form "3.3.3.4.4"
    std::string str() const;
    static FaceSequenceType parse(const std::string& dotted);

    bool operator==(const FaceSequenceType& o) const { return entries_ == o.entries_; }
    bool operator!=(const FaceSequenceType& o) const { return !(*this == o); }
    bool operator<(const FaceSequenceType& o) const { return entries_ < o.entries_; }

  private:
    std::vector<int> entries_;
};

// The eight semi-equivelar types that exist on the torus.
const std::vector<FaceSequenceType>& the_eight_types();

// Exhaustive search over cyclic face sequences with sizes >= 3 and degree
// 3..6 satisfying the Euler balance, filtered by the local realizability
// condition around odd faces and by having at least two distinct sizes.
// Returns the surviving types sorted.
std::vector<FaceSequenceType> enumerate_semi_equivelar_types();

FaceSequenceType type_33344();
FaceSequenceType type_33434();
FaceSequenceType type_3636();
FaceSequenceType type_33336();
FaceSequenceType type_488();
FaceSequenceType type_31212();
FaceSequenceType type_4612();
FaceSequenceType type_6434();

} // namespace torusham
