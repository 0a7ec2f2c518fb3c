#include <doctest.h>

#include "torusham/face_sequence.hpp"

using namespace torusham;

TEST_CASE("euler balance holds for the eight types") {
    for (const auto& t : the_eight_types()) {
        CAPTURE(t.str());
        CHECK(t.euler_balanced());
    }
}

TEST_CASE("euler balance rejects impossible sequences") {
    CHECK_FALSE(FaceSequenceType({3, 3, 3, 3, 4}).euler_balanced());
    CHECK_FALSE(FaceSequenceType({4, 4, 8}).euler_balanced());
    // the plane-angle solutions that are not realizable still balance
    CHECK(FaceSequenceType({3, 7, 42}).euler_balanced());
    CHECK(FaceSequenceType({3, 3, 4, 12}).euler_balanced());
}

TEST_CASE("canonical form identifies rotations and reflections") {
    CHECK(FaceSequenceType({3, 3, 4, 3, 4}) == FaceSequenceType({4, 3, 4, 3, 3}));
    CHECK(FaceSequenceType({3, 4, 6, 4}) == FaceSequenceType({6, 4, 3, 4}));
    CHECK(FaceSequenceType({3, 3, 3, 4, 4}) != FaceSequenceType({3, 3, 4, 3, 4}));
}

TEST_CASE("parse and print round-trip") {
    auto t = FaceSequenceType::parse("3.3.3.4.4");
    CHECK(t == type_33344());
    CHECK(FaceSequenceType::parse(t.str()) == t);
    CHECK(type_31212().str() == "3.12.12");
    CHECK_THROWS(FaceSequenceType::parse("3.4"));
}

TEST_CASE("enumeration finds exactly the eight semi-equivelar types") {
    auto found = enumerate_semi_equivelar_types();
    REQUIRE(found.size() == 8);
    CHECK(found == the_eight_types());
}

TEST_CASE("incidence counts") {
    auto inc = type_33344().incidence();
    CHECK(inc.at(3) == 3);
    CHECK(inc.at(4) == 2);
    CHECK(type_33344().degree() == 5);
    CHECK(type_488().degree() == 3);
}
