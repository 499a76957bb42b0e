#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "arrmorse/faces.hpp"
#include "arrmorse/fixtures.hpp"
#include "arrmorse/flag.hpp"
#include "oracles.hpp"

using namespace arrmorse;

namespace {
Vector pt(long x, long y) { return {Scalar(x), Scalar(y)}; }
}  // namespace

TEST_CASE("two crossing lines have 9 faces") {
    FacePoset poset(fixtures::e1());
    CHECK(poset.size() == 9);
    CHECK(poset.chambers().size() == 4);
    CHECK(poset.of_codim(1).size() == 4);
    CHECK(poset.vertices().size() == 1);
}

TEST_CASE("e2 face counts match the brute-force feasibility oracle") {
    Arrangement arr = fixtures::e2();
    auto brute = oracle::all_faces_bruteforce(arr);
    CHECK(brute.size() == 19);
    FacePoset poset(arr);
    REQUIRE(poset.size() == (int)brute.size());
    std::set<std::string> expect;
    for (auto& s : brute) {
        Signs sv(s.begin(), s.end());
        expect.insert(signs_str(sv));
    }
    for (int f = 0; f < poset.size(); ++f) CHECK(expect.count(signs_str(poset.face(f).signs)));
    CHECK(poset.chambers().size() == 7);
    CHECK(poset.of_codim(1).size() == 9);
    CHECK(poset.vertices().size() == 3);
}

TEST_CASE("braid arrangement has 4! chambers") {
    Arrangement arr = fixtures::e3();
    CHECK(arr.dim == 3);
    CHECK(arr.is_essential());
    FacePoset poset(arr);
    long factorial = 1;
    for (int i = 2; i <= 4; ++i) factorial *= i;
    CHECK((long)poset.chambers().size() == factorial);
    CHECK(poset.size() == 75);  // ordered set partitions of a 4-set
}

TEST_CASE("duplicate hyperplanes are rejected") {
    CHECK_THROWS_AS(Arrangement(2, {make_hyperplane({1, 0}, 0), make_hyperplane({-2, 0}, 0)}),
                    InputError);
    CHECK_THROWS_AS(Arrangement(2, {make_hyperplane({1, 1}, 1), make_hyperplane({2, 2}, 2)}),
                    InputError);
}

TEST_CASE("witness points lie in their faces") {
    for (auto arr : {fixtures::e2(), fixtures::grid(), fixtures::simplex3()}) {
        FacePoset poset(arr);
        for (int f = 0; f < poset.size(); ++f) {
            const Face& face = poset.face(f);
            for (int i = 0; i < arr.size(); ++i)
                CHECK(arr.hyperplanes[i].side(face.witness) == face.signs[i]);
        }
    }
}

TEST_CASE("poset order is reverse closure inclusion, ranked by codim") {
    FacePoset poset(fixtures::e2());
    for (int f = 0; f < poset.size(); ++f) {
        for (int g : poset.facets(f)) {
            CHECK(poset.leq(f, g));
            CHECK(poset.face(g).codim == poset.face(f).codim + 1);
        }
    }
    // chambers have all-nonzero sign vectors
    for (int c : poset.chambers())
        for (int8_t s : poset.face(c).signs) CHECK(s != 0);
}

TEST_CASE("opposite_face on e1 and e2") {
    FacePoset p1(fixtures::e1());
    int edge_left = p1.find({-1, 0});
    int vertex = p1.find({0, 0});
    int edge_right = p1.find({1, 0});
    REQUIRE(edge_left >= 0);
    REQUIRE(vertex >= 0);
    CHECK(p1.opposite(edge_left, vertex) == edge_right);
    CHECK(p1.opposite(edge_left, edge_left) == edge_left);

    FacePoset p2(fixtures::e2());
    int ch = p2.find({-1, -1, -1});
    int v00 = p2.find({0, 0, -1});
    int expect = p2.find({1, 1, -1});
    CHECK(p2.opposite(ch, v00) == expect);
    // verify by exact sample points: (-1,-1) reflects across (0,0) into x,y > 0
    CHECK(p2.locate(pt(-1, -1)) == ch);
    CHECK(p2.locate(pt(1, 1)) != ch);
    int far = p2.find({1, 0, 1});
    CHECK_THROWS_AS(p2.opposite(far, v00), NotIncidentError);
}

TEST_CASE("opposite_face is an involution fixing faces above G") {
    FacePoset poset(fixtures::e2());
    for (int g = 0; g < poset.size(); ++g)
        for (int f = 0; f < poset.size(); ++f) {
            if (!poset.leq(f, g)) continue;
            int o = poset.opposite(f, g);
            CHECK(poset.opposite(o, g) == f);
            if (poset.leq(g, f)) CHECK(o == f);
        }
}

TEST_CASE("face sets are independent of hyperplane order") {
    Arrangement arr = fixtures::e2();
    std::vector<int> perm = {2, 0, 1};
    std::vector<Hyperplane> hs;
    for (int i : perm) hs.push_back(arr.hyperplanes[i]);
    Arrangement shuffled(2, hs);
    FacePoset a(arr), b(shuffled);
    REQUIRE(a.size() == b.size());
    std::set<std::string> sa, sb;
    for (int f = 0; f < a.size(); ++f) sa.insert(signs_str(a.face(f).signs));
    for (int f = 0; f < b.size(); ++f) {
        Signs back(3);
        for (int i = 0; i < 3; ++i) back[perm[i]] = b.face(f).signs[i];
        sb.insert(signs_str(back));
    }
    CHECK(sa == sb);
}

TEST_CASE("euler relation on bounded faces and Zaslavsky counts") {
    std::vector<Arrangement> fixtures_list = {fixtures::e1(), fixtures::e2(), fixtures::grid(),
                                              fixtures::e3(), fixtures::e4(),
                                              fixtures::simplex3()};
    for (uint64_t s = 1; s <= 4; ++s)
        fixtures_list.push_back(fixtures::random_arrangement(s, 2, 4));
    for (uint64_t s = 5; s <= 6; ++s)
        fixtures_list.push_back(fixtures::random_arrangement(s, 3, 4));
    for (const auto& arr : fixtures_list) {
        FacePoset poset(arr);
        IntersectionLattice lat(arr);
        long euler = 0;
        for (int f = 0; f < poset.size(); ++f) {
            if (!poset.is_bounded(f)) continue;
            int dim = arr.dim - poset.face(f).codim;
            euler += dim % 2 == 0 ? 1 : -1;
        }
        CHECK(euler == 1);
        CHECK((long)poset.chambers().size() == lat.chamber_count());
    }
}

TEST_CASE("essentialize keeps the combinatorics") {
    std::vector<Hyperplane> hs = {make_hyperplane({1, -1, 0}, 0), make_hyperplane({0, 1, -1}, 1)};
    Arrangement arr(3, hs);
    CHECK_FALSE(arr.is_essential());
    Arrangement ess = essentialize(arr);
    CHECK(ess.is_essential());
    CHECK(ess.dim == 2);
    CHECK(ess.size() == 2);
    FacePoset poset(ess);
    CHECK(poset.chambers().size() == 4);
}

TEST_CASE("restriction of e2 to V_1 gives three points with the embedding") {
    Arrangement arr = fixtures::e2();
    IntersectionLattice lat(arr);
    FacePoset amb(arr);
    auto subs = fixtures::f2a();
    RestrictOptions opts;
    opts.strict = true;
    Restriction r = restrict_arrangement(arr, lat, &amb, subs[1], opts);
    CHECK(r.section.dim == 1);
    CHECK(r.section.size() == 3);
    REQUIRE(r.faces.has_value());
    CHECK(r.faces->vertices().size() == 3);
    // embedding: injective and order preserving
    std::set<int> images(r.to_ambient.begin(), r.to_ambient.end());
    CHECK(images.size() == (size_t)r.faces->size());
    for (int f = 0; f < r.faces->size(); ++f)
        for (int g = 0; g < r.faces->size(); ++g)
            if (r.faces->leq(f, g)) CHECK(amb.leq(r.to_ambient[f], r.to_ambient[g]));
    // the three crossed faces of codim 1 are edges of e2
    for (int v : r.faces->vertices())
        CHECK(amb.face(r.to_ambient[v]).codim == 1);
}

TEST_CASE("restriction to the whole space is the identity") {
    Arrangement arr = fixtures::e2();
    IntersectionLattice lat(arr);
    FacePoset amb(arr);
    AffineSubspace whole;
    whole.origin = pt(0, 0);
    whole.basis = {pt(1, 0), pt(0, 1)};
    Restriction r = restrict_arrangement(arr, lat, &amb, whole, {});
    CHECK(r.section.size() == arr.size());
    for (int f = 0; f < r.faces->size(); ++f) CHECK(r.to_ambient[f] == f);
}

TEST_CASE("generic plane section of the braid arrangement") {
    Arrangement arr = fixtures::e3();
    IntersectionLattice lat(arr);
    int rank2 = 0;
    for (int i = 0; i < lat.size(); ++i)
        if (arr.dim - lat.flat(i).dim == 2) ++rank2;
    CHECK(rank2 == 7);  // braid lattice: 4 triple + 3 double points
    Arrangement sec = fixtures::generic_section_2d(arr, 3);
    CHECK(sec.size() == 6);
    IntersectionLattice slat(sec);
    int verts = 0;
    for (int i = 0; i < slat.size(); ++i)
        if (slat.flat(i).dim == 0) ++verts;
    CHECK(verts == 7);
}

TEST_CASE("general position violations are reported") {
    Arrangement arr = fixtures::e2();
    IntersectionLattice lat(arr);
    FacePoset amb(arr);
    // a line through the vertex (0,0) is not in general position
    AffineSubspace bad;
    bad.origin = pt(0, 0);
    bad.basis = {{Scalar(2), Scalar(-1)}};
    RestrictOptions opts;
    opts.strict = true;
    CHECK_THROWS_AS(restrict_arrangement(arr, lat, &amb, bad, opts), GeneralPositionViolation);
}
