#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "arrmorse/fixtures.hpp"
#include "arrmorse/lattice.hpp"
#include "oracles.hpp"

using namespace arrmorse;

TEST_CASE("e1: char poly (t-1)^2, betti (1,2,1)") {
    IntersectionLattice lat(fixtures::e1());
    CHECK(lat.size() == 4);  // whole plane, two lines, one point
    // hand recursion: mu(R^2)=1, mu(line)=-1, mu(point)=-(1-1-1)=1
    CHECK(lat.charpoly() == std::vector<long>{1, -2, 1});
    CHECK(lat.betti() == std::vector<long>{1, 2, 1});
    CHECK(lat.chamber_count() == 4);
    CHECK(lat.bounded_chamber_count() == 0);
}

TEST_CASE("single hyperplane: t^(d-1)(t-1)") {
    Arrangement arr(3, {make_hyperplane({1, 2, -1}, 4)});
    IntersectionLattice lat(arr);
    CHECK(lat.charpoly() == std::vector<long>{0, 0, -1, 1});
    CHECK(lat.betti() == std::vector<long>{1, 1});
}

TEST_CASE("e4 betti numbers frozen from the brute-force oracle") {
    Arrangement arr = fixtures::e4();
    auto brute = oracle::betti_bruteforce(arr);
    CHECK(brute == std::vector<long>{1, 4, 6, 3});
    IntersectionLattice lat(arr);
    CHECK(lat.betti() == brute);
    CHECK(lat.charpoly() == std::vector<long>{-3, 6, -4, 1});
}

TEST_CASE("e2 and e3 against the oracle") {
    for (auto arr : {fixtures::e2(), fixtures::e3()}) {
        IntersectionLattice lat(arr);
        CHECK(lat.betti() == oracle::betti_bruteforce(arr));
    }
    IntersectionLattice lat3(fixtures::e3());
    CHECK(lat3.betti() == std::vector<long>{1, 6, 11, 6});
    CHECK(lat3.chamber_count() == 24);
    IntersectionLattice lat2(fixtures::e2());
    CHECK(lat2.betti() == std::vector<long>{1, 3, 3});
    CHECK(lat2.chamber_count() == 7);
    CHECK(lat2.bounded_chamber_count() == 1);
}

TEST_CASE("h3 has exponents 1, 5, 9") {
    IntersectionLattice lat(fixtures::e5());
    CHECK(lat.rank() == 3);
    // (t-1)(t-5)(t-9) = t^3 - 15 t^2 + 59 t - 45
    CHECK(lat.charpoly() == std::vector<long>{-45, 59, -15, 1});
    CHECK(lat.betti() == std::vector<long>{1, 15, 59, 45});
    int rank2 = 0;
    for (int i = 0; i < lat.size(); ++i)
        if (3 - lat.flat(i).dim == 2) ++rank2;
    CHECK(rank2 == 31);
}

TEST_CASE("mobius sums vanish over nontrivial intervals") {
    for (auto arr : {fixtures::e2(), fixtures::e4(), fixtures::grid()}) {
        IntersectionLattice lat(arr);
        for (int x = 1; x < lat.size(); ++x) {
            long sum = 0;
            for (int y = 0; y < lat.size(); ++y)
                if (lat.contains(y, x)) sum += lat.flat(y).mobius;
            CHECK(sum == 0);
        }
    }
}

TEST_CASE("random arrangements: chambers match Zaslavsky") {
    for (uint64_t seed = 11; seed < 19; ++seed) {
        Arrangement arr = fixtures::random_arrangement(seed, 2, 5);
        IntersectionLattice lat(arr);
        auto faces = oracle::all_faces_bruteforce(arr);
        long chambers = 0;
        for (auto& s : faces) {
            bool open = true;
            for (int v : s) open &= v != 0;
            chambers += open;
        }
        CHECK(chambers == lat.chamber_count());
    }
}
