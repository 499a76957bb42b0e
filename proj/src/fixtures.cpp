#include "arrmorse/fixtures.hpp"

#include <random>

namespace arrmorse {
namespace fixtures {

Arrangement e1() {
    return Arrangement(2, {make_hyperplane({1, 0}, 0), make_hyperplane({0, 1}, 0)});
}

Arrangement e2() {
    return Arrangement(2, {make_hyperplane({1, 0}, 0), make_hyperplane({0, 1}, 0),
                           make_hyperplane({1, 1}, 1)});
}

Arrangement e3() {
    std::vector<Hyperplane> hs;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            std::vector<long> n(4, 0);
            n[i] = 1;
            n[j] = -1;
            hs.push_back(make_hyperplane(n, 0));
        }
    return essentialize(Arrangement(4, std::move(hs)));
}

Arrangement e4() {
    return Arrangement(3, {make_hyperplane({1, 0, 0}, 0), make_hyperplane({0, 1, 0}, 0),
                           make_hyperplane({0, 0, 1}, 0), make_hyperplane({1, 1, 1}, 0)});
}

Arrangement e5() {
    const long n = 5;
    Scalar one(1), zero(0);
    Scalar phi(mpq_class(1, 2), mpq_class(1, 2), n);       // (1+sqrt5)/2
    Scalar phi2(mpq_class(3, 2), mpq_class(1, 2), n);      // phi^2 = phi+1
    std::vector<Hyperplane> hs;
    auto push = [&](Vector v) {
        Hyperplane h;
        h.normal = std::move(v);
        h.offset = Scalar(0);
        hs.push_back(std::move(h));
    };
    push({one, zero, zero});
    push({zero, one, zero});
    push({zero, zero, one});
    // cyclic permutations of (1, ±phi^2, ±phi): the fifteen mirrors of H_3
    for (int s2 : {1, -1})
        for (int s3 : {1, -1}) {
            Scalar a = one, b = Scalar(s2) * phi2, c = Scalar(s3) * phi;
            push({a, b, c});
            push({c, a, b});
            push({b, c, a});
        }
    return Arrangement(3, std::move(hs), n);
}

Arrangement pencil(int lines) {
    std::vector<Hyperplane> hs;
    hs.push_back(make_hyperplane({1, 0}, 0));
    hs.push_back(make_hyperplane({0, 1}, 0));
    for (int i = 2; i < lines; ++i) hs.push_back(make_hyperplane({1, i}, 0));
    return Arrangement(2, std::move(hs));
}

Arrangement grid() {
    return Arrangement(2, {make_hyperplane({1, 0}, 0), make_hyperplane({1, 0}, 1),
                           make_hyperplane({0, 1}, 0), make_hyperplane({0, 1}, 1)});
}

Arrangement simplex3() {
    return Arrangement(3, {make_hyperplane({1, 0, 0}, 0), make_hyperplane({0, 1, 0}, 0),
                           make_hyperplane({0, 0, 1}, 0), make_hyperplane({1, 1, 1}, 1)});
}

Arrangement boolean3() {
    return Arrangement(3, {make_hyperplane({1, 0, 0}, 0), make_hyperplane({0, 1, 0}, 0),
                           make_hyperplane({0, 0, 1}, 0)});
}

std::vector<AffineSubspace> f2a() {
    AffineSubspace v0, v1, v2;
    v0.origin = {Scalar(-3), Scalar(1)};
    v1.origin = v0.origin;
    v1.basis = {{Scalar(2), Scalar(-1)}};  // direction of x + 2y = -1
    v2.origin = {Scalar(0), Scalar(0)};
    v2.basis = {{Scalar(1), Scalar(0)}, {Scalar(0), Scalar(1)}};
    return {v0, v1, v2};
}

std::vector<AffineSubspace> f2b() {
    AffineSubspace v0, v1, v2;
    // on 2x + y = -2, beyond every crossing of V_1 with the arrangement
    v0.origin = {Scalar(-5), Scalar(8)};
    v1.origin = v0.origin;
    v1.basis = {{Scalar(1), Scalar(-2)}};
    v2.origin = {Scalar(0), Scalar(0)};
    v2.basis = {{Scalar(1), Scalar(0)}, {Scalar(0), Scalar(1)}};
    return {v0, v1, v2};
}

Arrangement random_arrangement(uint64_t seed, int dim, int count) {
    std::mt19937_64 rng(seed * 0x2545f4914f6cdd1dull + 17);
    for (int tries = 0; tries < 400; ++tries) {
        std::vector<Hyperplane> hs;
        bool ok = true;
        for (int i = 0; i < count && ok; ++i) {
            std::vector<long> n(dim);
            bool nz = false;
            for (int j = 0; j < dim; ++j) {
                n[j] = (long)(rng() % 7) - 3;
                nz |= n[j] != 0;
            }
            if (!nz) {
                ok = false;
                break;
            }
            long c = (long)(rng() % 5) - 2;
            Hyperplane h = make_hyperplane(n, c);
            for (const auto& prev : hs)
                if (prev.same_set(h)) ok = false;
            hs.push_back(std::move(h));
        }
        if (!ok) continue;
        try {
            Arrangement arr(dim, std::move(hs));
            if (!arr.is_essential()) continue;
            return arr;
        } catch (const InputError&) {
            continue;
        }
    }
    throw InputError("random arrangement sampling failed");
}

Arrangement generic_section_2d(const Arrangement& arr, uint64_t seed) {
    if (arr.dim != 3) throw InputError("generic_section_2d expects a 3D arrangement");
    IntersectionLattice lat(arr);
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + 5);
    for (int tries = 0; tries < 200; ++tries) {
        long a = (long)(rng() % 11) - 5, b = (long)(rng() % 11) - 5, c = (long)(rng() % 11) - 5;
        if (c == 0) continue;
        // plane z = a x + b y + 1 scaled: normal (-a, -b, c), offset c
        AffineSubspace plane;
        plane.origin = {Scalar(0), Scalar(0), Scalar::rational(1, c)};
        plane.basis = {{Scalar(1), Scalar(0), Scalar::rational(a, c)},
                       {Scalar(0), Scalar(1), Scalar::rational(b, c)}};
        try {
            RestrictOptions opts;
            opts.strict = true;
            opts.want_embedding = false;
            Restriction r = restrict_arrangement(arr, lat, nullptr, plane, opts);
            return r.section;
        } catch (const GeneralPositionViolation&) {
            continue;
        }
    }
    throw InputError("no generic section found");
}

}  // namespace fixtures
}  // namespace arrmorse
