#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "arrmorse/fixtures.hpp"
#include "arrmorse/sweep.hpp"

using namespace arrmorse;

namespace {

std::string sstr(const Flag& fl, int level, int section_face) {
    return signs_str(fl.levels[level].faces.face(section_face).signs);
}

std::vector<std::string> sstrs(const Flag& fl, int level, const std::vector<int>& faces) {
    std::vector<std::string> out;
    for (int f : faces) out.push_back(sstr(fl, level, f));
    return out;
}

int by_signs(const Flag& fl, int level, const std::string& s) {
    Signs sv;
    for (char c : s) sv.push_back(c == '+' ? 1 : c == '-' ? -1 : 0);
    int f = fl.levels[level].faces.find(sv);
    REQUIRE(f >= 0);
    return f;
}

// exhaustive reachable states of the sweep at one level
std::vector<SweepState> all_states(const FlagLevel& L) {
    std::vector<SweepState> out{SweepState::initial(L)};
    std::set<std::vector<char>> seen{out[0].swept};
    for (size_t head = 0; head < out.size(); ++head) {
        SweepState cur = out[head];
        for (int v : L.pk) {
            if (!is_near(L, cur, v)) continue;
            SweepState nxt = flip(L, cur, v);
            if (seen.insert(nxt.swept).second) out.push_back(nxt);
        }
    }
    return out;
}

}  // namespace

TEST_CASE("f2a chains follow the lines away from V_1") {
    Flag fl = assemble_flag(fixtures::e2(), fixtures::f2a());
    const FlagLevel& L = fl.levels[2];
    std::set<std::vector<std::string>> got;
    for (const auto& line : L.lines) got.insert(sstrs(fl, 2, line.verts));
    // vertices: (0,0) = 00-, (1,0) = +0-, (0,1) = 0+-
    std::set<std::vector<std::string>> want = {
        {"00-", "+00"},   // along y = 0
        {"00-", "0+0"},   // along x = 0
        {"+00", "0+0"}};  // along x + y = 1
    CHECK(got == want);
}

TEST_CASE("f2a near sets evolve along the unique special ordering") {
    Flag fl = assemble_flag(fixtures::e2(), fixtures::f2a());
    const FlagLevel& L = fl.levels[2];
    int v00 = by_signs(fl, 2, "00-"), v10 = by_signs(fl, 2, "+00"), v01 = by_signs(fl, 2, "0+0");
    SweepState st = SweepState::initial(L);
    CHECK(near_set(L, st) == std::vector<int>{v00});
    st = flip(L, st, v00);
    CHECK(near_set(L, st) == std::vector<int>{v10});
    st = flip(L, st, v10);
    CHECK(near_set(L, st) == std::vector<int>{v01});
}

TEST_CASE("f2b reverses the chain on x+y=1") {
    Flag fl = assemble_flag(fixtures::e2(), fixtures::f2b());
    const FlagLevel& L = fl.levels[2];
    int v00 = by_signs(fl, 2, "00-"), v01 = by_signs(fl, 2, "0+0");
    SweepState st = flip(L, SweepState::initial(L), v00);
    CHECK(near_set(L, st) == std::vector<int>{v01});
}

TEST_CASE("extension signs: start, middle, full sweep") {
    Flag fl = assemble_flag(fixtures::e2(), fixtures::f2a());
    const FlagLevel& L = fl.levels[2];
    SweepState st = SweepState::initial(L);
    // at the start the crossed faces are exactly the image of F^1
    std::set<int> expect;
    for (int a : fl.levels[1].to_ambient) expect.insert(L.from_ambient[a]);
    auto crossed = crossed_faces(L, st);
    CHECK(std::set<int>(crossed.begin(), crossed.end()) == expect);
    for (int f = 0; f < L.faces.size(); ++f)
        if (!expect.count(f)) CHECK(extension_sign(L, st, f) == 1);

    int v00 = by_signs(fl, 2, "00-");
    st = flip(L, st, v00);
    CHECK(extension_sign(L, st, by_signs(fl, 2, "+0-")) == 0);  // edge (0,0)-(1,0)
    CHECK(extension_sign(L, st, by_signs(fl, 2, "00-")) == -1);

    for (int v : L.pk)
        if (!st.swept[v]) st = flip(L, st, v);
    for (int f = 0; f < L.faces.size(); ++f)
        if (L.faces.is_bounded(f)) CHECK(extension_sign(L, st, f) == -1);
}

TEST_CASE("is_near agrees with the definition-level oracle, exhaustively") {
    std::vector<std::pair<Arrangement, std::vector<AffineSubspace>>> cases;
    cases.push_back({fixtures::e2(), fixtures::f2a()});
    cases.push_back({fixtures::e2(), fixtures::f2b()});
    {
        Arrangement g = fixtures::grid();
        cases.push_back({g, build_flag(g, 0).subspaces});
    }
    {
        Arrangement s = fixtures::simplex3();
        cases.push_back({s, build_flag(s, 1).subspaces});
    }
    for (auto& [arr, subs] : cases) {
        Flag fl = assemble_flag(arr, subs);
        for (int k = 1; k <= fl.dim(); ++k) {
            const FlagLevel& L = fl.levels[k];
            if (L.pk.size() > 8) continue;
            for (const SweepState& st : all_states(L))
                for (int v : L.pk)
                    if (!st.swept[v]) CHECK(is_near(L, st, v) == is_near_oracle(L, st, v));
        }
    }
}

TEST_CASE("flip performs the surgery of the section poset") {
    Flag fl = assemble_flag(fixtures::e2(), fixtures::f2a());
    const FlagLevel& L = fl.levels[2];
    SweepState st = SweepState::initial(L);
    int v00 = by_signs(fl, 2, "00-");
    std::vector<int> removed = flip_removed(L, st, v00);
    // the two crossed edges at (0,0) plus the crossed back chamber
    std::set<std::string> rm;
    for (int f : removed) rm.insert(sstr(fl, 2, f));
    CHECK(rm == std::set<std::string>{"0--", "-0-", "---"});

    SweepState nxt = flip(L, st, v00);
    std::set<int> before, after;
    for (int f : crossed_faces(L, st)) before.insert(f);
    for (int f : crossed_faces(L, nxt)) after.insert(f);
    // removed vanish, their opposites appear, nothing else moves
    for (int f : removed) {
        CHECK(before.count(f));
        CHECK_FALSE(after.count(f));
        int op = L.faces.opposite(f, v00);
        CHECK_FALSE(before.count(op));
        CHECK(after.count(op));
    }
    std::set<int> sym;
    for (int f : before)
        if (!after.count(f)) sym.insert(f);
    for (int f : after)
        if (!before.count(f)) sym.insert(f);
    CHECK(sym.size() == 2 * removed.size());
    for (int f : sym) CHECK(L.faces.leq(f, v00));  // locality

    // newly crossed faces are exactly those whose minimal vertex is v00
    for (int f : after) {
        if (before.count(f)) continue;
        const auto& cl = L.faces.face(f).cl_vertices;
        int best = cl.front();
        for (int v : cl)
            if (L.pk_pos[v] < L.pk_pos[best]) best = v;
        CHECK(best == v00);
    }
}

TEST_CASE("locality: flips only change faces adjacent to the vertex") {
    Flag fl = build_flag(fixtures::simplex3(), 1);
    const FlagLevel& L = fl.levels[3];
    SweepState st = SweepState::initial(L);
    for (int v : L.pk) {
        if (!is_near(L, st, v)) continue;
        SweepState nxt = flip(L, st, v);
        for (int f = 0; f < L.faces.size(); ++f)
            if (extension_sign(L, st, f) != extension_sign(L, nxt, f))
                CHECK(L.faces.leq(f, v));
        st = nxt;
    }
}

TEST_CASE("simultaneously near vertices flip in either order to the same state") {
    Arrangement arr = fixtures::grid();
    Flag fl = build_flag(arr, 0);
    const FlagLevel& L = fl.levels[2];
    SweepState st = SweepState::initial(L);
    auto near0 = near_set(L, st);
    REQUIRE(near0.size() == 1);
    st = flip(L, st, near0[0]);
    auto near1 = near_set(L, st);
    REQUIRE(near1.size() == 2);
    SweepState ab = flip(L, flip(L, st, near1[0]), near1[1]);
    SweepState ba = flip(L, flip(L, st, near1[1]), near1[0]);
    CHECK(ab.swept == ba.swept);
    CHECK(crossed_faces(L, ab) == crossed_faces(L, ba));
    // C(p) and C(q) are disjoint while both are near
    auto ca = flip_removed(L, st, near1[0]);
    auto cb = flip_removed(L, st, near1[1]);
    for (int f : ca) CHECK(std::find(cb.begin(), cb.end(), f) == cb.end());
}

TEST_CASE("flipping a blocked vertex reports the blocking line and vertex") {
    Flag fl = assemble_flag(fixtures::e2(), fixtures::f2a());
    const FlagLevel& L = fl.levels[2];
    int v01 = by_signs(fl, 2, "0+0");
    SweepState st = SweepState::initial(L);
    try {
        flip(L, st, v01);
        FAIL("expected NotNearError");
    } catch (const NotNearError& e) {
        REQUIRE(e.blocker >= 0);
        std::string blocker = sstr(fl, 2, e.blocker);
        CHECK((blocker == "00-" || blocker == "+00"));
        // the blocking vertex precedes (0,1) on the reported line
        const SweepLine& ln = L.lines[e.line];
        auto itb = std::find(ln.verts.begin(), ln.verts.end(), e.blocker);
        auto itp = std::find(ln.verts.begin(), ln.verts.end(), v01);
        CHECK(itb < itp);
    }
}

TEST_CASE("validate_special_ordering matches the examples") {
    Flag fl = assemble_flag(fixtures::e2(), fixtures::f2a());
    const FlagLevel& L = fl.levels[2];
    int v00 = by_signs(fl, 2, "00-"), v10 = by_signs(fl, 2, "+00"), v01 = by_signs(fl, 2, "0+0");
    CHECK(validate_special_ordering(L, {v00, v10, v01}).ok);
    Validation bad = validate_special_ordering(L, {v00, v01, v10});
    CHECK_FALSE(bad.ok);
    CHECK(bad.fail_index == 1);
    CHECK_FALSE(validate_special_ordering(L, {v00, v10}).ok);  // not a permutation
}

TEST_CASE("single-vertex level is trivially special") {
    Arrangement arr(1, {make_hyperplane({1}, 0)});
    Flag fl = build_flag(arr, 0);
    const FlagLevel& L = fl.levels[1];
    REQUIRE(L.pk.size() == 1);
    CHECK(validate_special_ordering(L, L.pk).ok);
    CHECK(enumerate_special_orderings(L, 100).size() == 1);
}

TEST_CASE("enumeration: e2 has one special ordering, the grid has two") {
    Flag fa = assemble_flag(fixtures::e2(), fixtures::f2a());
    CHECK(enumerate_special_orderings(fa.levels[2], 100).size() == 1);
    Flag fg = build_flag(fixtures::grid(), 0);
    auto all = enumerate_special_orderings(fg.levels[2], 100);
    CHECK(all.size() == 2);
    CHECK_THROWS_AS(enumerate_special_orderings(fg.levels[2], 1), LimitExceeded);
}

TEST_CASE("validation accepts exactly the linear extensions of the chains") {
    for (uint64_t seed : {21ull, 22ull}) {
        Arrangement arr = fixtures::random_arrangement(seed, 2, 4);
        Flag fl = build_flag(arr, seed);
        const FlagLevel& L = fl.levels[2];
        if (L.pk.size() > 7) continue;
        std::vector<int> perm = L.pk;
        std::sort(perm.begin(), perm.end());
        int accepted = 0;
        do {
            Validation v = validate_special_ordering(L, perm);
            bool linext = true;
            std::vector<int> pos(L.faces.size(), -1);
            for (int i = 0; i < (int)perm.size(); ++i) pos[perm[i]] = i;
            for (const auto& line : L.lines)
                for (size_t i = 1; i < line.verts.size(); ++i)
                    linext &= pos[line.verts[i - 1]] < pos[line.verts[i]];
            CHECK(v.ok == linext);
            accepted += v.ok;
        } while (std::next_permutation(perm.begin(), perm.end()));
        CHECK(accepted >= 1);
    }
}

TEST_CASE("induced orderings along the f2a sweep match the hand simulation") {
    Flag fl = assemble_flag(fixtures::e2(), fixtures::f2a());
    const FlagLevel& L = fl.levels[2];
    Orderings ords = canonical_orderings(fl);
    int v00 = by_signs(fl, 2, "00-"), v10 = by_signs(fl, 2, "+00"), v01 = by_signs(fl, 2, "0+0");

    std::vector<int> cur = initial_section_ordering(fl, 2, ords[1]);
    CHECK(sstrs(fl, 2, cur) == std::vector<std::string>{"-0-", "0--", "+-0"});

    SweepState st = SweepState::initial(L);
    cur = induced_ordering(fl, 2, st, cur, ords[1], v00);
    CHECK(sstrs(fl, 2, cur) == std::vector<std::string>{"0+-", "+0-", "+-0"});
    CHECK(validate_section_ordering(fl, 2, flip(L, st, v00), cur).ok);

    st = flip(L, st, v00);
    cur = induced_ordering(fl, 2, st, cur, ords[1], v10);
    CHECK(sstrs(fl, 2, cur) == std::vector<std::string>{"0+-", "++0", "+0+"});
    CHECK(validate_section_ordering(fl, 2, flip(L, st, v10), cur).ok);

    st = flip(L, st, v10);
    cur = induced_ordering(fl, 2, st, cur, ords[1], v01);
    CHECK(sstrs(fl, 2, cur) == std::vector<std::string>{"-+0", "0++", "+0+"});
    st = flip(L, st, v01);
    CHECK(validate_section_ordering(fl, 2, st, cur).ok);
    // the final section ordering lists the crossed edges of the full sweep
    auto edges = crossed_edges(L, st);
    CHECK(std::set<int>(edges.begin(), edges.end()) == std::set<int>(cur.begin(), cur.end()));
}

TEST_CASE("lemma tripletta: swap validity equals the strict min-vertex condition") {
    std::vector<std::pair<Arrangement, uint64_t>> cases = {
        {fixtures::e2(), 0},
        {fixtures::random_arrangement(31, 2, 4), 31},
        {fixtures::random_arrangement(32, 2, 4), 32}};
    for (auto& [arr, seed] : cases) {
        Flag fl = (seed == 0) ? assemble_flag(arr, fixtures::f2a()) : build_flag(arr, seed);
        const FlagLevel& L = fl.levels[2];
        if (L.pk.size() > 7) continue;
        auto all = enumerate_special_orderings(L, 5000);
        int pairs = 0;
        for (const auto& ord : all) {
            std::vector<int> pos(L.faces.size(), -1);
            for (int i = 0; i < (int)ord.size(); ++i) pos[ord[i]] = i;
            for (size_t i = 0; i + 1 < ord.size(); ++i) {
                int p = ord[i], q = ord[i + 1];
                std::vector<int> swapped = ord;
                std::swap(swapped[i], swapped[i + 1]);
                bool special = validate_special_ordering(L, swapped).ok;
                bool cond = true;  // every common face's minimum vertex strictly before p
                for (int f = 0; f < L.faces.size(); ++f) {
                    if (!L.faces.leq(f, p) || !L.faces.leq(f, q)) continue;
                    const auto& cl = L.faces.face(f).cl_vertices;
                    int best = cl.front();
                    for (int v : cl)
                        if (pos[v] < pos[best]) best = v;
                    cond &= pos[best] < (int)i;
                }
                CHECK(special == cond);
                ++pairs;
            }
        }
        CHECK(pairs > 0);
    }
}
