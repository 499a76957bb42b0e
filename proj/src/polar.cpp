#include "arrmorse/polar.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

namespace arrmorse {

bool in_p(const Flag& fl, int face) {
    return fl.amb_min_level[face] == fl.amb.face(face).codim;
}

namespace {

// position of F's section point F_0 in ⤳^{codim F}
int f0_position(const Flag& fl, const Orderings& ords, int face) {
    int k = fl.amb.face(face).codim;
    if (k == 0) return 0;
    int flat = fl.lat.find(fl.amb.face(face).flat_key);
    assert(flat >= 0);
    int f0 = fl.section_point(k, flat);
    int pos = ords[k].pos_of_amb(f0);
    assert(pos >= 0);
    return pos;
}

}  // namespace

PolarOrder build_polar_order(const Flag& fl, const Orderings& ords) {
    const int d = fl.dim();
    for (int k = 1; k <= d; ++k) {
        Validation v = validate_special_ordering(fl.levels[k], ords[k].verts);
        if (!v.ok)
            throw std::invalid_argument("polar order: level " + std::to_string(k) +
                                        " ordering is not special");
    }

    PolarOrder po;
    po.key.resize(fl.amb.size());
    std::vector<char> done(fl.amb.size(), 0);
    for (int k = d; k >= 0; --k) {
        for (int f : fl.amb.of_codim(k)) {
            if (in_p(fl, f)) {
                int pos = k == 0 ? 0 : ords[k].pos_of_amb(f);
                assert(pos >= 0);
                po.key[f] = {{k, pos}};
            } else {
                PolarKey best;
                bool have = false;
                for (int g : fl.amb.facets(f)) {
                    assert(done[g]);
                    if (!have || po.key[g] < best) {
                        best = po.key[g];
                        have = true;
                    }
                }
                if (!have)
                    throw std::logic_error("face outside 𝓟 with no facet");
                best.push_back({k, f0_position(fl, ords, f)});
                po.key[f] = std::move(best);
            }
            done[f] = 1;
        }
    }

    po.by_rank.resize(fl.amb.size());
    for (int i = 0; i < fl.amb.size(); ++i) po.by_rank[i] = i;
    std::sort(po.by_rank.begin(), po.by_rank.end(),
              [&](int a, int b) { return po.key[a] < po.key[b]; });
    po.rank.assign(fl.amb.size(), -1);
    for (int i = 0; i < fl.amb.size(); ++i) {
        if (i > 0 && !(po.key[po.by_rank[i - 1]] < po.key[po.by_rank[i]]))
            throw std::logic_error("polar order is not total: equal keys");
        po.rank[po.by_rank[i]] = i;
    }
    return po;
}

std::optional<int> min_facet(const FacePoset& poset, const PolarOrder& po, int face) {
    std::optional<int> best;
    for (int g : poset.facets(face))
        if (!best || po.less(g, *best)) best = g;
    return best;
}

FaceSignature signature(const Flag& fl, const Orderings& ords, int face) {
    FaceSignature sig;
    sig.k = fl.amb_min_level[face];
    if (sig.k == 0) return sig;
    const FlagLevel& L = fl.levels[sig.k];
    int sec = L.from_ambient[face];
    assert(sec >= 0);
    if (in_p(fl, face)) {
        sig.j = ords[sig.k].pos_of_amb(face) + 1;
        return sig;
    }
    int best = (int)ords[sig.k].amb.size() + 1;
    for (int v : L.faces.face(sec).cl_vertices) {
        int pos = ords[sig.k].pos_of_amb(L.to_ambient[v]);
        assert(pos >= 0);
        best = std::min(best, pos + 1);
    }
    sig.j = best;
    return sig;
}

std::optional<std::pair<int, int>> check_trilex(const Flag& fl, const Orderings& ords,
                                                const PolarOrder& po) {
    int n = fl.amb.size();
    std::vector<FaceSignature> sig(n);
    for (int f = 0; f < n; ++f) sig[f] = signature(fl, ords, f);
    int top = 0;
    for (int k = 0; k <= fl.dim(); ++k) top = std::max(top, (int)ords[k].amb.size());
    for (int f = 0; f < n; ++f)
        for (int g = 0; g < n; ++g) {
            if (f == g) continue;
            if (sig[f].j > top || sig[g].j > top) continue;  // never-crossed: no claim
            bool lex_less = sig[f].k < sig[g].k || (sig[f].k == sig[g].k && sig[f].j < sig[g].j);
            if (lex_less && !po.less(f, g)) return std::make_pair(f, g);
        }
    return std::nullopt;
}

std::vector<RuleViolation> check_cinque_rules(const Flag& fl, const Orderings& ords,
                                              const PolarOrder& po) {
    std::vector<RuleViolation> out;
    const int d = fl.dim();
    auto less = [&](int f, int g) { return po.less(f, g); };

    // codim-d faces ordered like ⤳^d
    for (int f : fl.amb.of_codim(d))
        for (int g : fl.amb.of_codim(d)) {
            int pf = ords[d].pos_of_amb(f), pg = ords[d].pos_of_amb(g);
            if (pf < pg && !less(f, g)) out.push_back({1, f, g, "codim-d order mismatch"});
        }

    for (int k = 0; k < d; ++k) {
        const auto& level = fl.amb.of_codim(k);
        std::map<int, int> mf;  // min facet cache
        for (int f : level) {
            auto m = min_facet(fl.amb, po, f);
            if (m) mf[f] = *m;
        }
        for (int f : level)
            for (int g : level) {
                if (f == g) continue;
                bool fp = in_p(fl, f), gp = in_p(fl, g);
                if (fp && gp) {  // rule (1)
                    if (ords[k].pos_of_amb(f) < ords[k].pos_of_amb(g) && !less(f, g))
                        out.push_back({1, f, g, "P^k order not respected"});
                } else if (fp && !gp) {  // rule (2)
                    if (!less(f, g)) out.push_back({2, f, g, "P^k member after non-member"});
                } else if (!fp && !gp) {  // rule (3)
                    int f1 = mf.at(f), g1 = mf.at(g);
                    if (f1 != g1) {
                        if (less(f1, g1) && !less(f, g))
                            out.push_back({3, f, g, "min facets ordered, faces not"});
                    } else {
                        int pf = f0_position(fl, ords, f), pg = f0_position(fl, ords, g);
                        if (pf < pg && !less(f, g))
                            out.push_back({3, f, g, "same min facet, F_0 order not respected"});
                    }
                }
            }
        for (int f : level) {
            if (in_p(fl, f)) {  // rule (4): below every facet
                for (int g : fl.amb.facets(f))
                    if (!less(f, g)) out.push_back({4, f, g, "P^k member above a facet"});
            } else {  // rule (5)
                int f1 = mf.at(f);
                if (!less(f1, f)) out.push_back({5, f, f1, "face below its minimal facet"});
                for (int g : fl.amb.facets(f))
                    if (g != f1 && less(f1, g) && !less(f, g))
                        out.push_back({5, f, g, "face above a facet beyond its minimum"});
            }
        }
    }
    return out;
}

bool c_independent(const Flag& fl, const Orderings& ords, const PolarOrder& po, int f1,
                   int f2) {
    int k = fl.amb.face(f1).codim;
    if (fl.amb.face(f2).codim != k || !in_p(fl, f1) || !in_p(fl, f2))
        throw NotConsecutive("faces are not consecutive section points");
    int p1 = ords[k].pos_of_amb(f1), p2 = ords[k].pos_of_amb(f2);
    if (p1 < 0 || p2 < 0 || std::abs(p1 - p2) != 1)
        throw NotConsecutive("faces are not consecutive in the level ordering");
    for (int g = 0; g < fl.amb.size(); ++g) {
        if (!fl.amb.leq(g, f1) || !fl.amb.leq(g, f2)) continue;
        if (g == f1 || g == f2) continue;
        if (!po.less(g, f1) || !po.less(g, f2)) return false;
    }
    return true;
}

Orderings apply_switch(const Flag& fl, const Orderings& ords, int f1, int f2) {
    PolarOrder po = build_polar_order(fl, ords);
    if (!c_independent(fl, ords, po, f1, f2))
        throw std::invalid_argument("switch on a pair that is not c-independent");
    int k = fl.amb.face(f1).codim;
    Orderings next = ords;
    int p1 = next[k].pos_of_amb(f1), p2 = next[k].pos_of_amb(f2);
    std::swap(next[k].amb[p1], next[k].amb[p2]);
    std::swap(next[k].verts[p1], next[k].verts[p2]);
    Validation v = validate_special_ordering(fl.levels[k], next[k].verts);
    if (!v.ok) throw std::logic_error("switched ordering failed to be special");
    return next;
}

bool switch_graph_connected(const Flag& fl, int k, size_t limit) {
    std::vector<std::vector<int>> all = enumerate_special_orderings(fl.levels[k], limit);
    if (all.size() <= 1) return true;
    std::map<std::vector<int>, int> index;
    for (int i = 0; i < (int)all.size(); ++i) index[all[i]] = i;

    Orderings base = canonical_orderings(fl);
    std::vector<std::vector<int>> adj(all.size());
    for (int i = 0; i < (int)all.size(); ++i) {
        Orderings ords = base;
        ords[k] = make_ordering(fl, k, all[i]);
        PolarOrder po = build_polar_order(fl, ords);
        for (size_t pos = 0; pos + 1 < all[i].size(); ++pos) {
            int a1 = ords[k].amb[pos], a2 = ords[k].amb[pos + 1];
            if (!c_independent(fl, ords, po, a1, a2)) continue;
            std::vector<int> swapped = all[i];
            std::swap(swapped[pos], swapped[pos + 1]);
            auto it = index.find(swapped);
            if (it == index.end())
                throw std::logic_error("switch produced an unenumerated ordering");
            adj[i].push_back(it->second);
        }
    }
    std::vector<char> seen(all.size(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    size_t count = 1;
    while (!stack.empty()) {
        int cur = stack.back();
        stack.pop_back();
        for (int nxt : adj[cur])
            if (!seen[nxt]) {
                seen[nxt] = 1;
                ++count;
                stack.push_back(nxt);
            }
    }
    return count == all.size();
}

}  // namespace arrmorse
