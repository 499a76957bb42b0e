#include "arrmorse/salvetti.hpp"

#include <json.hpp>

#include <algorithm>
#include <cassert>

namespace arrmorse {

std::vector<int> SalvettiComplex::dim_count() const {
    std::vector<int> out(poset->dim() + 1, 0);
    for (int d : cell_dim) out[d]++;
    return out;
}

long SalvettiComplex::euler_characteristic() const {
    long chi = 0;
    for (int d : cell_dim) chi += d % 2 == 0 ? 1 : -1;
    return chi;
}

SalvettiComplex build_salvetti(const FacePoset& poset) {
    SalvettiComplex sc;
    sc.poset = &poset;
    for (int f = 0; f < poset.size(); ++f)
        for (int c : poset.chambers())
            if (poset.leq(c, f)) {
                sc.index[{c, f}] = (int)sc.cells.size();
                sc.cells.push_back({c, f});
                sc.cell_dim.push_back(poset.face(f).codim);
            }

    sc.boundary.resize(sc.cells.size());
    sc.coboundary.resize(sc.cells.size());
    const int m = poset.arrangement().size();
    for (int t = 0; t < (int)sc.cells.size(); ++t) {
        auto [c2, f2] = sc.cells[t];
        if (sc.cell_dim[t] == 0) continue;
        const Signs& sc2 = poset.face(c2).signs;
        // boundary cells [C1, F1]: F2 a facet of F1 and C1 the chamber beside
        // F1 that agrees with C2 across every hyperplane through F1
        for (int f1 : poset.cofacets(f2)) {
            const Signs& zf1 = poset.face(f1).signs;
            int found = 0;
            for (int c1 : poset.chambers()) {
                if (!poset.leq(c1, f1)) continue;
                const Signs& sc1 = poset.face(c1).signs;
                bool same = true;
                for (int i = 0; i < m && same; ++i)
                    if (zf1[i] == 0) same = sc1[i] == sc2[i];
                if (!same) continue;
                int s = sc.find(c1, f1);
                assert(s >= 0);
                sc.boundary[t].push_back(s);
                sc.coboundary[s].push_back(t);
                ++found;
            }
            assert(found == 1);
        }
    }
    return sc;
}

namespace {

Matching finish_matching(const SalvettiComplex& sc, std::vector<std::pair<int, int>> pairs) {
    Matching m;
    m.pairs = std::move(pairs);
    m.partner.assign(sc.size(), -1);
    for (auto [s, t] : m.pairs) {
        if (m.partner[s] != -1 || m.partner[t] != -1)
            throw std::logic_error("cell matched twice");
        m.partner[s] = t;
        m.partner[t] = s;
    }
    m.critical_per_dim.assign(sc.poset->dim() + 1, 0);
    for (int i = 0; i < sc.size(); ++i)
        if (m.partner[i] < 0) {
            m.critical.push_back(i);
            m.critical_per_dim[sc.cell_dim[i]]++;
        }
    return m;
}

}  // namespace

Matching polar_matching(const SalvettiComplex& sc, const PolarOrder& po, const Flag& fl) {
    const FacePoset& poset = *sc.poset;
    std::vector<std::optional<int>> mf(poset.size());
    for (int f = 0; f < poset.size(); ++f) mf[f] = min_facet(poset, po, f);

    std::vector<std::pair<int, int>> pairs;
    for (int t = 0; t < sc.size(); ++t) {
        auto [c, f] = sc.cells[t];
        if (in_p(fl, f)) continue;
        int fprime = *mf[f];
        bool blocked = false;
        for (int g = 0; g < poset.size() && !blocked; ++g) {
            if (!poset.leq(c, g) || !poset.leq(g, f)) continue;
            if (mf[g] && *mf[g] == f) blocked = true;
        }
        if (blocked) continue;
        int tau = sc.find(c, fprime);
        assert(tau >= 0);
        pairs.push_back({t, tau});
    }
    return finish_matching(sc, std::move(pairs));
}

Matching polar_matching_review(const SalvettiComplex& sc, const PolarOrder& po,
                               const Flag& fl) {
    (void)fl;
    const FacePoset& poset = *sc.poset;
    std::vector<std::pair<int, int>> pairs;
    // ([C,F1],[C,F2]) with F1 ≼ F2 one codim apart, F2 ⊲ F1, and G ⊲ F1 for
    // every G one codim below F1 with C ≼ G ≼ F1
    for (int t = 0; t < sc.size(); ++t) {
        auto [c, f1] = sc.cells[t];
        int k1 = poset.face(f1).codim;
        for (int f2 : poset.facets(f1)) {
            if (!poset.leq(c, f2)) continue;
            if (!po.less(f2, f1)) continue;
            bool ok = true;
            if (k1 > 0) {
                for (int g : poset.of_codim(k1 - 1)) {
                    if (!poset.leq(c, g) || !poset.leq(g, f1)) continue;
                    if (!po.less(g, f1)) {
                        ok = false;
                        break;
                    }
                }
            }
            if (!ok) continue;
            int tau = sc.find(c, f2);
            assert(tau >= 0);
            pairs.push_back({t, tau});
        }
    }
    return finish_matching(sc, std::move(pairs));
}

MatchingReport verify_matching(const SalvettiComplex& sc,
                               const std::vector<std::pair<int, int>>& pairs) {
    MatchingReport rep;
    std::vector<int> used(sc.size(), 0);
    std::vector<int> up(sc.size(), -1);
    for (auto [s, t] : pairs) {
        if (sc.cell_dim[t] != sc.cell_dim[s] + 1 ||
            std::find(sc.boundary[t].begin(), sc.boundary[t].end(), s) == sc.boundary[t].end()) {
            rep.is_matching = false;
            rep.detail = "pair is not a boundary incidence";
            return rep;
        }
        if (used[s]++ || used[t]++) {
            rep.is_matching = false;
            rep.detail = "cell belongs to two pairs";
            return rep;
        }
        up[s] = t;
    }

    // alternating cycle search: σ -> τ = up(σ) -> σ' ∈ ∂τ \ {σ}
    std::vector<int> state(sc.size(), 0);  // 0 unseen, 1 on stack, 2 done
    std::vector<int> stack;
    for (int s0 = 0; s0 < sc.size(); ++s0) {
        if (up[s0] < 0 || state[s0]) continue;
        stack.push_back(s0);
        std::vector<std::pair<int, size_t>> dfs{{s0, 0}};
        state[s0] = 1;
        while (!dfs.empty()) {
            auto& [cur, idx] = dfs.back();
            int tau = up[cur];
            const auto& bd = sc.boundary[tau];
            bool advanced = false;
            while (idx < bd.size()) {
                int nxt = bd[idx++];
                if (nxt == cur || up[nxt] < 0) continue;
                if (state[nxt] == 1) {
                    rep.acyclic = false;
                    rep.detail = "alternating cycle through cell " + std::to_string(nxt);
                    return rep;
                }
                if (state[nxt] == 0) {
                    state[nxt] = 1;
                    dfs.push_back({nxt, 0});
                    advanced = true;
                    break;
                }
            }
            if (!advanced && idx >= bd.size()) {
                state[cur] = 2;
                dfs.pop_back();
            }
        }
    }
    return rep;
}

std::vector<int> critical_cells_t6(const SalvettiComplex& sc, const PolarOrder& po,
                                    const Flag& fl) {
    const FacePoset& poset = *sc.poset;
    std::vector<int> out;
    for (int t = 0; t < sc.size(); ++t) {
        auto [c, f] = sc.cells[t];
        if (!in_p(fl, f)) continue;  // F ∩ V_codim(F) nonempty
        bool maximal = true;
        for (int g = 0; g < poset.size() && maximal; ++g) {
            if (g == f || !poset.leq(c, g) || !poset.leq(g, f)) continue;
            if (!po.less(g, f)) maximal = false;
        }
        if (maximal) out.push_back(t);
    }
    return out;
}

std::string MinimalityReport::to_json() const {
    nlohmann::json j = nlohmann::json::array();
    for (size_t k = 0; k < critical.size(); ++k) {
        nlohmann::json row;
        row["dim"] = k;
        row["critical"] = critical[k];
        row["betti"] = k < betti.size() ? betti[k] : 0;
        row["pass"] = critical[k] == (k < betti.size() ? betti[k] : 0);
        j.push_back(row);
    }
    nlohmann::json top;
    top["dims"] = j;
    top["pass"] = pass;
    return top.dump(2);
}

MinimalityReport minimality_report(const Arrangement& arr, const Flag& fl,
                                   const Orderings& ords) {
    (void)arr;
    PolarOrder po = build_polar_order(fl, ords);
    SalvettiComplex sc = build_salvetti(fl.amb);
    Matching m = polar_matching(sc, po, fl);
    MatchingReport mr = verify_matching(sc, m.pairs);
    MinimalityReport rep;
    rep.critical.assign(m.critical_per_dim.begin(), m.critical_per_dim.end());
    rep.betti = fl.lat.betti();
    rep.betti.resize(fl.dim() + 1, 0);
    rep.pass = mr.pass();
    for (int k = 0; k <= fl.dim(); ++k) rep.pass &= rep.critical[k] == rep.betti[k];
    return rep;
}

}  // namespace arrmorse
