#include "arrmorse/sweep.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

namespace arrmorse {

int extension_sign(const FlagLevel& L, const SweepState& st, int face) {
    const Face& f = L.faces.face(face);
    int seen_pos = 0, seen_neg = 0;
    for (int v : f.cl_vertices) (st.swept[v] ? seen_neg : seen_pos) = 1;
    for (int r : f.rays) (L.ray_sign[r] > 0 ? seen_pos : seen_neg) = 1;
    assert(seen_pos || seen_neg);
    if (seen_pos && seen_neg) return 0;
    return seen_pos ? 1 : -1;
}

std::vector<int> crossed_faces(const FlagLevel& L, const SweepState& st) {
    std::vector<int> out;
    for (int f = 0; f < L.faces.size(); ++f)
        if (extension_sign(L, st, f) == 0) out.push_back(f);
    return out;
}

std::vector<int> crossed_edges(const FlagLevel& L, const SweepState& st) {
    std::vector<int> out;
    int k = L.faces.dim();
    for (int f : L.faces.of_codim(k - 1))
        if (extension_sign(L, st, f) == 0) out.push_back(f);
    return out;
}

std::vector<int> sweep_zone(const FlagLevel& L, const SweepState& st, int p) {
    std::vector<int> out;
    for (int f = 0; f < L.faces.size(); ++f)
        if (L.faces.leq(f, p) && extension_sign(L, st, f) == 0) out.push_back(f);
    return out;
}

std::vector<int> flip_removed(const FlagLevel& L, const SweepState& st, int p) {
    std::vector<int> out;
    for (int f : sweep_zone(L, st, p))
        if (extension_sign(L, st, L.faces.opposite(f, p)) != 0) out.push_back(f);
    return out;
}

std::optional<NearBlock> near_blocker(const FlagLevel& L, const SweepState& st, int p) {
    for (int li : L.vert_lines[p]) {
        for (int v : L.lines[li].verts) {
            if (v == p) break;
            if (!st.swept[v]) return NearBlock{li, v};
        }
    }
    return std::nullopt;
}

bool is_near(const FlagLevel& L, const SweepState& st, int p) {
    return !st.swept[p] && !near_blocker(L, st, p).has_value();
}

std::vector<int> near_set(const FlagLevel& L, const SweepState& st) {
    std::vector<int> out;
    for (int v : L.pk)
        if (is_near(L, st, v)) out.push_back(v);
    return out;
}

int crossing_edge_on_line(const FlagLevel& L, const SweepState& st, int line) {
    const SweepLine& ln = L.lines[line];
    size_t idx = 0;
    while (idx < ln.verts.size() && st.swept[ln.verts[idx]]) ++idx;
    for (size_t j = idx; j < ln.verts.size(); ++j) assert(!st.swept[ln.verts[j]]);
    return ln.edges[idx];
}

bool is_near_oracle(const FlagLevel& L, const SweepState& st, int p) {
    if (st.swept[p]) return false;
    const Signs& ps = L.faces.face(p).signs;
    for (int li : L.vert_lines[p]) {
        const SweepLine& ln = L.lines[li];
        // p must be the first unswept vertex of the chain
        for (int v : ln.verts) {
            if (v == p) break;
            if (!st.swept[v]) return false;
        }
        int e = crossing_edge_on_line(L, st, li);
        const Signs& es = L.faces.face(e).signs;
        for (size_t i = 0; i < ps.size(); ++i)
            if (ps[i] != 0 && es[i] != ps[i]) return false;
    }
    return true;
}

SweepState flip(const FlagLevel& L, const SweepState& st, int p) {
    if (st.swept[p]) throw NotNearError("vertex already swept", -1, p);
    if (auto b = near_blocker(L, st, p))
        throw NotNearError("vertex is not near the moving pseudohyperplane", b->line, b->blocker);
    SweepState next = st;
    next.order.push_back(p);
    next.swept[p] = 1;
    return next;
}

Validation validate_special_ordering(const FlagLevel& L, const std::vector<int>& order,
                                     bool use_oracle) {
    Validation res;
    if (order.size() != L.pk.size()) {
        res.ok = false;
        return res;
    }
    std::set<int> seen;
    for (int v : order) {
        if (L.pk_pos[v] < 0 || seen.count(v)) {
            res.ok = false;
            return res;
        }
        seen.insert(v);
    }
    SweepState st = SweepState::initial(L);
    for (size_t i = 0; i < order.size(); ++i) {
        bool ok = use_oracle ? is_near_oracle(L, st, order[i]) : is_near(L, st, order[i]);
        if (!ok) {
            res.ok = false;
            res.fail_index = (int)i;
            if (auto b = near_blocker(L, st, order[i])) {
                res.line = b->line;
                res.blocker = b->blocker;
            }
            return res;
        }
        st = flip(L, st, order[i]);
    }
    return res;
}

namespace {
void enumerate_rec(const FlagLevel& L, SweepState& st, std::vector<int>& prefix,
                   std::vector<std::vector<int>>& out, size_t limit) {
    if (prefix.size() == L.pk.size()) {
        if (out.size() >= limit)
            throw LimitExceeded("special ordering enumeration exceeded limit " +
                                std::to_string(limit));
        out.push_back(prefix);
        return;
    }
    for (int v : L.pk) {
        if (!is_near(L, st, v)) continue;
        SweepState nxt = flip(L, st, v);
        prefix.push_back(v);
        enumerate_rec(L, nxt, prefix, out, limit);
        prefix.pop_back();
    }
}
}  // namespace

std::vector<std::vector<int>> enumerate_special_orderings(const FlagLevel& L, size_t limit) {
    std::vector<std::vector<int>> out;
    std::vector<int> prefix;
    SweepState st = SweepState::initial(L);
    enumerate_rec(L, st, prefix, out, limit);
    // the flip filter and the chain filter must coincide
    for (const auto& ord : out) {
        Validation v = validate_special_ordering(L, ord, true);
        if (!v.ok)
            throw std::logic_error("chain-enumerated ordering rejected by the flip oracle");
    }
    return out;
}

Ordering make_ordering(const Flag& fl, int level, std::vector<int> section_verts) {
    Ordering o;
    o.level = level;
    o.verts = std::move(section_verts);
    if (level == 0) {
        o.amb = {fl.p0_ambient};
        o.verts.clear();
        return o;
    }
    for (int v : o.verts) o.amb.push_back(fl.levels[level].to_ambient[v]);
    return o;
}

Orderings canonical_orderings(const Flag& fl) {
    Orderings ords;
    ords.push_back(make_ordering(fl, 0, {}));
    for (int k = 1; k <= fl.dim(); ++k) {
        Ordering o = make_ordering(fl, k, fl.levels[k].pk);
        Validation v = validate_special_ordering(fl.levels[k], o.verts);
        if (!v.ok) throw DegenerateSweep("canonical ordering failed validation at level " +
                                         std::to_string(k));
        ords.push_back(std::move(o));
    }
    return ords;
}

std::vector<int> initial_section_ordering(const Flag& fl, int k, const Ordering& lower) {
    std::vector<int> out;
    for (int a : lower.amb) {
        int f = fl.levels[k].from_ambient[a];
        assert(f >= 0);
        out.push_back(f);
    }
    return out;
}

namespace {

// Path of crossed cells of the section along one section line (the trace of
// the ambient flat X, codim k-2). pts are the section points (crossed edges)
// in walk order; cells (one more than pts) are the crossed codim-(k-2) faces
// supported exactly on X, interleaved with them.
struct LinePath {
    std::vector<int> pts;
    std::vector<int> cells;
};

LinePath section_line_path(const Flag& fl, int k, const SweepState& st, int amb_flat,
                           const std::vector<char>& crossed) {
    const FlagLevel& L = fl.levels[k];
    const std::string& key = fl.lat.flat(amb_flat).key;
    std::vector<int> pts, cells;
    for (int f : L.faces.of_codim(k - 1)) {
        if (!crossed[f]) continue;
        int lf = fl.lat.find(fl.amb.face(L.to_ambient[f]).flat_key);
        if (lf >= 0 && fl.lat.contains(amb_flat, lf)) pts.push_back(f);
    }
    for (int f : L.faces.of_codim(k - 2)) {
        if (!crossed[f]) continue;
        if (fl.amb.face(L.to_ambient[f]).flat_key == key) cells.push_back(f);
    }
    if (pts.empty()) return {};

    std::map<int, std::vector<int>> cell_pts;  // cell -> adjacent crossed points
    std::map<int, std::vector<int>> pt_cells;
    for (int c : cells) cell_pts[c];
    for (int c : cells)
        for (int p : pts)
            if (L.faces.leq(c, p)) {
                cell_pts[c].push_back(p);
                pt_cells[p].push_back(c);
            }
    for (int p : pts)
        if (pt_cells[p].size() != 2)
            throw std::logic_error("section line: point not flanked by two crossed cells");
    int start = -1;
    for (int c : cells)
        if (cell_pts[c].size() <= 1) start = c;
    if (start < 0) throw std::logic_error("section line: no unbounded end cell");

    LinePath path;
    int cur_cell = start, prev_pt = -1;
    while (true) {
        path.cells.push_back(cur_cell);
        int nxt_pt = -1;
        for (int p : cell_pts[cur_cell])
            if (p != prev_pt) nxt_pt = p;
        if (nxt_pt < 0) break;
        path.pts.push_back(nxt_pt);
        int nxt_cell = -1;
        for (int c : pt_cells[nxt_pt])
            if (c != cur_cell) nxt_cell = c;
        assert(nxt_cell >= 0);
        prev_pt = nxt_pt;
        cur_cell = nxt_cell;
    }
    if (path.pts.size() != pts.size())
        throw std::logic_error("section line: disconnected path");
    return path;
}

}  // namespace

std::vector<int> induced_ordering(const Flag& fl, int k, const SweepState& before,
                                  const std::vector<int>& ord_prev, const Ordering& lower,
                                  int p) {
    const FlagLevel& L = fl.levels[k];
    std::vector<int> pos(L.faces.size(), -1);
    for (int i = 0; i < (int)ord_prev.size(); ++i) pos[ord_prev[i]] = i;

    std::vector<int> removed;
    std::set<int> removed_set;
    for (int f : flip_removed(L, before, p))
        if (L.faces.face(f).codim == L.faces.dim() - 1) {
            removed.push_back(f);
            removed_set.insert(f);
            assert(pos[f] >= 0);
        }

    std::vector<char> crossed(L.faces.size(), 0);
    for (int f : crossed_faces(L, before)) crossed[f] = 1;

    // candidate section lines: traces of codim-(k-2) flats over a removed edge
    std::set<int> line_flats;
    if (k >= 2) {
        for (int e : removed) {
            int yf = fl.lat.find(fl.amb.face(L.to_ambient[e]).flat_key);
            assert(yf >= 0);
            for (int x : fl.lat.of_codim(k - 2))
                if (fl.lat.contains(x, yf)) line_flats.insert(x);
        }
    }

    int ybar = -1;  // ord_prev position of the pivot boundary point
    for (int x : line_flats) {
        std::vector<int> walk = section_line_path(fl, k, before, x, crossed).pts;
        std::vector<int> idxs;  // walk indices of removed points on this line
        for (int i = 0; i < (int)walk.size(); ++i)
            if (removed_set.count(walk[i])) idxs.push_back(i);
        if (idxs.empty()) continue;
        for (size_t i = 1; i < idxs.size(); ++i)
            if (idxs[i] != idxs[i - 1] + 1)
                throw DegenerateSweep("flip zone not contiguous on a section line");
        int lo = idxs.front(), hi = idxs.back();
        int pmin = pos[walk[lo]], pmax = pos[walk[lo]];
        for (int i = lo; i <= hi; ++i) {
            pmin = std::min(pmin, pos[walk[i]]);
            pmax = std::max(pmax, pos[walk[i]]);
        }
        for (int side = 0; side < 2; ++side) {
            int j = side == 0 ? lo - 1 : hi + 1;
            if (j < 0 || j >= (int)walk.size()) continue;
            int q = pos[walk[j]];
            if (q < pmin) ybar = std::max(ybar, q);  // y^+ candidate
            else if (q <= pmax)
                throw DegenerateSweep("boundary point interleaves the flip zone");
        }
    }

    // new points replace the removed ones, ordered by reverse lower-level
    // position of their same-support section points
    std::vector<std::pair<int, int>> block;  // (lower position, new edge)
    for (int e : removed) {
        int yf = fl.lat.find(fl.amb.face(L.to_ambient[e]).flat_key);
        int star = fl.section_point(k - 1, yf);
        int lp = lower.pos_of_amb(star);
        if (lp < 0) throw DegenerateSweep("missing lower-level section point");
        block.push_back({lp, L.faces.opposite(e, p)});
    }
    std::sort(block.begin(), block.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });

    std::vector<int> out;
    bool inserted = false;
    if (ybar < 0) {
        for (const auto& [_, e] : block) out.push_back(e);
        inserted = true;
    }
    for (int i = 0; i < (int)ord_prev.size(); ++i) {
        if (!removed_set.count(ord_prev[i])) out.push_back(ord_prev[i]);
        if (i == ybar && !inserted) {
            for (const auto& [_, e] : block) out.push_back(e);
            inserted = true;
        }
    }
    assert(inserted);
    return out;
}

Validation validate_section_ordering(const Flag& fl, int k, const SweepState& st,
                                     const std::vector<int>& ord) {
    Validation res;
    const FlagLevel& L = fl.levels[k];
    std::vector<char> crossed(L.faces.size(), 0);
    for (int f : crossed_faces(L, st)) crossed[f] = 1;

    std::vector<int> pos(L.faces.size(), -1);
    for (int i = 0; i < (int)ord.size(); ++i) pos[ord[i]] = i;
    for (int f : crossed_edges(L, st))
        if (pos[f] < 0) {
            res.ok = false;
            return res;
        }

    if (k < 2) return res;

    for (int x : fl.lat.of_codim(k - 2)) {
        LinePath path = section_line_path(fl, k, st, x, crossed);
        std::vector<int> walk = path.pts;
        if (walk.empty()) continue;
        // base cell: where the copy of V_{k-2} crosses this section line
        auto base_pt = flat_section(fl.arr, fl.lat.flat(x), fl.subspaces[k - 2]);
        if (!base_pt || base_pt->dim() != 0)
            throw GeneralPositionViolation("section line misses V_{k-2}");
        Vector q = fl.subspaces[k - 2].from_intrinsic(base_pt->origin);
        int amb_face = fl.amb.locate(q);
        assert(amb_face >= 0);
        int g = L.from_ambient[amb_face];
        if (g < 0 || !crossed[g])
            throw std::logic_error("base cell of a section line is not crossed");
        int gidx = -1;
        for (int i = 0; i < (int)path.cells.size(); ++i)
            if (path.cells[i] == g) gidx = i;
        if (gidx < 0) throw std::logic_error("base cell not on its section line path");
        bool has_before = gidx > 0;
        bool has_after = gidx < (int)walk.size();
        if (has_before && has_after) {
            res.ok = false;  // points on both sides of the base: not sweepable
            res.fail_index = -1;
            return res;
        }
        if (has_before) std::reverse(walk.begin(), walk.end());
        for (size_t i = 1; i < walk.size(); ++i) {
            if (pos[walk[i - 1]] > pos[walk[i]]) {
                res.ok = false;
                res.fail_index = pos[walk[i]];
                return res;
            }
        }
    }
    return res;
}

}  // namespace arrmorse
