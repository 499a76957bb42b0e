#include "arrmorse/flag.hpp"

#include <json.hpp>

#include <algorithm>
#include <cassert>
#include <random>

namespace arrmorse {

std::string FlagReport::summary() const {
    std::string s;
    for (const auto& it : items) {
        s += (it.pass ? "PASS " : "FAIL ") + it.name;
        if (!it.pass && !it.witness.empty()) s += " [" + it.witness + "]";
        s += "\n";
    }
    return s;
}

namespace {

AffineSubspace whole_space(int d) {
    AffineSubspace s;
    s.origin = Vector(d, Scalar(0));
    for (int i = 0; i < d; ++i) {
        Vector e(d, Scalar(0));
        e[i] = Scalar(1);
        s.basis.push_back(std::move(e));
    }
    return s;
}

// Direction coordinates w with B w = v (columns of B = basis of s).
std::optional<Vector> direction_coords(const AffineSubspace& s, const Vector& v) {
    size_t n = s.origin.size();
    Matrix a(n, Vector(s.basis.size(), Scalar(0)));
    for (size_t j = 0; j < s.basis.size(); ++j)
        for (size_t i = 0; i < n; ++i) a[i][j] = s.basis[j][i];
    return solve(a, v);
}

Vector map_direction(const AffineSubspace& s, const Vector& w) {
    Vector v(s.origin.size(), Scalar(0));
    for (size_t j = 0; j < s.basis.size(); ++j)
        for (size_t i = 0; i < v.size(); ++i) v[i] += w[j] * s.basis[j][i];
    return v;
}

// Equation of the child subspace (dim k) inside the parent chart (dim k+1).
std::pair<Vector, Scalar> intrinsic_hyperplane(const AffineSubspace& parent,
                                               const AffineSubspace& child) {
    auto t0 = parent.to_intrinsic(child.origin);
    if (!t0) throw GeneralPositionViolation("flag subspaces are not nested");
    Matrix dirs;
    for (const auto& b : child.basis) {
        auto w = direction_coords(parent, b);
        if (!w) throw GeneralPositionViolation("flag subspaces are not nested");
        dirs.push_back(*w);
    }
    std::vector<Vector> ns =
        dirs.empty() ? std::vector<Vector>{Vector{Scalar(1)}} : nullspace(dirs);
    if (dirs.empty()) {
        // child is a point inside a line
        Vector n{Scalar(1)};
        return {n, (*t0)[0]};
    }
    if (ns.size() != 1) throw GeneralPositionViolation("degenerate flag step");
    return {ns[0], dot(ns[0], *t0)};
}

}  // namespace

std::optional<AffineSubspace> flat_section(const Arrangement& arr, const Flat& flat,
                                           const AffineSubspace& sub) {
    Matrix sys;
    Vector rhs;
    for (int j = 0; j < arr.size(); ++j) {
        if (!((flat.hyps >> j) & 1)) continue;
        const auto& h = arr.hyperplanes[j];
        Vector n(sub.basis.size());
        for (size_t b = 0; b < sub.basis.size(); ++b) n[b] = dot(h.normal, sub.basis[b]);
        sys.push_back(std::move(n));
        rhs.push_back(h.offset - dot(h.normal, sub.origin));
    }
    if (sys.empty()) {
        AffineSubspace s;
        s.origin = Vector(sub.dim(), Scalar(0));
        for (int i = 0; i < sub.dim(); ++i) {
            Vector e(sub.dim(), Scalar(0));
            e[i] = Scalar(1);
            s.basis.push_back(std::move(e));
        }
        return s;
    }
    auto sol = solve(sys, rhs);
    if (!sol) return std::nullopt;
    AffineSubspace r;
    r.origin = *sol;
    r.basis = nullspace(sys);
    return r;
}

Restriction restrict_arrangement(const Arrangement& arr, const IntersectionLattice& lat,
                                 const FacePoset* ambient, const AffineSubspace& subspace,
                                 const RestrictOptions& opts) {
    const int d = arr.dim;
    const int k = subspace.dim();

    for (int fi = 1; fi < lat.size(); ++fi) {
        const Flat& X = lat.flat(fi);
        int expected = X.dim + k - d;
        auto sec = flat_section(arr, X, subspace);
        if (!sec) {
            if (expected >= 0 && opts.strict)
                throw GeneralPositionViolation("flat misses the subspace: " + X.key);
            continue;
        }
        if (sec->dim() != expected)
            throw GeneralPositionViolation("flat meets the subspace in the wrong dimension: " +
                                           X.key);
    }

    Restriction out;
    std::vector<Hyperplane> traces;
    for (int i = 0; i < arr.size(); ++i) {
        const auto& h = arr.hyperplanes[i];
        Hyperplane t;
        t.normal.resize(k);
        for (int b = 0; b < k; ++b) t.normal[b] = dot(h.normal, subspace.basis[b]);
        t.offset = h.offset - dot(h.normal, subspace.origin);
        if (vec_is_zero(t.normal)) {
            if (opts.strict)
                throw GeneralPositionViolation("hyperplane parallel to the subspace: index " +
                                               std::to_string(i));
            continue;
        }
        bool dup = false;
        for (const auto& prev : traces)
            if (prev.same_set(t)) dup = true;
        if (dup) {
            if (opts.strict)
                throw GeneralPositionViolation("two hyperplanes trace to the same section set");
            continue;
        }
        traces.push_back(std::move(t));
        out.trace_of.push_back(i);
    }
    out.section = Arrangement(k, std::move(traces), arr.quad_n);

    if (opts.want_embedding && ambient) {
        out.faces.emplace(out.section);
        out.to_ambient.resize(out.faces->size());
        for (int f = 0; f < out.faces->size(); ++f) {
            Vector p = subspace.from_intrinsic(out.faces->face(f).witness);
            int a = ambient->locate(p);
            assert(a >= 0);
            out.to_ambient[f] = a;
        }
    }
    return out;
}

std::vector<int> Flag::pk_ambient(int k) const {
    if (k == 0) return {p0_ambient};
    std::vector<int> out;
    for (int v : levels[k].pk) out.push_back(levels[k].to_ambient[v]);
    return out;
}

int Flag::section_point(int k, int flat_id) const {
    auto it = section_point_face[k].find(flat_id);
    if (it == section_point_face[k].end())
        throw NoIntersection("flat " + lat.flat(flat_id).key + " has no section point at level " +
                             std::to_string(k));
    return it->second;
}

Flag assemble_flag(const Arrangement& arr, std::vector<AffineSubspace> subspaces) {
    const int d = arr.dim;
    if ((int)subspaces.size() != d + 1)
        throw GeneralPositionViolation("flag must have d+1 subspaces");
    for (int k = 0; k <= d; ++k)
        if (subspaces[k].dim() != k) throw GeneralPositionViolation("flag level has wrong dimension");

    Flag fl;
    fl.arr = arr;
    fl.amb = FacePoset(arr);
    fl.lat = IntersectionLattice(arr);
    fl.subspaces = subspaces;
    fl.levels.resize(d + 1);

    for (int k = 1; k <= d; ++k) {
        FlagLevel& L = fl.levels[k];
        L.subspace = subspaces[k];
        RestrictOptions opts;
        opts.strict = true;
        Restriction r = restrict_arrangement(arr, fl.lat, &fl.amb, L.subspace, opts);
        L.section = std::move(r.section);
        L.trace_of = std::move(r.trace_of);
        L.faces = std::move(*r.faces);
        L.to_ambient = std::move(r.to_ambient);
        L.from_ambient.assign(fl.amb.size(), -1);
        for (int f = 0; f < L.faces.size(); ++f) L.from_ambient[L.to_ambient[f]] = f;

        auto [n, c] = intrinsic_hyperplane(L.subspace, subspaces[k - 1]);
        L.prev_normal = n;
        L.prev_offset = c;

        // orient: all vertices of A^k strictly positive
        int want = 0;
        for (int v : L.faces.vertices()) {
            int s = (dot(L.prev_normal, L.faces.face(v).witness) - L.prev_offset).sign();
            if (s == 0)
                throw GeneralPositionViolation("V_" + std::to_string(k - 1) + " meets a vertex of A^" +
                                               std::to_string(k));
            if (want == 0) want = s;
            if (s != want)
                throw GeneralPositionViolation("vertices of A^" + std::to_string(k) +
                                               " are not on one side of V_" + std::to_string(k - 1));
        }
        if (want < 0) {
            L.prev_normal = scale(Scalar(-1), L.prev_normal);
            L.prev_offset = -L.prev_offset;
        }

        for (const auto& ray : L.faces.rays()) {
            int s = dot(L.prev_normal, ray.dir).sign();
            if (s == 0)
                throw GeneralPositionViolation("recession direction of A^" + std::to_string(k) +
                                               " parallel to V_" + std::to_string(k - 1));
            L.ray_sign.push_back(s);
        }

        L.vert_h.assign(L.faces.size(), Scalar(0));
        L.pk = L.faces.vertices();
        for (int v : L.pk) L.vert_h[v] = L.height(v);
        std::sort(L.pk.begin(), L.pk.end(), [&](int a, int b) {
            if (L.vert_h[a] != L.vert_h[b]) return L.vert_h[a] < L.vert_h[b];
            return a < b;
        });
        L.pk_pos.assign(L.faces.size(), -1);
        for (int i = 0; i < (int)L.pk.size(); ++i) L.pk_pos[L.pk[i]] = i;

        // chains: group 1-dimensional faces by their support flat
        std::map<std::string, std::vector<int>> line_edges;
        for (int f : L.faces.of_codim(k - 1)) line_edges[L.faces.face(f).flat_key].push_back(f);
        L.vert_lines.assign(L.faces.size(), {});
        for (auto& [key, edges] : line_edges) {
            SweepLine line;
            std::map<int, bool> vset;
            for (int e : edges)
                for (int v : L.faces.face(e).cl_vertices) vset[v] = true;
            for (auto& [v, _] : vset) line.verts.push_back(v);
            std::sort(line.verts.begin(), line.verts.end(),
                      [&](int a, int b) { return L.vert_h[a] < L.vert_h[b]; });
            line.edges = edges;
            std::sort(line.edges.begin(), line.edges.end(),
                      [&](int a, int b) { return L.height(a) < L.height(b); });
            if (line.edges.size() != line.verts.size() + 1)
                throw GeneralPositionViolation("broken chain on a 1-flat of A^" + std::to_string(k));
            line.back_edge = line.edges[0];
            int amb_face = L.to_ambient[line.edges[0]];
            line.amb_flat = fl.lat.find(fl.amb.face(amb_face).flat_key);
            assert(line.amb_flat >= 0);
            for (int v : line.verts) L.vert_lines[v].push_back((int)L.lines.size());
            L.lines.push_back(std::move(line));
        }
    }

    fl.p0_ambient = fl.amb.locate(subspaces[0].origin);
    if (fl.p0_ambient < 0 || fl.amb.face(fl.p0_ambient).codim != 0)
        throw GeneralPositionViolation("V_0 does not lie in an open chamber");

    fl.amb_min_level.assign(fl.amb.size(), d);
    for (int k = d - 1; k >= 1; --k)
        for (int a : fl.levels[k].to_ambient) fl.amb_min_level[a] = k;
    fl.amb_min_level[fl.p0_ambient] = 0;

    // section points: the unique face of each codim-k flat meeting V_k
    fl.section_point_face.resize(d + 1);
    fl.section_point_coord.resize(d + 1);
    fl.section_point_face[0][0] = fl.p0_ambient;
    fl.section_point_coord[0][0] = subspaces[0].origin;
    for (int k = 1; k <= d; ++k) {
        for (int fi : fl.lat.of_codim(k)) {
            auto sec = flat_section(arr, fl.lat.flat(fi), subspaces[k]);
            if (!sec || sec->dim() != 0)
                throw GeneralPositionViolation("codim-k flat does not meet V_k in a point");
            Vector p = subspaces[k].from_intrinsic(sec->origin);
            int face = fl.amb.locate(p);
            assert(face >= 0);
            if (fl.amb.face(face).flat_key != fl.lat.flat(fi).key)
                throw GeneralPositionViolation("section point lies on an unexpected smaller flat");
            fl.section_point_face[k][fi] = face;
            fl.section_point_coord[k][fi] = p;
        }
    }
    return fl;
}

FlagReport verify_flag(const Arrangement& arr, const std::vector<AffineSubspace>& subspaces) {
    FlagReport rep;
    const int d = arr.dim;
    if ((int)subspaces.size() != d + 1) {
        rep.add("structure", false, "flag must have d+1 subspaces");
        return rep;
    }
    bool dims_ok = true;
    for (int k = 0; k <= d; ++k) dims_ok &= subspaces[k].dim() == k;
    rep.add("dimensions", dims_ok);
    bool nested = true;
    for (int k = 0; k + 1 <= d && nested; ++k) {
        nested &= subspaces[k + 1].contains(subspaces[k].origin);
        for (const auto& b : subspaces[k].basis)
            nested &= direction_coords(subspaces[k + 1], b).has_value();
    }
    rep.add("nesting", nested);
    if (!dims_ok || !nested) return rep;

    IntersectionLattice lat(arr);

    // general position: every flat meets every level transversally
    {
        bool ok = true;
        std::string wit;
        for (int k = 0; k < d && ok; ++k) {
            for (int fi = 1; fi < lat.size(); ++fi) {
                const Flat& X = lat.flat(fi);
                int expected = X.dim + k - d;
                auto sec = flat_section(arr, X, subspaces[k]);
                if (expected < 0) {
                    if (sec) {
                        ok = false;
                        wit = "V_" + std::to_string(k) + " meets flat " + X.key;
                        break;
                    }
                } else if (!sec || sec->dim() != expected) {
                    ok = false;
                    wit = "V_" + std::to_string(k) + " not transversal to flat " + X.key;
                    break;
                }
            }
        }
        rep.add("general position", ok, wit);
        if (!ok) return rep;
    }

    for (int k = 1; k <= d; ++k) {
        // section and one-side condition
        std::vector<Hyperplane> traces;
        for (const auto& h : arr.hyperplanes) {
            Hyperplane t;
            t.normal.resize(k);
            for (int b = 0; b < k; ++b) t.normal[b] = dot(h.normal, subspaces[k].basis[b]);
            t.offset = h.offset - dot(h.normal, subspaces[k].origin);
            traces.push_back(std::move(t));
        }
        auto [n, c] = intrinsic_hyperplane(subspaces[k], subspaces[k - 1]);

        std::vector<Vector> verts;
        std::vector<std::string> vert_names;
        for (int fi : lat.of_codim(k)) {
            auto sec = flat_section(arr, lat.flat(fi), subspaces[k]);
            if (sec && sec->dim() == 0) {
                verts.push_back(sec->origin);
                vert_names.push_back(lat.flat(fi).key);
            }
        }
        {
            bool ok = true;
            std::string wit;
            int want = 0;
            std::string first;
            for (size_t i = 0; i < verts.size(); ++i) {
                int s = (dot(n, verts[i]) - c).sign();
                if (s == 0) {
                    ok = false;
                    wit = "vertex on V_" + std::to_string(k - 1) + ": " + vert_names[i];
                    break;
                }
                if (want == 0) {
                    want = s;
                    first = vert_names[i];
                }
                if (s != want) {
                    ok = false;
                    wit = "vertices on both sides of V_" + std::to_string(k - 1) + ": " + first +
                          " vs " + vert_names[i];
                    break;
                }
            }
            rep.add("one-side condition at level " + std::to_string(k), ok, wit);
        }
        {
            // no recession direction of A^k parallel to V_{k-1}
            bool ok = true;
            std::string wit;
            if (k >= 2) {
                std::vector<int> comb(k - 1);
                for (int i = 0; i < k - 1; ++i) comb[i] = i;
                int mm = (int)traces.size();
                auto advance = [&]() -> bool {
                    int i = k - 2;
                    while (i >= 0 && comb[i] == mm - (k - 1) + i) --i;
                    if (i < 0) return false;
                    ++comb[i];
                    for (int j = i + 1; j < k - 1; ++j) comb[j] = comb[j - 1] + 1;
                    return true;
                };
                bool more = mm >= k - 1;
                while (more && ok) {
                    Matrix sys;
                    for (int i : comb) sys.push_back(traces[i].normal);
                    auto ns = nullspace(sys);
                    if (ns.size() == 1 && dot(n, ns[0]).is_zero()) {
                        ok = false;
                        wit = "direction in V_" + std::to_string(k) + " parallel to V_" +
                              std::to_string(k - 1);
                    }
                    more = advance();
                }
            }
            rep.add("recession genericity at level " + std::to_string(k), ok, wit);
        }
    }

    // V_0 in an open chamber, away from every hyperplane
    {
        bool ok = true;
        for (const auto& h : arr.hyperplanes) ok &= h.side(subspaces[0].origin) != 0;
        rep.add("base point in an open chamber", ok);
    }

    // bounded chambers of A^k untouched by V_{k-1} (implied by one-side; checked directly)
    if (rep.pass) {
        bool ok = true;
        std::string wit;
        try {
            Flag fl = assemble_flag(arr, subspaces);
            for (int k = 1; k <= d && ok; ++k) {
                const FlagLevel& L = fl.levels[k];
                for (int ch : L.faces.chambers()) {
                    if (!L.faces.is_bounded(ch)) continue;
                    int lo = 0, hi = 0;
                    for (int v : L.faces.face(ch).cl_vertices) {
                        int s = (L.vert_h[v]).sign();
                        (s >= 0 ? hi : lo) = 1;
                    }
                    if (lo && hi) {
                        ok = false;
                        wit = "bounded chamber of A^" + std::to_string(k) + " crossed";
                        break;
                    }
                }
            }
        } catch (const std::exception& e) {
            ok = false;
            wit = e.what();
        }
        rep.add("bounded chambers avoided", ok, wit);
    }
    return rep;
}

Flag build_flag(const Arrangement& arr, uint64_t seed, int retry_budget) {
    if (!arr.is_essential()) throw InputError("build_flag requires an essential arrangement");
    const int d = arr.dim;
    IntersectionLattice lat(arr);

    for (int attempt = 0; attempt < retry_budget; ++attempt) {
        std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + attempt);
        long R = 3 + attempt / 4;
        auto coef = [&]() { return (long)(rng() % (2 * R + 1)) - R; };

        std::vector<AffineSubspace> subs(d + 1);
        subs[d] = whole_space(d);
        bool bad = false;
        for (int k = d; k >= 1 && !bad; --k) {
            // vertices of A ∩ V_k in intrinsic coordinates
            std::vector<Vector> verts;
            for (int fi : lat.of_codim(k)) {
                auto sec = flat_section(arr, lat.flat(fi), subs[k]);
                if (!sec || sec->dim() != 0) {
                    bad = true;
                    break;
                }
                verts.push_back(sec->origin);
            }
            if (bad) break;
            Vector n(k, Scalar(0));
            bool nz = false;
            for (int i = 0; i < k; ++i) {
                n[i] = Scalar(coef());
                nz |= !n[i].is_zero();
            }
            if (!nz) n[rng() % k] = Scalar(1);
            Scalar cmin;
            bool first = true;
            for (const auto& v : verts) {
                Scalar h = dot(n, v);
                if (first || h < cmin) cmin = h;
                first = false;
            }
            Scalar c = first ? Scalar(0) : cmin - Scalar(1);

            AffineSubspace child;
            Vector t0 = scale(c / dot(n, n), n);
            child.origin = subs[k].from_intrinsic(t0);
            for (const auto& w : nullspace(Matrix{n})) child.basis.push_back(map_direction(subs[k], w));
            subs[k - 1] = std::move(child);
        }
        if (bad) continue;

        FlagReport rep = verify_flag(arr, subs);
        if (!rep.pass) continue;
        try {
            return assemble_flag(arr, subs);
        } catch (const std::exception&) {
            continue;
        }
    }
    throw FlagSearchExhausted("no verified flag after " + std::to_string(retry_budget) +
                              " attempts");
}

std::string Flag::to_json() const {
    nlohmann::json j;
    j["dim"] = arr.dim;
    j["scalar"] = arr.quad_n == 0 ? "rational" : "quadratic:" + std::to_string(arr.quad_n);
    j["subspaces"] = nlohmann::json::array();
    for (const auto& s : subspaces) {
        nlohmann::json sj;
        sj["origin"] = nlohmann::json::array();
        for (const auto& x : s.origin) sj["origin"].push_back(x.str());
        sj["basis"] = nlohmann::json::array();
        for (const auto& b : s.basis) {
            nlohmann::json bj = nlohmann::json::array();
            for (const auto& x : b) bj.push_back(x.str());
            sj["basis"].push_back(bj);
        }
        j["subspaces"].push_back(sj);
    }
    return j.dump(2);
}

std::vector<AffineSubspace> Flag::subspaces_from_json(const std::string& text, long) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("json parse error: ") + e.what());
    }
    std::vector<AffineSubspace> subs;
    try {
        for (const auto& sj : j.at("subspaces")) {
            AffineSubspace s;
            for (const auto& x : sj.at("origin")) s.origin.push_back(Scalar::parse(x.get<std::string>()));
            for (const auto& bj : sj.at("basis")) {
                Vector b;
                for (const auto& x : bj) b.push_back(Scalar::parse(x.get<std::string>()));
                s.basis.push_back(std::move(b));
            }
            subs.push_back(std::move(s));
        }
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("bad flag json: ") + e.what());
    }
    return subs;
}

}  // namespace arrmorse
