#include "arrmorse/faces.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace arrmorse {

std::string signs_str(const Signs& s) {
    std::string out;
    out.reserve(s.size());
    for (int8_t v : s) out += (v < 0 ? '-' : v > 0 ? '+' : '0');
    return out;
}

namespace {

struct Covector {
    Signs signs;      // over the coned hyperplanes (infinity last)
    Vector witness;   // homogeneous, exact
    Vector evals;     // <coned normal_i, witness>
};

Signs eval_signs(const Vector& evals) {
    Signs s(evals.size());
    for (size_t i = 0; i < evals.size(); ++i) s[i] = (int8_t)evals[i].sign();
    return s;
}

// X∘Y: first nonzero wins; witness w_X + eps * w_Y with eps small enough.
Covector compose(const Covector& x, const Covector& y) {
    Scalar eps(1);
    for (size_t i = 0; i < x.signs.size(); ++i) {
        if (x.signs[i] == 0 || y.signs[i] == 0) continue;
        if (x.signs[i] == y.signs[i]) continue;
        Scalar bound = x.evals[i].abs() / (Scalar(2) * y.evals[i].abs());
        if (bound < eps) eps = bound;
    }
    Covector r;
    r.witness = add(x.witness, scale(eps, y.witness));
    r.evals = add(x.evals, scale(eps, y.evals));
    r.signs = eval_signs(r.evals);
    for (size_t i = 0; i < r.signs.size(); ++i)
        assert(r.signs[i] == (x.signs[i] != 0 ? x.signs[i] : y.signs[i]));
    return r;
}

}  // namespace

FacePoset::FacePoset(Arrangement a) : arr_(std::move(a)) {
    if (!arr_.is_essential())
        throw InputError("face enumeration requires an essential arrangement");
    const int d = arr_.dim;
    const int m = arr_.size();
    if (d == 0) {
        Face f;
        f.codim = 0;
        faces_.push_back(std::move(f));
        by_signs_[""] = 0;
        by_codim_.assign(1, {0});
        chambers_ = {0};
        vertices_ = {0};
        faces_[0].cl_vertices = {0};
        return;
    }
    const int cd = d + 1;  // coned dimension, infinity coordinate last

    std::vector<Vector> cnormals;
    for (const auto& h : arr_.hyperplanes) {
        Vector n = h.normal;
        n.push_back(-h.offset);
        cnormals.push_back(std::move(n));
    }
    Vector hinf(cd, Scalar(0));
    hinf[d] = Scalar(1);
    cnormals.push_back(hinf);
    const int cm = m + 1;

    // cocircuits: for every 1-dimensional flat of the coned arrangement, the
    // sign vectors of its two generators
    std::vector<Covector> cocircuits;
    {
        std::map<std::string, bool> seen;
        // iterate all d-subsets of the cm coned normals
        std::vector<int> comb(d);
        for (int i = 0; i < d; ++i) comb[i] = i;
        auto advance = [&]() -> bool {
            int i = d - 1;
            while (i >= 0 && comb[i] == cm - d + i) --i;
            if (i < 0) return false;
            ++comb[i];
            for (int j = i + 1; j < d; ++j) comb[j] = comb[j - 1] + 1;
            return true;
        };
        bool more = true;
        while (more) {
            Matrix sys;
            for (int i : comb) sys.push_back(cnormals[i]);
            auto ns = nullspace(sys);
            if (ns.size() == 1) {
                Vector g = ns[0];
                canonicalize_direction(g);
                std::string key = vec_str(g);
                if (!seen.count(key)) {
                    seen[key] = true;
                    for (int orient = 0; orient < 2; ++orient) {
                        Covector c;
                        c.witness = orient ? scale(Scalar(-1), g) : g;
                        c.evals.resize(cm);
                        for (int i = 0; i < cm; ++i) c.evals[i] = dot(cnormals[i], c.witness);
                        c.signs = eval_signs(c.evals);
                        cocircuits.push_back(std::move(c));
                    }
                }
            }
            more = advance();
        }
    }

    // covectors: closure of the cocircuits under composition
    std::unordered_map<std::string, int> cov_index;
    std::vector<Covector> covs;
    {
        Covector zero;
        zero.witness = Vector(cd, Scalar(0));
        zero.evals = Vector(cm, Scalar(0));
        zero.signs = Signs(cm, 0);
        covs.push_back(zero);
        cov_index[signs_str(zero.signs)] = 0;
        for (size_t head = 0; head < covs.size(); ++head) {
            Covector cur = covs[head];  // copy: covs may reallocate
            for (const auto& c : cocircuits) {
                Signs comp(cm);
                bool changes = false;
                for (int i = 0; i < cm; ++i) {
                    comp[i] = cur.signs[i] != 0 ? cur.signs[i] : c.signs[i];
                    changes |= comp[i] != cur.signs[i];
                }
                if (!changes) continue;
                std::string key = signs_str(comp);
                if (cov_index.count(key)) continue;
                Covector nxt = compose(cur, c);
                cov_index[key] = (int)covs.size();
                covs.push_back(std::move(nxt));
            }
        }
    }

    // split into affine faces and recession rays
    std::vector<Face> faces;
    for (const auto& cv : covs) {
        if (cv.signs[m] > 0) {
            Face f;
            f.signs.assign(cv.signs.begin(), cv.signs.begin() + m);
            Scalar w0 = cv.witness[d];
            f.witness.assign(cv.witness.begin(), cv.witness.begin() + d);
            f.witness = scale(Scalar(1) / w0, f.witness);
            Matrix zn;
            Vector zc;
            for (int i = 0; i < m; ++i) {
                if (f.signs[i] != 0) continue;
                zn.push_back(arr_.hyperplanes[i].normal);
                zc.push_back(arr_.hyperplanes[i].offset);
            }
            f.codim = zn.empty() ? 0 : rank(zn);
            f.flat_key = zn.empty() ? std::string() : affine_system_key(zn, zc);
            faces.push_back(std::move(f));
        } else if (cv.signs[m] == 0) {
            bool zero = true;
            for (int i = 0; i < m; ++i) zero &= cv.signs[i] == 0;
            if (zero) continue;
            Matrix zn;
            for (int i = 0; i < cm; ++i)
                if (cv.signs[i] == 0) zn.push_back(cnormals[i]);
            if (rank(std::move(zn)) != d) continue;  // keep 1-dimensional directions only
            InfRay r;
            r.signs.assign(cv.signs.begin(), cv.signs.begin() + m);
            r.dir.assign(cv.witness.begin(), cv.witness.begin() + d);
            rays_.push_back(std::move(r));
        }
    }

    std::sort(faces.begin(), faces.end(),
              [](const Face& a, const Face& b) { return signs_str(a.signs) < signs_str(b.signs); });
    std::sort(rays_.begin(), rays_.end(),
              [](const InfRay& a, const InfRay& b) { return signs_str(a.signs) < signs_str(b.signs); });
    faces_ = std::move(faces);

    by_codim_.assign(d + 1, {});
    for (int i = 0; i < (int)faces_.size(); ++i) {
        by_signs_[signs_str(faces_[i].signs)] = i;
        by_codim_[faces_[i].codim].push_back(i);
        if (faces_[i].codim == 0) chambers_.push_back(i);
        if (faces_[i].codim == d) vertices_.push_back(i);
    }

    auto conforms = [&](const Signs& low, const Signs& high) {
        for (int i = 0; i < m; ++i)
            if (high[i] != 0 && high[i] != low[i]) return false;
        return true;
    };
    for (int f = 0; f < (int)faces_.size(); ++f) {
        for (int v : vertices_)
            if (conforms(faces_[f].signs, faces_[v].signs)) faces_[f].cl_vertices.push_back(v);
        for (int r = 0; r < (int)rays_.size(); ++r)
            if (conforms(faces_[f].signs, rays_[r].signs)) faces_[f].rays.push_back(r);
    }
}

int FacePoset::find(const Signs& s) const {
    auto it = by_signs_.find(signs_str(s));
    return it == by_signs_.end() ? -1 : it->second;
}

int FacePoset::locate(const Vector& x) const {
    Signs s(arr_.size());
    for (int i = 0; i < arr_.size(); ++i) s[i] = (int8_t)arr_.hyperplanes[i].side(x);
    return find(s);
}

bool FacePoset::leq(int f, int g) const {
    const Signs& a = faces_[f].signs;
    const Signs& b = faces_[g].signs;
    for (size_t i = 0; i < a.size(); ++i)
        if (b[i] != 0 && b[i] != a[i]) return false;
    return true;
}

std::vector<int> FacePoset::facets(int f) const {
    std::vector<int> out;
    int k = faces_[f].codim;
    if (k + 1 > dim()) return out;
    for (int g : by_codim_[k + 1])
        if (leq(f, g)) out.push_back(g);
    return out;
}

std::vector<int> FacePoset::cofacets(int f) const {
    std::vector<int> out;
    int k = faces_[f].codim;
    if (k == 0) return out;
    for (int g : by_codim_[k - 1])
        if (leq(g, f)) out.push_back(g);
    return out;
}

int FacePoset::opposite(int f, int g) const {
    if (!leq(f, g))
        throw NotIncidentError("opposite_face: " + signs_str(faces_[f].signs) + " is not below " +
                               signs_str(faces_[g].signs));
    Signs s = faces_[f].signs;
    const Signs& zg = faces_[g].signs;
    for (size_t i = 0; i < s.size(); ++i)
        if (zg[i] == 0) s[i] = (int8_t)-s[i];
    int id = find(s);
    assert(id >= 0);
    return id;
}

}  // namespace arrmorse
