#include "arrmorse/followup.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <random>
#include <set>

namespace arrmorse {

namespace {

// flat of the intersection of a hyperplane subset (the largest flat contained
// in every member); -1 when the intersection is empty
int closure_flat(const IntersectionLattice& lat, uint64_t mask) {
    int found = -1;
    for (int i = 0; i < lat.size(); ++i) {
        if ((lat.flat(i).hyps & mask) != mask) continue;
        if (found < 0 || lat.flat(i).dim > lat.flat(found).dim) found = i;
    }
    return found;
}

// is the flat expressible as an intersection of hyperplanes from sub_mask?
bool generated_by(const IntersectionLattice& lat, int flat, uint64_t sub_mask) {
    uint64_t gens = lat.flat(flat).hyps & sub_mask;
    if (gens == 0) return flat == 0;
    return closure_flat(lat, gens) == flat;
}

}  // namespace

Orderings followup_order(const Flag& fl) {
    const int d = fl.dim();
    Orderings ords;
    ords.push_back(make_ordering(fl, 0, {}));
    for (int k = 1; k <= d; ++k) {
        const FlagLevel& L = fl.levels[k];
        std::vector<std::tuple<int, int, int>> keyed;  // (group pos, vert) sorted by (pos, h)
        std::vector<int> verts = L.pk;
        std::vector<int> group(L.faces.size(), -1);
        for (int v : verts) {
            int a = L.to_ambient[v];
            int fa = fl.lat.find(fl.amb.face(a).flat_key);
            assert(fa >= 0);
            int best = -1;
            if (k == 1) {
                best = 0;  // the single element of P^0
            } else {
                for (int i = 0; i < (int)ords[k - 1].amb.size(); ++i) {
                    int q = ords[k - 1].amb[i];
                    int fq = fl.lat.find(fl.amb.face(q).flat_key);
                    if (fl.lat.contains(fq, fa)) {
                        best = i;
                        break;
                    }
                }
            }
            if (best < 0) throw DegenerateSweep("face with no lower-level section point over it");
            group[v] = best;
        }
        std::vector<int> order = verts;
        std::sort(order.begin(), order.end(), [&](int x, int y) {
            if (group[x] != group[y]) return group[x] < group[y];
            if (L.vert_h[x] != L.vert_h[y]) return L.vert_h[x] < L.vert_h[y];
            return false;
        });
        for (size_t i = 1; i < order.size(); ++i)
            if (group[order[i - 1]] == group[order[i]] &&
                L.vert_h[order[i - 1]] == L.vert_h[order[i]])
                throw DegenerateSweep("two group members at the same walk parameter");
        ords.push_back(make_ordering(fl, k, order));
    }
    return ords;
}

bool is_followup(const Flag& fl) {
    Orderings ords = followup_order(fl);
    for (int k = 1; k <= fl.dim(); ++k)
        if (!validate_special_ordering(fl.levels[k], ords[k].verts).ok) return false;
    return true;
}

std::vector<AffineSubspace> FlagCandidate2D::subspaces() const {
    AffineSubspace v0, v1, v2;
    v0.origin = base;
    v1.origin = base;
    Vector dir{-ell.normal[1], ell.normal[0]};
    v1.basis.push_back(dir);
    v2.origin = Vector(2, Scalar(0));
    v2.basis.push_back(Vector{Scalar(1), Scalar(0)});
    v2.basis.push_back(Vector{Scalar(0), Scalar(1)});
    return {v0, v1, v2};
}

std::optional<FlagCandidate2D> candidate_from_flag(const Arrangement& arr, const Vector& b,
                                                   const Hyperplane& ell) {
    if (arr.dim != 2) throw InputError("2D candidate on a non-planar arrangement");
    IntersectionLattice lat(arr);

    if (!ell.eval(b).is_zero()) return std::nullopt;  // b must lie on ℓ
    for (const auto& h : arr.hyperplanes)
        if (h.side(b) == 0) return std::nullopt;  // b in an open chamber

    // all vertices strictly on one side of ℓ
    std::vector<Vector> verts;
    for (int i = 0; i < lat.size(); ++i)
        if (lat.flat(i).dim == 0) verts.push_back(lat.flat(i).space.origin);
    int vside = 0;
    for (const auto& p : verts) {
        int s = ell.side(p);
        if (s == 0) return std::nullopt;
        if (vside == 0) vside = s;
        if (s != vside) return std::nullopt;
    }

    // crossings of ℓ with the lines, on one halfline from b
    Vector dir{-ell.normal[1], ell.normal[0]};
    std::vector<std::pair<Scalar, int>> crossings;  // (parameter, line)
    for (int i = 0; i < arr.size(); ++i) {
        const auto& h = arr.hyperplanes[i];
        Scalar den = dot(h.normal, dir);
        if (den.is_zero()) return std::nullopt;  // ℓ parallel to a line
        Scalar t = -h.eval(b) / den;
        if (t.is_zero()) return std::nullopt;
        crossings.push_back({t, i});
    }
    bool all_pos = true, all_neg = true;
    for (const auto& [t, i] : crossings) (t.sign() > 0 ? all_neg : all_pos) = false;
    if (!all_pos && !all_neg) return std::nullopt;
    if (all_neg) {
        dir = scale(Scalar(-1), dir);
        for (auto& [t, i] : crossings) t = -t;
    }
    std::sort(crossings.begin(), crossings.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });

    FlagCandidate2D cand;
    cand.base = b;
    cand.ell = ell;
    cand.h0 = crossings[0].second;
    // first crossing interior to an edge of h0 (not a vertex)
    Vector q = add(b, scale(crossings[0].first, dir));
    for (const auto& p : verts)
        if (vec_is_zero(sub(p, q))) return std::nullopt;

    const Hyperplane& h0 = arr.hyperplanes[cand.h0];
    // a_j: vertices on h0, ordered by distance from b along h0
    Vector u{-h0.normal[1], h0.normal[0]};
    Scalar qpos = dot(u, q);
    std::vector<std::pair<Scalar, Vector>> on_h0;
    for (const auto& p : verts)
        if (h0.side(p) == 0) on_h0.push_back({dot(u, p), p});
    if (on_h0.empty()) return std::nullopt;
    bool up = true, down = true;
    for (const auto& [t, p] : on_h0) ((t - qpos).sign() > 0 ? down : up) = false;
    if (!up && !down) return std::nullopt;  // q must precede every a_j
    cand.orientation = up ? 1 : -1;
    std::sort(on_h0.begin(), on_h0.end(), [&](const auto& x, const auto& y) {
        return cand.orientation > 0 ? x.first < y.first : y.first < x.first;
    });
    for (auto& [t, p] : on_h0) cand.a.push_back(p);
    cand.side = h0.side(b);

    // M_j: other lines through a_j, ordered by their crossing along ℓ
    std::map<int, Scalar> cross_par;
    for (const auto& [t, i] : crossings) cross_par[i] = t;
    for (const auto& p : cand.a) {
        std::vector<std::pair<Scalar, int>> through;
        for (int i = 0; i < arr.size(); ++i) {
            if (i == cand.h0) continue;
            if (arr.hyperplanes[i].side(p) == 0) through.push_back({cross_par[i], i});
        }
        if (through.empty()) return std::nullopt;
        std::sort(through.begin(), through.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        std::vector<int> ms;
        for (auto& [t, i] : through) ms.push_back(i);
        cand.m.push_back(std::move(ms));
    }
    return cand;
}

std::vector<FlagCandidate2D> enumerate_candidates_2d(const Arrangement& arr) {
    IntersectionLattice lat(arr);
    std::vector<Vector> verts;
    for (int i = 0; i < lat.size(); ++i)
        if (lat.flat(i).dim == 0) verts.push_back(lat.flat(i).space.origin);

    std::vector<FlagCandidate2D> out;
    for (int h0 = 0; h0 < arr.size(); ++h0) {
        const Hyperplane& h = arr.hyperplanes[h0];
        Vector u{-h.normal[1], h.normal[0]};
        Scalar nn = dot(h.normal, h.normal);
        for (int o : {1, -1}) {
            for (int s : {1, -1}) {
                // ℓ: s(<n,x> - c) = -δ (o<u,x> - t0), tilted toward the walk
                for (long den = 8; den <= 8 * 64 * 64; den *= 64) {
                    Scalar delta = Scalar::rational(1, den);
                    // t0 below the walk coordinates of everything relevant
                    bool first = true;
                    Scalar lo;
                    for (const auto& p : verts) {
                        // keep every vertex strictly on the positive side:
                        // s(<n,p>-c) + δ(o<u,p> - t0) > 0
                        Scalar bound = Scalar(o) * dot(u, p) + Scalar(s) * h.eval(p) / delta;
                        if (first || bound < lo) lo = bound;
                        first = false;
                    }
                    if (first) break;
                    Scalar t0 = lo - Scalar(1);
                    // ℓ in hyperplane form: s n + δ o u, offset s c + δ t0
                    Hyperplane ell;
                    ell.normal = add(scale(Scalar(s), h.normal), scale(delta * Scalar(o), u));
                    ell.offset = Scalar(s) * h.offset + delta * t0;
                    // crossing of ℓ with h0: o<u,x> = t0 combined with <n,x> = c
                    Matrix sys{Vector{Scalar(o) * u[0], Scalar(o) * u[1]}, h.normal};
                    auto q = solve(sys, Vector{t0, h.offset});
                    if (!q) continue;
                    // base point: step backwards along ℓ from the crossing
                    Vector ldir{-ell.normal[1], ell.normal[0]};
                    Scalar fwd = Scalar(o) * dot(u, ldir);
                    if (fwd.is_zero()) continue;
                    Scalar step = -Scalar::rational(1, den) / fwd;
                    Vector b = add(*q, scale(step, ldir));
                    auto cand = candidate_from_flag(arr, b, ell);
                    if (cand && cand->h0 == h0 && cand->orientation == o && cand->side == s) {
                        out.push_back(std::move(*cand));
                        break;
                    }
                }
            }
        }
    }
    return out;
}

Sectors2D sectors_2d(const Arrangement& arr, const FlagCandidate2D& cand) {
    IntersectionLattice lat(arr);
    Sectors2D out;
    for (int i = 0; i < lat.size(); ++i)
        if (lat.flat(i).dim == 0) out.points.push_back(lat.flat(i).space.origin);

    auto side_of_b = [&](int line) { return arr.hyperplanes[line].side(cand.base); };
    int r = (int)cand.a.size();
    out.sector_of.assign(out.points.size(), 0);
    for (size_t pi = 0; pi < out.points.size(); ++pi) {
        const Vector& p = out.points[pi];
        for (int j = 1; j <= r; ++j) {
            int hprev = j == 1 ? cand.h0 : cand.m[j - 2].back();
            int hmax = cand.m[j - 1].back();
            int sp = arr.hyperplanes[hprev].side(p);
            int sm = arr.hyperplanes[hmax].side(p);
            // Λ_1 uses the closed side of h0; Λ_j (j>1) the open one.
            bool inplus = j == 1 ? (sp == side_of_b(hprev) || sp == 0) : sp == side_of_b(hprev);
            bool inminus = sm != side_of_b(hmax);
            if (inplus && inminus) {
                out.sector_of[pi] = j;
                break;
            }
        }
        if (out.sector_of[pi] == 0) out.covered = false;
    }
    return out;
}

Completeness2D is_complete_2d(const Arrangement& arr, const FlagCandidate2D& cand) {
    Sectors2D sec = sectors_2d(arr, cand);
    Completeness2D out;
    if (!sec.covered) {
        out.complete = false;
        for (size_t pi = 0; pi < sec.points.size(); ++pi)
            if (sec.sector_of[pi] == 0) out.witness_point = (int)pi;
        return out;
    }
    for (size_t pi = 0; pi < sec.points.size(); ++pi) {
        int j = sec.sector_of[pi];
        bool on_mj = false;
        for (int line : cand.m[j - 1])
            if (arr.hyperplanes[line].side(sec.points[pi]) == 0) on_mj = true;
        if (!on_mj) {
            out.complete = false;
            out.witness_point = (int)pi;
            out.witness_sector = j;
            return out;
        }
    }
    return out;
}

FollowupDecision decide_followup_2d(const Arrangement& arr, uint64_t seed, int random_budget) {
    if (arr.dim != 2) throw InputError("decide_followup_2d needs a planar arrangement");
    FollowupDecision dec;
    if (arr.is_central()) {
        dec.followup = true;
        dec.central = true;
        return dec;
    }
    {
        IntersectionLattice lat(arr);
        bool any_vertex = false;
        for (int i = 0; i < lat.size(); ++i) any_vertex |= lat.flat(i).dim == 0;
        if (!any_vertex) {  // parallel pencil: nothing to order
            dec.followup = true;
            return dec;
        }
    }
    std::vector<FlagCandidate2D> cands = enumerate_candidates_2d(arr);
    for (int t = 0; t < random_budget; ++t) {
        try {
            Flag fl = build_flag(arr, seed * 97 + t, 16);
            const auto& v1 = fl.subspaces[1];
            Hyperplane ell;
            Vector dir = v1.basis[0];
            ell.normal = Vector{-dir[1], dir[0]};
            ell.offset = dot(ell.normal, v1.origin);
            auto cand = candidate_from_flag(arr, fl.subspaces[0].origin, ell);
            if (cand) cands.push_back(std::move(*cand));
        } catch (const FlagSearchExhausted&) {
        }
    }
    dec.candidates_examined = (int)cands.size();
    for (auto& cand : cands) {
        if (is_complete_2d(arr, cand).complete) {
            dec.followup = true;
            dec.witness = std::move(cand);
            return dec;
        }
    }
    return dec;
}

std::optional<Filtration> supersolvable_filtration(const Arrangement& arr) {
    if (!arr.is_central()) throw NotCentral("supersolvability is defined for central arrangements");
    if (!arr.is_essential())
        throw InputError("supersolvable_filtration expects an essential arrangement");
    const int m = arr.size();
    if (m > 20) throw LimitExceeded("supersolvable search limited to 20 hyperplanes");
    IntersectionLattice lat(arr);

    std::vector<std::vector<uint64_t>> pair_cover(m, std::vector<uint64_t>(m, 0));
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            int f = closure_flat(lat, (1ull << i) | (1ull << j));
            assert(f >= 0);
            pair_cover[i][j] = lat.flat(f).hyps;
        }
    auto rank_of = [&](uint64_t mask) {
        Matrix rows;
        for (int i = 0; i < m; ++i)
            if ((mask >> i) & 1) rows.push_back(arr.hyperplanes[i].normal);
        return rows.empty() ? 0 : rank(rows);
    };
    auto cover_ok = [&](uint64_t mask, uint64_t sub) {
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                if (((mask >> i) & 1) && ((mask >> j) & 1) && !(pair_cover[i][j] & sub))
                    return false;
        return true;
    };

    std::map<uint64_t, bool> memo;
    std::function<bool(uint64_t, Filtration&)> search = [&](uint64_t mask, Filtration& out) {
        int r = rank_of(mask);
        if (r <= 1) {
            std::vector<int> step;
            for (int i = 0; i < m; ++i)
                if ((mask >> i) & 1) step.push_back(i);
            out.assign(1, step);
            return true;
        }
        auto it = memo.find(mask);
        if (it != memo.end() && !it->second) return false;
        for (uint64_t sub = (mask - 1) & mask; sub; sub = (sub - 1) & mask) {
            if (rank_of(sub) != r - 1) continue;
            if (!cover_ok(mask, sub)) continue;
            Filtration rest;
            if (search(sub, rest)) {
                std::vector<int> step;
                for (int i = 0; i < m; ++i)
                    if ((mask >> i) & 1) step.push_back(i);
                rest.push_back(step);
                out = rest;
                return true;
            }
        }
        memo[mask] = false;
        return false;
    };

    uint64_t full = m == 64 ? ~0ull : (1ull << m) - 1;
    Filtration filt;
    if (!search(full, filt)) return std::nullopt;
    return filt;
}

bool filtration_cover_ok(const Arrangement& arr, const Filtration& filt) {
    IntersectionLattice lat(arr);
    for (size_t s = 0; s < filt.size(); ++s) {
        Matrix rows;
        for (int i : filt[s]) rows.push_back(arr.hyperplanes[i].normal);
        if (rank(rows) != (int)s + 1) return false;
        if (s == 0) continue;
        uint64_t sub = 0;
        for (int i : filt[s - 1]) sub |= 1ull << i;
        for (size_t x = 0; x < filt[s].size(); ++x)
            for (size_t y = x + 1; y < filt[s].size(); ++y) {
                int f = closure_flat(lat, (1ull << filt[s][x]) | (1ull << filt[s][y]));
                if (!(lat.flat(f).hyps & sub)) return false;
            }
        // nested
        std::set<int> cur(filt[s].begin(), filt[s].end());
        for (int i : filt[s - 1])
            if (!cur.count(i)) return false;
    }
    return true;
}

namespace {

// basis adapted to the filtration: A_i uses only the first i coordinates
std::vector<Vector> adapted_basis(const Arrangement& arr, const IntersectionLattice& lat,
                                  const Filtration& filt) {
    const int d = arr.dim;
    std::vector<Vector> w;  // w[0] spans top(A_{d-1}), w grows to the full space
    Matrix have;
    for (int i = d - 1; i >= 0; --i) {
        // T_i = intersection of A_i (for i = 0: the whole space)
        std::vector<Vector> basis;
        if (i == 0) {
            for (int r = 0; r < d; ++r) {
                Vector e(d, Scalar(0));
                e[r] = Scalar(1);
                basis.push_back(std::move(e));
            }
        } else {
            uint64_t mask = 0;
            for (int h : filt[i - 1]) mask |= 1ull << h;
            int f = closure_flat(lat, mask);
            assert(f >= 0 && lat.flat(f).dim == d - i);
            basis = lat.flat(f).space.basis;
        }
        for (const auto& cand : basis) {
            Matrix test = have;
            test.push_back(cand);
            if (rank(test) == (int)have.size() + 1) {
                have.push_back(cand);
                w.push_back(cand);
                if ((int)w.size() == d - i) break;
            }
        }
        assert((int)w.size() == d - i);
    }
    // y-order: reverse so A_i-members are supported on y_1..y_i
    std::reverse(w.begin(), w.end());
    return w;
}

}  // namespace

Flag ssfol_flag(const Arrangement& arr, const Filtration& filt, uint64_t seed, int budget) {
    if (!arr.is_central()) throw NotCentral("ssfol_flag expects a central arrangement");
    const int d = arr.dim;
    if ((int)filt.size() != d) throw InputError("filtration length must equal the rank");
    IntersectionLattice lat(arr);
    std::vector<Vector> u = adapted_basis(arr, lat, filt);

    auto y_to_x = [&](const Vector& y) {
        Vector x(d, Scalar(0));
        for (int r = 0; r < d; ++r)
            for (int i = 0; i < d; ++i) x[i] += y[r] * u[r][i];
        return x;
    };

    int attempt = 0;
    for (int scale_pow = 3; scale_pow <= 14 && attempt < budget; scale_pow += 2) {
        Scalar S = Scalar(1);
        for (int i = 0; i < scale_pow; ++i) S *= Scalar(2);
        for (int round = 0; round < 16 && attempt < budget; ++round, ++attempt) {
            std::mt19937_64 rng(seed * 1315423911ull + attempt);
            auto small = [&]() {
                static const long num[] = {1, 1, 1, 2, 3, 1};
                static const long den[] = {1, 2, 3, 1, 2, 4};
                int i = (int)(rng() % 6);
                long sgn = rng() % 2 ? 1 : -1;
                return Scalar::rational(sgn * num[i], den[i]);
            };

            // V_k in y-coordinates: y_j = sigma_j M_j + sum_{i<=k} a_{ji} y_i, j > k
            std::vector<int> sigma(d + 1);
            std::vector<Scalar> mag(d + 1);
            Matrix shear(d + 1, Vector(d, Scalar(0)));
            Scalar M = Scalar(1);
            for (int j = 1; j <= d; ++j) {
                M = M * S;
                mag[j] = M;
                sigma[j] = rng() % 2 ? 1 : -1;
                for (int i = 0; i < j - 1; ++i) shear[j][i] = small();
            }

            std::vector<AffineSubspace> subs(d + 1);
            for (int k = 0; k <= d; ++k) {
                // parameters: y_1..y_k free; rows j > k fixed by the recurrence
                auto lift = [&](const Vector& t) {
                    Vector y(d, Scalar(0));
                    for (int i = 0; i < k; ++i) y[i] = t[i];
                    for (int j = k + 1; j <= d; ++j) {
                        Scalar v = Scalar(sigma[j]) * mag[j];
                        for (int i = 0; i < j - 1; ++i) v += shear[j][i] * y[i];
                        y[j - 1] = v;
                    }
                    return y;
                };
                AffineSubspace s;
                s.origin = y_to_x(lift(Vector(k, Scalar(0))));
                for (int i = 0; i < k; ++i) {
                    Vector t(k, Scalar(0));
                    t[i] = Scalar(1);
                    s.basis.push_back(sub(y_to_x(lift(t)), s.origin));
                }
                subs[k] = std::move(s);
            }

            FlagReport rep = verify_flag(arr, subs);
            if (!rep.pass) continue;
            try {
                Flag fl = assemble_flag(arr, subs);
                Orderings ords = ssfol_order(fl, filt);
                SegmentatoCheck seg = segmentato_check(fl, filt, ords);
                if (!seg.precedence || !seg.separation) continue;
                if (!is_followup(fl)) continue;
                return fl;
            } catch (const std::exception&) {
                continue;
            }
        }
    }
    throw FlagSearchExhausted("no verified filtration-adapted flag within the budget");
}

Orderings ssfol_order(const Flag& fl, const Filtration& filt) {
    const int d = fl.dim();
    uint64_t sub = 0;  // mask of A_{d-1}
    if (d >= 2)
        for (int i : filt[d - 2]) sub |= 1ull << i;

    Orderings ords;
    ords.push_back(make_ordering(fl, 0, {}));
    for (int k = 1; k <= d; ++k) {
        const FlagLevel& L = fl.levels[k];
        std::vector<int> order = L.pk;
        if (k >= 2 && d >= 2) {
            std::vector<int> group(L.faces.size(), -1);
            for (int v : L.pk) {
                int fa = fl.lat.find(fl.amb.face(L.to_ambient[v]).flat_key);
                int best = -1;
                for (int i = 0; i < (int)ords[k - 1].amb.size(); ++i) {
                    int q = ords[k - 1].amb[i];
                    int fq = fl.lat.find(fl.amb.face(q).flat_key);
                    if (!fl.lat.contains(fq, fa)) continue;
                    if (!generated_by(fl.lat, fq, sub)) continue;
                    best = i;
                    break;
                }
                if (best < 0)
                    throw MissingCover("section point without a covering A_{d-1} point");
                group[v] = best;
            }
            std::sort(order.begin(), order.end(), [&](int x, int y) {
                if (group[x] != group[y]) return group[x] < group[y];
                if (L.vert_h[x] != L.vert_h[y]) return L.vert_h[x] < L.vert_h[y];
                return false;
            });
        }
        Ordering o = make_ordering(fl, k, order);
        Validation val = validate_special_ordering(L, o.verts);
        if (!val.ok)
            throw DegenerateSweep("ssfol ordering failed the sweep validator at level " +
                                  std::to_string(k));
        ords.push_back(std::move(o));
    }
    return ords;
}

SegmentatoCheck segmentato_check(const Flag& fl, const Filtration& filt, const Orderings& ords) {
    SegmentatoCheck out;
    const int d = fl.dim();
    if (d < 2) return out;

    for (size_t step = 1; step < filt.size(); ++step) {
        uint64_t lower = 0, upper = 0;
        for (int i : filt[step - 1]) lower |= 1ull << i;
        for (int i : filt[step]) upper |= 1ull << i;
        for (int k = 1; k <= d; ++k) {
            const FlagLevel& L = fl.levels[k];
            auto classify = [&](int v) {
                int fa = fl.lat.find(fl.amb.face(L.to_ambient[v]).flat_key);
                if (generated_by(fl.lat, fa, lower)) return 0;  // old
                if (generated_by(fl.lat, fa, upper)) return 1;  // new at this step
                return 2;                                       // beyond this step
            };
            // precedence on every common line, in the given ordering
            std::vector<int> pos(L.faces.size(), -1);
            for (int i = 0; i < (int)ords[k].verts.size(); ++i) pos[ords[k].verts[i]] = i;
            for (const auto& line : L.lines) {
                for (int a : line.verts)
                    for (int b : line.verts) {
                        if (classify(a) == 0 && classify(b) == 1 && pos[b] < pos[a])
                            out.precedence = false;
                    }
            }
        }
    }

    // radius separation at the top step: P^k(A_{d-1}) closer to V_0 than the rest
    uint64_t lower = 0;
    for (int i : filt[d - 2]) lower |= 1ull << i;
    const Vector& v0 = fl.subspaces[0].origin;
    for (int k = 1; k <= d - 1; ++k) {
        const FlagLevel& L = fl.levels[k];
        bool have_old = false, have_new = false;
        Scalar max_old, min_new;
        for (int v : L.pk) {
            int fa = fl.lat.find(fl.amb.face(L.to_ambient[v]).flat_key);
            Vector p = L.subspace.from_intrinsic(L.faces.face(v).witness);
            Vector diff = sub(p, v0);
            Scalar dist2 = dot(diff, diff);
            if (generated_by(fl.lat, fa, lower)) {
                if (!have_old || dist2 > max_old) max_old = dist2;
                have_old = true;
            } else {
                if (!have_new || dist2 < min_new) min_new = dist2;
                have_new = true;
            }
        }
        if (have_old && have_new && !(max_old < min_new)) out.separation = false;
    }
    return out;
}

}  // namespace arrmorse
