#include "arrmorse/lattice.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace arrmorse {

IntersectionLattice::IntersectionLattice(const Arrangement& arr) {
    ambient_dim_ = arr.dim;
    const int m = arr.size();
    if (m > 62) throw InputError("intersection lattice limited to 62 hyperplanes");

    auto containing_mask = [&](const AffineSubspace& s) {
        uint64_t mask = 0;
        for (int i = 0; i < m; ++i) {
            const auto& h = arr.hyperplanes[i];
            if (!h.eval(s.origin).is_zero()) continue;
            bool in = true;
            for (const auto& b : s.basis) in &= dot(h.normal, b).is_zero();
            if (in) mask |= 1ull << i;
        }
        return mask;
    };

    Flat top;
    top.space.origin = Vector(arr.dim, Scalar(0));
    for (int i = 0; i < arr.dim; ++i) {
        Vector e(arr.dim, Scalar(0));
        e[i] = Scalar(1);
        top.space.basis.push_back(std::move(e));
    }
    top.hyps = 0;
    top.dim = arr.dim;
    top.key = "";
    flats_.push_back(std::move(top));
    std::map<uint64_t, int> by_mask{{0, 0}};

    for (size_t head = 0; head < flats_.size(); ++head) {
        for (int i = 0; i < m; ++i) {
            if (flats_[head].hyps & (1ull << i)) continue;
            Matrix sys;
            Vector rhs;
            for (int j = 0; j < m; ++j)
                if ((flats_[head].hyps >> j) & 1) {
                    sys.push_back(arr.hyperplanes[j].normal);
                    rhs.push_back(arr.hyperplanes[j].offset);
                }
            sys.push_back(arr.hyperplanes[i].normal);
            rhs.push_back(arr.hyperplanes[i].offset);
            auto sp = solve_affine(sys, rhs);
            if (!sp) continue;
            uint64_t mask = containing_mask(*sp);
            if (by_mask.count(mask)) continue;
            Flat f;
            f.space = std::move(*sp);
            f.hyps = mask;
            f.dim = f.space.dim();
            {
                Matrix zn;
                Vector zc;
                for (int j = 0; j < m; ++j)
                    if ((mask >> j) & 1) {
                        zn.push_back(arr.hyperplanes[j].normal);
                        zc.push_back(arr.hyperplanes[j].offset);
                    }
                f.key = affine_system_key(zn, zc);
            }
            by_mask[mask] = (int)flats_.size();
            flats_.push_back(std::move(f));
        }
    }

    std::sort(flats_.begin() + 1, flats_.end(), [&](const Flat& a, const Flat& b) {
        if (a.dim != b.dim) return a.dim > b.dim;
        return a.key < b.key;
    });

    by_codim_.assign(arr.dim + 1, {});
    for (int i = 0; i < (int)flats_.size(); ++i)
        by_codim_[arr.dim - flats_[i].dim].push_back(i);
    rank_ = 0;
    for (const auto& f : flats_) rank_ = std::max(rank_, arr.dim - f.dim);

    // Möbius by recursion down the reverse-inclusion order
    for (int i = 0; i < (int)flats_.size(); ++i) {
        long mu = i == 0 ? 1 : 0;
        for (int j = 0; j < i; ++j)
            if (contains(j, i)) mu -= flats_[j].mobius;
        if (i == 0) mu = 1;
        flats_[i].mobius = mu;
    }

    charpoly_.assign(ambient_dim_ + 1, 0);
    for (const auto& f : flats_) charpoly_[f.dim] += f.mobius;
    betti_.assign(rank_ + 1, 0);
    for (const auto& f : flats_) betti_[ambient_dim_ - f.dim] += std::abs(f.mobius);
}

int IntersectionLattice::find(const std::string& key) const {
    for (int i = 0; i < (int)flats_.size(); ++i)
        if (flats_[i].key == key) return i;
    return -1;
}

int IntersectionLattice::find_by_mask(uint64_t mask) const {
    for (int i = 0; i < (int)flats_.size(); ++i)
        if (flats_[i].hyps == mask) return i;
    return -1;
}

long IntersectionLattice::chamber_count() const {
    long v = 0, sign = 1;
    // χ(-1) = Σ c_k (-1)^k
    for (int k = 0; k <= ambient_dim_; ++k) {
        v += (k % 2 == 0 ? 1 : -1) * charpoly_[k];
    }
    sign = ambient_dim_ % 2 == 0 ? 1 : -1;
    return sign * v;
}

long IntersectionLattice::bounded_chamber_count() const {
    long v = 0;
    for (int k = 0; k <= ambient_dim_; ++k) v += charpoly_[k];
    long sign = ambient_dim_ % 2 == 0 ? 1 : -1;
    long r = sign * v;
    return r < 0 ? -r : r;
}

}  // namespace arrmorse
