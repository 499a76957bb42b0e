#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arrmorse/arrangement.hpp"

namespace arrmorse {

// Intersection flat; hyps is the full set of hyperplanes containing it.
struct Flat {
    AffineSubspace space;
    uint64_t hyps = 0;  // bitmask over hyperplane indices
    int dim = 0;
    std::string key;
    long mobius = 0;
};

// All nonempty intersections, ordered by reverse inclusion (whole space is
// the bottom element, index 0), with Möbius values and derived invariants.
class IntersectionLattice {
public:
    IntersectionLattice() = default;
    explicit IntersectionLattice(const Arrangement& arr);

    int size() const { return (int)flats_.size(); }
    const Flat& flat(int id) const { return flats_[id]; }
    const std::vector<Flat>& flats() const { return flats_; }
    int find(const std::string& key) const;
    int find_by_mask(uint64_t mask) const;
    int rank() const { return rank_; }
    const std::vector<int>& of_codim(int k) const { return by_codim_[k]; }

    // X ⊇ Y as subspaces.
    bool contains(int x, int y) const {
        return (flats_[x].hyps & ~flats_[y].hyps) == 0;
    }

    // χ(t) coefficients, charpoly()[k] multiplies t^k.
    const std::vector<long>& charpoly() const { return charpoly_; }
    // b_k = Σ_{codim X = k} |μ(X)|.
    const std::vector<long>& betti() const { return betti_; }
    long chamber_count() const;          // Zaslavsky: (-1)^d χ(-1)
    long bounded_chamber_count() const;  // (-1)^d χ(1)

private:
    int ambient_dim_ = 0;
    int rank_ = 0;
    std::vector<Flat> flats_;
    std::vector<std::vector<int>> by_codim_;
    std::vector<long> charpoly_, betti_;
};

}  // namespace arrmorse
