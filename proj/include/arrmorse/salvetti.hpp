#pragma once

#include "arrmorse/polar.hpp"

namespace arrmorse {

// k-cells are pairs [C ≼ F] with C a chamber and codim(F) = k.
struct SalvettiComplex {
    const FacePoset* poset = nullptr;
    std::vector<std::pair<int, int>> cells;  // (chamber, face)
    std::vector<int> cell_dim;
    std::vector<std::vector<int>> boundary;    // cell -> boundary cells one dim down
    std::vector<std::vector<int>> coboundary;  // transpose
    std::map<std::pair<int, int>, int> index;

    int size() const { return (int)cells.size(); }
    int find(int chamber, int face) const {
        auto it = index.find({chamber, face});
        return it == index.end() ? -1 : it->second;
    }
    std::vector<int> dim_count() const;
    long euler_characteristic() const;
};

SalvettiComplex build_salvetti(const FacePoset& poset);

// Pair list of an acyclic matching candidate; σ is one dimension below τ.
struct Matching {
    std::vector<std::pair<int, int>> pairs;  // (sigma, tau)
    std::vector<int> partner;                // cell -> matched cell or -1
    std::vector<int> critical;               // unmatched cells
    std::vector<int> critical_per_dim;
};

// Φ(⊲): [C,F] with F outside 𝓟 is sent up to [C,F'] along the minimal facet,
// unless some G between C and F has G' = F.
Matching polar_matching(const SalvettiComplex& sc, const PolarOrder& po, const Flag& fl);

struct MatchingReport {
    bool is_matching = true;
    bool acyclic = true;
    std::string detail;
    bool pass() const { return is_matching && acyclic; }
};
MatchingReport verify_matching(const SalvettiComplex& sc,
                               const std::vector<std::pair<int, int>>& pairs);

// Critical-cell formula: F ∩ V_k nonempty and F the ⊲-maximum of [C, F].
std::vector<int> critical_cells_t6(const SalvettiComplex& sc, const PolarOrder& po,
                                   const Flag& fl);

// Review-style transcription of the matching ((a) F2 ⊲ F1 and (b) lower faces
// before F1); kept as a cross-check of the production definition.
Matching polar_matching_review(const SalvettiComplex& sc, const PolarOrder& po, const Flag& fl);

struct MinimalityReport {
    std::vector<long> critical;
    std::vector<long> betti;
    bool pass = false;
    std::string to_json() const;
};
MinimalityReport minimality_report(const Arrangement& arr, const Flag& fl,
                                   const Orderings& ords);

}  // namespace arrmorse
