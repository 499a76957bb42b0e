#pragma once

#include "arrmorse/salvetti.hpp"

namespace arrmorse {

struct NotCentral : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct MissingCover : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Follow-up ordering of 𝓟: level by level, grouped by the smallest
// lower-level section point whose support contains the face, groups walked
// outward along their support line.
Orderings followup_order(const Flag& fl);

// Whether the flag's follow-up ordering is special at every level.
bool is_followup(const Flag& fl);

// 2D flag (b, ℓ) with derived walk data along the base line h0.
struct FlagCandidate2D {
    int h0 = -1;
    int orientation = 0;           // walk direction along h0
    int side = 0;                  // side of h0 holding the base chamber
    Vector base;                   // b
    Hyperplane ell;                // ℓ
    std::vector<Vector> a;         // a_j, ordered away from b
    std::vector<std::vector<int>> m;  // M_j: lines through a_j by ℓ-crossing order
    std::vector<AffineSubspace> subspaces() const;  // V_0 ⊂ V_1 ⊂ V_2
};

// Exact candidate from an explicit (b, ℓ); nullopt when (b, ℓ) is not a valid
// 2D flag of the required shape.
std::optional<FlagCandidate2D> candidate_from_flag(const Arrangement& arr, const Vector& b,
                                                   const Hyperplane& ell);

// Deterministic enumeration (h0 × orientation × side) with exact placement.
std::vector<FlagCandidate2D> enumerate_candidates_2d(const Arrangement& arr);

struct Sectors2D {
    // sector index per vertex: j >= 1 for Λ_j, 0 if uncovered
    std::vector<Vector> points;
    std::vector<int> sector_of;
    bool covered = true;
};
Sectors2D sectors_2d(const Arrangement& arr, const FlagCandidate2D& cand);

struct Completeness2D {
    bool complete = true;
    int witness_point = -1;  // index into Sectors2D::points
    int witness_sector = -1;
};
Completeness2D is_complete_2d(const Arrangement& arr, const FlagCandidate2D& cand);

struct FollowupDecision {
    bool followup = false;
    bool central = false;
    std::optional<FlagCandidate2D> witness;
    int candidates_examined = 0;
};
FollowupDecision decide_followup_2d(const Arrangement& arr, uint64_t seed = 0,
                                    int random_budget = 4);

// Supersolvable filtration A_1 ⊂ ... ⊂ A_d as hyperplane index sets.
using Filtration = std::vector<std::vector<int>>;
std::optional<Filtration> supersolvable_filtration(const Arrangement& arr);

// Whether condition (2) holds between consecutive steps (used as an oracle).
bool filtration_cover_ok(const Arrangement& arr, const Filtration& filt);

// Flag adapted to a supersolvable filtration: verified general position and
// one-side conditions plus the separation of the A_{d-1} points.
Flag ssfol_flag(const Arrangement& arr, const Filtration& filt, uint64_t seed = 0,
                int budget = 200);

// Special orderings grouped by the minimal lower-level A_{d-1} point.
Orderings ssfol_order(const Flag& fl, const Filtration& filt);

struct SegmentatoCheck {
    bool precedence = true;   // old points before new points on common lines
    bool separation = true;   // radius-R split of P^k(A_{d-1}) from the rest
};
SegmentatoCheck segmentato_check(const Flag& fl, const Filtration& filt,
                                 const Orderings& ords);

}  // namespace arrmorse
