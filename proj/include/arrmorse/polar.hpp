#pragma once

#include "arrmorse/sweep.hpp"

namespace arrmorse {

// Chain key of a face: the key of its smallest facet followed by the pair
// (codim, position of the same-support section point), bottoming out at the
// section points themselves. Lexicographic comparison realizes the total
// order; a shorter key that is a prefix sorts first.
using PolarKey = std::vector<std::pair<int, int>>;

struct PolarOrder {
    std::vector<PolarKey> key;    // per ambient face id
    std::vector<int> rank;        // ⊲-position per ambient face id
    std::vector<int> by_rank;     // inverse
    bool less(int f, int g) const { return rank[f] < rank[g]; }
};

// Whether F belongs to 𝓟 (meets V_{codim F}).
bool in_p(const Flag& fl, int face);

PolarOrder build_polar_order(const Flag& fl, const Orderings& ords);

// ⊲-least facet of F; nullopt for faces of maximal codimension.
std::optional<int> min_facet(const FacePoset& poset, const PolarOrder& po, int face);

struct FaceSignature {
    int k = 0;
    int j = 0;  // 1-based flip index; 0 at level 0; |P^k|+1 if never crossed
};
FaceSignature signature(const Flag& fl, const Orderings& ords, int face);

// (k,j)-lexicographic precedence must imply ⊲; returns a counterexample pair.
std::optional<std::pair<int, int>> check_trilex(const Flag& fl, const Orderings& ords,
                                                const PolarOrder& po);

struct RuleViolation {
    int rule;  // 1..5
    int f, g;
    std::string detail;
};
// Independent audit of the defining rules of the total order.
std::vector<RuleViolation> check_cinque_rules(const Flag& fl, const Orderings& ords,
                                              const PolarOrder& po);

struct NotConsecutive : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Both faces consecutive in ⤳^k and every common lower bound ⊲-before both.
bool c_independent(const Flag& fl, const Orderings& ords, const PolarOrder& po, int f1_amb,
                   int f2_amb);

// Transpose two c-independent consecutive section points.
Orderings apply_switch(const Flag& fl, const Orderings& ords, int f1_amb, int f2_amb);

// Graph on all special orderings of level k with switch edges.
bool switch_graph_connected(const Flag& fl, int k, size_t limit);

}  // namespace arrmorse
