#pragma once

#include <functional>

#include "arrmorse/flag.hpp"

namespace arrmorse {

struct NotNearError : std::runtime_error {
    int line = -1;     // line index in the level
    int blocker = -1;  // blocking vertex (section face id)
    NotNearError(const std::string& msg, int l, int b)
        : std::runtime_error(msg), line(l), blocker(b) {}
};
struct LimitExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DegenerateSweep : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Prefix of flipped vertices; encodes the moving pseudohyperplane H̃^k_j.
struct SweepState {
    std::vector<int> order;    // flipped vertices (section face ids), flip order
    std::vector<char> swept;   // indexed by section face id

    static SweepState initial(const FlagLevel& L) {
        SweepState s;
        s.swept.assign(L.faces.size(), 0);
        return s;
    }
    int steps() const { return (int)order.size(); }
    bool operator==(const SweepState& o) const {
        return order == o.order && swept == o.swept;
    }
};

// Sign of the moving pseudohyperplane on a face: + not yet reached, - passed,
// 0 crossed. Ends of cl(F): vertices (swept -, unswept +) and recession
// directions (side of V_{k-1} at infinity).
int extension_sign(const FlagLevel& L, const SweepState& st, int face);

std::vector<int> crossed_faces(const FlagLevel& L, const SweepState& st);
// P^k_j: the crossed 1-dimensional faces.
std::vector<int> crossed_edges(const FlagLevel& L, const SweepState& st);

// X(p): crossed faces whose closure contains p.
std::vector<int> sweep_zone(const FlagLevel& L, const SweepState& st, int p);
// C(p) = {X in X(p) : op_p(X) not in X(p)}.
std::vector<int> flip_removed(const FlagLevel& L, const SweepState& st, int p);

// Chain criterion: every vertex before p on a line through p is swept.
bool is_near(const FlagLevel& L, const SweepState& st, int p);
struct NearBlock {
    int line;
    int blocker;
};
std::optional<NearBlock> near_blocker(const FlagLevel& L, const SweepState& st, int p);
std::vector<int> near_set(const FlagLevel& L, const SweepState& st);

// Definition-level cross-check: the crossing face of the pseudohyperplane on
// every line through p agrees with p's signs away from p's hyperplanes, and p
// is first-unswept on each of those lines.
bool is_near_oracle(const FlagLevel& L, const SweepState& st, int p);

// Edge of the chain currently crossed by the pseudohyperplane on a line.
int crossing_edge_on_line(const FlagLevel& L, const SweepState& st, int line);

SweepState flip(const FlagLevel& L, const SweepState& st, int p);  // throws NotNearError

struct Validation {
    bool ok = true;
    int fail_index = -1;
    int line = -1;
    int blocker = -1;
};
Validation validate_special_ordering(const FlagLevel& L, const std::vector<int>& order,
                                     bool use_oracle = false);

std::vector<std::vector<int>> enumerate_special_orderings(const FlagLevel& L, size_t limit);

// Permutation of P^k; stored both as section face ids and ambient face ids.
struct Ordering {
    int level = 0;
    std::vector<int> verts;  // section face ids (empty at level 0)
    std::vector<int> amb;    // ambient face ids
    int pos_of_amb(int a) const {
        for (int i = 0; i < (int)amb.size(); ++i)
            if (amb[i] == a) return i;
        return -1;
    }
};
using Orderings = std::vector<Ordering>;  // one per level 0..d

Ordering make_ordering(const Flag& fl, int level, std::vector<int> section_verts);
// The parallel-translation sweep: P^k sorted by the V_{k-1} functional.
Orderings canonical_orderings(const Flag& fl);

// ⤳^k_0 on P^k_0: image of the level-(k-1) ordering under the embedding.
std::vector<int> initial_section_ordering(const Flag& fl, int k, const Ordering& lower);

// Def-style reordering of the crossed edges after flipping p: survivors keep
// their order, new edges enter reverse to the lower-level order of their
// section points, right after the pivot boundary point.
std::vector<int> induced_ordering(const Flag& fl, int k, const SweepState& before,
                                  const std::vector<int>& ord_prev, const Ordering& lower,
                                  int p);

// Linear-extension check of an ordering of the section points of H^k_j against
// the per-line paths of the section (meaningful for k <= 3).
Validation validate_section_ordering(const Flag& fl, int k, const SweepState& st,
                                     const std::vector<int>& ord);

}  // namespace arrmorse
