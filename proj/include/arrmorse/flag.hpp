#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "arrmorse/faces.hpp"
#include "arrmorse/lattice.hpp"

namespace arrmorse {

struct GeneralPositionViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct FlagSearchExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NoIntersection : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RestrictOptions {
    bool strict = false;          // reject parallel flats and merged traces
    bool want_embedding = true;   // build the section face poset and embedding
};

struct Restriction {
    Arrangement section;             // intrinsic coordinates of the subspace
    std::vector<int> trace_of;       // section hyperplane -> ambient hyperplane
    std::optional<FacePoset> faces;  // faces of the section
    std::vector<int> to_ambient;     // section face id -> ambient face id
};

// A^k := {H ∩ V | H ∈ A} with the embedding of its faces into the ambient poset.
Restriction restrict_arrangement(const Arrangement& arr, const IntersectionLattice& lat,
                                 const FacePoset* ambient, const AffineSubspace& subspace,
                                 const RestrictOptions& opts = {});

// Intersection of a lattice flat with a subspace, in the subspace's intrinsic
// coordinates; nullopt when empty.
std::optional<AffineSubspace> flat_section(const Arrangement& arr, const Flat& flat,
                                           const AffineSubspace& sub);

// Vertex chain of one 1-flat of a section, ordered away from V_{k-1}.
struct SweepLine {
    int amb_flat = -1;            // ambient flat of codimension k-1
    std::vector<int> verts;       // section vertex ids, chain order
    std::vector<int> edges;       // the 1-dimensional faces on the line, walk order;
                                  // edges[i] lies between verts[i-1] and verts[i]
    int back_edge = -1;           // edges[0]: contains the V_{k-1} crossing point
};

struct FlagLevel {
    AffineSubspace subspace;      // dim k, ambient coordinates
    Arrangement section;          // A^k
    std::vector<int> trace_of;
    FacePoset faces;
    std::vector<int> to_ambient;  // section face -> ambient face
    std::vector<int> from_ambient;

    Vector prev_normal;           // V_{k-1} inside V_k, vertices on the positive side
    Scalar prev_offset;
    std::vector<int> ray_sign;    // per section InfRay: sign of <prev_normal, dir>

    std::vector<int> pk;          // P^k in canonical sweep order
    std::vector<int> pk_pos;      // section face id -> index in pk, or -1
    std::vector<Scalar> vert_h;   // per section face id (vertices only)

    std::vector<SweepLine> lines;
    std::vector<std::vector<int>> vert_lines;  // vertex id -> incident line indices

    Scalar height(int face_id) const {  // V_{k-1} functional on a witness
        return dot(prev_normal, faces.face(face_id).witness) - prev_offset;
    }
};

struct FlagCheck {
    std::string name;
    bool pass = true;
    std::string witness;
};

struct FlagReport {
    std::vector<FlagCheck> items;
    bool pass = true;
    void add(const std::string& name, bool ok, const std::string& witness = "") {
        items.push_back({name, ok, witness});
        pass &= ok;
    }
    std::string summary() const;
};

class Flag {
public:
    Arrangement arr;
    FacePoset amb;
    IntersectionLattice lat;
    std::vector<AffineSubspace> subspaces;   // V_0 .. V_d
    std::vector<FlagLevel> levels;           // index k; level 0 carries only V_0 data
    int p0_ambient = -1;                     // ambient face containing V_0
    std::vector<int> amb_min_level;          // k_F per ambient face
    // per level k: ambient flat id (codim k) -> ambient face id of the section point
    std::vector<std::map<int, int>> section_point_face;
    std::vector<std::map<int, Vector>> section_point_coord;

    int dim() const { return arr.dim; }
    // P^k as ambient face ids, canonical order.
    std::vector<int> pk_ambient(int k) const;
    int section_point(int k, int flat_id) const;  // ambient face id; throws NoIntersection
    std::string to_json() const;
    static std::vector<AffineSubspace> subspaces_from_json(const std::string& text, long quad_n);
};

// Builds all derived data; hard structural failures throw GeneralPositionViolation.
Flag assemble_flag(const Arrangement& arr, std::vector<AffineSubspace> subspaces);

// Itemized exact verification of every flag invariant. Never throws on a
// merely invalid flag; structural failures are reported as failed items.
FlagReport verify_flag(const Arrangement& arr, const std::vector<AffineSubspace>& subspaces);

// Deterministic seeded search for a verified flag (top-down placement, each
// V_{k-1} beyond all vertices of A^k).
Flag build_flag(const Arrangement& arr, uint64_t seed, int retry_budget = 64);

}  // namespace arrmorse
