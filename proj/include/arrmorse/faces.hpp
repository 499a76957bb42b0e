#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "arrmorse/arrangement.hpp"

namespace arrmorse {

using Signs = std::vector<int8_t>;  // entries in {-1,0,+1}, indexed by hyperplane

std::string signs_str(const Signs& s);

// Open stratum of the arrangement; witness is an exact relative-interior point.
struct Face {
    Signs signs;
    int codim = 0;
    Vector witness;
    std::string flat_key;            // canonical key of the support flat
    std::vector<int> cl_vertices;    // vertices of the closure (face ids)
    std::vector<int> rays;           // conforming 1-dim recession directions (ids)
};

// 1-dimensional face of the recession fan, with an exact direction vector.
struct InfRay {
    Signs signs;   // on the arrangement's hyperplanes
    Vector dir;
};

// All faces of an essential arrangement, ordered by reverse closure inclusion
// and ranked by codimension. Face ids are indices in lexicographic sign order,
// deterministic given the hyperplane order.
class FacePoset {
public:
    FacePoset() = default;
    explicit FacePoset(Arrangement a);

    const Arrangement& arrangement() const { return arr_; }
    int dim() const { return arr_.dim; }
    int size() const { return (int)faces_.size(); }
    const Face& face(int id) const { return faces_[id]; }
    const std::vector<Face>& faces() const { return faces_; }
    const std::vector<InfRay>& rays() const { return rays_; }
    const std::vector<int>& chambers() const { return chambers_; }
    const std::vector<int>& vertices() const { return vertices_; }
    const std::vector<int>& of_codim(int k) const { return by_codim_[k]; }

    int find(const Signs& s) const;
    int locate(const Vector& x) const;  // face whose relative interior contains x

    // F ≼ G: cl(F) ⊇ cl(G), i.e. G's signs conform to F's.
    bool leq(int f, int g) const;
    // Facets of F: faces G with F ≼ G and codim(G) = codim(F)+1.
    std::vector<int> facets(int f) const;
    // Faces G of codim(F)-1 with G ≼ F.
    std::vector<int> cofacets(int f) const;
    bool is_bounded(int f) const { return faces_[f].rays.empty(); }

    // op_G(F): negate F on every hyperplane containing G. Requires F ≼ G.
    int opposite(int f, int g) const;

private:
    Arrangement arr_;
    std::vector<Face> faces_;
    std::vector<InfRay> rays_;
    std::unordered_map<std::string, int> by_signs_;
    std::vector<int> chambers_, vertices_;
    std::vector<std::vector<int>> by_codim_;
};

struct NotIncidentError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace arrmorse
