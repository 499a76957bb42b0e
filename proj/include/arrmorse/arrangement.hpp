#pragma once

#include <string>
#include <vector>

#include "arrmorse/linalg.hpp"

namespace arrmorse {

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// {x : <normal,x> = offset}; the positive side is <normal,x> > offset.
struct Hyperplane {
    Vector normal;
    Scalar offset;

    Scalar eval(const Vector& x) const { return dot(normal, x) - offset; }
    int side(const Vector& x) const { return eval(x).sign(); }
    // Equal as point sets (proportional by a nonzero factor).
    bool same_set(const Hyperplane& o) const;
};

struct Arrangement {
    int dim = 0;
    long quad_n = 0;  // 0 = rational scalars, else radicand of the extension
    std::vector<Hyperplane> hyperplanes;

    Arrangement() = default;
    Arrangement(int d, std::vector<Hyperplane> hs, long n = 0);

    int size() const { return (int)hyperplanes.size(); }
    bool is_central() const;
    bool is_essential() const;  // normals span the ambient space

    std::string to_json() const;
    static Arrangement from_json(const std::string& text);
};

// Quotient by the common lineality so the result is essential.
Arrangement essentialize(const Arrangement& arr);

// Convenience builders used by fixtures and tests.
Hyperplane make_hyperplane(std::vector<long> normal, long offset);

}  // namespace arrmorse
