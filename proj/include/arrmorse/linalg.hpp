#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arrmorse/scalar.hpp"

namespace arrmorse {

using Matrix = std::vector<Vector>;

Scalar dot(const Vector& x, const Vector& y);
Vector add(const Vector& x, const Vector& y);
Vector sub(const Vector& x, const Vector& y);
Vector scale(const Scalar& c, const Vector& x);
bool vec_is_zero(const Vector& x);
std::string vec_str(const Vector& x);

// Reduced row echelon form in place; returns pivot column indices.
std::vector<int> rref(Matrix& m);

int rank(Matrix m);

// Solution basis of A x = 0.
std::vector<Vector> nullspace(const Matrix& a);

// One solution of A x = b, if consistent.
std::optional<Vector> solve(const Matrix& a, const Vector& b);

// Affine subspace {origin + span(basis)}; basis vectors are independent.
struct AffineSubspace {
    Vector origin;
    std::vector<Vector> basis;

    int dim() const { return (int)basis.size(); }
    int ambient_dim() const { return (int)origin.size(); }
    Vector from_intrinsic(const Vector& t) const;
    // Coordinates t with origin + B t = x; nullopt if x is outside.
    std::optional<Vector> to_intrinsic(const Vector& x) const;
    bool contains(const Vector& x) const { return to_intrinsic(x).has_value(); }
};

// Solution set of the affine system {<normals[i],x> = offsets[i]}.
std::optional<AffineSubspace> solve_affine(const Matrix& normals, const Vector& offsets);

// Unique canonical key for the solution set (RREF of the augmented system).
std::string affine_system_key(Matrix normals, Vector offsets);

// Canonical key for a linear subspace given as a span (RREF of the span).
std::string span_key(Matrix gens);

// Scale so the first nonzero entry is +1.
void canonicalize_direction(Vector& v);

}  // namespace arrmorse
