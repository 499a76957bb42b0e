#include "arrmorse/linalg.hpp"

#include <cassert>

namespace arrmorse {

Scalar dot(const Vector& x, const Vector& y) {
    assert(x.size() == y.size());
    Scalar s;
    for (size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

Vector add(const Vector& x, const Vector& y) {
    Vector r(x);
    for (size_t i = 0; i < x.size(); ++i) r[i] += y[i];
    return r;
}

Vector sub(const Vector& x, const Vector& y) {
    Vector r(x);
    for (size_t i = 0; i < x.size(); ++i) r[i] -= y[i];
    return r;
}

Vector scale(const Scalar& c, const Vector& x) {
    Vector r(x);
    for (auto& v : r) v *= c;
    return r;
}

bool vec_is_zero(const Vector& x) {
    for (const auto& v : x)
        if (!v.is_zero()) return false;
    return true;
}

std::string vec_str(const Vector& x) {
    std::string s = "(";
    for (size_t i = 0; i < x.size(); ++i) {
        if (i) s += ",";
        s += x[i].str();
    }
    return s + ")";
}

std::vector<int> rref(Matrix& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t pr = r;
        while (pr < rows && m[pr][c].is_zero()) ++pr;
        if (pr == rows) continue;
        std::swap(m[r], m[pr]);
        Scalar inv = Scalar(1) / m[r][c];
        for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            Scalar f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back((int)c);
        ++r;
    }
    m.resize(r);  // drop zero rows
    return pivots;
}

int rank(Matrix m) { return (int)rref(m).size(); }

std::vector<Vector> nullspace(const Matrix& a) {
    if (a.empty()) return {};
    size_t cols = a[0].size();
    Matrix m = a;
    std::vector<int> piv = rref(m);
    std::vector<bool> is_piv(cols, false);
    for (int c : piv) is_piv[c] = true;
    std::vector<Vector> basis;
    for (size_t f = 0; f < cols; ++f) {
        if (is_piv[f]) continue;
        Vector v(cols, Scalar(0));
        v[f] = Scalar(1);
        for (size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -m[i][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vector> solve(const Matrix& a, const Vector& b) {
    if (a.empty()) return Vector{};
    size_t cols = a[0].size();
    Matrix aug = a;
    for (size_t i = 0; i < a.size(); ++i) aug[i].push_back(b[i]);
    std::vector<int> piv = rref(aug);
    if (!piv.empty() && piv.back() == (int)cols) return std::nullopt;  // inconsistent
    Vector x(cols, Scalar(0));
    for (size_t i = 0; i < piv.size(); ++i) x[piv[i]] = aug[i][cols];
    return x;
}

Vector AffineSubspace::from_intrinsic(const Vector& t) const {
    assert(t.size() == basis.size());
    Vector x = origin;
    for (size_t j = 0; j < basis.size(); ++j)
        for (size_t i = 0; i < x.size(); ++i) x[i] += t[j] * basis[j][i];
    return x;
}

std::optional<Vector> AffineSubspace::to_intrinsic(const Vector& x) const {
    // solve B t = x - origin, columns of B = basis vectors
    size_t n = origin.size();
    Matrix a(n, Vector(basis.size(), Scalar(0)));
    for (size_t j = 0; j < basis.size(); ++j)
        for (size_t i = 0; i < n; ++i) a[i][j] = basis[j][i];
    return solve(a, sub(x, origin));
}

std::optional<AffineSubspace> solve_affine(const Matrix& normals, const Vector& offsets) {
    if (normals.empty()) throw std::invalid_argument("solve_affine: no equations");
    auto x0 = solve(normals, offsets);
    if (!x0) return std::nullopt;
    AffineSubspace s;
    s.origin = *x0;
    s.basis = nullspace(normals);
    return s;
}

std::string affine_system_key(Matrix normals, Vector offsets) {
    for (size_t i = 0; i < normals.size(); ++i) normals[i].push_back(offsets[i]);
    rref(normals);
    std::string key;
    for (const auto& row : normals) key += vec_str(row) + ";";
    return key;
}

std::string span_key(Matrix gens) {
    rref(gens);
    std::string key;
    for (const auto& row : gens) key += vec_str(row) + ";";
    return key;
}

void canonicalize_direction(Vector& v) {
    for (const auto& c : v) {
        if (c.is_zero()) continue;
        Scalar inv = Scalar(1) / c;
        for (auto& x : v) x *= inv;
        return;
    }
}

}  // namespace arrmorse
