#include "arrmorse/arrangement.hpp"

#include <json.hpp>

namespace arrmorse {

bool Hyperplane::same_set(const Hyperplane& o) const {
    if (normal.size() != o.normal.size()) return false;
    Matrix rows = {normal, o.normal};
    rows[0].push_back(offset);
    rows[1].push_back(o.offset);
    return rank(rows) == 1;
}

Arrangement::Arrangement(int d, std::vector<Hyperplane> hs, long n)
    : dim(d), quad_n(n), hyperplanes(std::move(hs)) {
    for (const auto& h : hyperplanes) {
        if ((int)h.normal.size() != d) throw InputError("hyperplane dimension mismatch");
        if (vec_is_zero(h.normal)) throw InputError("hyperplane with zero normal");
    }
    for (size_t i = 0; i < hyperplanes.size(); ++i)
        for (size_t j = i + 1; j < hyperplanes.size(); ++j)
            if (hyperplanes[i].same_set(hyperplanes[j]))
                throw InputError("duplicate hyperplanes at indices " + std::to_string(i) + "," +
                                 std::to_string(j));
}

bool Arrangement::is_central() const {
    Matrix a;
    Vector b;
    for (const auto& h : hyperplanes) {
        a.push_back(h.normal);
        b.push_back(h.offset);
    }
    return solve(a, b).has_value();
}

bool Arrangement::is_essential() const {
    Matrix a;
    for (const auto& h : hyperplanes) a.push_back(h.normal);
    return rank(a) == dim;
}

std::string Arrangement::to_json() const {
    nlohmann::json j;
    j["dim"] = dim;
    j["scalar"] = quad_n == 0 ? "rational" : "quadratic:" + std::to_string(quad_n);
    j["hyperplanes"] = nlohmann::json::array();
    for (const auto& h : hyperplanes) {
        nlohmann::json hj;
        hj["normal"] = nlohmann::json::array();
        for (const auto& c : h.normal) hj["normal"].push_back(c.str());
        hj["offset"] = h.offset.str();
        j["hyperplanes"].push_back(hj);
    }
    return j.dump(2);
}

Arrangement Arrangement::from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("json parse error: ") + e.what());
    }
    try {
        int d = j.at("dim").get<int>();
        long n = 0;
        std::string mode = j.value("scalar", "rational");
        if (mode.rfind("quadratic:", 0) == 0) n = std::stol(mode.substr(10));
        else if (mode != "rational") throw InputError("unknown scalar mode: " + mode);
        std::vector<Hyperplane> hs;
        for (const auto& hj : j.at("hyperplanes")) {
            Hyperplane h;
            for (const auto& c : hj.at("normal")) h.normal.push_back(Scalar::parse(c.get<std::string>()));
            h.offset = Scalar::parse(hj.at("offset").get<std::string>());
            hs.push_back(std::move(h));
        }
        return Arrangement(d, std::move(hs), n);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("bad arrangement json: ") + e.what());
    }
}

Arrangement essentialize(const Arrangement& arr) {
    Matrix normals;
    for (const auto& h : arr.hyperplanes) normals.push_back(h.normal);
    std::vector<Vector> lin = nullspace(normals);
    if (lin.empty()) return arr;
    // coordinates on a complement of the lineality: keep the pivot coordinates
    // of the row space
    Matrix m = normals;
    std::vector<int> piv = rref(m);
    int e = (int)piv.size();
    std::vector<Hyperplane> hs;
    for (const auto& h : arr.hyperplanes) {
        Hyperplane nh;
        nh.offset = h.offset;
        nh.normal.resize(e);
        // basis vectors of the section: unit vectors on pivot coordinates
        for (int j = 0; j < e; ++j) nh.normal[j] = h.normal[piv[j]];
        hs.push_back(std::move(nh));
    }
    return Arrangement(e, std::move(hs), arr.quad_n);
}

Hyperplane make_hyperplane(std::vector<long> normal, long offset) {
    Hyperplane h;
    for (long v : normal) h.normal.push_back(Scalar(v));
    h.offset = Scalar(offset);
    return h;
}

}  // namespace arrmorse
