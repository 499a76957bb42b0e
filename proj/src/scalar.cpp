#include "arrmorse/scalar.hpp"

#include <cmath>

namespace arrmorse {

std::string rat_str(const mpq_class& q) {
    std::string s = q.get_num().get_str();
    if (q.get_den() != 1) s += "/" + q.get_den().get_str();
    return s;
}

mpq_class parse_rat(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    mpq_class v;
    if (v.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal: " + s);
    v.canonicalize();
    return v;
}

std::string Scalar::str() const {
    if (b_ == 0) return rat_str(a_);
    std::string root = "sqrt(" + std::to_string(n_) + ")";
    std::string bterm = (b_ == 1 ? "" : b_ == -1 ? "-" : rat_str(b_) + "*");
    if (b_ == -1) bterm = "-";
    std::string tail = (b_ == 1 || b_ == -1) ? bterm + root : bterm + root;
    if (a_ == 0) return tail;
    if (sgn(b_) > 0)
        return rat_str(a_) + "+" + (b_ == 1 ? root : rat_str(b_) + "*" + root);
    mpq_class nb = -b_;
    return rat_str(a_) + "-" + (nb == 1 ? root : rat_str(nb) + "*" + root);
}

Scalar Scalar::parse(const std::string& in) {
    std::string s;
    for (char c : in)
        if (!isspace((unsigned char)c)) s += c;
    if (s.empty()) throw std::invalid_argument("empty scalar literal");

    auto parse_sqrt_term = [](const std::string& t, mpq_class& b, long& n) -> bool {
        // forms: sqrt(n), -sqrt(n), b*sqrt(n)
        auto pos = t.find("sqrt(");
        if (pos == std::string::npos) return false;
        if (t.back() != ')') throw std::invalid_argument("bad sqrt term: " + t);
        n = std::stol(t.substr(pos + 5, t.size() - pos - 6));
        std::string coef = t.substr(0, pos);
        if (!coef.empty() && coef.back() == '*') coef.pop_back();
        if (coef.empty())
            b = 1;
        else if (coef == "-")
            b = -1;
        else
            b = parse_rat(coef);
        return true;
    };

    // split at a top-level '+' or '-' (not at position 0) that separates the
    // rational part from the sqrt term
    if (s.find("sqrt(") != std::string::npos) {
        for (size_t i = 1; i < s.size(); ++i) {
            if ((s[i] == '+' || s[i] == '-') && s.find("sqrt(", i) != std::string::npos &&
                s.rfind("sqrt(", i) == std::string::npos && s[i - 1] != '/' && s[i - 1] != '*' &&
                s[i - 1] != '+' && s[i - 1] != '-') {
                mpq_class a = parse_rat(s.substr(0, i));
                mpq_class b;
                long n = 0;
                std::string tail = s.substr(i + 1);
                if (!parse_sqrt_term(tail, b, n))
                    throw std::invalid_argument("bad scalar literal: " + in);
                if (s[i] == '-') b = -b;
                return Scalar(a, b, n);
            }
        }
        mpq_class b;
        long n = 0;
        if (!parse_sqrt_term(s, b, n)) throw std::invalid_argument("bad scalar literal: " + in);
        return Scalar(0, b, n);
    }
    return Scalar(parse_rat(s));
}

}  // namespace arrmorse
