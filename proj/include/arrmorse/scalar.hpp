#pragma once

#include <gmpxx.h>

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace arrmorse {

// Element of an exact ordered field: either a rational, or a + b*sqrt(n)
// with a fixed square-free n > 1. Invariant: b == 0 implies n == 0, so
// rationals mix freely with any extension.
class Scalar {
public:
    Scalar() : a_(0), b_(0), n_(0) {}
    Scalar(long v) : a_(v), b_(0), n_(0) {}
    Scalar(const mpq_class& v) : a_(v), b_(0), n_(0) {}
    Scalar(mpq_class a, mpq_class b, long n) : a_(std::move(a)), b_(std::move(b)), n_(n) {
        a_.canonicalize();
        b_.canonicalize();
        if (b_ == 0) n_ = 0;
        if (n_ < 0 || (b_ != 0 && n_ <= 1))
            throw std::invalid_argument("Scalar: radicand must be a square-free integer > 1");
    }

    static Scalar rational(long p, long q) {
        mpq_class v(p, q);
        v.canonicalize();
        return Scalar(v);
    }
    static Scalar sqrt_term(const mpq_class& b, long n) { return Scalar(0, b, n); }

    const mpq_class& rat_part() const { return a_; }
    const mpq_class& irr_part() const { return b_; }
    long radicand() const { return n_; }
    bool is_rational() const { return b_ == 0; }

    int sign() const {
        if (b_ == 0) return sgn(a_);
        if (a_ == 0) return sgn(b_);
        int sa = sgn(a_), sb = sgn(b_);
        if (sa == sb) return sa;
        mpq_class lhs = a_ * a_, rhs = b_ * b_ * n_;
        if (lhs == rhs)
            throw std::logic_error("Scalar: sqrt(n) rational, radicand not square-free");
        return lhs > rhs ? sa : sb;
    }
    bool is_zero() const { return a_ == 0 && b_ == 0; }

    Scalar operator-() const { return Scalar(-a_, -b_, n_); }
    Scalar operator+(const Scalar& o) const {
        long n = merged_n(o);
        return Scalar(a_ + o.a_, b_ + o.b_, n);
    }
    Scalar operator-(const Scalar& o) const {
        long n = merged_n(o);
        return Scalar(a_ - o.a_, b_ - o.b_, n);
    }
    Scalar operator*(const Scalar& o) const {
        long n = merged_n(o);
        return Scalar(a_ * o.a_ + b_ * o.b_ * n, a_ * o.b_ + b_ * o.a_, n);
    }
    Scalar operator/(const Scalar& o) const {
        if (o.is_zero()) throw std::domain_error("Scalar: division by zero");
        long n = merged_n(o);
        // 1/(a+b*sqrt(n)) = (a-b*sqrt(n))/(a^2-b^2 n)
        mpq_class den = o.a_ * o.a_ - o.b_ * o.b_ * n;
        Scalar num(a_ * o.a_ - b_ * o.b_ * n, b_ * o.a_ - a_ * o.b_, n);
        return Scalar(num.a_ / den, num.b_ / den, n);
    }
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    bool operator==(const Scalar& o) const { return (*this - o).is_zero(); }
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    bool operator<(const Scalar& o) const { return (*this - o).sign() < 0; }
    bool operator>(const Scalar& o) const { return (*this - o).sign() > 0; }
    bool operator<=(const Scalar& o) const { return (*this - o).sign() <= 0; }
    bool operator>=(const Scalar& o) const { return (*this - o).sign() >= 0; }

    Scalar abs() const { return sign() < 0 ? -*this : *this; }

    double to_double() const {
        double v = a_.get_d();
        if (b_ != 0) v += b_.get_d() * std::sqrt((double)n_);
        return v;
    }

    std::string str() const;
    static Scalar parse(const std::string& s);

private:
    long merged_n(const Scalar& o) const {
        if (n_ == 0) return o.n_;
        if (o.n_ == 0 || o.n_ == n_) return n_;
        throw std::invalid_argument("Scalar: mixing incompatible radicands");
    }

    mpq_class a_, b_;
    long n_;
};

using Vector = std::vector<Scalar>;

std::string rat_str(const mpq_class& q);
mpq_class parse_rat(const std::string& s);

}  // namespace arrmorse
