#include "thickset/surd.hpp"

#include <sstream>

namespace thickset {

Rat parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(text));
        Int num(text.substr(0, slash));
        Int den(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rat(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed rational: '" + text + "'");
    }
}

std::string rational_str(const Rat& q) {
    std::ostringstream os;
    os << numerator(q);
    if (denominator(q) != 1) os << "/" << denominator(q);
    return os.str();
}

Surd::Surd(Int p, Int q, Int r, unsigned d) : p_(std::move(p)), q_(std::move(q)), r_(std::move(r)), d_(d) {
    if (r_ == 0) throw std::invalid_argument("Surd: zero denominator");
    if (is_square(Int(d))) throw std::invalid_argument("Surd: radicand must be nonsquare");
    normalize();
}

void Surd::normalize() {
    if (r_ < 0) {
        p_ = -p_;
        q_ = -q_;
        r_ = -r_;
    }
    Int g = int_gcd(int_gcd(p_ < 0 ? -p_ : p_, q_ < 0 ? -q_ : q_), r_);
    if (g > 1) {
        p_ /= g;
        q_ /= g;
        r_ /= g;
    }
}

Surd Surd::from_rational(const Rat& v, unsigned d) {
    return Surd(numerator(v), 0, denominator(v), d);
}

Rat Surd::as_rational() const {
    if (q_ != 0) throw std::invalid_argument("Surd: irrational value has no rational form");
    return Rat(p_, r_);
}

int Surd::sign() const {
    // sign of p + q*sqrt(d); the denominator is positive.
    if (q_ == 0) return p_ == 0 ? 0 : (p_ > 0 ? 1 : -1);
    if (p_ == 0) return q_ > 0 ? 1 : -1;
    if (p_ > 0 && q_ > 0) return 1;
    if (p_ < 0 && q_ < 0) return -1;
    // Opposite signs: compare p^2 against d*q^2. Equality cannot occur
    // for nonsquare d and q != 0.
    Int lhs = p_ * p_;
    Int rhs = Int(d_) * q_ * q_;
    if (p_ > 0) return lhs > rhs ? 1 : -1;
    return lhs > rhs ? -1 : 1;
}

Surd Surd::operator+(const Surd& o) const {
    if (d_ != o.d_) throw std::invalid_argument("Surd: mixed radicands");
    return Surd(p_ * o.r_ + o.p_ * r_, q_ * o.r_ + o.q_ * r_, r_ * o.r_, d_);
}

Surd Surd::operator-(const Surd& o) const { return *this + (-o); }

Surd Surd::operator-() const { return Surd(-p_, -q_, r_, d_); }

Surd Surd::scaled(const Rat& v) const {
    return Surd(p_ * numerator(v), q_ * numerator(v), r_ * denominator(v), d_);
}

Int Surd::floor() const {
    // floor(q*sqrt(d)) first, then adjust: sqrt(q^2 d) is never integral
    // for q != 0 since d is nonsquare.
    Int a;
    if (q_ == 0) {
        a = 0;
    } else if (q_ > 0) {
        a = isqrt(q_ * q_ * Int(d_));
    } else {
        a = -isqrt(q_ * q_ * Int(d_)) - 1;
    }
    Int f = floor_div(p_ + a, r_);
    // (p + q sqrt d)/r may still reach f+1; at most two corrections.
    while ((*this - Rat(f + 1)).sign() >= 0) ++f;
    while ((*this - Rat(f)).sign() < 0) --f;
    return f;
}

Surd Surd::reduced_mod1() const {
    Surd half_up = *this + Rat(1, 2);
    Int n = half_up.floor();
    return *this - Rat(n);
}

std::string Surd::str() const {
    std::ostringstream os;
    os << "(" << p_ << "+" << q_ << "*sqrt(" << d_ << "))/" << r_;
    return os.str();
}

Surd Surd::parse(const std::string& text) {
    // Expected shape: (p+q*sqrt(d))/r
    auto fail = [&]() -> Surd { throw std::invalid_argument("malformed surd: '" + text + "'"); };
    if (text.empty() || text[0] != '(') return fail();
    auto plus = text.find("+", 1);
    auto star = text.find("*sqrt(", plus);
    auto close1 = text.find(")", star + 6);
    auto slash = text.find(")/", close1);
    if (plus == std::string::npos || star == std::string::npos || close1 == std::string::npos ||
        slash == std::string::npos)
        return fail();
    try {
        Int p(text.substr(1, plus - 1));
        Int q(text.substr(plus + 1, star - plus - 1));
        unsigned d = static_cast<unsigned>(std::stoul(text.substr(star + 6, close1 - star - 6)));
        Int r(text.substr(slash + 2));
        return Surd(p, q, r, d);
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception&) {
        return fail();
    }
}

Surd circle_distance(const Surd& a, const Surd& b) {
    return (a - b).reduced_mod1().abs();
}

std::vector<Convergent> sqrt_convergents(unsigned d, const Int& denominator_bound) {
    if (is_square(Int(d))) throw std::invalid_argument("sqrt_convergents: square radicand");
    // Standard periodic continued fraction of sqrt(d):
    //   a0 = floor(sqrt(d)); m,k recurrences below.
    Int a0 = isqrt(Int(d));
    Int m = 0, k = 1, a = a0;
    Int h_prev = 1, h = a0;  // numerators
    Int q_prev = 0, q = 1;   // denominators
    std::vector<Convergent> out;
    out.push_back({h, q});
    while (q <= denominator_bound) {
        m = k * a - m;
        k = (Int(d) - m * m) / k;
        a = floor_div(a0 + m, k);
        Int h_next = a * h + h_prev;
        Int q_next = a * q + q_prev;
        h_prev = h;
        q_prev = q;
        h = h_next;
        q = q_next;
        if (q > denominator_bound) break;
        out.push_back({h, q});
    }
    return out;
}

}  // namespace thickset
