#pragma once

#include "thickset/numeric.hpp"

#include <string>
#include <vector>

namespace thickset {

/// Exact real of the form (p + q*sqrt(d)) / r with integer p, q and r > 0,
/// d a fixed nonsquare natural. All comparisons reduce to integer sign
/// tests; no floating point is consulted anywhere.
class Surd {
public:
    Surd() : p_(0), q_(0), r_(1), d_(2) {}
    Surd(Int p, Int q, Int r, unsigned d);

    static Surd from_rational(const Rat& v, unsigned d);
    static Surd root(unsigned d) { return Surd(0, 1, 1, d); }

    const Int& p() const { return p_; }
    const Int& q() const { return q_; }
    const Int& r() const { return r_; }
    unsigned d() const { return d_; }

    bool is_rational() const { return q_ == 0; }
    Rat as_rational() const;

    /// Sign of the represented real: -1, 0 or +1.
    int sign() const;

    Surd operator+(const Surd& o) const;
    Surd operator-(const Surd& o) const;
    Surd operator-() const;
    Surd operator+(const Rat& v) const { return *this + from_rational(v, d_); }
    Surd operator-(const Rat& v) const { return *this - from_rational(v, d_); }
    Surd scaled(const Rat& v) const;  // multiply by a rational

    int compare(const Surd& o) const { return (*this - o).sign(); }
    int compare(const Rat& v) const { return (*this - v).sign(); }
    bool operator<(const Surd& o) const { return compare(o) < 0; }
    bool operator==(const Surd& o) const { return p_ == o.p_ && q_ == o.q_ && r_ == o.r_; }

    /// Largest integer <= value.
    Int floor() const;

    /// Representative in the fundamental domain [-1/2, 1/2) of R/Z.
    Surd reduced_mod1() const;

    /// |value|, assuming the value is already in [-1/2, 1/2): distance to 0 on the circle.
    Surd abs() const { return sign() < 0 ? -*this : *this; }

    /// Exact serialization "(p+q*sqrt(d))/r".
    std::string str() const;

    /// Parses the output of str(). Throws on malformed input.
    static Surd parse(const std::string& text);

private:
    void normalize();
    Int p_, q_, r_;
    unsigned d_;
};

/// Circle distance between two values of R/Z given by representatives.
Surd circle_distance(const Surd& a, const Surd& b);

struct Convergent {
    Int numerator;
    Int denominator;
};

/// Continued-fraction convergents p/q of sqrt(d), in order, until the
/// denominator exceeds `denominator_bound`. d must be nonsquare.
std::vector<Convergent> sqrt_convergents(unsigned d, const Int& denominator_bound);

}  // namespace thickset
