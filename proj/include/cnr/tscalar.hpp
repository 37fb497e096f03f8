#pragma once

#include <string>

#include "cnr/tpoly.hpp"

namespace cnr {

// Element of Q(t): a ratio num/den of t-polynomials, den != 0.  Reduction to
// lowest terms is lazy; order and initial coefficient only need valuations,
// which survive common factors.
class TScalar {
public:
    TScalar() : num_(), den_(BigRational(1)) {}
    TScalar(int v) : num_(BigRational(v)), den_(BigRational(1)) {}  // NOLINT(google-explicit-constructor)
    explicit TScalar(const BigRational& v) : num_(v), den_(BigRational(1)) {}
    explicit TScalar(const TPoly& num) : num_(num), den_(BigRational(1)) {}
    TScalar(const TPoly& num, const TPoly& den);

    static TScalar t_power(int e);  // t^e, e may be negative

    bool is_zero() const { return num_.is_zero(); }
    const TPoly& num() const { return num_; }
    const TPoly& den() const { return den_; }

    TScalar operator-() const;
    TScalar operator+(const TScalar& o) const;
    TScalar operator-(const TScalar& o) const;
    TScalar operator*(const TScalar& o) const;
    TScalar operator/(const TScalar& o) const;
    TScalar& operator+=(const TScalar& o) { *this = *this + o; return *this; }
    TScalar& operator-=(const TScalar& o) { *this = *this - o; return *this; }
    TScalar& operator*=(const TScalar& o) { *this = *this * o; return *this; }
    TScalar& operator/=(const TScalar& o) { *this = *this / o; return *this; }
    bool operator==(const TScalar& o) const;
    bool operator!=(const TScalar& o) const { return !(*this == o); }

    TScalar inverse() const;

    // Valuation at t=0; additive under multiplication.  Throws ZeroScalar on 0.
    int order() const;
    // Coefficient of t^order() in the Laurent expansion at t=0.
    BigRational initial_coefficient() const;

    // Divide out gcd(num, den); den becomes a primitive integer polynomial
    // with positive leading coefficient.
    void reduce();
    TScalar reduced() const { TScalar r = *this; r.reduce(); return r; }

    bool is_rational() const;           // lies in Q after reduction
    BigRational rational_value() const; // requires is_rational()

    std::string str() const;
    static TScalar parse(const std::string& s);

private:
    void reduce_if_large();
    TPoly num_, den_;
};

inline TScalar operator*(const BigRational& c, const TScalar& s) { return TScalar(c) * s; }

int order(const TScalar& c);
BigRational initial_coefficient(const TScalar& c);

}  // namespace cnr
