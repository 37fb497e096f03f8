#pragma once

#include <string>
#include <vector>

#include "cnr/rational.hpp"

namespace cnr {

// Polynomial in the deformation parameter t with rational coefficients.
// Stored densely by exponent; the zero polynomial is the empty vector and
// the top coefficient is always nonzero.
class TPoly {
public:
    TPoly() = default;
    explicit TPoly(const BigRational& c) { if (c != 0) coef_ = {c}; }
    TPoly(const BigRational& c, int exp);  // c * t^exp
    static TPoly t(int exp = 1) { return TPoly(BigRational(1), exp); }

    bool is_zero() const { return coef_.empty(); }
    int degree() const { return static_cast<int>(coef_.size()) - 1; }
    // Lowest exponent carrying a nonzero coefficient; requires a nonzero polynomial.
    int valuation() const;
    int term_count() const;
    const BigRational& operator[](int k) const;
    const BigRational& leading() const { return coef_.back(); }
    const std::vector<BigRational>& coefficients() const { return coef_; }
    void set(int exp, const BigRational& c);

    TPoly operator-() const;
    TPoly operator+(const TPoly& o) const;
    TPoly operator-(const TPoly& o) const;
    TPoly operator*(const TPoly& o) const;
    TPoly& operator+=(const TPoly& o) { *this = *this + o; return *this; }
    TPoly& operator-=(const TPoly& o) { *this = *this - o; return *this; }
    TPoly& operator*=(const TPoly& o) { *this = *this * o; return *this; }
    bool operator==(const TPoly& o) const { return coef_ == o.coef_; }
    bool operator!=(const TPoly& o) const { return coef_ != o.coef_; }

    TPoly scaled(const BigRational& c) const;
    TPoly shifted(int exp) const;  // multiply by t^exp, exp >= -valuation

    // Exact division; throws if the division leaves a remainder.
    TPoly divexact(const TPoly& d) const;

    // Positive rational c such that (*this)/c has coprime integer coefficients.
    BigRational content() const;
    // this == content()*sign(leading)*primitive(); primitive has positive leading coefficient.
    TPoly primitive_part() const;

    static TPoly gcd(const TPoly& a, const TPoly& b);

    BigRational eval(const BigRational& x) const;

    std::string str() const;                        // e.g. "t^2-t^4", "-3t+1", "0"
    static TPoly parse(const std::string& s);       // inverse of str()
    static TPoly parse(const std::string& s, size_t& pos, bool stop_at_slash);

private:
    void trim();
    std::vector<BigRational> coef_;
};

}  // namespace cnr
