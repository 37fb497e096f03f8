#include "cnr/tscalar.hpp"

namespace cnr {


TScalar::TScalar(const TPoly& num, const TPoly& den) : num_(num), den_(den) {
    if (den_.is_zero()) throw ZeroScalar();
    if (num_.is_zero()) { den_ = TPoly(BigRational(1)); return; }
    reduce_if_large();
}

TScalar TScalar::t_power(int e) {
    if (e >= 0) return TScalar(TPoly::t(e));
    return TScalar(TPoly(BigRational(1)), TPoly::t(-e));
}

TScalar TScalar::operator-() const {
    TScalar r = *this;
    r.num_ = -r.num_;
    return r;
}

TScalar TScalar::operator+(const TScalar& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    return TScalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

TScalar TScalar::operator-(const TScalar& o) const {
    if (o.is_zero()) return *this;
    return TScalar(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

TScalar TScalar::operator*(const TScalar& o) const {
    if (is_zero() || o.is_zero()) return TScalar();
    return TScalar(num_ * o.num_, den_ * o.den_);
}

TScalar TScalar::operator/(const TScalar& o) const {
    if (o.is_zero()) throw ZeroScalar();
    if (is_zero()) return TScalar();
    return TScalar(num_ * o.den_, den_ * o.num_);
}

TScalar TScalar::inverse() const {
    if (is_zero()) throw ZeroScalar();
    return TScalar(den_, num_);
}

bool TScalar::operator==(const TScalar& o) const {
    return (num_ * o.den_) == (o.num_ * den_);
}

int TScalar::order() const {
    if (is_zero()) throw ZeroScalar();
    return num_.valuation() - den_.valuation();
}

BigRational TScalar::initial_coefficient() const {
    if (is_zero()) throw ZeroScalar();
    return num_[num_.valuation()] / den_[den_.valuation()];
}

void TScalar::reduce() {
    if (num_.is_zero()) { den_ = TPoly(BigRational(1)); return; }
    // Common t-power first, it is free.
    int v = std::min(num_.valuation(), den_.valuation());
    if (v > 0) { num_ = num_.shifted(-v); den_ = den_.shifted(-v); }
    if (den_.degree() > 0) {
        TPoly g = TPoly::gcd(num_, den_);
        if (g.degree() > 0) { num_ = num_.divexact(g); den_ = den_.divexact(g); }
    }
    // den primitive integer with positive leading coefficient
    BigRational c = den_.content();
    if (sgn(den_.leading()) < 0) c = -c;
    num_ = num_.scaled(BigRational(1) / c);
    den_ = den_.scaled(BigRational(1) / c);
}

void TScalar::reduce_if_large() {
    // Only the common t-power is stripped eagerly; full gcd reduction is
    // deferred to printing and explicit reduce() calls, since orders,
    // initial coefficients and equality never need it.
    if (den_.degree() <= 0 || num_.is_zero()) return;
    int v = std::min(num_.valuation(), den_.valuation());
    if (v > 0) {
        num_ = num_.shifted(-v);
        den_ = den_.shifted(-v);
    }
}

bool TScalar::is_rational() const {
    if (is_zero()) return true;
    TScalar r = reduced();
    return r.num_.degree() <= 0 && r.den_.degree() <= 0;
}

BigRational TScalar::rational_value() const {
    if (is_zero()) return BigRational(0);
    TScalar r = reduced();
    if (r.num_.degree() > 0 || r.den_.degree() > 0)
        throw std::logic_error("scalar is not in Q: " + str());
    return r.num_[0] / r.den_[0];
}

std::string TScalar::str() const {
    TScalar r = reduced();
    // scale so both parts have integer coefficients
    BigRational cn = r.num_.content();   // den is already primitive integer
    BigInt mult = cn.get_den();
    TPoly num = r.num_.scaled(BigRational(mult));
    TPoly den = r.den_.scaled(BigRational(mult));
    if (den == TPoly(BigRational(1))) return num.str();
    std::string ns = num.str(), ds = den.str();
    if (num.term_count() > 1) ns = "(" + ns + ")";
    if (den.term_count() > 1 || den.degree() >= 1) ds = "(" + ds + ")";
    return ns + "/" + ds;
}

TScalar TScalar::parse(const std::string& s) {
    size_t pos = 0;
    auto skip_ws = [&] { while (pos < s.size() && s[pos] == ' ') ++pos; };
    auto parse_part = [&]() -> TPoly {
        skip_ws();
        if (pos < s.size() && s[pos] == '(') {
            ++pos;
            TPoly p = TPoly::parse(s, pos, false);
            if (pos >= s.size() || s[pos] != ')') throw ParseError("missing ')' in '" + s + "'");
            ++pos;
            return p;
        }
        return TPoly::parse(s, pos, /*stop_at_slash=*/true);
    };
    TPoly num = parse_part();
    skip_ws();
    TPoly den(BigRational(1));
    if (pos < s.size() && s[pos] == '/') {
        ++pos;
        den = parse_part();
        skip_ws();
    }
    if (pos != s.size()) throw ParseError("trailing characters in scalar '" + s + "'");
    TScalar r(num, den);
    r.reduce();
    return r;
}

int order(const TScalar& c) { return c.order(); }
BigRational initial_coefficient(const TScalar& c) { return c.initial_coefficient(); }

}  // namespace cnr
