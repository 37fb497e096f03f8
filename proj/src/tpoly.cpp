#include "cnr/tpoly.hpp"

#include <algorithm>
#include <cctype>

namespace cnr {

BigInt parse_integer(const std::string& s, size_t& pos) {
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
    size_t digits = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == digits) throw ParseError("expected integer in '" + s + "' at " + std::to_string(start));
    return BigInt(s.substr(start, pos - start));
}

TPoly::TPoly(const BigRational& c, int exp) {
    if (c == 0) return;
    if (exp < 0) throw ParseError("negative exponent in t-polynomial");
    coef_.assign(exp + 1, BigRational(0));
    coef_[exp] = c;
}

void TPoly::trim() {
    while (!coef_.empty() && coef_.back() == 0) coef_.pop_back();
}

int TPoly::valuation() const {
    if (is_zero()) throw ZeroPolynomial();
    for (size_t k = 0; k < coef_.size(); ++k)
        if (coef_[k] != 0) return static_cast<int>(k);
    throw ZeroPolynomial();
}

int TPoly::term_count() const {
    int n = 0;
    for (const auto& c : coef_) n += (c != 0);
    return n;
}

const BigRational& TPoly::operator[](int k) const {
    static const BigRational kZero(0);
    if (k < 0 || k > degree()) return kZero;
    return coef_[k];
}

void TPoly::set(int exp, const BigRational& c) {
    if (exp >= static_cast<int>(coef_.size())) coef_.resize(exp + 1, BigRational(0));
    coef_[exp] = c;
    trim();
}

TPoly TPoly::operator-() const {
    TPoly r = *this;
    for (auto& c : r.coef_) c = -c;
    return r;
}

TPoly TPoly::operator+(const TPoly& o) const {
    TPoly r;
    r.coef_.resize(std::max(coef_.size(), o.coef_.size()), BigRational(0));
    for (size_t k = 0; k < coef_.size(); ++k) r.coef_[k] = coef_[k];
    for (size_t k = 0; k < o.coef_.size(); ++k) r.coef_[k] += o.coef_[k];
    r.trim();
    return r;
}

TPoly TPoly::operator-(const TPoly& o) const {
    TPoly r;
    r.coef_.resize(std::max(coef_.size(), o.coef_.size()), BigRational(0));
    for (size_t k = 0; k < coef_.size(); ++k) r.coef_[k] = coef_[k];
    for (size_t k = 0; k < o.coef_.size(); ++k) r.coef_[k] -= o.coef_[k];
    r.trim();
    return r;
}

TPoly TPoly::operator*(const TPoly& o) const {
    if (is_zero() || o.is_zero()) return TPoly();
    TPoly r;
    r.coef_.assign(coef_.size() + o.coef_.size() - 1, BigRational(0));
    for (size_t i = 0; i < coef_.size(); ++i) {
        if (coef_[i] == 0) continue;
        for (size_t j = 0; j < o.coef_.size(); ++j) {
            if (o.coef_[j] == 0) continue;
            r.coef_[i + j] += coef_[i] * o.coef_[j];
        }
    }
    r.trim();
    return r;
}

TPoly TPoly::scaled(const BigRational& c) const {
    if (c == 0) return TPoly();
    TPoly r = *this;
    for (auto& x : r.coef_) x *= c;
    return r;
}

TPoly TPoly::shifted(int exp) const {
    if (is_zero()) return TPoly();
    if (exp == 0) return *this;
    TPoly r;
    if (exp > 0) {
        r.coef_.assign(coef_.size() + exp, BigRational(0));
        for (size_t k = 0; k < coef_.size(); ++k) r.coef_[k + exp] = coef_[k];
    } else {
        if (valuation() < -exp) throw ParseError("shift below t^0");
        r.coef_.assign(coef_.begin() - exp, coef_.end());
    }
    return r;
}

TPoly TPoly::divexact(const TPoly& d) const {
    if (d.is_zero()) throw ZeroPolynomial();
    if (is_zero()) return TPoly();
    TPoly rem = *this;
    TPoly q;
    q.coef_.assign(std::max<int>(degree() - d.degree() + 1, 0), BigRational(0));
    while (!rem.is_zero() && rem.degree() >= d.degree()) {
        int k = rem.degree() - d.degree();
        BigRational c = rem.leading() / d.leading();
        q.coef_[k] = c;
        // rem -= c t^k d, done in place
        for (int j = 0; j <= d.degree(); ++j)
            rem.coef_[j + k] -= c * d.coef_[j];
        rem.trim();
        if (!rem.is_zero() && rem.degree() >= d.degree() + k)
            throw std::logic_error("divexact: degree did not drop");
    }
    if (!rem.is_zero()) throw std::logic_error("divexact: nonzero remainder");
    q.trim();
    return q;
}

BigRational TPoly::content() const {
    if (is_zero()) return BigRational(0);
    BigInt num_gcd(0), den_lcm(1);
    for (const auto& c : coef_) {
        if (c == 0) continue;
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    return make_rational(num_gcd, den_lcm);
}

TPoly TPoly::primitive_part() const {
    if (is_zero()) return TPoly();
    BigRational c = content();
    if (sgn(leading()) < 0) c = -c;
    return scaled(BigRational(1) / c);
}

TPoly TPoly::gcd(const TPoly& a, const TPoly& b) {
    if (a.is_zero()) return b.is_zero() ? TPoly() : b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    // Primitive Euclidean remainder sequence; cheap at the degrees seen here.
    TPoly f = a.primitive_part(), g = b.primitive_part();
    if (f.degree() < g.degree()) std::swap(f, g);
    while (!g.is_zero()) {
        // pseudo-remainder of f by g
        TPoly rem = f;
        while (!rem.is_zero() && rem.degree() >= g.degree()) {
            BigRational c = rem.leading() / g.leading();
            int k = rem.degree() - g.degree();
            for (int j = 0; j <= g.degree(); ++j)
                rem.coef_[j + k] -= c * g.coef_[j];
            rem.trim();
        }
        f = g;
        g = rem.is_zero() ? TPoly() : rem.primitive_part();
    }
    return f.primitive_part();
}

BigRational TPoly::eval(const BigRational& x) const {
    BigRational v(0);
    for (int k = degree(); k >= 0; --k) v = v * x + coef_[k];
    return v;
}

std::string TPoly::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = 0; k <= degree(); ++k) {
        const BigRational& c = coef_[k];
        if (c == 0) continue;
        bool first = out.empty();
        std::string mag;
        BigRational ac = abs(c);
        if (k == 0) {
            mag = ac.get_str();
        } else {
            if (ac != 1) mag = ac.get_str();
            mag += "t";
            if (k != 1) mag += "^" + std::to_string(k);
        }
        if (sgn(c) < 0) out += "-";
        else if (!first) out += "+";
        out += mag;
    }
    return out;
}

TPoly TPoly::parse(const std::string& s, size_t& pos, bool stop_at_slash) {
    TPoly p;
    bool any = false;
    while (pos < s.size()) {
        char ch = s[pos];
        if (ch == ' ') { ++pos; continue; }
        if (ch == ')' || (stop_at_slash && ch == '/')) break;
        // term: [+-]? [int [/int]?]? [t [^int]?]
        int sign = 1;
        if (ch == '+') { ++pos; }
        else if (ch == '-') { sign = -1; ++pos; }
        else if (any) throw ParseError("expected '+' or '-' in '" + s + "'");
        while (pos < s.size() && s[pos] == ' ') ++pos;
        BigRational coeff(1);
        bool have_coeff = false;
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            BigInt num = parse_integer(s, pos);
            BigInt den(1);
            // A '/' directly between integers is a rational coefficient, as in "3/2t";
            // at the top level of a scalar "3/2" the caller splits first.
            if (!stop_at_slash && pos < s.size() && s[pos] == '/' &&
                pos + 1 < s.size() && std::isdigit(static_cast<unsigned char>(s[pos + 1]))) {
                ++pos;
                den = parse_integer(s, pos);
            }
            coeff = make_rational(num, den);
            have_coeff = true;
        }
        if (pos < s.size() && s[pos] == '*') ++pos;
        int exp = 0;
        if (pos < s.size() && s[pos] == 't') {
            ++pos;
            exp = 1;
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                BigInt e = parse_integer(s, pos);
                if (e < 0 || e > 1000000) throw ParseError("exponent out of range");
                exp = static_cast<int>(e.get_si());
            }
        } else if (!have_coeff) {
            throw ParseError("expected term in '" + s + "' at " + std::to_string(pos));
        }
        p += TPoly(BigRational(sign) * coeff, exp);
        any = true;
    }
    if (!any) throw ParseError("empty polynomial in '" + s + "'");
    return p;
}

TPoly TPoly::parse(const std::string& s) {
    size_t pos = 0;
    TPoly p = parse(s, pos, false);
    if (pos != s.size()) throw ParseError("trailing characters in '" + s + "'");
    return p;
}

}  // namespace cnr
