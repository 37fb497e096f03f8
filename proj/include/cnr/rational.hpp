#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace cnr {

using BigInt = mpz_class;
using BigRational = mpq_class;

struct ZeroScalar : std::runtime_error {
    ZeroScalar() : std::runtime_error("order/initial coefficient undefined for zero") {}
};
struct ZeroPolynomial : std::runtime_error {
    ZeroPolynomial() : std::runtime_error("operation undefined for the zero polynomial") {}
};
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& m) : std::runtime_error("parse error: " + m) {}
};

inline BigRational make_rational(const BigInt& num, const BigInt& den) {
    BigRational q(num, den);
    q.canonicalize();
    return q;
}

inline int sgn(const BigRational& q) { return sgn(q.get_num()); }

// Parses an optionally signed integer starting at s[pos]; advances pos.
BigInt parse_integer(const std::string& s, size_t& pos);

}  // namespace cnr
