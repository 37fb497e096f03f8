#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cnr/apolarity.hpp"
#include "cnr/degree.hpp"
#include "cnr/tscalar.hpp"

namespace cnr {

struct NotInKernel : std::runtime_error {
    NotInKernel() : std::runtime_error("vector is not in the kernel of A") {}
};

// Monomial x^a y^b in K[x_1..x_n, y_1..y_n].
struct XYMonomial {
    std::vector<int> a, b;

    XYMonomial() = default;
    explicit XYMonomial(int n) : a(n, 0), b(n, 0) {}

    int n() const { return static_cast<int>(a.size()); }
    // deg(x_i) = e_i, deg(y_i) = e_0 + e_i
    DegreeVector degree() const;
    XYMonomial operator*(const XYMonomial& o) const;
    bool operator==(const XYMonomial& o) const { return a == o.a && b == o.b; }
    bool operator<(const XYMonomial& o) const { return a != o.a ? a < o.a : b < o.b; }

    std::string str() const;  // factors sorted by index, x before y: "x1 y3 x6^2"
    static XYMonomial parse(const std::string& s, int n);
};

class XYPolynomial {
public:
    XYPolynomial() = default;
    explicit XYPolynomial(int n) : n_(n) {}

    int n() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<XYMonomial, TScalar>& terms() const { return terms_; }
    void add_term(const XYMonomial& m, const TScalar& c);

    XYPolynomial operator+(const XYPolynomial& o) const;
    XYPolynomial operator-(const XYPolynomial& o) const;
    XYPolynomial operator*(const XYPolynomial& o) const;
    XYPolynomial scaled(const TScalar& c) const;
    bool operator==(const XYPolynomial& o) const { return n_ == o.n_ && terms_ == o.terms_; }

    // All terms share one multidegree?
    bool is_homogeneous() const;
    DegreeVector degree() const;  // of the first term; requires nonzero

    std::string str() const;

private:
    int n_ = 0;
    std::map<XYMonomial, TScalar> terms_;
};

// in(f): the unique term whose coefficient has minimal order, if unique.
// NotMoneric is a value, not an error: the Gr(2,5) classifier discards ties.
struct InitialForm {
    bool moneric = false;
    XYMonomial monomial;
    int order = 0;
    BigRational coefficient;           // initial coefficient of the winning term
    std::vector<XYMonomial> tied;      // populated when not moneric
};

InitialForm initial_form(const XYPolynomial& f);

// Throws ZeroPolynomial on 0.  Returns the monomial when moneric.
std::optional<XYMonomial> initial_monomial(const XYPolynomial& f);

// f(x, y + s*(lambda o x)) == f(x, y) as an identity in x, y, s, for each
// basis vector lambda of G.
bool nagata_invariance(const XYPolynomial& f, const std::vector<std::vector<TScalar>>& g_basis);
// Same, after checking A*lambda = 0 for every basis vector.
bool nagata_invariance(const XYPolynomial& f, const TConfig& cfg,
                       const std::vector<std::vector<TScalar>>& g_basis);

}  // namespace cnr
