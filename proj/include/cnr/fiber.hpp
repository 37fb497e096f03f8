#pragma once

#include "cnr/cone.hpp"
#include "cnr/xypoly.hpp"

namespace cnr {

struct UnboundedFiber : std::runtime_error {
    UnboundedFiber() : std::runtime_error("fiber coordinate unbounded; wrong degree map") {}
};

// Change of variables (a,b) -> (r, u, w): r = sum(b), u = a + b, and w runs
// over the b-exponents of the occurring y-variables minus one dependent one.
struct DegreeMap {
    int n = 0;
    std::vector<int> y_vars;  // 0-based indices of y-variables present, sorted
    int dependent = 0;        // position in y_vars of the dependent coordinate

    int fiber_dim() const { return static_cast<int>(y_vars.size()) - 1; }
    int ambient() const { return 1 + n + fiber_dim(); }
    std::vector<BigInt> embed(const XYMonomial& m) const;
};

// Degree map for a moneric initial-monomial set; dependent_yvar picks the
// dependent b-coordinate (0-based variable index; -1 = first occurring).
DegreeMap degree_map_for(const std::vector<XYMonomial>& monomials, int n,
                         int dependent_yvar = -1);

PolyCone initial_cone(const std::vector<XYMonomial>& monomials, const DegreeMap& dm);

// psi as a fiber lattice-point count, Ehrhart style: the number of integer w
// with (r, u, w) inside the cone.  Fourier-Motzkin projections (precomputed
// once per cone) give the exact bounding box of each fiber coordinate.
class FiberCounter {
public:
    FiberCounter(const PolyCone& cone_with_facets, const DegreeMap& dm);
    long long count(const DegreeVector& deg) const;

private:
    DegreeMap dm_;
    std::vector<std::vector<BigInt>> facets_;
    // per fiber coordinate: rows in (r, u, w_j) after eliminating the others
    std::vector<std::vector<std::vector<BigInt>>> box_rows_;
};

long long psi_via_cone(const PolyCone& cone_with_facets, const DegreeMap& dm,
                       const DegreeVector& deg);

}  // namespace cnr
