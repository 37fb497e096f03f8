#pragma once

#include <vector>

#include "cnr/degree.hpp"
#include "cnr/linalg.hpp"

namespace cnr {

struct ConeNotFullDim : std::runtime_error {
    int dim;
    explicit ConeNotFullDim(int d)
        : std::runtime_error("cone is not full-dimensional (dim " + std::to_string(d) + ")"),
          dim(d) {}
};
struct NotPointed : std::runtime_error {
    int lineality_dim;
    explicit NotPointed(int l)
        : std::runtime_error("cone has lineality of dimension " + std::to_string(l)),
          lineality_dim(l) {}
};

// Rational polyhedral cone with generators and/or facet inequalities
// <h, x> >= 0.  Facet vectors are primitive and pairwise non-proportional.
struct PolyCone {
    int ambient_dim = 0;
    std::vector<std::vector<BigInt>> generators;
    std::vector<std::vector<BigInt>> facets;
};

std::vector<BigInt> primitive(std::vector<BigInt> v);

// Irredundant facet list of cone(gens) by incremental double description on
// the dual side.  Throws ConeNotFullDim when rank(gens) < ambient dimension.
PolyCone dd_facets(const std::vector<std::vector<BigInt>>& gens);

// Extreme rays among the given generators of a cone with known facets.
std::vector<std::vector<BigInt>> extreme_rays(const PolyCone& cone);

// Face counts in dimensions 1..dim-1 (extreme rays first, facets last),
// from the ray/facet incidence lattice.  Throws NotPointed on lineality.
std::vector<long long> f_vector(const PolyCone& cone);

// Cone over the multidegree vectors (r, u) in R^(n+1).
PolyCone support_cone(const std::vector<DegreeVector>& degrees);

}  // namespace cnr
