#pragma once

#include <string>
#include <vector>

#include "cnr/xypoly.hpp"

namespace cnr {

struct DegeneratePlucker : std::runtime_error {
    DegeneratePlucker() : std::runtime_error("a Pluecker coordinate vanishes") {}
};
struct NotUnique : std::runtime_error {
    explicit NotUnique(const std::string& m) : std::runtime_error(m) {}
};

struct Generator {
    std::string label;
    DegreeVector degree;
    XYPolynomial poly;
};

struct GeneratorSet {
    int n = 0;
    std::vector<Generator> gens;

    const Generator& by_label(const std::string& label) const;
    std::vector<XYMonomial> initial_monomials() const;  // throws if some generator is not moneric
};

// p_ij = b_1i b_2j - b_1j b_2i for the 2 x n matrix B.
std::vector<std::vector<TScalar>> plucker_coordinates(const TMatrix& B);

// n = d+1: the variables x_i and the 2x2 minors alpha_i x_i y_j - alpha_j x_j y_i.
GeneratorSet minors_generators(const std::vector<TScalar>& alpha);

// n = 5: the 16 minimal generators {x_i, L_ijk, Q_12345} over G = rowspan(B).
// Nagata invariance of every generator is verified on construction.
GeneratorSet grassmann5_generators(const TMatrix& B);

// n = d+2: all 2^(n-1) invariants Q_sigma for odd subsets sigma, by the
// signed partition expansion; the determinant route is available separately
// as a cross-check.
GeneratorSet castravet_tevelev_generators(const TMatrix& B);

XYPolynomial castravet_q(const TMatrix& B, const std::vector<int>& sigma);
XYPolynomial castravet_q_determinant(const TMatrix& B, const std::vector<int>& sigma);

// Reconstructs the unique (up to scale) invariant of the given multidegree
// through the solution space over Q(t) and the substitution
// z_i -> sum_j a_ij y_j/x_j cleared by x^u.  Requires psi(deg) = 1.
XYPolynomial generator_from_degree(const TConfig& cfg, const DegreeVector& deg);

// Image of a single solution vector under the substitution above.
XYPolynomial iso2_image(const TConfig& cfg, const SolutionBasis<TScalar>& sol,
                        const std::vector<TScalar>& coeffs, const DegreeVector& deg);

// Generator degrees of the Cox-Nagata ring for d=3, n=6 (27) and n=7 (56),
// labelled E/F/G(/C) as in the blow-up picture.
std::vector<std::pair<std::string, DegreeVector>> delpezzo_generator_degrees(int n);

// A (n-2) x n configuration over Q(t) whose kernel is rowspan(B).
TConfig config_with_kernel_rowspan(const TMatrix& B);

// Builds the full generator set via generator_from_degree.
GeneratorSet delpezzo_generators(const TConfig& cfg);

}  // namespace cnr
