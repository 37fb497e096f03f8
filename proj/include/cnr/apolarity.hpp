#pragma once

#include <memory>
#include <random>
#include <vector>

#include "cnr/degree.hpp"
#include "cnr/linalg.hpp"

namespace cnr {

// Monomials of fixed total degree in d variables, in the fixed
// lexicographic-descending order (z1^r first, zd^r last).  All operator
// matrices are assembled against this order, so they are reproducible.
struct MonomialBasis {
    int d = 0;
    int degree = 0;
    std::vector<std::vector<int>> exps;
    int index_of(const std::vector<int>& e) const;  // -1 if absent
};

std::shared_ptr<const MonomialBasis> monomial_basis(int d, int degree);

long long binom(int n, int k);

// n linear differential operators l_j = sum_i A(i,j) d/dz_i on K[z_1..z_d].
template <class F>
struct LinearFormConfig {
    int d = 0;
    int n = 0;
    Mat<F> A;  // d x n, column j holds the coefficients of l_j
};

using QConfig = LinearFormConfig<BigRational>;
using TConfig = LinearFormConfig<TScalar>;

// Stacked operator matrix for the active constraints l_j^(u_j+1): S_r -> S_(r-u_j-1).
QMatrix operator_matrix(const QConfig& cfg, const DegreeVector& deg);
TMatrix operator_matrix(const TConfig& cfg, const DegreeVector& deg);

// psi(r,u) = dim of degree-r polynomials annihilated by every l_j^(u_j+1).
int psi_direct(const QConfig& cfg, const DegreeVector& deg);
int psi_direct(const TConfig& cfg, const DegreeVector& deg);

// Certified upper bound on psi over Q(t): cols minus the best specialized
// rank over a few random (prime, tau) pairs.  Equals psi for all but
// finitely many specializations.
int psi_upper_bound(const TConfig& cfg, const DegreeVector& deg, int trials = 3);

template <class F>
struct SolutionBasis {
    std::shared_ptr<const MonomialBasis> monomials;  // of S_r
    std::vector<std::vector<F>> vectors;             // coefficient vectors
};

SolutionBasis<BigRational> solution_basis(const QConfig& cfg, const DegreeVector& deg);
SolutionBasis<TScalar> solution_basis(const TConfig& cfg, const DegreeVector& deg);

// phi(j,...,j) = sum_r psi(r, (j,...,j)); the sum is finite since psi
// vanishes once r exceeds u_1+...+u_n.
long long varphi_uniform(const QConfig& cfg, int j);

// Random integer configuration with all d x d minors nonzero, entries in
// [-bound, bound].  Two independent samples are compared wherever a test
// relies on genericity.
QConfig random_generic_config(int d, int n, std::mt19937_64& rng, int bound = 100);

bool all_maximal_minors_nonzero(const QConfig& cfg);

TConfig to_tconfig(const QConfig& cfg);

}  // namespace cnr
