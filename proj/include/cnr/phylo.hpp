#pragma once

#include <cstdint>

#include "cnr/generators.hpp"

namespace cnr {

struct IncompatibleSplits : std::runtime_error {
    explicit IncompatibleSplits(const std::string& m) : std::runtime_error(m) {}
};
struct SplitNotInTree : std::runtime_error {
    SplitNotInTree() : std::runtime_error("split does not belong to the tree") {}
};
struct NotMonericSet : std::runtime_error {
    NotMonericSet() : std::runtime_error("generator set is not moneric") {}
};
struct ParityViolation : std::runtime_error {
    ParityViolation() : std::runtime_error("half-integer level requires even d") {}
};
struct PrecisionFailure : std::runtime_error {
    PrecisionFailure() : std::runtime_error("interval failed to isolate an integer") {}
};

// Leaf-labelled trivalent tree on {1..n}, stored by its n-3 splits.
// Internally each split is kept as the leaf set not containing leaf n.
struct TrivalentTree {
    int n = 0;
    std::vector<uint32_t> clusters;  // sorted by popcount, then value

    static TrivalentTree from_splits(
        int n, const std::vector<std::pair<std::vector<int>, std::vector<int>>>& splits);
    static TrivalentTree caterpillar(int n);
    // Shorthand "caterpillar:6" or a splits list via from_splits.
    std::vector<std::pair<std::vector<int>, std::vector<int>>> splits() const;
    bool has_split(uint32_t a_mask) const;
};

// Number of decorations of order rho = sum(u) - 2r with pendant edge weights
// u_1..u_(n-1), rho - u_n: nonnegative integer edge weights with integral
// half-weight at every interior node, bounded by rho and by each adjacent
// edge weight.  Returns 0 when rho < 0 or rho < u_n.
long long decoration_count(const TrivalentTree& tree, const DegreeVector& deg);

// Verlinde sum psi(dl, 2l,...,2l) for n = d+2; l is integer or, for even d,
// a half-integer.  Evaluated by certified interval rounding.
long long verlinde(int d, const BigRational& l);

// The two flattening matrices of a split: entries are the odd subsets
// sigma u tau (as bitmasks over {1..n}).
struct FlatteningPair {
    std::vector<uint32_t> rows_a, cols_b;  // even subsets of A, odd subsets of B
    std::vector<std::vector<uint32_t>> m_ab;
    std::vector<uint32_t> rows_b, cols_a;
    std::vector<std::vector<uint32_t>> m_ba;
};

FlatteningPair flattening_matrices(const TrivalentTree& tree, uint32_t a_mask);

// True iff the initial monomials of the Castravet-Tevelev generators of B
// make every flattening matrix of every split of T a monomial rank-one
// matrix.
bool verify_tree_realization(const TrivalentTree& tree, const TMatrix& B);

// Number of degree-(r,u) monomials in the 2^(n-1) variables q_sigma
// (products of two q's), used by the dimension checks.
long long q_monomial_count_deg2(int n, const DegreeVector& deg);

}  // namespace cnr
