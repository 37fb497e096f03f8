#pragma once

#include <vector>

#include "cnr/rational.hpp"
#include "cnr/tscalar.hpp"

namespace cnr {

template <class T>
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    T& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
    const T& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }
    void swap_rows(int i, int k) {
        for (int j = 0; j < cols_; ++j) std::swap(at(i, j), at(k, j));
    }

private:
    int rows_, cols_;
    std::vector<T> a_;
};

using ZMatrix = Mat<BigInt>;
using QMatrix = Mat<BigRational>;
using PMatrix = Mat<TPoly>;
using TMatrix = Mat<TScalar>;

// Fraction-free (Bareiss) rank; destroys the matrix.
int rank_destructive(ZMatrix& m);
int rank_destructive(PMatrix& m);

int rank(const QMatrix& m);
int rank(const TMatrix& m);

// Rank of the specialization t -> tau over F_p; a certified lower bound for
// the rank over Q(t).
int rank_specialized_mod_p(const PMatrix& m, uint64_t p, uint64_t tau);

// Exact kernel bases.  Vectors are primitive (integer entries with gcd 1,
// resp. polynomial entries with content gcd 1), first nonzero entry positive.
// Rank-nullity is asserted internally.
std::vector<std::vector<BigRational>> kernel_basis(const QMatrix& m);
std::vector<std::vector<TScalar>>      kernel_basis(const TMatrix& m);
std::vector<std::vector<BigInt>>       kernel_basis_z(const ZMatrix& m);

// Clears denominators row by row.
ZMatrix to_integer_rows(const QMatrix& m);
PMatrix to_poly_rows(const TMatrix& m);

BigInt det(const ZMatrix& m);

}  // namespace cnr
