#pragma once

#include <functional>
#include <string>
#include <vector>

#include "cnr/degree.hpp"

namespace cnr {

struct InfeasibleSums : std::runtime_error {
    InfeasibleSums() : std::runtime_error("column sums are not weakly decreasing") {}
};

// n = d: coefficient of q^r in prod (1-q^(u_i+1)) / (1-q)^d.
long long psi_independent(const std::vector<int>& u, int r, int d);

// d = 2, pairwise independent forms: ( r+1 - sum (r-u_i)_+ )_+.
long long psi_binary(const std::vector<int>& u, int r);

// d = 3, n = 5 generic: lattice points of the paper's polygon.
long long psi_five_points(int r, const std::vector<int>& u);

// The six intersection points of four general lines (Cayley's cubic).
long long psi_cayley(int r, const std::vector<int>& u);

// d = 3, n = 6 generic: the 21-inequality polygon.
long long psi_six_points(int r, const std::vector<int>& u);

// n = d+1: two-row Gelfand-Tsetlin patterns with lambda_21 = r and column
// sums u_j + ... + u_n.
long long gt_count(const DegreeVector& deg);
long long gt_count_from_sums(int r, const std::vector<long long>& colsums);

// Registry over the closed forms; dispatches on (d, n, genericity).
struct PiecewiseFormula {
    std::string id;
    std::function<bool(int d, int n, bool generic)> applies;
    std::function<long long(const DegreeVector&)> eval;
};

const std::vector<PiecewiseFormula>& formula_registry();

// Evaluates the first applicable registry formula; returns false when no
// formula covers (d, n, generic).
bool psi_formula(int d, int n, bool generic, const DegreeVector& deg, long long& out,
                 std::string* which = nullptr);

}  // namespace cnr
