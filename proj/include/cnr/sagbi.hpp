#pragma once

#include <map>

#include "cnr/generators.hpp"

namespace cnr {

struct InstanceTooLarge : std::runtime_error {
    InstanceTooLarge() : std::runtime_error("markov basis limited to <= 30 generators") {}
};

// Pairwise products of initial monomials, grouped by multidegree and image.
struct SyzygyDegree {
    long long products = 0;        // unordered pairs landing in this degree
    long long distinct_images = 0; // distinct image monomials among them
    // one representative pair per image class beyond the first: (i,j) - (k,l)
    std::vector<std::array<int, 4>> sample_binomials;
    long long binomials() const { return products - distinct_images; }
};

struct BinomialReport {
    std::map<DegreeVector, SyzygyDegree> degrees;  // only degrees with a collision
    long long total_binomials() const;
};

BinomialReport quadratic_binomials(const std::vector<XYMonomial>& in_monos);

// Dimension-count lifting criterion at one syzygy degree:
// psi(deg) == number of distinct image monomials of that degree.
bool lifting_check(const TConfig& cfg, const BinomialReport& report, const DegreeVector& deg);

struct LiftingReport {
    std::vector<std::pair<DegreeVector, bool>> degrees;  // degree -> lifts?
    bool all_lift = true;
};

// exact: psi via fraction-free elimination over Q(t) at every degree.
// certified: psi(deg) >= #images holds unconditionally (products of the
// generators with distinct initial monomials are independent), so a degree
// lifts as soon as a specialized-rank certificate shows psi <= #images; the
// exact route is the fallback.  Both modes give exact verdicts.
enum class LiftMode { exact, certified };

LiftingReport lifting_report(const TConfig& cfg, const BinomialReport& report,
                             LiftMode mode = LiftMode::exact, int workers = 1);

// A binomial u - v between two exponent vectors in the generator variables.
struct MarkovBinomial {
    std::vector<int> lhs, rhs;  // exponents over the generators
    DegreeVector degree;
    int total_degree = 0;
};

struct MarkovResult {
    std::vector<MarkovBinomial> basis;         // minimal generators up to the cap
    std::map<int, long long> count_by_degree;  // generator count per total degree
    int degree_cap = 3;
    bool new_at_cap = false;  // generators appeared at the cap; higher degrees unexplored
};

// Minimal binomial generators of the toric ideal of the monomial set, degree
// by degree up to the cap (fiber connectivity under lower-degree moves).
MarkovResult markov_basis(const std::vector<XYMonomial>& in_monos, int degree_cap = 3,
                          bool allow_large = false);

}  // namespace cnr
