#pragma once

#include "cnr/generators.hpp"

namespace cnr {

struct RankDeficient : std::runtime_error {
    RankDeficient() : std::runtime_error("matrix C must have full rank d") {}
};

// Column matroid of a d x m rational matrix, with exact rank queries.
class LinearMatroid {
public:
    explicit LinearMatroid(const QMatrix& C);
    int m() const { return m_; }
    int rank() const { return rank_full_; }
    int rank_of(uint32_t subset) const;
    bool independent(uint32_t subset) const;
    // closure: all k with rank(subset + k) = rank(subset)
    uint32_t span(uint32_t subset) const;

private:
    int m_;
    int rank_full_;
    QMatrix C_;
    mutable std::vector<int> rank_cache_;
};

struct ZonotopalConfig {
    QMatrix C;  // d x m, rank d
    int d = 0, m = 0, n = 0;
    QConfig A;                          // normal forms of the induced hyperplanes
    std::vector<std::vector<int>> bigC;  // m x n 0/1; 0 iff column k lies on H_j
    std::vector<int> u_of_v(const std::vector<int>& v) const;  // u = C^T v
};

// Enumerates the hyperplanes spanned by (d-1)-subsets of columns of C, in
// colex subset order, deduplicated by primitive normal vector.
ZonotopalConfig arrangement_from_C(const QMatrix& C);

// Variant over Q(t); returns only the induced configuration A.
TConfig arrangement_normals_t(const TMatrix& C);

// Coefficient of q^s in prod_{l in mu} (1 + q + ... + q^(l-1)).
long long phi_coeff(const std::vector<int>& mu, int s);

// The matroid formula: sum over independent sets I of Phi({v_i}, r - sum of
// v_j over the externally passive j for I).
long long psi_zonotopal(const ZonotopalConfig& cfg, int r, const std::vector<int>& v);

// Generators E_k = x^(c_k) and F_k = image of the column form f_k.
GeneratorSet zonotopal_generators(const ZonotopalConfig& cfg);

}  // namespace cnr
