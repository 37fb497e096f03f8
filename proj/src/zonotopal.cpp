#include "cnr/zonotopal.hpp"

#include <algorithm>
#include <functional>

#include "cnr/linalg.hpp"

namespace cnr {

namespace {

// (d-1)-subsets of columns in colex order, the labelling the examples use
void colex_subsets(int m, int k, std::vector<std::vector<int>>& out) {
    std::vector<int> sel(k);
    std::function<void(int, int)> rec = [&](int pos, int maxv) {
        if (pos < 0) {
            out.push_back(sel);
            return;
        }
        for (int v = pos; v <= maxv; ++v) {
            sel[pos] = v;
            rec(pos - 1, v - 1);
        }
    };
    if (k > 0) rec(k - 1, m - 1);
}

template <class F, class Config>
void build_arrangement(const Mat<F>& C, int d, int m, Config& out,
                       std::vector<std::vector<int>>& chosen_subsets) {
    std::vector<std::vector<int>> subsets;
    colex_subsets(m, d - 1, subsets);
    std::vector<std::vector<F>> normals;
    for (const auto& sub : subsets) {
        Mat<F> rows(d - 1, d);
        for (int i = 0; i < d - 1; ++i)
            for (int j = 0; j < d; ++j) rows.at(i, j) = C.at(j, sub[i]);
        if (rank(rows) != d - 1) continue;
        auto kern = kernel_basis(rows);
        if (kern.size() != 1) continue;
        auto normal = kern[0];
        bool dup = false;
        for (const auto& seen : normals)
            if (seen == normal) { dup = true; break; }
        if (!dup) {
            normals.push_back(normal);
            chosen_subsets.push_back(sub);
        }
    }
    out.n = static_cast<int>(normals.size());
    out.A.d = d;
    out.A.n = out.n;
    out.A.A = Mat<F>(d, out.n);
    for (int j = 0; j < out.n; ++j)
        for (int i = 0; i < d; ++i) out.A.A.at(i, j) = normals[j][i];
}

struct TArrangement {
    int n = 0;
    TConfig A;
};

}  // namespace

LinearMatroid::LinearMatroid(const QMatrix& C)
    : m_(C.cols()), C_(C), rank_cache_(size_t(1) << C.cols(), -1) {
    rank_full_ = rank_of((uint32_t(1) << m_) - 1);
}

int LinearMatroid::rank_of(uint32_t subset) const {
    int& memo = rank_cache_[subset];
    if (memo >= 0) return memo;
    std::vector<int> cols;
    for (int k = 0; k < m_; ++k)
        if ((subset >> k) & 1) cols.push_back(k);
    QMatrix sub(C_.rows(), static_cast<int>(cols.size()));
    for (int i = 0; i < C_.rows(); ++i)
        for (size_t j = 0; j < cols.size(); ++j) sub.at(i, static_cast<int>(j)) = C_.at(i, cols[j]);
    return memo = (cols.empty() ? 0 : cnr::rank(sub));
}

bool LinearMatroid::independent(uint32_t subset) const {
    return rank_of(subset) == __builtin_popcount(subset);
}

uint32_t LinearMatroid::span(uint32_t subset) const {
    uint32_t out = subset;
    int r = rank_of(subset);
    for (int k = 0; k < m_; ++k) {
        if ((subset >> k) & 1) continue;
        if (rank_of(subset | (uint32_t(1) << k)) == r) out |= uint32_t(1) << k;
    }
    return out;
}

std::vector<int> ZonotopalConfig::u_of_v(const std::vector<int>& v) const {
    std::vector<int> u(n, 0);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < m; ++k) u[j] += bigC[k][j] * v[k];
    return u;
}

ZonotopalConfig arrangement_from_C(const QMatrix& C) {
    ZonotopalConfig cfg;
    cfg.C = C;
    cfg.d = C.rows();
    cfg.m = C.cols();
    if (rank(C) != cfg.d) throw RankDeficient();
    std::vector<std::vector<int>> subsets;
    build_arrangement(C, cfg.d, cfg.m, cfg, subsets);
    cfg.bigC.assign(cfg.m, std::vector<int>(cfg.n, 0));
    for (int k = 0; k < cfg.m; ++k)
        for (int j = 0; j < cfg.n; ++j) {
            BigRational dot(0);
            for (int i = 0; i < cfg.d; ++i) dot += C.at(i, k) * cfg.A.A.at(i, j);
            cfg.bigC[k][j] = (dot == 0) ? 0 : 1;
        }
    return cfg;
}

TConfig arrangement_normals_t(const TMatrix& C) {
    const int d = C.rows(), m = C.cols();
    {
        TMatrix copy = C;
        if (rank(copy) != d) throw RankDeficient();
    }
    TArrangement arr;
    arr.A.d = d;
    std::vector<std::vector<int>> subsets;
    build_arrangement(C, d, m, arr, subsets);
    arr.A.n = arr.n;
    return arr.A;
}

long long phi_coeff(const std::vector<int>& mu, int s) {
    if (s < 0) return 0;
    std::vector<long long> series(s + 1, 0);
    series[0] = 1;
    for (int l : mu) {
        if (l <= 0) return 0;  // an empty factor kills the product
        std::vector<long long> next(s + 1, 0);
        for (int a = 0; a <= s; ++a) {
            if (!series[a]) continue;
            for (int b = 0; b < l && a + b <= s; ++b) next[a + b] += series[a];
        }
        series = std::move(next);
    }
    return series[s];
}

long long psi_zonotopal(const ZonotopalConfig& cfg, int r, const std::vector<int>& v) {
    if (static_cast<int>(v.size()) != cfg.m)
        throw DimensionMismatch("psi_zonotopal: v must have m entries");
    for (int x : v)
        if (x < 0) throw std::invalid_argument("psi_zonotopal: v must be nonnegative");
    LinearMatroid matroid(cfg.C);
    long long total = 0;
    const uint32_t full = (uint32_t(1) << cfg.m) - 1;
    for (uint32_t I = 0; I <= full; ++I) {
        if (!matroid.independent(I)) continue;
        // externally passive j: I + j dependent is not required; j is active
        // iff it lies in the span of the smaller part of I
        long long deduct = 0;
        for (int j = 0; j < cfg.m; ++j) {
            if ((I >> j) & 1) continue;
            uint32_t below = I & ((uint32_t(1) << j) - 1);
            bool active = matroid.rank_of(below | (uint32_t(1) << j)) == matroid.rank_of(below);
            if (!active) deduct += v[j];
        }
        std::vector<int> mu;
        for (int k = 0; k < cfg.m; ++k)
            if ((I >> k) & 1) mu.push_back(v[k]);
        long long s = r - deduct;
        if (s < 0) continue;
        total += phi_coeff(mu, static_cast<int>(s));
    }
    return total;
}

GeneratorSet zonotopal_generators(const ZonotopalConfig& cfg) {
    GeneratorSet set;
    set.n = cfg.n;
    for (int k = 0; k < cfg.m; ++k) {
        XYMonomial e(cfg.n);
        for (int j = 0; j < cfg.n; ++j) e.a[j] = cfg.bigC[k][j];
        XYPolynomial ep(cfg.n);
        ep.add_term(e, TScalar(1));
        set.gens.push_back({"E_" + std::to_string(k + 1), e.degree(), ep});
    }
    for (int k = 0; k < cfg.m; ++k) {
        XYPolynomial f(cfg.n);
        for (int j = 0; j < cfg.n; ++j) {
            if (!cfg.bigC[k][j]) continue;
            BigRational coef(0);
            for (int i = 0; i < cfg.d; ++i) coef += cfg.C.at(i, k) * cfg.A.A.at(i, j);
            XYMonomial mono(cfg.n);
            for (int jj = 0; jj < cfg.n; ++jj) mono.a[jj] = cfg.bigC[k][jj];
            mono.a[j] -= 1;
            mono.b[j] += 1;
            f.add_term(mono, TScalar(coef));
        }
        set.gens.push_back({"F_" + std::to_string(k + 1), f.degree(), f});
    }
    return set;
}

}  // namespace cnr
