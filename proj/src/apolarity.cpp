#include "cnr/apolarity.hpp"

#include <map>
#include <mutex>

namespace cnr {

namespace {

void enumerate_monomials(int d, int degree, std::vector<int>& cur, int pos,
                         std::vector<std::vector<int>>& out) {
    if (pos == d - 1) {
        cur[pos] = degree;
        out.push_back(cur);
        return;
    }
    for (int e = degree; e >= 0; --e) {
        cur[pos] = e;
        enumerate_monomials(d, degree - e, cur, pos + 1, out);
    }
}

std::map<std::pair<int, int>, std::shared_ptr<const MonomialBasis>> g_basis_cache;
std::mutex g_basis_mutex;

// Exponent tuples of the expansion of l^e via multinomials.
struct Expansion {
    std::vector<std::vector<int>> ks;
    std::vector<BigInt> multinomials;
};

Expansion power_expansion(int d, int e) {
    Expansion ex;
    std::vector<int> cur(d, 0);
    enumerate_monomials(d, e, cur, 0, ex.ks);
    for (const auto& k : ex.ks) {
        BigInt m = 1;
        int rem = e;
        for (int i = 0; i < d; ++i) {
            BigInt b;
            mpz_bin_uiui(b.get_mpz_t(), rem, k[i]);
            m *= b;
            rem -= k[i];
        }
        ex.multinomials.push_back(m);
    }
    return ex;
}

BigInt falling_product(const std::vector<int>& m, const std::vector<int>& k) {
    BigInt f = 1;
    for (size_t i = 0; i < m.size(); ++i)
        for (int j = 0; j < k[i]; ++j) f *= (m[i] - j);
    return f;
}

template <class F>
F field_pow(const F& base, int e) {
    F r(1);
    for (int i = 0; i < e; ++i) r = r * base;
    return r;
}

template <class F>
F from_bigint(const BigInt& b);
template <>
BigRational from_bigint<BigRational>(const BigInt& b) { return BigRational(b); }
template <>
TScalar from_bigint<TScalar>(const BigInt& b) { return TScalar(BigRational(b)); }

template <class F>
Mat<F> operator_matrix_impl(const LinearFormConfig<F>& cfg, const DegreeVector& deg) {
    if (deg.n() != cfg.n)
        throw DimensionMismatch("degree has " + std::to_string(deg.n()) +
                                " weights, configuration has n=" + std::to_string(cfg.n));
    const int r = deg.r;
    auto basis_r = monomial_basis(cfg.d, r);
    int total_rows = 0;
    std::vector<int> active;
    for (int j = 0; j < cfg.n; ++j) {
        if (deg.u[j] >= r) continue;  // l_j^(u_j+1) annihilates all of S_r
        active.push_back(j);
        total_rows += static_cast<int>(monomial_basis(cfg.d, r - deg.u[j] - 1)->exps.size());
    }
    Mat<F> m(total_rows, static_cast<int>(basis_r->exps.size()));
    int row0 = 0;
    for (int j : active) {
        const int e = deg.u[j] + 1;
        auto basis_tgt = monomial_basis(cfg.d, r - e);
        Expansion ex = power_expansion(cfg.d, e);
        // coefficient of d^k in l_j^e
        std::vector<F> coef(ex.ks.size());
        for (size_t t = 0; t < ex.ks.size(); ++t) {
            F c = from_bigint<F>(ex.multinomials[t]);
            for (int i = 0; i < cfg.d; ++i)
                if (ex.ks[t][i] > 0) c = c * field_pow(cfg.A.at(i, j), ex.ks[t][i]);
            coef[t] = c;
        }
        for (size_t col = 0; col < basis_r->exps.size(); ++col) {
            const auto& mexp = basis_r->exps[col];
            for (size_t t = 0; t < ex.ks.size(); ++t) {
                const auto& k = ex.ks[t];
                bool ok = true;
                for (int i = 0; i < cfg.d; ++i)
                    if (k[i] > mexp[i]) { ok = false; break; }
                if (!ok) continue;
                std::vector<int> tgt(cfg.d);
                for (int i = 0; i < cfg.d; ++i) tgt[i] = mexp[i] - k[i];
                int rowi = basis_tgt->index_of(tgt);
                BigInt fall = falling_product(mexp, k);
                F add = coef[t];
                if (fall != 1) add = add * from_bigint<F>(fall);
                m.at(row0 + rowi, static_cast<int>(col)) = m.at(row0 + rowi, static_cast<int>(col)) + add;
            }
        }
        row0 += static_cast<int>(basis_tgt->exps.size());
    }
    return m;
}

template <class F>
SolutionBasis<F> solution_basis_impl(const LinearFormConfig<F>& cfg, const DegreeVector& deg) {
    SolutionBasis<F> sol;
    sol.monomials = monomial_basis(cfg.d, deg.r);
    Mat<F> m = operator_matrix_impl(cfg, deg);
    if (m.rows() == 0) {
        for (size_t i = 0; i < sol.monomials->exps.size(); ++i) {
            std::vector<F> v(sol.monomials->exps.size(), F(0));
            v[i] = F(1);
            sol.vectors.push_back(std::move(v));
        }
        return sol;
    }
    sol.vectors = kernel_basis(m);
    return sol;
}

}  // namespace

int MonomialBasis::index_of(const std::vector<int>& e) const {
    // lex-descending rank by scanning prefix choices
    auto it = std::lower_bound(exps.begin(), exps.end(), e,
                               [](const std::vector<int>& a, const std::vector<int>& b) {
                                   return a > b;  // descending lex
                               });
    if (it == exps.end() || *it != e) return -1;
    return static_cast<int>(it - exps.begin());
}

std::shared_ptr<const MonomialBasis> monomial_basis(int d, int degree) {
    if (degree < 0) {
        auto empty = std::make_shared<MonomialBasis>();
        empty->d = d;
        empty->degree = degree;
        return empty;
    }
    std::lock_guard<std::mutex> lock(g_basis_mutex);
    auto key = std::make_pair(d, degree);
    auto it = g_basis_cache.find(key);
    if (it != g_basis_cache.end()) return it->second;
    auto b = std::make_shared<MonomialBasis>();
    b->d = d;
    b->degree = degree;
    std::vector<int> cur(d, 0);
    enumerate_monomials(d, degree, cur, 0, b->exps);
    g_basis_cache[key] = b;
    return b;
}

long long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    BigInt b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b.get_si();
}

QMatrix operator_matrix(const QConfig& cfg, const DegreeVector& deg) {
    return operator_matrix_impl(cfg, deg);
}
TMatrix operator_matrix(const TConfig& cfg, const DegreeVector& deg) {
    return operator_matrix_impl(cfg, deg);
}

int psi_direct(const QConfig& cfg, const DegreeVector& deg) {
    QMatrix m = operator_matrix(cfg, deg);
    int cols = m.cols();
    if (m.rows() == 0) return cols;
    return cols - rank(m);
}

int psi_direct(const TConfig& cfg, const DegreeVector& deg) {
    TMatrix m = operator_matrix(cfg, deg);
    int cols = m.cols();
    if (m.rows() == 0) return cols;
    return cols - rank(m);
}

int psi_upper_bound(const TConfig& cfg, const DegreeVector& deg, int trials) {
    TMatrix m = operator_matrix(cfg, deg);
    const int cols = m.cols();
    if (m.rows() == 0) return cols;
    PMatrix p = to_poly_rows(m);
    static const uint64_t primes[] = {1000000007ULL, 1000000009ULL, 998244353ULL,
                                      2305843009213693951ULL};
    int best = 0;
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ (uint64_t(deg.r) << 32) ^ deg.usum());
    for (int tval = 0; tval < trials; ++tval) {
        uint64_t prime = primes[tval % 4];
        uint64_t tau = 2 + rng() % (prime - 3);
        try {
            best = std::max(best, rank_specialized_mod_p(p, prime, tau));
        } catch (const std::overflow_error&) {
            continue;  // prime divided a denominator; try the next pair
        }
        if (best == std::min(p.rows(), cols)) break;
    }
    return cols - best;
}

SolutionBasis<BigRational> solution_basis(const QConfig& cfg, const DegreeVector& deg) {
    return solution_basis_impl(cfg, deg);
}
SolutionBasis<TScalar> solution_basis(const TConfig& cfg, const DegreeVector& deg) {
    return solution_basis_impl(cfg, deg);
}

long long varphi_uniform(const QConfig& cfg, int j) {
    long long total = 0;
    long long rmax = static_cast<long long>(j) * cfg.n;
    for (long long r = 0; r <= rmax; ++r)
        total += psi_direct(cfg, DegreeVector(static_cast<int>(r), std::vector<int>(cfg.n, j)));
    return total;
}

bool all_maximal_minors_nonzero(const QConfig& cfg) {
    // Column scaling keeps minors nonzero, so denominators are cleared per column.
    ZMatrix zint(cfg.d, cfg.n);
    for (int j = 0; j < cfg.n; ++j) {
        BigInt l(1);
        for (int i = 0; i < cfg.d; ++i)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), cfg.A.at(i, j).get_den().get_mpz_t());
        for (int i = 0; i < cfg.d; ++i) {
            BigRational v = cfg.A.at(i, j) * BigRational(l);
            zint.at(i, j) = v.get_num();
        }
    }
    std::vector<int> sel(cfg.d);
    for (int i = 0; i < cfg.d; ++i) sel[i] = i;
    while (true) {
        ZMatrix sub(cfg.d, cfg.d);
        for (int i = 0; i < cfg.d; ++i)
            for (int j = 0; j < cfg.d; ++j) sub.at(i, j) = zint.at(i, sel[j]);
        if (det(sub) == 0) return false;
        int k = cfg.d - 1;
        while (k >= 0 && sel[k] == cfg.n - cfg.d + k) --k;
        if (k < 0) break;
        ++sel[k];
        for (int i = k + 1; i < cfg.d; ++i) sel[i] = sel[i - 1] + 1;
    }
    return true;
}

QConfig random_generic_config(int d, int n, std::mt19937_64& rng, int bound) {
    std::uniform_int_distribution<int> dist(-bound, bound);
    QConfig cfg;
    cfg.d = d;
    cfg.n = n;
    while (true) {
        cfg.A = Mat<BigRational>(d, n);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < n; ++j) cfg.A.at(i, j) = BigRational(dist(rng));
        if (all_maximal_minors_nonzero(cfg)) return cfg;
    }
}

TConfig to_tconfig(const QConfig& cfg) {
    TConfig out;
    out.d = cfg.d;
    out.n = cfg.n;
    out.A = TMatrix(cfg.d, cfg.n);
    for (int i = 0; i < cfg.d; ++i)
        for (int j = 0; j < cfg.n; ++j) out.A.at(i, j) = TScalar(cfg.A.at(i, j));
    return out;
}

}  // namespace cnr
