#include "cnr/generators.hpp"

#include <algorithm>
#include <numeric>

namespace cnr {

const Generator& GeneratorSet::by_label(const std::string& label) const {
    for (const auto& g : gens)
        if (g.label == label) return g;
    throw std::out_of_range("no generator labelled " + label);
}

std::vector<XYMonomial> GeneratorSet::initial_monomials() const {
    std::vector<XYMonomial> out;
    out.reserve(gens.size());
    for (const auto& g : gens) {
        auto in = initial_monomial(g.poly);
        if (!in) throw std::runtime_error("generator " + g.label + " is not moneric");
        out.push_back(*in);
    }
    return out;
}

std::vector<std::vector<TScalar>> plucker_coordinates(const TMatrix& B) {
    const int n = B.cols();
    std::vector<std::vector<TScalar>> p(n, std::vector<TScalar>(n));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            p[i][j] = B.at(0, i) * B.at(1, j) - B.at(0, j) * B.at(1, i);
    return p;
}

GeneratorSet minors_generators(const std::vector<TScalar>& alpha) {
    const int n = static_cast<int>(alpha.size());
    for (const auto& a : alpha)
        if (a.is_zero()) throw ZeroScalar();
    GeneratorSet set;
    set.n = n;
    for (int i = 0; i < n; ++i) {
        XYMonomial xi(n);
        xi.a[i] = 1;
        XYPolynomial p(n);
        p.add_term(xi, TScalar(1));
        set.gens.push_back({"x_" + std::to_string(i + 1), xi.degree(), p});
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            XYPolynomial p(n);
            XYMonomial m1(n), m2(n);
            m1.a[i] = 1; m1.b[j] = 1;  // x_i y_j
            m2.a[j] = 1; m2.b[i] = 1;  // x_j y_i
            p.add_term(m1, alpha[i]);
            p.add_term(m2, -alpha[j]);
            set.gens.push_back({"m_" + std::to_string(i + 1) + std::to_string(j + 1),
                                p.degree(), p});
        }
    }
    return set;
}

namespace {

// Expansion sign of the partition with y-set B (0-based positions in sigma),
// normalized so that the all-late partition carries +1, matching the
// displayed generators L_ijk and Q_12345.
int partition_sign(int k, const std::vector<int>& b_positions) {
    long long s = k + 1;
    for (int p : b_positions) s += p;
    return (s % 2 == 0) ? 1 : -1;
}

TScalar pair_product(const std::vector<std::vector<TScalar>>& p, const std::vector<int>& idx) {
    TScalar prod(1);
    for (size_t s = 0; s < idx.size(); ++s)
        for (size_t t = s + 1; t < idx.size(); ++t) {
            int i = std::min(idx[s], idx[t]), j = std::max(idx[s], idx[t]);
            prod *= p[i][j];
        }
    return prod;
}

void check_pluckers(const std::vector<std::vector<TScalar>>& p) {
    const int n = static_cast<int>(p.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (p[i][j].is_zero()) throw DegeneratePlucker();
}

std::vector<std::vector<TScalar>> rowspan_basis(const TMatrix& B) {
    std::vector<std::vector<TScalar>> basis(2, std::vector<TScalar>(B.cols()));
    for (int r = 0; r < 2; ++r)
        for (int j = 0; j < B.cols(); ++j) basis[r][j] = B.at(r, j);
    return basis;
}

}  // namespace

XYPolynomial castravet_q(const TMatrix& B, const std::vector<int>& sigma) {
    const int n = B.cols();
    const int sz = static_cast<int>(sigma.size());
    if (sz % 2 == 0) throw std::invalid_argument("sigma must have odd cardinality");
    const int k = (sz - 1) / 2;
    auto p = plucker_coordinates(B);
    XYPolynomial out(n);
    if (k == 0) {
        XYMonomial m(n);
        m.a[sigma[0] - 1] = 1;
        out.add_term(m, TScalar(1));
        return out;
    }
    // iterate over k-subsets of positions 0..2k
    std::vector<int> pos(k);
    std::iota(pos.begin(), pos.end(), 0);
    while (true) {
        std::vector<int> bidx, aidx;
        size_t pi = 0;
        for (int q = 0; q < sz; ++q) {
            if (pi < pos.size() && pos[pi] == q) { bidx.push_back(sigma[q] - 1); ++pi; }
            else aidx.push_back(sigma[q] - 1);
        }
        TScalar coef = pair_product(p, aidx) * pair_product(p, bidx);
        coef *= TScalar(partition_sign(k, pos));
        XYMonomial m(n);
        for (int i : aidx) m.a[i] += 1;
        for (int i : bidx) m.b[i] += 1;
        out.add_term(m, coef);
        int q = k - 1;
        while (q >= 0 && pos[q] == sz - k + q) --q;
        if (q < 0) break;
        ++pos[q];
        for (int r = q + 1; r < k; ++r) pos[r] = pos[r - 1] + 1;
    }
    return out;
}

XYPolynomial castravet_q_determinant(const TMatrix& B, const std::vector<int>& sigma) {
    const int n = B.cols();
    const int sz = static_cast<int>(sigma.size());
    const int k = (sz - 1) / 2;
    // row t: even t -> x-row with b1^(k-i) b2^i, i = t/2;
    //         odd t  -> y-row with b1^(k-1-i) b2^i, i = (t-1)/2.
    auto entry = [&](int t, int c) {
        int col = sigma[c] - 1;
        TScalar s(1);
        bool is_x = (t % 2 == 0);
        int i = is_x ? t / 2 : (t - 1) / 2;
        int e1 = is_x ? k - i : k - 1 - i;
        int e2 = i;
        for (int q = 0; q < e1; ++q) s *= B.at(0, col);
        for (int q = 0; q < e2; ++q) s *= B.at(1, col);
        return std::make_pair(s, is_x);
    };
    XYPolynomial det(n);
    std::vector<int> perm(sz);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        int sign = 1;
        for (int i = 0; i < sz; ++i)
            for (int j = i + 1; j < sz; ++j)
                if (perm[i] > perm[j]) sign = -sign;
        TScalar coef(sign);
        XYMonomial m(n);
        for (int c = 0; c < sz; ++c) {
            auto [s, is_x] = entry(perm[c], c);
            coef *= s;
            (is_x ? m.a : m.b)[sigma[c] - 1] += 1;
        }
        det.add_term(m, coef);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

GeneratorSet grassmann5_generators(const TMatrix& B) {
    if (B.rows() != 2 || B.cols() != 5)
        throw DimensionMismatch("grassmann5_generators expects a 2x5 matrix");
    const int n = 5;
    auto p = plucker_coordinates(B);
    check_pluckers(p);
    GeneratorSet set;
    set.n = n;
    for (int i = 0; i < n; ++i) {
        XYMonomial m(n);
        m.a[i] = 1;
        XYPolynomial poly(n);
        poly.add_term(m, TScalar(1));
        set.gens.push_back({"x_" + std::to_string(i + 1), m.degree(), poly});
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int l = j + 1; l < n; ++l) {
                XYPolynomial poly(n);
                XYMonomial m1(n), m2(n), m3(n);
                m1.a[i] = m1.a[j] = 1; m1.b[l] = 1;
                m2.a[i] = m2.a[l] = 1; m2.b[j] = 1;
                m3.a[j] = m3.a[l] = 1; m3.b[i] = 1;
                poly.add_term(m1, p[i][j]);
                poly.add_term(m2, -p[i][l]);
                poly.add_term(m3, p[j][l]);
                set.gens.push_back({"L_" + std::to_string(i + 1) + std::to_string(j + 1) +
                                        std::to_string(l + 1),
                                    poly.degree(), poly});
            }
    set.gens.push_back({"Q_12345", DegreeVector(2, {1, 1, 1, 1, 1}),
                        castravet_q(B, {1, 2, 3, 4, 5})});
    auto basis = rowspan_basis(B);
    for (const auto& g : set.gens)
        if (!nagata_invariance(g.poly, basis))
            throw std::logic_error("generator " + g.label + " failed Nagata invariance");
    return set;
}

GeneratorSet castravet_tevelev_generators(const TMatrix& B) {
    if (B.rows() != 2) throw DimensionMismatch("expected a 2xn matrix");
    const int n = B.cols();
    auto p = plucker_coordinates(B);
    check_pluckers(p);
    GeneratorSet set;
    set.n = n;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) % 2 == 0) continue;
        std::vector<int> sigma;
        std::string label = "Q_";
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) {
                sigma.push_back(i + 1);
                label += std::to_string(i + 1);
            }
        XYPolynomial q = castravet_q(B, sigma);
        set.gens.push_back({label, q.degree(), q});
    }
    std::sort(set.gens.begin(), set.gens.end(), [](const Generator& a, const Generator& b) {
        if (a.degree.r != b.degree.r) return a.degree.r < b.degree.r;
        return a.label < b.label;
    });
    auto basis = rowspan_basis(B);
    for (const auto& g : set.gens)
        if (!nagata_invariance(g.poly, basis))
            throw std::logic_error("generator " + g.label + " failed Nagata invariance");
    return set;
}

XYPolynomial iso2_image(const TConfig& cfg, const SolutionBasis<TScalar>& sol,
                        const std::vector<TScalar>& coeffs, const DegreeVector& deg) {
    const int n = cfg.n;
    // f0(Y) = g(A Y): accumulate Y-monomial -> coefficient
    std::map<std::vector<int>, TScalar> f0;
    for (size_t t = 0; t < sol.monomials->exps.size(); ++t) {
        if (coeffs[t].is_zero()) continue;
        const auto& mexp = sol.monomials->exps[t];
        std::map<std::vector<int>, TScalar> acc{{std::vector<int>(n, 0), coeffs[t]}};
        for (int i = 0; i < cfg.d; ++i) {
            if (mexp[i] == 0) continue;
            auto powers = monomial_basis(n, mexp[i]);
            // (sum_j a_ij Y_j)^(m_i) expanded by multinomials
            std::map<std::vector<int>, TScalar> factor;
            for (const auto& k : powers->exps) {
                BigInt mult = 1;
                int rem = mexp[i];
                TScalar c(1);
                bool zero = false;
                for (int j = 0; j < n; ++j) {
                    BigInt bin;
                    mpz_bin_uiui(bin.get_mpz_t(), rem, k[j]);
                    mult *= bin;
                    rem -= k[j];
                    for (int q = 0; q < k[j]; ++q) {
                        if (cfg.A.at(i, j).is_zero()) { zero = true; break; }
                        c *= cfg.A.at(i, j);
                    }
                    if (zero) break;
                }
                if (zero) continue;
                c *= TScalar(BigRational(mult));
                factor[k] = c;
            }
            std::map<std::vector<int>, TScalar> next;
            for (const auto& [e1, c1] : acc)
                for (const auto& [e2, c2] : factor) {
                    std::vector<int> e(n);
                    for (int j = 0; j < n; ++j) e[j] = e1[j] + e2[j];
                    auto it = next.find(e);
                    if (it == next.end()) next.emplace(e, c1 * c2);
                    else {
                        it->second += c1 * c2;
                        if (it->second.is_zero()) next.erase(it);
                    }
                }
            acc = std::move(next);
        }
        for (const auto& [e, c] : acc) {
            auto it = f0.find(e);
            if (it == f0.end()) f0.emplace(e, c);
            else {
                it->second += c;
                if (it->second.is_zero()) f0.erase(it);
            }
        }
    }
    // clear denominators with x^u; annihilation guarantees every exponent fits
    XYPolynomial out(n);
    for (const auto& [e, c] : f0) {
        XYMonomial m(n);
        for (int j = 0; j < n; ++j) {
            if (e[j] > deg.u[j])
                throw std::logic_error("iso2 image not polynomial: solution not annihilated");
            m.b[j] = e[j];
            m.a[j] = deg.u[j] - e[j];
        }
        out.add_term(m, c);
    }
    return out;
}

XYPolynomial generator_from_degree(const TConfig& cfg, const DegreeVector& deg) {
    auto sol = solution_basis(cfg, deg);
    if (sol.vectors.size() != 1)
        throw NotUnique("psi(" + deg.str() + ") = " + std::to_string(sol.vectors.size()) +
                        ", generator_from_degree requires 1");
    XYPolynomial img = iso2_image(cfg, sol, sol.vectors[0], deg);
    // canonical scale: coefficient 1 on the lexicographically smallest monomial
    const auto& [m0, c0] = *img.terms().begin();
    return img.scaled(c0.inverse());
}

std::vector<std::pair<std::string, DegreeVector>> delpezzo_generator_degrees(int n) {
    std::vector<std::pair<std::string, DegreeVector>> out;
    auto ones = [&](int val) { return std::vector<int>(n, val); };
    for (int i = 0; i < n; ++i) {
        std::vector<int> u(n, 0);
        u[i] = 1;
        out.emplace_back("E_" + std::to_string(i + 1), DegreeVector(0, u));
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            std::vector<int> u = ones(1);
            u[i] = u[j] = 0;
            out.emplace_back("F_" + std::to_string(i + 1) + std::to_string(j + 1),
                             DegreeVector(1, u));
        }
    if (n == 6) {
        for (int i = n - 1; i >= 0; --i) {
            std::vector<int> u = ones(1);
            u[i] = 2;
            out.emplace_back("G_" + std::to_string(i + 1), DegreeVector(2, u));
        }
    } else if (n == 7) {
        for (int i = n - 1; i >= 0; --i)
            for (int j = i - 1; j >= 0; --j) {
                std::vector<int> u = ones(1);
                u[i] = u[j] = 2;
                out.emplace_back("G_" + std::to_string(j + 1) + std::to_string(i + 1),
                                 DegreeVector(2, u));
            }
        for (int i = 0; i < n; ++i) {
            std::vector<int> u = ones(2);
            u[i] = 1;
            out.emplace_back("C_" + std::to_string(i + 1), DegreeVector(3, u));
        }
    } else {
        throw std::invalid_argument("generator degree table only covers n=6 and n=7");
    }
    return out;
}

TConfig config_with_kernel_rowspan(const TMatrix& B) {
    const int n = B.cols();
    const int rows = B.rows();
    auto kern = kernel_basis(B);
    if (static_cast<int>(kern.size()) != n - rows)
        throw DimensionMismatch("rowspan matrix is rank deficient");
    TConfig cfg;
    cfg.d = n - rows;
    cfg.n = n;
    cfg.A = TMatrix(cfg.d, n);
    for (int i = 0; i < cfg.d; ++i)
        for (int j = 0; j < n; ++j) cfg.A.at(i, j) = kern[i][j];
    return cfg;
}

GeneratorSet delpezzo_generators(const TConfig& cfg) {
    GeneratorSet set;
    set.n = cfg.n;
    for (const auto& [label, deg] : delpezzo_generator_degrees(cfg.n))
        set.gens.push_back({label, deg, generator_from_degree(cfg, deg)});
    return set;
}

}  // namespace cnr
