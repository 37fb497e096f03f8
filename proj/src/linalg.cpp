#include "cnr/linalg.hpp"

#include <cassert>
#include <stdexcept>

namespace cnr {

namespace {

struct ZDomain {
    using Elem = BigInt;
    static bool is_zero(const Elem& x) { return sgn(x) == 0; }
    static size_t pivot_size(const Elem& x) { return mpz_sizeinbase(x.get_mpz_t(), 2); }
    static Elem one() { return Elem(1); }
    static Elem neg(const Elem& a) { return -a; }
    static Elem mul(const Elem& a, const Elem& b) { return a * b; }
    static Elem fused(const Elem& a, const Elem& p, const Elem& b, const Elem& q) {
        return a * p - b * q;
    }
    static Elem divexact(const Elem& a, const Elem& d) {
        Elem out;
        mpz_divexact(out.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
        return out;
    }
};

struct PDomain {
    using Elem = TPoly;
    static bool is_zero(const Elem& x) { return x.is_zero(); }
    // Prefer pivots of low degree in t with few terms.
    static size_t pivot_size(const Elem& x) {
        return size_t(x.degree()) * 1024 + size_t(x.term_count());
    }
    static Elem one() { return Elem(BigRational(1)); }
    static Elem neg(const Elem& a) { return -a; }
    static Elem mul(const Elem& a, const Elem& b) { return a * b; }
    static Elem fused(const Elem& a, const Elem& p, const Elem& b, const Elem& q) {
        return a * p - b * q;
    }
    static Elem divexact(const Elem& a, const Elem& d) { return a.divexact(d); }
};

// Fraction-free (Bareiss) row echelon form with column skipping.  Each step
// divides exactly by the previous pivot, so entries stay minors of the input.
template <class D>
std::vector<std::pair<int, int>> echelon_ff(Mat<typename D::Elem>& m) {
    using Elem = typename D::Elem;
    std::vector<std::pair<int, int>> pivots;
    Elem prev;
    bool have_prev = false;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int best = -1;
        size_t best_size = 0;
        for (int i = row; i < m.rows(); ++i) {
            if (D::is_zero(m.at(i, col))) continue;
            size_t s = D::pivot_size(m.at(i, col));
            if (best < 0 || s < best_size) { best = i; best_size = s; }
        }
        if (best < 0) continue;
        if (best != row) m.swap_rows(row, best);
        const Elem pivot = m.at(row, col);
        for (int i = row + 1; i < m.rows(); ++i) {
            const bool zero_mult = D::is_zero(m.at(i, col));
            for (int j = col + 1; j < m.cols(); ++j) {
                Elem v = zero_mult ? D::mul(m.at(i, j), pivot)
                                   : D::fused(m.at(i, j), pivot, m.at(row, j), m.at(i, col));
                m.at(i, j) = have_prev ? D::divexact(v, prev) : v;
            }
            m.at(i, col) = Elem();
        }
        prev = pivot;
        have_prev = true;
        pivots.emplace_back(row, col);
        ++row;
    }
    return pivots;
}

// Kernel vectors from a fraction-free echelon form, by fraction-free
// back-substitution: instead of dividing by a pivot, the already-known part
// of the vector is scaled by it.  Entries stay in the domain throughout.
template <class D>
std::vector<std::vector<typename D::Elem>> kernel_from_echelon(
    const Mat<typename D::Elem>& m, const std::vector<std::pair<int, int>>& pivots) {
    using Elem = typename D::Elem;
    const int r = static_cast<int>(pivots.size());
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto& [row, col] : pivots) is_pivot[col] = true;
    std::vector<std::vector<Elem>> basis;
    for (int f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<Elem> v(m.cols(), Elem());
        v[f] = D::one();
        for (int i = r - 1; i >= 0; --i) {
            auto [prow, pcol] = pivots[i];
            if (pcol > f) continue;  // entries beyond f stay zero
            Elem acc;
            bool have = false;
            for (int j = pcol + 1; j <= f; ++j) {
                if (j != f && !is_pivot[j]) continue;  // free columns other than f are 0
                if (D::is_zero(m.at(prow, j)) || D::is_zero(v[j])) continue;
                Elem term = D::mul(m.at(prow, j), v[j]);
                acc = have ? D::fused(acc, D::one(), D::neg(term), D::one()) : term;
                have = true;
            }
            if (!have || D::is_zero(acc)) continue;  // v[pcol] = 0
            const Elem& pivot = m.at(prow, pcol);
            for (int j = pcol + 1; j < m.cols(); ++j)
                if (!D::is_zero(v[j])) v[j] = D::mul(v[j], pivot);
            v[pcol] = D::neg(acc);
        }
        basis.push_back(std::move(v));
    }
    assert(static_cast<int>(basis.size()) + r == m.cols());
    return basis;
}

}  // namespace

int rank_destructive(ZMatrix& m) { return static_cast<int>(echelon_ff<ZDomain>(m).size()); }
int rank_destructive(PMatrix& m) { return static_cast<int>(echelon_ff<PDomain>(m).size()); }

// Rank of the specialization t -> tau over F_p.  Specializing commutes with
// taking minors, so the result is a certified lower bound for the rank over
// Q(t): a minor that vanishes identically vanishes at every specialization.
int rank_specialized_mod_p(const PMatrix& m, uint64_t p, uint64_t tau) {
    auto mulmod = [p](uint64_t a, uint64_t b) {
        return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
    };
    auto powmod = [&](uint64_t b, uint64_t e) {
        uint64_t r = 1 % p;
        while (e) {
            if (e & 1) r = mulmod(r, b);
            b = mulmod(b, b);
            e >>= 1;
        }
        return r;
    };
    auto inv = [&](uint64_t a) { return powmod(a % p, p - 2); };
    auto coeff_mod = [&](const BigRational& c) -> uint64_t {
        uint64_t n = mpz_fdiv_ui(c.get_num().get_mpz_t(), p);
        uint64_t d = mpz_fdiv_ui(c.get_den().get_mpz_t(), p);
        if (d == 0) throw std::overflow_error("prime divides a denominator");
        return mulmod(n, inv(d));
    };
    const int rows = m.rows(), cols = m.cols();
    std::vector<std::vector<uint64_t>> a(rows, std::vector<uint64_t>(cols, 0));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            const TPoly& q = m.at(i, j);
            uint64_t v = 0;
            for (int k = q.degree(); k >= 0; --k) {
                v = mulmod(v, tau % p);
                if (q[k] != 0) v = (v + coeff_mod(q[k])) % p;
            }
            a[i][j] = v;
        }
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int sel = -1;
        for (int i = rank; i < rows; ++i)
            if (a[i][col] != 0) { sel = i; break; }
        if (sel < 0) continue;
        std::swap(a[rank], a[sel]);
        uint64_t piv_inv = inv(a[rank][col]);
        for (int i = rank + 1; i < rows; ++i) {
            if (a[i][col] == 0) continue;
            uint64_t f = mulmod(a[i][col], piv_inv);
            for (int j = col; j < cols; ++j)
                a[i][j] = (a[i][j] + p - mulmod(f, a[rank][j])) % p;
        }
        ++rank;
    }
    return rank;
}

ZMatrix to_integer_rows(const QMatrix& m) {
    ZMatrix z(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i) {
        BigInt l(1);
        for (int j = 0; j < m.cols(); ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).get_den().get_mpz_t());
        for (int j = 0; j < m.cols(); ++j) {
            BigRational v = m.at(i, j) * BigRational(l);
            z.at(i, j) = v.get_num();
        }
    }
    return z;
}

PMatrix to_poly_rows(const TMatrix& m) {
    PMatrix p(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i) {
        TPoly l(BigRational(1));
        for (int j = 0; j < m.cols(); ++j) {
            TScalar s = m.at(i, j).reduced();
            const TPoly& d = s.den();
            if (d.degree() <= 0) continue;
            TPoly g = TPoly::gcd(l, d);
            l = l.divexact(g) * d;
        }
        for (int j = 0; j < m.cols(); ++j) {
            TScalar v = (m.at(i, j) * TScalar(l)).reduced();
            if (v.den().degree() != 0)
                throw std::logic_error("to_poly_rows: denominator did not clear");
            p.at(i, j) = v.num().scaled(BigRational(1) / v.den()[0]);
        }
    }
    return p;
}

int rank(const QMatrix& m) {
    ZMatrix z = to_integer_rows(m);
    return rank_destructive(z);
}

int rank(const TMatrix& m) {
    PMatrix p = to_poly_rows(m);
    return rank_destructive(p);
}

std::vector<std::vector<BigRational>> kernel_basis(const QMatrix& m) {
    ZMatrix z = to_integer_rows(m);
    auto pivots = echelon_ff<ZDomain>(z);
    auto ff = kernel_from_echelon<ZDomain>(z, pivots);
    std::vector<std::vector<BigRational>> basis;
    for (auto& v : ff) {
        BigInt g(0);
        for (auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 0) g = 1;
        for (auto& x : v) if (sgn(x) != 0) { if (sgn(x) < 0) g = -g; break; }
        std::vector<BigRational> w(v.size());
        for (size_t k = 0; k < v.size(); ++k) w[k] = make_rational(v[k], g);
        basis.push_back(std::move(w));
    }
    return basis;
}

std::vector<std::vector<TScalar>> kernel_basis(const TMatrix& m) {
    PMatrix p = to_poly_rows(m);
    auto pivots = echelon_ff<PDomain>(p);
    auto ff = kernel_from_echelon<PDomain>(p, pivots);
    std::vector<std::vector<TScalar>> basis;
    for (auto& v : ff) {
        // strip the common t-power and integer content; a full polynomial
        // gcd here would dominate the whole computation
        int minval = -1;
        BigInt num_gcd(0), den_lcm(1);
        for (const auto& x : v) {
            if (x.is_zero()) continue;
            int val = x.valuation();
            if (minval < 0 || val < minval) minval = val;
            for (const auto& c : x.coefficients()) {
                if (c == 0) continue;
                mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
                mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
            }
        }
        BigRational content = (num_gcd == 0) ? BigRational(1) : make_rational(num_gcd, den_lcm);
        for (const auto& x : v) {
            if (x.is_zero()) continue;
            if (sgn(x[x.valuation()]) < 0) content = -content;
            break;
        }
        std::vector<TScalar> w(v.size());
        for (size_t k = 0; k < v.size(); ++k) {
            if (v[k].is_zero()) continue;
            w[k] = TScalar(v[k].shifted(-std::max(0, minval)).scaled(BigRational(1) / content));
        }
        basis.push_back(std::move(w));
    }
    return basis;
}

std::vector<std::vector<BigInt>> kernel_basis_z(const ZMatrix& m) {
    QMatrix q(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) q.at(i, j) = BigRational(m.at(i, j));
    auto rb = kernel_basis(q);
    std::vector<std::vector<BigInt>> out;
    for (auto& v : rb) {
        std::vector<BigInt> w(v.size());
        for (size_t k = 0; k < v.size(); ++k) {
            if (v[k].get_den() != 1) throw std::logic_error("kernel_basis_z: non-integer entry");
            w[k] = v[k].get_num();
        }
        out.push_back(std::move(w));
    }
    return out;
}

BigInt det(const ZMatrix& input) {
    if (input.rows() != input.cols()) throw std::invalid_argument("det: square matrix required");
    ZMatrix m = input;
    int n = m.rows();
    int sign = 1;
    BigInt prev(1);
    for (int k = 0; k < n; ++k) {
        int sel = -1;
        size_t best = 0;
        for (int i = k; i < n; ++i) {
            if (sgn(m.at(i, k)) == 0) continue;
            size_t s = ZDomain::pivot_size(m.at(i, k));
            if (sel < 0 || s < best) { sel = i; best = s; }
        }
        if (sel < 0) return BigInt(0);
        if (sel != k) { m.swap_rows(k, sel); sign = -sign; }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                m.at(i, j) = ZDomain::divexact(
                    ZDomain::fused(m.at(i, j), m.at(k, k), m.at(k, j), m.at(i, k)), prev);
            m.at(i, k) = 0;
        }
        prev = m.at(k, k);
    }
    return sign > 0 ? m.at(n - 1, n - 1) : -m.at(n - 1, n - 1);
}

}  // namespace cnr
