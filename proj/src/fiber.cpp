#include "cnr/fiber.hpp"

#include <algorithm>
#include <set>

namespace cnr {

namespace {
using Vec = std::vector<BigInt>;

// Eliminates column `col` from inequality rows (coeffs..., with the
// convention row . point >= 0) by Fourier-Motzkin.
std::vector<Vec> fm_eliminate(const std::vector<Vec>& rows, size_t col) {
    std::vector<Vec> keep, lower, upper;
    for (const auto& r : rows) {
        int s = sgn(r[col]);
        if (s == 0) keep.push_back(r);
        else if (s > 0) lower.push_back(r);
        else upper.push_back(r);
    }
    std::set<Vec> dedup(keep.begin(), keep.end());
    for (const auto& l : lower) {
        for (const auto& u : upper) {
            Vec combo(l.size());
            for (size_t j = 0; j < l.size(); ++j)
                combo[j] = (-u[col]) * l[j] + l[col] * u[j];
            combo[col] = 0;
            bool nonzero = false;
            for (const auto& x : combo)
                if (x != 0) { nonzero = true; break; }
            if (nonzero) dedup.insert(primitive(std::move(combo)));
        }
    }
    return {dedup.begin(), dedup.end()};
}

}  // namespace

std::vector<BigInt> DegreeMap::embed(const XYMonomial& m) const {
    std::vector<BigInt> v(ambient());
    DegreeVector d = m.degree();
    v[0] = d.r;
    for (int i = 0; i < n; ++i) v[1 + i] = d.u[i];
    int w = 0;
    for (size_t k = 0; k < y_vars.size(); ++k) {
        if (static_cast<int>(k) == dependent) continue;
        v[1 + n + w] = m.b[y_vars[k]];
        ++w;
    }
    return v;
}

DegreeMap degree_map_for(const std::vector<XYMonomial>& monomials, int n, int dependent_yvar) {
    DegreeMap dm;
    dm.n = n;
    std::set<int> ys;
    for (const auto& m : monomials)
        for (int i = 0; i < n; ++i)
            if (m.b[i] > 0) ys.insert(i);
    dm.y_vars.assign(ys.begin(), ys.end());
    if (dm.y_vars.empty()) throw std::invalid_argument("degree map: no y-variable occurs");
    dm.dependent = 0;
    if (dependent_yvar >= 0) {
        auto it = std::find(dm.y_vars.begin(), dm.y_vars.end(), dependent_yvar);
        if (it == dm.y_vars.end())
            throw std::invalid_argument("degree map: dependent variable does not occur");
        dm.dependent = static_cast<int>(it - dm.y_vars.begin());
    }
    return dm;
}

PolyCone initial_cone(const std::vector<XYMonomial>& monomials, const DegreeMap& dm) {
    std::vector<Vec> gens;
    gens.reserve(monomials.size());
    for (const auto& m : monomials) gens.push_back(dm.embed(m));
    return dd_facets(gens);
}

FiberCounter::FiberCounter(const PolyCone& cone, const DegreeMap& dm)
    : dm_(dm), facets_(cone.facets) {
    if (facets_.empty()) throw std::invalid_argument("FiberCounter needs facets");
    const int f = dm_.fiber_dim();
    const size_t base = 1 + dm_.n;
    box_rows_.resize(f);
    for (int j = 0; j < f; ++j) {
        std::vector<Vec> rows = facets_;
        for (int o = 0; o < f; ++o) {
            if (o == j) continue;
            rows = fm_eliminate(rows, base + o);
        }
        box_rows_[j] = std::move(rows);
    }
}

long long FiberCounter::count(const DegreeVector& deg) const {
    if (deg.n() != dm_.n) throw DimensionMismatch("fiber count: wrong degree length");
    const int f = dm_.fiber_dim();
    const size_t base = 1 + dm_.n;
    auto constant_part = [&](const Vec& row) {
        BigInt c = row[0] * deg.r;
        for (int i = 0; i < dm_.n; ++i) c += row[1 + i] * deg.u[i];
        return c;
    };
    // exact bounds per fiber coordinate from the precomputed projections
    std::vector<long long> lo(f), hi(f);
    for (int j = 0; j < f; ++j) {
        bool has_lo = false, has_hi = false;
        BigInt best_lo, best_hi;
        for (const auto& row : box_rows_[j]) {
            BigInt c = constant_part(row);
            const BigInt& a = row[base + j];
            if (a == 0) {
                if (c < 0) return 0;  // infeasible fiber
                continue;
            }
            // a*w + c >= 0
            BigInt bound;
            if (a > 0) {
                mpz_cdiv_q(bound.get_mpz_t(), BigInt(-c).get_mpz_t(), a.get_mpz_t());
                if (!has_lo || bound > best_lo) { best_lo = bound; has_lo = true; }
            } else {
                BigInt na = -a;
                mpz_fdiv_q(bound.get_mpz_t(), c.get_mpz_t(), na.get_mpz_t());
                if (!has_hi || bound < best_hi) { best_hi = bound; has_hi = true; }
            }
        }
        if (!has_lo || !has_hi) throw UnboundedFiber();
        if (best_lo > best_hi) return 0;
        lo[j] = best_lo.get_si();
        hi[j] = best_hi.get_si();
    }
    // enumerate the box, filtering by all facet inequalities
    std::vector<BigInt> consts(facets_.size());
    for (size_t i = 0; i < facets_.size(); ++i) consts[i] = constant_part(facets_[i]);
    std::vector<long long> w(f, 0);
    long long total = 0;
    auto rec = [&](auto&& self, int j) -> void {
        if (j == f) {
            for (size_t i = 0; i < facets_.size(); ++i) {
                BigInt v = consts[i];
                for (int o = 0; o < f; ++o) v += facets_[i][base + o] * BigInt(static_cast<long>(w[o]));
                if (v < 0) return;
            }
            ++total;
            return;
        }
        for (long long x = lo[j]; x <= hi[j]; ++x) {
            w[j] = x;
            self(self, j + 1);
        }
    };
    rec(rec, 0);
    return total;
}

long long psi_via_cone(const PolyCone& cone, const DegreeMap& dm, const DegreeVector& deg) {
    FiberCounter fc(cone, dm);
    return fc.count(deg);
}

}  // namespace cnr
