#include "cnr/formulas.hpp"

#include <algorithm>

namespace cnr {

long long psi_independent(const std::vector<int>& u, int r, int d) {
    if (static_cast<int>(u.size()) != d)
        throw DimensionMismatch("psi_independent requires n = d");
    if (r < 0) return 0;
    // truncated series: numerator prod (1 - q^(u_i+1)), then divide by (1-q)^d
    std::vector<BigInt> series(r + 1, 0);
    series[0] = 1;
    for (int ui : u) {
        int e = ui + 1;
        for (int k = r; k >= e; --k) series[k] -= series[k - e];
        // (subtracting the shifted copy multiplies by 1 - q^e)
    }
    for (int i = 0; i < d; ++i) {
        // multiply by 1/(1-q): prefix sums
        for (int k = 1; k <= r; ++k) series[k] += series[k - 1];
    }
    return series[r].get_si();
}

long long psi_binary(const std::vector<int>& u, int r) {
    long long v = r + 1;
    for (int ui : u) v -= std::max(0, r - ui);
    return std::max(0LL, v);
}

long long psi_five_points(int r, const std::vector<int>& u) {
    if (u.size() != 5) throw DimensionMismatch("psi_five_points requires n = 5");
    const int u1 = u[0], u2 = u[1], u3 = u[2], u4 = u[3], u5 = u[4];
    long long count = 0;
    int xlo = std::max(0, 2 * r - u1 - u2 - u3), xhi = std::min(u4, u5);
    int ylo = std::max(0, 2 * r - u3 - u4 - u5), yhi = std::min(u1, u2);
    for (int x = xlo; x <= xhi; ++x)
        for (int y = ylo; y <= yhi; ++y) {
            if (x + y < r - u3 || x + y > r) continue;
            if (x - y < r - u1 - u2 || x - y > u4 + u5 - r) continue;
            ++count;
        }
    return count;
}

long long psi_cayley(int r, const std::vector<int>& u) {
    if (u.size() != 6) throw DimensionMismatch("psi_cayley requires n = 6");
    const int u1 = u[0], u2 = u[1], u3 = u[2], u4 = u[3], u5 = u[4], u6 = u[5];
    long long count = 0;
    int xhi = std::min({u3, u5, u6});
    int yhi = std::min(u2, u4);
    for (int x = 0; x <= xhi; ++x)
        for (int y = 0; y <= yhi; ++y) {
            if (2 * x + y > std::min(u3 + u6, u5 + u6)) continue;
            if (3 * x + y > u3 + u5 + 2 * u6 - r) continue;
            if (x - y < r - u2 - u4 || x - y > u3 + u5 - r) continue;
            if (x + y < r - u1) continue;
            if (x + y > std::min({r, u2 + u5 + u6 - r, u3 + u4 + u6 - r})) continue;
            ++count;
        }
    return count;
}

long long psi_six_points(int r, const std::vector<int>& u) {
    if (u.size() != 6) throw DimensionMismatch("psi_six_points requires n = 6");
    const int u1 = u[0], u2 = u[1], u3 = u[2], u4 = u[3], u5 = u[4], u6 = u[5];
    long long count = 0;
    int xlo = std::max({0, 2 * r - u2 - u3 - u4, 2 * r - u2 - u3 - u6});
    int xhi = std::min({u1, u5, u1 + u4 + u5 + u6 - 2 * r});
    int ylo = std::max({0, 2 * r - u1 - u4 - u6, 2 * r - u4 - u5 - u6});
    int yhi = std::min({u2, u3, u1 + u2 + u3 + u5 - 2 * r});
    for (int x = xlo; x <= xhi; ++x)
        for (int y = ylo; y <= yhi; ++y) {
            int s = x + y;
            if (s < std::max({r - u4, r - u6, 3 * r - u2 - u3 - u4 - u6})) continue;
            if (s > std::min({r, u1 + u3 + u5 - r, u1 + u2 + u5 - r})) continue;
            if (x - y < r - u2 - u3) continue;
            if (2 * x + y > u1 + u5) continue;
            if (x + 2 * y < 2 * r - u4 - u6) continue;
            ++count;
        }
    return count;
}

long long gt_count_from_sums(int r, const std::vector<long long>& colsums) {
    const int n = static_cast<int>(colsums.size());
    for (int j = 0; j + 1 < n; ++j)
        if (colsums[j] < colsums[j + 1]) throw InfeasibleSums();
    if (r < 0) return 0;
    if (n == 1) return (r == 0 && colsums[0] >= 0) ? 1 : 0;
    // column state = (lambda_2j, lambda_1j) with lambda_1j = colsums[j] - lambda_2j;
    // rows weakly decrease, lambda_{1,j+1} >= lambda_{2,j}, lambda_{2,n} = 0
    long long top0 = colsums[0] - r;
    if (top0 < r || top0 < 0) return 0;
    std::vector<std::pair<long long, long long>> states{{r, top0}};
    std::vector<long long> counts{1};
    for (int j = 1; j < n; ++j) {
        std::vector<std::pair<long long, long long>> nstates;
        std::vector<long long> ncounts;
        auto add = [&](long long l2, long long l1, long long c) {
            for (size_t k = 0; k < nstates.size(); ++k)
                if (nstates[k].first == l2) { ncounts[k] += c; return; }
            nstates.emplace_back(l2, l1);
            ncounts.push_back(c);
        };
        for (size_t k = 0; k < states.size(); ++k) {
            auto [l2, l1] = states[k];
            long long c = counts[k];
            for (long long m2 = 0; m2 <= l2; ++m2) {
                long long m1 = colsums[j] - m2;
                if (m1 < 0 || m1 > l1) continue;
                if (m1 < l2) continue;  // lambda_{1,j+1} >= lambda_{2,j}
                if (m1 < m2) continue;
                if (j == n - 1 && m2 != 0) continue;
                add(m2, m1, c);
            }
        }
        states = std::move(nstates);
        counts = std::move(ncounts);
        if (states.empty()) return 0;
    }
    long long total = 0;
    for (long long c : counts) total += c;
    return total;
}

long long gt_count(const DegreeVector& deg) {
    const int n = deg.n();
    std::vector<long long> colsums(n);
    long long acc = 0;
    for (int j = n - 1; j >= 0; --j) {
        acc += deg.u[j];
        colsums[j] = acc;
    }
    return gt_count_from_sums(deg.r, colsums);
}

const std::vector<PiecewiseFormula>& formula_registry() {
    static const std::vector<PiecewiseFormula> registry = {
        {"independent",
         [](int d, int n, bool) { return n == d; },
         [](const DegreeVector& deg) {
             return psi_independent(deg.u, deg.r, deg.n());
         }},
        {"binary",
         [](int d, int, bool) { return d == 2; },
         [](const DegreeVector& deg) { return psi_binary(deg.u, deg.r); }},
        {"gt",
         [](int d, int n, bool) { return n == d + 1; },
         [](const DegreeVector& deg) { return gt_count(deg); }},
        {"five-points",
         [](int d, int n, bool generic) { return d == 3 && n == 5 && generic; },
         [](const DegreeVector& deg) { return psi_five_points(deg.r, deg.u); }},
        {"six-points",
         [](int d, int n, bool generic) { return d == 3 && n == 6 && generic; },
         [](const DegreeVector& deg) { return psi_six_points(deg.r, deg.u); }},
    };
    return registry;
}

bool psi_formula(int d, int n, bool generic, const DegreeVector& deg, long long& out,
                 std::string* which) {
    for (const auto& f : formula_registry()) {
        if (!f.applies(d, n, generic)) continue;
        out = f.eval(deg);
        if (which) *which = f.id;
        return true;
    }
    return false;
}

}  // namespace cnr
