#include "cnr/phylo.hpp"

#include <algorithm>

namespace cnr {

namespace {

int popcount(uint32_t x) { return __builtin_popcount(x); }

}  // namespace

TrivalentTree TrivalentTree::from_splits(
    int n, const std::vector<std::pair<std::vector<int>, std::vector<int>>>& splits) {
    if (n < 3) throw IncompatibleSplits("need at least 3 leaves");
    TrivalentTree t;
    t.n = n;
    const uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
    for (const auto& [a, b] : splits) {
        uint32_t am = 0, bm = 0;
        for (int x : a) {
            if (x < 1 || x > n) throw IncompatibleSplits("leaf out of range");
            am |= 1u << (x - 1);
        }
        for (int x : b) bm |= 1u << (x - 1);
        if ((am | bm) != full || (am & bm) != 0)
            throw IncompatibleSplits("split is not a partition of the leaves");
        if (popcount(am) < 2 || popcount(bm) < 2)
            throw IncompatibleSplits("split sides need at least two leaves");
        uint32_t side = (am & (1u << (n - 1))) ? bm : am;  // side avoiding leaf n
        t.clusters.push_back(side);
    }
    std::sort(t.clusters.begin(), t.clusters.end());
    if (std::adjacent_find(t.clusters.begin(), t.clusters.end()) != t.clusters.end())
        throw IncompatibleSplits("duplicate split");
    if (static_cast<int>(t.clusters.size()) != n - 3)
        throw IncompatibleSplits("a trivalent tree on n leaves has n-3 splits");
    for (size_t i = 0; i < t.clusters.size(); ++i)
        for (size_t j = i + 1; j < t.clusters.size(); ++j) {
            uint32_t x = t.clusters[i], y = t.clusters[j];
            // nested or disjoint as clusters below leaf n
            if ((x & y) != 0 && (x & y) != x && (x & y) != y)
                throw IncompatibleSplits("splits are pairwise incompatible");
        }
    std::sort(t.clusters.begin(), t.clusters.end(), [](uint32_t a, uint32_t b) {
        return popcount(a) != popcount(b) ? popcount(a) < popcount(b) : a < b;
    });
    return t;
}

TrivalentTree TrivalentTree::caterpillar(int n) {
    std::vector<std::pair<std::vector<int>, std::vector<int>>> splits;
    for (int k = 2; k <= n - 2; ++k) {
        std::vector<int> a, b;
        for (int i = 1; i <= k; ++i) a.push_back(i);
        for (int i = k + 1; i <= n; ++i) b.push_back(i);
        splits.emplace_back(a, b);
    }
    return from_splits(n, splits);
}

std::vector<std::pair<std::vector<int>, std::vector<int>>> TrivalentTree::splits() const {
    std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
    for (uint32_t c : clusters) {
        std::vector<int> a, b;
        for (int i = 0; i < n; ++i)
            ((c >> i) & 1 ? a : b).push_back(i + 1);
        out.emplace_back(a, b);
    }
    return out;
}

bool TrivalentTree::has_split(uint32_t a_mask) const {
    const uint32_t full = (1u << n) - 1;
    uint32_t side = (a_mask & (1u << (n - 1))) ? (full & ~a_mask) : a_mask;
    return std::find(clusters.begin(), clusters.end(), side) != clusters.end();
}

long long decoration_count(const TrivalentTree& tree, const DegreeVector& deg) {
    if (deg.n() != tree.n) throw DimensionMismatch("decoration_count: wrong degree length");
    const int n = tree.n;
    long long rho_ll = deg.usum() - 2 * deg.r;
    if (rho_ll < 0 || rho_ll < deg.u[n - 1]) return 0;
    const int rho = static_cast<int>(rho_ll);
    const int root_weight = rho - deg.u[n - 1];

    // Rooted at leaf n: every cluster (leaf set below an edge) carries a
    // message = counts per feasible edge weight.
    auto node_ok = [&](int w1, int w2, int w3) {
        int s = w1 + w2 + w3;
        if (s % 2) return false;
        int h = s / 2;
        return h <= rho && h >= w1 && h >= w2 && h >= w3;
    };
    auto combine = [&](const std::vector<long long>& ma, const std::vector<long long>& mb) {
        std::vector<long long> out(rho + 1, 0);
        for (int wa = 0; wa <= rho; ++wa) {
            if (!ma[wa]) continue;
            for (int wb = 0; wb <= rho; ++wb) {
                if (!mb[wb]) continue;
                for (int w = std::abs(wa - wb); w <= rho; w += 2) {
                    if (!node_ok(wa, wb, w)) continue;
                    out[w] += ma[wa] * mb[wb];
                }
            }
        }
        return out;
    };
    auto leaf_message = [&](int leaf) {
        std::vector<long long> msg(rho + 1, 0);
        if (deg.u[leaf] <= rho) msg[deg.u[leaf]] = 1;
        return msg;
    };

    // clusters sorted by size; children of a cluster are its maximal
    // subclusters (singletons included)
    std::vector<uint32_t> all = tree.clusters;
    all.push_back((1u << (n - 1)) - 1);  // the root cluster {1..n-1}
    std::sort(all.begin(), all.end(), [](uint32_t a, uint32_t b) {
        return popcount(a) != popcount(b) ? popcount(a) < popcount(b) : a < b;
    });
    std::vector<std::vector<long long>> messages(all.size());
    for (size_t idx = 0; idx < all.size(); ++idx) {
        uint32_t c = all[idx];
        // maximal proper subclusters among `all`, plus singleton leaves
        std::vector<std::vector<long long>> child_msgs;
        uint32_t covered = 0;
        for (size_t j = idx; j-- > 0;) {
            uint32_t s = all[j];
            if ((s & ~c) == 0 && (s & covered) == 0) {
                child_msgs.push_back(messages[j]);
                covered |= s;
            }
        }
        for (int leaf = 0; leaf < n - 1; ++leaf)
            if ((c >> leaf) & 1 && !((covered >> leaf) & 1))
                child_msgs.push_back(leaf_message(leaf));
        if (child_msgs.size() != 2)
            throw IncompatibleSplits("cluster does not have exactly two children");
        messages[idx] = combine(child_msgs[0], child_msgs[1]);
    }
    if (root_weight > rho) return 0;
    return messages.back()[root_weight];
}

FlatteningPair flattening_matrices(const TrivalentTree& tree, uint32_t a_mask) {
    if (!tree.has_split(a_mask)) throw SplitNotInTree();
    const uint32_t full = (1u << tree.n) - 1;
    uint32_t b_mask = full & ~a_mask;
    auto subsets_of = [&](uint32_t mask, int parity) {
        std::vector<uint32_t> out;
        // iterate over all submasks
        uint32_t s = mask;
        for (;;) {
            if (popcount(s) % 2 == parity) out.push_back(s);
            if (s == 0) break;
            s = (s - 1) & mask;
        }
        std::sort(out.begin(), out.end());
        return out;
    };
    FlatteningPair fp;
    fp.rows_a = subsets_of(a_mask, 0);
    fp.cols_b = subsets_of(b_mask, 1);
    fp.m_ab.assign(fp.rows_a.size(), std::vector<uint32_t>(fp.cols_b.size()));
    for (size_t i = 0; i < fp.rows_a.size(); ++i)
        for (size_t j = 0; j < fp.cols_b.size(); ++j)
            fp.m_ab[i][j] = fp.rows_a[i] | fp.cols_b[j];
    fp.rows_b = subsets_of(b_mask, 0);
    fp.cols_a = subsets_of(a_mask, 1);
    fp.m_ba.assign(fp.rows_b.size(), std::vector<uint32_t>(fp.cols_a.size()));
    for (size_t i = 0; i < fp.rows_b.size(); ++i)
        for (size_t j = 0; j < fp.cols_a.size(); ++j)
            fp.m_ba[i][j] = fp.rows_b[i] | fp.cols_a[j];
    return fp;
}

namespace {

// monomial rank-one test on a matrix of exponent vectors
bool rank_one_monomial(const std::vector<std::vector<std::vector<int>>>& expmat) {
    const size_t rows = expmat.size();
    if (rows == 0) return true;
    const size_t cols = expmat[0].size();
    for (size_t i = 1; i < rows; ++i)
        for (size_t j = 1; j < cols; ++j) {
            // m[0][0] + m[i][j] == m[i][0] + m[0][j]
            const auto& a = expmat[0][0];
            const auto& b = expmat[i][j];
            const auto& c = expmat[i][0];
            const auto& d = expmat[0][j];
            for (size_t k = 0; k < a.size(); ++k)
                if (a[k] + b[k] != c[k] + d[k]) return false;
        }
    return true;
}

}  // namespace

bool verify_tree_realization(const TrivalentTree& tree, const TMatrix& B) {
    if (B.cols() != tree.n) throw DimensionMismatch("tree and matrix size differ");
    GeneratorSet gens = castravet_tevelev_generators(B);
    const int n = tree.n;
    // map odd subset mask -> exponent vector of in(Q_sigma) over (x, y)
    std::vector<std::vector<int>> in_exp(1u << n);
    for (const auto& g : gens.gens) {
        auto in = initial_monomial(g.poly);
        if (!in) throw NotMonericSet();
        uint32_t mask = 0;
        for (size_t i = 2; i < g.label.size(); ++i) mask |= 1u << (g.label[i] - '1');
        std::vector<int> e(2 * n);
        for (int v = 0; v < n; ++v) {
            e[v] = in->a[v];
            e[n + v] = in->b[v];
        }
        in_exp[mask] = std::move(e);
    }
    auto fill = [&](const std::vector<std::vector<uint32_t>>& labels) {
        std::vector<std::vector<std::vector<int>>> exp(labels.size());
        for (size_t i = 0; i < labels.size(); ++i) {
            exp[i].resize(labels[i].size());
            for (size_t j = 0; j < labels[i].size(); ++j) exp[i][j] = in_exp[labels[i][j]];
        }
        return exp;
    };
    for (uint32_t c : tree.clusters) {
        FlatteningPair fp = flattening_matrices(tree, c);
        if (!rank_one_monomial(fill(fp.m_ab))) return false;
        if (!rank_one_monomial(fill(fp.m_ba))) return false;
    }
    return true;
}

long long q_monomial_count_deg2(int n, const DegreeVector& deg) {
    // unordered pairs (sigma, tau) of odd subsets with multiset union giving
    // b-exponent u_s in {0,1,2} and k-grading deg.r
    long long count = 0;
    std::vector<uint32_t> odd;
    for (uint32_t m = 1; m < (1u << n); ++m)
        if (popcount(m) % 2 == 1) odd.push_back(m);
    auto k_of = [](uint32_t m) { return (popcount(m) - 1) / 2; };
    for (size_t i = 0; i < odd.size(); ++i)
        for (size_t j = i; j < odd.size(); ++j) {
            if (k_of(odd[i]) + k_of(odd[j]) != deg.r) continue;
            bool ok = true;
            for (int v = 0; v < n && ok; ++v) {
                int mult = ((odd[i] >> v) & 1) + ((odd[j] >> v) & 1);
                ok = (mult == deg.u[v]);
            }
            if (ok) ++count;
        }
    return count;
}

}  // namespace cnr
