#include "cnr/sagbi.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "cnr/apolarity.hpp"
#include "cnr/parallel.hpp"

namespace cnr {

long long BinomialReport::total_binomials() const {
    long long t = 0;
    for (const auto& [deg, info] : degrees) t += info.binomials();
    return t;
}

BinomialReport quadratic_binomials(const std::vector<XYMonomial>& in_monos) {
    const int g = static_cast<int>(in_monos.size());
    // degree -> image monomial -> first pair seen
    std::map<DegreeVector, std::map<XYMonomial, std::pair<int, int>>> images;
    std::map<DegreeVector, SyzygyDegree> degrees;
    for (int i = 0; i < g; ++i) {
        for (int j = i; j < g; ++j) {
            XYMonomial prod = in_monos[i] * in_monos[j];
            DegreeVector deg = prod.degree();
            auto& info = degrees[deg];
            ++info.products;
            auto& img = images[deg];
            auto it = img.find(prod);
            if (it == img.end()) {
                img.emplace(prod, std::make_pair(i, j));
                ++info.distinct_images;
            } else {
                info.sample_binomials.push_back(
                    {it->second.first, it->second.second, i, j});
            }
        }
    }
    BinomialReport report;
    for (auto& [deg, info] : degrees)
        if (info.binomials() > 0) report.degrees.emplace(deg, info);
    return report;
}

bool lifting_check(const TConfig& cfg, const BinomialReport& report, const DegreeVector& deg) {
    auto it = report.degrees.find(deg);
    if (it == report.degrees.end())
        throw std::invalid_argument("degree " + deg.str() + " carries no binomial");
    return psi_direct(cfg, deg) == it->second.distinct_images;
}

LiftingReport lifting_report(const TConfig& cfg, const BinomialReport& report, LiftMode mode,
                             int workers) {
    LiftingReport out;
    std::vector<std::pair<DegreeVector, long long>> work;
    for (const auto& [deg, info] : report.degrees) work.emplace_back(deg, info.distinct_images);
    std::vector<char> lifted(work.size(), 0);
    parallel_for(work.size(), workers, [&](size_t i) {
        const auto& [deg, images] = work[i];
        bool ok;
        if (mode == LiftMode::certified) {
            // psi >= images always; a certificate psi <= images settles it
            ok = psi_upper_bound(cfg, deg) <= images;
            if (!ok) ok = psi_direct(cfg, deg) == images;
        } else {
            ok = psi_direct(cfg, deg) == images;
        }
        lifted[i] = ok;
    });
    for (size_t i = 0; i < work.size(); ++i) {
        out.degrees.emplace_back(work[i].first, lifted[i] != 0);
        out.all_lift = out.all_lift && lifted[i];
    }
    return out;
}

namespace {

// multiset of generator indices <-> sorted vector
XYMonomial image_of(const std::vector<XYMonomial>& gens, const std::vector<int>& multiset) {
    XYMonomial prod(gens[multiset[0]].n());
    for (int i : multiset) prod = prod * gens[i];
    return prod;
}

void enumerate_multisets(int g, int degree, std::vector<int>& cur, int from,
                         const std::function<void(const std::vector<int>&)>& emit) {
    if (static_cast<int>(cur.size()) == degree) {
        emit(cur);
        return;
    }
    for (int i = from; i < g; ++i) {
        cur.push_back(i);
        enumerate_multisets(g, degree, cur, i, emit);
        cur.pop_back();
    }
}

std::vector<int> exponents_of(const std::vector<int>& multiset, int g) {
    std::vector<int> e(g, 0);
    for (int i : multiset) ++e[i];
    return e;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

}  // namespace

MarkovResult markov_basis(const std::vector<XYMonomial>& in_monos, int degree_cap,
                          bool allow_large) {
    const int g = static_cast<int>(in_monos.size());
    if (g > 30 && !allow_large) throw InstanceTooLarge();
    MarkovResult result;
    result.degree_cap = degree_cap;

    // binomials found so far, stored as pairs of generator multisets
    std::vector<std::pair<std::vector<int>, std::vector<int>>> moves;

    for (int total = 2; total <= degree_cap; ++total) {
        // fibers: image monomial -> list of degree-`total` multisets
        std::map<XYMonomial, std::vector<std::vector<int>>> fibers;
        std::vector<int> cur;
        enumerate_multisets(g, total, cur, 0, [&](const std::vector<int>& ms) {
            fibers[image_of(in_monos, ms)].push_back(ms);
        });
        long long added = 0;
        for (auto& [img, members] : fibers) {
            if (members.size() <= 1) continue;
            std::map<std::vector<int>, int> index;
            for (size_t k = 0; k < members.size(); ++k) index[members[k]] = static_cast<int>(k);
            UnionFind uf(static_cast<int>(members.size()));
            // connect members along already-found moves times a monomial
            for (const auto& [lhs, rhs] : moves) {
                int mdeg = static_cast<int>(lhs.size());
                if (mdeg >= total) continue;
                // for every multiset containing lhs, swap lhs -> rhs
                for (size_t k = 0; k < members.size(); ++k) {
                    std::vector<int> rest = members[k];
                    bool ok = true;
                    for (int x : lhs) {
                        auto it = std::find(rest.begin(), rest.end(), x);
                        if (it == rest.end()) { ok = false; break; }
                        rest.erase(it);
                    }
                    if (!ok) continue;
                    for (int x : rhs) rest.push_back(x);
                    std::sort(rest.begin(), rest.end());
                    auto it = index.find(rest);
                    if (it != index.end()) uf.unite(static_cast<int>(k), it->second);
                }
            }
            // new minimal generators connect the remaining components
            std::map<int, int> component_rep;
            for (size_t k = 0; k < members.size(); ++k) {
                int root = uf.find(static_cast<int>(k));
                auto it = component_rep.find(root);
                if (it == component_rep.end()) {
                    component_rep.emplace(root, static_cast<int>(k));
                    continue;
                }
                // connect to the first component seen
            }
            if (component_rep.size() > 1) {
                auto first = component_rep.begin();
                for (auto it = std::next(component_rep.begin()); it != component_rep.end(); ++it) {
                    MarkovBinomial b;
                    b.lhs = exponents_of(members[first->second], g);
                    b.rhs = exponents_of(members[it->second], g);
                    b.degree = img.degree();
                    b.total_degree = total;
                    result.basis.push_back(b);
                    moves.emplace_back(members[first->second], members[it->second]);
                    uf.unite(first->second, it->second);
                    ++added;
                }
            }
        }
        result.count_by_degree[total] = added;
        if (total == degree_cap && added > 0) result.new_at_cap = true;
    }
    return result;
}

}  // namespace cnr
