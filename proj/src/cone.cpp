#include "cnr/cone.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace cnr {

namespace {

using Vec = std::vector<BigInt>;

BigInt dot(const Vec& a, const Vec& b) {
    BigInt s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

int rank_of(const std::vector<Vec>& rows, int amb) {
    if (rows.empty()) return 0;
    ZMatrix m(static_cast<int>(rows.size()), amb);
    for (size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < amb; ++j) m.at(static_cast<int>(i), j) = rows[i][j];
    return rank_destructive(m);
}

// Bitset over constraint/ray indices.
struct Bits {
    std::vector<uint64_t> w;
    explicit Bits(size_t n = 0) : w((n + 63) / 64, 0) {}
    void set(size_t i) { w[i / 64] |= uint64_t(1) << (i % 64); }
    bool test(size_t i) const { return (w[i / 64] >> (i % 64)) & 1; }
    static Bits and_of(const Bits& a, const Bits& b) {
        Bits r(a.w.size() * 64);
        r.w.resize(a.w.size());
        for (size_t i = 0; i < a.w.size(); ++i) r.w[i] = a.w[i] & b.w[i];
        return r;
    }
    bool contains(const Bits& sub) const {
        for (size_t i = 0; i < w.size(); ++i)
            if ((sub.w[i] & ~w[i]) != 0) return false;
        return true;
    }
    int count() const {
        int c = 0;
        for (uint64_t x : w) c += __builtin_popcountll(x);
        return c;
    }
    bool operator==(const Bits& o) const { return w == o.w; }
};

struct DualRay {
    Vec v;
    Bits tight;  // inserted constraints vanishing on v
};

}  // namespace

std::vector<BigInt> primitive(std::vector<BigInt> v) {
    BigInt g = 0;
    for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 0) return v;
    if (g != 1)
        for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    return v;
}

// Extreme rays of the dual cone {h : <g,h> >= 0 for all g}; these are the
// facet normals of cone(gens) when that cone is full-dimensional.
static std::vector<Vec> dual_extreme_rays(std::vector<Vec> gens, int amb) {
    // primitive + dedup, then deterministic insertion order
    for (auto& g : gens) g = primitive(std::move(g));
    std::sort(gens.begin(), gens.end(), [](const Vec& a, const Vec& b) {
        BigInt sa = 0, sb = 0;
        for (const auto& x : a) sa += x;
        for (const auto& x : b) sb += x;
        if (sa != sb) return sa < sb;
        return a < b;
    });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    const size_t m = gens.size();

    if (rank_of(gens, amb) < amb) throw ConeNotFullDim(rank_of(gens, amb));

    // greedy independent subset for the simplicial start
    std::vector<size_t> init;
    std::vector<Vec> picked;
    for (size_t i = 0; i < m && static_cast<int>(init.size()) < amb; ++i) {
        picked.push_back(gens[i]);
        if (rank_of(picked, amb) == static_cast<int>(picked.size())) init.push_back(i);
        else picked.pop_back();
    }

    std::vector<DualRay> rays;
    for (size_t k = 0; k < init.size(); ++k) {
        // kernel of the other amb-1 initial generators
        ZMatrix mtx(amb - 1, amb);
        int row = 0;
        for (size_t l = 0; l < init.size(); ++l) {
            if (l == k) continue;
            for (int j = 0; j < amb; ++j) mtx.at(row, j) = gens[init[l]][j];
            ++row;
        }
        auto kern = kernel_basis_z(mtx);
        if (kern.size() != 1) throw std::logic_error("dd: bad simplicial start");
        Vec v = primitive(kern[0]);
        BigInt s = dot(gens[init[k]], v);
        if (s < 0)
            for (auto& x : v) x = -x;
        DualRay r{std::move(v), Bits(m)};
        for (size_t l = 0; l < init.size(); ++l)
            if (l != k) r.tight.set(init[l]);
        rays.push_back(std::move(r));
    }

    std::vector<bool> inserted(m, false);
    for (size_t i : init) inserted[i] = true;

    for (size_t c = 0; c < m; ++c) {
        if (inserted[c]) continue;
        const Vec& g = gens[c];
        std::vector<int> pos, neg, zero;
        std::vector<BigInt> val(rays.size());
        for (size_t r = 0; r < rays.size(); ++r) {
            val[r] = dot(g, rays[r].v);
            int s = sgn(val[r]);
            (s > 0 ? pos : s < 0 ? neg : zero).push_back(static_cast<int>(r));
        }
        if (neg.empty()) {
            for (int r : zero) rays[r].tight.set(c);
            inserted[c] = true;
            continue;
        }
        std::vector<DualRay> next;
        for (int r : pos) next.push_back(rays[r]);
        for (int r : zero) {
            next.push_back(rays[r]);
            next.back().tight.set(c);
        }
        // combine adjacent (pos, neg) pairs
        for (int rp : pos) {
            for (int rn : neg) {
                Bits common = Bits::and_of(rays[rp].tight, rays[rn].tight);
                if (common.count() < amb - 2) continue;
                bool adjacent = true;
                for (size_t r3 = 0; r3 < rays.size(); ++r3) {
                    if (static_cast<int>(r3) == rp || static_cast<int>(r3) == rn) continue;
                    if (rays[r3].tight.contains(common)) { adjacent = false; break; }
                }
                if (!adjacent) continue;
                Vec v(amb);
                for (int j = 0; j < amb; ++j)
                    v[j] = val[rp] * rays[rn].v[j] - val[rn] * rays[rp].v[j];
                v = primitive(std::move(v));
                DualRay nr{std::move(v), Bits(m)};
                for (size_t i = 0; i < m; ++i)
                    if ((inserted[i] || i == c) && dot(gens[i], nr.v) == 0) nr.tight.set(i);
                next.push_back(std::move(nr));
            }
        }
        rays = std::move(next);
        inserted[c] = true;
    }

    std::vector<Vec> out;
    out.reserve(rays.size());
    for (auto& r : rays) out.push_back(std::move(r.v));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

PolyCone dd_facets(const std::vector<std::vector<BigInt>>& gens) {
    if (gens.empty()) throw std::invalid_argument("dd_facets: no generators");
    PolyCone cone;
    cone.ambient_dim = static_cast<int>(gens[0].size());
    cone.generators = gens;
    cone.facets = dual_extreme_rays(gens, cone.ambient_dim);
    return cone;
}

std::vector<std::vector<BigInt>> extreme_rays(const PolyCone& cone) {
    const int amb = cone.ambient_dim;
    std::vector<Vec> out;
    std::vector<Vec> seen;
    for (const auto& g0 : cone.generators) {
        Vec g = primitive(g0);
        if (std::find(seen.begin(), seen.end(), g) != seen.end()) continue;
        seen.push_back(g);
        std::vector<Vec> tight;
        for (const auto& h : cone.facets)
            if (dot(h, g) == 0) tight.push_back(h);
        if (rank_of(tight, amb) == amb - 1) out.push_back(g);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<long long> f_vector(const PolyCone& input) {
    PolyCone cone = input;
    if (cone.facets.empty()) cone = dd_facets(cone.generators);
    if (cone.generators.empty()) {
        // recover rays from facets by the dual double description
        cone.generators = dual_extreme_rays(cone.facets, cone.ambient_dim);
    }
    const int amb = cone.ambient_dim;
    int facet_rank = rank_of(cone.facets, amb);
    if (facet_rank < amb) throw NotPointed(amb - facet_rank);

    std::vector<Vec> rays = extreme_rays(cone);
    const size_t nr = rays.size();
    const size_t nf = cone.facets.size();

    // incidence bitsets
    std::vector<Bits> ray_facets(nr, Bits(nf));   // facets through a ray
    std::vector<Bits> facet_rays(nf, Bits(nr));   // rays on a facet
    for (size_t r = 0; r < nr; ++r)
        for (size_t f = 0; f < nf; ++f)
            if (dot(rays[r], cone.facets[f]) == 0) {
                ray_facets[r].set(f);
                facet_rays[f].set(r);
            }

    // Faces are closed ray sets: start from the whole cone and intersect
    // with facets; key a face by its ray bitset.
    auto key_of = [](const Bits& b) {
        std::string k;
        k.reserve(b.w.size() * 8);
        for (uint64_t x : b.w) k.append(reinterpret_cast<const char*>(&x), 8);
        return k;
    };
    Bits all(nr);
    for (size_t r = 0; r < nr; ++r) all.set(r);
    std::unordered_map<std::string, Bits> faces;
    std::vector<Bits> queue{all};
    faces.emplace(key_of(all), all);
    while (!queue.empty()) {
        Bits cur = queue.back();
        queue.pop_back();
        for (size_t f = 0; f < nf; ++f) {
            Bits sub = Bits::and_of(cur, facet_rays[f]);
            if (sub == cur) continue;
            auto key = key_of(sub);
            if (faces.find(key) != faces.end()) continue;
            faces.emplace(key, sub);
            queue.push_back(sub);
        }
    }

    // dimension of each face = rank of its rays (0 for the apex)
    std::vector<long long> counts(amb + 1, 0);
    for (const auto& [key, b] : faces) {
        std::vector<Vec> sel;
        for (size_t r = 0; r < nr; ++r)
            if (b.test(r)) sel.push_back(rays[r]);
        int dim = sel.empty() ? 0 : rank_of(sel, amb);
        ++counts[dim];
    }
    std::vector<long long> out(counts.begin() + 1, counts.begin() + amb);
    return out;
}

PolyCone support_cone(const std::vector<DegreeVector>& degrees) {
    if (degrees.empty()) throw std::invalid_argument("support_cone: no degrees");
    const int n = degrees[0].n();
    std::vector<Vec> gens;
    for (const auto& d : degrees) {
        Vec v(n + 1);
        v[0] = d.r;
        for (int i = 0; i < n; ++i) v[i + 1] = d.u[i];
        gens.push_back(std::move(v));
    }
    PolyCone cone;
    cone.ambient_dim = n + 1;
    cone.generators = std::move(gens);
    return cone;
}

}  // namespace cnr
