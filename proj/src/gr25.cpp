#include "cnr/gr25.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

#include "cnr/presets.hpp"

namespace cnr {

namespace {

constexpr int kPairs[10][2] = {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2},
                               {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}};

constexpr int kTriples[10][3] = {{0, 1, 2}, {0, 1, 3}, {0, 1, 4}, {0, 2, 3}, {0, 2, 4},
                                 {0, 3, 4}, {1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}};

constexpr int kQuadruples[5][4] = {
    {0, 1, 2, 3}, {0, 1, 2, 4}, {0, 1, 3, 4}, {0, 2, 3, 4}, {1, 2, 3, 4}};

// argmax over (d_ij, d_ik, d_jk) for a triple; -1 on tie of the maximum
int triple_choice(const Metric5& m, int t) {
    int i = kTriples[t][0], j = kTriples[t][1], k = kTriples[t][2];
    int v0 = m.at(i, j), v1 = m.at(i, k), v2 = m.at(j, k);
    int mx = std::max({v0, v1, v2});
    int cnt = (v0 == mx) + (v1 == mx) + (v2 == mx);
    if (cnt > 1) return -1;
    return v0 == mx ? 0 : v1 == mx ? 1 : 2;
}

// argmax over the ten splits {i,j,k}u{l,m} of sum(pairs in ijk) + d_lm;
// the split is indexed by the pair index of {l,m}
int split_choice(const Metric5& m) {
    int best = -1, best_val = 0, ties = 0;
    for (int s = 0; s < 10; ++s) {
        int l = kPairs[s][0], mm = kPairs[s][1];
        int a[3], na = 0;
        for (int v = 0; v < 5; ++v)
            if (v != l && v != mm) a[na++] = v;
        int val = m.at(a[0], a[1]) + m.at(a[0], a[2]) + m.at(a[1], a[2]) + m.at(l, mm);
        if (best < 0 || val > best_val) { best = s; best_val = val; ties = 1; }
        else if (val == best_val) ++ties;
    }
    return ties > 1 ? -1 : best;
}

}  // namespace

int Metric5::pair_index(int i, int j) {
    if (i > j) std::swap(i, j);
    static const int idx[5][5] = {{-1, 0, 1, 2, 3},
                                  {0, -1, 4, 5, 6},
                                  {1, 4, -1, 7, 8},
                                  {2, 5, 7, -1, 9},
                                  {3, 6, 8, 9, -1}};
    return idx[i][j];
}

std::string Metric5::str() const {
    std::string out;
    for (int k = 0; k < 10; ++k) {
        if (k) out += ",";
        out += std::to_string(d[k]);
    }
    return out;
}

Metric5 Metric5::parse(const std::string& s) {
    Metric5 m;
    size_t pos = 0;
    for (int k = 0; k < 10; ++k) {
        size_t next = s.find(',', pos);
        std::string tok = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        m.d[k] = std::stoi(tok);
        if (next == std::string::npos && k != 9) throw ParseError("metric needs 10 entries");
        pos = next + 1;
    }
    return m;
}

Metric5 Metric5::permuted(const std::array<int, 5>& perm) const {
    Metric5 out;
    for (int k = 0; k < 10; ++k)
        out.d[Metric5::pair_index(perm[kPairs[k][0]], perm[kPairs[k][1]])] = d[k];
    return out;
}

bool tropical_plucker_check(const Metric5& m) {
    for (const auto& q : kQuadruples) {
        int i = q[0], j = q[1], k = q[2], l = q[3];
        int s0 = m.at(i, j) + m.at(k, l);
        int s1 = m.at(i, k) + m.at(j, l);
        int s2 = m.at(i, l) + m.at(j, k);
        int mx = std::max({s0, s1, s2});
        if ((s0 == mx) + (s1 == mx) + (s2 == mx) < 2) return false;
    }
    return true;
}

std::optional<uint32_t> moneric_class_code(const Metric5& m) {
    uint32_t code = 0, base = 1;
    for (int t = 0; t < 10; ++t) {
        int c = triple_choice(m, t);
        if (c < 0) return std::nullopt;
        code += base * static_cast<uint32_t>(c);
        base *= 3;
    }
    int q = split_choice(m);
    if (q < 0) return std::nullopt;
    return code + base * static_cast<uint32_t>(q);
}

std::vector<XYMonomial> class_monomials(uint32_t code) {
    std::vector<XYMonomial> out;
    for (int i = 0; i < 5; ++i) {
        XYMonomial m(5);
        m.a[i] = 1;
        out.push_back(m);
    }
    for (int t = 0; t < 10; ++t) {
        int choice = code % 3;
        code /= 3;
        int i = kTriples[t][0], j = kTriples[t][1], k = kTriples[t][2];
        XYMonomial m(5);
        // choice 0: d_ij wins -> x_i x_j y_k, etc.
        if (choice == 0) { m.a[i] = m.a[j] = 1; m.b[k] = 1; }
        else if (choice == 1) { m.a[i] = m.a[k] = 1; m.b[j] = 1; }
        else { m.a[j] = m.a[k] = 1; m.b[i] = 1; }
        out.push_back(m);
    }
    int split = static_cast<int>(code % 10);
    XYMonomial q(5);
    for (int v = 0; v < 5; ++v) q.a[v] = 1;
    q.a[kPairs[split][0]] = 0;
    q.a[kPairs[split][1]] = 0;
    q.b[kPairs[split][0]] = 1;
    q.b[kPairs[split][1]] = 1;
    out.push_back(q);
    return out;
}

uint32_t code_of_monomials(const std::vector<XYMonomial>& monos) {
    // inverse of class_monomials: locate the L and Q choices
    std::array<int, 10> choice;
    choice.fill(-1);
    int split = -1;
    for (const auto& m : monos) {
        DegreeVector deg = m.degree();
        if (deg.r == 1) {
            int yi = -1;
            for (int v = 0; v < 5; ++v)
                if (m.b[v]) yi = v;
            std::array<int, 3> tri{};
            int nt = 0;
            for (int v = 0; v < 5; ++v)
                if (deg.u[v]) tri[nt++] = v;
            if (nt != 3) continue;
            for (int t = 0; t < 10; ++t)
                if (kTriples[t][0] == tri[0] && kTriples[t][1] == tri[1] && kTriples[t][2] == tri[2]) {
                    choice[t] = (yi == tri[2]) ? 0 : (yi == tri[1]) ? 1 : 2;
                }
        } else if (deg.r == 2) {
            int lo = -1, hi = -1;
            for (int v = 0; v < 5; ++v)
                if (m.b[v]) (lo < 0 ? lo : hi) = v;
            split = Metric5::pair_index(lo, hi);
        }
    }
    uint32_t code = 0, base = 1;
    for (int t = 0; t < 10; ++t) {
        if (choice[t] < 0) throw std::invalid_argument("monomial set is not a class");
        code += base * static_cast<uint32_t>(choice[t]);
        base *= 3;
    }
    if (split < 0) throw std::invalid_argument("monomial set has no quadric");
    return code + base * static_cast<uint32_t>(split);
}

uint32_t canonical_class_code(uint32_t code) {
    auto monos = class_monomials(code);
    uint32_t best = code;
    std::array<int, 5> perm{0, 1, 2, 3, 4};
    std::sort(perm.begin(), perm.end());
    do {
        std::vector<XYMonomial> mapped;
        mapped.reserve(monos.size());
        for (const auto& m : monos) {
            XYMonomial r(5);
            for (int v = 0; v < 5; ++v) {
                r.a[perm[v]] = m.a[v];
                r.b[perm[v]] = m.b[v];
            }
            mapped.push_back(r);
        }
        best = std::min(best, code_of_monomials(mapped));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

TMatrix realize_metric(const Metric5& m) {
    if (!tropical_plucker_check(m)) throw NotTreeMetric();
    // Columns (t^(-d_i5-M), z_i t^(-d_i5-M)) for i < 5 and (t^M, 0) for
    // leaf 5 give ord p_ij = -d_ij exactly, provided ord(z_i) = 0 and
    // ord(z_i - z_j) = rho_ij = d_i5 + d_j5 - d_ij + 2M.  M makes every
    // rho non-negative (Gromov products may be negative inside the fan).
    int rho[4][4] = {};
    int minrho = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            rho[i][j] = m.at(i, 4) + m.at(j, 4) - m.at(i, j);
            minrho = std::min(minrho, rho[i][j]);
        }
    const int M = std::max(0, -minrho);
    int maxlevel = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            rho[i][j] += 2 * M;
            maxlevel = std::max(maxlevel, rho[i][j]);
        }
    // z_i as digit strings: points sharing a cluster at a level share the
    // digit; clusters split exactly where rho says they must.
    std::vector<TPoly> z(4);
    std::vector<int> cluster(4, 0);
    for (int level = 0; level <= maxlevel; ++level) {
        std::vector<int> next(4, -1);
        std::vector<int> digit(4, 0);
        int nc = 0;
        for (int c = 0; c < 4; ++c) {
            int dg = (level == 0) ? 1 : 0;  // nonzero first digit keeps ord(z_i) = 0
            for (int i = 0; i < 4; ++i) {
                if (cluster[i] != c || next[i] >= 0) continue;
                for (int j = i; j < 4; ++j) {
                    if (cluster[j] != c || next[j] >= 0) continue;
                    if (j == i || rho[i][j] > level) {
                        next[j] = nc;
                        digit[j] = dg;
                    }
                }
                ++nc;
                ++dg;
            }
        }
        for (int i = 0; i < 4; ++i)
            if (digit[i] != 0) z[i] += TPoly(BigRational(digit[i]), level);
        cluster = next;
    }
    TMatrix B(2, 5);
    for (int i = 0; i < 4; ++i) {
        TScalar tw = TScalar::t_power(-m.at(i, 4) - M);
        B.at(0, i) = tw;
        B.at(1, i) = TScalar(z[i]) * tw;
    }
    B.at(0, 4) = TScalar::t_power(M);
    B.at(1, 4) = TScalar();
    auto p = plucker_coordinates(B);
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            if (p[i][j].is_zero() || p[i][j].order() != -m.at(i, j)) throw NotTreeMetric();
    return B;
}

int type_of_code(uint32_t code) {
    static std::array<uint32_t, 7> canon = [] {
        std::array<uint32_t, 7> c{};
        for (int t = 0; t < 7; ++t) {
            std::vector<XYMonomial> monos;
            for (const auto& s : presets::gr25_type_monomials()[t])
                monos.push_back(XYMonomial::parse(s, 5));
            c[t] = canonical_class_code(code_of_monomials(monos));
        }
        return c;
    }();
    uint32_t cc = canonical_class_code(code);
    for (int t = 0; t < 7; ++t)
        if (canon[t] == cc) return t + 1;
    throw UnknownType();
}

ClassifyResult classify_moneric(const Metric5& m) {
    if (!tropical_plucker_check(m)) throw NotTreeMetric();
    ClassifyResult result;
    TMatrix B = realize_metric(m);
    GeneratorSet set = grassmann5_generators(B);
    std::vector<XYMonomial> monos;
    for (const auto& g : set.gens) {
        auto in = initial_form(g.poly);
        if (!in.moneric) return result;  // not moneric
        monos.push_back(in.monomial);
    }
    result.moneric = true;
    result.cls.code = code_of_monomials(monos);
    result.cls.representative = m;
    result.cls.initial_monomials = std::move(monos);
    result.cls.type_id = type_of_code(result.cls.code);
    result.cls.sagbi = result.cls.type_id <= 6;
    // the combinatorial route must agree with the realization route
    auto direct = moneric_class_code(m);
    if (!direct || *direct != result.cls.code)
        throw std::logic_error("class code mismatch between metric and realization");
    return result;
}

SweepResult enumerate_moneric_classes(int bound, int workers) {
    SweepResult res;
    if (workers <= 0) workers = static_cast<int>(std::thread::hardware_concurrency());
    if (workers <= 0) workers = 1;

    std::mutex merge_mutex;
    std::atomic<int> next_d12{0};

    auto worker_fn = [&]() {
        SweepResult local;
        // candidate values for the unknown pairing completion
        auto candidates = [&](int partner, int s1, int s2, std::vector<int>& out) {
            out.clear();
            if (s1 == s2) {
                for (int v = 0; v <= std::min(bound, s1 - partner); ++v) out.push_back(v);
            } else {
                int v = std::max(s1, s2) - partner;
                if (v >= 0 && v <= bound) out.push_back(v);
            }
        };
        std::vector<int> c34, c35, c45;
        for (;;) {
            int d12 = next_d12.fetch_add(1);
            if (d12 > bound) break;
            Metric5 m;
            m.d[0] = d12;
            for (int d13 = 0; d13 <= bound; ++d13) {
                m.d[1] = d13;
                for (int d23 = 0; d23 <= bound; ++d23) {
                    m.d[4] = d23;
                    for (int d14 = 0; d14 <= bound; ++d14) {
                        m.d[2] = d14;
                        for (int d24 = 0; d24 <= bound; ++d24) {
                            m.d[5] = d24;
                            candidates(d12, d13 + d24, d14 + d23, c34);
                            for (int d34 : c34) {
                                m.d[7] = d34;
                                for (int d15 = 0; d15 <= bound; ++d15) {
                                    m.d[3] = d15;
                                    for (int d25 = 0; d25 <= bound; ++d25) {
                                        m.d[6] = d25;
                                        candidates(d12, d13 + d25, d15 + d23, c35);
                                        for (int d35 : c35) {
                                            m.d[8] = d35;
                                            candidates(d12, d14 + d25, d15 + d24, c45);
                                            for (int d45 : c45) {
                                                m.d[9] = d45;
                                                // remaining quadruples {1,3,4,5}, {2,3,4,5}
                                                int a0 = d13 + d45, a1 = d14 + d35, a2 = d15 + d34;
                                                int mx = std::max({a0, a1, a2});
                                                if ((a0 == mx) + (a1 == mx) + (a2 == mx) < 2) continue;
                                                int b0 = d23 + d45, b1 = d24 + d35, b2 = d25 + d34;
                                                mx = std::max({b0, b1, b2});
                                                if ((b0 == mx) + (b1 == mx) + (b2 == mx) < 2) continue;
                                                ++local.metrics_visited;
                                                auto code = moneric_class_code(m);
                                                if (code) {
                                                    ++local.moneric_metrics;
                                                    local.classes.insert(*code);
                                                }
                                            }
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        std::lock_guard<std::mutex> lock(merge_mutex);
        res.metrics_visited += local.metrics_visited;
        res.moneric_metrics += local.moneric_metrics;
        res.classes.insert(local.classes.begin(), local.classes.end());
    };

    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) threads.emplace_back(worker_fn);
    for (auto& t : threads) t.join();

    for (uint32_t code : res.classes) ++res.type_tally[type_of_code(code) - 1];
    return res;
}

}  // namespace cnr
