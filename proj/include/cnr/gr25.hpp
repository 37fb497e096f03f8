#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <set>

#include "cnr/generators.hpp"

namespace cnr {

struct NotTreeMetric : std::runtime_error {
    NotTreeMetric() : std::runtime_error("metric realization failed verification") {}
};
struct UnknownType : std::runtime_error {
    UnknownType() : std::runtime_error("moneric class matches no known type") {}
};

// Ten pairwise distances d_ij in the fixed order
// (12, 13, 14, 15, 23, 24, 25, 34, 35, 45).
struct Metric5 {
    std::array<int, 10> d{};

    static int pair_index(int i, int j);  // 0-based leaves, i != j
    int at(int i, int j) const { return d[pair_index(i, j)]; }
    std::string str() const;
    static Metric5 parse(const std::string& s);
    Metric5 permuted(const std::array<int, 5>& perm) const;
};

// Four-point condition: in every 4-subset the maximum of the three pairings
// is attained at least twice.
bool tropical_plucker_check(const Metric5& m);

// Class encoding: a trit per L_ijk (which distance pair attains the maximum)
// and a digit for the Q_12345 split; defined only for moneric metrics.
std::optional<uint32_t> moneric_class_code(const Metric5& m);

// The 16 initial monomials of a class code (n = 5).
std::vector<XYMonomial> class_monomials(uint32_t code);

uint32_t code_of_monomials(const std::vector<XYMonomial>& monos);

// Minimum of the codes over all S5 relabelings.
uint32_t canonical_class_code(uint32_t code);

// 2x5 matrix over Q(t) whose Pluecker orders realize m exactly:
// ord(p_ij) = -d_ij, re-verified on return.
TMatrix realize_metric(const Metric5& m);

struct MonericClass {
    uint32_t code = 0;
    Metric5 representative;
    int type_id = 0;  // 1..7
    bool sagbi = false;  // Types 1-6
    std::vector<XYMonomial> initial_monomials;
};

struct ClassifyResult {
    bool moneric = false;
    MonericClass cls;  // valid when moneric
};

// Builds generators over a realization and matches in(F) against the seven
// type templates up to S5.
ClassifyResult classify_moneric(const Metric5& m);

int type_of_code(uint32_t code);  // 1..7, throws UnknownType

struct SweepResult {
    std::set<uint32_t> classes;
    std::array<long long, 7> type_tally{};  // classes per type
    long long metrics_visited = 0;
    long long moneric_metrics = 0;
};

// Sweeps integer metrics with entries in [0, bound] over the four-point
// cones and dedupes by in(F).
SweepResult enumerate_moneric_classes(int bound, int workers = 0);

}  // namespace cnr
