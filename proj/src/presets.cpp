#include "cnr/presets.hpp"

namespace cnr {
namespace presets {

namespace {

QConfig qconfig_from_ints(int d, int n, const std::vector<std::vector<int>>& rows) {
    QConfig cfg;
    cfg.d = d;
    cfg.n = n;
    cfg.A = QMatrix(d, n);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < n; ++j) cfg.A.at(i, j) = BigRational(rows[i][j]);
    return cfg;
}

TConfig tconfig_from_exponents(int d, int n, const std::vector<std::vector<int>>& exps) {
    TConfig cfg;
    cfg.d = d;
    cfg.n = n;
    cfg.A = TMatrix(d, n);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < n; ++j) cfg.A.at(i, j) = TScalar(TPoly::t(exps[i][j]));
    return cfg;
}

}  // namespace

QConfig cayley() {
    return qconfig_from_ints(3, 6,
                             {{1, 0, 0, 1, -1, 0},
                              {0, 1, 0, -1, 0, 1},
                              {0, 0, 1, 0, 1, -1}});
}

TConfig cubic_sagbi() {
    return tconfig_from_exponents(3, 6,
                                  {{1, 11, 11, 13, 7, 7},
                                   {6, 0, 13, 10, 15, 15},
                                   {6, 5, 0, 15, 5, 1}});
}

TConfig dp2_sagbi() {
    return tconfig_from_exponents(3, 7,
                                  {{3, 10, 0, 6, 17, 12, 11},
                                   {18, 15, 8, 4, 6, 7, 1},
                                   {10, 16, 2, 0, 6, 4, 9}});
}

TMatrix caterpillar_matrix(int n) {
    TMatrix B(2, n);
    for (int j = 0; j < n; ++j) {
        B.at(0, j) = TScalar(TPoly::t(j));
        B.at(1, j) = TScalar(TPoly::t(n - 1 - j));
    }
    return B;
}

const std::array<std::vector<int>, 7>& gr25_type_metrics() {
    static const std::array<std::vector<int>, 7> metrics = {{
        {1, 2, 3, 4, 3, 4, 5, 1, 2, 3},
        {5, 3, 5, 6, 4, 6, 7, 2, 3, 5},
        {2, 1, 3, 4, 3, 5, 6, 2, 3, 5},
        {1, 1, 4, 4, 2, 5, 5, 3, 3, 6},
        {1, 4, 5, 5, 5, 6, 6, 7, 7, 8},
        {1, 1, 2, 3, 2, 3, 4, 1, 2, 1},
        {1, 2, 3, 3, 3, 4, 4, 5, 5, 6},
    }};
    return metrics;
}

QMatrix zono_example_C() {
    QMatrix C(3, 4);
    const int rows[3][4] = {{0, 0, 1, 1}, {0, 1, 0, 1}, {1, 0, 0, 1}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 4; ++j) C.at(i, j) = BigRational(rows[i][j]);
    return C;
}

TMatrix arrangement_p3_C() {
    TMatrix C(4, 5);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) C.at(i, j) = TScalar(BigRational(j == 3 - i ? 1 : 0));
    for (int i = 0; i < 4; ++i) C.at(i, 4) = TScalar(TPoly::t(i + 1));
    return C;
}

std::vector<DegreeVector> arrangement_p3_plane_degrees() {
    // u-supports read off the printed generator monomials; r = 1 throughout
    static const std::vector<std::vector<int>> supports = {
        {1, 2, 3, 4},  {1, 5, 6, 7},  {2, 5, 8, 9},  {3, 6, 8, 10}, {4, 7, 9, 10},
        {3, 4, 6, 7, 8, 9}, {2, 4, 5, 7, 8, 10}, {1, 4, 5, 6, 9, 10},
        {1, 2, 3, 7, 9, 10}, {2, 3, 5, 6, 9, 10}, {1, 3, 5, 7, 8, 10},
        {1, 2, 4, 6, 8, 10}, {1, 2, 6, 7, 8, 9}, {1, 3, 4, 5, 8, 9},
        {2, 3, 4, 5, 6, 7},
    };
    std::vector<DegreeVector> out;
    for (const auto& sup : supports) {
        std::vector<int> u(10, 0);
        for (int s : sup) u[s - 1] = 1;
        out.emplace_back(1, u);
    }
    return out;
}

std::vector<std::string> cayley_initial_monomials() {
    return {"x1", "x2", "x3", "x4", "x5", "x6",
            "y3 x5 x6", "y2 x4 x6", "y1 x4 x5", "y1 x2 x3",
            "y2 x3 x4 x5", "y1 x3 x4 x6", "y1 x2 x5 x6"};
}

const std::vector<std::pair<std::string, std::string>>& cubic_initial_monomials() {
    static const std::vector<std::pair<std::string, std::string>> table = {
        {"E_1", "x1"}, {"E_2", "x2"}, {"E_3", "x3"}, {"E_4", "x4"}, {"E_5", "x5"}, {"E_6", "x6"},
        {"F_12", "x4 x5 x6 y3"},
        {"F_13", "x4 x5 x6 y2"},
        {"F_14", "x2 y3 x5 x6"},
        {"F_15", "y2 x3 x4 x6"},
        {"F_16", "y2 x3 x4 x5"},
        {"F_23", "y1 x4 x5 x6"},
        {"F_24", "x1 y3 x5 x6"},
        {"F_25", "y1 x3 x4 x6"},
        {"F_26", "y1 x3 x4 x5"},
        {"F_34", "y1 x2 x5 x6"},
        {"F_35", "x1 y2 x4 x6"},
        {"F_36", "x1 y2 x4 x5"},
        {"F_45", "y1 x2 x3 x6"},
        {"F_46", "y1 x2 x3 x5"},
        {"F_56", "x1 y2 x3 x4"},
        {"G_6", "x1 y2 y3 x4 x5 x6^2"},
        {"G_5", "x1 y2 y3 x4 x5^2 x6"},
        {"G_4", "x1 y2 y3 x4^2 x5 x6"},
        {"G_3", "x1 y2 x3 y3 x4 x5 x6"},
        {"G_2", "x1 x2 y2 y3 x4 x5 x6"},
        {"G_1", "x1^2 y2 y3 x4 x5 x6"},
    };
    return table;
}

const std::vector<std::pair<std::string, std::string>>& dp2_initial_monomials() {
    static const std::vector<std::pair<std::string, std::string>> table = {
        {"E_1", "x1"}, {"E_2", "x2"}, {"E_3", "x3"}, {"E_4", "x4"},
        {"E_5", "x5"}, {"E_6", "x6"}, {"E_7", "x7"},
        {"F_12", "x3 y4 x5 x6 x7"},
        {"F_13", "x2 x4 x5 x6 y7"},
        {"F_14", "x2 x3 x5 x6 y7"},
        {"F_15", "x2 x3 y4 x6 x7"},
        {"F_16", "x2 x3 x4 x5 y7"},
        {"F_17", "x2 x3 y4 x5 x6"},
        {"F_23", "x1 x4 x5 x6 y7"},
        {"F_24", "x1 x3 x5 x6 y7"},
        {"F_25", "x1 x3 y4 x6 x7"},
        {"F_26", "x1 x3 x4 x5 y7"},
        {"F_27", "x1 x3 y4 x5 x6"},
        {"F_34", "x1 x2 x5 x6 y7"},
        {"F_35", "x1 x2 y4 x6 x7"},
        {"F_36", "x1 x2 x4 x5 y7"},
        {"F_37", "x1 x2 y4 x5 x6"},
        {"F_45", "x1 x2 y3 x6 x7"},
        {"F_46", "x1 x2 y3 x5 x7"},
        {"F_47", "x1 x2 y3 x5 x6"},
        {"F_56", "x1 x2 y3 x4 x7"},
        {"F_57", "x1 x2 y3 x4 x6"},
        {"F_67", "x1 x2 y3 x4 x5"},
        {"G_67", "x1 x2 x3 y4 x5 x6^2 x7 y7"},
        {"G_57", "x1 x2 x3 x4 x5^2 x6 y7^2"},
        {"G_56", "x1 x2 x3 y4 x5^2 x6^2 y7"},
        {"G_47", "x1 x2 x3 x4 y4 x5 x6 x7 y7"},
        {"G_46", "x1 x2 x3 y4^2 x5 x6^2 x7"},
        {"G_45", "x1 x2 x3 x4 y4 x5^2 x6 y7"},
        {"G_37", "x1 x2 x3 y3 y4 x5 x6 x7^2"},
        {"G_36", "x1 x2 x3 y3 y4 x5 x6^2 x7"},
        {"G_35", "x1 x2 x3 y3 y4 x5^2 x6 x7"},
        {"G_34", "x1 x2 x3 y3 x4 y4 x5 x6 x7"},
        {"G_27", "x1 x2^2 y3 x4 x5 x6 x7 y7"},
        {"G_26", "x1 x2^2 y3 x4 x5 x6^2 y7"},
        {"G_25", "x1 x2^2 y3 x4 x5^2 x6 y7"},
        {"G_24", "x1 x2^2 y3 x4^2 x5 x6 y7"},
        {"G_23", "x1 x2^2 x3 y3 x4 x5 x6 y7"},
        {"G_17", "x1^2 x2 y3 x4 x5 x6 x7 y7"},
        {"G_16", "x1^2 x2 y3 x4 x5 x6^2 y7"},
        {"G_15", "x1^2 x2 y3 x4 x5^2 x6 y7"},
        {"G_14", "x1^2 x2 y3 x4^2 x5 x6 y7"},
        {"G_13", "x1^2 x2 x3 y3 x4 x5 x6 y7"},
        {"G_12", "x1^2 x2^2 y3 x4 x5 x6 y7"},
        {"C_1", "x1 x2^2 x3 y3 x4 y4 x5^2 x6^2 x7 y7"},
        {"C_2", "x1^2 x2 x3 y3 x4 y4 x5^2 x6^2 x7 y7"},
        {"C_3", "x1^2 x2^2 y3 x4^2 x5^2 x6^2 y7^2"},
        {"C_4", "x1^2 x2^2 x3 y3 x4 x5^2 x6^2 y7^2"},
        {"C_5", "x1^2 x2^2 x3 y3 x4 y4 x5 x6^2 x7 y7"},
        {"C_6", "x1^2 x2^2 x3 y3 x4^2 x5^2 x6 y7^2"},
        {"C_7", "x1^2 x2^2 x3 y3 x4 y4 x5^2 x6^2 y7"},
    };
    return table;
}

std::vector<std::string> arrangement_p3_initial_monomials() {
    return {
        "y1 x2 x3 x4", "y1 x5 x6 x7", "y2 x5 x8 x9", "y3 x6 x8 x10", "y4 x7 x9 x10",
        "x4 y3 x6 x7 x8 x9", "y2 x4 x5 x7 x8 x10", "y1 x4 x5 x6 x9 x10",
        "y1 x2 x3 x7 x9 x10", "y2 x3 x5 x6 x9 x10", "y1 x3 x5 x7 x8 x10",
        "y1 x2 x4 x6 x8 x10", "y1 x2 x6 x7 x8 x9", "y1 x3 x4 x5 x8 x9",
        "y2 x3 x4 x5 x6 x7",
    };
}

const std::array<std::vector<std::string>, 7>& gr25_type_monomials() {
    static const std::array<std::vector<std::string>, 7> tables = {{
        // Type 1
        {"x1", "x2", "x3", "x4", "x5", "y1 x2 x3", "y1 x2 x4", "y1 x2 x5", "x1 y3 x4",
         "x1 y3 x5", "x1 y4 x5", "x2 y3 x4", "x2 y3 x5", "x2 y4 x5", "y3 x4 x5",
         "y1 x2 y3 x4 x5"},
        // Type 2
        {"x1", "x2", "x3", "x4", "x5", "x1 x2 y3", "y1 x2 x4", "y1 x2 x5", "x1 y3 x4",
         "x1 y3 x5", "x1 y4 x5", "x2 y3 x4", "x2 y3 x5", "x2 y4 x5", "y3 x4 x5",
         "y1 x2 y3 x4 x5"},
        // Type 3
        {"x1", "x2", "x3", "x4", "x5", "y1 x2 x3", "y1 x2 x4", "y1 x2 x5", "x1 y3 x4",
         "x1 y3 x5", "y1 x4 x5", "x2 y3 x4", "x2 y3 x5", "x2 y4 x5", "y3 x4 x5",
         "y1 x2 y3 x4 x5"},
        // Type 4
        {"x1", "x2", "x3", "x4", "x5", "y1 x2 x3", "y1 x2 x4", "y1 x2 x5", "x1 y3 x4",
         "x1 y3 x5", "y1 x4 x5", "x2 y3 x4", "x2 y3 x5", "y2 x4 x5", "y3 x4 x5",
         "y1 x2 y3 x4 x5"},
        // Type 5
        {"x1", "x2", "x3", "x4", "x5", "y1 x2 x3", "y1 x2 x4", "y1 x2 x5", "y1 x3 x4",
         "y1 x3 x5", "y1 x4 x5", "y2 x3 x4", "y2 x3 x5", "y2 x4 x5", "y3 x4 x5",
         "y1 x2 y3 x4 x5"},
        // Type 6
        {"x1", "x2", "x3", "x4", "x5", "y1 x2 x3", "y1 x2 x4", "y1 x2 x5", "x1 y3 x4",
         "x1 y3 x5", "x1 y4 x5", "x2 y3 x4", "x2 y3 x5", "x2 y4 x5", "x3 y4 x5",
         "y1 x2 x3 y4 x5"},
        // Type 7
        {"x1", "x2", "x3", "x4", "x5", "y1 x2 x3", "y1 x2 x4", "y1 x2 x5", "y1 x3 x4",
         "y1 x3 x5", "y1 x4 x5", "y2 x3 x4", "y2 x3 x5", "y2 x4 x5", "y3 x4 x5",
         "y1 y2 x3 x4 x5"},
    }};
    return tables;
}

QConfig generic_points(int d, int n, uint64_t seed) {
    std::mt19937_64 rng(seed);
    return random_generic_config(d, n, rng);
}

}  // namespace presets
}  // namespace cnr
