#pragma once

#include <array>
#include <string>
#include <vector>

#include "cnr/apolarity.hpp"
#include "cnr/generators.hpp"

namespace cnr {
namespace presets {

// The six intersection points of four general lines in P^2 (Cayley's cubic).
QConfig cayley();

// 3x6 sagbi matrix over Q(t) for the cubic surface.
TConfig cubic_sagbi();

// 3x7 sagbi matrix over Q(t) for the degree-two del Pezzo surface.
TConfig dp2_sagbi();

// 2xn caterpillar matrix: rows (1, t, ..., t^(n-1)) and its reverse.
TMatrix caterpillar_matrix(int n);

// Tree metrics of the seven moneric types on Trop Gr(2,5).
const std::array<std::vector<int>, 7>& gr25_type_metrics();

// Hyperplane-arrangement input of the zonotopal example: d=3, m=4.
QMatrix zono_example_C();

// d=4, m=5 configuration over Q(t) whose ten induced planes are blown up.
TMatrix arrangement_p3_C();

// Degrees (fixtures) of the 15 non-variable generators of the d=4, m=5
// arrangement configuration, in the printed order.
std::vector<DegreeVector> arrangement_p3_plane_degrees();

// The 13 underlined sagbi monomials of the Cayley configuration.
std::vector<std::string> cayley_initial_monomials();

// Printed initial-monomial tables, keyed by generator label.
const std::vector<std::pair<std::string, std::string>>& cubic_initial_monomials();
const std::vector<std::pair<std::string, std::string>>& dp2_initial_monomials();
std::vector<std::string> arrangement_p3_initial_monomials();

// Printed in(F) sets of the seven Gr(2,5) types (16 monomials each, n = 5).
const std::array<std::vector<std::string>, 7>& gr25_type_monomials();

// Random generic d x n configuration; presets named like "dp3-generic".
QConfig generic_points(int d, int n, uint64_t seed);

}  // namespace presets
}  // namespace cnr
