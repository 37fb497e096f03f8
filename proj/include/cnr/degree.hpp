#pragma once

#include <set>
#include <string>
#include <vector>

#include "cnr/rational.hpp"

namespace cnr {

struct NegativeDegree : std::runtime_error {
    NegativeDegree() : std::runtime_error("Cremona image leaves N^(n+1)") {}
};
struct DimensionMismatch : std::runtime_error {
    explicit DimensionMismatch(const std::string& m) : std::runtime_error(m) {}
};

// Multidegree (r, u_1..u_n) of the Z^(n+1)-grading.
struct DegreeVector {
    int r = 0;
    std::vector<int> u;

    DegreeVector() = default;
    DegreeVector(int r_, std::vector<int> u_) : r(r_), u(std::move(u_)) {}

    int n() const { return static_cast<int>(u.size()); }
    long long usum() const;
    bool operator==(const DegreeVector& o) const { return r == o.r && u == o.u; }
    bool operator<(const DegreeVector& o) const {
        return r != o.r ? r < o.r : u < o.u;
    }

    std::string str() const;                          // "3,2,2,2,2,2,2"
    static DegreeVector parse(const std::string& s);  // r followed by u
};

// (r,u) -> (r', u') with r' = u_1+..+u_d - r, u'_j = u_j for j <= d and
// u'_j = u_1+..+u_d - 2r + u_j for j > d.  An involution where defined;
// throws NegativeDegree if the image leaves N^(n+1).
DegreeVector cremona(const DegreeVector& deg, int d);

bool cremona_defined(const DegreeVector& deg, int d);

struct WeylOrbit {
    std::set<DegreeVector> elements;
    bool truncated = false;
};

// Orbit of deg under u-permutations and the Cremona move, truncated at cap.
WeylOrbit weyl_orbit(const DegreeVector& deg, int d, size_t cap);

}  // namespace cnr
