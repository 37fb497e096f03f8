#include "cnr/degree.hpp"

#include <algorithm>
#include <deque>

namespace cnr {

long long DegreeVector::usum() const {
    long long s = 0;
    for (int x : u) s += x;
    return s;
}

std::string DegreeVector::str() const {
    std::string out = std::to_string(r);
    for (int x : u) out += "," + std::to_string(x);
    return out;
}

DegreeVector DegreeVector::parse(const std::string& s) {
    DegreeVector d;
    std::vector<int> vals;
    size_t pos = 0;
    while (pos < s.size()) {
        size_t next = s.find(',', pos);
        if (next == std::string::npos) next = s.size();
        std::string tok = s.substr(pos, next - pos);
        while (!tok.empty() && tok.front() == ' ') tok.erase(tok.begin());
        while (!tok.empty() && tok.back() == ' ') tok.pop_back();
        if (tok.empty()) throw ParseError("empty entry in degree '" + s + "'");
        vals.push_back(std::stoi(tok));
        pos = next + 1;
    }
    if (vals.empty()) throw ParseError("empty degree literal");
    d.r = vals[0];
    d.u.assign(vals.begin() + 1, vals.end());
    return d;
}

static DegreeVector cremona_raw(const DegreeVector& deg, int d) {
    long long s = 0;
    for (int i = 0; i < d; ++i) s += deg.u[i];
    DegreeVector out;
    out.r = static_cast<int>(s - deg.r);
    out.u = deg.u;
    for (int j = d; j < deg.n(); ++j)
        out.u[j] = static_cast<int>(s - 2 * deg.r + deg.u[j]);
    return out;
}

DegreeVector cremona(const DegreeVector& deg, int d) {
    if (d > deg.n()) throw DimensionMismatch("cremona: d exceeds n");
    DegreeVector out = cremona_raw(deg, d);
    if (out.r < 0) throw NegativeDegree();
    for (int x : out.u)
        if (x < 0) throw NegativeDegree();
    return out;
}

bool cremona_defined(const DegreeVector& deg, int d) {
    if (d > deg.n()) return false;
    DegreeVector out = cremona_raw(deg, d);
    if (out.r < 0) return false;
    for (int x : out.u)
        if (x < 0) return false;
    return true;
}

WeylOrbit weyl_orbit(const DegreeVector& deg, int d, size_t cap) {
    WeylOrbit orbit;
    std::deque<DegreeVector> queue{deg};
    orbit.elements.insert(deg);
    while (!queue.empty()) {
        if (orbit.elements.size() >= cap) { orbit.truncated = true; break; }
        DegreeVector cur = queue.front();
        queue.pop_front();
        auto push = [&](DegreeVector next) {
            if (orbit.elements.insert(next).second) queue.push_back(std::move(next));
        };
        for (int i = 0; i + 1 < cur.n(); ++i) {
            DegreeVector next = cur;
            std::swap(next.u[i], next.u[i + 1]);
            push(std::move(next));
        }
        if (cremona_defined(cur, d)) push(cremona_raw(cur, d));
    }
    return orbit;
}

}  // namespace cnr
