#include "cnr/xypoly.hpp"

#include <algorithm>
#include <sstream>

namespace cnr {

DegreeVector XYMonomial::degree() const {
    DegreeVector d;
    d.u.resize(n());
    for (int i = 0; i < n(); ++i) {
        d.r += b[i];
        d.u[i] = a[i] + b[i];
    }
    return d;
}

XYMonomial XYMonomial::operator*(const XYMonomial& o) const {
    XYMonomial r = *this;
    for (int i = 0; i < n(); ++i) {
        r.a[i] += o.a[i];
        r.b[i] += o.b[i];
    }
    return r;
}

std::string XYMonomial::str() const {
    std::string out;
    auto app = [&](char v, int i, int e) {
        if (e == 0) return;
        if (!out.empty()) out += " ";
        out += v;
        out += std::to_string(i + 1);
        if (e > 1) out += "^" + std::to_string(e);
    };
    for (int i = 0; i < n(); ++i) {
        app('x', i, a[i]);
        app('y', i, b[i]);
    }
    if (out.empty()) out = "1";
    return out;
}

XYMonomial XYMonomial::parse(const std::string& s, int n) {
    XYMonomial m(n);
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) {
        if (tok == "1") continue;
        if (tok.size() < 2 || (tok[0] != 'x' && tok[0] != 'y'))
            throw ParseError("bad monomial factor '" + tok + "'");
        size_t caret = tok.find('^');
        int idx = std::stoi(tok.substr(1, caret == std::string::npos ? std::string::npos : caret - 1));
        int exp = caret == std::string::npos ? 1 : std::stoi(tok.substr(caret + 1));
        if (idx < 1 || idx > n) throw ParseError("variable index out of range in '" + tok + "'");
        (tok[0] == 'x' ? m.a : m.b)[idx - 1] += exp;
    }
    return m;
}

void XYPolynomial::add_term(const XYMonomial& m, const TScalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

XYPolynomial XYPolynomial::operator+(const XYPolynomial& o) const {
    XYPolynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

XYPolynomial XYPolynomial::operator-(const XYPolynomial& o) const {
    XYPolynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

XYPolynomial XYPolynomial::operator*(const XYPolynomial& o) const {
    XYPolynomial r(n_);
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) r.add_term(m1 * m2, c1 * c2);
    return r;
}

XYPolynomial XYPolynomial::scaled(const TScalar& c) const {
    XYPolynomial r(n_);
    if (c.is_zero()) return r;
    for (const auto& [m, cc] : terms_) r.add_term(m, cc * c);
    return r;
}

bool XYPolynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    DegreeVector d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_)
        if (!(m.degree() == d)) return false;
    return true;
}

DegreeVector XYPolynomial::degree() const {
    if (terms_.empty()) throw ZeroPolynomial();
    return terms_.begin()->first.degree();
}

std::string XYPolynomial::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        if (!out.empty()) out += " + ";
        out += "(" + c.str() + ")*" + m.str();
    }
    return out;
}

namespace {
// The x-part of a monomial, with b cleared: the expansion rebuilds b per variable.
XYMonomial m_without_y(const XYMonomial& m) {
    XYMonomial r = m;
    std::fill(r.b.begin(), r.b.end(), 0);
    return r;
}
}  // namespace

InitialForm initial_form(const XYPolynomial& f) {
    if (f.is_zero()) throw ZeroPolynomial();
    InitialForm out;
    bool first = true;
    int best = 0;
    for (const auto& [m, c] : f.terms()) {
        int o = c.order();
        if (first || o < best) {
            best = o;
            out.monomial = m;
            out.coefficient = c.initial_coefficient();
            out.tied.clear();
            out.tied.push_back(m);
            first = false;
        } else if (o == best) {
            out.tied.push_back(m);
        }
    }
    out.order = best;
    out.moneric = out.tied.size() == 1;
    if (out.moneric) out.tied.clear();
    return out;
}

std::optional<XYMonomial> initial_monomial(const XYPolynomial& f) {
    InitialForm in = initial_form(f);
    if (!in.moneric) return std::nullopt;
    return in.monomial;
}

bool nagata_invariance(const XYPolynomial& f, const std::vector<std::vector<TScalar>>& g_basis) {
    const int n = f.n();
    for (const auto& lambda : g_basis) {
        if (static_cast<int>(lambda.size()) != n)
            throw DimensionMismatch("nagata_invariance: lambda has wrong length");
        // Collects f(x, y + s*lambda*x) grouped by the s-degree; invariance
        // means every s^k component with k >= 1 cancels.
        std::map<std::pair<int, XYMonomial>, TScalar> graded;
        for (const auto& [m, c] : f.terms()) {
            // expand prod_i (y_i + s lambda_i x_i)^(b_i), s-degree = sum of k_i
            std::vector<std::tuple<int, XYMonomial, TScalar>> expansion{{0, m_without_y(m), c}};
            for (int i = 0; i < n; ++i) {
                if (m.b[i] == 0) continue;
                std::vector<std::tuple<int, XYMonomial, TScalar>> next;
                for (int k = 0; k <= m.b[i]; ++k) {
                    if (k > 0 && lambda[i].is_zero()) break;
                    BigInt bin;
                    mpz_bin_uiui(bin.get_mpz_t(), m.b[i], k);
                    TScalar coef = TScalar(BigRational(bin));
                    for (int p = 0; p < k; ++p) coef *= lambda[i];
                    for (const auto& [sd, pm, pc] : expansion) {
                        XYMonomial nm = pm;
                        nm.a[i] += k;
                        nm.b[i] += m.b[i] - k;
                        next.emplace_back(sd + k, nm, pc * coef);
                    }
                }
                expansion = std::move(next);
            }
            for (const auto& [sd, pm, pc] : expansion) {
                if (sd == 0) continue;
                auto key = std::make_pair(sd, pm);
                auto it = graded.find(key);
                if (it == graded.end())
                    graded.emplace(key, pc);
                else {
                    it->second += pc;
                    if (it->second.is_zero()) graded.erase(it);
                }
            }
        }
        if (!graded.empty()) return false;
    }
    return true;
}

bool nagata_invariance(const XYPolynomial& f, const TConfig& cfg,
                       const std::vector<std::vector<TScalar>>& g_basis) {
    for (const auto& lambda : g_basis) {
        for (int i = 0; i < cfg.d; ++i) {
            TScalar acc;
            for (int j = 0; j < cfg.n; ++j) acc += cfg.A.at(i, j) * lambda[j];
            if (!acc.is_zero()) throw NotInKernel();
        }
    }
    return nagata_invariance(f, g_basis);
}

}  // namespace cnr
