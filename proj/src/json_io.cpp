#include "cnr/json_io.hpp"

#include <fstream>

namespace cnr {

namespace {

bool literal_uses_t(const std::string& s) { return s.find('t') != std::string::npos; }

}  // namespace

ConfigInput parse_config(const Json& j) {
    ConfigInput in;
    int d = j.at("d").get<int>();
    int n = j.at("n").get<int>();
    const auto& rows = j.at("A");
    if (static_cast<int>(rows.size()) != d) throw ParseError("config: A must have d rows");
    bool over_t = false;
    for (const auto& row : rows)
        for (const auto& cell : row)
            over_t = over_t || literal_uses_t(cell.get<std::string>());
    in.over_t = over_t;
    if (over_t) {
        in.t.d = d;
        in.t.n = n;
        in.t.A = TMatrix(d, n);
    } else {
        in.q.d = d;
        in.q.n = n;
        in.q.A = QMatrix(d, n);
    }
    for (int i = 0; i < d; ++i) {
        const auto& row = rows[i];
        if (static_cast<int>(row.size()) != n) throw ParseError("config: A row has wrong length");
        for (int jj = 0; jj < n; ++jj) {
            TScalar s = TScalar::parse(row[jj].get<std::string>());
            if (over_t) {
                in.t.A.at(i, jj) = s;
            } else {
                in.q.A.at(i, jj) = s.rational_value();
            }
        }
    }
    return in;
}

ConfigInput load_config(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open " + path);
    Json j;
    f >> j;
    return parse_config(j);
}

TMatrix parse_tmatrix(const Json& j, const std::string& key) {
    const auto& rows = j.at(key);
    int r = static_cast<int>(rows.size());
    int c = static_cast<int>(rows[0].size());
    TMatrix m(r, c);
    for (int i = 0; i < r; ++i)
        for (int jj = 0; jj < c; ++jj)
            m.at(i, jj) = TScalar::parse(rows[i][jj].get<std::string>());
    return m;
}

QMatrix parse_qmatrix(const Json& j, const std::string& key) {
    TMatrix t = parse_tmatrix(j, key);
    QMatrix m(t.rows(), t.cols());
    for (int i = 0; i < t.rows(); ++i)
        for (int jj = 0; jj < t.cols(); ++jj) m.at(i, jj) = t.at(i, jj).rational_value();
    return m;
}

std::vector<std::vector<BigInt>> parse_generators(const Json& j) {
    std::vector<std::vector<BigInt>> out;
    for (const auto& row : j.at("generators")) {
        std::vector<BigInt> v;
        for (const auto& cell : row) {
            if (cell.is_number_integer())
                v.emplace_back(cell.get<long>());
            else
                v.emplace_back(cell.get<std::string>());
        }
        out.push_back(std::move(v));
    }
    return out;
}

Json cone_to_json(const PolyCone& cone, bool with_f_vector) {
    Json out;
    out["ambient_dim"] = cone.ambient_dim;
    Json facets = Json::array();
    for (const auto& h : cone.facets) {
        Json row = Json::array();
        for (const auto& x : h)
            row.push_back(x.fits_slong_p() ? Json(x.get_si()) : Json(x.get_str()));
        facets.push_back(row);
    }
    out["facets"] = facets;
    if (with_f_vector) out["f_vector"] = f_vector(cone);
    return out;
}

Json generator_set_to_json(const GeneratorSet& set) {
    Json out = Json::array();
    for (const auto& g : set.gens) {
        Json item;
        item["label"] = g.label;
        item["degree"] = g.degree.str();
        Json terms = Json::array();
        for (const auto& [m, c] : g.poly.terms())
            terms.push_back(Json{{"m", m.str()}, {"c", c.str()}});
        item["terms"] = terms;
        auto in = initial_monomial(g.poly);
        if (in) item["initial"] = in->str();
        out.push_back(item);
    }
    return out;
}

TrivalentTree parse_tree(const std::string& spec) {
    if (spec.rfind("caterpillar:", 0) == 0)
        return TrivalentTree::caterpillar(std::stoi(spec.substr(12)));
    Json j;
    if (!spec.empty() && spec[0] == '{') {
        j = Json::parse(spec);
    } else {
        std::ifstream f(spec);
        if (!f) throw ParseError("cannot open tree file " + spec);
        f >> j;
    }
    int n = j.at("n").get<int>();
    std::vector<std::pair<std::vector<int>, std::vector<int>>> splits;
    for (const auto& s : j.at("splits"))
        splits.emplace_back(s[0].get<std::vector<int>>(), s[1].get<std::vector<int>>());
    return TrivalentTree::from_splits(n, splits);
}

}  // namespace cnr
