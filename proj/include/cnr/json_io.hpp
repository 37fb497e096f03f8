#pragma once

#include <string>

#include "json.hpp"

#include "cnr/apolarity.hpp"
#include "cnr/cone.hpp"
#include "cnr/generators.hpp"
#include "cnr/phylo.hpp"
#include "cnr/zonotopal.hpp"

namespace cnr {

using Json = nlohmann::json;

// {"d":3,"n":6,"A":[["1","0",...],...]} with scalar literals; entries may
// involve t, in which case the rational view is unavailable.
struct ConfigInput {
    bool over_t = false;
    QConfig q;
    TConfig t;

    TConfig as_t() const { return over_t ? t : to_tconfig(q); }
};

ConfigInput parse_config(const Json& j);
ConfigInput load_config(const std::string& path);

// {"rows":r,"cols":c,"M":[["..."]]} or plain {"M":[...]}; scalar literals.
TMatrix parse_tmatrix(const Json& j, const std::string& key = "M");
QMatrix parse_qmatrix(const Json& j, const std::string& key = "M");

std::vector<std::vector<BigInt>> parse_generators(const Json& j);

Json cone_to_json(const PolyCone& cone, bool with_f_vector);
Json generator_set_to_json(const GeneratorSet& set);

TrivalentTree parse_tree(const std::string& spec);  // "caterpillar:6" or a file path / inline JSON

}  // namespace cnr
