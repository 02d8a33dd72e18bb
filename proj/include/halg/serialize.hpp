#pragma once

#include "halg/kahler.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace halg {

using Json = nlohmann::ordered_json;

// Malformed input: bad JSON, unknown names, shape mismatches.
struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Scalars travel as strings "p/q" or "p/q+r/s*i".
Json scalar_json(const Scalar& s);
Scalar read_scalar(const Json& j);

// Vectors as [[index, "c"], ...] with ascending indices.
Json vec_json(const Vec& v);
Vec read_vec(const Json& j, Index dim);

Json map_json(const LinMap& f);
LinMap read_map(const Json& j);

// Alternative forms keyed by basis labels: {"col": {"row": "c"}} and {"label": "c"}.
LinMap read_labeled_map(const Json& j, const std::vector<std::string>& domain,
                        const std::vector<std::string>& codomain, bool antilinear = false);
Vec read_labeled_vec(const Json& j, const std::vector<std::string>& labels);
// Either form: an array is read by read_vec, an object by read_labeled_vec.
Vec read_any_vec(const Json& j, const std::vector<std::string>& labels);
LinMap read_any_map(const Json& j, const std::vector<std::string>& domain, const std::vector<std::string>& codomain,
                    bool antilinear = false);

Json algebra_json(const Algebra& a);
Algebra read_algebra(const Json& j);

Json subspace_json(const Subspace& s);
Subspace read_subspace(const Json& j);

Json algebroid_json(const StarHopfAlgebroid& h);
StarHopfAlgebroid read_algebroid(const Json& j);

Json module_json(const HModule& m);
HModule read_module(const Json& j);

Json dga_json(const DGA& c);
DGA read_dga(const Json& j);

Json kahler_json(const KahlerStructure& k);
KahlerStructure read_kahler(const Json& j);

Json finite_set_json(const FiniteSetBialgebroid& f);

// Parses text, turning parse errors into FormatError with line and column.
Json parse_json(const std::string& text);

}  // namespace halg
