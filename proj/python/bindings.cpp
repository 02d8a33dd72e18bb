// Python module: reports and constructions cross the boundary as JSON text.
#include "halg/specfile.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <filesystem>

namespace py = pybind11;
using namespace halg;

namespace {

std::string check_file(const std::string& path, bool serial) {
    Json spec = load_spec_file(path);
    std::string dir = std::filesystem::path(path).parent_path().string();
    py::gil_scoped_release release;
    return report_json(run_spec(spec, dir.empty() ? "." : dir, limits_from_env(), !serial)).dump();
}

std::string check_text(const std::string& text, const std::string& base_dir, bool serial) {
    Json spec = parse_json(text);
    py::gil_scoped_release release;
    return report_json(run_spec(spec, base_dir, limits_from_env(), !serial)).dump();
}

std::string invariants_json(const std::string& path, const std::string& id) {
    std::string dir = std::filesystem::path(path).parent_path().string();
    InvariantListing l = invariants_of(load_spec_file(path), dir.empty() ? "." : dir, id, limits_from_env());
    Json out{{"id", l.id}, {"kind", l.kind}, {"labels", l.labels}, {"degrees", Json::array()}};
    for (std::size_t k = 0; k < l.per_degree.size(); ++k) {
        const auto& [deg, space] = l.per_degree[k];
        out["degrees"].push_back({{"degree", deg}, {"dim", space.dim()}, {"ambient", l.ambient[k]},
                                  {"basis", subspace_json(space).at("basis")}});
    }
    return out.dump();
}

Index exact_rank(const std::vector<std::vector<std::string>>& rows) {
    const Index r = static_cast<Index>(rows.size()), c = r ? static_cast<Index>(rows[0].size()) : 0;
    LinMap f(r, c);
    for (Index j = 0; j < c; ++j) {
        Vec col;
        for (Index i = 0; i < r; ++i) {
            if (static_cast<Index>(rows[i].size()) != c) throw FormatError("rank: ragged rows");
            col.push_back(i, read_scalar(Json(rows[i][j])));
        }
        f.set_col(j, col);
    }
    return rank(f);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);
    m.def("check_file", &check_file, py::arg("path"), py::arg("serial") = false);
    m.def("check_text", &check_text, py::arg("text"), py::arg("base_dir") = ".", py::arg("serial") = false);
    m.def("construct", [](const std::string& p) { return construct_preset(p, limits_from_env()).dump(); });
    m.def("presets", &preset_names);
    m.def("invariants", &invariants_json, py::arg("path"), py::arg("id"));
    m.def("rank", &exact_rank, "Exact rank of a matrix of Gaussian-rational strings.");
}
