#include "halg/serialize.hpp"

#include <algorithm>
#include <map>

namespace halg {

namespace {

[[noreturn]] void bad(const std::string& what) { throw FormatError(what); }

Index read_index(const Json& j, const char* what) {
    if (!j.is_number_integer()) bad(std::string(what) + ": expected an integer");
    auto v = j.get<long long>();
    if (v < 0) bad(std::string(what) + ": negative");
    return static_cast<Index>(v);
}

const Json& field(const Json& j, const char* key) {
    if (!j.is_object()) bad(std::string("expected an object with \"") + key + "\"");
    auto it = j.find(key);
    if (it == j.end()) bad(std::string("missing field \"") + key + "\"");
    return *it;
}

Index label_index(const std::vector<std::string>& labels, const std::string& l) {
    auto it = std::find(labels.begin(), labels.end(), l);
    if (it == labels.end()) bad("unknown basis label \"" + l + "\"");
    return static_cast<Index>(it - labels.begin());
}

}  // namespace

Json scalar_json(const Scalar& s) { return s.str(); }

Scalar read_scalar(const Json& j) {
    if (j.is_number_integer()) return Scalar(static_cast<long>(j.get<long long>()));
    if (!j.is_string()) bad("scalar must be a string like \"1/2+3*i\"");
    try {
        return Scalar::parse(j.get<std::string>());
    } catch (const std::exception& e) {
        bad("bad scalar \"" + j.get<std::string>() + "\": " + e.what());
    }
}

Json vec_json(const Vec& v) {
    Json out = Json::array();
    for (const auto& [i, c] : v.entries()) out.push_back(Json::array({i, scalar_json(c)}));
    return out;
}

Vec read_vec(const Json& j, Index dim) {
    if (!j.is_array()) bad("vector must be an array of [index, scalar] pairs");
    VecAcc acc;
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 2) bad("vector entry must be [index, scalar]");
        Index i = read_index(e[0], "vector index");
        if (i >= dim) bad("vector index " + std::to_string(i) + " out of range " + std::to_string(dim));
        acc.add(i, read_scalar(e[1]));
    }
    return acc.take();
}

Json map_json(const LinMap& f) {
    Json cols = Json::array();
    for (Index c = 0; c < f.cols(); ++c) cols.push_back(vec_json(f.col(c)));
    return Json{{"rows", f.rows()}, {"cols", f.cols()}, {"antilinear", f.antilinear()}, {"columns", cols}};
}

LinMap read_map(const Json& j) {
    Index rows = read_index(field(j, "rows"), "rows"), cols = read_index(field(j, "cols"), "cols");
    bool anti = j.value("antilinear", false);
    const Json& cs = field(j, "columns");
    if (!cs.is_array() || cs.size() != static_cast<std::size_t>(cols)) bad("map needs exactly one entry per column");
    LinMap f(rows, cols, anti);
    for (Index c = 0; c < cols; ++c) f.set_col(c, read_vec(cs[c], rows));
    return f;
}

Vec read_labeled_vec(const Json& j, const std::vector<std::string>& labels) {
    if (!j.is_object()) bad("labeled vector must be an object {label: scalar}");
    VecAcc acc;
    for (const auto& [l, c] : j.items()) acc.add(label_index(labels, l), read_scalar(c));
    return acc.take();
}

LinMap read_labeled_map(const Json& j, const std::vector<std::string>& domain, const std::vector<std::string>& codomain,
                        bool antilinear) {
    if (!j.is_object()) bad("labeled map must be an object {column label: {row label: scalar}}");
    LinMap f(static_cast<Index>(codomain.size()), static_cast<Index>(domain.size()), antilinear);
    for (const auto& [l, col] : j.items()) f.set_col(label_index(domain, l), read_labeled_vec(col, codomain));
    return f;
}

Vec read_any_vec(const Json& j, const std::vector<std::string>& labels) {
    return j.is_array() ? read_vec(j, static_cast<Index>(labels.size())) : read_labeled_vec(j, labels);
}

LinMap read_any_map(const Json& j, const std::vector<std::string>& domain, const std::vector<std::string>& codomain,
                    bool antilinear) {
    if (j.is_string() && j.get<std::string>() == "identity") {
        if (domain != codomain) bad("identity needs equal domain and codomain");
        return LinMap::identity(static_cast<Index>(domain.size())).with_antilinear(antilinear);
    }
    if (j.is_object() && j.contains("columns")) {
        LinMap f = read_map(j);
        if (f.rows() != static_cast<Index>(codomain.size()) || f.cols() != static_cast<Index>(domain.size()))
            bad("map has shape " + std::to_string(f.rows()) + "x" + std::to_string(f.cols()) + ", expected " +
                std::to_string(codomain.size()) + "x" + std::to_string(domain.size()));
        return f;
    }
    return read_labeled_map(j, domain, codomain, antilinear);
}

Json algebra_json(const Algebra& a) {
    Json prods = Json::array();
    for (Index i = 0; i < a.dim(); ++i)
        for (Index j = 0; j < a.dim(); ++j)
            if (!a.product(i, j).empty()) prods.push_back(Json::array({i, j, vec_json(a.product(i, j))}));
    return Json{{"labels", a.labels()}, {"unit", vec_json(a.unit())}, {"products", prods}};
}

Algebra read_algebra(const Json& j) {
    const Json& ls = field(j, "labels");
    if (!ls.is_array() || ls.empty()) bad("algebra labels must be a non-empty array");
    std::vector<std::string> labels;
    for (const auto& l : ls) {
        if (!l.is_string()) bad("algebra labels must be strings");
        labels.push_back(l.get<std::string>());
    }
    const Index n = static_cast<Index>(labels.size());
    std::vector<Vec> prod(static_cast<std::size_t>(n * n));
    for (const auto& p : field(j, "products")) {
        if (!p.is_array() || p.size() != 3) bad("product entry must be [i, j, vector]");
        Index a = read_index(p[0], "product index"), b = read_index(p[1], "product index");
        if (a >= n || b >= n) bad("product index out of range");
        prod[a * n + b] = read_vec(p[2], n);
    }
    return Algebra(labels, prod, read_vec(field(j, "unit"), n));
}

Json subspace_json(const Subspace& s) {
    Json basis = Json::array();
    for (const auto& v : s.basis()) basis.push_back(vec_json(v));
    return Json{{"ambient", s.ambient()}, {"dim", s.dim()}, {"basis", basis}};
}

Subspace read_subspace(const Json& j) {
    Index amb = read_index(field(j, "ambient"), "ambient");
    std::vector<Vec> gens;
    for (const auto& v : field(j, "basis")) gens.push_back(read_vec(v, amb));
    return Subspace::span(amb, gens);
}

namespace {

const char* const kMapNames[] = {"s_l", "t_l", "delta_l", "eps_l", "s_r", "t_r", "delta_r", "eps_r",
                                 "S",   "star_H", "star_Al", "star_Ar"};

template <class H>
auto algebroid_maps(H& h) {
    auto& c = h.core;
    return std::vector<decltype(&c.S)>{&c.left.s, &c.left.t, &c.left.delta, &c.left.eps, &c.right.s, &c.right.t, &c.right.delta,
            &c.right.eps, &c.S, &h.star_H, &h.star_Al, &h.star_Ar};
}

}  // namespace

Json algebroid_json(const StarHopfAlgebroid& h) {
    Json out{{"kind", "hopf-algebroid"},
             {"H", algebra_json(h.core.H())},
             {"A_l", algebra_json(h.core.left.A)},
             {"A_r", algebra_json(h.core.right.A)}};
    auto maps = algebroid_maps(h);
    for (std::size_t i = 0; i < maps.size(); ++i) out[kMapNames[i]] = map_json(*maps[i]);
    return out;
}

StarHopfAlgebroid read_algebroid(const Json& j) {
    StarHopfAlgebroid h;
    Algebra H = read_algebra(field(j, "H"));
    h.core.left.H = H;
    h.core.right.H = H;
    h.core.left.A = read_algebra(field(j, "A_l"));
    h.core.right.A = read_algebra(field(j, "A_r"));
    auto maps = algebroid_maps(h);
    for (std::size_t i = 0; i < maps.size(); ++i) *maps[i] = read_map(field(j, kMapNames[i]));
    try {
        validate_shapes(h.core.left);
        validate_shapes(h.core.right);
    } catch (const std::exception& e) {
        bad(std::string("algebroid shapes: ") + e.what());
    }
    const Index n = H.dim(), nl = h.core.left.A.dim(), nr = h.core.right.A.dim();
    auto square = [&](const LinMap& f, Index d, const char* name) {
        if (f.rows() != d || f.cols() != d) bad(std::string(name) + " must be square of size " + std::to_string(d));
    };
    square(h.core.S, n, "S");
    square(h.star_H, n, "star_H");
    square(h.star_Al, nl, "star_Al");
    square(h.star_Ar, nr, "star_Ar");
    return h;
}

Json module_json(const HModule& m) {
    Json act = Json::array();
    for (const auto& a : m.act) act.push_back(map_json(a));
    return Json{{"labels", m.labels}, {"act", act}};
}

HModule read_module(const Json& j) {
    HModule m;
    m.labels = field(j, "labels").get<std::vector<std::string>>();
    for (const auto& a : field(j, "act")) {
        LinMap f = read_map(a);
        if (f.rows() != m.dim() || f.cols() != m.dim()) bad("module action matrices must be square of the module size");
        m.act.push_back(f);
    }
    return m;
}

Json dga_json(const DGA& c) {
    Json out{{"algebra", algebra_json(c.alg())}, {"degrees", c.graded.degree}, {"d", map_json(c.d)}};
    if (c.has_star()) out["star"] = map_json(c.star);
    return out;
}

DGA read_dga(const Json& j) {
    DGA c;
    c.graded.alg = read_algebra(field(j, "algebra"));
    c.graded.degree = field(j, "degrees").get<std::vector<int>>();
    if (static_cast<Index>(c.graded.degree.size()) != c.dim()) bad("one degree per basis element expected");
    c.d = read_map(field(j, "d"));
    if (c.d.rows() != c.dim() || c.d.cols() != c.dim()) bad("d must be square of the algebra size");
    if (j.contains("star")) {
        c.star = read_map(j["star"]);
        if (c.star.rows() != c.dim() || c.star.cols() != c.dim()) bad("star must be square of the algebra size");
    }
    return c;
}

Json kahler_json(const KahlerStructure& k) {
    Json comps = Json::array();
    for (const auto& [b, s] : k.bg.components)
        comps.push_back(Json{{"bidegree", {b.first, b.second}}, {"space", subspace_json(s)}});
    Json out{{"kind", "kahler"},
             {"dga", dga_json(k.dga)},
             {"bigrading", comps},
             {"sigma", vec_json(k.sigma)},
             {"orientation", {{"top", k.orient.top}, {"vol", map_json(k.orient.vol)}, {"tau", map_json(k.orient.tau)}}}};
    if (k.h && k.action) out["symmetry"] = Json{{"hopf_algebroid", algebroid_json(*k.h)}, {"module", module_json(*k.action)}};
    return out;
}

KahlerStructure read_kahler(const Json& j) {
    KahlerStructure k;
    k.dga = read_dga(field(j, "dga"));
    for (const auto& c : field(j, "bigrading")) {
        auto b = field(c, "bidegree").get<std::vector<int>>();
        if (b.size() != 2) bad("bidegree must be [a, b]");
        Subspace s = read_subspace(field(c, "space"));
        if (s.ambient() != k.dga.dim()) bad("bigrading component in the wrong ambient space");
        k.bg.components[{b[0], b[1]}] = s;
    }
    k.sigma = read_vec(field(j, "sigma"), k.dga.dim());
    const Json& o = field(j, "orientation");
    k.orient.top = field(o, "top").get<int>();
    k.orient.vol = read_map(field(o, "vol"));
    k.orient.tau = read_map(field(o, "tau"));
    if (k.orient.vol.cols() != k.dga.dim()) bad("vol must be defined on the whole algebra");
    if (k.orient.tau.rows() != 1 || k.orient.tau.cols() != k.orient.vol.rows()) bad("tau must be a functional on the degree-zero part");
    if (j.contains("symmetry")) {
        k.h = read_algebroid(field(j["symmetry"], "hopf_algebroid"));
        k.action = read_module(field(j["symmetry"], "module"));
        if (k.action->dim() != k.dga.dim() || static_cast<Index>(k.action->act.size()) != k.h->core.H().dim())
            bad("symmetry module does not match the algebra and the algebroid");
    }
    return k;
}

Json finite_set_json(const FiniteSetBialgebroid& f) {
    return Json{{"kind", "finite-set-bialgebroid"},
                {"n", f.n},
                {"arrows", f.big.core.H().labels()},
                {"h0", subspace_json(f.h0)},
                {"H", subspace_json(f.H)},
                {"commutant", {{"dim", f.commutant.dim()}}}};
}

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        std::size_t line = 1, col = 1, end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
        for (std::size_t i = 0; i < end; ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        // nlohmann prefixes its own position; keep only the reason
        std::string msg = e.what();
        auto p = msg.find(": ", msg.find("parse error"));
        throw FormatError("line " + std::to_string(line) + ", column " + std::to_string(col) + ": " +
                          (p == std::string::npos ? msg : msg.substr(p + 2)));
    }
}

}  // namespace halg
