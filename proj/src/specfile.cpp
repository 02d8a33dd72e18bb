#include "halg/specfile.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <future>
#include <map>
#include <memory>
#include <sstream>

namespace halg {

namespace {

[[noreturn]] void bad(const std::string& what) { throw FormatError(what); }

int parse_count(const std::string& s, const std::string& where) {
    std::size_t used = 0;
    int n = 0;
    try {
        n = std::stoi(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != s.size() || n < 1) bad("bad count \"" + s + "\" in " + where);
    return n;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

// Everything that goes wrong while reading a name becomes a FormatError.
template <class F>
auto named(const std::string& what, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const FormatError&) {
        throw;
    } catch (const std::exception& e) {
        bad(what + ": " + e.what());
    }
}

StarAlgebra algebra_by_name(const std::string& name) {
    if (name == "ground") return ground_star_algebra();
    if (name.size() > 1 && name[0] == 'C') return function_algebra(parse_count(name.substr(1), name));
    bad("unknown algebra \"" + name + "\" (use ground or C<n>)");
}

// "cm:<group>:<alg>[:<perm>]"; without a perm the action is trivial on ground and by rotation on C<n>.
StarHopfAlgebroid cm_preset(const std::vector<std::string>& parts) {
    if (parts.size() < 3 || parts.size() > 4) bad("cm preset is cm:<group>:<alg>[:<perm>]");
    Group g = named("group", [&] { return group_by_name(parts[1]); });
    HopfAlgebra q = group_algebra(g);
    StarAlgebra a = algebra_by_name(parts[2]);
    ModuleAlgebraAction act;
    std::string perm = parts.size() == 4 ? parts[3] : (parts[2] == "ground" ? "trivial" : "rot" + parts[2].substr(1));
    if (perm == "trivial") {
        act = trivial_action(q, a);
    } else {
        if (parts[2] == "ground") bad("the ground field only carries the trivial action");
        auto p = named("action", [&] { return action_by_name(g, perm); });
        if (p.empty() || static_cast<Index>(p[0].size()) != a.alg.dim()) bad("action " + perm + " does not act on " + parts[2]);
        act = permutation_action(q, p);
    }
    return named("cm preset", [&] { return connes_moscovici(q, a, act); });
}

bool is_groupoid_preset(const std::string& kind) {
    return kind == "pair" || kind == "unit" || kind == "point" || kind == "action";
}

StarHopfAlgebroid algebroid_preset(const std::string& preset) {
    auto parts = split(preset, ':');
    const std::string& kind = parts[0];
    if (is_groupoid_preset(kind))
        return named("preset " + preset, [&] { return convolution_algebroid(groupoid_by_name(preset)); });
    if (kind == "enveloping") {
        if (parts.size() != 2) bad("enveloping preset is enveloping:<alg>");
        return enveloping_algebroid(algebra_by_name(parts[1]));
    }
    if (kind == "cm") return cm_preset(parts);
    bad("unknown preset \"" + preset + "\"");
}

enum class Kind { algebroid, module, calculus, finite_set, kahler };

const char* kind_name(Kind k) {
    switch (k) {
        case Kind::algebroid: return "hopf-algebroid";
        case Kind::module: return "module";
        case Kind::calculus: return "calculus";
        case Kind::finite_set: return "finite-set-bialgebroid";
        case Kind::kahler: return "kahler";
    }
    return "?";
}

struct GroupoidSource {
    FiniteGroupoid g;
    std::vector<std::vector<int>> phi;
    int max_degree = 2;
};

struct Structure {
    Kind kind = Kind::algebroid;
    std::shared_ptr<StarHopfAlgebroid> algebroid;
    std::shared_ptr<HModuleAlgebra> module;  // with the algebroid it is over
    std::optional<LinMap> state;
    std::shared_ptr<CovariantCalculus> calculus;
    std::optional<GroupoidSource> groupoid;
    std::shared_ptr<FiniteSetBialgebroid> finite_set;
    std::shared_ptr<KahlerStructure> kahler;
    bool hermitian = true;  // false for complex-structure-only Kähler entries
};

// Domain and codomain labels of a named algebroid map.
std::pair<std::vector<std::string>, std::vector<std::string>> map_labels(const StarHopfAlgebroid& h, const std::string& m) {
    const auto& H = h.core.H().labels();
    const auto& Al = h.core.left.A.labels();
    const auto& Ar = h.core.right.A.labels();
    std::vector<std::string> HH;
    for (const auto& x : H)
        for (const auto& y : H) HH.push_back(x + "⊗" + y);
    if (m == "s_l" || m == "t_l") return {Al, H};
    if (m == "s_r" || m == "t_r") return {Ar, H};
    if (m == "delta_l" || m == "delta_r") return {H, HH};
    if (m == "eps_l") return {H, Al};
    if (m == "eps_r") return {H, Ar};
    if (m == "S" || m == "star_H") return {H, H};
    if (m == "star_Al") return {Al, Al};
    if (m == "star_Ar") return {Ar, Ar};
    bad("unknown algebroid map \"" + m + "\"");
}

LinMap& map_ref(StarHopfAlgebroid& h, const std::string& m) {
    auto& c = h.core;
    if (m == "s_l") return c.left.s;
    if (m == "t_l") return c.left.t;
    if (m == "delta_l") return c.left.delta;
    if (m == "eps_l") return c.left.eps;
    if (m == "s_r") return c.right.s;
    if (m == "t_r") return c.right.t;
    if (m == "delta_r") return c.right.delta;
    if (m == "eps_r") return c.right.eps;
    if (m == "S") return c.S;
    if (m == "star_H") return h.star_H;
    if (m == "star_Al") return h.star_Al;
    if (m == "star_Ar") return h.star_Ar;
    bad("unknown algebroid map \"" + m + "\"");
}

void apply_overrides(StarHopfAlgebroid& h, const Json& overrides) {
    if (!overrides.is_array()) bad("overrides must be an array");
    for (const auto& o : overrides) {
        if (o.contains("set_column")) {
            const Json& s = o["set_column"];
            std::string m = s.at("map").get<std::string>();
            auto [dom, cod] = map_labels(h, m);
            LinMap& f = map_ref(h, m);
            auto col = std::find(dom.begin(), dom.end(), s.at("column").get<std::string>());
            if (col == dom.end()) bad("unknown column \"" + s.at("column").get<std::string>() + "\" of " + m);
            f.set_col(static_cast<Index>(col - dom.begin()), read_any_vec(s.at("value"), cod));
        } else if (o.contains("swap")) {
            auto names = o["swap"].get<std::vector<std::string>>();
            if (names.size() != 2) bad("swap needs two map names");
            LinMap& a = map_ref(h, names[0]);
            LinMap& b = map_ref(h, names[1]);
            if (a.rows() != b.rows() || a.cols() != b.cols()) bad("swap of maps with different shapes");
            std::swap(a, b);
        } else if (o.contains("linear")) {
            LinMap& f = map_ref(h, o["linear"].get<std::string>());
            f = f.with_antilinear(false);
        } else {
            bad("override must be set_column, swap or linear");
        }
    }
}

// Symmetry of a Hopf algebra Q = group algebra on a DGA: one matrix per group element.
struct Symmetry {
    HopfAlgebra q;
    std::vector<LinMap> act;
};

Symmetry read_symmetry(const Json& s, const DGA& c, std::optional<Index> points) {
    Group g = named("group", [&] { return group_by_name(s.at("group").get<std::string>()); });
    Symmetry out{group_algebra(g), {}};
    const auto& labels = c.alg().labels();
    const auto& qlabels = out.q.alg.alg.labels();
    if (s.contains("action") || s.contains("permutations")) {
        if (!points) bad("permutation symmetries need a universal calculus");
        std::vector<std::vector<int>> perm;
        if (s.contains("action")) {
            perm = named("action", [&] { return action_by_name(g, s["action"].get<std::string>()); });
        } else {
            // 1-based images of the points, keyed by group element
            for (const auto& name : qlabels) {
                if (!s["permutations"].contains(name)) bad("no permutation for group element " + name);
                std::vector<int> p;
                for (int x : s["permutations"][name].get<std::vector<int>>()) p.push_back(x - 1);
                perm.push_back(p);
            }
        }
        for (const auto& p : perm) {
            if (static_cast<Index>(p.size()) != *points) bad("permutation on the wrong number of points");
            out.act.push_back(named("permutation", [&] { return permute_forms(c, *points, p); }));
        }
    } else if (s.contains("matrices")) {
        for (const auto& name : qlabels) {
            if (!s["matrices"].contains(name)) bad("no matrix for group element " + name);
            out.act.push_back(read_any_map(s["matrices"][name], labels, labels));
        }
    } else {
        bad("symmetry needs action, permutations or matrices");
    }
    return out;
}

Structure calculus_structure(const Json& j) {
    Structure st;
    st.kind = Kind::calculus;
    if (j.contains("groupoid")) {
        std::string preset = j["groupoid"].get<std::string>();
        GroupoidSource src;
        src.g = named("groupoid", [&] { return groupoid_by_name(preset); });
        src.phi = named("groupoid", [&] { return arrow_bijections(src.g, preset); });
        src.max_degree = j.value("max_degree", 2);
        if (src.max_degree < 1) bad("max_degree must be at least 1");
        st.calculus = std::make_shared<CovariantCalculus>(groupoid_calculus(src.g, src.phi, src.max_degree));
        st.groupoid = src;
        return st;
    }
    if (!j.contains("universal")) bad("calculus needs groupoid or universal");
    Index n = j["universal"].get<Index>();
    int max = j.value("max_degree", 3);
    if (n < 1 || max < 0) bad("universal calculus needs points >= 1 and max_degree >= 0");
    DGA c = named("universal calculus", [&] { return universal_calculus(n, max); });
    Symmetry sym = j.contains("symmetry") ? read_symmetry(j["symmetry"], c, n)
                                          : Symmetry{trivial_hopf_algebra(), {LinMap::identity(c.dim())}};
    bool cm = j.value("cm", false);
    st.calculus = std::make_shared<CovariantCalculus>(
        named("calculus", [&] { return cm ? cm_calculus(sym.q, c, sym.act) : hopf_covariant_calculus(sym.q, c, sym.act); }));
    return st;
}

Structure kahler_structure(const Json& j) {
    Structure st;
    st.kind = Kind::kahler;
    auto k = std::make_shared<KahlerStructure>();
    std::optional<Index> points;
    if (j.contains("exterior")) {
        const Json& e = j["exterior"];
        auto gens = e.at("generators").get<std::vector<std::string>>();
        if (gens.empty()) bad("exterior algebra needs generators");
        std::vector<Vec> none(gens.size());
        const auto labels = named("exterior", [&] { return exterior_dga(gens, none); }).alg().labels();
        std::vector<Vec> star(gens.size()), d(gens.size());
        for (std::size_t g = 0; g < gens.size(); ++g) {
            if (!e.contains("star") || !e["star"].contains(gens[g])) bad("no star for generator " + gens[g]);
            star[g] = read_any_vec(e["star"][gens[g]], labels);
            if (e.contains("d") && e["d"].contains(gens[g])) d[g] = read_any_vec(e["d"][gens[g]], labels);
        }
        k->dga = exterior_dga(gens, star);
        extend_derivation(k->dga, d);
        std::vector<Bidegree> bd;
        for (const auto& g : gens) {
            if (!j.contains("bidegrees") || !j["bidegrees"].contains(g)) bad("no bidegree for generator " + g);
            auto b = j["bidegrees"][g].get<std::vector<int>>();
            if (b.size() != 2) bad("bidegree must be [a, b]");
            bd.push_back({b[0], b[1]});
        }
        k->bg = exterior_bigrading(k->dga, gens.size(), bd);
    } else if (j.contains("universal")) {
        const Json& u = j["universal"];
        points = u.at("points").get<Index>();
        int max = u.value("max_degree", 2);
        if (*points < 1 || max < 0) bad("universal calculus needs points >= 1 and max_degree >= 0");
        k->dga = universal_calculus(*points, max);
        std::vector<Bidegree> per;
        for (const auto& l : k->dga.alg().labels()) {
            if (!j.contains("bidegrees") || !j["bidegrees"].contains(l)) bad("no bidegree for basis element " + l);
            auto b = j["bidegrees"][l].get<std::vector<int>>();
            if (b.size() != 2) bad("bidegree must be [a, b]");
            per.push_back({b[0], b[1]});
        }
        k->bg = bigrading_from_basis(k->dga, per);
    } else {
        bad("kahler needs exterior or universal");
    }
    const auto& labels = k->dga.alg().labels();
    const Index n0 = static_cast<Index>(k->dga.graded.component(0).size());
    std::vector<std::string> labels0(labels.begin(), labels.begin() + n0);
    st.hermitian = j.contains("sigma");
    if (st.hermitian) {
        k->sigma = read_any_vec(j["sigma"], labels);
        k->orient.top = j.at("top").get<int>();
        k->orient.vol = read_any_map(j.at("vol"), labels, labels0);
        k->orient.tau = read_any_map(j.at("tau"), labels0, {"τ"});
    }
    if (j.contains("symmetry")) {
        Symmetry sym = read_symmetry(j["symmetry"], k->dga, points);
        k->h = hopf_algebra_algebroid(sym.q);
        k->action = HModule{labels, sym.act};
    }
    st.kahler = k;
    return st;
}

Json read_file_json(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) bad("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    std::string text = ss.str();
    if (text.find_first_not_of(" \t\r\n") == std::string::npos) bad(path + ": empty file");
    try {
        return parse_json(text);
    } catch (const FormatError& e) {
        bad(path + ": " + e.what());
    }
}

Structure from_serialized(const Json& j, const Limits& limits) {
    std::string kind = j.value("kind", "");
    Structure st;
    if (kind == "hopf-algebroid") {
        st.algebroid = std::make_shared<StarHopfAlgebroid>(read_algebroid(j));
    } else if (kind == "kahler") {
        st.kind = Kind::kahler;
        st.kahler = std::make_shared<KahlerStructure>(read_kahler(j));
    } else if (kind == "finite-set-bialgebroid") {
        st.kind = Kind::finite_set;
        Index n = j.at("n").get<Index>();
        st.finite_set = std::make_shared<FiniteSetBialgebroid>(named("finite set", [&] { return finite_set_bialgebroid(n); }));
        (void)limits;
    } else {
        bad("unknown serialized kind \"" + kind + "\"");
    }
    return st;
}

Structure preset_structure(const std::string& preset) {
    Structure st;
    auto parts = split(preset, ':');
    if (parts[0] == "finite1forms") {
        if (parts.size() != 2) bad("finite1forms preset is finite1forms:n");
        st.kind = Kind::finite_set;
        Index n = parse_count(parts[1], preset);
        st.finite_set = std::make_shared<FiniteSetBialgebroid>(named(preset, [&] { return finite_set_bialgebroid(n); }));
    } else if (preset == "toykahler") {
        st.kind = Kind::kahler;
        st.kahler = std::make_shared<KahlerStructure>(covariant_toy_kahler());
    } else {
        st.algebroid = std::make_shared<StarHopfAlgebroid>(algebroid_preset(preset));
    }
    return st;
}

using Workspace = std::map<std::string, Structure>;

Workspace build(const Json& spec, const std::string& base_dir, const Limits& limits) {
    if (!spec.is_object()) bad("spec must be a JSON object");
    if (spec.value("scalars", "") != "gaussian-rational") bad("spec needs \"scalars\": \"gaussian-rational\"");
    if (!spec.contains("structures") || !spec["structures"].is_array()) bad("spec needs a \"structures\" array");
    Workspace ws;
    for (const auto& s : spec["structures"]) {
        std::string id = s.at("id").get<std::string>();
        if (ws.count(id)) bad("duplicate structure id \"" + id + "\"");
        Structure st;
        try {
            if (s.contains("preset")) {
                st = preset_structure(s["preset"].get<std::string>());
            } else if (s.contains("include")) {
                std::filesystem::path p = s["include"].get<std::string>();
                if (p.is_relative()) p = std::filesystem::path(base_dir) / p;
                st = from_serialized(read_file_json(p.string()), limits);
            } else if (s.contains("hopf_algebroid")) {
                st.algebroid = std::make_shared<StarHopfAlgebroid>(read_algebroid(s["hopf_algebroid"]));
            } else if (s.contains("base_module")) {
                std::string over = s["base_module"].get<std::string>();
                auto it = ws.find(over);
                if (it == ws.end() || it->second.kind != Kind::algebroid) bad("base_module refers to unknown algebroid \"" + over + "\"");
                st.kind = Kind::module;
                st.algebroid = it->second.algebroid;
                st.module = std::make_shared<HModuleAlgebra>(base_module(*st.algebroid));
                if (s.contains("state")) {
                    const auto& labels = st.module->alg.labels();
                    const Index n = static_cast<Index>(labels.size());
                    if (s["state"].is_string() && s["state"].get<std::string>() == "normalized-sum") {
                        LinMap tau(1, n);
                        for (Index i = 0; i < n; ++i) tau.set_col(i, Vec::unit(0, Scalar(1) / Scalar(static_cast<long>(n))));
                        st.state = tau;
                    } else {
                        st.state = read_any_map(s["state"], labels, {"τ"});
                    }
                }
            } else if (s.contains("calculus")) {
                st = calculus_structure(s["calculus"]);
            } else if (s.contains("kahler")) {
                st = kahler_structure(s["kahler"]);
            } else {
                bad("structure needs preset, include, hopf_algebroid, base_module, calculus or kahler");
            }
            if (s.contains("overrides")) {
                if (st.kind != Kind::algebroid) bad("overrides apply to algebroids only");
                apply_overrides(*st.algebroid, s["overrides"]);
            }
        } catch (const FormatError& e) {
            bad("structure \"" + id + "\": " + e.what());
        } catch (const nlohmann::json::exception& e) {
            bad("structure \"" + id + "\": " + e.what());
        } catch (const std::exception& e) {
            bad("structure \"" + id + "\": " + e.what());
        }
        ws.emplace(id, std::move(st));
    }
    return ws;
}

using SuiteFn = std::function<CheckReport()>;

SuiteFn suite_for(const Structure& st, const std::string& suite, const Limits& limits) {
    auto unknown = [&]() -> SuiteFn { bad("suite \"" + suite + "\" does not apply to a " + kind_name(st.kind)); };
    switch (st.kind) {
        case Kind::algebroid: {
            auto h = st.algebroid;
            if (suite == "left-bialgebroid") return [h] { return verify_left_bialgebroid(h->core.left); };
            if (suite == "right-bialgebroid") return [h] { return verify_right_bialgebroid(h->core.right); };
            if (suite == "hopf") return [h] { return verify_hopf(h->core); };
            if (suite == "derived") return [h] { return derived_identities(h->core); };
            if (suite == "star") return [h, limits] { return verify_star(*h, limits); };
            if (suite == "star-algebra") return [h] { return verify_star(StarAlgebra{h->core.H(), h->star_H}); };
            if (suite == "counit-uniqueness")
                return [h, limits] {
                    CheckReport rep = counit_uniqueness(h->core.left, limits);
                    rep.append(counit_uniqueness(h->core.right, limits));
                    return rep;
                };
            if (suite == "antipode-uniqueness") return [h, limits] { return antipode_uniqueness(h->core, limits); };
            return unknown();
        }
        case Kind::module: {
            auto h = st.algebroid;
            auto b = st.module;
            if (suite == "module") return [h, b] { return verify_module(h->core, b->module); };
            if (suite == "module-algebra") return [h, b] { return verify_h_module_algebra(*h, *b); };
            if (suite == "invariants") return [h, b] { return verify_invariants(*h, *b); };
            if (suite == "conjugate") return [h, b] { return conjugate_checks(*h, *b); };
            if (suite == "unit-constraints") return [h, b, limits] { return unit_constraints(*h, b->module, limits); };
            if (suite == "adjoint") {
                if (!st.state) bad("adjoint suite needs a \"state\" on the module");
                LinMap tau = *st.state;
                return [h, b, tau] {
                    DenseMatrix gram = state_gram(StarAlgebra{b->alg, b->star}, tau);
                    return adjoint_check(*h, AdjointData{b->module, gram, b->module, tau});
                };
            }
            return unknown();
        }
        case Kind::calculus: {
            auto c = st.calculus;
            if (suite == "dga") return [c] { return verify_dga(c->dga); };
            if (suite == "covariant-calculus") return [c] { return verify_covariant_calculus(*c); };
            if (suite == "invariant-forms") return [c] { return verify_invariant_forms(*c); };
            if (suite == "sharp") return [c] { return sharp_dga_check(*c, false); };
            if (suite == "sharp-invariant") return [c] { return sharp_dga_check(*c, true); };
            if (suite == "transverse-chain") {
                if (!st.groupoid) bad("transverse-chain needs a calculus built from a groupoid");
                auto src = *st.groupoid;
                return [src] { return transverse_chain(src.g, src.phi, src.max_degree); };
            }
            return unknown();
        }
        case Kind::finite_set: {
            auto f = st.finite_set;
            if (suite == "finite-set-bialgebroid") return [f, limits] { return verify_finite_set_bialgebroid(*f, limits); };
            return unknown();
        }
        case Kind::kahler: {
            auto k = st.kahler;
            if (suite == "dga") return [k] { return verify_dga(k->dga); };
            if (suite == "complex-structure")
                return [k] { return verify_complex_structure(k->dga, k->bg, k->action ? &*k->action : nullptr); };
            if (suite == "hermitian" || suite == "laplacians" || suite == "kahler") {
                if (!st.hermitian) bad("suite \"" + suite + "\" needs sigma, top, vol and tau");
                if (suite == "hermitian") return [k] { return verify_hermitian(*k); };
                if (suite == "laplacians") return [k] { return verify_laplacians(*k); };
                return [k] { return kahler_check(*k); };
            }
            return unknown();
        }
    }
    return unknown();
}

CheckReport guarded(const SuiteFn& f, const std::string& suite) {
    try {
        CheckReport rep = f();
        rep.suite = suite;
        return rep;
    } catch (const std::exception& e) {
        CheckReport rep;
        rep.suite = suite;
        rep.add("suite-error", "the suite ran to completion", Status::error, e.what());
        return rep;
    }
}

}  // namespace

Limits limits_from_env() {
    Limits l;
    if (const char* v = std::getenv("HALG_MAX_DIM")) l.max_dim = parse_count(v, "HALG_MAX_DIM");
    return l;
}

Json load_spec_file(const std::string& path) { return read_file_json(path); }

int SpecRun::exit_code() const {
    for (const auto& s : suites)
        if (!s.report.ok() || s.report.errored()) return 1;
    return 0;
}

SpecRun run_spec(const Json& spec, const std::string& base_dir, const Limits& limits, bool parallel) {
    Workspace ws = build(spec, base_dir, limits);
    if (!spec.contains("checks") || !spec["checks"].is_array()) bad("spec needs a \"checks\" array");
    std::vector<std::pair<std::string, std::string>> names;
    std::vector<SuiteFn> fns;
    for (const auto& c : spec["checks"]) {
        std::string suite, target;
        try {
            suite = c.at("suite").get<std::string>();
            target = c.at("target").get<std::string>();
        } catch (const nlohmann::json::exception&) {
            bad("each check needs string fields \"suite\" and \"target\"");
        }
        auto it = ws.find(target);
        if (it == ws.end()) bad("check refers to unknown structure \"" + target + "\"");
        fns.push_back(suite_for(it->second, suite, limits));
        names.emplace_back(suite, target);
    }
    SpecRun run;
    std::vector<std::future<CheckReport>> pending;
    for (std::size_t i = 0; i < fns.size(); ++i)
        pending.push_back(std::async(parallel ? std::launch::async : std::launch::deferred,
                                     [&, i] { return guarded(fns[i], names[i].first); }));
    for (std::size_t i = 0; i < fns.size(); ++i) run.suites.push_back({names[i].first, names[i].second, pending[i].get()});
    return run;
}

Json report_json(const SpecRun& run) {
    Json suites = Json::array();
    std::map<std::string, int> totals{{"pass", 0}, {"fail", 0}, {"skip", 0}, {"error", 0}};
    for (const auto& s : run.suites) {
        Json items = Json::array();
        for (const auto& it : s.report.items) {
            Json j{{"id", it.id}, {"statement", it.statement}, {"status", status_name(it.status)}};
            if (!it.witness.empty()) j["witness"] = it.witness;
            if (!it.detail.empty()) j["detail"] = it.detail;
            items.push_back(j);
            ++totals[status_name(it.status)];
        }
        suites.push_back(Json{{"suite", s.suite}, {"target", s.target}, {"ok", s.report.ok() && !s.report.errored()}, {"items", items}});
    }
    Json summary{{"suites", run.suites.size()}};
    for (const char* k : {"pass", "fail", "skip", "error"}) summary[k] = totals[k];
    summary["exit_code"] = run.exit_code();
    return Json{{"schema", "halg-report/1"}, {"suites", suites}, {"summary", summary}};
}

std::string report_text(const SpecRun& run) {
    std::ostringstream os;
    int counts[4] = {0, 0, 0, 0};
    for (const auto& s : run.suites) {
        os << "== " << s.suite << " on " << s.target << " ==\n";
        std::size_t w = 0;
        for (const auto& it : s.report.items) w = std::max(w, it.id.size());
        for (const auto& it : s.report.items) {
            std::string st = status_name(it.status);
            for (auto& ch : st) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
            os << "  " << st << std::string(6 - st.size(), ' ') << it.id << std::string(w - it.id.size() + 2, ' ')
               << it.statement;
            if (!it.witness.empty()) os << "\n" << std::string(8 + w + 2, ' ') << "witness: " << it.witness;
            if (!it.detail.empty()) os << "\n" << std::string(8 + w + 2, ' ') << it.detail;
            os << "\n";
            ++counts[static_cast<int>(it.status)];
        }
    }
    os << "summary: " << counts[0] << " pass, " << counts[1] << " fail, " << counts[2] << " skip, " << counts[3]
       << " error\n";
    return os.str();
}

std::vector<std::string> preset_names() {
    return {"pair:n", "unit:n", "point:<group>", "action:<group>:<perm>", "enveloping:<alg>", "cm:<group>:<alg>[:<perm>]",
            "finite1forms:n", "toykahler"};
}

Json construct_preset(const std::string& preset, const Limits& limits) {
    (void)limits;
    Structure st = preset_structure(preset);
    Json out;
    switch (st.kind) {
        case Kind::algebroid: out = algebroid_json(*st.algebroid); break;
        case Kind::finite_set: out = finite_set_json(*st.finite_set); break;
        case Kind::kahler: out = kahler_json(*st.kahler); break;
        default: bad("preset " + preset + " has no serialized form");
    }
    Json tagged{{"preset", preset}};
    for (auto& [k, v] : out.items()) tagged[k] = v;
    return tagged;
}

InvariantListing invariants_of(const Json& spec, const std::string& base_dir, const std::string& id, const Limits& limits) {
    Workspace ws = build(spec, base_dir, limits);
    auto it = ws.find(id);
    if (it == ws.end()) bad("unknown structure \"" + id + "\"");
    const Structure& st = it->second;
    InvariantListing out;
    out.id = id;
    auto forms = [&](const CovariantCalculus& c) {
        out.kind = "forms";
        out.labels = c.dga.alg().labels();
        InvariantForms inv = invariant_forms(c);
        for (std::size_t k = 0; k < inv.per_degree.size(); ++k) {
            out.per_degree.emplace_back(static_cast<int>(k), inv.per_degree[k]);
            out.ambient.push_back(static_cast<Index>(c.dga.graded.component(static_cast<int>(k)).size()));
        }
    };
    auto base = [&](const StarHopfAlgebroid& h, const HModuleAlgebra& b) {
        out.kind = "base";
        out.labels = b.alg.labels();
        out.per_degree.emplace_back(0, invariants(h.core, b.module));
        out.ambient.push_back(b.module.dim());
    };
    switch (st.kind) {
        case Kind::calculus: forms(*st.calculus); break;
        case Kind::kahler:
            if (!st.kahler->h || !st.kahler->action) bad("structure \"" + id + "\" carries no action");
            forms(CovariantCalculus{st.kahler->dga, *st.kahler->h, *st.kahler->action, std::nullopt});
            break;
        case Kind::module: base(*st.algebroid, *st.module); break;
        case Kind::algebroid: base(*st.algebroid, base_module(*st.algebroid)); break;
        default: bad("structure \"" + id + "\" carries no action");
    }
    return out;
}

std::string listing_text(const InvariantListing& l) {
    std::ostringstream os;
    os << (l.kind == "forms" ? "invariant forms of " : "invariants B_H of ") << l.id << "\n";
    for (std::size_t i = 0; i < l.per_degree.size(); ++i) {
        const auto& [k, s] = l.per_degree[i];
        os << "degree " << k << ": dim " << s.dim() << " of " << l.ambient[i] << "\n";
        for (const auto& v : s.basis()) os << "  " << format_tensor(v, {&l.labels}) << "\n";
    }
    return os.str();
}

}  // namespace halg
