// Acceptance criteria, one PASS/FAIL line each. `acceptance --criterion N` runs one of them.
#include "halg/specfile.hpp"

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

using namespace halg;

namespace {

struct Outcome {
    bool pass = true;
    std::string note;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            note += (note.empty() ? "" : "; ") + what;
        }
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string failures(const CheckReport& r) {
    std::string s;
    for (const auto& id : r.failing()) s += (s.empty() ? "" : ",") + id;
    return s;
}

void suite(Outcome& o, const std::string& where, const CheckReport& r) {
    o.require(r.ok() && !r.errored(), where + " " + r.suite + " fails " + failures(r));
}

const char* const kGroupoids[] = {"unit:3", "pair:2", "pair:3", "point:Z2", "point:S3", "action:Z2:swap2"};

StarHopfAlgebroid swap_cm() {
    HopfAlgebra q = group_algebra(cyclic_group(2));
    return connes_moscovici(q, function_algebra(2), permutation_action(q, action_by_name(cyclic_group(2), "swap2")));
}

Outcome groupoid_algebroids() {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    for (const char* p : kGroupoids) {
        StarHopfAlgebroid h = convolution_algebroid(groupoid_by_name(p));
        suite(o, p, verify_left_bialgebroid(h.core.left));
        suite(o, p, verify_right_bialgebroid(h.core.right));
        suite(o, p, verify_hopf(h.core));
        suite(o, p, derived_identities(h.core));
        suite(o, p, verify_star(h));
    }
    double s = seconds_since(t0);
    o.require(s < 60, "runtime " + std::to_string(s) + " s");
    o.note = o.pass ? "6 groupoids, all suites" : o.note;
    return o;
}

Outcome connes_moscovici_swap() {
    Outcome o;
    StarHopfAlgebroid cm = swap_cm();
    suite(o, "cm", verify_left_bialgebroid(cm.core.left));
    suite(o, "cm", verify_right_bialgebroid(cm.core.right));
    CheckReport hopf = verify_hopf(cm.core);
    suite(o, "cm", hopf);
    suite(o, "cm", derived_identities(cm.core));
    suite(o, "cm", verify_star(cm));
    o.require(hopf.passed("antipode-axiom-left"), "μ(S⊗id)Δ_l = s_rε_r");
    if (o.pass) o.note = "dim H = " + std::to_string(cm.core.H().dim()) + ", antipode-axiom-left passes";
    return o;
}

Outcome degenerate_isomorphisms() {
    Outcome o;
    StarAlgebra a = function_algebra(2);
    HopfAlgebra k = trivial_hopf_algebra();
    suite(o, "CM(k,A)≅A⊗Aᵒᵖ",
          check_isomorphism(connes_moscovici(k, a, trivial_action(k, a)), enveloping_algebroid(a), LinMap::identity(4),
                            LinMap::identity(2), LinMap::identity(2)));
    HopfAlgebra q = group_algebra(cyclic_group(2));
    StarAlgebra g = ground_star_algebra();
    suite(o, "CM(Q,k)≅Q",
          check_isomorphism(connes_moscovici(q, g, trivial_action(q, g)), hopf_algebra_algebroid(q), LinMap::identity(2),
                            LinMap::identity(1), LinMap::identity(1)));
    return o;
}

Outcome derived_everywhere() {
    Outcome o;
    std::vector<std::pair<std::string, StarHopfAlgebroid>> all;
    for (const char* p : kGroupoids) all.emplace_back(p, convolution_algebroid(groupoid_by_name(p)));
    all.emplace_back("cm", swap_cm());
    all.emplace_back("enveloping:C2", enveloping_algebroid(function_algebra(2)));
    all.emplace_back("Z2", hopf_algebra_algebroid(group_algebra(cyclic_group(2))));
    for (const auto& [name, h] : all) {
        CheckReport r = derived_identities(h.core);
        suite(o, name, r);
        for (const char* id : {"source-target-antipode", "antipode-convolution", "anti-isomorphism-phi",
                               "anti-isomorphism-theta", "flip-left", "flip-right"})
            o.require(r.passed(id), name + " " + id);
    }
    if (o.pass) o.note = std::to_string(all.size()) + " fixtures";
    return o;
}

Outcome uniqueness() {
    Outcome o;
    for (const char* p : {"pair:2", "point:Z2"}) {
        StarHopfAlgebroid h = convolution_algebroid(groupoid_by_name(p));
        o.require(counit_uniqueness(h.core.left).passed("counit-unique"), std::string(p) + " ε_l not unique");
        o.require(counit_uniqueness(h.core.right).passed("counit-unique"), std::string(p) + " ε_r not unique");
        suite(o, p, antipode_uniqueness(h.core));
    }
    return o;
}

Outcome finite_sets() {
    Outcome o;
    for (Index n : {2, 3}) {
        FiniteSetBialgebroid f = finite_set_bialgebroid(n);
        CheckReport r = verify_finite_set_bialgebroid(f);
        const std::string tag = "n=" + std::to_string(n);
        suite(o, tag, r);
        for (const char* id : {"h0-condition-i", "h0-condition-ii", "h0-condition-iii", "h0-commutator",
                               "bialgebroid-coassociativity", "bialgebroid-counit-left", "bialgebroid-coproduct-multiplicative"})
            o.require(r.passed(id), tag + " " + id);
        o.require(f.h0.dim() >= n * n, tag + " dim H₀ < n²");
        o.require(f.H.dim() >= n * n * n, tag + " dim H < n³");
        o.note += (o.note.empty() ? "" : ", ") + tag + ": dim H₀ = " + std::to_string(f.h0.dim()) +
                  ", dim H = " + std::to_string(f.H.dim());
    }
    return o;
}

Outcome transverse() {
    Outcome o;
    std::string summary;
    for (const char* p : {"action:Z2:swap2", "pair:3"}) {
        FiniteGroupoid g = groupoid_by_name(p);
        CheckReport r = transverse_chain(g, arrow_bijections(g, p), 2);
        for (const char* id : {"h0-full", "transverse-leibniz", "invariant-forms-match"}) {
            const CheckItem* it = r.find(id);
            bool ok = it && it->status == Status::pass;
            o.require(ok, std::string(p) + " " + id + (it && !it->witness.empty() ? " (" + it->witness + ")" : ""));
        }
    }
    return o;
}

Outcome toy_kahler_cell() {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    KahlerStructure k = toy_kahler();
    HermitianData hd = hermitian_data(k);
    const Scalar I = Scalar::i();
    Vec kappa = Vec::unit(3, I);
    o.require(hd.hodge.apply(Vec::unit(0)) == kappa, "⋆1 ≠ κ");
    o.require(hd.hodge.apply(kappa) == Vec::unit(0), "⋆κ ≠ 1");
    o.require(hd.hodge.apply(Vec::unit(1)) == Vec::unit(1, -I), "⋆e10 ≠ -i e10");
    o.require(hd.hodge.apply(Vec::unit(2)) == Vec::unit(2, I), "⋆e01 ≠ i e01");
    KahlerStructure cov = covariant_toy_kahler();
    CheckReport herm = verify_hermitian(cov);
    suite(o, "toy", herm);
    for (const char* id : {"hodge-square", "metric-covariant", "metric-positive"}) o.require(herm.passed(id), id);
    suite(o, "toy", verify_laplacians(cov));
    CheckReport kc = kahler_check(cov);
    suite(o, "toy", kc);
    for (const char* id : {"kahler-closed", "invariant-kahler-closed", "invariant-hodge-square",
                           "invariant-hodge-unitary"})
        o.require(kc.passed(id), id);
    double s = seconds_since(t0);
    o.require(s < 5, "runtime " + std::to_string(s) + " s");
    return o;
}

Outcome adjoint() {
    Outcome o;
    for (const char* p : {"unit:3", "pair:2"}) {
        StarHopfAlgebroid h = convolution_algebroid(groupoid_by_name(p));
        HModuleAlgebra b = base_module(h);
        LinMap tau(1, b.module.dim());
        for (Index i = 0; i < b.module.dim(); ++i) tau.set_col(i, Vec::unit(0, Scalar::frac(1, b.module.dim())));
        CheckReport r = adjoint_check(h, AdjointData{b.module, state_gram(StarAlgebra{b.alg, b.star}, tau), b.module, tau});
        o.require(r.passed("right-invariance"), std::string(p) + " right invariance");
        o.require(r.passed("adjoint-identity"), std::string(p) + " adjoint identity");
    }
    return o;
}

Outcome negative_controls() {
    Outcome o;
    const std::string dir = HALG_FIXTURE_DIR;
    int n = 0;
    for (const char* f : {"broken_antipode", "swapped_counits", "linear_star", "degree_shifting", "leaking_bigrading",
                          "nonclosed_sigma"}) {
        Json spec = load_spec_file(dir + "/" + f + ".spec");
        SpecRun run = run_spec(spec, dir);
        auto doc = spec.at("documented_failures").get<std::vector<std::string>>();
        std::set<std::string> got;
        for (const auto& s : run.suites) {
            o.require(!s.report.errored(), std::string(f) + ": suite " + s.suite + " errored");
            for (const auto& id : s.report.failing()) got.insert(id);
        }
        o.require(got == std::set<std::string>(doc.begin(), doc.end()), std::string(f) + ": unexpected failing set");
        o.require(run.exit_code() == 1, std::string(f) + ": exit code");
        ++n;
    }
    if (o.pass) o.note = std::to_string(n) + " corruption fixtures";
    return o;
}

struct Criterion {
    const char* title;
    std::function<Outcome()> run;
};

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> c = {
        {"convolution algebroids pass all suites", groupoid_algebroids},
        {"Connes-Moscovici algebroid of Z2 on C(2)", connes_moscovici_swap},
        {"degenerate Connes-Moscovici isomorphisms", degenerate_isomorphisms},
        {"derived identities on every fixture", derived_everywhere},
        {"counit and antipode uniqueness", uniqueness},
        {"finite-set bialgebroid for n = 2, 3", finite_sets},
        {"discrete transverse chain on swap2 and pair:3", transverse},
        {"Kähler suite on the toy cell", toy_kahler_cell},
        {"adjoint identity for the normalized point sum", adjoint},
        {"negative controls", negative_controls},
    };
    return c;
}

}  // namespace

int main(int argc, char** argv) {
    std::size_t only = 0;
    for (int a = 1; a < argc; ++a)
        if (std::strcmp(argv[a], "--criterion") == 0 && a + 1 < argc) only = std::strtoul(argv[++a], nullptr, 10);
    int failed = 0;
    for (std::size_t i = 0; i < criteria().size(); ++i) {
        if (only && only != i + 1) continue;
        Outcome o;
        try {
            o = criteria()[i].run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.note = std::string("exception: ") + e.what();
        }
        std::cout << (o.pass ? "PASS" : "FAIL") << "  " << (i + 1 < 10 ? " " : "") << i + 1 << "  "
                  << criteria()[i].title << (o.note.empty() ? "" : "  [" + o.note + "]") << "\n";
        failed += !o.pass;
    }
    return failed ? 1 : 0;
}
