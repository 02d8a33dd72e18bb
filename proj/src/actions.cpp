#include "halg/actions.hpp"

#include <stdexcept>

namespace halg {

namespace {

using Opt = std::optional<std::string>;

LinMap conj_entries(const LinMap& f) {
    std::vector<Vec> cols;
    for (Index j = 0; j < f.cols(); ++j) cols.push_back(f.col(j).conj());
    return LinMap::from_columns(f.rows(), std::move(cols), f.antilinear());
}

// Builds the map on the plain tensor M⊗N sending m⊗n to Σ c·(F_p m)⊗(G_q n) over x = Σ c e_p⊗e_q.
LinMap tensor_action(const Vec& x, Index nh, const HModule& m, const HModule& n) {
    const Index dm = m.dim(), dn = n.dim();
    LinMap out(dm * dn, dm * dn);
    for (Index i = 0; i < dm; ++i)
        for (Index j = 0; j < dn; ++j) {
            VecAcc acc;
            for (const auto& [k, c] : x.entries()) {
                Vec l = m.act[k / nh].col(i);
                Vec r = n.act[k % nh].col(j);
                acc.add(tensor(l, r, dn), c);
            }
            out.set_col(i * dn + j, acc.take());
        }
    return out;
}

}  // namespace

LinMap HModule::action(const Vec& h) const {
    LinMap out = LinMap::zero(dim(), dim());
    for (const auto& [i, c] : h.entries()) out = out + c * act[i];
    return out;
}

CheckReport verify_module(const HopfAlgebroid& h, const HModule& m) {
    CheckReport rep;
    rep.suite = "module";
    const Algebra& H = h.H();
    if (static_cast<Index>(m.act.size()) != H.dim()) {
        rep.add("module-shape", "one action matrix per basis element of H", Status::error,
                "expected " + std::to_string(H.dim()) + " matrices");
        return rep;
    }
    rep.run("module-shape", "action matrices are square of the module dimension", [&]() -> Opt {
        for (Index i = 0; i < H.dim(); ++i)
            if (m.act[i].rows() != m.dim() || m.act[i].cols() != m.dim() || m.act[i].antilinear())
                return "matrix for " + H.labels()[i];
        return std::nullopt;
    });
    if (!rep.ok()) return rep;
    rep.run("module-unital", "1·m = m", [&]() -> Opt {
        if (m.action(H.unit()) != LinMap::identity(m.dim())) return "unit does not act as identity";
        return std::nullopt;
    });
    rep.run("module-associative", "(hh')·m = h·(h'·m)", [&]() -> Opt {
        for (Index i = 0; i < H.dim(); ++i)
            for (Index j = 0; j < H.dim(); ++j)
                if (m.action(H.product(i, j)) != m.act[i].after(m.act[j]))
                    return "h = " + H.labels()[i] + ", h' = " + H.labels()[j];
        return std::nullopt;
    });
    return rep;
}

CheckReport verify_h_module_algebra(const StarHopfAlgebroid& sh, const HModuleAlgebra& b) {
    const HopfAlgebroid& h = sh.core;
    const LeftBialgebroid& L = h.left;
    const Algebra& H = L.H;
    const Algebra& B = b.alg;
    CheckReport rep = verify_module(h, b.module);
    rep.suite = "module-algebra";
    if (B.dim() != b.module.dim()) {
        rep.add("module-algebra-shape", "algebra and module share one space", Status::error, "dimension mismatch");
        return rep;
    }
    rep.run("algebra", "B is a unital associative algebra", [&]() -> Opt {
        CheckReport a = verify_algebra(B);
        if (!a.ok()) return a.failing().front();
        return std::nullopt;
    });
    if (!rep.ok()) return rep;
    const Index nh = H.dim();
    rep.run("module-unit", "h·1 = s_l(ε_l(h))·1", [&]() -> Opt {
        for (Index i = 0; i < nh; ++i) {
            Vec lhs = b.module.act[i].apply(B.unit());
            Vec rhs = b.module.apply(L.s.apply(L.eps.col(i)), B.unit());
            if (lhs != rhs) return "h = " + H.labels()[i];
        }
        return std::nullopt;
    });
    rep.run("module-multiplicative", "h·(xy) = (h(1)·x)(h(2)·y)", [&]() -> Opt {
        for (Index i = 0; i < nh; ++i) {
            const Vec& d = L.delta.col(i);
            for (Index x = 0; x < B.dim(); ++x)
                for (Index y = 0; y < B.dim(); ++y) {
                    Vec lhs = b.module.act[i].apply(B.product(x, y));
                    VecAcc acc;
                    for (const auto& [k, c] : d.entries())
                        acc.add(B.mul(b.module.act[k / nh].col(x), b.module.act[k % nh].col(y)), c);
                    if (lhs != acc.take()) return "h = " + H.labels()[i] + ", x = " + B.labels()[x] + ", y = " + B.labels()[y];
                }
        }
        return std::nullopt;
    });
    rep.run("multiplication-balanced", "(t_l(a)·x)y = x(s_l(a)·y)", [&]() -> Opt {
        for (Index a = 0; a < L.A.dim(); ++a) {
            LinMap ta = b.module.action(L.t.col(a)), sa = b.module.action(L.s.col(a));
            for (Index x = 0; x < B.dim(); ++x)
                for (Index y = 0; y < B.dim(); ++y)
                    if (B.mul(ta.col(x), Vec::unit(y)) != B.mul(Vec::unit(x), sa.col(y)))
                        return "a = " + L.A.labels()[a] + ", x = " + B.labels()[x] + ", y = " + B.labels()[y];
        }
        return std::nullopt;
    });
    if (b.has_star()) {
        rep.run("star-algebra", "B is a *-algebra", [&]() -> Opt {
            CheckReport s = verify_star(StarAlgebra{B, b.star});
            if (!s.ok()) return s.failing().front();
            return std::nullopt;
        });
        rep.run("module-star", "(h·x)* = S(h)*·x*", [&]() -> Opt {
            for (Index i = 0; i < nh; ++i) {
                Vec sstar = sh.star_H.apply(h.S.col(i));
                LinMap rhs_act = b.module.action(sstar);
                for (Index x = 0; x < B.dim(); ++x) {
                    Vec lhs = b.star.apply(b.module.act[i].col(x));
                    Vec rhs = rhs_act.apply(b.star.col(x));
                    if (lhs != rhs) return "h = " + H.labels()[i] + ", x = " + B.labels()[x];
                }
            }
            return std::nullopt;
        });
    }
    return rep;
}

HModuleAlgebra base_module(const StarHopfAlgebroid& sh) {
    const LeftBialgebroid& L = sh.core.left;
    HModuleAlgebra out;
    out.alg = L.A;
    out.star = sh.star_Al;
    out.module.labels = L.A.labels();
    for (Index i = 0; i < L.H.dim(); ++i) {
        LinMap act(L.A.dim(), L.A.dim());
        for (Index a = 0; a < L.A.dim(); ++a) act.set_col(a, L.eps.apply(L.H.mul(Vec::unit(i), L.s.col(a))));
        out.module.act.push_back(act);
    }
    return out;
}

Bimodule induced_bimodule(const HopfAlgebroid& h, const HModule& m) {
    const LeftBialgebroid& L = h.left;
    Bimodule out;
    out.dim = m.dim();
    auto A = std::make_shared<const Algebra>(L.A);
    out.left_alg = A;
    out.right_alg = A;
    for (Index a = 0; a < L.A.dim(); ++a) {
        out.left_act.push_back(m.action(L.s.col(a)));
        out.right_act.push_back(m.action(L.t.col(a)));
    }
    return out;
}

ProductModule monoidal_product(const HopfAlgebroid& h, const HModule& m, const HModule& n, const Limits& limits) {
    const Algebra& H = h.H();
    ProductModule out;
    out.tensor = balanced_tensor(induced_bimodule(h, m), induced_bimodule(h, n), limits);
    const BalancedTensor& t = out.tensor;
    for (Index i = 0; i < H.dim(); ++i) {
        LinMap plain = t.quot.proj.after(tensor_action(h.left.delta.col(i), H.dim(), m, n));
        std::string witness;
        auto act = descends(plain, t, &witness);
        if (!act)
            throw std::invalid_argument("action of " + H.labels()[i] + " does not descend to M⊗N: relation " + witness);
        out.module.act.push_back(*act);
    }
    for (Index q = 0; q < t.quot.dim; ++q) {
        Index r = t.quot.reps[q];
        out.module.labels.push_back(m.labels[r / n.dim()] + "⊗" + n.labels[r % n.dim()]);
    }
    return out;
}

CheckReport unit_constraints(const StarHopfAlgebroid& sh, const HModule& m, const Limits& limits) {
    const HopfAlgebroid& h = sh.core;
    const LeftBialgebroid& L = h.left;
    const Index nm = m.dim(), na = L.A.dim();
    HModule base = base_module(sh).module;
    CheckReport rep;
    rep.suite = "unit-constraints";
    auto check = [&](const std::string& id, const std::string& statement, bool right_unit) {
        rep.run(id, statement, [&]() -> Opt {
            ProductModule p = right_unit ? monoidal_product(h, m, base, limits) : monoidal_product(h, base, m, limits);
            const Index dn = right_unit ? na : nm;
            LinMap plain(nm, nm * na);
            for (Index k = 0; k < nm * na; ++k) {
                Index x = k / dn, y = k % dn;
                plain.set_col(k, right_unit ? m.action(L.t.col(y)).col(x) : m.action(L.s.col(x)).col(y));
            }
            std::string witness;
            auto f = descends(plain, p.tensor, &witness);
            if (!f) return "canonical map does not descend: " + witness;
            if (!inverse(*f)) return "canonical map is not bijective";
            for (Index i = 0; i < L.H.dim(); ++i)
                if (f->after(p.module.act[i]) != m.act[i].after(*f)) return "not H-linear at " + L.H.labels()[i];
            return std::nullopt;
        });
    };
    check("unit-right", "M⊗A_l -> M, m⊗a ↦ t_l(a)·m is an H-linear isomorphism", true);
    check("unit-left", "A_l⊗M -> M, a⊗m ↦ s_l(a)·m is an H-linear isomorphism", false);
    return rep;
}

GroupoidRep trivial_line_bundle(const FiniteGroupoid& g) {
    GroupoidRep rep;
    rep.fiber.assign(g.object_count(), 1);
    rep.arrow.assign(g.arrow_count(), LinMap::identity(1));
    return rep;
}

std::string validate_rep(const FiniteGroupoid& g, const GroupoidRep& rep) {
    if (static_cast<int>(rep.fiber.size()) != g.object_count()) return "one fiber per object expected";
    if (static_cast<int>(rep.arrow.size()) != g.arrow_count()) return "one map per arrow expected";
    for (int a = 0; a < g.arrow_count(); ++a) {
        const LinMap& f = rep.arrow[a];
        if (f.cols() != rep.fiber[g.src[a]] || f.rows() != rep.fiber[g.tgt[a]] || f.antilinear())
            return "map of arrow " + g.arrows[a] + " has the wrong shape";
    }
    for (int x = 0; x < g.object_count(); ++x)
        if (rep.arrow[g.unit[x]] != LinMap::identity(rep.fiber[x])) return "unit arrow " + g.arrows[g.unit[x]] + " is not the identity";
    for (int a = 0; a < g.arrow_count(); ++a)
        for (int b = 0; b < g.arrow_count(); ++b) {
            int c = g.compose(a, b);
            if (c >= 0 && rep.arrow[c] != rep.arrow[a].after(rep.arrow[b]))
                return "not functorial on (" + g.arrows[a] + ", " + g.arrows[b] + ")";
        }
    return {};
}

namespace {

std::vector<Index> fiber_offsets(const GroupoidRep& rep) {
    std::vector<Index> off(rep.fiber.size() + 1, 0);
    for (std::size_t x = 0; x < rep.fiber.size(); ++x) off[x + 1] = off[x] + rep.fiber[x];
    return off;
}

}  // namespace

HModule groupoid_rep_to_module(const FiniteGroupoid& g, const GroupoidRep& rep) {
    if (std::string bad = validate_rep(g, rep); !bad.empty()) throw std::invalid_argument("groupoid rep: " + bad);
    std::vector<Index> off = fiber_offsets(rep);
    const Index total = off.back();
    HModule m;
    for (int x = 0; x < g.object_count(); ++x)
        for (Index j = 0; j < rep.fiber[x]; ++j)
            m.labels.push_back(rep.fiber[x] == 1 ? g.objects[x] : g.objects[x] + "." + std::to_string(j));
    for (int a = 0; a < g.arrow_count(); ++a) {
        LinMap act(total, total);
        const Index s = g.src[a], t = g.tgt[a];
        for (Index j = 0; j < rep.fiber[s]; ++j) {
            Vec col;
            for (const auto& [r, c] : rep.arrow[a].col(j).entries()) col.push_back(off[t] + r, c);
            act.set_col(off[s] + j, col);
        }
        m.act.push_back(act);
    }
    return m;
}

Subspace groupoid_invariant_sections(const FiniteGroupoid& g, const GroupoidRep& rep) {
    if (std::string bad = validate_rep(g, rep); !bad.empty()) throw std::invalid_argument("groupoid rep: " + bad);
    std::vector<Index> off = fiber_offsets(rep);
    const Index total = off.back();
    std::vector<LinMap> maps;
    for (int a = 0; a < g.arrow_count(); ++a) {
        const Index s = g.src[a], t = g.tgt[a];
        LinMap f(rep.fiber[t], total);
        for (Index col = 0; col < total; ++col) {
            Vec v;
            if (col >= off[s] && col < off[s + 1]) v = rep.arrow[a].col(col - off[s]);
            if (col >= off[t] && col < off[t + 1]) v -= Vec::unit(col - off[t]);
            f.set_col(col, v);
        }
        maps.push_back(f);
    }
    return joint_kernel(total, maps);
}

CheckReport groupoid_invariants_match(const FiniteGroupoid& g, const GroupoidRep& rep) {
    CheckReport out;
    out.suite = "groupoid-invariants";
    std::string detail;
    out.run("invariants-match", "groupoid-invariant sections coincide with module invariants", [&]() -> Opt {
        StarHopfAlgebroid sh = convolution_algebroid(g);
        HModule m = groupoid_rep_to_module(g, rep);
        Subspace direct = groupoid_invariant_sections(g, rep);
        Subspace mod = invariants(sh.core, m);
        detail = "dimension " + std::to_string(direct.dim());
        if (direct != mod)
            return "groupoid-invariant dim " + std::to_string(direct.dim()) + ", module invariants dim " +
                   std::to_string(mod.dim());
        return std::nullopt;
    }).detail = detail;
    return out;
}

Subspace invariants(const HopfAlgebroid& h, const HModule& m, bool two_sided) {
    const LeftBialgebroid& L = h.left;
    std::vector<LinMap> maps;
    for (Index i = 0; i < L.H.dim(); ++i) {
        Vec e = L.eps.col(i);
        maps.push_back(m.act[i] - m.action(L.s.apply(e)));
        if (two_sided) maps.push_back(m.act[i] - m.action(L.t.apply(e)));
    }
    return joint_kernel(m.dim(), maps);
}

CheckReport verify_invariants(const StarHopfAlgebroid& sh, const HModuleAlgebra& b) {
    CheckReport rep;
    rep.suite = "invariants";
    Subspace inv = invariants(sh.core, b.module);
    rep.run("invariants-unital", "1 is invariant", [&]() -> Opt {
        if (!inv.contains(b.alg.unit())) return "unit not invariant";
        return std::nullopt;
    });
    rep.items.back().detail = "dimension " + std::to_string(inv.dim());
    rep.run("invariants-subalgebra", "invariants are closed under multiplication", [&]() -> Opt {
        for (const Vec& x : inv.basis())
            for (const Vec& y : inv.basis())
                if (!inv.contains(b.alg.mul(x, y))) return "product of " + b.alg.format(x) + " and " + b.alg.format(y);
        return std::nullopt;
    });
    if (b.has_star())
        rep.run("invariants-star", "invariants are closed under *", [&]() -> Opt {
            for (const Vec& x : inv.basis())
                if (!inv.contains(b.star.apply(x))) return "star of " + b.alg.format(x);
            return std::nullopt;
        });
    return rep;
}

HModule conjugate(const StarHopfAlgebroid& sh, const HModule& m) {
    HModule out;
    for (const auto& l : m.labels) out.labels.push_back("conj(" + l + ")");
    for (Index i = 0; i < sh.core.H().dim(); ++i)
        out.act.push_back(conj_entries(m.action(sh.star_H.apply(sh.core.S.col(i)))));
    return out;
}

Algebra conjugate_algebra(const Algebra& a) {
    const Index n = a.dim();
    std::vector<Vec> prod(static_cast<std::size_t>(n * n));
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) prod[i * n + j] = a.product(j, i).conj();
    std::vector<std::string> labels;
    for (const auto& l : a.labels()) labels.push_back("conj(" + l + ")");
    return Algebra(labels, prod, a.unit().conj());
}

LinMap sharp(const HModuleAlgebra& b) {
    if (!b.has_star()) throw std::invalid_argument("sharp: module algebra has no star");
    return conj_entries(b.star).with_antilinear(false);
}

CheckReport conjugate_checks(const StarHopfAlgebroid& sh, const HModuleAlgebra& b) {
    CheckReport rep;
    rep.suite = "conjugate";
    const HopfAlgebroid& h = sh.core;
    HModule bar = conjugate(sh, b.module);
    rep.run("conjugate-module", "the conjugate action is a module", [&]() -> Opt {
        CheckReport m = verify_module(h, bar);
        if (!m.ok()) return m.failing().front();
        return std::nullopt;
    });
    rep.run("double-conjugate", "the double conjugate is the original module", [&]() -> Opt {
        HModule twice = conjugate(sh, bar);
        for (Index i = 0; i < h.H().dim(); ++i)
            if (twice.act[i] != b.module.act[i]) return "h = " + h.H().labels()[i];
        return std::nullopt;
    });
    if (!b.has_star()) {
        rep.skip("sharp-algebra-isomorphism", "# is an algebra isomorphism onto the conjugate algebra", "no star");
        rep.skip("sharp-h-linear", "# is H-linear", "no star");
        rep.skip("sharp-invariants", "invariants of the conjugate are #(invariants)", "no star");
        return rep;
    }
    LinMap sh_map = sharp(b);
    rep.run("sharp-algebra-isomorphism", "# is an algebra isomorphism onto the conjugate algebra", [&]() -> Opt {
        if (auto w = check_morphism(sh_map, b.alg, conjugate_algebra(b.alg))) return w;
        if (!inverse(sh_map)) return "not bijective";
        return std::nullopt;
    });
    rep.run("sharp-h-linear", "#(h·b) = h·#(b)", [&]() -> Opt {
        for (Index i = 0; i < h.H().dim(); ++i)
            if (sh_map.after(b.module.act[i]) != bar.act[i].after(sh_map)) return "h = " + h.H().labels()[i];
        return std::nullopt;
    });
    rep.run("sharp-invariants", "invariants of the conjugate are #(invariants)", [&]() -> Opt {
        Subspace inv = invariants(h, b.module), inv_bar = invariants(h, bar);
        std::vector<Vec> img;
        for (const Vec& v : inv.basis()) img.push_back(sh_map.apply(v));
        if (Subspace::span(b.alg.dim(), img) != inv_bar)
            return "dims " + std::to_string(inv.dim()) + " and " + std::to_string(inv_bar.dim());
        return std::nullopt;
    });
    return rep;
}

Scalar inner(const DenseMatrix& gram, const Vec& x, const Vec& y) {
    Scalar s;
    for (const auto& [i, a] : x.entries())
        for (const auto& [j, b] : y.entries()) s += a * b.conj() * gram[i][j];
    return s;
}

CheckReport adjoint_check(const StarHopfAlgebroid& sh, const AdjointData& d) {
    const HopfAlgebroid& h = sh.core;
    const Algebra& H = h.H();
    CheckReport rep;
    rep.suite = "adjoint";
    const CheckItem& hyp = rep.run("right-invariance", "τ(h·b) = τ(s_r(ε_r(h))·b)", [&]() -> Opt {
        for (Index i = 0; i < H.dim(); ++i) {
            LinMap er = d.base.action(h.right.s.apply(h.right.eps.col(i)));
            for (Index b = 0; b < d.base.dim(); ++b)
                if (d.tau.apply(d.base.act[i].col(b)) != d.tau.apply(er.col(b)))
                    return "h = " + H.labels()[i] + ", b = " + d.base.labels[b];
        }
        return std::nullopt;
    });
    if (hyp.status != Status::pass) {
        rep.skip("adjoint-identity", "⟨h·ω, η⟩ = ⟨ω, (S²(h))*·η⟩", "hypothesis fails");
        return rep;
    }
    rep.run("adjoint-identity", "⟨h·ω, η⟩ = ⟨ω, (S²(h))*·η⟩", [&]() -> Opt {
        const Index n = d.omega.dim();
        for (Index i = 0; i < H.dim(); ++i) {
            LinMap adj = d.omega.action(sh.star_H.apply(h.S.apply(h.S.col(i))));
            for (Index a = 0; a < n; ++a)
                for (Index b = 0; b < n; ++b)
                    if (inner(d.gram, d.omega.act[i].col(a), Vec::unit(b)) != inner(d.gram, Vec::unit(a), adj.col(b)))
                        return "h = " + H.labels()[i] + ", ω = " + d.omega.labels[a] + ", η = " + d.omega.labels[b];
        }
        return std::nullopt;
    });
    return rep;
}

}  // namespace halg
