#include "halg/constructors.hpp"

#include <set>
#include <stdexcept>

namespace halg {

namespace {

using Opt = std::optional<std::string>;

Algebra relabel(const Algebra& a, std::vector<std::string> labels) {
    std::vector<Vec> prod;
    for (Index i = 0; i < a.dim(); ++i)
        for (Index j = 0; j < a.dim(); ++j) prod.push_back(a.product(i, j));
    return Algebra(std::move(labels), std::move(prod), a.unit());
}

FiniteGroupoid finish(FiniteGroupoid g) {
    const int n = g.arrow_count();
    g.comp.assign(static_cast<std::size_t>(n) * n, -1);
    return g;
}

}  // namespace

std::string validate_groupoid(const FiniteGroupoid& g) {
    const int n = g.arrow_count(), m = g.object_count();
    if (static_cast<int>(g.src.size()) != n || static_cast<int>(g.tgt.size()) != n ||
        static_cast<int>(g.inv.size()) != n || static_cast<int>(g.unit.size()) != m ||
        g.comp.size() != static_cast<std::size_t>(n) * n)
        return "table sizes";
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int c = g.compose(a, b);
            bool composable = g.src[a] == g.tgt[b];
            if (composable != (c >= 0)) return "composability of " + g.arrows[a] + "," + g.arrows[b];
            if (c >= 0 && (g.src[c] != g.src[b] || g.tgt[c] != g.tgt[a]))
                return "source or target of " + g.arrows[a] + g.arrows[b];
        }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                int ab = g.compose(a, b), bc = g.compose(b, c);
                if (ab < 0 || bc < 0) continue;
                if (g.compose(ab, c) != g.compose(a, bc))
                    return "associativity at " + g.arrows[a] + "," + g.arrows[b] + "," + g.arrows[c];
            }
    for (int x = 0; x < m; ++x) {
        int u = g.unit[x];
        if (g.src[u] != x || g.tgt[u] != x) return "unit of " + g.objects[x];
    }
    for (int a = 0; a < n; ++a) {
        if (g.compose(g.unit[g.tgt[a]], a) != a || g.compose(a, g.unit[g.src[a]]) != a)
            return "unit law at " + g.arrows[a];
        int i = g.inv[a];
        if (g.compose(a, i) != g.unit[g.tgt[a]] || g.compose(i, a) != g.unit[g.src[a]])
            return "inverse of " + g.arrows[a];
    }
    return {};
}

FiniteGroupoid unit_groupoid(int n) {
    if (n < 1) throw std::invalid_argument("unit groupoid needs at least one object");
    FiniteGroupoid g;
    for (int x = 0; x < n; ++x) {
        g.objects.push_back(std::to_string(x + 1));
        g.arrows.push_back("1_" + std::to_string(x + 1));
        g.src.push_back(x);
        g.tgt.push_back(x);
        g.unit.push_back(x);
        g.inv.push_back(x);
    }
    g = finish(g);
    for (int x = 0; x < n; ++x) g.comp[x * n + x] = x;
    return g;
}

FiniteGroupoid point_groupoid(const Group& group) {
    std::string bad = validate_group(group);
    if (!bad.empty()) throw std::invalid_argument("invalid group table: " + bad);
    FiniteGroupoid g;
    g.objects = {"*"};
    g.arrows = group.names;
    const int n = group.order();
    g.src.assign(n, 0);
    g.tgt.assign(n, 0);
    g.unit = {group.identity()};
    for (int a = 0; a < n; ++a) g.inv.push_back(group.inverse(a));
    g = finish(g);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) g.comp[a * n + b] = group.mul(a, b);
    return g;
}

FiniteGroupoid pair_groupoid(int n) {
    if (n < 1) throw std::invalid_argument("pair groupoid needs at least one object");
    FiniteGroupoid g;
    auto idx = [n](int x, int y) { return x * n + y; };
    for (int x = 0; x < n; ++x) g.objects.push_back(std::to_string(x + 1));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            g.arrows.push_back("(" + std::to_string(x + 1) + "," + std::to_string(y + 1) + ")");
            g.tgt.push_back(x);
            g.src.push_back(y);
            g.inv.push_back(idx(y, x));
        }
    for (int x = 0; x < n; ++x) g.unit.push_back(idx(x, x));
    g = finish(g);
    const int N = n * n;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) g.comp[idx(x, y) * N + idx(y, z)] = idx(x, z);
    return g;
}

FiniteGroupoid action_groupoid(const Group& group, const std::vector<std::vector<int>>& action) {
    std::string bad = validate_group(group);
    if (!bad.empty()) throw std::invalid_argument("invalid group table: " + bad);
    const int k = group.order();
    if (static_cast<int>(action.size()) != k) throw std::invalid_argument("action: one permutation per group element");
    const int n = static_cast<int>(action[0].size());
    for (int a = 0; a < k; ++a) {
        if (static_cast<int>(action[a].size()) != n) throw std::invalid_argument("action: ragged table");
        std::set<int> seen(action[a].begin(), action[a].end());
        if (static_cast<int>(seen.size()) != n || *seen.begin() < 0 || *seen.rbegin() >= n)
            throw std::invalid_argument("action: " + group.names[a] + " is not a bijection");
    }
    for (int m = 0; m < n; ++m) {
        if (action[group.identity()][m] != m) throw std::invalid_argument("action: identity does not act trivially");
        for (int a = 0; a < k; ++a)
            for (int b = 0; b < k; ++b)
                if (action[a][action[b][m]] != action[group.mul(a, b)][m])
                    throw std::invalid_argument("action: not compatible with the group law at " + group.names[a] +
                                                "," + group.names[b]);
    }
    FiniteGroupoid g;
    auto idx = [n](int a, int m) { return a * n + m; };
    for (int m = 0; m < n; ++m) g.objects.push_back(std::to_string(m + 1));
    for (int a = 0; a < k; ++a)
        for (int m = 0; m < n; ++m) {
            g.arrows.push_back("(" + group.names[a] + "," + std::to_string(m + 1) + ")");
            g.src.push_back(m);
            g.tgt.push_back(action[a][m]);
            g.inv.push_back(idx(group.inverse(a), action[a][m]));
        }
    for (int m = 0; m < n; ++m) g.unit.push_back(idx(group.identity(), m));
    g = finish(g);
    const int N = k * n;
    for (int a = 0; a < k; ++a)
        for (int m = 0; m < n; ++m)
            for (int b = 0; b < k; ++b)
                for (int p = 0; p < n; ++p)
                    if (m == action[b][p]) g.comp[idx(a, m) * N + idx(b, p)] = idx(group.mul(a, b), p);
    return g;
}

std::vector<std::vector<int>> action_by_name(const Group& group, const std::string& spec) {
    const int k = group.order();
    std::vector<std::vector<int>> act(k);
    auto number = [&](std::size_t skip) {
        int m = std::stoi(spec.substr(skip));
        if (m < 1) throw std::invalid_argument("action: need at least one point");
        return m;
    };
    auto is_cyclic = [&] {
        for (int a = 0; a < k; ++a)
            for (int b = 0; b < k; ++b)
                if (group.mul(a, b) != (a + b) % k) return false;
        return true;
    };
    if (spec == "regular") {
        for (int a = 0; a < k; ++a)
            for (int b = 0; b < k; ++b) act[a].push_back(group.mul(a, b));
    } else if (spec.rfind("swap", 0) == 0 || spec.rfind("rot", 0) == 0) {
        if (!is_cyclic()) throw std::invalid_argument("action " + spec + " needs a cyclic group");
        bool swap = spec[0] == 's';
        int m = number(swap ? 4 : 3);
        for (int a = 0; a < k; ++a)
            for (int x = 0; x < m; ++x) act[a].push_back(swap ? (a % 2 ? m - 1 - x : x) : (x + a) % m);
    } else {
        throw std::invalid_argument("unknown action: " + spec);
    }
    return act;
}

FiniteGroupoid groupoid_by_name(const std::string& preset) {
    auto colon = preset.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("unknown groupoid preset: " + preset);
    std::string kind = preset.substr(0, colon), rest = preset.substr(colon + 1);
    auto count = [&] {
        std::size_t used = 0;
        int n = std::stoi(rest, &used);
        if (used != rest.size()) throw std::invalid_argument("bad count in " + preset);
        return n;
    };
    if (kind == "unit") return unit_groupoid(count());
    if (kind == "pair") return pair_groupoid(count());
    if (kind == "point") return point_groupoid(group_by_name(rest));
    if (kind == "action") {
        auto c2 = rest.find(':');
        if (c2 == std::string::npos) throw std::invalid_argument("action preset needs a group and an action");
        Group grp = group_by_name(rest.substr(0, c2));
        return action_groupoid(grp, action_by_name(grp, rest.substr(c2 + 1)));
    }
    throw std::invalid_argument("unknown groupoid preset: " + preset);
}

StarHopfAlgebroid convolution_algebroid(const FiniteGroupoid& g) {
    std::string bad = validate_groupoid(g);
    if (!bad.empty()) throw std::invalid_argument("invalid groupoid: " + bad);
    const Index n = g.arrow_count(), m = g.object_count();
    std::vector<Vec> prod(static_cast<std::size_t>(n * n));
    Vec unit;
    for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b)
            if (int c = g.compose(static_cast<int>(a), static_cast<int>(b)); c >= 0) prod[a * n + b] = Vec::unit(c);
    VecAcc uacc;
    for (Index x = 0; x < m; ++x) uacc.add(g.unit[x], 1);
    unit = uacc.take();
    Algebra H(g.arrows, prod, unit);
    std::vector<std::string> objl;
    for (const auto& o : g.objects) objl.push_back("δ" + o);
    StarAlgebra base = function_algebra(m);
    Algebra A = relabel(base.alg, objl);

    LinMap emb(n, m), delta(n * n, n), el(m, n), er(m, n), S(n, n), star(n, n, true);
    for (Index x = 0; x < m; ++x) emb.set_col(x, Vec::unit(g.unit[x]));
    for (Index a = 0; a < n; ++a) {
        delta.set_col(a, Vec::unit(a * n + a));
        el.set_col(a, Vec::unit(g.tgt[a]));
        er.set_col(a, Vec::unit(g.src[a]));
        S.set_col(a, Vec::unit(g.inv[a]));
        star.set_col(a, Vec::unit(g.inv[a]));
    }
    LeftBialgebroid l{H, A, emb, emb, delta, el};
    RightBialgebroid r{H, A, emb, emb, delta, er};
    return {{l, r, S}, star, base.star, base.star};
}

StarHopfAlgebroid enveloping_algebroid(const StarAlgebra& sa) {
    const Algebra& A = sa.alg;
    const Index n = A.dim(), N = n * n;
    Algebra Aop = opposite(A);
    Algebra H = tensor_algebra(A, Aop);
    const Vec& one = A.unit();
    LinMap sl(N, n), tl(N, n), delta(N * N, N), el(n, N), er(n, N), S(N, N), star(N, N, true);
    for (Index a = 0; a < n; ++a) {
        sl.set_col(a, tensor(Vec::unit(a), one, n));
        tl.set_col(a, tensor(one, Vec::unit(a), n));
    }
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) {
            Index k = i * n + j;
            delta.set_col(k, tensor(tensor(Vec::unit(i), one, n), tensor(one, Vec::unit(j), n), N));
            el.set_col(k, A.product(i, j));
            er.set_col(k, A.product(j, i));
            S.set_col(k, Vec::unit(j * n + i));
            star.set_col(k, tensor(sa.star.col(i), sa.star.col(j), n));
        }
    LeftBialgebroid l{H, A, sl, tl, delta, el};
    RightBialgebroid r{H, Aop, tl, sl, delta, er};
    return {{l, r, S}, star, sa.star, sa.star};
}

namespace {

Vec act_by(const ModuleAlgebraAction& act, const Vec& q, const Vec& a) {
    VecAcc acc;
    for (const auto& [k, c] : q.entries()) acc.add(act.act[k].apply(a), c);
    return acc.take();
}

Vec coproduct2(const HopfAlgebra& q, const Vec& x) {
    const Index n = q.alg.alg.dim();
    return apply_on_factor(q.delta.apply(x), {n, n}, 0, q.delta);
}

}  // namespace

CheckReport verify_module_algebra(const HopfAlgebra& q, const StarAlgebra& sa, const ModuleAlgebraAction& action) {
    CheckReport r;
    r.suite = "module-algebra";
    const Algebra& Q = q.alg.alg;
    const Algebra& A = sa.alg;
    const Index nq = Q.dim(), na = A.dim();
    if (static_cast<Index>(action.act.size()) != nq) throw std::invalid_argument("action: one matrix per basis element");
    for (const auto& m : action.act)
        if (m.rows() != na || m.cols() != na || m.antilinear()) throw std::invalid_argument("action: bad matrix shape");
    r.run("action-unital", "1·a = a", [&]() -> Opt {
        for (Index i = 0; i < na; ++i)
            if (act_by(action, Q.unit(), Vec::unit(i)) != Vec::unit(i)) return "on " + A.labels()[i];
        return std::nullopt;
    });
    r.run("action-associative", "q·(q'·a) = (qq')·a", [&]() -> Opt {
        for (Index x = 0; x < nq; ++x)
            for (Index y = 0; y < nq; ++y)
                for (Index i = 0; i < na; ++i)
                    if (action.act[x].apply(action.act[y].col(i)) != act_by(action, Q.product(x, y), Vec::unit(i)))
                        return Q.labels()[x] + "," + Q.labels()[y] + " on " + A.labels()[i];
        return std::nullopt;
    });
    r.run("action-multiplicative", "q·(ab) = (q1·a)(q2·b)", [&]() -> Opt {
        for (Index x = 0; x < nq; ++x) {
            Vec dq = q.delta.col(x);
            for (Index i = 0; i < na; ++i)
                for (Index j = 0; j < na; ++j) {
                    VecAcc acc;
                    for (const auto& [k, c] : dq.entries())
                        acc.add(A.mul(action.act[k / nq].col(i), action.act[k % nq].col(j)), c);
                    if (acc.take() != action.act[x].apply(A.product(i, j)))
                        return Q.labels()[x] + " on " + A.labels()[i] + A.labels()[j];
                }
        }
        return std::nullopt;
    });
    r.run("action-unit", "q·1 = ε(q)1", [&]() -> Opt {
        for (Index x = 0; x < nq; ++x) {
            Scalar e = q.eps.col(x).get(0);
            if (action.act[x].apply(A.unit()) != e * A.unit()) return Q.labels()[x];
        }
        return std::nullopt;
    });
    r.run("action-star", "(q·a)* = T(q)*·a*", [&]() -> Opt {
        for (Index x = 0; x < nq; ++x) {
            Vec tq = q.alg.star.apply(q.antipode.col(x));
            for (Index i = 0; i < na; ++i)
                if (sa.star.apply(action.act[x].col(i)) != act_by(action, tq, sa.star.col(i)))
                    return Q.labels()[x] + " on " + A.labels()[i];
        }
        return std::nullopt;
    });
    return r;
}

ModuleAlgebraAction trivial_action(const HopfAlgebra& q, const StarAlgebra& a) {
    ModuleAlgebraAction m;
    for (Index x = 0; x < q.alg.alg.dim(); ++x) m.act.push_back(q.eps.col(x).get(0) * LinMap::identity(a.alg.dim()));
    return m;
}

ModuleAlgebraAction permutation_action(const HopfAlgebra& q, const std::vector<std::vector<int>>& perm) {
    ModuleAlgebraAction m;
    if (static_cast<Index>(perm.size()) != q.alg.alg.dim())
        throw std::invalid_argument("permutation action: one permutation per group element");
    for (const auto& p : perm) {
        const Index n = static_cast<Index>(p.size());
        LinMap mat(n, n);
        for (Index x = 0; x < n; ++x) mat.set_col(x, Vec::unit(p[x]));
        m.act.push_back(mat);
    }
    return m;
}

StarHopfAlgebroid connes_moscovici(const HopfAlgebra& q, const StarAlgebra& sa, const ModuleAlgebraAction& action) {
    const Algebra& Q = q.alg.alg;
    const Algebra& A = sa.alg;
    const Index nq = Q.dim(), na = A.dim();
    if (q.antipode.after(q.antipode) != LinMap::identity(nq))
        throw std::invalid_argument("connes-moscovici: antipode of Q does not square to the identity");
    CheckReport mod = verify_module_algebra(q, sa, action);
    if (!mod.ok()) {
        const CheckItem* bad = nullptr;
        for (const auto& it : mod.items)
            if (it.status != Status::pass) {
                bad = &it;
                break;
            }
        throw std::invalid_argument("connes-moscovici: not a module *-algebra: " + bad->id + " " + bad->witness);
    }
    const std::vector<Index> dims{na, nq, na};
    const Index N = na * nq * na;
    auto t3 = [&](const Vec& a, const Vec& x, const Vec& b) { return tensor(tensor(a, x, nq), b, na); };
    std::vector<std::string> labels;
    for (Index i = 0; i < na; ++i)
        for (Index x = 0; x < nq; ++x)
            for (Index j = 0; j < na; ++j) labels.push_back(A.labels()[i] + "⊗" + Q.labels()[x] + "⊗" + A.labels()[j]);
    std::vector<Vec> d2(nq);
    for (Index x = 0; x < nq; ++x) d2[x] = coproduct2(q, Vec::unit(x));

    std::vector<Vec> prod(static_cast<std::size_t>(N * N));
    for (Index u = 0; u < N; ++u) {
        auto pu = tensor_split(u, dims);
        for (Index v = 0; v < N; ++v) {
            auto pv = tensor_split(v, dims);
            VecAcc acc;
            for (const auto& [k, c] : d2[pu[1]].entries()) {
                auto qs = tensor_split(k, {nq, nq, nq});
                Vec left = A.mul(Vec::unit(pu[0]), action.act[qs[0]].col(pv[0]));
                const Vec& mid = Q.product(qs[1], pv[1]);
                Vec right = A.mul(action.act[qs[2]].col(pv[2]), Vec::unit(pu[2]));
                acc.add(t3(left, mid, right), c);
            }
            prod[u * N + v] = acc.take();
        }
    }
    const Vec& oneA = A.unit();
    const Vec& oneQ = Q.unit();
    Algebra H(labels, prod, t3(oneA, oneQ, oneA));
    Algebra Aop = opposite(A);

    LinMap sl(N, na), tl(N, na), delta(N * N, N), el(na, N), er(na, N), S(N, N), star(N, N, true);
    for (Index a = 0; a < na; ++a) {
        sl.set_col(a, t3(Vec::unit(a), oneQ, oneA));
        tl.set_col(a, t3(oneA, oneQ, Vec::unit(a)));
    }
    for (Index u = 0; u < N; ++u) {
        auto p = tensor_split(u, dims);
        Vec ei = Vec::unit(p[0]), ej = Vec::unit(p[2]);
        VecAcc dacc;
        for (const auto& [k, c] : q.delta.col(p[1]).entries())
            dacc.add(tensor(t3(ei, Vec::unit(k / nq), oneA), t3(oneA, Vec::unit(k % nq), ej), N), c);
        delta.set_col(u, dacc.take());
        el.set_col(u, q.eps.col(p[1]).get(0) * A.mul(ei, ej));
        er.set_col(u, act_by(action, q.antipode.col(p[1]), A.mul(ej, ei)));
        VecAcc sacc;
        for (const auto& [k, c] : d2[p[1]].entries()) {
            auto qs = tensor_split(k, {nq, nq, nq});
            sacc.add(t3(act_by(action, q.antipode.col(qs[2]), ej), q.antipode.col(qs[1]),
                        act_by(action, q.antipode.col(qs[0]), ei)),
                     c);
        }
        S.set_col(u, sacc.take());
        // a⊗q⊗b = s_l(a)t_l(b)(1⊗q⊗1), so its star is (1⊗q*⊗1)t_l(b*)s_l(a*).
        VecAcc stacc;
        Vec d2star = coproduct2(q, q.alg.star.col(p[1]));
        for (const auto& [k, c] : d2star.entries()) {
            auto qs = tensor_split(k, {nq, nq, nq});
            stacc.add(t3(action.act[qs[0]].apply(sa.star.col(p[0])), Vec::unit(qs[1]),
                         action.act[qs[2]].apply(sa.star.col(p[2]))),
                      c);
        }
        star.set_col(u, stacc.take());
    }
    LeftBialgebroid l{H, A, sl, tl, delta, el};
    RightBialgebroid r{H, Aop, tl, sl, delta, er};
    return {{l, r, S}, star, sa.star, sa.star};
}

StarHopfAlgebroid hopf_algebra_algebroid(const HopfAlgebra& q) {
    const Algebra& Q = q.alg.alg;
    const Index n = Q.dim();
    StarAlgebra k = ground_star_algebra();
    LinMap st(n, 1);
    st.set_col(0, Q.unit());
    LeftBialgebroid l{Q, k.alg, st, st, q.delta, q.eps};
    RightBialgebroid r{Q, k.alg, st, st, q.delta, q.eps};
    return {{l, r, q.antipode}, q.alg.star, k.star, k.star};
}

CheckReport check_isomorphism(const StarHopfAlgebroid& a, const StarHopfAlgebroid& b, const LinMap& phi,
                              const LinMap& phi_l, const LinMap& phi_r) {
    CheckReport r;
    r.suite = "isomorphism";
    const auto& ha = a.core;
    const auto& hb = b.core;
    const Algebra& Ha = ha.H();
    const Algebra& Hb = hb.H();
    auto eq = [](const LinMap& f, const LinMap& g, const char* what) -> Opt {
        if (f.rows() != g.rows() || f.cols() != g.cols()) return std::string(what) + ": dimension mismatch";
        for (Index j = 0; j < f.cols(); ++j)
            if (f.col(j) != g.col(j))
                return std::string(what) + " at basis " + std::to_string(j) + ": " + format_indexed(f.col(j)) +
                       " vs " + format_indexed(g.col(j));
        return std::nullopt;
    };
    r.run("isomorphism-algebras", "the maps on H, A_l, A_r are algebra isomorphisms", [&]() -> Opt {
        if (auto w = check_morphism(phi, Ha, Hb)) return "H: " + *w;
        if (auto w = check_morphism(phi_l, ha.left.A, hb.left.A)) return "A_l: " + *w;
        if (auto w = check_morphism(phi_r, ha.right.A, hb.right.A)) return "A_r: " + *w;
        if (!inverse(phi) || !inverse(phi_l) || !inverse(phi_r)) return "not invertible";
        return std::nullopt;
    });
    r.run("isomorphism-sources-targets", "φs = s'φ and φt = t'φ on both sides", [&]() -> Opt {
        if (auto w = eq(phi.after(ha.left.s), hb.left.s.after(phi_l), "s_l")) return w;
        if (auto w = eq(phi.after(ha.left.t), hb.left.t.after(phi_l), "t_l")) return w;
        if (auto w = eq(phi.after(ha.right.s), hb.right.s.after(phi_r), "s_r")) return w;
        if (auto w = eq(phi.after(ha.right.t), hb.right.t.after(phi_r), "t_r")) return w;
        return std::nullopt;
    });
    r.run("isomorphism-coproducts", "(φ⊗φ)Δ = Δ'φ in the balanced tensors", [&]() -> Opt {
        const Index n = Ha.dim();
        TensorQuotient ql = left_tensor(hb.left), qr = right_tensor(hb.right);
        for (Index j = 0; j < n; ++j) {
            Vec x = apply_factorwise(ha.left.delta.col(j), {n, n}, {&phi, &phi});
            if (!ql.equivalent(x, hb.left.delta.apply(phi.col(j)))) return "Δ_l at " + Ha.labels()[j];
            Vec y = apply_factorwise(ha.right.delta.col(j), {n, n}, {&phi, &phi});
            if (!qr.equivalent(y, hb.right.delta.apply(phi.col(j)))) return "Δ_r at " + Ha.labels()[j];
        }
        return std::nullopt;
    });
    r.run("isomorphism-counits", "ε'φ = φ_base ε", [&]() -> Opt {
        if (auto w = eq(hb.left.eps.after(phi), phi_l.after(ha.left.eps), "ε_l")) return w;
        if (auto w = eq(hb.right.eps.after(phi), phi_r.after(ha.right.eps), "ε_r")) return w;
        return std::nullopt;
    });
    r.run("isomorphism-antipode", "S'φ = φS", [&] { return eq(hb.S.after(phi), phi.after(ha.S), "S"); });
    r.run("isomorphism-star", "φ commutes with the involutions", [&]() -> Opt {
        if (auto w = eq(b.star_H.after(phi), phi.after(a.star_H), "H")) return w;
        if (auto w = eq(b.star_Al.after(phi_l), phi_l.after(a.star_Al), "A_l")) return w;
        if (auto w = eq(b.star_Ar.after(phi_r), phi_r.after(a.star_Ar), "A_r")) return w;
        return std::nullopt;
    });
    return r;
}

}  // namespace halg
