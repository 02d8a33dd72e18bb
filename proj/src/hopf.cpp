#include "halg/hopf.hpp"

#include <map>
#include <stdexcept>

namespace halg {

namespace {

using Opt = std::optional<std::string>;

std::string tens(const Algebra& H, const Vec& v) { return format_tensor(v, {&H.labels(), &H.labels()}); }

std::vector<Vec> basis_elements(const Algebra& H) {
    std::vector<Vec> out;
    for (Index i = 0; i < H.dim(); ++i) out.push_back(Vec::unit(i));
    return out;
}

std::vector<LinMap> left_mults(const Algebra& H, const LinMap& f) {
    std::vector<LinMap> out;
    for (Index a = 0; a < f.cols(); ++a) out.push_back(H.left_mult(f.col(a)));
    return out;
}

std::vector<LinMap> right_mults(const Algebra& H, const LinMap& f) {
    std::vector<LinMap> out;
    for (Index a = 0; a < f.cols(); ++a) out.push_back(H.right_mult(f.col(a)));
    return out;
}

// Linear equations Σ_u x_u out_u = target, one row per output coordinate.
struct LinearSystem {
    Index unknowns = 0;
    std::vector<Vec> rows;
    std::vector<Scalar> rhs;

    void add(const std::vector<std::pair<Index, Vec>>& terms, const Vec& target) {
        std::map<Index, VecAcc> eq;
        for (const auto& [u, out] : terms)
            for (const auto& [m, c] : out.entries()) eq[m].add(u, c);
        for (const auto& [m, c] : target.entries()) eq[m];
        for (auto& [m, acc] : eq) {
            rows.push_back(acc.take());
            rhs.push_back(target.get(m));
        }
    }

    LinMap matrix() const {
        std::vector<Vec> cols(unknowns);
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (const auto& [u, c] : rows[r].entries()) cols[u].push_back(static_cast<Index>(r), c);
        return LinMap::from_columns(static_cast<Index>(rows.size()), std::move(cols));
    }

    Vec target() const {
        Vec t;
        for (std::size_t r = 0; r < rhs.size(); ++r)
            if (!rhs[r].is_zero()) t.push_back(static_cast<Index>(r), rhs[r]);
        return t;
    }
};

LinMap tensor_square(const LinMap& f, Index n) {
    LinMap out(n * n, n * n, f.antilinear());
    for (Index p = 0; p < n; ++p)
        for (Index q = 0; q < n; ++q) out.set_col(p * n + q, tensor(f.col(p), f.col(q), n));
    return out;
}

Opt maps_equal(const LinMap& f, const LinMap& g, const std::vector<std::string>& dom) {
    if (f.rows() != g.rows() || f.cols() != g.cols()) return "dimension mismatch";
    for (Index j = 0; j < f.cols(); ++j)
        if (f.col(j) != g.col(j) || (f.antilinear() != g.antilinear() && !f.col(j).empty()))
            return "on " + dom[j] + ": " + format_indexed(f.col(j)) + " vs " + format_indexed(g.col(j));
    return std::nullopt;
}

}  // namespace

Vec mu(const Algebra& H, const Vec& x) {
    const Index n = H.dim();
    VecAcc acc;
    for (const auto& [k, c] : x.entries()) acc.add(H.product(k / n, k % n), c);
    return acc.take();
}

Vec mu_op(const Algebra& H, const Vec& x) {
    const Index n = H.dim();
    VecAcc acc;
    for (const auto& [k, c] : x.entries()) acc.add(H.product(k % n, k / n), c);
    return acc.take();
}

namespace {

template <class B>
void validate_common(const B& b, const char* what) {
    const Index n = b.H.dim(), m = b.A.dim();
    auto bad = [&](const std::string& s) { throw std::invalid_argument(std::string(what) + ": " + s); };
    if (b.s.rows() != n || b.s.cols() != m) bad("source map has wrong shape");
    if (b.t.rows() != n || b.t.cols() != m) bad("target map has wrong shape");
    if (b.delta.rows() != n * n || b.delta.cols() != n) bad("coproduct has wrong shape");
    if (b.eps.rows() != m || b.eps.cols() != n) bad("counit has wrong shape");
    if (b.s.antilinear() || b.t.antilinear() || b.delta.antilinear() || b.eps.antilinear())
        bad("structure maps must be linear");
}

}  // namespace

void validate_shapes(const LeftBialgebroid& b) { validate_common(b, "left bialgebroid"); }
void validate_shapes(const RightBialgebroid& b) { validate_common(b, "right bialgebroid"); }

void require_commuting_images(const LinMap& s, const LinMap& t, const Algebra& H, const Algebra& A) {
    for (Index a = 0; a < s.cols(); ++a)
        for (Index c = 0; c < t.cols(); ++c)
            if (H.mul(s.col(a), t.col(c)) != H.mul(t.col(c), s.col(a)))
                throw std::invalid_argument("images of source and target do not commute: s(" + A.labels()[a] +
                                            "), t(" + A.labels()[c] + ")");
}

Balancing left_balancing(const LeftBialgebroid& b) { return {left_mults(b.H, b.t), left_mults(b.H, b.s)}; }
Balancing right_balancing(const RightBialgebroid& b) { return {right_mults(b.H, b.s), right_mults(b.H, b.t)}; }

TensorQuotient left_tensor(const LeftBialgebroid& b) {
    return TensorQuotient({b.H.dim(), b.H.dim()}, {left_balancing(b)});
}

TensorQuotient right_tensor(const RightBialgebroid& b) {
    return TensorQuotient({b.H.dim(), b.H.dim()}, {right_balancing(b)});
}

namespace {

// Kernel of the stacked map x -> [(F_a⊗id)x - (id⊗G_a)x] over the materialized quotient.
TakeuchiSpace takeuchi(const TensorQuotient& tq, Index n, const std::vector<LinMap>& F, const std::vector<LinMap>& G,
                       const Limits& limits) {
    TakeuchiSpace out;
    out.quot = tq.materialize(limits);
    const Quotient& q = out.quot;
    const Index blocks = static_cast<Index>(F.size());
    LinMap stacked(q.dim * blocks, q.dim);
    for (Index j = 0; j < q.dim; ++j) {
        Vec rep = Vec::unit(q.reps[j]);
        VecAcc acc;
        for (Index a = 0; a < blocks; ++a) {
            Vec diff = apply_on_factor(rep, {n, n}, 0, F[a]) - apply_on_factor(rep, {n, n}, 1, G[a]);
            Vec pd = q.proj.apply(diff);
            for (const auto& [k, c] : pd.entries()) acc.add(a * q.dim + k, c);
        }
        stacked.set_col(j, acc.take());
    }
    out.space = kernel(stacked);
    return out;
}

}  // namespace

TakeuchiSpace takeuchi_left(const LeftBialgebroid& b, const Limits& limits) {
    validate_shapes(b);
    require_commuting_images(b.s, b.t, b.H, b.A);
    return takeuchi(left_tensor(b), b.H.dim(), right_mults(b.H, b.t), right_mults(b.H, b.s), limits);
}

TakeuchiSpace takeuchi_right(const RightBialgebroid& b, const Limits& limits) {
    validate_shapes(b);
    require_commuting_images(b.s, b.t, b.H, b.A);
    return takeuchi(right_tensor(b), b.H.dim(), left_mults(b.H, b.s), left_mults(b.H, b.t), limits);
}

RightBialgebroid opposite_right(const LeftBialgebroid& b) {
    return {opposite(b.H), b.A, b.t, b.s, b.delta, b.eps};
}

LeftBialgebroid opposite_left(const RightBialgebroid& b) {
    return {opposite(b.H), b.A, b.t, b.s, b.delta, b.eps};
}

HopfAlgebroid dual_algebroid(const HopfAlgebroid& h) {
    auto inv = inverse(h.S);
    if (!inv) throw std::invalid_argument("dual algebroid: antipode is not invertible");
    Algebra op = opposite(h.H());
    LeftBialgebroid l{op, h.right.A, h.right.t, h.right.s, h.right.delta, h.right.eps};
    RightBialgebroid r{op, h.left.A, h.left.t, h.left.s, h.left.delta, h.left.eps};
    return {l, r, *inv};
}

namespace {

// Shared shape of both bialgebroid verifiers. For the left case the bimodule is
// a1·h·a2 = s(a1)t(a2)h; for the right case a1·h·a2 = h t(a1)s(a2).
struct Side {
    bool left;
    const Algebra& H;
    const Algebra& A;
    const LinMap& s;
    const LinMap& t;
    const LinMap& delta;
    const LinMap& eps;
};

CheckReport verify_bialgebroid(const Side& b, const std::vector<Vec>* elements) {
    CheckReport r;
    r.suite = b.left ? "left-bialgebroid" : "right-bialgebroid";
    const Algebra& H = b.H;
    const Algebra& A = b.A;
    const Index n = H.dim(), m = A.dim();
    const std::vector<Vec> els = elements ? *elements : basis_elements(H);
    const std::vector<Index> d2{n, n}, d3{n, n, n};

    std::vector<LinMap> Ls = left_mults(H, b.s), Lt = left_mults(H, b.t);
    std::vector<LinMap> Rs = right_mults(H, b.s), Rt = right_mults(H, b.t);
    Balancing bal = b.left ? Balancing{Lt, Ls} : Balancing{Rs, Rt};
    TensorQuotient q2(d2, {bal});
    TensorQuotient q3(d3, {bal, bal});
    auto lab = [&](Index a) { return A.labels()[a]; };

    r.run("st-commute", "images of source and target commute", [&]() -> Opt {
        for (Index a = 0; a < m; ++a)
            for (Index c = 0; c < m; ++c)
                if (H.mul(b.s.col(a), b.t.col(c)) != H.mul(b.t.col(c), b.s.col(a)))
                    return "s(" + lab(a) + ") t(" + lab(c) + ")";
        return std::nullopt;
    });
    r.run("source-morphism", "s is a unital algebra map", [&] { return check_morphism(b.s, A, H); });
    r.run("target-antimorphism", "t is a unital algebra map from the opposite algebra",
          [&] { return check_antimorphism(b.t, A, H); });

    r.run("coproduct-bimodule-map", "the coproduct is a bimodule map into the balanced tensor", [&]() -> Opt {
        for (const Vec& h : els) {
            Vec dh = b.delta.apply(h);
            for (Index a = 0; a < m; ++a) {
                Vec lhs1, rhs1, lhs2, rhs2;
                if (b.left) {
                    lhs1 = b.delta.apply(Ls[a].apply(h));
                    rhs1 = apply_on_factor(dh, d2, 0, Ls[a]);
                    lhs2 = b.delta.apply(Lt[a].apply(h));
                    rhs2 = apply_on_factor(dh, d2, 1, Lt[a]);
                } else {
                    lhs1 = b.delta.apply(Rt[a].apply(h));
                    rhs1 = apply_on_factor(dh, d2, 0, Rt[a]);
                    lhs2 = b.delta.apply(Rs[a].apply(h));
                    rhs2 = apply_on_factor(dh, d2, 1, Rs[a]);
                }
                if (!q2.equivalent(lhs1, rhs1)) return "left action of " + lab(a) + " on " + H.format(h);
                if (!q2.equivalent(lhs2, rhs2)) return "right action of " + lab(a) + " on " + H.format(h);
            }
        }
        return std::nullopt;
    });

    r.run("counit-bimodule-map", "the counit is a bimodule map onto the base", [&]() -> Opt {
        for (const Vec& h : els) {
            Vec eh = b.eps.apply(h);
            for (Index a = 0; a < m; ++a) {
                Vec av = Vec::unit(a);
                Vec l1 = b.eps.apply(b.left ? Ls[a].apply(h) : Rt[a].apply(h));
                Vec l2 = b.eps.apply(b.left ? Lt[a].apply(h) : Rs[a].apply(h));
                if (l1 != A.mul(av, eh)) return "left action of " + lab(a) + " on " + H.format(h);
                if (l2 != A.mul(eh, av)) return "right action of " + lab(a) + " on " + H.format(h);
            }
        }
        return std::nullopt;
    });

    r.run("takeuchi-membership", "the coproduct lands in the Takeuchi subspace", [&]() -> Opt {
        for (const Vec& h : els) {
            Vec dh = b.delta.apply(h);
            for (Index a = 0; a < m; ++a) {
                Vec x = b.left ? apply_on_factor(dh, d2, 0, Rt[a]) : apply_on_factor(dh, d2, 0, Ls[a]);
                Vec y = b.left ? apply_on_factor(dh, d2, 1, Rs[a]) : apply_on_factor(dh, d2, 1, Lt[a]);
                if (!q2.equivalent(x, y)) return "element " + H.format(h) + ", base " + lab(a);
            }
        }
        return std::nullopt;
    });

    r.run("coproduct-unital", "the coproduct sends 1 to 1⊗1 in the balanced tensor", [&]() -> Opt {
        Vec lhs = b.delta.apply(H.unit());
        Vec one = tensor(H.unit(), H.unit(), n);
        if (!q2.equivalent(lhs, one)) return "coproduct of 1 is " + tens(H, lhs);
        return std::nullopt;
    });

    r.run("coproduct-multiplicative", "coproduct of a product is the factorwise product", [&]() -> Opt {
        std::vector<Vec> d;
        for (const Vec& h : els) d.push_back(b.delta.apply(h));
        for (std::size_t i = 0; i < els.size(); ++i)
            for (std::size_t j = 0; j < els.size(); ++j) {
                Vec lhs = b.delta.apply(H.mul(els[i], els[j]));
                Vec rhs = factorwise_mul(d[i], d[j], {&H, &H});
                if (!q2.equivalent(lhs, rhs)) return H.format(els[i]) + " times " + H.format(els[j]);
            }
        return std::nullopt;
    });

    r.run("coassociativity", "(Δ⊗id)Δ = (id⊗Δ)Δ in the triple balanced tensor", [&]() -> Opt {
        for (const Vec& h : els) {
            Vec dh = b.delta.apply(h);
            Vec x = apply_on_factor(dh, d2, 0, b.delta);
            Vec y = apply_on_factor(dh, d2, 1, b.delta);
            if (!q3.equivalent(x, y)) return "element " + H.format(h);
        }
        return std::nullopt;
    });

    // For the left case: s(ε(h1))h2 = h and t(ε(h2))h1 = h.
    // For the right case: h2 t(ε(h1)) = h and h1 s(ε(h2)) = h.
    auto counit_law = [&](bool first) -> Opt {
        for (const Vec& h : els) {
            VecAcc acc;
            Vec dh = b.delta.apply(h);
            for (const auto& [k, c] : dh.entries()) {
                Vec h1 = Vec::unit(k / n), h2 = Vec::unit(k % n);
                Vec term;
                if (b.left)
                    term = first ? H.mul(b.s.apply(b.eps.apply(h1)), h2) : H.mul(b.t.apply(b.eps.apply(h2)), h1);
                else
                    term = first ? H.mul(h2, b.t.apply(b.eps.apply(h1))) : H.mul(h1, b.s.apply(b.eps.apply(h2)));
                acc.add(term, c);
            }
            Vec got = acc.take();
            if (got != h) return "element " + H.format(h) + " gives " + H.format(got);
        }
        return std::nullopt;
    };
    r.run("counit-left", b.left ? "s(ε(h1))h2 = h" : "h2 t(ε(h1)) = h", [&] { return counit_law(true); });
    r.run("counit-right", b.left ? "t(ε(h2))h1 = h" : "h1 s(ε(h2)) = h", [&] { return counit_law(false); });

    r.run("counit-character", b.left ? "ε(hh') = ε(h s(εh')) = ε(h t(εh'))" : "ε(hh') = ε(s(εh)h') = ε(t(εh)h')",
          [&]() -> Opt {
              for (const Vec& h : els)
                  for (const Vec& g : els) {
                      Vec e = b.eps.apply(H.mul(h, g));
                      Vec e1, e2;
                      if (b.left) {
                          Vec eg = b.eps.apply(g);
                          e1 = b.eps.apply(H.mul(h, b.s.apply(eg)));
                          e2 = b.eps.apply(H.mul(h, b.t.apply(eg)));
                      } else {
                          Vec ehv = b.eps.apply(h);
                          e1 = b.eps.apply(H.mul(b.s.apply(ehv), g));
                          e2 = b.eps.apply(H.mul(b.t.apply(ehv), g));
                      }
                      if (e != e1 || e != e2) return H.format(h) + " and " + H.format(g);
                  }
              return std::nullopt;
          });

    r.run("counit-source-target", "εs = εt = id", [&]() -> Opt {
        for (Index a = 0; a < m; ++a) {
            if (b.eps.apply(b.s.col(a)) != Vec::unit(a)) return "εs on " + lab(a);
            if (b.eps.apply(b.t.col(a)) != Vec::unit(a)) return "εt on " + lab(a);
        }
        return std::nullopt;
    });
    return r;
}

}  // namespace

CheckReport verify_left_bialgebroid(const LeftBialgebroid& b, const std::vector<Vec>* elements) {
    validate_shapes(b);
    return verify_bialgebroid({true, b.H, b.A, b.s, b.t, b.delta, b.eps}, elements);
}

CheckReport verify_right_bialgebroid(const RightBialgebroid& b, const std::vector<Vec>* elements) {
    validate_shapes(b);
    return verify_bialgebroid({false, b.H, b.A, b.s, b.t, b.delta, b.eps}, elements);
}

namespace {

void validate_hopf(const HopfAlgebroid& h) {
    validate_shapes(h.left);
    validate_shapes(h.right);
    if (h.left.H != h.right.H) throw std::invalid_argument("hopf algebroid: left and right total algebras differ");
    const Index n = h.H().dim();
    if (h.S.rows() != n || h.S.cols() != n || h.S.antilinear())
        throw std::invalid_argument("hopf algebroid: antipode has wrong shape");
}

void skip_all(CheckReport& r, const std::vector<std::pair<std::string, std::string>>& items, const std::string& why) {
    for (const auto& [id, st] : items) r.skip(id, st, why);
}

std::string join_ids(const std::vector<std::string>& ids) {
    std::string s;
    for (const auto& x : ids) s += (s.empty() ? "" : ", ") + x;
    return s;
}

const std::vector<std::pair<std::string, std::string>> kHopfItems = {
    {"image-compatibility", "s_lε_lt_r = t_r, t_lε_ls_r = s_r, s_rε_rt_l = t_l, t_rε_rs_l = s_l"},
    {"mixed-coassociativity-lr", "(Δ_l⊗id)Δ_r = (id⊗Δ_r)Δ_l"},
    {"mixed-coassociativity-rl", "(Δ_r⊗id)Δ_l = (id⊗Δ_l)Δ_r"},
    {"antipode-twisted-linearity", "S(t_l(a)h t_r(b)) = s_r(b)S(h)s_l(a)"},
    {"antipode-axiom-left", "μ(S⊗id)Δ_l = s_rε_r"},
    {"antipode-axiom-right", "μ(id⊗S)Δ_r = s_lε_l"},
    {"antipode-invertible", "S is invertible"},
};

}  // namespace

CheckReport verify_hopf(const HopfAlgebroid& h, bool check_parts) {
    validate_hopf(h);
    CheckReport r;
    r.suite = "hopf";
    if (check_parts) {
        CheckReport l = verify_left_bialgebroid(h.left), rr = verify_right_bialgebroid(h.right);
        std::vector<std::string> bad;
        for (const auto& id : l.failing()) bad.push_back("left " + id);
        for (const auto& id : rr.failing()) bad.push_back("right " + id);
        if (!bad.empty()) {
            skip_all(r, kHopfItems, "bialgebroid axioms fail: " + join_ids(bad));
            return r;
        }
    }
    const Algebra& H = h.H();
    const Index n = H.dim();
    const std::vector<Index> d2{n, n}, d3{n, n, n};
    const auto& L = h.left;
    const auto& R = h.right;
    std::vector<std::string> ldom = L.A.labels(), rdom = R.A.labels();

    r.run(kHopfItems[0].first, kHopfItems[0].second, [&]() -> Opt {
        if (auto w = maps_equal(L.s.after(L.eps).after(R.t), R.t, rdom)) return "s_lε_lt_r " + *w;
        if (auto w = maps_equal(L.t.after(L.eps).after(R.s), R.s, rdom)) return "t_lε_ls_r " + *w;
        if (auto w = maps_equal(R.s.after(R.eps).after(L.t), L.t, ldom)) return "s_rε_rt_l " + *w;
        if (auto w = maps_equal(R.t.after(R.eps).after(L.s), L.s, ldom)) return "t_rε_rs_l " + *w;
        return std::nullopt;
    });

    Balancing lb = left_balancing(L), rb = right_balancing(R);
    TensorQuotient qlr(d3, {lb, rb}), qrl(d3, {rb, lb});
    r.run(kHopfItems[1].first, kHopfItems[1].second, [&]() -> Opt {
        for (Index j = 0; j < n; ++j) {
            Vec x = apply_on_factor(R.delta.col(j), d2, 0, L.delta);
            Vec y = apply_on_factor(L.delta.col(j), d2, 1, R.delta);
            if (!qlr.equivalent(x, y)) return "element " + H.labels()[j];
        }
        return std::nullopt;
    });
    r.run(kHopfItems[2].first, kHopfItems[2].second, [&]() -> Opt {
        for (Index j = 0; j < n; ++j) {
            Vec x = apply_on_factor(L.delta.col(j), d2, 0, R.delta);
            Vec y = apply_on_factor(R.delta.col(j), d2, 1, L.delta);
            if (!qrl.equivalent(x, y)) return "element " + H.labels()[j];
        }
        return std::nullopt;
    });
    r.run(kHopfItems[3].first, kHopfItems[3].second, [&]() -> Opt {
        for (Index j = 0; j < n; ++j) {
            Vec e = Vec::unit(j), Se = h.S.col(j);
            for (Index a = 0; a < L.A.dim(); ++a) {
                Vec lhs = h.S.apply(H.mul(L.t.col(a), e));
                if (lhs != H.mul(Se, L.s.col(a))) return "t_l(" + ldom[a] + ") on " + H.labels()[j];
            }
            for (Index a = 0; a < R.A.dim(); ++a) {
                Vec lhs = h.S.apply(H.mul(e, R.t.col(a)));
                if (lhs != H.mul(R.s.col(a), Se)) return "t_r(" + rdom[a] + ") on " + H.labels()[j];
            }
        }
        return std::nullopt;
    });
    r.run(kHopfItems[4].first, kHopfItems[4].second, [&]() -> Opt {
        for (Index j = 0; j < n; ++j) {
            Vec lhs = mu(H, apply_on_factor(L.delta.col(j), d2, 0, h.S));
            Vec rhs = R.s.apply(R.eps.col(j));
            if (lhs != rhs) return "element " + H.labels()[j] + ": " + H.format(lhs) + " vs " + H.format(rhs);
        }
        return std::nullopt;
    });
    r.run(kHopfItems[5].first, kHopfItems[5].second, [&]() -> Opt {
        for (Index j = 0; j < n; ++j) {
            Vec lhs = mu(H, apply_on_factor(R.delta.col(j), d2, 1, h.S));
            Vec rhs = L.s.apply(L.eps.col(j));
            if (lhs != rhs) return "element " + H.labels()[j] + ": " + H.format(lhs) + " vs " + H.format(rhs);
        }
        return std::nullopt;
    });
    r.run(kHopfItems[6].first, kHopfItems[6].second, [&]() -> Opt {
        if (!inverse(h.S)) return "rank " + std::to_string(rank(h.S)) + " of " + std::to_string(n);
        return std::nullopt;
    });
    return r;
}

CheckReport derived_identities(const HopfAlgebroid& h, bool check_hopf) {
    validate_hopf(h);
    CheckReport r;
    r.suite = "derived";
    const std::vector<std::pair<std::string, std::string>> items = {
        {"anti-isomorphism-phi", "ε_rs_l is an anti-isomorphism with inverse ε_lt_r"},
        {"anti-isomorphism-theta", "ε_rt_l is an anti-isomorphism with inverse ε_ls_r"},
        {"source-target-antipode", "twelve composites of sources, targets, counits and S"},
        {"antipode-convolution", "six convolution identities for S and its inverse"},
        {"flip-left", "flip(S⊗S)Δ_l = Δ_rS"},
        {"flip-right", "flip(S⊗S)Δ_r = Δ_lS"},
        {"antipode-antimultiplicative", "S(xy) = S(y)S(x) and S(1) = 1"},
    };
    if (check_hopf) {
        CheckReport hp = verify_hopf(h);
        if (!hp.ok()) {
            skip_all(r, items, "hopf axioms fail: " + join_ids(hp.failing()));
            return r;
        }
    }
    auto inv = inverse(h.S);
    if (!inv) {
        skip_all(r, items, "antipode is not invertible");
        return r;
    }
    const LinMap& Si = *inv;
    const Algebra& H = h.H();
    const Index n = H.dim();
    const std::vector<Index> d2{n, n};
    const auto& L = h.left;
    const auto& R = h.right;
    const LinMap& sl = L.s;
    const LinMap& tl = L.t;
    const LinMap& el = L.eps;
    const LinMap& sr = R.s;
    const LinMap& tr = R.t;
    const LinMap& er = R.eps;

    auto iso_check = [&](const LinMap& f, const LinMap& g, const Algebra& src, const Algebra& dst) -> Opt {
        if (auto w = check_antimorphism(f, src, dst)) return "not an anti-morphism: " + *w;
        if (g.after(f) != LinMap::identity(src.dim())) return "inverse fails on the source side";
        if (f.after(g) != LinMap::identity(dst.dim())) return "inverse fails on the target side";
        return std::nullopt;
    };
    r.run(items[0].first, items[0].second, [&] { return iso_check(er.after(sl), el.after(tr), L.A, R.A); });
    r.run(items[1].first, items[1].second, [&] { return iso_check(er.after(tl), el.after(sr), L.A, R.A); });

    r.run(items[2].first, items[2].second, [&]() -> Opt {
        struct Eq {
            const char* name;
            LinMap lhs, rhs;
            const std::vector<std::string>* dom;
        };
        const auto* ld = &L.A.labels();
        const auto* rd = &R.A.labels();
        const auto* hd = &H.labels();
        std::vector<Eq> eqs = {
            {"s_rε_rs_l = Ss_l", sr.after(er).after(sl), h.S.after(sl), ld},
            {"s_lε_ls_r = Ss_r", sl.after(el).after(sr), h.S.after(sr), rd},
            {"s_rε_rt_l = S⁻¹s_l", sr.after(er).after(tl), Si.after(sl), ld},
            {"s_lε_lt_r = S⁻¹s_r", sl.after(el).after(tr), Si.after(sr), rd},
            {"t_rε_rs_l = St_l", tr.after(er).after(sl), h.S.after(tl), ld},
            {"t_lε_ls_r = St_r", tl.after(el).after(sr), h.S.after(tr), rd},
            {"t_rε_rt_l = S⁻¹t_l", tr.after(er).after(tl), Si.after(tl), ld},
            {"t_lε_lt_r = S⁻¹t_r", tl.after(el).after(tr), Si.after(tr), rd},
            {"ε_rs_lε_l = ε_rS", er.after(sl).after(el), er.after(h.S), hd},
            {"ε_ls_rε_r = ε_lS", el.after(sr).after(er), el.after(h.S), hd},
            {"ε_rt_lε_l = ε_rS⁻¹", er.after(tl).after(el), er.after(Si), hd},
            {"ε_lt_rε_r = ε_lS⁻¹", el.after(tr).after(er), el.after(Si), hd},
        };
        for (const auto& e : eqs)
            if (auto w = maps_equal(e.lhs, e.rhs, *e.dom)) return std::string(e.name) + " " + *w;
        return std::nullopt;
    });

    r.run(items[3].first, items[3].second, [&]() -> Opt {
        LinMap slel = sl.after(el), srer = sr.after(er), trer = tr.after(er), tlel = tl.after(el);
        for (Index j = 0; j < n; ++j) {
            const Vec& dl = L.delta.col(j);
            const Vec& dr = R.delta.col(j);
            const std::string lab = H.labels()[j];
            if (mu(H, apply_factorwise(dl, d2, {&h.S, &slel})) != h.S.col(j)) return "μ(S⊗s_lε_l)Δ_l = S at " + lab;
            if (mu(H, apply_factorwise(dr, d2, {&srer, &h.S})) != h.S.col(j)) return "μ(s_rε_r⊗S)Δ_r = S at " + lab;
            LinMap idm = LinMap::identity(n);
            if (mu_op(H, apply_factorwise(dl, d2, {&idm, &Si})) != trer.col(j))
                return "μ_op(id⊗S⁻¹)Δ_l = t_rε_r at " + lab;
            if (mu_op(H, apply_factorwise(dr, d2, {&Si, &idm})) != tlel.col(j))
                return "μ_op(S⁻¹⊗id)Δ_r = t_lε_l at " + lab;
            if (mu_op(H, apply_factorwise(dl, d2, {&tlel, &Si})) != Si.col(j))
                return "μ_op(t_lε_l⊗S⁻¹)Δ_l = S⁻¹ at " + lab;
            if (mu_op(H, apply_factorwise(dr, d2, {&Si, &trer})) != Si.col(j))
                return "μ_op(S⁻¹⊗t_rε_r)Δ_r = S⁻¹ at " + lab;
        }
        return std::nullopt;
    });

    TensorQuotient ql = left_tensor(L), qr = right_tensor(R);
    LinMap SS = tensor_square(h.S, n);
    r.run(items[4].first, items[4].second, [&]() -> Opt {
        for (Index j = 0; j < n; ++j) {
            Vec x = flip(SS.apply(L.delta.col(j)), n, n);
            Vec y = R.delta.apply(h.S.col(j));
            if (!qr.equivalent(x, y)) return "element " + H.labels()[j];
        }
        return std::nullopt;
    });
    r.run(items[5].first, items[5].second, [&]() -> Opt {
        for (Index j = 0; j < n; ++j) {
            Vec x = flip(SS.apply(R.delta.col(j)), n, n);
            Vec y = L.delta.apply(h.S.col(j));
            if (!ql.equivalent(x, y)) return "element " + H.labels()[j];
        }
        return std::nullopt;
    });
    r.run(items[6].first, items[6].second, [&] { return check_antimorphism(h.S, H, H); });
    return r;
}

CheckReport verify_star(const StarHopfAlgebroid& sh, const Limits& limits, bool check_hopf) {
    const HopfAlgebroid& h = sh.core;
    validate_hopf(h);
    CheckReport r;
    r.suite = "star";
    const std::vector<std::pair<std::string, std::string>> items = {
        {"star-algebra-h", "* on H is an antilinear antimultiplicative unital involution"},
        {"star-algebra-left-base", "* on A_l is an antilinear antimultiplicative unital involution"},
        {"star-algebra-right-base", "* on A_r is an antilinear antimultiplicative unital involution"},
        {"source-star", "s_l and s_r are *-preserving"},
        {"counit-target-star", "ε_lt_r(a*) = (ε_ls_r(a))* and ε_rt_l(a*) = (ε_rs_l(a))*"},
        {"star-tensor-descends", "(*⊗*) maps the left balancing relations into the right ones"},
        {"star-coproduct", "Δ_r* = (*⊗*)Δ_l"},
        {"counit-star", "ε_rS⁻¹* = *ε_r and ε_lS⁻¹* = *ε_l"},
        {"antipode-star", "S*S* = id"},
        {"base-module-star", "(h·a)* = S(h)*·a* on A_l"},
        {"takeuchi-star", "(*⊗*) maps the left Takeuchi subspace onto the right one"},
    };
    if (check_hopf) {
        CheckReport hp = verify_hopf(h);
        if (!hp.ok()) {
            skip_all(r, items, "hopf axioms fail: " + join_ids(hp.failing()));
            return r;
        }
    }
    const Algebra& H = h.H();
    const Index n = H.dim();
    const auto& L = h.left;
    const auto& R = h.right;
    const LinMap& st = sh.star_H;
    auto star_alg = [&](const Algebra& a, const LinMap& s) -> Opt {
        CheckReport sub = verify_star(StarAlgebra{a, s});
        for (const auto& it : sub.items)
            if (it.status == Status::fail || it.status == Status::error) return it.id + ": " + it.witness;
        return std::nullopt;
    };
    r.run(items[0].first, items[0].second, [&] { return star_alg(H, st); });
    r.run(items[1].first, items[1].second, [&] { return star_alg(L.A, sh.star_Al); });
    r.run(items[2].first, items[2].second, [&] { return star_alg(R.A, sh.star_Ar); });
    r.run(items[3].first, items[3].second, [&]() -> Opt {
        if (auto w = maps_equal(L.s.after(sh.star_Al), st.after(L.s), L.A.labels())) return "s_l " + *w;
        if (auto w = maps_equal(R.s.after(sh.star_Ar), st.after(R.s), R.A.labels())) return "s_r " + *w;
        return std::nullopt;
    });
    r.run(items[4].first, items[4].second, [&]() -> Opt {
        if (auto w = maps_equal(L.eps.after(R.t).after(sh.star_Ar), sh.star_Al.after(L.eps).after(R.s), R.A.labels()))
            return "ε_lt_r " + *w;
        if (auto w = maps_equal(R.eps.after(L.t).after(sh.star_Al), sh.star_Ar.after(R.eps).after(L.s), L.A.labels()))
            return "ε_rt_l " + *w;
        return std::nullopt;
    });
    TensorQuotient ql = left_tensor(L), qr = right_tensor(R);
    LinMap ss = tensor_square(st, n);
    r.run(items[5].first, items[5].second, [&] { return descends_to(ss, ql, qr); });
    r.run(items[6].first, items[6].second, [&]() -> Opt {
        for (Index j = 0; j < n; ++j) {
            Vec x = R.delta.apply(st.col(j));
            Vec y = ss.apply(L.delta.col(j));
            if (!qr.equivalent(x, y)) return "element " + H.labels()[j] + ": " + tens(H, x) + " vs " + tens(H, y);
        }
        return std::nullopt;
    });
    auto inv = inverse(h.S);
    r.run(items[7].first, items[7].second, [&]() -> Opt {
        if (!inv) return "antipode is not invertible";
        if (auto w = maps_equal(R.eps.after(*inv).after(st), sh.star_Ar.after(R.eps), H.labels())) return "ε_r " + *w;
        if (auto w = maps_equal(L.eps.after(*inv).after(st), sh.star_Al.after(L.eps), H.labels())) return "ε_l " + *w;
        return std::nullopt;
    });
    r.run(items[8].first, items[8].second, [&] {
        return maps_equal(h.S.after(st).after(h.S).after(st), LinMap::identity(n), H.labels());
    });
    r.run(items[9].first, items[9].second, [&]() -> Opt {
        const Index m = L.A.dim();
        auto act = [&](const Vec& x, const Vec& a) { return L.eps.apply(H.mul(x, L.s.apply(a))); };
        for (Index j = 0; j < n; ++j)
            for (Index a = 0; a < m; ++a) {
                Vec lhs = sh.star_Al.apply(act(Vec::unit(j), Vec::unit(a)));
                Vec rhs = act(st.apply(h.S.col(j)), sh.star_Al.col(a));
                if (lhs != rhs) return H.labels()[j] + " on " + L.A.labels()[a];
            }
        return std::nullopt;
    });
    if (n * n > limits.max_dim) {
        r.skip(items[10].first, items[10].second, "dimension too large");
    } else {
        r.run(items[10].first, items[10].second, [&]() -> Opt {
            TakeuchiSpace tl = takeuchi_left(L, limits), tr = takeuchi_right(R, limits);
            std::vector<Vec> imgs;
            for (const Vec& v : tl.space.basis()) {
                VecAcc rep;
                for (const auto& [k, c] : v.entries()) rep.add(tl.quot.reps[k], c);
                imgs.push_back(tr.quot.proj.apply(ss.apply(rep.take())));
            }
            Subspace img = Subspace::span(tr.quot.dim, imgs);
            if (img != tr.space)
                return "image dimension " + std::to_string(img.dim()) + ", right Takeuchi dimension " +
                       std::to_string(tr.space.dim()) + ", left " + std::to_string(tl.space.dim());
            return std::nullopt;
        });
    }
    return r;
}

namespace {

template <class B>
CheckReport counit_unique(const B& b, bool left, const Limits& limits) {
    validate_shapes(b);
    CheckReport r;
    r.suite = left ? "counit-uniqueness-left" : "counit-uniqueness-right";
    const Algebra& H = b.H;
    const Algebra& A = b.A;
    const Index n = H.dim(), m = A.dim();
    const std::string id = "counit-unique", st = "the counit is the only solution of the counit constraints";
    if (n * n > limits.max_dim) {
        r.skip(id, st, "skipped, dimension too large");
        return r;
    }
    // Unknown x_{i,k}: coefficient of f_k in E(e_i).
    auto u = [&](Index i, Index k) { return i * m + k; };
    LinearSystem sys;
    sys.unknowns = n * m;
    for (Index j = 0; j < n; ++j) {
        std::vector<std::pair<Index, Vec>> first, second;
        for (const auto& [pq, c] : b.delta.col(j).entries()) {
            Index p = pq / n, q = pq % n;
            for (Index k = 0; k < m; ++k) {
                if (left) {
                    first.emplace_back(u(p, k), c * H.mul(b.s.col(k), Vec::unit(q)));
                    second.emplace_back(u(q, k), c * H.mul(b.t.col(k), Vec::unit(p)));
                } else {
                    first.emplace_back(u(p, k), c * H.mul(Vec::unit(q), b.t.col(k)));
                    second.emplace_back(u(q, k), c * H.mul(Vec::unit(p), b.s.col(k)));
                }
            }
        }
        sys.add(first, Vec::unit(j));
        sys.add(second, Vec::unit(j));
    }
    // Bimodule-map constraints E(a·e_j) = aE(e_j) and E(e_j·a) = E(e_j)a.
    for (Index j = 0; j < n; ++j)
        for (Index a = 0; a < m; ++a) {
            Vec av = Vec::unit(a);
            Vec lact = left ? H.mul(b.s.col(a), Vec::unit(j)) : H.mul(Vec::unit(j), b.t.col(a));
            Vec ract = left ? H.mul(b.t.col(a), Vec::unit(j)) : H.mul(Vec::unit(j), b.s.col(a));
            std::vector<std::pair<Index, Vec>> t1, t2;
            for (Index k = 0; k < m; ++k) {
                for (const auto& [i, c] : lact.entries()) t1.emplace_back(u(i, k), c * Vec::unit(k));
                t1.emplace_back(u(j, k), -A.mul(av, Vec::unit(k)));
                for (const auto& [i, c] : ract.entries()) t2.emplace_back(u(i, k), c * Vec::unit(k));
                t2.emplace_back(u(j, k), -A.mul(Vec::unit(k), av));
            }
            sys.add(t1, Vec{});
            sys.add(t2, Vec{});
        }
    LinMap M = sys.matrix();
    auto sol = solve(M, sys.target());
    Index free_dim = kernel(M).dim();
    CheckItem& item = r.run(id, st, [&]() -> Opt {
        if (!sol) return "no map satisfies the counit constraints";
        if (free_dim != 0) return "affine solution space of dimension " + std::to_string(free_dim);
        LinMap E(m, n);
        for (Index i = 0; i < n; ++i) {
            Vec col;
            for (Index k = 0; k < m; ++k) {
                Scalar c = sol->get(u(i, k));
                if (!c.is_zero()) col.push_back(k, c);
            }
            E.set_col(i, col);
        }
        for (Index i = 0; i < n; ++i)
            for (Index j = 0; j < n; ++j) {
                Vec e = E.apply(H.mul(Vec::unit(i), Vec::unit(j)));
                Vec e1 = left ? E.apply(H.mul(Vec::unit(i), b.s.apply(E.col(j))))
                              : E.apply(H.mul(b.s.apply(E.col(i)), Vec::unit(j)));
                if (e != e1) return "unique solution fails the character property";
            }
        if (E != b.eps) return "unique solution differs from the given counit";
        return std::nullopt;
    });
    item.detail = "unknowns " + std::to_string(n * m) + ", solution space dimension " +
                  (sol ? std::to_string(free_dim) : std::string("empty"));
    return r;
}

}  // namespace

CheckReport counit_uniqueness(const LeftBialgebroid& b, const Limits& limits) { return counit_unique(b, true, limits); }
CheckReport counit_uniqueness(const RightBialgebroid& b, const Limits& limits) {
    return counit_unique(b, false, limits);
}

CheckReport antipode_uniqueness(const HopfAlgebroid& h, const Limits& limits) {
    validate_hopf(h);
    CheckReport r;
    r.suite = "antipode-uniqueness";
    const Algebra& H = h.H();
    const Index n = H.dim();
    const std::string id = "antipode-unique",
                      st = "S is the only map satisfying the antipode axioms and twisted linearity";
    if (n * n > limits.max_dim) {
        r.skip(id, st, "skipped, dimension too large");
        return r;
    }
    const auto& L = h.left;
    const auto& R = h.right;
    // Unknown x_{i,k}: coefficient of e_k in X(e_i).
    auto u = [&](Index i, Index k) { return i * n + k; };
    LinearSystem axioms;
    axioms.unknowns = n * n;
    for (Index j = 0; j < n; ++j) {
        std::vector<std::pair<Index, Vec>> t1, t2;
        for (const auto& [pq, c] : L.delta.col(j).entries())
            for (Index k = 0; k < n; ++k) t1.emplace_back(u(pq / n, k), c * H.product(k, pq % n));
        for (const auto& [pq, c] : R.delta.col(j).entries())
            for (Index k = 0; k < n; ++k) t2.emplace_back(u(pq % n, k), c * H.product(pq / n, k));
        axioms.add(t1, R.s.apply(R.eps.col(j)));
        axioms.add(t2, L.s.apply(L.eps.col(j)));
    }
    LinearSystem full = axioms;
    for (Index j = 0; j < n; ++j) {
        for (Index a = 0; a < L.A.dim(); ++a) {
            Vec th = H.mul(L.t.col(a), Vec::unit(j));
            std::vector<std::pair<Index, Vec>> t;
            for (Index k = 0; k < n; ++k) {
                for (const auto& [i, c] : th.entries()) t.emplace_back(u(i, k), c * Vec::unit(k));
                t.emplace_back(u(j, k), -H.mul(Vec::unit(k), L.s.col(a)));
            }
            full.add(t, Vec{});
        }
        for (Index a = 0; a < R.A.dim(); ++a) {
            Vec ht = H.mul(Vec::unit(j), R.t.col(a));
            std::vector<std::pair<Index, Vec>> t;
            for (Index k = 0; k < n; ++k) {
                for (const auto& [i, c] : ht.entries()) t.emplace_back(u(i, k), c * Vec::unit(k));
                t.emplace_back(u(j, k), -H.mul(R.s.col(a), Vec::unit(k)));
            }
            full.add(t, Vec{});
        }
    }
    LinMap Ma = axioms.matrix(), Mf = full.matrix();
    Index axiom_free = kernel(Ma).dim(), full_free = kernel(Mf).dim();
    auto sol = solve(Mf, full.target());
    CheckItem& item = r.run(id, st, [&]() -> Opt {
        if (!sol) return "no map satisfies the antipode constraints";
        if (full_free != 0) return "solution space of dimension " + std::to_string(full_free);
        for (Index i = 0; i < n; ++i)
            for (Index k = 0; k < n; ++k)
                if (sol->get(u(i, k)) != h.S.at(k, i)) return "unique solution differs from S at " + H.labels()[i];
        return std::nullopt;
    });
    item.detail = "unknowns " + std::to_string(n * n) + ", kernel dimension " + std::to_string(full_free) +
                  " (antipode axioms alone: " + std::to_string(axiom_free) + ")";
    return r;
}

}  // namespace halg
