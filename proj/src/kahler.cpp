#include "halg/kahler.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>

namespace halg {

namespace {

using Opt = std::optional<std::string>;

std::string bideg_name(const Bidegree& b) { return "(" + std::to_string(b.first) + "," + std::to_string(b.second) + ")"; }

Scalar factorial(int k) {
    Scalar f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

LinMap power(const LinMap& f, int k) {
    LinMap out = LinMap::identity(f.cols());
    for (int i = 0; i < k; ++i) out = f.after(out);
    return out;
}

std::vector<Vec> restrict_rows(const LinMap& f, const std::vector<Index>& rows, const std::vector<Index>& cols) {
    std::vector<Index> pos(static_cast<std::size_t>(f.rows()), -1);
    for (std::size_t i = 0; i < rows.size(); ++i) pos[rows[i]] = static_cast<Index>(i);
    std::vector<Vec> out;
    for (Index c : cols) {
        Vec v;
        for (const auto& [r, s] : f.col(c).entries()) {
            if (pos[r] < 0) throw std::invalid_argument("map leaves the expected degree");
            v.push_back(pos[r], s);
        }
        out.push_back(v);
    }
    return out;
}

// Change of basis to the concatenated component bases; coordinates by component.
struct Splitting {
    std::vector<Bidegree> order;
    std::vector<std::pair<Index, Index>> range;  // [begin, end) in the concatenation
    LinMap basis;                                // concatenation -> ambient
    LinMap coords;                               // ambient -> concatenation

    LinMap projection(const Bidegree& b) const {
        for (std::size_t i = 0; i < order.size(); ++i) {
            if (order[i] != b) continue;
            LinMap keep(basis.cols(), basis.cols());
            for (Index j = range[i].first; j < range[i].second; ++j) keep.set_col(j, Vec::unit(j));
            return basis.after(keep).after(coords);
        }
        return LinMap::zero(basis.rows(), basis.rows());
    }
};

Opt splitting_error(const DGA& c, const Bigrading& bg) {
    std::vector<Vec> cols;
    for (const auto& [b, s] : bg.components) {
        if (s.ambient() != c.dim()) return "component " + bideg_name(b) + " has the wrong ambient dimension";
        if (b.first < 0 || b.second < 0) return "negative bidegree " + bideg_name(b);
        for (const Vec& v : s.basis()) {
            if (c.graded.degree_of(v) != b.first + b.second)
                return "component " + bideg_name(b) + " is not of degree " + std::to_string(b.first + b.second);
            cols.push_back(v);
        }
    }
    if (static_cast<Index>(cols.size()) != c.dim() || !inverse(LinMap::from_columns(c.dim(), cols)))
        return "components do not form a direct sum equal to Ω";
    return std::nullopt;
}

Splitting make_splitting(const DGA& c, const Bigrading& bg) {
    if (auto err = splitting_error(c, bg)) throw std::invalid_argument("bigrading: " + *err);
    Splitting out;
    std::vector<Vec> cols;
    for (const auto& [b, s] : bg.components) {
        out.order.push_back(b);
        Index begin = static_cast<Index>(cols.size());
        cols.insert(cols.end(), s.basis().begin(), s.basis().end());
        out.range.emplace_back(begin, static_cast<Index>(cols.size()));
    }
    out.basis = LinMap::from_columns(c.dim(), cols);
    out.coords = *inverse(out.basis);
    return out;
}

bool is_zero_map(const LinMap& f) {
    for (Index j = 0; j < f.cols(); ++j)
        if (!f.col(j).empty()) return false;
    return true;
}

bool surjective_calculus(const DGA& c) {
    const GradedAlgebra& g = c.graded;
    std::vector<Index> zero = g.component(0);
    std::vector<Vec> cur;
    for (Index b : zero) cur.push_back(Vec::unit(b));
    for (int k = 1; k <= g.top(); ++k) {
        std::vector<Vec> next;
        for (const Vec& x : cur)
            for (Index b : zero) next.push_back(c.alg().mul(x, c.d.col(b)));
        Subspace s = Subspace::span(c.dim(), next);
        if (s.dim() != static_cast<Index>(g.component(k).size())) return false;
        cur = s.basis();
    }
    return true;
}

// Degree-zero coordinates and the embedding back into Ω.
LinMap zero_embedding(const DGA& c) {
    std::vector<Index> zero = c.graded.component(0);
    LinMap e(c.dim(), static_cast<Index>(zero.size()));
    for (std::size_t j = 0; j < zero.size(); ++j) e.set_col(static_cast<Index>(j), Vec::unit(zero[j]));
    return e;
}

Vec star_vec(const DGA& c, const Vec& v) { return c.star.apply(v); }

// vol(ω∧⋆(η*)) without separating degrees.
Vec raw_metric(const KahlerStructure& k, const HermitianData& hd, const Vec& w, const Vec& e) {
    return k.orient.vol.apply(k.dga.alg().mul(w, hd.hodge.apply(star_vec(k.dga, e))));
}

Scalar tau_of(const KahlerStructure& k, const Vec& b) { return k.orient.tau.apply(b).get(0); }

}  // namespace

Subspace Bigrading::component(int a, int b) const {
    auto it = components.find({a, b});
    if (it == components.end()) {
        Index ambient = components.empty() ? 0 : components.begin()->second.ambient();
        return Subspace(ambient);
    }
    return it->second;
}

Bigrading bigrading_from_basis(const DGA& c, const std::vector<Bidegree>& per_basis) {
    if (static_cast<Index>(per_basis.size()) != c.dim()) throw DimensionError("one bidegree per basis element expected");
    std::map<Bidegree, std::vector<Vec>> gens;
    for (std::size_t i = 0; i < per_basis.size(); ++i) gens[per_basis[i]].push_back(Vec::unit(static_cast<Index>(i)));
    Bigrading bg;
    for (const auto& [b, v] : gens) bg.components[b] = Subspace::span(c.dim(), v);
    return bg;
}

Bigrading restrict_bigrading(const Bigrading& bg, const RestrictedDGA& r) {
    Subspace img = image(r.embed);
    Bigrading out;
    Index total = 0;
    for (const auto& [b, s] : bg.components) {
        Subspace piece = intersect(img, s);
        std::vector<Vec> local;
        for (const Vec& v : piece.basis()) local.push_back(*solve(r.embed, v));
        out.components[b] = Subspace::span(r.dga.dim(), local);
        total += piece.dim();
    }
    if (total != r.dga.dim()) throw std::invalid_argument("invariant forms are not the direct sum of their bidegree parts");
    return out;
}

Dolbeault split_d(const DGA& c, const Bigrading& bg) {
    Splitting sp = make_splitting(c, bg);
    const Index n = c.dim();
    Dolbeault out{LinMap::zero(n, n), LinMap::zero(n, n)};
    for (const Bidegree& b : sp.order) {
        LinMap dp = c.d.after(sp.projection(b));
        out.del = out.del + sp.projection({b.first + 1, b.second}).after(dp);
        out.delbar = out.delbar + sp.projection({b.first, b.second + 1}).after(dp);
    }
    return out;
}

CheckReport verify_complex_structure(const DGA& c, const Bigrading& bg, const HModule* action) {
    CheckReport rep;
    rep.suite = "complex-structure";
    Status split = rep.run("bigrading-direct-sum", "Ωᵏ = ⊕_{a+b=k} Ω^(a,b)", [&]() -> Opt {
        return splitting_error(c, bg);
    }).status;
    if (split != Status::pass) return rep;
    const Algebra& A = c.alg();
    rep.run("bigrading-multiplicative", "Ω^(a,b)∧Ω^(c,d) ⊆ Ω^(a+c,b+d)", [&]() -> Opt {
        for (const auto& [p, s] : bg.components)
            for (const auto& [q, t] : bg.components) {
                Subspace target = bg.component(p.first + q.first, p.second + q.second);
                for (const Vec& x : s.basis())
                    for (const Vec& y : t.basis()) {
                        Vec xy = A.mul(x, y);
                        if (!xy.empty() && !target.contains(xy)) return bideg_name(p) + "∧" + bideg_name(q);
                    }
            }
        return std::nullopt;
    });
    if (c.has_star())
        rep.run("bigrading-star", "(Ω^(a,b))* = Ω^(b,a)", [&]() -> Opt {
            for (const auto& [p, s] : bg.components) {
                Subspace target = bg.component(p.second, p.first);
                if (target.dim() != s.dim()) return bideg_name(p) + " and its mirror differ in dimension";
                for (const Vec& x : s.basis())
                    if (!target.contains(c.star.apply(x))) return "(" + A.format(x) + ")* ∉ Ω" + bideg_name({p.second, p.first});
            }
            return std::nullopt;
        });
    if (action)
        rep.run("bigrading-h-invariant", "the H-action preserves every Ω^(a,b)", [&]() -> Opt {
            for (std::size_t i = 0; i < action->act.size(); ++i)
                for (const auto& [p, s] : bg.components)
                    for (const Vec& x : s.basis())
                        if (!s.contains(action->act[i].apply(x))) return "basis element " + std::to_string(i) + " on " + A.format(x);
            return std::nullopt;
        });
    Dolbeault dd = split_d(c, bg);
    const bool splits = c.d == dd.del + dd.delbar;
    const bool double_complex = is_zero_map(dd.del.after(dd.del)) && is_zero_map(dd.delbar.after(dd.delbar)) &&
                                is_zero_map(dd.del.after(dd.delbar) + dd.delbar.after(dd.del));
    rep.run("integrable", "d = ∂ + ∂̄", [&]() -> Opt {
        for (Index j = 0; j < c.dim(); ++j) {
            Vec rest = c.d.col(j) - dd.del.col(j) - dd.delbar.col(j);
            if (!rest.empty()) return "d" + A.labels()[j] + " has the extra part " + A.format(rest);
        }
        return std::nullopt;
    });
    std::string verdicts = std::string("d = ∂+∂̄: ") + (splits ? "yes" : "no") +
                           "; double complex: " + (double_complex ? "yes" : "no");
    if (surjective_calculus(c)) {
        rep.run("integrability-equivalence", "d = ∂+∂̄ iff ∂² = ∂̄² = 0 and ∂∂̄ = -∂̄∂", [&]() -> Opt {
            if (splits != double_complex) return verdicts;
            return std::nullopt;
        }).detail = verdicts;
    } else {
        rep.skip("integrability-equivalence", "d = ∂+∂̄ iff ∂² = ∂̄² = 0 and ∂∂̄ = -∂̄∂",
                 "Ω is not generated by degree zero; " + verdicts);
    }
    if (c.has_star())
        rep.run("del-star", "∂(ω*) = (∂̄ω)*", [&]() -> Opt {
            for (Index j = 0; j < c.dim(); ++j)
                if (dd.del.apply(c.star.col(j)) != c.star.apply(dd.delbar.col(j))) return "ω = " + A.labels()[j];
            return std::nullopt;
        });
    return rep;
}

LinMap lefschetz_map(const DGA& c, const Vec& sigma) { return c.alg().left_mult(sigma); }

HermitianData hermitian_data(const KahlerStructure& k) {
    const DGA& c = k.dga;
    const GradedAlgebra& g = c.graded;
    if (k.orient.top % 2) throw std::invalid_argument("total dimension must be even");
    HermitianData hd;
    hd.n = k.orient.top / 2;
    const int n = hd.n;
    hd.L = lefschetz_map(c, k.sigma);
    for (int deg = 0; deg < n; ++deg) {
        std::vector<Index> src = g.component(deg), dst = g.component(2 * n - deg);
        LinMap Lp = power(hd.L, n - deg);
        auto cols = restrict_rows(Lp, dst, src);
        LinMap local = LinMap::from_columns(static_cast<Index>(dst.size()), cols);
        if (src.size() != dst.size() || !inverse(local))
            throw std::invalid_argument("not almost symplectic at k=" + std::to_string(deg));
    }
    // Primitive forms split by bidegree.
    for (const auto& [b, s] : k.bg.components) {
        const int deg = b.first + b.second;
        if (deg > n) continue;
        LinMap Lp = power(hd.L, n - deg + 1);
        std::vector<LinMap> maps{Lp.after(LinMap::from_columns(c.dim(), s.basis()))};
        Subspace ker = joint_kernel(s.dim(), maps);
        std::vector<Vec> amb;
        for (const Vec& v : ker.basis()) amb.push_back(LinMap::from_columns(c.dim(), s.basis()).apply(v));
        hd.primitives[b] = Subspace::span(c.dim(), amb);
    }
    for (int deg = 0; deg <= n; ++deg) {
        Index total = 0;
        for (const auto& [b, p] : hd.primitives)
            if (b.first + b.second == deg) total += p.dim();
        Subspace full_prim = intersect(kernel(power(hd.L, n - deg + 1)), g.component_space(deg));
        if (total != full_prim.dim()) throw std::invalid_argument("primitive forms are not bigraded in degree " + std::to_string(deg));
    }
    // Lefschetz decomposition and the Hodge map on it.
    const int top = 2 * n;
    hd.lefschetz.assign(static_cast<std::size_t>(top + 1), std::vector<Subspace>(static_cast<std::size_t>(n + 1), Subspace(c.dim())));
    std::vector<Vec> dom, img;
    std::vector<std::vector<std::vector<Vec>>> pieces(top + 1, std::vector<std::vector<Vec>>(n + 1));
    for (const auto& [b, p] : hd.primitives) {
        const int kk = b.first + b.second;
        for (const Vec& w : p.basis()) {
            for (int j = 0; j <= n - kk; ++j) {
                Vec lj = power(hd.L, j).apply(w);
                Scalar coef = ((kk * (kk + 1) / 2) % 2 ? Scalar(-1) : Scalar(1)) * i_pow(b.first - b.second) * factorial(j) /
                              factorial(n - j - kk);
                dom.push_back(lj);
                img.push_back(coef * power(hd.L, n - j - kk).apply(w));
                pieces[kk + 2 * j][j].push_back(lj);
            }
        }
    }
    for (int d = 0; d <= top; ++d)
        for (int j = 0; j <= n; ++j) hd.lefschetz[d][j] = Subspace::span(c.dim(), pieces[d][j]);
    LinMap D = LinMap::from_columns(c.dim(), dom);
    auto Dinv = D.cols() == c.dim() ? inverse(D) : std::nullopt;
    if (!Dinv) throw std::invalid_argument("Lefschetz decomposition is not a direct sum equal to Ω");
    hd.hodge = LinMap::from_columns(c.dim(), img).after(*Dinv);
    hd.gram.assign(static_cast<std::size_t>(c.dim()), std::vector<Scalar>(static_cast<std::size_t>(c.dim())));
    for (Index i = 0; i < c.dim(); ++i)
        for (Index j = 0; j < c.dim(); ++j)
            if (g.degree[i] == g.degree[j]) hd.gram[i][j] = tau_of(k, raw_metric(k, hd, Vec::unit(i), Vec::unit(j)));
    return hd;
}

Vec metric(const KahlerStructure& k, const HermitianData& hd, const Vec& w, const Vec& e) {
    const GradedAlgebra& g = k.dga.graded;
    VecAcc acc;
    for (int d = 0; d <= g.top(); ++d) {
        Vec wd, ed;
        for (const auto& [i, s] : w.entries())
            if (g.degree[i] == d) wd.push_back(i, s);
        for (const auto& [i, s] : e.entries())
            if (g.degree[i] == d) ed.push_back(i, s);
        if (!wd.empty() && !ed.empty()) acc.add(raw_metric(k, hd, wd, ed));
    }
    return acc.take();
}

CheckReport verify_hermitian(const KahlerStructure& k) {
    CheckReport rep;
    rep.suite = "hermitian";
    const DGA& c = k.dga;
    const Algebra& A = c.alg();
    const Index N = c.dim();
    if (!c.has_star()) {
        rep.add("hermitian-shape", "a star is required", Status::error, "no star");
        return rep;
    }
    const Subspace s11 = k.bg.component(1, 1);
    rep.run("sigma-bidegree", "σ ∈ Ω^(1,1)", [&]() -> Opt {
        if (!s11.contains(k.sigma)) return A.format(k.sigma);
        return std::nullopt;
    });
    rep.run("sigma-central", "σ∧ω = ω∧σ for every form ω", [&]() -> Opt {
        for (Index j = 0; j < N; ++j)
            if (A.mul(k.sigma, Vec::unit(j)) != A.mul(Vec::unit(j), k.sigma)) return "ω = " + A.labels()[j];
        return std::nullopt;
    });
    rep.run("sigma-real", "σ* = σ", [&]() -> Opt {
        if (c.star.apply(k.sigma) != k.sigma) return "σ* = " + A.format(c.star.apply(k.sigma));
        return std::nullopt;
    });
    if (k.h && k.action)
        rep.run("sigma-invariant", "h·σ = s_lε_l(h)·σ", [&]() -> Opt {
            if (!invariants(k.h->core, *k.action).contains(k.sigma)) return "σ is not invariant";
            return std::nullopt;
        });
    std::optional<HermitianData> hd;
    std::string build_error;
    try {
        hd = hermitian_data(k);
    } catch (const std::invalid_argument& e) {
        build_error = e.what();
    }
    rep.run("lefschetz-bijective", "L^{n-k} : Ωᵏ -> Ω^{2n-k} is bijective for k < n", [&]() -> Opt {
        if (build_error.rfind("not almost symplectic", 0) == 0 || build_error.rfind("total dimension", 0) == 0)
            return build_error;
        return std::nullopt;
    });
    if (!hd) {
        if (!build_error.empty() && rep.passed("lefschetz-bijective"))
            rep.add("lefschetz-decomposition", "Ωᵏ = ⊕_j L^j(P^{k-2j})", Status::fail, build_error);
        return rep;
    }
    const int n = hd->n;
    std::string dims;
    for (std::size_t d = 0; d < hd->lefschetz.size(); ++d) {
        dims += (d ? "; " : "") + std::string("Ω") + std::to_string(d) + ":";
        for (std::size_t j = 0; j < hd->lefschetz[d].size(); ++j)
            if (hd->lefschetz[d][j].dim()) dims += " L" + std::to_string(j) + "P=" + std::to_string(hd->lefschetz[d][j].dim());
    }
    rep.run("lefschetz-decomposition", "Ωᵏ = ⊕_j L^j(P^{k-2j}) with matching dimensions", [&]() -> Opt {
        for (std::size_t d = 0; d < hd->lefschetz.size(); ++d) {
            Index total = 0;
            std::vector<Vec> all;
            for (const Subspace& s : hd->lefschetz[d]) {
                total += s.dim();
                all.insert(all.end(), s.basis().begin(), s.basis().end());
            }
            Index full = static_cast<Index>(c.graded.component(static_cast<int>(d)).size());
            if (total != full || Subspace::span(N, all).dim() != full) return "degree " + std::to_string(d);
        }
        return std::nullopt;
    }).detail = dims;
    rep.run("diamond", "Ω^(a,b) = 0 when a > n or b > n", [&]() -> Opt {
        for (const auto& [b, s] : k.bg.components)
            if ((b.first > n || b.second > n) && s.dim() != 0) return "Ω" + bideg_name(b) + " ≠ 0";
        return std::nullopt;
    });
    StarAlgebra B = c.degree_zero();
    LinMap zemb = zero_embedding(c);
    rep.run("lefschetz-bimodule", "L(bωb') = b L(ω) b'", [&]() -> Opt {
        for (Index i = 0; i < zemb.cols(); ++i)
            for (Index j = 0; j < N; ++j) {
                Vec b = zemb.col(i), w = Vec::unit(j);
                if (hd->L.apply(A.mul(b, w)) != A.mul(b, hd->L.apply(w))) return "left, ω = " + A.labels()[j];
                if (hd->L.apply(A.mul(w, b)) != A.mul(hd->L.apply(w), b)) return "right, ω = " + A.labels()[j];
            }
        return std::nullopt;
    });
    if (k.action) {
        rep.run("lefschetz-h-linear", "L(h·ω) = h·L(ω)", [&]() -> Opt {
            for (std::size_t i = 0; i < k.action->act.size(); ++i)
                if (hd->L.after(k.action->act[i]) != k.action->act[i].after(hd->L)) return "basis element " + std::to_string(i);
            return std::nullopt;
        });
    }
    CheckReport orient = orientation_tools(c, k.orient, k.h ? &k.h->core : nullptr, k.action ? &*k.action : nullptr);
    rep.append(orient);
    const LinMap& H = hd->hodge;
    rep.run("hodge-square", "⋆² = (-1)ᵏ on Ωᵏ", [&]() -> Opt {
        for (Index j = 0; j < N; ++j) {
            Vec want = c.graded.degree[j] % 2 ? -Vec::unit(j) : Vec::unit(j);
            if (H.apply(H.col(j)) != want) return "ω = " + A.labels()[j];
        }
        return std::nullopt;
    });
    rep.run("hodge-bijective", "⋆ is an isomorphism", [&]() -> Opt {
        if (!inverse(H)) return "singular";
        return std::nullopt;
    });
    rep.run("hodge-bidegree", "⋆(Ω^(a,b)) = Ω^(n-b,n-a)", [&]() -> Opt {
        for (const auto& [b, s] : k.bg.components) {
            Subspace target = k.bg.component(n - b.second, n - b.first);
            std::vector<Vec> img;
            for (const Vec& v : s.basis()) img.push_back(H.apply(v));
            if (Subspace::span(N, img) != target) return "Ω" + bideg_name(b);
        }
        return std::nullopt;
    });
    rep.run("hodge-star-compatible", "⋆(ω*) = (⋆ω)*", [&]() -> Opt {
        for (Index j = 0; j < N; ++j)
            if (H.apply(c.star.col(j)) != c.star.apply(H.col(j))) return "ω = " + A.labels()[j];
        return std::nullopt;
    });
    if (k.action)
        rep.run("hodge-h-linear", "⋆(h·ω) = h·⋆(ω)", [&]() -> Opt {
            for (std::size_t i = 0; i < k.action->act.size(); ++i)
                if (H.after(k.action->act[i]) != k.action->act[i].after(H)) return "basis element " + std::to_string(i);
            return std::nullopt;
        });
    rep.run("metric-positive", "⟨,⟩ is positive definite", [&]() -> Opt {
        if (!is_hermitian(hd->gram)) return "hermitian structure not positive definite: Gram matrix not Hermitian";
        if (!psd_check(hd->gram)) return "hermitian structure not positive definite";
        return std::nullopt;
    });
    rep.run("metric-symmetric", "g(ω⊗η̄) = g(η⊗ω̄)*", [&]() -> Opt {
        for (Index i = 0; i < N; ++i)
            for (Index j = 0; j < N; ++j) {
                Vec a = metric(k, *hd, Vec::unit(i), Vec::unit(j));
                Vec b = metric(k, *hd, Vec::unit(j), Vec::unit(i));
                if (a != B.star.apply(b)) return A.labels()[i] + ", " + A.labels()[j];
            }
        return std::nullopt;
    });
    if (k.h && k.action) {
        const StarHopfAlgebroid& sh = *k.h;
        const LeftBialgebroid& Lb = sh.core.left;
        const Index nh = Lb.H.dim();
        std::vector<LinMap> sstar;  // S(e_q)* acting on Ω
        for (Index q = 0; q < nh; ++q) sstar.push_back(k.action->action(sh.star_H.apply(sh.core.S.col(q))));
        std::vector<LinMap> on_zero;  // action restricted to Ω⁰
        for (Index q = 0; q < nh; ++q) {
            auto cols = restrict_rows(k.action->act[q], c.graded.component(0), c.graded.component(0));
            on_zero.push_back(LinMap::from_columns(B.alg.dim(), cols));
        }
        rep.run("metric-covariant", "g(h(1)·ω ⊗ h(2)·η̄) = h·g(ω⊗η̄)", [&]() -> Opt {
            for (Index h = 0; h < nh; ++h)
                for (Index i = 0; i < N; ++i)
                    for (Index j = 0; j < N; ++j) {
                        VecAcc lhs;
                        for (const auto& [t, s] : Lb.delta.col(h).entries()) {
                            Index p = t / nh, q = t % nh;
                            lhs.add(metric(k, *hd, k.action->act[p].col(i), sstar[q].col(j)), s);
                        }
                        if (lhs.take() != on_zero[h].apply(metric(k, *hd, Vec::unit(i), Vec::unit(j))))
                            return "h = " + Lb.H.labels()[h] + ", " + A.labels()[i] + ", " + A.labels()[j];
                    }
            return std::nullopt;
        });
    }
    auto ip = [&](const Vec& x, const Vec& y) { return inner(hd->gram, x, y); };
    rep.run("orthogonal-degree", "Ωᵏ ⊥ Ωˡ for k ≠ l", [&]() -> Opt {
        for (Index i = 0; i < N; ++i)
            for (Index j = 0; j < N; ++j)
                if (c.graded.degree[i] != c.graded.degree[j] &&
                    !tau_of(k, raw_metric(k, *hd, Vec::unit(i), Vec::unit(j))).is_zero())
                    return A.labels()[i] + ", " + A.labels()[j];
        return std::nullopt;
    });
    rep.run("orthogonal-bidegree", "Ω^(a,b) ⊥ Ω^(c,d) for distinct bidegrees", [&]() -> Opt {
        for (const auto& [p, s] : k.bg.components)
            for (const auto& [q, t] : k.bg.components)
                if (p != q)
                    for (const Vec& x : s.basis())
                        for (const Vec& y : t.basis())
                            if (!ip(x, y).is_zero()) return bideg_name(p) + ", " + bideg_name(q);
        return std::nullopt;
    });
    rep.run("orthogonal-lefschetz", "L^j(P^{k-2j}) ⊥ L^i(P^{k-2i}) for i ≠ j", [&]() -> Opt {
        for (const auto& row : hd->lefschetz)
            for (std::size_t a = 0; a < row.size(); ++a)
                for (std::size_t b = 0; b < row.size(); ++b)
                    if (a != b)
                        for (const Vec& x : row[a].basis())
                            for (const Vec& y : row[b].basis())
                                if (!ip(x, y).is_zero()) return A.format(x) + ", " + A.format(y);
        return std::nullopt;
    });
    return rep;
}

Laplacians laplacians(const KahlerStructure& k, const HermitianData& hd) {
    Dolbeault dd = split_d(k.dga, k.bg);
    const LinMap& S = hd.hodge;
    Laplacians out;
    out.dstar = Scalar(-1) * S.after(k.dga.d).after(S);
    out.delstar = Scalar(-1) * S.after(dd.delbar).after(S);
    out.delbarstar = Scalar(-1) * S.after(dd.del).after(S);
    auto sq = [](const LinMap& x) { return x.after(x); };
    out.lap_d = sq(k.dga.d + out.dstar);
    out.lap_del = sq(dd.del + out.delstar);
    out.lap_delbar = sq(dd.delbar + out.delbarstar);
    return out;
}

CheckReport verify_laplacians(const KahlerStructure& k) {
    CheckReport rep;
    rep.suite = "laplacians";
    std::optional<HermitianData> hd;
    try {
        hd = hermitian_data(k);
    } catch (const std::invalid_argument& e) {
        rep.skip("laplacians", "codifferentials and Laplacians", std::string("no hermitian data: ") + e.what());
        return rep;
    }
    if (!is_hermitian(hd->gram) || !psd_check(hd->gram)) {
        rep.skip("laplacians", "codifferentials and Laplacians", "hermitian structure not positive definite");
        return rep;
    }
    const DGA& c = k.dga;
    const Algebra& A = c.alg();
    const Index N = c.dim();
    Dolbeault dd = split_d(c, k.bg);
    Laplacians lp = laplacians(k, *hd);
    auto ip = [&](const Vec& x, const Vec& y) { return inner(hd->gram, x, y); };
    auto adjoint = [&](const LinMap& f, const LinMap& fs) -> Opt {
        for (Index i = 0; i < N; ++i)
            for (Index j = 0; j < N; ++j)
                if (ip(f.col(i), Vec::unit(j)) != ip(Vec::unit(i), fs.col(j))) return A.labels()[i] + ", " + A.labels()[j];
        return std::nullopt;
    };
    rep.run("codifferential-adjoint-d", "⟨dω,η⟩ = ⟨ω,d*η⟩", [&] { return adjoint(c.d, lp.dstar); });
    rep.run("codifferential-adjoint-del", "⟨∂ω,η⟩ = ⟨ω,∂*η⟩", [&] { return adjoint(dd.del, lp.delstar); });
    rep.run("codifferential-adjoint-delbar", "⟨∂̄ω,η⟩ = ⟨ω,∂̄*η⟩", [&] { return adjoint(dd.delbar, lp.delbarstar); });
    rep.run("codifferential-star", "d*(ω*) = (d*ω)*, ∂*(ω*) = (∂̄*ω)*, ∂̄*(ω*) = (∂*ω)*", [&]() -> Opt {
        for (Index j = 0; j < N; ++j) {
            const Vec& s = c.star.col(j);
            if (lp.dstar.apply(s) != c.star.apply(lp.dstar.col(j))) return "d*, ω = " + A.labels()[j];
            if (lp.delstar.apply(s) != c.star.apply(lp.delbarstar.col(j))) return "∂*, ω = " + A.labels()[j];
            if (lp.delbarstar.apply(s) != c.star.apply(lp.delstar.col(j))) return "∂̄*, ω = " + A.labels()[j];
        }
        return std::nullopt;
    });
    rep.run("laplacian-symmetric", "Δ_d, Δ_∂ and Δ_∂̄ are symmetric", [&]() -> Opt {
        for (const auto& [name, f] : {std::pair<const char*, const LinMap*>{"Δ_d", &lp.lap_d},
                                      {"Δ_∂", &lp.lap_del},
                                      {"Δ_∂̄", &lp.lap_delbar}})
            if (auto w = adjoint(*f, *f)) return std::string(name) + ": " + *w;
        return std::nullopt;
    });
    rep.run("hodge-unitary", "⟨⋆ω,⋆η⟩ = ⟨ω,η⟩", [&]() -> Opt {
        for (Index i = 0; i < N; ++i)
            for (Index j = 0; j < N; ++j)
                if (ip(hd->hodge.col(i), hd->hodge.col(j)) != hd->gram[i][j]) return A.labels()[i] + ", " + A.labels()[j];
        return std::nullopt;
    });
    if (k.h && k.action) {
        CovariantCalculus cc{c, *k.h, *k.action, std::nullopt};
        Subspace h0 = h0_of(cc);
        const LeftBialgebroid& L = k.h->core.left;
        rep.run("codifferential-descends", "[h - s_lε_l(h), d*] = [h - t_lε_l(h), d*] = 0 for h in H₀", [&]() -> Opt {
            for (const Vec& x : h0.basis()) {
                LinMap hx = k.action->action(x);
                Vec e = L.eps.apply(x);
                for (const LinMap* base : {&L.s, &L.t}) {
                    LinMap X = hx - k.action->action(base->apply(e));
                    for (const LinMap* f : {&lp.dstar, &lp.delstar, &lp.delbarstar})
                        if (X.after(*f) != f->after(X)) return "h = " + L.H.format(x);
                }
            }
            Subspace inv = invariant_forms(cc).space;
            for (const Vec& v : inv.basis())
                for (const LinMap* f : {&lp.dstar, &lp.lap_d, &lp.lap_del, &lp.lap_delbar})
                    if (!inv.contains(f->apply(v))) return "Ω₀ not preserved at " + A.format(v);
            return std::nullopt;
        });
    }
    return rep;
}

RestrictedKahler restrict_to_invariants(const KahlerStructure& k) {
    if (!k.h || !k.action) throw std::invalid_argument("restriction to invariant forms needs a covariant structure");
    CovariantCalculus cc{k.dga, *k.h, *k.action, std::nullopt};
    InvariantForms inv = invariant_forms(cc);
    RestrictedKahler out;
    out.restriction = restrict_dga(k.dga, inv.per_degree);
    const RestrictedDGA& r = out.restriction;
    KahlerStructure& s = out.structure;
    s.dga = r.dga;
    s.bg = restrict_bigrading(k.bg, r);
    auto sig = solve(r.embed, k.sigma);
    if (!sig) throw std::invalid_argument("σ is not an invariant form");
    s.sigma = *sig;
    // Degree-zero coordinates: ambient Ω⁰ and restricted Ω₀⁰.
    std::vector<Index> z_amb = k.dga.graded.component(0), z_loc = r.dga.graded.component(0);
    LinMap loc_to_amb(static_cast<Index>(z_amb.size()), static_cast<Index>(z_loc.size()));
    for (std::size_t j = 0; j < z_loc.size(); ++j) {
        Vec v;
        for (const auto& [i, x] : r.embed.col(z_loc[j]).entries()) {
            auto it = std::find(z_amb.begin(), z_amb.end(), i);
            v.push_back(it - z_amb.begin(), x);
        }
        loc_to_amb.set_col(static_cast<Index>(j), v);
    }
    s.orient.top = k.orient.top;
    s.orient.tau = k.orient.tau.after(loc_to_amb);
    s.orient.vol = LinMap(static_cast<Index>(z_loc.size()), r.dga.dim());
    for (Index j = 0; j < r.dga.dim(); ++j) {
        Vec amb = k.orient.vol.apply(r.embed.col(j));
        auto loc = solve(loc_to_amb, amb);
        if (!loc) throw std::invalid_argument("vol does not map invariant forms to invariant functions");
        s.orient.vol.set_col(j, *loc);
    }
    return out;
}

CheckReport kahler_check(const KahlerStructure& k) {
    CheckReport rep;
    rep.suite = "kahler";
    CheckReport herm = verify_hermitian(k);
    if (!herm.ok()) {
        rep.skip("kahler-closed", "dσ = 0", "hermitian structure fails");
        return rep;
    }
    rep.run("kahler-closed", "dσ = 0", [&]() -> Opt {
        Vec ds = k.dga.d.apply(k.sigma);
        if (!ds.empty()) return "dσ = " + k.dga.alg().format(ds);
        return std::nullopt;
    });
    if (!k.h || !k.action) return rep;
    RestrictedKahler rk = restrict_to_invariants(k);
    const KahlerStructure& s = rk.structure;
    std::string dims;
    for (int d = 0; d <= s.dga.graded.top(); ++d)
        dims += (d ? ", " : "") + std::to_string(s.dga.graded.component(d).size());
    rep.run("invariant-dimensions", "Ω₀ is nonzero in top degree", [&]() -> Opt {
        if (s.dga.graded.component(s.orient.top).empty()) return "Ω₀ has nothing in degree " + std::to_string(s.orient.top);
        return std::nullopt;
    }).detail = "dims by degree: " + dims;
    rep.append(verify_complex_structure(s.dga, s.bg), "invariant-");
    rep.append(verify_hermitian(s), "invariant-");
    rep.append(verify_laplacians(s), "invariant-");
    rep.run("invariant-kahler-closed", "dσ = 0 on Ω₀", [&]() -> Opt {
        if (!s.dga.d.apply(s.sigma).empty()) return "dσ ≠ 0";
        return std::nullopt;
    });
    rep.run("invariant-inner-product", "⟨,⟩ on Ω₀ is the restriction of ⟨,⟩", [&]() -> Opt {
        HermitianData big = hermitian_data(k), small = hermitian_data(s);
        const LinMap& e = rk.restriction.embed;
        for (Index i = 0; i < s.dga.dim(); ++i)
            for (Index j = 0; j < s.dga.dim(); ++j)
                if (inner(big.gram, e.col(i), e.col(j)) != small.gram[i][j]) return s.dga.alg().labels()[i];
        return std::nullopt;
    });
    rep.run("invariant-codifferential", "d* on Ω₀ is the restriction of d*", [&]() -> Opt {
        HermitianData big = hermitian_data(k), small = hermitian_data(s);
        LinMap a = laplacians(k, big).dstar.after(rk.restriction.embed);
        LinMap b = rk.restriction.embed.after(laplacians(s, small).dstar);
        if (a != b) return "restricted d* differs";
        return std::nullopt;
    });
    return rep;
}

namespace {

std::vector<std::uint32_t> exterior_masks(std::size_t m) {
    std::vector<std::uint32_t> out;
    for (std::size_t deg = 0; deg <= m; ++deg)
        for (std::uint32_t mask = 0; mask < (1u << m); ++mask)
            if (static_cast<std::size_t>(std::popcount(mask)) == deg) out.push_back(mask);
    return out;
}

}  // namespace

DGA exterior_dga(const std::vector<std::string>& gens, const std::vector<Vec>& star_on_gens) {
    const std::size_t m = gens.size();
    if (m > 12) throw DimensionError("exterior algebra on more than 12 generators");
    if (star_on_gens.size() != m) throw DimensionError("one star value per generator expected");
    auto masks = exterior_masks(m);
    std::map<std::uint32_t, Index> index;
    std::vector<std::string> labels;
    std::vector<int> degree;
    for (std::size_t i = 0; i < masks.size(); ++i) {
        index[masks[i]] = static_cast<Index>(i);
        std::string l;
        for (std::size_t g = 0; g < m; ++g)
            if (masks[i] >> g & 1u) l += (l.empty() ? "" : "∧") + gens[g];
        labels.push_back(l.empty() ? "1" : l);
        degree.push_back(std::popcount(masks[i]));
    }
    const Index N = static_cast<Index>(masks.size());
    std::vector<Vec> prod(static_cast<std::size_t>(N * N));
    for (Index i = 0; i < N; ++i)
        for (Index j = 0; j < N; ++j) {
            std::uint32_t a = masks[i], b = masks[j];
            if (a & b) continue;
            int swaps = 0;
            for (std::size_t g = 0; g < m; ++g)
                if (b >> g & 1u) swaps += std::popcount(a >> (g + 1));
            prod[i * N + j] = Vec::unit(index.at(a | b), swaps % 2 ? -1 : 1);
        }
    DGA c{GradedAlgebra{Algebra(labels, prod, Vec::unit(0)), degree}, LinMap(N, N), LinMap(N, N, true)};
    for (Index i = 0; i < N; ++i) {
        // (x1∧…∧xk)* = (-1)^{k(k-1)/2} xk*∧…∧x1*
        Vec v = Vec::unit(0);
        std::vector<std::size_t> gs;
        for (std::size_t g = 0; g < m; ++g)
            if (masks[i] >> g & 1u) gs.push_back(g);
        for (auto it = gs.rbegin(); it != gs.rend(); ++it) v = c.alg().mul(v, star_on_gens[*it]);
        const int k = degree[i];
        c.star.set_col(i, (k * (k - 1) / 2) % 2 ? -v : v);
    }
    return c;
}

Vec exterior_generator(Index g) { return Vec::unit(1 + g); }

void extend_derivation(DGA& c, const std::vector<Vec>& d_on_gens) {
    const std::size_t m = d_on_gens.size();
    auto masks = exterior_masks(m);
    if (static_cast<Index>(masks.size()) != c.dim()) throw DimensionError("extend_derivation: not an exterior algebra on these generators");
    for (std::size_t i = 0; i < masks.size(); ++i) {
        std::vector<std::size_t> gs;
        for (std::size_t g = 0; g < m; ++g)
            if (masks[i] >> g & 1u) gs.push_back(g);
        VecAcc acc;
        for (std::size_t p = 0; p < gs.size(); ++p) {
            Vec term = Vec::unit(0);
            for (std::size_t q = 0; q < gs.size(); ++q)
                term = c.alg().mul(term, q == p ? d_on_gens[gs[q]] : exterior_generator(static_cast<Index>(gs[q])));
            acc.add(term, p % 2 ? -1 : 1);
        }
        c.d.set_col(static_cast<Index>(i), acc.take());
    }
}

Bigrading exterior_bigrading(const DGA& c, std::size_t gens, const std::vector<Bidegree>& gen_bidegree) {
    auto masks = exterior_masks(gens);
    std::vector<Bidegree> per;
    for (auto mask : masks) {
        Bidegree b{0, 0};
        for (std::size_t g = 0; g < gens; ++g)
            if (mask >> g & 1u) {
                b.first += gen_bidegree[g].first;
                b.second += gen_bidegree[g].second;
            }
        per.push_back(b);
    }
    return bigrading_from_basis(c, per);
}

KahlerStructure toy_kahler() {
    KahlerStructure k;
    k.dga = exterior_dga({"e10", "e01"}, {exterior_generator(1), exterior_generator(0)});
    k.bg = exterior_bigrading(k.dga, 2, {{1, 0}, {0, 1}});
    k.sigma = Vec::unit(3, Scalar::i());
    k.orient.top = 2;
    k.orient.vol = LinMap(1, 4);
    k.orient.vol.set_col(3, Vec::unit(0, -Scalar::i()));
    k.orient.tau = LinMap::identity(1);
    return k;
}

KahlerStructure covariant_toy_kahler() {
    KahlerStructure k = toy_kahler();
    HopfAlgebra q = group_algebra(cyclic_group(2));
    k.h = hopf_algebra_algebroid(q);
    LinMap flip(4, 4);
    flip.set_col(0, Vec::unit(0));
    flip.set_col(1, -Vec::unit(1));
    flip.set_col(2, -Vec::unit(2));
    flip.set_col(3, Vec::unit(3));
    Index e = q.alg.alg.unit().lead();
    std::vector<LinMap> act(2);
    act[e] = LinMap::identity(4);
    act[1 - e] = flip;
    k.action = HModule{k.dga.alg().labels(), act};
    return k;
}

KahlerStructure two_point_kahler() {
    KahlerStructure k;
    k.dga = universal_calculus(2, 2);
    // δ1, δ2 | δ(1,2), δ(2,1) | δ(1,2,1), δ(2,1,2)
    k.bg = bigrading_from_basis(k.dga, {{0, 0}, {0, 0}, {1, 0}, {0, 1}, {1, 1}, {1, 1}});
    k.sigma = Vec::unit(4, -Scalar::i()) + Vec::unit(5, Scalar::i());
    k.orient.top = 2;
    k.orient.vol = LinMap(2, 6);
    k.orient.vol.set_col(4, Vec::unit(0, Scalar::i()));
    k.orient.vol.set_col(5, Vec::unit(1, -Scalar::i()));
    k.orient.tau = LinMap(1, 2);
    k.orient.tau.set_col(0, Vec::unit(0, Scalar::frac(1, 2)));
    k.orient.tau.set_col(1, Vec::unit(0, Scalar::frac(1, 2)));
    return k;
}

namespace {

// Λ(w1, w2, v1, v2) with vi = wi*.
DGA four_generator_algebra() {
    return exterior_dga({"w1", "w2", "v1", "v2"},
                        {exterior_generator(2), exterior_generator(3), exterior_generator(0), exterior_generator(1)});
}

}  // namespace

KahlerStructure nonclosed_hermitian() {
    KahlerStructure k;
    k.dga = four_generator_algebra();
    const Algebra& A = k.dga.alg();
    Vec w1 = exterior_generator(0), w2 = exterior_generator(1), v1 = exterior_generator(2), v2 = exterior_generator(3);
    Vec w1v1 = A.mul(w1, v1);
    extend_derivation(k.dga, {Vec{}, w1v1, Vec{}, -w1v1});
    k.bg = exterior_bigrading(k.dga, 4, {{1, 0}, {1, 0}, {0, 1}, {0, 1}});
    k.sigma = Scalar::i() * (w1v1 + A.mul(w2, v2));
    Vec half_sq = Scalar::frac(1, 2) * A.mul(k.sigma, k.sigma);
    k.orient.top = 4;
    k.orient.vol = LinMap(1, k.dga.dim());
    Index topi = k.dga.dim() - 1;
    k.orient.vol.set_col(topi, Vec::unit(0, half_sq.get(topi).inverse()));
    k.orient.tau = LinMap::identity(1);
    return k;
}

std::pair<DGA, Bigrading> leaking_bigrading() {
    DGA c = four_generator_algebra();
    const Algebra& A = c.alg();
    Vec w1 = exterior_generator(0), w2 = exterior_generator(1), v1 = exterior_generator(2), v2 = exterior_generator(3);
    // Real coframe e1 = (w1+v1)/2, e2 = (w2+v2)/2 with dw1 = i e1∧e2.
    Vec e12 = Scalar::frac(1, 4) * A.mul(w1 + v1, w2 + v2);
    extend_derivation(c, {Scalar::i() * e12, Vec{}, -Scalar::i() * e12, Vec{}});
    Bigrading bg = exterior_bigrading(c, 4, {{1, 0}, {1, 0}, {0, 1}, {0, 1}});
    return {c, bg};
}

}  // namespace halg
