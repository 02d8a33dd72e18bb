#include "halg/algebra.hpp"

#include <set>
#include <sstream>

namespace halg {

Algebra::Algebra(std::vector<std::string> labels, std::vector<Vec> products, Vec unit)
    : labels_(std::move(labels)), prod_(std::move(products)), unit_(std::move(unit)) {
    if (static_cast<Index>(prod_.size()) != dim() * dim())
        throw DimensionError("Algebra: structure constant table has wrong size");
}

Vec Algebra::mul(const Vec& x, const Vec& y) const {
    VecAcc acc;
    for (const auto& [i, a] : x.entries())
        for (const auto& [j, b] : y.entries()) acc.add(product(i, j), a * b);
    return acc.take();
}

LinMap Algebra::left_mult(const Vec& x) const {
    LinMap m(dim(), dim());
    for (Index j = 0; j < dim(); ++j) m.set_col(j, mul(x, basis(j)));
    return m;
}

LinMap Algebra::right_mult(const Vec& x) const {
    LinMap m(dim(), dim());
    for (Index j = 0; j < dim(); ++j) m.set_col(j, mul(basis(j), x));
    return m;
}

std::string Algebra::format(const Vec& v) const { return format_tensor(v, {&labels_}); }

int Group::identity() const {
    for (int e = 0; e < order(); ++e) {
        bool ok = true;
        for (int g = 0; g < order() && ok; ++g) ok = mul(e, g) == g && mul(g, e) == g;
        if (ok) return e;
    }
    return -1;
}

int Group::inverse(int g) const {
    int e = identity();
    for (int h = 0; h < order(); ++h)
        if (mul(g, h) == e && mul(h, g) == e) return h;
    return -1;
}

std::string validate_group(const Group& g) {
    int n = g.order();
    if (n == 0) return "empty group";
    if (static_cast<int>(g.table.size()) != n * n) return "table size";
    for (int v : g.table)
        if (v < 0 || v >= n) return "closure";
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
                    return "associativity at (" + g.names[a] + "," + g.names[b] + "," + g.names[c] + ")";
    if (g.identity() < 0) return "identity";
    for (int a = 0; a < n; ++a)
        if (g.inverse(a) < 0) return "inverse of " + g.names[a];
    return {};
}

Group cyclic_group(int n) {
    Group g;
    for (int k = 0; k < n; ++k) g.names.push_back(k == 0 ? "e" : "g" + (k == 1 ? std::string() : "^" + std::to_string(k)));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) g.table.push_back((a + b) % n);
    return g;
}

Group symmetric_group3() {
    // Permutations of {0,1,2} in one-line notation.
    std::vector<std::vector<int>> perms = {{0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
    Group g;
    g.names = {"e", "(12)", "(13)", "(23)", "(123)", "(132)"};
    for (const auto& p : perms)
        for (const auto& q : perms) {
            std::vector<int> r(3);
            for (int k = 0; k < 3; ++k) r[k] = p[q[k]];
            for (std::size_t m = 0; m < perms.size(); ++m)
                if (perms[m] == r) g.table.push_back(static_cast<int>(m));
        }
    return g;
}

Group group_by_name(const std::string& name) {
    if (name == "trivial" || name == "1") return cyclic_group(1);
    if (name == "S3") return symmetric_group3();
    if (name.size() > 1 && name[0] == 'Z') {
        int n = std::stoi(name.substr(1));
        if (n >= 1) return cyclic_group(n);
    }
    throw std::invalid_argument("unknown group: " + name);
}

Algebra ground_field() { return Algebra({"1"}, {Vec::unit(0)}, Vec::unit(0)); }

StarAlgebra ground_star_algebra() {
    LinMap star = LinMap::identity(1).with_antilinear(true);
    return {ground_field(), star};
}

StarAlgebra function_algebra(Index n) {
    if (n < 1) throw std::invalid_argument("function_algebra: n must be positive");
    std::vector<std::string> labels;
    for (Index x = 0; x < n; ++x) labels.push_back("δ" + std::to_string(x + 1));
    std::vector<Vec> prod(static_cast<std::size_t>(n * n));
    Vec unit;
    for (Index x = 0; x < n; ++x) {
        prod[x * n + x] = Vec::unit(x);
        unit.push_back(x, 1);
    }
    Algebra a(labels, prod, unit);
    return {a, LinMap::identity(n).with_antilinear(true)};
}

HopfAlgebra group_algebra(const Group& g) {
    std::string bad = validate_group(g);
    if (!bad.empty()) throw std::invalid_argument("invalid group table: " + bad);
    Index n = g.order();
    std::vector<Vec> prod(static_cast<std::size_t>(n * n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) prod[a * n + b] = Vec::unit(g.mul(a, b));
    Algebra alg(g.names, prod, Vec::unit(g.identity()));
    LinMap star(n, n, true), delta(n * n, n), eps(1, n), anti(n, n);
    for (int a = 0; a < n; ++a) {
        star.set_col(a, Vec::unit(g.inverse(a)));
        delta.set_col(a, Vec::unit(a * n + a));
        eps.set_col(a, Vec::unit(0));
        anti.set_col(a, Vec::unit(g.inverse(a)));
    }
    return {{alg, star}, delta, eps, anti};
}

HopfAlgebra trivial_hopf_algebra() { return group_algebra(cyclic_group(1)); }

Algebra opposite(const Algebra& a) {
    Index n = a.dim();
    std::vector<Vec> prod(static_cast<std::size_t>(n * n));
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) prod[i * n + j] = a.product(j, i);
    return Algebra(a.labels(), prod, a.unit());
}

Algebra tensor_algebra(const Algebra& a, const Algebra& b) {
    Index na = a.dim(), nb = b.dim(), n = na * nb;
    std::vector<std::string> labels;
    for (Index i = 0; i < na; ++i)
        for (Index j = 0; j < nb; ++j) labels.push_back(a.labels()[i] + "⊗" + b.labels()[j]);
    std::vector<Vec> prod(static_cast<std::size_t>(n * n));
    for (Index i = 0; i < na; ++i)
        for (Index j = 0; j < nb; ++j)
            for (Index k = 0; k < na; ++k)
                for (Index l = 0; l < nb; ++l)
                    prod[(i * nb + j) * n + (k * nb + l)] = tensor(a.product(i, k), b.product(j, l), nb);
    return Algebra(labels, prod, tensor(a.unit(), b.unit(), nb));
}

StarAlgebra tensor_star_algebra(const StarAlgebra& a, const StarAlgebra& b) {
    Algebra t = tensor_algebra(a.alg, b.alg);
    LinMap star(t.dim(), t.dim(), true);
    for (Index i = 0; i < a.alg.dim(); ++i)
        for (Index j = 0; j < b.alg.dim(); ++j)
            star.set_col(i * b.alg.dim() + j, tensor(a.star.col(i), b.star.col(j), b.alg.dim()));
    return {t, star};
}

bool is_commutative(const Algebra& a) {
    for (Index i = 0; i < a.dim(); ++i)
        for (Index j = 0; j < i; ++j)
            if (a.product(i, j) != a.product(j, i)) return false;
    return true;
}

CheckReport verify_algebra(const Algebra& a) {
    CheckReport r;
    r.suite = "algebra";
    const auto& L = a.labels();
    r.run("associativity", "(xy)z = x(yz) on basis triples", [&]() -> std::optional<std::string> {
        for (Index i = 0; i < a.dim(); ++i)
            for (Index j = 0; j < a.dim(); ++j) {
                Vec ij = a.product(i, j);
                for (Index k = 0; k < a.dim(); ++k)
                    if (a.mul(ij, a.basis(k)) != a.mul(a.basis(i), a.product(j, k)))
                        return "(" + L[i] + "," + L[j] + "," + L[k] + ")";
            }
        return std::nullopt;
    });
    r.run("unit-law", "1x = x1 = x", [&]() -> std::optional<std::string> {
        for (Index i = 0; i < a.dim(); ++i)
            if (a.mul(a.unit(), a.basis(i)) != a.basis(i) || a.mul(a.basis(i), a.unit()) != a.basis(i))
                return L[i];
        return std::nullopt;
    });
    return r;
}

CheckReport verify_star(const StarAlgebra& s) {
    CheckReport r = verify_algebra(s.alg);
    r.suite = "star-algebra";
    const Algebra& a = s.alg;
    const auto& L = a.labels();
    r.run("star-antilinear", "(λx)* = conj(λ)x*", [&]() -> std::optional<std::string> {
        if (s.star.antilinear()) return std::nullopt;
        for (Index i = 0; i < a.dim(); ++i) {
            Vec x = Vec::unit(i, Scalar::i());
            Vec lhs = s.star.apply(x);
            Vec rhs = Scalar(-Scalar::i()) * s.star.apply(a.basis(i));
            if (lhs != rhs) return "scalar i on " + L[i];
        }
        return std::nullopt;
    });
    LinMap star = s.star;
    r.run("star-involutive", "x** = x", [&]() -> std::optional<std::string> {
        for (Index i = 0; i < a.dim(); ++i)
            if (star.apply(star.apply(a.basis(i))) != a.basis(i)) return L[i];
        return std::nullopt;
    });
    r.run("star-unit", "1* = 1", [&]() -> std::optional<std::string> {
        if (star.apply(a.unit()) != a.unit()) return "1";
        return std::nullopt;
    });
    r.run("star-antimultiplicative", "(xy)* = y*x*", [&]() -> std::optional<std::string> {
        for (Index i = 0; i < a.dim(); ++i)
            for (Index j = 0; j < a.dim(); ++j)
                if (star.apply(a.product(i, j)) != a.mul(star.apply(a.basis(j)), star.apply(a.basis(i))))
                    return "(" + L[i] + "," + L[j] + ")";
        return std::nullopt;
    });
    return r;
}

CheckReport verify_hopf_algebra(const HopfAlgebra& q) {
    CheckReport r = verify_star(q.alg);
    r.suite = "hopf-algebra";
    const Algebra& a = q.alg.alg;
    Index n = a.dim();
    const auto& L = a.labels();
    Algebra k = ground_field();
    r.run("coassociativity", "(Δ⊗id)Δ = (id⊗Δ)Δ", [&]() -> std::optional<std::string> {
        for (Index i = 0; i < n; ++i) {
            Vec d = q.delta.col(i);
            if (apply_on_factor(d, {n, n}, 0, q.delta) != apply_on_factor(d, {n, n}, 1, q.delta)) return L[i];
        }
        return std::nullopt;
    });
    r.run("counit", "(ε⊗id)Δ = id = (id⊗ε)Δ", [&]() -> std::optional<std::string> {
        for (Index i = 0; i < n; ++i) {
            Vec d = q.delta.col(i);
            if (apply_on_factor(d, {n, n}, 0, q.eps) != a.basis(i)) return L[i];
            if (apply_on_factor(d, {n, n}, 1, q.eps) != a.basis(i)) return L[i];
        }
        return std::nullopt;
    });
    r.run("coproduct-multiplicative", "Δ(xy) = Δ(x)Δ(y)", [&]() -> std::optional<std::string> {
        for (Index i = 0; i < n; ++i)
            for (Index j = 0; j < n; ++j)
                if (q.delta.apply(a.product(i, j)) != factorwise_mul(q.delta.col(i), q.delta.col(j), {&a, &a}))
                    return "(" + L[i] + "," + L[j] + ")";
        return std::nullopt;
    });
    r.run("counit-multiplicative", "ε(xy) = ε(x)ε(y)", [&]() -> std::optional<std::string> {
        if (auto w = check_morphism(q.eps, a, k)) return w;
        return std::nullopt;
    });
    r.run("antipode", "T(x1)x2 = ε(x)1 = x1T(x2)", [&]() -> std::optional<std::string> {
        for (Index i = 0; i < n; ++i) {
            Vec d = q.delta.col(i);
            Vec e = q.eps.col(i).get(0).is_zero() ? Vec() : Scalar(q.eps.col(i).get(0)) * a.unit();
            VecAcc l, rr;
            for (const auto& [idx, c] : d.entries()) {
                Index x = idx / n, y = idx % n;
                l.add(a.mul(q.antipode.col(x), a.basis(y)), c);
                rr.add(a.mul(a.basis(x), q.antipode.col(y)), c);
            }
            if (l.take() != e || rr.take() != e) return L[i];
        }
        return std::nullopt;
    });
    r.run("antipode-involutive", "T² = id", [&]() -> std::optional<std::string> {
        for (Index i = 0; i < n; ++i)
            if (q.antipode.apply(q.antipode.col(i)) != a.basis(i)) return L[i];
        return std::nullopt;
    });
    r.run("star-coproduct", "Δ(x*) = (*⊗*)Δ(x)", [&]() -> std::optional<std::string> {
        for (Index i = 0; i < n; ++i) {
            Vec lhs = q.delta.apply(q.alg.star.col(i));
            Vec rhs = apply_factorwise(q.delta.col(i), {n, n}, {&q.alg.star, &q.alg.star});
            if (lhs != rhs) return L[i];
        }
        return std::nullopt;
    });
    return r;
}

std::optional<std::string> check_morphism(const LinMap& f, const Algebra& src, const Algebra& dst) {
    if (f.cols() != src.dim() || f.rows() != dst.dim()) return std::string("shape mismatch");
    if (f.apply(src.unit()) != dst.unit()) return std::string("unit");
    for (Index i = 0; i < src.dim(); ++i)
        for (Index j = 0; j < src.dim(); ++j)
            if (f.apply(src.product(i, j)) != dst.mul(f.col(i), f.col(j)))
                return "(" + src.labels()[i] + "," + src.labels()[j] + ")";
    return std::nullopt;
}

std::optional<std::string> check_antimorphism(const LinMap& f, const Algebra& src, const Algebra& dst) {
    return check_morphism(f, src, opposite(dst));
}

Index tensor_size(const std::vector<Index>& dims) {
    Index n = 1;
    for (Index d : dims) n *= d;
    return n;
}

std::vector<Index> tensor_split(Index idx, const std::vector<Index>& dims) {
    std::vector<Index> parts(dims.size());
    for (std::size_t k = dims.size(); k-- > 0;) {
        parts[k] = idx % dims[k];
        idx /= dims[k];
    }
    return parts;
}

Index tensor_join(const std::vector<Index>& parts, const std::vector<Index>& dims) {
    Index idx = 0;
    for (std::size_t k = 0; k < dims.size(); ++k) idx = idx * dims[k] + parts[k];
    return idx;
}

Vec tensor(const Vec& x, const Vec& y, Index dim_y) {
    Vec out;
    for (const auto& [i, a] : x.entries())
        for (const auto& [j, b] : y.entries()) out.push_back(i * dim_y + j, a * b);
    return out;
}

Vec apply_on_factor(const Vec& v, const std::vector<Index>& dims, std::size_t pos, const LinMap& f) {
    if (f.cols() != dims[pos]) throw DimensionError("apply_on_factor: factor dimension mismatch");
    Index suffix = 1;
    for (std::size_t k = pos + 1; k < dims.size(); ++k) suffix *= dims[k];
    Index width = dims[pos];
    VecAcc acc;
    for (const auto& [idx, c] : v.entries()) {
        Index s = idx % suffix;
        Index x = (idx / suffix) % width;
        Index p = idx / (suffix * width);
        Scalar cc = f.antilinear() ? c.conj() : c;
        for (const auto& [y, d] : f.col(x).entries()) acc.add((p * f.rows() + y) * suffix + s, cc * d);
    }
    return acc.take();
}

Vec apply_factorwise(const Vec& v, const std::vector<Index>& dims, const std::vector<const LinMap*>& maps) {
    bool anti = false;
    for (const LinMap* m : maps)
        if (m && m->antilinear()) anti = true;
    std::vector<Index> out_dims;
    for (std::size_t k = 0; k < dims.size(); ++k) out_dims.push_back(maps[k] ? maps[k]->rows() : dims[k]);
    VecAcc acc;
    for (const auto& [idx, c] : v.entries()) {
        std::vector<Index> parts = tensor_split(idx, dims);
        Vec cur = Vec::unit(0, anti ? c.conj() : c);
        Index cur_dim = 1;
        for (std::size_t k = 0; k < dims.size(); ++k) {
            Vec img = maps[k] ? maps[k]->col(parts[k]) : Vec::unit(parts[k]);
            cur = tensor(cur, img, out_dims[k]);
            cur_dim *= out_dims[k];
        }
        acc.add(cur);
    }
    return acc.take();
}

Vec factorwise_mul(const Vec& x, const Vec& y, const std::vector<const Algebra*>& algs) {
    std::vector<Index> dims;
    for (const Algebra* a : algs) dims.push_back(a->dim());
    VecAcc acc;
    for (const auto& [i, a] : x.entries()) {
        std::vector<Index> pi = tensor_split(i, dims);
        for (const auto& [j, b] : y.entries()) {
            std::vector<Index> pj = tensor_split(j, dims);
            Vec cur = Vec::unit(0, a * b);
            for (std::size_t k = 0; k < dims.size(); ++k) cur = tensor(cur, algs[k]->product(pi[k], pj[k]), dims[k]);
            acc.add(cur);
        }
    }
    return acc.take();
}

Vec flip(const Vec& v, Index dim_a, Index dim_b) {
    VecAcc acc;
    for (const auto& [idx, c] : v.entries()) acc.add((idx % dim_b) * dim_a + idx / dim_b, c);
    return acc.take();
}

std::string format_indexed(const Vec& v) {
    if (v.empty()) return "0";
    std::string w;
    for (const auto& [i, c] : v.entries()) w += (w.empty() ? "" : " + ") + ("(" + c.str() + ")*e" + std::to_string(i));
    return w;
}

std::string format_tensor(const Vec& v, const std::vector<const std::vector<std::string>*>& labels) {
    if (v.empty()) return "0";
    std::vector<Index> dims;
    for (const auto* l : labels) dims.push_back(static_cast<Index>(l->size()));
    std::ostringstream os;
    bool first = true;
    for (const auto& [idx, c] : v.entries()) {
        if (!first) os << " + ";
        first = false;
        if (!c.is_one()) os << "(" << c.str() << ")";
        std::vector<Index> parts = tensor_split(idx, dims);
        for (std::size_t k = 0; k < parts.size(); ++k) {
            if (k) os << "⊗";
            os << (*labels[k])[parts[k]];
        }
    }
    return os.str();
}

}  // namespace halg
