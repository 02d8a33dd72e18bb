#include "halg/bimodule.hpp"

#include <deque>
#include <set>
#include <tuple>
#include <unordered_set>

namespace halg {

CheckReport verify_bimodule(const Bimodule& m) {
    CheckReport r;
    r.suite = "bimodule";
    auto unital = [&](const Algebra& a, const std::vector<LinMap>& act) -> std::optional<std::string> {
        for (Index j = 0; j < m.dim; ++j) {
            VecAcc acc;
            for (const auto& [k, c] : a.unit().entries()) acc.add(act[k].col(j), c);
            if (acc.take() != Vec::unit(j)) return "basis " + std::to_string(j);
        }
        return std::nullopt;
    };
    auto act_of = [&](const std::vector<LinMap>& act, const Vec& a, const Vec& v) {
        VecAcc acc;
        for (const auto& [k, c] : a.entries()) acc.add(act[k].apply(v), c);
        return acc.take();
    };
    r.run("left-unital", "1·m = m", [&] { return unital(*m.left_alg, m.left_act); });
    r.run("right-unital", "m·1 = m", [&] { return unital(*m.right_alg, m.right_act); });
    r.run("left-associative", "(ab)·m = a·(b·m)", [&]() -> std::optional<std::string> {
        const Algebra& A = *m.left_alg;
        for (Index a = 0; a < A.dim(); ++a)
            for (Index b = 0; b < A.dim(); ++b)
                for (Index j = 0; j < m.dim; ++j)
                    if (act_of(m.left_act, A.product(a, b), Vec::unit(j)) != m.left_act[a].apply(m.left_act[b].col(j)))
                        return A.labels()[a] + "," + A.labels()[b] + " on basis " + std::to_string(j);
        return std::nullopt;
    });
    r.run("right-associative", "m·(ab) = (m·a)·b", [&]() -> std::optional<std::string> {
        const Algebra& A = *m.right_alg;
        for (Index a = 0; a < A.dim(); ++a)
            for (Index b = 0; b < A.dim(); ++b)
                for (Index j = 0; j < m.dim; ++j)
                    if (act_of(m.right_act, A.product(a, b), Vec::unit(j)) != m.right_act[b].apply(m.right_act[a].col(j)))
                        return A.labels()[a] + "," + A.labels()[b] + " on basis " + std::to_string(j);
        return std::nullopt;
    });
    r.run("actions-commute", "(a·m)·b = a·(m·b)", [&]() -> std::optional<std::string> {
        for (std::size_t a = 0; a < m.left_act.size(); ++a)
            for (std::size_t b = 0; b < m.right_act.size(); ++b)
                if (m.right_act[b].after(m.left_act[a]) != m.left_act[a].after(m.right_act[b]))
                    return m.left_alg->labels()[a] + "," + m.right_alg->labels()[b];
        return std::nullopt;
    });
    return r;
}

Bimodule regular_bimodule(std::shared_ptr<const Algebra> a) {
    Bimodule m;
    m.dim = a->dim();
    m.left_alg = a;
    m.right_alg = a;
    for (Index k = 0; k < a->dim(); ++k) {
        m.left_act.push_back(a->left_mult(a->basis(k)));
        m.right_act.push_back(a->right_mult(a->basis(k)));
    }
    return m;
}

TensorQuotient::TensorQuotient(std::vector<Index> dims, std::vector<std::optional<Balancing>> bal)
    : dims_(std::move(dims)), bal_(std::move(bal)) {
    if (bal_.size() + 1 != dims_.size()) throw DimensionError("TensorQuotient: need one balancing slot per adjacent pair");
    ambient_ = tensor_size(dims_);
    rev_r_.resize(bal_.size());
    rev_l_.resize(bal_.size());
    for (std::size_t p = 0; p < bal_.size(); ++p) {
        if (!bal_[p]) continue;
        const Balancing& b = *bal_[p];
        if (b.right_on_left.size() != b.left_on_right.size())
            throw DimensionError("TensorQuotient: balancing action counts differ");
        rev_r_[p].resize(dims_[p]);
        rev_l_[p].resize(dims_[p + 1]);
        for (std::size_t a = 0; a < b.right_on_left.size(); ++a) {
            const LinMap& R = b.right_on_left[a];
            const LinMap& L = b.left_on_right[a];
            if (R.cols() != dims_[p] || L.cols() != dims_[p + 1])
                throw DimensionError("TensorQuotient: balancing action has wrong dimension");
            for (Index i = 0; i < dims_[p]; ++i)
                for (const auto& [x, c] : R.col(i).entries()) rev_r_[p][x].emplace_back(static_cast<Index>(a), i);
            for (Index j = 0; j < dims_[p + 1]; ++j)
                for (const auto& [y, c] : L.col(j).entries()) rev_l_[p][y].emplace_back(static_cast<Index>(a), j);
        }
    }
}

Vec TensorQuotient::relation(std::size_t pos, Index a, Index idx) const {
    const Balancing& b = *bal_[pos];
    std::vector<Index> parts = tensor_split(idx, dims_);
    Index i = parts[pos], j = parts[pos + 1];
    VecAcc acc;
    for (const auto& [x, c] : b.right_on_left[a].col(i).entries()) {
        parts[pos] = x;
        parts[pos + 1] = j;
        acc.add(tensor_join(parts, dims_), c);
    }
    for (const auto& [y, c] : b.left_on_right[a].col(j).entries()) {
        parts[pos] = i;
        parts[pos + 1] = y;
        acc.add(tensor_join(parts, dims_), -c);
    }
    return acc.take();
}

bool TensorQuotient::in_relations(const Vec& v) const {
    if (v.empty()) return true;
    std::unordered_set<Index> seen;
    std::set<std::tuple<std::size_t, Index, Index>> rels;
    std::deque<Index> queue;
    Echelon ech(ambient_);
    for (const auto& [i, c] : v.entries())
        if (seen.insert(i).second) queue.push_back(i);
    auto add_rel = [&](std::size_t p, Index a, Index idx) {
        if (!rels.emplace(p, a, idx).second) return;
        Vec r = relation(p, a, idx);
        for (const auto& [k, c] : r.entries())
            if (seen.insert(k).second) queue.push_back(k);
        ech.insert(r);
    };
    while (!queue.empty()) {
        Index cur = queue.front();
        queue.pop_front();
        std::vector<Index> parts = tensor_split(cur, dims_);
        for (std::size_t p = 0; p < bal_.size(); ++p) {
            if (!bal_[p]) continue;
            for (const auto& [a, i] : rev_r_[p][parts[p]]) {
                std::vector<Index> q = parts;
                q[p] = i;
                add_rel(p, a, tensor_join(q, dims_));
            }
            for (const auto& [a, j] : rev_l_[p][parts[p + 1]]) {
                std::vector<Index> q = parts;
                q[p + 1] = j;
                add_rel(p, a, tensor_join(q, dims_));
            }
        }
    }
    return ech.contains(v);
}

std::size_t TensorQuotient::relation_count() const {
    std::size_t n = 0;
    for (std::size_t p = 0; p < bal_.size(); ++p)
        if (bal_[p]) n += bal_[p]->right_on_left.size() * static_cast<std::size_t>(ambient_);
    return n;
}

std::vector<Vec> TensorQuotient::all_relations() const {
    std::vector<Vec> out;
    for (std::size_t p = 0; p < bal_.size(); ++p) {
        if (!bal_[p]) continue;
        for (std::size_t a = 0; a < bal_[p]->right_on_left.size(); ++a)
            for (Index idx = 0; idx < ambient_; ++idx) {
                Vec r = relation(p, static_cast<Index>(a), idx);
                if (!r.empty()) out.push_back(std::move(r));
            }
    }
    return out;
}

Subspace TensorQuotient::relation_span(const Limits& limits) const {
    if (ambient_ > limits.max_dim)
        throw DimensionError("tensor ambient dimension " + std::to_string(ambient_) + " exceeds limit " +
                             std::to_string(limits.max_dim));
    return Subspace::span(ambient_, all_relations());
}

Quotient TensorQuotient::materialize(const Limits& limits) const { return quotient(ambient_, relation_span(limits)); }

BalancedTensor balanced_tensor(const Bimodule& m, const Bimodule& n, const Limits& limits) {
    if (!m.right_alg || !n.left_alg || *m.right_alg != *n.left_alg)
        throw std::invalid_argument("balanced_tensor: middle algebras differ");
    BalancedTensor t;
    t.left = m;
    t.right = n;
    t.rel = TensorQuotient({m.dim, n.dim}, {Balancing{m.right_act, n.left_act}});
    t.quot = t.rel.materialize(limits);
    Bimodule& ind = t.induced;
    ind.dim = t.quot.dim;
    ind.left_alg = m.left_alg;
    ind.right_alg = n.right_alg;
    LinMap idn = LinMap::identity(n.dim), idm = LinMap::identity(m.dim);
    for (const auto& L : m.left_act) {
        LinMap act(ind.dim, ind.dim);
        for (Index q = 0; q < ind.dim; ++q) {
            Vec rep = Vec::unit(t.quot.reps[q]);
            act.set_col(q, t.quot.proj.apply(apply_factorwise(rep, {m.dim, n.dim}, {&L, &idn})));
        }
        ind.left_act.push_back(act);
    }
    for (const auto& R : n.right_act) {
        LinMap act(ind.dim, ind.dim);
        for (Index q = 0; q < ind.dim; ++q) {
            Vec rep = Vec::unit(t.quot.reps[q]);
            act.set_col(q, t.quot.proj.apply(apply_factorwise(rep, {m.dim, n.dim}, {&idm, &R})));
        }
        ind.right_act.push_back(act);
    }
    return t;
}

std::optional<LinMap> descends(const LinMap& f, const BalancedTensor& t, std::string* witness) {
    if (f.cols() != t.rel.ambient()) throw DimensionError("descends: map domain is not the plain tensor");
    for (const Vec& r : t.rel.all_relations()) {
        if (!f.apply(r).empty()) {
            if (witness) *witness = format_indexed(r);
            return std::nullopt;
        }
    }
    LinMap g(f.rows(), t.quot.dim, f.antilinear());
    for (Index q = 0; q < t.quot.dim; ++q) g.set_col(q, f.col(t.quot.reps[q]));
    return g;
}

std::optional<std::string> descends_to(const LinMap& f, const TensorQuotient& src, const TensorQuotient& dst) {
    if (f.cols() != src.ambient() || f.rows() != dst.ambient()) throw DimensionError("descends_to: dimension mismatch");
    for (const Vec& r : src.all_relations())
        if (!dst.in_relations(f.apply(r))) {
            return "relation " + format_indexed(r);
        }
    return std::nullopt;
}

}  // namespace halg
