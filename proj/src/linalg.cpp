#include "halg/linalg.hpp"

#include <algorithm>

namespace halg {

Vec Vec::unit(Index i, Scalar c) {
    Vec v;
    if (!c.is_zero()) v.e_.emplace_back(i, std::move(c));
    return v;
}

Vec Vec::from_dense(const std::vector<Scalar>& d) {
    Vec v;
    for (std::size_t k = 0; k < d.size(); ++k)
        if (!d[k].is_zero()) v.e_.emplace_back(static_cast<Index>(k), d[k]);
    return v;
}

Scalar Vec::get(Index i) const {
    auto it = std::lower_bound(e_.begin(), e_.end(), i,
                               [](const Entry& a, Index b) { return a.first < b; });
    if (it != e_.end() && it->first == i) return it->second;
    return 0;
}

std::vector<Scalar> Vec::dense(Index dim) const {
    std::vector<Scalar> d(dim);
    for (const auto& [i, c] : e_) d.at(i) = c;
    return d;
}

Vec& Vec::axpy(const Scalar& c, const Vec& o) {
    if (c.is_zero() || o.e_.empty()) return *this;
    std::vector<Entry> out;
    out.reserve(e_.size() + o.e_.size());
    auto a = e_.begin();
    auto b = o.e_.begin();
    while (a != e_.end() || b != o.e_.end()) {
        if (b == o.e_.end() || (a != e_.end() && a->first < b->first)) {
            out.push_back(std::move(*a));
            ++a;
        } else if (a == e_.end() || b->first < a->first) {
            out.emplace_back(b->first, c * b->second);
            ++b;
        } else {
            Scalar s = a->second + c * b->second;
            if (!s.is_zero()) out.emplace_back(a->first, std::move(s));
            ++a;
            ++b;
        }
    }
    e_ = std::move(out);
    return *this;
}

Vec& Vec::scale(const Scalar& c) {
    if (c.is_zero()) {
        e_.clear();
        return *this;
    }
    for (auto& [i, x] : e_) x *= c;
    return *this;
}

Vec Vec::conj() const {
    Vec v = *this;
    for (auto& [i, x] : v.e_) x = x.conj();
    return v;
}

Vec Vec::operator-() const {
    Vec v = *this;
    for (auto& [i, x] : v.e_) x = -x;
    return v;
}

void Vec::push_back(Index i, Scalar c) {
    if (!c.is_zero()) e_.emplace_back(i, std::move(c));
}

void VecAcc::add(Index i, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = m_.try_emplace(i, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) m_.erase(it);
    }
}

void VecAcc::add(const Vec& v, const Scalar& c) {
    if (c.is_zero()) return;
    for (const auto& [i, x] : v.entries()) add(i, c * x);
}

Vec VecAcc::take() {
    Vec v;
    for (auto& [i, x] : m_) v.push_back(i, std::move(x));
    m_.clear();
    return v;
}

LinMap::LinMap(Index rows, Index cols, bool antilinear)
    : rows_(rows), col_(static_cast<std::size_t>(cols)), anti_(antilinear) {}

LinMap LinMap::identity(Index n) {
    LinMap m(n, n);
    for (Index j = 0; j < n; ++j) m.col_[j] = Vec::unit(j);
    return m;
}

LinMap LinMap::from_columns(Index rows, std::vector<Vec> cols, bool antilinear) {
    LinMap m;
    m.rows_ = rows;
    m.col_ = std::move(cols);
    m.anti_ = antilinear;
    return m;
}

Vec LinMap::apply(const Vec& v) const {
    VecAcc acc;
    for (const auto& [j, c] : v.entries()) {
        if (j < 0 || j >= cols()) throw DimensionError("LinMap::apply: index out of range");
        acc.add(col_[j], anti_ ? c.conj() : c);
    }
    return acc.take();
}

LinMap LinMap::after(const LinMap& g) const {
    if (g.rows() != cols()) throw DimensionError("LinMap::after: dimension mismatch");
    LinMap out(rows_, g.cols(), anti_ != g.anti_);
    for (Index j = 0; j < g.cols(); ++j) {
        // Columns are images of basis vectors; conjugation of a unit coordinate is trivial.
        VecAcc acc;
        for (const auto& [k, c] : g.col_[j].entries()) acc.add(col_[k], anti_ ? c.conj() : c);
        out.col_[j] = acc.take();
    }
    return out;
}

std::vector<Vec> LinMap::row_vectors() const {
    std::vector<VecAcc> acc(static_cast<std::size_t>(rows_));
    for (Index j = 0; j < cols(); ++j)
        for (const auto& [i, c] : col_[j].entries()) acc[i].add(j, c);
    std::vector<Vec> rows;
    rows.reserve(acc.size());
    for (auto& a : acc) rows.push_back(a.take());
    return rows;
}

LinMap LinMap::with_antilinear(bool a) const {
    LinMap m = *this;
    m.anti_ = a;
    return m;
}

LinMap operator+(const LinMap& a, const LinMap& b) {
    if (a.rows_ != b.rows_ || a.cols() != b.cols() || a.anti_ != b.anti_)
        throw DimensionError("LinMap sum: shape or linearity mismatch");
    LinMap m = a;
    for (Index j = 0; j < m.cols(); ++j) m.col_[j] += b.col_[j];
    return m;
}

LinMap operator-(const LinMap& a, const LinMap& b) { return a + (Scalar(-1) * b); }

LinMap operator*(const Scalar& c, const LinMap& a) {
    LinMap m = a;
    for (auto& v : m.col_) v.scale(c);
    return m;
}

Vec Echelon::reduce(const Vec& v) const {
    if (rows_.empty()) return v;
    std::map<Index, Scalar> acc;
    for (const auto& [i, c] : v.entries()) acc.emplace(i, c);
    auto it = acc.begin();
    while (it != acc.end()) {
        Index key = it->first;
        auto row = rows_.find(key);
        if (row == rows_.end()) {
            ++it;
            continue;
        }
        Scalar c = it->second;
        for (const auto& [j, x] : row->second.entries()) {
            auto [pos, fresh] = acc.try_emplace(j, -(c * x));
            if (!fresh) {
                pos->second -= c * x;
                if (pos->second.is_zero()) acc.erase(pos);
            }
        }
        it = acc.upper_bound(key);
    }
    Vec out;
    for (auto& [i, c] : acc) out.push_back(i, std::move(c));
    return out;
}

bool Echelon::insert(const Vec& v) {
    Vec r = reduce(v);
    if (r.empty()) return false;
    Scalar lead = r.entries().front().second;
    r.scale(lead.inverse());
    rows_.emplace(r.lead(), std::move(r));
    return true;
}

void Echelon::make_reduced() {
    for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
        Vec& row = it->second;
        Vec head = Vec::unit(row.lead());
        Vec tail = row - head;
        bool touches = false;
        for (const auto& [j, c] : tail.entries())
            if (rows_.count(j)) {
                touches = true;
                break;
            }
        if (!touches) continue;
        row = head + reduce(tail);
    }
}

Subspace Subspace::span(Index ambient, const std::vector<Vec>& gens) {
    Subspace s(ambient);
    s.ech_ = Echelon(ambient);
    for (const auto& g : gens) s.ech_.insert(g);
    s.ech_.make_reduced();
    for (const auto& [p, r] : s.ech_.rows()) s.basis_.push_back(r);
    return s;
}

Subspace Subspace::full(Index ambient) {
    std::vector<Vec> g;
    for (Index i = 0; i < ambient; ++i) g.push_back(Vec::unit(i));
    return span(ambient, g);
}

std::vector<Index> Subspace::pivots() const {
    std::vector<Index> p;
    for (const auto& b : basis_) p.push_back(b.lead());
    return p;
}

bool Subspace::contains(const Vec& v) const { return ech_.contains(v); }

bool Subspace::contains(const Subspace& s) const {
    for (const auto& b : s.basis()) {
        if (!contains(b)) return false;
    }
    return true;
}

Vec Subspace::reduce(const Vec& v) const { return ech_.reduce(v); }

Subspace sum(const Subspace& a, const Subspace& b) {
    std::vector<Vec> g = a.basis();
    g.insert(g.end(), b.basis().begin(), b.basis().end());
    return Subspace::span(a.ambient(), g);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    // Kernel of (x, y) -> x - y on the coefficient space of both bases.
    Index na = a.dim(), nb = b.dim();
    std::vector<Vec> cols;
    for (const auto& v : a.basis()) cols.push_back(v);
    for (const auto& v : b.basis()) cols.push_back(-v);
    LinMap f = LinMap::from_columns(a.ambient(), cols);
    Subspace k = kernel(f);
    std::vector<Vec> gens;
    for (const auto& kv : k.basis()) {
        VecAcc acc;
        for (const auto& [j, c] : kv.entries())
            if (j < na) acc.add(a.basis()[j], c);
        gens.push_back(acc.take());
    }
    (void)nb;
    return Subspace::span(a.ambient(), gens);
}

namespace {

Echelon row_echelon(const LinMap& f) {
    Echelon e(f.cols());
    for (const auto& r : f.row_vectors()) e.insert(r);
    e.make_reduced();
    return e;
}

}  // namespace

Subspace kernel(const LinMap& f) {
    Echelon e = row_echelon(f);
    std::vector<Vec> gens;
    for (Index c = 0; c < f.cols(); ++c) {
        if (e.has_pivot(c)) continue;
        VecAcc acc;
        acc.add(c, 1);
        for (const auto& [p, row] : e.rows()) {
            Scalar x = row.get(c);
            if (!x.is_zero()) acc.add(p, -x);
        }
        gens.push_back(acc.take());
    }
    return Subspace::span(f.cols(), gens);
}

Subspace image(const LinMap& f) {
    std::vector<Vec> g;
    for (Index j = 0; j < f.cols(); ++j) g.push_back(f.col(j));
    return Subspace::span(f.rows(), g);
}

Index rank(const LinMap& f) { return image(f).dim(); }

Quotient quotient(Index ambient, const Subspace& sub) {
    if (sub.ambient() != ambient) throw DimensionError("quotient: subspace not in ambient space");
    Quotient q;
    std::vector<Index> piv = sub.pivots();
    std::vector<Index> pos(static_cast<std::size_t>(ambient), -1);
    std::size_t k = 0;
    for (Index i = 0; i < ambient; ++i) {
        if (k < piv.size() && piv[k] == i) {
            ++k;
            continue;
        }
        pos[i] = static_cast<Index>(q.reps.size());
        q.reps.push_back(i);
    }
    q.dim = static_cast<Index>(q.reps.size());
    q.proj = LinMap(q.dim, ambient);
    for (Index j = 0; j < ambient; ++j) {
        Vec r = sub.reduce(Vec::unit(j));
        Vec img;
        for (const auto& [i, c] : r.entries()) img.push_back(pos[i], c);
        q.proj.set_col(j, std::move(img));
    }
    return q;
}

std::optional<Vec> solve(const LinMap& f, const Vec& target) {
    Index n = f.cols();
    std::vector<Vec> rows = f.row_vectors();
    Echelon e(n + 1);
    for (Index i = 0; i < f.rows(); ++i) {
        Vec r = rows[i];
        Scalar b = target.get(i);
        if (!b.is_zero()) r.push_back(n, b);
        e.insert(r);
    }
    e.make_reduced();
    if (e.has_pivot(n)) return std::nullopt;
    Vec x;
    for (const auto& [p, row] : e.rows()) x.push_back(p, row.get(n));
    if (f.antilinear()) x = x.conj();
    return x;
}

std::optional<LinMap> inverse(const LinMap& f) {
    if (f.rows() != f.cols()) return std::nullopt;
    LinMap lin = f.with_antilinear(false);
    if (rank(lin) != f.cols()) return std::nullopt;
    LinMap inv(f.cols(), f.rows(), f.antilinear());
    for (Index i = 0; i < f.rows(); ++i) {
        auto x = solve(lin, Vec::unit(i));
        // For antilinear f the inverse is antilinear with the conjugated preimage columns.
        inv.set_col(i, f.antilinear() ? x->conj() : *x);
    }
    return inv;
}

Subspace joint_kernel(Index domain, const std::vector<LinMap>& maps) {
    Echelon e(domain);
    for (const auto& m : maps) {
        if (m.cols() != domain) throw DimensionError("joint_kernel: domain mismatch");
        for (const auto& r : m.row_vectors()) e.insert(r);
    }
    e.make_reduced();
    std::vector<Vec> gens;
    for (Index c = 0; c < domain; ++c) {
        if (e.has_pivot(c)) continue;
        VecAcc acc;
        acc.add(c, 1);
        for (const auto& [p, row] : e.rows()) {
            Scalar x = row.get(c);
            if (!x.is_zero()) acc.add(p, -x);
        }
        gens.push_back(acc.take());
    }
    return Subspace::span(domain, gens);
}

bool is_hermitian(const DenseMatrix& m) {
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i].size() != m.size()) return false;
        for (std::size_t j = 0; j <= i; ++j)
            if (m[i][j] != m[j][i].conj()) return false;
    }
    return true;
}

bool psd_check(const DenseMatrix& gram) {
    if (!is_hermitian(gram)) throw std::invalid_argument("psd_check: matrix is not Hermitian");
    DenseMatrix a = gram;
    std::size_t n = a.size();
    for (std::size_t k = 0; k < n; ++k) {
        const Scalar& p = a[k][k];
        if (!p.is_real() || sgn(p.re()) <= 0) return false;
        Scalar pinv = p.inverse();
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a[i][k].is_zero()) continue;
            Scalar f = a[i][k] * pinv;
            for (std::size_t j = k + 1; j < n; ++j)
                if (!a[k][j].is_zero()) a[i][j] -= f * a[k][j];
        }
    }
    return true;
}

Scalar determinant(DenseMatrix m) {
    std::size_t n = m.size();
    Scalar det = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && m[piv][k].is_zero()) ++piv;
        if (piv == n) return 0;
        if (piv != k) {
            std::swap(m[piv], m[k]);
            det = -det;
        }
        det *= m[k][k];
        Scalar inv = m[k][k].inverse();
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m[i][k].is_zero()) continue;
            Scalar f = m[i][k] * inv;
            for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
        }
    }
    return det;
}

}  // namespace halg
