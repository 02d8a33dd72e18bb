#pragma once

#include "halg/scalar.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace halg {

using Index = std::int64_t;

struct DimensionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Caps for dense brute-force systems and materialized quotients.
struct Limits {
    Index max_dim = 4096;
};

// Sparse vector: entries sorted by index, no stored zeros.
class Vec {
public:
    using Entry = std::pair<Index, Scalar>;

    Vec() = default;
    static Vec unit(Index i, Scalar c = 1);
    static Vec from_dense(const std::vector<Scalar>& d);

    const std::vector<Entry>& entries() const { return e_; }
    bool empty() const { return e_.empty(); }
    std::size_t size() const { return e_.size(); }
    Scalar get(Index i) const;
    Index lead() const { return e_.front().first; }
    std::vector<Scalar> dense(Index dim) const;

    Vec& operator+=(const Vec& o) { return axpy(1, o); }
    Vec& operator-=(const Vec& o) { return axpy(-1, o); }
    Vec& axpy(const Scalar& c, const Vec& o);
    Vec& scale(const Scalar& c);
    Vec conj() const;

    friend Vec operator+(Vec a, const Vec& b) { return a += b; }
    friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
    friend Vec operator*(const Scalar& c, Vec v) { return v.scale(c); }
    Vec operator-() const;
    friend bool operator==(const Vec& a, const Vec& b) { return a.e_ == b.e_; }
    friend bool operator!=(const Vec& a, const Vec& b) { return !(a == b); }

    // Appends an entry with index larger than all present ones.
    void push_back(Index i, Scalar c);

private:
    std::vector<Entry> e_;
};

// Accumulator for sums with scattered indices.
class VecAcc {
public:
    void add(Index i, const Scalar& c);
    void add(const Vec& v, const Scalar& c = 1);
    Vec take();

private:
    std::map<Index, Scalar> m_;
};

// Matrix stored by columns; antilinear maps conjugate input coordinates.
class LinMap {
public:
    LinMap() = default;
    LinMap(Index rows, Index cols, bool antilinear = false);
    static LinMap identity(Index n);
    static LinMap zero(Index rows, Index cols) { return LinMap(rows, cols); }
    static LinMap from_columns(Index rows, std::vector<Vec> cols, bool antilinear = false);

    Index rows() const { return rows_; }
    Index cols() const { return static_cast<Index>(col_.size()); }
    bool antilinear() const { return anti_; }
    const Vec& col(Index j) const { return col_[j]; }
    void set_col(Index j, Vec v) { col_[j] = std::move(v); }
    Scalar at(Index r, Index c) const { return col_[c].get(r); }

    Vec apply(const Vec& v) const;
    // this after g
    LinMap after(const LinMap& g) const;
    std::vector<Vec> row_vectors() const;
    LinMap with_antilinear(bool a) const;

    friend bool operator==(const LinMap& a, const LinMap& b) {
        return a.rows_ == b.rows_ && a.anti_ == b.anti_ && a.col_ == b.col_;
    }
    friend bool operator!=(const LinMap& a, const LinMap& b) { return !(a == b); }
    friend LinMap operator+(const LinMap& a, const LinMap& b);
    friend LinMap operator-(const LinMap& a, const LinMap& b);
    friend LinMap operator*(const Scalar& c, const LinMap& a);

private:
    Index rows_ = 0;
    std::vector<Vec> col_;
    bool anti_ = false;
};

// Row space kept in semi-echelon form: every row has leading entry 1 at its
// smallest index and no two rows share a leading index.
class Echelon {
public:
    explicit Echelon(Index dim = 0) : dim_(dim) {}

    Index dim() const { return dim_; }
    std::size_t rank() const { return rows_.size(); }
    // Residual of v; free of pivot coordinates, so it is a normal form modulo the span.
    Vec reduce(const Vec& v) const;
    bool contains(const Vec& v) const { return reduce(v).empty(); }
    bool insert(const Vec& v);
    // Back substitution: afterwards pivot columns appear only in their own row.
    void make_reduced();
    bool has_pivot(Index c) const { return rows_.count(c) != 0; }
    const std::map<Index, Vec>& rows() const { return rows_; }

private:
    Index dim_;
    std::map<Index, Vec> rows_;
};

// Subspace with canonical reduced row echelon basis, pivots ascending.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(Index ambient) : ambient_(ambient) {}
    static Subspace span(Index ambient, const std::vector<Vec>& gens);
    static Subspace full(Index ambient);

    Index ambient() const { return ambient_; }
    Index dim() const { return static_cast<Index>(basis_.size()); }
    const std::vector<Vec>& basis() const { return basis_; }
    std::vector<Index> pivots() const;
    bool contains(const Vec& v) const;
    bool contains(const Subspace& s) const;
    Vec reduce(const Vec& v) const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
    Index ambient_ = 0;
    std::vector<Vec> basis_;
    Echelon ech_;
};

Subspace intersect(const Subspace& a, const Subspace& b);
Subspace sum(const Subspace& a, const Subspace& b);

Subspace kernel(const LinMap& f);
Subspace image(const LinMap& f);
Index rank(const LinMap& f);

struct Quotient {
    Index dim = 0;
    // Ambient coordinates used as quotient basis (non-pivot coordinates of sub).
    std::vector<Index> reps;
    LinMap proj;
};
Quotient quotient(Index ambient, const Subspace& sub);

// Minimal-pivot particular solution; free variables set to zero.
std::optional<Vec> solve(const LinMap& f, const Vec& target);
std::optional<LinMap> inverse(const LinMap& f);

// Kernel of several maps on a common domain.
Subspace joint_kernel(Index domain, const std::vector<LinMap>& maps);

using DenseMatrix = std::vector<std::vector<Scalar>>;
bool is_hermitian(const DenseMatrix& m);
// Throws std::invalid_argument on non-Hermitian input.
bool psd_check(const DenseMatrix& gram);
// Determinant by exact elimination.
Scalar determinant(DenseMatrix m);

}  // namespace halg
