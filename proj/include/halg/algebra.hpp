#pragma once

#include "halg/linalg.hpp"
#include "halg/report.hpp"

#include <optional>
#include <string>
#include <vector>

namespace halg {

class Algebra {
public:
    Algebra() = default;
    // products[i*dim+j] = e_i e_j
    Algebra(std::vector<std::string> labels, std::vector<Vec> products, Vec unit);

    Index dim() const { return static_cast<Index>(labels_.size()); }
    const std::vector<std::string>& labels() const { return labels_; }
    const Vec& unit() const { return unit_; }
    const Vec& product(Index i, Index j) const { return prod_[i * dim() + j]; }
    void set_product(Index i, Index j, Vec v) { prod_[i * dim() + j] = std::move(v); }
    void set_unit(Vec u) { unit_ = std::move(u); }

    Vec mul(const Vec& x, const Vec& y) const;
    Vec basis(Index i) const { return Vec::unit(i); }
    LinMap left_mult(const Vec& x) const;
    LinMap right_mult(const Vec& x) const;
    std::string format(const Vec& v) const;

    friend bool operator==(const Algebra& a, const Algebra& b) {
        return a.labels_ == b.labels_ && a.prod_ == b.prod_ && a.unit_ == b.unit_;
    }
    friend bool operator!=(const Algebra& a, const Algebra& b) { return !(a == b); }

private:
    std::vector<std::string> labels_;
    std::vector<Vec> prod_;
    Vec unit_;
};

struct StarAlgebra {
    Algebra alg;
    LinMap star;  // antilinear involution
};

// Finite-dimensional Hopf *-algebra; used for the symmetry input Q.
struct HopfAlgebra {
    StarAlgebra alg;
    LinMap delta;     // into plain Q⊗Q, index i*dim+j
    LinMap eps;       // into the one-dimensional ground field
    LinMap antipode;  // T
};

struct Group {
    std::vector<std::string> names;
    std::vector<int> table;  // table[g*n+h] = gh
    int order() const { return static_cast<int>(names.size()); }
    int mul(int g, int h) const { return table[g * order() + h]; }
    int identity() const;
    int inverse(int g) const;
};

// Returns an empty string for a valid group, else the first violated axiom.
std::string validate_group(const Group& g);
Group cyclic_group(int n);
Group symmetric_group3();
Group group_by_name(const std::string& name);

Algebra ground_field();
StarAlgebra ground_star_algebra();
StarAlgebra function_algebra(Index n);
HopfAlgebra group_algebra(const Group& g);
HopfAlgebra trivial_hopf_algebra();
Algebra opposite(const Algebra& a);
Algebra tensor_algebra(const Algebra& a, const Algebra& b);
StarAlgebra tensor_star_algebra(const StarAlgebra& a, const StarAlgebra& b);

bool is_commutative(const Algebra& a);
CheckReport verify_algebra(const Algebra& a);
CheckReport verify_star(const StarAlgebra& a);
CheckReport verify_hopf_algebra(const HopfAlgebra& q);

// Witness text on failure; nothing on success.
std::optional<std::string> check_morphism(const LinMap& f, const Algebra& src, const Algebra& dst);
std::optional<std::string> check_antimorphism(const LinMap& f, const Algebra& src, const Algebra& dst);

// Plain tensor helpers. Factor k of an index uses mixed radix with dims[0] most significant.
Index tensor_size(const std::vector<Index>& dims);
std::vector<Index> tensor_split(Index idx, const std::vector<Index>& dims);
Index tensor_join(const std::vector<Index>& parts, const std::vector<Index>& dims);
Vec tensor(const Vec& x, const Vec& y, Index dim_y);
// Applies f to factor pos; f maps that factor into a space of size f.rows().
Vec apply_on_factor(const Vec& v, const std::vector<Index>& dims, std::size_t pos, const LinMap& f);
// Applies f_k to every factor k; antilinear maps conjugate each coefficient once.
Vec apply_factorwise(const Vec& v, const std::vector<Index>& dims, const std::vector<const LinMap*>& maps);
// Factorwise product in A1⊗...⊗Ak.
Vec factorwise_mul(const Vec& x, const Vec& y, const std::vector<const Algebra*>& algs);
// Swaps the two factors of a two-fold tensor.
Vec flip(const Vec& v, Index dim_a, Index dim_b);
// Coordinates as c*e_i terms.
std::string format_indexed(const Vec& v);
std::string format_tensor(const Vec& v, const std::vector<const std::vector<std::string>*>& labels);

}  // namespace halg
