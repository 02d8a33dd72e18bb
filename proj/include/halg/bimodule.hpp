#pragma once

#include "halg/algebra.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace halg {

struct Bimodule {
    Index dim = 0;
    std::shared_ptr<const Algebra> left_alg;
    std::shared_ptr<const Algebra> right_alg;
    std::vector<LinMap> left_act;   // per basis a: m -> a·m
    std::vector<LinMap> right_act;  // per basis a: m -> m·a
};

CheckReport verify_bimodule(const Bimodule& m);
Bimodule regular_bimodule(std::shared_ptr<const Algebra> a);

// Balancing between two adjacent factors over a middle algebra with basis a_k:
// relations (x·a_k)⊗y - x⊗(a_k·y).
struct Balancing {
    std::vector<LinMap> right_on_left;
    std::vector<LinMap> left_on_right;
};

// Plain tensor product of factors modulo the balancing relations at chosen positions.
class TensorQuotient {
public:
    TensorQuotient() = default;
    TensorQuotient(std::vector<Index> dims, std::vector<std::optional<Balancing>> bal);

    const std::vector<Index>& dims() const { return dims_; }
    Index ambient() const { return ambient_; }

    // Exact membership in the relation span, restricted to the relations in the
    // connected component of the support of v (the span splits over components).
    bool in_relations(const Vec& v) const;
    bool equivalent(const Vec& a, const Vec& b) const { return in_relations(a - b); }

    // Relation generator for position pos, middle basis element a, on the basis tuple idx
    // whose slots pos and pos+1 carry the two factors before acting.
    Vec relation(std::size_t pos, Index a, Index idx) const;
    // All relation generators; caller guards size.
    std::vector<Vec> all_relations() const;
    std::size_t relation_count() const;

    // Full materialization, guarded by limits.max_dim on the ambient dimension.
    Subspace relation_span(const Limits& limits) const;
    Quotient materialize(const Limits& limits) const;

private:
    std::vector<Index> dims_;
    std::vector<std::optional<Balancing>> bal_;
    Index ambient_ = 1;
    // rev_r_[pos][x] lists (a, i) with (e_i·a_a) having a nonzero x-coordinate.
    std::vector<std::vector<std::vector<std::pair<Index, Index>>>> rev_r_;
    std::vector<std::vector<std::vector<std::pair<Index, Index>>>> rev_l_;
};

struct BalancedTensor {
    Bimodule left;
    Bimodule right;
    TensorQuotient rel;
    Quotient quot;
    Bimodule induced;  // (left.left_alg, right.right_alg)-bimodule on the quotient
};

BalancedTensor balanced_tensor(const Bimodule& m, const Bimodule& n, const Limits& limits = {});

// Induced map on the quotient if f kills every balancing relation, else nothing.
// The witness receives the first relation not killed.
std::optional<LinMap> descends(const LinMap& f, const BalancedTensor& t, std::string* witness = nullptr);
// Whether f maps every relation of src into the relation span of dst.
std::optional<std::string> descends_to(const LinMap& f, const TensorQuotient& src, const TensorQuotient& dst);

}  // namespace halg
