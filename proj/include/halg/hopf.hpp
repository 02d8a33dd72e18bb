#pragma once

#include "halg/bimodule.hpp"

#include <optional>
#include <string>
#include <vector>

namespace halg {

// Left bialgebroid: bimodule a1·h·a2 = s(a1)t(a2)h, balancing t(a)x⊗y ~ x⊗s(a)y.
struct LeftBialgebroid {
    Algebra H;
    Algebra A;
    LinMap s;      // A -> H
    LinMap t;      // A^op -> H
    LinMap delta;  // H -> plain H⊗H
    LinMap eps;    // H -> A
};

// Right bialgebroid: bimodule a1·h·a2 = h t(a1)s(a2), balancing x s(a)⊗y ~ x⊗y t(a).
struct RightBialgebroid {
    Algebra H;
    Algebra A;
    LinMap s;
    LinMap t;
    LinMap delta;
    LinMap eps;
};

struct HopfAlgebroid {
    LeftBialgebroid left;
    RightBialgebroid right;
    LinMap S;
    const Algebra& H() const { return left.H; }
};

struct StarHopfAlgebroid {
    HopfAlgebroid core;
    LinMap star_H;
    LinMap star_Al;
    LinMap star_Ar;
};

Balancing left_balancing(const LeftBialgebroid& b);
Balancing right_balancing(const RightBialgebroid& b);
TensorQuotient left_tensor(const LeftBialgebroid& b);
TensorQuotient right_tensor(const RightBialgebroid& b);

// Takeuchi subspaces, in coordinates of the materialized balanced tensor.
struct TakeuchiSpace {
    Quotient quot;
    Subspace space;
};
TakeuchiSpace takeuchi_left(const LeftBialgebroid& b, const Limits& limits = {});
TakeuchiSpace takeuchi_right(const RightBialgebroid& b, const Limits& limits = {});
// Throws std::invalid_argument on inconsistent dimensions.
void validate_shapes(const LeftBialgebroid& b);
void validate_shapes(const RightBialgebroid& b);
// Throws with a witness pair when the images of s and t do not commute.
void require_commuting_images(const LinMap& s, const LinMap& t, const Algebra& H, const Algebra& A);

RightBialgebroid opposite_right(const LeftBialgebroid& b);
LeftBialgebroid opposite_left(const RightBialgebroid& b);
// (H_r^op, H_l^op, S^{-1})
HopfAlgebroid dual_algebroid(const HopfAlgebroid& h);

// Multiplication of the two factors of a plain two-fold tensor in H.
Vec mu(const Algebra& H, const Vec& x);
Vec mu_op(const Algebra& H, const Vec& x);

// Checks may be restricted to a list of elements of H (default: its basis).
CheckReport verify_left_bialgebroid(const LeftBialgebroid& b, const std::vector<Vec>* elements = nullptr);
CheckReport verify_right_bialgebroid(const RightBialgebroid& b, const std::vector<Vec>* elements = nullptr);
// With check_parts the prerequisite suites run first and a failure skips the rest.
CheckReport verify_hopf(const HopfAlgebroid& h, bool check_parts = true);
CheckReport derived_identities(const HopfAlgebroid& h, bool check_hopf = true);
CheckReport verify_star(const StarHopfAlgebroid& sh, const Limits& limits = {}, bool check_hopf = true);
CheckReport counit_uniqueness(const LeftBialgebroid& b, const Limits& limits = {});
CheckReport counit_uniqueness(const RightBialgebroid& b, const Limits& limits = {});
CheckReport antipode_uniqueness(const HopfAlgebroid& h, const Limits& limits = {});

}  // namespace halg
