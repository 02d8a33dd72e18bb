#pragma once

#include "halg/constructors.hpp"

#include <string>
#include <vector>

namespace halg {

// Left module over the algebra H, one matrix per basis element of H.
struct HModule {
    std::vector<std::string> labels;
    std::vector<LinMap> act;

    Index dim() const { return static_cast<Index>(labels.size()); }
    LinMap action(const Vec& h) const;
    Vec apply(const Vec& h, const Vec& m) const { return action(h).apply(m); }
};

// A module whose space also carries an algebra (and optionally a star).
struct HModuleAlgebra {
    HModule module;
    Algebra alg;
    LinMap star;  // empty (0x0) when absent

    bool has_star() const { return star.cols() != 0; }
};

CheckReport verify_module(const HopfAlgebroid& h, const HModule& m);
// Unit and multiplicativity conditions, balanced multiplication, and (h·b)* = S(h)*·b* when starred.
CheckReport verify_h_module_algebra(const StarHopfAlgebroid& sh, const HModuleAlgebra& b);

// A_l with h·a = ε_l(h s_l(a)).
HModuleAlgebra base_module(const StarHopfAlgebroid& sh);
// a1·m·a2 = s_l(a1)t_l(a2)·m
Bimodule induced_bimodule(const HopfAlgebroid& h, const HModule& m);

struct ProductModule {
    BalancedTensor tensor;
    HModule module;
};
// M⊗_{A_l}N with h·(m⊗n) = h(1)·m ⊗ h(2)·n; throws std::invalid_argument with a witness
// when some action does not descend to the balanced tensor.
ProductModule monoidal_product(const HopfAlgebroid& h, const HModule& m, const HModule& n, const Limits& limits = {});
// The canonical maps M⊗A_l -> M and A_l⊗M -> M are H-linear isomorphisms.
CheckReport unit_constraints(const StarHopfAlgebroid& sh, const HModule& m, const Limits& limits = {});

// Vector bundle over the objects with a functorial arrow action.
struct GroupoidRep {
    std::vector<Index> fiber;  // dimension per object
    std::vector<LinMap> arrow;  // fiber(src) -> fiber(tgt)
};
GroupoidRep trivial_line_bundle(const FiniteGroupoid& g);
// Empty when functorial, else a witness.
std::string validate_rep(const FiniteGroupoid& g, const GroupoidRep& rep);
// Sections with (δ_γ·u)(x) = [t(γ)=x] γ·u(s(γ)), over convolution_algebroid(g).
HModule groupoid_rep_to_module(const FiniteGroupoid& g, const GroupoidRep& rep);
// {u : γ·u(s(γ)) = u(t(γ)) for all arrows}
Subspace groupoid_invariant_sections(const FiniteGroupoid& g, const GroupoidRep& rep);
CheckReport groupoid_invariants_match(const FiniteGroupoid& g, const GroupoidRep& rep);

// {m : h·m = s_lε_l(h)·m}; two_sided adds h·m = t_lε_l(h)·m.
Subspace invariants(const HopfAlgebroid& h, const HModule& m, bool two_sided = false);
// The invariants of a module algebra form a unital subalgebra, star-closed when starred.
CheckReport verify_invariants(const StarHopfAlgebroid& sh, const HModuleAlgebra& b);

// Conjugate module, coordinates conjugated: h·m̄ = conj(S(h)*·m).
HModule conjugate(const StarHopfAlgebroid& sh, const HModule& m);
// Conjugate algebra b̄·b̄' = conj(b'b).
Algebra conjugate_algebra(const Algebra& a);
// # : B -> B̄, b ↦ conj(b*), as a linear map in conjugate coordinates.
LinMap sharp(const HModuleAlgebra& b);
// Double conjugate equals the original, # is an algebra isomorphism, H-linear, and matches invariants.
CheckReport conjugate_checks(const StarHopfAlgebroid& sh, const HModuleAlgebra& b);

// ⟨x, y⟩ = Σ x_i conj(y_j) gram[i][j]
Scalar inner(const DenseMatrix& gram, const Vec& x, const Vec& y);

struct AdjointData {
    HModule omega;
    DenseMatrix gram;  // inner product on omega
    HModule base;      // the degree-zero algebra B as an H-module
    LinMap tau;        // B -> ground field
};
// Right invariance τ(h·b) = τ(s_r(ε_r(h))·b) first, then ⟨h·ω, η⟩ = ⟨ω, (S²(h))*·η⟩.
CheckReport adjoint_check(const StarHopfAlgebroid& sh, const AdjointData& data);

}  // namespace halg
