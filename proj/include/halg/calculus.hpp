#pragma once

#include "halg/actions.hpp"

#include <optional>
#include <string>
#include <vector>

namespace halg {

// An algebra on a direct sum of homogeneous pieces, one degree per basis element.
struct GradedAlgebra {
    Algebra alg;
    std::vector<int> degree;

    Index dim() const { return alg.dim(); }
    int top() const;
    std::vector<Index> component(int k) const;
    Subspace component_space(int k) const;
    // Degree of a homogeneous vector, or -1 when mixed or zero.
    int degree_of(const Vec& v) const;
};

// Graded algebra with differential and optional antilinear star.
struct DGA {
    GradedAlgebra graded;
    LinMap d;
    LinMap star;  // 0x0 when absent

    Index dim() const { return graded.dim(); }
    const Algebra& alg() const { return graded.alg; }
    bool has_star() const { return star.cols() != 0; }
    // The subalgebra of degree-zero elements, with its star when present.
    StarAlgebra degree_zero() const;
};

CheckReport verify_graded(const GradedAlgebra& g);
// d of degree one, d² = 0, graded Leibniz; with a star: degree zero, (dω)* = d(ω*),
// (ω∧η)* = (-1)^{kl} η*∧ω*.
CheckReport verify_dga(const DGA& c);

// Universal calculus on n points truncated above max_degree; forms of degree m are
// functions on (m+1)-tuples whose adjacent entries differ.
DGA universal_calculus(Index n, int max_degree = 3);
// Degree-zero elements of a DGA sit at indices 0..dim(Ω⁰)-1 when built here.
Index degree_zero_dim(const DGA& c);

struct RestrictedDGA {
    DGA dga;
    LinMap embed;  // restricted coordinates -> ambient coordinates
};
// Throws std::invalid_argument when sub is not a graded subalgebra closed under d (and star).
RestrictedDGA restrict_dga(const DGA& c, const std::vector<Subspace>& per_degree);

// Conjugate DGA: ω̄∧η̄ = (-1)^{kl} conj(η∧ω), d̄(ω̄) = conj(dω).
DGA conjugate_dga(const DGA& c);

struct CovariantCalculus {
    DGA dga;
    StarHopfAlgebroid h;
    HModule action;                // over H on the whole of Ω
    std::optional<Subspace> h0;    // declared subspace; computed when absent
};

// {h : [h - s_lε_l(h), d] = [h - t_lε_l(h), d] = 0 on Ω}
Subspace compute_h0(const DGA& c, const HopfAlgebroid& h, const HModule& action);
Subspace h0_of(const CovariantCalculus& c);
// Subalgebra of H generated by s_l(A_l) and sub.
Subspace generated_subalgebra(const Algebra& H, const std::vector<Vec>& gens);

CheckReport verify_covariant_calculus(const CovariantCalculus& c);

struct InvariantForms {
    std::vector<Subspace> per_degree;  // inside each Ωᵏ, ambient coordinates
    Subspace space;
};
// Ω₀ = {ω : h·ω = s_lε_l(h)·ω = t_lε_l(h)·ω for h in H₀}
InvariantForms invariant_forms(const CovariantCalculus& c);
// Closure of Ω₀ under product, d and star.
CheckReport verify_invariant_forms(const CovariantCalculus& c);
// # : Ω -> Ω̄ is H-linear and a morphism of differential graded algebras; optionally on Ω₀ only.
CheckReport sharp_dga_check(const CovariantCalculus& c, bool on_invariants = false);
// h ∈ H₀ iff S^{-1}(h*) ∈ H₀
CheckReport h0_star_closure(const CovariantCalculus& c);

// Permutation of points acting on universal forms, (g·ω)(x0..xk) = ω(g^{-1}x0..g^{-1}xk).
LinMap permute_forms(const DGA& universal, Index n, const std::vector<int>& perm);
// Q-covariant calculus as a Hopf algebroid over the ground field, one matrix per element of Q.
CovariantCalculus hopf_covariant_calculus(const HopfAlgebra& q, const DGA& c, const std::vector<LinMap>& q_action);
// Calculus over the Connes-Moscovici algebroid: (a⊗q⊗b)·ω = a(q·ω)b.
CovariantCalculus cm_calculus(const HopfAlgebra& q, const DGA& c, const std::vector<LinMap>& q_action);

// Arrow pullback: each arrow γ carries a bijection φ_γ of the objects with φ_γ(s(γ)) = t(γ),
// functorial in γ; (δ_γ·ω)(x0..xk) = [x0 = t(γ)] ω(φ_γ^{-1}x0..φ_γ^{-1}xk).
std::vector<std::vector<int>> arrow_bijections(const FiniteGroupoid& g, const std::string& preset);
CovariantCalculus groupoid_calculus(const FiniteGroupoid& g, const std::vector<std::vector<int>>& phi, int max_degree);
// Forms with ω(φ_γ y0..φ_γ yk) = ω(y0..yk) whenever y0 = s(γ), computed without the module.
Subspace groupoid_invariant_forms(const FiniteGroupoid& g, const std::vector<std::vector<int>>& phi, const DGA& c);
// d(a·ω) = d(ι ε_l(a))∧ω + a·dω with ι(a) = s_l(a)·1, for ω up to max_degree.
CheckReport transverse_leibniz(const CovariantCalculus& c, int max_degree);
// compute_h0 = H, transverse Leibniz, and invariant forms equal groupoid-invariant forms.
CheckReport transverse_chain(const FiniteGroupoid& g, const std::vector<std::vector<int>>& phi, int max_degree);

// Bialgebroid of the pair groupoid on X² restricted to the algebra generated by C(X) and H₀.
struct FiniteSetBialgebroid {
    Index n = 0;
    StarHopfAlgebroid big;   // arrows (z,w,x,y): source (z,w), target (x,y)
    LinMap base_embed;       // C(X) -> C(X²), f ↦ f⊗1
    Subspace h0;             // the three sufficient conditions
    Subspace H;              // generated subalgebra
    Subspace commutant;      // exact preservation and commutator conditions
    DGA forms;               // universal calculus on X up to degree one
    LinMap forms_embed;      // Ω -> C(X²)

    Index arrow(Index z, Index w, Index x, Index y) const { return (x * n + y) * n * n + z * n + w; }
};
// Throws std::invalid_argument for n < 2.
FiniteSetBialgebroid finite_set_bialgebroid(Index n);
CheckReport verify_finite_set_bialgebroid(const FiniteSetBialgebroid& f, const Limits& limits = {});

// Orientation by vol : Ω^top -> Ω⁰ (a map on the whole of Ω, zero off the top degree) and a state τ.
struct Orientation {
    int top = 0;
    LinMap vol;  // Ω -> Ω⁰ coordinates
    LinMap tau;  // Ω⁰ -> ground field
};
CheckReport orientation_tools(const DGA& c, const Orientation& o, const HopfAlgebroid* h = nullptr,
                              const HModule* action = nullptr);
// Gram matrix τ(e_i* e_j) on the degree-zero algebra.
DenseMatrix state_gram(const StarAlgebra& b, const LinMap& tau);

}  // namespace halg
