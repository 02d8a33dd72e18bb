#pragma once

#include "halg/calculus.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace halg {

using Bidegree = std::pair<int, int>;

// Components Ω^(a,b) as subspaces of the ambient Ω.
struct Bigrading {
    std::map<Bidegree, Subspace> components;

    Subspace component(int a, int b) const;
};

// Each basis element of Ω placed in the given bidegree.
Bigrading bigrading_from_basis(const DGA& c, const std::vector<Bidegree>& per_basis);
// Ω₀ ∩ Ω^(a,b) in restricted coordinates; throws std::invalid_argument when Ω₀ is not their direct sum.
Bigrading restrict_bigrading(const Bigrading& bg, const RestrictedDGA& r);

struct Dolbeault {
    LinMap del;
    LinMap delbar;
};
// ∂ and ∂̄ are d followed by the projections onto (a+1,b) and (a,b+1).
// Throws std::invalid_argument when the components do not split Ω.
Dolbeault split_d(const DGA& c, const Bigrading& bg);

// Grading, star and invariance axioms, integrability d = ∂+∂̄, its equivalence with
// ∂² = ∂̄² = 0 and ∂∂̄ = -∂̄∂, and ∂(ω*) = (∂̄ω)*.
CheckReport verify_complex_structure(const DGA& c, const Bigrading& bg, const HModule* action = nullptr);

// A calculus with complex structure, 2-form σ and orientation, optionally covariant.
struct KahlerStructure {
    DGA dga;
    Bigrading bg;
    Vec sigma;
    Orientation orient;
    std::optional<StarHopfAlgebroid> h;
    std::optional<HModule> action;
};

struct HermitianData {
    int n = 0;
    LinMap L;                                // ω ↦ σ∧ω
    std::map<Bidegree, Subspace> primitives;  // P^(a,b)
    // lefschetz[k][j] = L^j(P^{k-2j}) inside Ωᵏ
    std::vector<std::vector<Subspace>> lefschetz;
    LinMap hodge;
    DenseMatrix gram;  // ⟨e_i, e_j⟩ over the basis of Ω
};

LinMap lefschetz_map(const DGA& c, const Vec& sigma);
// Throws std::invalid_argument with "not almost symplectic at k=…" when some L^{n-k} is not
// bijective and when the Lefschetz decomposition is not a direct sum.
HermitianData hermitian_data(const KahlerStructure& k);
// g(ω⊗η̄) = vol(ω∧⋆(η*)), zero across unequal degrees, in Ω⁰ coordinates.
Vec metric(const KahlerStructure& k, const HermitianData& hd, const Vec& w, const Vec& e);
CheckReport verify_hermitian(const KahlerStructure& k);

struct Laplacians {
    LinMap dstar, delstar, delbarstar;
    LinMap lap_d, lap_del, lap_delbar;
};
Laplacians laplacians(const KahlerStructure& k, const HermitianData& hd);
CheckReport verify_laplacians(const KahlerStructure& k);

// The structure restricted to the invariant forms Ω₀; requires h and action.
struct RestrictedKahler {
    KahlerStructure structure;
    RestrictedDGA restriction;
};
RestrictedKahler restrict_to_invariants(const KahlerStructure& k);
// dσ = 0, then the complex, hermitian and Laplacian suites again on Ω₀ when covariant.
CheckReport kahler_check(const KahlerStructure& k);

// Exterior algebra on the generators with graded star extending star_on_gens; d = 0.
// Basis: monomials ordered by degree, then by generator subset.
DGA exterior_dga(const std::vector<std::string>& gens, const std::vector<Vec>& star_on_gens);
// Generator g as a vector of the exterior algebra.
Vec exterior_generator(Index g);
// Extends d from the generators by the graded Leibniz rule.
void extend_derivation(DGA& c, const std::vector<Vec>& d_on_gens);
// Bidegree of each monomial from the bidegrees of its generators.
Bigrading exterior_bigrading(const DGA& c, std::size_t gens, const std::vector<Bidegree>& gen_bidegree);

// Λ(e10, e01), d = 0, κ = i e10∧e01, vol(κ) = 1, τ = id.
KahlerStructure toy_kahler();
// The same with ℤ/2 acting by e10 ↦ -e10, e01 ↦ -e01.
KahlerStructure covariant_toy_kahler();
// Universal calculus on two points up to degree two, σ = -iδ(1,2,1) + iδ(2,1,2).
KahlerStructure two_point_kahler();
// Λ(w1, w2, v1, v2) with dw2 = w1∧v1: hermitian, but dσ ≠ 0.
KahlerStructure nonclosed_hermitian();
// Λ(w1, w2, v1, v2) with d leaking into bidegrees (k+2, l-1) and (k-1, l+2).
std::pair<DGA, Bigrading> leaking_bigrading();

}  // namespace halg
