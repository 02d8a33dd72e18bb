#pragma once

#include "halg/hopf.hpp"

#include <string>
#include <vector>

namespace halg {

struct FiniteGroupoid {
    std::vector<std::string> objects;
    std::vector<std::string> arrows;
    std::vector<int> src;
    std::vector<int> tgt;
    std::vector<int> comp;  // comp[g*|arrows|+h] = gh, or -1 unless src(g) = tgt(h)
    std::vector<int> unit;  // per object
    std::vector<int> inv;

    int arrow_count() const { return static_cast<int>(arrows.size()); }
    int object_count() const { return static_cast<int>(objects.size()); }
    int compose(int g, int h) const { return comp[g * arrow_count() + h]; }
};

// Empty when all groupoid axioms hold, else the first violation.
std::string validate_groupoid(const FiniteGroupoid& g);

FiniteGroupoid unit_groupoid(int n);
FiniteGroupoid point_groupoid(const Group& group);
FiniteGroupoid pair_groupoid(int n);
// action[g][m] = g·m on points 0..n-1.
FiniteGroupoid action_groupoid(const Group& group, const std::vector<std::vector<int>>& action);

// "swap<m>" (reversal of m points, cyclic groups), "rot<m>" (k: x -> x+k mod m), "regular".
std::vector<std::vector<int>> action_by_name(const Group& group, const std::string& spec);
// "unit:n", "pair:n", "point:<group>", "action:<group>:<perm>".
FiniteGroupoid groupoid_by_name(const std::string& preset);

StarHopfAlgebroid convolution_algebroid(const FiniteGroupoid& g);
StarHopfAlgebroid enveloping_algebroid(const StarAlgebra& a);

// A module algebra over a Hopf algebra: one matrix on A per basis element of Q.
struct ModuleAlgebraAction {
    std::vector<LinMap> act;
};
CheckReport verify_module_algebra(const HopfAlgebra& q, const StarAlgebra& a, const ModuleAlgebraAction& action);
ModuleAlgebraAction trivial_action(const HopfAlgebra& q, const StarAlgebra& a);
// Group acting on a function algebra C(n) by permuting points.
ModuleAlgebraAction permutation_action(const HopfAlgebra& q, const std::vector<std::vector<int>>& perm);

// Throws std::invalid_argument when T² ≠ id or the action is not a module algebra action.
StarHopfAlgebroid connes_moscovici(const HopfAlgebra& q, const StarAlgebra& a, const ModuleAlgebraAction& action);

// A Hopf *-algebra as an algebroid over the one-dimensional base.
StarHopfAlgebroid hopf_algebra_algebroid(const HopfAlgebra& q);

// Checks that phi (on H) with base maps phi_l, phi_r is an isomorphism of Hopf *-algebroids.
CheckReport check_isomorphism(const StarHopfAlgebroid& a, const StarHopfAlgebroid& b, const LinMap& phi,
                              const LinMap& phi_l, const LinMap& phi_r);

}  // namespace halg
