#include "halg/calculus.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace halg;

namespace {

Index power(Index b, int e) {
    Index r = 1;
    while (e-- > 0) r *= b;
    return r;
}

// Orbits of a permutation group on (k+1)-tuples with distinct neighbours, by enumeration.
Index tuple_orbits(Index n, int k, const std::vector<std::vector<int>>& group) {
    std::vector<std::vector<int>> tuples{{}};
    for (int pos = 0; pos <= k; ++pos) {
        std::vector<std::vector<int>> next;
        for (const auto& t : tuples)
            for (int x = 0; x < n; ++x)
                if (t.empty() || t.back() != x) {
                    auto u = t;
                    u.push_back(x);
                    next.push_back(u);
                }
        tuples = next;
    }
    std::set<std::vector<int>> seen;
    Index orbits = 0;
    for (const auto& t : tuples) {
        if (seen.count(t)) continue;
        ++orbits;
        for (const auto& g : group) {
            auto u = t;
            for (auto& x : u) x = g[x];
            seen.insert(u);
        }
    }
    return orbits;
}

Vec random_element(std::mt19937& rng, Index dim) {
    std::uniform_int_distribution<int> v(-2, 2);
    Vec x;
    for (Index i = 0; i < dim; ++i) x.push_back(i, Scalar(v(rng), v(rng)));
    return x;
}

std::set<std::string> failing_set(const CheckReport& r) {
    auto f = r.failing();
    return {f.begin(), f.end()};
}

}  // namespace

TEST_CASE("universal calculus has n(n-1)^k forms in degree k") {
    for (Index n : {2, 3, 4})
        for (int k = 0; k <= 3; ++k) {
            DGA c = universal_calculus(n, 3);
            CAPTURE(n);
            CAPTURE(k);
            CHECK(static_cast<Index>(c.graded.component(k).size()) == n * power(n - 1, k));
        }
    DGA c3 = universal_calculus(3, 3);
    CHECK(c3.graded.component(3).size() == 24);
}

TEST_CASE("universal calculi are differential graded *-algebras") {
    for (Index n : {1, 2, 3}) {
        CAPTURE(n);
        CHECK(verify_dga(universal_calculus(n, 3)).ok());
    }
}

TEST_CASE("property: d² = 0, graded Leibniz and star compatibility on random forms") {
    std::mt19937 rng(31337);
    DGA c = universal_calculus(3, 3);
    const Algebra& A = c.alg();
    for (int trial = 0; trial < 20; ++trial) {
        Vec x = random_element(rng, c.dim());
        CHECK(c.d.apply(c.d.apply(x)).empty());
        CHECK(c.star.apply(c.star.apply(x)) == x);
        CHECK(c.d.apply(c.star.apply(x)) == c.star.apply(c.d.apply(x)));
        // homogeneous pieces for the sign in the Leibniz rule
        int k = trial % 2, l = (trial / 2) % 2;
        Vec w, e;
        for (Index i : c.graded.component(k)) w.push_back(i, x.get(i));
        for (Index i : c.graded.component(l)) e.push_back(i, x.get((i * 7 + 3) % c.dim()) + 1);
        Vec lhs = c.d.apply(A.mul(w, e));
        Vec rhs = A.mul(c.d.apply(w), e) + (k % 2 ? -1 : 1) * A.mul(w, c.d.apply(e));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("Z2 swapping two points: invariant forms match the orbit count") {
    DGA c = universal_calculus(2, 2);
    HopfAlgebra q = group_algebra(cyclic_group(2));
    CovariantCalculus hc = hopf_covariant_calculus(q, c, {LinMap::identity(c.dim()), permute_forms(c, 2, {1, 0})});
    CHECK(verify_covariant_calculus(hc).ok());
    CHECK(verify_invariant_forms(hc).ok());
    CHECK(sharp_dga_check(hc).ok());
    CHECK(sharp_dga_check(hc, true).ok());
    InvariantForms inv = invariant_forms(hc);
    for (int k = 0; k <= 2; ++k) CHECK(inv.per_degree[k].dim() == tuple_orbits(2, k, {{0, 1}, {1, 0}}));
}

TEST_CASE("groupoid calculus of the swap action: invariant dims 1, 1 in degrees 0, 1") {
    FiniteGroupoid g = groupoid_by_name("action:Z2:swap2");
    auto phi = arrow_bijections(g, "action:Z2:swap2");
    CovariantCalculus gc = groupoid_calculus(g, phi, 2);
    InvariantForms inv = invariant_forms(gc);
    CHECK(inv.per_degree[0].dim() == 1);
    CHECK(inv.per_degree[1].dim() == 1);
    CHECK(inv.space == groupoid_invariant_forms(g, phi, gc.dga));
}

TEST_CASE("unit groupoid leaves every form invariant") {
    FiniteGroupoid g = unit_groupoid(3);
    CovariantCalculus gc = groupoid_calculus(g, arrow_bijections(g, "unit:3"), 2);
    InvariantForms inv = invariant_forms(gc);
    for (int k = 0; k <= 2; ++k) CHECK(inv.per_degree[k].dim() == static_cast<Index>(gc.dga.graded.component(k).size()));
}

TEST_CASE("Connes-Moscovici calculus over the swap") {
    DGA c = universal_calculus(2, 2);
    HopfAlgebra q = group_algebra(cyclic_group(2));
    CovariantCalculus cm = cm_calculus(q, c, {LinMap::identity(c.dim()), permute_forms(c, 2, {1, 0})});
    CheckReport r = verify_covariant_calculus(cm);
    CHECK(r.ok());
    CHECK(h0_of(cm).dim() == 4);
    CHECK(verify_invariant_forms(cm).ok());
}

TEST_CASE("an action mixing degrees fails only degree preservation") {
    DGA c = universal_calculus(2, 1);
    HopfAlgebra q = group_algebra(cyclic_group(2));
    Scalar I = Scalar::i();
    LinMap phi(4, 4);
    phi.set_col(0, Vec::unit(1) + I * Vec::unit(2) + I * Vec::unit(3));
    phi.set_col(1, Vec::unit(0) - I * Vec::unit(2) - I * Vec::unit(3));
    phi.set_col(2, Vec::unit(3));
    phi.set_col(3, Vec::unit(2));
    CHECK(phi.after(phi) == LinMap::identity(4));
    CovariantCalculus dc = hopf_covariant_calculus(q, c, {LinMap::identity(4), phi});
    CHECK(failing_set(verify_covariant_calculus(dc)) == std::set<std::string>{"action-degree-preserving"});
}

TEST_CASE("finite-set bialgebroid meets the dimension bounds") {
    for (Index n : {2, 3}) {
        FiniteSetBialgebroid f = finite_set_bialgebroid(n);
        CAPTURE(n);
        CHECK(f.h0.dim() >= n * n);
        CHECK(f.H.dim() >= n * n * n);
        CHECK(f.commutant.contains(f.h0));
    }
    // regression values of the exact computation
    FiniteSetBialgebroid f2 = finite_set_bialgebroid(2);
    CHECK(f2.h0.dim() == 5);
    CHECK(f2.H.dim() == 8);
    CHECK(f2.commutant.dim() == 6);
    CHECK_THROWS_AS(finite_set_bialgebroid(1), std::invalid_argument);
}

TEST_CASE("finite-set bialgebroid for two points passes its suite") {
    CheckReport r = verify_finite_set_bialgebroid(finite_set_bialgebroid(2));
    CHECK(r.ok());
    CHECK(r.passed("h0-condition-i"));
    CHECK(r.passed("h0-commutator"));
    CHECK(r.passed("bialgebroid-coassociativity"));
}

TEST_CASE("restricting to a subspace that is not closed under d throws") {
    DGA c = universal_calculus(2, 1);
    std::vector<Subspace> bad{Subspace::span(4, {Vec::unit(0)}), Subspace(4)};
    CHECK_THROWS_AS(restrict_dga(c, bad), std::invalid_argument);
}
