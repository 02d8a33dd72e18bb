#include "halg/constructors.hpp"
#include "halg/hopf.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace halg;

namespace {

std::set<std::string> failing_set(const CheckReport& r) {
    auto f = r.failing();
    return {f.begin(), f.end()};
}

Vec random_element(std::mt19937& rng, Index dim) {
    std::uniform_int_distribution<int> v(-2, 2);
    Vec x;
    for (Index i = 0; i < dim; ++i) x.push_back(i, Scalar(v(rng), v(rng)));
    return x;
}

// Number of composable pairs (g, h) with t(g) = t(h), counted straight from the tables.
Index target_fibre_pairs(const FiniteGroupoid& g) {
    Index total = 0;
    for (int x = 0; x < g.object_count(); ++x) {
        Index c = std::count(g.tgt.begin(), g.tgt.end(), x);
        total += c * c;
    }
    return total;
}

}  // namespace

TEST_CASE("groupoid presets validate") {
    for (const char* p : {"unit:3", "pair:2", "pair:3", "point:Z2", "point:S3", "action:Z2:swap2", "action:Z3:rot3"}) {
        CAPTURE(p);
        CHECK(validate_groupoid(groupoid_by_name(p)).empty());
    }
    CHECK_THROWS_AS(groupoid_by_name("pair:x"), std::invalid_argument);
    CHECK_THROWS_AS(groupoid_by_name("point:Q8"), std::invalid_argument);
}

TEST_CASE("a corrupted composition table is rejected") {
    FiniteGroupoid g = pair_groupoid(2);
    std::swap(g.comp[0], g.comp[1]);
    CHECK_FALSE(validate_groupoid(g).empty());
    CHECK_THROWS_AS(convolution_algebroid(g), std::invalid_argument);
}

TEST_CASE("C(X) balanced over itself has dimension |X|") {
    for (Index n : {1, 2, 3, 4}) {
        auto a = std::make_shared<const Algebra>(function_algebra(n).alg);
        Bimodule m = regular_bimodule(a);
        CHECK(balanced_tensor(m, m).quot.dim == n);
    }
}

TEST_CASE("H⊗_{A_l}H of a convolution algebroid counts target-fibre pairs") {
    for (const char* p : {"pair:2", "pair:3", "unit:3", "point:S3", "action:Z2:swap2"}) {
        FiniteGroupoid g = groupoid_by_name(p);
        StarHopfAlgebroid h = convolution_algebroid(g);
        CAPTURE(p);
        CHECK(left_tensor(h.core.left).materialize({}).dim == target_fibre_pairs(g));
    }
    StarHopfAlgebroid pair2 = convolution_algebroid(pair_groupoid(2));
    CHECK(left_tensor(pair2.core.left).materialize({}).dim == 8);
}

TEST_CASE("convolution algebroids pass every structural suite") {
    for (const char* p : {"unit:3", "pair:2", "point:Z2", "action:Z2:swap2"}) {
        StarHopfAlgebroid h = convolution_algebroid(groupoid_by_name(p));
        CAPTURE(p);
        CHECK(verify_left_bialgebroid(h.core.left).ok());
        CHECK(verify_right_bialgebroid(h.core.right).ok());
        CHECK(verify_hopf(h.core).ok());
        CHECK(derived_identities(h.core).ok());
        CHECK(verify_star(h).ok());
    }
}

TEST_CASE("counit and antipode are unique on pair:2 and point:Z2") {
    for (const char* p : {"pair:2", "point:Z2"}) {
        StarHopfAlgebroid h = convolution_algebroid(groupoid_by_name(p));
        CAPTURE(p);
        CHECK(counit_uniqueness(h.core.left).passed("counit-unique"));
        CHECK(counit_uniqueness(h.core.right).passed("counit-unique"));
        CHECK(antipode_uniqueness(h.core).ok());
    }
}

TEST_CASE("Connes-Moscovici algebroid of Z2 acting on C(2) by the swap") {
    HopfAlgebra q = group_algebra(cyclic_group(2));
    StarAlgebra a = function_algebra(2);
    StarHopfAlgebroid cm = connes_moscovici(q, a, permutation_action(q, action_by_name(cyclic_group(2), "swap2")));
    CHECK(cm.core.H().dim() == 8);
    CHECK(verify_left_bialgebroid(cm.core.left).ok());
    CHECK(verify_right_bialgebroid(cm.core.right).ok());
    CheckReport hopf = verify_hopf(cm.core);
    CHECK(hopf.ok());
    CHECK(hopf.passed("antipode-axiom-left"));
    CHECK(derived_identities(cm.core).ok());
    CHECK(verify_star(cm).ok());
}

TEST_CASE("degenerate Connes-Moscovici algebroids are the enveloping algebroid and Q") {
    StarAlgebra a = function_algebra(2);
    HopfAlgebra k = trivial_hopf_algebra();
    CHECK(check_isomorphism(connes_moscovici(k, a, trivial_action(k, a)), enveloping_algebroid(a), LinMap::identity(4),
                            LinMap::identity(2), LinMap::identity(2))
              .ok());
    HopfAlgebra q = group_algebra(cyclic_group(2));
    StarAlgebra g = ground_star_algebra();
    CHECK(check_isomorphism(connes_moscovici(q, g, trivial_action(q, g)), hopf_algebra_algebroid(q), LinMap::identity(2),
                            LinMap::identity(1), LinMap::identity(1))
              .ok());
}

TEST_CASE("a wrong isomorphism candidate is rejected") {
    StarAlgebra a = function_algebra(2);
    HopfAlgebra k = trivial_hopf_algebra();
    LinMap swap(4, 4);
    for (Index i = 0; i < 4; ++i) swap.set_col(i, Vec::unit(3 - i));
    CHECK_FALSE(check_isomorphism(connes_moscovici(k, a, trivial_action(k, a)), enveloping_algebroid(a), swap,
                                  LinMap::identity(2), LinMap::identity(2))
                    .ok());
}

TEST_CASE("broken antipode fails exactly the two antipode axioms") {
    StarHopfAlgebroid h = convolution_algebroid(pair_groupoid(3));
    const auto& labels = h.core.H().labels();
    Index i12 = std::find(labels.begin(), labels.end(), "(1,2)") - labels.begin();
    Index i21 = std::find(labels.begin(), labels.end(), "(2,1)") - labels.begin();
    h.core.S.set_col(i12, Vec::unit(i21, 2));
    CHECK(failing_set(verify_hopf(h.core)) == std::set<std::string>{"antipode-axiom-left", "antipode-axiom-right"});
}

TEST_CASE("swapped counits break the left counit axioms") {
    StarHopfAlgebroid h = convolution_algebroid(pair_groupoid(3));
    std::swap(h.core.left.eps, h.core.right.eps);
    CHECK(failing_set(verify_left_bialgebroid(h.core.left)) ==
          std::set<std::string>{"counit-bimodule-map", "counit-left", "counit-right", "counit-character"});
}

TEST_CASE("a linear star is caught by the antilinearity check") {
    StarHopfAlgebroid h = convolution_algebroid(point_groupoid(cyclic_group(2)));
    CHECK(failing_set(verify_star(StarAlgebra{h.core.H(), h.star_H.with_antilinear(false)})) ==
          std::set<std::string>{"star-antilinear"});
}

TEST_CASE("property: antipode is antimultiplicative and the coproduct multiplicative on random elements") {
    std::mt19937 rng(4242);
    for (const char* p : {"pair:3", "action:Z2:swap2", "point:S3"}) {
        StarHopfAlgebroid h = convolution_algebroid(groupoid_by_name(p));
        const Algebra& H = h.core.H();
        TensorQuotient tq = left_tensor(h.core.left);
        for (int trial = 0; trial < 10; ++trial) {
            Vec x = random_element(rng, H.dim()), y = random_element(rng, H.dim());
            CAPTURE(p);
            CHECK(h.core.S.apply(H.mul(x, y)) == H.mul(h.core.S.apply(y), h.core.S.apply(x)));
            Vec lhs = h.core.left.delta.apply(H.mul(x, y));
            Vec rhs = factorwise_mul(h.core.left.delta.apply(x), h.core.left.delta.apply(y), {&H, &H});
            CHECK(tq.equivalent(lhs, rhs));
            // (x y)* = y* x*
            CHECK(h.star_H.apply(H.mul(x, y)) == H.mul(h.star_H.apply(y), h.star_H.apply(x)));
        }
    }
}
