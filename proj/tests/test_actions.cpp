#include "halg/actions.hpp"
#include "halg/calculus.hpp"

#include <doctest.h>

using namespace halg;

namespace {

LinMap normalized_sum(Index n) {
    LinMap tau(1, n);
    for (Index i = 0; i < n; ++i) tau.set_col(i, Vec::unit(0, Scalar::frac(1, n)));
    return tau;
}

}  // namespace

TEST_CASE("base module of a convolution algebroid is a module *-algebra") {
    for (const char* p : {"unit:3", "pair:2", "pair:3", "action:Z2:swap2"}) {
        StarHopfAlgebroid h = convolution_algebroid(groupoid_by_name(p));
        HModuleAlgebra b = base_module(h);
        CAPTURE(p);
        CHECK(verify_module(h.core, b.module).ok());
        CHECK(verify_h_module_algebra(h, b).ok());
        CHECK(verify_invariants(h, b).ok());
        CHECK(conjugate_checks(h, b).ok());
        CHECK(unit_constraints(h, b.module).ok());
    }
}

TEST_CASE("invariants of C(X) under pair and unit groupoids") {
    StarHopfAlgebroid pair3 = convolution_algebroid(pair_groupoid(3));
    CHECK(invariants(pair3.core, base_module(pair3).module).dim() == 1);
    StarHopfAlgebroid unit3 = convolution_algebroid(unit_groupoid(3));
    CHECK(invariants(unit3.core, base_module(unit3).module).dim() == 3);
}

TEST_CASE("groupoid representations and their invariant sections") {
    for (const char* p : {"pair:3", "action:Z2:swap2", "point:S3"}) {
        FiniteGroupoid g = groupoid_by_name(p);
        GroupoidRep rep = trivial_line_bundle(g);
        CAPTURE(p);
        CHECK(validate_rep(g, rep).empty());
        CHECK(groupoid_invariants_match(g, rep).ok());
        StarHopfAlgebroid h = convolution_algebroid(g);
        CHECK(verify_module(h.core, groupoid_rep_to_module(g, rep)).ok());
    }
}

TEST_CASE("normalized point sum is right invariant and gives the adjoint identity") {
    for (const char* p : {"unit:3", "pair:2"}) {
        StarHopfAlgebroid h = convolution_algebroid(groupoid_by_name(p));
        HModuleAlgebra b = base_module(h);
        LinMap tau = normalized_sum(b.module.dim());
        DenseMatrix gram = state_gram(StarAlgebra{b.alg, b.star}, tau);
        CheckReport r = adjoint_check(h, AdjointData{b.module, gram, b.module, tau});
        CAPTURE(p);
        CHECK(r.passed("right-invariance"));
        CHECK(r.passed("adjoint-identity"));
    }
}

TEST_CASE("a non-invariant state skips the adjoint identity") {
    StarHopfAlgebroid h = convolution_algebroid(pair_groupoid(2));
    HModuleAlgebra b = base_module(h);
    LinMap tau(1, 2);
    tau.set_col(0, Vec::unit(0));
    DenseMatrix gram = state_gram(StarAlgebra{b.alg, b.star}, tau);
    CheckReport r = adjoint_check(h, AdjointData{b.module, gram, b.module, tau});
    CHECK(r.find("right-invariance")->status == Status::fail);
    CHECK(r.find("adjoint-identity")->status == Status::skip);
}

TEST_CASE("monoidal product of base modules over pair:2") {
    StarHopfAlgebroid h = convolution_algebroid(pair_groupoid(2));
    HModule m = base_module(h).module;
    ProductModule pm = monoidal_product(h.core, m, m);
    CHECK(pm.module.dim() == 2);
    CHECK(verify_module(h.core, pm.module).ok());
}
