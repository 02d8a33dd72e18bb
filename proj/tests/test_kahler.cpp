#include "halg/kahler.hpp"

#include <doctest.h>

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

}  // namespace

TEST_CASE("toy Kähler cell: Hodge star values") {
    KahlerStructure k = toy_kahler();
    HermitianData hd = hermitian_data(k);
    const Scalar I = Scalar::i();
    // basis 1, e10, e01, e10∧e01 and κ = i e10∧e01
    Vec kappa = Vec::unit(3, I);
    CHECK(hd.hodge.apply(Vec::unit(0)) == kappa);
    CHECK(hd.hodge.apply(kappa) == Vec::unit(0));
    CHECK(hd.hodge.apply(Vec::unit(1)) == Vec::unit(1, -I));
    CHECK(hd.hodge.apply(Vec::unit(2)) == Vec::unit(2, I));
    for (Index i = 0; i < 4; ++i)
        for (Index j = 0; j < 4; ++j) CHECK(hd.gram[i][j] == Scalar(i == j ? 1 : 0));
}

TEST_CASE("toy Kähler cell: every suite passes, also on invariant forms") {
    for (const KahlerStructure& k : {toy_kahler(), covariant_toy_kahler()}) {
        CHECK(verify_dga(k.dga).ok());
        CHECK(verify_complex_structure(k.dga, k.bg, k.action ? &*k.action : nullptr).ok());
        CHECK(verify_hermitian(k).ok());
        CHECK(verify_laplacians(k).ok());
        CHECK(kahler_check(k).ok());
    }
    CheckReport r = kahler_check(covariant_toy_kahler());
    CHECK(r.passed("invariant-kahler-closed"));
    CHECK(r.passed("invariant-hodge-square"));
}

TEST_CASE("property: ⋆² = (-1)^k, ⋆ is unitary and the Laplacian is symmetric") {
    std::mt19937 rng(5);
    for (const KahlerStructure& k : {toy_kahler(), two_point_kahler(), nonclosed_hermitian()}) {
        HermitianData hd = hermitian_data(k);
        Laplacians lp = laplacians(k, hd);
        for (int trial = 0; trial < 8; ++trial) {
            Vec x = random_element(rng, k.dga.dim()), y = random_element(rng, k.dga.dim());
            for (int deg = 0; deg <= k.dga.graded.top(); ++deg) {
                Vec w;
                for (Index i : k.dga.graded.component(deg)) w.push_back(i, x.get(i));
                CHECK(hd.hodge.apply(hd.hodge.apply(w)) == (deg % 2 ? -1 : 1) * w);
            }
            CHECK(inner(hd.gram, hd.hodge.apply(x), hd.hodge.apply(y)) == inner(hd.gram, x, y));
            CHECK(inner(hd.gram, lp.lap_d.apply(x), y) == inner(hd.gram, x, lp.lap_d.apply(y)));
            CHECK(inner(hd.gram, k.dga.d.apply(x), y) == inner(hd.gram, x, lp.dstar.apply(y)));
        }
    }
}

TEST_CASE("two-point calculus: Laplacian on functions and metric") {
    KahlerStructure k = two_point_kahler();
    HermitianData hd = hermitian_data(k);
    Laplacians lp = laplacians(k, hd);
    CHECK(lp.lap_d.apply(Vec::unit(0)) == Vec::unit(0, 2) + Vec::unit(1, -2));
    CHECK(lp.lap_d.apply(Vec::unit(1)) == Vec::unit(0, -2) + Vec::unit(1, 2));
    CHECK(hd.gram[0][0] == Scalar::frac(1, 2));
    CHECK(hd.gram[0][1] == Scalar(0));
    CHECK(kahler_check(k).ok());
    CHECK(verify_laplacians(k).ok());
}

TEST_CASE("non-closed σ fails only the closedness check") {
    KahlerStructure k = nonclosed_hermitian();
    CHECK(verify_complex_structure(k.dga, k.bg).ok());
    CHECK(verify_hermitian(k).ok());
    CHECK(failing_set(kahler_check(k)) == std::set<std::string>{"kahler-closed"});
}

TEST_CASE("d leaking out of the bidegrees fails integrability") {
    auto [c, bg] = leaking_bigrading();
    CHECK(verify_dga(c).ok());
    CheckReport r = verify_complex_structure(c, bg);
    CHECK(failing_set(r) == std::set<std::string>{"integrable"});
    CHECK_FALSE(r.errored());
}

TEST_CASE("σ = 0 is not almost symplectic") {
    KahlerStructure k = toy_kahler();
    k.sigma = Vec();
    CHECK_THROWS_WITH_AS(hermitian_data(k), doctest::Contains("not almost symplectic at k=0"), std::invalid_argument);
    CHECK(verify_hermitian(k).find("lefschetz-bijective")->status == Status::fail);
}

TEST_CASE("Lefschetz decomposition of the four-generator algebra") {
    HermitianData hd = hermitian_data(nonclosed_hermitian());
    CHECK(hd.n == 2);
    // primitive parts in degrees 0..2: 1, 4, 5
    Index p0 = 0, p1 = 0, p2 = 0;
    for (const auto& [b, s] : hd.primitives) {
        if (b.first + b.second == 0) p0 += s.dim();
        if (b.first + b.second == 1) p1 += s.dim();
        if (b.first + b.second == 2) p2 += s.dim();
    }
    CHECK(p0 == 1);
    CHECK(p1 == 4);
    CHECK(p2 == 5);
}
