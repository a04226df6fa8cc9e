#include "gencoh/form.hpp"

#include "doctest.h"

#include "gencoh/gcs.hpp"
#include "support/fixtures.hpp"

using namespace gencoh;
using tests::Rng;

namespace {
const GaussianRational I = GaussianRational::i();
}

TEST_CASE("wedge basics") {
    Form x1 = Form::generator(4, 0);
    Form x2 = Form::generator(4, 1);
    CHECK(wedge(x1, x1).is_zero());
    CHECK(wedge(x2, x1) == Form::monomial(4, 0b0011, GaussianRational(-1)));
    // (x1 + i x4) ^ (i x23) = i x123 - x234
    Form a = x1 + Form::generator(4, 3) * I;
    Form b = Form::monomial(4, 0b0110, I);
    Form expect = Form::monomial(4, 0b0111, I) + Form::monomial(4, 0b1110, GaussianRational(-1));
    CHECK(wedge(a, b) == expect);
}

TEST_CASE("interior product") {
    Vec X2(4), X1(4);
    X2[1] = GaussianRational(1);
    X1[0] = GaussianRational(1);
    CHECK(interior(X2, Form::monomial(4, 0b0111)) ==
          Form::monomial(4, 0b0101, GaussianRational(-1)));
    CHECK(interior(X1, Form::generator(4, 1)).is_zero());
    CHECK(interior(X1, Form::generator(4, 0)) == Form::scalar(4, GaussianRational(1)));
    // antiderivation squares to zero
    Rng rng(11);
    for (int t = 0; t < 40; ++t) {
        Vec v(4);
        for (auto& c : v) c = rng.gaussian();
        Form f = tests::random_form(rng, 4, 2) + tests::random_form(rng, 4, 3);
        CHECK(interior(v, interior(v, f)).is_zero());
    }
}

TEST_CASE("clifford action") {
    Form rho = build_pure_form(tests::kt_spec());
    DoubleVector w(4);
    w.vec(1) = GaussianRational(1);
    w.covec(2) = -I;
    CHECK(clifford(w, rho).is_zero());  // X2 - i x3 annihilates rho

    DoubleVector x1v(4);
    x1v.vec(0) = GaussianRational(1);
    CHECK(clifford(x1v, Form::generator(4, 0)) == Form::scalar(4, GaussianRational(1)));
    DoubleVector x1c(4);
    x1c.covec(0) = GaussianRational(1);
    CHECK(clifford(x1c, Form::scalar(4, GaussianRational(1))) == Form::generator(4, 0));
}

TEST_CASE("clifford relation w.(w.a) = <w,w> a") {
    Rng rng(12);
    for (int t = 0; t < 200; ++t) {
        DoubleVector w(4);
        for (auto& c : w.coords) c = rng.gaussian(2, 2);
        Mask mask = static_cast<Mask>(rng.index(16));
        Form a = Form::monomial(4, mask);
        Form lhs = clifford(w, clifford(w, a));
        Form rhs = a * pairing(w, w);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("exp of two-forms") {
    CHECK(exp_two_form(Form(4), 4) == Form::scalar(4, GaussianRational(1)));
    Form e = exp_two_form(Form::monomial(4, 0b0110, I), 4);
    CHECK(e == Form::scalar(4, GaussianRational(1)) + Form::monomial(4, 0b0110, I));
    Form b = Form::monomial(4, 0b0011) + Form::monomial(4, 0b1100);
    Form expect = Form::scalar(4, GaussianRational(1)) + b + Form::monomial(4, 0b1111);
    CHECK(exp_two_form(b, 4) == expect);
}

TEST_CASE("exp(b) ^ exp(-b) = 1") {
    Rng rng(13);
    for (int t = 0; t < 100; ++t) {
        std::size_t m = 4 + 2 * rng.index(2);
        Form b = tests::random_form(rng, m, 2);
        Form prod = wedge(exp_two_form(b, m), exp_two_form(-b, m));
        CHECK(prod == Form::scalar(m, GaussianRational(1)));
    }
}

TEST_CASE("build_pure_form") {
    // KT: (1 + i x23) ^ (x1 + i x4) = x1 + i x4 + i x123 - x234
    Form rho = build_pure_form(tests::kt_spec());
    Form expect = Form::generator(4, 0) + Form::generator(4, 3) * I +
                  Form::monomial(4, 0b0111, I) + Form::monomial(4, 0b1110, GaussianRational(-1));
    CHECK(rho == expect);

    // symplectic: e^{i omega} with omega = x12 + x34
    Form rho2 = build_pure_form(tests::torus_symplectic_spec());
    Form expect2 = Form::scalar(4, GaussianRational(1)) + Form::monomial(4, 0b0011, I) +
                   Form::monomial(4, 0b1100, I) + Form::monomial(4, 0b1111, GaussianRational(-1));
    CHECK(rho2 == expect2);

    // type n: the exponential of zero leaves Omega itself
    Form rho3 = build_pure_form(tests::torus_complex_spec());
    Form t1 = Form::generator(4, 0) + Form::generator(4, 1) * I;
    Form t2 = Form::generator(4, 2) + Form::generator(4, 3) * I;
    CHECK(rho3 == wedge(t1, t2));
}

TEST_CASE("non-degeneracy") {
    CHECK(check_nondegenerate(tests::kt_spec(), 2));
    CHECK(check_nondegenerate(tests::torus_symplectic_spec(), 2));
    PureFormSpec degenerate;
    degenerate.m = 4;
    degenerate.type_k = 1;
    degenerate.B = Form(4);
    degenerate.omega = Form(4);  // omega^{n-k} = 0
    degenerate.omega_factors = {Form::generator(4, 0) + Form::generator(4, 3) * I};
    CHECK_FALSE(check_nondegenerate(degenerate, 2));
}

TEST_CASE("wedge is graded-commutative and associative") {
    Rng rng(14);
    for (int t = 0; t < 200; ++t) {
        std::size_t m = 4;
        std::size_t da = rng.index(m + 1), db = rng.index(m + 1), dc = rng.index(m + 1);
        Form a = tests::random_form(rng, m, da);
        Form b = tests::random_form(rng, m, db);
        Form c = tests::random_form(rng, m, dc);
        Form ab = wedge(a, b);
        Form ba = wedge(b, a);
        if (da * db % 2 == 1)
            CHECK(ab == -ba);
        else
            CHECK(ab == ba);
        CHECK(wedge(ab, c) == wedge(a, wedge(b, c)));
    }
}

TEST_CASE("CE d is an odd derivation for wedge") {
    Rng rng(15);
    LieAlgebra g = tests::kt_algebra();
    GradedComplex cx = ce_differential(g);
    for (int t = 0; t < 200; ++t) {
        std::size_t da = rng.index(4), db = rng.index(4);
        Form a = tests::random_form(rng, 4, da);
        Form b = tests::random_form(rng, 4, db);
        Form lhs = cx.apply(wedge(a, b));
        Form rhs = wedge(cx.apply(a), b);
        Form adb = wedge(a, cx.apply(b));
        rhs = (da % 2 == 1) ? rhs - adb : rhs + adb;
        CHECK(lhs == rhs);
    }
}
