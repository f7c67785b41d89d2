#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "wf/series.hpp"

using namespace wf;

namespace {

std::mt19937 rng(20240711u);

cd rand_cd(double scale = 1.0) {
    std::uniform_real_distribution<double> u(-scale, scale);
    return {u(rng), u(rng)};
}

EpsPoly rand_eps(int deg, double scale = 1.0) {
    EpsPoly p(deg);
    for (int k = 0; k <= deg; ++k) p[k] = rand_cd(scale);
    return p;
}

FormalGerm rand_germ_unit_linear(int deg, int edeg, double scale = 0.5) {
    FormalGerm f(deg, edeg);
    f.at(1) = EpsPoly::constant(1.0, edeg);
    for (int k = 2; k <= deg; ++k) f.at(k) = rand_eps(edeg, scale / k);
    return f;
}

JetXY rand_jet(int D, int edeg, double scale = 0.5) {
    JetXY j(D, edeg);
    for (int a = 0; a <= D; ++a)
        for (int b = 0; a + b <= D; ++b) j.at(a, b) = rand_eps(edeg, scale);
    return j;
}

}  // namespace

TEST_CASE("eps poly basics") {
    EpsPoly e = EpsPoly::variable(4);
    EpsPoly p = EpsPoly::constant(2.0, 4) + e * e;  // 2 + eps^2
    CHECK(p.eval(cd(3.0, 0.0)) == cd(11.0, 0.0));

    EpsPoly inv = p.inverse();
    EpsPoly one = p * inv;
    CHECK(std::abs(one[0] - cd(1.0)) < 1e-14);
    for (int k = 1; k <= 4; ++k) CHECK(std::abs(one[k]) < 1e-14);

    // reversion of eps + eps^2
    EpsPoly a = e + e * e;
    EpsPoly r = a.reverted();
    EpsPoly id = a.compose(r);
    CHECK(std::abs(id[1] - cd(1.0)) < 1e-12);
    for (int k : {0, 2, 3, 4}) CHECK(std::abs(id[k]) < 1e-12);

    EpsPoly q = rand_eps(4);
    CHECK(q.conj_reflect().conj_reflect().max_abs_diff(q) == 0.0);
}

TEST_CASE("exp_eps matches exponential values") {
    EpsPoly ex = exp_eps(3.14, 12);
    CHECK(std::abs(ex.eval(0.1) - std::exp(0.314)) < 1e-12);
}

TEST_CASE("jet arithmetic spec cases") {
    const int D = 4, E = 2;
    JetXY x = JetXY::var_x(D, E), y = JetXY::var_y(D, E);

    // x*y = xy
    JetXY xy = jet_arith(x, y, JetOp::mul);
    CHECK(std::abs(xy.at(1, 1)[0] - cd(1.0)) < 1e-15);
    CHECK(xy.max_abs_diff(x * y) == 0.0);

    // additive identity
    JetXY z(D, E);
    CHECK(jet_arith(x + y, z, JetOp::add).max_abs_diff(x + y) == 0.0);

    // (1+x) * (1-x+x^2-x^3+x^4) == 1 after truncation at D=4
    JetXY one = JetXY::constant(EpsPoly::constant(1.0, E), D, E);
    JetXY a = one + x;
    JetXY b = one - x + x * x - x * x * x + x * x * x * x;
    CHECK(jet_arith(a, b, JetOp::mul).max_abs_diff(one) < 1e-15);

    // degree mismatch rejected
    CHECK_THROWS_AS(jet_arith(JetXY(3, E), JetXY(4, E), JetOp::add), degree_mismatch_error);
}

TEST_CASE("jet unit inverse and composition") {
    const int D = 8, E = 3;
    JetXY one = JetXY::constant(EpsPoly::constant(1.0, E), D, E);
    JetXY u = rand_jet(D, E, 0.3);
    u.at(0, 0) = EpsPoly::constant(1.0, E) + EpsPoly::variable(E) * 0.2;
    JetXY prod = u * u.inverse_unit();
    CHECK(prod.max_abs_diff(one) < 1e-10);

    // compose against pointwise evaluation
    JetXY f = rand_jet(D, E, 0.4);
    JetXY X = JetXY::var_x(D, E) + JetXY::var_x(D, E) * JetXY::var_y(D, E);
    JetXY Y = JetXY::var_y(D, E) * 0.7;
    JetXY g = f.compose(X, Y);
    cd xv(0.01, 0.005), yv(-0.012, 0.002), ev(0.03, -0.01);
    cd lhs = g.eval(xv, yv, ev);
    cd rhs = f.eval(X.eval(xv, yv, ev), Y.eval(xv, yv, ev), ev);
    CHECK(std::abs(lhs - rhs) < 1e-10);  // tail is tiny at these radii
}

TEST_CASE("jet ring properties on random triples") {
    const int D = 6, E = 2;
    for (int trial = 0; trial < 25; ++trial) {
        JetXY a = rand_jet(D, E), b = rand_jet(D, E), c = rand_jet(D, E);
        CHECK((a * b * c).max_abs_diff(a * (b * c)) < 1e-10);
        CHECK(((a + b) * c).max_abs_diff(a * c + b * c) < 1e-10);
        CHECK((a * b).max_abs_diff(b * a) < 1e-12);
    }
}

TEST_CASE("reality involution spec cases") {
    const int D = 4, E = 2;
    EpsPoly eps = EpsPoly::variable(E);
    cd I(0.0, 1.0);

    // P = (eps+i)x, Q = (eps-i)y is a fixed point
    JetXY P = JetXY::monomial(1, 0, eps + EpsPoly::constant(I, E), D, E);
    JetXY Q = JetXY::monomial(0, 1, eps - EpsPoly::constant(I, E), D, E);
    auto img = reality_involution({P, Q});
    CHECK(img.first.max_abs_diff(P) < 1e-15);
    CHECK(img.second.max_abs_diff(Q) < 1e-15);
    CHECK(is_real_pair(P, Q));

    // P = i x^2, Q = 0 is not fixed
    JetXY P2 = JetXY::monomial(2, 0, EpsPoly::constant(I, E), D, E);
    JetXY Q2(D, E);
    CHECK(!is_real_pair(P2, Q2));
    CHECK(reality_involution({P2, Q2}).first.max_abs_diff(P2) > 0.5);

    // zero family fixed
    CHECK(is_real_pair(JetXY(D, E), JetXY(D, E)));

    // involution squared is the identity, exactly
    JetXY A = rand_jet(D, E), B = rand_jet(D, E);
    auto twice = reality_involution(reality_involution({A, B}));
    CHECK(twice.first.max_abs_diff(A) == 0.0);
    CHECK(twice.second.max_abs_diff(B) == 0.0);
}

TEST_CASE("germ composition spec cases") {
    const int D = 4, E = 2;
    FormalGerm id = FormalGerm::identity(D, E);
    FormalGerm g = rand_germ_unit_linear(D, E);
    CHECK(germ_compose(id, g).max_abs_diff(g) == 0.0);

    FormalGerm neg = -id;
    CHECK(germ_compose(neg, neg).max_abs_diff(id) == 0.0);

    // f = x + x^2, g = x + x^3 -> x + x^2 + x^3 + 2x^4
    EpsPoly one = EpsPoly::constant(1.0, E);
    FormalGerm f = FormalGerm::identity(D, E);
    f.at(2) = one;
    FormalGerm h = FormalGerm::identity(D, E);
    h.at(3) = one;
    FormalGerm fg = germ_compose(f, h);
    CHECK(std::abs(fg.at(1)[0] - cd(1.0)) < 1e-15);
    CHECK(std::abs(fg.at(2)[0] - cd(1.0)) < 1e-15);
    CHECK(std::abs(fg.at(3)[0] - cd(1.0)) < 1e-15);
    CHECK(std::abs(fg.at(4)[0] - cd(2.0)) < 1e-15);
}

TEST_CASE("germ inversion spec cases") {
    const int D = 4, E = 2;
    FormalGerm id = FormalGerm::identity(D, E);
    CHECK(germ_invert(id).max_abs_diff(id) == 0.0);
    CHECK(germ_invert(-id).max_abs_diff(-id) == 0.0);

    // f = x + x^2 -> x - x^2 + 2x^3 - 5x^4
    FormalGerm f = FormalGerm::identity(D, E);
    f.at(2) = EpsPoly::constant(1.0, E);
    FormalGerm g = germ_invert(f);
    CHECK(std::abs(g.at(2)[0] - cd(-1.0)) < 1e-14);
    CHECK(std::abs(g.at(3)[0] - cd(2.0)) < 1e-14);
    CHECK(std::abs(g.at(4)[0] - cd(-5.0)) < 1e-14);
    CHECK(germ_compose(g, f).max_abs_diff(id) < 1e-13);

    FormalGerm bad(D, E);  // zero linear coefficient
    bad.at(2) = EpsPoly::constant(1.0, E);
    CHECK_THROWS_AS(germ_invert(bad), non_invertible_error);
}

TEST_CASE("germ invert-compose roundtrip on 1000 random germs") {
    const int D = 8, E = 2;
    FormalGerm id = FormalGerm::identity(D, E);
    double worst = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        FormalGerm f = rand_germ_unit_linear(D, E, 0.4);
        FormalGerm g = germ_invert(f);
        worst = std::max(worst, germ_compose(g, f).max_abs_diff(id));
        worst = std::max(worst, germ_compose(f, g).max_abs_diff(id));
    }
    CHECK(worst < 1e-8);
}
