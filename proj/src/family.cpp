#include "wf/family.hpp"

#include <cmath>

namespace wf {

namespace {

const cd kI(0.0, 1.0);

bool jet_is_real(const JetXY& j, double tol = 1e-10) {
    for (int a = 0; a <= j.deg(); ++a)
        for (int b = 0; a + b <= j.deg(); ++b)
            if (!j.at(a, b).is_real(tol)) return false;
    return true;
}

}  // namespace

void RealFamily::validate() const {
    if (!alpha.is_real(1e-10) || !beta.is_real(1e-10) || !jet_is_real(b) || !jet_is_real(c))
        throw validation_error("RealFamily: coefficients must be real");
    if (std::abs(alpha[0]) > 1e-10)
        throw validation_error("RealFamily: alpha(0) must vanish (weak focus)");
    if (std::abs(beta[0]) < 1e-10) throw not_elliptic_error();
    for (int d = 0; d <= 1; ++d)
        if (b.degree_norm(d) > 1e-12 || c.degree_norm(d) > 1e-12)
            throw validation_error("RealFamily: b, c must start at degree 2");
}

bool RealFamily::generic() const { return std::abs(alpha[1]) > 1e-10; }

void VectorFieldFamily::require_elliptic_linear(double tol) const {
    const int E = P.eps_deg();
    EpsPoly lam = EpsPoly::variable(E) + EpsPoly::constant(kI, E);
    EpsPoly mu = EpsPoly::variable(E) - EpsPoly::constant(kI, E);
    if (P.at(1, 0).max_abs_diff(lam) > tol || Q.at(0, 1).max_abs_diff(mu) > tol ||
        !P.at(0, 1).is_zero(tol) || !Q.at(1, 0).is_zero(tol) || !P.at(0, 0).is_zero(tol) ||
        !Q.at(0, 0).is_zero(tol))
        throw validation_error("field linear part is not (e+i)x, (e-i)y");
}

JetXY subst_param(const JetXY& J, const EpsPoly& rho) {
    JetXY r(J.deg(), J.eps_deg());
    for (int a = 0; a <= J.deg(); ++a)
        for (int b = 0; a + b <= J.deg(); ++b) r.at(a, b) = J.at(a, b).compose(rho);
    return r;
}

std::pair<JetXY, JetXY> pushforward(const JetXY& P, const JetXY& Q, const JetXY& Phi1,
                                    const JetXY& Phi2) {
    JetXY p = P.compose(Phi1, Phi2);
    JetXY q = Q.compose(Phi1, Phi2);
    JetXY a = Phi1.dx(), b = Phi1.dy(), c = Phi2.dx(), d = Phi2.dy();
    JetXY det = a * d - b * c;
    JetXY inv_det = det.inverse_unit();
    return {(d * p - b * q) * inv_det, (a * q - c * p) * inv_det};
}

VectorFieldFamily complexify(const RealFamily& rf) {
    rf.validate();
    if (!rf.generic()) throw non_generic_error();

    const int D = rf.b.deg();
    const int E = rf.b.eps_deg();
    JetXY x = JetXY::var_x(D, E), y = JetXY::var_y(D, E);

    // u = (x+y)/2, v = (x-y)/2i on the complexified space.
    JetXY U = (x + y) * cd(0.5);
    JetXY V = (x - y) * (cd(0.5) / kI);

    JetXY B = rf.b.compose(U, V);
    JetXY C = rf.c.compose(U, V);

    JetXY P = x * (rf.alpha + rf.beta * kI) + B + C * kI;
    JetXY Q = y * (rf.alpha - rf.beta * kI) + B - C * kI;

    // Time rescale t -> beta t, then take alpha/beta as the new parameter.
    EpsPoly inv_beta = rf.beta.inverse();
    P = P * inv_beta;
    Q = Q * inv_beta;
    EpsPoly a = rf.alpha * inv_beta;  // real part of the rescaled eigenvalue
    EpsPoly rho = a.reverted();
    P = subst_param(P, rho);
    Q = subst_param(Q, rho);

    VectorFieldFamily out;
    out.P = P;
    out.Q = Q;
    out.param_map = a;
    out.is_real = is_real_pair(P, Q, 1e-9);
    out.require_elliptic_linear();
    return out;
}

namespace {

// Homological divisor for the x-component at monomial x^a y^b:
// (a-1)(e+i) + b(e-i); invertible unless a = b+1.
EpsPoly divisor_x(int a, int b, int E) {
    return EpsPoly::variable(E) * static_cast<double>(a + b - 1) +
           EpsPoly::constant(kI * static_cast<double>(a - 1 - b), E);
}

EpsPoly divisor_y(int a, int b, int E) {
    return EpsPoly::variable(E) * static_cast<double>(a + b - 1) +
           EpsPoly::constant(kI * static_cast<double>(a - b + 1), E);
}

// Remove every non-resonant monomial of total degree d from (P,Q) by one
// polynomial change; returns the change used, or nullopt when the slice was
// already clean.
std::optional<std::pair<JetXY, JetXY>> kill_degree(JetXY& P, JetXY& Q, int d) {
    const int D = P.deg(), E = P.eps_deg();
    JetXY h1(D, E), h2(D, E);
    bool any = false;
    for (int a = 0; a <= d; ++a) {
        int b = d - a;
        if (a != b + 1 && !P.at(a, b).is_zero()) {
            h1.at(a, b) = P.at(a, b) * divisor_x(a, b, E).inverse();
            any = true;
        }
        if (b != a + 1 && !Q.at(a, b).is_zero()) {
            h2.at(a, b) = Q.at(a, b) * divisor_y(a, b, E).inverse();
            any = true;
        }
    }
    if (!any) return std::nullopt;
    JetXY Phi1 = JetXY::var_x(D, E) + h1;
    JetXY Phi2 = JetXY::var_y(D, E) + h2;
    auto pq = pushforward(P, Q, Phi1, Phi2);
    P = pq.first;
    Q = pq.second;
    return std::make_pair(Phi1, Phi2);
}

}  // namespace

std::pair<VectorFieldFamily, int> prepare_cubic(const VectorFieldFamily& v) {
    v.require_elliptic_linear();
    VectorFieldFamily out = v;
    const int D = v.P.deg(), E = v.P.eps_deg();

    JetXY Phi1 = JetXY::var_x(D, E), Phi2 = JetXY::var_y(D, E);
    bool moved = false;
    for (int d = 2; d <= 3; ++d) {
        auto change = kill_degree(out.P, out.Q, d);
        if (change) {
            Phi1 = Phi1.compose(change->first, change->second);
            Phi2 = Phi2.compose(change->first, change->second);
            moved = true;
        }
    }

    const cd res = out.P.at(2, 1)[0];  // coefficient of x*(xy) at e = 0
    if (std::abs(res.real()) < 1e-10)
        throw order_error("resonant cubic coefficient has vanishing real part: order > 1");
    const int s = res.real() > 0 ? 1 : -1;

    out.s = s;
    if (v.prep_change) {
        out.prep_change = moved ? std::make_pair(v.prep_change->first.compose(Phi1, Phi2),
                                                 v.prep_change->second.compose(Phi1, Phi2))
                                : *v.prep_change;
    } else {
        out.prep_change = {Phi1, Phi2};
    }
    out.is_real = is_real_pair(out.P, out.Q, 1e-9);
    return {out, s};
}

}  // namespace wf
