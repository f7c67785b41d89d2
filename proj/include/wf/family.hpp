#pragma once

#include <optional>
#include <utility>

#include "wf/series.hpp"

namespace wf {

// Real analytic unfolding of a weak focus, in the standard linear frame:
//   u' = alpha(e) u - beta(e) v + b(u,v),   v' = beta(e) u + alpha(e) v + c(u,v)
// with b, c collecting the terms of total degree >= 2.
struct RealFamily {
    EpsPoly alpha;
    EpsPoly beta;
    JetXY b;
    JetXY c;

    // Throws when coefficients are not real, alpha(0) != 0, or beta(0) = 0.
    void validate() const;
    bool generic() const;  // alpha'(0) != 0
};

// Complexified family x' = P(x,y), y' = Q(x,y) with the conjugate-swap
// real structure.  After preparation the linear part is (e+i)x, (e-i)y
// and s carries the sign of the resonant cubic coefficient.
struct VectorFieldFamily {
    JetXY P;
    JetXY Q;
    bool is_real = false;
    int s = 0;  // 0 until prepare_cubic has run

    // Coordinate change accumulated by preparation: old coords as jets in
    // the prepared coords.  Lets callers map sections and points back.
    std::optional<std::pair<JetXY, JetXY>> prep_change;

    // Canonical parameter as a series in the family's original parameter
    // (identity when the input was already normalized).
    EpsPoly param_map;

    void require_elliptic_linear(double tol = 1e-9) const;
};

// Substitute rho(e) for the parameter in every coefficient.
JetXY subst_param(const JetXY& J, const EpsPoly& rho);

// Pushforward of the field (P,Q) under the change (x,y) = Phi(x~,y~):
// returns (DPhi)^{-1} (V o Phi).  Phi must be a jet pair with unit Jacobian
// determinant at the origin.
std::pair<JetXY, JetXY> pushforward(const JetXY& P, const JetXY& Q, const JetXY& Phi1,
                                    const JetXY& Phi2);

// Complexification: substitutes x = u+iv, y = u-iv, rescales time by beta,
// and takes the rescaled trace as the new parameter, so the linear part
// becomes (e+i)x, (e-i)y.
VectorFieldFamily complexify(const RealFamily& rf);

// Removes all non-resonant terms of degree 2 and 3 by a polynomial change
// of coordinates (stored in the result), and reads off the focus sign from
// the resonant cubic coefficient.
std::pair<VectorFieldFamily, int> prepare_cubic(const VectorFieldFamily& v);

}  // namespace wf
