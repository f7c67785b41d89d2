#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "wf/errors.hpp"

namespace wf {

using cd = std::complex<double>;

// Absolute tolerance used for coefficient equality tests throughout.
inline constexpr double kCoeffTol = 1e-12;

// Default truncation orders: total degree 12 in (x,y) so that terms in
// u = xy are carried to u^6, and degree 6 in the parameter.
inline constexpr int kDefaultXYDeg = 12;
inline constexpr int kDefaultEpsDeg = 6;

// ---------------------------------------------------------------------------
// EpsPoly: truncated polynomial in the unfolding parameter.
// ---------------------------------------------------------------------------
class EpsPoly {
  public:
    explicit EpsPoly(int max_deg = kDefaultEpsDeg);
    static EpsPoly constant(cd value, int max_deg = kDefaultEpsDeg);
    static EpsPoly variable(int max_deg = kDefaultEpsDeg);  // the parameter itself
    static EpsPoly from_coeffs(std::vector<cd> coeffs);

    int max_deg() const { return static_cast<int>(c_.size()) - 1; }
    cd& operator[](int k) { return c_[static_cast<size_t>(k)]; }
    const cd& operator[](int k) const { return c_[static_cast<size_t>(k)]; }
    const std::vector<cd>& coeffs() const { return c_; }

    cd eval(cd eps) const;

    EpsPoly operator-() const;
    EpsPoly& operator+=(const EpsPoly& o);
    EpsPoly& operator-=(const EpsPoly& o);
    EpsPoly operator+(const EpsPoly& o) const;
    EpsPoly operator-(const EpsPoly& o) const;
    EpsPoly operator*(const EpsPoly& o) const;  // truncated product
    EpsPoly operator*(cd s) const;
    EpsPoly& operator*=(cd s);

    // p*(eps) = conj(p(conj eps)): coefficient-wise conjugation.
    EpsPoly conj_reflect() const;
    // Split against the reflection: p = real_part() + i*imag_part(), both
    // fixed by conj_reflect.
    EpsPoly real_part() const;
    EpsPoly imag_part() const;

    bool is_zero(double tol = kCoeffTol) const;
    bool is_real(double tol = kCoeffTol) const;
    double max_abs_diff(const EpsPoly& o) const;

    // Reciprocal of a unit (c0 != 0).
    EpsPoly inverse() const;
    // Square root of a unit with real positive constant term.
    EpsPoly sqrt_unit() const;
    // Substitute q (q(0) = 0) for the parameter.
    EpsPoly compose(const EpsPoly& q) const;
    // Series reversion: p(0) = 0, p'(0) != 0; returns q with q(p) = id.
    EpsPoly reverted() const;
    // Divide by the parameter; requires |c0| <= tol.
    EpsPoly shifted_down(double tol = 1e-9) const;
    EpsPoly derivative() const;

    // Sum of |c_k| radius^k: certified bound for |eps| <= radius.
    double abs_sum(double radius) const;

    std::string str() const;

  private:
    std::vector<cd> c_;
};

EpsPoly operator*(cd s, const EpsPoly& p);

// Truncated exponential of t*eps (as an EpsPoly in eps).
EpsPoly exp_eps(double t, int max_deg);

// ---------------------------------------------------------------------------
// JetXY: truncated bivariate power series with EpsPoly coefficients.
// ---------------------------------------------------------------------------
class JetXY {
  public:
    explicit JetXY(int total_deg = kDefaultXYDeg, int eps_deg = kDefaultEpsDeg);

    int deg() const { return D_; }
    int eps_deg() const { return edeg_; }
    int n_terms() const { return static_cast<int>(c_.size()); }

    EpsPoly& at(int i, int j);
    const EpsPoly& at(int i, int j) const;

    static JetXY monomial(int i, int j, const EpsPoly& coeff, int total_deg, int eps_deg);
    static JetXY var_x(int total_deg = kDefaultXYDeg, int eps_deg = kDefaultEpsDeg);
    static JetXY var_y(int total_deg = kDefaultXYDeg, int eps_deg = kDefaultEpsDeg);
    static JetXY constant(const EpsPoly& c, int total_deg = kDefaultXYDeg,
                          int eps_deg = kDefaultEpsDeg);

    JetXY operator-() const;
    JetXY operator+(const JetXY& o) const;
    JetXY operator-(const JetXY& o) const;
    JetXY operator*(const JetXY& o) const;  // Cauchy product truncated at deg()
    JetXY operator*(const EpsPoly& s) const;
    JetXY operator*(cd s) const;
    JetXY& operator+=(const JetXY& o);
    JetXY& operator-=(const JetXY& o);

    cd eval(cd x, cd y, cd eps) const;

    JetXY dx() const;
    JetXY dy() const;

    // Substitute jets for the two variables (both with the same degrees).
    JetXY compose(const JetXY& X, const JetXY& Y) const;

    // Reciprocal of a unit jet: constant term must be an EpsPoly unit.
    JetXY inverse_unit() const;

    // Reality involution companion: returns J* with J*(x,y,eps) =
    // conj(J(conj y, conj x, conj eps)), i.e. swap (i,j) and conjugate.
    JetXY conj_swap() const;

    bool is_zero(double tol = kCoeffTol) const;
    double max_abs_diff(const JetXY& o) const;
    // Largest |coefficient| over terms of total degree d.
    double degree_norm(int d) const;

  private:
    int D_;
    int edeg_;
    std::vector<EpsPoly> c_;  // triangular, index (i,j) with i+j <= D
    size_t idx(int i, int j) const;
};

// jet_arith per contract: add or multiply, degrees must match.
enum class JetOp { add, mul };
JetXY jet_arith(const JetXY& a, const JetXY& b, JetOp op);

// Reality involution on a field (P,Q): returns (P*,Q*); the field is real
// iff the output equals the input coefficient-wise.
std::pair<JetXY, JetXY> reality_involution(const std::pair<JetXY, JetXY>& v);
bool is_real_pair(const JetXY& P, const JetXY& Q, double tol = 1e-9);

// ---------------------------------------------------------------------------
// FormalGerm: truncated one-variable series fixing the origin.
// ---------------------------------------------------------------------------
class FormalGerm {
  public:
    explicit FormalGerm(int deg = kDefaultXYDeg, int eps_deg = kDefaultEpsDeg);

    int deg() const { return static_cast<int>(c_.size()) - 1; }
    int eps_deg() const { return edeg_; }

    EpsPoly& at(int k) { return c_[static_cast<size_t>(k)]; }
    const EpsPoly& at(int k) const { return c_[static_cast<size_t>(k)]; }

    static FormalGerm identity(int deg, int eps_deg);
    static FormalGerm monomial(int k, const EpsPoly& coeff, int deg, int eps_deg);

    FormalGerm operator-() const;
    FormalGerm operator+(const FormalGerm& o) const;
    FormalGerm operator-(const FormalGerm& o) const;
    FormalGerm operator*(const FormalGerm& o) const;
    FormalGerm operator*(const EpsPoly& s) const;
    FormalGerm operator*(cd s) const;

    cd eval(cd x, cd eps) const;

    // Taylor coefficients of f(g(x)) to the common degree.
    FormalGerm compose(const FormalGerm& g) const;
    // Compositional inverse; linear coefficient must be an EpsPoly unit.
    FormalGerm invert() const;

    FormalGerm conj_reflect() const;  // coefficient-wise conj (real structure)
    bool is_real(double tol = kCoeffTol) const;
    bool is_zero(double tol = kCoeffTol) const;
    double max_abs_diff(const FormalGerm& o) const;

    FormalGerm truncated(int new_deg) const;  // drop or zero-extend
    FormalGerm derivative_x() const;

  private:
    int edeg_;
    std::vector<EpsPoly> c_;  // c_[0] is kept identically zero
};

FormalGerm germ_compose(const FormalGerm& f, const FormalGerm& g);
FormalGerm germ_invert(const FormalGerm& f);

}  // namespace wf
