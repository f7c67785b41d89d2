#include "wf/series.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace wf {

// ---------------------------------------------------------------------------
// EpsPoly
// ---------------------------------------------------------------------------

EpsPoly::EpsPoly(int max_deg) : c_(static_cast<size_t>(max_deg) + 1, cd(0.0, 0.0)) {
    if (max_deg < 0) throw validation_error("EpsPoly degree must be >= 0");
}

EpsPoly EpsPoly::constant(cd value, int max_deg) {
    EpsPoly p(max_deg);
    p.c_[0] = value;
    return p;
}

EpsPoly EpsPoly::variable(int max_deg) {
    if (max_deg < 1) throw validation_error("EpsPoly::variable needs degree >= 1");
    EpsPoly p(max_deg);
    p.c_[1] = 1.0;
    return p;
}

EpsPoly EpsPoly::from_coeffs(std::vector<cd> coeffs) {
    if (coeffs.empty()) throw validation_error("EpsPoly needs at least one coefficient");
    EpsPoly p(static_cast<int>(coeffs.size()) - 1);
    p.c_ = std::move(coeffs);
    return p;
}

cd EpsPoly::eval(cd eps) const {
    cd res = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) res = res * eps + *it;
    return res;
}

EpsPoly EpsPoly::operator-() const {
    EpsPoly r(*this);
    for (auto& v : r.c_) v = -v;
    return r;
}

static void check_same_deg(const EpsPoly& a, const EpsPoly& b) {
    if (a.max_deg() != b.max_deg()) throw degree_mismatch_error();
}

EpsPoly& EpsPoly::operator+=(const EpsPoly& o) {
    check_same_deg(*this, o);
    for (size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
    return *this;
}

EpsPoly& EpsPoly::operator-=(const EpsPoly& o) {
    check_same_deg(*this, o);
    for (size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
    return *this;
}

EpsPoly EpsPoly::operator+(const EpsPoly& o) const {
    EpsPoly r(*this);
    r += o;
    return r;
}

EpsPoly EpsPoly::operator-(const EpsPoly& o) const {
    EpsPoly r(*this);
    r -= o;
    return r;
}

EpsPoly EpsPoly::operator*(const EpsPoly& o) const {
    check_same_deg(*this, o);
    const int n = max_deg();
    EpsPoly r(n);
    for (int i = 0; i <= n; ++i) {
        if (c_[static_cast<size_t>(i)] == cd(0.0)) continue;
        for (int j = 0; j + i <= n; ++j)
            r.c_[static_cast<size_t>(i + j)] += c_[static_cast<size_t>(i)] * o.c_[static_cast<size_t>(j)];
    }
    return r;
}

EpsPoly EpsPoly::operator*(cd s) const {
    EpsPoly r(*this);
    r *= s;
    return r;
}

EpsPoly& EpsPoly::operator*=(cd s) {
    for (auto& v : c_) v *= s;
    return *this;
}

EpsPoly operator*(cd s, const EpsPoly& p) { return p * s; }

EpsPoly EpsPoly::conj_reflect() const {
    EpsPoly r(*this);
    for (auto& v : r.c_) v = std::conj(v);
    return r;
}

EpsPoly EpsPoly::real_part() const {
    EpsPoly r(max_deg());
    for (int k = 0; k <= max_deg(); ++k) r[k] = c_[static_cast<size_t>(k)].real();
    return r;
}

EpsPoly EpsPoly::imag_part() const {
    EpsPoly r(max_deg());
    for (int k = 0; k <= max_deg(); ++k) r[k] = c_[static_cast<size_t>(k)].imag();
    return r;
}

bool EpsPoly::is_zero(double tol) const {
    for (const auto& v : c_)
        if (std::abs(v) > tol) return false;
    return true;
}

bool EpsPoly::is_real(double tol) const {
    for (const auto& v : c_)
        if (std::abs(v.imag()) > tol) return false;
    return true;
}

double EpsPoly::max_abs_diff(const EpsPoly& o) const {
    check_same_deg(*this, o);
    double m = 0.0;
    for (size_t k = 0; k < c_.size(); ++k) m = std::max(m, std::abs(c_[k] - o.c_[k]));
    return m;
}

EpsPoly EpsPoly::inverse() const {
    if (std::abs(c_[0]) < kCoeffTol)
        throw non_invertible_error("EpsPoly::inverse: constant term vanishes");
    const int n = max_deg();
    EpsPoly r(n);
    r[0] = 1.0 / c_[0];
    for (int k = 1; k <= n; ++k) {
        cd s = 0.0;
        for (int j = 1; j <= k; ++j) s += c_[static_cast<size_t>(j)] * r[k - j];
        r[k] = -s / c_[0];
    }
    return r;
}

EpsPoly EpsPoly::sqrt_unit() const {
    if (!(c_[0].real() > 0.0) || std::abs(c_[0].imag()) > 1e-9)
        throw non_invertible_error("EpsPoly::sqrt_unit: constant term not positive real");
    const int n = max_deg();
    EpsPoly r(n);
    r[0] = std::sqrt(c_[0].real());
    for (int k = 1; k <= n; ++k) {
        cd s = 0.0;
        for (int j = 1; j < k; ++j) s += r[j] * r[k - j];
        r[k] = (c_[static_cast<size_t>(k)] - s) / (2.0 * r[0]);
    }
    return r;
}

EpsPoly EpsPoly::compose(const EpsPoly& q) const {
    check_same_deg(*this, q);
    if (std::abs(q[0]) > kCoeffTol)
        throw validation_error("EpsPoly::compose: inner series must vanish at 0");
    const int n = max_deg();
    EpsPoly r = EpsPoly::constant(c_[static_cast<size_t>(n)], n);
    for (int k = n - 1; k >= 0; --k) {
        r = r * q;
        r[0] += c_[static_cast<size_t>(k)];
    }
    return r;
}

EpsPoly EpsPoly::reverted() const {
    if (std::abs(c_[0]) > kCoeffTol)
        throw validation_error("EpsPoly::reverted: series must vanish at 0");
    if (std::abs(c_[1]) < kCoeffTol)
        throw non_invertible_error("EpsPoly::reverted: linear coefficient vanishes");
    const int n = max_deg();
    // Newton-style order raising: q <- q - (p(q) - id)/p'(q), coefficientwise.
    EpsPoly q(n);
    q[1] = 1.0 / c_[1];
    for (int pass = 0; pass < n; ++pass) {
        EpsPoly pq = compose(q);
        pq[1] -= 1.0;  // p(q) - id
        EpsPoly dq = derivative().compose(q);
        q -= pq * dq.inverse();
    }
    return q;
}

EpsPoly EpsPoly::shifted_down(double tol) const {
    if (std::abs(c_[0]) > tol)
        throw numeric_error("EpsPoly::shifted_down: constant term not negligible");
    const int n = max_deg();
    EpsPoly r(n);
    for (int k = 1; k <= n; ++k) r[k - 1] = c_[static_cast<size_t>(k)];
    return r;
}

EpsPoly EpsPoly::derivative() const {
    const int n = max_deg();
    EpsPoly r(n);
    for (int k = 1; k <= n; ++k) r[k - 1] = c_[static_cast<size_t>(k)] * static_cast<double>(k);
    return r;
}

double EpsPoly::abs_sum(double radius) const {
    double s = 0.0, rk = 1.0;
    for (const auto& v : c_) {
        s += std::abs(v) * rk;
        rk *= radius;
    }
    return s;
}

std::string EpsPoly::str() const {
    std::ostringstream os;
    os << "[";
    for (size_t k = 0; k < c_.size(); ++k) {
        if (k) os << ", ";
        os << c_[k].real() << (c_[k].imag() < 0 ? "-" : "+") << std::abs(c_[k].imag()) << "i";
    }
    os << "]";
    return os.str();
}

EpsPoly exp_eps(double t, int max_deg) {
    EpsPoly r(max_deg);
    double term = 1.0;
    for (int k = 0; k <= max_deg; ++k) {
        r[k] = term;
        term *= t / static_cast<double>(k + 1);
    }
    return r;
}

// ---------------------------------------------------------------------------
// JetXY
// ---------------------------------------------------------------------------

JetXY::JetXY(int total_deg, int eps_deg)
    : D_(total_deg),
      edeg_(eps_deg),
      c_(static_cast<size_t>((total_deg + 1) * (total_deg + 2) / 2), EpsPoly(eps_deg)) {
    if (total_deg < 0) throw validation_error("JetXY degree must be >= 0");
}

size_t JetXY::idx(int i, int j) const {
    // Row i holds j = 0..D-i; rows stacked in order of increasing i.
    return static_cast<size_t>(i * (2 * D_ - i + 3) / 2 + j);
}

EpsPoly& JetXY::at(int i, int j) {
    if (i < 0 || j < 0 || i + j > D_) throw validation_error("JetXY::at out of range");
    return c_[idx(i, j)];
}

const EpsPoly& JetXY::at(int i, int j) const {
    if (i < 0 || j < 0 || i + j > D_) throw validation_error("JetXY::at out of range");
    return c_[idx(i, j)];
}

JetXY JetXY::monomial(int i, int j, const EpsPoly& coeff, int total_deg, int eps_deg) {
    JetXY r(total_deg, eps_deg);
    r.at(i, j) = coeff;
    return r;
}

JetXY JetXY::var_x(int total_deg, int eps_deg) {
    return monomial(1, 0, EpsPoly::constant(1.0, eps_deg), total_deg, eps_deg);
}

JetXY JetXY::var_y(int total_deg, int eps_deg) {
    return monomial(0, 1, EpsPoly::constant(1.0, eps_deg), total_deg, eps_deg);
}

JetXY JetXY::constant(const EpsPoly& c, int total_deg, int eps_deg) {
    return monomial(0, 0, c, total_deg, eps_deg);
}

static void check_same_shape(const JetXY& a, const JetXY& b) {
    if (a.deg() != b.deg() || a.eps_deg() != b.eps_deg()) throw degree_mismatch_error();
}

JetXY JetXY::operator-() const {
    JetXY r(*this);
    for (auto& p : r.c_) p = -p;
    return r;
}

JetXY& JetXY::operator+=(const JetXY& o) {
    check_same_shape(*this, o);
    for (size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
    return *this;
}

JetXY& JetXY::operator-=(const JetXY& o) {
    check_same_shape(*this, o);
    for (size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
    return *this;
}

JetXY JetXY::operator+(const JetXY& o) const {
    JetXY r(*this);
    r += o;
    return r;
}

JetXY JetXY::operator-(const JetXY& o) const {
    JetXY r(*this);
    r -= o;
    return r;
}

JetXY JetXY::operator*(const JetXY& o) const {
    check_same_shape(*this, o);
    JetXY r(D_, edeg_);
    for (int i1 = 0; i1 <= D_; ++i1)
        for (int j1 = 0; i1 + j1 <= D_; ++j1) {
            const EpsPoly& a = c_[idx(i1, j1)];
            if (a.is_zero(0.0)) continue;  // exact-zero skip
            for (int i2 = 0; i1 + i2 <= D_; ++i2)
                for (int j2 = 0; i1 + j1 + i2 + j2 <= D_; ++j2) {
                    const EpsPoly& b = o.c_[idx(i2, j2)];
                    if (b.is_zero(0.0)) continue;
                    r.c_[r.idx(i1 + i2, j1 + j2)] += a * b;
                }
        }
    return r;
}

JetXY JetXY::operator*(const EpsPoly& s) const {
    JetXY r(*this);
    for (auto& p : r.c_) p = p * s;
    return r;
}

JetXY JetXY::operator*(cd s) const {
    JetXY r(*this);
    for (auto& p : r.c_) p *= s;
    return r;
}

cd JetXY::eval(cd x, cd y, cd eps) const {
    cd res = 0.0;
    std::vector<cd> ypow(static_cast<size_t>(D_) + 1);
    ypow[0] = 1.0;
    for (int j = 1; j <= D_; ++j) ypow[static_cast<size_t>(j)] = ypow[static_cast<size_t>(j - 1)] * y;
    cd xpow = 1.0;
    for (int i = 0; i <= D_; ++i) {
        cd row = 0.0;
        for (int j = 0; i + j <= D_; ++j) row += c_[idx(i, j)].eval(eps) * ypow[static_cast<size_t>(j)];
        res += xpow * row;
        xpow *= x;
    }
    return res;
}

JetXY JetXY::dx() const {
    JetXY r(D_, edeg_);
    for (int i = 1; i <= D_; ++i)
        for (int j = 0; i + j <= D_; ++j)
            r.c_[idx(i - 1, j)] = c_[idx(i, j)] * static_cast<double>(i);
    return r;
}

JetXY JetXY::dy() const {
    JetXY r(D_, edeg_);
    for (int i = 0; i <= D_; ++i)
        for (int j = 1; i + j <= D_; ++j)
            r.c_[idx(i, j - 1)] = c_[idx(i, j)] * static_cast<double>(j);
    return r;
}

JetXY JetXY::compose(const JetXY& X, const JetXY& Y) const {
    check_same_shape(*this, X);
    check_same_shape(*this, Y);
    JetXY r(D_, edeg_);
    // Powers of X built once; powers of Y built inside the row loop.
    std::vector<JetXY> Xp;
    Xp.reserve(static_cast<size_t>(D_) + 1);
    Xp.push_back(JetXY::constant(EpsPoly::constant(1.0, edeg_), D_, edeg_));
    for (int i = 1; i <= D_; ++i) Xp.push_back(Xp.back() * X);
    for (int i = 0; i <= D_; ++i) {
        // Skip empty rows cheaply.
        bool row_zero = true;
        for (int j = 0; i + j <= D_; ++j)
            if (!c_[idx(i, j)].is_zero(0.0)) { row_zero = false; break; }
        if (row_zero) continue;
        JetXY Yp = JetXY::constant(EpsPoly::constant(1.0, edeg_), D_, edeg_);
        for (int j = 0; i + j <= D_; ++j) {
            const EpsPoly& a = c_[idx(i, j)];
            if (!a.is_zero(0.0)) r += (Xp[static_cast<size_t>(i)] * Yp) * a;
            if (i + j < D_) Yp = Yp * Y;
        }
    }
    return r;
}

JetXY JetXY::inverse_unit() const {
    const EpsPoly c0 = at(0, 0);
    JetXY w(*this);
    w.at(0, 0) = EpsPoly(edeg_);
    JetXY wn = w * c0.inverse();  // nilpotent part of this/c0
    // Geometric series in the nilpotent part.
    JetXY acc = JetXY::constant(EpsPoly::constant(1.0, edeg_), D_, edeg_);
    JetXY pw = acc;
    for (int k = 1; k <= D_; ++k) {
        pw = pw * wn;
        if (pw.is_zero(0.0)) break;
        acc += (k % 2 ? -pw : pw);
    }
    return acc * c0.inverse();
}

JetXY JetXY::conj_swap() const {
    JetXY r(D_, edeg_);
    for (int i = 0; i <= D_; ++i)
        for (int j = 0; i + j <= D_; ++j)
            r.c_[idx(j, i)] = c_[idx(i, j)].conj_reflect();
    return r;
}

bool JetXY::is_zero(double tol) const {
    for (const auto& p : c_)
        if (!p.is_zero(tol)) return false;
    return true;
}

double JetXY::max_abs_diff(const JetXY& o) const {
    check_same_shape(*this, o);
    double m = 0.0;
    for (size_t k = 0; k < c_.size(); ++k) m = std::max(m, c_[k].max_abs_diff(o.c_[k]));
    return m;
}

double JetXY::degree_norm(int d) const {
    double m = 0.0;
    for (int i = 0; i <= d; ++i) {
        int j = d - i;
        if (i + j > D_) continue;
        for (int k = 0; k <= edeg_; ++k) m = std::max(m, std::abs(c_[idx(i, j)][k]));
    }
    return m;
}

JetXY jet_arith(const JetXY& a, const JetXY& b, JetOp op) {
    check_same_shape(a, b);
    return op == JetOp::add ? a + b : a * b;
}

std::pair<JetXY, JetXY> reality_involution(const std::pair<JetXY, JetXY>& v) {
    return {v.second.conj_swap(), v.first.conj_swap()};
}

bool is_real_pair(const JetXY& P, const JetXY& Q, double tol) {
    auto img = reality_involution({P, Q});
    return img.first.max_abs_diff(P) <= tol && img.second.max_abs_diff(Q) <= tol;
}

// ---------------------------------------------------------------------------
// FormalGerm
// ---------------------------------------------------------------------------

FormalGerm::FormalGerm(int deg, int eps_deg)
    : edeg_(eps_deg), c_(static_cast<size_t>(deg) + 1, EpsPoly(eps_deg)) {
    if (deg < 1) throw validation_error("FormalGerm degree must be >= 1");
}

FormalGerm FormalGerm::identity(int deg, int eps_deg) {
    FormalGerm f(deg, eps_deg);
    f.c_[1] = EpsPoly::constant(1.0, eps_deg);
    return f;
}

FormalGerm FormalGerm::monomial(int k, const EpsPoly& coeff, int deg, int eps_deg) {
    if (k < 1 || k > deg) throw validation_error("FormalGerm::monomial out of range");
    FormalGerm f(deg, eps_deg);
    f.c_[static_cast<size_t>(k)] = coeff;
    return f;
}

static void check_same_shape(const FormalGerm& a, const FormalGerm& b) {
    if (a.deg() != b.deg() || a.eps_deg() != b.eps_deg()) throw degree_mismatch_error();
}

FormalGerm FormalGerm::operator-() const {
    FormalGerm r(*this);
    for (auto& p : r.c_) p = -p;
    return r;
}

FormalGerm FormalGerm::operator+(const FormalGerm& o) const {
    check_same_shape(*this, o);
    FormalGerm r(*this);
    for (size_t k = 0; k < c_.size(); ++k) r.c_[k] += o.c_[k];
    return r;
}

FormalGerm FormalGerm::operator-(const FormalGerm& o) const {
    check_same_shape(*this, o);
    FormalGerm r(*this);
    for (size_t k = 0; k < c_.size(); ++k) r.c_[k] -= o.c_[k];
    return r;
}

FormalGerm FormalGerm::operator*(const FormalGerm& o) const {
    check_same_shape(*this, o);
    const int n = deg();
    FormalGerm r(n, edeg_);
    for (int i = 1; i <= n; ++i) {
        if (c_[static_cast<size_t>(i)].is_zero(0.0)) continue;
        for (int j = 1; i + j <= n; ++j)
            r.c_[static_cast<size_t>(i + j)] += c_[static_cast<size_t>(i)] * o.c_[static_cast<size_t>(j)];
    }
    return r;
}

FormalGerm FormalGerm::operator*(const EpsPoly& s) const {
    FormalGerm r(*this);
    for (auto& p : r.c_) p = p * s;
    return r;
}

FormalGerm FormalGerm::operator*(cd s) const {
    FormalGerm r(*this);
    for (auto& p : r.c_) p *= s;
    return r;
}

cd FormalGerm::eval(cd x, cd eps) const {
    cd res = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) res = res * x + it->eval(eps);
    return res;
}

FormalGerm FormalGerm::compose(const FormalGerm& g) const {
    check_same_shape(*this, g);
    const int n = deg();
    FormalGerm r(n, edeg_);
    // Horner over powers of g.
    FormalGerm gp = g;
    for (int k = 1; k <= n; ++k) {
        if (!c_[static_cast<size_t>(k)].is_zero(0.0)) r = r + gp * c_[static_cast<size_t>(k)];
        if (k < n) gp = gp * g;
    }
    return r;
}

FormalGerm FormalGerm::invert() const {
    const int n = deg();
    if (std::abs(c_[1][0]) < kCoeffTol)
        throw non_invertible_error("germ_invert: linear coefficient vanishes at eps = 0");
    EpsPoly inv1 = c_[1].inverse();
    FormalGerm g(n, edeg_);
    g.at(1) = inv1;
    // Order-by-order: coefficient k of f(g) must vanish for k >= 2.
    for (int k = 2; k <= n; ++k) {
        FormalGerm fg = compose(g);
        g.at(k) = -(fg.at(k) * inv1);
    }
    return g;
}

FormalGerm FormalGerm::conj_reflect() const {
    FormalGerm r(*this);
    for (auto& p : r.c_) p = p.conj_reflect();
    return r;
}

bool FormalGerm::is_real(double tol) const {
    for (const auto& p : c_)
        if (!p.is_real(tol)) return false;
    return true;
}

bool FormalGerm::is_zero(double tol) const {
    for (const auto& p : c_)
        if (!p.is_zero(tol)) return false;
    return true;
}

double FormalGerm::max_abs_diff(const FormalGerm& o) const {
    check_same_shape(*this, o);
    double m = 0.0;
    for (size_t k = 0; k < c_.size(); ++k) m = std::max(m, c_[k].max_abs_diff(o.c_[k]));
    return m;
}

FormalGerm FormalGerm::truncated(int new_deg) const {
    FormalGerm r(new_deg, edeg_);
    for (int k = 1; k <= std::min(new_deg, deg()); ++k) r.at(k) = c_[static_cast<size_t>(k)];
    return r;
}

FormalGerm FormalGerm::derivative_x() const {
    // Derivative loses the origin-fixing property; shift content left but keep
    // it representable: (f')(x) stored with (f')_k = (k+1) f_{k+1}, constant in slot 1
    // is not representable, so expose via a plain germ whose slot k holds the
    // coefficient of x^k of f' for k >= 1 and drop the constant.  Callers that
    // need f'(0) should read at(1) of the source directly.
    const int n = deg();
    FormalGerm r(n, edeg_);
    for (int k = 2; k <= n; ++k) r.at(k - 1) = c_[static_cast<size_t>(k)] * static_cast<double>(k);
    return r;
}

FormalGerm germ_compose(const FormalGerm& f, const FormalGerm& g) { return f.compose(g); }
FormalGerm germ_invert(const FormalGerm& f) { return f.invert(); }

}  // namespace wf
