#include "betamaps/gf_series.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace betamaps {

void BivarPoly::resize_to(int nx, int ny) {
    if (nx <= nx_ && ny <= ny_) return;
    int mx = std::max(nx, nx_), my = std::max(ny, ny_);
    std::vector<BigInt> next(static_cast<std::size_t>(mx) * my);
    for (int a = 0; a < nx_; ++a)
        for (int b = 0; b < ny_; ++b) next[a * my + b] = std::move(c_[a * ny_ + b]);
    c_ = std::move(next);
    nx_ = mx;
    ny_ = my;
}

void BivarPoly::trim() {
    int mx = 0, my = 0;
    for (int a = 0; a < nx_; ++a)
        for (int b = 0; b < ny_; ++b)
            if (c_[a * ny_ + b] != 0) {
                mx = std::max(mx, a + 1);
                my = std::max(my, b + 1);
            }
    if (mx == nx_ && my == ny_) return;
    std::vector<BigInt> next(static_cast<std::size_t>(mx) * my);
    for (int a = 0; a < mx; ++a)
        for (int b = 0; b < my; ++b) next[a * my + b] = std::move(c_[a * ny_ + b]);
    c_ = std::move(next);
    nx_ = mx;
    ny_ = my;
}

BivarPoly BivarPoly::constant(BigInt v) {
    BivarPoly p;
    if (v != 0) {
        p.nx_ = p.ny_ = 1;
        p.c_.push_back(std::move(v));
    }
    return p;
}

BigInt BivarPoly::coeff(int a, int b) const {
    if (a < 0 || b < 0 || a >= nx_ || b >= ny_) return 0;
    return c_[a * ny_ + b];
}

void BivarPoly::add_coeff(int a, int b, const BigInt& v) {
    if (v == 0) return;
    resize_to(a + 1, b + 1);
    c_[a * ny_ + b] += v;
    trim();
}

BivarPoly BivarPoly::operator+(const BivarPoly& o) const {
    BivarPoly out;
    out.resize_to(std::max(nx_, o.nx_), std::max(ny_, o.ny_));
    for (int a = 0; a < out.nx_; ++a)
        for (int b = 0; b < out.ny_; ++b)
            out.c_[a * out.ny_ + b] = coeff(a, b) + o.coeff(a, b);
    out.trim();
    return out;
}

BivarPoly BivarPoly::operator-(const BivarPoly& o) const {
    BivarPoly out;
    out.resize_to(std::max(nx_, o.nx_), std::max(ny_, o.ny_));
    for (int a = 0; a < out.nx_; ++a)
        for (int b = 0; b < out.ny_; ++b)
            out.c_[a * out.ny_ + b] = coeff(a, b) - o.coeff(a, b);
    out.trim();
    return out;
}

BivarPoly BivarPoly::operator*(const BivarPoly& o) const {
    BivarPoly out;
    if (is_zero() || o.is_zero()) return out;
    out.resize_to(nx_ + o.nx_ - 1, ny_ + o.ny_ - 1);
    for (int a = 0; a < nx_; ++a)
        for (int b = 0; b < ny_; ++b) {
            const BigInt& v = c_[a * ny_ + b];
            if (v == 0) continue;
            for (int a2 = 0; a2 < o.nx_; ++a2)
                for (int b2 = 0; b2 < o.ny_; ++b2) {
                    const BigInt& w = o.c_[a2 * o.ny_ + b2];
                    if (w == 0) continue;
                    out.c_[(a + a2) * out.ny_ + (b + b2)] += v * w;
                }
        }
    out.trim();
    return out;
}

BivarPoly BivarPoly::subst_x1() const {
    BivarPoly out;
    if (is_zero()) return out;
    out.resize_to(1, ny_);
    for (int a = 0; a < nx_; ++a)
        for (int b = 0; b < ny_; ++b) out.c_[b] += c_[a * ny_ + b];
    out.trim();
    return out;
}

BivarPoly BivarPoly::subst_y1() const {
    BivarPoly out;
    if (is_zero()) return out;
    out.resize_to(nx_, 1);
    for (int a = 0; a < nx_; ++a)
        for (int b = 0; b < ny_; ++b) out.c_[a] += c_[a * ny_ + b];
    out.trim();
    return out;
}

BivarPoly BivarPoly::mul_x() const {
    BivarPoly out;
    if (is_zero()) return out;
    out.resize_to(nx_ + 1, ny_);
    for (int a = 0; a < nx_; ++a)
        for (int b = 0; b < ny_; ++b) out.c_[(a + 1) * out.ny_ + b] = c_[a * ny_ + b];
    return out;
}

BivarPoly BivarPoly::mul_y() const {
    BivarPoly out;
    if (is_zero()) return out;
    out.resize_to(nx_, ny_ + 1);
    for (int a = 0; a < nx_; ++a)
        for (int b = 0; b < ny_; ++b) out.c_[a * out.ny_ + (b + 1)] = c_[a * ny_ + b];
    return out;
}

BivarPoly div_exact_y_minus_1(const BivarPoly& p) {
    if (p.is_zero()) return {};
    // synthetic division per x-row; remainder is the row sum p(x, 1)
    BivarPoly q;
    q.resize_to(p.nx_, std::max(p.ny_ - 1, 1));
    for (int a = 0; a < p.nx_; ++a) {
        BigInt carry = 0; // q's coefficient being built, top down
        for (int b = p.ny_ - 1; b >= 1; --b) {
            carry += p.c_[a * p.ny_ + b];
            q.c_[a * q.ny_ + (b - 1)] = carry;
        }
        carry += p.c_[a * p.ny_ + 0];
        if (carry != 0)
            throw std::invalid_argument("div_exact_y_minus_1: nonzero remainder");
    }
    q.trim();
    return q;
}

Series3 Series3::one(int order) {
    Series3 s(order);
    s.coeff_[0] = BivarPoly::constant(1);
    return s;
}

namespace {
void require_same_order(const Series3& a, const Series3& b) {
    if (a.order() != b.order())
        throw std::invalid_argument("series order mismatch: " + std::to_string(a.order()) +
                                    " vs " + std::to_string(b.order()));
}
} // namespace

Series3 Series3::operator+(const Series3& o) const {
    require_same_order(*this, o);
    Series3 out(order_);
    for (int n = 0; n <= order_; ++n) out.coeff_[n] = coeff_[n] + o.coeff_[n];
    return out;
}

Series3 Series3::operator-(const Series3& o) const {
    require_same_order(*this, o);
    Series3 out(order_);
    for (int n = 0; n <= order_; ++n) out.coeff_[n] = coeff_[n] - o.coeff_[n];
    return out;
}

Series3 Series3::operator*(const Series3& o) const {
    require_same_order(*this, o);
    Series3 out(order_);
    for (int n = 0; n <= order_; ++n)
        for (int k = 0; k <= n; ++k) {
            if (coeff_[k].is_zero() || o.coeff_[n - k].is_zero()) continue;
            out.coeff_[n] = out.coeff_[n] + coeff_[k] * o.coeff_[n - k];
        }
    return out;
}

Series3 Series3::subst_x1() const {
    Series3 out(order_);
    for (int n = 0; n <= order_; ++n) out.coeff_[n] = coeff_[n].subst_x1();
    return out;
}

Series3 Series3::subst_y1() const {
    Series3 out(order_);
    for (int n = 0; n <= order_; ++n) out.coeff_[n] = coeff_[n].subst_y1();
    return out;
}

Series3 Series3::shift_t(int k) const {
    Series3 out(order_);
    for (int n = k; n <= order_; ++n) out.coeff_[n] = coeff_[n - k];
    return out;
}

Series3 Series3::mul_x() const {
    Series3 out(order_);
    for (int n = 0; n <= order_; ++n) out.coeff_[n] = coeff_[n].mul_x();
    return out;
}

Series3 Series3::mul_y() const {
    Series3 out(order_);
    for (int n = 0; n <= order_; ++n) out.coeff_[n] = coeff_[n].mul_y();
    return out;
}

Series3 Series3::truncate(int new_order) const {
    Series3 out(new_order);
    for (int n = 0; n <= std::min(new_order, order_); ++n) out.coeff_[n] = coeff_[n];
    return out;
}

Series3 div_exact_y_minus_1(const Series3& s) {
    Series3 out(s.order());
    for (int n = 0; n <= s.order(); ++n) out.at(n) = div_exact_y_minus_1(s.at(n));
    return out;
}

Series3 apply_f_equation(const Series3& f) {
    int order = f.order();
    Series3 f1y = f.subst_x1();
    Series3 f11 = f1y.subst_y1();

    // 1 / (1 - t*F(1,1)) as the truncated geometric series
    Series3 tf11 = f11.shift_t(1);
    Series3 geom = Series3::one(order);
    Series3 pw = Series3::one(order);
    for (int k = 1; k <= order; ++k) {
        pw = pw * tf11;
        geom = geom + pw;
    }

    Series3 s = f1y.mul_y().shift_t(1) * geom; // S = t*y*F(1,y) / (1 - t*F(1,1))
    Series3 diff = f - f.subst_y1();           // vanishes at y = 1
    Series3 quot = div_exact_y_minus_1(diff);
    return Series3::one(order) + s.mul_x() + (s * quot).mul_x();
}

Series3 solve_f(int order) {
    if (order < 0) throw std::invalid_argument("solve_f: order must be >= 0");
    Series3 f = Series3::one(order);
    for (int round = 0; round <= order + 1; ++round) {
        Series3 next = apply_f_equation(f);
        if (next == f) return f;
        f = std::move(next);
    }
    throw std::logic_error("solve_f: iteration did not stabilize within order+1 rounds");
}

GfCheckResult gf_checks(const Series3& f, const std::vector<BigInt>& expected_counts) {
    GfCheckResult out;
    auto fail = [&](std::string why) {
        out.pass = false;
        out.detail = std::move(why);
        return out;
    };
    if (apply_f_equation(f) != f)
        return fail("series is not a fixed point of the defining equation");
    for (int n = 0; n <= f.order(); ++n) {
        const BivarPoly& p = f.at(n);
        for (int a = 0; a <= p.deg_x(); ++a)
            for (int b = 0; b <= p.deg_y(); ++b) {
                BigInt c = p.coeff(a, b);
                if (c < 0)
                    return fail("negative coefficient at t^" + std::to_string(n));
                if (c != p.coeff(b, a))
                    return fail("F(x,y) != F(y,x) at t^" + std::to_string(n) + " x^" +
                                std::to_string(a) + " y^" + std::to_string(b));
            }
        if (n >= 1 && (p.deg_x() > n || p.deg_y() > n))
            return fail("degree bound exceeded at t^" + std::to_string(n));
    }
    Series3 f11 = f.subst_x1().subst_y1();
    int checked = std::min<int>(f.order() + 1, static_cast<int>(expected_counts.size()));
    for (int n = 0; n < checked; ++n)
        if (f11.at(n).coeff(0, 0) != expected_counts[n])
            return fail("[t^" + std::to_string(n) + "] F(1,1) = " +
                        f11.at(n).coeff(0, 0).str() + ", expected " +
                        expected_counts[n].str());
    out.detail = "fixed point, symmetric, nonnegative, degree-bounded; counts match through t^" +
                 std::to_string(checked - 1);
    return out;
}

} // namespace betamaps
