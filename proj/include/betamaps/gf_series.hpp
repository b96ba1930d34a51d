#pragma once

#include "betamaps/bigint.hpp"

#include <string>
#include <vector>

namespace betamaps {

// Dense bivariate polynomial in x and y with exact integer coefficients.
class BivarPoly {
  public:
    BivarPoly() = default;
    static BivarPoly constant(BigInt c);

    // 0 outside the stored rectangle
    BigInt coeff(int a, int b) const;
    void add_coeff(int a, int b, const BigInt& v);

    int deg_x() const { return nx_ - 1; } // -1 for the zero polynomial
    int deg_y() const { return ny_ - 1; }
    bool is_zero() const { return nx_ == 0; }

    BivarPoly operator+(const BivarPoly& o) const;
    BivarPoly operator-(const BivarPoly& o) const;
    BivarPoly operator*(const BivarPoly& o) const;

    BivarPoly subst_x1() const; // x := 1
    BivarPoly subst_y1() const; // y := 1
    BivarPoly mul_x() const;
    BivarPoly mul_y() const;

    bool operator==(const BivarPoly& o) const { return nx_ == o.nx_ && ny_ == o.ny_ && c_ == o.c_; }
    bool operator!=(const BivarPoly& o) const { return !(*this == o); }

  private:
    int nx_ = 0, ny_ = 0;   // dimensions; coefficient of x^a y^b at c_[a*ny_+b]
    std::vector<BigInt> c_;

    void resize_to(int nx, int ny);
    void trim();
    friend BivarPoly div_exact_y_minus_1(const BivarPoly& p);
};

// Exact division by (y - 1); throws when the remainder p(x, 1) is nonzero.
BivarPoly div_exact_y_minus_1(const BivarPoly& p);

// Power series in t truncated at t^order, with bivariate polynomial
// coefficients. Arithmetic requires matching orders.
class Series3 {
  public:
    explicit Series3(int order = 0) : order_(order), coeff_(order + 1) {}
    static Series3 one(int order);

    int order() const { return order_; }
    const BivarPoly& at(int n) const { return coeff_.at(n); }
    BivarPoly& at(int n) { return coeff_.at(n); }

    Series3 operator+(const Series3& o) const;
    Series3 operator-(const Series3& o) const;
    Series3 operator*(const Series3& o) const; // truncated at t^order

    Series3 subst_x1() const;
    Series3 subst_y1() const;
    Series3 shift_t(int k) const; // * t^k, truncated
    Series3 mul_x() const;
    Series3 mul_y() const;
    Series3 truncate(int new_order) const;

    bool operator==(const Series3& o) const { return order_ == o.order_ && coeff_ == o.coeff_; }
    bool operator!=(const Series3& o) const { return !(*this == o); }

  private:
    int order_ = 0;
    std::vector<BivarPoly> coeff_;
};

Series3 div_exact_y_minus_1(const Series3& s);

// Unique power-series solution of
//   F = 1 + x*S + x/(y-1) * S * (F(x,y) - F(x,1)),  S = t*y*F(1,y) / (1 - t*F(1,1)),
// truncated at t^order, found by fixed-point iteration from F = 1. The
// geometric factor is expanded as a truncated series; every step is exact.
// [t^n] F collects trees with n edges by (root, rmod).
Series3 solve_f(int order);

// One application of the defining equation; solve_f's fixed point satisfies
// apply_f_equation(F) == F exactly.
Series3 apply_f_equation(const Series3& f);

struct GfCheckResult {
    bool pass = true;
    std::string detail; // first failure, or a summary when everything holds
};

// Structural checks on a solved series: it must be a fixed point, have
// nonnegative coefficients, satisfy F(x,y) = F(y,x), keep deg_x, deg_y <= n
// in the t^n coefficient, and reproduce `expected_counts[n]` (the number of
// trees with n edges) at x = y = 1. Coefficient-level comparison against
// enumeration tables is layered on top by the verification suite.
GfCheckResult gf_checks(const Series3& f, const std::vector<BigInt>& expected_counts);

} // namespace betamaps
