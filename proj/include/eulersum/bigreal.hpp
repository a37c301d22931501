#pragma once

#include <string>

#include "eulersum/rational.hpp"

namespace eulersum {

// Precision policy for the numeric oracle: target decimal digits drive the
// working fixed-point width and the series truncation order (series ratios
// are <= 1/2, so the geometric tail of the truncation is rigorous).
struct PrecisionContext {
    int digits = 40;
    long fbits = 0;        // fixed-point fraction bits
    int series_terms = 0;  // power-series truncation order
    int zeta_terms = 30000;  // nested-sum length for the series oracle

    explicit PrecisionContext(int target_digits = 40);

    // PASS threshold for verification: 10^{-(digits-10)}.
    int pass_exponent() const { return -(digits - 10); }
};

// Fixed-point big real: value = mant * 2^{-fbits}, with a rigorous absolute
// error bound err * 2^{-fbits}.  All arithmetic propagates err conservatively.
struct BigReal {
    Int mant;
    Int err;  // in ulps, >= 0
    long fbits = 0;

    BigReal() = default;
    BigReal(Int m, Int e, long f) : mant(std::move(m)), err(std::move(e)), fbits(f) {}

    static BigReal exact_zero(long fbits) { return BigReal(0, 0, fbits); }
    static BigReal from_rat(const Rat& q, long fbits);
    static BigReal from_int(long v, long fbits) { return from_rat(Rat(v), fbits); }

    double to_double() const;
    Rat to_rat() const;
    Rat err_rat() const;
    // Decimal rendering with the given number of fractional digits.
    std::string to_decimal(int frac_digits) const;
    // Smallest e such that the error bound is <= 10^e (INT_MIN if err == 0).
    int err_exponent10() const;

    BigReal operator-() const { return BigReal(-mant, err, fbits); }
    BigReal abs() const { return BigReal(mant < 0 ? Int(-mant) : mant, err, fbits); }

    friend BigReal operator+(const BigReal& a, const BigReal& b);
    friend BigReal operator-(const BigReal& a, const BigReal& b);
    friend BigReal operator*(const BigReal& a, const BigReal& b);
    BigReal& operator+=(const BigReal& o) { return *this = *this + o; }
    BigReal& operator-=(const BigReal& o) { return *this = *this - o; }

    BigReal mul_int(const Int& n) const { return BigReal(mant * n, err * ::abs(n), fbits); }
    BigReal div_int(const Int& n) const;
    BigReal mul_rat(const Rat& q) const;
    BigReal half() const { return div_int(2); }
    void add_err_ulps(const Int& u) { err += u; }
    void add_err_pow10(int e);  // inflate the bound by 10^e

    // |value| + err < 10^e, exactly decided.
    bool abs_below_pow10(int e) const;
};

}  // namespace eulersum
