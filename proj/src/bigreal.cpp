#include "eulersum/bigreal.hpp"

#include <climits>
#include <cmath>
#include <stdexcept>

namespace eulersum {

PrecisionContext::PrecisionContext(int target_digits) : digits(target_digits) {
    if (digits < 15) throw std::invalid_argument("precision must be at least 15 digits");
    fbits = static_cast<long>((digits + 18) * 3.33) + 32;
    series_terms = static_cast<int>(fbits) + 16;
}

namespace {

void check_same(const BigReal& a, const BigReal& b) {
    if (a.fbits != b.fbits) throw std::invalid_argument("BigReal precision mismatch");
}

// round(x / 2^s) with error at most 1 in the last place
Int shift_round(const Int& x, long s) {
    if (s <= 0) return x << static_cast<unsigned long>(-s);
    Int q, r;
    Int d = Int(1) << static_cast<unsigned long>(s);
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
    if (r * 2 >= d) q += 1;
    return q;
}

Int ceil_div_pow2(const Int& x, long s) {
    if (s <= 0) return x << static_cast<unsigned long>(-s);
    Int q;
    mpz_cdiv_q_2exp(q.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(s));
    return q;
}

}  // namespace

BigReal BigReal::from_rat(const Rat& q, long fbits) {
    Int num = q.get_num() << static_cast<unsigned long>(fbits);
    Int m, r;
    mpz_fdiv_qr(m.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), q.get_den().get_mpz_t());
    Int e = 0;
    if (r != 0) {
        if (r * 2 >= q.get_den()) m += 1;
        e = 1;
    }
    return BigReal(std::move(m), std::move(e), fbits);
}

Rat BigReal::to_rat() const {
    Rat r(mant, Int(1) << static_cast<unsigned long>(fbits));
    r.canonicalize();
    return r;
}

Rat BigReal::err_rat() const {
    Rat r(err, Int(1) << static_cast<unsigned long>(fbits));
    r.canonicalize();
    return r;
}

double BigReal::to_double() const {
    mpf_class f(mant, 64);
    mpf_div_2exp(f.get_mpf_t(), f.get_mpf_t(), static_cast<unsigned long>(fbits));
    return f.get_d();
}

std::string BigReal::to_decimal(int frac_digits) const {
    Int scaled = mant * pow_int(10, static_cast<unsigned long>(frac_digits));
    Int v = shift_round(scaled, fbits);
    bool neg = v < 0;
    if (neg) v = -v;
    std::string digits = v.get_str();
    if (static_cast<int>(digits.size()) <= frac_digits)
        digits.insert(0, frac_digits + 1 - digits.size(), '0');
    digits.insert(digits.size() - frac_digits, ".");
    return (neg ? "-" : "") + digits;
}

int BigReal::err_exponent10() const {
    if (err == 0) return INT_MIN;
    // smallest e with err * 2^{-fbits} <= 10^e
    long err_bits = static_cast<long>(mpz_sizeinbase(err.get_mpz_t(), 2));
    int e = static_cast<int>(std::floor((err_bits - fbits) * 0.30103)) - 1;
    while (true) {
        // test err <= 10^e * 2^{fbits}
        bool ok;
        if (e >= 0)
            ok = err <= pow_int(10, e) << static_cast<unsigned long>(fbits);
        else
            ok = err * pow_int(10, -e) <= Int(1) << static_cast<unsigned long>(fbits);
        if (ok) {
            if (e == INT_MIN) return e;
            // tighten while still valid
            bool ok2;
            int e2 = e - 1;
            if (e2 >= 0)
                ok2 = err <= pow_int(10, e2) << static_cast<unsigned long>(fbits);
            else
                ok2 = err * pow_int(10, -e2) <= Int(1) << static_cast<unsigned long>(fbits);
            if (!ok2) return e;
            e = e2;
        } else {
            ++e;
        }
    }
}

BigReal operator+(const BigReal& a, const BigReal& b) {
    check_same(a, b);
    return BigReal(a.mant + b.mant, a.err + b.err, a.fbits);
}

BigReal operator-(const BigReal& a, const BigReal& b) {
    check_same(a, b);
    return BigReal(a.mant - b.mant, a.err + b.err, a.fbits);
}

BigReal operator*(const BigReal& a, const BigReal& b) {
    check_same(a, b);
    Int m = shift_round(a.mant * b.mant, a.fbits);
    Int am = a.mant < 0 ? Int(-a.mant) : a.mant;
    Int bm = b.mant < 0 ? Int(-b.mant) : b.mant;
    Int e = ceil_div_pow2(am * b.err + bm * a.err + a.err * b.err, a.fbits) + 2;
    return BigReal(std::move(m), std::move(e), a.fbits);
}

BigReal BigReal::div_int(const Int& n) const {
    if (n == 0) throw std::invalid_argument("BigReal division by zero");
    Int an = n < 0 ? Int(-n) : n;
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), mant.get_mpz_t(), an.get_mpz_t());
    if (r * 2 >= an) q += 1;
    Int e;
    mpz_cdiv_q(e.get_mpz_t(), err.get_mpz_t(), an.get_mpz_t());
    e += 1;
    if (n < 0) q = -q;
    return BigReal(std::move(q), std::move(e), fbits);
}

BigReal BigReal::mul_rat(const Rat& q) const {
    return mul_int(q.get_num()).div_int(q.get_den());
}

void BigReal::add_err_pow10(int e) {
    Int u;
    if (e >= 0) {
        u = pow_int(10, e) << static_cast<unsigned long>(fbits);
    } else {
        Int den = pow_int(10, -e);
        Int num = Int(1) << static_cast<unsigned long>(fbits);
        mpz_cdiv_q(u.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        u += 1;
    }
    err += u;
}

bool BigReal::abs_below_pow10(int e) const {
    Int total = (mant < 0 ? Int(-mant) : mant) + err;
    if (e >= 0) return total < (pow_int(10, e) << static_cast<unsigned long>(fbits));
    return total * pow_int(10, -e) < (Int(1) << static_cast<unsigned long>(fbits));
}

}  // namespace eulersum
