#include "eulersum/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>

namespace eulersum {

namespace {

int letter_value(Letter l) {
    switch (l) {
        case Letter::Zero: return 0;
        case Letter::One: return 1;
        case Letter::MOne: return -1;
        default: throw std::invalid_argument("numeric oracle: letter outside {0,1,-1}");
    }
}

}  // namespace

// I(0; b_1...b_m; 1/2) by recursive primitives F_j' = F_{j-1}/(t - b_j),
// F_j(0) = 0, computed on truncated power series at 0.  All poles lie at
// distance >= 1 from 0 (letter values in {-1,1,2}; zeros only deepen the
// integration), so every coefficient array is bounded by 1 in absolute
// value and the tail at t = 1/2 is at most 2^{-N}.
BigReal Numerics::series_at_half(const std::vector<int>& letters) {
    auto it = half_cache_.find(letters);
    if (it != half_cache_.end()) return it->second;

    const long fb = ctx_.fbits;
    const int n = ctx_.series_terms + static_cast<int>(letters.size()) + 2;
    if (!letters.empty() && letters.front() == 0)
        throw std::invalid_argument("series: leading zero letter diverges");

    std::vector<BigReal> g(n + 1, BigReal::exact_zero(fb));
    g[0] = BigReal::from_int(1, fb);
    std::vector<BigReal> h(n + 1, BigReal::exact_zero(fb));
    for (int b : letters) {
        if (b == 0) {
            // divide by t: shift down (constant term is zero), then integrate
            for (int i = 0; i < n; ++i) h[i] = g[i + 1];
            h[n] = BigReal::exact_zero(fb);
        } else {
            // H_n = (H_{n-1} - G_n) / b
            BigReal prev = BigReal::exact_zero(fb);
            for (int i = 0; i <= n; ++i) {
                BigReal cur = prev - g[i];
                if (b != 1) cur = cur.div_int(b);
                h[i] = cur;
                prev = h[i];
            }
        }
        g[0] = BigReal::exact_zero(fb);
        for (int i = 1; i <= n; ++i) g[i] = h[i - 1].div_int(i);
    }
    // Horner at t = 1/2.
    BigReal acc = BigReal::exact_zero(fb);
    for (int i = n; i >= 0; --i) acc = g[i] + acc.half();
    acc.add_err_ulps(Int(1) << static_cast<unsigned long>(std::max(0L, fb - ctx_.series_terms)));
    half_cache_.emplace(letters, acc);
    return acc;
}

BigReal Numerics::eval_L1(const Word& w) {
    auto it = l1_cache_.find(w);
    if (it != l1_cache_.end()) return it->second;
    if (!is_admissible_A0(w))
        throw std::invalid_argument("eval_L1: non-admissible word " + w.to_string());

    const int m = w.weight();
    // Path splitting at 1/2: I(0;w;1) = sum over w = uv of
    // I(0;u;1/2) * I(1/2;v;1), and the second half transforms to an
    // integral from 0 by t -> 1-t (reverse the word, letters a -> 1-a,
    // sign (-1)^{|v|}).
    BigReal total = BigReal::exact_zero(ctx_.fbits);
    for (int cut = 0; cut <= m; ++cut) {
        std::vector<int> u, v;
        for (int i = 0; i < cut; ++i) u.push_back(letter_value(w.a[i]));
        for (int i = m; i-- > cut;) v.push_back(1 - letter_value(w.a[i]));
        BigReal prod = series_at_half(u) * series_at_half(v);
        if (v.size() % 2 != 0) prod = -prod;
        total += prod;
    }
    l1_cache_.emplace(w, total);
    return total;
}

BigReal Numerics::eval_L1(const LinComb& u) {
    BigReal acc = BigReal::exact_zero(ctx_.fbits);
    for (auto& [w, c] : u.t) acc += eval_L1(w).mul_rat(c);
    return acc;
}

const std::vector<Rat>& bernoulli_upto(int n) {
    static std::vector<Rat> table{Rat(1)};
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<int>(table.size()) <= n) {
        // B_m = -1/(m+1) * sum_{j<m} C(m+1, j) B_j
        int m = static_cast<int>(table.size());
        Rat s = 0;
        Rat binom = 1;  // C(m+1, j), j = 0
        for (int j = 0; j < m; ++j) {
            s += binom * table[j];
            binom *= Rat(m + 1 - j);
            binom /= Rat(j + 1);
        }
        Rat b = -s / Rat(m + 1);
        b.canonicalize();
        table.push_back(b);
    }
    return table;
}

// sum_{m>n} m^{-s} by Euler-Maclaurin with the next-term remainder bound.
BigReal Numerics::zeta_tail_em(int s, long n) {
    if (s < 2) throw std::invalid_argument("zeta tail needs s >= 2");
    const int p = std::max(6, (ctx_.digits * 10) / (6 * static_cast<int>(std::log10(n) + 1)) + 4);
    const auto& bern = bernoulli_upto(2 * p + 2);
    const Rat nn(static_cast<long>(n));
    // n^{1-s}/(s-1) - n^{-s}/2
    Rat npow = 1;
    for (int i = 0; i < s - 1; ++i) npow *= nn;
    Rat acc = Rat(1) / (Rat(s - 1) * npow);
    Rat ns = npow * nn;  // n^s
    acc -= Rat(1, 2) / ns;
    // + sum_i B_{2i}/(2i)! * s(s+1)...(s+2i-2) * n^{-(s+2i-1)}
    Rat rising = Rat(s);      // s(s+1)...(s+2i-2)
    Rat fact = Rat(2);        // (2i)!
    Rat npow_cur = ns * nn;   // n^{s+2i-1}
    for (int i = 1; i <= p; ++i) {
        acc += bern[2 * i] / fact * rising / npow_cur;
        rising *= Rat(s + 2 * i - 1) * Rat(s + 2 * i);
        fact *= Rat(2 * i + 1) * Rat(2 * i + 2);
        npow_cur *= nn * nn;
    }
    // remainder: bounded by the magnitude of the next term
    Rat next = bern[2 * p + 2] / fact * rising / npow_cur;
    if (next < 0) next = -next;
    acc.canonicalize();
    BigReal out = BigReal::from_rat(acc, ctx_.fbits);
    BigReal bound = BigReal::from_rat(next, ctx_.fbits);
    out.add_err_ulps((bound.mant < 0 ? Int(-bound.mant) : bound.mant) + bound.err + 1);
    return out;
}

// Alternating depth-1 sums with the Chebyshev-polynomial acceleration of
// Cohen, Rodriguez-Villegas and Zagier; 1/m^s is a moment sequence, so the
// (3+sqrt 8)^{-n} error bound is rigorous.
BigReal Numerics::eta_crvz(int s) {
    const int n = static_cast<int>(ctx_.digits / 0.76) + 8;
    // d = ((3+sqrt8)^n + (3-sqrt8)^n)/2 via d_{k+1} = 6 d_k - d_{k-1}
    Int dm1 = 1, d = 3;
    for (int i = 1; i < n; ++i) {
        Int nd = 6 * d - dm1;
        dm1 = d;
        d = nd;
    }
    Rat b = -1, c = Rat(-d);
    Rat acc = 0;
    for (int k = 0; k < n; ++k) {
        c = b - c;
        acc += c / pow_int(Int(k + 1), static_cast<unsigned long>(s));
        b *= Rat(2 * (k + n)) * Rat(k - n);
        b /= Rat(2 * k + 1) * Rat(k + 1);
    }
    acc /= Rat(d);
    acc.canonicalize();
    BigReal out = BigReal::from_rat(acc, ctx_.fbits);
    // |error| <= 3 / d
    Rat eb = Rat(3) / Rat(d);
    BigReal ebr = BigReal::from_rat(eb, ctx_.fbits);
    out.add_err_ulps(ebr.mant + ebr.err + 1);
    return out;
}

namespace {

// Rigorous bound for integral-test tails with logarithmic envelopes:
// int_N^inf (1+ln x)^j ln(x/N)^t x^{-s} dx, t in {0,1}, in closed form,
// evaluated loosely in doubles with a safety factor.
double log_tail_integral(int j, int t, int s, double n) {
    double lam = s - 1;
    double lcap = std::log(n);
    double total = 0;
    if (t == 0) {
        // e^{-lam L} sum_i C(j,i) (1+L)^{j-i} i! / lam^{i+1}
        double binom = 1, fact = 1;
        for (int i = 0; i <= j; ++i) {
            if (i > 0) {
                binom = binom * (j - i + 1) / i;
                fact *= i;
            }
            total += binom * std::pow(1 + lcap, j - i) * fact / std::pow(lam, i + 1);
        }
    } else {
        double binom = 1;
        for (int i = 0; i <= j; ++i) {
            if (i > 0) binom = binom * (j - i + 1) / i;
            double fact = 1;
            for (int q = 1; q <= i + 1; ++q) fact *= q;
            total += binom * std::pow(1 + lcap, j - i) * fact / std::pow(lam, i + 2);
        }
    }
    return total * std::exp(-lam * lcap);
}

}  // namespace

BigReal Numerics::zeta_nested(const Index& idx) {
    const int d = idx.depth();
    const long fb = ctx_.fbits;
    std::vector<int> s(d);
    std::vector<int> sgn(d);
    for (int j = 0; j < d; ++j) {
        s[j] = idx.k[j] < 0 ? -idx.k[j] : idx.k[j];
        sgn[j] = idx.k[j] < 0 ? -1 : 1;
    }
    const long n_terms = ctx_.zeta_terms;
    const double nn = static_cast<double>(n_terms);
    const int window = 97;  // averaging window for the alternating tail

    // Partial nested sums; cur[j] = S_{j+1}(m) after step m.  Updating from
    // the outer level down lets each level read S_j(m-1) before it changes.
    std::vector<BigReal> cur(d, BigReal::exact_zero(fb));
    std::vector<BigReal> outer_history;
    outer_history.reserve(window);
    for (long m = 1; m <= n_terms; ++m) {
        for (int j = d - 1; j >= 0; --j) {
            Int mpow = pow_int(Int(m), static_cast<unsigned long>(s[j]));
            BigReal inner = (j == 0) ? BigReal::from_int(1, fb) : cur[j - 1];
            BigReal term = inner.div_int(mpow);
            if (sgn[j] < 0 && (m % 2 != 0)) term = -term;
            cur[j] += term;
        }
        if (sgn[d - 1] < 0 && m > n_terms - window) outer_history.push_back(cur[d - 1]);
    }

    BigReal value = cur[d - 1];
    if (sgn[d - 1] > 0) {
        // Non-alternating outer sum (exponent >= 2 by admissibility).
        // Freeze the inner factor at N: the tail splits into
        // S_{d-1}(N) * sum_{m>N} m^{-s} plus a drift term bounded by
        // sum_{m>N} ln(m/N)(1+ln m)^{d-2} m^{-s}.
        BigReal head = cur[d - 2];  // d >= 2 here
        value += head * zeta_tail_em(s[d - 1], n_terms);
        double drift = log_tail_integral(d - 2, 1, s[d - 1], nn);
        double endpoint = std::pow(1 + std::log(3 * nn), d - 2) / std::pow(nn, s[d - 1]);
        double bound = 4.0 * (drift + endpoint);
        value.add_err_pow10(static_cast<int>(std::ceil(std::log10(bound))));
    } else {
        // Alternating outer sum: iterated averaging of the trailing partial
        // sums accelerates the alternating component.
        std::vector<BigReal> v = outer_history;
        while (v.size() > 1) {
            for (size_t i = 0; i + 1 < v.size(); ++i) v[i] = (v[i] + v[i + 1]).half();
            v.pop_back();
        }
        if (!v.empty()) value = v[0];
        // Error bound by pairing consecutive terms of the alternating tail:
        // |tail| <= |a_{N+1}|/2 + sum_m |a_m - a_{m+1}| / 2 with
        // a_m = S_{d-1}(m-1) m^{-s}; both difference pieces have integrable
        // exponent >= 2.
        double lead = std::pow(1 + std::log(nn), d - 1) / std::pow(nn, s[d - 1]);
        double inner_step =
            (d >= 2) ? log_tail_integral(d - 2, 0, s[d - 1] + s[d - 2], nn) : 0.0;
        double outer_step = s[d - 1] * log_tail_integral(d - 1, 0, s[d - 1] + 1, nn);
        double bound = 2.0 * (lead + inner_step + outer_step);
        value.add_err_pow10(static_cast<int>(std::ceil(std::log10(bound))));
    }
    return value;
}

BigReal Numerics::eval_zeta(const Index& idx, bool modified) {
    const int d = idx.depth();
    BigReal v = BigReal::exact_zero(ctx_.fbits);
    if (d == 0) {
        v = BigReal::from_int(1, ctx_.fbits);
    } else if (d == 1) {
        int k = idx.k[0];
        if (k > 0) {
            // zeta(s) = sum_{m<=M} + EM tail
            int s = k;
            Rat part = 0;
            const long m0 = 64;
            for (long m = 1; m <= m0; ++m)
                part += Rat(1) / pow_int(Int(m), static_cast<unsigned long>(s));
            part.canonicalize();
            v = BigReal::from_rat(part, ctx_.fbits) + zeta_tail_em(s, m0);
        } else {
            v = -eta_crvz(-k);
        }
    } else {
        v = zeta_nested(idx);
    }
    if (modified) {
        v = v.mul_rat(pow2_rat(d));
        if (d % 2 != 0) v = -v;
    }
    return v;
}

Numerics::VerifyResult Numerics::verify(const LinComb& u) {
    BigReal r = eval_L1(u);
    return VerifyResult{r, r.abs_below_pow10(ctx_.pass_exponent())};
}

}  // namespace eulersum
