#include <mpfr.h>

#include "cnr/phylo.hpp"

namespace cnr {

namespace {

// Minimal directed-rounding interval on top of MPFR, just enough for the
// trigonometric sum: the result is known to be an integer, so certified
// rounding suffices.
struct Interval {
    mpfr_t lo, hi;
    explicit Interval(mpfr_prec_t prec) {
        mpfr_init2(lo, prec);
        mpfr_init2(hi, prec);
    }
    ~Interval() {
        mpfr_clear(lo);
        mpfr_clear(hi);
    }
    Interval(const Interval&) = delete;
    Interval& operator=(const Interval&) = delete;
    void set_si(long v) {
        mpfr_set_si(lo, v, MPFR_RNDD);
        mpfr_set_si(hi, v, MPFR_RNDU);
    }
};

void int_add(Interval& out, const Interval& a, const Interval& b) {
    mpfr_add(out.lo, a.lo, b.lo, MPFR_RNDD);
    mpfr_add(out.hi, a.hi, b.hi, MPFR_RNDU);
}

// division of positive intervals
void int_div_pos(Interval& out, const Interval& a, const Interval& b) {
    mpfr_div(out.lo, a.lo, b.hi, MPFR_RNDD);
    mpfr_div(out.hi, a.hi, b.lo, MPFR_RNDU);
}

// sin over [a.lo, a.hi] contained in (0, pi): concave, so the minimum sits at
// an endpoint and the maximum at an endpoint or at pi/2.
void int_sin(Interval& out, const Interval& a, mpfr_prec_t prec) {
    mpfr_t s1, s2, halfpi_lo, halfpi_hi;
    mpfr_inits2(prec, s1, s2, halfpi_lo, halfpi_hi, static_cast<mpfr_ptr>(nullptr));
    mpfr_sin(s1, a.lo, MPFR_RNDD);
    mpfr_sin(s2, a.hi, MPFR_RNDD);
    mpfr_min(out.lo, s1, s2, MPFR_RNDD);
    mpfr_sin(s1, a.lo, MPFR_RNDU);
    mpfr_sin(s2, a.hi, MPFR_RNDU);
    mpfr_max(out.hi, s1, s2, MPFR_RNDU);
    mpfr_const_pi(halfpi_lo, MPFR_RNDD);
    mpfr_const_pi(halfpi_hi, MPFR_RNDU);
    mpfr_div_ui(halfpi_lo, halfpi_lo, 2, MPFR_RNDD);
    mpfr_div_ui(halfpi_hi, halfpi_hi, 2, MPFR_RNDU);
    if (mpfr_cmp(a.lo, halfpi_hi) <= 0 && mpfr_cmp(a.hi, halfpi_lo) >= 0)
        mpfr_set_si(out.hi, 1, MPFR_RNDU);
    mpfr_clears(s1, s2, halfpi_lo, halfpi_hi, static_cast<mpfr_ptr>(nullptr));
}

// positive base power
void int_pow_pos(Interval& out, const Interval& a, int e, mpfr_prec_t prec) {
    Interval acc(prec);
    acc.set_si(1);
    for (int i = 0; i < e; ++i) {
        mpfr_mul(acc.lo, acc.lo, a.lo, MPFR_RNDD);
        mpfr_mul(acc.hi, acc.hi, a.hi, MPFR_RNDU);
    }
    mpfr_set(out.lo, acc.lo, MPFR_RNDD);
    mpfr_set(out.hi, acc.hi, MPFR_RNDU);
}

}  // namespace

long long verlinde(int d, const BigRational& l) {
    BigRational twol = l * 2;
    if (twol.get_den() != 1) throw ParityViolation();
    long L = twol.get_num().get_si();  // 2l
    if (L < 0) throw std::invalid_argument("negative level");
    bool half_integer = (l.get_den() == 2);
    if (half_integer && d % 2 == 1) throw ParityViolation();
    if (L == 0) return 1;

    for (mpfr_prec_t prec = 128; prec <= 4096; prec *= 2) {
        Interval sum(prec), term(prec), theta(prec), s(prec), p(prec), one(prec);
        sum.set_si(0);
        one.set_si(1);
        Interval pi(prec);
        mpfr_const_pi(pi.lo, MPFR_RNDD);
        mpfr_const_pi(pi.hi, MPFR_RNDU);
        bool ok = true;
        for (long j = 0; j <= L && ok; ++j) {
            // theta = (2j+1) pi / (4l+2)
            mpfr_mul_si(theta.lo, pi.lo, 2 * j + 1, MPFR_RNDD);
            mpfr_mul_si(theta.hi, pi.hi, 2 * j + 1, MPFR_RNDU);
            mpfr_div_si(theta.lo, theta.lo, 2 * L + 2, MPFR_RNDD);
            mpfr_div_si(theta.hi, theta.hi, 2 * L + 2, MPFR_RNDU);
            int_sin(s, theta, prec);
            if (mpfr_sgn(s.lo) <= 0) { ok = false; break; }  // insufficient precision
            int_pow_pos(p, s, d, prec);
            int_div_pos(term, one, p);
            bool negative = (d % 2 == 1) && (j % 2 == 1);  // (-1)^(dj)
            if (negative) {
                mpfr_swap(term.lo, term.hi);
                mpfr_neg(term.lo, term.lo, MPFR_RNDD);
                mpfr_neg(term.hi, term.hi, MPFR_RNDU);
            }
            int_add(sum, sum, term);
        }
        // divide by 2l+1
        mpfr_div_si(sum.lo, sum.lo, L + 1, MPFR_RNDD);
        mpfr_div_si(sum.hi, sum.hi, L + 1, MPFR_RNDU);
        mpfr_t fl, cl;
        mpfr_inits2(prec, fl, cl, static_cast<mpfr_ptr>(nullptr));
        mpfr_ceil(cl, sum.lo);
        mpfr_floor(fl, sum.hi);
        bool unique = ok && mpfr_cmp(cl, fl) == 0;
        long long value = unique ? mpfr_get_si(cl, MPFR_RNDN) : 0;
        mpfr_clears(fl, cl, static_cast<mpfr_ptr>(nullptr));
        if (unique) return value;
    }
    throw PrecisionFailure();
}

}  // namespace cnr
