#pragma once

#include <mpfr.h>

#include <algorithm>
#include <complex>
#include <utility>

#include "so4sym/rational.hpp"

namespace so4sym {

/// Closed real interval [lo, hi] with MPFR endpoints and outward rounding.
/// Every operation returns an enclosure of the exact image, so results are
/// certified: the true value is always contained.
class RealInterval {
public:
    explicit RealInterval(mpfr_prec_t prec) : prec_(prec) {
        mpfr_init2(lo_, prec);
        mpfr_init2(hi_, prec);
        mpfr_set_zero(lo_, 1);
        mpfr_set_zero(hi_, 1);
    }
    RealInterval(const RealInterval& o) : RealInterval(o.prec_) {
        mpfr_set(lo_, o.lo_, MPFR_RNDD);
        mpfr_set(hi_, o.hi_, MPFR_RNDU);
    }
    RealInterval& operator=(const RealInterval& o) {
        if (this != &o) {
            mpfr_set_prec(lo_, o.prec_);
            mpfr_set_prec(hi_, o.prec_);
            prec_ = o.prec_;
            mpfr_set(lo_, o.lo_, MPFR_RNDD);
            mpfr_set(hi_, o.hi_, MPFR_RNDU);
        }
        return *this;
    }
    ~RealInterval() {
        mpfr_clear(lo_);
        mpfr_clear(hi_);
    }

    static RealInterval exact(const Rational& q, mpfr_prec_t prec) {
        RealInterval r(prec);
        mpfr_set_q(r.lo_, q.backend().data(), MPFR_RNDD);
        mpfr_set_q(r.hi_, q.backend().data(), MPFR_RNDU);
        return r;
    }

    /// Enclosure of pi.
    static RealInterval pi(mpfr_prec_t prec) {
        RealInterval r(prec);
        mpfr_const_pi(r.lo_, MPFR_RNDD);
        mpfr_const_pi(r.hi_, MPFR_RNDU);
        return r;
    }

    RealInterval operator+(const RealInterval& o) const {
        RealInterval r(prec_);
        mpfr_add(r.lo_, lo_, o.lo_, MPFR_RNDD);
        mpfr_add(r.hi_, hi_, o.hi_, MPFR_RNDU);
        return r;
    }
    RealInterval operator-(const RealInterval& o) const {
        RealInterval r(prec_);
        mpfr_sub(r.lo_, lo_, o.hi_, MPFR_RNDD);
        mpfr_sub(r.hi_, hi_, o.lo_, MPFR_RNDU);
        return r;
    }
    RealInterval operator-() const {
        RealInterval r(prec_);
        mpfr_neg(r.lo_, hi_, MPFR_RNDD);
        mpfr_neg(r.hi_, lo_, MPFR_RNDU);
        return r;
    }

    RealInterval operator*(const RealInterval& o) const {
        // min/max over the four endpoint products, rounded outward
        RealInterval r(prec_);
        mpfr_t t;
        mpfr_init2(t, prec_);
        bool first = true;
        const mpfr_srcptr as[2] = {lo_, hi_};
        const mpfr_srcptr bs[2] = {o.lo_, o.hi_};
        for (auto a : as)
            for (auto b : bs) {
                mpfr_mul(t, a, b, MPFR_RNDD);
                if (first || mpfr_cmp(t, r.lo_) < 0) mpfr_set(r.lo_, t, MPFR_RNDD);
                mpfr_mul(t, a, b, MPFR_RNDU);
                if (first || mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
                first = false;
            }
        mpfr_clear(t);
        return r;
    }

    /// Scales by an exact rational.
    RealInterval scaled(const Rational& q, mpfr_prec_t prec) const {
        return *this * RealInterval::exact(q, prec);
    }

    /// cos over this interval, using |cos'| <= 1 to bound the excursion
    /// between the endpoint values. Valid for any interval; tight for
    /// narrow ones, which is the only case we produce.
    RealInterval cos_enclosure() const {
        return lipschitz_enclosure(mpfr_cos);
    }
    RealInterval sin_enclosure() const {
        return lipschitz_enclosure(mpfr_sin);
    }

    bool contains_zero() const {
        return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0;
    }
    bool is_exact_zero() const {
        return mpfr_zero_p(lo_) && mpfr_zero_p(hi_);
    }
    /// +1 if the interval is strictly positive, -1 strictly negative, 0 undecided.
    int certain_sign() const {
        if (mpfr_sgn(lo_) > 0) return 1;
        if (mpfr_sgn(hi_) < 0) return -1;
        return 0;
    }
    double width() const {
        mpfr_t t;
        mpfr_init2(t, prec_);
        mpfr_sub(t, hi_, lo_, MPFR_RNDU);
        double w = mpfr_get_d(t, MPFR_RNDU);
        mpfr_clear(t);
        return w;
    }
    double midpoint() const {
        mpfr_t t;
        mpfr_init2(t, prec_);
        mpfr_add(t, lo_, hi_, MPFR_RNDN);
        mpfr_div_2ui(t, t, 1, MPFR_RNDN);
        double m = mpfr_get_d(t, MPFR_RNDN);
        mpfr_clear(t);
        return m;
    }
    double lower() const { return mpfr_get_d(lo_, MPFR_RNDD); }
    double upper() const { return mpfr_get_d(hi_, MPFR_RNDU); }

private:
    using UnaryFn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);

    RealInterval lipschitz_enclosure(UnaryFn f) const {
        RealInterval r(prec_);
        mpfr_t a, b, w;
        mpfr_init2(a, prec_);
        mpfr_init2(b, prec_);
        mpfr_init2(w, prec_);
        f(a, lo_, MPFR_RNDD);
        f(b, hi_, MPFR_RNDD);
        if (mpfr_cmp(a, b) > 0) mpfr_swap(a, b);
        mpfr_sub(w, hi_, lo_, MPFR_RNDU);
        mpfr_sub(r.lo_, a, w, MPFR_RNDD);
        f(a, lo_, MPFR_RNDU);
        f(b, hi_, MPFR_RNDU);
        if (mpfr_cmp(a, b) < 0) mpfr_swap(a, b);
        mpfr_add(r.hi_, a, w, MPFR_RNDU);
        // cos/sin values never leave [-1, 1]
        mpfr_set_si(a, -1, MPFR_RNDD);
        mpfr_set_si(b, 1, MPFR_RNDU);
        if (mpfr_cmp(r.lo_, a) < 0) mpfr_set(r.lo_, a, MPFR_RNDD);
        if (mpfr_cmp(r.hi_, b) > 0) mpfr_set(r.hi_, b, MPFR_RNDU);
        mpfr_clear(a);
        mpfr_clear(b);
        mpfr_clear(w);
        return r;
    }

    mpfr_prec_t prec_;
    mpfr_t lo_, hi_;
};

/// Rectangular complex enclosure.
struct ComplexInterval {
    RealInterval re, im;

    ComplexInterval(RealInterval r, RealInterval i) : re(std::move(r)), im(std::move(i)) {}

    ComplexInterval operator+(const ComplexInterval& o) const {
        return {re + o.re, im + o.im};
    }
    ComplexInterval operator*(const ComplexInterval& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    std::complex<double> midpoint() const {
        return {re.midpoint(), im.midpoint()};
    }
    double width() const { return std::max(re.width(), im.width()); }
    bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }
    bool is_exact_zero() const { return re.is_exact_zero() && im.is_exact_zero(); }
};

}  // namespace so4sym
