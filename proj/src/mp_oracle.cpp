#include "mp_oracle.hpp"

#include <mpfr.h>

#include <algorithm>
#include <climits>
#include <cmath>

namespace udwh::mporacle {
namespace {

// Minimal RAII wrapper over mpfr_t; only the operations the oracle needs.
class Mp {
 public:
  explicit Mp(mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
  Mp(double x, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_d(v_, x, MPFR_RNDN); }
  Mp(const Mp& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
  Mp& operator=(const Mp& o) {
    if (this != &o) mpfr_set(v_, o.v_, MPFR_RNDN);
    return *this;
  }
  ~Mp() { mpfr_clear(v_); }

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }
  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

 private:
  mpfr_t v_;
};

Mp binop(const Mp& a, const Mp& b,
         int (*op)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t)) {
  Mp r(std::max(a.prec(), b.prec()));
  op(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}

Mp operator+(const Mp& a, const Mp& b) { return binop(a, b, mpfr_add); }
Mp operator-(const Mp& a, const Mp& b) { return binop(a, b, mpfr_sub); }
Mp operator*(const Mp& a, const Mp& b) { return binop(a, b, mpfr_mul); }
Mp operator/(const Mp& a, const Mp& b) { return binop(a, b, mpfr_div); }

Mp neg(const Mp& a) {
  Mp r(a.prec());
  mpfr_neg(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}

Mp div_ui(const Mp& a, unsigned long n) {
  Mp r(a.prec());
  mpfr_div_ui(r.raw(), a.raw(), n, MPFR_RNDN);
  return r;
}

Mp exp_mp(const Mp& a) {
  Mp r(a.prec());
  mpfr_exp(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}

Mp sqrt_pi(mpfr_prec_t prec) {
  Mp r(prec);
  mpfr_const_pi(r.raw(), MPFR_RNDN);
  mpfr_sqrt(r.raw(), r.raw(), MPFR_RNDN);
  return r;
}

struct Mpc {
  Mp re, im;
  Mpc(mpfr_prec_t prec) : re(prec), im(prec) {}
  Mpc(Complex z, mpfr_prec_t prec) : re(z.real(), prec), im(z.imag(), prec) {}
  Complex to_complex() const { return {re.to_double(), im.to_double()}; }
};

Mpc operator+(const Mpc& a, const Mpc& b) {
  Mpc r(a.re.prec());
  r.re = a.re + b.re;
  r.im = a.im + b.im;
  return r;
}

Mpc operator-(const Mpc& a, const Mpc& b) {
  Mpc r(a.re.prec());
  r.re = a.re - b.re;
  r.im = a.im - b.im;
  return r;
}

Mpc operator*(const Mpc& a, const Mpc& b) {
  Mpc r(a.re.prec());
  r.re = a.re * b.re - a.im * b.im;
  r.im = a.re * b.im + a.im * b.re;
  return r;
}

Mpc mul_real(const Mpc& a, const Mp& s) {
  Mpc r(a.re.prec());
  r.re = a.re * s;
  r.im = a.im * s;
  return r;
}

Mpc div_ui(const Mpc& a, unsigned long n) {
  Mpc r(a.re.prec());
  r.re = div_ui(a.re, n);
  r.im = div_ui(a.im, n);
  return r;
}

Mpc neg(const Mpc& a) {
  Mpc r(a.re.prec());
  r.re = neg(a.re);
  r.im = neg(a.im);
  return r;
}

Mpc exp_mpc(const Mpc& a) {
  Mpc r(a.re.prec());
  Mp mag = exp_mp(a.re);
  Mp c(a.re.prec()), s(a.re.prec());
  mpfr_sin_cos(s.raw(), c.raw(), a.im.raw(), MPFR_RNDN);
  r.re = mag * c;
  r.im = mag * s;
  return r;
}

// Largest binary exponent across the two components; LONG_MIN for zero.
long max_exp(const Mpc& a) {
  long e = LONG_MIN;
  if (!mpfr_zero_p(a.re.raw())) e = std::max(e, static_cast<long>(mpfr_get_exp(a.re.raw())));
  if (!mpfr_zero_p(a.im.raw())) e = std::max(e, static_cast<long>(mpfr_get_exp(a.im.raw())));
  return e;
}

// Working precision: 30+ digits of headroom plus the cancellation the
// alternating Maclaurin series runs through. The partial sums peak near
// exp(|z|^2 (2 ln|z| - ln|z|^2 + 1)) while quantities like erfc shrink to
// exp(-|z|^2); ~2.9 |z|^2 bits cover the full span.
mpfr_prec_t prec_for(Complex z) {
  const double z2 = std::norm(z);
  const double bits = 256.0 + 3.0 * z2;
  return static_cast<mpfr_prec_t>(std::min(bits, 32768.0));
}

// erf via its Maclaurin series at full precision. Terms are generated by the
// recurrence t_{n} = t_{n-1} * (-z^2)/n, summed until they stop moving the
// running sum at working precision; the precision choice above keeps the
// cancellation harmless. Exponent bookkeeping stays in MPFR because the
// partial sums overflow double range well before |z| reaches 30.
Mpc erf_series_mp(const Mpc& z, mpfr_prec_t prec) {
  const Mpc z2 = z * z;
  Mpc term = z;
  Mpc sum = z;
  const long nmin = static_cast<long>(std::abs(z2.re.to_double()) + std::abs(z2.im.to_double())) + 8;
  for (long n = 1; n < 40000; ++n) {
    term = div_ui(term * neg(z2), static_cast<unsigned long>(n));
    const Mpc contrib = div_ui(term, static_cast<unsigned long>(2 * n + 1));
    sum = sum + contrib;
    if (n > nmin) {
      const long ec = max_exp(contrib);
      const long es = max_exp(sum);
      if (ec == LONG_MIN || ec < es - static_cast<long>(prec) - 32) break;
    }
  }
  Mp pref(prec);
  mpfr_set_ui(pref.raw(), 2, MPFR_RNDN);
  pref = pref / sqrt_pi(prec);
  return mul_real(sum, pref);
}

Mpc erf_mp(Complex z, mpfr_prec_t prec) { return erf_series_mp(Mpc(z, prec), prec); }

}  // namespace

Complex erf_ref(Complex z) { return erf_mp(z, prec_for(z)).to_complex(); }

Complex erfc_ref(Complex z) {
  const mpfr_prec_t prec = prec_for(z);
  Mpc one(Complex(1.0, 0.0), prec);
  return (one - erf_mp(z, prec)).to_complex();
}

Complex faddeeva_w_ref(Complex z) {
  // w(z) = exp(-z^2) (1 - erf(-iz))
  const mpfr_prec_t prec = prec_for(z);
  const Complex miz(z.imag(), -z.real());
  Mpc one(Complex(1.0, 0.0), prec);
  Mpc erfc_miz = one - erf_mp(miz, prec);
  Mpc zz = Mpc(z, prec) * Mpc(z, prec);
  return (exp_mpc(neg(zz)) * erfc_miz).to_complex();
}

double erfi_ref(double x) {
  // erf(ix) = i erfi(x); the series for imaginary argument has no
  // cancellation at all, so modest precision suffices.
  return erf_mp(Complex(0.0, x), 320).to_complex().imag();
}

double dawson_ref(double x) {
  const mpfr_prec_t prec = 320;
  Mpc e = erf_mp(Complex(0.0, x), prec);  // i * erfi(x)
  Mp xx(x, prec);
  Mp scale = exp_mp(neg(xx * xx)) * sqrt_pi(prec);
  mpfr_div_ui(scale.raw(), scale.raw(), 2, MPFR_RNDN);
  return (scale * e.im).to_double();
}

double rel_err(Complex approx, Complex ref) {
  const double denom = std::abs(ref);
  if (denom == 0.0) return std::abs(approx) == 0.0 ? 0.0 : 1.0;
  return std::abs(approx - ref) / denom;
}

}  // namespace udwh::mporacle
