// Development utility: prints reference values from the arbitrary-precision
// oracle and worst-case deviations of the fast implementations over the
// domains the library uses. Not registered with ctest; run by hand when
// regenerating frozen constants.
#include <cinttypes>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdint>
#include <cstring>

#include "mp_oracle.hpp"
#include "specfun.hpp"

using udwh::Complex;
namespace sf = udwh::specfun;
namespace mp = udwh::mporacle;

namespace {

// Deterministic quasi-random stream (splitmix64 -> [0,1)).
struct Rng {
  uint64_t state;
  explicit Rng(uint64_t seed) : state(seed) {}
  double next() {
    state += 0x9e3779b97f4a7c15ull;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    z ^= z >> 31;
    return (z >> 11) * 0x1.0p-53;
  }
};

void scan_w(int n) {
  Rng rng(12345);
  double worst = 0.0;
  Complex worst_z;
  for (int i = 0; i < n; ++i) {
    const double r = 30.0 * std::sqrt(rng.next());
    const double phi = M_PI * rng.next();  // upper half plane
    Complex z(r * std::cos(phi), r * std::sin(phi));
    const double e = mp::rel_err(sf::faddeeva_w(z), mp::faddeeva_w_ref(z));
    if (e > worst) { worst = e; worst_z = z; }
  }
  std::printf("w upper-half worst rel: %.3e at z = (%.6f, %.6f)\n", worst,
              worst_z.real(), worst_z.imag());
  // representable lower strip
  worst = 0.0;
  for (int i = 0; i < n / 4; ++i) {
    const double x = -12.0 + 24.0 * rng.next();
    const double y = -6.0 * rng.next();
    Complex z(x, y);
    const double e = mp::rel_err(sf::faddeeva_w(z), mp::faddeeva_w_ref(z));
    if (e > worst) { worst = e; worst_z = z; }
  }
  std::printf("w lower strip worst rel: %.3e at z = (%.6f, %.6f)\n", worst,
              worst_z.real(), worst_z.imag());
}

void scan_erf(int n) {
  Rng rng(777);
  double worst = 0.0;
  Complex worst_z;
  for (int i = 0; i < n; ++i) {
    Complex z(-10.0 + 20.0 * rng.next(), -10.0 + 20.0 * rng.next());
    const double e = mp::rel_err(sf::erf(z), mp::erf_ref(z));
    if (e > worst) { worst = e; worst_z = z; }
  }
  std::printf("erf box10 worst rel: %.3e at z = (%.6f, %.6f)\n", worst,
              worst_z.real(), worst_z.imag());
}

void scan_real(int n) {
  Rng rng(31);
  double worst_d = 0.0, xd = 0.0, worst_i = 0.0, xi = 0.0;
  for (int i = 0; i < n; ++i) {
    double x = -30.0 + 60.0 * rng.next();
    double e = mp::rel_err(sf::dawson(x), mp::dawson_ref(x));
    if (e > worst_d) { worst_d = e; xd = x; }
    x = -26.0 + 52.0 * rng.next();
    e = mp::rel_err(sf::erfi(x), mp::erfi_ref(x));
    if (e > worst_i) { worst_i = e; xi = x; }
  }
  std::printf("dawson worst rel: %.3e at x = %.6f\n", worst_d, xd);
  std::printf("erfi   worst rel: %.3e at x = %.6f\n", worst_i, xi);
}

void dump_constants() {
  std::printf("erf(1)        = %.17g\n", mp::erf_ref(Complex(1.0, 0.0)).real());
  std::printf("erfi(1)       = %.17g\n", mp::erfi_ref(1.0));
  std::printf("dawson(1)     = %.17g\n", mp::dawson_ref(1.0));
  std::printf("dawson(5/sqrt2)= %.17g\n", mp::dawson_ref(5.0 / std::sqrt(2.0)));
  const Complex w12 = mp::faddeeva_w_ref(Complex(1.0, 2.0));
  std::printf("w(1+2i)       = %.17g %+.17gi\n", w12.real(), w12.imag());
  const Complex e2i = mp::erf_ref(Complex(2.0, 1.0));
  std::printf("erf(2+i)      = %.17g %+.17gi\n", e2i.real(), e2i.imag());
  std::printf("erf(1)*sqrt(pi)/2 = %.17g  (gaussian integral on [0,1])\n",
              mp::erf_ref(Complex(1.0, 0.0)).real() * 0.88622692545275801);
  // asymptotic ratio checks
  const Complex w50 = mp::faddeeva_w_ref(Complex(0.0, 50.0));
  std::printf("w(50i)*50*sqrt(pi) = %.17g\n", w50.real() * 50.0 * std::sqrt(M_PI));
}

}  // namespace

int main(int argc, char** argv) {
  const int n = argc > 1 ? std::atoi(argv[1]) : 400;
  dump_constants();
  scan_w(n);
  scan_erf(n);
  scan_real(n);
  return 0;
}
