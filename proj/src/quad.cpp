#include "quad.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace udwh::quad {
namespace {

// Gauss 7 / Kronrod 15 node pair (QUADPACK dqk15 constants).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct EvalBudget {
  long long used = 0;
  long long cap = 0;
};

struct RuleResult {
  Complex value{0.0, 0.0};
  double err = 0.0;
  double resabs = 0.0;
};

// One Kronrod application on [a,b]. The integrand may report its own
// uncertainty (used when the "integrand" is itself an inner integral);
// that part is integrated with the Kronrod weights and folded into err.
template <typename F>
RuleResult gk15(const F& f, double a, double b, EvalBudget& budget) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  Complex fv[15];
  double fe[15];
  budget.used += 15;
  for (int j = 0; j < 7; ++j) {
    const double dx = h * kXgk[j];
    f(c - dx, fv[j], fe[j]);
    f(c + dx, fv[14 - j], fe[14 - j]);
  }
  f(c, fv[7], fe[7]);

  Complex resk = kWgk[7] * fv[7];
  Complex resg = kWg[3] * fv[7];
  double resabs = kWgk[7] * std::abs(fv[7]);
  double aux = kWgk[7] * fe[7];
  for (int j = 0; j < 7; ++j) {
    const Complex pair = fv[j] + fv[14 - j];
    resk += kWgk[j] * pair;
    resabs += kWgk[j] * (std::abs(fv[j]) + std::abs(fv[14 - j]));
    aux += kWgk[j] * (fe[j] + fe[14 - j]);
    if (j % 2 == 1) resg += kWg[j / 2] * pair;  // Gauss nodes sit at odd xgk indices
  }
  const Complex mean = resk * 0.5;
  double resasc = kWgk[7] * std::abs(fv[7] - mean);
  for (int j = 0; j < 7; ++j) {
    resasc += kWgk[j] * (std::abs(fv[j] - mean) + std::abs(fv[14 - j] - mean));
  }

  RuleResult r;
  r.value = resk * h;
  r.resabs = resabs * std::abs(h);
  double err = std::abs(resk - resg) * std::abs(h);
  const double asc = resasc * std::abs(h);
  if (asc != 0.0 && err != 0.0) {
    err = asc * std::min(1.0, std::pow(200.0 * err / asc, 1.5));
  }
  const double eps = std::numeric_limits<double>::epsilon();
  err = std::max(err, 50.0 * eps * r.resabs);
  r.err = err + aux * std::abs(h);
  return r;
}

struct Segment {
  double a, b;
  Complex value;
  double err;
  long seq;
};

struct WorstFirst {
  bool operator()(const Segment& x, const Segment& y) const {
    if (x.err != y.err) return x.err < y.err;
    return x.seq > y.seq;  // ties: refine the older segment first
  }
};

// Core adaptive driver over an initial partition. Deterministic: the node
// family is fixed and the next split is always the segment with the largest
// error estimate, ties broken by insertion order.
template <typename F>
QuadratureResult adapt(const F& f, std::span<const double> partition, const Tolerance& tol,
                       EvalBudget& budget) {
  std::priority_queue<Segment, std::vector<Segment>, WorstFirst> heap;
  Complex total{0.0, 0.0};
  double total_err = 0.0;
  double resabs = 0.0;
  long seq = 0;
  QuadratureResult out;

  for (size_t i = 0; i + 1 < partition.size(); ++i) {
    RuleResult r = gk15(f, partition[i], partition[i + 1], budget);
    heap.push({partition[i], partition[i + 1], r.value, r.err, seq++});
    total += r.value;
    total_err += r.err;
    resabs += r.resabs;
  }

  const double eps = std::numeric_limits<double>::epsilon();
  while (true) {
    const double target =
        std::max({tol.abs_tol, tol.rel_tol * std::abs(total), 100.0 * eps * resabs});
    if (total_err <= target) break;
    if (budget.used + 30 > budget.cap) {
      out.status = Status::budget_exhausted;
      break;
    }
    Segment worst = heap.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) break;  // below double resolution
    heap.pop();
    RuleResult left = gk15(f, worst.a, mid, budget);
    RuleResult right = gk15(f, mid, worst.b, budget);
    total += left.value + right.value - worst.value;
    total_err += left.err + right.err - worst.err;
    heap.push({worst.a, mid, left.value, left.err, seq++});
    heap.push({mid, worst.b, right.value, right.err, seq++});
  }

  out.value = total;
  out.error_estimate = total_err;
  return out;
}

template <typename Plain>
auto wrap_plain(const Plain& f) {
  return [&f](double x, Complex& v, double& e) {
    v = f(x);
    e = 0.0;
  };
}

}  // namespace

QuadratureResult integrate_1d(const Integrand1D& f, double a, double b, const Tolerance& tol) {
  EvalBudget budget{0, tol.max_evaluations};
  const double cuts[2] = {a, b};
  QuadratureResult r = adapt(wrap_plain(f), cuts, tol, budget);
  r.evaluations = budget.used;
  return r;
}

QuadratureResult integrate_1d_pieces(const Integrand1D& f, double a, double b,
                                     std::span<const double> interior_cuts,
                                     const Tolerance& tol) {
  EvalBudget budget{0, tol.max_evaluations};
  std::vector<double> part;
  part.push_back(a);
  for (double c : interior_cuts) {
    if (c > part.back() && c < b) part.push_back(c);
  }
  part.push_back(b);
  QuadratureResult r = adapt(wrap_plain(f), part, tol, budget);
  r.evaluations = budget.used;
  return r;
}

QuadratureResult integrate_semi_infinite_oscillatory(const Integrand1D& f,
                                                     double osc_wavelength,
                                                     const Tolerance& tol) {
  QuadratureResult out;
  if (!(osc_wavelength > 0.0) || !std::isfinite(osc_wavelength)) {
    throw Error(Errc::invalid_argument, "oscillatory integrator: wavelength must be positive");
  }
  const double h = 0.5 * osc_wavelength;
  EvalBudget budget{0, tol.max_evaluations};
  Tolerance seg_tol;
  seg_tol.rel_tol = tol.rel_tol / 8.0;

  std::vector<double> seg_mag;
  std::vector<Complex> avg;  // iterated-averaging diagonal row
  Complex sum{0.0, 0.0};
  Complex prev_diag{0.0, 0.0};
  Complex prev_seg{0.0, 0.0};
  double quad_err = 0.0;
  double peak = 0.0;
  int alternations = 0;
  const double eps = std::numeric_limits<double>::epsilon();

  constexpr int kMaxSegments = 4000;
  for (int k = 0; k < kMaxSegments; ++k) {
    const double a = k * h;
    const double b = (k + 1) * h;
    seg_tol.max_evaluations = budget.cap - budget.used;
    seg_tol.abs_tol = std::max(tol.abs_tol / 16.0, 5e-17 * peak);
    if (seg_tol.max_evaluations < 60) {
      out.status = Status::budget_exhausted;
      break;
    }
    QuadratureResult seg = integrate_1d(f, a, b, seg_tol);
    budget.used += seg.evaluations;
    const bool seg_budget = seg.status == Status::budget_exhausted;
    quad_err += seg.error_estimate;
    sum += seg.value;
    seg_mag.push_back(std::abs(seg.value));
    peak = std::max(peak, seg_mag.back());
    if (k > 0 && (std::real(seg.value) * std::real(prev_seg) < 0.0 ||
                  std::imag(seg.value) * std::imag(prev_seg) < 0.0)) {
      ++alternations;
    }
    prev_seg = seg.value;

    // extend the averaging diagonal with the newest partial sum
    Complex carry = sum;
    for (auto& row : avg) {
      const Complex next = 0.5 * (row + carry);
      row = carry;
      carry = next;
    }
    avg.push_back(carry);
    const Complex diag = avg.back();

    if (k >= 3) {
      const double mk = seg_mag[k];
      const double mk1 = seg_mag[k - 1];
      const double ratio = mk1 > 0.0 ? std::min(mk / mk1, 0.9) : 0.0;
      const double tail_plain = mk * (1.0 + ratio / (1.0 - ratio));
      const double tail_accel = 2.0 * std::abs(diag - prev_diag);
      // The averaged diagonal is only trusted for genuinely alternating,
      // decaying tails; otherwise it would Abel-sum divergent integrands.
      const bool alternating = alternations >= (2 * k) / 3;
      const bool past_peak = mk <= 0.25 * peak;

      Complex value = sum;
      double tail = tail_plain;
      if (alternating && past_peak && tail_accel < tail_plain) {
        value = diag;
        tail = tail_accel;
      }
      out.value = value;
      out.error_estimate = quad_err + tail;
      const double target = std::max({tol.abs_tol, tol.rel_tol * std::abs(value),
                                      0.5 * quad_err + 8.0 * eps * peak});
      if (tail <= target) {
        out.evaluations = budget.used;
        return out;
      }
      if (seg_budget) {
        out.status = Status::budget_exhausted;
        break;
      }
      // stalled flat envelope: tail has not shrunk over 10 segments
      if (k >= 12 && seg_mag[k] >= 0.98 * seg_mag[k - 10] &&
          seg_mag[k] <= 1.05 * seg_mag[k - 10] && tail > target) {
        out.status = Status::non_decaying;
        out.error_estimate = quad_err + tail + seg_mag[k];
        break;
      }
    }
    prev_diag = diag;
  }

  if (out.status == Status::ok) out.status = Status::budget_exhausted;
  out.evaluations = budget.used;
  return out;
}

QuadratureResult integrate_2d(const Integrand2D& f, const Box& box, bool ordered,
                              const Tolerance& tol, std::span<const double> inner_cuts) {
  if (!(box.x_hi > box.x_lo) || !(box.y_hi > box.y_lo)) {
    throw Error(Errc::invalid_argument, "integrate_2d: degenerate box");
  }
  const double wx = box.x_hi - box.x_lo;
  const double cuts[2] = {box.x_lo, box.x_hi};

  // Inner integral at fixed outer coordinate, charged to the given budget.
  // Ordered domains integrate in the sheared variable s = x - y over
  // (0, x - y_lo]; the ordering kink is then a segment edge rather than an
  // interior diagonal, and the supplied cuts stay axis-aligned.
  auto inner = [&](double x, const Tolerance& it, EvalBudget& bud) -> QuadratureResult {
    Tolerance t = it;
    t.max_evaluations = std::max<long long>(bud.cap - bud.used, 0);
    QuadratureResult r;
    if (ordered) {
      const double s_hi = x - box.y_lo;
      const double s_lo = std::max(0.0, x - box.y_hi);
      if (!(s_hi > s_lo)) return r;
      r = integrate_1d_pieces([&](double s) { return f(x, x - s); }, s_lo, s_hi,
                              inner_cuts, t);
    } else {
      r = integrate_1d_pieces([&](double y) { return f(x, y); }, box.y_lo, box.y_hi,
                              inner_cuts, t);
    }
    bud.used += r.evaluations;
    return r;
  };

  EvalBudget budget{0, tol.max_evaluations};

  // Coarse pass sizes the absolute floor so pure-relative requests still
  // converge across outer regions where the inner integral is negligible.
  double scale = 0.0;
  {
    EvalBudget coarse_budget{0, std::max<long long>(tol.max_evaluations / 4, 4000)};
    Tolerance coarse_inner{0.0, 1e-2, 0};
    auto coarse_f = [&](double x, Complex& v, double& e) {
      QuadratureResult r = inner(x, coarse_inner, coarse_budget);
      v = r.value;
      e = r.error_estimate;
    };
    Tolerance outer_coarse{0.0, 3e-3, 0};
    QuadratureResult coarse = adapt(coarse_f, cuts, outer_coarse, coarse_budget);
    scale = std::abs(coarse.value) + coarse.error_estimate;
    budget.used += coarse_budget.used;
  }

  const double goal = std::max(tol.abs_tol, tol.rel_tol * scale);
  Tolerance inner_tol;
  inner_tol.abs_tol = goal > 0.0 ? 0.35 * goal / wx : 0.0;
  inner_tol.rel_tol = tol.rel_tol / 4.0;

  Status worst_inner = Status::ok;
  auto outer_f = [&](double x, Complex& v, double& e) {
    QuadratureResult r = inner(x, inner_tol, budget);
    if (r.status != Status::ok) worst_inner = r.status;
    v = r.value;
    e = r.error_estimate;
  };

  Tolerance outer_tol;
  outer_tol.abs_tol = 0.6 * goal;
  outer_tol.rel_tol = tol.rel_tol;
  QuadratureResult r = adapt(outer_f, cuts, outer_tol, budget);
  r.evaluations = budget.used;
  if (r.status == Status::ok && worst_inner != Status::ok) r.status = worst_inner;
  return r;
}

}  // namespace udwh::quad
