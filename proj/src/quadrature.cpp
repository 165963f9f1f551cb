#include "bosescatter/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

namespace bosescatter {

namespace {

// Gauss-Kronrod 7-15 nodes/weights on [-1, 1] (QUADPACK values).
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

struct Interval {
  double a, b;
  double value;
  double error;
  bool operator<(const Interval& o) const { return error < o.error; }
};

Interval gk15(const std::function<double(double)>& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double fv[15];
  for (int j = 0; j < 7; ++j) {
    fv[j] = f(center - half * kXgk[j]);
    fv[14 - j] = f(center + half * kXgk[j]);
  }
  fv[7] = f(center);

  double result_kronrod = kWgk[7] * fv[7];
  double result_gauss = kWg[3] * fv[7];
  for (int j = 0; j < 7; ++j) {
    result_kronrod += kWgk[j] * (fv[j] + fv[14 - j]);
    if (j % 2 == 1) result_gauss += kWg[j / 2] * (fv[j] + fv[14 - j]);
  }

  double mean = 0.5 * result_kronrod;
  double resasc = kWgk[7] * std::fabs(fv[7] - mean);
  for (int j = 0; j < 7; ++j)
    resasc += kWgk[j] * (std::fabs(fv[j] - mean) + std::fabs(fv[14 - j] - mean));
  resasc *= half;

  double err = std::fabs((result_kronrod - result_gauss) * half);
  if (resasc != 0.0 && err != 0.0)
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  if (!std::isfinite(result_kronrod) || !std::isfinite(err))
    throw ConvergenceError("integrate_adaptive: integrand produced a non-finite value");
  return {a, b, result_kronrod * half, err};
}

}  // namespace

IntegralResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                  const std::vector<double>& breakpoints, double rel_tol,
                                  double abs_tol, int max_subdivisions) {
  std::vector<double> edges;
  edges.push_back(a);
  for (double x : breakpoints)
    if (x > a && x < b) edges.push_back(x);
  edges.push_back(b);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  std::priority_queue<Interval> heap;
  double total = 0.0, total_err = 0.0;
  int count = 0;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    Interval iv = gk15(f, edges[i], edges[i + 1]);
    total += iv.value;
    total_err += iv.error;
    heap.push(iv);
    ++count;
  }

  auto tolerance = [&]() { return std::max(abs_tol, rel_tol * std::fabs(total)); };

  while (total_err > tolerance()) {
    if (count >= max_subdivisions)
      throw ConvergenceError("integrate_adaptive: subdivision budget exhausted (error " +
                             std::to_string(total_err) + " > tol " + std::to_string(tolerance()) + ")");
    Interval worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b)
      throw ConvergenceError("integrate_adaptive: interval underflow before reaching tolerance");
    Interval left = gk15(f, worst.a, mid);
    Interval right = gk15(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    ++count;
  }

  return {total, total_err, count};
}

}  // namespace bosescatter
