#include "arcmap/numerics.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include "arcmap/util.hpp"

namespace arcmap {

namespace {

// FFTW plans are cached per size; plan creation is not thread-safe, so it is
// guarded. Execution uses fftw_execute_dft on caller buffers.
struct PlanCache {
  std::mutex mtx;
  std::map<int, fftw_plan> fwd, bwd;

  fftw_plan get(int n, bool forward) {
    std::lock_guard<std::mutex> lock(mtx);
    auto& table = forward ? fwd : bwd;
    auto it = table.find(n);
    if (it != table.end()) return it->second;
    fftw_complex* buf = fftw_alloc_complex(n);
    fftw_plan plan = fftw_plan_dft_1d(n, buf, buf,
                                      forward ? FFTW_FORWARD : FFTW_BACKWARD,
                                      FFTW_ESTIMATE | FFTW_UNALIGNED);
    fftw_free(buf);
    table[n] = plan;
    return plan;
  }
};

PlanCache& plans() {
  static PlanCache cache;
  return cache;
}

void run_fft(ComplexVec& data, bool forward) {
  int n = static_cast<int>(data.size());
  fftw_plan plan = plans().get(n, forward);
  fftw_execute_dft(plan, reinterpret_cast<fftw_complex*>(data.data()),
                   reinterpret_cast<fftw_complex*>(data.data()));
}

void check_even(std::size_t n) {
  if (n < 4 || n % 2 != 0)
    throw std::invalid_argument("periodic samples need even n >= 4");
}

int freq_of(int k, int n) { return k < n / 2 ? k : k - n; }

}  // namespace

RealVec trig_diff(const RealVec& samples) {
  int n = static_cast<int>(samples.size());
  check_even(samples.size());
  ComplexVec x(samples.begin(), samples.end());
  run_fft(x, true);
  for (int k = 0; k < n; ++k) {
    int f = (k == n / 2) ? 0 : freq_of(k, n);
    x[k] *= Complex(0, f);
  }
  run_fft(x, false);
  RealVec out(n);
  for (int k = 0; k < n; ++k) out[k] = x[k].real() / n;
  return out;
}

RealVec conjugate_periodic(const RealVec& samples) {
  int n = static_cast<int>(samples.size());
  check_even(samples.size());
  ComplexVec x(samples.begin(), samples.end());
  run_fft(x, true);
  x[0] = 0;
  x[n / 2] = 0;
  for (int k = 1; k < n; ++k) {
    if (k == n / 2) continue;
    x[k] *= Complex(0, freq_of(k, n) > 0 ? -1.0 : 1.0);
  }
  run_fft(x, false);
  RealVec out(n);
  for (int k = 0; k < n; ++k) out[k] = x[k].real() / n;
  return out;
}

TrigInterpolant::TrigInterpolant(const RealVec& samples) {
  check_even(samples.size());
  coeffs_.assign(samples.begin(), samples.end());
  run_fft(coeffs_, true);
  double inv = 1.0 / samples.size();
  for (auto& c : coeffs_) c *= inv;
}

double TrigInterpolant::operator()(double tHat) const {
  int n = static_cast<int>(coeffs_.size());
  Complex acc = 0;
  for (int k = 0; k < n; ++k) {
    if (k == n / 2) {
      acc += coeffs_[k] * std::cos(0.5 * n * tHat);
    } else {
      acc += coeffs_[k] * std::exp(Complex(0, freq_of(k, n) * tHat));
    }
  }
  return acc.real();
}

RealVec continuous_arg(const ComplexVec& points) {
  RealVec out(points.size());
  if (points.empty()) return out;
  out[0] = std::arg(points[0]);
  for (std::size_t i = 1; i < points.size(); ++i)
    out[i] = out[i - 1] + std::arg(points[i] / points[i - 1]);
  return out;
}

GmresResult gmres(const std::function<RealVec(const RealVec&)>& apply,
                  const RealVec& b, double tol, int maxit) {
  const int n = static_cast<int>(b.size());
  GmresResult res;
  res.x.assign(n, 0.0);

  auto nrm = [](const RealVec& v) {
    double s = 0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
  };

  double bnorm = nrm(b);
  if (bnorm == 0.0) {
    res.converged = true;
    return res;
  }
  if (!std::isfinite(bnorm)) {
    res.breakdown = true;
    return res;
  }

  std::vector<RealVec> V;
  V.push_back(b);
  for (double& v : V[0]) v /= bnorm;

  std::vector<RealVec> H;  // H[j] holds column j, length j+2
  RealVec cs, sn, g;
  g.push_back(bnorm);

  int j = 0;
  for (; j < maxit; ++j) {
    RealVec w = apply(V[j]);
    RealVec hcol(j + 2, 0.0);
    for (int i = 0; i <= j; ++i) {
      double dot = 0;
      for (int k = 0; k < n; ++k) dot += w[k] * V[i][k];
      hcol[i] = dot;
      for (int k = 0; k < n; ++k) w[k] -= dot * V[i][k];
    }
    double wn = nrm(w);
    hcol[j + 1] = wn;

    // apply previous Givens rotations
    for (int i = 0; i < j; ++i) {
      double t = cs[i] * hcol[i] + sn[i] * hcol[i + 1];
      hcol[i + 1] = -sn[i] * hcol[i] + cs[i] * hcol[i + 1];
      hcol[i] = t;
    }
    double denom = std::hypot(hcol[j], hcol[j + 1]);
    if (denom == 0.0 || !std::isfinite(denom)) {
      res.breakdown = true;
      break;
    }
    cs.push_back(hcol[j] / denom);
    sn.push_back(hcol[j + 1] / denom);
    hcol[j] = denom;
    hcol[j + 1] = 0;
    g.push_back(-sn[j] * g[j]);
    g[j] *= cs[j];
    H.push_back(hcol);

    double rel = std::abs(g[j + 1]) / bnorm;
    bool lucky = wn <= 1e-14 * bnorm;
    if (rel <= tol || lucky) {
      res.converged = true;
      res.residual = rel;
      res.iterations = j + 1;
      break;
    }
    V.push_back(w);
    for (double& v : V.back()) v /= wn;
  }

  int used = res.converged ? res.iterations : j;
  if (!res.converged) {
    res.iterations = used;
    res.residual = used > 0 ? std::abs(g[used]) / bnorm : 1.0;
  }
  if (used == 0) return res;

  // back substitution on the triangularized Hessenberg system
  RealVec y(used, 0.0);
  for (int i = used - 1; i >= 0; --i) {
    double s = g[i];
    for (int k = i + 1; k < used; ++k) s -= H[k][i] * y[k];
    y[i] = s / H[i][i];
  }
  for (int i = 0; i < used; ++i)
    for (int k = 0; k < n; ++k) res.x[k] += y[i] * V[i][k];
  return res;
}

Complex cauchy_eval(const ComplexVec& f, const ComplexVec& eta,
                    const ComplexVec& etaw, Complex z) {
  const std::size_t n = eta.size();
  if (f.size() != n || etaw.size() != n)
    throw std::invalid_argument("cauchy_eval: size mismatch");
  Complex acc = 0;
  for (std::size_t k = 0; k < n; ++k) acc += f[k] * etaw[k] / (eta[k] - z);
  return acc / Complex(0, static_cast<double>(n));
}

ComplexVec cauchy_eval_many(const ComplexVec& f, const ComplexVec& eta,
                            const ComplexVec& etaw, const ComplexVec& targets) {
  ComplexVec out(targets.size());
  parallel_for(targets.size(), [&](std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i)
      out[i] = cauchy_eval(f, eta, etaw, targets[i]);
  });
  return out;
}

}  // namespace arcmap
