#pragma once

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "gdt/basis.hpp"
#include "gdt/signal.hpp"
#include "gdt/transform.hpp"

namespace gdt::testing {

constexpr double kPi = 3.14159265358979323846264338328;

inline Signal sampled_cosine(int n, int k, double phase, double amplitude = 1.0) {
  std::vector<double> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    v[static_cast<std::size_t>(i)] = amplitude * std::cos(kTwoPi * k * i / n + phase);
  return Signal::from_samples(std::move(v));
}

// Random signal built on the spectral side so the Nyquist bin stays empty.
inline Signal random_nyquist_free(std::mt19937& rng, int n) {
  std::uniform_real_distribution<double> amp(0.0, 1.0);
  std::uniform_real_distribution<double> ph(0.0, kTwoPi);
  FourierPolar fp;
  fp.dc = amp(rng) - 0.5;
  fp.bins.resize(static_cast<std::size_t>(n / 2 - 1));
  for (auto& bin : fp.bins) {
    bin.modulus = amp(rng);
    bin.phase = ph(rng);
  }
  fp.nyquist = 0.0;
  return synth_polar(fp, n);
}

inline Signal random_samples(std::mt19937& rng, int n) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> v(static_cast<std::size_t>(n));
  for (double& x : v) x = dist(rng);
  return Signal::from_samples(std::move(v));
}

inline double phase_distance(double a, double b) {
  return std::fabs(std::remainder(a - b, kTwoPi));
}

// ---------------------------------------------------------------------------
// Independent oracle: the same residual peel carried out purely on complex
// Fourier bin arrays, never touching the library's time-domain path.  Bin k
// holds z_k = m_k * exp(i*theta_k); harmonics landing at or above N/2 are
// discarded (band-limited reading).
// ---------------------------------------------------------------------------

struct OracleEntry {
  double modulus = 0.0;
  double phase = 0.0;  // [0, 2*pi)
};

inline std::vector<OracleEntry> oracle_analyze(const Signal& f, const NormalizedBasis& nb,
                                               double* dc_out = nullptr,
                                               std::vector<double>* residual_norms = nullptr) {
  const int n = f.size();
  const int k_max = n / 2 - 1;

  double sum = 0.0;
  for (int i = 0; i < n; ++i) sum += f[i];
  const double dc = sum / n;
  if (dc_out) *dc_out = dc;

  std::vector<std::complex<double>> bins(static_cast<std::size_t>(k_max), {0.0, 0.0});
  for (int k = 1; k <= k_max; ++k) {
    std::complex<double> z{0.0, 0.0};
    for (int i = 0; i < n; ++i) {
      const double x = kTwoPi * k * i / n;
      z += (f[i] - dc) * std::complex<double>(std::cos(x), -std::sin(x));
    }
    bins[static_cast<std::size_t>(k - 1)] = z * (2.0 / n);
  }

  // Nyquist content of f is invisible to the peel but belongs in the residual
  double nyq = 0.0;
  for (int i = 0; i < n; ++i) nyq += f[i] * ((i % 2 == 0) ? 1.0 : -1.0);
  nyq /= n;

  auto norm = [&bins, nyq]() {
    double acc = nyq * nyq;  // rms^2 of the Nyquist term
    for (const auto& z : bins) acc += 0.5 * std::norm(z);
    return std::sqrt(acc);
  };
  if (residual_norms) residual_norms->push_back(norm());

  std::vector<OracleEntry> entries(static_cast<std::size_t>(k_max));
  for (int k = 1; k <= k_max; ++k) {
    const std::complex<double> z = bins[static_cast<std::size_t>(k - 1)];
    OracleEntry e;
    e.modulus = std::abs(z);
    e.phase = e.modulus == 0.0 ? 0.0 : wrap_phase(std::arg(z));
    entries[static_cast<std::size_t>(k - 1)] = e;
    for (const Harmonic& h : nb.harmonics()) {
      const long freq = static_cast<long>(h.index) * k;
      if (freq > k_max) continue;
      const double ph = h.index * e.phase + h.phase;
      bins[static_cast<std::size_t>(freq - 1)] -=
          e.modulus * h.amplitude * std::complex<double>(std::cos(ph), std::sin(ph));
    }
    if (residual_norms) residual_norms->push_back(norm());
  }
  return entries;
}

}  // namespace gdt::testing
