#include "gdt/transform.hpp"

#include <algorithm>
#include <cmath>

namespace gdt {

namespace {

// Fourier bin k of a raw sample buffer, in (modulus, phase) form.
SpectrumEntry project_bin(const std::vector<double>& samples, int k) {
  const int n = static_cast<int>(samples.size());
  double a = 0.0, b = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = kTwoPi * k * i / n;
    a += samples[static_cast<std::size_t>(i)] * std::cos(x);
    b += samples[static_cast<std::size_t>(i)] * std::sin(x);
  }
  a *= 2.0 / n;
  b *= 2.0 / n;
  SpectrumEntry e;
  e.modulus = std::hypot(a, b);
  e.phase = e.modulus == 0.0 ? 0.0 : wrap_phase(std::atan2(-b, a));
  return e;
}

void subtract_component(std::vector<double>& residual, const NormalizedBasis& nb, int k,
                        double phi, double amplitude, RenderMode mode) {
  const int n = static_cast<int>(residual.size());
  for (const Harmonic& h : nb.harmonics()) {
    const long freq = static_cast<long>(h.index) * k;
    if (mode == RenderMode::band_limited && freq >= n / 2) break;  // harmonics sorted by m
    const double amp = amplitude * h.amplitude;
    const double base_phase = h.index * phi + h.phase;
    for (int i = 0; i < n; ++i) {
      residual[static_cast<std::size_t>(i)] -= amp * std::cos(kTwoPi * freq * i / n + base_phase);
    }
  }
}

void zero_negligible_phases(PolarSpectrum& ps) {
  double max_mod = 0.0;
  for (const SpectrumEntry& e : ps.entries) max_mod = std::max(max_mod, e.modulus);
  for (SpectrumEntry& e : ps.entries) {
    if (e.modulus < 1e-12 * max_mod) e.phase = 0.0;
  }
}

}  // namespace

PolarSpectrum analyze(const Signal& f, const NormalizedBasis& nb, RenderMode mode) {
  const int n = f.size();
  const int k_max = n / 2 - 1;

  PolarSpectrum ps;
  ps.basis_label = nb.name();
  ps.mode = mode;

  double sum = 0.0;
  for (int i = 0; i < n; ++i) sum += f[i];
  ps.dc = sum / n;

  std::vector<double> residual(f.samples());
  for (double& v : residual) v -= ps.dc;

  ps.entries.resize(static_cast<std::size_t>(k_max));
  for (int k = 1; k <= k_max; ++k) {
    const SpectrumEntry e = project_bin(residual, k);
    ps.entries[static_cast<std::size_t>(k - 1)] = e;
    subtract_component(residual, nb, k, e.phase, e.modulus, mode);
  }
  zero_negligible_phases(ps);
  return ps;
}

Signal synthesize(const PolarSpectrum& ps, const NormalizedBasis& nb, int n, RenderMode mode) {
  return synthesize_range(ps, nb, n, mode, 1, ps.k_max(), true);
}

Signal synthesize_range(const PolarSpectrum& ps, const NormalizedBasis& nb, int n,
                        RenderMode mode, int k_lo, int k_hi, bool include_dc) {
  if (ps.k_max() > n / 2 - 1)
    throw Error(errc::bin_overflow, "spectrum has entries at or above N/2");

  std::vector<double> out(static_cast<std::size_t>(n), include_dc ? ps.dc : 0.0);
  Signal acc = Signal::from_samples(std::move(out));
  for (int k = std::max(1, k_lo); k <= std::min(k_hi, ps.k_max()); ++k) {
    const SpectrumEntry& e = ps.entries[static_cast<std::size_t>(k - 1)];
    if (e.modulus == 0.0) continue;
    acc = add(acc, render(nb, k, e.phase, e.modulus, n, mode));
  }
  return acc;
}

PolarSpectrum rescale_to_raw(const PolarSpectrum& ps, const BasisOrigin& origin) {
  // S'(y) = (1/s_1) S(y - theta_1) identically in y, so M S'(kx + Phi) equals
  // (M/s_1) S(kx + Phi - theta_1): the phase correction is a plain -theta_1,
  // independent of k.
  PolarSpectrum out = ps;
  for (int k = 1; k <= out.k_max(); ++k) {
    SpectrumEntry& e = out.entries[static_cast<std::size_t>(k - 1)];
    e.modulus /= origin.amplitude;
    if (e.modulus != 0.0) e.phase = wrap_phase(e.phase - origin.phase);
  }
  return out;
}

ResidualProfile residual_profile(const Signal& f, const NormalizedBasis& nb, RenderMode mode) {
  const int n = f.size();
  const int k_max = n / 2 - 1;

  double sum = 0.0;
  for (int i = 0; i < n; ++i) sum += f[i];
  const double dc = sum / n;

  std::vector<double> residual(f.samples());
  for (double& v : residual) v -= dc;

  auto residual_rms = [&residual, n]() {
    double acc = 0.0;
    for (double v : residual) acc += v * v;
    return std::sqrt(acc / n);
  };

  ResidualProfile profile;
  profile.norms.reserve(static_cast<std::size_t>(k_max) + 1);
  profile.norms.push_back(residual_rms());
  for (int k = 1; k <= k_max; ++k) {
    const SpectrumEntry e = project_bin(residual, k);
    subtract_component(residual, nb, k, e.phase, e.modulus, mode);
    profile.norms.push_back(residual_rms());
  }
  return profile;
}

}  // namespace gdt
