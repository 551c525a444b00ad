#include "gdt/basis.hpp"

#include <algorithm>
#include <cmath>

namespace gdt {

namespace {

constexpr double kPi = 3.14159265358979323846264338328;

}  // namespace

std::string to_string(RenderMode mode) {
  return mode == RenderMode::band_limited ? "band_limited" : "sampled";
}

RenderMode render_mode_from_string(const std::string& text) {
  if (text == "band_limited" || text == "band-limited") return RenderMode::band_limited;
  if (text == "sampled") return RenderMode::sampled;
  throw Error(errc::bad_argument, "unknown render mode: " + text);
}

Basis Basis::from_harmonics(std::vector<Harmonic> entries, std::string name) {
  std::vector<Harmonic> canon;
  canon.reserve(entries.size());
  for (Harmonic h : entries) {
    if (h.index < 1) throw Error(errc::bad_argument, "harmonic index must be >= 1");
    if (!std::isfinite(h.amplitude) || !std::isfinite(h.phase))
      throw Error(errc::non_finite_sample, "harmonic values must be finite");
    if (h.amplitude == 0.0) continue;
    if (h.amplitude < 0.0) {  // fold sign into the phase
      h.amplitude = -h.amplitude;
      h.phase += kPi;
    }
    h.phase = wrap_phase(h.phase);
    canon.push_back(h);
  }
  std::sort(canon.begin(), canon.end(),
            [](const Harmonic& a, const Harmonic& b) { return a.index < b.index; });
  for (std::size_t i = 1; i < canon.size(); ++i) {
    if (canon[i].index == canon[i - 1].index)
      throw Error(errc::duplicate_harmonic,
                  "duplicate harmonic index " + std::to_string(canon[i].index));
  }
  if (canon.empty() || canon.front().index != 1)
    throw Error(errc::no_fundamental, "basis needs a fundamental (m=1) with nonzero amplitude");
  return Basis(std::move(canon), std::move(name));
}

Basis Basis::from_signal(const Signal& s, std::string name) {
  const FourierPolar fp = dft_polar(s);
  const double norm = rms(s);
  const double fundamental = fp.bins.empty() ? 0.0 : fp.bins.front().modulus;
  if (fundamental <= 1e-9 * norm)
    throw Error(errc::no_fundamental, "signal has no usable fundamental (m=1) component");

  std::vector<Harmonic> entries;
  for (std::size_t i = 0; i < fp.bins.size(); ++i) {
    const PolarBin& bin = fp.bins[i];
    if (bin.modulus < 1e-12 * fundamental) continue;
    entries.push_back({static_cast<int>(i) + 1, bin.modulus, bin.phase});
  }
  return from_harmonics(std::move(entries), std::move(name));
}

Basis Basis::builtin(const std::string& name, int max_harmonic) {
  if (max_harmonic < 1) throw Error(errc::bad_argument, "max_harmonic must be >= 1");

  std::vector<Harmonic> entries;
  if (name == "cosine") {
    entries.push_back({1, 1.0, 0.0});
  } else if (name == "square") {
    for (int m = 1; m <= max_harmonic; m += 2) {
      entries.push_back({m, 4.0 / (kPi * m), 0.0});
    }
  } else if (name == "sawtooth") {
    // 2/pi * sum (-1)^(m+1) sin(mx)/m, written as cosines
    for (int m = 1; m <= max_harmonic; ++m) {
      const double phase = (m % 2 == 1) ? 1.5 * kPi : 0.5 * kPi;
      entries.push_back({m, 2.0 / (kPi * m), phase});
    }
  } else if (name == "triangle") {
    for (int m = 1; m <= max_harmonic; m += 2) {
      const double phase = (m % 4 == 1) ? 0.0 : kPi;
      entries.push_back({m, 8.0 / (kPi * kPi * m * m), phase});
    }
  } else {
    throw Error(errc::unknown_name, "unknown builtin basis: " + name);
  }
  return from_harmonics(std::move(entries), name);
}

NormalizedBasis normalize(const Basis& b) {
  const double s1 = b.fundamental_amplitude();
  const double theta1 = b.fundamental_phase();

  std::vector<Harmonic> out;
  out.reserve(b.harmonics().size());
  for (const Harmonic& h : b.harmonics()) {
    out.push_back({h.index, h.amplitude / s1, wrap_phase(h.phase - h.index * theta1)});
  }
  // exact unit zero-phase fundamental, independent of rounding above
  out.front().amplitude = 1.0;
  out.front().phase = 0.0;
  return NormalizedBasis(std::move(out), BasisOrigin{s1, theta1}, b.name());
}

std::string to_string(Convergence c) {
  switch (c) {
    case Convergence::orthogonal: return "Orthogonal";
    case Convergence::converging: return "Converging";
    case Convergence::not_converging: return "NotConverging";
  }
  return "?";
}

ConvergenceReport convergence_report(const Basis& b) {
  const double s1 = b.fundamental_amplitude();
  double ratio = 0.0;
  for (const Harmonic& h : b.harmonics()) {
    if (h.index == 1) continue;
    const double r = h.amplitude / s1;
    ratio += r * r;
  }
  ConvergenceReport report;
  report.ratio = ratio;
  report.classification = ratio == 0.0 ? Convergence::orthogonal
                          : ratio < 1.0 ? Convergence::converging
                                        : Convergence::not_converging;
  return report;
}

Signal render(const NormalizedBasis& nb, int k, double phi, double amplitude, int n,
              RenderMode mode) {
  if (k < 1 || k >= n / 2)
    throw Error(errc::frequency_out_of_range, "render frequency must satisfy 1 <= k < N/2");

  std::vector<double> out(static_cast<std::size_t>(n), 0.0);
  for (const Harmonic& h : nb.harmonics()) {
    const long freq = static_cast<long>(h.index) * k;
    if (mode == RenderMode::band_limited && freq >= n / 2) continue;
    const double amp = amplitude * h.amplitude;
    const double base_phase = h.index * phi + h.phase;
    for (int i = 0; i < n; ++i) {
      out[static_cast<std::size_t>(i)] += amp * std::cos(kTwoPi * freq * i / n + base_phase);
    }
  }
  return Signal::from_samples(std::move(out));
}

}  // namespace gdt
