#include "gdt/signal.hpp"

#include <cmath>
#include <cstdlib>

namespace gdt {

double wrap_phase(double phi) {
  double w = std::fmod(phi, kTwoPi);
  if (w < 0.0) w += kTwoPi;
  if (w >= kTwoPi) w = 0.0;  // fmod can land exactly on 2*pi after the add
  return w;
}

Signal Signal::from_samples(std::vector<double> values) {
  if (values.size() % 2 != 0) throw Error(errc::odd_length, "signal length must be even");
  if (values.size() < 4) throw Error(errc::too_short, "signal needs at least 4 samples");
  for (double v : values) {
    if (!std::isfinite(v)) throw Error(errc::non_finite_sample, "signal contains NaN or infinity");
  }
  return Signal(std::move(values));
}

FourierPolar dft_polar(const Signal& s) {
  const int n = s.size();
  const int half = n / 2;

  FourierPolar fp;
  double sum = 0.0;
  for (int i = 0; i < n; ++i) sum += s[i];
  fp.dc = sum / n;

  const double norm = rms(s);
  fp.bins.resize(static_cast<std::size_t>(half - 1));
  for (int k = 1; k < half; ++k) {
    double a = 0.0, b = 0.0;
    for (int i = 0; i < n; ++i) {
      const double x = kTwoPi * k * i / n;
      a += s[i] * std::cos(x);
      b += s[i] * std::sin(x);
    }
    a *= 2.0 / n;
    b *= 2.0 / n;
    PolarBin& bin = fp.bins[static_cast<std::size_t>(k - 1)];
    bin.modulus = std::hypot(a, b);
    // a cos(kx) - (-b) sin? f = m cos(kx+theta) = m cos(theta) cos - m sin(theta) sin
    bin.phase = (bin.modulus < 1e-12 * norm) ? 0.0 : wrap_phase(std::atan2(-b, a));
  }

  double nyq = 0.0;
  for (int i = 0; i < n; ++i) nyq += s[i] * ((i % 2 == 0) ? 1.0 : -1.0);
  fp.nyquist = nyq / n;
  return fp;
}

Signal synth_polar(const FourierPolar& fp, int n) {
  if (n < 4 || n % 2 != 0) throw Error(errc::too_short, "target length must be even and >= 4");
  const int half = n / 2;
  if (static_cast<int>(fp.bins.size()) > half - 1)
    throw Error(errc::bin_overflow, "spectrum has bins at or above N/2");

  std::vector<double> out(static_cast<std::size_t>(n), fp.dc);
  for (int k = 1; k <= static_cast<int>(fp.bins.size()); ++k) {
    const PolarBin& bin = fp.bins[static_cast<std::size_t>(k - 1)];
    if (bin.modulus == 0.0) continue;
    for (int i = 0; i < n; ++i) {
      out[static_cast<std::size_t>(i)] += bin.modulus * std::cos(kTwoPi * k * i / n + bin.phase);
    }
  }
  if (fp.nyquist != 0.0) {
    for (int i = 0; i < n; ++i) {
      out[static_cast<std::size_t>(i)] += fp.nyquist * ((i % 2 == 0) ? 1.0 : -1.0);
    }
  }
  return Signal::from_samples(std::move(out));
}

double rms(const Signal& s) {
  double acc = 0.0;
  for (int i = 0; i < s.size(); ++i) acc += s[i] * s[i];
  return std::sqrt(acc / s.size());
}

double rms_diff(const Signal& a, const Signal& b) {
  if (a.size() != b.size()) throw Error(errc::length_mismatch, "signal lengths differ");
  double acc = 0.0;
  for (int i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    acc += d * d;
  }
  return std::sqrt(acc / a.size());
}

Signal circular_shift(const Signal& s, int j) {
  const int n = s.size();
  int shift = j % n;
  if (shift < 0) shift += n;
  std::vector<double> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    out[static_cast<std::size_t>(i)] = s[(i - shift + n) % n];
  }
  return Signal::from_samples(std::move(out));
}

Signal scale(const Signal& s, double factor) {
  std::vector<double> out(s.samples());
  for (double& v : out) v *= factor;
  return Signal::from_samples(std::move(out));
}

Signal add(const Signal& a, const Signal& b) {
  if (a.size() != b.size()) throw Error(errc::length_mismatch, "signal lengths differ");
  std::vector<double> out(a.samples());
  for (int i = 0; i < b.size(); ++i) out[static_cast<std::size_t>(i)] += b[i];
  return Signal::from_samples(std::move(out));
}

Signal subtract(const Signal& a, const Signal& b) {
  if (a.size() != b.size()) throw Error(errc::length_mismatch, "signal lengths differ");
  std::vector<double> out(a.samples());
  for (int i = 0; i < b.size(); ++i) out[static_cast<std::size_t>(i)] -= b[i];
  return Signal::from_samples(std::move(out));
}

}  // namespace gdt
