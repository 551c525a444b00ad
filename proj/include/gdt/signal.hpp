#pragma once

#include <cstddef>
#include <vector>

#include "gdt/errors.hpp"

namespace gdt {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

// Wrap an angle into [0, 2*pi).
double wrap_phase(double phi);

// One period of a real-valued, uniformly sampled periodic function.
// Sample n sits at x_n = 2*pi*n/N.  N is even and at least 4.
class Signal {
public:
  static Signal from_samples(std::vector<double> values);

  int size() const { return static_cast<int>(samples_.size()); }
  double operator[](int n) const { return samples_[static_cast<std::size_t>(n)]; }
  const std::vector<double>& samples() const { return samples_; }

private:
  explicit Signal(std::vector<double> values) : samples_(std::move(values)) {}
  std::vector<double> samples_;
};

struct PolarBin {
  double modulus = 0.0;  // >= 0
  double phase = 0.0;    // in [0, 2*pi)
};

// Polar-form discrete Fourier representation:
//   f(x) = dc + sum_{k=1}^{N/2-1} m_k cos(kx + theta_k) + nyquist*cos((N/2)x)
// bins[k-1] holds (m_k, theta_k).  The Nyquist amplitude is signed; its
// phase is not observable at two samples per cycle.
struct FourierPolar {
  double dc = 0.0;
  std::vector<PolarBin> bins;
  double nyquist = 0.0;
};

FourierPolar dft_polar(const Signal& s);
Signal synth_polar(const FourierPolar& fp, int n);

double rms(const Signal& s);
double rms_diff(const Signal& a, const Signal& b);

// output[n] = input[(n - j) mod N]; a delay of x0 = 2*pi*j/N.
Signal circular_shift(const Signal& s, int j);

Signal scale(const Signal& s, double factor);
Signal add(const Signal& a, const Signal& b);
Signal subtract(const Signal& a, const Signal& b);

}  // namespace gdt
