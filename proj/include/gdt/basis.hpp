#pragma once

#include <string>
#include <vector>

#include "gdt/signal.hpp"

namespace gdt {

enum class RenderMode {
  band_limited,  // drop harmonics at or above N/2; exact one-pass analysis
  sampled,       // evaluate every stored harmonic pointwise; aliases naturally
};

std::string to_string(RenderMode mode);
RenderMode render_mode_from_string(const std::string& text);

struct Harmonic {
  int index = 1;           // m >= 1
  double amplitude = 0.0;  // >= 0 after canonicalization
  double phase = 0.0;      // in [0, 2*pi)
};

// A periodic basis function S(x) stored by its harmonic series
//   S(x) = sum_m s_m cos(m x + phi_m),
// sorted by m, no duplicates, zero-amplitude entries dropped.  The m=1
// component must be present with positive amplitude.
class Basis {
public:
  static Basis from_harmonics(std::vector<Harmonic> entries, std::string name = "");
  static Basis from_signal(const Signal& s, std::string name = "");

  // square, sawtooth, triangle, cosine -- ideal series truncated at
  // max_harmonic (not sampled-waveform fits).
  static Basis builtin(const std::string& name, int max_harmonic);

  const std::vector<Harmonic>& harmonics() const { return harmonics_; }
  const std::string& name() const { return name_; }
  double fundamental_amplitude() const { return harmonics_.front().amplitude; }
  double fundamental_phase() const { return harmonics_.front().phase; }

private:
  Basis(std::vector<Harmonic> harmonics, std::string name)
      : harmonics_(std::move(harmonics)), name_(std::move(name)) {}
  std::vector<Harmonic> harmonics_;
  std::string name_;
};

// Record of the normalization applied: S'(x) = (1/amplitude) S(x - phase).
struct BasisOrigin {
  double amplitude = 1.0;  // s_1 of the raw basis
  double phase = 0.0;      // phi_1 of the raw basis
};

// Amplitude-scaled, phase-shifted basis whose fundamental is exactly a
// unit zero-phase cosine.  This is what analysis and synthesis run on.
class NormalizedBasis {
public:
  const std::vector<Harmonic>& harmonics() const { return harmonics_; }
  const BasisOrigin& origin() const { return origin_; }
  const std::string& name() const { return name_; }

  friend NormalizedBasis normalize(const Basis& b);

private:
  NormalizedBasis(std::vector<Harmonic> harmonics, BasisOrigin origin, std::string name)
      : harmonics_(std::move(harmonics)), origin_(origin), name_(std::move(name)) {}
  std::vector<Harmonic> harmonics_;
  BasisOrigin origin_;
  std::string name_;
};

NormalizedBasis normalize(const Basis& b);

enum class Convergence { orthogonal, converging, not_converging };

std::string to_string(Convergence c);

// ratio = sum_{m>=2} (s_m/s_1)^2.  Zero means orthogonal; below one the
// residual-peeling reconstruction converges; at or above one it does not.
struct ConvergenceReport {
  double ratio = 0.0;
  Convergence classification = Convergence::orthogonal;
};

ConvergenceReport convergence_report(const Basis& b);

// Samples of amplitude * S'(k x + phi) over one period of N points.
Signal render(const NormalizedBasis& nb, int k, double phi, double amplitude, int n,
              RenderMode mode);

}  // namespace gdt
