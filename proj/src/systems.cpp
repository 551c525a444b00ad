#include "gdt/systems.hpp"

#include <algorithm>
#include <cmath>

namespace gdt {

namespace {

constexpr double kPi = 3.14159265358979323846264338328;

}  // namespace

TransferFunction TransferFunction::all_pass(int k_max) {
  return {std::vector<double>(static_cast<std::size_t>(k_max), 1.0), 1.0};
}

TransferFunction TransferFunction::low_pass(int k_max, int cutoff) {
  TransferFunction g{std::vector<double>(static_cast<std::size_t>(k_max), 0.0), 1.0};
  for (int k = 1; k <= std::min(cutoff, k_max); ++k) g.gains[static_cast<std::size_t>(k - 1)] = 1.0;
  return g;
}

TransferFunction TransferFunction::high_pass(int k_max, int cutoff) {
  TransferFunction g{std::vector<double>(static_cast<std::size_t>(k_max), 1.0), 0.0};
  for (int k = 1; k <= std::min(cutoff, k_max); ++k) g.gains[static_cast<std::size_t>(k - 1)] = 0.0;
  return g;
}

TransferFunction TransferFunction::keep(int k_max, const std::vector<int>& bins) {
  TransferFunction g{std::vector<double>(static_cast<std::size_t>(k_max), 0.0), 0.0};
  for (int k : bins) {
    if (k == 0) {
      g.dc_gain = 1.0;
    } else if (k >= 1 && k <= k_max) {
      g.gains[static_cast<std::size_t>(k - 1)] = 1.0;
    }
  }
  return g;
}

Signal apply_filter(const Signal& f, const NormalizedBasis& nb, const TransferFunction& g,
                    RenderMode mode) {
  PolarSpectrum ps = analyze(f, nb, mode);
  if (static_cast<int>(g.gains.size()) < ps.k_max())
    throw Error(errc::gain_length_mismatch, "transfer function does not cover all bins");

  ps.dc *= g.dc_gain;
  for (int k = 1; k <= ps.k_max(); ++k) {
    SpectrumEntry& e = ps.entries[static_cast<std::size_t>(k - 1)];
    const double gain = g.gains[static_cast<std::size_t>(k - 1)];
    e.modulus *= std::fabs(gain);
    if (gain < 0.0 && e.modulus != 0.0) e.phase = wrap_phase(e.phase + kPi);
  }
  return synthesize(ps, nb, f.size(), mode);
}

double time_invariance_gap(const Signal& f, int j, const NormalizedBasis& nb,
                           const TransferFunction& g, RenderMode mode) {
  const Signal lhs = apply_filter(circular_shift(f, j), nb, g, mode);
  const Signal rhs = circular_shift(apply_filter(f, nb, g, mode), j);
  return rms_diff(lhs, rhs);
}

double homogeneity_gap(const Signal& f, double alpha, const NormalizedBasis& nb,
                       const TransferFunction& g, RenderMode mode) {
  if (alpha <= 0.0) throw Error(errc::bad_argument, "homogeneity scale must be positive");
  const Signal lhs = apply_filter(scale(f, alpha), nb, g, mode);
  const Signal rhs = scale(apply_filter(f, nb, g, mode), alpha);
  return rms_diff(lhs, rhs);
}

double superposition_gap(const Signal& f1, const Signal& f2, const NormalizedBasis& nb,
                         const TransferFunction& g, RenderMode mode) {
  const Signal lhs = apply_filter(add(f1, f2), nb, g, mode);
  const Signal rhs = add(apply_filter(f1, nb, g, mode), apply_filter(f2, nb, g, mode));
  return rms_diff(lhs, rhs);
}

Signal convolve(const Signal& f, const Signal& g_sig, const NormalizedBasis& nb,
                RenderMode mode) {
  if (f.size() != g_sig.size()) throw Error(errc::length_mismatch, "signal lengths differ");
  const PolarSpectrum sf = analyze(f, nb, mode);
  const PolarSpectrum sg = analyze(g_sig, nb, mode);

  PolarSpectrum prod;
  prod.basis_label = nb.name();
  prod.mode = mode;
  prod.dc = sf.dc * sg.dc;
  prod.entries.resize(sf.entries.size());
  for (std::size_t i = 0; i < sf.entries.size(); ++i) {
    prod.entries[i].modulus = sf.entries[i].modulus * sg.entries[i].modulus;
    prod.entries[i].phase = prod.entries[i].modulus == 0.0
                                ? 0.0
                                : wrap_phase(sf.entries[i].phase + sg.entries[i].phase);
  }
  return synthesize(prod, nb, f.size(), mode);
}

EigenReport eigen_check(const Signal& candidate, const NormalizedBasis& nb,
                        const TransferFunction& g, RenderMode mode) {
  const double input_rms = rms(candidate);
  if (input_rms == 0.0) throw Error(errc::zero_candidate, "candidate signal is identically zero");

  const Signal out = apply_filter(candidate, nb, g, mode);
  const PolarSpectrum sc = analyze(candidate, nb, mode);
  const PolarSpectrum so = analyze(out, nb, mode);

  // Fundamental bin of the candidate's own generic spectrum: the lowest
  // frequency carrying non-negligible modulus.
  double max_mod = 0.0;
  for (const SpectrumEntry& e : sc.entries) max_mod = std::max(max_mod, e.modulus);
  int k0 = 0;
  for (int k = 1; k <= sc.k_max(); ++k) {
    if (sc.entries[static_cast<std::size_t>(k - 1)].modulus > 1e-9 * max_mod) {
      k0 = k;
      break;
    }
  }

  double lambda = 1.0;
  double shift = 0.0;
  if (k0 > 0) {
    const SpectrumEntry& ec = sc.entries[static_cast<std::size_t>(k0 - 1)];
    const SpectrumEntry& eo = so.entries[static_cast<std::size_t>(k0 - 1)];
    lambda = eo.modulus / ec.modulus;
    // output phase Phi - k0*x0 = candidate phase  =>  x0 = (Phi_in - Phi_out)/k0
    double dphi = std::remainder(ec.phase - eo.phase, kTwoPi);
    shift = dphi / k0;
  } else if (sc.dc != 0.0) {
    lambda = so.dc / sc.dc;
  }

  // lambda * candidate delayed by x0 = shift, built from the Fourier side so
  // non-integer-sample shifts are exact.  At the Nyquist rate only the
  // cosine projection of a shifted Nyquist component survives.
  FourierPolar fitted = dft_polar(candidate);
  fitted.dc *= lambda;
  for (std::size_t i = 0; i < fitted.bins.size(); ++i) {
    fitted.bins[i].modulus *= lambda;
    if (fitted.bins[i].modulus != 0.0)
      fitted.bins[i].phase = wrap_phase(fitted.bins[i].phase - static_cast<double>(i + 1) * shift);
  }
  fitted.nyquist *= lambda * std::cos(candidate.size() / 2 * shift);

  EigenReport report;
  report.eigen_modulus = lambda;
  report.eigen_phase = shift;
  report.residual_rms = rms_diff(out, synth_polar(fitted, candidate.size()));
  report.is_eigenfunction = report.residual_rms < 1e-6 * input_rms;
  return report;
}

}  // namespace gdt
