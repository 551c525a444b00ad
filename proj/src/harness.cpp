#include "gdt/harness.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace gdt {

ReconstructionReport reconstruct_experiment(const Signal& f, const Basis& b,
                                            const std::vector<int>& orders, RenderMode mode) {
  const int k_max = f.size() / 2 - 1;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (orders[i] < 0 || orders[i] > k_max)
      throw Error(errc::bad_argument, "order exceeds N/2 - 1");
    if (i > 0 && orders[i] < orders[i - 1])
      throw Error(errc::bad_argument, "orders must be ascending");
  }

  const NormalizedBasis nb = normalize(b);
  const PolarSpectrum ps = analyze(f, nb, mode);

  ReconstructionReport report;
  report.orders = orders;
  report.mode = mode;
  report.basis_label = b.name();
  report.rms_errors.reserve(orders.size());
  for (int order : orders) {
    const Signal partial = synthesize_range(ps, nb, f.size(), mode, 1, order, true);
    report.rms_errors.push_back(rms_diff(f, partial));
  }
  return report;
}

Signal haar_reconstruct(const Signal& f, int coeff_count) {
  const int n = f.size();
  if ((n & (n - 1)) != 0)
    throw Error(errc::not_power_of_two, "Haar decomposition needs a power-of-two length");
  if (coeff_count < 1 || coeff_count > n)
    throw Error(errc::bad_count, "coefficient count must be in 1..N");

  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

  // Forward orthonormal Haar: details stored in-place behind the shrinking
  // approximation band.
  std::vector<double> coeffs(f.samples());
  std::vector<double> tmp(coeffs.size());
  for (int len = n; len > 1; len /= 2) {
    for (int i = 0; i < len / 2; ++i) {
      const double a = coeffs[static_cast<std::size_t>(2 * i)];
      const double b = coeffs[static_cast<std::size_t>(2 * i + 1)];
      tmp[static_cast<std::size_t>(i)] = (a + b) * inv_sqrt2;
      tmp[static_cast<std::size_t>(len / 2 + i)] = (a - b) * inv_sqrt2;
    }
    std::copy(tmp.begin(), tmp.begin() + len, coeffs.begin());
  }

  // Keep the coeff_count largest by magnitude; ties resolved by index so the
  // selection is deterministic.
  std::vector<int> order(coeffs.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&coeffs](int a, int b) {
    return std::fabs(coeffs[static_cast<std::size_t>(a)]) >
           std::fabs(coeffs[static_cast<std::size_t>(b)]);
  });
  std::vector<double> kept(coeffs.size(), 0.0);
  for (int i = 0; i < coeff_count; ++i) {
    const int idx = order[static_cast<std::size_t>(i)];
    kept[static_cast<std::size_t>(idx)] = coeffs[static_cast<std::size_t>(idx)];
  }

  // Inverse transform.
  for (int len = 2; len <= n; len *= 2) {
    for (int i = 0; i < len / 2; ++i) {
      const double s = kept[static_cast<std::size_t>(i)];
      const double d = kept[static_cast<std::size_t>(len / 2 + i)];
      tmp[static_cast<std::size_t>(2 * i)] = (s + d) * inv_sqrt2;
      tmp[static_cast<std::size_t>(2 * i + 1)] = (s - d) * inv_sqrt2;
    }
    std::copy(tmp.begin(), tmp.begin() + len, kept.begin());
  }
  return Signal::from_samples(std::move(kept));
}

PolarSpectrum keep_largest(const PolarSpectrum& ps, int count) {
  if (count < 0) throw Error(errc::bad_count, "component count must be non-negative");
  std::vector<int> order(ps.entries.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&ps](int a, int b) {
    return ps.entries[static_cast<std::size_t>(a)].modulus >
           ps.entries[static_cast<std::size_t>(b)].modulus;
  });
  PolarSpectrum out = ps;
  const std::size_t keep = std::min(order.size(), static_cast<std::size_t>(count));
  for (std::size_t i = keep; i < order.size(); ++i) {
    out.entries[static_cast<std::size_t>(order[i])] = SpectrumEntry{};
  }
  return out;
}

SeparationReport noise_separation(const Signal& f_noisy, const Basis& b, int cutoff,
                                  RenderMode mode, const std::optional<Signal>& reference) {
  const int k_max = f_noisy.size() / 2 - 1;
  if (cutoff < 1 || cutoff > k_max)
    throw Error(errc::bad_argument, "cutoff must be in 1..N/2-1");

  const NormalizedBasis nb = normalize(b);
  const PolarSpectrum ps = analyze(f_noisy, nb, mode);

  Signal kept = synthesize_range(ps, nb, f_noisy.size(), mode, 1, cutoff, true);
  Signal residual = synthesize_range(ps, nb, f_noisy.size(), mode, cutoff + 1, ps.k_max(), false);
  const Signal& ref = reference.has_value() ? *reference : f_noisy;
  const double err = rms_diff(kept, ref);
  return SeparationReport{std::move(kept), std::move(residual), err};
}

}  // namespace gdt
