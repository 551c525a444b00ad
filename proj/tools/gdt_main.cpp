#include <cmath>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gdt/csv.hpp"
#include "gdt/errors.hpp"
#include "gdt/harness.hpp"
#include "gdt/systems.hpp"

namespace {

using gdt::Basis;
using gdt::NormalizedBasis;
using gdt::RenderMode;
using gdt::Signal;
using gdt::csv::format_number;

constexpr double kPi = 3.14159265358979323846264338328;

struct BasisOptions {
  std::string builtin_name;
  int harmonics = 99;
  std::string file;

  void attach(CLI::App* cmd) {
    auto* builtin = cmd->add_option("--builtin,--basis-builtin", builtin_name,
                                    "builtin basis: square, sawtooth, triangle, cosine");
    auto* file_opt = cmd->add_option("--basis-file", file, "basis CSV file (m,amplitude,phase)");
    cmd->add_option("--harmonics", harmonics, "truncation order for builtin bases")
        ->check(CLI::PositiveNumber);
    builtin->excludes(file_opt);
  }

  Basis load() const {
    if (!file.empty()) return gdt::csv::read_basis_file(file);
    if (!builtin_name.empty()) return Basis::builtin(builtin_name, harmonics);
    throw CLI::ValidationError("basis", "need --builtin or --basis-file");
  }
};

RenderMode parse_mode(const std::string& text) {
  const RenderMode mode = gdt::render_mode_from_string(text);
  if (mode == RenderMode::sampled) {
    std::cerr << "warning: sampled mode aliases above N/2; perfect reconstruction "
                 "is not guaranteed\n";
  }
  return mode;
}

Signal sampled_cosine(int n, int k, double phase, double amplitude) {
  std::vector<double> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    v[static_cast<std::size_t>(i)] = amplitude * std::cos(gdt::kTwoPi * k * i / n + phase);
  return Signal::from_samples(std::move(v));
}

// ---- demo scenarios (parameters frozen so outputs are reproducible) ----

void demo_fig1(const std::string& dir) {
  // smooth multi-harmonic test function analyzed in a generic converging
  // (sawtooth) basis, reconstruction error swept over the order
  const int n = 128;
  Signal f = gdt::add(
      gdt::add(sampled_cosine(n, 1, 0.4, 1.0), sampled_cosine(n, 2, 1.3, 0.6)),
      gdt::add(sampled_cosine(n, 5, 2.2, 0.4), sampled_cosine(n, 9, 0.9, 0.25)));
  const Basis b = Basis::builtin("sawtooth", 99);
  std::vector<int> orders;
  for (int i = 1; i <= 30; ++i) orders.push_back(i);
  const auto report = gdt::reconstruct_experiment(f, b, orders, RenderMode::band_limited);
  gdt::csv::write_reconstruction_report_file(dir + "/fig1_errors.csv", report, n);

  const NormalizedBasis nb = normalize(b);
  const auto ps = gdt::analyze(f, nb, RenderMode::band_limited);
  gdt::csv::write_signal_file(dir + "/fig1_input.csv", f, {"demo=fig1", "N=128"});
  gdt::csv::write_signal_file(
      dir + "/fig1_order10.csv",
      gdt::synthesize_range(ps, nb, n, RenderMode::band_limited, 1, 10, true),
      {"demo=fig1", "order=10"});
  gdt::csv::write_signal_file(
      dir + "/fig2_order30.csv",
      gdt::synthesize_range(ps, nb, n, RenderMode::band_limited, 1, 30, true),
      {"demo=fig1", "order=30"});
  std::cout << "order10_rms=" << format_number(report.rms_errors[9]) << "\n";
  std::cout << "order30_rms=" << format_number(report.rms_errors[29]) << "\n";
}

void demo_fig3(const std::string& dir) {
  // a sinusoid rebuilt from square waves
  const int n = 128;
  const Signal f = sampled_cosine(n, 1, 0.0, 1.0);
  const Basis b = Basis::builtin("square", 999);
  const NormalizedBasis nb = normalize(b);
  const auto ps = gdt::analyze(f, nb, RenderMode::band_limited);

  // count meaningful components among k <= 55
  double max_mod = 0.0;
  for (const auto& e : ps.entries) max_mod = std::max(max_mod, e.modulus);
  int components = 0;
  for (int k = 1; k <= std::min(55, ps.k_max()); ++k) {
    if (ps.entries[static_cast<std::size_t>(k - 1)].modulus > 1e-9 * max_mod) ++components;
  }

  const Signal rebuilt =
      gdt::synthesize_range(ps, nb, n, RenderMode::band_limited, 1, 55, true);
  gdt::csv::write_signal_file(dir + "/fig3_sine.csv", f, {"demo=fig3"});
  gdt::csv::write_signal_file(dir + "/fig3_rebuilt.csv", rebuilt,
                              {"demo=fig3", "basis=square", "orders=1..55"});
  std::cout << "components_up_to_55=" << components << "\n";
  std::cout << "rms_error=" << format_number(gdt::rms_diff(f, rebuilt)) << "\n";
}

void demo_fig5(const std::string& dir) {
  // square-basis reconstruction of a sine (21 largest components) versus the
  // best 32-term Haar one
  const int n = 64;
  const Signal f = sampled_cosine(n, 1, 1.5 * kPi, 1.0);  // a sine
  const NormalizedBasis nb = normalize(Basis::builtin("square", 99));
  const auto ps = gdt::keep_largest(gdt::analyze(f, nb, RenderMode::band_limited), 21);
  const Signal gdt21 = gdt::synthesize(ps, nb, n, RenderMode::band_limited);
  const Signal haar = gdt::haar_reconstruct(f, 32);

  gdt::csv::write_signal_file(dir + "/fig5_gdt21.csv", gdt21, {"demo=fig5", "components=21"});
  gdt::csv::write_signal_file(dir + "/fig5_haar32.csv", haar, {"demo=fig5", "coeffs=32"});
  std::cout << "gdt21_rms=" << format_number(gdt::rms_diff(f, gdt21)) << "\n";
  std::cout << "haar32_rms=" << format_number(gdt::rms_diff(f, haar)) << "\n";
}

// shared with the acceptance suite: a delayed band-limited square wave plus a
// deterministic high-band cosine mix
Signal demo_fig6_clean(int n) {
  const NormalizedBasis nb = normalize(Basis::builtin("square", 99));
  return gdt::circular_shift(gdt::render(nb, 1, 0.0, 1.0, n, RenderMode::band_limited), 5);
}

Signal demo_fig6_noise(int n) {
  return gdt::add(gdt::add(sampled_cosine(n, 5, 0.7, 0.3), sampled_cosine(n, 9, 2.3, 0.3)),
                  sampled_cosine(n, 14, 4.1, 0.3));
}

void demo_fig6(const std::string& dir) {
  const int n = 64;
  const Signal clean = demo_fig6_clean(n);
  const Signal noisy = gdt::add(clean, demo_fig6_noise(n));
  const Basis b = Basis::builtin("square", 99);
  const auto sep = gdt::noise_separation(noisy, b, 1, RenderMode::band_limited, clean);

  gdt::csv::write_signal_file(dir + "/fig6_clean.csv", clean, {"demo=fig6"});
  gdt::csv::write_signal_file(dir + "/fig6_noisy.csv", noisy, {"demo=fig6"});
  gdt::csv::write_signal_file(dir + "/fig8_kept.csv", sep.kept, {"demo=fig6", "cutoff=1"});
  gdt::csv::write_signal_file(dir + "/fig8_residual.csv", sep.residual,
                              {"demo=fig6", "cutoff=1"});
  std::cout << "kept_rms_error=" << format_number(sep.kept_rms_error_vs_reference) << "\n";
  std::cout << "residual_rms=" << format_number(gdt::rms(sep.residual)) << "\n";
}

int run(int argc, char** argv) {
  CLI::App app{"Generic discrete transform toolkit: analysis, synthesis and filtering of "
               "periodic signals over nonorthogonal single-function bases"};
  app.require_subcommand(1);

  std::string mode_text = "band-limited";
  std::string signal_path, signal_b_path, spectrum_path, out_path, gains_text, demo_name;
  std::string out_dir = ".";
  int synth_n = 0;
  bool rescale_raw = false;

  auto* check = app.add_subcommand("check-basis", "classify a basis by its convergence ratio");
  BasisOptions check_basis;
  check_basis.attach(check);

  auto* analyze_cmd = app.add_subcommand("analyze", "transform a signal into a polar spectrum");
  BasisOptions analyze_basis;
  analyze_basis.attach(analyze_cmd);
  analyze_cmd->add_option("--signal", signal_path, "input signal CSV")->required();
  analyze_cmd->add_option("--out", out_path, "output spectrum CSV")->required();
  analyze_cmd->add_option("--mode", mode_text, "band-limited (default) or sampled");
  analyze_cmd->add_flag("--rescale-raw", rescale_raw,
                        "emit coefficients against the raw (unnormalized) basis");

  auto* synth_cmd = app.add_subcommand("synth", "rebuild a signal from a polar spectrum");
  BasisOptions synth_basis;
  synth_basis.attach(synth_cmd);
  synth_cmd->add_option("--spectrum", spectrum_path, "input spectrum CSV")->required();
  synth_cmd->add_option("--out", out_path, "output signal CSV")->required();
  synth_cmd->add_option("--n", synth_n, "number of samples (default 2*(k_max+1))");
  synth_cmd->add_option("--mode", mode_text, "band-limited (default) or sampled");

  auto* filter_cmd = app.add_subcommand("filter", "apply a generalized filter");
  BasisOptions filter_basis;
  filter_basis.attach(filter_cmd);
  filter_cmd->add_option("--signal", signal_path, "input signal CSV")->required();
  filter_cmd
      ->add_option("--gains", gains_text,
                   "transfer CSV file or spec: allpass, lowpass:K, highpass:K, keep:k1,k2,...")
      ->required();
  filter_cmd->add_option("--out", out_path, "output signal CSV")->required();
  filter_cmd->add_option("--mode", mode_text, "band-limited (default) or sampled");

  auto* conv_cmd = app.add_subcommand("convolve", "generalized convolution of two signals");
  BasisOptions conv_basis;
  conv_basis.attach(conv_cmd);
  conv_cmd->add_option("--signal-a", signal_path, "first signal CSV")->required();
  conv_cmd->add_option("--signal-b", signal_b_path, "second signal CSV")->required();
  conv_cmd->add_option("--out", out_path, "output signal CSV")->required();
  conv_cmd->add_option("--mode", mode_text, "band-limited (default) or sampled");

  auto* eigen_cmd = app.add_subcommand("eigen", "test a signal as a filter eigenfunction");
  BasisOptions eigen_basis;
  eigen_basis.attach(eigen_cmd);
  eigen_cmd->add_option("--signal", signal_path, "candidate signal CSV")->required();
  eigen_cmd->add_option("--gains", gains_text, "transfer CSV file or spec")->required();
  eigen_cmd->add_option("--mode", mode_text, "band-limited (default) or sampled");

  auto* demo_cmd = app.add_subcommand(
      "demo",
      "canned experiments: fig1 (order sweep, sawtooth basis, N=128), fig3 (sine from "
      "square waves, N=128), fig5 (square basis, 21 components, vs 32 Haar coefficients, "
      "N=64), fig6 (square wave + high-band noise separated at cutoff 1, N=64)");
  demo_cmd->add_option("name", demo_name, "fig1, fig3, fig5 or fig6")->required();
  demo_cmd->add_option("--out-dir", out_dir, "directory for emitted CSV files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  if (check->parsed()) {
    const Basis b = check_basis.load();
    const auto report = gdt::convergence_report(b);
    std::cout << "ratio=" << format_number(report.ratio) << "\n";
    std::cout << "classification=" << gdt::to_string(report.classification) << "\n";
  } else if (analyze_cmd->parsed()) {
    const RenderMode mode = parse_mode(mode_text);
    const Basis b = analyze_basis.load();
    const Signal f = gdt::csv::read_signal_file(signal_path);
    const NormalizedBasis nb = normalize(b);
    gdt::PolarSpectrum ps = gdt::analyze(f, nb, mode);
    if (rescale_raw) ps = gdt::rescale_to_raw(ps, nb.origin());
    gdt::csv::write_spectrum_file(out_path, ps);
    std::cout << "n=" << f.size() << "\n";
    std::cout << "k_max=" << ps.k_max() << "\n";
    std::cout << "dc=" << format_number(ps.dc) << "\n";
  } else if (synth_cmd->parsed()) {
    const RenderMode mode = parse_mode(mode_text);
    const Basis b = synth_basis.load();
    const gdt::PolarSpectrum ps = gdt::csv::read_spectrum_file(spectrum_path);
    const int n = synth_n > 0 ? synth_n : 2 * (ps.k_max() + 1);
    const Signal out = gdt::synthesize(ps, normalize(b), n, mode);
    gdt::csv::write_signal_file(out_path, out,
                                {"synthesized basis=" + b.name(), "mode=" + gdt::to_string(mode)});
    std::cout << "n=" << n << "\n";
    std::cout << "rms=" << format_number(gdt::rms(out)) << "\n";
  } else if (filter_cmd->parsed()) {
    const RenderMode mode = parse_mode(mode_text);
    const Basis b = filter_basis.load();
    const Signal f = gdt::csv::read_signal_file(signal_path);
    const int k_max = f.size() / 2 - 1;
    const gdt::TransferFunction g = gdt::csv::looks_like_transfer_spec(gains_text)
                                        ? gdt::csv::parse_transfer_spec(gains_text, k_max)
                                        : gdt::csv::read_transfer_file(gains_text, k_max);
    const Signal out = gdt::apply_filter(f, normalize(b), g, mode);
    gdt::csv::write_signal_file(out_path, out, {"filtered basis=" + b.name()});
    std::cout << "rms=" << format_number(gdt::rms(out)) << "\n";
  } else if (conv_cmd->parsed()) {
    const RenderMode mode = parse_mode(mode_text);
    const Basis b = conv_basis.load();
    const Signal fa = gdt::csv::read_signal_file(signal_path);
    const Signal fb = gdt::csv::read_signal_file(signal_b_path);
    const Signal out = gdt::convolve(fa, fb, normalize(b), mode);
    gdt::csv::write_signal_file(out_path, out, {"convolved basis=" + b.name()});
    std::cout << "rms=" << format_number(gdt::rms(out)) << "\n";
  } else if (eigen_cmd->parsed()) {
    const RenderMode mode = parse_mode(mode_text);
    const Basis b = eigen_basis.load();
    const Signal f = gdt::csv::read_signal_file(signal_path);
    const int k_max = f.size() / 2 - 1;
    const gdt::TransferFunction g = gdt::csv::looks_like_transfer_spec(gains_text)
                                        ? gdt::csv::parse_transfer_spec(gains_text, k_max)
                                        : gdt::csv::read_transfer_file(gains_text, k_max);
    const auto report = gdt::eigen_check(f, normalize(b), g, mode);
    std::cout << "is_eigenfunction=" << (report.is_eigenfunction ? "true" : "false") << "\n";
    std::cout << "eigen_modulus=" << format_number(report.eigen_modulus) << "\n";
    std::cout << "eigen_phase=" << format_number(report.eigen_phase) << "\n";
    std::cout << "residual_rms=" << format_number(report.residual_rms) << "\n";
  } else if (demo_cmd->parsed()) {
    std::filesystem::create_directories(out_dir);
    if (demo_name == "fig1") {
      demo_fig1(out_dir);
    } else if (demo_name == "fig3") {
      demo_fig3(out_dir);
    } else if (demo_name == "fig5") {
      demo_fig5(out_dir);
    } else if (demo_name == "fig6") {
      demo_fig6(out_dir);
    } else {
      std::cerr << "error: unknown demo '" << demo_name << "'\n";
      return 2;
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const gdt::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
