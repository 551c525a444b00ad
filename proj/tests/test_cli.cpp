#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "gdt/csv.hpp"
#include "helpers.hpp"

using namespace gdt;
using namespace gdt::testing;

namespace {

struct CliResult {
  int exit_code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  const std::string dir = std::filesystem::temp_directory_path() / "gdt_cli_out";
  std::filesystem::create_directories(dir);
  const std::string capture = dir + "/stdout.txt";
  const std::string cmd = std::string(GDT_CLI_PATH) + " " + args + " >" + capture + " 2>&1";
  const int status = std::system(cmd.c_str());

  CliResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(capture);
  std::stringstream ss;
  ss << in.rdbuf();
  result.out = ss.str();
  return result;
}

std::filesystem::path scratch_dir() {
  const auto dir = std::filesystem::temp_directory_path() / "gdt_cli_scratch";
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("check-basis reports the square-wave convergence ratio") {
  const CliResult r = run_cli("check-basis --builtin square --harmonics 999");
  CHECK(r.exit_code == 0);
  // the odd-harmonic sum truncated at 999 sits 5.0e-4 below the closed form
  // pi^2/8 - 1 = 0.23370
  CHECK(r.out.find("ratio=0.2332") != std::string::npos);
  CHECK(r.out.find("classification=Converging") != std::string::npos);
}

TEST_CASE("analyze then synth round-trips a signal through CSV files") {
  const auto dir = scratch_dir();
  const std::string signal_path = (dir / "f.csv").string();
  const std::string spectrum_path = (dir / "spec.csv").string();
  const std::string back_path = (dir / "back.csv").string();

  std::mt19937 rng(163);
  const Signal f = random_nyquist_free(rng, 64);
  csv::write_signal_file(signal_path, f);

  const CliResult a = run_cli("analyze --signal " + signal_path +
                              " --builtin square --harmonics 99 --mode band-limited --out " +
                              spectrum_path);
  CHECK(a.exit_code == 0);

  const CliResult s = run_cli("synth --spectrum " + spectrum_path +
                              " --builtin square --harmonics 99 --n 64 --out " + back_path);
  CHECK(s.exit_code == 0);

  const Signal back = csv::read_signal_file(back_path);
  CHECK(rms_diff(f, back) < 1e-9 * rms(f));
}

TEST_CASE("a basis file without a fundamental exits 4 and names the problem") {
  const auto dir = scratch_dir();
  const std::string path = (dir / "nofund.csv").string();
  std::ofstream(path) << "2,1.0,0\n4,0.5,0\n";

  const CliResult r = run_cli("check-basis --basis-file " + path);
  CHECK(r.exit_code == 4);
  CHECK(r.out.find("fundamental") != std::string::npos);
}

TEST_CASE("usage errors exit 2, missing files exit 3") {
  CHECK(run_cli("frobnicate").exit_code == 2);
  CHECK(run_cli("analyze --signal x.csv --out y.csv").exit_code == 2);  // no basis given
  CHECK(run_cli("check-basis --basis-file /nonexistent/missing.csv").exit_code == 3);
}

TEST_CASE("filter subcommand matches the library") {
  const auto dir = scratch_dir();
  const std::string signal_path = (dir / "fin.csv").string();
  const std::string out_path = (dir / "fout.csv").string();

  const Signal f = sampled_cosine(64, 1, 0.0);
  csv::write_signal_file(signal_path, f);

  const CliResult r = run_cli("filter --signal " + signal_path +
                              " --builtin square --harmonics 99 --gains keep:1 --out " + out_path);
  CHECK(r.exit_code == 0);

  const NormalizedBasis nb = normalize(Basis::builtin("square", 99));
  const Signal expected = render(nb, 1, 0.0, 1.0, 64, RenderMode::band_limited);
  CHECK(rms_diff(csv::read_signal_file(out_path), expected) < 1e-9);
}

TEST_CASE("eigen subcommand prints a verdict") {
  const auto dir = scratch_dir();
  const std::string signal_path = (dir / "sq.csv").string();
  const NormalizedBasis nb = normalize(Basis::builtin("square", 99));
  csv::write_signal_file(signal_path, render(nb, 1, 0.0, 1.0, 64, RenderMode::band_limited));

  const CliResult r = run_cli("eigen --signal " + signal_path +
                              " --builtin square --harmonics 99 --gains keep:1");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("is_eigenfunction=true") != std::string::npos);
}

TEST_CASE("demo subcommands emit their files") {
  const auto dir = (scratch_dir() / "demos").string();
  for (const std::string name : {"fig1", "fig3", "fig5", "fig6"}) {
    const CliResult r = run_cli("demo " + name + " --out-dir " + dir);
    CHECK(r.exit_code == 0);
  }
  CHECK(std::filesystem::exists(dir + "/fig1_errors.csv"));
  CHECK(std::filesystem::exists(dir + "/fig3_rebuilt.csv"));
  CHECK(std::filesystem::exists(dir + "/fig5_haar32.csv"));
  CHECK(std::filesystem::exists(dir + "/fig8_kept.csv"));
}

TEST_CASE("sampled mode prints a warning") {
  const auto dir = scratch_dir();
  const std::string signal_path = (dir / "warn.csv").string();
  csv::write_signal_file(signal_path, sampled_cosine(16, 1, 0.0));
  const CliResult r = run_cli("analyze --signal " + signal_path +
                              " --builtin square --harmonics 99 --mode sampled --out " +
                              (dir / "warn_spec.csv").string());
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("warning") != std::string::npos);
}
