// posate: certify, check, refute and verify positivity problems from problem files.

#include "pipelines.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;
using namespace posate::app;

namespace {

// Write to a sibling temporary and rename over the target.
void write_atomically(const fs::path& target, const std::string& text) {
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw UsageError("cannot write " + tmp.string());
    out << text;
    if (!out.flush()) throw UsageError("write failed for " + tmp.string());
  }
  fs::rename(tmp, target);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Runs `fn` for every file; the exit code is the largest per-file code.
template <class F>
int for_each_file(const std::vector<std::string>& files, F fn) {
  int worst = kExitPositive;
  for (const auto& file : files) {
    if (files.size() > 1) std::cout << "== " << file << " ==\n";
    const RunOutcome outcome = guarded([&] { return fn(file); });
    (outcome.exit_code >= kExitUsage ? std::cerr : std::cout) << outcome.output;
    worst = std::max(worst, outcome.exit_code);
  }
  return worst;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact positivity certificates, hypothesis checks and refutation witnesses"};
  app.require_subcommand(1);

  RunSettings settings;
  std::vector<std::string> files;
  std::string theorem;
  std::string certificate_path;
  unsigned taylor_n = 0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("files", files, "Problem files")->required()->check(CLI::ExistingFile);
    sub->add_option("--max-degree", settings.max_degree, "Highest truncation degree (default 8)");
    sub->add_option("--basis-cap", settings.basis_cap,
                    std::string("Cap on basis products (default 20000, env ") + kBasisCapEnv + ")");
    sub->add_option("--grid-density", settings.grid_density, "Barycentric grid order for sampling (default 5)");
  };

  CLI::App* certify = app.add_subcommand("certify", "Search a Handelman certificate, refute on failure");
  add_common(certify);
  CLI::App* check = app.add_subcommand("check", "Check the hypotheses of a positivity criterion on samples");
  add_common(check);
  check->add_option("--theorem", theorem, "sumbiti | boundary | polytope-face | interior")
      ->check(CLI::IsMember({"sumbiti", "boundary", "polytope-face", "interior"}));
  CLI::App* refute = app.add_subcommand("refute", "Search a state witness against membership");
  add_common(refute);
  CLI::App* verify = app.add_subcommand("verify", "Re-verify a certificate file against a problem");
  add_common(verify);
  verify->add_option("--certificate", certificate_path, "Certificate file (default <file>.cert)");
  CLI::App* taylor = app.add_subcommand("taylor", "Taylor polynomial of sqrt(1-x) and its square defect");
  taylor->add_option("n", taylor_n, "Truncation order")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  if (*certify) {
    return for_each_file(files, [&](const std::string& file) {
      RunOutcome out = run_certify(load_problem(file), settings);
      if (out.certificate) {
        write_atomically(file + ".cert", *out.certificate);
        out.output += "certificate-file=" + file + ".cert\n";
      }
      return out;
    });
  }
  if (*check) {
    return for_each_file(files, [&](const std::string& file) { return run_check(load_problem(file), theorem, settings); });
  }
  if (*refute) {
    return for_each_file(files, [&](const std::string& file) { return run_refute(load_problem(file), settings); });
  }
  if (*verify) {
    return for_each_file(files, [&](const std::string& file) {
      const std::string cert = certificate_path.empty() ? file + ".cert" : certificate_path;
      return run_verify(load_problem(file), read_file(cert));
    });
  }
  const RunOutcome out = guarded([&] { return run_taylor(taylor_n); });
  (out.exit_code >= kExitUsage ? std::cerr : std::cout) << out.output;
  return out.exit_code;
}
