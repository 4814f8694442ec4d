#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "wdc/campaign.hpp"
#include "wdc/document.hpp"
#include "wdc/render.hpp"
#include "wdc/verifier.hpp"

namespace {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kDegenerate = 2, kFormat = 3 };

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// "-" or empty writes to stdout.
void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << text;
  if (!out.flush()) throw IoError("write to '" + path + "' failed");
}

wdc::WoodDesarguesConfiguration load_configuration(const std::string& path) {
  return wdc::configuration_from_json(wdc::parse_document(read_file(path)));
}

int cmd_gen(const std::string& seed_text, const std::string& output) {
  const wdc::ConfigurationSeed seed = wdc::parse_seed_text(seed_text);
  const wdc::WoodDesarguesConfiguration config = wdc::build_configuration(seed);
  write_output(output, wdc::dump(wdc::configuration_to_json(config)));
  return kOk;
}

int cmd_verify(const std::string& input, const std::string& report_path) {
  const wdc::WoodDesarguesConfiguration config = load_configuration(input);
  const wdc::VerificationReport report = wdc::verify_all(config);
  write_output(report_path, wdc::dump(wdc::report_to_json(report)));
  const wdc::ReportSummary s = report.summary();
  std::cerr << "checks: " << report.results.size() << " pass: " << s.pass << " degenerate-pass: " << s.degenerate_pass
            << " fail: " << s.fail << '\n';
  for (const auto& r : report.results) {
    if (r.status == wdc::CheckStatus::Fail) std::cerr << "fail: " << r.name << '\n';
  }
  return report.ok() ? kOk : kVerifyFailed;
}

int cmd_fuzz(const wdc::FuzzPolicy& policy, int threads, const std::string& output) {
  const wdc::CampaignReport report =
      threads == 1 ? wdc::run_campaign_serial(policy) : wdc::run_campaign_parallel(policy, threads);
  write_output(output, wdc::dump(wdc::campaign_to_json(report)));
  std::cerr << "seeds: " << report.verified << '/' << policy.count << " failed: " << report.failed_seeds
            << " degenerate flags: " << report.degenerate_flags << " rejections: " << report.rejections << '\n';
  if (report.failed_seeds > 0) return kVerifyFailed;
  if (report.budget_exhausted) {
    for (const auto& e : report.entries) {
      if (e.drawn()) continue;
      std::cerr << "retry budget exhausted at seed " << e.index << "; last rejections:";
      for (const auto& reason : e.recent_rejections) std::cerr << ' ' << reason;
      std::cerr << '\n';
      break;
    }
    return kDegenerate;
  }
  return kOk;
}

int cmd_render(const std::string& input, const std::string& output, const std::string& layers, int size) {
  const wdc::WoodDesarguesConfiguration config = load_configuration(input);
  wdc::RenderStyle style = wdc::parse_layers(layers);
  style.width = style.height = size;
  const wdc::DerivedFigures derived = wdc::derive_figures(config);
  write_output(output, wdc::render_svg(config, derived, style));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact rational Wood-Desargues configuration engine"};
  app.require_subcommand(1);

  std::string seed_text;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "Build a configuration document from a seed");
  gen->add_option("--seed", seed_text, "tJ=..,tK=..,tA=..,tB=..,tC=..,s=..")->required();
  gen->add_option("-o,--output", gen_out, "Output file (default stdout)");

  std::string verify_in;
  std::string verify_report;
  auto* verify = app.add_subcommand("verify", "Re-derive and verify a configuration document");
  verify->add_option("file", verify_in, "Configuration document")->required();
  verify->add_option("--report", verify_report, "Report file (default stdout)");

  wdc::FuzzPolicy policy;
  int threads = 0;
  std::string fuzz_out;
  auto* fuzz = app.add_subcommand("fuzz", "Verify a campaign of random seeds");
  fuzz->add_option("--count", policy.count, "Number of seeds")->check(CLI::PositiveNumber);
  fuzz->add_option("--rng-seed", policy.rng_seed, "Generator seed");
  fuzz->add_option("--max-num", policy.max_magnitude, "Largest numerator magnitude and denominator")
      ->check(CLI::PositiveNumber);
  fuzz->add_option("--max-retries", policy.max_retries, "Rejections allowed per seed")->check(CLI::PositiveNumber);
  fuzz->add_option("--threads", threads, "Worker threads (1 runs the serial path, 0 the runtime default)")
      ->check(CLI::NonNegativeNumber);
  fuzz->add_option("-o,--output", fuzz_out, "Campaign report file (default stdout)");

  std::string render_in;
  std::string render_out;
  std::string layers = "all";
  int size = 800;
  auto* render = app.add_subcommand("render", "Draw a configuration document as SVG");
  render->add_option("file", render_in, "Configuration document")->required();
  render->add_option("-o,--output", render_out, "SVG file")->required();
  render->add_option("--layers", layers, "all, or a comma list of points,circles,perspectrices,hagge,pentagon");
  render->add_option("--size", size, "Canvas side in pixels")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kFormat;
  }

  try {
    if (*gen) return cmd_gen(seed_text, gen_out);
    if (*verify) return cmd_verify(verify_in, verify_report);
    if (*fuzz) return cmd_fuzz(policy, threads, fuzz_out);
    if (*render) return cmd_render(render_in, render_out, layers, size);
  } catch (const wdc::DegenerateSeed& e) {
    std::cerr << "degenerate seed: " << wdc::reason_code(e.defect()) << '\n';
    return kDegenerate;
  } catch (const wdc::FormatError& e) {
    std::cerr << "format error: " << e.what() << '\n';
    return kFormat;
  } catch (const IoError& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return kFormat;
  } catch (const wdc::GeometryError& e) {
    std::cerr << "degenerate input: " << e.what() << '\n';
    return kFormat;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFormat;
  }
  return kFormat;
}
