#include "cmclass/cli.hpp"

#include <fstream>
#include <optional>

#include "CLI11.hpp"
#include "cmclass/errors.hpp"
#include "cmclass/report.hpp"
#include "cmclass/verify.hpp"

namespace cmclass {
namespace {

struct Common {
  std::string format = "text";
  std::string window;
  std::string out;
  unsigned threads = 0;
};

void add_common(CLI::App* cmd, Common& c, bool withWindow) {
  cmd->add_option("--format", c.format, "text, csv, json or svg")->capture_default_str();
  if (withWindow) cmd->add_option("--window", c.window, "display window a:b (computation always uses the full window)");
  cmd->add_option("--out", c.out, "write the report to this file");
  cmd->add_option("--threads", c.threads, "worker threads (0 = all cores)");
}

std::optional<Window> window_of(const Common& c) {
  if (c.window.empty()) return std::nullopt;
  return parse_window(c.window);
}

void emit(const std::string& text, const Common& c, std::ostream& out) {
  if (c.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(c.out, std::ios::binary);
  if (!file) throw std::invalid_argument("cannot open " + c.out + " for writing");
  file << text;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cohen-Macaulay and conic divisor classes of Segre and Veronese products"};
  app.require_subcommand(1);

  Common s3c;
  Segre3Params s3;
  auto* segre3 = app.add_subcommand("segre3", "classes of the Segre product of three polynomial rings");
  segre3->add_option("--m", s3.m)->required();
  segre3->add_option("--n", s3.n)->required();
  segre3->add_option("--p", s3.p)->required();
  add_common(segre3, s3c, true);

  Common v2c;
  Veronese2Params v2;
  auto* ver = app.add_subcommand("veronese2", "classes of the Segre product of two Veronese subrings");
  ver->add_option("--m", v2.m)->required();
  ver->add_option("--n", v2.n)->required();
  ver->add_option("--c", v2.c)->required();
  ver->add_option("--d", v2.d)->required();
  add_common(ver, v2c, true);

  Common vc;
  VerifyOptions vo;
  auto* verify = app.add_subcommand("verify", "run every formula and invariant check");
  verify->add_option("--max", vo.segre3Max, "largest m, n, p in the segre3 sweep")->capture_default_str();
  verify->add_option("--out", vc.out, "write the report to this file");
  verify->add_option("--threads", vo.threads, "worker threads (0 = all cores)");
  verify->add_flag("--inject-fault", vo.injectFault)->group("");

  Common hc;
  std::string expression, range;
  auto* hilbert = app.add_subcommand("hilbert", "Hilbert series of an expression");
  hilbert->add_option("expr", expression, "poly(n), shift(e, s), veronese(e, c), segre(e, f)")->required();
  hilbert->add_option("--range", range, "coefficient degrees a:b");
  hilbert->add_option("--format", hc.format, "text, csv or json")->capture_default_str();
  hilbert->add_option("--out", hc.out, "write the report to this file");

  std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (segre3->parsed()) {
      s3.validate();
      const Format f = parse_format(s3c.format);
      const auto w = window_of(s3c);
      Segre3ReportOptions opts;
      opts.threads = s3c.threads;
      opts.crossCheckGeneric = std::max({s3.m, s3.n, s3.p}) <= 4;
      emit(render(segre3_report(s3, opts), f, w), s3c, out);
    } else if (ver->parsed()) {
      v2.validate();
      const Format f = parse_format(v2c.format);
      const auto w = window_of(v2c);
      emit(render(veronese2_report(v2), f, w), v2c, out);
    } else if (verify->parsed()) {
      if (vo.segre3Max < 2) throw std::invalid_argument("--max must be at least 2");
      const VerifyReport report = run_verify(vo);
      emit(report.render(), vc, out);
      return report.hard_failed() ? kExitInvariant : kExitOk;
    } else if (hilbert->parsed()) {
      const Format f = parse_format(hc.format);
      std::optional<Window> r;
      if (!range.empty()) r = parse_window(range);
      emit(render(hilbert_report(expression, r), f), hc, out);
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvariantViolation& e) {
    err << "invariant violation: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const InconsistencyError& e) {
    err << "inconsistency: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvariant;
  }
  return kExitOk;
}

}  // namespace cmclass
