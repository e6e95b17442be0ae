// sandwich: build, verify and scan hat systems of sandwich algebras.
//
//   sandwich build  --ambient C --rank 3 --hstar 1,0,0 --out c3.json
//   sandwich verify --bundle c3.json [--checks axioms,tau] [--format text]
//   sandwich report --ambient C --rank 3 --hstar 1,0,0
//   sandwich scan   --ambient C --rank 3 --bound 1

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "sandwich/pipeline.hpp"

using namespace sandwich;
using nlohmann::json;

namespace {

struct Options {
  PipelineConfig cfg;
  std::string bundle_path = "-";
  std::string out_path = "-";
  int threads = 0;
  int bound = 2;
  bool canonical = false;
};

void write_out(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw UsageError("cannot write " + path);
  f << text;
}

Bundle read_bundle(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream f(path);
    if (!f) throw UsageError("cannot read " + path);
    text.assign(std::istreambuf_iterator<char>(f), {});
  }
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw UsageError(path + " is not valid JSON");
  try {
    return bundle_from_json(j);
  } catch (const BundleParseError& e) {
    throw UsageError(e.what());
  }
}

int emit_report(const Bundle& b, const Options& o) {
  if (o.cfg.output_format != "json" && o.cfg.output_format != "text")
    throw UsageError("unknown output format \"" + o.cfg.output_format + "\"");
  resolve_checks(o.cfg.checks);
  json r = run_verify(b, o.cfg);
  if (o.cfg.output_format == "text")
    write_out(o.out_path, format_text(r));
  else
    write_out(o.out_path, o.canonical ? canonical_dump(r) : r.dump(2) + "\n");
  return report_passed(r) ? kExitOk : kExitVerifyFailed;
}

void add_system_flags(CLI::App* c, Options& o) {
  c->add_option("--ambient", o.cfg.ambient_type, "root type: A B C D E6 E7 E8 F4 G2")->required();
  c->add_option("--rank", o.cfg.rank, "rank of the ambient system")->required();
  c->add_option("--hstar", o.cfg.h_star, "comma-separated integer vector in ambient coordinates")
      ->required()
      ->delimiter(',');
}

void add_verify_flags(CLI::App* c, Options& o) {
  c->add_option("--checks", o.cfg.checks, "comma-separated subset of checks (default: all)")->delimiter(',');
  c->add_option("--format", o.cfg.output_format, "json or text");
  c->add_flag("--canonical", o.canonical, "omit timing from the JSON report");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hat systems of class-C sandwich algebras and their Weyl groups"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--threads", o.threads, "OpenMP threads (0 = runtime default)");
  app.add_option("--cap", o.cfg.seed_cap, "closure element cap")->envname("SANDWICH_CAP");

  auto* build = app.add_subcommand("build", "construct the hat system and write a bundle");
  add_system_flags(build, o);
  build->add_option("--out", o.out_path, "bundle file (default stdout)");

  auto* verify = app.add_subcommand("verify", "run checks on a bundle");
  verify->add_option("--bundle", o.bundle_path, "bundle file (default stdin)");
  add_verify_flags(verify, o);
  verify->add_option("--out", o.out_path, "report file (default stdout)");

  auto* report = app.add_subcommand("report", "build and verify in one step");
  add_system_flags(report, o);
  add_verify_flags(report, o);
  report->add_option("--out", o.out_path, "report file (default stdout)");

  auto* scan_cmd = app.add_subcommand("scan", "list class-C alignments with small integer coordinates");
  scan_cmd->add_option("--ambient", o.cfg.ambient_type, "root type")->required();
  scan_cmd->add_option("--rank", o.cfg.rank, "rank")->required();
  scan_cmd->add_option("--bound", o.bound, "coordinate bound (default 2)");
  scan_cmd->add_option("--out", o.out_path, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (o.threads < 0) throw UsageError("--threads must be non-negative");
    if (o.threads > 0) set_thread_count(o.threads);
    if (o.cfg.seed_cap == 0) throw UsageError("--cap must be positive");

    if (*build) {
      Bundle b = build_bundle(o.cfg);
      write_out(o.out_path, to_json(b).dump(2) + "\n");
      return kExitOk;
    }
    if (*verify) return emit_report(read_bundle(o.bundle_path), o);
    if (*report) return emit_report(build_bundle(o.cfg), o);
    if (*scan_cmd) {
      auto hits = scan(o.cfg.ambient_type, o.cfg.rank, o.bound);
      write_out(o.out_path, scan_to_json(o.cfg.ambient_type, o.cfg.rank, o.bound, hits).dump(2) + "\n");
      return kExitOk;
    }
  } catch (const ClassCError& e) {
    std::cout << rejection_json(e.report).dump(2) << "\n";
    std::cerr << "sandwich: " << e.what() << "\n";
    return kExitNotClassC;
  } catch (const UsageError& e) {
    std::cerr << "sandwich: " << e.what() << "\n";
    return kExitUsage;
  } catch (const AlignmentError& e) {
    std::cerr << "sandwich: h_star does not give a usable alignment: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ClosureCapExceeded& e) {
    std::cerr << "sandwich: " << e.what() << "\n";
    return kExitVerifyFailed;
  }
  return kExitUsage;
}
