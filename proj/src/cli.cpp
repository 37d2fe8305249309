#include "ptolemy_lab/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ptolemy_lab/analysis.hpp"
#include "ptolemy_lab/error.hpp"
#include "ptolemy_lab/http_api.hpp"
#include "ptolemy_lab/mutation.hpp"
#include "ptolemy_lab/serialize.hpp"
#include "ptolemy_lab/verify.hpp"

namespace ptolemy_lab {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::parse_error, "cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::parse_error, "cannot write " + path);
  file << text;
}

void report_error(const Error& e, std::ostream& err) {
  err << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ptolemy diagrams, weak AR triangles and mutation in the polygon model", "ptolemy-lab"};
  app.require_subcommand(1);

  std::string input, output, diagonal_text, direction_text = "backward", format = "json";
  std::string static_dir, host = "127.0.0.1";
  int size = 0, port = 8080;
  int max_size = kDefaultEnumerationBound;
  std::vector<std::string> suites;

  auto* analyze_cmd = app.add_subcommand("analyze", "Analyze a diagram document");
  analyze_cmd->add_option("--input", input, "Diagram JSON")->required();
  analyze_cmd->add_option("--output", output, "Report path (default: stdout)");

  auto* mutate_cmd = app.add_subcommand("mutate", "Replace an Ext-projective diagonal");
  mutate_cmd->add_option("--input", input, "Diagram JSON")->required();
  mutate_cmd->add_option("--diagonal", diagonal_text, "u,v")->required();
  mutate_cmd->add_option("--direction", direction_text, "backward or forward")
      ->check(CLI::IsMember({"backward", "forward"}));
  mutate_cmd->add_option("--output", output, "Report path (default: stdout)");

  auto* closure_cmd = app.add_subcommand("closure", "Smallest Ptolemy diagram containing the input");
  closure_cmd->add_option("--input", input, "Diagram JSON")->required();
  closure_cmd->add_option("--output", output, "Document path (default: stdout)");

  auto* quiver_cmd = app.add_subcommand("quiver", "AR quiver of the polygon");
  quiver_cmd->add_option("--size", size, "Number of polygon vertices")->required();
  quiver_cmd->add_option("--format", format, "dot or json")->check(CLI::IsMember({"dot", "json"}));

  auto* verify_cmd = app.add_subcommand("verify", "Run the exhaustive verification suites");
  verify_cmd->add_option("--max-size", max_size, "Largest polygon enumerated");
  verify_cmd->add_option("--suite", suites, "Suite to run (repeatable; default: all)")
      ->check(CLI::IsMember(suite_names()));

  auto* serve_cmd = app.add_subcommand("serve", "Serve the JSON API and the explorer bundle");
  serve_cmd->add_option("--port", port, "TCP port");
  serve_cmd->add_option("--host", host, "Bind address");
  serve_cmd->add_option("--static", static_dir, "Directory served at /");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (analyze_cmd->parsed()) {
      const AnalysisReport r = analyze(parse_document_text(read_file(input)));
      emit(to_text(analysis_json(r)), output, out);
      return r.ptolemy ? kExitOk : kExitNotPtolemy;
    }
    if (mutate_cmd->parsed()) {
      const Diagram d = parse_document_text(read_file(input));
      const MutationReport r = mutate(d, parse_diagonal_text(d.polygon(), diagonal_text),
                                      parse_direction(direction_text));
      emit(to_text(mutation_json(r)), output, out);
      if (!r.extension_closed) err << "result is not closed under extensions: " << r.reason << "\n";
      return r.extension_closed ? kExitOk : kExitNotClosed;
    }
    if (closure_cmd->parsed()) {
      emit(to_text(document_json(ptolemy_closure(parse_document_text(read_file(input))))), output, out);
      return kExitOk;
    }
    if (quiver_cmd->parsed()) {
      if (size > kMaxQuiverSize) {
        throw Error(ErrorCode::size_limit, "size above " + std::to_string(kMaxQuiverSize));
      }
      const ARQuiver q = ar_quiver(Polygon(size));
      out << (format == "dot" ? quiver_dot(q) : to_text(quiver_json(q)));
      return kExitOk;
    }
    if (verify_cmd->parsed()) {
      const auto& names = suites.empty() ? suite_names() : suites;
      std::size_t failed = 0;
      for (const std::string& name : names) {
        const SuiteResult r = run_suite(name, max_size);
        out << r.name << ": " << (r.passed() ? "PASS" : "FAIL") << " " << (r.cases - r.failures) << "/"
            << r.cases << " cases";
        if (r.diagrams > 0) out << " over " << r.diagrams << " diagrams";
        out << "\n";
        for (const std::string& c : r.counterexamples) out << "  counterexample: " << c << "\n";
        if (!r.passed()) ++failed;
      }
      out << "suites: " << names.size() - failed << "/" << names.size() << " passed (max size " << max_size
          << ")\n";
      return failed == 0 ? kExitOk : kExitNotPtolemy;
    }
    if (serve_cmd->parsed()) {
      if (!static_dir.empty() && !std::filesystem::is_directory(static_dir)) {
        err << "warning: static directory " << static_dir << " not found, serving the API only\n";
        static_dir.clear();
      }
      err << "listening on http://" << host << ":" << port << "\n";
      serve(host, port, static_dir);
      return kExitOk;
    }
  } catch (const Error& e) {
    report_error(e, err);
    switch (e.code()) {
      case ErrorCode::not_ext_projective:
      case ErrorCode::not_ext_injective:
        return kExitNotExtProjective;
      case ErrorCode::bind_failure:
        return kExitBindFailure;
      default:
        return kExitUsage;
    }
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace ptolemy_lab
