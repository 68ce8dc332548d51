#include "hopfq/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <ostream>

#include "hopfq/error.hpp"
#include "hopfq/json_io.hpp"
#include "hopfq/report.hpp"

namespace hopfq {

namespace {

struct SourceArgs {
  std::string builtin;
  std::string loop;
  std::string field = "q";
  std::string construction = "both";
  std::string format = "json";
  std::string output;
  std::vector<std::string> suites{"all"};
};

void add_source(CLI::App* cmd, SourceArgs& a) {
  auto* b = cmd->add_option("--builtin", a.builtin, "builtin loop, e.g. cyclic:4, sym3, chein:sym3, octonion");
  auto* l = cmd->add_option("--loop", a.loop, "Cayley-table file");
  b->excludes(l);
  l->excludes(b);
}

void add_algebra(CLI::App* cmd, SourceArgs& a) {
  cmd->add_option("--field", a.field, "q or gf:p")->capture_default_str();
  cmd->add_option("--construction", a.construction, "group_algebra, function_algebra or both")
      ->capture_default_str();
}

void add_output(CLI::App* cmd, SourceArgs& a) {
  cmd->add_option("--format", a.format, "json or text")->capture_default_str();
  cmd->add_option("--output", a.output, "write the report to this path instead of standard output");
}

RunConfig to_config(const std::string& command, const SourceArgs& a) {
  RunConfig cfg;
  cfg.command = command;
  if (!a.builtin.empty()) cfg.builtin = a.builtin;
  if (!a.loop.empty()) cfg.loop_path = a.loop;
  cfg.field = a.field;
  cfg.construction = parse_construction(a.construction);
  cfg.suites = command == "semisimple" ? std::vector<Suite>{Suite::semisimple} : parse_suites(a.suites);
  cfg.format = parse_format(a.format);
  return cfg;
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::ParseError, "cannot write '" + path + "'");
  file << text;
}

std::string classify_text(const LoopTable& loop, Format format) {
  const LoopReport r = classify(loop);
  const std::pair<const char*, const LoopFlag*> flags[] = {{"ip", &r.ip},
                                                           {"flexible", &r.flexible},
                                                           {"moufang", &r.moufang},
                                                           {"commutative", &r.commutative},
                                                           {"associative", &r.associative}};
  if (format == Format::json) {
    Json doc;
    doc["order"] = loop.order();
    doc["identity"] = loop.identity();
    for (const auto& [name, flag] : flags) doc[name] = {{"holds", flag->holds}, {"witness", flag->witness}};
    return doc.dump(2) + "\n";
  }
  std::string out = "order=" + std::to_string(loop.order()) + " identity=" + std::to_string(loop.identity()) + "\n";
  for (const auto& [name, flag] : flags) {
    out += std::string(name) + "=" + (flag->holds ? "true" : "false");
    if (!flag->holds) {
      out += " witness=(";
      for (std::size_t i = 0; i < flag->witness.size(); ++i) {
        out += (i ? "," : "") + std::to_string(flag->witness[i]);
      }
      out += ")";
    }
    out += "\n";
  }
  return out;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification toolkit for Hopf quasigroups and coquasigroups built from IP loops", "hopfq"};
  app.require_subcommand(1);

  SourceArgs report_args;
  auto* report = app.add_subcommand("report", "run verification suites and emit a report");
  add_source(report, report_args);
  add_algebra(report, report_args);
  report->add_option("--suites", report_args.suites,
                     "comma-separated: axioms, integrals, modules, fourier, frobenius, semisimple, all")
      ->delimiter(',')
      ->capture_default_str();
  add_output(report, report_args);

  SourceArgs ss_args;
  ss_args.format = "text";
  auto* semisimple = app.add_subcommand("semisimple", "decide semisimplicity via the integral criterion");
  add_source(semisimple, ss_args);
  add_algebra(semisimple, ss_args);
  add_output(semisimple, ss_args);

  SourceArgs cl_args;
  cl_args.format = "text";
  auto* classify_cmd = app.add_subcommand("classify", "decide loop properties with witnesses");
  add_source(classify_cmd, cl_args);
  add_output(classify_cmd, cl_args);

  SourceArgs tb_args;
  auto* table = app.add_subcommand("table", "print the canonical Cayley table");
  add_source(table, tb_args);
  table->add_option("--output", tb_args.output, "write to this path instead of standard output");

  SourceArgs st_args;
  st_args.construction = "group_algebra";
  auto* structure = app.add_subcommand("structure", "print structure constants as JSON");
  add_source(structure, st_args);
  add_algebra(structure, st_args);
  structure->add_option("--output", st_args.output, "write to this path instead of standard output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (report->parsed() || semisimple->parsed()) {
      const bool is_report = report->parsed();
      const SourceArgs& a = is_report ? report_args : ss_args;
      const RunConfig cfg = to_config(is_report ? "report" : "semisimple", a);
      const RunResult result = run(cfg);
      emit(render(result, cfg.format), a.output, out);
      return result.exit_code();
    }
    if (classify_cmd->parsed()) {
      RunConfig cfg = to_config("classify", cl_args);
      emit(classify_text(load_source(cfg), cfg.format), cl_args.output, out);
      return 0;
    }
    if (table->parsed()) {
      emit(serialize_loop(load_source(to_config("table", tb_args))), tb_args.output, out);
      return 0;
    }
    const RunConfig cfg = to_config("structure", st_args);
    if (cfg.construction == Construction::both) {
      throw Error(ErrorCode::BadParams, "structure needs a single construction");
    }
    const LoopTable loop = load_source(cfg);
    const FieldSpec field = FieldSpec::parse(cfg.field);
    const HopfData h = cfg.construction == Construction::group_algebra ? group_algebra(loop, field)
                                                                        : function_algebra(loop, field);
    emit(to_json(h).dump(2) + "\n", st_args.output, out);
    return 0;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace hopfq
