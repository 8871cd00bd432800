// settune: command-line front end.
//
// Exit codes: 0 ok, 1 usage, 2 parse error, 3 domain error, 4 I/O error,
// 5 invariant violation in a produced table.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include <settune.hpp>

namespace {

using namespace settune;

enum ExitCode { ok = 0, usage = 1, parse_failure = 2, domain_failure = 3, io_failure = 4, invariant_failure = 5 };

struct TableOptions {
  bool csv = false;
  bool no_notes = false;
  std::string sort = "interval";
};

void add_table_options(CLI::App* cmd, TableOptions& o) {
  cmd->add_flag("--csv", o.csv, "Write CSV instead of a JSON document");
  cmd->add_flag("--no-notes", o.no_notes, "Omit note-name annotations");
  cmd->add_option("--sort", o.sort, "Row order for CSV output")->check(CLI::IsMember({"interval", "consonance"}));
}

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw IoError("cannot write " + path.string());
}

std::string table_csv(const TuningTable& table, const TableOptions& o) {
  io::CsvTable csv;
  csv.header = {"interval_ratio", "cents", "affinity", "harmonicity", "total",
                "affinity_exact", "harmonicity_exact", "total_exact"};
  if (!o.no_notes) csv.header.push_back("note");
  const auto rows = o.sort == "consonance" ? by_consonance(table) : table.entries;
  for (const auto& e : rows) {
    std::vector<std::string> row = {e.interval.str(),
                                    io::fixed(io::display_cents(e.interval), 4),
                                    io::consonance_text(e.score.affinity()),
                                    io::consonance_text(e.score.harmonicity()),
                                    io::consonance_text(e.score.total()),
                                    e.score.affinity().str(),
                                    e.score.harmonicity().str(),
                                    e.score.total().str()};
    if (!o.no_notes) {
      const auto note = io::entry_note(table, e.interval);
      row.push_back(note ? note->str() : "");
    }
    csv.add_row(std::move(row));
  }
  return csv.render();
}

// Tables are validated with a full rescore before anything is printed.
void emit_table(const TuningTable& table, const TableOptions& o) {
  validate(table, true);
  if (o.csv) {
    std::cout << table_csv(table, o);
    return;
  }
  io::TuningDocument doc{table};
  doc.note_annotations = !o.no_notes;
  std::cout << io::to_json(doc);
}

int run(int argc, char** argv) {
  CLI::App app{"Exact set-theoretic consonance and tuning generation"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.set_version_flag("--version", std::string(version));
  app.require_subcommand(1);

  std::string f_text, g_text;
  TableOptions table_opts;

  auto* consonance = app.add_subcommand("consonance", "Affinity, harmonicity and total consonance of F and G");
  consonance->add_option("F", f_text, "Context set")->required();
  consonance->add_option("G", g_text, "Complementary set")->required();

  auto* affinitive = app.add_subcommand("affinitive", "Affinitive tuning: every ratio f/g");
  affinitive->add_option("F", f_text, "Context set")->required();
  affinitive->add_option("G", g_text, "Complementary set")->required();
  add_table_options(affinitive, table_opts);

  std::string h_text = "0", lo_text = "1/8", hi_text = "8";
  std::size_t max_den = 60;
  auto* harmonic = app.add_subcommand("harmonic", "Harmonic tuning: candidates with harmonicity above h");
  harmonic->add_option("F", f_text, "Context set")->required();
  harmonic->add_option("G", g_text, "Complementary set")->required();
  harmonic->add_option("--h", h_text, "Threshold, 0 <= h < 1")->capture_default_str();
  harmonic->add_option("--lo", lo_text, "Lowest candidate interval")->capture_default_str();
  harmonic->add_option("--hi", hi_text, "Highest candidate interval")->capture_default_str();
  harmonic->add_option("--max-den", max_den, "Largest candidate denominator")->capture_default_str();
  add_table_options(harmonic, table_opts);

  std::size_t n_extra = 0, m_extra = 0;
  auto* superset = app.add_subcommand("superset", "Harmonic superset tuning");
  superset->add_option("F", f_text, "Context set")->required();
  superset->add_option("G", g_text, "Complementary set")->required();
  superset->add_option("--n", n_extra, "Extra partials on the context superset")->capture_default_str();
  superset->add_option("--m", m_extra, "Extra partials on the complementary superset")->capture_default_str();
  add_table_options(superset, table_opts);

  auto* thomae_cmd = app.add_subcommand("thomae", "Modified and classical Thomae values as CSV");
  thomae_cmd->add_option("--max-den", max_den, "Largest denominator")->required();
  thomae_cmd->add_option("--lo", lo_text, "Lowest ratio")->capture_default_str();
  thomae_cmd->add_option("--hi", hi_text, "Highest ratio")->capture_default_str();

  DissonanceParams curve_params;
  std::size_t steps = 2000;
  double curve_lo = 1.0, curve_hi = 2.1;
  auto* curve = app.add_subcommand("curve", "Dissonance sweep of F against tG as CSV");
  curve->add_option("F", f_text, "Context set")->required();
  curve->add_option("G", g_text, "Complementary set")->required();
  curve->add_option("--chi-star", curve_params.chi_star, "Roughness peak position")->capture_default_str();
  curve->add_option("--steps", steps, "Number of samples")->capture_default_str();
  curve->add_option("--lo", curve_lo, "Lowest interval")->capture_default_str();
  curve->add_option("--hi", curve_hi, "Highest interval")->capture_default_str();

  std::string input;
  auto* reduce = app.add_subcommand("reduce-octave", "Fold a tuning document into [1, 2) and rescore");
  reduce->add_option("input", input, "Tuning document (default: stdin)");
  add_table_options(reduce, table_opts);

  std::string scl_name = "settune", scl_description;
  bool scl_cents = false;
  auto* scl = app.add_subcommand("export-scl", "Convert an octave-reduced tuning document to a Scala file");
  scl->add_option("input", input, "Tuning document (default: stdin)");
  scl->add_option("--name", scl_name, "Scale name for the header line")->capture_default_str();
  scl->add_option("--description", scl_description, "Description line (default: generator record)");
  scl->add_flag("--cents", scl_cents, "Write pitches in cents instead of ratios");

  std::string figure_id, out_dir;
  std::optional<std::size_t> figure_den;
  bool list_figures = false;
  io::FigureOptions figure_opts;
  auto* figure = app.add_subcommand("figure", "CSV data behind a named figure");
  figure->add_option("id", figure_id, "Figure id, e.g. fig5_1");
  figure->add_flag("--list", list_figures, "List supported figure ids");
  figure->add_option("--out", out_dir, "Write <id>.csv (and <id>_curve.csv) into this directory");
  figure->add_option("--max-den", figure_den, "Override the enumeration denominator bound");
  figure->add_option("--steps", figure_opts.curve_steps, "Dissonance sweep samples")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : usage;
  }

  if (*consonance) {
    const auto f = io::parse_set_expression(f_text);
    const auto g = io::parse_set_expression(g_text);
    const auto s = total_consonance(f, g);
    std::cout << "affinity    " << s.affinity() << "  " << io::consonance_text(s.affinity()) << "\n"
              << "harmonicity " << s.harmonicity() << "  " << io::consonance_text(s.harmonicity()) << "\n"
              << "total       " << s.total() << "  " << io::consonance_text(s.total()) << "\n";
  } else if (*affinitive) {
    emit_table(affinitive_tuning(io::parse_set_expression(f_text), io::parse_set_expression(g_text)), table_opts);
  } else if (*harmonic) {
    const EnumerationBounds bounds{Interval::parse(lo_text), Interval::parse(hi_text), max_den};
    emit_table(harmonic_tuning(io::parse_set_expression(f_text), io::parse_set_expression(g_text),
                               Ratio::parse(h_text), bounds),
               table_opts);
  } else if (*superset) {
    emit_table(superset_tuning(io::parse_set_expression(f_text), io::parse_set_expression(g_text), n_extra, m_extra),
               table_opts);
  } else if (*thomae_cmd) {
    io::CsvTable csv;
    csv.header = {"interval_ratio", "cents", "thomae_modified", "thomae", "thomae_modified_decimal"};
    for (const auto& t : enumerate_rationals(Interval::parse(lo_text), Interval::parse(hi_text), max_den)) {
      const Ratio tm = thomae_modified(t);
      csv.add_row({t.str(), io::fixed(io::display_cents(t), 4), tm.str(), thomae(t.value()).str(),
                   io::consonance_text(tm)});
    }
    std::cout << csv.render();
  } else if (*curve) {
    const auto points = dissonance_curve(io::parse_set_expression(f_text), io::parse_set_expression(g_text), curve_lo,
                                         curve_hi, steps, curve_params);
    std::cout << io::figures::curve_csv(points).render();
  } else if (*reduce) {
    const auto doc = io::parse_document(read_input(input));
    emit_table(octave_reduce(doc.table), table_opts);
  } else if (*scl) {
    const auto doc = io::parse_document(read_input(input));
    const auto format = scl_cents ? io::PitchFormat::cents : io::PitchFormat::ratio;
    std::cout << (scl_description.empty() ? io::export_scl(doc.table, scl_name, format)
                                          : io::export_scl(doc.table, scl_name, scl_description, format));
  } else if (*figure) {
    if (list_figures) {
      for (const auto& id : io::supported_figures()) std::cout << id << "\n";
      return ok;
    }
    if (figure_id.empty()) throw ParseError("figure id required (see --list)", "");
    figure_opts.max_den = figure_den;
    const auto data = io::emit_figure_data(figure_id, figure_opts);
    if (out_dir.empty()) {
      std::cout << data.table.render();
    } else {
      const std::filesystem::path dir(out_dir);
      std::error_code ec;
      std::filesystem::create_directories(dir, ec);
      if (ec) throw IoError("cannot create " + out_dir + ": " + ec.message());
      write_file(dir / (figure_id + ".csv"), data.table.render());
      if (data.sidecar) write_file(dir / (figure_id + "_curve.csv"), data.sidecar->render());
    }
  }
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const settune::Error& e) {
    std::cerr << "settune: " << e.what() << "\n";
    switch (e.kind()) {
      case settune::ErrorKind::parse: return parse_failure;
      case settune::ErrorKind::domain: return domain_failure;
      case settune::ErrorKind::io: return io_failure;
      case settune::ErrorKind::invariant: return invariant_failure;
    }
  } catch (const std::exception& e) {
    std::cerr << "settune: " << e.what() << "\n";
  }
  return invariant_failure;
}
