#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "common.hpp"

namespace pervarr::cli {

std::size_t grid_max_n(const std::string& name) {
  if (name == "tiny") return 3;
  if (name == "small") return 5;
  if (name == "large") return 6;
  throw UsageError("unknown grid '" + name + "' (expected tiny, small or large)");
}

std::size_t max_grid_from_env() {
  const char* raw = std::getenv("PERVARR_MAX_GRID");
  if (raw == nullptr || *raw == '\0') return kDefaultMaxGrid;
  const std::string text(raw);
  std::size_t value = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size() || value == 0) {
    throw UsageError("PERVARR_MAX_GRID must be a positive integer, got '" + text + "'");
  }
  return value;
}

std::vector<FieldElement> parse_a_vector(const std::string& text, FieldMode mode,
                                         std::size_t nvars) {
  std::vector<FieldElement> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    try {
      out.push_back(parse_field_element(text.substr(start, comma - start), mode, nvars));
    } catch (const ParseError& e) {
      throw ParseError(e.detail(), start + e.position());
    }
    if (comma == text.size()) break;
    start = comma + 1;
  }
  return out;
}

FieldMode resolve_mode(const RunConfig& cfg) {
  if (cfg.mode) return *cfg.mode;
  if (cfg.a_text.empty()) return cfg.n > 0 ? FieldMode::symbolic : FieldMode::rational;
  return infer_field_mode(cfg.a_text);
}

Input resolve_input(const RunConfig& cfg) {
  Input in;
  in.mode = resolve_mode(cfg);
  if (cfg.a_text.empty()) {
    if (cfg.n == 0) throw UsageError("give the monodromies with -a, or -n in symbolic mode");
    if (in.mode != FieldMode::symbolic) {
      throw UsageError("-n without -a needs --mode symbolic");
    }
    in.nvars = cfg.n;
    for (std::size_t i = 0; i < cfg.n; ++i) {
      in.a.emplace_back(RationalFunction::generator(i + 1, cfg.n));
    }
    return in;
  }
  const auto entries = static_cast<std::size_t>(std::count(cfg.a_text.begin(), cfg.a_text.end(), ',')) + 1;
  in.nvars = in.mode == FieldMode::symbolic ? std::max(cfg.n, entries) : 0;
  in.a = parse_a_vector(cfg.a_text, in.mode, in.nvars);
  if (cfg.n != 0 && cfg.n != in.a.size()) {
    throw UsageError("-n " + std::to_string(cfg.n) + " does not match " +
                     std::to_string(in.a.size()) + " monodromies");
  }
  return in;
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string render_rows(const std::vector<std::vector<std::string>>& rows,
                        const std::string& indent) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    if (width.size() < row.size()) width.resize(row.size(), 0);
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream os;
  for (const auto& row : rows) {
    os << indent << "[";
    for (std::size_t c = 0; c < row.size(); ++c) {
      os << ' ' << std::string(width[c] - row[c].size(), ' ') << row[c];
    }
    os << " ]\n";
  }
  return os.str();
}

std::string render_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    if (width.size() < row.size()) width.resize(row.size(), 0);
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream os;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) line += "  ";
      line += row[c] + std::string(width[c] - row[c].size(), ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << '\n';
  }
  return os.str();
}

namespace {

constexpr const char* kFooter =
    "Monodromies are comma-separated field elements: -a 1,2,1/2 or -a 1+i,1-i.\n"
    "In symbolic mode -n N uses the indeterminates t1..tN.\n"
    "sweep --values takes one value set for every line (\"1,2,1/2\" with -n),\n"
    "or one set per line separated by ';' (\"1,2;3;1/2,1/3\").\n"
    "Without --values, sweep covers the named --grid for n=1..max (or only -n).\n"
    "sweep CSV columns: index,a,k,product,irreducible,c_closed,c_oracle\n"
    "Exit status: 0 all checks pass, 1 an identity is violated, 2 usage or parse error.\n"
    "PERVARR_MAX_GRID overrides the sweep row cap (default 1000000).";

void add_common_options(CLI::App* sub, RunConfig& cfg, std::string& mode, std::string& format) {
  sub->add_option("--mode", mode, "field: rational, gaussian or symbolic (default: inferred)")
      ->check(CLI::IsMember({"rational", "gaussian", "symbolic"}));
  sub->add_option("-a", cfg.a_text, "comma-separated monodromies a1,...,an");
  sub->add_option("-n", cfg.n, "number of lines")->check(CLI::Range(1, 64));
  sub->add_option("--format", format, "pretty, json or csv")
      ->check(CLI::IsMember({"pretty", "json", "csv"}));
  sub->add_option("--out", cfg.out_path, "write the report to FILE");
  sub->add_option("--jobs", cfg.jobs, "worker threads (default: hardware threads)");
}

}  // namespace

RunConfig parse_args(const std::vector<std::string>& args, std::ostream& out, bool& handled) {
  handled = false;
  RunConfig cfg;
  std::string mode, format;

  CLI::App app("Composition factors of pushforwards of rank-one local systems on central line "
               "arrangements.",
               "pervarr");
  app.footer(kFooter);
  app.require_subcommand(1);

  auto* matrix = app.add_subcommand("matrix", "print the variation matrix, its minor and determinant");
  auto* factors = app.add_subcommand("factors", "irreducibility verdict and composition factors");
  auto* verify = app.add_subcommand("verify", "run the identity and grid checks");
  auto* sweep = app.add_subcommand("sweep", "tabulate counts over a grid of monodromies");
  for (auto* sub : {matrix, factors, verify, sweep}) add_common_options(sub, cfg, mode, format);
  verify->add_option("--nmax", cfg.nmax, "largest n for the symbolic checks")->check(CLI::Range(2, 12));
  for (auto* sub : {verify, sweep}) {
    sub->add_option("--grid", cfg.grid, "tiny (n<=3), small (n<=5) or large (n<=6)")
        ->check(CLI::IsMember({"tiny", "small", "large"}));
  }
  verify->add_option("--seed", cfg.seed, "seed for the random points");
  sweep->add_option("--values", cfg.values, "value sets for the sweep");

  std::vector<const char*> argv{"pervarr"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    handled = true;
    out << app.help();
    return cfg;
  } catch (const CLI::CallForAllHelp& e) {
    handled = true;
    out << app.help("", CLI::AppFormatMode::All);
    return cfg;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  if (*matrix) cfg.command = Command::matrix;
  if (*factors) cfg.command = Command::factors;
  if (*verify) cfg.command = Command::verify;
  if (*sweep) cfg.command = Command::sweep;
  if (!mode.empty()) cfg.mode = parse_field_mode(mode);
  if (format == "json") cfg.format = OutputFormat::json;
  if (format == "csv") cfg.format = OutputFormat::csv;
  if (format.empty() && cfg.command == Command::sweep) cfg.format = OutputFormat::csv;
  cfg.max_grid = max_grid_from_env();
  return cfg;
}

int execute(const RunConfig& cfg, std::ostream& out) {
  switch (cfg.command) {
    case Command::matrix: return cmd_matrix(cfg, out);
    case Command::factors: return cmd_factors(cfg, out);
    case Command::verify: return cmd_verify(cfg, out);
    case Command::sweep: return cmd_sweep(cfg, out);
  }
  return kExitUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    bool handled = false;
    const RunConfig cfg = parse_args(args, out, handled);
    if (handled) return kExitOk;
    if (cfg.out_path.empty()) return execute(cfg, out);

    std::ostringstream buffer;
    const int status = execute(cfg, buffer);
    std::ofstream file(cfg.out_path, std::ios::binary);
    if (!file || !(file << buffer.str()) || !file.flush()) {
      err << "error: cannot write " << cfg.out_path << "\n";
      return kExitUsage;
    }
    return status;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitUsage;
}

}  // namespace pervarr::cli
