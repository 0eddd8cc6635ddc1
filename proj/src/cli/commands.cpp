#include <limits>
#include <ostream>

#include <json.hpp>

#include "common.hpp"
#include "parallel.hpp"
#include "pervarr/decomp.hpp"

namespace pervarr::cli {

namespace {

using nlohmann::json;

template <Field F>
int emit_matrix(const LocalSystem<F>& L, const RunConfig& cfg, std::ostream& out) {
  const std::size_t n = L.n();
  const auto M = ambient_var_matrix(L);
  const auto m_rows = matrix_strings(M.entries);
  std::optional<Matrix<F>> minor;
  std::optional<F> det, closed;
  if (n >= 2) {
    minor = minor_matrix(M);
    det = determinant(*minor);
    closed = minor_det_closed_form(L);
  }
  const bool agrees = !det || *det == *closed;

  switch (cfg.format) {
    case OutputFormat::json: {
      json j = {{"schema", kReportSchema},
                {"mode", to_string(field_mode_of<F>())},
                {"n", n},
                {"a", json::array()},
                {"matrix", m_rows},
                {"agrees", agrees}};
      for (const auto& x : L.a()) j["a"].push_back(x.to_string());
      if (minor) {
        j["minor"] = matrix_strings(*minor);
        j["det_minor"] = det->to_string();
        j["closed_form"] = closed->to_string();
      } else {
        j["minor"] = nullptr;
        j["note"] = "no minor for n=1";
      }
      out << j.dump(2) << "\n";
      break;
    }
    case OutputFormat::csv: {
      out << "matrix,row,col,entry\n";
      auto dump = [&](const char* name, const std::vector<std::vector<std::string>>& rows) {
        for (std::size_t r = 0; r < rows.size(); ++r)
          for (std::size_t c = 0; c < rows[r].size(); ++c)
            out << name << ',' << r + 1 << ',' << c + 1 << ',' << csv_field(rows[r][c]) << '\n';
      };
      dump("M", m_rows);
      if (minor) {
        dump("minor", matrix_strings(*minor));
        out << "det_minor,,," << csv_field(det->to_string()) << '\n';
        out << "closed_form,,," << csv_field(closed->to_string()) << '\n';
      }
      break;
    }
    case OutputFormat::pretty: {
      out << "a = " << L.to_string() << "\n";
      out << "M_" << n << " =\n" << render_rows(m_rows, "  ");
      if (!minor) {
        out << "note: no minor for n=1\n";
        break;
      }
      out << "M' (first column and last row deleted) =\n"
          << render_rows(matrix_strings(*minor), "  ");
      out << "det(M') = " << det->to_string() << "    closed form = " << closed->to_string()
          << "    " << (agrees ? "equal" : "DIFFERENT") << "\n";
      break;
    }
  }
  return agrees ? kExitOk : kExitViolation;
}

struct SweepRow {
  std::size_t index = 0;
  std::vector<std::string> a;
  std::size_t k = 0;
  std::string product;
  bool irreducible = false;
  std::size_t c_closed = 0;
  std::size_t c_oracle = 0;
};

std::vector<std::vector<FieldElement>> value_sets(const RunConfig& cfg, FieldMode mode) {
  std::vector<std::vector<FieldElement>> sets;
  std::size_t start = 0;
  for (;;) {
    const std::size_t semi = std::min(cfg.values->find(';', start), cfg.values->size());
    const std::string part = cfg.values->substr(start, semi - start);
    if (part.empty()) throw UsageError("empty value set in --values");
    try {
      sets.push_back(parse_a_vector(part, mode, 0));
    } catch (const ParseError& e) {
      throw ParseError(e.detail(), start + e.position());
    }
    if (semi == cfg.values->size()) break;
    start = semi + 1;
  }
  if (sets.size() == 1 && cfg.n > 1) sets.resize(cfg.n, sets.front());
  if (cfg.n != 0 && sets.size() != cfg.n) {
    throw UsageError("--values lists " + std::to_string(sets.size()) + " sets but -n is " +
                     std::to_string(cfg.n));
  }
  return sets;
}

std::vector<FieldElement> default_values(FieldMode mode) {
  std::vector<FieldElement> out;
  if (mode == FieldMode::gaussian) {
    for (const char* v : {"1", "-1", "i", "-i", "2", "1/2", "1+i"})
      out.push_back(parse_field_element(v, mode));
  } else {
    for (const char* v : {"1", "-1", "2", "1/2", "3", "1/3", "2/3"})
      out.push_back(parse_field_element(v, mode));
  }
  return out;
}

std::size_t checked_size(const std::vector<std::vector<FieldElement>>& sets, std::size_t cap) {
  std::size_t total = 1;
  for (const auto& s : sets) {
    if (total > std::numeric_limits<std::size_t>::max() / s.size()) return cap + 1;
    total *= s.size();
  }
  return total;
}

// Row index i of a mixed-radix grid, last line varying fastest.
std::vector<FieldElement> grid_point(const std::vector<std::vector<FieldElement>>& sets,
                                     std::size_t i) {
  std::vector<FieldElement> a(sets.size());
  for (std::size_t j = sets.size(); j-- > 0;) {
    a[j] = sets[j][i % sets[j].size()];
    i /= sets[j].size();
  }
  return a;
}

SweepRow sweep_row(FieldMode mode, std::vector<FieldElement> a) {
  Input in{mode, std::move(a), 0};
  return with_local_system(in, [](const auto& L) {
    const auto r = count_oracle(L);
    return SweepRow{0, r.a, r.k, r.product, r.irreducible, r.closed_form_count, r.oracle_count};
  });
}

}  // namespace

int cmd_matrix(const RunConfig& cfg, std::ostream& out) {
  const Input in = resolve_input(cfg);
  return with_local_system(in, [&](const auto& L) { return emit_matrix(L, cfg, out); });
}

int cmd_factors(const RunConfig& cfg, std::ostream& out) {
  const Input in = resolve_input(cfg);
  if (in.mode == FieldMode::symbolic) {
    throw UsageError("factors needs numeric monodromies; symbolic mode is not supported");
  }
  const FactorReport report =
      with_local_system(in, [](const auto& L) { return count_oracle(L); });
  switch (cfg.format) {
    case OutputFormat::json: out << to_json(report).dump(2) << "\n"; break;
    case OutputFormat::csv: {
      std::string a = "(";
      for (std::size_t i = 0; i < report.a.size(); ++i) a += (i ? "," : "") + report.a[i];
      out << "index,a,k,product,irreducible,c_closed,c_oracle\n"
          << 0 << ',' << csv_field(a + ")") << ',' << report.k << ','
          << csv_field(report.product) << ',' << (report.irreducible ? "true" : "false") << ','
          << report.closed_form_count << ',' << report.oracle_count << '\n';
      break;
    }
    case OutputFormat::pretty: out << render_pretty(report); break;
  }
  return report.agrees ? kExitOk : kExitViolation;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out) {
  const FieldMode mode = cfg.mode ? *cfg.mode : infer_field_mode(cfg.values.value_or(""));
  if (mode == FieldMode::symbolic) throw UsageError("sweep needs numeric values");
  if (!cfg.a_text.empty()) throw UsageError("sweep takes --values, not -a");

  // Blocks of equal n, each a full product of value sets.
  std::vector<std::vector<std::vector<FieldElement>>> blocks;
  if (cfg.values) {
    blocks.push_back(value_sets(cfg, mode));
  } else {
    const auto values = default_values(mode);
    const std::size_t lo = cfg.n ? cfg.n : 1, hi = cfg.n ? cfg.n : grid_max_n(cfg.grid);
    for (std::size_t n = lo; n <= hi; ++n) blocks.emplace_back(n, values);
  }
  std::size_t total = 0;
  for (const auto& b : blocks) {
    total += checked_size(b, cfg.max_grid);
    if (total > cfg.max_grid) {
      throw UsageError("sweep grid exceeds the cap of " + std::to_string(cfg.max_grid) +
                       " rows (set PERVARR_MAX_GRID to raise it)");
    }
  }

  std::vector<SweepRow> rows;
  rows.reserve(total);
  for (const auto& b : blocks) {
    auto part = parallel_map(checked_size(b, cfg.max_grid), cfg.jobs,
                             [&](std::size_t i) { return sweep_row(mode, grid_point(b, i)); });
    for (auto& r : part) {
      r.index = rows.size();
      rows.push_back(std::move(r));
    }
  }

  bool agrees = true;
  for (const auto& r : rows) agrees = agrees && r.c_closed == r.c_oracle;

  auto a_text = [](const SweepRow& r) {
    std::string s = "(";
    for (std::size_t i = 0; i < r.a.size(); ++i) s += (i ? "," : "") + r.a[i];
    return s + ")";
  };
  switch (cfg.format) {
    case OutputFormat::json: {
      json j = {{"schema", kReportSchema}, {"rows", json::array()}};
      for (const auto& r : rows) {
        j["rows"].push_back({{"index", r.index},
                             {"a", r.a},
                             {"k", r.k},
                             {"product", r.product},
                             {"irreducible", r.irreducible},
                             {"c_closed", r.c_closed},
                             {"c_oracle", r.c_oracle}});
      }
      out << j.dump(2) << "\n";
      break;
    }
    case OutputFormat::csv:
      out << "index,a,k,product,irreducible,c_closed,c_oracle\n";
      for (const auto& r : rows) {
        out << r.index << ',' << csv_field(a_text(r)) << ',' << r.k << ',' << csv_field(r.product)
            << ',' << (r.irreducible ? "true" : "false") << ',' << r.c_closed << ',' << r.c_oracle
            << '\n';
      }
      break;
    case OutputFormat::pretty: {
      std::vector<std::vector<std::string>> table{
          {"index", "a", "k", "product", "irreducible", "c_closed", "c_oracle"}};
      for (const auto& r : rows) {
        table.push_back({std::to_string(r.index), a_text(r), std::to_string(r.k), r.product,
                         r.irreducible ? "yes" : "no", std::to_string(r.c_closed),
                         std::to_string(r.c_oracle)});
      }
      out << render_table(table);
      out << rows.size() << " rows, " << (agrees ? "no" : "some") << " disagreements\n";
      break;
    }
  }
  return agrees ? kExitOk : kExitViolation;
}

}  // namespace pervarr::cli
