#include <ostream>
#include <random>

#include <json.hpp>

#include "common.hpp"
#include "parallel.hpp"
#include "pervarr/decomp.hpp"

namespace pervarr::cli {

namespace {

constexpr std::size_t kRandomPerN = 100;
constexpr std::size_t kRandomMaxN = 12;

struct Check {
  std::string name;
  bool pass = true;
  std::string detail;
  std::string counterexample;
};

// First failing item in index order, or empty.
std::string first_failure(const std::vector<std::string>& failures) {
  for (const auto& f : failures)
    if (!f.empty()) return f;
  return {};
}

Check finish(std::string name, std::string detail, const std::vector<std::string>& failures) {
  Check c{std::move(name), true, std::move(detail), first_failure(failures)};
  c.pass = c.counterexample.empty();
  return c;
}

std::string join_range(std::size_t lo, std::size_t hi) {
  std::string s;
  for (std::size_t n = lo; n <= hi; ++n) s += (n == lo ? "" : ",") + std::to_string(n);
  return s;
}

template <Field F>
F random_element(std::mt19937_64& rng);

template <>
Rational random_element<Rational>(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 9);
  for (;;) {
    Rational x(num(rng), den(rng));
    if (!x.is_zero()) return x;
  }
}

template <>
GaussianRational random_element<GaussianRational>(std::mt19937_64& rng) {
  for (;;) {
    std::uniform_int_distribution<long> num(-9, 9), den(1, 9);
    GaussianRational x(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
    if (!x.is_zero()) return x;
  }
}

template <Field F>
std::vector<F> grid_values();

template <>
std::vector<Rational> grid_values<Rational>() {
  return {Rational(1), Rational(-1), Rational(2), Rational(1, 2),
          Rational(3), Rational(1, 3), Rational(2, 3)};
}

template <>
std::vector<GaussianRational> grid_values<GaussianRational>() {
  using G = GaussianRational;
  return {G(1), G(-1), G::i(), -G::i(), G(2), G(Rational(1, 2)), G(Rational(1), Rational(1))};
}

template <Field F>
LocalSystem<F> grid_point(const std::vector<F>& values, std::size_t n, std::size_t index) {
  std::vector<F> a(n);
  for (std::size_t j = n; j-- > 0;) {
    a[j] = values[index % values.size()];
    index /= values.size();
  }
  return make_local_system(std::move(a));
}

template <Field F>
std::string minor_identity_failure(const LocalSystem<F>& L) {
  const auto det = determinant(minor_matrix(ambient_var_matrix(L)));
  const auto closed = minor_det_closed_form(L);
  if (det == closed) return {};
  return "a=" + L.to_string() + ": det(M')=" + det.to_string() + ", closed form " +
         closed.to_string();
}

template <Field F>
std::string cross_path_failure(const LocalSystem<F>& L) {
  if (ambient_var_matrix(L).entries == ambient_var_from_formula(L).entries) return {};
  return "a=" + L.to_string() + ": entry-wise and cyclic-sum matrices differ";
}

Check symbolic_minor_check(const RunConfig& cfg) {
  const auto failures = parallel_map(cfg.nmax - 1, cfg.jobs, [](std::size_t i) {
    return minor_identity_failure(symbolic_local_system(i + 2));
  });
  return finish("minor determinant identity, symbolic", "n=" + join_range(2, cfg.nmax), failures);
}

Check symbolic_cross_path_check(const RunConfig& cfg) {
  const auto failures = parallel_map(cfg.nmax - 1, cfg.jobs, [](std::size_t i) {
    return cross_path_failure(symbolic_local_system(i + 2));
  });
  return finish("ambient matrix cross-path identity, symbolic", "n=" + join_range(2, cfg.nmax),
                failures);
}

// Random points are drawn up front so the report does not depend on
// the number of workers.
template <Field F>
std::vector<LocalSystem<F>> random_points(std::uint64_t seed, std::size_t lo) {
  std::mt19937_64 rng(seed);
  std::vector<LocalSystem<F>> points;
  for (std::size_t n = lo; n <= kRandomMaxN; ++n) {
    for (std::size_t t = 0; t < kRandomPerN; ++t) {
      std::vector<F> a;
      for (std::size_t i = 0; i < n; ++i) a.push_back(random_element<F>(rng));
      points.push_back(make_local_system(std::move(a)));
    }
  }
  return points;
}

template <Field F>
std::vector<Check> numeric_checks(const RunConfig& cfg) {
  std::vector<Check> checks;
  const std::string seed = "seed " + std::to_string(cfg.seed);
  const std::string field = to_string(field_mode_of<F>());

  {
    const auto points = random_points<F>(cfg.seed, 2);
    const auto failures = parallel_map(points.size(), cfg.jobs,
                                       [&](std::size_t i) { return minor_identity_failure(points[i]); });
    checks.push_back(finish("minor determinant identity, " + field,
                            std::to_string(kRandomPerN) + " random points per n, n=2.." +
                                std::to_string(kRandomMaxN) + ", " + seed,
                            failures));
  }
  {
    const auto points = random_points<F>(cfg.seed + 1, 1);
    const auto failures = parallel_map(points.size(), cfg.jobs,
                                       [&](std::size_t i) { return cross_path_failure(points[i]); });
    checks.push_back(finish("ambient matrix cross-path identity, " + field,
                            std::to_string(kRandomPerN) + " random points per n, n=1.." +
                                std::to_string(kRandomMaxN) + ", " + seed,
                            failures));
  }

  const auto values = grid_values<F>();
  const std::size_t max_n = grid_max_n(cfg.grid);
  std::size_t hypothesis_points = 0, grid_points = 0;
  std::vector<std::string> rank_failures, count_failures;
  for (std::size_t n = 1; n <= max_n; ++n) {
    std::size_t size = 1;
    for (std::size_t j = 0; j < n; ++j) size *= values.size();
    grid_points += size;

    struct Outcome {
      bool hypothesis = false;
      std::string rank_failure;
      std::string count_failure;
    };
    const auto outcomes = parallel_map(size, cfg.jobs, [&](std::size_t i) {
      Outcome o;
      const auto L = grid_point(values, n, i);
      const std::size_t k = L.k();
      if (L.product_is_one() && k + 1 < n) {
        o.hypothesis = true;
        const std::size_t r = rank(var_II_matrix(L));
        if (r != 1) o.rank_failure = "a=" + L.to_string() + ": rank(var_II)=" + std::to_string(r);
      }
      const auto report = count_oracle(L);
      const auto branches = decompose_branches(L);
      const bool verdict = is_irreducible(L);
      if (!report.agrees || verdict != (report.oracle_count == 1) ||
          verdict != (report.closed_form_count == 1) ||
          branches.oracle_total() != report.oracle_count ||
          branches.closed_form_total() != report.closed_form_count) {
        o.count_failure = "a=" + L.to_string() + ": closed form " +
                          std::to_string(report.closed_form_count) + ", oracle " +
                          std::to_string(report.oracle_count) + ", branches " +
                          std::to_string(branches.oracle_total()) + ", irreducible " +
                          (verdict ? "yes" : "no");
      }
      return o;
    });
    for (const auto& o : outcomes) {
      hypothesis_points += o.hypothesis ? 1 : 0;
      rank_failures.push_back(o.rank_failure);
      count_failures.push_back(o.count_failure);
    }
  }
  const std::string grid = "on 7^n grid points, n<=" + std::to_string(max_n);
  checks.push_back(finish("rank-one lemma " + grid,
                          std::to_string(hypothesis_points) + " points satisfy the hypotheses",
                          rank_failures));
  checks.push_back(finish("oracle=closed-form " + grid, std::to_string(grid_points) + " points",
                          count_failures));
  return checks;
}

}  // namespace

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  if (!cfg.a_text.empty()) throw UsageError("verify does not take -a");
  std::vector<Check> checks;
  const auto mode = cfg.mode;
  if (!mode || *mode == FieldMode::symbolic) {
    checks.push_back(symbolic_minor_check(cfg));
    checks.push_back(symbolic_cross_path_check(cfg));
  }
  if (!mode || *mode == FieldMode::rational) {
    for (auto& c : numeric_checks<Rational>(cfg)) checks.push_back(std::move(c));
  }
  if (mode && *mode == FieldMode::gaussian) {
    for (auto& c : numeric_checks<GaussianRational>(cfg)) checks.push_back(std::move(c));
  }

  bool all = true;
  for (const auto& c : checks) all = all && c.pass;

  switch (cfg.format) {
    case OutputFormat::json: {
      nlohmann::json j = {{"schema", kReportSchema},
                          {"seed", cfg.seed},
                          {"checks", nlohmann::json::array()},
                          {"pass", all}};
      for (const auto& c : checks) {
        j["checks"].push_back({{"name", c.name},
                               {"pass", c.pass},
                               {"detail", c.detail},
                               {"counterexample", c.counterexample}});
      }
      out << j.dump(2) << "\n";
      break;
    }
    case OutputFormat::csv:
      out << "check,pass,detail,counterexample\n";
      for (const auto& c : checks) {
        out << csv_field(c.name) << ',' << (c.pass ? "true" : "false") << ','
            << csv_field(c.detail) << ',' << csv_field(c.counterexample) << '\n';
      }
      break;
    case OutputFormat::pretty:
      for (const auto& c : checks) {
        out << c.name << ": " << (c.pass ? "PASS" : "FAIL") << " (" << c.detail << ")\n";
        if (!c.pass) out << "  counterexample: " << c.counterexample << "\n";
      }
      break;
  }
  return all ? kExitOk : kExitViolation;
}

}  // namespace pervarr::cli
