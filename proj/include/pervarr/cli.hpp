#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pervarr/error.hpp"
#include "pervarr/exact/field.hpp"

namespace pervarr::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

inline constexpr std::size_t kDefaultMaxGrid = 1'000'000;

enum class Command { matrix, factors, verify, sweep };
enum class OutputFormat { pretty, json, csv };

// Bad flags or inputs the commands cannot accept; maps to exit status 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct RunConfig {
  Command command = Command::factors;
  std::optional<FieldMode> mode;  // inferred from the literals when unset
  std::string a_text;             // comma-separated monodromies
  std::size_t n = 0;              // 0: taken from a_text
  std::size_t nmax = 6;
  std::string grid = "small";
  std::optional<std::string> values;  // sweep: "v,v,...", or one set per line separated by ';'
  std::uint64_t seed = 1;
  OutputFormat format = OutputFormat::pretty;
  std::string out_path;
  std::size_t max_grid = kDefaultMaxGrid;
  std::size_t jobs = 0;  // 0: one per hardware thread
};

// Largest n of a named grid: tiny 3, small 5, large 6.
std::size_t grid_max_n(const std::string& name);

// Reads PERVARR_MAX_GRID; the default cap when unset.
std::size_t max_grid_from_env();

// Splits on commas and parses each element; error positions refer to text.
std::vector<FieldElement> parse_a_vector(const std::string& text, FieldMode mode,
                                         std::size_t nvars);

// args excludes the program name. Throws UsageError or ParseError.
RunConfig parse_args(const std::vector<std::string>& args, std::ostream& out, bool& handled);

int execute(const RunConfig& cfg, std::ostream& out);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int cmd_matrix(const RunConfig& cfg, std::ostream& out);
int cmd_factors(const RunConfig& cfg, std::ostream& out);
int cmd_verify(const RunConfig& cfg, std::ostream& out);
int cmd_sweep(const RunConfig& cfg, std::ostream& out);

}  // namespace pervarr::cli
