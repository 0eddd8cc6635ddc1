#include <sstream>

#include "pervarr/decomp.hpp"
#include "pervarr/error.hpp"

namespace pervarr {

std::string to_string(SimpleKind kind) {
  return kind == SimpleKind::phi ? "phi-type" : "that-type";
}

namespace {

SimpleKind simple_kind_from_string(const std::string& s) {
  if (s == "phi-type") return SimpleKind::phi;
  if (s == "that-type") return SimpleKind::that;
  throw Error("unknown factor kind '" + s + "'");
}

}  // namespace

nlohmann::json to_json(const FactorReport& r) {
  nlohmann::json factors = nlohmann::json::array();
  for (const auto& f : r.factors) {
    factors.push_back({{"kind", to_string(f.kind)},
                       {"multiplicity", f.multiplicity},
                       {"description", f.description}});
  }
  return {{"schema", kReportSchema},
          {"n", r.n},
          {"k", r.k},
          {"a", r.a},
          {"product", r.product},
          {"product_is_one", r.product_is_one},
          {"irreducible", r.irreducible},
          {"closed_form", r.closed_form_count},
          {"oracle", r.oracle_count},
          {"rank_var", r.rank_var},
          {"factors", factors},
          {"agrees", r.agrees}};
}

FactorReport factor_report_from_json(const nlohmann::json& j) {
  if (j.at("schema").get<int>() != kReportSchema) {
    throw Error("unsupported report schema");
  }
  FactorReport r;
  r.n = j.at("n").get<std::size_t>();
  r.k = j.at("k").get<std::size_t>();
  r.a = j.at("a").get<std::vector<std::string>>();
  r.product = j.at("product").get<std::string>();
  r.product_is_one = j.at("product_is_one").get<bool>();
  r.irreducible = j.at("irreducible").get<bool>();
  r.closed_form_count = j.at("closed_form").get<std::size_t>();
  r.oracle_count = j.at("oracle").get<std::size_t>();
  r.rank_var = j.at("rank_var").get<std::size_t>();
  for (const auto& f : j.at("factors")) {
    r.factors.push_back({simple_kind_from_string(f.at("kind").get<std::string>()),
                         f.at("multiplicity").get<std::size_t>(),
                         f.at("description").get<std::string>()});
  }
  r.agrees = j.at("agrees").get<bool>();
  return r;
}

std::string render_pretty(const FactorReport& r) {
  std::ostringstream os;
  os << "a = (";
  for (std::size_t i = 0; i < r.a.size(); ++i) os << (i ? "," : "") << r.a[i];
  os << ")\n";
  os << "n = " << r.n << ", k = " << r.k << ", product = " << r.product << "\n";
  os << (r.irreducible ? "irreducible" : "reducible") << "; c=" << r.closed_form_count << "\n";
  os << "c=" << r.closed_form_count << " (closed form) " << (r.agrees ? "=" : "!=") << " "
     << r.oracle_count << " (oracle), rank(var)=" << r.rank_var << "\n";
  os << "factors:\n";
  for (const auto& f : r.factors) {
    os << "  " << to_string(f.kind) << " x" << f.multiplicity << ": " << f.description << "\n";
  }
  os << "agrees: " << (r.agrees ? "yes" : "no") << "\n";
  return os.str();
}

}  // namespace pervarr
