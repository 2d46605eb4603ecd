// bridgecensus: exact 2-bridge knot calculus, epimorphism census, and the
// counting tables around it. Outputs are deterministic: fixed sort orders,
// no timestamps.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "bridgecensus/counting.hpp"

using namespace bridgecensus;
using nlohmann::ordered_json;

namespace {

constexpr const char* kSchemaVersion = "1";
constexpr std::int64_t kJsonSafeBits = 53;

enum class Format { Text, Json, Csv };

// Integers beyond the 53-bit safe range are serialized as decimal strings.
ordered_json json_integer(const Integer& v) {
  if (mpz_sizeinbase(v.get_mpz_t(), 2) < static_cast<std::size_t>(kJsonSafeBits) && v.fits_slong_p())
    return ordered_json(v.get_si());
  return ordered_json(v.get_str());
}

std::string joined(const std::vector<std::int64_t>& values, char sep) {
  std::ostringstream out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out << sep;
    out << values[i];
  }
  return out.str();
}

std::string eps_string(const OrsExpansion& e) {
  std::string s;
  for (int sign : e.eps) s += (sign > 0 ? '+' : '-');
  return s;
}

// Standard continued fractions are unique up to reversal; display the
// lexicographically smaller orientation.
ContinuedFraction display_cf(const TwoBridgeKnot& k) {
  ContinuedFraction fwd = k.std_cf();
  ContinuedFraction rev = fwd.reversed();
  return rev.entries() < fwd.entries() ? rev : fwd;
}

ordered_json knot_json(const TwoBridgeKnot& k) {
  return ordered_json{{"fraction", k.fraction().str()}, {"crossing", k.crossing_number()}};
}

ordered_json witness_json(const OrsExpansion& e) {
  return ordered_json{{"base", e.base.entries()}, {"n", e.n}, {"eps", eps_string(e)}, {"c", e.c}};
}

// Conventional names for the small knots, keyed by canonical fraction.
std::string knot_name(const TwoBridgeKnot& k) {
  static const std::pair<const char*, const char*> names[] = {
      {"1/3", "3_1"},  {"2/5", "4_1"},  {"1/5", "5_1"},   {"2/7", "5_2"},   {"2/9", "6_1"},
      {"3/11", "6_2"}, {"5/13", "6_3"}, {"1/9", "9_1"},   {"5/27", "9_6"},  {"19/45", "9_23"},
  };
  const std::string fraction = k.fraction().str();
  for (const auto& [frac, name] : names)
    if (fraction == frac) return name;
  return "";
}

// Either "q/p" or "[a1,a2,...]"; continued fractions are evaluated first.
TwoBridgeKnot parse_knot(const std::string& text) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (i < text.size() && text[i] == '[') return canonicalize(cf_eval(ContinuedFraction::parse(text)));
  return canonicalize(Fraction::parse(text));
}

struct Output {
  Format format = Format::Text;
  std::string path;  // empty: stdout

  void emit(const std::string& body) const {
    if (path.empty()) {
      std::cout << body;
      return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) fail(ErrorKind::MalformedInput, "cannot open output file: " + path);
    file << body;
  }
};

std::string render_record_json(const std::string& command, const ordered_json& payload) {
  ordered_json record{{"schema_version", kSchemaVersion}, {"command", command}, {"payload", payload}};
  return record.dump() + "\n";
}

bool record_less(const CensusRecord& a, const CensusRecord& b) {
  if (a.source.crossing_number() != b.source.crossing_number())
    return a.source.crossing_number() < b.source.crossing_number();
  if (a.source != b.source) return a.source < b.source;
  if (a.target.crossing_number() != b.target.crossing_number())
    return a.target.crossing_number() < b.target.crossing_number();
  if (a.target != b.target) return a.target < b.target;
  if (a.witness.n != b.witness.n) return a.witness.n < b.witness.n;
  if (a.witness.c != b.witness.c) return a.witness.c < b.witness.c;
  return a.witness.eps < b.witness.eps;
}

const char* kCensusCsvHeader =
    "source_p,source_q,source_crossing,target_p,target_q,target_crossing,n,eps,c\n";

std::string census_csv_row(const CensusRecord& r) {
  std::ostringstream out;
  out << r.source.fraction().den() << ',' << r.source.fraction().num() << ',' << r.source.crossing_number() << ','
      << r.target.fraction().den() << ',' << r.target.fraction().num() << ',' << r.target.crossing_number() << ','
      << r.witness.n << ',' << eps_string(r.witness) << ',' << joined(r.witness.c, ';') << '\n';
  return out.str();
}

ordered_json census_record_json(const CensusRecord& r) {
  return ordered_json{{"source", knot_json(r.source)}, {"target", knot_json(r.target)}, {"witness", witness_json(r.witness)}};
}

std::string render_census(const std::vector<CensusRecord>& records, const std::string& command, Format format) {
  std::ostringstream out;
  switch (format) {
    case Format::Csv:
      out << kCensusCsvHeader;
      for (const auto& r : records) out << census_csv_row(r);
      break;
    case Format::Json:
      // census streams are JSON Lines: one record object per line
      for (const auto& r : records) {
        ordered_json line{{"schema_version", kSchemaVersion}, {"command", command}, {"payload", census_record_json(r)}};
        out << line.dump() << '\n';
      }
      break;
    case Format::Text: {
      std::size_t distinct = 0;
      const TwoBridgeKnot* last = nullptr;
      for (const auto& r : records) {
        if (!last || !(*last == r.source)) ++distinct;
        last = &r.source;
        out << r.source.str() << " (" << r.source.crossing_number() << " crossings) -> " << r.target.str() << " ("
            << r.target.crossing_number() << " crossings)  witness: n=" << r.witness.n << " eps=" << eps_string(r.witness)
            << " c=(" << joined(r.witness.c, ';') << ")\n";
      }
      out << records.size() << " witness(es), " << distinct << " distinct source knot(s)\n";
      break;
    }
  }
  return out.str();
}

ExpansionBudget make_budget(std::uint64_t limit) { return ExpansionBudget{limit, 0}; }

int cmd_normalize(const std::string& input, const Output& output) {
  TwoBridgeKnot k = parse_knot(input);
  EvenStandardCf escf = even_standard_cf(k);
  ContinuedFraction shown = display_cf(k);
  const std::string name = knot_name(k);

  switch (output.format) {
    case Format::Json: {
      ordered_json payload{{"input", input},
                           {"fraction", k.fraction().str()},
                           {"standard_cf", shown.entries()},
                           {"crossing", k.crossing_number()},
                           {"even_standard_cf", escf.entries()},
                           {"escf_length", escf.length()}};
      if (!name.empty()) payload["name"] = name;
      output.emit(render_record_json("normalize", payload));
      break;
    }
    case Format::Csv: {
      std::ostringstream out;
      out << "input,fraction,standard_cf,crossing,even_standard_cf,escf_length\n";
      out << input << ',' << k.fraction().str() << ',' << joined(shown.entries(), ';') << ',' << k.crossing_number()
          << ',' << joined(escf.entries(), ';') << ',' << escf.length() << '\n';
      output.emit(out.str());
      break;
    }
    case Format::Text: {
      std::ostringstream out;
      out << "input:             " << input << '\n';
      out << "fraction:          " << k.fraction().str() << '\n';
      if (!name.empty()) out << "name:              " << name << '\n';
      out << "standard cf:       " << shown.str() << '\n';
      out << "crossing number:   " << k.crossing_number() << '\n';
      out << "even standard cf:  " << escf.str() << '\n';
      out << "escf length:       " << escf.length() << '\n';
      output.emit(out.str());
      break;
    }
  }
  return 0;
}

int cmd_epi(const std::string& source_text, const std::string& target_text, const Output& output,
            std::uint64_t budget_limit) {
  TwoBridgeKnot source = parse_knot(source_text);
  TwoBridgeKnot target = parse_knot(target_text);
  ExpansionBudget budget = make_budget(budget_limit);
  auto witness = admits_epimorphism(source, target, &budget);

  switch (output.format) {
    case Format::Json: {
      ordered_json payload{{"source", knot_json(source)}, {"target", knot_json(target)}, {"admits", witness.has_value()}};
      if (witness) payload["witness"] = witness_json(*witness);
      output.emit(render_record_json("epi", payload));
      break;
    }
    case Format::Csv: {
      std::ostringstream out;
      out << kCensusCsvHeader;
      if (witness) out << census_csv_row(CensusRecord{source, target, *witness});
      output.emit(out.str());
      break;
    }
    case Format::Text: {
      std::ostringstream out;
      out << "source: " << source.str() << " (" << source.crossing_number() << " crossings)\n";
      out << "target: " << target.str() << " (" << target.crossing_number() << " crossings)\n";
      if (witness) {
        out << "admits epimorphism: yes\n";
        out << "witness: base " << witness->base.str() << " n=" << witness->n << " eps=" << eps_string(*witness)
            << " c=(" << joined(witness->c, ';') << ")\n";
      } else {
        out << "admits epimorphism: no\n";
      }
      output.emit(out.str());
      break;
    }
  }
  return 0;
}

int cmd_sources(const std::string& target_text, std::int64_t max_crossing, const Output& output,
                std::uint64_t budget_limit) {
  TwoBridgeKnot target = parse_knot(target_text);
  ExpansionBudget budget = make_budget(budget_limit);
  if (count_expansions(target, max_crossing) > Integer(static_cast<unsigned long>(budget.limit)))
    fail(ErrorKind::BudgetExceeded, "enumeration would exceed the expansion budget");

  std::vector<CensusRecord> records;
  for (auto& [source, witnesses] : sources(target, max_crossing, &budget))
    for (auto& w : witnesses) records.push_back(CensusRecord{source, target, w});
  std::sort(records.begin(), records.end(), record_less);
  output.emit(render_census(records, "sources", output.format));
  return 0;
}

int cmd_targets(const std::string& source_text, const Output& output, std::uint64_t budget_limit) {
  TwoBridgeKnot source = parse_knot(source_text);
  ExpansionBudget budget = make_budget(budget_limit);
  std::vector<CensusRecord> records = targets(source, &budget);
  std::sort(records.begin(), records.end(), record_less);
  output.emit(render_census(records, "targets", output.format));
  return 0;
}

int cmd_census(std::int64_t max_crossing, const Output& output, std::uint64_t budget_limit) {
  ExpansionBudget budget = make_budget(budget_limit);
  std::vector<CensusRecord> records;
  for (std::int64_t cn = 3; cn <= max_crossing / 3; ++cn) {
    for (const TwoBridgeKnot& target : enumerate_knots(cn)) {
      if (count_expansions(target, max_crossing) + Integer(static_cast<unsigned long>(budget.used)) >
          Integer(static_cast<unsigned long>(budget.limit)))
        fail(ErrorKind::BudgetExceeded, "census would exceed the expansion budget");
      for (auto& [source, witnesses] : sources(target, max_crossing, &budget))
        for (auto& w : witnesses) records.push_back(CensusRecord{source, target, w});
    }
  }
  std::sort(records.begin(), records.end(), record_less);
  output.emit(render_census(records, "census", output.format));
  return 0;
}

int cmd_tables(const std::string& which, std::int64_t max_n, const std::string& target_text, std::int64_t max_exp,
               const Output& output, std::uint64_t budget_limit) {
  std::ostringstream text;
  ordered_json rows = ordered_json::array();
  std::ostringstream csv;

  if (which == "tk") {
    csv << "n,tk\n";
    for (std::int64_t n = 3; n <= max_n; ++n) {
      Integer value = tk(n);
      text << "TK(" << n << ") = " << value.get_str() << '\n';
      csv << n << ',' << value.get_str() << '\n';
      rows.push_back(ordered_json{{"n", n}, {"tk", json_integer(value)}});
    }
  } else if (which == "table1") {
    csv << "n_range,cumulative_tk\n";
    for (std::int64_t head = 9; head <= 30; head += 3) {
      Integer value = cumulative_tk(head);
      std::string range = std::to_string(head) + "," + std::to_string(head + 1) + "," + std::to_string(head + 2);
      text << range << " -> " << value.get_str() << '\n';
      csv << '"' << range << "\"," << value.get_str() << '\n';
      rows.push_back(ordered_json{{"n_range", range}, {"cumulative_tk", json_integer(value)}});
    }
  } else if (which == "ek") {
    csv << "n,ek\n";
    ExpansionBudget budget = make_budget(budget_limit);
    for (std::int64_t n = 3; n <= max_n; ++n) {
      std::int64_t value = ek(n, EkMethod::Exact, &budget);
      text << "EK(" << n << ") = " << value << '\n';
      csv << n << ',' << value << '\n';
      rows.push_back(ordered_json{{"n", n}, {"ek", value}});
    }
  } else if (which == "genfun") {
    TwoBridgeKnot target = parse_knot(target_text.empty() ? "1/3" : target_text);
    GenFunSeries series = genfun(target, max_exp);
    csv << "exponent,coefficient\n";
    for (std::int64_t e = 3 * target.crossing_number(); e <= max_exp; ++e) {
      Integer value = series.coefficient(e);
      text << "t^" << e << ": " << value.get_str() << '\n';
      csv << e << ',' << value.get_str() << '\n';
      rows.push_back(ordered_json{{"exponent", e}, {"coefficient", json_integer(value)}});
    }
  } else {
    fail(ErrorKind::MalformedInput, "unknown table: " + which);
  }

  switch (output.format) {
    case Format::Json:
      output.emit(render_record_json("tables", ordered_json{{"which", which}, {"rows", rows}}));
      break;
    case Format::Csv:
      output.emit(csv.str());
      break;
    case Format::Text:
      output.emit(text.str());
      break;
  }
  return 0;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::IsLink:
    case ErrorKind::Trivial:
      return 3;
    case ErrorKind::BudgetExceeded:
      return 4;
    case ErrorKind::Internal:
      return 1;
    default:
      return 2;  // parse and domain errors
  }
}

std::uint64_t default_budget() {
  if (const char* env = std::getenv("BRIDGECENSUS_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return ExpansionBudget{}.limit;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"2-bridge knot calculus and epimorphism census"};
  app.require_subcommand(1);
  app.fallthrough();  // global --format/--output/--budget may follow the subcommand

  std::string format_name = "text";
  std::string output_path;
  std::uint64_t budget_limit = default_budget();
  app.add_option("--format", format_name, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--output", output_path, "write output to this file");
  app.add_option("--budget", budget_limit, "expansion-count cap for enumerations");

  std::string normalize_input;
  auto* normalize = app.add_subcommand("normalize", "canonical fraction, standard cf, crossing number");
  normalize->add_option("input", normalize_input, "fraction q/p or continued fraction [a1,a2,...]")->required();

  std::string epi_source, epi_target;
  auto* epi = app.add_subcommand("epi", "decide an epimorphism between two knot groups");
  epi->add_option("source", epi_source)->required();
  epi->add_option("target", epi_target)->required();

  std::string sources_target;
  std::int64_t sources_max = 0;
  auto* sources_cmd = app.add_subcommand("sources", "all knots mapping onto the target, with witnesses");
  sources_cmd->add_option("target", sources_target)->required();
  sources_cmd->add_option("--max-crossing", sources_max, "largest source crossing number")->required();

  std::string targets_source;
  auto* targets_cmd = app.add_subcommand("targets", "all knots the source maps onto");
  targets_cmd->add_option("source", targets_source)->required();

  std::int64_t census_max = 0;
  auto* census_cmd = app.add_subcommand("census", "every epimorphism with source crossing <= N");
  census_cmd->add_option("--max-crossing", census_max)->required();

  std::string tables_which, tables_target;
  std::int64_t tables_max = 0, tables_max_exp = 25;
  auto* tables_cmd = app.add_subcommand("tables", "counting tables and series");
  tables_cmd->add_option("--which", tables_which)->required()->check(CLI::IsMember({"tk", "table1", "ek", "genfun"}));
  tables_cmd->add_option("--max", tables_max, "largest n (tk: default 16, ek: default 24)");
  tables_cmd->add_option("--target", tables_target, "target fraction for genfun");
  tables_cmd->add_option("--max-exp", tables_max_exp, "largest exponent for genfun");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  Output output;
  output.path = output_path;
  output.format = format_name == "json" ? Format::Json : format_name == "csv" ? Format::Csv : Format::Text;

  try {
    if (normalize->parsed()) return cmd_normalize(normalize_input, output);
    if (epi->parsed()) return cmd_epi(epi_source, epi_target, output, budget_limit);
    if (sources_cmd->parsed()) return cmd_sources(sources_target, sources_max, output, budget_limit);
    if (targets_cmd->parsed()) return cmd_targets(targets_source, output, budget_limit);
    if (census_cmd->parsed()) return cmd_census(census_max, output, budget_limit);
    if (tables_cmd->parsed()) {
      if (tables_max == 0) tables_max = tables_which == "ek" ? 24 : 16;
      return cmd_tables(tables_which, tables_max, tables_target, tables_max_exp, output, budget_limit);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
