#include "cli/render.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>

#include <json.hpp>

#include "cli/descriptor.hpp"

namespace ordmap::cli {

using json = nlohmann::ordered_json;

namespace {

std::string csv_field(const std::string& value) {
  if (value.find_first_of(",\"\n") == std::string::npos) return value;
  std::string quoted = "\"";
  for (char c : value) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

std::string csv_line(const std::vector<std::string>& fields) {
  std::string line;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) line += ',';
    line += csv_field(fields[i]);
  }
  return line + "\n";
}

// Left-aligned columns, two-space gutters, dashed rule under the header,
// no trailing whitespace.
struct TextTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::string str() const {
    std::vector<std::size_t> width(header.size());
    for (std::size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    }
    auto emit = [&](const std::vector<std::string>& cells) {
      std::string line;
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i > 0) line += "  ";
        line += cells[i];
        if (i + 1 < cells.size()) line.append(width[i] - cells[i].size(), ' ');
      }
      return line + "\n";
    };
    std::vector<std::string> rule;
    rule.reserve(header.size());
    for (std::size_t w : width) rule.emplace_back(w, '-');
    std::string out = emit(header) + emit(rule);
    for (const auto& row : rows) out += emit(row);
    return out;
  }
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }
std::string true_false(bool b) { return b ? "true" : "false"; }

// "f(s^a r^b) = 3*a + 2*b mod 6" with the argument shape taken from the
// domain family.
std::string map_formula(const LinearMapSpec& spec) {
  std::string arg = spec.domain.family() == Family::Dihedral ? "s^a r^b" : "(a,b)";
  return "f(" + arg + ") = " + std::to_string(spec.coeff_a) + "*a + " +
         std::to_string(spec.coeff_b) + "*b mod " + std::to_string(spec.modulus);
}

std::string brace_pair(const CoefficientPair& p) {
  return "{" + std::to_string(p.x) + "," + std::to_string(p.y) + "}";
}

json pair_array(const std::vector<CoefficientPair>& pairs) {
  json arr = json::array();
  for (const CoefficientPair& p : pairs) arr.push_back({p.x, p.y});
  return arr;
}

}  // namespace

std::optional<OutputFormat> format_from_name(const std::string& name) {
  if (name == "table") return OutputFormat::Table;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  return std::nullopt;
}

std::string render_spectrum(const GroupSpec& g, const OrderSpectrum& spectrum, OutputFormat f) {
  std::string name = group_name(g);
  switch (f) {
    case OutputFormat::Table: {
      TextTable t{{"order", "count"}, {}};
      for (const auto& [order, count] : spectrum.entries()) {
        t.rows.push_back({std::to_string(order), std::to_string(count)});
      }
      return "group: " + name + " (order " + std::to_string(spectrum.group_order()) + ")\n" +
             t.str();
    }
    case OutputFormat::Csv: {
      std::string out = csv_line({"order", "count"});
      for (const auto& [order, count] : spectrum.entries()) {
        out += csv_line({std::to_string(order), std::to_string(count)});
      }
      return out;
    }
    case OutputFormat::Json: {
      json j;
      j["group"] = name;
      j["group_order"] = spectrum.group_order();
      j["spectrum"] = json::array();
      for (const auto& [order, count] : spectrum.entries()) {
        j["spectrum"].push_back({{"order", order}, {"count", count}});
      }
      return j.dump(2) + "\n";
    }
  }
  return {};
}

std::string render_report(const VerificationReport& report, OutputFormat f) {
  const std::string dom = group_name(report.map.domain);
  const std::string cod = group_name(report.map.codomain);
  switch (f) {
    case OutputFormat::Table: {
      std::string out = "map: " + dom + " -> " + cod + ", " + map_formula(report.map) + "\n" +
                        "mode: " + mode_name(report.mode) + "\n";
      TextTable t{{"Order of " + dom, dom, cod, "Order of " + cod}, {}};
      for (const VerificationRow& row : report.rows) {
        t.rows.push_back({std::to_string(row.domain_order),
                          element_name(report.map.domain, row.element),
                          std::to_string(row.image), std::to_string(row.image_order)});
      }
      out += t.str();
      out += "bijective: " + yes_no(report.bijective) + "\n";
      if (report.failure) {
        const FailureWitness& w = *report.failure;
        if (w.kind == FailureWitness::Kind::PredicateFailure) {
          const VerificationRow& row = report.rows[w.row];
          out += "witness: row " + std::to_string(w.row) + ": " +
                 element_name(report.map.domain, row.element) + " -> " +
                 std::to_string(row.image) + " (order " + std::to_string(row.domain_order) +
                 " vs " + std::to_string(row.image_order) + ", " + mode_name(report.mode) +
                 " fails)\n";
        } else {
          out += "witness: rows " + std::to_string(w.other_row) + " and " +
                 std::to_string(w.row) + " map to the same image " +
                 std::to_string(report.rows[w.row].image) + "\n";
        }
      }
      out += std::string("verdict: ") + (report.verdict ? "PASS" : "FAIL") + "\n";
      return out;
    }
    case OutputFormat::Csv: {
      std::string out = csv_line({"element", "domain_order", "image", "image_order", "holds"});
      for (const VerificationRow& row : report.rows) {
        out += csv_line({element_name(report.map.domain, row.element),
                         std::to_string(row.domain_order), std::to_string(row.image),
                         std::to_string(row.image_order), true_false(row.predicate_holds)});
      }
      return out;
    }
    case OutputFormat::Json: {
      json j;
      j["map"] = {{"domain", dom},
                  {"codomain", cod},
                  {"coeff_a", report.map.coeff_a},
                  {"coeff_b", report.map.coeff_b},
                  {"modulus", report.map.modulus}};
      j["mode"] = mode_name(report.mode);
      j["bijective"] = report.bijective;
      j["verdict"] = report.verdict;
      if (report.failure) {
        const FailureWitness& w = *report.failure;
        if (w.kind == FailureWitness::Kind::PredicateFailure) {
          j["failure"] = {{"kind", "predicate_failure"}, {"row", w.row}};
        } else {
          j["failure"] = {{"kind", "duplicate_image"}, {"row", w.row}, {"first_row", w.other_row}};
        }
      } else {
        j["failure"] = nullptr;
      }
      j["rows"] = json::array();
      for (const VerificationRow& row : report.rows) {
        j["rows"].push_back({{"element", element_name(report.map.domain, row.element)},
                             {"domain_order", row.domain_order},
                             {"image", row.image},
                             {"image_order", row.image_order},
                             {"holds", row.predicate_holds}});
      }
      return j.dump(2) + "\n";
    }
  }
  return {};
}

namespace {

// Total count of target elements admissible from any order in the violator.
std::uint64_t violator_target_count(const std::vector<std::uint64_t>& witness,
                                    const OrderSpectrum& dst, ComparisonMode mode) {
  std::uint64_t total = 0;
  for (const auto& [e, count] : dst.entries()) {
    for (std::uint64_t d : witness) {
      if (mode_holds(mode, d, e)) {
        total += count;
        break;
      }
    }
  }
  return total;
}

std::uint64_t violator_source_count(const std::vector<std::uint64_t>& witness,
                                    const OrderSpectrum& src) {
  std::uint64_t total = 0;
  for (std::uint64_t d : witness) total += src.count(d);
  return total;
}

std::string order_set(const std::vector<std::uint64_t>& orders) {
  std::string out = "{";
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(orders[i]);
  }
  return out + "}";
}

}  // namespace

std::string render_existence(const GroupSpec& src, const GroupSpec& dst,
                             const OrderSpectrum& src_spectrum, const OrderSpectrum& dst_spectrum,
                             const ExistenceCertificate& cert,
                             const std::optional<PairingTable>& realization, OutputFormat f) {
  const std::string src_name = group_name(src);
  const std::string dst_name = group_name(dst);
  switch (f) {
    case OutputFormat::Table: {
      std::string out = "src: " + src_name + " (order " + std::to_string(cert.group_order) +
                        ")\n" + "dst: " + dst_name + " (order " +
                        std::to_string(cert.group_order) + ")\n" +
                        "mode: " + mode_name(cert.mode) + "\n" +
                        "feasible: " + yes_no(cert.feasible) + "\n";
      if (cert.feasible) {
        TextTable t{{"src_order", "dst_order", "count"}, {}};
        for (const auto& [pair, count] : cert.assignment) {
          t.rows.push_back({std::to_string(pair.first), std::to_string(pair.second),
                            std::to_string(count)});
        }
        out += t.str();
      } else {
        out += "hall violator: orders " + order_set(cert.witness) + " with " +
               std::to_string(violator_source_count(cert.witness, src_spectrum)) +
               " elements but only " +
               std::to_string(violator_target_count(cert.witness, dst_spectrum, cert.mode)) +
               " admissible targets\n";
      }
      if (realization) {
        TextTable t{{src_name, "order", dst_name, "order", "ok"}, {}};
        for (const PairingRow& row : realization->rows) {
          t.rows.push_back({element_name(src, row.source), std::to_string(row.source_order),
                            element_name(dst, row.target), std::to_string(row.target_order),
                            yes_no(row.predicate_holds)});
        }
        out += "realization:\n" + t.str();
      }
      return out;
    }
    case OutputFormat::Csv: {
      if (!cert.feasible) {
        std::string out = csv_line({"witness_order", "count"});
        for (std::uint64_t d : cert.witness) {
          out += csv_line({std::to_string(d), std::to_string(src_spectrum.count(d))});
        }
        return out;
      }
      if (realization) {
        std::string out =
            csv_line({"src_element", "src_order", "dst_element", "dst_order", "holds"});
        for (const PairingRow& row : realization->rows) {
          out += csv_line({element_name(src, row.source), std::to_string(row.source_order),
                           element_name(dst, row.target), std::to_string(row.target_order),
                           true_false(row.predicate_holds)});
        }
        return out;
      }
      std::string out = csv_line({"src_order", "dst_order", "count"});
      for (const auto& [pair, count] : cert.assignment) {
        out += csv_line(
            {std::to_string(pair.first), std::to_string(pair.second), std::to_string(count)});
      }
      return out;
    }
    case OutputFormat::Json: {
      json j;
      j["src"] = src_name;
      j["dst"] = dst_name;
      j["mode"] = mode_name(cert.mode);
      j["group_order"] = cert.group_order;
      j["feasible"] = cert.feasible;
      if (cert.feasible) {
        j["assignment"] = json::array();
        for (const auto& [pair, count] : cert.assignment) {
          j["assignment"].push_back(
              {{"src_order", pair.first}, {"dst_order", pair.second}, {"count", count}});
        }
        j["witness"] = nullptr;
      } else {
        j["assignment"] = nullptr;
        j["witness"] = {
            {"orders", cert.witness},
            {"source_count", violator_source_count(cert.witness, src_spectrum)},
            {"target_count", violator_target_count(cert.witness, dst_spectrum, cert.mode)}};
      }
      if (realization) {
        j["realization"] = json::array();
        for (const PairingRow& row : realization->rows) {
          j["realization"].push_back({{"src_element", element_name(src, row.source)},
                                      {"src_order", row.source_order},
                                      {"dst_element", element_name(dst, row.target)},
                                      {"dst_order", row.target_order},
                                      {"holds", row.predicate_holds}});
        }
      } else {
        j["realization"] = nullptr;
      }
      return j.dump(2) + "\n";
    }
  }
  return {};
}

std::string render_sweep(const std::vector<ConjectureReport>& reports, OutputFormat f) {
  std::size_t holding = 0;
  for (const ConjectureReport& r : reports) holding += r.conjecture_holds ? 1 : 0;
  switch (f) {
    case OutputFormat::Table: {
      TextTable t{{"n", "valid", "counterexamples", "self-swapped", "holds"}, {}};
      for (const ConjectureReport& r : reports) {
        t.rows.push_back({std::to_string(r.n), std::to_string(r.valid_pairs.size()),
                          std::to_string(r.counterexamples.size()),
                          std::to_string(r.self_swapped.size()), yes_no(r.conjecture_holds)});
      }
      std::string out = t.str();
      for (const ConjectureReport& r : reports) {
        if (r.counterexamples.empty()) continue;
        out += "counterexamples at n=" + std::to_string(r.n) + ":";
        for (const CoefficientPair& p : r.counterexamples) out += " " + brace_pair(p);
        out += "\n";
      }
      out += "summary: conjecture holds for " + std::to_string(holding) + " of " +
             std::to_string(reports.size()) + " values of n\n";
      return out;
    }
    case OutputFormat::Csv: {
      std::string out = csv_line(
          {"n", "valid_pairs", "counterexamples", "self_swapped", "holds", "counterexample_pairs"});
      for (const ConjectureReport& r : reports) {
        std::string pairs;
        for (const CoefficientPair& p : r.counterexamples) {
          if (!pairs.empty()) pairs += ";";
          pairs += brace_pair(p);
        }
        out += csv_line({std::to_string(r.n), std::to_string(r.valid_pairs.size()),
                         std::to_string(r.counterexamples.size()),
                         std::to_string(r.self_swapped.size()), true_false(r.conjecture_holds),
                         pairs});
      }
      return out;
    }
    case OutputFormat::Json: {
      json j;
      j["n_min"] = reports.empty() ? 0 : reports.front().n;
      j["n_max"] = reports.empty() ? 0 : reports.back().n;
      j["reports"] = json::array();
      for (const ConjectureReport& r : reports) {
        j["reports"].push_back({{"n", r.n},
                                {"degenerate", r.degenerate},
                                {"valid_pairs", pair_array(r.valid_pairs)},
                                {"counterexamples", pair_array(r.counterexamples)},
                                {"self_swapped", pair_array(r.self_swapped)},
                                {"holds", r.conjecture_holds}});
      }
      j["summary"] = {{"checked", reports.size()},
                      {"holding", holding},
                      {"all_hold", holding == reports.size()}};
      return j.dump(2) + "\n";
    }
  }
  return {};
}

}  // namespace ordmap::cli
