#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "adeq/construction.hpp"
#include "adeq/document.hpp"
#include "adeq/families.hpp"
#include "adeq/search.hpp"
#include "adeq/transversal.hpp"
#include "adeq/verify.hpp"

namespace {

using namespace adeq;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<int> parse_csv(const std::string& text) {
  std::vector<int> out;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) out.push_back(std::stoi(token));
  return out;
}

std::string members_str(const ElementSubset& u) {
  std::string out;
  for (int x : u.members()) out += (out.empty() ? "" : ",") + std::to_string(x);
  return out;
}

nlohmann::json classes_json(const EquivRelation& rel) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& cls : rel.classes) out.push_back(cls);
  return out;
}

std::string classes_str(const EquivRelation& rel) {
  std::string out;
  for (const auto& cls : rel.classes) {
    out += " {";
    for (size_t i = 0; i < cls.size(); ++i)
      out += (i ? "," : "") + std::to_string(cls[i]);
    out += "}";
  }
  return out;
}

bool is_inverse(const FiniteSemigroup& s) {
  if (regular_elements(s).size() != s.order()) return false;
  for (int x = 0; x < s.order(); ++x)
    if (inverses_of(s, x).size() != 1) return false;
  return true;
}

int cmd_analyze(const std::string& file, const std::string& format) {
  const auto doc = parse_document(read_file(file));
  const auto& s = doc.sg;
  const bool regular = regular_elements(s).size() == s.order();
  const auto rs = r_star(s);
  const auto ls = l_star(s);
  if (format == "json") {
    nlohmann::json out = {{"order", s.order()},
                          {"abundant", is_abundant(s)},
                          {"adequate", is_adequate(s)},
                          {"left_adequate", is_left_adequate(s)},
                          {"right_adequate", is_right_adequate(s)},
                          {"regular", regular},
                          {"inverse", is_inverse(s)},
                          {"r_star_classes", classes_json(rs)},
                          {"l_star_classes", classes_json(ls)}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "order " << s.order() << "\n"
              << "abundant " << (is_abundant(s) ? "yes" : "no") << "\n"
              << "adequate " << (is_adequate(s) ? "yes" : "no") << "\n"
              << "left-adequate " << (is_left_adequate(s) ? "yes" : "no")
              << "\n"
              << "right-adequate " << (is_right_adequate(s) ? "yes" : "no")
              << "\n"
              << "regular " << (regular ? "yes" : "no") << "\n"
              << "inverse " << (is_inverse(s) ? "yes" : "no") << "\n"
              << "R* classes:" << classes_str(rs) << "\n"
              << "L* classes:" << classes_str(ls) << "\n";
  }
  return 0;
}

int cmd_transversals(const std::string& file, int max_gen, bool dedup,
                     const std::string& format) {
  const auto doc = parse_document(read_file(file));
  const auto found = search_transversals(doc.sg, max_gen, dedup);
  if (format == "json") {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& f : found)
      out.push_back({{"members", f.subset.members()},
                     {"quasi_ideal", f.analysis.quasi_ideal},
                     {"multiplicative", f.analysis.multiplicative},
                     {"weakly_multiplicative",
                      f.analysis.weakly_multiplicative}});
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& f : found)
      std::cout << "S0={" << members_str(f.subset) << "}"
                << " quasi-ideal=" << (f.analysis.quasi_ideal ? "yes" : "no")
                << " multiplicative="
                << (f.analysis.multiplicative ? "yes" : "no")
                << " weakly-multiplicative="
                << (f.analysis.weakly_multiplicative ? "yes" : "no") << "\n";
    std::cout << "found " << found.size() << "\n";
  }
  return 0;
}

int cmd_verify(const std::string& file, const std::string& transversal,
               const std::string& format) {
  const auto doc = parse_document(read_file(file));
  const auto s0 =
      ElementSubset::of(doc.sg.order(), parse_csv(transversal));
  const auto report = run_verification_suite(doc.sg, s0, file);
  std::cout << (format == "json" ? report_to_json(report)
                                 : report_to_text(report));
  return report.all_pass() ? 0 : 1;
}

int cmd_spined(const std::string& file, const std::string& transversal) {
  const auto doc = parse_document(read_file(file));
  const auto s0 =
      ElementSubset::of(doc.sg.order(), parse_csv(transversal));
  const auto analysis = analyze_transversal(doc.sg, s0);
  auto [sp, iso] = decompose_and_rebuild(doc.sg, analysis);

  SemigroupDocument out;
  std::vector<std::string> labels;
  const auto parts = split_quasi_ideal(analysis);
  for (const auto& [x, a] : sp.pairs)
    labels.push_back("(" + std::to_string(parts.left.to_parent[x]) + "," +
                     std::to_string(parts.right.to_parent[a]) + ")");
  out.sg = FiniteSemigroup::validate(sp.sg.rows(), labels);
  out.subsets["T0"] = sp.embedded_t0;
  out.maps["phi"] = *sp.source_iso;
  std::cout << serialize_document(out);
  return 0;
}

int cmd_chen(const std::string& file, bool degenerate,
             const std::string& band_file, const std::string& embed) {
  const auto doc = parse_document(read_file(file));
  ChenResult res;
  if (!band_file.empty()) {
    const auto band = parse_document(read_file(band_file));
    res = left_inverse_chen(doc.sg, band.sg, parse_csv(embed)).chen;
  } else if (degenerate) {
    res = chen_construct(degenerate_chen_data(doc.sg));
  } else {
    res = chen_construct(chen_data_from_document(doc));
  }
  SemigroupDocument out;
  std::vector<std::string> labels;
  for (const auto& [e, x] : res.elements)
    labels.push_back("(" + std::to_string(e) + "," + std::to_string(x) + ")");
  out.sg = FiniteSemigroup::validate(res.sg.rows(), labels);
  out.subsets["T0"] = res.t0;
  std::cout << serialize_document(out);
  return 0;
}

int cmd_corpus(const std::string& format) {
  const auto reports = run_corpus(2);
  std::cout << (format == "json" ? reports_to_json(reports)
                                 : reports_to_text(reports));
  for (const auto& rep : reports)
    if (!rep.all_pass()) return 1;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite semigroup transversal toolkit"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "report format")
      ->check(CLI::IsMember({"text", "json"}));

  std::string file, transversal, band_file, embed;
  int max_gen = 2;
  bool dedup = false, degenerate = false;

  auto* analyze = app.add_subcommand("analyze", "classify a semigroup file");
  analyze->add_option("file", file)->required();

  auto* transversals =
      app.add_subcommand("transversals", "search for adequate transversals");
  transversals->add_option("file", file)->required();
  transversals->add_option("--max-gen", max_gen, "generator-set size cap");
  transversals->add_flag("--dedup-iso", dedup,
                         "drop transversals isomorphic to earlier ones");

  auto* verify = app.add_subcommand("verify", "run the verification suite");
  verify->add_option("file", file)->required();
  verify->add_option("--transversal", transversal, "comma-separated members")
      ->required();

  auto* spined =
      app.add_subcommand("spined", "emit the rebuilt spined product");
  spined->add_option("file", file)->required();
  spined->add_option("--transversal", transversal, "comma-separated members")
      ->required();

  auto* chen = app.add_subcommand("chen", "run the one-sided construction");
  chen->add_option("file", file)->required();
  chen->add_flag("--degenerate", degenerate, "use the carrier E0 itself");
  chen->add_option("--band", band_file, "left normal band carrier file");
  chen->add_option("--embed", embed,
                   "carrier elements of the idempotents, comma-separated");

  auto* corpus = app.add_subcommand("corpus", "built-in corpus runs");
  corpus->add_subcommand("run", "verify every discovered transversal")
      ->parse_complete_callback([] {});
  corpus->require_subcommand(1);

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(analyze)) return cmd_analyze(file, format);
    if (app.got_subcommand(transversals))
      return cmd_transversals(file, max_gen, dedup, format);
    if (app.got_subcommand(verify)) return cmd_verify(file, transversal, format);
    if (app.got_subcommand(spined)) return cmd_spined(file, transversal);
    if (app.got_subcommand(chen))
      return cmd_chen(file, degenerate, band_file, embed);
    if (app.got_subcommand(corpus)) return cmd_corpus(format);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
