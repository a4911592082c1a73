// Command-line front end: dataset certification, genus and Chern-number
// tables, the dimension-10 proof reproduction, the bounded weight search, and
// fixture export.
//
// Exit status: 0 on success / all checks passing, 1 on a failed check or a
// non-empty search result, 2 on input errors.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "eqloc/certify.hpp"
#include "eqloc/chern.hpp"
#include "eqloc/dataset.hpp"
#include "eqloc/fixtures.hpp"
#include "eqloc/genus.hpp"
#include "eqloc/theorem.hpp"

namespace {

constexpr const char* kVersion = "eqloc 1.0.0";

struct InputOptions {
  std::string path;
  std::string fixture;
};

eqloc::ParseResult load_input(const InputOptions& in) {
  if (!in.fixture.empty()) {
    auto all = eqloc::fixtures::all();
    auto it = all.find(in.fixture);
    if (it == all.end()) throw std::invalid_argument("unknown fixture '" + in.fixture + "'");
    return {it->second, {}};
  }
  std::ifstream f(in.path);
  if (!f) throw std::invalid_argument("cannot read '" + in.path + "'");
  std::ostringstream buf;
  buf << f.rdbuf();
  return eqloc::parse_dataset(buf.str());
}

void add_input_options(CLI::App* cmd, InputOptions& in) {
  auto* path = cmd->add_option("path", in.path, "dataset file (JSON)");
  auto* fixture = cmd->add_option("--fixture", in.fixture, "built-in dataset name");
  path->excludes(fixture);
}

nlohmann::json rat_json(const eqloc::Rat& r) {
  return {{"num", eqloc::to_string(numerator(r))}, {"den", eqloc::to_string(denominator(r))}};
}

int run_verify(const InputOptions& in, const std::string& format, bool quiet) {
  auto parsed = load_input(in);
  eqloc::Certificate cert = eqloc::certify(parsed.dataset);
  cert.warnings = parsed.warnings;
  if (quiet) {
    std::cout << (cert.passed() ? "PASS" : "FAIL") << "\n";
  } else if (format == "json") {
    std::cout << eqloc::certificate_to_json(cert).dump(2) << "\n";
  } else {
    std::cout << eqloc::certificate_to_text(cert);
  }
  return cert.passed() ? 0 : 1;
}

int run_genus(const InputOptions& in, const std::string& format) {
  auto parsed = load_input(in);
  const auto& d = parsed.dataset;
  eqloc::ChiVector cv = eqloc::chi_vector(d);
  eqloc::NProfile prof = eqloc::n_profile(d);

  auto entry_string = [](const eqloc::ChiValue& v) {
    if (v.constant) return eqloc::to_string(*v.constant);
    return std::string("non-constant");
  };
  if (format == "json") {
    nlohmann::json j;
    j["label"] = d.label;
    j["n_profile"] = prof.counts;
    j["chi"] = nlohmann::json::array();
    for (const auto& v : cv.values) j["chi"].push_back(entry_string(v));
    auto opt = [](std::optional<eqloc::Int> v) {
      return v ? nlohmann::json(eqloc::to_string(*v)) : nlohmann::json(nullptr);
    };
    j["todd"] = opt(eqloc::todd_genus(cv));
    j["euler"] = opt(eqloc::euler_number(cv));
    j["signature"] = opt(eqloc::signature(cv));
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "dataset: " << (d.label.empty() ? "(unlabeled)" : d.label) << "\n";
    std::string ns, cs;
    for (size_t i = 0; i < prof.counts.size(); ++i) ns += (i ? "," : "") + std::to_string(prof.counts[i]);
    for (size_t i = 0; i < cv.values.size(); ++i) cs += (i ? "," : "") + entry_string(cv.values[i]);
    std::cout << "N = (" << ns << ")\n"
              << "chi = (" << cs << ")\n";
    auto print_opt = [](const char* name, std::optional<eqloc::Int> v) {
      std::cout << name << " = " << (v ? eqloc::to_string(*v) : "undefined") << "\n";
    };
    print_opt("Todd", eqloc::todd_genus(cv));
    print_opt("Euler", eqloc::euler_number(cv));
    print_opt("signature", eqloc::signature(cv));
  }
  return 0;
}

int run_chern(const InputOptions& in, const std::string& format) {
  auto parsed = load_input(in);
  const auto& d = parsed.dataset;
  eqloc::ChernTable table = eqloc::chern_table(d);
  if (format == "json") {
    nlohmann::json j;
    j["label"] = d.label;
    j["chern_numbers"] = nlohmann::json::array();
    for (const auto& [m, v] : table)
      j["chern_numbers"].push_back({{"monomial", m.name()}, {"value", rat_json(v)}});
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "dataset: " << (d.label.empty() ? "(unlabeled)" : d.label) << "\n";
    for (const auto& [m, v] : table) std::cout << m.name() << " = " << eqloc::to_string(v) << "\n";
  }
  return 0;
}

int run_prove(const std::string& format, bool quiet) {
  eqloc::ProofReport rep = eqloc::reproduce_theorem();
  if (quiet)
    std::cout << (rep.all_contradictory ? "PASS" : "FAIL") << "\n";
  else if (format == "json")
    std::cout << eqloc::proof_report_to_json(rep).dump(2) << "\n";
  else
    std::cout << eqloc::proof_report_to_text(rep);
  return rep.all_contradictory ? 0 : 1;
}

int run_search(int bound, const std::string& format, bool quiet) {
  eqloc::SearchReport rep = eqloc::search_weights(bound);
  if (quiet)
    std::cout << (rep.passing == 0 ? "PASS" : "FAIL") << "\n";
  else if (format == "json")
    std::cout << eqloc::search_report_to_json(rep).dump(2) << "\n";
  else
    std::cout << eqloc::search_report_to_text(rep);
  return rep.passing == 0 ? 0 : 1;
}

int run_examples(const std::string& dir) {
  std::filesystem::path out(dir);
  std::error_code ec;
  std::filesystem::create_directories(out, ec);
  for (const auto& [name, d] : eqloc::fixtures::all()) {
    std::ofstream f(out / (name + ".json"));
    if (!f) throw std::invalid_argument("cannot write to '" + dir + "'");
    f << eqloc::dataset_to_json(d).dump(2) << "\n";
  }
  std::cout << "wrote " << eqloc::fixtures::all().size() << " dataset files to " << dir << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact fixed-point invariants of circle actions on almost complex manifolds"};
  app.require_subcommand(1);

  std::string format = "text";
  bool quiet = false;
  bool no_banner = false;
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--quiet", quiet, "print only the overall verdict line");
  app.add_flag("--no-banner", no_banner, "suppress the version banner");

  InputOptions verify_in, genus_in, chern_in;
  auto* verify = app.add_subcommand("verify", "certify a dataset against all constraints");
  add_input_options(verify, verify_in);
  auto* genus = app.add_subcommand("genus", "chi_y coefficients and derived invariants");
  add_input_options(genus, genus_in);
  auto* chern = app.add_subcommand("chern", "full Chern-number table");
  add_input_options(chern, chern_in);
  app.add_subcommand("prove-dim10", "reproduce the 4-fixed-point non-existence argument");
  int bound = 1;
  auto* search = app.add_subcommand("search", "exhaustive 4-point dim-10 weight search");
  search->add_option("--bound", bound, "max |weight|")->required()->check(CLI::PositiveNumber);
  std::string dir;
  auto* examples = app.add_subcommand("examples", "write built-in datasets as files");
  examples->add_option("dir", dir, "output directory")->required();

  // Let global flags (--format, --quiet, --no-banner) appear after the
  // subcommand as well.
  for (auto* sub : app.get_subcommands(nullptr)) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  if (!no_banner) std::cerr << kVersion << "\n";
  try {
    if (verify->parsed()) return run_verify(verify_in, format, quiet);
    if (genus->parsed()) return run_genus(genus_in, format);
    if (chern->parsed()) return run_chern(chern_in, format);
    if (app.got_subcommand("prove-dim10")) return run_prove(format, quiet);
    if (search->parsed()) return run_search(bound, format, quiet);
    if (examples->parsed()) return run_examples(dir);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
