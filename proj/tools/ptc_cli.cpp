// ptc: run verification suites and export objects.
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "ptc/export.hpp"
#include "ptc/verify.hpp"

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  return s.substr(a, s.find_last_not_of(" \t\r") - a + 1);
}

// key = value lines; '#' starts a comment; values may be quoted.
void load_config(const std::string& path, ptc::verify::Options& o) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot read config " + path);
  std::string line;
  int no = 0;
  while (std::getline(f, line)) {
    ++no;
    line = trim(line.substr(0, line.find('#')));
    if (line.empty() || line.front() == '[') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw std::runtime_error(path + ":" + std::to_string(no) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    std::string val = trim(line.substr(eq + 1));
    if (val.size() >= 2 && val.front() == '"' && val.back() == '"') val = val.substr(1, val.size() - 2);
    try {
      if (key == "budget")
        o.budget = std::stoull(val);
      else if (key == "samples")
        o.samples = std::stoi(val);
      else if (key == "pairs")
        o.pairs = std::stoi(val);
      else if (key == "seed")
        o.seed = std::stoull(val);
      else if (key.rfind("max_n.", 0) == 0) {
        const std::string suite = key.substr(6);
        ptc::verify::default_max_n(suite);
        o.max_n[suite] = std::stoi(val);
      } else
        throw std::runtime_error("unknown key " + key);
    } catch (const std::logic_error& e) {
      throw std::runtime_error(path + ":" + std::to_string(no) + ": bad value for " + key);
    }
  }
}

std::string utc_now() {
  const std::time_t t = std::time(nullptr);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

std::string text_report(const std::vector<ptc::verify::Report>& rs) {
  std::ostringstream s;
  for (const auto& r : rs) {
    s << r.suite;
    if (r.inputs.contains("n")) s << " n=" << r.inputs["n"].get<int>();
    s << ": " << (r.ok() ? "ok" : "FAILED") << "\n";
    for (const auto& f : r.check.failures) s << "  " << f << "\n";
  }
  return s.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pair-of-pants cell structures: verification suites and exports"};
  app.require_subcommand(1);

  ptc::verify::Options opt;
  if (const char* b = std::getenv("PTC_BUDGET")) {
    try {
      opt.budget = std::stoull(b);
    } catch (const std::logic_error&) {
      std::cerr << "error: PTC_BUDGET is not a number\n";
      return 1;
    }
  }
  std::vector<std::string> suites;
  std::string format = "json", out = "-", config;

  auto* verify = app.add_subcommand("verify", "Run one or more suites (parallel, merged by name)");
  verify->add_option("suite", suites, "w-lattice, alcoves, incidence, pants-roundtrip, psi-collapse, "
                                      "psi-homology, stretch-map, covers, glue, or all")
      ->required();
  verify->add_option("--n", opt.n, "Size n")->capture_default_str();
  verify->add_option("--seed", opt.seed, "Seed for sampling suites")->capture_default_str();
  verify->add_option("--budget", opt.budget, "Collapse search states per complex (env PTC_BUDGET)")
      ->capture_default_str();
  verify->add_option("--samples", opt.samples, "Sample points per alcove")->capture_default_str();
  verify->add_option("--pairs", opt.pairs, "Stretch-map sample pairs")->capture_default_str();
  verify->add_option("--example", opt.example, "glue: named example (plane-curve)");
  verify->add_option("--config", config, "key = value file: budget, samples, pairs, seed, max_n.<suite>");
  verify->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
  verify->add_option("--out", out, "Output file, - for stdout")->capture_default_str();

  std::string what, eformat = "json";
  int en = 3;
  auto* exp = app.add_subcommand("export", "Write an object as json, dot, svg or off");
  exp->add_option("object", what, "w, psi, alcoves, octahedra, example-curve, glued-example")->required();
  exp->add_option("--n", en, "Size n")->capture_default_str();
  exp->add_option("--format", eformat, "json, dot, svg or off")
      ->check(CLI::IsMember({"json", "dot", "svg", "off"}))
      ->capture_default_str();
  exp->add_option("--out", out, "File, directory, or - for stdout")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*exp) {
      ptc::exporting::write_artifacts(ptc::exporting::render(what, eformat, en), out);
      return 0;
    }
    if (!config.empty()) load_config(config, opt);
    if (suites.size() == 1 && suites.front() == "all") suites = ptc::verify::suite_names();
    const auto t0 = std::chrono::steady_clock::now();
    const auto reports = ptc::verify::run_suites(suites, opt);
    const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    bool ok = true;
    nlohmann::json body = nlohmann::json::array(), timing = nlohmann::json::object();
    for (const auto& r : reports) {
      ok = ok && r.ok();
      body.push_back(r.to_json());
      timing[r.suite] = r.seconds;
    }
    std::string text;
    if (format == "json") {
      const nlohmann::json header{{"command", "verify"}, {"timestamp", utc_now()}, {"seconds", timing},
                                  {"total_seconds", total}};
      text = header.dump() + "\n" + nlohmann::json{{"ok", ok}, {"reports", body}}.dump(1) + "\n";
    } else {
      text = text_report(reports);
    }
    if (out == "-") {
      std::cout << text;
    } else {
      std::ofstream f(out, std::ios::binary);
      if (!(f << text)) throw std::runtime_error("cannot write " + out);
    }
    return ok ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
