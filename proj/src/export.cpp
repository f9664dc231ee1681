#include "ptc/export.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>

#include "json.hpp"

#include "ptc/assembly.hpp"
#include "ptc/coamoeba.hpp"
#include "ptc/cyclic.hpp"
#include "ptc/nets.hpp"
#include "ptc/phasetrop.hpp"
#include "ptc/tropical.hpp"

namespace ptc::exporting {

namespace {

std::string sanitize(std::string s) {
  std::string out;
  for (char c : s) out += (std::isalnum(static_cast<unsigned char>(c)) ? c : '_');
  while (out.find("__") != std::string::npos) out.erase(out.find("__"), 1);
  return out;
}

nlohmann::json vertices_json(const std::vector<RatVec>& vs) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& v : vs) {
    nlohmann::json p = nlohmann::json::array();
    for (const auto& x : v) p.push_back(x.get_str());
    a.push_back(p);
  }
  return a;
}

std::vector<Artifact> regions(const std::string& what, const std::string& format, int n) {
  std::vector<std::pair<std::string, coamoeba::TorusRegion>> rs;
  if (what == "alcoves") {
    for (const auto& t : nets::enumerate_nets(n))
      if (t.rank() == n) rs.emplace_back(t.str(), coamoeba::TorusRegion::alcove(t));
  } else {
    for (const auto& s : cyclic::enumerate_cyclic_partitions(n))
      if (static_cast<int>(s.k()) == n + 1) rs.emplace_back(s.str(), coamoeba::TorusRegion::octahedron(s));
  }
  std::sort(rs.begin(), rs.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Artifact> out;
  if (format == "off") {
    if (n != 3) throw ExportError("OFF export needs n = 3");
    for (std::size_t i = 0; i < rs.size(); ++i) {
      char buf[24];
      std::snprintf(buf, sizeof buf, "%03zu", i);
      out.push_back({what + "_" + buf + ".off", "# " + rs[i].first + "\n" + coamoeba::export_off(rs[i].second)});
    }
    return out;
  }
  nlohmann::json j = nlohmann::json::array();
  for (const auto& [name, r] : rs) {
    auto vs = coamoeba::region_vertices(r);
    std::sort(vs.begin(), vs.end());
    j.push_back({{"name", name}, {"vertices_pi", vertices_json(vs)}});
  }
  out.push_back({what + "_n" + std::to_string(n) + ".json", j.dump(1) + "\n"});
  return out;
}

}  // namespace

const std::vector<std::string>& export_objects() {
  static const std::vector<std::string> v{"alcoves", "example-curve", "glued-example", "octahedra", "psi", "w"};
  return v;
}

std::vector<Artifact> render(const std::string& what, const std::string& format, int n) {
  auto bad = [&] { return ExportError("cannot export " + what + " as " + format); };
  if (n < 1) throw ExportError("n must be positive");
  if (what == "w") {
    const auto w = cyclic::build_W(n);
    const std::string stem = "W_n" + std::to_string(n);
    if (format == "dot") return {{stem + ".dot", w.to_dot("W")}};
    if (format == "json") return {{stem + ".json", w.to_json() + "\n"}};
    throw bad();
  }
  if (what == "psi") {
    if (n > 3) throw ExportError("psi export is limited to n <= 3");
    std::vector<Artifact> out;
    nlohmann::json all = nlohmann::json::object();
    for (const auto& l : cyclic::enumerate_W(n)) {
      const auto psi = phasetrop::build_psi(l.sigma, l.j);
      if (format == "dot")
        out.push_back({"psi_" + sanitize(l.str()) + ".dot", psi.to_dot()});
      else if (format == "json")
        all[l.str()] = psi.to_json();
      else
        throw bad();
    }
    if (format == "json") out.push_back({"psi_n" + std::to_string(n) + ".json", all.dump(1) + "\n"});
    std::sort(out.begin(), out.end(), [](const Artifact& a, const Artifact& b) { return a.name < b.name; });
    return out;
  }
  if (what == "alcoves" || what == "octahedra") {
    if (format != "off" && format != "json") throw bad();
    if (n > 4) throw ExportError("region export is limited to n <= 4");
    return regions(what, format, n);
  }
  const auto mp = tropical::example_points();
  const auto eta = tropical::example_lifting();
  if (what == "example-curve") {
    const auto s = tropical::regular_subdivision(mp, eta);
    const auto h = tropical::tropical_hypersurface(mp, eta, s);
    if (format == "svg") return {{"example_curve.svg", tropical::to_svg(mp, s, h)}};
    if (format == "json")
      return {{"example_curve.json",
               nlohmann::json{{"subdivision", s.to_json(mp)}, {"curve", h.to_json(mp, s)}}.dump(1) + "\n"}};
    throw bad();
  }
  if (what == "glued-example") {
    const auto g = assembly::glue(mp, eta, assembly::generic_coefficients(mp.points.size(), 31));
    if (format == "json") return {{"glued_example.json", g.to_json().dump(1) + "\n"}};
    if (format == "dot") return {{"glued_example.dot", g.quotient.to_dot("Glued")}};
    throw bad();
  }
  throw ExportError("unknown export object: " + what);
}

void write_artifacts(const std::vector<Artifact>& a, const std::string& out) {
  namespace fs = std::filesystem;
  if (out == "-") {
    if (a.size() != 1) throw ExportError("stdout takes a single artifact; pass a directory with --out");
    std::cout << a.front().content;
    return;
  }
  const bool dir = (!out.empty() && out.back() == '/') || fs::is_directory(out) || a.size() != 1;
  auto put = [](const fs::path& p, const std::string& text) {
    std::ofstream f(p, std::ios::binary);
    if (!f) throw ExportError("cannot write " + p.string());
    f << text;
    if (!f) throw ExportError("write failed: " + p.string());
  };
  if (!dir) {
    put(out, a.front().content);
    return;
  }
  std::error_code ec;
  fs::create_directories(out, ec);
  if (ec) throw ExportError("cannot create " + out + ": " + ec.message());
  for (const auto& x : a) put(fs::path(out) / x.name, x.content);
}

}  // namespace ptc::exporting
