#ifndef PTC_EXPORT_HPP
#define PTC_EXPORT_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace ptc::exporting {

struct ExportError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One output file: a relative name and its bytes.
struct Artifact {
  std::string name;
  std::string content;
};

// Objects: "w" (json, dot), "psi" (json, dot; n <= 3), "alcoves" and
// "octahedra" (off, json; off needs n = 3), "example-curve" (svg, json),
// "glued-example" (json, dot). Output is byte-stable.
std::vector<Artifact> render(const std::string& what, const std::string& format, int n);
const std::vector<std::string>& export_objects();

// "-" writes to stdout (single artifact only). A path ending in '/' or an
// existing directory receives every artifact by name; otherwise the single
// artifact is written to that path.
void write_artifacts(const std::vector<Artifact>& a, const std::string& out);

}  // namespace ptc::exporting

#endif
