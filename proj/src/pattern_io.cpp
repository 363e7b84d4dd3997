#include "ppnet/pattern_io.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>

#include "ppnet/errors.hpp"

namespace ppnet {

namespace {

std::string where(const std::filesystem::path& path, std::size_t line) {
  return path.string() + ":" + std::to_string(line);
}

// strtod that must consume the whole token
bool parse_double(const std::string& token, double& out) {
  if (token.empty()) return false;
  char* end = nullptr;
  errno = 0;
  out = std::strtod(token.c_str(), &end);
  return errno == 0 && end == token.c_str() + token.size();
}

}  // namespace

PointPattern load_pattern(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw data_error("cannot open pattern file: " + path.string());

  std::string line;
  std::size_t lineno = 0;

  if (!std::getline(in, line)) throw data_error(where(path, 1) + ": empty file, expected window line");
  ++lineno;
  std::istringstream head(line);
  std::string hash, tag;
  double x0, x1, y0, y1;
  head >> hash >> tag >> x0 >> x1 >> y0 >> y1;
  if (head.fail() || hash != "#" || tag != "window") {
    throw data_error(where(path, lineno) + ": expected '# window x_min x_max y_min y_max'");
  }
  Window window;
  try {
    window = Window(x0, x1, y0, y1);
  } catch (const std::invalid_argument& e) {
    throw data_error(where(path, lineno) + ": " + e.what());
  }

  if (!std::getline(in, line)) throw data_error(where(path, 2) + ": missing 'x,y' header");
  ++lineno;
  if (line == "x,y\r") line = "x,y";
  if (line != "x,y") throw data_error(where(path, lineno) + ": expected header 'x,y'");

  std::vector<Point> points;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto comma = line.find(',');
    double px, py;
    if (comma == std::string::npos || !parse_double(line.substr(0, comma), px) ||
        !parse_double(line.substr(comma + 1), py)) {
      throw data_error(where(path, lineno) + ": malformed row '" + line + "'");
    }
    if (!window.contains({px, py})) {
      throw data_error(where(path, lineno) + ": point (" + std::to_string(px) + ", " +
                       std::to_string(py) + ") lies outside the declared window");
    }
    points.push_back({px, py});
  }

  try {
    return PointPattern(std::move(points), window);
  } catch (const std::invalid_argument& e) {
    throw data_error(path.string() + ": " + e.what());
  }
}

void save_pattern(const PointPattern& pattern, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);  // binary keeps LF endings everywhere
  if (!out) throw data_error("cannot open pattern file for writing: " + path.string());
  const Window& w = pattern.window();
  char buf[128];
  std::snprintf(buf, sizeof buf, "# window %.17g %.17g %.17g %.17g\n", w.x_min, w.x_max, w.y_min,
                w.y_max);
  out << buf << "x,y\n";
  for (const Point& p : pattern.points()) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", p.x, p.y);
    out << buf;
  }
  if (!out) throw data_error("write failed: " + path.string());
}

}  // namespace ppnet
