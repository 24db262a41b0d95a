#include "tessellate/io/export.hpp"

#include <cstdio>
#include <fstream>

#include "tessellate/errors.hpp"
#include "tessellate/io/json_io.hpp"

namespace tessellate::io {

void write_jsonl(const dynamics::NestedTessellation& Y,
                 const kernels::SplitKernelSpec& K, std::ostream& os) {
  json header;
  header["type"] = "header";
  header["schema"] = 1;
  header["dim"] = Y.window.ambient_dim();
  header["t"] = Y.horizon;
  header["seed"] = Y.seed;
  header["window"] = polytope_to_json(Y.window);
  header["kernel"] = kernel_to_json(K);
  header["maximal_polytopes"] = Y.maximal_polytopes.size();
  os << header.dump() << "\n";
  for (const auto& mp : Y.maximal_polytopes) {
    json rec;
    rec["birth"] = mp.birth;
    rec["cell"] = mp.owner_cell;
    json geom = json::array();
    for (const auto& v : mp.geometry.vertices()) {
      if (Y.window.ambient_dim() == 2) {
        geom.push_back({v.x, v.y});
      } else {
        geom.push_back({v.x, v.y, v.z});
      }
    }
    rec["geometry"] = geom;
    os << rec.dump() << "\n";
  }
}

namespace {

// Blue-to-red ramp over [0, 1].
std::string ramp_color(double s) {
  const int r = static_cast<int>(37 + s * (220 - 37));
  const int g = static_cast<int>(99 + s * (38 - 99));
  const int b = static_cast<int>(235 + s * (38 - 235));
  char buf[8];
  std::snprintf(buf, sizeof(buf), "#%02x%02x%02x", r, g, b);
  return buf;
}

}  // namespace

void write_svg(const dynamics::NestedTessellation& Y, std::ostream& os) {
  if (Y.window.ambient_dim() != 2) {
    throw ConfigError("SVG export is only available for 2D tessellations");
  }
  double x0 = 1e300, y0 = 1e300, x1 = -1e300, y1 = -1e300;
  for (const auto& v : Y.window.vertices()) {
    x0 = std::min(x0, v.x);
    y0 = std::min(y0, v.y);
    x1 = std::max(x1, v.x);
    y1 = std::max(y1, v.y);
  }
  const double w = x1 - x0, h = y1 - y0;
  const double stroke = std::max(w, h) / 600.0;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << x0 - stroke
     << " " << y0 - stroke << " " << w + 2 * stroke << " " << h + 2 * stroke
     << "\">\n";
  os << "<rect x=\"" << x0 << "\" y=\"" << y0 << "\" width=\"" << w
     << "\" height=\"" << h << "\" fill=\"white\" stroke=\"black\" "
     << "stroke-width=\"" << stroke << "\"/>\n";
  for (const auto& mp : Y.maximal_polytopes) {
    const auto& v = mp.geometry.vertices();
    if (v.size() < 2) continue;
    const double s = Y.horizon > 0 ? mp.birth / Y.horizon : 0.0;
    os << "<line x1=\"" << v[0].x << "\" y1=\"" << v[0].y << "\" x2=\""
       << v[1].x << "\" y2=\"" << v[1].y << "\" stroke=\"" << ramp_color(s)
       << "\" stroke-width=\"" << stroke << "\"/>\n";
  }
  os << "</svg>\n";
}

void write_jsonl_file(const dynamics::NestedTessellation& Y,
                      const kernels::SplitKernelSpec& K,
                      const std::string& path) {
  std::ofstream os(path);
  if (!os) throw ConfigError("cannot open output file: " + path);
  write_jsonl(Y, K, os);
}

void write_svg_file(const dynamics::NestedTessellation& Y,
                    const std::string& path) {
  std::ofstream os(path);
  if (!os) throw ConfigError("cannot open output file: " + path);
  write_svg(Y, os);
}

}  // namespace tessellate::io
