#include "trajsc/io/svg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace trajsc::io {

namespace {

constexpr double kPanel = 400.0;

std::string color_at(double t) {
  const int r = static_cast<int>(std::lround(255.0 * t));
  const int b = 255 - r;
  std::ostringstream c;
  c << "rgb(" << r << ",0," << b << ")";
  return c.str();
}

void emit_trajectory(std::ostringstream& out, const Trajectory& t) {
  const Eigen::Index n = t.points.cols();
  out << "    <polyline fill=\"none\" stroke=\"#bbbbbb\" stroke-width=\"1\" "
         "points=\"";
  for (Eigen::Index i = 0; i < n; ++i) {
    if (i) out << ' ';
    out << t.points(0, i) << ',' << t.points(1, i);
  }
  out << "\"/>\n";
  for (Eigen::Index i = 0; i < n; ++i) {
    const double f = n > 1 ? static_cast<double>(i) / (n - 1) : 0.0;
    out << "    <circle cx=\"" << t.points(0, i) << "\" cy=\"" << t.points(1, i)
        << "\" r=\"2\" fill=\"" << color_at(f) << "\"/>\n";
  }
}

void emit_cell(std::ostringstream& out, const Trajectory& t, double x, double y,
               double cell, bool highlight, const std::string& note) {
  const double s = cell / kPanel;
  out << "  <g transform=\"translate(" << x << ',' << y << ") scale(" << s
      << ")\">\n";
  out << "    <rect x=\"0\" y=\"0\" width=\"400\" height=\"400\" fill=\"white\" "
         "stroke=\""
      << (highlight ? "#2e8b57" : "#cccccc") << "\" stroke-width=\""
      << (highlight ? 8 : 2) << "\"/>\n";
  emit_trajectory(out, t);
  if (!note.empty())
    out << "    <text x=\"8\" y=\"26\" font-size=\"22\" fill=\"#333333\">" << note
        << "</text>\n";
  out << "  </g>\n";
}

std::string document(double width, double height, const std::string& body) {
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' '
      << height << "\">\n"
      << body << "</svg>\n";
  return out.str();
}

Trajectory maybe_resample(const Trajectory& t, int n) {
  if (n >= 2) return resample_by_arc_length(normalize(t), n);
  return t;
}

}  // namespace

std::string render_trajectories_svg(const std::vector<Trajectory>& ts,
                                    const RenderOptions& opts) {
  const int cols = std::max(1, opts.columns);
  const int rows = (static_cast<int>(ts.size()) + cols - 1) / cols;
  std::ostringstream body;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const double x = static_cast<double>(i % cols) * opts.cell;
    const double y = static_cast<double>(i / cols) * opts.cell;
    emit_cell(body, maybe_resample(ts[i], opts.resample), x, y, opts.cell,
              false, ts[i].id);
  }
  return document(cols * opts.cell, std::max(1, rows) * opts.cell, body.str());
}

std::string render_clusters_svg(const std::vector<Trajectory>& ts,
                                const ClusterLabeling& labeling,
                                const std::vector<int>& highlighted,
                                const RenderOptions& opts) {
  const int cols = std::max(1, opts.columns);
  std::ostringstream body;
  double y = 0.0;
  double width = cols * opts.cell;

  for (const auto& [cluster, size] : labeling.cluster_sizes) {
    const bool highlight =
        std::find(highlighted.begin(), highlighted.end(), cluster) !=
        highlighted.end();
    body << "  <text x=\"4\" y=\"" << y + 16
         << "\" font-size=\"14\" fill=\"#222222\">cluster " << cluster
         << " (size " << size << ")" << (highlight ? " — chosen" : "")
         << "</text>\n";
    y += 22.0;
    int col = 0;
    for (const int m : labeling.members_of(cluster)) {
      if (col == cols) {
        col = 0;
        y += opts.cell;
      }
      emit_cell(body, maybe_resample(ts[m], opts.resample), col * opts.cell, y,
                opts.cell, highlight, ts[m].id);
      ++col;
    }
    y += opts.cell + 8.0;
  }
  return document(width, y, body.str());
}

}  // namespace trajsc::io
