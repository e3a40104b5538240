// Copyright 2026 The layerrank Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "layerrank/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "layerrank/generators.hpp"

namespace layerrank {

namespace {

constexpr const char* kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c"};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string escape_xml(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

// Plot rectangle in pixel space plus the data window it shows.
struct Frame {
  double left, top, width, height;
  double x_max, y_max;

  double px(double x) const { return left + std::clamp(x / x_max, 0.0, 1.0) * width; }
  double py(double y) const { return top + height - std::clamp(y / y_max, 0.0, 1.0) * height; }
};

void draw_axes(std::ostringstream& svg, const Frame& f, const std::string& x_label,
               const std::string& y_label, int x_ticks, int y_ticks, bool integer_x) {
  svg << "<rect x=\"" << num(f.left) << "\" y=\"" << num(f.top) << "\" width=\"" << num(f.width)
      << "\" height=\"" << num(f.height) << "\" fill=\"none\" stroke=\"#333\"/>\n";
  for (int i = 0; i <= x_ticks; ++i) {
    const double x = f.x_max * i / x_ticks;
    char label[32];
    if (integer_x) {
      std::snprintf(label, sizeof label, "%.0f", x);
    } else {
      std::snprintf(label, sizeof label, "%.2f", x);
    }
    svg << "<line x1=\"" << num(f.px(x)) << "\" y1=\"" << num(f.top + f.height) << "\" x2=\""
        << num(f.px(x)) << "\" y2=\"" << num(f.top + f.height + 4) << "\" stroke=\"#333\"/>\n"
        << "<text x=\"" << num(f.px(x)) << "\" y=\"" << num(f.top + f.height + 16)
        << "\" font-size=\"10\" text-anchor=\"middle\">" << label << "</text>\n";
  }
  for (int i = 0; i <= y_ticks; ++i) {
    const double y = f.y_max * i / y_ticks;
    char label[32];
    std::snprintf(label, sizeof label, f.y_max > 2 ? "%.0f" : "%.1f", y);
    svg << "<line x1=\"" << num(f.left - 4) << "\" y1=\"" << num(f.py(y)) << "\" x2=\""
        << num(f.left) << "\" y2=\"" << num(f.py(y)) << "\" stroke=\"#333\"/>\n"
        << "<text x=\"" << num(f.left - 7) << "\" y=\"" << num(f.py(y) + 3)
        << "\" font-size=\"10\" text-anchor=\"end\">" << label << "</text>\n";
  }
  svg << "<text x=\"" << num(f.left + f.width / 2) << "\" y=\"" << num(f.top + f.height + 32)
      << "\" font-size=\"11\" text-anchor=\"middle\">" << escape_xml(x_label) << "</text>\n";
  svg << "<text x=\"" << num(f.left - 34) << "\" y=\"" << num(f.top + f.height / 2)
      << "\" font-size=\"11\" text-anchor=\"middle\" transform=\"rotate(-90 "
      << num(f.left - 34) << ' ' << num(f.top + f.height / 2) << ")\">" << escape_xml(y_label)
      << "</text>\n";
}

std::string open_svg(double width, double height, const std::string& title) {
  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width) << "\" height=\""
      << num(height) << "\" viewBox=\"0 0 " << num(width) << ' ' << num(height) << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<text x=\"" << num(width / 2) << "\" y=\"22\" font-size=\"14\" text-anchor=\"middle\">"
      << escape_xml(title) << "</text>\n";
  return svg.str();
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text).flush()) throw std::runtime_error(path.string() + ": write failed");
}

}  // namespace

std::string scatter_svg(const std::vector<TrialRecord>& records, CentralityKind kind,
                        const std::string& title) {
  std::map<std::size_t, std::vector<const TrialRecord*>> panels;
  double x_max = 0.3;
  for (const auto& r : records) {
    if (r.centrality != kind) continue;
    panels[r.model_index].push_back(&r);
    x_max = std::max(x_max, r.p_b);
  }
  if (panels.empty()) {
    throw DomainError("no " + std::string(to_string(kind)) + " records to plot");
  }

  const double panel_w = 300, panel_h = 220, margin_l = 60, gap = 30;
  const double width = margin_l + panels.size() * (panel_w + gap) + 10;
  const double height = 40 + panel_h + 50 + 30;
  std::ostringstream svg;
  svg << open_svg(width, height, title);

  std::size_t slot = 0;
  for (const auto& [model_index, rows] : panels) {
    const Frame f{margin_l + slot * (panel_w + gap), 50, panel_w, panel_h, x_max, 1.0};
    svg << "<g class=\"panel\" data-model=\"" << model_index << "\">\n";
    svg << "<text x=\"" << num(f.left + f.width / 2) << "\" y=\"44\" font-size=\"12\" "
        << "text-anchor=\"middle\">" << escape_xml(rows.front()->model.label()) << "</text>\n";
    draw_axes(svg, f, "p_B", "normalized error", 6, 5, false);
    for (const TrialRecord* r : rows) {
      svg << "<circle class=\"eps\" cx=\"" << num(f.px(r->p_b)) << "\" cy=\""
          << num(f.py(r->errors.epsilon_norm)) << "\" r=\"2\" fill=\"" << kPalette[0]
          << "\" fill-opacity=\"0.6\"/>\n";
      svg << "<rect class=\"epsN\" x=\"" << num(f.px(r->p_b) - 2) << "\" y=\""
          << num(f.py(r->errors.epsilon_n_norm) - 2) << "\" width=\"4\" height=\"4\" fill=\""
          << kPalette[1] << "\" fill-opacity=\"0.6\"/>\n";
    }
    svg << "</g>\n";
    ++slot;
  }

  const double ly = height - 14;
  svg << "<g class=\"legend\">\n"
      << "<circle cx=\"" << num(margin_l) << "\" cy=\"" << num(ly - 4) << "\" r=\"4\" fill=\""
      << kPalette[0] << "\"/>\n"
      << "<text x=\"" << num(margin_l + 8) << "\" y=\"" << num(ly)
      << "\" font-size=\"11\">epsilon (misordered)</text>\n"
      << "<rect x=\"" << num(margin_l + 140) << "\" y=\"" << num(ly - 8)
      << "\" width=\"8\" height=\"8\" fill=\"" << kPalette[1] << "\"/>\n"
      << "<text x=\"" << num(margin_l + 152) << "\" y=\"" << num(ly)
      << "\" font-size=\"11\">epsilon_N (moved)</text>\n"
      << "</g>\n</svg>\n";
  return svg.str();
}

void render_scatter(const std::vector<TrialRecord>& records, CentralityKind kind,
                    const std::filesystem::path& path, const std::string& title) {
  write_text(path, scatter_svg(records, kind, title));
}

std::string degree_histogram_svg(const std::vector<Graph>& graphs, const std::string& title) {
  if (graphs.empty()) throw DomainError("degree histogram needs at least one graph");
  if (graphs.size() > std::size(kPalette)) {
    throw DomainError("degree histogram overlays at most three graphs");
  }
  std::vector<DegreeHistogram> hists;
  double max_degree = 1, max_count = 1;
  for (const auto& g : graphs) {
    hists.push_back(degree_histogram(g));
    for (auto [d, c] : hists.back()) {
      max_degree = std::max(max_degree, static_cast<double>(d));
      max_count = std::max(max_count, static_cast<double>(c));
    }
  }

  const double width = 560, height = 360;
  const Frame f{70, 40, width - 100, height - 100, max_degree * 1.05, max_count * 1.1};
  std::ostringstream svg;
  svg << open_svg(width, height, title);
  draw_axes(svg, f, "degree", "frequency", 5, 5, true);
  for (std::size_t i = 0; i < hists.size(); ++i) {
    svg << "<g class=\"series\" data-graph=\"" << i << "\">\n<polyline fill=\"none\" stroke=\""
        << kPalette[i] << "\" stroke-opacity=\"0.7\" points=\"";
    bool first = true;
    for (auto [d, c] : hists[i]) {
      svg << (first ? "" : " ") << num(f.px(static_cast<double>(d))) << ','
          << num(f.py(static_cast<double>(c)));
      first = false;
    }
    svg << "\"/>\n";
    for (auto [d, c] : hists[i]) {
      svg << "<circle class=\"bin\" cx=\"" << num(f.px(static_cast<double>(d))) << "\" cy=\""
          << num(f.py(static_cast<double>(c))) << "\" r=\"3\" fill=\"" << kPalette[i]
          << "\" data-degree=\"" << d << "\" data-count=\"" << c << "\"/>\n";
    }
    svg << "<text x=\"" << num(f.left + f.width - 90) << "\" y=\"" << num(f.top + 14 + 14 * i)
        << "\" font-size=\"11\" fill=\"" << kPalette[i] << "\">graph " << (i + 1) << " (n="
        << graphs[i].node_count() << ")</text>\n</g>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

void render_degree_histogram(const std::vector<Graph>& graphs, const std::filesystem::path& path,
                             const std::string& title) {
  write_text(path, degree_histogram_svg(graphs, title));
}

}  // namespace layerrank
