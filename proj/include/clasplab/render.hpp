#pragma once

#include <algorithm>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "clasplab/clasps.hpp"

namespace clasplab {

namespace detail {

inline std::string eye_color(int eye) {
  static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
                                  "#17becf", "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22"};
  return eye < 0 ? "#000000" : palette[eye % 10];
}

inline std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", v);
  return buf;
}

}  // namespace detail

// Static SVG of the front.  With a ruling, strands are colored by eye,
// switches drawn smoothed and clasp intervals shaded.
inline std::string render_svg(const FrontDiagram& d, const std::optional<NormalRuling>& ruling = {}) {
  require_valid(d);
  const auto prof = d.strand_profile();
  const int height = std::max(2, *std::max_element(prof.begin(), prof.end()));
  const double dx = 40, dy = 24, margin = 20;
  const double width = margin * 2 + dx * static_cast<double>(d.size());
  const double total_h = margin * 2 + dy * (height - 1);
  auto X = [&](double slice) { return margin + dx * slice; };
  auto Y = [&](double pos) { return margin + dy * (height - pos); };

  std::optional<Resolution> res;
  if (ruling) res = resolve(d, *ruling);
  auto color_at = [&](std::size_t slice, int pos) {
    return res ? detail::eye_color(res->slices[slice][pos - 1].eye) : detail::eye_color(-1);
  };

  std::string body;
  if (res) {
    for (int a = 0; a < res->eye_count; ++a)
      for (int b = a + 1; b < res->eye_count; ++b)
        for (auto [from, to] : scan_pair(*res, a, b).clasp_events)
          body += "<rect class=\"clasp\" x=\"" + detail::fmt(X(from + 0.5)) + "\" y=\"0\" width=\"" +
                  detail::fmt(dx * static_cast<double>(to - from)) + "\" height=\"" +
                  detail::fmt(total_h) + "\" fill=\"#ffd70033\"/>\n";
  }
  auto line = [&](double x1, double y1, double x2, double y2, const std::string& c) {
    body += "<line x1=\"" + detail::fmt(x1) + "\" y1=\"" + detail::fmt(y1) + "\" x2=\"" +
            detail::fmt(x2) + "\" y2=\"" + detail::fmt(y2) + "\" stroke=\"" + c +
            "\" stroke-width=\"2\"/>\n";
  };
  auto path = [&](const std::string& dattr, const std::string& c) {
    body += "<path d=\"" + dattr + "\" fill=\"none\" stroke=\"" + c + "\" stroke-width=\"2\"/>\n";
  };

  for (std::size_t i = 0; i < d.size(); ++i) {
    const Event& e = d[i];
    const int p = e.position;
    const double x0 = X(static_cast<double>(i)), x1 = X(static_cast<double>(i) + 1);
    const double xm = (x0 + x1) / 2;
    const int s = prof[i];
    for (int q = 1; q <= s; ++q) {
      int after = q;
      if (e.kind == EventKind::kLeftCusp && q >= p) after = q + 2;
      if (e.kind == EventKind::kRightCusp) {
        if (q == p || q == p + 1) continue;
        if (q > p + 1) after = q - 2;
      }
      if (e.kind == EventKind::kCrossing && (q == p || q == p + 1)) continue;
      line(x0, Y(q), x1, Y(after), color_at(i, q));
    }
    const double ymid = (Y(p) + Y(p + 1)) / 2;
    switch (e.kind) {
      case EventKind::kLeftCusp:
        path("M " + detail::fmt(x1) + " " + detail::fmt(Y(p)) + " Q " + detail::fmt(xm) + " " +
                 detail::fmt(Y(p)) + " " + detail::fmt(xm) + " " + detail::fmt(ymid) + " Q " +
                 detail::fmt(xm) + " " + detail::fmt(Y(p + 1)) + " " + detail::fmt(x1) + " " +
                 detail::fmt(Y(p + 1)),
             color_at(i + 1, p));
        break;
      case EventKind::kRightCusp:
        path("M " + detail::fmt(x0) + " " + detail::fmt(Y(p)) + " Q " + detail::fmt(xm) + " " +
                 detail::fmt(Y(p)) + " " + detail::fmt(xm) + " " + detail::fmt(ymid) + " Q " +
                 detail::fmt(xm) + " " + detail::fmt(Y(p + 1)) + " " + detail::fmt(x0) + " " +
                 detail::fmt(Y(p + 1)),
             color_at(i, p));
        break;
      case EventKind::kCrossing: {
        const bool sw = ruling && ruling->contains(d.crossing_ordinal(i));
        if (sw) {
          // smoothed: each eye bounces off the crossing point
          path("M " + detail::fmt(x0) + " " + detail::fmt(Y(p)) + " L " + detail::fmt(xm) + " " +
                   detail::fmt(ymid + 3) + " L " + detail::fmt(x1) + " " + detail::fmt(Y(p)),
               color_at(i, p));
          path("M " + detail::fmt(x0) + " " + detail::fmt(Y(p + 1)) + " L " + detail::fmt(xm) +
                   " " + detail::fmt(ymid - 3) + " L " + detail::fmt(x1) + " " + detail::fmt(Y(p + 1)),
               color_at(i, p + 1));
        } else {
          line(x0, Y(p), x1, Y(p + 1), color_at(i, p));
          line(x0, Y(p + 1), x1, Y(p), color_at(i, p + 1));
        }
        break;
      }
    }
  }
  return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + detail::fmt(width) +
         "\" height=\"" + detail::fmt(total_h) + "\" viewBox=\"0 0 " + detail::fmt(width) + " " +
         detail::fmt(total_h) + "\">\n" + body + "</svg>\n";
}

// One text column per slice (eye letters, or '-' without a ruling) and one
// per event: '<' and '>' for cusps, 'X' for crossings, '=' for switches.
inline std::string render_ascii(const FrontDiagram& d, const std::optional<NormalRuling>& ruling = {}) {
  require_valid(d);
  const auto prof = d.strand_profile();
  const int height = *std::max_element(prof.begin(), prof.end());
  std::optional<Resolution> res;
  if (ruling) res = resolve(d, *ruling);
  std::vector<std::string> rows(static_cast<std::size_t>(height));
  auto slice_char = [&](std::size_t i, int q) -> char {
    if (q > prof[i]) return ' ';
    if (!res) return '-';
    const int eye = res->slices[i][q - 1].eye;
    return eye < 26 ? static_cast<char>('a' + eye) : '*';
  };
  for (std::size_t i = 0; i <= d.size(); ++i) {
    for (int q = 1; q <= height; ++q) rows[q - 1] += slice_char(i, q);
    if (i == d.size()) break;
    const Event& e = d[i];
    for (int q = 1; q <= height; ++q) {
      char c = ' ';
      const bool mine = q == e.position || q == e.position + 1;
      if (e.kind == EventKind::kLeftCusp) c = mine ? '<' : (q <= prof[i + 1] ? '-' : ' ');
      else if (e.kind == EventKind::kRightCusp) c = mine ? '>' : (q <= prof[i] ? '-' : ' ');
      else if (mine) c = ruling && ruling->contains(d.crossing_ordinal(i)) ? '=' : 'X';
      else c = q <= prof[i] ? '-' : ' ';
      rows[q - 1] += c;
    }
  }
  std::string out;
  for (int q = height; q >= 1; --q) {
    auto r = rows[q - 1];
    r.erase(r.find_last_not_of(' ') + 1);
    out += r + "\n";
  }
  return out;
}

}  // namespace clasplab
