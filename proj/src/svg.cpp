#include "hlab/svg.hpp"

#include <sstream>

#include "hlab/error.hpp"

namespace hlab {

namespace {

constexpr int kDigits = 9;

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

SvgDocument::SvgDocument(Point world_min, Point world_max, int width, std::string title)
    : min_(std::move(world_min)), max_(std::move(world_max)), margin_(20), title_(std::move(title)) {
  if (!(min_.x < max_.x) || !(min_.y < max_.y)) throw InputError("empty SVG window");
  const Scalar inner = width - 2 * margin_;
  scale_ = inner / (max_.x - min_.x);
  width_ = width;
  height_ = scale_ * (max_.y - min_.y) + 2 * margin_;
}

std::string SvgDocument::page(const Point& p) const {
  const Scalar x = margin_ + scale_ * (p.x - min_.x);
  const Scalar y = margin_ + scale_ * (max_.y - p.y);
  return to_fixed(x, kDigits) + "," + to_fixed(y, kDigits);
}

void SvgDocument::polygon(const ConvexPolygon& polygon, const std::string& style) {
  if (polygon.is_point()) {
    const std::string at = page(polygon[0]);
    const auto comma = at.find(',');
    body_.push_back("  <circle cx=\"" + at.substr(0, comma) + "\" cy=\"" + at.substr(comma + 1) +
                    "\" r=\"3\" style=\"" + style + "\"/>");
    return;
  }
  std::string pts;
  for (const Point& p : polygon.vertices()) {
    if (!pts.empty()) pts += ' ';
    pts += page(p);
  }
  const char* tag = polygon.is_segment() ? "polyline" : "polygon";
  body_.push_back(std::string("  <") + tag + " points=\"" + pts + "\" style=\"" + style + "\"/>");
}

void SvgDocument::polyline(const std::vector<Point>& points, const std::string& style) {
  std::string pts;
  for (const Point& p : points) {
    if (!pts.empty()) pts += ' ';
    pts += page(p);
  }
  body_.push_back("  <polyline points=\"" + pts + "\" style=\"" + style + "\"/>");
}

void SvgDocument::text(const Point& at, const std::string& content, const std::string& style) {
  const std::string pos = page(at);
  const auto comma = pos.find(',');
  body_.push_back("  <text x=\"" + pos.substr(0, comma) + "\" y=\"" + pos.substr(comma + 1) + "\" style=\"" + style +
                  "\">" + escape(content) + "</text>");
}

std::string SvgDocument::str() const {
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << to_fixed(width_, kDigits)
      << "\" height=\"" << to_fixed(height_, kDigits) << "\">\n"
      << "  <title>" << escape(title_) << "</title>\n"
      << "  <rect x=\"0\" y=\"0\" width=\"" << to_fixed(width_, kDigits) << "\" height=\""
      << to_fixed(height_, kDigits) << "\" style=\"fill:white\"/>\n";
  for (const std::string& line : body_) out << line << "\n";
  out << "</svg>\n";
  return out.str();
}

std::pair<Point, Point> bounding_box(const std::vector<ConvexPolygon>& polygons, const Scalar& pad) {
  if (polygons.empty()) throw InputError("nothing to draw");
  Point lo = polygons.front()[0];
  Point hi = lo;
  for (const ConvexPolygon& polygon : polygons) {
    for (const Point& p : polygon.vertices()) {
      if (p.x < lo.x) lo.x = p.x;
      if (p.y < lo.y) lo.y = p.y;
      if (p.x > hi.x) hi.x = p.x;
      if (p.y > hi.y) hi.y = p.y;
    }
  }
  return {Point{lo.x - pad, lo.y - pad}, Point{hi.x + pad, hi.y + pad}};
}

}  // namespace hlab
