#include "tfano/svg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace tfano {

namespace {

constexpr double kPanel = 260;  // pixels per panel side
constexpr double kPad = 20;

struct Window {
  Rational lo_x, hi_x, lo_y, hi_y;
  std::vector<Halfspace> halfspaces() const {
    return {{{1, 0}, lo_x}, {{-1, 0}, -hi_x}, {{0, 1}, lo_y}, {{0, -1}, -hi_y}};  // normal·x ≥ rhs
  }
};

Window window_around(const std::vector<RatVec>& pts, const Rational& margin) {
  Window w{-1, 1, -1, 1};
  for (const auto& p : pts) {
    w.lo_x = std::min(w.lo_x, p[0]);
    w.hi_x = std::max(w.hi_x, p[0]);
    w.lo_y = std::min(w.lo_y, p[1]);
    w.hi_y = std::max(w.hi_y, p[1]);
  }
  // square window keeps the lattice undistorted
  Rational side = std::max(w.hi_x - w.lo_x, w.hi_y - w.lo_y) + 2 * margin;
  Rational cx = (w.lo_x + w.hi_x) / 2, cy = (w.lo_y + w.hi_y) / 2;
  return {cx - side / 2, cx + side / 2, cy - side / 2, cy + side / 2};
}

std::optional<Polyhedron> clip(const Polyhedron& p, const Window& w) {
  auto in = p.inequalities();
  for (const auto& e : p.equations()) {
    in.push_back(e);
    in.push_back({scale(-1, e.normal), -e.rhs});
  }
  for (const auto& h : w.halfspaces()) in.push_back(h);
  return Polyhedron::from_constraints(2, in);
}

class Panel {
 public:
  Panel(std::ostringstream& out, double x0, double y0, Window w) : out_(out), x0_(x0), y0_(y0), w_(std::move(w)) {}

  double px(const Rational& x) const {
    return x0_ + kPad + (x - w_.lo_x).convert_to<double>() / (w_.hi_x - w_.lo_x).convert_to<double>() * (kPanel - 2 * kPad);
  }
  double py(const Rational& y) const {
    return y0_ + kPanel - kPad - (y - w_.lo_y).convert_to<double>() / (w_.hi_y - w_.lo_y).convert_to<double>() * (kPanel - 2 * kPad);
  }

  void title(const std::string& t) {
    out_ << "<text x=\"" << x0_ + kPanel / 2 << "\" y=\"" << y0_ + 14 << "\" text-anchor=\"middle\" font-size=\"12\">"
         << escape(t) << "</text>\n";
  }

  void lattice() {
    for (Integer x = ceil(w_.lo_x); x <= floor(w_.hi_x); ++x)
      for (Integer y = ceil(w_.lo_y); y <= floor(w_.hi_y); ++y)
        out_ << "<circle cx=\"" << px(Rational(x)) << "\" cy=\"" << py(Rational(y)) << "\" r=\"1\" fill=\"#bbb\"/>\n";
  }

  void polygon(const Polyhedron& p, const std::string& fill, const std::string& stroke) {
    auto c = clip(p, w_);
    if (!c) return;
    auto v = c->vertices();
    if (v.size() == 1) return;
    if (v.size() == 2) {
      out_ << "<line x1=\"" << px(v[0][0]) << "\" y1=\"" << py(v[0][1]) << "\" x2=\"" << px(v[1][0]) << "\" y2=\""
           << py(v[1][1]) << "\" stroke=\"" << stroke << "\"/>\n";
      return;
    }
    double cx = 0, cy = 0;
    for (const auto& q : v) {
      cx += q[0].convert_to<double>();
      cy += q[1].convert_to<double>();
    }
    cx /= v.size();
    cy /= v.size();
    std::sort(v.begin(), v.end(), [&](const RatVec& a, const RatVec& b) {
      return std::atan2(a[1].convert_to<double>() - cy, a[0].convert_to<double>() - cx) <
             std::atan2(b[1].convert_to<double>() - cy, b[0].convert_to<double>() - cx);
    });
    out_ << "<polygon points=\"";
    for (const auto& q : v) out_ << px(q[0]) << "," << py(q[1]) << " ";
    out_ << "\" fill=\"" << fill << "\" stroke=\"" << stroke << "\" stroke-width=\"1\"/>\n";
  }

  void point(const RatVec& v, const std::string& label) {
    out_ << "<circle class=\"vertex\" cx=\"" << px(v[0]) << "\" cy=\"" << py(v[1]) << "\" r=\"3\" fill=\"black\">"
         << "<title>" << escape(label) << "</title></circle>\n";
    out_ << "<text x=\"" << px(v[0]) + 4 << "\" y=\"" << py(v[1]) - 4 << "\" font-size=\"9\">" << escape(label)
         << "</text>\n";
  }

  void frame() {
    out_ << "<rect x=\"" << x0_ << "\" y=\"" << y0_ << "\" width=\"" << kPanel << "\" height=\"" << kPanel
         << "\" fill=\"none\" stroke=\"#888\"/>\n";
  }

  static std::string escape(const std::string& s) {
    std::string r;
    for (char c : s) {
      if (c == '<') r += "&lt;";
      else if (c == '>') r += "&gt;";
      else if (c == '&') r += "&amp;";
      else if (c == '"') r += "&quot;";
      else r += c;
    }
    return r;
  }

 private:
  std::ostringstream& out_;
  double x0_, y0_;
  Window w_;
};

std::string document(const std::string& body, std::size_t panels) {
  std::ostringstream o;
  o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
    << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kPanel * panels << "\" height=\"" << kPanel
    << "\">\n"
    << body << "</svg>\n";
  return o.str();
}

void require_rank2(std::size_t r) {
  if (r != 2) throw Error(ErrorCode::UnsupportedRank, "SVG rendering needs rank 2, got " + std::to_string(r));
}

}  // namespace

std::string render_svg(const FDivisor& s) {
  require_rank2(s.rank());
  std::vector<MarkedPoint> shown;
  for (const auto& p : s.support())
    if (!s.trivial_shift(p)) shown.push_back(p);
  std::vector<RatVec> pts;
  for (const auto& p : shown)
    for (const auto& v : s.slice(p).vertices()) pts.push_back(v);
  std::vector<Polyhedron> degree;
  for (const auto& sigma : s.tail_fan().maximal())
    if (s.flagged(sigma)) {
      degree.push_back(s.delta_sum(sigma));
      for (const auto& v : degree.back().vertices()) pts.push_back(v);
    }
  Window w = window_around(pts, 1);
  std::ostringstream body;
  double x = 0;
  for (const auto& p : shown) {
    Panel panel(body, x, 0, w);
    panel.frame();
    auto sl = s.slice(p);
    for (const auto& c : sl.cells()) {
      Cone t = Cone::from_generators(2, c.rays_rat());
      bool marked = false;
      for (const auto& sigma : s.tail_fan().maximal())
        if (sigma == t && s.flagged(sigma)) marked = true;
      panel.polygon(c, marked ? "#dde8f6" : "white", "black");
    }
    panel.lattice();
    for (const auto& v : sl.vertices()) panel.point(v, to_string(v));
    panel.title("S_" + p.label());
    x += kPanel;
  }
  Panel tail(body, x, 0, w);
  tail.frame();
  for (const auto& c : s.tail_fan().maximal()) tail.polygon(c.as_polyhedron(), "white", "#555");
  for (const auto& d : degree) tail.polygon(d, "#f6d8d8", "#a33");
  tail.lattice();
  tail.title("tail fan, deg S shaded");
  return document(body.str(), shown.size() + 1);
}

std::string render_svg(const DivisorialPolytope& psi) {
  require_rank2(psi.rank());
  Window w = window_around(psi.box().vertices(), Rational(1, 2));
  std::ostringstream body;
  Panel panel(body, 0, 0, w);
  panel.frame();
  panel.polygon(psi.box(), "#f4f4f4", "black");
  static const char* colors[] = {"#c33", "#36c", "#393", "#c93", "#939"};
  std::size_t k = 0;
  for (const auto& p : psi.support()) {
    for (const auto& c : psi.regions(p).cells()) panel.polygon(c, "none", colors[k % 5]);
    ++k;
  }
  panel.lattice();
  for (const auto& u : psi.refined().vertices()) {
    std::string label;
    for (const auto& p : psi.support()) label += (label.empty() ? "" : " ") + p.label() + ":" + to_string(psi.value(p, u));
    panel.point(u, label);
  }
  panel.title("divisorial polytope");
  return document(body.str(), 1);
}

}  // namespace tfano
