#include "render.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace braidwire::tools {

namespace {

constexpr int kMargin = 30;
constexpr int kDx = 40;
constexpr int kDy = 30;

const char* const kPalette[] = {"#1f77b4", "#2ca02c", "#9467bd", "#8c564b", "#17becf",
                                "#bcbd22", "#7f7f7f", "#e377c2", "#ff7f0e", "#393b79"};

int ypos(int p) { return kMargin + (p - 1) * kDy; }

class Painter {
 public:
  explicit Painter(const WiringDiagram& d) : d_(d) {
    int blue = 0;
    for (const auto& c : component_names(d)) {
      // Red curves of the families keep the paper's colour.
      colour_[c] = c.rfind("R", 0) == 0 ? "#d62728" : kPalette[blue++ % std::size(kPalette)];
    }
    perm_.resize(d.strands);
    std::iota(perm_.begin(), perm_.end(), 1);
  }

  std::string run() {
    std::vector<std::pair<const Element*, std::vector<Element>>> cols;
    std::size_t ncols = 0;
    for (const auto& e : d_.elements) {
      cols.emplace_back(&e, expand_element(e));
      ncols += cols.back().second.size();
    }
    const int width = 2 * kMargin + kDx * static_cast<int>(std::max<std::size_t>(ncols, 1));
    const int height = 2 * kMargin + kDy * (d_.strands - 1);

    for (int p = 1; p <= d_.strands; ++p)
      glyphs_ << "<text class=\"label\" x=\"2\" y=\"" << ypos(p) + 4 << "\" font-size=\"10\" fill=\"" << colour_at(p)
              << "\">" << d_.chart[p - 1] << "</text>\n";
    int x = kMargin;
    for (const auto& [top, parts] : cols) {
      const int x0 = x;
      for (const auto& e : parts) {
        column(e, x);
        x += kDx;
      }
      frame(*top, x0, x);
    }
    if (ncols == 0) {
      for (int p = 1; p <= d_.strands; ++p) seg(p, x, ypos(p), x + kDx, ypos(p));
    }

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\""
       << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
       << "<g class=\"frames\" fill=\"none\" stroke=\"#999999\" stroke-width=\"1\">\n"
       << frames_.str() << "</g>\n"
       << "<g class=\"strands\" fill=\"none\" stroke-width=\"2\">\n"
       << strands_.str() << "</g>\n"
       << "<g class=\"glyphs\">\n"
       << glyphs_.str() << "</g>\n"
       << "</svg>\n";
    return os.str();
  }

 private:
  const std::string& colour_at(int p) const { return colour_.at(d_.chart[perm_[p - 1] - 1]); }

  void seg(int p, int x1, int y1, int x2, int y2) {
    strands_ << "<line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\"" << y2
             << "\" stroke=\"" << colour_at(p) << "\"/>\n";
  }

  void column(const Element& e, int x) {
    const int xm = x + kDx / 2;
    const int xr = x + kDx;
    auto untouched = [&](int lo, int hi) {
      for (int p = 1; p <= d_.strands; ++p)
        if (p < lo || p > hi) seg(p, x, ypos(p), xr, ypos(p));
    };
    switch (e.type) {
      case ElementType::I: {
        untouched(e.a, e.b);
        // Straight lines from p to a+b-p all meet at the centre.
        for (int p = e.a; p <= e.b; ++p) seg(p, x, ypos(p), xr, ypos(e.a + e.b - p));
        const int ym = (ypos(e.a) + ypos(e.b)) / 2;
        const bool spanning = e.b - e.a > 1;
        glyphs_ << "<circle class=\"" << (spanning ? "spanning-dot" : "dot") << "\" cx=\"" << xm << "\" cy=\"" << ym
                << "\" r=\"4\" fill=\"#000000\"/>\n";
        if (spanning)
          glyphs_ << "<line class=\"span\" x1=\"" << xm << "\" y1=\"" << ypos(e.a) << "\" x2=\"" << xm << "\" y2=\""
                  << ypos(e.b) << "\" stroke=\"#000000\" stroke-dasharray=\"2,3\"/>\n";
        break;
      }
      case ElementType::T: {
        untouched(e.a, e.a + 1);
        const int ym = (ypos(e.a) + ypos(e.a + 1)) / 2;
        for (int p : {e.a, e.a + 1})
          strands_ << "<path d=\"M " << x << ' ' << ypos(p) << " Q " << xm << ' ' << ym << ' ' << xr << ' '
                   << ypos(p) << "\" stroke=\"" << colour_at(p) << "\"/>\n";
        glyphs_ << "<path class=\"cusp\" d=\"M " << xm - 4 << ' ' << ym << " L " << xm + 4 << ' ' << ym
                << "\" stroke=\"#000000\"/>\n";
        break;
      }
      case ElementType::S: {
        untouched(e.a, e.a + 1);
        // The strand moving down is drawn over for a positive letter.
        const int over = e.sign > 0 ? e.a : e.a + 1;
        const int under = e.sign > 0 ? e.a + 1 : e.a;
        const int ym = (ypos(e.a) + ypos(e.a + 1)) / 2;
        const int target_u = under == e.a ? e.a + 1 : e.a;
        const int target_o = over == e.a ? e.a + 1 : e.a;
        const int gap = kDx / 8;
        const int yu0 = ypos(under), yu1 = ypos(target_u);
        seg(under, x, yu0, xm - gap, ym + (yu0 - ym) * gap * 2 / kDx);
        seg(under, xm + gap, ym + (yu1 - ym) * gap * 2 / kDx, xr, yu1);
        seg(over, x, ypos(over), xr, ypos(target_o));
        glyphs_ << "<g class=\"crossing\" data-sign=\"" << (e.sign > 0 ? "+" : "-") << "\"/>\n";
        break;
      }
      default:
        untouched(d_.strands + 1, 0);
    }
    apply_permutation(e, perm_);
  }

  void frame(const Element& e, int x0, int x1) {
    const int top = ypos(e.low()) - kDy / 3;
    const int bottom = ypos(e.high()) + kDy / 3;
    if (e.type == ElementType::TN) {
      frames_ << "<path class=\"bracket\" d=\"M " << x0 + 6 << ' ' << top << " L " << x0 << ' ' << top << " L " << x0
              << ' ' << bottom << " L " << x0 + 6 << ' ' << bottom << " M " << x1 - 6 << ' ' << top << " L " << x1
              << ' ' << top << " L " << x1 << ' ' << bottom << " L " << x1 - 6 << ' ' << bottom << "\"/>\n";
    } else if (e.type == ElementType::X) {
      frames_ << "<rect class=\"grid\" x=\"" << x0 << "\" y=\"" << top << "\" width=\"" << x1 - x0 << "\" height=\""
              << bottom - top << "\" stroke-dasharray=\"4,2\"/>\n";
    }
  }

  const WiringDiagram& d_;
  std::map<std::string, std::string> colour_;
  std::vector<int> perm_;
  std::ostringstream frames_, strands_, glyphs_;
};

}  // namespace

std::string render_svg(const WiringDiagram& d) {
  require_valid(d);
  return Painter(d).run();
}

}  // namespace braidwire::tools
