// Static SVG pictures of planar instances.

#ifndef SPATIAL_VOTE_SVG_HPP
#define SPATIAL_VOTE_SVG_HPP

#include <algorithm>
#include <cstdio>
#include <optional>
#include <string>

#include "spatial_vote/geometry.hpp"
#include "spatial_vote/model.hpp"

namespace spatial_vote {

struct SvgAnnotations {
    std::optional<Point> core;
    std::optional<Point> witness;
    /// Drawn dashed across the space; with a witness, the piece from the
    /// anchor to the witness is highlighted.
    std::optional<ClippedLine> line;
};

namespace detail {

class SvgCanvas {
public:
    explicit SvgCanvas(const PolicySpace& space) {
        const double w = space.upper()[0] - space.lower()[0];
        const double h = space.upper()[1] - space.lower()[1];
        scale_ = (kSize - 2 * kMargin) / std::max(w, h);
        x0_ = space.lower()[0];
        y1_ = space.upper()[1];
    }

    double x(double v) const { return kMargin + (v - x0_) * scale_; }
    double y(double v) const { return kMargin + (y1_ - v) * scale_; }
    double len(double v) const { return v * scale_; }

    static std::string num(double v) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.3f", v);
        std::string s(buf);
        if (s == "-0.000") s = "0.000";
        return s;
    }

    static constexpr double kSize = 400.0;
    static constexpr double kMargin = 20.0;

private:
    double scale_ = 1.0;
    double x0_ = 0.0;
    double y1_ = 0.0;
};

}  // namespace detail

/// Deterministic SVG of a two-dimensional situation: space outline, ideal
/// points, and any annotations. Throws for k != 2.
inline std::string render_svg(const VotingSituation& situation, const SvgAnnotations& notes = {}) {
    if (situation.dimension() != 2) throw DomainError("render_svg: only k = 2 is supported");
    const PolicySpace& space = situation.space();
    const detail::SvgCanvas c(space);
    auto num = detail::SvgCanvas::num;
    auto px = [&](const Point& p) { return "cx=\"" + num(c.x(p[0])) + "\" cy=\"" + num(c.y(p[1])) + "\""; };

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"400\" height=\"400\" "
           "viewBox=\"0 0 400 400\">\n";
    out += "<rect width=\"400\" height=\"400\" fill=\"white\"/>\n";
    if (space.kind() == SpaceKind::Box) {
        out += "<rect class=\"space\" x=\"" + num(c.x(space.lower()[0])) + "\" y=\"" +
               num(c.y(space.upper()[1])) + "\" width=\"" +
               num(c.len(space.upper()[0] - space.lower()[0])) + "\" height=\"" +
               num(c.len(space.upper()[1] - space.lower()[1])) +
               "\" fill=\"none\" stroke=\"black\"/>\n";
    } else {
        out += "<circle class=\"space\" " + px(space.center()) + " r=\"" + num(c.len(space.radius())) +
               "\" fill=\"none\" stroke=\"black\"/>\n";
    }
    if (notes.line) {
        const Point a = notes.line->point(notes.line->t_min);
        const Point b = notes.line->point(notes.line->t_max);
        out += "<line class=\"line\" x1=\"" + num(c.x(a[0])) + "\" y1=\"" + num(c.y(a[1])) +
               "\" x2=\"" + num(c.x(b[0])) + "\" y2=\"" + num(c.y(b[1])) +
               "\" stroke=\"gray\" stroke-dasharray=\"4 3\"/>\n";
        if (notes.witness) {
            const Point& w = *notes.witness;
            const Point& z = notes.line->anchor;
            out += "<line class=\"segment\" x1=\"" + num(c.x(z[0])) + "\" y1=\"" + num(c.y(z[1])) +
                   "\" x2=\"" + num(c.x(w[0])) + "\" y2=\"" + num(c.y(w[1])) +
                   "\" stroke=\"orange\" stroke-width=\"2\"/>\n";
        }
    }
    for (std::size_t i = 0; i < situation.size(); ++i) {
        out += "<circle class=\"ideal\" data-voter=\"" + std::to_string(i) + "\" " +
               px(situation.voter(i).ideal()) + " r=\"4\" fill=\"steelblue\"/>\n";
    }
    if (notes.core) {
        out += "<circle class=\"core\" " + px(*notes.core) +
               " r=\"6\" fill=\"none\" stroke=\"crimson\" stroke-width=\"2\"/>\n";
    }
    if (notes.witness) {
        out += "<circle class=\"witness\" " + px(*notes.witness) + " r=\"4\" fill=\"orange\"/>\n";
    }
    out += "</svg>\n";
    return out;
}

}  // namespace spatial_vote

#endif  // SPATIAL_VOTE_SVG_HPP
