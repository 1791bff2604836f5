#include "replisim/render.hpp"

#include <cstdio>

namespace replisim {

namespace {

class SvgWriter {
public:
    SvgWriter(const SimulationConfig& cfg, const RenderSpec& spec) : m_cfg(cfg), m_spec(spec) {}

    double cx(double x) const { return m_spec.margin + x * m_spec.scale; }
    double cy(double y) const { return m_spec.margin + (m_cfg.container_height - y) * m_spec.scale; }

    void printf(const char* fmt, auto... args) {
        char buf[512];
        std::snprintf(buf, sizeof buf, fmt, args...);
        m_out += buf;
    }

    void line(Vec2 a, Vec2 b) {
        printf("<line x1=\"%.4f\" y1=\"%.4f\" x2=\"%.4f\" y2=\"%.4f\" stroke=\"#000000\" "
               "stroke-width=\"1\"/>\n",
               cx(a.x), cy(a.y), cx(b.x), cy(b.y));
    }

    void circle(Vec2 c, double r, const std::string& color) {
        printf("<circle cx=\"%.4f\" cy=\"%.4f\" r=\"%.4f\" fill=\"%s\" fill-opacity=\"0.5\"/>\n",
               cx(c.x), cy(c.y), r * m_spec.scale, color.c_str());
    }

    // Half disc on the side of `toward` (a unit world direction).
    void half_disc(Vec2 m, double r, Vec2 toward, const std::string& color) {
        const Vec2 p = toward.perp();
        const Vec2 p1 = m + r * p, q = m + r * toward, p2 = m - r * p;
        // Canvas-space orientation decides the arc sweep.
        const double ax = cx(p1.x) - cx(m.x), ay = cy(p1.y) - cy(m.y);
        const double bx = cx(q.x) - cx(m.x), by = cy(q.y) - cy(m.y);
        const int sweep = ax * by - ay * bx > 0 ? 1 : 0;
        const double rc = r * m_spec.scale;
        printf("<path d=\"M %.4f %.4f A %.4f %.4f 0 0 %d %.4f %.4f A %.4f %.4f 0 0 %d %.4f %.4f Z\" "
               "fill=\"%s\" fill-opacity=\"0.5\"/>\n",
               cx(p1.x), cy(p1.y), rc, rc, sweep, cx(q.x), cy(q.y), rc, rc, sweep, cx(p2.x), cy(p2.y),
               color.c_str());
    }

    std::string& out() { return m_out; }

private:
    const SimulationConfig& m_cfg;
    const RenderSpec& m_spec;
    std::string m_out;
};

const std::string& color_for(const RenderPalette& pal, FieldColor c) {
    switch (c) {
        case FieldColor::Red: return pal.red;
        case FieldColor::Blue: return pal.blue;
        case FieldColor::Green: return pal.green;
        case FieldColor::Purple: return pal.purple;
        case FieldColor::Yellow: return pal.yellow;
    }
    return pal.red;
}

}  // namespace

std::string render_svg(const SimulationState& state, const SimulationConfig& cfg,
                       const RenderSpec& spec) {
    SvgWriter w(cfg, spec);
    const Geometry& g = cfg.geometry;
    const double width = cfg.container_width * spec.scale + 2 * spec.margin;
    const double height = cfg.container_height * spec.scale + 2 * spec.margin;
    w.out() += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    w.printf("<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"%.0f\" height=\"%.0f\" "
             "viewBox=\"0 0 %.4f %.4f\">\n",
             width, height, width, height);
    w.printf("<rect x=\"%.4f\" y=\"%.4f\" width=\"%.4f\" height=\"%.4f\" fill=\"none\" stroke=\"%s\" "
             "stroke-width=\"2\"/>\n",
             spec.margin, spec.margin, cfg.container_width * spec.scale,
             cfg.container_height * spec.scale, spec.palette.container.c_str());

    const auto& codons = state.codons;
    for (CodonId i = 0; i < codons.size(); ++i) {
        const Codon& c = codons[i];
        w.printf("<g id=\"codon-%u\">\n", static_cast<unsigned>(i));
        for (FieldSlot s : {FieldSlot::Red, FieldSlot::Blue, FieldSlot::Vertical})
            w.line(c.position, tip_position(c, s, g));
        for (FieldSlot s : kAllSlots) {
            if (s == FieldSlot::Blue && c.partner(FieldSlot::Blue)) continue;  // drawn by the red owner
            if (s == FieldSlot::Red && c.partner(FieldSlot::Red)) {
                const Codon& b = codons[*c.partner(FieldSlot::Red)];
                const Vec2 ta = tip_position(c, FieldSlot::Red, g);
                const Vec2 tb = tip_position(b, FieldSlot::Blue, g);
                const Vec2 m = 0.5 * (ta + tb);
                Vec2 axis = b.position - c.position;
                axis = axis.norm() > 0.0 ? (1.0 / axis.norm()) * axis : arm_direction(c.angle, FieldSlot::Red);
                const double r = std::max(field_radius(c, FieldSlot::Red, g),
                                          field_radius(b, FieldSlot::Blue, g));
                w.half_disc(m, r, -1.0 * axis, spec.palette.red);
                w.half_disc(m, r, axis, spec.palette.blue);
                continue;
            }
            w.circle(tip_position(c, s, g), field_radius(c, s, g),
                     color_for(spec.palette, color_of(c.type, s)));
        }
        w.out() += "</g>\n";
    }
    w.out() += "</svg>\n";
    return std::move(w.out());
}

}  // namespace replisim
