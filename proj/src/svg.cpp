// svg.cpp -- deterministic SVG rendering of the graph of a multi-map.

#include "markovmm/svg.hpp"

#include "markovmm/rational.hpp"

#include <sstream>

namespace markovmm {

namespace {

constexpr int kMargin = 40;
constexpr int kCurveSamples = 32;

struct Frame {
    Rat lo;
    Rat span;
    int size;

    std::string x(const Rat& v) const {
        Rat px = kMargin + (v - lo) / span * (size - 2 * kMargin);
        return format_decimal(px, 2);
    }

    std::string y(const Rat& v) const {
        Rat py = size - kMargin - (v - lo) / span * (size - 2 * kMargin);
        return format_decimal(py, 2);
    }
};

void emit_line(std::ostringstream& out, const Frame& fr, const Rat& x1, const Rat& y1,
               const Rat& x2, const Rat& y2, const char* color, int width) {
    out << "  <line x1=\"" << fr.x(x1) << "\" y1=\"" << fr.y(y1) << "\" x2=\"" << fr.x(x2)
        << "\" y2=\"" << fr.y(y2) << "\" stroke=\"" << color << "\" stroke-width=\"" << width
        << "\" stroke-linecap=\"round\"/>\n";
}

void emit_label(std::ostringstream& out, const Frame& fr, const Rat& x, const Rat& y,
                const std::string& text) {
    out << "  <text x=\"" << fr.x(x) << "\" y=\"" << fr.y(y) << "\" dx=\"6\" dy=\"-6\""
        << " font-family=\"monospace\" font-size=\"12\" fill=\"#24292f\">" << text
        << "</text>\n";
}

}  // namespace

std::string render_svg(const MarkovMultiMap& m, const RenderOptions& options) {
    Frame fr{m.ambient.lo, m.ambient.hi - m.ambient.lo, options.size};

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << options.size
        << "\" height=\"" << options.size << "\" viewBox=\"0 0 " << options.size << " "
        << options.size << "\">\n";
    out << "  <rect x=\"0\" y=\"0\" width=\"" << options.size << "\" height=\"" << options.size
        << "\" fill=\"#ffffff\"/>\n";

    if (options.grid) {
        for (const Rat& p : m.partition) {
            out << "  <line x1=\"" << fr.x(p) << "\" y1=\"" << fr.y(m.ambient.hi) << "\" x2=\""
                << fr.x(p) << "\" y2=\"" << fr.y(m.ambient.lo)
                << "\" stroke=\"#999999\" stroke-width=\"1\" stroke-dasharray=\"2,4\"/>\n";
            out << "  <line x1=\"" << fr.x(m.ambient.lo) << "\" y1=\"" << fr.y(p) << "\" x2=\""
                << fr.x(m.ambient.hi) << "\" y2=\"" << fr.y(p)
                << "\" stroke=\"#999999\" stroke-width=\"1\" stroke-dasharray=\"2,4\"/>\n";
        }
    }

    out << "  <rect x=\"" << kMargin << "\" y=\"" << kMargin << "\" width=\""
        << options.size - 2 * kMargin << "\" height=\"" << options.size - 2 * kMargin
        << "\" fill=\"none\" stroke=\"#24292f\" stroke-width=\"1\"/>\n";

    for (const GraphPrimitive& g : graph_primitives(m)) {
        switch (g.kind) {
            case GraphPrimitive::Kind::segment:
                emit_line(out, fr, g.a.x, g.a.y, g.b.x, g.b.y, "#1f6feb", options.stroke);
                break;
            case GraphPrimitive::Kind::curve: {
                const Symbol& s = m.at(g.symbol);
                out << "  <polyline fill=\"none\" stroke=\"#1f6feb\" stroke-width=\""
                    << options.stroke << "\" stroke-linecap=\"round\" points=\"";
                for (int i = 0; i <= kCurveSamples; ++i) {
                    Rat x = s.domain.lo + (s.domain.hi - s.domain.lo) * i / kCurveSamples;
                    Rat y = branch_eval(s, x);
                    if (i > 0) out << " ";
                    out << fr.x(x) << "," << fr.y(y);
                }
                out << "\"/>\n";
                break;
            }
            case GraphPrimitive::Kind::vertical:
                emit_line(out, fr, g.a.x, g.a.y, g.b.x, g.b.y, "#d4610f", options.stroke);
                break;
            case GraphPrimitive::Kind::point:
                out << "  <circle cx=\"" << fr.x(g.a.x) << "\" cy=\"" << fr.y(g.a.y)
                    << "\" r=\"" << options.stroke + 1 << "\" fill=\"#1a7f37\"/>\n";
                break;
        }
    }

    if (options.labels) {
        for (const Symbol& s : m.symbols) {
            Rat mx = (s.domain.lo + s.domain.hi) / 2;
            Rat my;
            if (s.cls == SymbolClass::A0) {
                my = branch_eval(s, mx);
            } else {
                my = (s.range.lo + s.range.hi) / 2;
            }
            emit_label(out, fr, mx, my, s.id);
        }
    }

    out << "</svg>\n";
    return out.str();
}

}  // namespace markovmm
