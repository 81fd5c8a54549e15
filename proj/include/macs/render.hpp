#pragma once

// SVG pictures of grid lines (words) and lattice walks. Output only.

#include "macs/walk.hpp"
#include "macs/word.hpp"

#include <sstream>
#include <string>

namespace macs {

namespace detail {

inline constexpr int kCell = 40;
inline constexpr int kMargin = 20;

inline void svg_open(std::ostringstream& out, int width_cells, int height_cells) {
    const int w = 2 * kMargin + width_cells * kCell;
    const int h = 2 * kMargin + height_cells * kCell;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
        << "\" viewBox=\"0 0 " << w << ' ' << h << "\">\n"
        << "<style>"
        << ".grid{stroke:#bbb;stroke-width:1}"
        << ".element{fill:#f4d35e}"
        << ".move{stroke:#222;stroke-width:3}"
        << ".step{stroke:#222;stroke-width:3}"
        << ".diagonal{stroke:#d62828;stroke-width:4}"
        << ".pair{stroke:#d62828;stroke-width:2;stroke-dasharray:6 4}"
        << ".node{fill:#1d4e89}"
        << ".augment{fill:none;stroke:#2a9d8f;stroke-width:3}"
        << "</style>\n";
}

inline void svg_line(std::ostringstream& out, const char* cls, int x1, int y1, int x2, int y2) {
    out << "<line class=\"" << cls << "\" x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\"" << y2
        << "\"/>\n";
}

} // namespace detail

/// Grid line of a word over the m1 x m2 cell matrix (rows downward). As a
/// strict-chain line it runs NW -> SE, as an antichain line NE -> SW; the
/// crossed cells are filled and the d-moves drawn as class "diagonal".
inline std::string render_word_svg(const Word& w, GridShape shape, LineKind kind) {
    detail::require_decodable(w, shape);
    using detail::kCell;
    using detail::kMargin;
    std::ostringstream out;
    detail::svg_open(out, shape.m2, shape.m1);
    auto px = [](int col) { return kMargin + col * kCell; };
    auto py = [](int row) { return kMargin + row * kCell; };

    int r = 0;
    int c = kind == LineKind::StrictChain ? 0 : shape.m2;
    const int dc = kind == LineKind::StrictChain ? 1 : -1;
    for (char letter : w.str()) {
        if (letter == 'd') {
            const int col = kind == LineKind::StrictChain ? c + 1 : c;
            out << "<rect class=\"element\" x=\"" << px(col - 1) << "\" y=\"" << py(r) << "\" width=\"" << kCell
                << "\" height=\"" << kCell << "\"/>\n";
        }
        if (letter != 'h') {
            ++r;
        }
        if (letter != 'v') {
            c += dc;
        }
    }
    for (int i = 0; i <= shape.m1; ++i) {
        detail::svg_line(out, "grid", px(0), py(i), px(shape.m2), py(i));
    }
    for (int j = 0; j <= shape.m2; ++j) {
        detail::svg_line(out, "grid", px(j), py(0), px(j), py(shape.m1));
    }
    r = 0;
    c = kind == LineKind::StrictChain ? 0 : shape.m2;
    for (char letter : w.str()) {
        const int r2 = letter == 'h' ? r : r + 1;
        const int c2 = letter == 'v' ? c : c + dc;
        detail::svg_line(out, letter == 'd' ? "diagonal" : "move", px(c), py(r), px(c2), py(r2));
        r = r2;
        c = c2;
    }
    out << "</svg>\n";
    return out.str();
}

/// Walk on the (m1 + 1) x (m2 + 1) node grid, first coordinate to the right
/// and second upward. Each H'V' pair gets a dashed chord (class "diagonal")
/// and a dot on its endpoint; disjoint V'H' endpoints are circled.
inline std::string render_walk_svg(const Walk& w) {
    using detail::kCell;
    using detail::kMargin;
    const GridShape shape = w.shape();
    std::ostringstream out;
    detail::svg_open(out, shape.m1, shape.m2);
    auto px = [](int x) { return kMargin + x * kCell; };
    auto py = [&](int y) { return kMargin + (shape.m2 - y) * kCell; };

    for (int x = 0; x <= shape.m1; ++x) {
        detail::svg_line(out, "grid", px(x), py(0), px(x), py(shape.m2));
    }
    for (int y = 0; y <= shape.m2; ++y) {
        detail::svg_line(out, "grid", px(0), py(y), px(shape.m1), py(y));
    }
    for (std::size_t i = 0; i < w.size(); ++i) {
        const Point a = w.node(i);
        const Point b = w.node(i + 1);
        detail::svg_line(out, "step", px(a.x), py(a.y), px(b.x), py(b.y));
    }
    for (std::size_t i : hv_pairs(w)) {
        const Point a = w.node(i);
        const Point b = w.node(i + 2);
        out << "<line class=\"pair diagonal\" x1=\"" << px(a.x) << "\" y1=\"" << py(a.y) << "\" x2=\"" << px(b.x)
            << "\" y2=\"" << py(b.y) << "\"/>\n";
        out << "<circle class=\"node\" cx=\"" << px(b.x) << "\" cy=\"" << py(b.y) << "\" r=\"6\"/>\n";
    }
    for (const Point& p : walk_augmenting_points(w)) {
        out << "<circle class=\"augment\" cx=\"" << px(p.x) << "\" cy=\"" << py(p.y) << "\" r=\"9\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

} // namespace macs
