#include "arrmorse/svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>

namespace arrmorse {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.4f", v + 0.0);  // normalize -0
    return buf;
}

struct Frame {
    double minx, miny, maxx, maxy, sx, sy;
    int w, h;
    std::pair<double, double> map(double x, double y) const {
        return {(x - minx) * sx + 20.0, (maxy - y) * sy + 20.0};
    }
};

}  // namespace

std::string render_svg_2d(const Arrangement& arr, const RenderOptions& opts) {
    if (arr.dim != 2) throw NotPlanar("render_svg_2d needs a planar arrangement");
    IntersectionLattice lat(arr);
    std::vector<std::pair<double, double>> verts;
    for (int i = 0; i < lat.size(); ++i)
        if (lat.flat(i).dim == 0)
            verts.push_back({lat.flat(i).space.origin[0].to_double(),
                             lat.flat(i).space.origin[1].to_double()});

    Frame fr;
    fr.minx = fr.miny = -1.0;
    fr.maxx = fr.maxy = 1.0;
    for (auto [x, y] : verts) {
        fr.minx = std::min(fr.minx, x);
        fr.maxx = std::max(fr.maxx, x);
        fr.miny = std::min(fr.miny, y);
        fr.maxy = std::max(fr.maxy, y);
    }
    if (opts.flag) {
        const auto& v0 = (*opts.flag)[0].origin;
        fr.minx = std::min(fr.minx, v0[0].to_double());
        fr.maxx = std::max(fr.maxx, v0[0].to_double());
        fr.miny = std::min(fr.miny, v0[1].to_double());
        fr.maxy = std::max(fr.maxy, v0[1].to_double());
    }
    double padx = 0.2 * (fr.maxx - fr.minx) + 0.5, pady = 0.2 * (fr.maxy - fr.miny) + 0.5;
    fr.minx -= padx;
    fr.maxx += padx;
    fr.miny -= pady;
    fr.maxy += pady;
    fr.w = opts.width;
    fr.h = opts.height;
    fr.sx = (fr.w - 40.0) / (fr.maxx - fr.minx);
    fr.sy = (fr.h - 40.0) / (fr.maxy - fr.miny);

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(fr.w) +
           "\" height=\"" + std::to_string(fr.h) + "\">\n";
    out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    // clip each line to the frame rectangle
    auto line_path = [&](const Hyperplane& h) -> std::optional<std::array<double, 4>> {
        double a = h.normal[0].to_double(), b = h.normal[1].to_double(),
               c = h.offset.to_double();
        std::vector<std::pair<double, double>> pts;
        auto push = [&](double x, double y) {
            if (x >= fr.minx - 1e-9 && x <= fr.maxx + 1e-9 && y >= fr.miny - 1e-9 &&
                y <= fr.maxy + 1e-9)
                pts.push_back({x, y});
        };
        if (std::abs(b) > 1e-12) {
            push(fr.minx, (c - a * fr.minx) / b);
            push(fr.maxx, (c - a * fr.maxx) / b);
        }
        if (std::abs(a) > 1e-12) {
            push((c - b * fr.miny) / a, fr.miny);
            push((c - b * fr.maxy) / a, fr.maxy);
        }
        std::sort(pts.begin(), pts.end());
        pts.erase(std::unique(pts.begin(), pts.end(),
                              [](auto p, auto q) {
                                  return std::abs(p.first - q.first) < 1e-9 &&
                                         std::abs(p.second - q.second) < 1e-9;
                              }),
                  pts.end());
        if (pts.size() < 2) return std::nullopt;
        return std::array<double, 4>{pts.front().first, pts.front().second, pts.back().first,
                                     pts.back().second};
    };

    if (opts.sectors) {
        // shade each sector by sampling the frame on a fixed grid
        const auto& cand = *opts.sectors;
        static const char* fills[] = {"#fde2e2", "#e2edfd", "#e4fde2", "#fdf6e2", "#f0e2fd"};
        int r = (int)cand.a.size();
        int cells = 60;
        for (int gx = 0; gx < cells; ++gx)
            for (int gy = 0; gy < cells; ++gy) {
                double x = fr.minx + (fr.maxx - fr.minx) * (gx + 0.5) / cells;
                double y = fr.miny + (fr.maxy - fr.miny) * (gy + 0.5) / cells;
                int sector = 0;
                auto side = [&](int line, double px, double py) {
                    const auto& h = arr.hyperplanes[line];
                    double v = h.normal[0].to_double() * px + h.normal[1].to_double() * py -
                               h.offset.to_double();
                    return v > 0 ? 1 : v < 0 ? -1 : 0;
                };
                auto bside = [&](int line) {
                    const auto& h = arr.hyperplanes[line];
                    double v = 0;
                    for (int i = 0; i < 2; ++i) v += h.normal[i].to_double() * cand.base[i].to_double();
                    v -= h.offset.to_double();
                    return v > 0 ? 1 : -1;
                };
                for (int jj = 1; jj <= r && sector == 0; ++jj) {
                    int hprev = jj == 1 ? cand.h0 : cand.m[jj - 2].back();
                    int hmax = cand.m[jj - 1].back();
                    bool inplus = side(hprev, x, y) == bside(hprev) || (jj == 1 && side(hprev, x, y) == 0);
                    bool inminus = side(hmax, x, y) != bside(hmax);
                    if (inplus && inminus) sector = jj;
                }
                if (sector == 0) continue;
                auto [px, py] = fr.map(x, y);
                double wx = (fr.maxx - fr.minx) / cells * fr.sx, wy = (fr.maxy - fr.miny) / cells * fr.sy;
                out += "<rect x=\"" + fmt(px - wx / 2) + "\" y=\"" + fmt(py - wy / 2) + "\" width=\"" +
                       fmt(wx) + "\" height=\"" + fmt(wy) + "\" fill=\"" +
                       fills[(sector - 1) % 5] + "\"/>\n";
            }
    }

    for (int i = 0; i < arr.size(); ++i) {
        auto seg = line_path(arr.hyperplanes[i]);
        if (!seg) continue;
        auto [x1, y1] = fr.map((*seg)[0], (*seg)[1]);
        auto [x2, y2] = fr.map((*seg)[2], (*seg)[3]);
        out += "<line x1=\"" + fmt(x1) + "\" y1=\"" + fmt(y1) + "\" x2=\"" + fmt(x2) +
               "\" y2=\"" + fmt(y2) + "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
    }

    if (opts.flag) {
        const auto& v1 = (*opts.flag)[1];
        Hyperplane ell;
        ell.normal = {Scalar(0) - v1.basis[0][1], v1.basis[0][0]};
        ell.offset = dot(ell.normal, v1.origin);
        auto seg = line_path(ell);
        if (seg) {
            auto [x1, y1] = fr.map((*seg)[0], (*seg)[1]);
            auto [x2, y2] = fr.map((*seg)[2], (*seg)[3]);
            out += "<line x1=\"" + fmt(x1) + "\" y1=\"" + fmt(y1) + "\" x2=\"" + fmt(x2) +
                   "\" y2=\"" + fmt(y2) +
                   "\" stroke=\"#d62728\" stroke-width=\"1.5\" stroke-dasharray=\"6 3\"/>\n";
        }
        auto [bx, by] = fr.map((*opts.flag)[0].origin[0].to_double(),
                               (*opts.flag)[0].origin[1].to_double());
        out += "<circle cx=\"" + fmt(bx) + "\" cy=\"" + fmt(by) +
               "\" r=\"4\" fill=\"#d62728\"/>\n";
    }

    for (int i = 0; i < (int)verts.size(); ++i) {
        auto [x, y] = fr.map(verts[i].first, verts[i].second);
        bool hot = std::find(opts.swept.begin(), opts.swept.end(), i) != opts.swept.end();
        out += "<circle cx=\"" + fmt(x) + "\" cy=\"" + fmt(y) + "\" r=\"" +
               (hot ? "5" : "3") + "\" fill=\"" + (hot ? "#ff7f0e" : "#1f77b4") + "\"/>\n";
    }
    out += "</svg>\n";
    return out;
}

}  // namespace arrmorse
