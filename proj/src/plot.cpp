#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "graphwalk/bench.hpp"

namespace graphwalk {

namespace {

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4g", x);
    return buf;
}

const char* kColors[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                         "#9467bd", "#8c564b"};

std::string series_label(const std::string& algorithm, double param) {
    if (algorithm == "exponential") return "exponential g=" + num(param);
    if (algorithm == "laplacian_eps") return "laplacian eps=" + num(param);
    return algorithm;
}

}  // namespace

std::map<std::string, std::string> plot_results(const std::vector<ResultRow>& rows) {
    if (rows.empty()) throw std::invalid_argument("plot: empty results");

    std::map<std::string, std::vector<ResultRow>> by_family;
    for (const auto& r : rows) by_family[r.family].push_back(r);

    std::map<std::string, std::string> svgs;
    for (const auto& [family, frows] : by_family) {
        // (algorithm, param) -> k -> (mean, cap_rate)
        std::map<std::pair<std::string, double>,
                 std::map<int, std::pair<double, double>>>
            series;
        std::set<int> ks;
        {
            std::map<std::tuple<std::string, double, int>, std::pair<double, int>> acc;
            std::map<std::tuple<std::string, double, int>, int> caps;
            for (const auto& r : frows) {
                auto key = std::make_tuple(r.algorithm, r.param, r.k);
                acc[key].first += static_cast<double>(r.t_hit);
                acc[key].second += 1;
                caps[key] += r.capped ? 1 : 0;
                ks.insert(r.k);
            }
            for (const auto& [key, sum_count] : acc) {
                auto [alg, param, k] = key;
                double mean = sum_count.first / sum_count.second;
                double cap_rate =
                    static_cast<double>(caps[key]) / sum_count.second;
                series[{alg, param}][k] = {mean, cap_rate};
            }
        }
        std::vector<int> kvec(ks.begin(), ks.end());

        const double width = 720, height = 480;
        const double ml = 70, mr = 200, mt = 40, mb = 50;
        const double plot_w = width - ml - mr, plot_h = height - mt - mb;

        double ymin = 1e300, ymax = 0;
        for (const auto& [key, points] : series)
            for (const auto& [k, mc] : points) {
                double y = std::max(mc.first, 0.5);
                ymin = std::min(ymin, y);
                ymax = std::max(ymax, y);
            }
        double lmin = std::floor(std::log10(ymin));
        double lmax = std::ceil(std::log10(ymax));
        if (lmax <= lmin) lmax = lmin + 1;

        auto xpos = [&](int k) {
            if (kvec.size() == 1) return ml + plot_w / 2;
            double span = static_cast<double>(kvec.back() - kvec.front());
            return ml + plot_w * (k - kvec.front()) / span;
        };
        auto ypos = [&](double v) {
            double l = std::log10(std::max(v, 0.5));
            return mt + plot_h * (1.0 - (l - lmin) / (lmax - lmin));
        };

        std::ostringstream svg;
        svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
            << "\" height=\"" << height << "\">\n";
        svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
        svg << "<text x=\"" << ml << "\" y=\"24\" font-size=\"15\">mean hitting time vs k ("
            << family << ")</text>\n";
        // axes
        svg << "<line x1=\"" << ml << "\" y1=\"" << mt + plot_h << "\" x2=\""
            << ml + plot_w << "\" y2=\"" << mt + plot_h
            << "\" stroke=\"black\"/>\n";
        svg << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml
            << "\" y2=\"" << mt + plot_h << "\" stroke=\"black\"/>\n";
        for (double l = lmin; l <= lmax; l += 1.0) {
            double y = ypos(std::pow(10.0, l));
            svg << "<line x1=\"" << ml - 4 << "\" y1=\"" << num(y) << "\" x2=\""
                << ml << "\" y2=\"" << num(y) << "\" stroke=\"black\"/>\n";
            svg << "<text x=\"" << ml - 10 << "\" y=\"" << num(y + 4)
                << "\" font-size=\"11\" text-anchor=\"end\">1e" << num(l)
                << "</text>\n";
        }
        for (int k : kvec) {
            double x = xpos(k);
            svg << "<line x1=\"" << num(x) << "\" y1=\"" << mt + plot_h
                << "\" x2=\"" << num(x) << "\" y2=\"" << mt + plot_h + 4
                << "\" stroke=\"black\"/>\n";
            svg << "<text x=\"" << num(x) << "\" y=\"" << mt + plot_h + 18
                << "\" font-size=\"11\" text-anchor=\"middle\">" << k
                << "</text>\n";
        }
        svg << "<text x=\"" << ml + plot_w / 2 << "\" y=\"" << height - 12
            << "\" font-size=\"12\" text-anchor=\"middle\">smoothness k</text>\n";

        int color_idx = 0;
        double legend_y = mt + 10;
        for (const auto& [key, points] : series) {
            const char* color = kColors[color_idx % 6];
            if (points.size() > 1) {
                svg << "<polyline fill=\"none\" stroke=\"" << color
                    << "\" stroke-width=\"2\" points=\"";
                for (int k : kvec) {
                    auto it = points.find(k);
                    if (it == points.end()) continue;
                    svg << num(xpos(k)) << ',' << num(ypos(it->second.first)) << ' ';
                }
                svg << "\"/>\n";
            }
            for (int k : kvec) {
                auto it = points.find(k);
                if (it == points.end()) continue;
                svg << "<circle cx=\"" << num(xpos(k)) << "\" cy=\""
                    << num(ypos(it->second.first)) << "\" r=\"3\" fill=\"" << color
                    << "\"/>\n";
                if (it->second.second > 0) {
                    svg << "<text x=\"" << num(xpos(k) + 5) << "\" y=\""
                        << num(ypos(it->second.first) - 5)
                        << "\" font-size=\"9\" fill=\"" << color << "\">cap "
                        << num(100.0 * it->second.second) << "%</text>\n";
                }
            }
            svg << "<rect x=\"" << ml + plot_w + 20 << "\" y=\"" << num(legend_y - 9)
                << "\" width=\"12\" height=\"12\" fill=\"" << color << "\"/>\n";
            svg << "<text x=\"" << ml + plot_w + 38 << "\" y=\"" << num(legend_y + 2)
                << "\" font-size=\"12\">" << series_label(key.first, key.second)
                << "</text>\n";
            legend_y += 20;
            ++color_idx;
        }
        svg << "</svg>\n";
        svgs[family] = svg.str();
    }
    return svgs;
}

}  // namespace graphwalk
