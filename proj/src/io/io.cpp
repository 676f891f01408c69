#include "persw/io/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "persw/error.hpp"

namespace persw::io {

namespace {

constexpr const char* approximation_caveat =
    "weak simplicial approximations are not certified by the star condition; a nonzero or zero "
    "verdict is exact for the computed approximation only";

template <class T>
T field(const json& obj, const char* key) {
    if (!obj.is_object() || !obj.contains(key)) throw InvalidArgument(std::string("missing field '") + key + "'");
    try {
        return obj.at(key).get<T>();
    } catch (const json::exception& e) {
        throw InvalidArgument(std::string("bad field '") + key + "': " + e.what());
    }
}

}  // namespace

json cloud_to_json(const bundle::LiftedCloud& cloud) {
    json points = json::array();
    for (const auto& p : cloud.points) {
        json rows = json::array();
        for (std::size_t i = 0; i < p.a.rows(); ++i) {
            json row = json::array();
            for (std::size_t j = 0; j < p.a.cols(); ++j) row.push_back(p.a(i, j));
            rows.push_back(std::move(row));
        }
        points.push_back({{"x", p.x}, {"A", std::move(rows)}});
    }
    return {{"n", cloud.n}, {"m", cloud.m}, {"gamma", cloud.gamma}, {"points", std::move(points)}};
}

bundle::LiftedCloud cloud_from_json(const json& doc) {
    bundle::LiftedCloud cloud;
    cloud.n = field<std::size_t>(doc, "n");
    cloud.m = field<std::size_t>(doc, "m");
    cloud.gamma = field<double>(doc, "gamma");
    if (!doc.contains("points")) throw InvalidArgument("missing field 'points'");
    const auto& points = doc.at("points");
    if (!points.is_array()) throw InvalidArgument("'points' must be an array");
    if (points.empty()) throw InvalidArgument("cloud has no points");
    for (const auto& p : points) {
        grassmann::MatrixPoint q;
        q.x = field<std::vector<double>>(p, "x");
        if (p.contains("A")) {
            const auto rows = field<std::vector<std::vector<double>>>(p, "A");
            q.a = grassmann::Matrix(rows.size(), rows.empty() ? 0 : rows.front().size());
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (rows[i].size() != q.a.cols()) throw InvalidArgument("ragged matrix in cloud");
                for (std::size_t j = 0; j < rows[i].size(); ++j) q.a(i, j) = rows[i][j];
            }
        } else if (p.contains("v")) {
            q.a = grassmann::line_projector(field<std::vector<double>>(p, "v")).projector;
        } else {
            throw InvalidArgument("point has neither 'A' nor 'v'");
        }
        cloud.points.push_back(std::move(q));
    }
    bundle::validate(cloud);
    return cloud;
}

json barcode_to_json(const z2::Barcode& barcode) {
    json out = json::array();
    for (const auto& i : barcode.intervals) {
        json death = i.is_infinite() ? json(nullptr) : json(i.death);
        out.push_back({{"dim", i.dim}, {"birth", i.birth}, {"death", std::move(death)}});
    }
    return out;
}

z2::Barcode barcode_from_json(const json& doc) {
    if (!doc.is_array()) throw InvalidArgument("barcode must be an array");
    z2::Barcode b;
    for (const auto& e : doc) {
        z2::Interval i;
        i.dim = field<int>(e, "dim");
        i.birth = field<double>(e, "birth");
        i.death = e.contains("death") && !e.at("death").is_null() ? field<double>(e, "death") : z2::infinity;
        b.intervals.push_back(i);
    }
    return b;
}

json lifebar_to_json(const bundle::Lifebar& bar) {
    json evals = json::array();
    for (const auto& e : bar.evaluations)
        evals.push_back({{"t", e.t}, {"nonzero", e.nonzero}, {"subdivisions", e.subdivisions}});
    return {{"t_max", bar.t_max},
            {"t_dagger", bar.t_dagger ? json(*bar.t_dagger) : json(nullptr)},
            {"resolution", bar.resolution},
            {"evaluations", std::move(evals)},
            {"caveat", approximation_caveat}};
}

bundle::Lifebar lifebar_from_json(const json& doc) {
    bundle::Lifebar bar;
    bar.t_max = field<double>(doc, "t_max");
    bar.resolution = field<double>(doc, "resolution");
    if (doc.contains("t_dagger") && !doc.at("t_dagger").is_null()) bar.t_dagger = field<double>(doc, "t_dagger");
    if (doc.contains("evaluations"))
        for (const auto& e : doc.at("evaluations"))
            bar.evaluations.push_back({field<double>(e, "t"), field<bool>(e, "nonzero"), field<int>(e, "subdivisions")});
    return bar;
}

json complex_to_json(const SimplicialComplex& complex) {
    json simplices = json::array();
    for (int d = 0; d <= complex.dimension(); ++d)
        for (std::size_t i = 0; i < complex.size(d); ++i) {
            const auto s = complex.simplex(d, i);
            simplices.push_back(std::vector<VertexId>(s.begin(), s.end()));
        }
    return {{"vertex_count", complex.vertex_count()}, {"simplices", std::move(simplices)}};
}

json triangulation_to_json(const projective::ProjectiveTriangulation& t) {
    json out = complex_to_json(t.complex);
    out["m"] = t.m;
    out["labels"] = t.labels;
    out["embeddings"] = t.embeddings;
    json w1 = json::array();
    for (const auto& e : t.w1.support(t.complex)) w1.push_back(std::vector<VertexId>(e.begin(), e.end()));
    out["w1"] = std::move(w1);
    return out;
}

json read_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot read " + path.string());
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InvalidArgument("malformed JSON in " + path.string() + ": " + e.what());
    }
}

void write_text(const std::filesystem::path& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path.string());
    out << text;
    if (!out) throw Error("write failed for " + path.string());
}

namespace {

double barcode_extent(const z2::Barcode& barcode) {
    double hi = 0.0;
    for (const auto& i : barcode.intervals) {
        hi = std::max(hi, i.birth);
        if (!i.is_infinite()) hi = std::max(hi, i.death);
    }
    return hi > 0.0 ? 1.1 * hi : 1.0;
}

std::vector<int> dimensions(const z2::Barcode& barcode) {
    std::vector<int> dims;
    for (const auto& i : barcode.intervals) dims.push_back(i.dim);
    std::ranges::sort(dims);
    dims.erase(std::unique(dims.begin(), dims.end()), dims.end());
    return dims;
}

}  // namespace

std::string render_barcode_svg(const z2::Barcode& barcode) {
    constexpr double width = 640, left = 40, right = 20, row = 8, gap = 16;
    const double extent = barcode_extent(barcode);
    const double scale = (width - left - right) / extent;
    const auto dims = dimensions(barcode);

    std::ostringstream body;
    double y = 20;
    for (int d : dims) {
        body << fmt::format("<text x=\"4\" y=\"{:.1f}\" font-size=\"12\">H{}</text>\n", y + 10, d);
        for (const auto& i : barcode.in_dimension(d)) {
            const double x0 = left + i.birth * scale;
            const double x1 = left + (i.is_infinite() ? extent : i.death) * scale;
            body << fmt::format(
                "<line x1=\"{:.2f}\" y1=\"{:.2f}\" x2=\"{:.2f}\" y2=\"{:.2f}\" stroke=\"#1f4e79\" stroke-width=\"4\"{}/>\n",
                x0, y + row / 2, x1, y + row / 2, i.is_infinite() ? " marker-end=\"url(#arrow)\"" : "");
            y += row;
        }
        y += gap;
    }
    const double axis = y;
    body << fmt::format("<line x1=\"{}\" y1=\"{:.1f}\" x2=\"{}\" y2=\"{:.1f}\" stroke=\"black\"/>\n", left, axis,
                        width - right, axis);
    for (int k = 0; k <= 4; ++k) {
        const double v = extent * k / 4;
        body << fmt::format("<text x=\"{:.1f}\" y=\"{:.1f}\" font-size=\"10\" text-anchor=\"middle\">{:.3g}</text>\n",
                            left + v * scale, axis + 14, v);
    }

    std::ostringstream svg;
    svg << fmt::format("<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{:.0f}\">\n", width, axis + 24);
    svg << "<defs><marker id=\"arrow\" markerWidth=\"6\" markerHeight=\"6\" refX=\"3\" refY=\"3\" orient=\"auto\">"
           "<path d=\"M0,0 L6,3 L0,6 z\" fill=\"#1f4e79\"/></marker></defs>\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n" << body.str() << "</svg>\n";
    return svg.str();
}

std::string render_lifebar_svg(const bundle::Lifebar& bar) {
    constexpr double width = 640, left = 20, right = 20, top = 20, height = 24;
    const double extent = bar.t_max > 0.0 ? bar.t_max : 1.0;
    const double scale = (width - left - right) / extent;
    const double split = bar.t_dagger ? *bar.t_dagger : extent;

    std::ostringstream svg;
    svg << fmt::format("<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\">\n", width, top + height + 40);
    svg << "<defs><pattern id=\"hatch\" width=\"6\" height=\"6\" patternUnits=\"userSpaceOnUse\" "
           "patternTransform=\"rotate(45)\"><line x1=\"0\" y1=\"0\" x2=\"0\" y2=\"6\" stroke=\"#888\" "
           "stroke-width=\"2\"/></pattern></defs>\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (split > 0.0)
        svg << fmt::format("<rect x=\"{}\" y=\"{}\" width=\"{:.2f}\" height=\"{}\" fill=\"url(#hatch)\" stroke=\"#888\"/>\n",
                           left, top, split * scale, height);
    if (split < extent)
        svg << fmt::format("<rect x=\"{:.2f}\" y=\"{}\" width=\"{:.2f}\" height=\"{}\" fill=\"#b03a2e\"/>\n",
                           left + split * scale, top, (extent - split) * scale, height);
    const double axis = top + height + 6;
    for (int k = 0; k <= 4; ++k) {
        const double v = extent * k / 4;
        svg << fmt::format("<text x=\"{:.1f}\" y=\"{:.1f}\" font-size=\"10\" text-anchor=\"middle\">{:.3g}</text>\n",
                           left + v * scale, axis + 10, v);
    }
    svg << fmt::format("<text x=\"{}\" y=\"{:.1f}\" font-size=\"11\">{}</text>\n", left, axis + 26,
                       bar.t_dagger ? fmt::format("t_dagger = {:.4g}, resolution {:.3g}", *bar.t_dagger, bar.resolution)
                                    : std::string("empty lifebar"));
    svg << "</svg>\n";
    return svg.str();
}

std::string render_barcode_text(const z2::Barcode& barcode) {
    constexpr int label = 8, cols = 80 - label;
    const double extent = barcode_extent(barcode);
    std::ostringstream out;
    for (int d : dimensions(barcode)) {
        for (const auto& i : barcode.in_dimension(d)) {
            std::string line(cols, ' ');
            const int a = std::clamp(static_cast<int>(std::floor(i.birth / extent * cols)), 0, cols - 1);
            const int b = i.is_infinite() ? cols
                                          : std::clamp(static_cast<int>(std::ceil(i.death / extent * cols)), a + 1, cols);
            std::fill(line.begin() + a, line.begin() + b, '=');
            if (i.is_infinite()) line.back() = '>';
            out << fmt::format("{:<{}}", fmt::format("H{}", d), label) << line << '\n';
        }
    }
    out << fmt::format("{:<{}}", "", label) << fmt::format("{:<{}}", "0", cols / 2)
        << fmt::format("{:>{}.4g}", extent, cols - cols / 2) << '\n';
    return out.str();
}

std::string render_lifebar_text(const bundle::Lifebar& bar) {
    constexpr int cols = 80;
    const double extent = bar.t_max > 0.0 ? bar.t_max : 1.0;
    const int split = bar.t_dagger ? std::clamp(static_cast<int>(std::round(*bar.t_dagger / extent * cols)), 0, cols) : cols;
    std::string line(cols, '#');
    std::fill(line.begin(), line.begin() + split, '/');
    std::ostringstream out;
    out << (bar.t_dagger ? fmt::format("t_dagger = {:.4g} (resolution {:.3g})", *bar.t_dagger, bar.resolution)
                         : std::string("empty lifebar"))
        << '\n'
        << line << '\n'
        << fmt::format("{:<{}}", "0", cols / 2) << fmt::format("{:>{}.4g}", extent, cols - cols / 2) << '\n';
    return out.str();
}

}  // namespace persw::io
