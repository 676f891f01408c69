// persw: sample vector bundles, compute barcodes and Stiefel-Whitney lifebars.
//
// Exit codes: 0 success, 2 bad input, 3 subdivision limit reached, 1 anything else.
// Log verbosity comes from SPDLOG_LEVEL (e.g. SPDLOG_LEVEL=debug).

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <spdlog/cfg/env.h>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "persw/bundle/bundle.hpp"
#include "persw/datasets/datasets.hpp"
#include "persw/error.hpp"
#include "persw/io/io.hpp"
#include "persw/projective/projective.hpp"
#include "persw/z2/persistence.hpp"

namespace {

using namespace persw;

enum class Format { json, svg, text };

struct Output {
    std::string path;
    std::string format = "json";
    std::string svg;

    Format kind() const {
        if (format == "json") return Format::json;
        if (format == "svg") return Format::svg;
        if (format == "text") return Format::text;
        throw InvalidArgument("unknown format '" + format + "'");
    }

    void emit(const std::string& text) const {
        if (path.empty() || path == "-")
            std::cout << text;
        else
            io::write_text(path, text);
    }
};

void add_output(CLI::App* cmd, Output& out, bool renderable) {
    cmd->add_option("-o,--output", out.path, "Output file (default: stdout)");
    if (renderable) {
        cmd->add_option("--format", out.format, "json, svg or text")->check(CLI::IsMember({"json", "svg", "text"}));
        cmd->add_option("--svg", out.svg, "Also write an SVG rendering to this file");
    }
}

struct GenerateArgs {
    std::string dataset = "mobius";
    datasets::GeneratorSpec spec;
    Output out;
};

int run_generate(const GenerateArgs& a) {
    auto spec = a.spec;
    spec.kind = datasets::parse_kind(a.dataset);
    const auto cloud = datasets::generate(spec);
    spdlog::info("generated {} points of '{}' (n = {}, m = {}, gamma = {})", cloud.size(), a.dataset, cloud.n, cloud.m,
                 cloud.gamma);
    a.out.emit(io::cloud_to_json(cloud).dump(2) + "\n");
    return 0;
}

struct BarcodeArgs {
    std::string input;
    std::optional<double> max_edge;
    int max_dim = 1;
    Output out;
};

int run_barcode(const BarcodeArgs& a) {
    const auto cloud = io::cloud_from_json(io::read_json(a.input));
    const double bound = bundle::rips_index_bound(cloud);
    const double max_edge = a.max_edge.value_or(bound);
    FilteredComplex filtration;
    if (max_edge <= bound) {
        filtration = bundle::build_bundle_filtration(cloud, max_edge);
    } else {
        spdlog::warn("max edge {} exceeds the index bound {}; the filtration is not a bundle filtration past it",
                     max_edge, bound);
        filtration = bundle::lifted_rips(cloud, max_edge, 2);
    }
    const auto bars = z2::barcode(filtration, a.max_dim);
    spdlog::info("{} simplices, {} bars", filtration.complex().total_size(), bars.intervals.size());

    switch (a.out.kind()) {
        case Format::json: a.out.emit(io::barcode_to_json(bars).dump(2) + "\n"); break;
        case Format::svg: a.out.emit(io::render_barcode_svg(bars)); break;
        case Format::text: a.out.emit(io::render_barcode_text(bars)); break;
    }
    if (!a.out.svg.empty()) io::write_text(a.out.svg, io::render_barcode_svg(bars));
    return 0;
}

struct LifebarArgs {
    std::string input;
    double resolution = 0.01;
    int subdiv_limit = bundle::default_subdiv_limit;
    Output out;
};

int run_lifebar(const LifebarArgs& a) {
    const auto cloud = io::cloud_from_json(io::read_json(a.input));
    const auto tri = projective::triangulate_rp(static_cast<int>(cloud.m));
    const auto bar = bundle::lifebar(cloud, tri, a.resolution, a.subdiv_limit);
    for (const auto& e : bar.evaluations)
        spdlog::debug("t = {:.5f}: {} after {} subdivisions", e.t, e.nonzero ? "nonzero" : "zero", e.subdivisions);
    if (bar.t_dagger)
        spdlog::info("t_dagger = {:.5f} on [0, {:.5f})", *bar.t_dagger, bar.t_max);
    else
        spdlog::info("empty lifebar on [0, {:.5f})", bar.t_max);

    switch (a.out.kind()) {
        case Format::json: a.out.emit(io::lifebar_to_json(bar).dump(2) + "\n"); break;
        case Format::svg: a.out.emit(io::render_lifebar_svg(bar)); break;
        case Format::text: a.out.emit(io::render_lifebar_text(bar)); break;
    }
    if (!a.out.svg.empty()) io::write_text(a.out.svg, io::render_lifebar_svg(bar));
    return 0;
}

struct TriangulationArgs {
    int m = 3;
    Output out;
};

int run_triangulation(const TriangulationArgs& a) {
    const auto t = projective::triangulate_rp(a.m);
    a.out.emit(io::triangulation_to_json(t).dump(2) + "\n");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    spdlog::set_default_logger(spdlog::stderr_color_st("persw"));
    spdlog::set_level(spdlog::level::warn);
    spdlog::cfg::load_env_levels();

    CLI::App app{"Persistent Stiefel-Whitney classes of sampled line bundles"};
    app.require_subcommand(1);

    GenerateArgs gen;
    auto* g = app.add_subcommand("generate", "Sample a lifted point cloud");
    g->add_option("--dataset", gen.dataset, "circle-normal, mobius, torus or klein")
        ->check(CLI::IsMember({"circle-normal", "circle-tautological", "mobius", "torus", "klein"}));
    g->add_option("--count", gen.spec.count, "Sample size (u-count for surfaces)")->check(CLI::PositiveNumber);
    g->add_option("--count-v", gen.spec.count_v, "v-count for surfaces (default: --count)");
    g->add_option("--gamma", gen.spec.gamma, "Weight of the matrix part")->required()->check(CLI::PositiveNumber);
    g->add_option("--noise", gen.spec.noise, "Gaussian noise level")->check(CLI::NonNegativeNumber);
    g->add_option("--seed", gen.spec.seed, "Noise seed");
    g->add_option("--scale", gen.spec.scale, "Scale of surface immersions")->check(CLI::PositiveNumber);
    add_output(g, gen.out, false);

    BarcodeArgs bc;
    auto* b = app.add_subcommand("barcode", "Persistence barcode of the lifted Rips filtration");
    b->add_option("-i,--input", bc.input, "Cloud JSON")->required();
    b->add_option("--max-edge", bc.max_edge, "Largest filtration value (default: the index bound)")
        ->check(CLI::NonNegativeNumber);
    b->add_option("--max-dim", bc.max_dim, "Top homology dimension, 0 or 1")->check(CLI::Range(0, 1));
    add_output(b, bc.out, true);

    LifebarArgs lb;
    auto* l = app.add_subcommand("lifebar", "Lifebar of the first Stiefel-Whitney class");
    l->add_option("-i,--input", lb.input, "Cloud JSON")->required();
    l->add_option("--resolution", lb.resolution, "Bisection resolution")->check(CLI::PositiveNumber);
    l->add_option("--subdiv-limit", lb.subdiv_limit, "Barycentric subdivisions allowed")->check(CLI::NonNegativeNumber);
    add_output(l, lb.out, true);

    TriangulationArgs tr;
    auto* t = app.add_subcommand("triangulation", "Export the triangulation of RP^{m-1}");
    t->add_option("-m", tr.m, "Ambient dimension m")->check(CLI::Range(2, 6));
    add_output(t, tr.out, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*g) return run_generate(gen);
        if (*b) return run_barcode(bc);
        if (*l) return run_lifebar(lb);
        if (*t) return run_triangulation(tr);
    } catch (const SubdivisionLimitError& e) {
        spdlog::error("no weak simplicial approximation at t = {} after {} subdivisions: {}", e.t(), e.subdivisions(),
                      e.what());
        return 3;
    } catch (const InvalidArgument& e) {
        spdlog::error("{}", e.what());
        return 2;
    } catch (const MedialAxisError& e) {
        spdlog::error("{}", e.what());
        return 2;
    } catch (const std::exception& e) {
        spdlog::error("{}", e.what());
        return 1;
    }
    return 1;
}
