#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "persw/bundle/bundle.hpp"

namespace persw::datasets {

enum class Kind { circle_normal, circle_tautological, torus_normal, klein_normal };

/// Parses "circle-normal", "mobius" (alias "circle-tautological"), "torus", "klein".
/// Throws InvalidArgument for anything else.
Kind parse_kind(const std::string& name);
std::string to_string(Kind kind);

struct GeneratorSpec {
    Kind kind = Kind::circle_tautological;
    /// Circle sample size, or the u-count of a surface grid.
    int count = 60;
    /// v-count of a surface grid; ignored for circles.
    int count_v = 0;
    double noise = 0.0;
    std::uint64_t seed = 0;
    double gamma = 1.0;
    /// Uniform scale of the surface immersion; ignored for circles.
    double scale = 1.0;
};

/// Unit circle, lines normal to it (projector onto (cos t, sin t)). Throws for k < 3.
bundle::LiftedCloud circle_normal(int k, double gamma);

/// Unit circle, lines at the half angle (projector onto (cos t/2, sin t/2)): the Moebius
/// bundle. Throws for k < 3.
bundle::LiftedCloud circle_tautological(int k, double gamma);

/// Torus of revolution with radii R = 2, r = 1 around the z axis, on a k_u x k_v grid,
/// with its normal lines. The base points are multiplied by `scale`.
bundle::LiftedCloud torus_normal(int k_u, int k_v, double gamma, double scale = 1.0);

/// Figure-8 immersion of the Klein bottle,
///   x = (a + cos(u/2) sin v - sin(u/2) sin 2v) cos u
///   y = (a + cos(u/2) sin v - sin(u/2) sin 2v) sin u
///   z = sin(u/2) sin v + cos(u/2) sin 2v
/// with a = klein_radius, on a k_u x k_v grid, with its normal lines (central differences).
bundle::LiftedCloud klein_normal(int k_u, int k_v, double gamma, double scale = 1.0);

inline constexpr double klein_radius = 2.0;

/// Point of the figure-8 Klein immersion (before scaling).
std::vector<double> klein_point(double u, double v);

/// Gaussian noise of standard deviation sigma on the base points and on the line
/// directions, which are then projected back to rank-1 projectors. Deterministic per seed;
/// sigma = 0 returns the cloud unchanged. Throws InvalidArgument for sigma < 0.
bundle::LiftedCloud add_noise(const bundle::LiftedCloud& cloud, double sigma, std::uint64_t seed);

/// Lifts an ordered sample x_0, ..., x_{N-1} with the lines spanned by x_{i+1} - x_{i-1}
/// (indices mod N when closed, one-sided at the ends otherwise).
/// Throws InvalidArgument for fewer than 3 points or a repeated neighbor pair.
bundle::LiftedCloud discrete_tangent(std::span<const std::vector<double>> points, double gamma, bool closed = true);

/// Runs the generator named by `spec`, then add_noise when spec.noise > 0.
bundle::LiftedCloud generate(const GeneratorSpec& spec);

}  // namespace persw::datasets
