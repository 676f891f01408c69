#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "persw/grassmann/grassmann.hpp"
#include "persw/projective/projective.hpp"
#include "persw/simplicial/operations.hpp"
#include "persw/z2/cochain.hpp"

namespace persw::bundle {

/// A finite subset of R^n x M(R^m) together with the weight gamma of the matrix part.
struct LiftedCloud {
    std::vector<grassmann::MatrixPoint> points;
    double gamma = 1.0;
    std::size_t n = 0;
    std::size_t m = 0;

    std::size_t size() const noexcept { return points.size(); }
    /// Width of a flattened point: n + m*m (x first, then A row-major).
    std::size_t payload_width() const noexcept { return n + m * m; }
};

/// Checks dimensions and gamma; throws InvalidArgument on any inconsistency.
void validate(const LiftedCloud& cloud);

/// Pairs base points with the projectors onto the given line directions.
/// Throws InvalidArgument for mismatched lengths, gamma <= 0, or a zero direction.
LiftedCloud lift_cloud(std::span<const std::vector<double>> base,
                       std::span<const std::vector<double>> lines, double gamma);

/// As above with lines given by rank-1 projectors; each is renormalized through its
/// top eigenvector.
LiftedCloud lift_cloud(std::span<const std::vector<double>> base,
                       std::span<const grassmann::Matrix> projectors, double gamma);

/// t_max(cloud) / sqrt 2: the right end of the Rips index set. d = 1.
double rips_index_bound(const LiftedCloud& cloud);

/// Pairwise gamma-distances, rows computed in parallel.
DistanceMatrix distance_matrix(const LiftedCloud& cloud);
/// Single-threaded reference for distance_matrix.
DistanceMatrix distance_matrix_serial(const LiftedCloud& cloud);

/// Rips filtration of the cloud in the gamma-norm up to `max_value`, dimension <= max_dim,
/// with every vertex carrying its flattened point as payload. No index-bound check.
FilteredComplex lifted_rips(const LiftedCloud& cloud, double max_value, int max_dim = 2);

/// lifted_rips capped at dimension 2, restricted to the index set.
/// Throws InvalidArgument when max_t exceeds rips_index_bound(cloud).
FilteredComplex build_bundle_filtration(const LiftedCloud& cloud, double max_t);

/// For every vertex: project the matrix part of its payload onto G_1, then apply the
/// face map of L. Vertices are processed in parallel.
/// Throws MedialAxisError when a payload sits on the medial axis and InvalidArgument
/// when the payload width is not n + m*m for the triangulation's m.
std::vector<Simplex> vertex_face_values(const SimplicialComplex& complex,
                                        const projective::ProjectiveTriangulation& t);
/// Single-threaded reference for vertex_face_values.
std::vector<Simplex> vertex_face_values_serial(const SimplicialComplex& complex,
                                               const projective::ProjectiveTriangulation& t);

/// Which element of the admissible set F(v) a weak simplicial approximation picks.
enum class TieBreak { smallest, largest };

struct WeakStarResult {
    /// Set on success.
    std::optional<VertexMap> map;
    /// First vertex (in id order) whose admissible set is empty, on failure.
    std::optional<VertexId> failing_vertex;

    bool ok() const noexcept { return map.has_value(); }
};

/// Weak star condition: for each vertex v, F(v) is the intersection of the vertex sets
/// of values[v'] over v and its neighbors in the 1-skeleton. Succeeds when every F(v)
/// is nonempty, mapping v to the smallest (or largest) element of F(v).
WeakStarResult weak_star_check(const SimplicialComplex& complex, std::span<const Simplex> values,
                               TieBreak tie = TieBreak::smallest);

struct Approximation {
    VertexMap map;
    SimplicialComplex complex;
    int subdivisions = 0;
};

/// Subdivides barycentrically until the weak star condition holds, then returns the weak
/// simplicial approximation on the subdivided complex. Throws SubdivisionLimitError after
/// `subdiv_limit` unsuccessful subdivisions (reported with t = NaN) and InvalidArgument
/// for complexes of dimension > 2.
Approximation weak_simplicial_approximation(const SimplicialComplex& complex,
                                            const projective::ProjectiveTriangulation& t,
                                            int subdiv_limit, TieBreak tie = TieBreak::smallest);

struct SWResult {
    double t = 0.0;
    bool nonzero = false;
    int subdivisions_used = 0;
    /// The subdivided complex the cocycle lives on.
    SimplicialComplex complex;
    VertexMap approximation;
    z2::CochainZ2 pullback_cocycle;
};

inline constexpr int default_subdiv_limit = 4;

/// First Stiefel-Whitney class of the Rips bundle filtration at index t.
/// Throws InvalidArgument when t is outside [0, rips_index_bound) and
/// SubdivisionLimitError (carrying t) when no approximation is found.
SWResult sw_class_at(const LiftedCloud& cloud, double t, const projective::ProjectiveTriangulation& tri,
                     int subdiv_limit = default_subdiv_limit, TieBreak tie = TieBreak::smallest);

struct Evaluation {
    double t = 0.0;
    bool nonzero = false;
    int subdivisions = 0;
};

struct Lifebar {
    /// Right end of the searched index set, rips_index_bound(cloud).
    double t_max = 0.0;
    /// Empty when the class vanishes along the whole index set.
    std::optional<double> t_dagger;
    double resolution = 0.0;
    std::vector<Evaluation> evaluations;

    bool empty() const noexcept { return !t_dagger.has_value(); }
};

/// Dichotomic search for the birth of w1 over [0, rips_index_bound). The class is
/// evaluated at 0 and at bound - resolution; if the latter is zero the lifebar is empty.
/// Otherwise the bracket (zero, nonzero) is halved until its width is <= resolution and
/// t_dagger is its midpoint. Throws InvalidArgument for resolution <= 0.
Lifebar lifebar(const LiftedCloud& cloud, const projective::ProjectiveTriangulation& tri,
                double resolution, int subdiv_limit = default_subdiv_limit);

/// sw_class_at on every t of a grid, evaluated concurrently. Results follow the input order.
std::vector<Evaluation> evaluate_grid(const LiftedCloud& cloud, const projective::ProjectiveTriangulation& tri,
                                      std::span<const double> ts, int subdiv_limit = default_subdiv_limit);
/// Single-threaded reference for evaluate_grid.
std::vector<Evaluation> evaluate_grid_serial(const LiftedCloud& cloud,
                                             const projective::ProjectiveTriangulation& tri,
                                             std::span<const double> ts,
                                             int subdiv_limit = default_subdiv_limit);

/// Symmetric Hausdorff distance in the gamma-norm.
/// Throws InvalidArgument for clouds with different (n, m, gamma) or an empty cloud.
double hausdorff_distance(const LiftedCloud& a, const LiftedCloud& b);
double hausdorff_distance_serial(const LiftedCloud& a, const LiftedCloud& b);

}  // namespace persw::bundle
