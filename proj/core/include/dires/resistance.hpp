#pragma once

#include <array>
#include <cstdint>

#include "dires/graph.hpp"
#include "dires/linalg.hpp"
#include "dires/lyapunov.hpp"
#include "dires/structure.hpp"

namespace dires {

struct PipelineOptions {
    LyapunovMethod solver = LyapunovMethod::BartelsStewart;
    QVariant q_variant = QVariant::Deterministic;
    std::uint64_t seed = 0;
    double tol = 1e-8;
};

/// Cached products of the resistance construction for one connected graph:
/// the reduced Laplacian lbar = Q L Q^T, the Lyapunov solution sigma, and
/// X = 2 Q^T sigma Q. Immutable after construction; queries are pure.
class ResistancePipeline {
public:
    const DiGraph& graph() const noexcept { return graph_; }
    const Matrix& q() const noexcept { return q_; }
    const Matrix& lbar() const noexcept { return lbar_; }
    const Matrix& sigma() const noexcept { return sigma_; }
    const Matrix& x() const noexcept { return x_; }
    double lyapunov_residual() const noexcept { return residual_; }

    /// r_{k,j} = x_{k,k} + x_{j,j} - 2 x_{k,j}; symmetric, zero iff k = j.
    double effective_resistance(int k, int j) const;
    /// All pairwise resistances; symmetric with zero diagonal.
    Matrix resistance_matrix() const;
    /// Sum of resistances over unordered pairs; equals 2N trace(sigma).
    double kirchhoff_index() const;
    /// sqrt(K_f / 2N) = sqrt(trace(sigma)).
    double h2_norm() const;

    friend ResistancePipeline build_pipeline(const DiGraph& g, const PipelineOptions& options);

private:
    ResistancePipeline(DiGraph g, Matrix q, Matrix lbar, Matrix sigma, Matrix x, double residual);

    DiGraph graph_;
    Matrix q_;
    Matrix lbar_;
    Matrix sigma_;
    Matrix x_;
    double residual_ = 0.0;
};

/// Throws NotConnectedError (naming two mutually unreachable sink
/// components) when g has no globally reachable node.
ResistancePipeline build_pipeline(const DiGraph& g, const PipelineOptions& options = {});

enum class ResistanceKind {
    Finite,
    Infinite,
    Undefined,
};

/// Trichotomy result for a node pair in an arbitrary digraph: finite value
/// when exactly one connection subgraph exists, infinite when none does,
/// undefined when several do.
struct GeneralResistance {
    ResistanceKind kind = ResistanceKind::Infinite;
    double value = 0.0; ///< meaningful only when kind == Finite
    ConnectionAnalysis analysis;
};

GeneralResistance general_resistance(const DiGraph& g, int k, int j,
                                     const PipelineOptions& options = {});

/// Computes r_{k,j} on the pruned reachable subgraph; equal to the
/// full-graph value for connected g.
double resistance_via_reduction(const DiGraph& g, int k, int j,
                                const PipelineOptions& options = {});

/// Numerical integral of Q^T e^(-lbar t) e^(-lbar^T t) Q over [0, T] by
/// composite Simpson, T grown until |e^(-lbar T)|_F <= 1e-8 and the step
/// refined until successive estimates differ by <= 1e-7. Must match
/// Q^T sigma Q. Throws ConvergenceError when the horizon is not reached.
Matrix covariance_quadrature(const ResistancePipeline& p);

/// Metric axioms checked over all node triples.
struct MetricReport {
    bool nonnegative = true;
    bool zero_iff_equal = true;
    bool symmetric = true;
    /// sqrt(r) triangle inequality with slack -1e-10.
    bool sqrt_triangle = true;
    /// Plain r triangle inequality (may legitimately fail on digraphs).
    bool plain_triangle = true;
    int plain_violations = 0;
    double min_sqrt_slack = 0.0;
    double min_plain_slack = 0.0;
    std::array<int, 3> worst_sqrt_triple{0, 0, 0};
    std::array<int, 3> worst_plain_triple{0, 0, 0};
};

MetricReport check_metric(const ResistancePipeline& p);

} // namespace dires
