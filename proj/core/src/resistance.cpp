#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

#include "dires/errors.hpp"
#include "dires/resistance.hpp"

namespace dires {

namespace {

void require_node(const DiGraph& g, int node) {
    if (node < 1 || node > g.node_count()) {
        throw std::invalid_argument("node id out of range: " + std::to_string(node));
    }
}

} // namespace

ResistancePipeline::ResistancePipeline(DiGraph g, Matrix q, Matrix lbar, Matrix sigma, Matrix x,
                                       double residual)
    : graph_(std::move(g)),
      q_(std::move(q)),
      lbar_(std::move(lbar)),
      sigma_(std::move(sigma)),
      x_(std::move(x)),
      residual_(residual) {}

ResistancePipeline build_pipeline(const DiGraph& g, const PipelineOptions& options) {
    const int n = g.node_count();
    if (!is_connected(g)) {
        const SccResult scc = strongly_connected_components(g);
        const auto sinks = scc.sink_components();
        std::string message = "graph is not connected";
        if (sinks.size() >= 2) {
            message += ": sink components containing node " +
                       std::to_string(scc.components[sinks[0]].front()) + " and node " +
                       std::to_string(scc.components[sinks[1]].front()) +
                       " cannot reach each other";
        }
        throw NotConnectedError(message);
    }
    if (n == 1) {
        return ResistancePipeline(g, Matrix(0, 1), Matrix(0, 0), Matrix(0, 0), Matrix(1, 1), 0.0);
    }

    Matrix q = build_q(n, options.q_variant, options.seed).q;
    Matrix lbar = q * laplacian(g) * transpose(q);
    LyapunovSolution solution = solve_lyapunov(lbar, options.solver, options.tol);
    Matrix x = 2.0 * (transpose(q) * solution.sigma * q);
    x = 0.5 * (x + transpose(x));
    return ResistancePipeline(g, std::move(q), std::move(lbar), std::move(solution.sigma),
                              std::move(x), solution.residual_norm);
}

double ResistancePipeline::effective_resistance(int k, int j) const {
    require_node(graph_, k);
    require_node(graph_, j);
    if (k == j) {
        return 0.0;
    }
    return x_(k - 1, k - 1) + x_(j - 1, j - 1) - 2.0 * x_(k - 1, j - 1);
}

Matrix ResistancePipeline::resistance_matrix() const {
    const int n = graph_.node_count();
    Matrix r(n, n);
    for (int k = 1; k <= n; ++k) {
        for (int j = k + 1; j <= n; ++j) {
            const double value = effective_resistance(k, j);
            r(k - 1, j - 1) = value;
            r(j - 1, k - 1) = value;
        }
    }
    return r;
}

double ResistancePipeline::kirchhoff_index() const {
    const int n = graph_.node_count();
    double sum = 0.0;
    for (int k = 1; k <= n; ++k) {
        for (int j = k + 1; j <= n; ++j) {
            sum += effective_resistance(k, j);
        }
    }
    return sum;
}

double ResistancePipeline::h2_norm() const {
    return std::sqrt(kirchhoff_index() / (2.0 * graph_.node_count()));
}

GeneralResistance general_resistance(const DiGraph& g, int k, int j,
                                     const PipelineOptions& options) {
    require_node(g, k);
    require_node(g, j);

    GeneralResistance result;
    if (k == j) {
        result.kind = ResistanceKind::Finite;
        result.value = 0.0;
        result.analysis.k = k;
        result.analysis.j = j;
        return result;
    }

    result.analysis = analyze_connections(g, k, j);
    const auto& subgraphs = result.analysis.subgraphs;
    if (subgraphs.empty()) {
        result.kind = ResistanceKind::Infinite;
        return result;
    }
    if (subgraphs.size() > 1) {
        result.kind = ResistanceKind::Undefined;
        return result;
    }

    const Subgraph& connection = subgraphs.front();
    const ResistancePipeline pipeline = build_pipeline(connection.graph, options);
    result.kind = ResistanceKind::Finite;
    result.value = pipeline.effective_resistance(connection.local_id(k), connection.local_id(j));
    return result;
}

double resistance_via_reduction(const DiGraph& g, int k, int j, const PipelineOptions& options) {
    const Subgraph reachable = reachable_subgraph(g, k, j);
    const Subgraph pruned =
        prune_trailing_path(reachable.graph, reachable.local_id(k), reachable.local_id(j));
    const ResistancePipeline pipeline = build_pipeline(pruned.graph, options);
    return pipeline.effective_resistance(pruned.local_id(reachable.local_id(k)),
                                         pruned.local_id(reachable.local_id(j)));
}

Matrix covariance_quadrature(const ResistancePipeline& p) {
    const Matrix& lbar = p.lbar();
    const Matrix& q = p.q();
    const int n = p.graph().node_count();
    if (lbar.rows() == 0) {
        return Matrix(n, n);
    }
    const Matrix neg_lbar = -1.0 * lbar;

    // Truncation horizon: grow T until the propagator has decayed.
    double horizon = 1.0;
    for (int attempt = 0;; ++attempt) {
        if (attempt > 60) {
            throw ConvergenceError(
                "covariance_quadrature: horizon not reached; spectral abscissa too small");
        }
        if (frobenius_norm(expm(neg_lbar, horizon)) <= 1e-8) {
            break;
        }
        horizon *= 2.0;
    }

    const Matrix qt = transpose(q);
    auto integrand = [&](double t) {
        const Matrix e = expm(neg_lbar, t);
        return qt * (e * transpose(e)) * q;
    };
    auto simpson = [&](int intervals) {
        const double h = horizon / intervals;
        Matrix acc = integrand(0.0) + integrand(horizon);
        for (int i = 1; i < intervals; ++i) {
            acc = acc + (i % 2 == 1 ? 4.0 : 2.0) * integrand(i * h);
        }
        return (h / 3.0) * acc;
    };

    int intervals = 8;
    Matrix estimate = simpson(intervals);
    for (;;) {
        intervals *= 2;
        if (intervals > (1 << 20)) {
            throw ConvergenceError("covariance_quadrature: step refinement did not settle");
        }
        Matrix refined = simpson(intervals);
        const double change = frobenius_norm(refined - estimate);
        estimate = std::move(refined);
        if (change <= 1e-7) {
            break;
        }
    }
    return estimate;
}

MetricReport check_metric(const ResistancePipeline& p) {
    const int n = p.graph().node_count();
    const Matrix r = p.resistance_matrix();

    MetricReport report;
    report.min_sqrt_slack = std::numeric_limits<double>::infinity();
    report.min_plain_slack = std::numeric_limits<double>::infinity();

    for (int k = 0; k < n; ++k) {
        for (int j = 0; j < n; ++j) {
            if (k != j && !(r(k, j) > 0.0)) {
                report.zero_iff_equal = false;
            }
            if (r(k, j) < -1e-10) {
                report.nonnegative = false;
            }
            if (std::abs(r(k, j) - r(j, k)) > 1e-12) {
                report.symmetric = false;
            }
        }
        if (r(k, k) != 0.0) {
            report.zero_iff_equal = false;
        }
    }

    for (int k = 0; k < n; ++k) {
        for (int j = k + 1; j < n; ++j) {
            for (int l = 0; l < n; ++l) {
                if (l == k || l == j) {
                    continue;
                }
                const double sqrt_slack =
                    std::sqrt(std::max(r(k, l), 0.0)) + std::sqrt(std::max(r(l, j), 0.0)) -
                    std::sqrt(std::max(r(k, j), 0.0));
                if (sqrt_slack < report.min_sqrt_slack) {
                    report.min_sqrt_slack = sqrt_slack;
                    report.worst_sqrt_triple = {k + 1, l + 1, j + 1};
                }
                const double plain_slack = r(k, l) + r(l, j) - r(k, j);
                if (plain_slack < report.min_plain_slack) {
                    report.min_plain_slack = plain_slack;
                    report.worst_plain_triple = {k + 1, l + 1, j + 1};
                }
                if (plain_slack < -1e-10) {
                    ++report.plain_violations;
                }
            }
        }
    }
    if (n < 3) {
        report.min_sqrt_slack = 0.0;
        report.min_plain_slack = 0.0;
    }
    report.sqrt_triangle = report.min_sqrt_slack >= -1e-10;
    report.plain_triangle = report.plain_violations == 0;
    return report;
}

} // namespace dires
