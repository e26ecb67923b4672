#include "osc/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>

#include "osc/errors.hpp"

namespace osc {

UnitarySpectrum spectrum_of_unitary(const CMat& U, std::int64_t n, double snap_tol,
                                    double residual_tol) {
    Eigen::ComplexEigenSolver<CMat> solver(U, /*computeEigenvectors=*/true);
    if (solver.info() != Eigen::Success) throw SnapFailure("eigensolver did not converge");

    const auto& lambdas = solver.eigenvalues();
    const auto& vectors = solver.eigenvectors();

    UnitarySpectrum out;
    out.multiplicity.assign(static_cast<std::size_t>(n), 0);
    std::vector<std::pair<std::int64_t, Eigen::Index>> snapped;
    const double step = 2.0 * std::numbers::pi / static_cast<double>(n);
    for (Eigen::Index i = 0; i < lambdas.size(); ++i) {
        double ang = std::arg(lambdas[i]);
        std::int64_t k = static_cast<std::int64_t>(std::llround(ang / step));
        k = ((k % n) + n) % n;
        double target = step * static_cast<double>(k);
        double diff = std::remainder(ang - target, 2.0 * std::numbers::pi);
        if (std::abs(diff) > snap_tol)
            throw SnapFailure("eigenvalue angle " + std::to_string(ang) + " not near any " +
                              std::to_string(n) + "-th root of unity");
        out.multiplicity[static_cast<std::size_t>(k)]++;
        snapped.emplace_back(k, i);
    }

    for (const auto& [k, i] : snapped) {
        if (out.multiplicity[static_cast<std::size_t>(k)] != 1) continue;
        CVec v = vectors.col(i);
        v.normalize();
        cplx lambda = std::polar(1.0, step * static_cast<double>(k));
        double residual = (U * v - lambda * v).norm();
        if (residual > residual_tol)
            throw SnapFailure("eigenvector residual " + std::to_string(residual) +
                              " exceeds tolerance after snapping");
        fix_phase(v);
        out.simple.push_back({k, std::move(v)});
    }
    std::sort(out.simple.begin(), out.simple.end(),
              [](const EigenLine& a, const EigenLine& b) { return a.character < b.character; });
    return out;
}

}  // namespace osc
