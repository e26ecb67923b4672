#pragma once

#include <cstdint>
#include <vector>

#include "osc/signal.hpp"

namespace osc {

struct EigenLine {
    std::int64_t character = 0;  // k with eigenvalue exp(2 pi i k / n)
    CVec vector;                 // unit, phase-fixed
};

struct UnitarySpectrum {
    std::vector<EigenLine> simple;                     // multiplicity-1 spaces, sorted by k
    std::vector<std::int64_t> multiplicity;            // indexed by character k in [0, n)
};

/// Diagonalize a unitary U whose eigenvalues are n-th roots of unity. Each
/// eigenvalue is snapped to the nearest exp(2 pi i k / n) (throws SnapFailure
/// beyond snap_tol radians); only multiplicity-1 eigenspaces are returned as
/// vectors. residual_tol bounds ||U v - lambda v|| after snapping.
UnitarySpectrum spectrum_of_unitary(const CMat& U, std::int64_t n, double snap_tol = 1e-6,
                                    double residual_tol = 1e-8);

}  // namespace osc
