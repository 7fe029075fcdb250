#ifndef GAHP_DERIVE_HPP
#define GAHP_DERIVE_HPP

#include "gahp/core.hpp"

namespace gahp {

/// Normalized geometric means of the rows of C.
PriorityVector gmm_priorities(const PCMatrix& c);

struct EigenResult {
    PriorityVector priorities;
    double lambda_max;
    int iterations;
};

/// Principal eigenpair by power iteration, started from the row geometric
/// means. Converged once successive normalized iterates differ by less than
/// `tol` in the max norm; lambda_max is mean_i (C w)_i / w_i at that point.
/// Throws ConvergenceError if `max_iter` steps do not suffice.
EigenResult evm_priorities(const PCMatrix& c, double tol = 1e-12, int max_iter = 10'000);

} // namespace gahp

#endif
