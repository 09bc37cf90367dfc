#pragma once

#include "sparse_eigenmaps/matrix.hpp"
#include "sparse_eigenmaps/noise.hpp"

namespace sre {

struct UsvtConfig {
    double eta = 0.02;      // threshold slack in (2+eta)*sqrt(n*p)
    double p_known = -1.0;  // negative means "estimate from the mask"
    double clip_lo = 0.0;
    double clip_hi = 1.0;

    void validate() const;
};

/// Universal singular value thresholding: keeps singular values of Y at or
/// above (2+eta)*sqrt(n*p_hat), rescales by 1/p_hat, clips, symmetrizes by
/// averaging, and zeroes the diagonal. p_hat is cfg.p_known when given,
/// otherwise the observed fraction of the mask.
SymmetricMatrix usvt_complete(const ObservedMatrix& y, const UsvtConfig& cfg);

/// Same procedure for a bare matrix (no mask); p_hat must come from
/// cfg.p_known, or is estimated as the fraction of nonzero off-diagonal
/// entries when unset.
SymmetricMatrix usvt_complete(const SymmetricMatrix& y, const UsvtConfig& cfg);

}  // namespace sre
