#pragma once

namespace tetra {

/// Open chain with on-site energy -mu, nearest hopping -t1 and next-nearest hopping -t2.
struct ChainParams {
    double mu = 0.0;
    double t1 = 0.0;
    double t2 = 1.0;
    int n = 1;
    double d = 1.0;  // lattice constant
};

}  // namespace tetra
