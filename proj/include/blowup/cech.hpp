#ifndef BLOWUP_CECH_HPP
#define BLOWUP_CECH_HPP

#include <vector>

#include "blowup/bundle.hpp"
#include "blowup/linalg.hpp"

namespace blowup {

// H^0 / H^1 of the two-chart cover for a bundle given by a transition
// matrix, by exact linear algebra on truncated coefficient spaces.
//
// Conventions (everything lives in the U frame):
//   sections   = { s U-holomorphic : T s V-holomorphic }
//   H^1        = overlap cochains / ( Gamma_U + T^-1 Gamma_V ), realized as
//                the z<0 slice of the window modulo projected images of the
//                V-holomorphic cochains.
struct CechResult {
    std::size_t dim = 0;
    std::vector<std::vector<BiLaurent>> reps;  // one entry per vector component
    Window window;
    bool stabilized = false;
    bool boundary_contact = false;
    int enlargements = 0;
};

// umax = 2j, z in [-(3j+2), 3j+2]; enlargement adds (2,2,2).
Window default_window(long j);

// Kernel computation for sections. When strict_z_boundary is set, a section
// touching the zmax boundary throws WindowTooSmall (the u cap is the
// filtration callers iterate over, so u contact is reported, not thrown).
CechResult h0(const BLMatrix& T, const Window& w, bool strict_z_boundary = false);

CechResult h1(const BLMatrix& T, const BLMatrix& Tinv, const Window& w);
CechResult h1(const BLMatrix& T, const Window& w);  // inverts via adjugate

// Enlarges until two consecutive windows agree on dim; throws NonStabilized
// after max_enlargements.
CechResult h1_stabilized(const BLMatrix& T, const BLMatrix& Tinv, Window w,
                         int max_enlargements = 6);

// Stabilized h1 dimension of the bundle itself: the length of R^1 of the
// direct image. Returns 0 immediately for j = 0.
long r1_oracle(const BundleV& b);
CechResult r1_oracle_full(const BundleV& b);

// Stabilized h1 of End(V): the dimension of the local moduli space at V.
long moduli_dim_oracle(const BundleV& b);
CechResult moduli_dim_oracle_full(const BundleV& b);

// Bundle maps b1 -> b2 fixing the transition matrices: 2x2 matrices X,
// holomorphic on both charts, with X T1 = T2 X as an exact identity.
struct HomResult {
    std::size_t dim = 0;
    std::vector<BLMatrix> basis;
    Window window;
    bool stabilized = false;
};
HomResult hom_space(const BundleV& b1, const BundleV& b2);
HomResult hom_space(const BundleV& b1, const BundleV& b2, const Window& w);

// Dimension of the restriction to the exceptional divisor of the traceless
// endomorphisms fixing T. Zero unless the bundle splits.
long traceless_auto_dim(const BundleV& b);

}  // namespace blowup

#endif
