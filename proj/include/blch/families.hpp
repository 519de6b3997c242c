#pragma once

#include <set>
#include <string>
#include <vector>

#include "blch/augment.hpp"
#include "blch/chain_complex.hpp"
#include "blch/dga.hpp"

namespace blch::families {

// Maximal-tb right-handed trefoil in the Lagrangian projection: a1, a2 of
// degree 1 and b1, b2, b3 of degree 0, with
//   d a1 = 1 + b1 + b3 + b1*b2*b3,  d a2 = 1 + b1 + b3 + b3*b2*b1.
DGA trefoil_dga();

// Its five augmentations, in the order (1,1,1), (1,0,0), (1,1,0), (0,0,1),
// (0,1,1) on (b1,b2,b3). Works for any DGA containing b1, b2, b3 of degree 0,
// in particular the trefoil-unknot link below (new generators go to 0).
std::vector<Augmentation> trefoil_augmentations(const DGA& dga);

// Trefoil plus a split unknot component with Maslov shift k: extra
// generators a3 (degree 1) and mixed chords c1 (k-1), c2 (k), d1 (1-k),
// d2 (-k), with d c2 = (1 + b2*b1)*c1 and d d1 = d2*(1 + b2*b1).
DGA trefoil_link_dga(int shift_k);

// Standard Legendrian Hopf link in J^1(R^n) with Maslov shift k between the
// components: six generators c11, c22 (degree n), c12 (n+k), c21 (n-k),
// m12 (k-1), M12 (n+k-1).
DGA hopf_dga(int n, int k);

// Bilinearized complex of the 2N-copy of the standard unknot with respect to
// the alternating augmentations; basis c_ij (all i,j), m_ij and M_ij (i<j).
ChainComplex multicopy_complex(int N, int n);

// Subcomplex spanned by the chords touching a satellite unknot linked with
// the bottom k components, Maslov shift m: c00 (degree n) plus c0j, cj0,
// m0j, M0j for j = 1..k.
ChainComplex note_subcomplex(int k, int m, int n);

// Chain-level connected sum: adjoins a generator s of degree n-1 with
// d s = 0 and appends rho(x)*s to d x for every degree-n basis element x,
// where rho is the characteristic functional of rho_support. Fails unless
// rho vanishes on the image of d_{n+1}, which would break d^2 = 0.
ChainComplex attach_s(const ChainComplex& cx, int n,
                      const std::set<std::string>& rho_support);

}  // namespace blch::families
