#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "comtop/errors.hpp"
#include "comtop/fpgroups.hpp"

namespace comtop {

// Finite CW complex with mod-2 boundary data. bnd[d][i] lists the (d-1)-cells
// hit an odd number of times by the boundary of the i-th d-cell. For edge-path
// computations, 1-cells carry endpoints and 2-cells may carry an oriented
// attaching word (pairs of edge index and +-1 exponent).
struct F2CellComplex {
    int n = 0; // torus rank of the model that produced this complex
    std::vector<std::vector<std::vector<std::uint32_t>>> bnd;
    std::vector<std::vector<std::string>> label;
    std::vector<std::array<std::uint32_t, 2>> ends; // per 1-cell: start, end
    std::vector<std::vector<std::pair<std::uint32_t, std::int8_t>>> attach2;
    bool attaching_recorded = false;
    std::uint32_t basepoint = 0;

    int dim() const { return static_cast<int>(bnd.size()) - 1; }
    std::size_t cells(int d) const {
        return (d >= 0 && d <= dim()) ? bnd[static_cast<std::size_t>(d)].size() : 0;
    }
    std::size_t total_cells() const;
};

// Cell model of the identity component of commuting n-tuples of rotations:
// take the sphere-times-torus complex (2 antipodal cells per sphere
// dimension, conjugation-swapped arcs per circle), quotient by the free
// diagonal involution, then collapse the projective-plane subcomplex lying
// over the trivial torus point to the basepoint. The result has 3*4^n - 2
// cells. Attaching words are recorded for n <= 3 only.
// BoundError outside 1 <= n <= 8. The boundary-of-boundary identity is
// asserted for all three stages of the construction.
F2CellComplex build_plus_model(int n);

struct BettiProfile {
    int n = 0;
    std::vector<long long> b; // b[q] = dim H_q(-, F2)
};

// mod-2 Betti numbers by bit-packed Gaussian elimination.
// BoundaryError if the complex fails boundary-of-boundary.
BettiProfile betti_f2(const F2CellComplex& k);

// closed-form mod-2 Betti table for the model, n >= 2:
//   b0 = 1, b1 = n, b2 = C(n,1)+C(n,2),
//   bq = C(n,q-2)+C(n,q-1)+C(n,q) for 3 <= q <= n,
//   b_{n+1} = C(n,n-1)+1, b_{n+2} = 1
BettiProfile betti_formula(int n); // RangeError n < 2

long long euler_from_betti(const BettiProfile& p);
long long euler_from_cells(const F2CellComplex& k);

// the binomial expression 2 + n(n-1) - C(n,k-1) - C(n,k) - C(n,k+1) for
// n = 2k; disagrees with the cell model at n = 6, which callers must report
// rather than assert away
long long euler_binomial_even(int n); // RangeError unless n even, n >= 4

// edge-path presentation of the fundamental group: spanning tree from the
// basepoint, one generator per non-tree edge, one relator per 2-cell.
// MissingAttachingWords if the complex has no recorded words.
FpGroup edge_path_pi1(const F2CellComplex& k);

// rank over GF(2); rows are bit-packed (64 columns per word)
std::size_t f2_rank(std::vector<std::vector<std::uint64_t>> rows, std::size_t ncols);

long long binomial(int n, int k);

} // namespace comtop
