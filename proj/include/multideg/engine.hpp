#ifndef MULTIDEG_ENGINE_HPP
#define MULTIDEG_ENGINE_HPP

#include <string>
#include <vector>

#include "multideg/bipoly.hpp"
#include "multideg/graph.hpp"
#include "multideg/minsets.hpp"

namespace multideg {

struct MultidegreeResult {
    BiPoly poly;         // homogeneous of total degree codim, t1<->t2 symmetric
    int h_min = 0;       // codim - n
    int codim = 0;
    int witness_count = 0;  // |M(G)| (product over components when disconnected)
};

/// Multidegree of J_G via the combinatorial sum over M(G):
///   sum over S in M(G) of (t1 t2)^|S| * prod over L(S;G) of h_poly(size).
/// Disconnected graphs are handled by the product rule over components;
/// isolated vertices contribute the factor 1.
MultidegreeResult multidegree(const Graph& g);

/// Closed-form family multidegrees, bypassing subset enumeration. Small
/// parameters where the generic closed form degenerates (star n <= 3,
/// friendship n <= 2, windmill m <= 2) return the true multidegree of the
/// resulting graph; see README.
BiPoly family_multidegree(const std::string& name, const std::vector<int>& params);

/// multidegree(G) evaluated at t1 = t2 = 1.
Int multiplicity(const Graph& g);

}  // namespace multideg

#endif
