#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dnq/quiver.hpp"

namespace dnq {

// Vertex-labelled, arrow-labelled tree underlying a tree module.  Arrows
// carry the extremal flag used by the successor-closure rule; ramifications
// are the (l, l+1, l+2, l+3) vertex quadruples subject to the second rule.
struct CoeffQuiver {
    struct Vertex {
        int id;
        VarId label;
    };
    struct CArrow {
        int source;
        int target;
        EdgeId edge;
        bool extremal;
    };

    std::vector<Vertex> vertices;
    std::vector<CArrow> arrows;
    std::vector<std::array<int, 4>> ramifications;

    size_t size() const { return vertices.size(); }
    VarId label_of(int id) const;
    DimVec full_type() const;
    DimVec subset_type(std::uint64_t mask) const;

    std::string to_json() const;
    std::string to_graphviz() const;
};

// Snake-shaped coefficient quiver Q(s,n) with vertices 0..s(2n-2)+n,
// subspace orientation labels.
CoeffQuiver build_snake(int s, int n);

// Chain of k glued 3-vertex blocks for the rank-2 tube of D~4 in subspace
// orientation, alternating the (a,c) and (b,d) blocks, starting with (a,c).
CoeffQuiver build_rank2_chain(int k);

// The same glueing for any of the three arm pairings of D~4 and either
// quasi-socle.  pairing: 0 = (a,c)|(b,d), 1 = (a,d)|(b,c), 2 = (a,b)|(c,d);
// start_half selects which half seeds the chain.
CoeffQuiver build_tube_chain(int pairing, int start_half, int k);

// Finds (pairing, start_half, k) with the full type of the chain equal to
// beta; the inverse of build_tube_chain on types.
std::optional<std::array<int, 3>> match_tube_chain_type(const DimVec& beta);

// Enumerates admissible subsets in binary counting order on vertex ids.
void for_each_admissible(const CoeffQuiver& g,
                         const std::function<void(std::uint64_t mask, const DimVec& type)>& fn);

std::uint64_t count_admissible(const CoeffQuiver& g);

// Generating function sum over admissible subsets of x^type.
LaurentPoly gen_function(const CoeffQuiver& g);

// Generating function of admissible subsets of Q(s,n) computed purely
// symbolically row by row, never by enumeration.
LaurentPoly snake_recursion(int s, int n);

// f_k of the rank-2 tube glueing recursion for D~4, f_{-1}=0, f_0=1.
LaurentPoly tube_recursion_rank2(int k);

// H(x,y,z) = 1 + x + xy + xz + xyz
LaurentPoly h_block(VarId x, VarId y, VarId z);

}  // namespace dnq
