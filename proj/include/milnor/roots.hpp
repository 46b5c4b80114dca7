#pragma once

#include <optional>
#include <vector>

#include "milnor/interval.hpp"
#include "milnor/unipoly.hpp"

namespace milnor {

/// Certified isolating box for one complex root: the square
/// [cre - radius, cre + radius] x [cim - radius, cim + radius] contains exactly
/// one root of its squarefree defining factor.
struct RootBox {
    Rat cre, cim;
    Rat radius;
    int multiplicity = 1;
    int defining_factor = 0;  // index into AlgebraicValueSet::defining.factors

    ComplexBox box() const {
        return ComplexBox(RatInterval(cre - radius, cre + radius),
                          RatInterval(cim - radius, cim + radius));
    }
};

/// A finite subset of C represented exactly: squarefree defining factors
/// (pairwise coprime) plus one certified box per distinct root.
struct AlgebraicValueSet {
    Var variable = Var::s;
    SquarefreeDecomposition defining;
    std::vector<RootBox> boxes;
    int cardinality = 0;

    bool empty() const { return boxes.empty(); }
};

/// Certified complex root isolation of a rational-coefficient polynomial.
/// One box per distinct root, radius <= precision, boxes pairwise disjoint,
/// multiplicities from the squarefree decomposition.
AlgebraicValueSet isolate(const UniPoly& p, const Rat& precision);

/// Isolation for a pre-split list of squarefree, pairwise-coprime factors
/// (multiplicities as given). Box.defining_factor indexes this list.
AlgebraicValueSet isolate_clusters(const std::vector<std::pair<UniPoly, int>>& factors,
                                   Var variable, const Rat& precision);

/// Same roots at radius <= precision; every new box lies inside its
/// predecessor (box-root bijection preserved).
AlgebraicValueSet refine(const AlgebraicValueSet& set, const Rat& precision);

/// Matching between two refinable value sets. A pair is matched when
/// refinement certifies a strict mutual nearest neighbour; leftovers are
/// reported, ambiguity flags the whole result inconclusive (never guessed).
struct MatchResult {
    std::vector<std::pair<int, int>> matched;
    std::vector<int> unmatched_a, unmatched_b;
    bool conclusive = true;
};
MatchResult match_values(const AlgebraicValueSet& a, const AlgebraicValueSet& b,
                         int refine_budget = 48);

/// Default working precision of reports: 2^-53 as an exact rational.
Rat default_precision();

}  // namespace milnor
