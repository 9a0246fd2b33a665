#pragma once

#include <vector>

#include "brep/group.hpp"
#include "brep/partitions.hpp"
#include "brep/rational.hpp"

namespace brep {

// Young's seminormal form of the irreducible S_m-representation of the
// given shape: exact rational matrices in the standard-tableau basis
// (last-letter order), generators given by axial-distance formulas.
class SeminormalRep {
  public:
    explicit SeminormalRep(Partition shape);

    const Partition& shape() const { return shape_; }
    int dim() const { return dim_; }
    const std::vector<StandardTableau>& basis() const { return basis_; }

    // image of the adjacent transposition (s, s+1), s in [1, m-1]
    const RatMatrix& generator(int s) const;

    // image of an arbitrary permutation of m letters, via any adjacent
    // transposition decomposition
    RatMatrix perm_image(const Perm& p) const;

  private:
    Partition shape_;
    int dim_;
    std::vector<StandardTableau> basis_;
    std::vector<RatMatrix> gens_;
};

// Outer tensor product [mu_1] x [mu_2] x ... over the block Young
// subgroup S_lambda.
class YoungSubgroupRep {
  public:
    YoungSubgroupRep(Partition lambda, std::vector<Partition> mus);

    const Partition& lambda() const { return lambda_; }
    const std::vector<Partition>& mus() const { return mus_; }
    int dim() const { return dim_; }

    bool in_young_subgroup(const Perm& p) const;

    // Kronecker product of per-block images, factor order = block order;
    // throws std::invalid_argument if p is not in S_lambda
    RatMatrix image(const Perm& p) const;

    // product of per-block character values; same membership gate
    Rational trace(const Perm& p) const;

  private:
    std::vector<Perm> block_perms(const Perm& p) const;

    Partition lambda_;
    std::vector<Partition> mus_;
    std::vector<SeminormalRep> factors_;
    std::vector<int> block_start_;
    int dim_;
};

}  // namespace brep
