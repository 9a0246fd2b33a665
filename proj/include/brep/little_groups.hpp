#pragma once

#include <map>
#include <memory>
#include <vector>

#include "brep/cyclotomic.hpp"
#include "brep/dual_orbits.hpp"
#include "brep/group.hpp"
#include "brep/partitions.hpp"
#include "brep/seminormal.hpp"

namespace brep {

class UnsupportedCase : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// Names one irreducible representation of B_n(q): the orbit partition
// lambda, the canonical form b of the orbit, and one partition mu_i of
// each part lambda_i.
struct IrrepLabel {
    Partition lambda;
    LinearForm b;
    std::vector<Partition> mus;

    bool operator==(const IrrepLabel&) const = default;
};

// Minimal-length left-coset representatives of the block Young subgroup
// S_lambda in S_n: the permutations increasing on each block, sorted by
// image list. Count = n! / prod lambda_i!.
std::vector<Perm> coset_transversal(const Partition& lambda, int n);

// A constructed irreducible representation: evaluation produces the
// induced block-monomial matrix over Q(eps_q).
class Irrep {
  public:
    Irrep(const BraidQuotient& group, IrrepLabel label);

    const IrrepLabel& label() const { return label_; }
    int dim() const { return dim_; }
    const std::vector<Perm>& transversal() const { return transversal_; }
    const YoungSubgroupRep& inner() const { return *inner_; }

    // chi_b(a) for d = (a, s) with s in S_lambda; throws on s outside
    CycNum extend_character(const GroupElement& d) const;

    // block (i,j) = extend_character(d) * inner image of proj(d) when
    // d = r_i^-1 g r_j lands in D_lambda, zero otherwise
    CycMatrix evaluate(const GroupElement& g) const;

    // trace of evaluate(g), touching diagonal blocks only
    CycNum character(const GroupElement& g) const;

  private:
    int coset_index(const Perm& u) const;

    const BraidQuotient* group_;
    IrrepLabel label_;
    std::shared_ptr<YoungSubgroupRep> inner_;
    std::vector<Perm> transversal_;
    std::map<std::vector<int>, int> coset_lookup_;  // canonicalized image -> index
    int dim_;
};

// The complete inventory for B_n(q), q odd: for each lambda in P_{<=q;n},
// each orbit-fiber member, each tuple of partitions mu_i.
std::vector<Irrep> enumerate_irreps(const BraidQuotient& group);

std::vector<IrrepLabel> enumerate_labels(int n, int q, std::int64_t cap = 1'000'000);

}  // namespace brep
