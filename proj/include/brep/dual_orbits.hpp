#pragma once

#include <vector>

#include "brep/cyclotomic.hpp"
#include "brep/group.hpp"
#include "brep/partitions.hpp"

namespace brep {

// Dual vector b in ((Z/q)^n)*, labels the character x -> eps^(b.x).
using LinearForm = std::vector<int>;

// eps^(sum b_i x_i mod q)
CycNum chi_eval(int q, const LinearForm& b, const std::vector<int>& x);

// contragredient action: component i = b[p^-1(i)]
LinearForm coact(const Perm& p, const LinearForm& b);

// multiset of nonzero value-multiplicities of b, sorted decreasing
Partition form_to_partition(const LinearForm& b, int q);

// Canonical orbit representative: value classes sorted by (multiplicity
// descending, value ascending), laid out as contiguous blocks; the
// stabilizer in S_n is then exactly the block Young subgroup.
struct OrbitRepresentative {
    Partition lambda;
    LinearForm b;
    std::vector<std::pair<int, int>> blocks;  // (value, length), left to right
};

// One representative per S_n-orbit on (Z/q)^n forms, grouped by lambda in
// canonical partition order, fibers sorted by b lexicographically.
std::vector<OrbitRepresentative> enumerate_orbits(int n, int q,
                                                  std::int64_t cap = 1'000'000);

// true iff the stabilizer of rep.b in S_n is exactly the block Young
// subgroup S_lambda (brute force over S_n)
bool stabilizer_check(const OrbitRepresentative& rep);

// canonical representative of the orbit containing b
OrbitRepresentative canonical_representative(const LinearForm& b, int q);

}  // namespace brep
