#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "brep/cyclotomic.hpp"
#include "brep/group.hpp"
#include "brep/little_groups.hpp"

namespace brep {

enum class Threading { Serial, Parallel };

// Character table of B_n(q): one row per constructed irrep, one column
// per conjugacy class; first column is the identity class.
struct CharacterTable {
    int n, q;
    std::vector<ConjClass> classes;
    std::vector<IrrepLabel> labels;
    std::vector<int> dims;
    std::vector<std::vector<CycNum>> rows;  // rows[i][c] = trace at class c
};

// trace of each class representative under the irrep
std::vector<CycNum> character_of(const Irrep& irrep,
                                 const std::vector<ConjClass>& classes);

// The Parallel path is the OpenMP kernel; Serial is the reference it is
// checked against.
CharacterTable compute_character_table(const BraidQuotient& group,
                                       Threading threading = Threading::Parallel);

// (1/|G|) * sum over classes of size * chi1 * conj(chi2), exact
CycNum inner_product(const std::vector<CycNum>& chi1, const std::vector<CycNum>& chi2,
                     const std::vector<ConjClass>& classes, std::int64_t group_order,
                     int q);

// irrep-count formula: sum over partitions lambda of n of
// p(lambda_1) p(lambda_2) ... m_lambda(1 x q)
std::int64_t count_formula(int n, int q);

struct VerifyReport {
    int n = 0, q = 0;
    std::int64_t group_order = 0;
    std::int64_t irrep_count = 0;
    std::int64_t class_count = 0;
    std::int64_t formula_count = 0;
    std::map<int, std::int64_t> dimension_census;  // dim -> multiplicity
    std::string census_identity;                   // e.g. "6x1^2+...=162=3^3*3!"
    bool counts_match = false;
    bool sum_dim_squares_ok = false;
    bool norms_ok = false;
    bool orthogonality_ok = false;
    bool homomorphism_ok = false;
    bool braid_relations_ok = false;
    std::vector<std::string> failures;

    bool passed() const;
};

// The full battery: counting formula vs enumeration vs conjugacy classes,
// sum of squared dimensions, exact character norms and orthogonality,
// homomorphism spot-checks, braid relations of the generator images.
VerifyReport verify(int n, int q, std::int64_t cap = 1'000'000,
                    Threading threading = Threading::Parallel);

}  // namespace brep
