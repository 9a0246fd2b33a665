#pragma once

#include <cstdint>
#include <vector>

#include "brep/rational.hpp"

namespace brep {

// Weakly decreasing list of positive integers.
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    explicit Partition(std::vector<int> p) : parts(std::move(p)) {}

    int weight() const;
    int length() const { return static_cast<int>(parts.size()); }
    bool valid() const;

    bool operator==(const Partition&) const = default;
    bool operator<(const Partition& o) const { return parts < o.parts; }
};

// A Young diagram of the given shape filled by 1..n, rows and columns
// strictly increasing.
struct StandardTableau {
    Partition shape;
    std::vector<std::vector<int>> rows;

    // row/column (0-based) of the cell holding value v.
    std::pair<int, int> position_of(int v) const;
    // content = column - row.
    int content_of(int v) const;
    bool operator==(const StandardTableau&) const = default;
};

// All partitions of n in lexicographically decreasing order,
// e.g. 3 -> (3),(2,1),(1,1,1).
std::vector<Partition> partitions_of(int n);

std::int64_t partition_count(int n);

// All standard tableaux of the shape, in last-letter order: tableaux are
// compared at the largest entry whose cell differs, lower row first.
std::vector<StandardTableau> standard_tableaux(const Partition& shape);

// Hook-length formula.
std::int64_t irrep_dimension(const Partition& shape);

// Monomial symmetric function m_lambda evaluated at q ones:
// 0 if length > q, else q! / ((q-l)! * prod over distinct part values v
// of (multiplicity of v)!).
std::int64_t monomial_at_ones(const Partition& lambda, int q);

}  // namespace brep
