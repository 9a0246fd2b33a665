#include "brep/verification.hpp"

#include <random>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace brep {

std::vector<CycNum> character_of(const Irrep& irrep,
                                 const std::vector<ConjClass>& classes) {
    std::vector<CycNum> out;
    out.reserve(classes.size());
    for (const auto& cls : classes) out.push_back(irrep.character(cls.rep));
    return out;
}

CharacterTable compute_character_table(const BraidQuotient& group, Threading threading) {
    CharacterTable table;
    table.n = group.n();
    table.q = group.q();
    table.classes = group.conjugacy_classes();
    std::vector<Irrep> irreps = enumerate_irreps(group);
    for (const auto& irr : irreps) {
        table.labels.push_back(irr.label());
        table.dims.push_back(irr.dim());
    }
    int ni = static_cast<int>(irreps.size());
    table.rows.resize(ni);
    if (threading == Threading::Parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < ni; ++i)
            table.rows[i] = character_of(irreps[i], table.classes);
    } else {
        for (int i = 0; i < ni; ++i)
            table.rows[i] = character_of(irreps[i], table.classes);
    }
    return table;
}

CycNum inner_product(const std::vector<CycNum>& chi1, const std::vector<CycNum>& chi2,
                     const std::vector<ConjClass>& classes, std::int64_t group_order,
                     int q) {
    CycNum acc = CycNum::zero(q);
    for (std::size_t c = 0; c < classes.size(); ++c) {
        CycNum term = chi1[c] * chi2[c].conj();
        acc += term * CycNum::from_rational(q, classes[c].size);
    }
    return acc * CycNum::from_rational(q, Rational(1, group_order));
}

std::int64_t count_formula(int n, int q) {
    std::int64_t total = 0;
    for (const Partition& lambda : partitions_of(n)) {
        std::int64_t m = monomial_at_ones(lambda, q);
        if (m == 0) continue;
        std::int64_t p = 1;
        for (int part : lambda.parts) p *= partition_count(part);
        total += p * m;
    }
    return total;
}

bool VerifyReport::passed() const {
    return counts_match && sum_dim_squares_ok && norms_ok && orthogonality_ok &&
           homomorphism_ok && braid_relations_ok;
}

namespace {

std::string census_identity_string(const std::map<int, std::int64_t>& census, int n,
                                   int q, std::int64_t order) {
    std::ostringstream os;
    bool first = true;
    for (auto& [dim, count] : census) {
        if (!first) os << " + ";
        os << count << "x" << dim << "^2";
        first = false;
    }
    os << " = " << order << " = " << q << "^" << n << " * " << n << "!";
    return os.str();
}

}  // namespace

VerifyReport verify(int n, int q, std::int64_t cap, Threading threading) {
    if (q % 2 == 0) throw UnsupportedCase("q must be odd");
    VerifyReport rep;
    rep.n = n;
    rep.q = q;
    BraidQuotient group(n, q, cap);
    rep.group_order = group.order();

    CharacterTable table = compute_character_table(group, threading);
    rep.irrep_count = static_cast<std::int64_t>(table.labels.size());
    rep.class_count = static_cast<std::int64_t>(table.classes.size());
    rep.formula_count = count_formula(n, q);

    rep.counts_match = rep.irrep_count == rep.formula_count &&
                       rep.class_count == rep.formula_count;
    if (!rep.counts_match)
        rep.failures.push_back("irrep/class/formula counts disagree");

    std::int64_t sumsq = 0;
    for (int d : table.dims) {
        rep.dimension_census[d] += 1;
        sumsq += static_cast<std::int64_t>(d) * d;
    }
    rep.census_identity = census_identity_string(rep.dimension_census, n, q, rep.group_order);
    rep.sum_dim_squares_ok = sumsq == rep.group_order;
    if (!rep.sum_dim_squares_ok)
        rep.failures.push_back("sum of squared dimensions != group order");

    // exact orthonormality of the character rows
    int ni = static_cast<int>(table.rows.size());
    CycNum one = CycNum::one(q), zero = CycNum::zero(q);
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < ni; ++i)
        for (int j = i; j < ni; ++j) pairs.push_back({i, j});
    std::vector<char> pair_ok(pairs.size(), 1);
    auto check_pair = [&](std::size_t k) {
        auto [i, j] = pairs[k];
        CycNum ip = inner_product(table.rows[i], table.rows[j], table.classes,
                                  group.order(), q);
        pair_ok[k] = (i == j) ? (ip == one) : (ip == zero);
    };
    if (threading == Threading::Parallel) {
#pragma omp parallel for schedule(dynamic)
        for (std::int64_t k = 0; k < static_cast<std::int64_t>(pairs.size()); ++k)
            check_pair(static_cast<std::size_t>(k));
    } else {
        for (std::size_t k = 0; k < pairs.size(); ++k) check_pair(k);
    }
    rep.norms_ok = true;
    rep.orthogonality_ok = true;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        if (pair_ok[k]) continue;
        auto [i, j] = pairs[k];
        if (i == j) {
            rep.norms_ok = false;
            rep.failures.push_back("character norm != 1 at irrep " + std::to_string(i));
        } else {
            rep.orthogonality_ok = false;
            rep.failures.push_back("characters " + std::to_string(i) + "," +
                                   std::to_string(j) + " not orthogonal");
        }
    }

    // homomorphism spot-checks, fixed seed for reproducible reports
    std::mt19937 rng(12345);
    std::uniform_int_distribution<std::int64_t> pick(0, group.order() - 1);
    std::vector<Irrep> irreps = enumerate_irreps(group);
    rep.homomorphism_ok = true;
    for (const auto& irr : irreps) {
        for (int t = 0; t < 5; ++t) {
            GroupElement g = group.element_at(pick(rng));
            GroupElement h = group.element_at(pick(rng));
            if (!cyc_eq(cyc_mul(irr.evaluate(g), irr.evaluate(h)),
                        irr.evaluate(group.multiply(g, h)))) {
                rep.homomorphism_ok = false;
                rep.failures.push_back("homomorphism check failed");
                break;
            }
        }
        if (!rep.homomorphism_ok) break;
    }

    // braid and far-commutation relations of the generator images
    rep.braid_relations_ok = true;
    for (int s = 1; s + 1 <= n - 1; ++s) {
        GroupElement lhs = group.braid_word_eval({s, s + 1, s});
        GroupElement rhs = group.braid_word_eval({s + 1, s, s + 1});
        if (!(lhs == rhs)) rep.braid_relations_ok = false;
    }
    for (int s = 1; s <= n - 1; ++s)
        for (int r = s + 2; r <= n - 1; ++r) {
            GroupElement lhs = group.braid_word_eval({s, r});
            GroupElement rhs = group.braid_word_eval({r, s});
            if (!(lhs == rhs)) rep.braid_relations_ok = false;
        }
    if (!rep.braid_relations_ok)
        rep.failures.push_back("braid relations fail on generator images");

    return rep;
}

}  // namespace brep
