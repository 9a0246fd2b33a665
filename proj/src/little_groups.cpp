#include "brep/little_groups.hpp"

#include <algorithm>
#include <stdexcept>

namespace brep {

namespace {

void transversal_rec(const std::vector<int>& block_sizes, std::size_t bi,
                     std::vector<int>& remaining, std::vector<int>& img,
                     std::vector<Perm>& out) {
    if (bi == block_sizes.size()) {
        out.emplace_back(img);
        return;
    }
    int k = block_sizes[bi];
    // choose which k of the remaining values this block maps to, in
    // increasing order within the block
    int m = static_cast<int>(remaining.size());
    std::vector<int> sel(k);
    auto choose = [&](auto&& self, int start, int depth) -> void {
        if (depth == k) {
            std::vector<int> rest;
            std::vector<bool> used(m, false);
            for (int idx : sel) used[idx] = true;
            for (int i = 0; i < m; ++i)
                if (!used[i]) rest.push_back(remaining[i]);
            std::size_t base = img.size();
            for (int idx : sel) img.push_back(remaining[idx]);
            std::vector<int> saved = std::move(remaining);
            remaining = std::move(rest);
            transversal_rec(block_sizes, bi + 1, remaining, img, out);
            remaining = std::move(saved);
            img.resize(base);
            return;
        }
        for (int i = start; i < m; ++i) {
            sel[depth] = i;
            self(self, i + 1, depth + 1);
        }
    };
    choose(choose, 0, 0);
}

}  // namespace

std::vector<Perm> coset_transversal(const Partition& lambda, int n) {
    if (lambda.weight() != n)
        throw std::invalid_argument("coset_transversal: lambda must partition n");
    std::vector<int> remaining(n);
    for (int i = 0; i < n; ++i) remaining[i] = i;
    std::vector<int> img;
    std::vector<Perm> out;
    transversal_rec(lambda.parts, 0, remaining, img, out);
    std::sort(out.begin(), out.end());
    return out;
}

Irrep::Irrep(const BraidQuotient& group, IrrepLabel label)
    : group_(&group), label_(std::move(label)) {
    int n = group.n(), q = group.q();
    if (q % 2 == 0) throw UnsupportedCase("q must be odd");
    if (label_.lambda.weight() != n || static_cast<int>(label_.b.size()) != n)
        throw std::invalid_argument("Irrep: label does not match (n, q)");
    if (form_to_partition(label_.b, q) != label_.lambda)
        throw std::invalid_argument("Irrep: b does not lie over lambda");
    inner_ = std::make_shared<YoungSubgroupRep>(label_.lambda, label_.mus);
    transversal_ = coset_transversal(label_.lambda, n);
    // left coset r*S_lambda is canonicalized by sorting the image values
    // on each block
    auto canonical = [&](const Perm& u) {
        std::vector<int> v = u.img;
        int pos = 0;
        for (int part : label_.lambda.parts) {
            std::sort(v.begin() + pos, v.begin() + pos + part);
            pos += part;
        }
        return v;
    };
    for (std::size_t i = 0; i < transversal_.size(); ++i)
        coset_lookup_[canonical(transversal_[i])] = static_cast<int>(i);
    dim_ = static_cast<int>(transversal_.size()) * inner_->dim();
}

int Irrep::coset_index(const Perm& u) const {
    std::vector<int> v = u.img;
    int pos = 0;
    for (int part : label_.lambda.parts) {
        std::sort(v.begin() + pos, v.begin() + pos + part);
        pos += part;
    }
    return coset_lookup_.at(v);
}

CycNum Irrep::extend_character(const GroupElement& d) const {
    if (!inner_->in_young_subgroup(d.s))
        throw std::invalid_argument("extend_character: element not in D_lambda");
    return chi_eval(group_->q(), label_.b, d.a);
}

CycMatrix Irrep::evaluate(const GroupElement& g) const {
    int q = group_->q();
    int bd = inner_->dim();
    int nb = static_cast<int>(transversal_.size());
    CycMatrix out(dim_, std::vector<CycNum>(dim_, CycNum::zero(q)));
    for (int j = 0; j < nb; ++j) {
        Perm u = g.s * transversal_[j];
        int i = coset_index(u);
        Perm ri_inv = transversal_[i].inverse();
        Perm sigma = ri_inv * u;
        CycNum scalar = chi_eval(q, label_.b, act(ri_inv, g.a));
        RatMatrix inner = inner_->image(sigma);
        for (int r = 0; r < bd; ++r)
            for (int c = 0; c < bd; ++c) {
                if (inner[r][c] == 0) continue;
                CycNum v = CycNum::from_rational(q, inner[r][c]) * scalar;
                out[i * bd + r][j * bd + c] = std::move(v);
            }
    }
    return out;
}

CycNum Irrep::character(const GroupElement& g) const {
    int q = group_->q();
    CycNum t = CycNum::zero(q);
    int nb = static_cast<int>(transversal_.size());
    for (int i = 0; i < nb; ++i) {
        Perm u = g.s * transversal_[i];
        if (coset_index(u) != i) continue;
        Perm ri_inv = transversal_[i].inverse();
        CycNum scalar = chi_eval(q, label_.b, act(ri_inv, g.a));
        t += scalar * CycNum::from_rational(q, inner_->trace(ri_inv * u));
    }
    return t;
}

std::vector<IrrepLabel> enumerate_labels(int n, int q, std::int64_t cap) {
    if (q % 2 == 0) throw UnsupportedCase("q must be odd");
    std::vector<OrbitRepresentative> orbits = enumerate_orbits(n, q, cap);
    std::vector<IrrepLabel> labels;
    for (const auto& orbit : orbits) {
        // all tuples (mu_1, mu_2, ...) with mu_i |- lambda_i, in lexicographic
        // product order
        std::vector<std::vector<Partition>> choices;
        for (int part : orbit.lambda.parts) choices.push_back(partitions_of(part));
        std::vector<std::size_t> idx(choices.size(), 0);
        while (true) {
            IrrepLabel label;
            label.lambda = orbit.lambda;
            label.b = orbit.b;
            for (std::size_t i = 0; i < choices.size(); ++i)
                label.mus.push_back(choices[i][idx[i]]);
            labels.push_back(std::move(label));
            std::size_t k = choices.size();
            while (k > 0) {
                --k;
                if (++idx[k] < choices[k].size()) break;
                idx[k] = 0;
                if (k == 0) goto done;
            }
            if (choices.empty()) break;
        }
    done:;
    }
    return labels;
}

std::vector<Irrep> enumerate_irreps(const BraidQuotient& group) {
    std::vector<Irrep> out;
    for (auto& label : enumerate_labels(group.n(), group.q()))
        out.emplace_back(group, std::move(label));
    return out;
}

}  // namespace brep
