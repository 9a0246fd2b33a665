#include "brep/seminormal.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace brep {

namespace {

// swap the cells of v and v+1; returns false if the result is not standard
bool swap_entries(StandardTableau& t, int v) {
    auto [r1, c1] = t.position_of(v);
    auto [r2, c2] = t.position_of(v + 1);
    if (r1 == r2 || c1 == c2) return false;  // same row or column
    std::swap(t.rows[r1][c1], t.rows[r2][c2]);
    return true;
}

}  // namespace

SeminormalRep::SeminormalRep(Partition shape) : shape_(std::move(shape)) {
    if (!shape_.valid()) throw std::invalid_argument("SeminormalRep: invalid shape");
    basis_ = standard_tableaux(shape_);
    dim_ = static_cast<int>(basis_.size());
    int m = shape_.weight();

    std::map<std::vector<std::vector<int>>, int> index;
    for (int i = 0; i < dim_; ++i) index[basis_[i].rows] = i;

    for (int s = 1; s <= m - 1; ++s) {
        RatMatrix mat(dim_, std::vector<Rational>(dim_, 0));
        for (int i = 0; i < dim_; ++i) {
            const StandardTableau& t = basis_[i];
            int d = t.content_of(s + 1) - t.content_of(s);
            Rational r = Rational(1) / d;
            StandardTableau swapped = t;
            if (!swap_entries(swapped, s)) {
                mat[i][i] = r;  // +1 same row, -1 same column
                continue;
            }
            int j = index.at(swapped.rows);
            mat[i][i] = r;
            // the pair member with s above s+1 couples with coefficient 1,
            // the other with 1 - 1/d^2
            auto [rs, cs] = t.position_of(s);
            auto [rs1, cs1] = t.position_of(s + 1);
            if (rs < rs1)
                mat[j][i] = 1;
            else
                mat[j][i] = 1 - r * r;
        }
        gens_.push_back(std::move(mat));
    }
}

const RatMatrix& SeminormalRep::generator(int s) const {
    if (s < 1 || s > static_cast<int>(gens_.size()))
        throw std::invalid_argument("SeminormalRep: generator index out of range");
    return gens_[s - 1];
}

RatMatrix SeminormalRep::perm_image(const Perm& p) const {
    if (p.size() != shape_.weight())
        throw std::invalid_argument("SeminormalRep: permutation size mismatch");
    // sort the image list by adjacent swaps: recording swap positions
    // s_1..s_k gives p = t_{s_k} * ... * t_{s_1}
    std::vector<int> v = p.img;
    RatMatrix out = rat_identity(dim_);
    bool moved = true;
    while (moved) {
        moved = false;
        for (int i = 0; i + 1 < static_cast<int>(v.size()); ++i) {
            if (v[i] > v[i + 1]) {
                std::swap(v[i], v[i + 1]);
                out = rat_mul(gens_[i], out);
                moved = true;
            }
        }
    }
    return out;
}

YoungSubgroupRep::YoungSubgroupRep(Partition lambda, std::vector<Partition> mus)
    : lambda_(std::move(lambda)), mus_(std::move(mus)) {
    if (mus_.size() != lambda_.parts.size())
        throw std::invalid_argument("YoungSubgroupRep: one mu per part required");
    int pos = 0;
    dim_ = 1;
    for (std::size_t i = 0; i < mus_.size(); ++i) {
        if (mus_[i].weight() != lambda_.parts[i])
            throw std::invalid_argument("YoungSubgroupRep: mu_i must partition lambda_i");
        block_start_.push_back(pos);
        pos += lambda_.parts[i];
        factors_.emplace_back(mus_[i]);
        dim_ *= factors_.back().dim();
    }
}

bool YoungSubgroupRep::in_young_subgroup(const Perm& p) const {
    if (p.size() != lambda_.weight()) return false;
    for (std::size_t i = 0; i < mus_.size(); ++i) {
        int lo = block_start_[i], hi = lo + lambda_.parts[i];
        for (int j = lo; j < hi; ++j)
            if (p.img[j] < lo || p.img[j] >= hi) return false;
    }
    return true;
}

std::vector<Perm> YoungSubgroupRep::block_perms(const Perm& p) const {
    if (!in_young_subgroup(p))
        throw std::invalid_argument("YoungSubgroupRep: permutation not in S_lambda");
    std::vector<Perm> out;
    for (std::size_t i = 0; i < mus_.size(); ++i) {
        int lo = block_start_[i];
        std::vector<int> img(lambda_.parts[i]);
        for (int j = 0; j < lambda_.parts[i]; ++j) img[j] = p.img[lo + j] - lo;
        out.emplace_back(std::move(img));
    }
    return out;
}

RatMatrix YoungSubgroupRep::image(const Perm& p) const {
    std::vector<Perm> blocks = block_perms(p);
    RatMatrix out{{1}};
    for (std::size_t i = 0; i < factors_.size(); ++i)
        out = rat_kron(out, factors_[i].perm_image(blocks[i]));
    return out;
}

Rational YoungSubgroupRep::trace(const Perm& p) const {
    std::vector<Perm> blocks = block_perms(p);
    Rational t = 1;
    for (std::size_t i = 0; i < factors_.size(); ++i)
        t *= rat_trace(factors_[i].perm_image(blocks[i]));
    return t;
}

}  // namespace brep
