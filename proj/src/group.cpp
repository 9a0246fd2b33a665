#include "brep/group.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace brep {

Perm::Perm(std::vector<int> images) : img(std::move(images)) {
    std::vector<bool> seen(img.size(), false);
    for (int v : img) {
        if (v < 0 || v >= size() || seen[v])
            throw std::invalid_argument("Perm: image list is not a bijection");
        seen[v] = true;
    }
}

Perm Perm::identity(int n) {
    Perm p;
    p.img.resize(n);
    std::iota(p.img.begin(), p.img.end(), 0);
    return p;
}

Perm Perm::transposition(int n, int s) {
    if (s < 0 || s + 1 >= n) throw std::invalid_argument("transposition index out of range");
    Perm p = identity(n);
    std::swap(p.img[s], p.img[s + 1]);
    return p;
}

Perm Perm::operator*(const Perm& o) const {
    if (size() != o.size()) throw std::invalid_argument("Perm: size mismatch");
    Perm r;
    r.img.resize(size());
    for (int i = 0; i < size(); ++i) r.img[i] = img[o.img[i]];
    return r;
}

Perm Perm::inverse() const {
    Perm r;
    r.img.resize(size());
    for (int i = 0; i < size(); ++i) r.img[img[i]] = i;
    return r;
}

bool Perm::is_identity() const {
    for (int i = 0; i < size(); ++i)
        if (img[i] != i) return false;
    return true;
}

std::int64_t Perm::rank() const {
    int n = size();
    std::int64_t r = 0;
    std::int64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    for (int i = 0; i < n; ++i) {
        f /= (n - i);
        int smaller = 0;
        for (int j = i + 1; j < n; ++j)
            if (img[j] < img[i]) ++smaller;
        r += smaller * f;
    }
    return r;
}

std::vector<Perm> all_perms(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 0);
    std::vector<Perm> out;
    do {
        Perm p;
        p.img = v;
        out.push_back(std::move(p));
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

std::vector<int> act(const Perm& p, const std::vector<int>& x) {
    if (p.size() != static_cast<int>(x.size()))
        throw std::invalid_argument("act: size mismatch");
    std::vector<int> y(x.size());
    for (int i = 0; i < p.size(); ++i) y[p.img[i]] = x[i];
    return y;
}

BraidQuotient::BraidQuotient(int n, int q, std::int64_t cap)
    : n_(n), q_(q), cap_(cap) {
    if (n < 1 || q < 1) throw std::invalid_argument("BraidQuotient: n, q must be >= 1");
    qn_ = 1;
    for (int i = 0; i < n; ++i) {
        qn_ *= q;
        if (qn_ > cap_) throw CapExceeded();
    }
    order_ = qn_;
    for (int i = 2; i <= n; ++i) {
        order_ *= i;
        if (order_ > cap_) throw CapExceeded();
    }
}

void BraidQuotient::check_cap() const {
    if (order_ > cap_) throw CapExceeded();
}

GroupElement BraidQuotient::identity() const {
    return {std::vector<int>(n_, 0), Perm::identity(n_)};
}

GroupElement BraidQuotient::multiply(const GroupElement& g, const GroupElement& h) const {
    if (static_cast<int>(g.a.size()) != n_ || static_cast<int>(h.a.size()) != n_)
        throw std::invalid_argument("multiply: element size mismatch");
    std::vector<int> a = act(g.s, h.a);
    for (int i = 0; i < n_; ++i) a[i] = (a[i] + g.a[i]) % q_;
    return {std::move(a), g.s * h.s};
}

GroupElement BraidQuotient::inverse(const GroupElement& g) const {
    Perm si = g.s.inverse();
    std::vector<int> a = act(si, g.a);
    for (int i = 0; i < n_; ++i) a[i] = (q_ - a[i]) % q_;
    return {std::move(a), std::move(si)};
}

std::int64_t BraidQuotient::index_of(const GroupElement& g) const {
    std::int64_t code = 0;
    for (int i = n_ - 1; i >= 0; --i) code = code * q_ + g.a[i];
    return g.s.rank() * qn_ + code;
}

GroupElement BraidQuotient::element_at(std::int64_t idx) const {
    std::int64_t code = idx % qn_;
    std::int64_t prank = idx / qn_;
    std::vector<int> a(n_);
    for (int i = 0; i < n_; ++i) {
        a[i] = static_cast<int>(code % q_);
        code /= q_;
    }
    // unrank the permutation (inverse Lehmer code)
    std::vector<int> pool(n_);
    std::iota(pool.begin(), pool.end(), 0);
    std::int64_t f = 1;
    for (int i = 2; i <= n_; ++i) f *= i;
    Perm s;
    s.img.resize(n_);
    for (int i = 0; i < n_; ++i) {
        f /= (n_ - i);
        int d = static_cast<int>(prank / f);
        prank %= f;
        s.img[i] = pool[d];
        pool.erase(pool.begin() + d);
    }
    return {std::move(a), std::move(s)};
}

std::vector<GroupElement> BraidQuotient::enumerate() const {
    check_cap();
    std::vector<GroupElement> out;
    out.reserve(order_);
    for (std::int64_t i = 0; i < order_; ++i) out.push_back(element_at(i));
    return out;
}

std::vector<ConjClass> BraidQuotient::conjugacy_classes() const {
    check_cap();
    // conjugating by a generating set closes each class
    std::vector<GroupElement> gens;
    for (int i = 0; i < n_; ++i) {
        std::vector<int> a(n_, 0);
        a[i] = 1 % q_;
        gens.push_back({a, Perm::identity(n_)});
    }
    for (int s = 0; s + 1 < n_; ++s)
        gens.push_back({std::vector<int>(n_, 0), Perm::transposition(n_, s)});

    std::vector<bool> seen(order_, false);
    std::vector<ConjClass> classes;
    for (std::int64_t start = 0; start < order_; ++start) {
        if (seen[start]) continue;
        ConjClass cls;
        cls.rep = element_at(start);
        std::queue<GroupElement> todo;
        todo.push(cls.rep);
        seen[start] = true;
        while (!todo.empty()) {
            GroupElement x = todo.front();
            todo.pop();
            cls.members.push_back(x);
            for (const auto& g : gens) {
                GroupElement y = multiply(multiply(g, x), inverse(g));
                std::int64_t yi = index_of(y);
                if (!seen[yi]) {
                    seen[yi] = true;
                    todo.push(std::move(y));
                }
            }
        }
        cls.size = static_cast<std::int64_t>(cls.members.size());
        classes.push_back(std::move(cls));
    }
    return classes;
}

GroupElement BraidQuotient::braid_generator_image(int s) const {
    if (s < 1 || s > n_ - 1)
        throw std::invalid_argument("braid generator index out of range");
    std::vector<int> a(n_, 0);
    a[s - 1] = 1 % q_;
    return {std::move(a), Perm::transposition(n_, s - 1)};
}

GroupElement BraidQuotient::braid_word_eval(const std::vector<int>& word) const {
    GroupElement g = identity();
    for (int t : word) {
        if (t == 0) throw std::invalid_argument("braid word: zero index");
        GroupElement gen = braid_generator_image(std::abs(t));
        if (t < 0) gen = inverse(gen);
        g = multiply(g, gen);
    }
    return g;
}

std::int64_t BraidQuotient::generated_subgroup_order() const {
    check_cap();
    if (n_ < 2) return 1;
    std::vector<GroupElement> gens;
    for (int s = 1; s <= n_ - 1; ++s) {
        gens.push_back(braid_generator_image(s));
        gens.push_back(inverse(gens.back()));
    }
    std::vector<bool> seen(order_, false);
    std::queue<GroupElement> todo;
    GroupElement e = identity();
    seen[index_of(e)] = true;
    todo.push(e);
    std::int64_t count = 0;
    while (!todo.empty()) {
        GroupElement x = todo.front();
        todo.pop();
        ++count;
        for (const auto& g : gens) {
            GroupElement y = multiply(x, g);
            std::int64_t yi = index_of(y);
            if (!seen[yi]) {
                seen[yi] = true;
                todo.push(std::move(y));
            }
        }
    }
    return count;
}

}  // namespace brep
