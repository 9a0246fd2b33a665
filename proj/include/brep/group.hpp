#pragma once

#include <cstdint>
#include <exception>
#include <vector>

namespace brep {

// Permutation of {0..n-1}, stored as the image list: img[i] = p(i).
// Composition is functional: (p*r)(i) = p(r(i)), so the right factor acts
// first. Every module uses this one convention.
struct Perm {
    std::vector<int> img;

    Perm() = default;
    explicit Perm(std::vector<int> images);

    static Perm identity(int n);
    // adjacent transposition swapping s and s+1, 0-based
    static Perm transposition(int n, int s);

    int size() const { return static_cast<int>(img.size()); }
    int operator()(int i) const { return img[i]; }
    Perm operator*(const Perm& o) const;
    Perm inverse() const;
    bool is_identity() const;

    // rank in lexicographic order of image lists (Lehmer code)
    std::int64_t rank() const;

    bool operator==(const Perm&) const = default;
    bool operator<(const Perm& o) const { return img < o.img; }
};

std::vector<Perm> all_perms(int n);  // lexicographic by image list

// y[i] = x[p^-1(i)] : the coordinate-permuting action on (Z/q)^n.
std::vector<int> act(const Perm& p, const std::vector<int>& x);

// Element (a, s) of (Z/q)^n x| S_n: translation part a, permutation s.
struct GroupElement {
    std::vector<int> a;
    Perm s;

    bool operator==(const GroupElement&) const = default;
};

struct ConjClass {
    GroupElement rep;
    std::int64_t size;
    std::vector<GroupElement> members;
};

class CapExceeded : public std::exception {
  public:
    const char* what() const noexcept override {
        return "group enumeration cap exceeded";
    }
};

// The finite braid quotient with parameters (n, q): arithmetic, full
// enumeration, conjugacy classes, and the braid-generator images.
class BraidQuotient {
  public:
    BraidQuotient(int n, int q, std::int64_t cap = 1'000'000);

    int n() const { return n_; }
    int q() const { return q_; }
    std::int64_t order() const { return order_; }

    GroupElement identity() const;
    GroupElement multiply(const GroupElement& g, const GroupElement& h) const;
    GroupElement inverse(const GroupElement& g) const;

    // dense index in [0, order): perm rank * q^n + base-q code of a
    std::int64_t index_of(const GroupElement& g) const;
    GroupElement element_at(std::int64_t idx) const;

    // all q^n * n! elements, ascending index order; throws CapExceeded
    std::vector<GroupElement> enumerate() const;

    std::vector<ConjClass> conjugacy_classes() const;

    // image of the s-th braid generator, s in [1, n-1]: (e_s, (s, s+1))
    GroupElement braid_generator_image(int s) const;

    // word = signed 1-based generator indices, negative for inverses
    GroupElement braid_word_eval(const std::vector<int>& word) const;

    // order of the subgroup generated by the braid-generator images
    std::int64_t generated_subgroup_order() const;

  private:
    void check_cap() const;

    int n_, q_;
    std::int64_t cap_;
    std::int64_t qn_;     // q^n
    std::int64_t order_;  // q^n * n!
};

}  // namespace brep
