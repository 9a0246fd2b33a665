#include "brep/dual_orbits.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace brep {

CycNum chi_eval(int q, const LinearForm& b, const std::vector<int>& x) {
    if (b.size() != x.size()) throw std::invalid_argument("chi_eval: size mismatch");
    long e = 0;
    for (std::size_t i = 0; i < b.size(); ++i) e = (e + static_cast<long>(b[i]) * x[i]) % q;
    return CycNum::root_power(q, e);
}

LinearForm coact(const Perm& p, const LinearForm& b) { return act(p, b); }

Partition form_to_partition(const LinearForm& b, int q) {
    std::map<int, int> mult;
    for (int v : b) {
        if (v < 0 || v >= q) throw std::invalid_argument("form_to_partition: residue out of range");
        ++mult[v];
    }
    std::vector<int> parts;
    for (auto& [v, m] : mult) parts.push_back(m);
    std::sort(parts.rbegin(), parts.rend());
    return Partition(parts);
}

OrbitRepresentative canonical_representative(const LinearForm& b, int q) {
    std::map<int, int> mult;
    for (int v : b) ++mult[v];
    // (multiplicity descending, value ascending)
    std::vector<std::pair<int, int>> classes;  // (value, mult)
    for (auto& [v, m] : mult) classes.push_back({v, m});
    std::stable_sort(classes.begin(), classes.end(),
                     [](const auto& a, const auto& c) { return a.second > c.second; });
    OrbitRepresentative rep;
    rep.blocks = classes;
    for (auto& [v, m] : classes) {
        rep.lambda.parts.push_back(m);
        for (int i = 0; i < m; ++i) rep.b.push_back(v);
    }
    return rep;
}

std::vector<OrbitRepresentative> enumerate_orbits(int n, int q, std::int64_t cap) {
    std::int64_t qn = 1;
    for (int i = 0; i < n; ++i) {
        qn *= q;
        if (qn > cap) throw CapExceeded();
    }
    std::vector<Perm> perms = all_perms(n);
    std::vector<bool> seen(qn, false);
    auto code_of = [&](const LinearForm& b) {
        std::int64_t c = 0;
        for (int i = n - 1; i >= 0; --i) c = c * q + b[i];
        return c;
    };
    std::vector<OrbitRepresentative> reps;
    for (std::int64_t code = 0; code < qn; ++code) {
        if (seen[code]) continue;
        LinearForm b(n);
        std::int64_t c = code;
        for (int i = 0; i < n; ++i) {
            b[i] = static_cast<int>(c % q);
            c /= q;
        }
        for (const Perm& p : perms) seen[code_of(coact(p, b))] = true;
        reps.push_back(canonical_representative(b, q));
    }
    // group by lambda in canonical partition order, then sort fibers by b
    std::vector<Partition> order = partitions_of(n);
    auto pos = [&](const Partition& l) {
        return std::find(order.begin(), order.end(), l) - order.begin();
    };
    std::sort(reps.begin(), reps.end(), [&](const OrbitRepresentative& a,
                                            const OrbitRepresentative& c) {
        auto pa = pos(a.lambda), pc = pos(c.lambda);
        if (pa != pc) return pa < pc;
        return a.b < c.b;
    });
    return reps;
}

bool stabilizer_check(const OrbitRepresentative& rep) {
    int n = static_cast<int>(rep.b.size());
    // block membership array: block_id[i] for the canonical layout
    std::vector<int> block_id(n);
    int pos = 0, id = 0;
    for (auto& [v, len] : rep.blocks) {
        for (int i = 0; i < len; ++i) block_id[pos++] = id;
        ++id;
    }
    if (pos != n) return false;
    for (const Perm& p : all_perms(n)) {
        bool stabilizes = coact(p, rep.b) == rep.b;
        bool in_young = true;
        for (int i = 0; i < n; ++i)
            if (block_id[p.img[i]] != block_id[i]) {
                in_young = false;
                break;
            }
        if (stabilizes != in_young) return false;
    }
    return true;
}

}  // namespace brep
