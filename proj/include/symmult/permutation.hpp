#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "symmult/errors.hpp"
#include "symmult/partition.hpp"

namespace symmult {

/// Permutation of {0,...,n-1} in one-line notation: p[i] is the image of i.
using Perm = std::vector<int>;

inline Perm identity_perm(int n) {
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

/// (a o b)(x) = a(b(x)); b acts first.
inline Perm compose(const Perm& a, const Perm& b) {
    Perm r(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = a[b[i]];
    return r;
}

inline Perm inverse(const Perm& p) {
    Perm r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
    return r;
}

/// Adjacent transposition (i, i+1) as an element of S_n.
inline Perm adjacent_transposition(int n, int i) {
    Perm p = identity_perm(n);
    std::swap(p[i], p[i + 1]);
    return p;
}

inline Partition cycle_type(const Perm& p) {
    std::vector<int> lengths;
    std::vector<char> seen(p.size(), 0);
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (std::size_t j = i; !seen[j]; j = p[j]) {
            seen[j] = 1;
            ++len;
        }
        lengths.push_back(len);
    }
    return Partition::sorted_from(std::move(lengths));
}

/// A canonical representative of the class with the given cycle lengths:
/// consecutive cycles (0 1 ... l1-1)(l1 ...)...
inline Perm class_representative(int n, const Partition& cycles) {
    if (cycles.n() != n) throw DomainError("class_representative: size mismatch");
    Perm p(n);
    int base = 0;
    for (int len : cycles.parts()) {
        for (int k = 0; k < len; ++k) p[base + k] = base + (k + 1) % len;
        base += len;
    }
    return p;
}

/// All n! permutations in lexicographic one-line order.
inline std::vector<Perm> all_perms(int n) {
    std::vector<Perm> out;
    Perm p = identity_perm(n);
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

/// Rank of p in lexicographic order (factorial number system).
inline std::size_t lex_rank(const Perm& p) {
    const int n = static_cast<int>(p.size());
    std::size_t rank = 0;
    for (int i = 0; i < n; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < n; ++j)
            if (p[j] < p[i]) ++smaller;
        std::size_t f = 1;
        for (int k = 2; k <= n - 1 - i; ++k) f *= k;
        rank += smaller * f;
    }
    return rank;
}

/// Word w with p = s_{w[0]} o s_{w[1]} o ... o s_{w.back()}, each s_i the
/// adjacent transposition (i, i+1). Empty word for the identity.
inline std::vector<int> adjacent_word(const Perm& p) {
    Perm w = p;
    std::vector<int> swaps;
    bool moved = true;
    while (moved) {
        moved = false;
        for (std::size_t i = 0; i + 1 < w.size(); ++i) {
            if (w[i] > w[i + 1]) {
                std::swap(w[i], w[i + 1]);
                swaps.push_back(static_cast<int>(i));
                moved = true;
            }
        }
    }
    // p o s_{a1} o ... o s_{ak} = e, hence p = s_{ak} o ... o s_{a1}.
    std::reverse(swaps.begin(), swaps.end());
    return swaps;
}

/// Breadth-first enumeration of the subgroup generated by `generators`,
/// remembering one Cayley-graph edge per element so representation
/// matrices can be chained with a single multiply each.
struct CayleyEnumeration {
    std::vector<Perm> elements; // elements[0] is the identity
    std::vector<int> parent;    // elements[i] = generators[gen[i]] o elements[parent[i]]
    std::vector<int> gen;
};

inline CayleyEnumeration enumerate_subgroup(int n, const std::vector<Perm>& generators,
                                            std::size_t order_cap = 100000) {
    CayleyEnumeration cay;
    std::map<Perm, int> index;
    cay.elements.push_back(identity_perm(n));
    cay.parent.push_back(-1);
    cay.gen.push_back(-1);
    index[cay.elements[0]] = 0;
    for (std::size_t head = 0; head < cay.elements.size(); ++head) {
        for (std::size_t g = 0; g < generators.size(); ++g) {
            Perm next = compose(generators[g], cay.elements[head]);
            if (index.emplace(next, static_cast<int>(cay.elements.size())).second) {
                cay.elements.push_back(std::move(next));
                cay.parent.push_back(static_cast<int>(head));
                cay.gen.push_back(static_cast<int>(g));
                if (cay.elements.size() > order_cap)
                    throw SizeLimitError("enumerate_subgroup: order cap exceeded");
            }
        }
    }
    return cay;
}

} // namespace symmult
