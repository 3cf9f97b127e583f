#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "symmult/errors.hpp"
#include "symmult/numeric.hpp"
#include "symmult/partition.hpp"
#include "symmult/tableau.hpp"

namespace symmult {

inline constexpr int kDefaultTableCap = 20;
inline constexpr int kDefaultQueryCap = 30;

/// Memo for the Murnaghan-Nakayama recursion, keyed by
/// (irrep label, remaining cycle multiset). One cache per table build or
/// per bulk computation; do not share across threads mid-fill.
class CharacterCache {
public:
    using Key = std::pair<std::vector<int>, std::vector<int>>;
    std::map<Key, BigInt> memo;
};

namespace detail {

// First-column hook encoding: beta[i] = lambda[i] + (L-1-i), strictly
// decreasing. Removing a border strip of size t replaces some beta by
// beta - t; the strip height is the number of betas jumped over.
inline BigInt mn_recurse(const std::vector<int>& lambda, const std::vector<int>& cycles,
                         std::size_t cycle_idx, CharacterCache& cache) {
    if (cycle_idx == cycles.size()) return 1; // empty shape left by construction
    CharacterCache::Key key{lambda,
                            std::vector<int>(cycles.begin() + cycle_idx, cycles.end())};
    auto it = cache.memo.find(key);
    if (it != cache.memo.end()) return it->second;

    const int t = cycles[cycle_idx];
    const int L = static_cast<int>(lambda.size());
    std::vector<int> beta(L);
    for (int i = 0; i < L; ++i) beta[i] = lambda[i] + (L - 1 - i);

    BigInt total = 0;
    for (int i = 0; i < L; ++i) {
        int target = beta[i] - t;
        if (target < 0) continue;
        bool occupied = false;
        int height = 0;
        for (int j = 0; j < L; ++j) {
            if (j == i) continue;
            if (beta[j] == target) occupied = true;
            if (beta[j] > target && beta[j] < beta[i]) ++height;
        }
        if (occupied) continue;
        std::vector<int> nbeta = beta;
        nbeta[i] = target;
        std::sort(nbeta.begin(), nbeta.end(), std::greater<int>());
        std::vector<int> nlambda(L);
        for (int j = 0; j < L; ++j) nlambda[j] = nbeta[j] - (L - 1 - j);
        while (!nlambda.empty() && nlambda.back() == 0) nlambda.pop_back();
        BigInt sub = mn_recurse(nlambda, cycles, cycle_idx + 1, cache);
        total += (height % 2 == 0) ? sub : -sub;
    }
    cache.memo.emplace(std::move(key), total);
    return total;
}

} // namespace detail

/// Exact character chi^lambda(gamma) by the Murnaghan-Nakayama rule.
inline BigInt character(const Partition& lambda, const Partition& cycles,
                        CharacterCache* cache = nullptr, int cap = kDefaultQueryCap) {
    if (lambda.n() != cycles.n()) throw DomainError("character: |lambda| != |cycles|");
    if (lambda.n() > cap) throw SizeLimitError("character: n exceeds cap");
    CharacterCache local;
    return detail::mn_recurse(lambda.parts(), cycles.parts(), 0,
                              cache ? *cache : local);
}

/// Full character table of S_n: one row per irrep, columns in canonical
/// class order (conjugacy_classes(n)).
class CharacterTable {
public:
    explicit CharacterTable(int n, int cap = kDefaultTableCap) : n_(n) {
        if (n > cap) throw SizeLimitError("CharacterTable: n exceeds cap");
        classes_ = conjugacy_classes(n);
        labels_ = partitions_of(n);
        CharacterCache cache;
        for (const Partition& lambda : labels_) {
            std::vector<BigInt> row;
            row.reserve(classes_.size());
            for (const CycleType& cls : classes_)
                row.push_back(character(lambda, cls.cycles, &cache, n));
            rows_.emplace(lambda, std::move(row));
        }
    }

    int n() const { return n_; }
    const std::vector<CycleType>& classes() const { return classes_; }
    const std::vector<Partition>& labels() const { return labels_; }
    const std::vector<BigInt>& row(const Partition& lambda) const {
        auto it = rows_.find(lambda);
        if (it == rows_.end()) throw DomainError("CharacterTable: unknown label");
        return it->second;
    }

private:
    int n_;
    std::vector<CycleType> classes_;
    std::vector<Partition> labels_;
    std::map<Partition, std::vector<BigInt>> rows_;
};

/// Kronecker coefficient g_{lambda,mu,nu} by the class-weighted character
/// sum; the division by n! must be exact.
inline BigInt kronecker(const Partition& lambda, const Partition& mu, const Partition& nu,
                        CharacterCache* cache = nullptr, int cap = kDefaultQueryCap) {
    const int n = lambda.n();
    if (mu.n() != n || nu.n() != n) throw DomainError("kronecker: sizes differ");
    if (n > cap) throw SizeLimitError("kronecker: n exceeds cap");
    CharacterCache local;
    CharacterCache& c = cache ? *cache : local;
    BigInt sum = 0;
    for (const CycleType& cls : conjugacy_classes(n))
        sum += cls.class_size * character(lambda, cls.cycles, &c, cap) *
               character(mu, cls.cycles, &c, cap) * character(nu, cls.cycles, &c, cap);
    const BigInt nf = factorial(n);
    if (sum % nf != 0) throw NumericalFailure("kronecker: character sum not divisible by n!");
    return sum / nf;
}

inline BigInt kronecker(const Partition& lambda, const Partition& mu, const Partition& nu,
                        const CharacterTable& table) {
    const int n = table.n();
    if (lambda.n() != n || mu.n() != n || nu.n() != n)
        throw DomainError("kronecker: sizes differ");
    const auto& cl = table.classes();
    const auto& a = table.row(lambda);
    const auto& b = table.row(mu);
    const auto& c = table.row(nu);
    BigInt sum = 0;
    for (std::size_t i = 0; i < cl.size(); ++i)
        sum += cl[i].class_size * a[i] * b[i] * c[i];
    const BigInt nf = factorial(n);
    if (sum % nf != 0) throw NumericalFailure("kronecker: character sum not divisible by n!");
    return sum / nf;
}

namespace detail {

/// Conjugacy class of a Young subgroup S_mu: one cycle type per factor.
struct YoungClass {
    std::vector<Partition> factors;
    Partition embedded; // multiset union of the factor cycle types
    BigInt size;
};

inline std::vector<YoungClass> young_classes(const Composition& mu) {
    std::vector<std::vector<CycleType>> per_factor;
    per_factor.reserve(mu.length());
    for (int part : mu.parts()) per_factor.push_back(conjugacy_classes(part));

    std::vector<YoungClass> out;
    std::vector<std::size_t> idx(mu.length(), 0);
    while (true) {
        YoungClass yc;
        yc.size = 1;
        std::vector<int> merged;
        for (int i = 0; i < mu.length(); ++i) {
            const CycleType& ct = per_factor[i][idx[i]];
            yc.factors.push_back(ct.cycles);
            yc.size *= ct.class_size;
            for (int len : ct.cycles.parts()) merged.push_back(len);
        }
        yc.embedded = Partition::sorted_from(std::move(merged));
        out.push_back(std::move(yc));
        int pos = mu.length() - 1;
        while (pos >= 0 && ++idx[pos] == per_factor[pos].size()) idx[pos--] = 0;
        if (pos < 0) break;
    }
    return out;
}

} // namespace detail

/// Multiplicity of the S_mu-irrep (alpha_1 x ... x alpha_k) in the
/// restriction of the S_n-irrep nu to the Young subgroup S_mu. Classes of
/// S_mu are tuples of factor cycle types; their embedded cycle type in S_n
/// is the sorted concatenation.
inline BigInt restriction_multiplicity(const Partition& nu, const Composition& mu,
                                       const std::vector<Partition>& alpha,
                                       CharacterCache* cache = nullptr,
                                       int cap = kDefaultQueryCap) {
    if (nu.n() != mu.n()) throw DomainError("restriction_multiplicity: |nu| != |mu|");
    if (static_cast<int>(alpha.size()) != mu.length())
        throw DomainError("restriction_multiplicity: one alpha per factor required");
    for (int i = 0; i < mu.length(); ++i)
        if (alpha[i].n() != mu[i])
            throw DomainError("restriction_multiplicity: alpha_i must partition mu_i");

    CharacterCache local;
    CharacterCache& c = cache ? *cache : local;
    std::map<std::vector<int>, CharacterCache> factor_caches; // keyed by factor label
    BigInt sum = 0;
    BigInt order = 1;
    for (int part : mu.parts()) order *= factorial(part);
    for (const detail::YoungClass& cls : detail::young_classes(mu)) {
        BigInt term = cls.size * character(nu, cls.embedded, &c, cap);
        for (int i = 0; i < mu.length(); ++i)
            term *= character(alpha[i], cls.factors[i],
                              &factor_caches[alpha[i].parts()], cap);
        sum += term;
    }
    if (sum % order != 0)
        throw NumericalFailure("restriction_multiplicity: inexact division");
    return sum / order;
}

/// Littlewood-Richardson coefficient through the character backend:
/// restriction of nu to S_a x S_b against lambda (x) mu.
inline BigInt lr_via_characters(const Partition& nu, const Partition& lambda,
                                const Partition& mu, CharacterCache* cache = nullptr,
                                int cap = kDefaultQueryCap) {
    if (nu.n() != lambda.n() + mu.n())
        throw DomainError("lr_via_characters: |nu| != |lambda| + |mu|");
    std::vector<int> blocks;
    std::vector<Partition> alpha;
    if (lambda.n() > 0) {
        blocks.push_back(lambda.n());
        alpha.push_back(lambda);
    }
    if (mu.n() > 0) {
        blocks.push_back(mu.n());
        alpha.push_back(mu);
    }
    if (blocks.empty()) return 1;
    return restriction_multiplicity(nu, Composition(blocks), alpha, cache, cap);
}

/// Kostka number through the character backend: trivial label in each factor.
inline BigInt kostka_via_characters(const Partition& nu, const Composition& mu,
                                    CharacterCache* cache = nullptr,
                                    int cap = kDefaultQueryCap) {
    std::vector<Partition> alpha;
    alpha.reserve(mu.length());
    for (int part : mu.parts()) alpha.push_back(Partition{part});
    return restriction_multiplicity(nu, mu, alpha, cache, cap);
}

} // namespace symmult
