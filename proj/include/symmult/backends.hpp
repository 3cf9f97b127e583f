#pragma once

#include <Eigen/Dense>
#include <map>
#include <vector>

#include "symmult/characters.hpp"
#include "symmult/errors.hpp"
#include "symmult/partition.hpp"
#include "symmult/permutation.hpp"
#include "symmult/wreath.hpp"
#include "symmult/yor.hpp"

namespace symmult {

/// Adjacent transpositions of each block of S_mu, embedded in S_n.
inline std::vector<Perm> young_subgroup_generators(const Composition& mu) {
    const int n = mu.n();
    std::vector<Perm> gens;
    int off = 0;
    for (int part : mu.parts()) {
        for (int i = 0; i + 1 < part; ++i)
            gens.push_back(adjacent_transposition(n, off + i));
        off += part;
    }
    return gens;
}

/// Representation matrices of every element of a Cayley enumeration,
/// chained with one multiply per element.
inline std::vector<Eigen::MatrixXd> chained_rep_matrices(const OrthogonalRep& rep,
                                                         const CayleyEnumeration& cay,
                                                         const std::vector<Perm>& generators) {
    std::vector<Eigen::MatrixXd> gen_mats;
    gen_mats.reserve(generators.size());
    for (const Perm& g : generators) gen_mats.push_back(rep.matrix(g));
    std::vector<Eigen::MatrixXd> mats(cay.elements.size());
    mats[0] = Eigen::MatrixXd::Identity(rep.dim(), rep.dim());
    for (std::size_t i = 1; i < cay.elements.size(); ++i)
        mats[i] = gen_mats[cay.gen[i]] * mats[cay.parent[i]];
    return mats;
}

/// Kostka number as the isotypic projector multiplicity of the trivial
/// label in the restriction of the nu-irrep matrices to S_mu.
inline BigInt kostka_via_projector(const Partition& nu, const Composition& mu,
                                   std::size_t order_cap = kDefaultGroupOrderCap) {
    if (nu.n() != mu.n()) throw DomainError("kostka_via_projector: |nu| != |mu|");
    BigInt order = 1;
    for (int p : mu.parts()) order *= factorial(p);
    if (order > order_cap) throw SizeLimitError("kostka_via_projector: group order cap");
    OrthogonalRep rep(nu);
    std::vector<Perm> gens = young_subgroup_generators(mu);
    CayleyEnumeration cay = enumerate_subgroup(nu.n(), gens, order_cap);
    std::vector<Eigen::MatrixXd> mats = chained_rep_matrices(rep, cay, gens);
    std::vector<double> ones(mats.size(), 1.0);
    return isotypic_projector_multiplicity(mats, ones, 1, order_cap);
}

/// LR coefficient as a projector multiplicity over S_a x S_b.
inline BigInt lr_via_projector(const Partition& nu, const Partition& lambda,
                               const Partition& mu,
                               std::size_t order_cap = kDefaultGroupOrderCap) {
    const int a = lambda.n();
    const int b = mu.n();
    if (nu.n() != a + b) throw DomainError("lr_via_projector: |nu| != |lambda| + |mu|");
    if (factorial(a) * factorial(b) > order_cap)
        throw SizeLimitError("lr_via_projector: group order cap");
    OrthogonalRep rep(nu);
    Composition blocks{a, b};
    std::vector<Perm> gens = young_subgroup_generators(blocks);
    CayleyEnumeration cay = enumerate_subgroup(nu.n(), gens, order_cap);
    std::vector<Eigen::MatrixXd> mats = chained_rep_matrices(rep, cay, gens);

    CharacterCache ca, cb;
    std::map<std::pair<Partition, Partition>, double> by_class;
    std::vector<double> chars(mats.size());
    for (std::size_t i = 0; i < mats.size(); ++i) {
        const Perm& g = cay.elements[i];
        Perm left(g.begin(), g.begin() + a);
        Perm right(b);
        for (int j = 0; j < b; ++j) right[j] = g[a + j] - a;
        auto key = std::make_pair(cycle_type(left), cycle_type(right));
        auto it = by_class.find(key);
        if (it == by_class.end()) {
            double v = static_cast<double>(character(lambda, key.first, &ca)) *
                       static_cast<double>(character(mu, key.second, &cb));
            it = by_class.emplace(key, v).first;
        }
        chars[i] = it->second;
    }
    const int d_label =
        static_cast<int>((dim_irrep(lambda) * dim_irrep(mu)).convert_to<long long>());
    return isotypic_projector_multiplicity(mats, chars, d_label, order_cap);
}

/// Kronecker coefficient from floating-point Young-orthogonal traces: the
/// projector trace collapses to a class sum of products of irrep traces,
/// evaluated at one representative per class. Independent of the exact
/// Murnaghan-Nakayama route.
inline BigInt kronecker_via_yor_traces(const Partition& lambda, const Partition& mu,
                                       const Partition& nu,
                                       std::size_t order_cap = kDefaultGroupOrderCap) {
    const int n = lambda.n();
    if (mu.n() != n || nu.n() != n) throw DomainError("kronecker_via_yor_traces: sizes differ");
    if (factorial(n) > order_cap)
        throw SizeLimitError("kronecker_via_yor_traces: group order cap");
    OrthogonalRep rl(lambda), rm(mu), rn(nu);
    double sum = 0;
    for (const CycleType& cls : conjugacy_classes(n)) {
        Perm rep = class_representative(n, cls.cycles);
        sum += static_cast<double>(cls.class_size) * rl.matrix(rep).trace() *
               rm.matrix(rep).trace() * rn.matrix(rep).trace();
    }
    double value = sum / static_cast<double>(factorial(n));
    double rounded = std::round(value);
    if (std::abs(value - rounded) > 1e-6)
        throw NumericalFailure("kronecker_via_yor_traces: sum not near an integer");
    return BigInt(static_cast<long long>(rounded));
}

/// Plethysm coefficient with the S_n side evaluated as Young-orthogonal
/// traces of the embedded wreath elements instead of exact characters.
inline BigInt plethysm_via_yor_traces(const Partition& nu, const Partition& lambda,
                                      const Partition& mu,
                                      std::size_t order_cap = kDefaultGroupOrderCap) {
    const int c = lambda.n();
    const int d = mu.n();
    if (nu.n() != c * d) throw DomainError("plethysm_via_yor_traces: |nu| != |lambda| * |mu|");
    OrthogonalRep rep_nu(nu);
    OrthogonalRep rep_l(lambda), rep_m(mu);
    std::map<Partition, double> trace_by_type;
    double sum = 0;
    std::size_t order = 0;
    for (const WreathElement& w : wreath_elements(c, d, order_cap)) {
        ++order;
        Perm embedded = wreath_embed(c, d, w);
        Partition type = cycle_type(embedded);
        auto it = trace_by_type.find(type);
        if (it == trace_by_type.end())
            it = trace_by_type.emplace(type, rep_nu.matrix(embedded).trace()).first;
        sum += it->second * wreath_character(rep_l, rep_m, w);
    }
    double value = sum / static_cast<double>(order);
    double rounded = std::round(value);
    if (std::abs(value - rounded) > 1e-6)
        throw NumericalFailure("plethysm_via_yor_traces: sum not near an integer");
    return BigInt(static_cast<long long>(rounded));
}

} // namespace symmult
