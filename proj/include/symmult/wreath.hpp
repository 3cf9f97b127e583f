#pragma once

#include <Eigen/Dense>
#include <vector>

#include "symmult/characters.hpp"
#include "symmult/errors.hpp"
#include "symmult/numeric.hpp"
#include "symmult/partition.hpp"
#include "symmult/permutation.hpp"
#include "symmult/yor.hpp"

namespace symmult {

inline constexpr std::size_t kDefaultGroupOrderCap = 10000;

/// Element of S_c wr S_d: d base permutations in S_c and a top permutation
/// in S_d shuffling the copies.
struct WreathElement {
    std::vector<Perm> base;
    Perm top;

    bool operator==(const WreathElement& o) const { return base == o.base && top == o.top; }
};

/// Irrep label (lambda |- c, mu |- d) for the wreath irrep r^lambda wr r^mu
/// on (S^lambda)^(tensor d) (x) S^mu. Wreath products have further irreps
/// (induced from proper base subgroups); only this family is modelled.
struct WreathIrrepLabel {
    Partition lambda;
    Partition mu;
};

inline BigInt wreath_order(int c, int d) {
    BigInt o = 1;
    const BigInt cf = factorial(c);
    for (int i = 0; i < d; ++i) o *= cf;
    return o * factorial(d);
}

/// Semidirect-product law: the top factor permutes the base copies,
/// (g', s') o (g, s) = (m -> g'_m o g_{s'^-1(m)}, s' o s).
inline WreathElement wreath_compose(const WreathElement& a, const WreathElement& b) {
    const int d = static_cast<int>(a.top.size());
    WreathElement r;
    r.top = compose(a.top, b.top);
    Perm inv_top = inverse(a.top);
    r.base.resize(d);
    for (int m = 0; m < d; ++m) r.base[m] = compose(a.base[m], b.base[inv_top[m]]);
    return r;
}

inline WreathElement wreath_identity(int c, int d) {
    WreathElement e;
    e.base.assign(d, identity_perm(c));
    e.top = identity_perm(d);
    return e;
}

/// (g,s)^-1 = (k -> g_{s(k)}^-1, s^-1).
inline WreathElement wreath_inverse(const WreathElement& w) {
    const int d = static_cast<int>(w.top.size());
    WreathElement r;
    r.top = inverse(w.top);
    r.base.resize(d);
    for (int k = 0; k < d; ++k) r.base[k] = inverse(w.base[w.top[k]]);
    return r;
}

/// Every element of S_c wr S_d exactly once: base tuples iterate as an
/// odometer over lexicographic S_c, then the top permutation advances.
inline std::vector<WreathElement> wreath_elements(int c, int d,
                                                  std::size_t order_cap = kDefaultGroupOrderCap) {
    if (wreath_order(c, d) > order_cap)
        throw SizeLimitError("wreath_elements: group order cap exceeded");
    const std::vector<Perm> sc = all_perms(c);
    const std::vector<Perm> sd = all_perms(d);
    std::vector<WreathElement> out;
    for (const Perm& top : sd) {
        std::vector<std::size_t> idx(d, 0);
        while (true) {
            WreathElement w;
            w.top = top;
            for (int i = 0; i < d; ++i) w.base.push_back(sc[idx[i]]);
            out.push_back(std::move(w));
            int pos = d - 1;
            while (pos >= 0 && ++idx[pos] == sc.size()) idx[pos--] = 0;
            if (pos < 0) break;
        }
    }
    return out;
}

/// Injective homomorphism S_c wr S_d -> S_{cd}. Point (i,j) of [c]x[d] is
/// flattened as j*c + i (0-based) and maps to (base[top(j)](i), top(j)).
inline Perm wreath_embed(int c, int d, const WreathElement& w) {
    Perm p(static_cast<std::size_t>(c) * d);
    for (int j = 0; j < d; ++j) {
        const int nj = w.top[j];
        for (int i = 0; i < c; ++i) p[j * c + i] = nj * c + w.base[nj][i];
    }
    return p;
}

/// Explicit matrix of w on (S^lambda)^(tensor d) (x) S^mu: the base acts
/// factorwise, the top permutes tensor factors and acts on S^mu.
/// Basis index = ((i_1,...,i_d), i_mu) with i_1 slowest.
inline Eigen::MatrixXd wreath_matrix(const OrthogonalRep& rep_lambda,
                                     const OrthogonalRep& rep_mu, const WreathElement& w) {
    const int d = static_cast<int>(w.top.size());
    const int dl = rep_lambda.dim();
    const int dm = rep_mu.dim();
    long tensor_dim = 1;
    for (int i = 0; i < d; ++i) tensor_dim *= dl;

    std::vector<Eigen::MatrixXd> base_mats;
    base_mats.reserve(d);
    for (int i = 0; i < d; ++i) base_mats.push_back(rep_lambda.matrix(w.base[i]));
    Eigen::MatrixXd mu_mat = rep_mu.matrix(w.top);

    const Perm top_inv = inverse(w.top);
    std::vector<int> digits(d);
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(tensor_dim * dm, tensor_dim * dm);
    for (long col = 0; col < tensor_dim; ++col) {
        long rest = col;
        for (int t = d - 1; t >= 0; --t) {
            digits[t] = static_cast<int>(rest % dl);
            rest /= dl;
        }
        // column (j_1..j_d): the top factor routes j_t to slot top(t), then
        // the base acts factorwise; accumulate the product column.
        for (long row = 0; row < tensor_dim; ++row) {
            long rrest = row;
            double coeff = 1.0;
            for (int t = d - 1; t >= 0; --t) {
                int it = static_cast<int>(rrest % dl);
                rrest /= dl;
                coeff *= base_mats[t](it, digits[top_inv[t]]);
                if (coeff == 0.0) break;
            }
            if (coeff == 0.0) continue;
            for (int a = 0; a < dm; ++a)
                for (int b = 0; b < dm; ++b)
                    m(row * dm + a, col * dm + b) = coeff * mu_mat(a, b);
        }
    }
    return m;
}

/// Trace of the wreath irrep matrix at w.
inline double wreath_character(const OrthogonalRep& rep_lambda, const OrthogonalRep& rep_mu,
                               const WreathElement& w) {
    return wreath_matrix(rep_lambda, rep_mu, w).trace();
}

/// Plethysm coefficient a^nu_{lambda,mu}: multiplicity of the wreath irrep
/// (lambda, mu) in the restriction of the S_n irrep nu to S_c wr S_d,
/// cd = n. Exact characters on the S_n side, orthogonal matrices on the
/// wreath side; the class-averaged sum must land within 1e-6 of an integer.
inline BigInt plethysm(const Partition& nu, const Partition& lambda, const Partition& mu,
                       CharacterCache* cache = nullptr,
                       std::size_t order_cap = kDefaultGroupOrderCap) {
    const int c = lambda.n();
    const int d = mu.n();
    if (nu.n() != c * d) throw DomainError("plethysm: |nu| != |lambda| * |mu|");

    OrthogonalRep rep_lambda(lambda);
    OrthogonalRep rep_mu(mu);
    CharacterCache local;
    CharacterCache& cc = cache ? *cache : local;
    std::map<Partition, BigInt> chi_nu; // by embedded cycle type

    double sum = 0.0;
    std::size_t order = 0;
    for (const WreathElement& w : wreath_elements(c, d, order_cap)) {
        ++order;
        Partition type = cycle_type(wreath_embed(c, d, w));
        auto it = chi_nu.find(type);
        if (it == chi_nu.end())
            it = chi_nu.emplace(type, character(nu, type, &cc)).first;
        sum += static_cast<double>(it->second) * wreath_character(rep_lambda, rep_mu, w);
    }
    double value = sum / static_cast<double>(order);
    double rounded = std::round(value);
    if (std::abs(value - rounded) > 1e-6)
        throw NumericalFailure("plethysm: class sum not near an integer");
    return BigInt(static_cast<long long>(rounded));
}

} // namespace symmult
