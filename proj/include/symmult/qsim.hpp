#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "symmult/characters.hpp"
#include "symmult/errors.hpp"
#include "symmult/numeric.hpp"
#include "symmult/partition.hpp"
#include "symmult/wreath.hpp"

namespace symmult {

inline constexpr std::uint64_t kDefaultShotCap = 1000000000ULL;

/// Irrep label of any supported group: a single partition for S_n, a tuple
/// for Young subgroups and products, a (lambda, mu) pair for wreath
/// subgroups. `other` is the reserved residual label for the unmodelled
/// part of a wreath dual.
struct IrrepLabel {
    std::vector<Partition> parts;
    bool other = false;

    static IrrepLabel residual() {
        IrrepLabel l;
        l.other = true;
        return l;
    }

    bool operator==(const IrrepLabel& o) const { return other == o.other && parts == o.parts; }
    bool operator<(const IrrepLabel& o) const {
        if (other != o.other) return !other; // residual sorts last
        return std::lexicographical_compare(parts.begin(), parts.end(), o.parts.begin(),
                                            o.parts.end());
    }

    std::string to_string() const {
        if (other) return "other";
        if (parts.size() == 1) return parts[0].to_string();
        std::string s = "(";
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i) s += ',';
            s += parts[i].to_string();
        }
        return s + ")";
    }
};

/// A group from Table 1: a symmetric group, a Young subgroup, a two-block
/// product, a wreath product S_c wr S_d, or the square S_n x S_n. Young,
/// product and wreath specs carry the ambient S_n they embed into.
class GroupSpec {
public:
    enum class Kind { Symmetric, Young, Product, Wreath, DirectSquare };

    static GroupSpec symmetric(int n) {
        GroupSpec g;
        g.kind_ = Kind::Symmetric;
        g.n_ = n;
        return g;
    }
    static GroupSpec young(Composition mu) {
        GroupSpec g;
        g.kind_ = Kind::Young;
        g.n_ = mu.n();
        g.mu_ = std::move(mu);
        return g;
    }
    static GroupSpec product(int a, int b) {
        GroupSpec g;
        g.kind_ = Kind::Product;
        g.n_ = a + b;
        g.mu_ = Composition{a, b};
        return g;
    }
    static GroupSpec wreath(int c, int d) {
        GroupSpec g;
        g.kind_ = Kind::Wreath;
        g.n_ = c * d;
        g.c_ = c;
        g.d_ = d;
        return g;
    }
    static GroupSpec direct_square(int n) {
        GroupSpec g;
        g.kind_ = Kind::DirectSquare;
        g.n_ = n;
        return g;
    }

    Kind kind() const { return kind_; }
    int n() const { return n_; } // each factor's n for DirectSquare
    const Composition& mu() const { return mu_; }
    int wreath_c() const { return c_; }
    int wreath_d() const { return d_; }

    BigInt order() const {
        switch (kind_) {
            case Kind::Symmetric: return factorial(n_);
            case Kind::Young:
            case Kind::Product: {
                BigInt o = 1;
                for (int p : mu_.parts()) o *= factorial(p);
                return o;
            }
            case Kind::Wreath: return wreath_order(c_, d_);
            case Kind::DirectSquare: return factorial(n_) * factorial(n_);
        }
        return 0;
    }

    /// Modelled irrep labels in deterministic (canonical) order. For
    /// wreath groups this is only the r^lambda wr r^mu family.
    std::vector<IrrepLabel> irrep_labels() const {
        std::vector<IrrepLabel> out;
        switch (kind_) {
            case Kind::Symmetric:
                for (const Partition& p : partitions_of(n_)) out.push_back({{p}, false});
                break;
            case Kind::Young:
            case Kind::Product: {
                std::vector<std::vector<Partition>> per;
                for (int part : mu_.parts()) per.push_back(partitions_of(part));
                std::vector<std::size_t> idx(per.size(), 0);
                while (true) {
                    IrrepLabel l;
                    for (std::size_t i = 0; i < per.size(); ++i) l.parts.push_back(per[i][idx[i]]);
                    out.push_back(std::move(l));
                    int pos = static_cast<int>(per.size()) - 1;
                    while (pos >= 0 && ++idx[pos] == per[pos].size()) idx[pos--] = 0;
                    if (pos < 0) break;
                }
                break;
            }
            case Kind::Wreath:
                for (const Partition& l : partitions_of(c_))
                    for (const Partition& m : partitions_of(d_)) out.push_back({{l, m}, false});
                break;
            case Kind::DirectSquare:
                for (const Partition& l : partitions_of(n_))
                    for (const Partition& m : partitions_of(n_)) out.push_back({{l, m}, false});
                break;
        }
        return out;
    }

    BigInt label_dim(const IrrepLabel& label) const {
        if (label.other) throw DomainError("label_dim: residual label has no dimension");
        switch (kind_) {
            case Kind::Symmetric:
                return dim_irrep(label.parts.at(0));
            case Kind::Young:
            case Kind::Product: {
                BigInt d = 1;
                for (const Partition& p : label.parts) d *= dim_irrep(p);
                return d;
            }
            case Kind::Wreath: {
                BigInt dl = dim_irrep(label.parts.at(0));
                BigInt dm = dim_irrep(label.parts.at(1));
                BigInt d = dm;
                for (int i = 0; i < d_; ++i) d *= dl;
                return d;
            }
            case Kind::DirectSquare:
                return dim_irrep(label.parts.at(0)) * dim_irrep(label.parts.at(1));
        }
        return 0;
    }

    /// The all-trivial irrep label.
    IrrepLabel trivial_label() const {
        IrrepLabel l;
        switch (kind_) {
            case Kind::Symmetric: l.parts = {Partition{n_}}; break;
            case Kind::Young:
            case Kind::Product:
                for (int part : mu_.parts()) l.parts.push_back(Partition{part});
                break;
            case Kind::Wreath: l.parts = {Partition{c_}, Partition{d_}}; break;
            case Kind::DirectSquare: l.parts = {Partition{n_}, Partition{n_}}; break;
        }
        return l;
    }

private:
    Kind kind_ = Kind::Symmetric;
    int n_ = 0;
    Composition mu_;
    int c_ = 0, d_ = 0;
};

/// Supported (G, H) pairings (the rows of Table 1, plus H = G).
enum class Pairing {
    YoungInSymmetric,   // Kostka / Littlewood-Richardson
    WreathInSymmetric,  // Plethysm
    DiagonalInSquare,   // Kronecker
    SymmetricItself,    // H = G
};

inline Pairing resolve_pairing(const GroupSpec& G, const GroupSpec& H) {
    using K = GroupSpec::Kind;
    if (G.kind() == K::Symmetric &&
        (H.kind() == K::Young || H.kind() == K::Product) && G.n() == H.n())
        return Pairing::YoungInSymmetric;
    if (G.kind() == K::Symmetric && H.kind() == K::Wreath && G.n() == H.n())
        return Pairing::WreathInSymmetric;
    if (G.kind() == K::DirectSquare && H.kind() == K::Symmetric && G.n() == H.n())
        return Pairing::DiagonalInSquare;
    if (G.kind() == K::Symmetric && H.kind() == K::Symmetric && G.n() == H.n())
        return Pairing::SymmetricItself;
    throw UnsupportedPairing("no multiplicity backend for this group/subgroup pair");
}

/// Multiplicity of the H-irrep beta in the restriction of the G-irrep
/// alpha to H, through the exact backend for the pairing.
inline BigInt restriction_mult(const GroupSpec& G, const GroupSpec& H, const IrrepLabel& alpha,
                               const IrrepLabel& beta, CharacterCache* cache = nullptr) {
    if (beta.other) throw DomainError("restriction_mult: residual label");
    switch (resolve_pairing(G, H)) {
        case Pairing::YoungInSymmetric:
            return restriction_multiplicity(alpha.parts.at(0), H.mu(), beta.parts, cache);
        case Pairing::WreathInSymmetric:
            return plethysm(alpha.parts.at(0), beta.parts.at(0), beta.parts.at(1), cache);
        case Pairing::DiagonalInSquare:
            return kronecker(alpha.parts.at(0), alpha.parts.at(1), beta.parts.at(0), cache);
        case Pairing::SymmetricItself:
            return alpha == beta ? 1 : 0;
    }
    return 0;
}

/// Distribution over irrep labels with exact rational probabilities.
/// `residual` is the mass of unmodelled labels (nonzero only when
/// restricting to a wreath subgroup); entries + residual sum to 1.
struct ExactDistribution {
    std::map<IrrepLabel, Rational> entries;
    Rational residual = 0;

    Rational total() const {
        Rational t = residual;
        for (const auto& [l, p] : entries) t += p;
        return t;
    }
    Rational at(const IrrepLabel& l) const {
        auto it = entries.find(l);
        return it == entries.end() ? Rational(0) : it->second;
    }
};

/// Output distribution of the restriction algorithm:
/// p_alpha(beta) = mult(beta, alpha down) * d_beta / d_alpha.
inline ExactDistribution restriction_distribution(const GroupSpec& G, const GroupSpec& H,
                                                  const IrrepLabel& alpha,
                                                  CharacterCache* cache = nullptr) {
    resolve_pairing(G, H);
    ExactDistribution dist;
    const BigInt d_alpha = G.label_dim(alpha);
    Rational sum = 0;
    for (const IrrepLabel& beta : H.irrep_labels()) {
        BigInt m = restriction_mult(G, H, alpha, beta, cache);
        Rational p(m * H.label_dim(beta), d_alpha);
        sum += p;
        dist.entries.emplace(beta, std::move(p));
    }
    dist.residual = Rational(1) - sum;
    if (dist.residual < 0)
        throw NumericalFailure("restriction_distribution: negative residual");
    if (H.kind() != GroupSpec::Kind::Wreath && dist.residual != 0)
        throw NumericalFailure("restriction_distribution: mass leak on a fully modelled dual");
    return dist;
}

/// Output distribution of the induction algorithm:
/// p_beta(alpha) = (|H| d_alpha)/(|G| d_beta) * mult(alpha, beta up), the
/// multiplicity rewritten through Frobenius reciprocity as
/// mult(beta, alpha down).
inline ExactDistribution induction_distribution(const GroupSpec& H, const IrrepLabel& beta,
                                                const GroupSpec& G,
                                                CharacterCache* cache = nullptr) {
    resolve_pairing(G, H);
    ExactDistribution dist;
    const Rational scale(H.order() , G.order());
    const BigInt d_beta = H.label_dim(beta);
    for (const IrrepLabel& alpha : G.irrep_labels()) {
        BigInt m = restriction_mult(G, H, alpha, beta, cache);
        dist.entries.emplace(alpha, scale * Rational(G.label_dim(alpha), d_beta) * m);
    }
    if (dist.total() != 1)
        throw NumericalFailure("induction_distribution: probabilities do not sum to 1");
    return dist;
}

/// Weak Fourier sampling of the hidden subgroup state for H <= G:
/// p(alpha) = mult(trivial, alpha down) * d_alpha * |H| / |G|. Equals
/// induction_distribution at beta = trivial.
inline ExactDistribution hsp_distribution(const GroupSpec& G, const GroupSpec& H,
                                          CharacterCache* cache = nullptr) {
    resolve_pairing(G, H);
    ExactDistribution dist;
    const Rational scale(H.order(), G.order());
    const IrrepLabel triv = H.trivial_label();
    for (const IrrepLabel& alpha : G.irrep_labels()) {
        BigInt m = restriction_mult(G, H, alpha, triv, cache);
        dist.entries.emplace(alpha, scale * m * G.label_dim(alpha));
    }
    if (dist.total() != 1)
        throw NumericalFailure("hsp_distribution: probabilities do not sum to 1");
    return dist;
}

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Empirical counts from i.i.d. sampling of an ExactDistribution.
struct SampleCounts {
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;
    std::map<IrrepLabel, std::uint64_t> counts; // includes "other" if drawn
};

/// Draws `shots` i.i.d. samples. Sampling is exact up to the 2^-64
/// granularity of one uniform 64-bit word per draw. Shots are split into
/// fixed batches of 65536; batch b uses the generator
/// mt19937_64(splitmix64(seed + b)), so the result is identical no matter
/// how batches are scheduled across workers.
inline SampleCounts sample(const ExactDistribution& dist, std::uint64_t shots,
                           std::uint64_t seed, std::uint64_t shot_cap = kDefaultShotCap) {
    if (shots > shot_cap) throw SizeLimitError("sample: shots exceed cap");

    std::vector<IrrepLabel> labels;
    std::vector<unsigned __int128> thresholds; // floor(cumulative * 2^64)
    Rational cum = 0;
    const BigInt two64 = BigInt(1) << 64;
    for (const auto& [label, p] : dist.entries) {
        if (p == 0) continue;
        cum += p;
        labels.push_back(label);
        BigInt t = numerator(cum) * two64 / denominator(cum);
        thresholds.push_back(t >= two64 ? (static_cast<unsigned __int128>(1) << 64)
                                        : static_cast<unsigned __int128>(
                                              t.convert_to<std::uint64_t>()));
    }
    if (dist.residual > 0) {
        labels.push_back(IrrepLabel::residual());
        thresholds.push_back(static_cast<unsigned __int128>(1) << 64);
    }
    if (thresholds.empty()) throw DomainError("sample: empty distribution");
    thresholds.back() = static_cast<unsigned __int128>(1) << 64;

    SampleCounts rep;
    rep.shots = shots;
    rep.seed = seed;
    std::vector<std::uint64_t> tally(labels.size(), 0);
    constexpr std::uint64_t kBatch = 65536;
    const std::uint64_t batches = (shots + kBatch - 1) / kBatch;
    for (std::uint64_t b = 0; b < batches; ++b) {
        std::mt19937_64 rng(splitmix64(seed + b));
        const std::uint64_t in_batch = std::min(kBatch, shots - b * kBatch);
        for (std::uint64_t s = 0; s < in_batch; ++s) {
            unsigned __int128 r = rng();
            std::size_t lo = 0, hi = thresholds.size() - 1;
            while (lo < hi) {
                std::size_t mid = (lo + hi) / 2;
                if (r < thresholds[mid]) hi = mid; else lo = mid + 1;
            }
            ++tally[lo];
        }
    }
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (tally[i]) rep.counts[labels[i]] = tally[i];
    return rep;
}

/// Hoeffding shot count: N(delta) = ceil(2 r^2 ln(2/delta)) for the
/// dimension ratio r = d_alpha/d_beta, which makes the empirical p miss by
/// less than half a multiplicity step with probability >= 1 - delta.
inline std::uint64_t required_shots(const Rational& dim_ratio, double delta) {
    double r = to_double(dim_ratio);
    double n = 2.0 * r * r * std::log(2.0 / delta);
    return static_cast<std::uint64_t>(std::ceil(n));
}

struct EstimateCertificate {
    std::uint64_t required_shots = 0;
    double delta = 0;
    Rational half_width; // d_beta / (2 d_alpha)
};

struct MultiplicityEstimate {
    BigInt value;
    EstimateCertificate certificate;
};

/// Rounds count/shots * r to the nearest integer, r = d_alpha/d_beta.
/// Requires shots >= N(delta); the certificate records the bound used.
inline MultiplicityEstimate estimate_multiplicity(std::uint64_t count, std::uint64_t shots,
                                                  const Rational& dim_ratio, double delta) {
    const std::uint64_t need = required_shots(dim_ratio, delta);
    if (shots < need)
        throw UndersampledError("estimate_multiplicity: " + std::to_string(shots) +
                                    " shots, need " + std::to_string(need),
                                need);
    MultiplicityEstimate est;
    est.value = round_rational(Rational(count, shots) * dim_ratio);
    est.certificate.required_shots = need;
    est.certificate.delta = delta;
    est.certificate.half_width = Rational(1, 2) / dim_ratio;
    return est;
}

enum class PreferredAlgorithm { Restriction, Induction, Tie };

struct CostComparison {
    Rational restriction_cost; // d_alpha / d_beta
    Rational induction_cost;   // d_beta |G| / (d_alpha |H|)
    PreferredAlgorithm preferred = PreferredAlgorithm::Tie;
};

/// Sample costs of the two algorithms for one (alpha, beta) pair, and
/// which is cheaper: restriction wins iff (d_alpha/d_beta)^2 < |G|/|H|.
inline CostComparison cost_comparison(const GroupSpec& G, const GroupSpec& H,
                                      const IrrepLabel& alpha, const IrrepLabel& beta) {
    resolve_pairing(G, H);
    CostComparison out;
    const BigInt da = G.label_dim(alpha);
    const BigInt db = H.label_dim(beta);
    out.restriction_cost = Rational(da, db);
    out.induction_cost = Rational(db * G.order(), da * H.order());
    const Rational lhs = out.restriction_cost * out.restriction_cost;
    const Rational rhs(G.order(), H.order());
    if (lhs < rhs) out.preferred = PreferredAlgorithm::Restriction;
    else if (lhs > rhs) out.preferred = PreferredAlgorithm::Induction;
    else out.preferred = PreferredAlgorithm::Tie;
    return out;
}

/// Samples the Kronecker restriction distribution for (lambda, mu) until a
/// label nu with g_{lambda,mu,nu} > 0 appears, verifying the draw against
/// the character backend. This is the exact simulation of the quantum
/// search for a nonzero Kronecker coefficient.
struct KroneckerSearchResult {
    bool found = false;
    Partition nu;
    BigInt coefficient;
    std::uint64_t tries = 0;
};

inline KroneckerSearchResult search_nonzero_kronecker(const Partition& lambda,
                                                      const Partition& mu, std::uint64_t seed,
                                                      std::uint64_t max_tries = 1000,
                                                      CharacterCache* cache = nullptr) {
    const int n = lambda.n();
    if (mu.n() != n) throw DomainError("search_nonzero_kronecker: sizes differ");
    GroupSpec G = GroupSpec::direct_square(n);
    GroupSpec H = GroupSpec::symmetric(n);
    IrrepLabel alpha{{lambda, mu}, false};
    ExactDistribution dist = restriction_distribution(G, H, alpha, cache);

    KroneckerSearchResult res;
    for (std::uint64_t t = 0; t < max_tries; ++t) {
        SampleCounts one = sample(dist, 1, seed + t);
        const IrrepLabel& drawn = one.counts.begin()->first;
        ++res.tries;
        BigInt g = kronecker(lambda, mu, drawn.parts.at(0), cache);
        if (g > 0) {
            res.found = true;
            res.nu = drawn.parts.at(0);
            res.coefficient = g;
            return res;
        }
    }
    return res;
}

} // namespace symmult
