#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <map>
#include <vector>

#include "symmult/characters.hpp"
#include "symmult/errors.hpp"
#include "symmult/partition.hpp"
#include "symmult/permutation.hpp"
#include "symmult/qsim.hpp"
#include "symmult/wreath.hpp"
#include "symmult/yor.hpp"

namespace symmult {

inline constexpr int kDefaultQftCap = 5040;
inline constexpr int kDefaultGpeCap = 120;

inline Eigen::MatrixXd kron(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
    Eigen::MatrixXd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

/// Row layout of the S_n Fourier basis: irreps in canonical partition
/// order, entries row-major, so |lambda,k,l> sits at
/// offset(lambda) + k*d_lambda + l.
struct FourierLayout {
    std::vector<Partition> labels;
    std::vector<int> dims;
    std::vector<int> offsets;
    int total = 0;

    explicit FourierLayout(int n) {
        for (const Partition& p : partitions_of(n)) {
            int d = static_cast<int>(dim_irrep(p).convert_to<long long>());
            labels.push_back(p);
            dims.push_back(d);
            offsets.push_back(total);
            total += d * d;
        }
    }

    int offset_of(const Partition& p) const {
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (labels[i] == p) return offsets[i];
        throw DomainError("FourierLayout: unknown label");
    }
};

namespace detail {

/// S_n QFT columns in lexicographic element order, rows per FourierLayout.
inline Eigen::MatrixXd qft_symmetric(int n, int cap) {
    BigInt order = factorial(n);
    if (order > cap) throw SizeLimitError("qft_matrix: group order exceeds cap");
    const int N = static_cast<int>(order.convert_to<long long>());
    FourierLayout layout(n);

    std::vector<Perm> gens;
    for (int i = 0; i + 1 < n; ++i) gens.push_back(adjacent_transposition(n, i));
    CayleyEnumeration cay = n >= 2 ? enumerate_subgroup(n, gens, static_cast<std::size_t>(N))
                                   : CayleyEnumeration{{identity_perm(n)}, {-1}, {-1}};

    Eigen::MatrixXd u = Eigen::MatrixXd::Zero(N, N);
    for (std::size_t li = 0; li < layout.labels.size(); ++li) {
        OrthogonalRep rep(layout.labels[li]);
        const int d = layout.dims[li];
        const double amp = std::sqrt(double(d) / double(N));
        std::vector<Eigen::MatrixXd> mats(cay.elements.size());
        mats[0] = Eigen::MatrixXd::Identity(d, d);
        for (std::size_t e = 1; e < cay.elements.size(); ++e)
            mats[e] = rep.generator(cay.gen[e]) * mats[cay.parent[e]];
        for (std::size_t e = 0; e < cay.elements.size(); ++e) {
            const int col = static_cast<int>(lex_rank(cay.elements[e]));
            for (int k = 0; k < d; ++k)
                for (int l = 0; l < d; ++l)
                    u(layout.offsets[li] + k * d + l, col) = amp * mats[e](k, l);
        }
    }
    return u;
}

} // namespace detail

/// Quantum Fourier transform of a supported group as a dense unitary.
/// Symmetric groups use the Young orthogonal irrep matrices; Young
/// subgroups, products and squares are tensor products of factor QFTs.
/// Columns follow the group's element enumeration (lexicographic per
/// factor, odometer across factors).
inline Eigen::MatrixXd qft_matrix(const GroupSpec& g, int cap = kDefaultQftCap) {
    if (g.order() > cap) throw SizeLimitError("qft_matrix: group order exceeds cap");
    switch (g.kind()) {
        case GroupSpec::Kind::Symmetric:
            return detail::qft_symmetric(g.n(), cap);
        case GroupSpec::Kind::Young:
        case GroupSpec::Kind::Product: {
            Eigen::MatrixXd u = Eigen::MatrixXd::Identity(1, 1);
            for (int part : g.mu().parts()) u = kron(u, detail::qft_symmetric(part, cap));
            return u;
        }
        case GroupSpec::Kind::DirectSquare: {
            Eigen::MatrixXd f = detail::qft_symmetric(g.n(), cap);
            return kron(f, f);
        }
        case GroupSpec::Kind::Wreath:
            throw UnsupportedPairing(
                "qft_matrix: wreath duals are only partially modelled; no full QFT");
    }
    throw UnsupportedPairing("qft_matrix: unsupported group kind");
}

/// Index of nu in the branching list L_lambda (deletion row order), or the
/// sentinel 0 when nu is not obtained from lambda by deleting one box.
inline int beals_delta(const Partition& lambda, const Partition& nu) {
    const std::vector<Partition> list = branching_list(lambda);
    for (std::size_t i = 0; i < list.size(); ++i)
        if (list[i] == nu) return static_cast<int>(i);
    return 0;
}

/// The embedding isometry of the Fourier label space of S_{n-1} into that
/// of S_n: |nu,k,l> maps to sum over lambda > nu of
/// sqrt(d_lambda/(n d_nu)) |lambda, k+o, l+o>, where o is the total
/// dimension of the blocks preceding nu in L_lambda. The shift keeps the
/// images of distinct inputs on disjoint basis vectors, which makes the
/// columns exactly orthonormal.
inline Eigen::MatrixXd beals_embedding_map(int n, int cap = kDefaultQftCap) {
    if (n < 1) throw DomainError("beals_embedding_map: n must be >= 1");
    if (factorial(n) > cap) throw SizeLimitError("beals_embedding_map: cap exceeded");
    FourierLayout big(n);
    FourierLayout small(n - 1);
    Eigen::MatrixXd e = Eigen::MatrixXd::Zero(big.total, small.total);
    for (std::size_t li = 0; li < big.labels.size(); ++li) {
        const Partition& lambda = big.labels[li];
        const int dl = big.dims[li];
        int block_offset = 0;
        for (const Partition& nu : branching_list(lambda)) {
            int si = 0;
            while (!(small.labels[si] == nu)) ++si;
            const int dn = small.dims[si];
            const double amp = std::sqrt(double(dl) / (double(n) * double(dn)));
            for (int k = 0; k < dn; ++k)
                for (int l = 0; l < dn; ++l)
                    e(big.offsets[li] + (k + block_offset) * dl + (l + block_offset),
                      small.offsets[si] + k * dn + l) = amp;
            block_offset += dn;
        }
    }
    return e;
}

/// Rebuilds the S_n QFT column-by-column from the S_{n-1} QFT: factor
/// g = t_j h with t_j the cycle sending n-1 to j, embed the S_{n-1}
/// Fourier column of h, then left-multiply each irrep block by
/// r^lambda(t_j). Agreement with qft_matrix(S_n) validates the embedding.
inline Eigen::MatrixXd qft_via_beals_recursion(int n, int cap = kDefaultQftCap) {
    if (n < 2) throw DomainError("qft_via_beals_recursion: n must be >= 2");
    if (factorial(n) > cap) throw SizeLimitError("qft_via_beals_recursion: cap exceeded");
    const int N = static_cast<int>(factorial(n).convert_to<long long>());
    Eigen::MatrixXd prev = detail::qft_symmetric(n - 1, cap);
    Eigen::MatrixXd embed = beals_embedding_map(n, cap);
    FourierLayout layout(n);

    // r^lambda(t_j) for every lambda and every coset representative
    std::vector<Perm> cosets(n);
    for (int j = 0; j < n; ++j) {
        Perm t = identity_perm(n);
        for (int i = n - 2; i >= j; --i) t = compose(adjacent_transposition(n, i), t);
        cosets[j] = t;
    }
    std::vector<std::vector<Eigen::MatrixXd>> coset_mats(layout.labels.size());
    for (std::size_t li = 0; li < layout.labels.size(); ++li) {
        OrthogonalRep rep(layout.labels[li]);
        for (int j = 0; j < n; ++j) coset_mats[li].push_back(rep.matrix(cosets[j]));
    }

    Eigen::MatrixXd u = Eigen::MatrixXd::Zero(N, N);
    for (const Perm& g : all_perms(n)) {
        const int j = g[n - 1];
        Perm h = compose(inverse(cosets[j]), g);
        Perm h_small(h.begin(), h.end() - 1);
        Eigen::VectorXd col = embed * prev.col(static_cast<Eigen::Index>(lex_rank(h_small)));
        for (std::size_t li = 0; li < layout.labels.size(); ++li) {
            const int d = layout.dims[li];
            Eigen::Map<Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>
                block(col.data() + layout.offsets[li], d, d);
            block = (coset_mats[li][j] * block).eval();
        }
        u.col(static_cast<Eigen::Index>(lex_rank(g))) = col;
    }
    return u;
}

/// Dense end-to-end simulation of generalized phase estimation over a
/// restricted representation: prepares rho^alpha_G as the normalized
/// isotypic projector in the G-regular representation, applies the
/// H-controlled regular action, and weak-Fourier-samples the control
/// register. Probabilities are returned per modelled H-label together
/// with the residual mass.
struct GpeResult {
    std::map<IrrepLabel, double> probs;
    double residual = 0;
};

namespace detail {

struct EmbeddedElement {
    int g_index;            // index into the G element enumeration
    Eigen::MatrixXd irrep;  // r^beta(h)
};

/// G as an indexed permutation family: element i acts on C[G] by sending
/// basis state a to act[i][a].
struct DenseGroup {
    int size = 0;
    std::vector<std::vector<int>> act; // act[g][a] = index of g o a
};

inline DenseGroup dense_symmetric(int n) {
    DenseGroup dg;
    std::vector<Perm> elems = all_perms(n);
    dg.size = static_cast<int>(elems.size());
    dg.act.assign(dg.size, std::vector<int>(dg.size));
    for (int g = 0; g < dg.size; ++g)
        for (int a = 0; a < dg.size; ++a)
            dg.act[g][a] = static_cast<int>(lex_rank(compose(elems[g], elems[a])));
    return dg;
}

} // namespace detail

inline GpeResult simulate_gpe_dense(const GroupSpec& G, const GroupSpec& H,
                                    const IrrepLabel& alpha, int cap = kDefaultGpeCap) {
    const Pairing pairing = resolve_pairing(G, H);
    if (G.order() > cap) throw SizeLimitError("simulate_gpe_dense: |G| exceeds cap");
    const int n = G.n();

    // G elements, regular action, and the character of alpha per element
    std::vector<Perm> sym = all_perms(n);
    const int nf = static_cast<int>(sym.size());
    CharacterCache cache;
    int gsize = 0;
    std::vector<std::vector<int>> act;
    std::vector<double> chi_alpha;
    if (G.kind() == GroupSpec::Kind::Symmetric) {
        detail::DenseGroup dg = detail::dense_symmetric(n);
        gsize = dg.size;
        act = std::move(dg.act);
        chi_alpha.resize(gsize);
        std::map<Partition, double> by_type;
        for (int g = 0; g < gsize; ++g) {
            Partition t = cycle_type(sym[g]);
            auto it = by_type.find(t);
            if (it == by_type.end())
                it = by_type
                         .emplace(t, static_cast<double>(
                                         character(alpha.parts.at(0), t, &cache)))
                         .first;
            chi_alpha[g] = it->second;
        }
    } else if (G.kind() == GroupSpec::Kind::DirectSquare) {
        gsize = nf * nf;
        act.assign(gsize, std::vector<int>(gsize));
        chi_alpha.resize(gsize);
        std::vector<std::vector<int>> single(nf, std::vector<int>(nf));
        for (int g = 0; g < nf; ++g)
            for (int a = 0; a < nf; ++a)
                single[g][a] = static_cast<int>(lex_rank(compose(sym[g], sym[a])));
        std::vector<double> chi1(nf), chi2(nf);
        for (int g = 0; g < nf; ++g) {
            Partition t = cycle_type(sym[g]);
            chi1[g] = static_cast<double>(character(alpha.parts.at(0), t, &cache));
            chi2[g] = static_cast<double>(character(alpha.parts.at(1), t, &cache));
        }
        for (int g1 = 0; g1 < nf; ++g1)
            for (int g2 = 0; g2 < nf; ++g2) {
                const int g = g1 * nf + g2;
                chi_alpha[g] = chi1[g1] * chi2[g2];
                for (int a1 = 0; a1 < nf; ++a1)
                    for (int a2 = 0; a2 < nf; ++a2)
                        act[g][a1 * nf + a2] = single[g1][a1] * nf + single[g2][a2];
            }
    } else {
        throw UnsupportedPairing("simulate_gpe_dense: unsupported ambient group");
    }

    const double d_alpha = static_cast<double>(G.label_dim(alpha));
    Eigen::MatrixXd rho = Eigen::MatrixXd::Zero(gsize, gsize);
    for (int g = 0; g < gsize; ++g)
        for (int a = 0; a < gsize; ++a) rho(act[g][a], a) += chi_alpha[g];
    rho *= d_alpha / double(gsize);  // isotypic projector Pi^G_alpha
    rho /= d_alpha * d_alpha;        // rho = Pi / d_alpha^2

    // H elements: index in G plus the beta-irrep matrix factory
    GpeResult result;
    double mass = 0;
    for (const IrrepLabel& beta : H.irrep_labels()) {
        std::vector<detail::EmbeddedElement> elements;
        switch (pairing) {
            case Pairing::YoungInSymmetric: {
                const Composition& mu = H.mu();
                std::vector<int> offs(mu.length() + 1, 0);
                for (int i = 0; i < mu.length(); ++i) offs[i + 1] = offs[i] + mu[i];
                std::vector<std::vector<Perm>> factor_perms;
                std::vector<OrthogonalRep> reps;
                for (int i = 0; i < mu.length(); ++i) {
                    factor_perms.push_back(all_perms(mu[i]));
                    reps.emplace_back(beta.parts.at(i));
                }
                std::vector<std::size_t> idx(mu.length(), 0);
                while (true) {
                    Perm embedded = identity_perm(n);
                    Eigen::MatrixXd m = Eigen::MatrixXd::Identity(1, 1);
                    for (int i = 0; i < mu.length(); ++i) {
                        const Perm& block = factor_perms[i][idx[i]];
                        for (int x = 0; x < mu[i]; ++x)
                            embedded[offs[i] + x] = offs[i] + block[x];
                        m = kron(m, reps[i].matrix(block));
                    }
                    elements.push_back({static_cast<int>(lex_rank(embedded)), std::move(m)});
                    int pos = mu.length() - 1;
                    while (pos >= 0 && ++idx[pos] == factor_perms[pos].size()) idx[pos--] = 0;
                    if (pos < 0) break;
                }
                break;
            }
            case Pairing::WreathInSymmetric: {
                OrthogonalRep rep_l(beta.parts.at(0));
                OrthogonalRep rep_m(beta.parts.at(1));
                for (const WreathElement& w :
                     wreath_elements(H.wreath_c(), H.wreath_d())) {
                    Perm embedded = wreath_embed(H.wreath_c(), H.wreath_d(), w);
                    elements.push_back({static_cast<int>(lex_rank(embedded)),
                                        wreath_matrix(rep_l, rep_m, w)});
                }
                break;
            }
            case Pairing::DiagonalInSquare: {
                OrthogonalRep rep(beta.parts.at(0));
                for (int g = 0; g < nf; ++g)
                    elements.push_back({g * nf + g, rep.matrix(sym[g])});
                break;
            }
            case Pairing::SymmetricItself: {
                OrthogonalRep rep(beta.parts.at(0));
                for (int g = 0; g < nf; ++g) elements.push_back({g, rep.matrix(sym[g])});
                break;
            }
        }

        const int db = static_cast<int>(elements[0].irrep.rows());
        const double hsize = static_cast<double>(elements.size());
        Eigen::MatrixXd e = Eigen::MatrixXd::Zero(db * db * gsize, gsize);
        const double pref = std::sqrt(double(db)) / hsize;
        for (const auto& el : elements) {
            const std::vector<int>& rg = act[el.g_index];
            for (int i = 0; i < db; ++i)
                for (int j = 0; j < db; ++j) {
                    const double c = pref * el.irrep(i, j);
                    if (c == 0.0) continue;
                    const int base = (i * db + j) * gsize;
                    for (int a = 0; a < gsize; ++a) e(base + rg[a], a) += c;
                }
        }
        const double p = (e * rho * e.transpose()).trace();
        result.probs.emplace(beta, p);
        mass += p;
    }
    result.residual = 1.0 - mass;
    return result;
}

} // namespace symmult
