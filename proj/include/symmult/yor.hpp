#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <map>
#include <vector>

#include "symmult/errors.hpp"
#include "symmult/partition.hpp"
#include "symmult/permutation.hpp"

namespace symmult {

inline constexpr int kDefaultYorCap = 2000;

using SytGrid = std::vector<std::vector<int>>; // entries 1..n, full rows

/// Partitions of n-1 reachable from lambda by deleting one box, ordered by
/// the row the box is deleted from. This order fixes the branching blocks.
inline std::vector<Partition> branching_list(const Partition& lambda) {
    std::vector<Partition> out;
    for (const auto& [row, rest] : lambda.removable_boxes()) out.push_back(rest);
    return out;
}

namespace detail {

inline void all_syt_rec(const Partition& shape, std::vector<SytGrid>& out, SytGrid& scratch) {
    const int n = shape.n();
    if (n == 0) {
        out.push_back(scratch);
        return;
    }
    for (const auto& [row, rest] : shape.removable_boxes()) {
        scratch[row][rest[row]] = n;
        all_syt_rec(rest, out, scratch);
        scratch[row][rest[row]] = 0;
    }
}

inline std::vector<std::pair<int, int>> entry_positions(const SytGrid& t, int n) {
    std::vector<std::pair<int, int>> pos(n + 1);
    for (int r = 0; r < static_cast<int>(t.size()); ++r)
        for (int c = 0; c < static_cast<int>(t[r].size()); ++c)
            pos[t[r][c]] = {r, c};
    return pos;
}

} // namespace detail

/// All standard tableaux of shape lambda in the subgroup-adapted order:
/// tableaux are compared by the row of n, then of n-1, and so on,
/// ascending. Grouped this way, the basis splits by the box of n exactly
/// in branching_list order.
inline std::vector<SytGrid> all_syt(const Partition& lambda) {
    std::vector<SytGrid> out;
    SytGrid scratch(lambda.length());
    for (int r = 0; r < lambda.length(); ++r) scratch[r].assign(lambda.parts()[r], 0);
    detail::all_syt_rec(lambda, out, scratch);

    const int n = lambda.n();
    std::vector<std::pair<std::vector<int>, std::size_t>> keys(out.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        auto pos = detail::entry_positions(out[i], n);
        std::vector<int> key(n);
        for (int m = n; m >= 1; --m) key[n - m] = pos[m].first;
        keys[i] = {std::move(key), i};
    }
    std::sort(keys.begin(), keys.end());
    std::vector<SytGrid> sorted;
    sorted.reserve(out.size());
    for (auto& [key, idx] : keys) sorted.push_back(std::move(out[idx]));
    return sorted;
}

/// Young's orthogonal representation of one S_n irrep: real orthogonal
/// matrices for the adjacent transpositions, adapted to the subgroup chain
/// S_1 < S_2 < ... < S_n (restriction blocks need no basis change).
class OrthogonalRep {
public:
    explicit OrthogonalRep(Partition lambda, int dense_cap = kDefaultYorCap)
        : lambda_(std::move(lambda)), n_(lambda_.n()) {
        BigInt d = dim_irrep(lambda_);
        if (d > dense_cap) throw SizeLimitError("OrthogonalRep: dimension exceeds cap");
        basis_ = all_syt(lambda_);
        dim_ = static_cast<int>(basis_.size());

        std::map<SytGrid, int> index;
        for (int i = 0; i < dim_; ++i) index[basis_[i]] = i;

        generators_.reserve(std::max(n_ - 1, 0));
        for (int i = 0; i + 1 < n_; ++i) {
            // generator for the transposition of points (i, i+1), i.e.
            // tableau entries e1 = i+1 and e2 = i+2
            Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim_, dim_);
            for (int a = 0; a < dim_; ++a) {
                auto pos = detail::entry_positions(basis_[a], n_);
                auto [r1, c1] = pos[i + 1];
                auto [r2, c2] = pos[i + 2];
                int axial = (c2 - r2) - (c1 - r1);
                m(a, a) = 1.0 / axial;
                if (axial != 1 && axial != -1) {
                    SytGrid swapped = basis_[a];
                    std::swap(swapped[r1][c1], swapped[r2][c2]);
                    m(index.at(swapped), a) = std::sqrt(1.0 - 1.0 / (double(axial) * axial));
                }
            }
            generators_.push_back(std::move(m));
        }
    }

    const Partition& label() const { return lambda_; }
    int n() const { return n_; }
    int dim() const { return dim_; }
    const std::vector<SytGrid>& basis() const { return basis_; }

    /// Matrix of the adjacent transposition (i, i+1), 0-based points.
    const Eigen::MatrixXd& generator(int i) const { return generators_.at(i); }

    /// Matrix of an arbitrary permutation, via any adjacent-transposition
    /// decomposition (the result is decomposition-independent).
    Eigen::MatrixXd matrix(const Perm& sigma) const {
        if (static_cast<int>(sigma.size()) != n_)
            throw DomainError("OrthogonalRep::matrix: permutation size mismatch");
        Eigen::MatrixXd m = Eigen::MatrixXd::Identity(dim_, dim_);
        for (int i : adjacent_word(sigma)) m *= generators_[i];
        return m;
    }

private:
    Partition lambda_;
    int n_;
    int dim_ = 0;
    std::vector<SytGrid> basis_;
    std::vector<Eigen::MatrixXd> generators_;
};

/// Projector onto the isotypic subspace of the irrep with character
/// `label_char` inside the matrix representation given element-wise by
/// `elements`: Pi = (d/|F|) sum_f chi(f^-1) T(f). Characters here are
/// real, so chi(f^-1) = chi(f).
inline Eigen::MatrixXd isotypic_projector(const std::vector<Eigen::MatrixXd>& elements,
                                          const std::vector<double>& label_char,
                                          int label_dim) {
    if (elements.empty()) throw DomainError("isotypic_projector: no elements");
    if (elements.size() != label_char.size())
        throw DomainError("isotypic_projector: one character value per element required");
    const auto rows = elements[0].rows();
    Eigen::MatrixXd pi = Eigen::MatrixXd::Zero(rows, rows);
    for (std::size_t i = 0; i < elements.size(); ++i) pi += label_char[i] * elements[i];
    pi *= double(label_dim) / double(elements.size());
    return pi;
}

/// Multiplicity of the labelled irrep: Tr(Pi)/d, which must land within
/// 1e-6 of an integer.
inline BigInt isotypic_projector_multiplicity(const std::vector<Eigen::MatrixXd>& elements,
                                              const std::vector<double>& label_char,
                                              int label_dim,
                                              std::size_t order_cap = 10000) {
    if (elements.size() > order_cap)
        throw SizeLimitError("isotypic_projector_multiplicity: group order cap exceeded");
    Eigen::MatrixXd pi = isotypic_projector(elements, label_char, label_dim);
    double value = pi.trace() / label_dim;
    double rounded = std::round(value);
    if (std::abs(value - rounded) > 1e-6)
        throw NumericalFailure("isotypic_projector_multiplicity: trace not near an integer");
    return BigInt(static_cast<long long>(rounded));
}

} // namespace symmult
