#pragma once

#include <cstdint>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "symmult/errors.hpp"
#include "symmult/partition.hpp"

namespace symmult {

inline constexpr std::size_t kDefaultStateCap = 1000000;

/// Skew diagram outer/inner; inner may be empty.
struct SkewShape {
    Partition outer;
    Partition inner;

    SkewShape() = default;
    explicit SkewShape(Partition out, Partition in = Partition{})
        : outer(std::move(out)), inner(std::move(in)) {
        if (inner.length() > outer.length())
            throw DomainError("skew shape: inner taller than outer");
        for (int r = 0; r < inner.length(); ++r)
            if (inner[r] > outer[r])
                throw DomainError("skew shape: inner does not fit in outer");
    }

    int cells() const { return outer.n() - inner.n(); }
    bool in_shape(int r, int c) const {
        return outer.contains_box(r, c) && c >= inner[r];
    }
    bool operator==(const SkewShape& o) const {
        return outer == o.outer && inner == o.inner;
    }
};

/// Filling of a (possibly skew) shape; 0 marks an empty box.
class Tableau {
public:
    Tableau() = default;
    explicit Tableau(SkewShape shape)
        : shape_(std::move(shape)), rows_(shape_.outer.length()) {
        for (int r = 0; r < shape_.outer.length(); ++r)
            rows_[r].assign(shape_.outer[r] - shape_.inner[r], 0);
    }
    Tableau(SkewShape shape, std::vector<std::vector<int>> rows)
        : shape_(std::move(shape)), rows_(std::move(rows)) {
        if (static_cast<int>(rows_.size()) != shape_.outer.length())
            throw DomainError("tableau: wrong row count");
        for (int r = 0; r < shape_.outer.length(); ++r)
            if (static_cast<int>(rows_[r].size()) != shape_.outer[r] - shape_.inner[r])
                throw DomainError("tableau: wrong row length");
    }

    const SkewShape& shape() const { return shape_; }

    /// Absolute column coordinates: valid for inner[r] <= c < outer[r].
    int at(int r, int c) const { return rows_[r][c - shape_.inner[r]]; }
    void set(int r, int c, int v) { rows_[r][c - shape_.inner[r]] = v; }

    const std::vector<std::vector<int>>& rows() const { return rows_; }

    /// Nonempty entries weakly increase along rows, strictly down columns.
    bool is_semistandard() const {
        const Partition& out = shape_.outer;
        const Partition& in = shape_.inner;
        for (int r = 0; r < out.length(); ++r) {
            for (int c = in[r]; c < out[r]; ++c) {
                int v = at(r, c);
                if (v == 0) continue;
                if (c + 1 < out[r] && at(r, c + 1) != 0 && v > at(r, c + 1)) return false;
                if (r + 1 < out.length() && shape_.in_shape(r + 1, c) &&
                    at(r + 1, c) != 0 && v >= at(r + 1, c))
                    return false;
            }
        }
        return true;
    }

    /// Occurrence counts of 1..max entry over nonempty boxes.
    std::vector<int> content_counts() const {
        std::vector<int> counts;
        for (const auto& row : rows_)
            for (int v : row)
                if (v > 0) {
                    if (static_cast<int>(counts.size()) < v) counts.resize(v, 0);
                    ++counts[v - 1];
                }
        return counts;
    }

    /// Rows top to bottom, each reversed.
    std::vector<int> reverse_reading_word() const {
        std::vector<int> word;
        for (const auto& row : rows_)
            for (auto it = row.rbegin(); it != row.rend(); ++it) word.push_back(*it);
        return word;
    }

    /// Bracketed row-list form, e.g. [[1,1,2],[2,3,3]].
    std::string to_string() const {
        std::ostringstream os;
        os << '[';
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            if (r) os << ',';
            os << '[';
            for (std::size_t c = 0; c < rows_[r].size(); ++c) {
                if (c) os << ',';
                os << rows_[r][c];
            }
            os << ']';
        }
        os << ']';
        return os.str();
    }

    bool operator==(const Tableau& o) const { return rows_ == o.rows_ && shape_ == o.shape_; }
    bool operator<(const Tableau& o) const { return rows_ < o.rows_; }

private:
    SkewShape shape_;
    std::vector<std::vector<int>> rows_; // rows_[r][c - inner[r]]
};

namespace detail {

/// Corner of a partial filling: an empty box whose right and lower
/// neighbours are either outside the shape or already filled.
inline std::vector<std::pair<int, int>> corners(const Tableau& t) {
    std::vector<std::pair<int, int>> out;
    const Partition& shape = t.shape().outer;
    for (int r = 0; r < shape.length(); ++r) {
        for (int c = 0; c < shape[r]; ++c) {
            if (t.at(r, c) != 0) continue;
            bool right_ok = (c + 1 >= shape[r]) || t.at(r, c + 1) != 0;
            bool below_ok = !shape.contains_box(r + 1, c) || t.at(r + 1, c) != 0;
            if (right_ok && below_ok) out.emplace_back(r, c);
        }
    }
    return out;
}

} // namespace detail

/// Generates all semistandard tableaux of shape lambda and content mu by
/// the corner-placement breadth-first procedure: at every step the largest
/// value with remaining multiplicity is placed at each corner of each
/// pending state, keeping the placements that stay semistandard. States
/// are deduplicated as (filling, remaining content) tuples.
inline std::vector<Tableau> generate_ssyt(const Partition& lambda, const Composition& mu,
                                          std::size_t state_cap = kDefaultStateCap) {
    if (lambda.n() != mu.n()) throw DomainError("generate_ssyt: |lambda| != |mu|");
    const int n = lambda.n();

    using State = std::pair<std::vector<std::vector<int>>, std::vector<int>>;
    std::set<State> states;
    std::vector<int> full(mu.parts());
    states.insert({Tableau(SkewShape(lambda)).rows(), full});

    for (int step = 0; step < n; ++step) {
        std::set<State> next;
        for (const State& st : states) {
            Tableau t(SkewShape(lambda), st.first);
            std::vector<int> remaining = st.second;
            int m = static_cast<int>(remaining.size());
            while (m > 0 && remaining[m - 1] == 0) --m;
            if (m == 0) continue;
            remaining[m - 1] -= 1;
            for (auto [r, c] : detail::corners(t)) {
                Tableau q = t;
                q.set(r, c, m);
                if (!q.is_semistandard()) continue;
                next.insert({q.rows(), remaining});
                if (next.size() > state_cap)
                    throw SizeLimitError("generate_ssyt: state cap exceeded");
            }
        }
        states = std::move(next);
        if (states.empty()) break;
    }

    std::vector<Tableau> out;
    for (const State& st : states)
        out.emplace_back(SkewShape(lambda), st.first);
    return out; // set order = sorted row-major entries
}

/// Kostka number K^mu_lambda = #SSYT(shape lambda, content mu).
inline BigInt kostka(const Partition& lambda, const Composition& mu,
                     std::size_t state_cap = kDefaultStateCap) {
    if (lambda.n() != mu.n()) throw DomainError("kostka: |lambda| != |mu|");
    if (!dominates(lambda, mu.sorted())) return 0;
    return static_cast<BigInt>(generate_ssyt(lambda, mu, state_cap).size());
}

/// Number of standard tableaux of shape lambda by exhaustive enumeration
/// (peels the box of the largest entry recursively; every SYT is visited
/// once, which is the point of the oracle).
inline BigInt count_syt(const Partition& lambda, std::uint64_t enumeration_cap = 10000000) {
    std::uint64_t visited = 0;
    auto rec = [&](auto&& self, const Partition& shape) -> BigInt {
        if (shape.n() == 0) {
            if (++visited > enumeration_cap)
                throw SizeLimitError("count_syt: enumeration cap exceeded");
            return 1;
        }
        BigInt total = 0;
        for (const auto& [row, rest] : shape.removable_boxes()) total += self(self, rest);
        return total;
    };
    return rec(rec, lambda);
}

/// Every prefix contains at least as many i's as (i+1)'s, for every i.
inline bool is_yamanouchi(const std::vector<int>& word) {
    std::vector<int> counts;
    for (int v : word) {
        if (v <= 0) throw DomainError("is_yamanouchi: entries must be positive");
        if (static_cast<int>(counts.size()) < v) counts.resize(v, 0);
        ++counts[v - 1];
        if (v > 1 && counts[v - 1] > counts[v - 2]) return false;
    }
    return true;
}

/// Littlewood-Richardson coefficient c^nu_{lambda,mu}: the number of skew
/// semistandard tableaux of shape nu/lambda and content mu whose reverse
/// reading word is Yamanouchi. Boxes are filled in reading order (rows top
/// to bottom, right to left) so both the semistandard and the Yamanouchi
/// constraints prune the search as they go.
inline BigInt lr_coefficient(const Partition& nu, const Partition& lambda,
                             const Partition& mu) {
    if (nu.n() != lambda.n() + mu.n())
        throw DomainError("lr_coefficient: |nu| != |lambda| + |mu|");
    for (int r = 0; r < lambda.length(); ++r)
        if (lambda[r] > nu[r]) return 0; // lambda does not fit inside nu

    SkewShape shape(nu, lambda);
    std::vector<std::pair<int, int>> cells; // reading order
    for (int r = 0; r < nu.length(); ++r)
        for (int c = nu[r] - 1; c >= lambda[r]; --c) cells.emplace_back(r, c);

    std::vector<int> remaining(mu.parts());
    std::vector<int> placed(std::max(mu.length(), 1), 0);
    Tableau t(shape);
    BigInt count = 0;

    auto rec = [&](auto&& self, std::size_t idx) -> void {
        if (idx == cells.size()) {
            ++count;
            return;
        }
        auto [r, c] = cells[idx];
        for (int v = 1; v <= mu.length(); ++v) {
            if (remaining[v - 1] == 0) continue;
            if (v > 1 && placed[v - 1] + 1 > placed[v - 2]) continue; // Yamanouchi prefix
            if (c + 1 < nu[r] && t.at(r, c + 1) != 0 && v > t.at(r, c + 1)) continue;
            if (r > 0 && shape.in_shape(r - 1, c) && t.at(r - 1, c) >= v) continue;
            t.set(r, c, v);
            --remaining[v - 1];
            ++placed[v - 1];
            self(self, idx + 1);
            ++remaining[v - 1];
            --placed[v - 1];
            t.set(r, c, 0);
        }
    };
    rec(rec, 0);
    return count;
}

} // namespace symmult
