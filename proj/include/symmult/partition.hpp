#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "symmult/errors.hpp"
#include "symmult/numeric.hpp"

namespace symmult {

inline constexpr int kDefaultPartitionCap = 40;

/// Integer partition in canonical form: weakly decreasing positive parts,
/// zeros stripped. Labels both S_n irreps and cycle types.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0) throw DomainError("partition parts must be positive");
            if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
                throw DomainError("partition parts must be weakly decreasing");
        }
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// Builds a partition from an arbitrary multiset of nonnegative ints.
    static Partition sorted_from(std::vector<int> parts) {
        std::sort(parts.begin(), parts.end(), std::greater<int>());
        while (!parts.empty() && parts.back() == 0) parts.pop_back();
        return Partition(std::move(parts));
    }

    const std::vector<int>& parts() const { return parts_; }
    int n() const {
        int s = 0;
        for (int p : parts_) s += p;
        return s;
    }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

    bool contains_box(int row, int col) const {
        return row >= 0 && row < length() && col >= 0 && col < parts_[row];
    }

    Partition conjugate() const {
        if (parts_.empty()) return Partition{};
        std::vector<int> conj(parts_[0], 0);
        for (int p : parts_)
            for (int j = 0; j < p; ++j) ++conj[j];
        return Partition(std::move(conj));
    }

    /// Boxes whose removal leaves a partition, as (row, remaining shape),
    /// ordered by row.
    std::vector<std::pair<int, Partition>> removable_boxes() const {
        std::vector<std::pair<int, Partition>> out;
        for (int r = 0; r < length(); ++r) {
            if (r + 1 < length() && parts_[r] == parts_[r + 1]) continue;
            std::vector<int> v = parts_;
            v[r] -= 1;
            out.emplace_back(r, Partition(std::move(v)));
        }
        return out;
    }

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return parts_ != o.parts_; }

    /// Canonical enumeration order: smaller n first, then reverse
    /// lexicographic, e.g. (4) < (3,1) < (2,2) < (2,1,1) < (1,1,1,1).
    bool operator<(const Partition& o) const {
        int a = n(), b = o.n();
        if (a != b) return a < b;
        return parts_ > o.parts_;
    }

    std::string to_string() const {
        std::ostringstream os;
        os << '(';
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) os << ',';
            os << parts_[i];
        }
        os << ')';
        return os.str();
    }

private:
    std::vector<int> parts_;
};

inline std::ostream& operator<<(std::ostream& os, const Partition& p) {
    return os << p.to_string();
}

/// Ordered sequence of positive parts; order is significant
/// (tableau contents, Young subgroup block sizes).
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (int p : parts_)
            if (p <= 0) throw DomainError("composition parts must be positive");
    }
    Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}
    explicit Composition(const Partition& p) : parts_(p.parts()) {}

    const std::vector<int>& parts() const { return parts_; }
    int n() const {
        int s = 0;
        for (int p : parts_) s += p;
        return s;
    }
    int length() const { return static_cast<int>(parts_.size()); }
    int operator[](std::size_t i) const { return parts_[i]; }

    Partition sorted() const {
        return Partition::sorted_from(parts_);
    }

    bool operator==(const Composition& o) const { return parts_ == o.parts_; }

    std::string to_string() const {
        std::ostringstream os;
        os << '(';
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) os << ',';
            os << parts_[i];
        }
        os << ')';
        return os.str();
    }

private:
    std::vector<int> parts_;
};

/// Conjugacy class of S_n: cycle lengths plus the class size n!/z.
struct CycleType {
    Partition cycles;
    BigInt class_size;
};

/// Parses "3,1" or "(3,1)"; "()" is the empty partition.
inline Partition parse_partition(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')') s += c;
    std::vector<int> parts;
    if (!s.empty()) {
        std::istringstream is(s);
        std::string tok;
        while (std::getline(is, tok, ',')) {
            if (tok.empty()) throw DomainError("bad partition literal: " + text);
            std::size_t pos = 0;
            int v = std::stoi(tok, &pos);
            if (pos != tok.size()) throw DomainError("bad partition literal: " + text);
            parts.push_back(v);
        }
    }
    return Partition(std::move(parts));
}

inline Composition parse_composition(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')') s += c;
    std::vector<int> parts;
    if (!s.empty()) {
        std::istringstream is(s);
        std::string tok;
        while (std::getline(is, tok, ',')) {
            std::size_t pos = 0;
            int v = std::stoi(tok, &pos);
            if (pos != tok.size()) throw DomainError("bad composition literal: " + text);
            parts.push_back(v);
        }
    }
    return Composition(std::move(parts));
}

/// All partitions of n in canonical (reverse lexicographic) order.
inline std::vector<Partition> partitions_of(int n, int cap = kDefaultPartitionCap) {
    if (n < 0) throw DomainError("partitions_of: negative n");
    if (n > cap) throw SizeLimitError("partitions_of: n exceeds cap " + std::to_string(cap));
    std::vector<Partition> out;
    std::vector<int> cur;
    // descending-lex generation: largest first part first
    auto rec = [&](auto&& self, int rest, int maxPart) -> void {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rest, maxPart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rest - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n == 0 ? 1 : n);
    return out;
}

/// True iff mu dominates nu: every prefix sum of mu is >= that of nu.
inline bool dominates(const Partition& mu, const Partition& nu) {
    if (mu.n() != nu.n()) throw DomainError("dominates: unequal totals");
    int len = std::max(mu.length(), nu.length());
    long a = 0, b = 0;
    for (int r = 0; r < len; ++r) {
        a += mu[r];
        b += nu[r];
        if (a < b) return false;
    }
    return true;
}

/// Hook length of box (r,c), 0-indexed.
inline int hook_length(const Partition& lambda, const Partition& conj, int r, int c) {
    return (lambda[r] - c) + (conj[c] - r) - 1;
}

/// Dimension of the S_n irrep labelled by lambda (hook length formula).
inline BigInt dim_irrep(const Partition& lambda) {
    const Partition conj = lambda.conjugate();
    BigInt num = factorial(lambda.n());
    BigInt den = 1;
    for (int r = 0; r < lambda.length(); ++r)
        for (int c = 0; c < lambda.parts()[r]; ++c)
            den *= hook_length(lambda, conj, r, c);
    BigInt d = num / den;
    if (d * den != num) throw NumericalFailure("hook product does not divide n!");
    return d;
}

/// Centralizer order z = prod_i i^{m_i} m_i! of a cycle type.
inline BigInt centralizer_order(const Partition& cycles) {
    BigInt z = 1;
    int run = 0;
    for (int i = 0; i < cycles.length(); ++i) {
        ++run;
        z *= cycles.parts()[i];
        if (i + 1 == cycles.length() || cycles.parts()[i + 1] != cycles.parts()[i]) {
            z *= factorial(run);
            run = 0;
        }
    }
    return z;
}

/// Conjugacy classes of S_n in canonical partition order; sizes sum to n!.
inline std::vector<CycleType> conjugacy_classes(int n, int cap = kDefaultPartitionCap) {
    std::vector<CycleType> out;
    const BigInt nf = factorial(n);
    for (const Partition& p : partitions_of(n, cap))
        out.push_back({p, nf / centralizer_order(p)});
    return out;
}

} // namespace symmult
