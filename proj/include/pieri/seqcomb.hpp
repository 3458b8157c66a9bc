#pragma once

#include "pieri/rational.hpp"

#include <algorithm>
#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pieri {

/// Strictly decreasing sequence n ≥ a_1 > a_2 > ... > a_m ≥ 1 indexing a
/// Schubert condition on m-planes in an n-dimensional space. Entries are
/// addressed 1-based, largest first.
class DecSeq {
public:
    DecSeq() = default;
    DecSeq(int n, std::vector<int> entries) : n_(n), e_(std::move(entries)) {
        if (n_ < 1) throw Error("DecSeq: ambient dimension must be positive");
        if (e_.empty() || static_cast<int>(e_.size()) > n_) throw Error("DecSeq: length must be in [1, n]");
        for (std::size_t i = 0; i < e_.size(); ++i) {
            if (e_[i] < 1 || e_[i] > n_) throw Error("DecSeq: entry " + std::to_string(e_[i]) + " outside [1, n]");
            if (i > 0 && e_[i] >= e_[i - 1]) throw Error("DecSeq: entries must strictly decrease");
        }
    }

    /// nullopt when the entries do not form a valid sequence for this n
    /// (in particular when the first entry exceeds n: the empty variety).
    static std::optional<DecSeq> make(int n, std::vector<int> entries) {
        if (n < 1 || entries.empty() || static_cast<int>(entries.size()) > n) return std::nullopt;
        for (std::size_t i = 0; i < entries.size(); ++i) {
            if (entries[i] < 1 || entries[i] > n) return std::nullopt;
            if (i > 0 && entries[i] >= entries[i - 1]) return std::nullopt;
        }
        return DecSeq(n, std::move(entries));
    }

    /// (m, m-1, ..., 1)
    static DecSeq minimal(int n, int m) {
        std::vector<int> e;
        for (int i = m; i >= 1; --i) e.push_back(i);
        return DecSeq(n, std::move(e));
    }

    int n() const { return n_; }
    int m() const { return static_cast<int>(e_.size()); }
    int operator()(int i) const { return e_.at(static_cast<std::size_t>(i - 1)); }
    const std::vector<int>& entries() const { return e_; }

    /// "741" when every entry is a single digit, "10,4,1" otherwise.
    std::string str() const {
        bool digits = std::all_of(e_.begin(), e_.end(), [](int x) { return x < 10; });
        std::string s;
        for (std::size_t i = 0; i < e_.size(); ++i) {
            if (!digits && i > 0) s += ",";
            s += std::to_string(e_[i]);
        }
        return s;
    }

    friend bool operator==(const DecSeq&, const DecSeq&) = default;
    friend auto operator<=>(const DecSeq& a, const DecSeq& b) {
        if (auto c = a.n_ <=> b.n_; c != 0) return c;
        return a.e_ <=> b.e_;
    }

private:
    int n_ = 0;
    std::vector<int> e_;
};

/// Canonical order for set outputs: lexicographically decreasing.
inline void sort_canonical(std::vector<DecSeq>& v) {
    std::sort(v.begin(), v.end(), [](const DecSeq& a, const DecSeq& b) { return a.entries() > b.entries(); });
}

inline void require_compatible(const DecSeq& a, const DecSeq& b) {
    if (a.n() != b.n() || a.m() != b.m()) throw Error("sequences " + a.str() + " and " + b.str() + " have different n or m");
}

/// |α| = Σ (α_i − i)
inline int codim(const DecSeq& a) {
    int c = 0;
    for (int i = 1; i <= a.m(); ++i) c += a(i) - i;
    return c;
}

inline bool bruhat_leq(const DecSeq& a, const DecSeq& b) {
    require_compatible(a, b);
    for (int i = 1; i <= a.m(); ++i)
        if (a(i) > b(i)) return false;
    return true;
}

/// β_1 ≥ α_1 > β_2 ≥ α_2 > ... > β_m ≥ α_m
inline bool interlaces(const DecSeq& a, const DecSeq& b) {
    require_compatible(a, b);
    for (int i = 1; i <= a.m(); ++i) {
        if (b(i) < a(i)) return false;
        if (i > 1 && b(i) >= a(i - 1)) return false;
    }
    return true;
}

/// α*r: interlacing sequences of codimension |α| + r whose first entry fits
/// in [1, n]. α*0 = {α}. Lexicographically decreasing.
inline std::vector<DecSeq> pieri_set(const DecSeq& a, int r) {
    if (r < 0) throw Error("pieri_set: r must be non-negative");
    const int m = a.m();
    std::vector<DecSeq> out;
    std::vector<int> cur(static_cast<std::size_t>(m));
    // Entry i ranges over [α_i, α_{i-1} − 1] (with α_0 − 1 := n); recurse
    // from the top entry down, spending the remaining budget.
    std::function<void(int, int)> rec = [&](int i, int budget) {
        if (i > m) {
            if (budget == 0) out.emplace_back(a.n(), cur);
            return;
        }
        int hi = (i == 1 ? a.n() : a(i - 1) - 1);
        for (int v = std::min(hi, a(i) + budget); v >= a(i); --v) {
            cur[static_cast<std::size_t>(i - 1)] = v;
            rec(i + 1, budget - (v - a(i)));
        }
    };
    rec(1, r);
    return out;
}

/// j(α, β) = min{i | β_i > α_i}, for β ∈ α*r with r ≥ 1.
inline int first_diff_index(const DecSeq& a, const DecSeq& b) {
    if (!interlaces(a, b) || a == b) throw Error(b.str() + " is not in " + a.str() + "*r for any r >= 1");
    for (int i = 1; i <= a.m(); ++i)
        if (b(i) > a(i)) return i;
    throw Error("unreachable");
}

/// α^∨ = (n+1−α_m, ..., n+1−α_1)
inline DecSeq dual(const DecSeq& a) {
    std::vector<int> e;
    for (int i = a.m(); i >= 1; --i) e.push_back(a.n() + 1 - a(i));
    return DecSeq(a.n(), std::move(e));
}

/// α + k δ^j, or nullopt when the result is not a valid sequence.
inline std::optional<DecSeq> plus_delta(const DecSeq& a, int j, int k = 1) {
    auto e = a.entries();
    e.at(static_cast<std::size_t>(j - 1)) += k;
    return DecSeq::make(a.n(), std::move(e));
}

/// β|_j = (β_1 − β_j + 1, ..., β_{j−1} − β_j + 1, 1), a sequence for
/// j-planes in the (n + 1 − β_j)-dimensional space F_{β_j}.
inline DecSeq restrict_seq(const DecSeq& b, int j) {
    if (j < 1 || j > b.m()) throw Error("restrict_seq: index out of range");
    std::vector<int> e;
    for (int i = 1; i <= j; ++i) e.push_back(b(i) - b(j) + 1);
    return DecSeq(b.n() + 1 - b(j), std::move(e));
}

/// The tail (β_{j+1}, ..., β_m), used for the fibre over K in V/K.
inline std::vector<int> tail_entries(const DecSeq& b, int j) {
    return std::vector<int>(b.entries().begin() + j, b.entries().end());
}

/// Weakly decreasing non-negative parts; trailing zeros are not stored.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 0) throw Error("Partition: negative part");
            if (i > 0 && parts_[i] > parts_[i - 1]) throw Error("Partition: parts must weakly decrease");
        }
    }

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const {
        int s = 0;
        for (int p : parts_) s += p;
        return s;
    }
    /// Part i (1-based); zero beyond the length.
    int operator()(int i) const { return i >= 1 && i <= length() ? parts_[static_cast<std::size_t>(i - 1)] : 0; }
    std::vector<int> padded(int m) const {
        if (length() > m) throw Error("Partition: longer than " + std::to_string(m));
        auto v = parts_;
        v.resize(static_cast<std::size_t>(m), 0);
        return v;
    }
    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < parts_.size(); ++i) s += (i ? "," : "") + std::to_string(parts_[i]);
        return s + ")";
    }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<int> parts_;
};

/// λ(α) = (α_1 − m, α_2 − m + 1, ..., α_m − 1)
inline Partition lambda_of(const DecSeq& a) {
    std::vector<int> p;
    for (int i = 1; i <= a.m(); ++i) p.push_back(a(i) - (a.m() + 1 - i));
    return Partition(std::move(p));
}

inline DecSeq alpha_of(const Partition& l, int n, int m) {
    if (l.length() > m) throw Error("alpha_of: partition " + l.str() + " has more than " + std::to_string(m) + " parts");
    if (l(1) > n - m) throw Error("alpha_of: partition " + l.str() + " wider than n - m");
    std::vector<int> e;
    for (int i = 1; i <= m; ++i) e.push_back(l(i) + m + 1 - i);
    return DecSeq(n, std::move(e));
}

/// β ≺_α γ: γ ∈ β*1 and j(α, γ) = j(β, γ). α itself plays the role of α*0.
inline bool covers_under(const DecSeq& a, const DecSeq& b, const DecSeq& g) {
    require_compatible(a, b);
    require_compatible(a, g);
    if (!interlaces(a, b)) throw Error("covers_under: " + b.str() + " not in " + a.str() + "*r");
    if (!interlaces(a, g) || g == a) throw Error("covers_under: " + g.str() + " not in " + a.str() + "*(r+1)");
    if (codim(g) != codim(b) + 1) throw Error("covers_under: codimensions of " + b.str() + " and " + g.str() + " differ by more than one");
    if (!interlaces(b, g) || b == g) return false;
    if (b == a) return true;
    return first_diff_index(a, g) == first_diff_index(b, g);
}

/// The unique parent γ − δ^{j(α,γ)} of γ ∈ α*(r+1) in the tree.
inline DecSeq tree_parent(const DecSeq& a, const DecSeq& g) {
    int j = first_diff_index(a, g);
    auto p = plus_delta(g, j, -1);
    if (!p) throw Error("tree_parent: no parent for " + g.str());
    return *p;
}

/// {γ ∈ α*(r+1) | β ≺_α γ}, lexicographically decreasing.
inline std::vector<DecSeq> tree_children(const DecSeq& a, const DecSeq& b) {
    std::vector<DecSeq> out;
    for (const auto& g : pieri_set(a, codim(b) - codim(a) + 1))
        if (covers_under(a, b, g)) out.push_back(g);
    return out;
}

/// The tree T_{α,b}: vertices ∪ α*i for 0 ≤ i ≤ b, edges β ≺_α γ.
struct PieriTree {
    DecSeq root;
    int depth = 0;
    std::vector<std::vector<DecSeq>> levels;
    std::vector<std::pair<DecSeq, DecSeq>> edges;
    std::vector<std::vector<DecSeq>> chains;  // root-to-level-b paths

    std::vector<DecSeq> children(const DecSeq& b) const {
        std::vector<DecSeq> out;
        for (const auto& [p, c] : edges)
            if (p == b) out.push_back(c);
        return out;
    }
};

inline PieriTree tree_chains(const DecSeq& a, int b) {
    if (b < 0) throw Error("tree_chains: depth must be non-negative");
    PieriTree t;
    t.root = a;
    t.depth = b;
    for (int i = 0; i <= b; ++i) t.levels.push_back(pieri_set(a, i));
    for (int i = 0; i < b; ++i)
        for (const auto& p : t.levels[static_cast<std::size_t>(i)])
            for (const auto& c : t.levels[static_cast<std::size_t>(i + 1)])
                if (covers_under(a, p, c)) t.edges.emplace_back(p, c);
    std::vector<DecSeq> path{a};
    std::function<void(const DecSeq&, int)> walk = [&](const DecSeq& v, int level) {
        if (level == b) {
            t.chains.push_back(path);
            return;
        }
        for (const auto& c : t.children(v)) {
            path.push_back(c);
            walk(c, level + 1);
            path.pop_back();
        }
    };
    walk(a, 0);
    return t;
}

/// All of C([n], m) in canonical order.
inline std::vector<DecSeq> all_sequences(int n, int m) {
    std::vector<DecSeq> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int hi) {
        if (static_cast<int>(cur.size()) == m) {
            out.emplace_back(n, cur);
            return;
        }
        for (int v = hi; v >= m - static_cast<int>(cur.size()); --v) {
            cur.push_back(v);
            rec(v - 1);
            cur.pop_back();
        }
    };
    rec(n);
    return out;
}

/// Parse "7,4,1" (commas optional between single digits: "741").
inline DecSeq parse_seq(int n, const std::string& s) {
    std::vector<int> e;
    if (s.find(',') == std::string::npos) {
        for (char c : s) {
            if (c < '0' || c > '9') throw Error("malformed sequence '" + s + "'");
            e.push_back(c - '0');
        }
    } else {
        std::size_t pos = 0;
        while (pos <= s.size()) {
            auto next = s.find(',', pos);
            auto tok = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
            try {
                std::size_t used = 0;
                e.push_back(std::stoi(tok, &used));
                if (used != tok.size()) throw Error("");
            } catch (const std::exception&) {
                throw Error("malformed sequence '" + s + "'");
            }
            if (next == std::string::npos) break;
            pos = next + 1;
        }
    }
    return DecSeq(n, std::move(e));
}

}  // namespace pieri
