#pragma once

#include "pieri/rational.hpp"
#include "pieri/seqcomb.hpp"

#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace pieri {

/// Semistandard Young tableau with entries in [1, m]: rows weakly increase,
/// columns strictly increase, row lengths weakly decrease.
class Tableau {
public:
    Tableau() = default;
    Tableau(std::vector<std::vector<int>> rows, int entry_bound) : rows_(std::move(rows)), m_(entry_bound) {
        while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const auto& row = rows_[r];
            if (r > 0 && row.size() > rows_[r - 1].size()) throw Error("Tableau: row lengths must weakly decrease");
            for (std::size_t c = 0; c < row.size(); ++c) {
                if (row[c] < 1 || row[c] > m_) throw Error("Tableau: entry outside [1, m]");
                if (c > 0 && row[c] < row[c - 1]) throw Error("Tableau: rows must weakly increase");
                if (r > 0 && row[c] <= rows_[r - 1][c]) throw Error("Tableau: columns must strictly increase");
            }
        }
    }

    const std::vector<std::vector<int>>& rows() const { return rows_; }
    int entry_bound() const { return m_; }

    Partition shape() const {
        std::vector<int> p;
        for (const auto& r : rows_) p.push_back(static_cast<int>(r.size()));
        return Partition(std::move(p));
    }

    /// Exponent vector of x^T: multiplicity of each entry 1..m.
    std::vector<int> content() const {
        std::vector<int> c(static_cast<std::size_t>(m_), 0);
        for (const auto& r : rows_)
            for (int x : r) ++c[static_cast<std::size_t>(x - 1)];
        return c;
    }

    friend bool operator==(const Tableau&, const Tableau&) = default;
    friend auto operator<=>(const Tableau& a, const Tableau& b) { return a.rows_ <=> b.rows_; }

private:
    std::vector<std::vector<int>> rows_;
    int m_ = 0;
};

/// All SSYT of shape λ with entries ≤ m; empty when λ has more than m parts.
inline std::vector<Tableau> ssyt_enumerate(const Partition& shape, int m) {
    std::vector<Tableau> out;
    if (shape.length() > m) return out;
    std::vector<std::vector<int>> rows;
    for (int len : shape.parts()) rows.emplace_back(static_cast<std::size_t>(len), 0);
    std::vector<std::pair<int, int>> cells;
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c) cells.emplace_back(static_cast<int>(r), static_cast<int>(c));
    std::function<void(std::size_t)> fill = [&](std::size_t k) {
        if (k == cells.size()) {
            out.emplace_back(rows, m);
            return;
        }
        auto [r, c] = cells[k];
        int lo = 1;
        if (c > 0) lo = std::max(lo, rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - 1)]);
        if (r > 0) lo = std::max(lo, rows[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] + 1);
        for (int v = lo; v <= m; ++v) {
            rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
            fill(k + 1);
        }
    };
    fill(0);
    return out;
}

struct InsertResult {
    Tableau tableau;
    std::vector<Partition> chain;  // shape before any letter, then after each
};

/// Schensted row insertion of a weakly increasing word, left to right.
inline InsertResult row_insert(const Tableau& s, const std::vector<int>& word) {
    const int m = s.entry_bound();
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (word[i] < 1 || word[i] > m) throw Error("row_insert: letter outside [1, m]");
        if (i > 0 && word[i] < word[i - 1]) throw Error("row_insert: word is not weakly increasing");
    }
    auto rows = s.rows();
    std::vector<Partition> chain{s.shape()};
    for (int x : word) {
        int carry = x;
        for (std::size_t r = 0;; ++r) {
            if (r == rows.size()) {
                rows.push_back({carry});
                break;
            }
            auto& row = rows[r];
            auto it = std::upper_bound(row.begin(), row.end(), carry);
            if (it == row.end()) {
                row.push_back(carry);
                break;
            }
            std::swap(carry, *it);
        }
        chain.push_back(Tableau(rows, m).shape());
    }
    return {Tableau(rows, m), std::move(chain)};
}

/// λ*b on partitions with at most m parts: horizontal strips of size b,
/// computed through the sequence correspondence with no width cutoff.
inline std::vector<Partition> partition_pieri(const Partition& l, int b, int m) {
    const int n = m + l(1) + b + 1;
    std::vector<Partition> out;
    for (const auto& g : pieri_set(alpha_of(l, n, m), b)) out.push_back(lambda_of(g));
    return out;
}

struct BijectionReport {
    long pairs = 0;
    bool injective = true;
    bool content_preserved = true;
    bool counts_match = true;
    bool chains_in_tree = true;
    bool chains_covered = true;  // every root-to-leaf chain of the tree occurs
    std::map<Partition, long> image_counts;
    std::map<Partition, long> expected_counts;

    bool passed() const { return injective && content_preserved && counts_match && chains_in_tree && chains_covered; }
};

/// Inserting every single-row tableau T of length b into every S of shape λ:
/// checks injectivity, content, image counts against |SSYT(μ)| for μ ∈ λ*b,
/// and that the shape chains are exactly the root-to-leaf chains of T_{α(λ),b}.
inline BijectionReport pieri_bijection_check(const Partition& l, int b, int m) {
    BijectionReport rep;
    const int n = m + l(1) + b + 1;
    const DecSeq root = alpha_of(l, n, m);
    const PieriTree tree = tree_chains(root, b);
    std::set<std::vector<DecSeq>> tree_chain_set(tree.chains.begin(), tree.chains.end());

    for (const auto& mu : partition_pieri(l, b, m))
        rep.expected_counts[mu] = static_cast<long>(ssyt_enumerate(mu, m).size());

    std::set<Tableau> seen;
    std::set<std::vector<DecSeq>> seen_chains;
    const auto words = ssyt_enumerate(Partition({b}), m);
    for (const auto& s : ssyt_enumerate(l, m)) {
        for (const auto& t : words) {
            std::vector<int> word = t.rows().empty() ? std::vector<int>{} : t.rows().front();
            auto res = row_insert(s, word);
            ++rep.pairs;
            if (!seen.insert(res.tableau).second) rep.injective = false;
            auto c1 = s.content();
            auto c2 = t.content();
            for (std::size_t i = 0; i < c1.size(); ++i) c1[i] += c2[i];
            if (c1 != res.tableau.content()) rep.content_preserved = false;
            ++rep.image_counts[res.tableau.shape()];
            std::vector<DecSeq> chain;
            for (const auto& p : res.chain) chain.push_back(alpha_of(p, n, m));
            if (!tree_chain_set.count(chain)) rep.chains_in_tree = false;
            seen_chains.insert(std::move(chain));
        }
    }
    rep.counts_match = rep.image_counts == rep.expected_counts;
    rep.chains_covered = seen_chains == tree_chain_set;
    return rep;
}

/// Polynomial in x_1..x_m with rational coefficients, keyed by exponent
/// vectors of fixed length m. Zero coefficients are never stored.
class SparsePoly {
public:
    using Exponent = std::vector<int>;

    SparsePoly() = default;
    explicit SparsePoly(int m) : m_(m) {}

    static SparsePoly one(int m) {
        SparsePoly p(m);
        p.add(Exponent(static_cast<std::size_t>(m), 0), Rat(1));
        return p;
    }

    int vars() const { return m_; }
    const std::map<Exponent, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rat coeff(const Exponent& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    void add(const Exponent& e, const Rat& c) {
        if (static_cast<int>(e.size()) != m_) throw Error("SparsePoly: exponent length mismatch");
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.try_emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    SparsePoly& operator+=(const SparsePoly& o) {
        check(o);
        for (const auto& [e, c] : o.terms_) add(e, c);
        return *this;
    }
    SparsePoly& operator-=(const SparsePoly& o) {
        check(o);
        for (const auto& [e, c] : o.terms_) add(e, -c);
        return *this;
    }
    friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
    friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
    friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
        a.check(b);
        SparsePoly out(a.m_);
        Exponent e(static_cast<std::size_t>(a.m_));
        for (const auto& [e1, c1] : a.terms_)
            for (const auto& [e2, c2] : b.terms_) {
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
                out.add(e, c1 * c2);
            }
        return out;
    }
    SparsePoly scaled(const Rat& c) const {
        SparsePoly out(m_);
        for (const auto& [e, x] : terms_) out.add(e, x * c);
        return out;
    }

    bool is_symmetric() const {
        for (const auto& [e, c] : terms_)
            for (std::size_t i = 0; i + 1 < e.size(); ++i) {
                Exponent f = e;
                std::swap(f[i], f[i + 1]);
                if (coeff(f) != c) return false;
            }
        return true;
    }

    friend bool operator==(const SparsePoly&, const SparsePoly&) = default;

private:
    void check(const SparsePoly& o) const {
        if (m_ != o.m_) throw Error("SparsePoly: variable count mismatch");
    }

    int m_ = 0;
    std::map<Exponent, Rat> terms_;
};

/// s_λ(x_1..x_m) = Σ_T x^T.
inline SparsePoly schur_expand(const Partition& l, int m) {
    SparsePoly p(m);
    for (const auto& t : ssyt_enumerate(l, m)) p.add(t.content(), Rat(1));
    return p;
}

/// Complete homogeneous h_b = s_(b).
inline SparsePoly h_poly(int b, int m) { return schur_expand(Partition({b}), m); }

using SchurExpansion = std::map<Partition, long>;

/// Coefficients c_μ with p = Σ c_μ s_μ: repeatedly strip the
/// lexicographically largest monomial, which is a partition for symmetric p.
inline SchurExpansion schur_decompose(SparsePoly p, int m) {
    if (p.vars() != m) throw Error("schur_decompose: variable count mismatch");
    if (!p.is_symmetric()) throw Error("schur_decompose: polynomial is not symmetric");
    SchurExpansion out;
    std::map<Partition, SparsePoly> cache;
    const std::size_t cap = 4 * p.terms().size() + 16;
    for (std::size_t step = 0; !p.is_zero(); ++step) {
        if (step > cap) throw Error("schur_decompose: residue does not terminate");
        auto lead = p.terms().rbegin();
        const auto& e = lead->first;
        for (std::size_t i = 0; i + 1 < e.size(); ++i)
            if (e[i] < e[i + 1]) throw Error("schur_decompose: leading exponent is not a partition");
        if (!is_integer(lead->second)) throw Error("schur_decompose: non-integral Schur coefficient");
        Rat c = lead->second;
        Partition mu(e);
        auto it = cache.find(mu);
        if (it == cache.end()) it = cache.emplace(mu, schur_expand(mu, m)).first;
        out[mu] += to_long(c);
        p -= it->second.scaled(c);
    }
    return out;
}

/// Image in the Chow ring of G_m(k^n): s_μ survives iff μ fits in the
/// m × (n − m) box.
inline SchurExpansion chow_project(const SchurExpansion& e, int n, int m) {
    SchurExpansion out;
    for (const auto& [mu, c] : e)
        if (mu.length() <= m && mu(1) <= n - m && c != 0) out[mu] = c;
    return out;
}

inline std::string exponent_key(const std::vector<int>& e) {
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + std::to_string(e[i]);
    return s;
}

}  // namespace pieri
