#pragma once

#include "pieri/poly.hpp"
#include "pieri/rational.hpp"

#include <algorithm>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pieri {

template <class F>
using Row = std::vector<F>;

namespace detail {

template <class F>
struct Echelon {
    std::vector<Row<F>> rows;
    std::vector<int> pivots;  // 0-based column of the leading 1 in each row
};

inline int pivot_cost(const Rat&) { return 0; }
inline int pivot_cost(const RatFunc& f) { return f.num().degree() + f.den().degree(); }

/// Reduced row echelon form; leading entries normalized to 1.
template <class F>
Echelon<F> rref(std::vector<Row<F>> rows, int ncols) {
    int rank = 0;
    std::vector<int> pivots;
    const int nrows = static_cast<int>(rows.size());
    for (int c = 0; c < ncols && rank < nrows; ++c) {
        int best = -1;
        int best_cost = 0;
        for (int r = rank; r < nrows; ++r) {
            const F& x = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
            if (is_zero(x)) continue;
            int cost = pivot_cost(x);
            if (best < 0 || cost < best_cost) {
                best = r;
                best_cost = cost;
            }
        }
        if (best < 0) continue;
        std::swap(rows[static_cast<std::size_t>(rank)], rows[static_cast<std::size_t>(best)]);
        Row<F>& prow = rows[static_cast<std::size_t>(rank)];
        if (!(prow[static_cast<std::size_t>(c)] == F(1))) {
            F inv = F(1) / prow[static_cast<std::size_t>(c)];
            for (int k = c; k < ncols; ++k) prow[static_cast<std::size_t>(k)] = prow[static_cast<std::size_t>(k)] * inv;
        }
        for (int r = 0; r < nrows; ++r) {
            if (r == rank) continue;
            Row<F>& row = rows[static_cast<std::size_t>(r)];
            F f = row[static_cast<std::size_t>(c)];
            if (is_zero(f)) continue;
            for (int k = c; k < ncols; ++k)
                row[static_cast<std::size_t>(k)] = row[static_cast<std::size_t>(k)] - f * prow[static_cast<std::size_t>(k)];
        }
        pivots.push_back(c);
        ++rank;
    }
    rows.resize(static_cast<std::size_t>(rank));
    return {std::move(rows), std::move(pivots)};
}

}  // namespace detail

/// A linear subspace of F^n held in reduced echelon form: basis vectors are
/// the rows, each has a leading 1 at its pivot coordinate (pivots chosen
/// top-down) and every other basis vector vanishes there. The form is unique,
/// so equality of subspaces is equality of representations.
template <class F>
class BasicSubspace {
public:
    BasicSubspace() = default;
    explicit BasicSubspace(int n) : n_(n) {}

    static BasicSubspace span(int n, std::vector<Row<F>> vectors) {
        for (const auto& v : vectors)
            if (static_cast<int>(v.size()) != n) throw Error("span: vector length does not match ambient dimension");
        auto e = detail::rref(std::move(vectors), n);
        BasicSubspace s(n);
        s.rows_ = std::move(e.rows);
        s.pivots_ = std::move(e.pivots);
        return s;
    }
    static BasicSubspace zero(int n) { return BasicSubspace(n); }
    static BasicSubspace whole(int n) {
        std::vector<Row<F>> rows;
        for (int i = 1; i <= n; ++i) rows.push_back(unit(n, i));
        return span(n, std::move(rows));
    }
    /// span{e_i | i in indices}, 1-based.
    static BasicSubspace coordinate(int n, const std::vector<int>& indices) {
        std::vector<Row<F>> rows;
        for (int i : indices) {
            if (i < 1 || i > n) throw Error("coordinate index out of range");
            rows.push_back(unit(n, i));
        }
        return span(n, std::move(rows));
    }
    static Row<F> unit(int n, int i) {
        Row<F> v(static_cast<std::size_t>(n), F(0));
        v.at(static_cast<std::size_t>(i - 1)) = F(1);
        return v;
    }

    int ambient() const { return n_; }
    int dim() const { return static_cast<int>(rows_.size()); }
    bool is_zero() const { return rows_.empty(); }
    const std::vector<Row<F>>& basis() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }

    /// Reduce v modulo this subspace (clears the pivot coordinates).
    Row<F> reduce(Row<F> v) const {
        if (static_cast<int>(v.size()) != n_) throw Error("reduce: vector length mismatch");
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            auto p = static_cast<std::size_t>(pivots_[i]);
            F f = v[p];
            if (pieri::is_zero(f)) continue;
            for (std::size_t k = p; k < v.size(); ++k) v[k] = v[k] - f * rows_[i][k];
        }
        return v;
    }

    bool contains(const Row<F>& v) const {
        auto r = reduce(v);
        return std::all_of(r.begin(), r.end(), [](const F& x) { return pieri::is_zero(x); });
    }

    /// this ⊆ other
    bool is_subspace_of(const BasicSubspace& other) const {
        check_same(other);
        return std::all_of(rows_.begin(), rows_.end(), [&](const Row<F>& v) { return other.contains(v); });
    }

    void check_same(const BasicSubspace& other) const {
        if (n_ != other.n_)
            throw Error("ambient dimension mismatch (" + std::to_string(n_) + " vs " + std::to_string(other.n_) + ")");
    }

    friend bool operator==(const BasicSubspace& a, const BasicSubspace& b) {
        return a.n_ == b.n_ && a.pivots_ == b.pivots_ && a.rows_ == b.rows_;
    }

private:
    int n_ = 0;
    std::vector<Row<F>> rows_;
    std::vector<int> pivots_;
};

using Subspace = BasicSubspace<Rat>;
using FuncSubspace = BasicSubspace<RatFunc>;

template <class F>
BasicSubspace<F> canonicalize(int n, std::vector<Row<F>> vectors) {
    return BasicSubspace<F>::span(n, std::move(vectors));
}

template <class F>
BasicSubspace<F> sum_span(const BasicSubspace<F>& a, const BasicSubspace<F>& b) {
    a.check_same(b);
    std::vector<Row<F>> rows = a.basis();
    rows.insert(rows.end(), b.basis().begin(), b.basis().end());
    return BasicSubspace<F>::span(a.ambient(), std::move(rows));
}

template <class F>
BasicSubspace<F> sum_span(const BasicSubspace<F>& a, const Row<F>& v) {
    std::vector<Row<F>> rows = a.basis();
    rows.push_back(v);
    return BasicSubspace<F>::span(a.ambient(), std::move(rows));
}

/// {y | y·v = 0 for all v in a}, under the standard pairing.
template <class F>
BasicSubspace<F> annihilator(const BasicSubspace<F>& a) {
    const int n = a.ambient();
    std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
    for (int p : a.pivots()) is_pivot[static_cast<std::size_t>(p)] = true;
    std::vector<Row<F>> out;
    for (int f = 0; f < n; ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) continue;
        Row<F> y(static_cast<std::size_t>(n), F(0));
        y[static_cast<std::size_t>(f)] = F(1);
        for (std::size_t i = 0; i < a.basis().size(); ++i)
            y[static_cast<std::size_t>(a.pivots()[i])] = -a.basis()[i][static_cast<std::size_t>(f)];
        out.push_back(std::move(y));
    }
    return BasicSubspace<F>::span(n, std::move(out));
}

template <class F>
BasicSubspace<F> intersect(const BasicSubspace<F>& a, const BasicSubspace<F>& b) {
    a.check_same(b);
    if (a.is_zero() || b.is_zero()) return BasicSubspace<F>::zero(a.ambient());
    return annihilator(sum_span(annihilator(a), annihilator(b)));
}

template <class F, class... Rest>
BasicSubspace<F> intersect(const BasicSubspace<F>& a, const BasicSubspace<F>& b, const Rest&... rest) {
    return intersect(intersect(a, b), rest...);
}

/// Coordinates of V/K: the non-pivot coordinates of K's echelon form. The
/// image of v is obtained by reducing v modulo K and keeping those entries.
template <class F>
std::vector<int> quotient_chart(const BasicSubspace<F>& k) {
    std::vector<bool> is_pivot(static_cast<std::size_t>(k.ambient()), false);
    for (int p : k.pivots()) is_pivot[static_cast<std::size_t>(p)] = true;
    std::vector<int> free;
    for (int i = 0; i < k.ambient(); ++i)
        if (!is_pivot[static_cast<std::size_t>(i)]) free.push_back(i);
    return free;
}

template <class F>
Row<F> quotient_image(const Row<F>& v, const BasicSubspace<F>& k) {
    auto r = k.reduce(v);
    Row<F> out;
    for (int i : quotient_chart(k)) out.push_back(r[static_cast<std::size_t>(i)]);
    return out;
}

/// Image of A in V/K, in the chart given by quotient_chart(K).
template <class F>
BasicSubspace<F> quotient_subspace(const BasicSubspace<F>& a, const BasicSubspace<F>& k) {
    a.check_same(k);
    std::vector<Row<F>> rows;
    for (const auto& v : a.basis()) rows.push_back(quotient_image(v, k));
    return BasicSubspace<F>::span(a.ambient() - k.dim(), std::move(rows));
}

inline Subspace span_of(int n, std::vector<Vec> vectors) { return Subspace::span(n, std::move(vectors)); }

/// Rank of a list of vectors of length n.
template <class F>
int rank_of(int n, std::vector<Row<F>> vectors) {
    return BasicSubspace<F>::span(n, std::move(vectors)).dim();
}

/// Determinant of a square matrix given by rows.
template <class F>
F determinant(std::vector<Row<F>> m) {
    const std::size_t n = m.size();
    F det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && is_zero(m[p][c])) ++p;
        if (p == n) return F(0);
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det = det * m[c][c];
        F inv = F(1) / m[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            F f = m[r][c] * inv;
            if (is_zero(f)) continue;
            for (std::size_t k = c; k < n; ++k) m[r][k] = m[r][k] - f * m[c][k];
        }
    }
    return det;
}

/// Inverse of a square rational matrix (rows); throws when singular.
inline std::vector<Vec> inverse(const std::vector<Vec>& m) {
    const int n = static_cast<int>(m.size());
    std::vector<Vec> aug;
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(m[static_cast<std::size_t>(i)].size()) != n) throw Error("inverse: matrix not square");
        Vec row = m[static_cast<std::size_t>(i)];
        for (int j = 0; j < n; ++j) row.push_back(i == j ? Rat(1) : Rat(0));
        aug.push_back(std::move(row));
    }
    auto e = detail::rref(std::move(aug), 2 * n);
    if (static_cast<int>(e.rows.size()) < n || e.pivots[static_cast<std::size_t>(n - 1)] != n - 1)
        throw Error("inverse: singular matrix");
    std::vector<Vec> inv;
    for (auto& row : e.rows) inv.emplace_back(row.begin() + n, row.end());
    return inv;
}

inline std::vector<Vec> transpose(const std::vector<Vec>& m, int ncols) {
    std::vector<Vec> t(static_cast<std::size_t>(ncols), Vec(m.size(), Rat(0)));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (int j = 0; j < ncols; ++j) t[static_cast<std::size_t>(j)][i] = m[i][static_cast<std::size_t>(j)];
    return t;
}

/// Coordinates with respect to a fixed basis of a subspace W ⊆ Q^n, so that
/// subspaces of W can be handled as subspaces of Q^{dim W}.
class Chart {
public:
    Chart() = default;
    Chart(int n, std::vector<Vec> basis) : n_(n), basis_(std::move(basis)) {
        if (rank_of(n_, basis_) != static_cast<int>(basis_.size())) throw Error("chart basis is not independent");
        // Left inverse through the pivot coordinates of the basis matrix.
        auto rows = Subspace::span(n_, basis_);
        pivot_rows_ = rows.pivots();
        std::vector<Vec> square;
        for (int p : pivot_rows_) {
            Vec r;
            for (const auto& b : basis_) r.push_back(b[static_cast<std::size_t>(p)]);
            square.push_back(std::move(r));
        }
        left_inverse_ = basis_.empty() ? std::vector<Vec>{} : inverse(square);
    }

    int ambient() const { return n_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<Vec>& basis() const { return basis_; }
    Subspace image() const { return Subspace::span(n_, basis_); }

    Vec from_coords(const Vec& c) const {
        if (static_cast<int>(c.size()) != dim()) throw Error("chart: coordinate length mismatch");
        Vec v(static_cast<std::size_t>(n_), Rat(0));
        for (std::size_t k = 0; k < basis_.size(); ++k) {
            if (c[k].is_zero()) continue;
            for (int i = 0; i < n_; ++i) v[static_cast<std::size_t>(i)] += c[k] * basis_[k][static_cast<std::size_t>(i)];
        }
        return v;
    }

    /// Coordinates of v; throws when v is not in the span.
    Vec to_coords(const Vec& v) const {
        Vec c(basis_.size(), Rat(0));
        for (std::size_t k = 0; k < basis_.size(); ++k)
            for (std::size_t p = 0; p < pivot_rows_.size(); ++p)
                c[k] += left_inverse_[k][p] * v[static_cast<std::size_t>(pivot_rows_[p])];
        if (from_coords(c) != v) throw Error("chart: vector not in the charted subspace");
        return c;
    }

    Subspace to_coords(const Subspace& s) const {
        std::vector<Vec> rows;
        for (const auto& v : s.basis()) rows.push_back(to_coords(v));
        return Subspace::span(dim(), std::move(rows));
    }
    Subspace from_coords(const Subspace& s) const {
        std::vector<Vec> rows;
        for (const auto& v : s.basis()) rows.push_back(from_coords(v));
        return Subspace::span(n_, std::move(rows));
    }

private:
    int n_ = 0;
    std::vector<Vec> basis_;
    std::vector<int> pivot_rows_;
    std::vector<Vec> left_inverse_;  // dim x |pivot_rows_|
};

/// Random vector of the subspace: combination of its echelon basis with
/// nonzero integer coefficients.
inline Vec random_vector(const Subspace& s, Rng& rng) {
    Vec v(static_cast<std::size_t>(s.ambient()), Rat(0));
    for (const auto& b : s.basis()) {
        Rat c = rng.nonzero();
        for (std::size_t i = 0; i < v.size(); ++i) v[i] += c * b[i];
    }
    return v;
}

inline bool is_zero_vector(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x.is_zero(); });
}

}  // namespace pieri
