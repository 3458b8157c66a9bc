#pragma once

#include "pieri/rational.hpp"

#include <algorithm>
#include <utility>

namespace pieri {

/// Univariate polynomial in t with rational coefficients, stored
/// lowest-degree first with no trailing zeros (the zero polynomial is empty).
class Poly {
public:
    Poly() = default;
    Poly(const Rat& c) : coeffs_{c} { trim(); }  // NOLINT: implicit lift of scalars
    Poly(int c) : Poly(Rat(c)) {}               // NOLINT
    explicit Poly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    /// The monomial c * t^k.
    static Poly monomial(const Rat& c, int k) {
        std::vector<Rat> v(static_cast<std::size_t>(k) + 1, Rat(0));
        v.back() = c;
        return Poly(std::move(v));
    }
    static Poly t() { return monomial(Rat(1), 1); }

    const std::vector<Rat>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Rat coeff(int k) const {
        return k >= 0 && k < static_cast<int>(coeffs_.size()) ? coeffs_[static_cast<std::size_t>(k)] : Rat(0);
    }
    Rat lead() const { return coeffs_.empty() ? Rat(0) : coeffs_.back(); }

    /// t-adic valuation; throws on zero.
    int valuation() const {
        if (is_zero()) throw Error("valuation of zero polynomial");
        int k = 0;
        while (coeffs_[static_cast<std::size_t>(k)].is_zero()) ++k;
        return k;
    }

    Rat operator()(const Rat& x) const {
        Rat acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    /// Divide by t; requires a zero constant term.
    Poly div_t() const {
        if (is_zero()) return {};
        if (!coeffs_.front().is_zero()) throw Error("div_t: constant term is nonzero");
        return Poly(std::vector<Rat>(coeffs_.begin() + 1, coeffs_.end()));
    }

    /// p(t + c), by repeated synthetic division by t - c.
    Poly shifted(const Rat& c) const {
        if (c.is_zero() || coeffs_.size() < 2) return *this;
        std::vector<Rat> a = coeffs_;
        const std::size_t d = a.size() - 1;
        Rat tmp;
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = d - 1;; --j) {
                tmp = c * a[j + 1];
                a[j] += tmp;
                if (j == i) break;
            }
        return Poly(std::move(a));
    }

    /// Multiplicity of c as a root; throws on zero.
    int order_at(const Rat& c) const {
        if (is_zero()) throw Error("order of zero polynomial");
        std::vector<Rat> a = coeffs_;
        int k = 0;
        Rat tmp;
        while (a.size() > 1) {
            // Quotient and remainder of a by (t - c), in place.
            for (std::size_t j = a.size() - 1; j-- > 0;) {
                tmp = c * a[j + 1];
                a[j] += tmp;
            }
            if (!a.front().is_zero()) break;
            a.erase(a.begin());
            ++k;
        }
        return k;
    }

    Poly monic() const {
        if (is_zero()) return {};
        Rat l = lead();
        std::vector<Rat> v = coeffs_;
        for (auto& c : v) c /= l;
        return Poly(std::move(v));
    }

    Poly operator-() const {
        std::vector<Rat> v = coeffs_;
        for (auto& c : v) c = -c;
        return Poly(std::move(v));
    }

    Poly& operator+=(const Poly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rat(0));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rat(0));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rat> v(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return Poly(std::move(v));
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

    /// Euclidean division: returns (q, r) with a = q*b + r, deg r < deg b.
    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        if (b.is_zero()) throw Error("polynomial division by zero");
        if (a.degree() < b.degree()) return {Poly{}, a};
        std::vector<Rat> rem = a.coeffs_;
        std::vector<Rat> quo(static_cast<std::size_t>(a.degree() - b.degree() + 1), Rat(0));
        const Rat lb = b.lead();
        for (int k = a.degree() - b.degree(); k >= 0; --k) {
            Rat c = rem[static_cast<std::size_t>(k + b.degree())] / lb;
            quo[static_cast<std::size_t>(k)] = c;
            if (c.is_zero()) continue;
            for (int i = 0; i <= b.degree(); ++i)
                rem[static_cast<std::size_t>(k + i)] -= c * b.coeffs_[static_cast<std::size_t>(i)];
        }
        return {Poly(std::move(quo)), Poly(std::move(rem))};
    }

    /// Exact quotient; throws when b does not divide a.
    static Poly exact_div(const Poly& a, const Poly& b) {
        auto [q, r] = divmod(a, b);
        if (!r.is_zero()) throw Error("exact_div: nonzero remainder");
        return q;
    }

    /// Monic gcd; gcd(0, 0) = 0.
    static Poly gcd(Poly a, Poly b) {
        if (a.is_zero()) return b.monic();
        a = a.monic();
        while (!b.is_zero()) {
            if (b.degree() == 0) return Poly(1);
            Poly r = divmod(a, b).second;
            a = b.monic();
            b = r.is_zero() ? std::move(r) : r.monic();
        }
        return a;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    std::vector<Rat> coeffs_;
};

inline bool is_zero(const Poly& p) { return p.is_zero(); }

/// Element of the rational function field Q(t), kept as num/den with monic
/// denominator and gcd(num, den) = 1.
class RatFunc {
public:
    RatFunc() : den_(1) {}
    RatFunc(const Rat& c) : num_(c), den_(1) {}  // NOLINT
    RatFunc(int c) : RatFunc(Rat(c)) {}         // NOLINT
    RatFunc(const Poly& p) : num_(p), den_(1) {}  // NOLINT
    RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    /// Evaluate at a point where the denominator does not vanish.
    Rat operator()(const Rat& x) const {
        Rat d = den_(x);
        if (d.is_zero()) throw Error("rational function has a pole at " + to_string(x));
        return num_(x) / d;
    }

    RatFunc operator-() const { return RatFunc(-num_, den_, raw_tag{}); }
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.is_polynomial() && b.is_polynomial()) return RatFunc(a.num_ + b.num_, Poly(1), raw_tag{});
        if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
        if (b.is_polynomial()) return RatFunc(a.num_ + b.num_ * a.den_, a.den_, raw_tag{});
        if (a.is_polynomial()) return RatFunc(a.num_ * b.den_ + b.num_, b.den_, raw_tag{});
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        if (a.is_zero() || b.is_zero()) return {};
        // Both operands are reduced, so cancelling across suffices.
        Poly g1 = b.is_polynomial() ? Poly(1) : Poly::gcd(a.num_, b.den_);
        Poly g2 = a.is_polynomial() ? Poly(1) : Poly::gcd(b.num_, a.den_);
        Poly n1 = g1.degree() > 0 ? Poly::exact_div(a.num_, g1) : a.num_;
        Poly d2 = g1.degree() > 0 ? Poly::exact_div(b.den_, g1) : b.den_;
        Poly n2 = g2.degree() > 0 ? Poly::exact_div(b.num_, g2) : b.num_;
        Poly d1 = g2.degree() > 0 ? Poly::exact_div(a.den_, g2) : a.den_;
        return RatFunc(n1 * n2, d1 * d2, raw_tag{});
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw Error("rational function division by zero");
        return a * b.inverse();
    }
    RatFunc inverse() const {
        if (is_zero()) throw Error("rational function division by zero");
        const Rat l = num_.lead();
        return RatFunc(den_ * Poly(Rat(1) / l), num_ * Poly(Rat(1) / l), raw_tag{});
    }
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
    friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

private:
    struct raw_tag {};
    RatFunc(Poly num, Poly den, raw_tag) : num_(std::move(num)), den_(std::move(den)) {}

    void normalize() {
        if (den_.is_zero()) throw Error("rational function with zero denominator");
        if (num_.is_zero()) {
            den_ = Poly(1);
            return;
        }
        if (den_.degree() > 0) {
            Poly g = Poly::gcd(num_, den_);
            if (g.degree() > 0) {
                num_ = Poly::exact_div(num_, g);
                den_ = Poly::exact_div(den_, g);
            }
        }
        Rat l = den_.lead();
        if (l != 1) {
            num_ = num_ * Poly(Rat(1) / l);
            den_ = den_ * Poly(Rat(1) / l);
        }
    }

    Poly num_;
    Poly den_;
};

inline bool is_zero(const RatFunc& f) { return f.is_zero(); }

}  // namespace pieri
