#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pieri {

/// Exact rational scalar. Expression templates are disabled so that `auto`
/// never captures a dangling temporary.
using Rat = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                          boost::multiprecision::et_off>;

using Vec = std::vector<Rat>;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline bool is_zero(const Rat& x) { return x.is_zero(); }

inline Rat rat(std::int64_t p, std::int64_t q = 1) {
    if (q == 0) throw Error("rational with zero denominator");
    return Rat(p) / Rat(q);
}

/// "p/q" or "p"; the denominator is always positive.
inline std::string to_string(const Rat& x) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    auto num = numerator(x);
    auto den = denominator(x);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

inline Rat parse_rat(std::string_view s) {
    auto trim = [](std::string_view v) {
        while (!v.empty() && (v.front() == ' ' || v.front() == '\t')) v.remove_prefix(1);
        while (!v.empty() && (v.back() == ' ' || v.back() == '\t')) v.remove_suffix(1);
        return v;
    };
    s = trim(s);
    if (s.empty()) throw Error("empty rational literal");
    auto valid_int = [](std::string_view v) {
        if (v.empty()) return false;
        std::size_t i = (v.front() == '-' || v.front() == '+') ? 1 : 0;
        if (i == v.size()) return false;
        for (; i < v.size(); ++i)
            if (v[i] < '0' || v[i] > '9') return false;
        return true;
    };
    auto slash = s.find('/');
    std::string_view num = trim(s.substr(0, slash));
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : trim(s.substr(slash + 1));
    if (!valid_int(num) || !valid_int(den)) throw Error("malformed rational literal '" + std::string(s) + "'");
    using boost::multiprecision::mpz_int;
    mpz_int p(std::string(num.front() == '+' ? num.substr(1) : num));
    mpz_int q(std::string(den.front() == '+' ? den.substr(1) : den));
    if (q == 0) throw Error("rational with zero denominator");
    return Rat(p) / Rat(q);
}

inline bool is_integer(const Rat& x) { return boost::multiprecision::denominator(x) == 1; }

inline long to_long(const Rat& x) {
    if (!is_integer(x)) throw Error("non-integral rational " + to_string(x));
    return boost::multiprecision::numerator(x).convert_to<long>();
}

inline Rat dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw Error("dot: length mismatch");
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Vec unit_vector(int n, int i) {
    Vec v(static_cast<std::size_t>(n), Rat(0));
    v.at(static_cast<std::size_t>(i - 1)) = 1;
    return v;
}

/// Seeded source of small random rationals. libstdc++ and libc++ disagree on
/// distribution algorithms, so values are drawn straight from the engine.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed ^ 0x9e3779b97f4a7c15ULL) {}

    /// Uniform integer in [lo, hi].
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        auto span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<std::int64_t>(engine_() % span);
    }

    /// Integer in [-bound, bound].
    Rat small(std::int64_t bound = 9) { return Rat(uniform(-bound, bound)); }

    Rat nonzero(std::int64_t bound = 9) {
        for (;;) {
            auto v = uniform(-bound, bound);
            if (v != 0) return Rat(v);
        }
    }

    std::uint64_t next() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

}  // namespace pieri
