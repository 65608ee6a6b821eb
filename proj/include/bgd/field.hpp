#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace bgd {

/// Structural or usage error (bad dimensions, unparsable input, dangling
/// names).  Mathematical failures are never exceptions; they are reported
/// as verdicts.
class error : public std::runtime_error {
  public:
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

inline void require(bool cond, const std::string& msg) {
    if (!cond)
        throw error(msg);
}

// ---------------------------------------------------------------------------
// Rationals
// ---------------------------------------------------------------------------

/// The field of rational numbers with arbitrary-precision arithmetic.
/// Elements are always kept canonical (lowest terms, positive denominator).
struct RationalField {
    using Elem = boost::multiprecision::mpq_rational;

    static constexpr bool prime = false;

    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    Elem from_int(long long n) const { return Elem(n); }

    static bool nz(const Elem& x) { return !x.is_zero(); }

    Elem inv(const Elem& x) const {
        require(nz(x), "division by zero");
        return Elem(1) / x;
    }

    /// Accepts "a", "-a", "a/b"; result is canonical.
    Elem parse(const std::string& s) const {
        using Int = boost::multiprecision::mpz_int;
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos)
                return Elem(Int(s));
            Int num(s.substr(0, slash));
            Int den(s.substr(slash + 1));
            require(den != 0, "zero denominator in scalar '" + s + "'");
            return Elem(num, den);  // constructor canonicalizes
        } catch (const std::exception&) {
            throw error("bad rational scalar '" + s + "'");
        }
    }

    /// "a/b" in lowest terms, "/1" omitted.
    std::string str(const Elem& x) const { return x.str(); }

    std::string name() const { return "Q"; }

    bool operator==(const RationalField&) const { return true; }
    bool operator!=(const RationalField&) const { return false; }
};

// ---------------------------------------------------------------------------
// Prime fields
// ---------------------------------------------------------------------------

namespace detail {

inline bool is_prime_u32(uint32_t n) {
    if (n < 2)
        return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

// x^-1 mod p by extended Euclid.
inline uint64_t mod_inverse(uint64_t x, uint64_t p) {
    int64_t t = 0, nt = 1;
    int64_t r = (int64_t)p, nr = (int64_t)(x % p);
    while (nr != 0) {
        int64_t q = r / nr;
        t -= q * nt;
        std::swap(t, nt);
        r -= q * nr;
        std::swap(r, nr);
    }
    if (r != 1)
        throw error("not invertible mod p");
    return (uint64_t)(t < 0 ? t + (int64_t)p : t);
}

}  // namespace detail

/// GF(p) for a prime p < 2^31 (so products fit in 64-bit intermediates).
/// Each element carries its modulus, keeping arithmetic self-contained.
struct PrimeField {
    uint32_t p = 0;

    static constexpr bool prime = true;

    PrimeField() = default;
    explicit PrimeField(uint32_t p_) : p(p_) {
        require(p_ >= 2 && p_ < (1u << 31) && detail::is_prime_u32(p_),
                "modulus must be a prime in [2, 2^31)");
    }

    struct Elem {
        uint64_t v = 0;
        uint32_t p = 0;

        friend Elem operator+(Elem a, Elem b) {
            uint32_t m = a.p ? a.p : b.p;
            assert(!a.p || !b.p || a.p == b.p);
            return {(a.v + b.v) % m, m};
        }
        friend Elem operator-(Elem a, Elem b) {
            uint32_t m = a.p ? a.p : b.p;
            assert(!a.p || !b.p || a.p == b.p);
            return {(a.v + m - b.v) % m, m};
        }
        friend Elem operator*(Elem a, Elem b) {
            uint32_t m = a.p ? a.p : b.p;
            assert(!a.p || !b.p || a.p == b.p);
            return {(a.v * b.v) % m, m};
        }
        Elem operator-() const { return {v == 0 ? 0 : p - v, p}; }
        Elem& operator+=(Elem b) { return *this = *this + b; }
        Elem& operator-=(Elem b) { return *this = *this - b; }
        Elem& operator*=(Elem b) { return *this = *this * b; }
        friend bool operator==(Elem a, Elem b) { return a.v == b.v; }
        friend bool operator!=(Elem a, Elem b) { return a.v != b.v; }
    };

    Elem zero() const { return {0, p}; }
    Elem one() const { return {1 % p, p}; }
    Elem from_int(long long n) const {
        long long r = n % (long long)p;
        if (r < 0)
            r += p;
        return {(uint64_t)r, p};
    }

    static bool nz(const Elem& x) { return x.v != 0; }

    Elem inv(const Elem& x) const {
        require(x.v != 0, "division by zero");
        return {detail::mod_inverse(x.v, p), p};
    }

    /// Decimal residue, canonical representative in [0, p).
    Elem parse(const std::string& s) const {
        try {
            long long n = std::stoll(s);
            return from_int(n);
        } catch (const std::exception&) {
            throw error("bad GF(p) scalar '" + s + "'");
        }
    }

    std::string str(const Elem& x) const { return std::to_string(x.v); }

    std::string name() const { return "GF:" + std::to_string(p); }

    bool operator==(const PrimeField& o) const { return p == o.p; }
    bool operator!=(const PrimeField& o) const { return p != o.p; }
};

// ---------------------------------------------------------------------------
// Runtime field descriptor (CLI / serialization boundary)
// ---------------------------------------------------------------------------

/// Which exact field a workspace lives over.  The library itself is
/// templated on the field type; FieldSpec is the runtime tag used to pick
/// the instantiation.
struct FieldSpec {
    enum class Kind { Rationals, Prime };
    Kind kind = Kind::Rationals;
    uint32_t p = 0;

    static FieldSpec rationals() { return {Kind::Rationals, 0}; }
    static FieldSpec prime(uint32_t p) {
        PrimeField check(p);  // validates
        return {Kind::Prime, check.p};
    }

    /// "Q" or "GF:p".
    static FieldSpec parse(const std::string& s) {
        if (s == "Q" || s == "QQ")
            return rationals();
        if (s.rfind("GF:", 0) == 0) {
            try {
                return prime((uint32_t)std::stoul(s.substr(3)));
            } catch (const error&) {
                throw;
            } catch (const std::exception&) {
                throw error("bad field spec '" + s + "'");
            }
        }
        throw error("bad field spec '" + s + "' (expected Q or GF:p)");
    }

    std::string str() const {
        return kind == Kind::Rationals ? "Q" : "GF:" + std::to_string(p);
    }
};

}  // namespace bgd
