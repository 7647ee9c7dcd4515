// Exact coefficient fields: the rationals with arbitrary-precision
// arithmetic, and prime fields F_p with a runtime modulus.
//
// Every algebraic object in this library is parameterized over a field
// descriptor type modeling the `Field` concept below.  A descriptor is a
// small value (stateless for Q, the modulus for F_p) through which all
// element arithmetic is routed; elements themselves are plain values
// (cpp_rational resp. uint64_t residues in [0, p)).

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace doihopf {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Raised for malformed input: dimension mismatches, field mismatches,
/// unparsable scalars, invalid tables.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

template <typename F>
concept Field = requires(const F f, const typename F::Elem a, const typename F::Elem b,
                         long long n, const std::string& s) {
    typename F::Elem;
    { f.zero() } -> std::same_as<typename F::Elem>;
    { f.one() } -> std::same_as<typename F::Elem>;
    { f.add(a, b) } -> std::same_as<typename F::Elem>;
    { f.sub(a, b) } -> std::same_as<typename F::Elem>;
    { f.mul(a, b) } -> std::same_as<typename F::Elem>;
    { f.neg(a) } -> std::same_as<typename F::Elem>;
    { f.inv(a) } -> std::same_as<typename F::Elem>;
    { f.is_zero(a) } -> std::same_as<bool>;
    { f.eq(a, b) } -> std::same_as<bool>;
    { f.from_int(n) } -> std::same_as<typename F::Elem>;
    { f.to_string(a) } -> std::same_as<std::string>;
    { f.parse(s) } -> std::same_as<typename F::Elem>;
    { f.name() } -> std::same_as<std::string>;
    { f == f } -> std::same_as<bool>;
};

/// The field Q.  Elements are boost cpp_rational values, which are kept in
/// lowest terms with a positive denominator, so equality is structural.
class Rationals {
public:
    using Elem = BigRat;

    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem inv(const Elem& a) const {
        if (a == 0) throw InputError("division by zero in Q");
        return Elem(1) / a;
    }
    bool is_zero(const Elem& a) const { return a == 0; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    Elem from_int(long long n) const { return Elem(n); }

    /// Canonical form: "n" for integers, otherwise "n/d" in lowest terms
    /// with the sign on the numerator.
    std::string to_string(const Elem& a) const {
        BigInt num = boost::multiprecision::numerator(a);
        BigInt den = boost::multiprecision::denominator(a);
        if (den == 1) return num.str();
        return num.str() + "/" + den.str();
    }

    Elem parse(const std::string& s) const {
        const auto slash = s.find('/');
        try {
            if (slash == std::string::npos) return Elem(BigInt(s));
            BigInt num(s.substr(0, slash));
            BigInt den(s.substr(slash + 1));
            if (den == 0) throw InputError("zero denominator: " + s);
            return Elem(num, den);
        } catch (const std::exception&) {
            throw InputError("cannot parse rational: '" + s + "'");
        }
    }

    std::string name() const { return "Q"; }
    long long characteristic() const { return 0; }
    bool operator==(const Rationals&) const { return true; }
};

/// The prime field F_p, p a prime below 2^31.  Elements are residues in
/// [0, p) stored as uint64_t; products never overflow at this bound.
class PrimeField {
public:
    using Elem = std::uint64_t;

    explicit PrimeField(std::uint64_t p) : p_(p) {
        if (p < 2 || p >= (std::uint64_t(1) << 31) || !is_prime(p))
            throw InputError("modulus must be a prime below 2^31, got " + std::to_string(p));
    }

    Elem zero() const { return 0; }
    Elem one() const { return 1 % p_; }
    Elem add(Elem a, Elem b) const { return (a + b) % p_; }
    Elem sub(Elem a, Elem b) const { return (a + p_ - b % p_) % p_; }
    Elem mul(Elem a, Elem b) const { return (a * b) % p_; }
    Elem neg(Elem a) const { return (p_ - a % p_) % p_; }
    Elem inv(Elem a) const {
        a %= p_;
        if (a == 0) throw InputError("division by zero in " + name());
        return pow_mod(a, p_ - 2);
    }
    bool is_zero(Elem a) const { return a % p_ == 0; }
    bool eq(Elem a, Elem b) const { return a % p_ == b % p_; }
    Elem from_int(long long n) const {
        long long r = n % static_cast<long long>(p_);
        if (r < 0) r += static_cast<long long>(p_);
        return static_cast<Elem>(r);
    }

    std::string to_string(Elem a) const { return std::to_string(a % p_); }

    Elem parse(const std::string& s) const {
        try {
            return from_int(std::stoll(s));
        } catch (const std::exception&) {
            throw InputError("cannot parse element of " + name() + ": '" + s + "'");
        }
    }

    std::string name() const { return "F" + std::to_string(p_); }
    long long characteristic() const { return static_cast<long long>(p_); }
    std::uint64_t modulus() const { return p_; }
    bool operator==(const PrimeField& o) const { return p_ == o.p_; }

private:
    static bool is_prime(std::uint64_t n) {
        if (n < 2) return false;
        for (std::uint64_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }
    Elem pow_mod(Elem base, std::uint64_t e) const {
        Elem acc = 1 % p_;
        base %= p_;
        while (e) {
            if (e & 1) acc = (acc * base) % p_;
            base = (base * base) % p_;
            e >>= 1;
        }
        return acc;
    }

    std::uint64_t p_;
};

static_assert(Field<Rationals>);
static_assert(Field<PrimeField>);

}  // namespace doihopf
