#pragma once

#include <string>

#include "oos/error.hpp"
#include "oos/rational.hpp"

namespace oos {

constexpr int kMaxPrime = 251;

bool is_prime(int n);

/// Coefficient field: the rationals, or a prime field F_p with 2 <= p <= 251.
/// Elements of either are carried as Rat values; F_p elements are residues in
/// [0, p) with denominator 1.
class Field {
public:
    static Field rationals() { return Field(0); }
    static Field prime(int p) {
        require(p >= 2 && p <= kMaxPrime, "prime field modulus out of range [2, 251]: " + std::to_string(p));
        require(is_prime(p), "not a prime: " + std::to_string(p));
        return Field(p);
    }
    /// "Q" or "F<p>".
    static Field parse(const std::string& name);

    bool is_rationals() const { return p_ == 0; }
    bool is_prime_field() const { return p_ != 0; }
    int modulus() const { return p_; }
    int characteristic() const { return p_; }

    std::string name() const { return p_ == 0 ? "Q" : "F" + std::to_string(p_); }

    friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_; }
    friend bool operator!=(const Field& a, const Field& b) { return !(a == b); }

    /// Canonical representative: reduced fraction over Q, residue over F_p.
    /// Over F_p a fractional input n/d is mapped to n * d^-1 mod p; a
    /// denominator divisible by p is rejected.
    Rat normalize(const Rat& x) const;

    Rat add(const Rat& a, const Rat& b) const { return normalize(a + b); }
    Rat sub(const Rat& a, const Rat& b) const { return normalize(a - b); }
    Rat mul(const Rat& a, const Rat& b) const { return normalize(a * b); }
    Rat neg(const Rat& a) const { return normalize(-a); }
    Rat div(const Rat& a, const Rat& b) const;
    Rat inv(const Rat& a) const;

private:
    explicit Field(int p) : p_(p) {}
    int p_; // 0 = rationals
};

} // namespace oos
