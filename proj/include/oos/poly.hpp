#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "oos/field.hpp"

namespace oos {

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

/// Exponent vector; length equals the ring's parameter count.
using Exponents = std::vector<std::uint32_t>;

/// Graded-lexicographic order, larger monomials first. Variables are ordered
/// alphabetically by the ring, so iteration order doubles as print order.
struct MonoDescending {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Multivariate polynomial ring over Q or F_p in named parameters. Parameter
/// names are sorted and de-duplicated at construction; rings compare by value.
class PolyRing {
public:
    static RingPtr make(Field field, std::vector<std::string> params = {});

    const Field& field() const { return field_; }
    const std::vector<std::string>& params() const { return params_; }
    std::size_t arity() const { return params_.size(); }
    int param_index(const std::string& name) const; // -1 if absent

    friend bool operator==(const PolyRing& a, const PolyRing& b) {
        return a.field_ == b.field_ && a.params_ == b.params_;
    }

private:
    PolyRing(Field field, std::vector<std::string> params);
    Field field_;
    std::vector<std::string> params_;
};

/// Canonical-form polynomial: a map from exponent vector to nonzero
/// coefficient. Two values over equal rings are equal iff the maps are
/// identical. Immutable in use; all operations return fresh values.
class Poly {
public:
    using Terms = std::map<Exponents, Rat, MonoDescending>;

    static Poly zero(RingPtr ring);
    static Poly constant(RingPtr ring, const Rat& value);
    static Poly parameter(RingPtr ring, const std::string& name);
    /// Parses the grammar described in the README; throws Error with a
    /// 1-based position on syntax errors and unknown variables.
    static Poly parse(RingPtr ring, const std::string& text);

    const RingPtr& ring() const { return ring_; }
    const Terms& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Constant term (the value when every parameter is zero).
    Rat constant_value() const;
    std::uint32_t total_degree() const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    Poly scaled(const Rat& c) const;

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    /// Total order used for deduplicated, canonically ordered constraint
    /// sets: compares term sequences under the monomial order.
    static int compare(const Poly& a, const Poly& b);

    /// Same polynomial with positive leading coefficient (no-op over F_p,
    /// where residues carry no sign).
    Poly sign_normalized() const;

    /// Ring homomorphism into the base field; the assignment must cover
    /// every parameter of the ring.
    Rat eval(const std::map<std::string, Rat>& assignment) const;

    std::string str() const;

private:
    explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}
    void insert_term(const Exponents& e, const Rat& c); // accumulates, drops zeros
    static void check_same_ring(const Poly& a, const Poly& b);

    RingPtr ring_;
    Terms terms_;
};

} // namespace oos
