#pragma once

#include <vector>

#include "oos/poly.hpp"
#include "oos/space.hpp"

namespace oos {

/// Linear map as a dim(target) x dim(source) matrix of Poly; column j is the
/// image of the j-th source basis vector.
class LinMap {
public:
    LinMap(RingPtr ring, Space source, Space target); // zero map
    static LinMap identity(RingPtr ring, const Space& s);

    const RingPtr& ring() const { return ring_; }
    const Space& source() const { return source_; }
    const Space& target() const { return target_; }

    const Poly& entry(std::size_t row, std::size_t col) const;
    void set(std::size_t row, std::size_t col, Poly v);
    /// Image of source basis vector j as coordinates in the target.
    std::vector<Poly> column(std::size_t j) const;

    std::vector<Poly> apply(const std::vector<Poly>& v) const;
    /// this after g (source = g.source, target = this->target).
    LinMap compose(const LinMap& g) const;

    LinMap operator+(const LinMap& o) const;
    LinMap operator-(const LinMap& o) const;
    LinMap operator-() const;
    LinMap scaled(const Poly& c) const;
    bool operator==(const LinMap& o) const;
    bool is_zero() const;

private:
    RingPtr ring_;
    Space source_;
    Space target_;
    std::vector<Poly> m_; // row-major
};

/// Kronecker product: (f (x) g)(x (x) y) = f(x) (x) g(y) on the tensor-product
/// spaces; respects composition.
LinMap kron(const LinMap& f, const LinMap& g);

} // namespace oos
