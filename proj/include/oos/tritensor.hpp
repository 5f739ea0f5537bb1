#pragma once

#include "oos/bilmap.hpp"

namespace oos {

/// Trilinear map s0 (x) s1 (x) s2 -> target as a 4-index tensor of Poly.
/// Every three-variable axiom residual is a signed sum of these.
class TriTensor {
public:
    TriTensor(RingPtr ring, Space s0, Space s1, Space s2, Space target); // zero

    /// (x, y, z) -> outer(inner(x, y), z); inner.target must match outer.left.
    static TriTensor left_nested(const BilMap& outer, const BilMap& inner);
    /// (x, y, z) -> outer(x, inner(y, z)); inner.target must match outer.right.
    static TriTensor right_nested(const BilMap& outer, const BilMap& inner);

    const RingPtr& ring() const { return ring_; }
    const Space& slot(std::size_t i) const;
    const Space& target() const { return target_; }

    const Poly& entry(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const;

    TriTensor operator+(const TriTensor& o) const;
    TriTensor operator-(const TriTensor& o) const;
    /// First two inputs exchanged; the pre-Lie residual is t - t.swap01().
    TriTensor swap01() const;

    bool is_zero() const;

private:
    RingPtr ring_;
    Space s0_, s1_, s2_, target_;
    std::vector<Poly> t_; // ((i * d1 + j) * d2 + k) * dt + l
    std::size_t at(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const;
};

} // namespace oos
