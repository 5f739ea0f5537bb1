#pragma once

#include <optional>
#include <vector>

#include "oos/linmap.hpp"

namespace oos {

/// Bilinear map left (x) right -> target as a structure-constant 3-tensor:
/// b(x_i, y_j) = sum_k c[i][j][k] z_k.
class BilMap {
public:
    BilMap(RingPtr ring, Space left, Space right, Space target); // zero map

    const RingPtr& ring() const { return ring_; }
    const Space& left() const { return left_; }
    const Space& right() const { return right_; }
    const Space& target() const { return target_; }

    const Poly& entry(std::size_t i, std::size_t j, std::size_t k) const;
    void set(std::size_t i, std::size_t j, std::size_t k, Poly v);

    std::vector<Poly> apply(const std::vector<Poly>& x, const std::vector<Poly>& y) const;

    BilMap operator+(const BilMap& o) const;
    BilMap operator-(const BilMap& o) const;
    BilMap operator-() const;
    BilMap scaled(const Poly& c) const;
    bool operator==(const BilMap& o) const;
    bool is_zero() const;

    /// Arguments exchanged: swapped()(x, y) = (*this)(y, x).
    BilMap swapped() const;
    /// b . (f (x) g); pass std::nullopt for an identity leg.
    BilMap precompose(const std::optional<LinMap>& f, const std::optional<LinMap>& g) const;
    /// f . b.
    BilMap then(const LinMap& f) const;

    /// Flattened to a dim(target) x (dim(left)*dim(right)) matrix on the
    /// tensor-product space.
    LinMap as_linear() const;

private:
    RingPtr ring_;
    Space left_;
    Space right_;
    Space target_;
    std::vector<Poly> t_; // (i * dimR + j) * dimT + k
};

/// Inverse of as_linear: reads a linear map on left (x) right back as a
/// bilinear map. Needed for products of the form mu . T.
BilMap bil_from_linear(const LinMap& f, const Space& left, const Space& right);

} // namespace oos
