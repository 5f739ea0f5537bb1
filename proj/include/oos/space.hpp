#pragma once

#include <string>
#include <vector>

#include "oos/error.hpp"

namespace oos {

/// Named finite-dimensional vector space with an ordered basis of distinct
/// labels. Basis order is part of the identity. Tensor-product spaces join
/// names and labels with '*'; bundle files therefore reserve '*' in declared
/// names (enforced by the bundle schema, not here).
class Space {
public:
    Space(std::string name, std::vector<std::string> basis);

    const std::string& name() const { return name_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<std::string>& basis() const { return basis_; }
    const std::string& label(std::size_t i) const { return basis_.at(i); }
    int index_of(const std::string& label) const; // -1 if absent

    friend bool operator==(const Space& a, const Space& b) {
        return a.name_ == b.name_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const Space& a, const Space& b) { return !(a == b); }

private:
    std::string name_;
    std::vector<std::string> basis_;
};

/// X (x) Y with row-major lexicographic basis: pair (i, j) comes before
/// (i', j') iff i < i' or (i == i' and j < j'). Names and labels join with
/// '*', which makes the construction associative on the nose; pseudotwistor
/// matrices depend on this ordering.
Space tensor_space(const Space& x, const Space& y);

} // namespace oos
