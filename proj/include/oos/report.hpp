#pragma once

#include <string>
#include <vector>

#include "oos/bilmap.hpp"
#include "oos/linmap.hpp"
#include "oos/tritensor.hpp"

namespace oos {

enum class Verdict { Holds, ConditionallyHolds, Fails };

std::string verdict_name(Verdict v);

/// One nonzero entry of a residual tensor: basis labels of the inputs
/// followed by the output label, and the polynomial that must vanish.
struct ResidualEntry {
    std::vector<std::string> index;
    Poly value;
};

/// Residual of one tagged equation; empty entry list means the identity
/// holds on the nose.
struct EquationResult {
    std::string tag;
    std::vector<ResidualEntry> nonzero;
    bool holds() const { return nonzero.empty(); }
};

/// Outcome of one checked claim. Verdicts:
///   Holds              every residual polynomial is zero;
///   Fails              some residual is a nonzero constant (no parameter
///                      assignment can repair it);
///   ConditionallyHolds all nonzero residuals are non-constant, so the claim
///                      holds exactly where the constraint set vanishes.
/// Severity for exit codes: Holds < ConditionallyHolds < Fails.
struct Report {
    std::string claim;
    std::vector<EquationResult> equations;
    std::vector<std::string> notes;

    Verdict verdict() const;
    bool holds() const { return verdict() == Verdict::Holds; }
    /// Deduplicated, sign-normalized nonzero residuals in canonical order;
    /// empty iff the claim holds.
    std::vector<Poly> constraints() const;
};

// Residual collectors shared by every checker.
EquationResult residual_equation(std::string tag, const LinMap& r);
EquationResult residual_equation(std::string tag, const BilMap& r);
EquationResult residual_equation(std::string tag, const TriTensor& r);

} // namespace oos
