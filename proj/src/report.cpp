#include "oos/report.hpp"

#include <algorithm>

namespace oos {

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Holds: return "holds";
        case Verdict::ConditionallyHolds: return "conditionally_holds";
        case Verdict::Fails: return "fails";
    }
    return "?";
}

Verdict Report::verdict() const {
    bool any = false, constant = false;
    for (const auto& eq : equations)
        for (const auto& e : eq.nonzero) {
            any = true;
            if (e.value.is_constant()) constant = true;
        }
    if (!any) return Verdict::Holds;
    return constant ? Verdict::Fails : Verdict::ConditionallyHolds;
}

std::vector<Poly> Report::constraints() const {
    std::vector<Poly> out;
    for (const auto& eq : equations)
        for (const auto& e : eq.nonzero) out.push_back(e.value.sign_normalized());
    std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) {
        return Poly::compare(a, b) < 0;
    });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const Poly& a, const Poly& b) { return Poly::compare(a, b) == 0; }),
              out.end());
    return out;
}

EquationResult residual_equation(std::string tag, const LinMap& r) {
    EquationResult eq{std::move(tag), {}};
    for (std::size_t c = 0; c < r.source().dim(); ++c)
        for (std::size_t row = 0; row < r.target().dim(); ++row) {
            const Poly& v = r.entry(row, c);
            if (!v.is_zero())
                eq.nonzero.push_back({{r.source().label(c), r.target().label(row)}, v});
        }
    return eq;
}

EquationResult residual_equation(std::string tag, const BilMap& r) {
    EquationResult eq{std::move(tag), {}};
    for (std::size_t i = 0; i < r.left().dim(); ++i)
        for (std::size_t j = 0; j < r.right().dim(); ++j)
            for (std::size_t k = 0; k < r.target().dim(); ++k) {
                const Poly& v = r.entry(i, j, k);
                if (!v.is_zero())
                    eq.nonzero.push_back(
                        {{r.left().label(i), r.right().label(j), r.target().label(k)}, v});
            }
    return eq;
}

EquationResult residual_equation(std::string tag, const TriTensor& r) {
    EquationResult eq{std::move(tag), {}};
    for (std::size_t i = 0; i < r.slot(0).dim(); ++i)
        for (std::size_t j = 0; j < r.slot(1).dim(); ++j)
            for (std::size_t k = 0; k < r.slot(2).dim(); ++k)
                for (std::size_t l = 0; l < r.target().dim(); ++l) {
                    const Poly& v = r.entry(i, j, k, l);
                    if (!v.is_zero())
                        eq.nonzero.push_back({{r.slot(0).label(i), r.slot(1).label(j),
                                               r.slot(2).label(k), r.target().label(l)},
                                              v});
                }
    return eq;
}

} // namespace oos
