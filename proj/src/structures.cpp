#include "oos/structures.hpp"

#include <functional>

namespace oos {

namespace {

const std::optional<LinMap> kId = std::nullopt;

void want_product(const BilMap& b, const std::string& role) {
    require(b.left() == b.right() && b.left() == b.target(),
            "role \"" + role + "\" must be a product on one space, got " + b.left().name() +
                " (x) " + b.right().name() + " -> " + b.target().name());
}

void want_shape(const BilMap& b, const Space& l, const Space& r, const Space& t,
                const std::string& role) {
    require(b.left() == l && b.right() == r && b.target() == t,
            "role \"" + role + "\" has shape " + b.left().name() + " (x) " + b.right().name() +
                " -> " + b.target().name() + ", expected " + l.name() + " (x) " + r.name() +
                " -> " + t.name());
}

void want_lin(const LinMap& f, const Space& s, const Space& t, const std::string& role) {
    require(f.source() == s && f.target() == t,
            "role \"" + role + "\" has shape " + f.source().name() + " -> " + f.target().name() +
                ", expected " + s.name() + " -> " + t.name());
}

TriTensor assoc_defect(const BilMap& b) {
    return TriTensor::left_nested(b, b) - TriTensor::right_nested(b, b);
}

bool all_hold(const std::vector<EquationResult>& eqs) {
    for (const auto& e : eqs)
        if (!e.holds()) return false;
    return true;
}

/// Runs the hypothesis block; in strict mode a failed hypothesis short-circuits
/// the caller (which returns the report as is, with a note).
bool hypothesis_failed(Report& r, std::vector<EquationResult> hyp, CheckMode mode,
                       const std::string& what) {
    bool ok = all_hold(hyp);
    for (auto& e : hyp) r.equations.push_back(std::move(e));
    if (!ok && mode == CheckMode::Strict) {
        r.notes.push_back("hypothesis failed: " + what + " (strict mode: remaining equations skipped)");
        return true;
    }
    if (!ok) r.notes.push_back("hypothesis failed: " + what + " (audit mode: continuing)");
    return false;
}

BilMap bil_from_images(const RingPtr& ring, const Space& l, const Space& r, const Space& t,
                       const std::function<std::vector<Poly>(std::size_t, std::size_t)>& image) {
    BilMap b(ring, l, r, t);
    for (std::size_t i = 0; i < l.dim(); ++i)
        for (std::size_t j = 0; j < r.dim(); ++j) {
            auto v = image(i, j);
            for (std::size_t k = 0; k < t.dim(); ++k) b.set(i, j, k, v.at(k));
        }
    return b;
}

std::vector<Poly> basis_vector(const RingPtr& ring, const Space& s, std::size_t i) {
    std::vector<Poly> v(s.dim(), Poly::zero(ring));
    v[i] = Poly::constant(ring, Rat(1));
    return v;
}

} // namespace

Report check_associativity(const BilMap& mu) {
    want_product(mu, "mu");
    Report r{"assoc", {}, {}};
    r.equations.push_back(residual_equation("eq3.1", assoc_defect(mu)));
    return r;
}

Report check_pre_lie(const BilMap& circ) {
    want_product(circ, "circ");
    TriTensor d = assoc_defect(circ);
    Report r{"pre_lie", {}, {}};
    r.equations.push_back(residual_equation("eq1.3", d - d.swap01()));
    return r;
}

static std::vector<EquationResult> bimodule_equations(const BilMap& mu, const BilMap& rhd,
                                                      const BilMap& lhd) {
    want_product(mu, "mu");
    const Space& A = mu.left();
    const Space& V = rhd.target();
    want_shape(rhd, A, V, V, "rhd");
    want_shape(lhd, V, A, V, "lhd");
    std::vector<EquationResult> eqs;
    eqs.push_back(residual_equation(
        "eq1.2a", TriTensor::right_nested(rhd, rhd) - TriTensor::left_nested(rhd, mu)));
    eqs.push_back(residual_equation(
        "eq1.2b", TriTensor::left_nested(lhd, lhd) - TriTensor::right_nested(lhd, mu)));
    eqs.push_back(residual_equation(
        "eq1.2c", TriTensor::left_nested(lhd, rhd) - TriTensor::right_nested(rhd, lhd)));
    return eqs;
}

Report check_bimodule(const BilMap& mu, const BilMap& rhd, const BilMap& lhd) {
    Report r{"bimodule", bimodule_equations(mu, rhd, lhd), {}};
    return r;
}

Report check_curved_oos(const BilMap& mu, const BilMap& rhd, const BilMap& lhd, const LinMap& R,
                        const LinMap& S, const BilMap& omega, CheckMode mode) {
    const Space& A = mu.left();
    const Space& V = rhd.target();
    want_lin(R, V, A, "R");
    want_lin(S, V, A, "S");
    want_shape(omega, V, V, V, "omega");

    Report r{"curved_oos", {}, {}};
    if (hypothesis_failed(r, bimodule_equations(mu, rhd, lhd), mode, "(V, rhd, lhd) is an A-bimodule"))
        return r;

    BilMap theta = rhd.precompose(R, kId) + lhd.precompose(kId, S) + omega;
    r.equations.push_back(residual_equation("eq2.1", mu.precompose(R, R) - theta.then(R)));
    r.equations.push_back(residual_equation("eq2.2", mu.precompose(S, S) - theta.then(S)));
    return r;
}

Report check_bimodule_algebra(const BilMap& mu, const BilMap& rhd, const BilMap& lhd,
                              const BilMap& circ, CheckMode mode) {
    const Space& V = rhd.target();
    want_shape(circ, V, V, V, "circ");
    Report r{"bimodule_algebra", {}, {}};
    if (hypothesis_failed(r, bimodule_equations(mu, rhd, lhd), mode, "(V, rhd, lhd) is an A-bimodule"))
        return r;
    r.equations.push_back(residual_equation("bma.assoc", assoc_defect(circ)));
    r.equations.push_back(residual_equation(
        "bma.a", TriTensor::right_nested(rhd, circ) - TriTensor::left_nested(circ, rhd)));
    r.equations.push_back(residual_equation(
        "bma.b", TriTensor::left_nested(lhd, circ) - TriTensor::right_nested(circ, lhd)));
    r.equations.push_back(residual_equation(
        "bma.c", TriTensor::left_nested(circ, lhd) - TriTensor::right_nested(circ, rhd)));
    return r;
}

Report check_extended_bimodule_algebra(const BilMap& mu, const BilMap& rhd, const BilMap& lhd,
                                       const BilMap& circ, const LinMap& R, const LinMap& S,
                                       CheckMode mode) {
    const Space& A = mu.left();
    const Space& V = rhd.target();
    want_shape(circ, V, V, V, "circ");
    want_lin(R, V, A, "R");
    want_lin(S, V, A, "S");

    Report r{"extended_bimodule_algebra", {}, {}};
    if (hypothesis_failed(r, bimodule_equations(mu, rhd, lhd), mode, "(V, rhd, lhd) is an A-bimodule"))
        return r;

    BilMap rhdR = rhd.precompose(R, kId); // (x, y) -> R(x) |> y
    BilMap lhdS = lhd.precompose(kId, S); // (x, y) -> x <| S(y)
    r.equations.push_back(residual_equation(
        "eq2.3a", TriTensor::right_nested(rhdR, circ) - TriTensor::left_nested(circ, rhdR)));
    r.equations.push_back(residual_equation(
        "eq2.3b", TriTensor::left_nested(lhdS, circ) - TriTensor::right_nested(circ, lhdS)));
    r.equations.push_back(residual_equation(
        "eq2.3c", TriTensor::right_nested(circ, rhdR) - TriTensor::left_nested(circ, lhdS)));
    // auxiliary: x . ((R-S)(y) |> z) = 0
    r.equations.push_back(residual_equation(
        "eq2.4", TriTensor::right_nested(circ, rhd.precompose(R - S, kId))));
    return r;
}

Report check_dendriform_system(const BilMap& prec, const BilMap& succ, const BilMap& lessdot,
                               const BilMap& gtrdot) {
    const Space& A = prec.left();
    const Space& V = prec.right();
    want_shape(prec, A, V, A, "prec");
    want_shape(succ, V, A, A, "succ");
    want_shape(lessdot, V, V, V, "lessdot");
    want_shape(gtrdot, V, V, V, "gtrdot");

    BilMap sum = gtrdot + lessdot;
    Report r{"dendriform_system", {}, {}};
    r.equations.push_back(residual_equation(
        "eq2.5", TriTensor::left_nested(prec, prec) - TriTensor::right_nested(prec, sum)));
    r.equations.push_back(residual_equation(
        "eq2.6", TriTensor::right_nested(succ, prec) - TriTensor::left_nested(prec, succ)));
    r.equations.push_back(residual_equation(
        "eq2.7", TriTensor::right_nested(succ, succ) - TriTensor::left_nested(succ, sum)));
    r.equations.push_back(residual_equation(
        "eq2.8", TriTensor::left_nested(lessdot, lessdot) - TriTensor::right_nested(lessdot, sum)));
    r.equations.push_back(residual_equation(
        "eq2.9", TriTensor::right_nested(gtrdot, lessdot) - TriTensor::left_nested(lessdot, gtrdot)));
    r.equations.push_back(residual_equation(
        "eq2.10", TriTensor::right_nested(gtrdot, gtrdot) - TriTensor::left_nested(gtrdot, sum)));
    return r;
}

Report check_tridendriform_system(const BilMap& prec, const BilMap& succ, const BilMap& lessdot,
                                  const BilMap& gtrdot, const BilMap& dot) {
    const Space& A = prec.left();
    const Space& V = prec.right();
    want_shape(prec, A, V, A, "prec");
    want_shape(succ, V, A, A, "succ");
    want_shape(lessdot, V, V, V, "lessdot");
    want_shape(gtrdot, V, V, V, "gtrdot");
    want_shape(dot, V, V, V, "dot");

    BilMap sum = lessdot + gtrdot + dot;
    Report r{"tridendriform_system", {}, {}};
    r.equations.push_back(residual_equation(
        "eq2.12", TriTensor::left_nested(prec, prec) - TriTensor::right_nested(prec, sum)));
    r.equations.push_back(residual_equation(
        "eq2.13", TriTensor::right_nested(succ, prec) - TriTensor::left_nested(prec, succ)));
    r.equations.push_back(residual_equation(
        "eq2.14", TriTensor::right_nested(succ, succ) - TriTensor::left_nested(succ, sum)));
    r.equations.push_back(residual_equation(
        "eq2.15", TriTensor::left_nested(lessdot, lessdot) - TriTensor::right_nested(lessdot, sum)));
    r.equations.push_back(residual_equation(
        "eq2.16", TriTensor::right_nested(gtrdot, lessdot) - TriTensor::left_nested(lessdot, gtrdot)));
    r.equations.push_back(residual_equation(
        "eq2.17", TriTensor::right_nested(gtrdot, gtrdot) - TriTensor::left_nested(gtrdot, sum)));
    r.equations.push_back(residual_equation(
        "eq2.18a", TriTensor::left_nested(dot, lessdot) - TriTensor::right_nested(dot, gtrdot)));
    r.equations.push_back(residual_equation(
        "eq2.18b", TriTensor::left_nested(dot, gtrdot) - TriTensor::right_nested(gtrdot, dot)));
    r.equations.push_back(residual_equation(
        "eq2.19a", TriTensor::left_nested(lessdot, dot) - TriTensor::right_nested(dot, lessdot)));
    r.equations.push_back(residual_equation(
        "eq2.19b", TriTensor::left_nested(dot, dot) - TriTensor::right_nested(dot, dot)));
    return r;
}

Report check_compatible_pair(const BilMap& mu, const BilMap& nu) {
    want_product(mu, "mu");
    want_shape(nu, mu.left(), mu.left(), mu.left(), "nu");
    Report r{"compatible_pair", {}, {}};
    r.equations.push_back(residual_equation("eq3.1a", assoc_defect(mu)));
    r.equations.push_back(residual_equation("eq3.1b", assoc_defect(nu)));
    r.equations.push_back(residual_equation(
        "eq3.2a", TriTensor::left_nested(nu, mu) - TriTensor::right_nested(mu, nu)));
    r.equations.push_back(residual_equation(
        "eq3.2b", TriTensor::right_nested(mu, nu) - TriTensor::left_nested(mu, nu)));
    r.equations.push_back(residual_equation(
        "eq3.2c", TriTensor::left_nested(mu, nu) - TriTensor::right_nested(nu, mu)));
    return r;
}

Report check_generalized_rb(const BilMap& mu, const BilMap& nu, const LinMap& R) {
    want_product(mu, "mu");
    const Space& V = mu.left();
    want_shape(nu, V, V, V, "nu");
    want_lin(R, V, V, "R");
    BilMap inner = mu.precompose(R, kId) + mu.precompose(kId, R) + nu;
    Report r{"generalized_rb", {}, {}};
    r.equations.push_back(residual_equation("eq3.3", mu.precompose(R, R) - inner.then(R)));
    return r;
}

Report check_double_curved_rbs(const BilMap& mu, const LinMap& R, const LinMap& S,
                               const BilMap& omega1, const BilMap& omega2, CheckMode mode) {
    want_product(mu, "mu");
    const Space& A = mu.left();
    want_lin(R, A, A, "R");
    want_lin(S, A, A, "S");
    want_shape(omega1, A, A, A, "omega1");
    want_shape(omega2, A, A, A, "omega2");

    Report r{"double_curved_rbs", {}, {}};
    std::vector<EquationResult> hyp;
    hyp.push_back(residual_equation("eq3.1", assoc_defect(mu)));
    if (hypothesis_failed(r, std::move(hyp), mode, "mu associative")) return r;

    BilMap inner = mu.precompose(R, kId) + mu.precompose(kId, S);
    r.equations.push_back(
        residual_equation("eq3.4", mu.precompose(R, R) - (inner.then(R) + omega1)));
    r.equations.push_back(
        residual_equation("eq3.5", mu.precompose(S, S) - (inner.then(S) + omega2)));
    return r;
}

Report check_pseudotwistor(const BilMap& mu, const LinMap& T, const LinMap& TT,
                           const BilMap& omega1, const BilMap& omega2, CheckMode mode) {
    want_product(mu, "mu");
    const Space& A = mu.left();
    const Space AA = tensor_space(A, A);
    const Space AAA = tensor_space(AA, A);
    want_lin(T, AA, AA, "T");
    want_lin(TT, AAA, AAA, "TT");
    want_shape(omega1, A, A, A, "omega1");
    want_shape(omega2, A, A, A, "omega2");

    Report r{"pseudotwistor", {}, {}};
    std::vector<EquationResult> hyp;
    hyp.push_back(residual_equation("eq3.1", assoc_defect(mu)));
    if (hypothesis_failed(r, std::move(hyp), mode, "mu associative")) return r;

    const RingPtr& ring = mu.ring();
    LinMap idA = LinMap::identity(ring, A);
    LinMap mul = mu.as_linear();         // A(x)A -> A
    LinMap muT = mul.compose(T);         // A(x)A -> A
    LinMap w1 = omega1.as_linear();
    LinMap w2 = omega2.as_linear();

    // diagram 3.8, left square: T.(id(x)(mu.T)) = (id(x)mu).TT - id(x)omega2
    r.equations.push_back(residual_equation(
        "eq3.8a", T.compose(kron(idA, muT)) - (kron(idA, mul).compose(TT) - kron(idA, w2))));
    // diagram 3.8, right square: T.((mu.T)(x)id) = (mu(x)id).TT - omega1(x)id
    r.equations.push_back(residual_equation(
        "eq3.8b", T.compose(kron(muT, idA)) - (kron(mul, idA).compose(TT) - kron(w1, idA))));
    // diagram 3.9: mu.(omega1(x)id) = mu.(id(x)omega2)
    r.equations.push_back(residual_equation(
        "eq3.9", mul.compose(kron(w1, idA)) - mul.compose(kron(idA, w2))));
    return r;
}

Report check_cor_3_12(const BilMap& mu, const LinMap& R, const LinMap& S, const BilMap& omega1,
                      const BilMap& omega2) {
    want_product(mu, "mu");
    const Space& A = mu.left();
    want_lin(R, A, A, "R");
    want_lin(S, A, A, "S");
    want_shape(omega1, A, A, A, "omega1");
    want_shape(omega2, A, A, A, "omega2");

    // a . b = R(a)b - bS(a)
    BilMap circ = mu.precompose(R, kId) - mu.precompose(kId, S).swapped();
    TriTensor d = assoc_defect(circ);
    // W(a, b) = omega1(a(x)b) - omega2(b(x)a); centrality: W(a,b)c = cW(a,b)
    BilMap W = omega1 - omega2.swapped();
    Report r{"cor3.12", {}, {}};
    r.equations.push_back(residual_equation("eq1.3", d - d.swap01()));
    r.equations.push_back(residual_equation(
        "cor3.12.central",
        TriTensor::left_nested(mu, W) - TriTensor::left_nested(mu.swapped(), W)));
    return r;
}

Report check_specialization(const std::string& kind, const Binding& b, CheckMode mode) {
    const BilMap& mu = b.bil("mu");
    want_product(mu, "mu");
    const Space& A = mu.left();
    const RingPtr& ring = mu.ring();

    auto delegate = [&](const BilMap& rhd, const BilMap& lhd, const LinMap& R, const LinMap& S,
                        const BilMap& omega) {
        Report r = check_curved_oos(mu, rhd, lhd, R, S, omega, mode);
        r.claim = kind;
        return r;
    };

    if (kind == "rota_baxter") {
        const LinMap& R = b.lin("R");
        return delegate(mu, mu, R, R, mu.scaled(b.scalar("lambda")));
    }
    if (kind == "o_operator_weight") {
        const LinMap& R = b.lin("R");
        return delegate(b.bil("rhd"), b.bil("lhd"), R, R, b.bil("circ").scaled(b.scalar("lambda")));
    }
    if (kind == "curved_rb_system") {
        return delegate(mu, mu, b.lin("R"), b.lin("S"), b.bil("omega"));
    }
    if (kind == "reynolds") {
        const LinMap& R = b.lin("R");
        return delegate(mu, mu, R, R, -mu.precompose(R, R));
    }
    if (kind == "nijenhuis") {
        const LinMap& R = b.lin("R");
        return delegate(mu, mu, R, R, -mu.then(R));
    }
    if (kind == "td_algebra") {
        const Element& unit = b.element("unit");
        require(unit.space == A, "unit element must live in the algebra space " + A.name());
        // two-sided unit law
        for (std::size_t i = 0; i < A.dim(); ++i) {
            auto ei = basis_vector(ring, A, i);
            auto le = mu.apply(unit.coords, ei);
            auto rg = mu.apply(ei, unit.coords);
            for (std::size_t k = 0; k < A.dim(); ++k) {
                require(le[k] == ei[k] && rg[k] == ei[k],
                        "declared unit fails the unit law at basis vector " + A.label(i));
            }
        }
        const LinMap& R = b.lin("R");
        std::vector<Poly> r1 = R.apply(unit.coords); // R(1_A)
        BilMap omega = bil_from_images(ring, A, A, A, [&](std::size_t i, std::size_t j) {
            auto v = mu.apply(mu.apply(basis_vector(ring, A, i), r1), basis_vector(ring, A, j));
            for (auto& c : v) c = -c;
            return v;
        });
        return delegate(mu, mu, R, R, omega);
    }
    fail("unknown specialization kind: " + kind);
}

Report check_side_condition(const std::string& id, const Binding& b) {
    Report r{id, {}, {}};
    if (id == "eq2.22" || id == "eq2.24") {
        const BilMap& mu = b.bil("mu");
        const BilMap& rhd = b.bil("rhd");
        const BilMap& lhd = b.bil("lhd");
        const BilMap& circ = b.bil("circ");
        const LinMap& R = b.lin("R");
        const LinMap& S = id == "eq2.22" ? b.lin("S") : R;
        BilMap star = rhd.precompose(R, kId) + lhd.precompose(kId, S) + circ;
        BilMap dR = mu.precompose(R, R) - star.then(R); // (x,y) -> R(x)R(y) - R(x*y)
        BilMap dS = mu.precompose(S, S) - star.then(S);
        r.equations.push_back(residual_equation(
            id, TriTensor::left_nested(rhd, dR) - TriTensor::right_nested(lhd, dS)));
        return r;
    }
    if (id == "eq2.26") {
        const BilMap& rhd = b.bil("rhd");
        const BilMap& lhd = b.bil("lhd");
        require(rhd.ring()->field().characteristic() != 2,
                "symmetrizer needs characteristic != 2");
        Poly half = Poly::constant(rhd.ring(), Rat(BigInt(1), BigInt(2)));
        LinMap beta = (b.lin("R") - b.lin("S")).scaled(half);
        r.equations.push_back(
            residual_equation(id, rhd.precompose(beta, kId) - lhd.precompose(kId, beta)));
        return r;
    }
    if (id == "eq2.28") {
        const BilMap& rhd = b.bil("rhd");
        const BilMap& lhd = b.bil("lhd");
        const BilMap& omega = b.bil("omega");
        BilMap w1 = omega.then(b.lin("R"));
        BilMap w2 = omega.then(b.lin("S"));
        r.equations.push_back(residual_equation(
            id, TriTensor::left_nested(rhd, w1) - TriTensor::right_nested(lhd, w2)));
        return r;
    }
    if (id == "eq2.30") {
        const BilMap& rhd = b.bil("rhd");
        const BilMap& lhd = b.bil("lhd");
        BilMap q = b.bil("circ").then(b.lin("R")).scaled(b.scalar("lambda"));
        r.equations.push_back(residual_equation(
            id, TriTensor::left_nested(rhd, q) - TriTensor::right_nested(lhd, q)));
        return r;
    }
    if (id == "eq3.7") {
        const BilMap& mu = b.bil("mu");
        r.equations.push_back(residual_equation(
            id, TriTensor::left_nested(mu, b.bil("omega1")) -
                    TriTensor::right_nested(mu, b.bil("omega2"))));
        return r;
    }
    fail("unknown side condition: " + id);
}

Report check_morphism(const Binding& b, bool verbatim, CheckMode mode) {
    const BilMap& mu = b.bil("mu");
    const BilMap& rhd = b.bil("rhd");
    const BilMap& lhd = b.bil("lhd");
    const LinMap& R = b.lin("R");
    const LinMap& S = b.lin("S");
    const BilMap& omega = b.bil("omega");
    const BilMap& mu2 = b.bil("mu2");
    const BilMap& rhd2 = b.bil("rhd2");
    const BilMap& lhd2 = b.bil("lhd2");
    const LinMap& P = b.lin("P");
    const LinMap& T = b.lin("T");
    const BilMap& nu = b.bil("nu");
    const LinMap& f = b.lin("f");
    const LinMap& g = b.lin("g");

    const Space& A = mu.left();
    const Space& V = rhd.target();
    const Space& B = mu2.left();
    const Space& W = rhd2.target();
    want_lin(f, A, B, "f");
    want_lin(g, V, W, "g");

    Report r{verbatim ? "morphism_verbatim" : "morphism", {}, {}};
    if (mode == CheckMode::Strict) {
        Report src = check_curved_oos(mu, rhd, lhd, R, S, omega, mode);
        Report dst = check_curved_oos(mu2, rhd2, lhd2, P, T, nu, mode);
        std::vector<EquationResult> hyp;
        for (auto& e : src.equations) {
            e.tag = "src." + e.tag;
            hyp.push_back(std::move(e));
        }
        for (auto& e : dst.equations) {
            e.tag = "dst." + e.tag;
            hyp.push_back(std::move(e));
        }
        if (hypothesis_failed(r, std::move(hyp), mode, "both bindings are curved O-operator systems"))
            return r;
    }

    r.equations.push_back(residual_equation("mor.alg", mu.then(f) - mu2.precompose(f, f)));
    r.equations.push_back(residual_equation("mor.act.l", rhd.then(g) - rhd2.precompose(f, g)));
    r.equations.push_back(residual_equation("mor.act.r", lhd.then(g) - lhd2.precompose(g, f)));
    r.equations.push_back(residual_equation("mor.R", f.compose(R) - P.compose(g)));
    r.equations.push_back(residual_equation("mor.S", f.compose(S) - T.compose(g)));
    if (verbatim) {
        r.equations.push_back(residual_equation("mor.R.cross", f.compose(R) - T.compose(g)));
        r.equations.push_back(residual_equation("mor.S.cross", f.compose(S) - P.compose(g)));
    }
    r.equations.push_back(residual_equation("mor.omega", omega.then(g) - nu.precompose(g, g)));
    return r;
}

std::vector<std::vector<Rat>> compute_center(const BilMap& mu) {
    want_product(mu, "mu");
    const Space& A = mu.left();
    const Field& field = mu.ring()->field();
    const std::size_t n = A.dim();

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                require(mu.entry(i, j, k).is_constant(),
                        "parametric center unsupported: specialize parameters first");

    // rows: one equation per (probe basis j, output coordinate k); columns:
    // coefficients of the unknown x = sum_i x_i e_i in x e_j - e_j x = 0
    std::vector<std::vector<Rat>> m(n * n, std::vector<Rat>(n, Rat(0)));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i)
                m[j * n + k][i] = field.sub(mu.entry(i, j, k).constant_value(),
                                            mu.entry(j, i, k).constant_value());

    // reduced row echelon form
    std::size_t rank = 0;
    std::vector<int> pivot_of_col(n, -1);
    for (std::size_t col = 0; col < n && rank < m.size(); ++col) {
        std::size_t sel = rank;
        while (sel < m.size() && m[sel][col].is_zero()) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[sel], m[rank]);
        Rat inv = field.inv(m[rank][col]);
        for (auto& v : m[rank]) v = field.mul(v, inv);
        for (std::size_t rr = 0; rr < m.size(); ++rr) {
            if (rr == rank || m[rr][col].is_zero()) continue;
            Rat factor = m[rr][col];
            for (std::size_t c = 0; c < n; ++c)
                m[rr][c] = field.sub(m[rr][c], field.mul(factor, m[rank][c]));
        }
        pivot_of_col[col] = static_cast<int>(rank);
        ++rank;
    }

    std::vector<std::vector<Rat>> basis;
    for (std::size_t free = 0; free < n; ++free) {
        if (pivot_of_col[free] >= 0) continue;
        std::vector<Rat> v(n, Rat(0));
        v[free] = Rat(1);
        for (std::size_t col = 0; col < n; ++col)
            if (pivot_of_col[col] >= 0)
                v[col] = field.neg(m[static_cast<std::size_t>(pivot_of_col[col])][free]);
        basis.push_back(std::move(v));
    }
    return basis;
}

Report run_claim(const std::string& kind, const Binding& b, CheckMode mode) {
    if (kind == "assoc") return check_associativity(b.bil("mu"));
    if (kind == "pre_lie") return check_pre_lie(b.bil("circ"));
    if (kind == "bimodule") return check_bimodule(b.bil("mu"), b.bil("rhd"), b.bil("lhd"));
    if (kind == "curved_oos")
        return check_curved_oos(b.bil("mu"), b.bil("rhd"), b.bil("lhd"), b.lin("R"), b.lin("S"),
                                b.bil("omega"), mode);
    if (kind == "o_operator_system") {
        const BilMap& rhd = b.bil("rhd");
        const Space& V = rhd.target();
        BilMap omega = b.has_bil("omega") ? b.bil("omega") : BilMap(rhd.ring(), V, V, V);
        Report r = check_curved_oos(b.bil("mu"), rhd, b.bil("lhd"), b.lin("R"), b.lin("S"), omega,
                                    mode);
        r.claim = "o_operator_system";
        require(omega.is_zero(), "o_operator_system requires omega = 0 (bind curved_oos instead)");
        return r;
    }
    if (kind == "extended_bimodule_algebra")
        return check_extended_bimodule_algebra(b.bil("mu"), b.bil("rhd"), b.bil("lhd"),
                                               b.bil("circ"), b.lin("R"), b.lin("S"), mode);
    if (kind == "bimodule_algebra")
        return check_bimodule_algebra(b.bil("mu"), b.bil("rhd"), b.bil("lhd"), b.bil("circ"), mode);
    if (kind == "dendriform_system")
        return check_dendriform_system(b.bil("prec"), b.bil("succ"), b.bil("lessdot"),
                                       b.bil("gtrdot"));
    if (kind == "tridendriform_system")
        return check_tridendriform_system(b.bil("prec"), b.bil("succ"), b.bil("lessdot"),
                                          b.bil("gtrdot"), b.bil("dot"));
    if (kind == "compatible_pair") return check_compatible_pair(b.bil("mu"), b.bil("nu"));
    if (kind == "generalized_rb")
        return check_generalized_rb(b.bil("mu"), b.bil("nu"), b.lin("R"));
    if (kind == "double_curved_rbs")
        return check_double_curved_rbs(b.bil("mu"), b.lin("R"), b.lin("S"), b.bil("omega1"),
                                       b.bil("omega2"), mode);
    if (kind == "pseudotwistor")
        return check_pseudotwistor(b.bil("mu"), b.lin("T"), b.lin("TT"), b.bil("omega1"),
                                   b.bil("omega2"), mode);
    if (kind == "cor3.12")
        return check_cor_3_12(b.bil("mu"), b.lin("R"), b.lin("S"), b.bil("omega1"),
                              b.bil("omega2"));
    if (kind == "rota_baxter" || kind == "o_operator_weight" || kind == "curved_rb_system" ||
        kind == "reynolds" || kind == "td_algebra" || kind == "nijenhuis")
        return check_specialization(kind, b, mode);
    if (kind == "eq2.22" || kind == "eq2.24" || kind == "eq2.26" || kind == "eq2.28" ||
        kind == "eq2.30" || kind == "eq3.7")
        return check_side_condition(kind, b);
    if (kind == "morphism") return check_morphism(b, false, mode);
    if (kind == "morphism_verbatim") return check_morphism(b, true, mode);
    fail("unknown claim kind: " + kind);
}

} // namespace oos
