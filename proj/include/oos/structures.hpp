#pragma once

#include "oos/binding.hpp"
#include "oos/report.hpp"

namespace oos {

/// Strict mode stops at the first failed hypothesis block (the theorems'
/// preconditions matter); audit mode computes every residual regardless.
enum class CheckMode { Strict, Audit };

// -- single identities -------------------------------------------------------
Report check_associativity(const BilMap& mu);                       // eq3.1
Report check_pre_lie(const BilMap& circ);                           // eq1.3
Report check_bimodule(const BilMap& mu, const BilMap& rhd, const BilMap& lhd); // eq1.2a-c

// -- operator systems ---------------------------------------------------------
Report check_curved_oos(const BilMap& mu, const BilMap& rhd, const BilMap& lhd,
                        const LinMap& R, const LinMap& S, const BilMap& omega,
                        CheckMode mode = CheckMode::Strict);
Report check_extended_bimodule_algebra(const BilMap& mu, const BilMap& rhd, const BilMap& lhd,
                                       const BilMap& circ, const LinMap& R, const LinMap& S,
                                       CheckMode mode = CheckMode::Strict);
/// A-bimodule algebra: action compatibilities quantified over all of A plus
/// associativity of the internal product. Hypothesis class of several iff
/// theorems.
Report check_bimodule_algebra(const BilMap& mu, const BilMap& rhd, const BilMap& lhd,
                              const BilMap& circ, CheckMode mode = CheckMode::Strict);
Report check_dendriform_system(const BilMap& prec, const BilMap& succ, const BilMap& lessdot,
                               const BilMap& gtrdot);
Report check_tridendriform_system(const BilMap& prec, const BilMap& succ, const BilMap& lessdot,
                                  const BilMap& gtrdot, const BilMap& dot);
Report check_compatible_pair(const BilMap& mu, const BilMap& nu);
Report check_generalized_rb(const BilMap& mu, const BilMap& nu, const LinMap& R);
Report check_double_curved_rbs(const BilMap& mu, const LinMap& R, const LinMap& S,
                               const BilMap& omega1, const BilMap& omega2,
                               CheckMode mode = CheckMode::Strict);
Report check_pseudotwistor(const BilMap& mu, const LinMap& T, const LinMap& TT,
                           const BilMap& omega1, const BilMap& omega2,
                           CheckMode mode = CheckMode::Strict);
/// Both directions of cor3.12 as residuals: pre-Lie defect of
/// a.b = R(a)b - bS(a) (eq1.3) and centrality of
/// W(a,b) = omega1(a(x)b) - omega2(b(x)a) (tag cor3.12.central).
Report check_cor_3_12(const BilMap& mu, const LinMap& R, const LinMap& S, const BilMap& omega1,
                      const BilMap& omega2);

// -- specializations of Ex 2.2 ------------------------------------------------
// Kinds and required roles:
//   rota_baxter       mu, R, lambda          (V=A, S=R, omega = lambda*mu)
//   o_operator_weight mu, rhd, lhd, R, circ, lambda  (S=R, omega = lambda*circ)
//   curved_rb_system  mu, R, S, omega        (V=A regular bimodule)
//   reynolds          mu, R                  (S=R, omega = -mu.(R(x)R))
//   td_algebra        mu, R, unit            (S=R, omega(a,b) = -a R(1) b)
//   nijenhuis         mu, R                  (S=R, omega(a,b) = -R(ab))
Report check_specialization(const std::string& kind, const Binding& b,
                            CheckMode mode = CheckMode::Strict);

/// Side conditions of the iff-theorems; id is one of eq2.22, eq2.24, eq2.26,
/// eq2.28, eq2.30, eq3.7.
Report check_side_condition(const std::string& id, const Binding& b);

/// Morphism of curved O-operator systems (source roles mu, rhd, lhd, R, S,
/// omega on A, V; target roles mu2, rhd2, lhd2, P, T, nu on B, W; maps f, g).
/// verbatim additionally checks the two cross conditions.
Report check_morphism(const Binding& b, bool verbatim, CheckMode mode = CheckMode::Strict);

/// Basis of the center {x : xa = ax for all a} over the base field. Requires
/// parameter-free structure constants; parametric input is rejected.
std::vector<std::vector<Rat>> compute_center(const BilMap& mu);

/// Claim dispatch by kind name; the binding must carry the roles listed by
/// claim_roles(kind).
Report run_claim(const std::string& kind, const Binding& b, CheckMode mode = CheckMode::Strict);

} // namespace oos
