#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "commdom/domination.hpp"
#include "commdom/group.hpp"
#include "commdom/numeric.hpp"

namespace commdom {

// Closed-form predictions for gamma and gamma_t of proper commuting graphs.
// Every prediction carries its applicability gate; gates follow the stated
// hypotheses of the underlying result and never widen them.

enum class FormulaKind {
  exact_gamma,
  exact_gamma_t,
  lower_bound,
  upper_bound,
  nonexistence,    ///< no total dominating set
  existence,       ///< a total dominating set exists
  excluded_value,  ///< the computed value must differ from value
  ratio_form,      ///< gamma/|G| <= 1/2 or gamma/|G| = k/(2k-1)
};

std::string to_string(FormulaKind k);

struct FormulaPrediction {
  std::string theorem_id;
  bool applicable = false;
  std::string reason;
  FormulaKind kind = FormulaKind::exact_gamma;
  DominationKind target = DominationKind::domination;
  std::optional<Rational> value;  ///< present iff applicable (and computable)
  std::optional<double> real;     ///< unfloored value of the logarithmic bound
  /// For upper bounds with a characterised equality case: whether equality
  /// is expected for this group.
  std::optional<bool> equality_expected;
  /// Value the formula gives when evaluated although the gate fails. Reported
  /// separately, never used for pass/fail.
  std::optional<Rational> beyond_gate;
};

// ---- structure detection -------------------------------------------------

/// An abelian subgroup A of index 2 with every element outside A an
/// involution, so G = D(A).
struct GeneralizedDihedral {
  SubsetMask a;
  Element involution = 0;
  std::size_t a_order = 0;
  std::size_t a_involutions = 0;  ///< |{a in A : a^2 = 1}|, identity included
  bool a_elementary_abelian = false;
};

/// Searches the index-2 subgroups (those containing all squares). Returns
/// the first fitting A in a deterministic order, or nothing.
std::optional<GeneralizedDihedral> find_generalized_dihedral(const GroupTable& g);

/// Report for a group with a noncentral x such that |C(x)| = 2.
struct Order2Structure {
  Element x = 0;
  SubsetMask n;             ///< elements of odd order
  std::size_t n_order = 0;
  bool verified = false;    ///< N abelian subgroup of index 2, |N| odd, x inverts N
  std::string failure;      ///< first failed check when not verified
};

/// Absent when no noncentral element has a centralizer of order 2.
std::optional<Order2Structure> classify_order2_centralizer(const GroupTable& g);

// ---- group-level formulas -------------------------------------------------

FormulaPrediction bound_lower(const GroupInvariants& inv);
FormulaPrediction bound_upper_maximal_cyclic(const GroupInvariants& inv);
/// (|G| - |Z| + t) / 2 with equality expected exactly at S3, D8 and Q8.
FormulaPrediction bound_haji_amiri(const GroupTable& g, const GroupInvariants& inv);
FormulaPrediction bound_log(const GroupInvariants& inv, bool is_generalized_dihedral);

/// 1 + |A| / |{a : a^2 = 1}|. Gate: A abelian of exponent > 2 and not
/// elementary abelian.
FormulaPrediction gen_dihedral_gamma(const GroupTable& a);

FormulaPrediction ac_group_gamma(const GroupInvariants& inv);
FormulaPrediction ac_group_gamma_t(const GroupInvariants& inv, bool is_generalized_dihedral);

FormulaPrediction pq_gamma(std::size_t p, std::size_t q);
FormulaPrediction pq_gamma_t(std::size_t p, std::size_t q);

FormulaPrediction central_codim2_gamma(const GroupInvariants& inv);
FormulaPrediction central_codim2_gamma_t(const GroupInvariants& inv);

/// Classes 1-6 and 7-10 of the odd-order p^4 classification.
FormulaPrediction p4_gamma(std::size_t p, std::size_t class_index);
FormulaPrediction p4_gamma_t(std::size_t p, std::size_t class_index);

/// PGL(2, p^n), p odd.
FormulaPrediction pgl2_gamma(std::size_t p, std::size_t n);
FormulaPrediction pgl2_gamma_t(std::size_t p, std::size_t n);
FormulaPrediction psl2_gamma_t(std::size_t q);

struct SuzukiParams {
  std::size_t n = 0;
  BigInt q, r;
  BigInt f_order, a_order, b_order, c_order;  ///< q^2, q-1, q-2r+1, q+2r+1
  BigInt group_order;                         ///< q^2 (q^2+1)(q-1)
};
SuzukiParams suzuki_params(std::size_t n);

/// The four summands of gamma(C**(Sz(q))), each checked for integrality.
/// Throws FormulaIntegrityError if one is not an integer.
std::vector<BigInt> suzuki_summands(std::size_t n);
FormulaPrediction suzuki_gamma(std::size_t n);
FormulaPrediction suzuki_gamma_t(std::size_t n);

/// Minimum of gamma over the non-abelian Sylow subgroups, solved exactly.
/// Gate: nilpotent, non-abelian, at least two prime divisors.
FormulaPrediction nilpotent_gamma(const GroupTable& g, const SolverOptions& opts = {});
/// Upper bound min + 1 when no Sylow subgroup is abelian and there are at
/// least two; exact when every factor has gamma_t > gamma.
FormulaPrediction nilpotent_gamma_t(const GroupTable& g, const SolverOptions& opts = {});

/// gamma_t when |nacent(G)| = 2 and G is not generalized dihedral.
FormulaPrediction nacent_two_gamma_t(const GroupTable& g, const GroupInvariants& inv,
                                     bool is_generalized_dihedral);

/// [G : Z(G)] a product of two primes (with multiplicity).
FormulaPrediction index_two_primes_gamma(const GroupInvariants& inv);
FormulaPrediction index_two_primes_gamma_t(const GroupInvariants& inv, bool is_generalized_dihedral);

/// gamma_t(C**(Q_{2^m})) = 2^{m-1} + 2, m >= 3.
FormulaPrediction gen_quaternion_gamma_t(std::size_t order);

/// Dihedral group of order 4k-2 with ratio k/(2k-1).
std::pair<std::string, Rational> ratio_spectrum_witness(std::size_t k);

/// True iff r lies in (1/2, 1) and has the form k/(2k-1), k >= 2.
bool is_spectrum_value(const Rational& r);

/// Every prediction that applies to g, plus the not-applicable ones that are
/// worth reporting (gated out with a beyond-gate value). Family-specific
/// formulas are matched on the group's descriptor.
std::vector<FormulaPrediction> predictions_for(const GroupTable& g, const SolverOptions& opts = {});

/// Evaluates a formula by id from integer parameters, as used by the CLI.
FormulaPrediction evaluate_formula(const std::string& theorem_id,
                                   const std::vector<std::size_t>& params);
std::vector<std::string> formula_ids();

}  // namespace commdom
