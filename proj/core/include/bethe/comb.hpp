#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bethe/rational.hpp"
#include "bethe/subsets.hpp"
#include "bethe/verma.hpp"
#include "bethe/yangian.hpp"

namespace bethe {

/// F_I(t, z) = ∏_a 1/(t_a − z_{i_a}) ∏_{m>i_a} (t_a − z_m + 1)/(t_a − z_m).
Rational f_weight(const Subset& I, std::span<const Rational> t, std::span<const Rational> z);

/// F̃_I(t, z) = ∏_a 1/(z_{i_a} − t_{ξ−a+1}) ∏_{m>i_a} (z_m − t_{ξ−a+1} + 1)/(z_m − t_{ξ−a+1}),
/// ξ = len(t).
Rational f_tilde(const Subset& I, std::span<const Rational> t, std::span<const Rational> z);

/// V_I(t, z, y) = Sym-bar_t(F_I · ∏_{a≤|I|}(t_a − y)) / (ξ − |I|)!
Rational v_fn(const Subset& I, std::span<const Rational> t, std::span<const Rational> z, const Rational& y);

/// Ṽ_I(t, z, y) = Sym-bar_t(F̃_I · ∏_{a≤|I|}(t_{ξ−a+1} − y)) / (ξ − |I|)!
Rational v_tilde_fn(const Subset& I, std::span<const Rational> t, std::span<const Rational> z, const Rational& y);

struct PqrTriple {
    int p = 0;
    int q = 0;
    int r = 0;
    friend bool operator==(const PqrTriple&, const PqrTriple&) = default;
    friend auto operator<=>(const PqrTriple&, const PqrTriple&) = default;
};

/// All (p,q,r) with p ≤ min(ξ2,ξ3), q ≤ min(ξ2,ξ1), max(0,p+q−ξ2) ≤ r ≤ min(p,q).
std::vector<PqrTriple> pqr_triples(const XiShape& shape);

/// e32^{ξ2−p−q+r} e31^{q−r} e42^{p−r} e41^r e21^{ξ1−q} e43^{ξ3−p}
PbwMonomial pqr_monomial(const XiShape& shape, const PqrTriple& pqr);

/// Sequences i (length p) and j (length q) in {1..ξ2} with |i ∩ j| = r.
struct ChoiceSequences {
    Subset i;
    Subset j;
    int r = 0;

    /// Throws std::invalid_argument unless the sequences fit (p,q,r) and ξ2.
    void validate(const PqrTriple& pqr, int xi2) const;
    std::string str() const;
};

/// i = {1..p}, j = {p+1−r..p+q−r}.
ChoiceSequences choice_a(const PqrTriple& pqr);
/// i = {q+1−r..q+p−r}, j = {1..q}.
ChoiceSequences choice_b(const PqrTriple& pqr);
/// Every valid choice for (p,q,r) at the given ξ2.
std::vector<ChoiceSequences> all_choices(const PqrTriple& pqr, int xi2);

/// G_{i,j}(t) with numerators (t³_a − x + Λ³) and (t¹ − x + Λ²). The inner
/// t²-product of the second factor runs over l = 1..j_s − 1, which is what
/// V_i(t³,t²) Ṽ_ǰ(t¹,ť²) expands to.
Rational g_fn(const ChoiceSequences& choice, const XiShape& shape, const Variables& t, const Rational& x,
              const Rational& lam2, const Rational& lam3);

/// As g_fn but with the mirrored inner range l = 1..ξ2 − j_s. Agrees with
/// g_fn whenever ξ2 ≤ 1.
Rational g_fn_mirrored(const ChoiceSequences& choice, const XiShape& shape, const Variables& t, const Rational& x,
                      const Rational& lam2, const Rational& lam3);

/// Literal closed forms of G for choices (a) and (b):
/// numerators (t³_a − Λ³) and (t¹ − Λ²), the mirrored inner range, and for (b)
/// the second product pairs t¹_{ξ1−b+1} with t²_b.
Rational g_example_a(const PqrTriple& pqr, const XiShape& shape, const Variables& t, const Rational& lam2,
                     const Rational& lam3);
Rational g_example_b(const PqrTriple& pqr, const XiShape& shape, const Variables& t, const Rational& lam2,
                     const Rational& lam3);

/// Sym-bar_{t¹} Sym-bar_{t²} Sym-bar_{t³} G_{i,j}(t).
Rational sym3_g(const ChoiceSequences& choice, const XiShape& shape, const Variables& t, const Rational& x,
                const Rational& lam2, const Rational& lam3);

using ChoicePicker = std::function<ChoiceSequences(const PqrTriple&)>;

/// Σ over (I,J) ∈ 𝒮 of Ṽ_J V_I, unsymmetrized in t².
ModuleVector weight_function_presym(const XiShape& shape, const Variables& t, const EvalModuleContext& ctx);

/// Sym-bar over t² of V_Ǐ(t³, t², x−Λ³) Ṽ_J(t¹, ť², x−Λ²), one pair per
/// (p,q,r). The pair is (Ǐ, J̌) of the picked sequences; default choice (a).
ModuleVector weight_function_main(const XiShape& shape, const Variables& t, const EvalModuleContext& ctx,
                                  const ChoicePicker& pick = {});

/// Triple Sym-bar of G_{i,j}, one choice per (p,q,r); default choice (a).
ModuleVector weight_function_main2(const XiShape& shape, const Variables& t, const EvalModuleContext& ctx,
                                   const ChoicePicker& pick = {});

bool check_choice_independence(const XiShape& shape, const Variables& t, const EvalModuleContext& ctx,
                               const ChoiceSequences& a, const ChoiceSequences& b);

/// Outcome of the standalone identity
///   Σ_{(I,J)∈𝒮_{p,q,r,k}} Ṽ_J(t¹,z,y2) V_I(t³,z,y3) = Sym-bar_z(V_Ǐ0(t³,z,y3) Ṽ_J0(t¹,ž,y2)) / C
/// under the two candidate constants
///   alternative: C = (p−r)!(q−r)! r! (k−p−q−r)!
///   orbit:       C = (p−r)!(q−r)! r! (k−p−q+r)!
struct SubsetPairReport {
    Rational lhs;
    Rational symmetrized;                 // Sym-bar_z(...) before dividing by C
    bool orbit_holds = false;
    std::optional<bool> alt_holds;        // empty when k−p−q−r < 0
    std::string finding;
};

SubsetPairReport subset_pair_report(int p, int q, int r, int k, std::span<const Rational> t1, std::span<const Rational> t3,
                             std::span<const Rational> z, const Rational& y2, const Rational& y3,
                             std::optional<SubsetPair> pair0 = std::nullopt);

/// True iff the identity holds with the orbit constant (k−p−q+r)!.
bool check_subset_pair_identity(int p, int q, int r, int k, std::span<const Rational> t1, std::span<const Rational> t3,
                   std::span<const Rational> z, const Rational& y2, const Rational& y3,
                   std::optional<SubsetPair> pair0 = std::nullopt);

/// Exchange identities of V_I and Ṽ_I under z ↦ z^{s_a}.
bool check_v_transforms(const Subset& I, std::span<const Rational> t, std::span<const Rational> z, const Rational& y,
                        int a);

}  // namespace bethe
