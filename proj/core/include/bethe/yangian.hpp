#pragma once

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "bethe/rational.hpp"
#include "bethe/tensor.hpp"
#include "bethe/verma.hpp"

namespace bethe {

/// Largest ξ_a accepted anywhere; symmetrizations grow like ξ_a!.
inline constexpr int kMaxXi = 6;

/// (ξ1, ξ2, ξ3) with partial sums ξ^a = ξ1 + … + ξa.
struct XiShape {
    int xi1 = 0;
    int xi2 = 0;
    int xi3 = 0;

    int operator[](int a) const { return a == 1 ? xi1 : a == 2 ? xi2 : xi3; }
    int partial(int a) const;
    int total() const { return xi1 + xi2 + xi3; }
    /// Throws std::invalid_argument on negative entries or ξ_a > kMaxXi.
    void validate() const;
    std::string str() const;

    friend bool operator==(const XiShape&, const XiShape&) = default;
};

/// The variables t = (t¹, t², t³), t^a of length ξ_a.
struct Variables {
    std::array<std::vector<Rational>, 3> t;

    const std::vector<Rational>& group(int a) const { return t[static_cast<std::size_t>(a - 1)]; }
    std::vector<Rational>& group(int a) { return t[static_cast<std::size_t>(a - 1)]; }
    /// Throws std::invalid_argument if the group sizes differ from `shape`.
    void check_shape(const XiShape& shape) const;
};

struct EvalModuleContext {
    HighestWeight hw;
    Rational x;
};

/// The evaluation module V(x) over Y(gl4) built on the Verma module M(Λ):
/// T^a_b(u) ↦ δ_ab + e_ba/(u − x).
class EvalModule {
public:
    explicit EvalModule(EvalModuleContext ctx) : ctx_(std::move(ctx)), verma_(ctx_.hw) {}

    const EvalModuleContext& context() const { return ctx_; }
    const Rational& x() const { return ctx_.x; }
    const HighestWeight& hw() const { return ctx_.hw; }
    VermaModule& verma() { return verma_; }

    /// T^a_b(u) · vec. Throws PoleError when u = x.
    ModuleVector t_apply(int a, int b, const Rational& u, const ModuleVector& vec);

private:
    EvalModuleContext ctx_;
    VermaModule verma_;
};

/// Free-function form of EvalModule::t_apply.
ModuleVector t_apply(int a, int b, const Rational& u, const ModuleVector& vec, const EvalModuleContext& ctx);

/// 𝔹_ξ(t)v from the ordered T/R product, read off at row (1^ξ1,2^ξ2,3^ξ3)
/// and column (2^ξ1,3^ξ2,4^ξ3).
ModuleVector weight_function_direct(const XiShape& shape, const Variables& t, EvalModule& mod);

/// One T^1_a(t¹)T^2_b(t²)T^3_c(t³) term of the ξ = (1,1,1) expansion.
struct ExampleTerm {
    std::string label;          // e.g. "T13 T22 T34"
    Rational coefficient;
    std::array<int, 3> lower;   // (a, b, c)
};

/// The closed-form expansion of 𝔹_{(1,1,1)} into six T-products.
std::vector<ExampleTerm> example_terms(const Rational& t1, const Rational& t2, const Rational& t3);

/// Applies the expansion of example_terms to v.
ModuleVector example_expansion(const Variables& t, EvalModule& mod);

/// (u−v)[T^a_b(u),T^c_d(v)]vec == (T^a_d(u)T^c_b(v) − T^a_d(v)T^c_b(u))vec.
bool check_rtt(int a, int b, int c, int d, const Rational& u, const Rational& v, const ModuleVector& vec,
               EvalModule& mod);

// ---------------------------------------------------------------------------
// gl2 modules

/// One tensor factor of a Y(gl2)-module.
///   L(z):      T^a_b(u) w_c = δ_ab w_c + δ_ac w_b/(u − z)
///   L̄(z):      T^a_b(u) w_c = δ_ab w_c + δ_bc w_a/(z − u)
///   Verma:     T^a_b(u) ↦ δ_ab + e_{b+o,a+o}/(u − x) on the shared V(x),
///              with o = 0 for the upper-left gl2 and o = 2 for the lower-right.
struct Gl2Site {
    enum class Kind { L, LBar, Verma };
    Kind kind = Kind::L;
    Rational z;
    int offset = 0;

    static Gl2Site l(const Rational& z) { return {Kind::L, z, 0}; }
    static Gl2Site lbar(const Rational& z) { return {Kind::LBar, z, 0}; }
    static Gl2Site verma(int offset) { return {Kind::Verma, Rational(0), offset}; }
};

/// Vector in a gl2 tensor module: aux index over the C² sites (in site
/// order, Verma site skipped) with the Verma component as coefficient. When
/// no Verma site is present the coefficient is a multiple of v.
using Gl2State = AuxState<ModuleVector>;

/// Tensor product of sites acting through Δ, or through the opposite
/// coproduct Δ̃ when `opposite` is set. At most one Verma site.
class Gl2Module {
public:
    Gl2Module(std::vector<Gl2Site> sites, EvalModule* eval = nullptr, bool opposite = false);

    const std::vector<Gl2Site>& sites() const { return sites_; }
    int aux_rank() const { return aux_rank_; }
    bool has_verma() const { return verma_site_ >= 0; }
    bool opposite() const { return opposite_; }

    /// Concatenation of two modules under Δ.
    friend Gl2Module tensor(const Gl2Module& a, const Gl2Module& b);

    /// State with aux entries `idx` and coefficient `coef` (default v).
    Gl2State basis(const AuxIndex& idx, const ModuleVector& coef = ModuleVector::vacuum()) const;

    /// T^a_b(u) · state, a, b ∈ {1, 2}.
    Gl2State t_apply(int a, int b, const Rational& u, const Gl2State& state) const;

    /// Eigenvalue of T^a_a(u) on the Verma highest vector of this module.
    Rational verma_eigenvalue(int a, const Rational& u) const;

private:
    Gl2State site_apply(std::size_t site, int out, int in, const Rational& u, const Gl2State& state) const;

    std::vector<Gl2Site> sites_;
    std::vector<int> aux_pos_;   // site → aux position (0-based), −1 for Verma
    EvalModule* eval_ = nullptr;
    int verma_site_ = -1;
    int aux_rank_ = 0;
    bool opposite_ = false;
};

/// Combines states of two modules into a state of tensor(a, b). At most one
/// side may carry a nontrivial Verma component.
Gl2State tensor_states(const Gl2State& a, const Gl2State& b);

/// T12(t_1)⋯T12(t_ξ) · state.
Gl2State gl2_weight_function(const std::vector<Rational>& ts, const Gl2Module& mod, const Gl2State& state);

/// Right side of the splitting formula: Σ 𝒯(t²)^a_b · φ-part^a · ψ-part^{b−2} v.
ModuleVector splitting_rhs(const XiShape& shape, const Variables& t, EvalModule& mod);
bool check_splitting(const XiShape& shape, const Variables& t, EvalModule& mod);

/// Δ(T12(t_1)⋯T12(t_ξ))(w1 ⊗ w2) against the symmetrized η-sum with
/// T22/T11 dressing.
bool check_coproduct_expansion(const std::vector<Rational>& ts, const Gl2Module& mod1, const Gl2State& w1,
                               const Gl2Module& mod2, const Gl2State& w2);

/// T11(u)·B and T22(u)·B, B = T12(t_1)⋯T12(t_k), against the exchange
/// formulas. Both must hold.
bool check_exchange_formulas(const Rational& u, const std::vector<Rational>& ts, const Gl2Module& mod,
                             const Gl2State& state);

/// How w^{I*} is laid out in V ⊗ L̄(z_k) ⊗ ⋯ ⊗ L̄(z_1).
enum class W2Placement {
    BySiteLabel,  // factor L̄(z_i) carries w1 iff i ∈ I
    ByPosition,   // the p-th L̄ factor from the left carries w1 iff p ∈ I
};

/// B(t)(w1^{⊗k} ⊗ v) in L(z_1)⊗⋯⊗L(z_k)⊗V against the F_I subset sum.
bool check_w1(const std::vector<Rational>& ts, const std::vector<Rational>& zs, EvalModule& mod, int offset = 0);
/// B(t)(v ⊗ w2^{⊗k}) in V⊗L̄(z_k)⊗⋯⊗L̄(z_1) against the F̃_I subset sum.
bool check_w2(const std::vector<Rational>& ts, const std::vector<Rational>& zs, EvalModule& mod, int offset = 0,
              W2Placement placement = W2Placement::BySiteLabel);
bool check_w1_w2(const std::vector<Rational>& ts, const std::vector<Rational>& zs, EvalModule& mod);

}  // namespace bethe
