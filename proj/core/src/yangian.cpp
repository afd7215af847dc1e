#include "bethe/yangian.hpp"

#include <map>
#include <stdexcept>

#include "bethe/comb.hpp"
#include "bethe/subsets.hpp"
#include "bethe/symmetrize.hpp"

namespace bethe {

int XiShape::partial(int a) const {
    int s = 0;
    for (int i = 1; i <= a; ++i) s += (*this)[i];
    return s;
}

void XiShape::validate() const {
    for (int a = 1; a <= 3; ++a) {
        if ((*this)[a] < 0) throw std::invalid_argument("shape entries must be nonnegative");
        if ((*this)[a] > kMaxXi)
            throw std::invalid_argument("shape entry " + std::to_string((*this)[a]) + " exceeds the cap of " +
                                        std::to_string(kMaxXi));
    }
}

std::string XiShape::str() const {
    return std::to_string(xi1) + "," + std::to_string(xi2) + "," + std::to_string(xi3);
}

void Variables::check_shape(const XiShape& shape) const {
    for (int a = 1; a <= 3; ++a)
        if (static_cast<int>(group(a).size()) != shape[a])
            throw std::invalid_argument("variable group t" + std::to_string(a) + " has " +
                                        std::to_string(group(a).size()) + " entries, shape expects " +
                                        std::to_string(shape[a]));
}

ModuleVector EvalModule::t_apply(int a, int b, const Rational& u, const ModuleVector& vec) {
    const Rational inv = (u - ctx_.x).inverse("u - x in T(u) on V(x)");
    ModuleVector out = verma_.act(b, a, vec);
    out *= inv;
    if (a == b) out += vec;
    return out;
}

ModuleVector t_apply(int a, int b, const Rational& u, const ModuleVector& vec, const EvalModuleContext& ctx) {
    EvalModule m(ctx);
    return m.t_apply(a, b, u, vec);
}

namespace {

using State = AuxState<ModuleVector>;

// T^{(p)}(u) followed by projection onto r_p = target. Valid because every
// aux position receives exactly one T-factor and nothing acts on it later.
State apply_t_projected(int p, int target, const Rational& u, const State& s, EvalModule& mod) {
    State out;
    const auto pi = static_cast<std::size_t>(p - 1);
    for (const auto& [idx, c] : s.terms()) {
        AuxIndex r = idx;
        r[pi] = static_cast<std::uint8_t>(target);
        out.add(r, mod.t_apply(target, idx[pi], u, c));
    }
    return out;
}

}  // namespace

ModuleVector weight_function_direct(const XiShape& shape, const Variables& t, EvalModule& mod) {
    shape.validate();
    t.check_shape(shape);
    const int n = shape.total();
    auto pos = [&](int group, int k) { return shape.partial(group - 1) + k; };

    AuxIndex col(static_cast<std::size_t>(n)), row(static_cast<std::size_t>(n));
    for (int g = 1; g <= 3; ++g)
        for (int k = 1; k <= shape[g]; ++k) {
            col[static_cast<std::size_t>(pos(g, k) - 1)] = static_cast<std::uint8_t>(g + 1);
            row[static_cast<std::size_t>(pos(g, k) - 1)] = static_cast<std::uint8_t>(g);
        }

    State s(col, ModuleVector::vacuum());
    // R[21], then R[31], then R[32]; inside R[k,j] the factor for i = ξ_k acts
    // first and within it l runs upward.
    const std::array<std::pair<int, int>, 3> blocks{{{2, 1}, {3, 1}, {3, 2}}};
    for (const auto& [k, j] : blocks)
        for (int i = shape[k]; i >= 1; --i)
            for (int l = 1; l <= shape[j]; ++l)
                s = apply_r(RFactor{pos(k, i), pos(j, l), t.group(k)[static_cast<std::size_t>(i - 1)] -
                                                             t.group(j)[static_cast<std::size_t>(l - 1)]},
                            s);
    for (int g = 3; g >= 1; --g)
        for (int k = shape[g]; k >= 1; --k)
            s = apply_t_projected(pos(g, k), g, t.group(g)[static_cast<std::size_t>(k - 1)], s, mod);
    return s.at(row);
}

std::vector<ExampleTerm> example_terms(const Rational& t1, const Rational& t2, const Rational& t3) {
    const Rational d21 = t2 - t1, d32 = t3 - t2, d31 = t3 - t1;
    const Rational i21 = d21.inverse("t2 - t1"), i32 = d32.inverse("t3 - t2"), i31 = d31.inverse("t3 - t1");
    return {
        {"T12 T23 T34", Rational(1), {2, 3, 4}},
        {"T13 T22 T34", i21, {3, 2, 4}},
        {"T12 T24 T33", i32, {2, 4, 3}},
        {"T14 T22 T33", i21 * i32, {4, 2, 3}},
        {"T13 T24 T32", i21 * i32, {3, 4, 2}},
        {"T14 T23 T32", (d21 * d32 + 1) * i21 * i31 * i32, {4, 3, 2}},
    };
}

ModuleVector example_expansion(const Variables& t, EvalModule& mod) {
    t.check_shape(XiShape{1, 1, 1});
    const Rational &t1 = t.group(1)[0], &t2 = t.group(2)[0], &t3 = t.group(3)[0];
    ModuleVector out;
    for (const auto& term : example_terms(t1, t2, t3)) {
        ModuleVector w = ModuleVector::vacuum();
        w = mod.t_apply(3, term.lower[2], t3, w);
        w = mod.t_apply(2, term.lower[1], t2, w);
        w = mod.t_apply(1, term.lower[0], t1, w);
        w *= term.coefficient;
        out += w;
    }
    return out;
}

bool check_rtt(int a, int b, int c, int d, const Rational& u, const Rational& v, const ModuleVector& vec,
               EvalModule& mod) {
    auto tt = [&](int a1, int b1, const Rational& x1, int a2, int b2, const Rational& x2) {
        return mod.t_apply(a1, b1, x1, mod.t_apply(a2, b2, x2, vec));
    };
    ModuleVector lhs = tt(a, b, u, c, d, v) - tt(c, d, v, a, b, u);
    lhs *= u - v;
    const ModuleVector rhs = tt(a, d, u, c, b, v) - tt(a, d, v, c, b, u);
    return lhs == rhs;
}

// ---------------------------------------------------------------------------

Gl2Module::Gl2Module(std::vector<Gl2Site> sites, EvalModule* eval, bool opposite)
    : sites_(std::move(sites)), eval_(eval), opposite_(opposite) {
    for (std::size_t i = 0; i < sites_.size(); ++i) {
        if (sites_[i].kind == Gl2Site::Kind::Verma) {
            if (verma_site_ >= 0) throw std::invalid_argument("a gl2 module may contain at most one Verma site");
            if (eval_ == nullptr) throw std::invalid_argument("Verma site needs an evaluation module");
            if (sites_[i].offset != 0 && sites_[i].offset != 2)
                throw std::invalid_argument("Verma site offset must be 0 or 2");
            verma_site_ = static_cast<int>(i);
            aux_pos_.push_back(-1);
        } else {
            aux_pos_.push_back(aux_rank_++);
        }
    }
}

Gl2Module tensor(const Gl2Module& a, const Gl2Module& b) {
    if (a.opposite_ || b.opposite_) throw std::invalid_argument("tensor() composes Δ-modules only");
    std::vector<Gl2Site> sites = a.sites_;
    sites.insert(sites.end(), b.sites_.begin(), b.sites_.end());
    return Gl2Module(std::move(sites), a.eval_ ? a.eval_ : b.eval_, false);
}

Gl2State Gl2Module::basis(const AuxIndex& idx, const ModuleVector& coef) const {
    if (static_cast<int>(idx.size()) != aux_rank_) throw std::invalid_argument("basis index has wrong length");
    return Gl2State(idx, coef);
}

Rational Gl2Module::verma_eigenvalue(int a, const Rational& u) const {
    if (verma_site_ < 0) throw std::logic_error("module has no Verma site");
    const int o = sites_[static_cast<std::size_t>(verma_site_)].offset;
    return 1 + eval_->hw()[a + o] * (u - eval_->x()).inverse("u - x in T(u) on V(x)");
}

Gl2State Gl2Module::site_apply(std::size_t site, int out, int in, const Rational& u, const Gl2State& state) const {
    const Gl2Site& st = sites_[site];
    Gl2State res;
    if (out == in) res = state;
    switch (st.kind) {
        case Gl2Site::Kind::L: {
            const Rational w = (u - st.z).inverse("u - z in L(z)");
            const auto p = static_cast<std::size_t>(aux_pos_[site]);
            for (const auto& [idx, c] : state.terms()) {
                if (idx[p] != out) continue;
                AuxIndex r = idx;
                r[p] = static_cast<std::uint8_t>(in);
                res.add(r, c * w);
            }
            break;
        }
        case Gl2Site::Kind::LBar: {
            const Rational w = (st.z - u).inverse("z - u in L̄(z)");
            const auto p = static_cast<std::size_t>(aux_pos_[site]);
            for (const auto& [idx, c] : state.terms()) {
                if (idx[p] != in) continue;
                AuxIndex r = idx;
                r[p] = static_cast<std::uint8_t>(out);
                res.add(r, c * w);
            }
            break;
        }
        case Gl2Site::Kind::Verma: {
            const Rational w = (u - eval_->x()).inverse("u - x in T(u) on V(x)");
            for (const auto& [idx, c] : state.terms()) {
                ModuleVector img = eval_->verma().act(in + st.offset, out + st.offset, c);
                img *= w;
                res.add(idx, img);
            }
            break;
        }
    }
    return res;
}

Gl2State Gl2Module::t_apply(int a, int b, const Rational& u, const Gl2State& state) const {
    if (a < 1 || a > 2 || b < 1 || b > 2) throw std::out_of_range("gl2 indices must be 1 or 2");
    if (sites_.empty()) return a == b ? state : Gl2State{};
    std::map<int, Gl2State> chain{{b, state}};
    const std::size_t n = sites_.size();
    for (std::size_t step = 0; step < n; ++step) {
        const std::size_t site = opposite_ ? n - 1 - step : step;
        const bool last = step + 1 == n;
        std::map<int, Gl2State> next;
        for (const auto& [in, st] : chain) {
            for (int out = 1; out <= 2; ++out) {
                if (last && out != a) continue;
                Gl2State img = site_apply(site, out, in, u, st);
                if (!img.is_zero()) next[out] += img;
            }
        }
        chain = std::move(next);
    }
    auto it = chain.find(a);
    return it == chain.end() ? Gl2State{} : it->second;
}

namespace {

bool is_scalar(const ModuleVector& v) {
    return v.is_zero() || (v.size() == 1 && v.terms().begin()->first.is_vacuum());
}

}  // namespace

Gl2State tensor_states(const Gl2State& a, const Gl2State& b) {
    Gl2State out;
    for (const auto& [ia, ca] : a.terms())
        for (const auto& [ib, cb] : b.terms()) {
            AuxIndex idx = ia;
            idx.insert(idx.end(), ib.begin(), ib.end());
            if (is_scalar(ca)) out.add(idx, cb * ca.at(PbwMonomial{}));
            else if (is_scalar(cb)) out.add(idx, ca * cb.at(PbwMonomial{}));
            else throw std::invalid_argument("both tensor factors carry a Verma component");
        }
    return out;
}

Gl2State gl2_weight_function(const std::vector<Rational>& ts, const Gl2Module& mod, const Gl2State& state) {
    Gl2State s = state;
    for (auto it = ts.rbegin(); it != ts.rend(); ++it) s = mod.t_apply(1, 2, *it, s);
    return s;
}

ModuleVector splitting_rhs(const XiShape& shape, const Variables& t, EvalModule& mod) {
    shape.validate();
    t.check_shape(shape);
    const auto& z = t.group(2);
    const std::size_t k = z.size();

    std::vector<Gl2Site> psi_sites, phi_sites;
    for (const auto& zi : z) {
        psi_sites.push_back(Gl2Site::l(zi));
        phi_sites.push_back(Gl2Site::lbar(zi));
    }
    psi_sites.push_back(Gl2Site::verma(2));
    phi_sites.push_back(Gl2Site::verma(0));
    const Gl2Module psi(psi_sites, &mod, false);
    const Gl2Module phi(phi_sites, &mod, true);

    const Gl2State psi_part = gl2_weight_function(t.group(3), psi, psi.basis(AuxIndex(k, 1)));
    ModuleVector out;
    for (const auto& [b, u] : psi_part.terms()) {
        const Gl2State phi_part = gl2_weight_function(t.group(1), phi, phi.basis(AuxIndex(k, 2), u));
        for (const auto& [a, w] : phi_part.terms()) {
            ModuleVector term = w;
            for (std::size_t j = k; j-- > 0;) term = mod.t_apply(a[j], b[j] + 2, z[j], term);
            out += term;
        }
    }
    return out;
}

bool check_splitting(const XiShape& shape, const Variables& t, EvalModule& mod) {
    return weight_function_direct(shape, t, mod) == splitting_rhs(shape, t, mod);
}

bool check_coproduct_expansion(const std::vector<Rational>& ts, const Gl2Module& mod1, const Gl2State& w1,
                               const Gl2Module& mod2, const Gl2State& w2) {
    const Gl2Module both = tensor(mod1, mod2);
    const Gl2State lhs = gl2_weight_function(ts, both, tensor_states(w1, w2));

    const int xi = static_cast<int>(ts.size());
    Gl2State rhs;
    for (int eta = 0; eta <= xi; ++eta) {
        auto term = [&](std::span<const Rational> tv) {
            Gl2State left = w1, right = w2;
            for (int i = eta; i < xi; ++i) left = mod1.t_apply(2, 2, tv[static_cast<std::size_t>(i)], left);
            for (int i = eta - 1; i >= 0; --i) left = mod1.t_apply(1, 2, tv[static_cast<std::size_t>(i)], left);
            for (int i = 0; i < eta; ++i) right = mod2.t_apply(1, 1, tv[static_cast<std::size_t>(i)], right);
            for (int i = xi - 1; i >= eta; --i) right = mod2.t_apply(1, 2, tv[static_cast<std::size_t>(i)], right);
            return tensor_states(left, right);
        };
        Gl2State part = sym_bar(term, ts);
        part *= (factorial(xi - eta) * factorial(eta)).inverse("factorial");
        rhs += part;
    }
    return lhs == rhs;
}

bool check_exchange_formulas(const Rational& u, const std::vector<Rational>& ts, const Gl2Module& mod,
                             const Gl2State& state) {
    const std::size_t k = ts.size();
    auto b_of = [&](const std::vector<Rational>& vars, Gl2State s) { return gl2_weight_function(vars, mod, s); };

    for (int diag : {1, 2}) {
        // T11 for diag = 1 (shift −1, sign +), T22 for diag = 2 (shift +1, sign −).
        const int shift = diag == 1 ? -1 : 1;
        const Rational sign = diag == 1 ? Rational(1) : Rational(-1);

        const Gl2State lhs = mod.t_apply(diag, diag, u, b_of(ts, state));

        Rational lead(1);
        for (const auto& ti : ts) lead *= ratio(u - ti + shift, u - ti, "u - t_i");
        Gl2State rhs = b_of(ts, mod.t_apply(diag, diag, u, state));
        rhs *= lead;

        for (std::size_t l = 0; l < k; ++l) {
            Rational c = (u - ts[l]).inverse("u - t_l");
            for (std::size_t m = 0; m < k; ++m)
                if (m != l) c *= ratio(ts[l] - ts[m] + shift, ts[l] - ts[m], "t_l - t_m");
            std::vector<Rational> vars;
            for (std::size_t m = 0; m < k; ++m)
                if (m != l) vars.push_back(ts[m]);
            vars.push_back(u);
            Gl2State term = b_of(vars, mod.t_apply(diag, diag, ts[l], state));
            term *= sign * c;
            rhs += term;
        }
        if (!(lhs == rhs)) return false;
    }
    return true;
}

namespace {

ModuleVector verma_b(const std::vector<Rational>& ts, int offset, EvalModule& mod) {
    ModuleVector w = ModuleVector::vacuum();
    for (auto it = ts.rbegin(); it != ts.rend(); ++it) w = mod.t_apply(1 + offset, 2 + offset, *it, w);
    return w;
}

std::vector<Subset> subsets_up_to(int k, int max_size) {
    std::vector<Subset> out;
    for (int m = 0; m <= std::min(k, max_size); ++m)
        for (auto& s : subsets_of_size(k, m)) out.push_back(std::move(s));
    return out;
}

}  // namespace

bool check_w1(const std::vector<Rational>& ts, const std::vector<Rational>& zs, EvalModule& mod, int offset) {
    const int xi = static_cast<int>(ts.size());
    const int k = static_cast<int>(zs.size());
    std::vector<Gl2Site> sites;
    for (const auto& z : zs) sites.push_back(Gl2Site::l(z));
    sites.push_back(Gl2Site::verma(offset));
    const Gl2Module m(sites, &mod);

    const Gl2State lhs = gl2_weight_function(ts, m, m.basis(AuxIndex(static_cast<std::size_t>(k), 1)));

    Gl2State rhs;
    for (const auto& I : subsets_up_to(k, xi)) {
        const std::size_t ni = I.size();
        AuxIndex w(static_cast<std::size_t>(k), 1);
        for (int i : I) w[static_cast<std::size_t>(i - 1)] = 2;
        auto f = [&](std::span<const Rational> tv) {
            Rational c = f_weight(I, tv, zs);
            for (std::size_t a = 0; a < ni; ++a) c *= m.verma_eigenvalue(1, tv[a]);
            const std::vector<Rational> rest(tv.begin() + static_cast<std::ptrdiff_t>(ni), tv.end());
            ModuleVector bv = verma_b(rest, offset, mod);
            bv *= c;
            return Gl2State(w, bv);
        };
        Gl2State part = sym_bar(f, ts);
        part *= factorial(xi - static_cast<int>(ni)).inverse("factorial");
        rhs += part;
    }
    return lhs == rhs;
}

bool check_w2(const std::vector<Rational>& ts, const std::vector<Rational>& zs, EvalModule& mod, int offset,
              W2Placement placement) {
    const int xi = static_cast<int>(ts.size());
    const int k = static_cast<int>(zs.size());
    std::vector<Gl2Site> sites{Gl2Site::verma(offset)};
    for (int i = k; i >= 1; --i) sites.push_back(Gl2Site::lbar(zs[static_cast<std::size_t>(i - 1)]));
    const Gl2Module m(sites, &mod);

    const Gl2State lhs = gl2_weight_function(ts, m, m.basis(AuxIndex(static_cast<std::size_t>(k), 2)));

    Gl2State rhs;
    for (const auto& I : subsets_up_to(k, xi)) {
        const int ni = static_cast<int>(I.size());
        AuxIndex w(static_cast<std::size_t>(k), 2);
        for (int i : I) {
            const int p = placement == W2Placement::BySiteLabel ? k - i + 1 : i;
            w[static_cast<std::size_t>(p - 1)] = 1;
        }
        auto f = [&](std::span<const Rational> tv) {
            Rational c = f_tilde(I, tv, zs);
            for (int i = 1; i <= ni; ++i) c *= m.verma_eigenvalue(2, tv[static_cast<std::size_t>(xi - ni + i - 1)]);
            const std::vector<Rational> head(tv.begin(), tv.begin() + (xi - ni));
            ModuleVector bv = verma_b(head, offset, mod);
            bv *= c;
            return Gl2State(w, bv);
        };
        Gl2State part = sym_bar(f, ts);
        part *= factorial(xi - ni).inverse("factorial");
        rhs += part;
    }
    return lhs == rhs;
}

bool check_w1_w2(const std::vector<Rational>& ts, const std::vector<Rational>& zs, EvalModule& mod) {
    return check_w1(ts, zs, mod) && check_w2(ts, zs, mod);
}

}  // namespace bethe
