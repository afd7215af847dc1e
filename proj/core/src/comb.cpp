#include "bethe/comb.hpp"

#include <algorithm>
#include <stdexcept>

#include "bethe/symmetrize.hpp"

namespace bethe {

namespace {

const Rational& at(std::span<const Rational> v, int one_based) {
    return v[static_cast<std::size_t>(one_based - 1)];
}

void check_subset(const Subset& I, std::size_t t_size, std::size_t k) {
    if (I.size() > t_size) throw std::invalid_argument("subset larger than the number of variables");
    for (int i : I)
        if (i < 1 || i > static_cast<int>(k)) throw std::invalid_argument("subset element outside 1..k");
}

Subset range(int lo, int hi) {
    Subset s;
    for (int v = lo; v <= hi; ++v) s.push_back(v);
    return s;
}

}  // namespace

Rational f_weight(const Subset& I, std::span<const Rational> t, std::span<const Rational> z) {
    check_subset(I, t.size(), z.size());
    const int k = static_cast<int>(z.size());
    Rational out(1);
    for (std::size_t a = 0; a < I.size(); ++a) {
        const Rational& ta = t[a];
        out *= (ta - at(z, I[a])).inverse("t_a - z_{i_a} in F_I");
        for (int m = I[a] + 1; m <= k; ++m) out *= ratio(ta - at(z, m) + 1, ta - at(z, m), "t_a - z_m in F_I");
    }
    return out;
}

Rational f_tilde(const Subset& I, std::span<const Rational> t, std::span<const Rational> z) {
    check_subset(I, t.size(), z.size());
    const int k = static_cast<int>(z.size());
    const int xi = static_cast<int>(t.size());
    Rational out(1);
    for (std::size_t a = 0; a < I.size(); ++a) {
        const Rational& tt = at(t, xi - static_cast<int>(a));
        out *= (at(z, I[a]) - tt).inverse("z_{i_a} - t in F~_I");
        for (int m = I[a] + 1; m <= k; ++m) out *= ratio(at(z, m) - tt + 1, at(z, m) - tt, "z_m - t in F~_I");
    }
    return out;
}

Rational v_fn(const Subset& I, std::span<const Rational> t, std::span<const Rational> z, const Rational& y) {
    check_subset(I, t.size(), z.size());
    const std::size_t n = I.size();
    Rational s = sym_bar(
        [&](std::span<const Rational> tv) {
            Rational c = f_weight(I, tv, z);
            for (std::size_t a = 0; a < n; ++a) c *= tv[a] - y;
            return c;
        },
        t);
    return s / factorial(static_cast<int>(t.size() - n));
}

Rational v_tilde_fn(const Subset& I, std::span<const Rational> t, std::span<const Rational> z, const Rational& y) {
    check_subset(I, t.size(), z.size());
    const std::size_t n = I.size();
    const std::size_t xi = t.size();
    Rational s = sym_bar(
        [&](std::span<const Rational> tv) {
            Rational c = f_tilde(I, tv, z);
            for (std::size_t a = 0; a < n; ++a) c *= tv[xi - a - 1] - y;
            return c;
        },
        t);
    return s / factorial(static_cast<int>(xi - n));
}

std::vector<PqrTriple> pqr_triples(const XiShape& shape) {
    std::vector<PqrTriple> out;
    for (int p = 0; p <= std::min(shape.xi2, shape.xi3); ++p)
        for (int q = 0; q <= std::min(shape.xi2, shape.xi1); ++q)
            for (int r = std::max(0, p + q - shape.xi2); r <= std::min(p, q); ++r) out.push_back({p, q, r});
    return out;
}

PbwMonomial pqr_monomial(const XiShape& shape, const PqrTriple& t) {
    return PbwMonomial::of(shape.xi2 - t.p - t.q + t.r, t.q - t.r, t.p - t.r, t.r, shape.xi1 - t.q, shape.xi3 - t.p);
}

void ChoiceSequences::validate(const PqrTriple& pqr, int xi2) const {
    auto ok = [&](const Subset& s, int len) {
        if (static_cast<int>(s.size()) != len) return false;
        for (std::size_t n = 0; n < s.size(); ++n) {
            if (s[n] < 1 || s[n] > xi2) return false;
            if (n && s[n] <= s[n - 1]) return false;
        }
        return true;
    };
    if (!ok(i, pqr.p) || !ok(j, pqr.q) || r != pqr.r || intersection_size(i, j) != pqr.r)
        throw std::invalid_argument("choice " + str() + " does not fit (p,q,r) = (" + std::to_string(pqr.p) + "," +
                                    std::to_string(pqr.q) + "," + std::to_string(pqr.r) + ") at xi2 = " +
                                    std::to_string(xi2));
}

std::string ChoiceSequences::str() const { return "i=" + to_string(i) + " j=" + to_string(j); }

ChoiceSequences choice_a(const PqrTriple& t) {
    return {range(1, t.p), range(t.p + 1 - t.r, t.p + t.q - t.r), t.r};
}

ChoiceSequences choice_b(const PqrTriple& t) {
    return {range(t.q + 1 - t.r, t.q + t.p - t.r), range(1, t.q), t.r};
}

std::vector<ChoiceSequences> all_choices(const PqrTriple& t, int xi2) {
    std::vector<ChoiceSequences> out;
    for (auto& pr : subset_pairs(t.p, t.q, t.r, xi2)) out.push_back({pr.I, pr.J, t.r});
    return out;
}

namespace {

Rational g_generic(const ChoiceSequences& c, const XiShape& shape, const Variables& t, const Rational& num3_shift,
                   const Rational& num2_shift, bool example_b_pairing, bool mirrored_range) {
    const auto& t1 = t.group(1);
    const auto& t2 = t.group(2);
    const auto& t3 = t.group(3);
    const int xi1 = shape.xi1, xi2 = shape.xi2;
    const int p = static_cast<int>(c.i.size()), q = static_cast<int>(c.j.size());
    Rational out(1);
    for (int a = 1; a <= p; ++a) {
        const Rational& ta = at(t3, a);
        const int ia = c.i[static_cast<std::size_t>(a - 1)];
        out *= ratio(ta + num3_shift, ta - at(t2, ia), "t3_a - t2_{i_a} in G");
        for (int m = ia + 1; m <= xi2; ++m) out *= ratio(ta - at(t2, m) + 1, ta - at(t2, m), "t3_a - t2_m in G");
    }
    for (int s = 1; s <= q; ++s) {
        // The general G pairs t¹_{ξ1−q+s} with j_s; the closed form for choice (b) pairs t¹_{ξ1−s+1} with t²_s.
        const Rational& ts = example_b_pairing ? at(t1, xi1 - s + 1) : at(t1, xi1 - q + s);
        const int js = c.j[static_cast<std::size_t>(s - 1)];
        out *= ratio(ts + num2_shift, at(t2, js) - ts, "t2_{j_s} - t1 in G");
        // Expanding Ṽ_J(t¹, ť²) gives l < j_s; the mirrored variant runs l ≤ ξ2 − j_s.
        const int l_max = mirrored_range ? xi2 - js : js - 1;
        for (int l = 1; l <= l_max; ++l) out *= ratio(at(t2, l) - ts + 1, at(t2, l) - ts, "t2_l - t1 in G");
    }
    return out;
}

}  // namespace

Rational g_fn(const ChoiceSequences& choice, const XiShape& shape, const Variables& t, const Rational& x,
              const Rational& lam2, const Rational& lam3) {
    choice.validate({static_cast<int>(choice.i.size()), static_cast<int>(choice.j.size()), choice.r}, shape.xi2);
    if (static_cast<int>(choice.i.size()) > shape.xi3 || static_cast<int>(choice.j.size()) > shape.xi1)
        throw std::invalid_argument("choice longer than the t3 or t1 group");
    return g_generic(choice, shape, t, lam3 - x, lam2 - x, false, false);
}

Rational g_fn_mirrored(const ChoiceSequences& choice, const XiShape& shape, const Variables& t, const Rational& x,
                      const Rational& lam2, const Rational& lam3) {
    choice.validate({static_cast<int>(choice.i.size()), static_cast<int>(choice.j.size()), choice.r}, shape.xi2);
    return g_generic(choice, shape, t, lam3 - x, lam2 - x, false, true);
}

Rational g_example_a(const PqrTriple& pqr, const XiShape& shape, const Variables& t, const Rational& lam2,
                     const Rational& lam3) {
    return g_generic(choice_a(pqr), shape, t, -lam3, -lam2, false, true);
}

Rational g_example_b(const PqrTriple& pqr, const XiShape& shape, const Variables& t, const Rational& lam2,
                     const Rational& lam3) {
    return g_generic(choice_b(pqr), shape, t, -lam3, -lam2, true, true);
}

Rational sym3_g(const ChoiceSequences& choice, const XiShape& shape, const Variables& t, const Rational& x,
                const Rational& lam2, const Rational& lam3) {
    Variables cur = t;
    return sym_bar(
        [&](std::span<const Rational> v1) {
            cur.group(1).assign(v1.begin(), v1.end());
            return sym_bar(
                [&](std::span<const Rational> v2) {
                    cur.group(2).assign(v2.begin(), v2.end());
                    return sym_bar(
                        [&](std::span<const Rational> v3) {
                            cur.group(3).assign(v3.begin(), v3.end());
                            return g_fn(choice, shape, cur, x, lam2, lam3);
                        },
                        t.group(3));
                },
                t.group(2));
        },
        t.group(1));
}

namespace {

Rational prefactor(const Variables& t, const Rational& x) {
    Rational out(1);
    for (int a = 1; a <= 3; ++a)
        for (const auto& ti : t.group(a)) out *= (ti - x).inverse("t - x in the prefactor");
    return out;
}

void prepare(const XiShape& shape, const Variables& t) {
    shape.validate();
    t.check_shape(shape);
}

ChoiceSequences picked(const ChoicePicker& pick, const PqrTriple& pqr, int xi2) {
    ChoiceSequences c = pick ? pick(pqr) : choice_a(pqr);
    c.validate(pqr, xi2);
    return c;
}

}  // namespace

ModuleVector weight_function_presym(const XiShape& shape, const Variables& t, const EvalModuleContext& ctx) {
    prepare(shape, t);
    const Rational y2 = ctx.x - ctx.hw[2], y3 = ctx.x - ctx.hw[3];
    ModuleVector out;
    for (const auto& pqr : pqr_triples(shape)) {
        Rational c(0);
        for (const auto& pr : subset_pairs(pqr.p, pqr.q, pqr.r, shape.xi2))
            c += v_tilde_fn(pr.J, t.group(1), t.group(2), y2) * v_fn(pr.I, t.group(3), t.group(2), y3);
        out.add(pqr_monomial(shape, pqr), c);
    }
    out *= prefactor(t, ctx.x);
    return out;
}

ModuleVector weight_function_main(const XiShape& shape, const Variables& t, const EvalModuleContext& ctx,
                                  const ChoicePicker& pick) {
    prepare(shape, t);
    const Rational y2 = ctx.x - ctx.hw[2], y3 = ctx.x - ctx.hw[3];
    const int k = shape.xi2;
    ModuleVector out;
    for (const auto& pqr : pqr_triples(shape)) {
        const ChoiceSequences ch = picked(pick, pqr, k);
        // V_Ǐ with I = ǐ is V_i; Ṽ_J with J = ǰ.
        const Subset& i_check = ch.i;
        const Subset J = reversed_subset(ch.j, k);
        Rational c = sym_bar(
            [&](std::span<const Rational> z) {
                std::vector<Rational> zr(z.rbegin(), z.rend());
                return v_fn(i_check, t.group(3), z, y3) * v_tilde_fn(J, t.group(1), zr, y2);
            },
            t.group(2));
        c /= factorial(pqr.p - pqr.r) * factorial(pqr.q - pqr.r) * factorial(pqr.r) *
             factorial(k - pqr.p - pqr.q + pqr.r);
        out.add(pqr_monomial(shape, pqr), c);
    }
    out *= prefactor(t, ctx.x);
    return out;
}

ModuleVector weight_function_main2(const XiShape& shape, const Variables& t, const EvalModuleContext& ctx,
                                   const ChoicePicker& pick) {
    prepare(shape, t);
    ModuleVector out;
    for (const auto& pqr : pqr_triples(shape)) {
        const ChoiceSequences ch = picked(pick, pqr, shape.xi2);
        Rational c = sym3_g(ch, shape, t, ctx.x, ctx.hw[2], ctx.hw[3]);
        c /= factorial(shape.xi2 - pqr.p - pqr.q + pqr.r) * factorial(pqr.q - pqr.r) * factorial(pqr.p - pqr.r) *
             factorial(pqr.r) * factorial(shape.xi1 - pqr.q) * factorial(shape.xi3 - pqr.p);
        out.add(pqr_monomial(shape, pqr), c);
    }
    out *= prefactor(t, ctx.x);
    return out;
}

bool check_choice_independence(const XiShape& shape, const Variables& t, const EvalModuleContext& ctx,
                               const ChoiceSequences& a, const ChoiceSequences& b) {
    return sym3_g(a, shape, t, ctx.x, ctx.hw[2], ctx.hw[3]) == sym3_g(b, shape, t, ctx.x, ctx.hw[2], ctx.hw[3]);
}

SubsetPairReport subset_pair_report(int p, int q, int r, int k, std::span<const Rational> t1, std::span<const Rational> t3,
                             std::span<const Rational> z, const Rational& y2, const Rational& y3,
                             std::optional<SubsetPair> pair0) {
    if (static_cast<int>(z.size()) != k) throw std::invalid_argument("z must have k entries");
    const auto pairs = subset_pairs(p, q, r, k);
    if (pairs.empty()) throw std::invalid_argument("no subset pairs for the given (p,q,r,k)");
    const SubsetPair base = pair0.value_or(pairs.front());
    if (static_cast<int>(base.I.size()) != p || static_cast<int>(base.J.size()) != q ||
        intersection_size(base.I, base.J) != r)
        throw std::invalid_argument("reference pair is not in the subset-pair family");

    SubsetPairReport rep;
    for (const auto& pr : pairs) rep.lhs += v_tilde_fn(pr.J, t1, z, y2) * v_fn(pr.I, t3, z, y3);

    const Subset I_check = reversed_subset(base.I, k);
    rep.symmetrized = sym_bar(
        [&](std::span<const Rational> zz) {
            std::vector<Rational> zr(zz.rbegin(), zz.rend());
            return v_fn(I_check, t3, zz, y3) * v_tilde_fn(base.J, t1, zr, y2);
        },
        z);

    const Rational common = factorial(p - r) * factorial(q - r) * factorial(r);
    rep.orbit_holds = rep.lhs * common * factorial(k - p - q + r) == rep.symmetrized;
    if (k - p - q - r >= 0) rep.alt_holds = rep.lhs * common * factorial(k - p - q - r) == rep.symmetrized;

    rep.finding = std::string("orbit constant (k-p-q+r)! ") + (rep.orbit_holds ? "holds" : "fails") +
                  "; alternative constant (k-p-q-r)! " +
                  (!rep.alt_holds ? "undefined (negative argument)"
                                      : (*rep.alt_holds ? "holds" : "fails"));
    return rep;
}

bool check_subset_pair_identity(int p, int q, int r, int k, std::span<const Rational> t1, std::span<const Rational> t3,
                   std::span<const Rational> z, const Rational& y2, const Rational& y3,
                   std::optional<SubsetPair> pair0) {
    return subset_pair_report(p, q, r, k, t1, t3, z, y2, y3, std::move(pair0)).orbit_holds;
}

bool check_v_transforms(const Subset& I, std::span<const Rational> t, std::span<const Rational> z, const Rational& y,
                        int a) {
    const int k = static_cast<int>(z.size());
    if (a < 1 || a >= k) throw std::invalid_argument("transposition index outside 1..k-1");
    const auto sa = Permutation::simple(k, a);
    const auto zs = permute(z, sa);
    const Subset Is = apply(sa, I);
    const Rational d = at(z, a) - at(z, a + 1);

    const Rational v_lhs = v_fn(I, t, zs, y);
    const Rational v_rhs = ratio(-d, -d - 1, "z_{a+1} - z_a - 1") * v_fn(Is, t, z, y) -
                           (-d - 1).inverse("z_{a+1} - z_a - 1") * v_fn(I, t, z, y);
    const Rational vt_lhs = v_tilde_fn(I, t, zs, y);
    const Rational vt_rhs = ratio(d, d - 1, "z_a - z_{a+1} - 1") * v_tilde_fn(Is, t, z, y) -
                            (d - 1).inverse("z_a - z_{a+1} - 1") * v_tilde_fn(I, t, z, y);
    return v_lhs == v_rhs && vt_lhs == vt_rhs;
}

}  // namespace bethe
