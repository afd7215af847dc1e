#include "bethe/suite.hpp"

#include <algorithm>
#include <stdexcept>

#include "bethe/comb.hpp"
#include "bethe/params.hpp"
#include "bethe/perm_x.hpp"
#include "bethe/symmetrize.hpp"
#include "bethe/tensor.hpp"

namespace bethe {

EngineSet EngineSet::standard() {
    EngineSet e;
    e.direct = [](const XiShape& s, const Variables& t, const EvalModuleContext& ctx) {
        EvalModule mod(ctx);
        return weight_function_direct(s, t, mod);
    };
    e.presym = [](const XiShape& s, const Variables& t, const EvalModuleContext& ctx) {
        return weight_function_presym(s, t, ctx);
    };
    e.main = [](const XiShape& s, const Variables& t, const EvalModuleContext& ctx) {
        return weight_function_main(s, t, ctx);
    };
    e.main2 = [](const XiShape& s, const Variables& t, const EvalModuleContext& ctx) {
        return weight_function_main2(s, t, ctx);
    };
    return e;
}

const std::vector<std::string>& EngineSet::names() {
    static const std::vector<std::string> n{"direct", "presym", "main", "main2"};
    return n;
}

const EngineSet::Engine& EngineSet::get(const std::string& name) const {
    if (name == "direct") return direct;
    if (name == "presym") return presym;
    if (name == "main") return main;
    if (name == "main2") return main2;
    throw std::invalid_argument("unknown engine: " + name);
}

namespace {

Sampler sampler_for(const SuiteConfig& cfg, int id) { return Sampler(cfg.seed * 1000003ULL + static_cast<std::uint64_t>(id)); }

template <class Body>
CriterionResult run(int id, std::string name, Body&& body) {
    CriterionResult res{id, std::move(name), 0, false, {}};
    try {
        body(res);
    } catch (const PoleError& e) {
        res.passed = false;
        res.detail += (res.detail.empty() ? "" : "; ") + std::string("pole: ") + e.what();
    } catch (const std::exception& e) {
        res.passed = false;
        res.detail += (res.detail.empty() ? "" : "; ") + std::string("error: ") + e.what();
    }
    return res;
}

void note_failure(CriterionResult& res, const std::string& what) {
    if (!res.detail.empty()) res.detail += "; ";
    res.detail += what;
}

std::vector<PbwMonomial> monomials_up_to(int degree) {
    std::vector<PbwMonomial> out;
    PbwMonomial m;
    auto rec = [&](auto&& self, std::size_t slot, int left) -> void {
        if (slot == m.m.size()) {
            out.push_back(m);
            return;
        }
        for (int e = 0; e <= left; ++e) {
            m.m[slot] = e;
            self(self, slot + 1, left - e);
        }
        m.m[slot] = 0;
    };
    rec(rec, 0, degree);
    return out;
}

ModuleVector random_vector(Sampler& s, int degree, int terms) {
    const auto monos = monomials_up_to(degree);
    ModuleVector v;
    for (int i = 0; i < terms; ++i) {
        const auto pick = std::uniform_int_distribution<std::size_t>(0, monos.size() - 1)(s.engine());
        v.add(monos[pick], s.nonzero());
    }
    if (v.is_zero()) v = ModuleVector::vacuum(s.nonzero());
    return v;
}

std::vector<XiShape> shapes_up_to(int total) {
    std::vector<XiShape> out;
    for (int n = 0; n <= total; ++n)
        for (int a = 0; a <= n; ++a)
            for (int b = 0; a + b <= n; ++b) out.push_back({a, b, n - a - b});
    return out;
}

}  // namespace

CriterionResult verify_yang_baxter(const SuiteConfig& cfg) {
    return run(1, "Yang-Baxter equation, n=4 and n=2", [&](CriterionResult& res) {
        Sampler s = sampler_for(cfg, 1);
        bool ok = true;
        for (int i = 0; i < 10; ++i) {
            const auto uv = s.generic(2, {Rational(0)});
            for (int n : {4, 2}) {
                ++res.samples;
                if (!check_yang_baxter(uv[0], uv[1], n)) {
                    ok = false;
                    note_failure(res, "n=" + std::to_string(n) + " u=" + uv[0].str() + " v=" + uv[1].str());
                }
            }
        }
        res.passed = ok;
    });
}

CriterionResult verify_rtt(const SuiteConfig& cfg) {
    return run(2, "RTT relations on V(x), all 256 index quadruples", [&](CriterionResult& res) {
        Sampler s = sampler_for(cfg, 2);
        bool ok = true;
        for (int sample = 0; sample < 3; ++sample) {
            EvalModule mod({s.highest_weight(), s.small()});
            const auto uv = s.generic(2, {mod.x()});
            const ModuleVector vec = random_vector(s, 2, 4);
            for (int a = 1; a <= 4; ++a)
                for (int b = 1; b <= 4; ++b)
                    for (int c = 1; c <= 4; ++c)
                        for (int d = 1; d <= 4; ++d) {
                            ++res.samples;
                            if (!check_rtt(a, b, c, d, uv[0], uv[1], vec, mod)) {
                                ok = false;
                                note_failure(res, "sample " + std::to_string(sample) + " (a,b,c,d)=(" +
                                                      std::to_string(a) + std::to_string(b) + std::to_string(c) +
                                                      std::to_string(d) + ")");
                            }
                        }
        }
        res.passed = ok;
    });
}

CriterionResult verify_example(const SuiteConfig& cfg, const EngineSet& engines) {
    return run(3, "xi=(1,1,1) closed-form expansion equals the direct engine", [&](CriterionResult& res) {
        Sampler s = sampler_for(cfg, 3);
        bool ok = true;
        for (int i = 0; i < 3; ++i) {
            const auto pt = s.point({1, 1, 1});
            EvalModule mod(pt.context());
            ++res.samples;
            if (!(example_expansion(pt.t, mod) == engines.direct(pt.shape, pt.t, pt.context()))) {
                ok = false;
                note_failure(res, "point " + std::to_string(i));
            }
        }
        res.passed = ok;
    });
}

CriterionResult verify_engines(const SuiteConfig& cfg, const EngineSet& engines) {
    return run(4, "direct = presym = main = main2 on all 35 shapes with total <= 4", [&](CriterionResult& res) {
        Sampler s = sampler_for(cfg, 4);
        bool ok = true;
        for (const auto& shape : shapes_up_to(4)) {
            for (int i = 0; i < cfg.points; ++i) {
                const auto pt = s.point(shape);
                const auto ctx = pt.context();
                const ModuleVector ref = engines.direct(shape, pt.t, ctx);
                ++res.samples;
                for (const char* name : {"presym", "main", "main2"}) {
                    if (!(engines.get(name)(shape, pt.t, ctx) == ref)) {
                        ok = false;
                        note_failure(res, std::string(name) + " differs at shape (" + shape.str() + ") point " +
                                              std::to_string(i));
                    }
                }
            }
        }
        res.passed = ok;
    });
}

CriterionResult verify_splitting(const SuiteConfig& cfg, const EngineSet& engines) {
    return run(5, "splitting property for (1,1,1), (2,1,1), (1,2,1)", [&](CriterionResult& res) {
        Sampler s = sampler_for(cfg, 5);
        bool ok = true;
        for (const XiShape shape : {XiShape{1, 1, 1}, XiShape{2, 1, 1}, XiShape{1, 2, 1}}) {
            for (int i = 0; i < 2; ++i) {
                const auto pt = s.point(shape);
                EvalModule mod(pt.context());
                ++res.samples;
                if (!(splitting_rhs(shape, pt.t, mod) == engines.direct(shape, pt.t, pt.context()))) {
                    ok = false;
                    note_failure(res, "shape (" + shape.str() + ") point " + std::to_string(i));
                }
            }
        }
        res.passed = ok;
    });
}

CriterionResult verify_choice_independence(const SuiteConfig& cfg) {
    return run(6, "Sym-bar^3 G independent of the choice sequences", [&](CriterionResult& res) {
        Sampler s = sampler_for(cfg, 6);
        bool ok = true;
        for (const XiShape shape : {XiShape{1, 2, 1}, XiShape{2, 2, 2}}) {
            for (int i = 0; i < 2; ++i) {
                const auto pt = s.point(shape);
                const auto ctx = pt.context();
                for (const auto& pqr : pqr_triples(shape)) {
                    const auto choices = all_choices(pqr, shape.xi2);
                    const Rational ref = sym3_g(choices.front(), shape, pt.t, ctx.x, ctx.hw[2], ctx.hw[3]);
                    for (std::size_t c = 1; c < choices.size(); ++c) {
                        ++res.samples;
                        if (sym3_g(choices[c], shape, pt.t, ctx.x, ctx.hw[2], ctx.hw[3]) != ref) {
                            ok = false;
                            note_failure(res, "shape (" + shape.str() + ") " + choices[c].str());
                        }
                    }
                    ++res.samples;
                    if (!check_choice_independence(shape, pt.t, ctx, choice_a(pqr), choice_b(pqr))) {
                        ok = false;
                        note_failure(res, "choice (a) vs (b) at shape (" + shape.str() + ")");
                    }
                }
            }
        }
        res.passed = ok;
    });
}

CriterionResult verify_gl2_identities(const SuiteConfig& cfg) {
    return run(7, "coproduct expansion, exchange formulas, w1/w2 subset sums", [&](CriterionResult& res) {
        Sampler s = sampler_for(cfg, 7);
        bool ok = true;
        auto expect = [&](bool cond, const std::string& what) {
            ++res.samples;
            if (!cond) {
                ok = false;
                note_failure(res, what);
            }
        };
        auto c2_state = [&](const Gl2Module& m) {
            Gl2State st = m.basis({1}, ModuleVector::vacuum(s.nonzero()));
            st += m.basis({2}, ModuleVector::vacuum(s.nonzero()));
            return st;
        };
        auto gl2_verma_state = [&]() {
            ModuleVector v = ModuleVector::vacuum(s.nonzero());
            v.add(PbwMonomial::of(0, 0, 0, 0, 1, 0), s.nonzero());
            v.add(PbwMonomial::of(0, 0, 0, 0, 2, 0), s.nonzero());
            return v;
        };

        for (int xi = 0; xi <= 3; ++xi) {
            EvalModule mod({s.highest_weight(), s.small()});
            const auto vals = s.generic(static_cast<std::size_t>(xi) + 3, {mod.x()});
            const std::vector<Rational> ts(vals.begin(), vals.begin() + xi);
            const Gl2Module l1({Gl2Site::l(vals[static_cast<std::size_t>(xi)])});
            const Gl2Module l2({Gl2Site::l(vals[static_cast<std::size_t>(xi) + 1])});
            expect(check_coproduct_expansion(ts, l1, c2_state(l1), l2, c2_state(l2)),
                   "coproduct in L(z1)xL(z2), xi=" + std::to_string(xi));
            const Gl2Module lz({Gl2Site::l(vals[static_cast<std::size_t>(xi) + 2])});
            const Gl2Module ver({Gl2Site::verma(0)}, &mod);
            expect(check_coproduct_expansion(ts, lz, c2_state(lz), ver, ver.basis({}, gl2_verma_state())),
                   "coproduct in L(z)xV, xi=" + std::to_string(xi));
        }

        for (int k = 1; k <= 3; ++k) {
            EvalModule mod({s.highest_weight(), s.small()});
            const auto vals = s.generic(static_cast<std::size_t>(k) + 3, {mod.x()});
            const std::vector<Rational> ts(vals.begin(), vals.begin() + k);
            const Rational& u = vals[static_cast<std::size_t>(k)];
            const Gl2Module ver({Gl2Site::verma(0)}, &mod);
            expect(check_exchange_formulas(u, ts, ver, ver.basis({})),
                   "exchange on V(x) highest vector, k=" + std::to_string(k));
            const Gl2Module ll({Gl2Site::l(vals[static_cast<std::size_t>(k) + 1]),
                                Gl2Site::l(vals[static_cast<std::size_t>(k) + 2])});
            Gl2State st;
            for (std::uint8_t a = 1; a <= 2; ++a)
                for (std::uint8_t b = 1; b <= 2; ++b) st += ll.basis({a, b}, ModuleVector::vacuum(s.nonzero()));
            expect(check_exchange_formulas(u, ts, ll, st), "exchange on L(z1)xL(z2), k=" + std::to_string(k));
        }

        for (int xi = 0; xi <= 2; ++xi)
            for (int k = 0; k <= 2; ++k)
                for (int offset : {0, 2}) {
                    EvalModule mod({s.highest_weight(), s.small()});
                    const auto vals = s.generic(static_cast<std::size_t>(xi + k), {mod.x()});
                    const std::vector<Rational> ts(vals.begin(), vals.begin() + xi);
                    const std::vector<Rational> zs(vals.begin() + xi, vals.end());
                    const std::string tag =
                        " xi=" + std::to_string(xi) + " k=" + std::to_string(k) + " offset=" + std::to_string(offset);
                    expect(check_w1(ts, zs, mod, offset), "w1 subset sum" + tag);
                    expect(check_w2(ts, zs, mod, offset), "w2 subset sum" + tag);
                }
        res.passed = ok;
    });
}

CriterionResult verify_x_calculus(const SuiteConfig& cfg) {
    return run(8, "X-coefficient support, delta identity, recurrences, reduced words, products", [&](CriterionResult& res) {
        Sampler s = sampler_for(cfg, 8);
        bool ok = true;
        auto expect = [&](bool cond, const std::string& what) {
            ++res.samples;
            if (!cond) {
                ok = false;
                note_failure(res, what);
            }
        };
        for (int k = 1; k <= 4; ++k) {
            const auto z = s.generic(static_cast<std::size_t>(k));
            for (const auto& sigma : permutations(k))
                expect(check_x_support(sigma, z), "support sigma=" + sigma.str());
        }
        for (int k = 1; k <= 3; ++k) {
            const auto z = s.generic(static_cast<std::size_t>(k));
            for (const auto& rho : permutations(k))
                for (const auto& tau : permutations(k))
                    expect(check_delta_identity(rho, tau, z), "delta rho=" + rho.str() + " tau=" + tau.str());
        }
        {
            const auto z = s.generic(3);
            for (const auto& mu : permutations(3))
                for (const auto& sigma : permutations(3))
                    for (int a = 1; a <= 2; ++a)
                        expect(check_x_recurrences(mu, sigma, a, z),
                               "recurrence mu=" + mu.str() + " sigma=" + sigma.str() + " a=" + std::to_string(a));
        }
        {
            const auto z = s.generic(4);
            for (const auto& sigma : permutations(4))
                expect(check_reduced_word_independence(sigma, z), "reduced words sigma=" + sigma.str());
        }
        {
            const auto z = s.generic(3);
            for (const auto& sigma : permutations(3))
                for (const auto& tau : permutations(3))
                    for (const auto& rho : permutations(3))
                        expect(check_x_product(sigma, tau, rho, z),
                               "product sigma=" + sigma.str() + " tau=" + tau.str() + " rho=" + rho.str());
        }
        res.passed = ok;
    });
}

CriterionResult verify_factorial_identity(const SuiteConfig& cfg) {
    return run(9, "Sym-bar(1) = n! for n <= 6", [&](CriterionResult& res) {
        Sampler s = sampler_for(cfg, 9);
        bool ok = true;
        for (int n = 0; n <= 6; ++n)
            for (int i = 0; i < 3; ++i) {
                const auto xs = s.generic(static_cast<std::size_t>(n));
                ++res.samples;
                if (!check_factorial_identity(xs)) {
                    ok = false;
                    note_failure(res, "n=" + std::to_string(n));
                }
            }
        res.passed = ok;
    });
}

CriterionResult verify_subset_pair_identity(const SuiteConfig& cfg) {
    return run(10, "symmetrized subset-pair identity", [&](CriterionResult& res) {
        Sampler s = sampler_for(cfg, 10);
        bool ok = true;
        const std::array<std::array<int, 4>, 4> cases{{{1, 1, 0, 2}, {1, 1, 1, 2}, {2, 1, 1, 3}, {1, 2, 0, 3}}};
        for (const auto& [p, q, r, k] : cases) {
            std::string finding;
            for (int extra = 0; extra <= 1; ++extra) {
                EvalModuleContext ctx{s.highest_weight(), Rational(0)};
                const auto vals = s.generic(static_cast<std::size_t>(q + p + k + 2 * extra + 1));
                ctx.x = vals.back();
                auto it = vals.begin();
                const std::vector<Rational> t1(it, it + q + extra);
                it += q + extra;
                const std::vector<Rational> t3(it, it + p + extra);
                it += p + extra;
                const std::vector<Rational> z(it, it + k);
                const Rational y2 = ctx.x - ctx.hw[2], y3 = ctx.x - ctx.hw[3];
                for (const auto& pair0 : subset_pairs(p, q, r, k)) {
                    const auto rep = subset_pair_report(p, q, r, k, t1, t3, z, y2, y3, pair0);
                    ++res.samples;
                    if (!rep.orbit_holds) {
                        ok = false;
                        note_failure(res, "orbit constant fails at (p,q,r,k)=(" + std::to_string(p) + "," +
                                              std::to_string(q) + "," + std::to_string(r) + "," +
                                              std::to_string(k) + ")");
                    }
                    finding = rep.finding;
                }
            }
            note_failure(res, "(" + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(r) + "," +
                                  std::to_string(k) + "): " + finding);
        }
        res.passed = ok;
    });
}

std::vector<CriterionResult> run_suite(const SuiteConfig& cfg, const EngineSet& engines, const std::vector<int>& only) {
    auto wanted = [&](int id) { return only.empty() || std::find(only.begin(), only.end(), id) != only.end(); };
    std::vector<CriterionResult> out;
    if (wanted(1)) out.push_back(verify_yang_baxter(cfg));
    if (wanted(2)) out.push_back(verify_rtt(cfg));
    if (wanted(3)) out.push_back(verify_example(cfg, engines));
    if (wanted(4)) out.push_back(verify_engines(cfg, engines));
    if (wanted(5)) out.push_back(verify_splitting(cfg, engines));
    if (wanted(6)) out.push_back(verify_choice_independence(cfg));
    if (wanted(7)) out.push_back(verify_gl2_identities(cfg));
    if (wanted(8)) out.push_back(verify_x_calculus(cfg));
    if (wanted(9)) out.push_back(verify_factorial_identity(cfg));
    if (wanted(10)) out.push_back(verify_subset_pair_identity(cfg));
    return out;
}

}  // namespace bethe
