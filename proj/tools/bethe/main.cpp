// bethe: compute nested Bethe vectors of Y(gl4) evaluation modules and run
// the verification suite.
//
// Exit codes: 0 success, 1 an identity failed, 2 invalid input or a pole.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bethe/json_io.hpp"

namespace {

using bethe::cli::json;

constexpr int kExitOk = 0;
constexpr int kExitIdentity = 1;
constexpr int kExitInput = 2;

struct Common {
    std::string shape;
    std::uint64_t seed = bethe::SuiteConfig{}.seed;
    std::string params_file;
    std::string out_file;
};

void emit(const json& doc, const std::string& out_file) {
    const std::string text = doc.dump(2) + "\n";
    if (out_file.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_file);
    if (!f) throw std::invalid_argument("cannot open output file " + out_file);
    f << text;
}

bethe::ParamPoint load_point(const Common& c, const bethe::XiShape& shape) {
    if (c.params_file.empty()) return bethe::Sampler(c.seed).point(shape);
    std::ifstream f(c.params_file);
    if (!f) throw std::invalid_argument("cannot read parameter file " + c.params_file);
    json doc;
    try {
        doc = json::parse(f);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("parameter file is not valid JSON: " + std::string(e.what()));
    }
    return bethe::cli::params_from_json(doc, shape);
}

json header(const Common& c, const bethe::ParamPoint& p) {
    json h{{"shape", {p.shape.xi1, p.shape.xi2, p.shape.xi3}}, {"parameters", bethe::cli::to_json(p)}};
    if (c.params_file.empty()) h["seed"] = c.seed;
    return h;
}

bethe::EngineSet engines_with_fault(const std::string& faulty) {
    auto set = bethe::EngineSet::standard();
    if (faulty.empty()) return set;
    auto& slot = faulty == "direct" ? set.direct : faulty == "presym" ? set.presym : faulty == "main" ? set.main : set.main2;
    slot = [inner = slot](const bethe::XiShape& s, const bethe::Variables& t, const bethe::EvalModuleContext& ctx) {
        auto v = inner(s, t, ctx);
        v *= bethe::Rational(2);
        return v;
    };
    return set;
}

int cmd_compute(const Common& c, const std::string& engine) {
    const auto shape = bethe::cli::parse_shape(c.shape);
    const auto point = load_point(c, shape);
    const auto engines = bethe::EngineSet::standard();
    std::vector<std::string> names;
    if (engine == "all")
        names = bethe::EngineSet::names();
    else
        names.push_back(engine);

    json doc = header(c, point);
    json results = json::array();
    std::optional<bethe::ModuleVector> first;
    bool agree = true;
    for (const auto& name : names) {
        const auto v = engines.get(name)(shape, point.t, point.context());
        if (!first)
            first = v;
        else if (!(v == *first))
            agree = false;
        results.push_back({{"engine", name}, {"coefficients", bethe::cli::to_json(v)}});
    }
    doc["results"] = results;
    if (names.size() > 1) doc["engines_agree"] = agree;
    emit(doc, c.out_file);
    if (!agree) std::cerr << "engines disagree\n";
    return agree ? kExitOk : kExitIdentity;
}

int cmd_table(const Common& c) {
    const auto shape = bethe::cli::parse_shape(c.shape.empty() ? "1,1,1" : c.shape);
    if (!(shape == bethe::XiShape{1, 1, 1})) throw std::invalid_argument("table is defined for shape 1,1,1 only");
    const auto point = load_point(c, shape);
    bethe::EvalModule mod(point.context());
    const auto& t = point.t;
    json terms = json::array();
    for (const auto& term : bethe::example_terms(t.group(1)[0], t.group(2)[0], t.group(3)[0]))
        terms.push_back({{"product", term.label}, {"coefficient", term.coefficient.str()}});
    const auto expansion = bethe::example_expansion(t, mod);
    const auto direct = bethe::weight_function_direct(shape, t, mod);

    json doc = header(c, point);
    doc["terms"] = terms;
    doc["expansion"] = bethe::cli::to_json(expansion);
    doc["direct"] = bethe::cli::to_json(direct);
    doc["equal"] = expansion == direct;
    emit(doc, c.out_file);
    return expansion == direct ? kExitOk : kExitIdentity;
}

int cmd_verify(const Common& c, int points, const std::vector<int>& only, const std::string& fault) {
    bethe::SuiteConfig cfg;
    cfg.seed = c.seed;
    cfg.points = points;
    if (points < 1) throw std::invalid_argument("--points must be positive");
    for (int id : only)
        if (id < 1 || id > 10) throw std::invalid_argument("criterion ids run from 1 to 10");
    const auto results = bethe::run_suite(cfg, engines_with_fault(fault), only);

    json list = json::array();
    bool all = true;
    for (const auto& r : results) {
        list.push_back(bethe::cli::to_json(r));
        all = all && r.passed;
        std::cerr << (r.passed ? "PASS" : "FAIL") << "  criterion " << r.id << ": " << r.name << '\n';
    }
    json doc{{"seed", cfg.seed}, {"points", cfg.points}, {"criteria", list}, {"passed", all}};
    emit(doc, c.out_file);
    return all ? kExitOk : kExitIdentity;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact nested Bethe vectors for Y(gl4) evaluation modules"};
    app.set_config("--config", "", "TOML or INI file with option defaults; command-line flags take precedence");
    app.require_subcommand(1);

    Common common;
    auto add_common = [&](CLI::App* sub, bool shape_required) {
        auto* opt = sub->add_option("--shape", common.shape, "xi1,xi2,xi3");
        if (shape_required) opt->required();
        sub->add_option("--seed", common.seed, "seed for random parameters");
        sub->add_option("--params", common.params_file, "JSON file with t1, t2, t3, x and lambda")->check(CLI::ExistingFile);
        sub->add_option("--out", common.out_file, "write JSON here instead of stdout");
    };

    std::string engine = "direct";
    auto* compute = app.add_subcommand("compute", "coefficients of the weight function in the PBW basis");
    add_common(compute, true);
    compute->add_option("--engine", engine, "direct, presym, main, main2 or all")
        ->check(CLI::IsMember({"direct", "presym", "main", "main2", "all"}));

    auto* table = app.add_subcommand("table", "the six-term expansion at shape 1,1,1 beside the direct engine");
    add_common(table, false);

    int points = bethe::SuiteConfig{}.points;
    std::vector<int> only;
    std::string fault;
    auto* verify = app.add_subcommand("verify", "run the acceptance suite and print a JSON report");
    verify->add_option("--seed", common.seed, "suite seed");
    verify->add_option("--points", points, "random points per shape");
    verify->add_option("--only", only, "criterion ids to run")->delimiter(',');
    verify->add_option("--out", common.out_file, "write JSON here instead of stdout");
    verify->add_option("--inject-fault", fault, "scale one engine's output by 2")
        ->check(CLI::IsMember({"direct", "presym", "main", "main2"}))
        ->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (*compute) return cmd_compute(common, engine);
        if (*table) return cmd_table(common);
        return cmd_verify(common, points, only, fault);
    } catch (const bethe::PoleError& e) {
        std::cerr << "pole: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::out_of_range& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    }
}
