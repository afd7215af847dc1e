#include "bethe/json_io.hpp"

#include <sstream>
#include <stdexcept>

namespace bethe::cli {

namespace {

Rational rational_from(const json& j, const std::string& where) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    throw std::invalid_argument(where + ": expected a rational as \"p/q\" or an integer");
}

std::vector<Rational> group_from(const json& doc, const char* key) {
    std::vector<Rational> out;
    if (!doc.contains(key)) return out;
    const auto& arr = doc.at(key);
    if (!arr.is_array()) throw std::invalid_argument(std::string(key) + ": expected an array");
    for (std::size_t i = 0; i < arr.size(); ++i)
        out.push_back(rational_from(arr[i], std::string(key) + "[" + std::to_string(i) + "]"));
    return out;
}

}  // namespace

XiShape parse_shape(const std::string& text) {
    std::stringstream ss(text);
    std::string part;
    std::vector<int> xs;
    while (std::getline(ss, part, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(part, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != part.size()) throw std::invalid_argument("shape entry '" + part + "' is not an integer");
        xs.push_back(v);
    }
    if (xs.size() != 3) throw std::invalid_argument("shape must be three comma-separated integers");
    XiShape s{xs[0], xs[1], xs[2]};
    s.validate();
    return s;
}

ParamPoint params_from_json(const json& doc, const XiShape& shape) {
    if (!doc.is_object()) throw std::invalid_argument("parameter file must hold a JSON object");
    ParamPoint p;
    p.shape = shape;
    p.t.group(1) = group_from(doc, "t1");
    p.t.group(2) = group_from(doc, "t2");
    p.t.group(3) = group_from(doc, "t3");
    p.t.check_shape(shape);
    if (!doc.contains("x")) throw std::invalid_argument("parameter file lacks \"x\"");
    p.x = rational_from(doc.at("x"), "x");
    const auto lam = group_from(doc, "lambda");
    if (lam.size() != 4) throw std::invalid_argument("\"lambda\" must list four rationals");
    for (std::size_t i = 0; i < 4; ++i) p.hw.lam[i] = lam[i];
    return p;
}

json to_json(const Rational& r) { return r.str(); }

json to_json(const ModuleVector& v) {
    json out = json::object();
    for (const auto& [m, c] : v.terms()) out[m.key()] = c.str();
    return out;
}

json to_json(const ParamPoint& p) {
    auto arr = [](const std::vector<Rational>& xs) {
        json a = json::array();
        for (const auto& x : xs) a.push_back(x.str());
        return a;
    };
    return json{{"t1", arr(p.t.group(1))},
                {"t2", arr(p.t.group(2))},
                {"t3", arr(p.t.group(3))},
                {"x", p.x.str()},
                {"lambda", arr({p.hw.lam.begin(), p.hw.lam.end()})}};
}

json to_json(const CriterionResult& r) {
    return json{{"id", r.id}, {"name", r.name}, {"samples", r.samples}, {"passed", r.passed}, {"detail", r.detail}};
}

}  // namespace bethe::cli
