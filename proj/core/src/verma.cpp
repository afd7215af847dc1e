#include "bethe/verma.hpp"

#include <sstream>
#include <stdexcept>

namespace bethe {

int pbw_rank(Generator g) {
    for (std::size_t i = 0; i < kPbwOrder.size(); ++i)
        if (kPbwOrder[i] == g) return static_cast<int>(i);
    return -1;
}

int PbwMonomial::degree() const {
    int d = 0;
    for (int e : m) d += e;
    return d;
}

std::string PbwMonomial::key() const {
    std::string out = "[";
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(m[i]);
    }
    return out + "]";
}

PbwMonomial PbwMonomial::parse(const std::string& key) {
    PbwMonomial p;
    std::string body = key;
    if (body.size() < 2 || body.front() != '[' || body.back() != ']')
        throw std::invalid_argument("monomial key must look like [m32,m31,m42,m41,m21,m43]: " + key);
    body = body.substr(1, body.size() - 2);
    std::istringstream in(body);
    std::string item;
    std::size_t i = 0;
    while (std::getline(in, item, ',')) {
        if (i >= 6) throw std::invalid_argument("monomial key has more than six entries: " + key);
        std::size_t used = 0;
        const int e = std::stoi(item, &used);
        if (used != item.size() || e < 0) throw std::invalid_argument("bad exponent in monomial key: " + key);
        p.m[i++] = e;
    }
    if (i != 6) throw std::invalid_argument("monomial key needs six entries: " + key);
    return p;
}

std::size_t PbwMonomialHash::operator()(const PbwMonomial& p) const noexcept {
    std::size_t h = 0;
    for (int e : p.m) h = h * 31 + static_cast<std::size_t>(e);
    return h;
}

void ModuleVector::add(const PbwMonomial& mono, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(mono, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Rational ModuleVector::at(const PbwMonomial& mono) const {
    auto it = terms_.find(mono);
    return it == terms_.end() ? Rational(0) : it->second;
}

ModuleVector& ModuleVector::operator+=(const ModuleVector& o) {
    for (const auto& [mono, c] : o.terms_) add(mono, c);
    return *this;
}

ModuleVector& ModuleVector::operator-=(const ModuleVector& o) {
    for (const auto& [mono, c] : o.terms_) add(mono, -c);
    return *this;
}

ModuleVector& ModuleVector::operator*=(const Rational& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [mono, c] : terms_) c *= s;
    return *this;
}

std::string ModuleVector::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [mono, c] : terms_) {
        if (!out.empty()) out += " + ";
        out += "(" + c.str() + ")" + mono.key();
    }
    return out;
}

std::array<Rational, 4> weight_of(const PbwMonomial& mono, const HighestWeight& hw) {
    std::array<Rational, 4> w = hw.lam;
    for (std::size_t i = 0; i < kPbwOrder.size(); ++i) {
        const auto [a, b] = kPbwOrder[i];
        w[static_cast<std::size_t>(a - 1)] += mono.m[i];
        w[static_cast<std::size_t>(b - 1)] -= mono.m[i];
    }
    return w;
}

std::vector<std::pair<int, Generator>> bracket(Generator x, Generator y) {
    std::vector<std::pair<int, Generator>> out;
    if (x.b == y.a) out.push_back({1, {x.a, y.b}});
    if (x.a == y.b) out.push_back({-1, {y.a, x.b}});
    // e_aa − e_bb style brackets can cancel when both deltas hit the same generator.
    if (out.size() == 2 && out[0].second == out[1].second) out.clear();
    return out;
}

namespace {

int generator_id(Generator g) { return (g.a - 1) * 4 + (g.b - 1); }

void check_generator(Generator g) {
    if (g.a < 1 || g.a > 4 || g.b < 1 || g.b > 4) throw std::out_of_range("generator index outside 1..4");
}

}  // namespace

std::size_t VermaModule::KeyHash::operator()(const Key& k) const noexcept {
    return PbwMonomialHash{}(k.mono) * 17 + static_cast<std::size_t>(k.g);
}

// g · (L W v), where L is the leftmost letter of `mono` and W the rest:
//   raising/lowering g with nothing left to pass: e_ab v = 0 (a<b), g v (a>b);
//   g lowering and not after L in basis order: prepend;
//   otherwise g L W v = L (g W v) + [g, L] W v.
const ModuleVector& VermaModule::act_mono(Generator g, const PbwMonomial& mono) {
    const Key key{generator_id(g), mono};
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;

    ModuleVector out;
    if (g.a == g.b) {
        out.add(mono, weight_of(mono, hw_)[static_cast<std::size_t>(g.a - 1)]);
    } else {
        std::size_t lead = 0;
        while (lead < mono.m.size() && mono.m[lead] == 0) ++lead;
        const int g_rank = pbw_rank(g);
        if (lead == mono.m.size()) {
            if (g_rank >= 0) {
                PbwMonomial p;
                p.m[static_cast<std::size_t>(g_rank)] = 1;
                out.add(p, Rational(1));
            }
        } else if (g_rank >= 0 && static_cast<std::size_t>(g_rank) <= lead) {
            PbwMonomial p = mono;
            ++p.m[static_cast<std::size_t>(g_rank)];
            out.add(p, Rational(1));
        } else {
            const Generator L = kPbwOrder[lead];
            PbwMonomial rest = mono;
            --rest.m[lead];
            const ModuleVector gw = act_mono(g, rest);
            out += act(L, gw);
            for (const auto& [c, h] : bracket(g, L)) {
                ModuleVector term = act_mono(h, rest);
                term *= Rational(c);
                out += term;
            }
        }
    }
    return cache_.emplace(key, std::move(out)).first->second;
}

ModuleVector VermaModule::act(Generator g, const ModuleVector& vec) {
    check_generator(g);
    ModuleVector out;
    for (const auto& [mono, c] : vec.terms()) {
        ModuleVector term = act_mono(g, mono);
        term *= c;
        out += term;
    }
    return out;
}

ModuleVector VermaModule::normal_order(const std::vector<Generator>& letters) {
    ModuleVector state = ModuleVector::vacuum();
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) state = act(*it, state);
    return state;
}

ModuleVector act_generator(int a, int b, const ModuleVector& vec, const HighestWeight& hw) {
    VermaModule m(hw);
    return m.act(a, b, vec);
}

ModuleVector normal_order(const std::vector<Generator>& word, const HighestWeight& hw) {
    VermaModule m(hw);
    return m.normal_order(word);
}

}  // namespace bethe
