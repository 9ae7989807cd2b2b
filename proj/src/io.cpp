#include "symfun/io.hpp"

#include <set>
#include <sstream>

namespace sf {

nlohmann::ordered_json to_json(const TruncSeries& s) {
    nlohmann::ordered_json j;
    if (s.finite_cap()) j["cap"] = s.cap();
    else j["cap"] = nullptr;
    auto terms = nlohmann::ordered_json::array();
    for (auto& t : s.terms()) {
        nlohmann::ordered_json term;
        term["coeff"] = t.coeff.str();
        auto mono = nlohmann::ordered_json::object();
        for (auto& [v, e] : t.mono.entries()) mono[v.name()] = e;
        term["mono"] = std::move(mono);
        terms.push_back(std::move(term));
    }
    j["terms"] = std::move(terms);
    return j;
}

TruncSeries series_from_json(const nlohmann::json& j) {
    int cap = kNoCap;
    if (j.contains("cap") && !j.at("cap").is_null()) cap = j.at("cap").get<int>();
    std::vector<Term> terms;
    for (auto& t : j.at("terms")) {
        Monomial m;
        for (auto& [name, e] : t.at("mono").items()) m.set(VarId::parse(name), e.get<int>());
        const auto& c = t.at("coeff");
        Rational q = c.is_string() ? Rational::parse(c.get<std::string>()) : Rational(c.get<std::int64_t>());
        terms.push_back(Term{m, q});
    }
    return TruncSeries(std::move(terms), cap);
}

std::string to_csv(const TruncSeries& s) {
    std::set<VarId> vars;
    for (auto& t : s.terms())
        for (auto& [v, e] : t.mono.entries()) vars.insert(v);
    std::ostringstream os;
    os << "coeff";
    for (auto& v : vars) os << "," << v.name();
    os << "\n";
    for (auto& t : s.terms()) {
        os << t.coeff.str();
        for (auto& v : vars) os << "," << t.mono.exponent(v);
        os << "\n";
    }
    return os.str();
}

std::string to_pretty(const TruncSeries& s) {
    std::ostringstream os;
    os << "cap: " << (s.finite_cap() ? std::to_string(s.cap()) : std::string("none")) << "\n";
    if (s.is_zero()) {
        os << "0\n";
        return os.str();
    }
    for (int w = s.min_weight(); w <= s.max_weight(); ++w) {
        TruncSeries c = s.component(w);
        if (c.is_zero()) continue;
        os << "[" << w << "] " << c.str() << "\n";
    }
    return os.str();
}

}  // namespace sf
