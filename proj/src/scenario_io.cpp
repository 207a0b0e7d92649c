#include "aut120/scenario_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace aut120 {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_semicolons(const std::string& line) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : line) {
        if (ch == ';') {
            parts.push_back(trim(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    parts.push_back(trim(cur));
    return parts;
}

CycleType parse_type(const std::string& text) {
    // "p-(c;f)" with p prime (composite types are not scenario material)
    auto dash = text.find("-(");
    auto semi = text.find(';');
    auto close = text.find(')');
    if (dash == std::string::npos || semi == std::string::npos || close == std::string::npos)
        throw std::invalid_argument("bad cycle type: " + text);
    int p = std::stoi(text.substr(0, dash));
    int c = std::stoi(text.substr(dash + 2, semi - dash - 2));
    int f = std::stoi(text.substr(semi + 1, close - semi - 1));
    return CycleType::prime(p, c, f);
}

}  // namespace

ConstraintScenario scenario_from_text(const std::string& text) {
    std::istringstream in(text);
    std::string line, section;
    std::string type_str;
    int ambient_d = 24;
    int k2 = -1;
    bool symmetry = true, marginals = true;
    std::vector<Assumption> assumptions;
    std::vector<ZeroRule> extra_zeros;
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        if (line.front() == '[' && line.back() == ']') {
            section = line.substr(1, line.size() - 2);
            continue;
        }
        if (section == "model") {
            auto eq = line.find('=');
            if (eq == std::string::npos)
                throw std::invalid_argument("scenario [model] line needs key = value: " + line);
            std::string key = trim(line.substr(0, eq)), val = trim(line.substr(eq + 1));
            if (key == "type") type_str = val;
            else if (key == "ambient_d") ambient_d = std::stoi(val);
            else if (key == "k2") k2 = std::stoi(val);
            else if (key == "symmetry") symmetry = (val == "on" || val == "true" || val == "1");
            else if (key == "marginals") marginals = (val == "on" || val == "true" || val == "1");
            else throw std::invalid_argument("scenario [model] unknown key: " + key);
        } else if (section == "assume") {
            auto parts = split_semicolons(line);
            std::istringstream ls(parts[0]);
            Assumption a;
            if (!(ls >> a.kind >> a.value))
                throw std::invalid_argument("scenario [assume] line needs kind value: " + line);
            a.citation = parts.size() > 1 ? parts[1] : "";
            assumptions.push_back(std::move(a));
        } else if (section == "zero") {
            std::istringstream ls(line);
            ZeroRule zr;
            if (!(ls >> zr.x >> zr.y)) throw std::invalid_argument("scenario [zero] line: " + line);
            if (!(ls >> zr.reason)) zr.reason = "file";
            extra_zeros.push_back(std::move(zr));
        } else if (section == "fact") {
            continue;  // fact sections are read by facts_from_text
        } else {
            throw std::invalid_argument("scenario: line outside a known section: " + line);
        }
    }
    if (type_str.empty()) throw std::invalid_argument("scenario: [model] type missing");
    ConstraintScenario s = scenario(parse_type(type_str), ambient_d, assumptions);
    s.symmetry = symmetry;
    s.marginal_links = marginals;
    if (k2 >= 0) s.k2 = k2;
    for (const auto& zr : extra_zeros) {
        if (!s.zero_forced(zr.x, zr.y)) s.zero_rules.push_back(zr);
    }
    return s;
}

ConstraintScenario scenario_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return scenario_from_text(buf.str());
}

std::string scenario_to_text(const ConstraintScenario& s) {
    std::ostringstream out;
    out << "[model]\n";
    out << "type = " << s.model.lift_multiplier << "-(" << s.model.c << ";" << s.model.f << ")\n";
    out << "ambient_d = " << s.ambient_d << "\n";
    out << "k2 = " << s.k2 << "\n";
    out << "symmetry = " << (s.symmetry ? "on" : "off") << "\n";
    out << "marginals = " << (s.marginal_links ? "on" : "off") << "\n";
    if (!s.assumptions.empty()) {
        out << "\n[assume]\n";
        for (const auto& a : s.assumptions)
            out << a.kind << " " << a.value << " ; " << a.citation << "\n";
    }
    out << "\n[zero]\n";
    for (const auto& zr : s.zero_rules)
        out << zr.x << " " << zr.y << " " << zr.reason << "\n";
    return out.str();
}

FactTable facts_from_text(const std::string& text) {
    std::istringstream in(text);
    std::string line, section;
    FactTable t;
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        if (line.front() == '[' && line.back() == ']') {
            section = line.substr(1, line.size() - 2);
            continue;
        }
        if (section != "fact") continue;
        auto parts = split_semicolons(line);
        Fact f;
        f.id = parts[0];
        if (f.id.empty()) throw std::invalid_argument("fact line without id: " + line);
        f.citation = parts.size() > 1 ? parts[1] : "";
        f.statement = parts.size() > 2 ? parts[2] : "";
        t.facts.push_back(std::move(f));
    }
    return t;
}

FactTable facts_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return facts_from_text(buf.str());
}

std::string facts_to_text(const FactTable& t) {
    std::ostringstream out;
    out << "[fact]\n";
    for (const auto& f : t.facts)
        out << f.id << " ; " << f.citation << " ; " << f.statement << "\n";
    return out.str();
}

}  // namespace aut120
