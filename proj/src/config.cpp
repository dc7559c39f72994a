#include "zetabounds/config.hpp"

#include <fstream>
#include <sstream>

namespace zetabounds::config {

namespace {

struct Row {
    const char* name;
    double c, r, eta;
};

// admissible (c, r, eta) triples of the shipped constant table
constexpr Row kRows[] = {
    {"row1", 1.000225, 1.000605, 0.000158},
    {"row2", 1.070007, 1.182997, 0.069901},
    {"row3", 1.043400, 1.250450, 0.040000},
    {"row4", 1.000060, 1.499556, 1.542440e-5},
    {"row5", 1.499159, 1.998357, 0.499050},
};

std::vector<double> parse_list(const std::string& v, const std::string& key) {
    std::vector<double> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stod(item));
        } catch (const std::exception&) {
            throw config_error(key + ": bad number '" + item + "'");
        }
    }
    return out;
}

double parse_num(const std::string& v, const std::string& key) {
    try {
        std::size_t pos = 0;
        const double x = std::stod(v, &pos);
        if (v.find_first_not_of(" \t", pos) != std::string::npos)
            throw config_error(key + ": trailing content '" + v + "'");
        return x;
    } catch (const config_error&) {
        throw;
    } catch (const std::exception&) {
        throw config_error(key + ": bad number '" + v + "'");
    }
}

regions::LineBound parse_line(const std::string& v, const std::string& key) {
    const auto xs = parse_list(v, key);
    if (xs.size() != 4)
        throw config_error(key + ": expected coeff,t_power,log_power,t_min");
    return {xs[0], xs[1], xs[2], xs[3]};
}

} // namespace

std::vector<std::string> profile_names() {
    std::vector<std::string> v;
    for (const auto& r : kRows) v.emplace_back(r.name);
    return v;
}

bool has_profile(const std::string& name) {
    for (const auto& r : kRows)
        if (name == r.name) return true;
    return false;
}

Settings profile(const std::string& name) {
    for (const auto& r : kRows) {
        if (name != r.name) continue;
        Settings s;
        s.params.c = r.c;
        s.params.r = r.r;
        s.params.eta = r.eta;
        return s;
    }
    throw config_error("unknown profile '" + name + "'");
}

Settings apply(const std::map<std::string, std::string>& kv, Settings s) {
    auto& p = s.params;
    for (const auto& [key, val] : kv) {
        if (key == "c") p.c = parse_num(val, key);
        else if (key == "r") p.r = parse_num(val, key);
        else if (key == "eta") p.eta = parse_num(val, key);
        else if (key == "n") p.n = (int)parse_num(val, key);
        else if (key == "J1") p.J1 = (int)parse_num(val, key);
        else if (key == "J2") p.J2 = (int)parse_num(val, key);
        else if (key == "T0") p.T0 = parse_num(val, key);
        else if (key == "b") p.b = parse_num(val, key);
        else if (key == "B") p.B = parse_num(val, key);
        else if (key == "quad_tol") s.quad_tol = parse_num(val, key);
        else if (key == "Q") {
            const auto xs = parse_list(val, key);
            if (xs.size() != 12) throw config_error("Q: expected 12 entries");
            for (int i = 0; i < 12; ++i) p.Q[i] = xs[i];
        } else if (key == "line1") {
            p.line1 = parse_line(val, key);
        } else if (key == "lineHalf") {
            p.line_half = parse_line(val, key);
        } else {
            throw config_error("unknown key '" + key + "'");
        }
    }
    return s;
}

Settings load_file(const std::string& path, Settings base) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot open config '" + path + "'");
    std::map<std::string, std::string> kv;
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw config_error(path + ":" + std::to_string(lineno) +
                               ": expected key = value");
        auto trim = [](std::string t) {
            const auto b = t.find_first_not_of(" \t\r");
            if (b == std::string::npos) return std::string();
            const auto e = t.find_last_not_of(" \t\r");
            return t.substr(b, e - b + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (key.empty())
            throw config_error(path + ":" + std::to_string(lineno) + ": empty key");
        kv[key] = val;
    }
    return config::apply(kv, std::move(base));
}

} // namespace zetabounds::config
