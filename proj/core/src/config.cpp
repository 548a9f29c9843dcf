#include "trisum/config.hpp"
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace trisum {

RunConfig RunConfig::from_file(const std::string& path) {
    RunConfig cfg;
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        std::string key = line.substr(0, eq);
        std::string val = line.substr(eq + 1);
        auto strip = [](std::string& s) {
            while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.erase(s.begin());
            while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
                s.pop_back();
        };
        strip(key);
        strip(val);
        if (!key.empty()) cfg.set(key, val);
    }
    return cfg;
}

void RunConfig::set(const std::string& key, const std::string& value) {
    auto to_l = [&](const std::string& v) { return std::stol(v); };
    if (key == "level_budget") level_budget = to_l(value);
    else if (key == "count_budget") count_budget = to_l(value);
    else if (key == "ell_lo") ell_lo = to_l(value);
    else if (key == "ell_hi") ell_hi = to_l(value);
    else if (key == "thue_bound") thue_bound = to_l(value);
    else if (key == "point_bound") point_bound = to_l(value);
    else if (key == "generator_s_bound") generator_s_bound = to_l(value);
    else if (key == "trace_cache") trace_cache = value;
    else if (key == "hecke_cache") hecke_cache = value;
    else if (key == "newform_data") newform_data = value;
    else if (key == "jobs") jobs = static_cast<unsigned>(to_l(value));
    else if (key == "json") json_path = value;
    else if (key == "variant") {
        if (value == "printed") printed_variant = true;
        else if (value == "faithful") printed_variant = false;
        else throw std::invalid_argument("variant must be faithful or printed");
    } else if (key == "moduli") {
        moduli.clear();
        std::stringstream ss(value);
        std::string tok;
        while (std::getline(ss, tok, ',')) moduli.push_back(std::stol(tok));
    } else {
        throw std::invalid_argument("unknown config key: " + key);
    }
}

}  // namespace trisum
