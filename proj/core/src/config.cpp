#include "predprey/config.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "predprey/csv.hpp"
#include "predprey/errors.hpp"

namespace predprey {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

struct Table {
    std::map<std::string, std::pair<std::string, int>> kv;  // key -> (value, line)
};

std::map<std::string, Table> parse_tables(const std::string& text, const std::string& origin) {
    std::map<std::string, Table> tables;
    std::istringstream in(text);
    std::string line, section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find_first_of("#;"); h != std::string::npos) line.erase(h);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConfigError(origin + ":" + std::to_string(lineno) + ": malformed section header '" + line + "'");
            section = trim(line.substr(1, line.size() - 2));
            tables[section];
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(origin + ":" + std::to_string(lineno) + ": expected 'key = value', got '" + line + "'");
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (section.empty())
            throw ConfigError(origin + ":" + std::to_string(lineno) + ": key '" + key + "' outside any [section]");
        if (key.empty() || val.empty())
            throw ConfigError(origin + ":" + std::to_string(lineno) + ": empty key or value");
        if (!tables[section].kv.emplace(key, std::make_pair(val, lineno)).second)
            throw ConfigError(origin + ":" + std::to_string(lineno) + ": duplicate key '" + key + "' in [" + section + "]");
    }
    return tables;
}

class TableReader {
  public:
    TableReader(const Table& t, std::string section, std::string origin)
        : t_(t), section_(std::move(section)), origin_(std::move(origin)) {}

    double number(const std::string& key) {
        const auto it = t_.kv.find(key);
        if (it == t_.kv.end())
            throw ConfigError(origin_ + ": missing key '" + key + "' in [" + section_ + "]");
        return parse(key, it->second);
    }

    double number_or(const std::string& key, double dflt) {
        const auto it = t_.kv.find(key);
        if (it == t_.kv.end()) return dflt;
        return parse(key, it->second);
    }

    bool has(const std::string& key) {
        const bool h = t_.kv.count(key) > 0;
        if (h) seen_.insert(key);
        return h;
    }

    void reject_unknown() const {
        for (const auto& [key, v] : t_.kv)
            if (!seen_.count(key))
                throw ConfigError(origin_ + ":" + std::to_string(v.second) + ": unknown key '" + key + "' in [" + section_ + "]");
    }

  private:
    double parse(const std::string& key, const std::pair<std::string, int>& v) {
        seen_.insert(key);
        const std::string& s = v.first;
        double out{};
        const auto res = std::from_chars(s.data(), s.data() + s.size(), out);
        if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
            throw ConfigError(origin_ + ":" + std::to_string(v.second) + ": value of '" + key + "' in [" + section_ + "] is not a number: '" + s + "'");
        return out;
    }

    const Table& t_;
    std::string section_, origin_;
    std::set<std::string> seen_;
};

}  // namespace

LoadedConfig parse_config(const std::string& text, const std::string& origin) {
    const auto tables = parse_tables(text, origin);
    for (const auto& [name, t] : tables)
        if (name != "model" && name != "grid" && name != "solver")
            throw ConfigError(origin + ": unknown section [" + name + "]");
    if (!tables.count("model")) throw ConfigError(origin + ": missing [model] section");

    LoadedConfig out;
    {
        TableReader m(tables.at("model"), "model", origin);
        out.model.r0 = m.number("r0");
        out.model.eta = m.number("eta");
        out.model.alpha = m.number("alpha");
        out.model.gamma_tilde = m.number("gamma_tilde");
        out.model.Gamma = m.number("Gamma");
        out.model.mu = m.number("mu");
        out.model.xi = m.number("xi");
        out.model.d1 = m.number("d1");
        out.model.d2 = m.number("d2");
        out.model.d3 = m.number("d3");
        if (m.has("epsilon")) out.model.epsilon = m.number("epsilon");
        m.reject_unknown();
        validate(out.model);
    }
    if (tables.count("grid")) {
        TableReader gr(tables.at("grid"), "grid", origin);
        const int dim = int(gr.number_or("dim", 1));
        if (dim == 1) {
            out.grid = Grid::line(int(gr.number("n")), gr.number("length"));
        } else if (dim == 2) {
            const int n = int(gr.number("n"));
            const double L = gr.number("length");
            const int ny = int(gr.number_or("ny", n));
            const double Ly = gr.number_or("length_y", L);
            out.grid = Grid::rect(n, ny, L, Ly);
        } else {
            throw ConfigError(origin + ": grid.dim must be 1 or 2");
        }
        gr.reject_unknown();
        out.has_grid = true;
    } else {
        out.grid = Grid::line(256, 1.0);
    }
    if (tables.count("solver")) {
        TableReader sv(tables.at("solver"), "solver", origin);
        out.solver.dt_max = sv.number_or("dt_max", out.solver.dt_max);
        out.solver.cfl_safety = sv.number_or("cfl_safety", out.solver.cfl_safety);
        out.solver.t_end = sv.number_or("t_end", out.solver.t_end);
        out.solver.newton_tol = sv.number_or("newton_tol", out.solver.newton_tol);
        out.solver.newton_max_iters = int(sv.number_or("newton_max_iters", out.solver.newton_max_iters));
        out.solver.output_stride = int(sv.number_or("output_stride", out.solver.output_stride));
        out.solver.snapshot_stride = int(sv.number_or("snapshot_stride", out.solver.snapshot_stride));
        sv.reject_unknown();
        validate(out.solver);
    }
    return out;
}

LoadedConfig load_config(const std::string& path) {
    return parse_config(read_file(path), path);
}

}  // namespace predprey
