#include "biharm/config.hpp"

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "biharm/errors.hpp"

namespace biharm::io {

namespace {

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

int parse_int(const std::string& tok, int line) {
    try {
        std::size_t used = 0;
        const int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw ParseError("expected an integer, got '" + tok + "'", line);
    }
}

double parse_double(const std::string& tok, int line) {
    try {
        std::size_t used = 0;
        const double v = std::stod(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw ParseError("expected a number, got '" + tok + "'", line);
    }
}

void set_fourier(BoundaryFourier& series, int n, Complex c, int line) {
    if (std::abs(n) > BoundaryFourier::max_index)
        throw ParseError("Fourier index " + std::to_string(n) + " exceeds the limit " +
                             std::to_string(BoundaryFourier::max_index),
                         line);
    series.set(n, c);
}

void set_poly(BidegreePoly& poly, int j, int k, Complex c, int line) {
    if (j < 0 || k < 0) throw ParseError("polynomial exponents must be nonnegative", line);
    if (j > BidegreePoly::max_bidegree || k > BidegreePoly::max_bidegree)
        throw ParseError("polynomial bidegree exceeds the limit " +
                             std::to_string(BidegreePoly::max_bidegree),
                         line);
    poly.set(j, k, c);
}

}  // namespace

ProblemSpec parse_problem_text(std::istream& in) {
    ProblemSpec spec;
    bool g_constant_seen = false, g_rows_seen = false;
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        const std::size_t hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::istringstream ls(raw);
        std::string key;
        if (!(ls >> key)) continue;  // blank or comment-only line

        std::vector<std::string> toks;
        for (std::string t; ls >> t;) toks.push_back(t);

        if (key == "fstar" || key == "phi") {
            if (toks.size() != 3)
                throw ParseError("'" + key + "' rows take: <n> <re> <im>", line);
            const int n = parse_int(toks[0], line);
            const Complex c{parse_double(toks[1], line), parse_double(toks[2], line)};
            set_fourier(key == "fstar" ? spec.f_star : spec.phi, n, c, line);
        } else if (key == "g") {
            if (toks.size() == 2 && toks[0] == "constant") {
                if (g_rows_seen || g_constant_seen)
                    throw ParseError("'g constant' cannot be combined with other g rows", line);
                g_constant_seen = true;
                spec.g = BidegreePoly::constant(parse_double(toks[1], line));
            } else if (toks.size() == 4) {
                if (g_constant_seen)
                    throw ParseError("'g constant' cannot be combined with other g rows", line);
                g_rows_seen = true;
                set_poly(spec.g, parse_int(toks[0], line), parse_int(toks[1], line),
                         Complex{parse_double(toks[2], line), parse_double(toks[3], line)}, line);
            } else {
                throw ParseError("'g' rows take: <j> <k> <re> <im>  or  constant <value>", line);
            }
        } else {
            throw ParseError("unknown key '" + key + "'", line);
        }
    }
    return spec;
}

ProblemSpec parse_problem_json(std::istream& in) {
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("top level must be a JSON object");

    ProblemSpec spec;
    auto read_series = [&](const char* name, BoundaryFourier& series) {
        if (!doc.contains(name)) return;
        const auto& arr = doc[name];
        if (!arr.is_array()) throw ParseError(std::string("'") + name + "' must be an array");
        for (const auto& row : arr) {
            if (!row.is_array() || row.size() != 3)
                throw ParseError(std::string("'") + name + "' rows are [n, re, im]");
            if (!row[0].is_number_integer())
                throw ParseError(std::string("'") + name + "' index must be an integer");
            set_fourier(series, row[0].get<int>(),
                        Complex{row[1].get<double>(), row[2].get<double>()}, 0);
        }
    };
    read_series("fstar", spec.f_star);
    read_series("phi", spec.phi);

    if (doc.contains("g")) {
        const auto& g = doc["g"];
        if (g.is_object()) {
            if (!g.contains("constant") || g.size() != 1)
                throw ParseError("'g' object form is {\"constant\": value}");
            spec.g = BidegreePoly::constant(g["constant"].get<double>());
        } else if (g.is_array()) {
            for (const auto& row : g) {
                if (!row.is_array() || row.size() != 4)
                    throw ParseError("'g' rows are [j, k, re, im]");
                if (!row[0].is_number_integer() || !row[1].is_number_integer())
                    throw ParseError("'g' exponents must be integers");
                set_poly(spec.g, row[0].get<int>(), row[1].get<int>(),
                         Complex{row[2].get<double>(), row[3].get<double>()}, 0);
            }
        } else {
            throw ParseError("'g' must be an array of rows or {\"constant\": value}");
        }
    }
    for (const auto& [key, value] : doc.items()) {
        (void)value;
        if (key != "fstar" && key != "phi" && key != "g")
            throw ParseError("unknown key '" + key + "'");
    }
    return spec;
}

ProblemSpec load_problem(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open problem file '" + path + "'");
    if (ends_with(path, ".json")) return parse_problem_json(in);
    return parse_problem_text(in);
}

}  // namespace biharm::io
