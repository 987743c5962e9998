#include "biharm/report.hpp"

#include <array>
#include <cstdio>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "biharm/defaults.hpp"
#include "biharm/errors.hpp"

namespace biharm::report {

namespace {

using nlohmann::json;

constexpr const char* schema_tag = "biharm-report/1";

constexpr std::array<bounds::BoundId, 8> all_bounds = {
    bounds::BoundId::thm1,       bounds::BoundId::thm3,
    bounds::BoundId::heinz,      bounds::BoundId::pavlovic,
    bounds::BoundId::colonna,    bounds::BoundId::green_mass,
    bounds::BoundId::grad_green_mass, bounds::BoundId::boundary_schwarz};

bounds::BoundId bound_from_name(const std::string& name) {
    for (const auto id : all_bounds)
        if (name == bounds::bound_name(id)) return id;
    throw ParseError("unknown bound name '" + name + "'");
}

// Right-aligned numeric cell for the text tables.
std::string cell(double v, int width = 24) {
    std::ostringstream os;
    os << std::setw(width) << number(v);
    return os.str();
}

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

Complex complex_from(const json& j) {
    if (!j.is_array() || j.size() != 2) throw ParseError("complex values are [re, im] pairs");
    return {j[0].get<double>(), j[1].get<double>()};
}

json parse_doc(std::istream& in, const char* kind) {
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid report document: ") + e.what());
    }
    try {
        if (doc.at("schema").get<std::string>() != schema_tag)
            throw ParseError("unsupported schema '" + doc["schema"].get<std::string>() + "'");
        if (doc.at("kind").get<std::string>() != kind)
            throw ParseError("expected a '" + std::string(kind) + "' document, got '" +
                             doc["kind"].get<std::string>() + "'");
    } catch (const json::exception& e) {
        throw ParseError(std::string("missing schema/kind field: ") + e.what());
    }
    return doc;
}

std::vector<double> csv_row(const std::string& line, std::size_t fields, int line_no) {
    std::vector<double> out;
    std::stringstream ss(line);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stod(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw ParseError("bad csv number '" + tok + "'", line_no);
        }
    }
    if (out.size() != fields)
        throw ParseError("expected " + std::to_string(fields) + " csv fields, got " +
                             std::to_string(out.size()),
                         line_no);
    return out;
}

// Shared summary pass: first minimum margin in scan order.
void finish_bound_summary(bounds::BoundReport& rep) {
    rep.min_margin = 0.0;
    rep.worst_index = 0;
    rep.worst_z = Complex{};
    for (std::size_t i = 0; i < rep.samples.size(); ++i) {
        if (i == 0 || rep.samples[i].margin < rep.min_margin) {
            rep.min_margin = rep.samples[i].margin;
            rep.worst_index = i;
        }
    }
    if (!rep.samples.empty()) rep.worst_z = rep.samples[rep.worst_index].z;
    rep.violated = !rep.samples.empty() && rep.min_margin < -defaults::report_tol;
}

}  // namespace

Format parse_format(const std::string& name) {
    if (name == "text") return Format::text;
    if (name == "csv") return Format::csv;
    if (name == "structured") return Format::structured;
    throw DomainError("unknown output format '" + name + "' (text|csv|structured)");
}

const char* format_name(Format fmt) {
    switch (fmt) {
        case Format::text: return "text";
        case Format::csv: return "csv";
        case Format::structured: return "structured";
    }
    return "?";
}

std::string number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void emit(const bounds::BoundReport& rep, Format fmt, std::ostream& out) {
    switch (fmt) {
        case Format::csv: {
            out << "z_re,z_im,lhs,rhs,margin\n";
            for (const auto& s : rep.samples)
                out << number(s.z.real()) << ',' << number(s.z.imag()) << ',' << number(s.lhs)
                    << ',' << number(s.rhs) << ',' << number(s.margin) << '\n';
            return;
        }
        case Format::structured: {
            json doc;
            doc["schema"] = schema_tag;
            doc["kind"] = "bound";
            doc["bound"] = bounds::bound_name(rep.bound);
            json rows = json::array();
            for (const auto& s : rep.samples)
                rows.push_back(json{{"z", complex_json(s.z)},
                                    {"lhs", s.lhs},
                                    {"rhs", s.rhs},
                                    {"margin", s.margin}});
            doc["samples"] = std::move(rows);
            doc["min_margin"] = rep.min_margin;
            doc["worst_z"] = complex_json(rep.worst_z);
            doc["worst_index"] = rep.worst_index;
            doc["violated"] = rep.violated;
            out << doc.dump(2) << '\n';
            return;
        }
        case Format::text: {
            out << "bound: " << bounds::bound_name(rep.bound) << '\n';
            out << std::setw(24) << "z_re" << std::setw(24) << "z_im" << std::setw(24) << "lhs"
                << std::setw(24) << "rhs" << std::setw(24) << "margin" << '\n';
            for (const auto& s : rep.samples)
                out << cell(s.z.real()) << cell(s.z.imag()) << cell(s.lhs) << cell(s.rhs)
                    << cell(s.margin) << '\n';
            out << "samples: " << rep.samples.size() << '\n';
            out << "min_margin: " << number(rep.min_margin) << " at z = (" << number(rep.worst_z.real())
                << ", " << number(rep.worst_z.imag()) << "), sample " << rep.worst_index << '\n';
            out << "violated: " << (rep.violated ? "yes" : "no") << '\n';
            return;
        }
    }
}

void emit(const bounds::SchwarzReport& rep, Format fmt, std::ostream& out) {
    switch (fmt) {
        case Format::csv: {
            out << "r,quotient\n";
            for (std::size_t i = 0; i < rep.r_list.size(); ++i)
                out << number(rep.r_list[i]) << ',' << number(rep.quotients[i]) << '\n';
            return;
        }
        case Format::structured: {
            json doc;
            doc["schema"] = schema_tag;
            doc["kind"] = "boundary_schwarz";
            doc["r_list"] = rep.r_list;
            doc["quotients"] = rep.quotients;
            doc["liminf_est"] = rep.liminf_est;
            doc["rhs"] = rep.rhs;
            doc["margin"] = rep.margin;
            doc["violated"] = rep.violated;
            out << doc.dump(2) << '\n';
            return;
        }
        case Format::text: {
            out << std::setw(24) << "r" << std::setw(24) << "quotient" << '\n';
            for (std::size_t i = 0; i < rep.r_list.size(); ++i)
                out << cell(rep.r_list[i]) << cell(rep.quotients[i]) << '\n';
            out << "liminf_est: " << number(rep.liminf_est) << '\n';
            out << "rhs:        " << number(rep.rhs) << '\n';
            out << "margin:     " << number(rep.margin) << '\n';
            out << "violated:   " << (rep.violated ? "yes" : "no") << '\n';
            return;
        }
    }
}

void emit(const landau::LandauResult& rep, Format fmt, std::ostream& out) {
    switch (fmt) {
        case Format::csv: {
            out << "r0,m0,lambda0,bracket_lo,bracket_hi,residual,iterations\n";
            out << number(rep.r0) << ',' << number(rep.m0) << ',' << number(rep.lambda0) << ','
                << number(rep.bracket_lo) << ',' << number(rep.bracket_hi) << ','
                << number(rep.residual) << ',' << rep.iterations << '\n';
            return;
        }
        case Format::structured: {
            json doc;
            doc["schema"] = schema_tag;
            doc["kind"] = "landau";
            doc["r0"] = rep.r0;
            doc["m0"] = rep.m0;
            doc["lambda0"] = rep.lambda0;
            doc["bracket_lo"] = rep.bracket_lo;
            doc["bracket_hi"] = rep.bracket_hi;
            doc["residual"] = rep.residual;
            doc["iterations"] = rep.iterations;
            out << doc.dump(2) << '\n';
            return;
        }
        case Format::text: {
            out << "r0:         " << number(rep.r0) << '\n';
            out << "m0:         " << number(rep.m0) << '\n';
            out << "lambda0:    " << number(rep.lambda0) << '\n';
            out << "bracket:    [" << number(rep.bracket_lo) << ", " << number(rep.bracket_hi)
                << "]\n";
            out << "residual:   " << number(rep.residual) << '\n';
            out << "iterations: " << rep.iterations << '\n';
            return;
        }
    }
}

void emit(const landau::AaRadii& rep, Format fmt, std::ostream& out) {
    switch (fmt) {
        case Format::csv: {
            out << "rho2,big_r2,resid2,rho3,big_r3,resid3\n";
            out << number(rep.rho2) << ',' << number(rep.big_r2) << ',' << number(rep.resid2)
                << ',' << number(rep.rho3) << ',' << number(rep.big_r3) << ','
                << number(rep.resid3) << '\n';
            return;
        }
        case Format::structured: {
            json doc;
            doc["schema"] = schema_tag;
            doc["kind"] = "aa_radii";
            doc["rho2"] = rep.rho2;
            doc["big_r2"] = rep.big_r2;
            doc["resid2"] = rep.resid2;
            doc["rho3"] = rep.rho3;
            doc["big_r3"] = rep.big_r3;
            doc["resid3"] = rep.resid3;
            out << doc.dump(2) << '\n';
            return;
        }
        case Format::text: {
            out << "rho2:   " << number(rep.rho2) << "   R2: " << number(rep.big_r2)
                << "   residual: " << number(rep.resid2) << '\n';
            out << "rho3:   " << number(rep.rho3) << "   R3: " << number(rep.big_r3)
                << "   residual: " << number(rep.resid3) << '\n';
            return;
        }
    }
}

void emit(const lipschitz::LipschitzReport& rep, Format fmt, std::ostream& out) {
    switch (fmt) {
        case Format::csv: {
            out << "l_est,bound,sup_ratio,margin,pass,worst_z1_re,worst_z1_im,worst_z2_re,worst_z2_im\n";
            out << number(rep.l_est) << ',' << number(rep.bound) << ',' << number(rep.sup_ratio)
                << ',' << number(rep.margin) << ',' << (rep.pass ? 1 : 0) << ','
                << number(rep.worst_z1.real()) << ',' << number(rep.worst_z1.imag()) << ','
                << number(rep.worst_z2.real()) << ',' << number(rep.worst_z2.imag()) << '\n';
            return;
        }
        case Format::structured: {
            json doc;
            doc["schema"] = schema_tag;
            doc["kind"] = "lipschitz";
            doc["l_est"] = rep.l_est;
            doc["bound"] = rep.bound;
            doc["sup_ratio"] = rep.sup_ratio;
            doc["margin"] = rep.margin;
            doc["pass"] = rep.pass;
            doc["worst_z1"] = complex_json(rep.worst_z1);
            doc["worst_z2"] = complex_json(rep.worst_z2);
            out << doc.dump(2) << '\n';
            return;
        }
        case Format::text: {
            out << "l_est:     " << number(rep.l_est) << '\n';
            out << "bound:     " << number(rep.bound) << '\n';
            out << "sup_ratio: " << number(rep.sup_ratio) << '\n';
            out << "margin:    " << number(rep.margin) << '\n';
            out << "worst pair: (" << number(rep.worst_z1.real()) << ", "
                << number(rep.worst_z1.imag()) << ") / (" << number(rep.worst_z2.real()) << ", "
                << number(rep.worst_z2.imag()) << ")\n";
            out << "pass:      " << (rep.pass ? "yes" : "no") << '\n';
            return;
        }
    }
}

void emit(const std::vector<SolveSample>& rows, Format fmt, std::ostream& out) {
    switch (fmt) {
        case Format::csv: {
            out << "z_re,z_im,f_re,f_im\n";
            for (const auto& s : rows)
                out << number(s.z.real()) << ',' << number(s.z.imag()) << ','
                    << number(s.f.real()) << ',' << number(s.f.imag()) << '\n';
            return;
        }
        case Format::structured: {
            json doc;
            doc["schema"] = schema_tag;
            doc["kind"] = "solve";
            json arr = json::array();
            for (const auto& s : rows)
                arr.push_back(json{{"z", complex_json(s.z)}, {"f", complex_json(s.f)}});
            doc["samples"] = std::move(arr);
            out << doc.dump(2) << '\n';
            return;
        }
        case Format::text: {
            out << std::setw(24) << "z_re" << std::setw(24) << "z_im" << std::setw(24) << "f_re"
                << std::setw(24) << "f_im" << '\n';
            for (const auto& s : rows)
                out << cell(s.z.real()) << cell(s.z.imag()) << cell(s.f.real())
                    << cell(s.f.imag()) << '\n';
            return;
        }
    }
}

void emit(const std::vector<GradSample>& rows, Format fmt, std::ostream& out) {
    switch (fmt) {
        case Format::csv: {
            out << "z_re,z_im,fz_re,fz_im,fzbar_re,fzbar_im,op_norm,lambda,jacobian\n";
            for (const auto& s : rows)
                out << number(s.z.real()) << ',' << number(s.z.imag()) << ','
                    << number(s.grad.f_z.real()) << ',' << number(s.grad.f_z.imag()) << ','
                    << number(s.grad.f_zbar.real()) << ',' << number(s.grad.f_zbar.imag()) << ','
                    << number(s.grad.op_norm) << ',' << number(s.grad.lambda) << ','
                    << number(s.grad.jacobian) << '\n';
            return;
        }
        case Format::structured: {
            json doc;
            doc["schema"] = schema_tag;
            doc["kind"] = "grad";
            json arr = json::array();
            for (const auto& s : rows)
                arr.push_back(json{{"z", complex_json(s.z)},
                                   {"f_z", complex_json(s.grad.f_z)},
                                   {"f_zbar", complex_json(s.grad.f_zbar)},
                                   {"op_norm", s.grad.op_norm},
                                   {"lambda", s.grad.lambda},
                                   {"jacobian", s.grad.jacobian}});
            doc["samples"] = std::move(arr);
            out << doc.dump(2) << '\n';
            return;
        }
        case Format::text: {
            out << std::setw(24) << "z_re" << std::setw(24) << "z_im" << std::setw(24) << "|f_z|"
                << std::setw(24) << "|f_zbar|" << std::setw(24) << "op_norm" << std::setw(24)
                << "jacobian" << '\n';
            for (const auto& s : rows)
                out << cell(s.z.real()) << cell(s.z.imag()) << cell(std::abs(s.grad.f_z))
                    << cell(std::abs(s.grad.f_zbar)) << cell(s.grad.op_norm)
                    << cell(s.grad.jacobian) << '\n';
            return;
        }
    }
}

bounds::BoundReport parse_bound_csv(std::istream& in, bounds::BoundId id) {
    bounds::BoundReport rep;
    rep.bound = id;
    std::string line;
    int line_no = 0;
    if (!std::getline(in, line)) throw ParseError("empty csv document");
    ++line_no;
    if (line != "z_re,z_im,lhs,rhs,margin") throw ParseError("unexpected csv header", line_no);
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        const auto v = csv_row(line, 5, line_no);
        rep.samples.push_back({Complex{v[0], v[1]}, v[2], v[3], v[4]});
    }
    finish_bound_summary(rep);
    return rep;
}

bounds::BoundReport parse_bound_structured(std::istream& in) {
    const json doc = parse_doc(in, "bound");
    bounds::BoundReport rep;
    try {
        rep.bound = bound_from_name(doc.at("bound").get<std::string>());
        for (const auto& row : doc.at("samples"))
            rep.samples.push_back({complex_from(row.at("z")), row.at("lhs").get<double>(),
                                   row.at("rhs").get<double>(), row.at("margin").get<double>()});
        rep.min_margin = doc.at("min_margin").get<double>();
        rep.worst_z = complex_from(doc.at("worst_z"));
        rep.worst_index = doc.at("worst_index").get<std::size_t>();
        rep.violated = doc.at("violated").get<bool>();
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed bound document: ") + e.what());
    }
    return rep;
}

bounds::SchwarzReport parse_schwarz_structured(std::istream& in) {
    const json doc = parse_doc(in, "boundary_schwarz");
    bounds::SchwarzReport rep;
    try {
        rep.r_list = doc.at("r_list").get<std::vector<double>>();
        rep.quotients = doc.at("quotients").get<std::vector<double>>();
        rep.liminf_est = doc.at("liminf_est").get<double>();
        rep.rhs = doc.at("rhs").get<double>();
        rep.margin = doc.at("margin").get<double>();
        rep.violated = doc.at("violated").get<bool>();
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed boundary_schwarz document: ") + e.what());
    }
    return rep;
}

landau::LandauResult parse_landau_structured(std::istream& in) {
    const json doc = parse_doc(in, "landau");
    try {
        return {doc.at("r0").get<double>(),         doc.at("m0").get<double>(),
                doc.at("lambda0").get<double>(),    doc.at("bracket_lo").get<double>(),
                doc.at("bracket_hi").get<double>(), doc.at("residual").get<double>(),
                doc.at("iterations").get<int>()};
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed landau document: ") + e.what());
    }
}

lipschitz::LipschitzReport parse_lipschitz_structured(std::istream& in) {
    const json doc = parse_doc(in, "lipschitz");
    lipschitz::LipschitzReport rep;
    try {
        rep.l_est = doc.at("l_est").get<double>();
        rep.bound = doc.at("bound").get<double>();
        rep.sup_ratio = doc.at("sup_ratio").get<double>();
        rep.margin = doc.at("margin").get<double>();
        rep.pass = doc.at("pass").get<bool>();
        rep.worst_z1 = complex_from(doc.at("worst_z1"));
        rep.worst_z2 = complex_from(doc.at("worst_z2"));
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed lipschitz document: ") + e.what());
    }
    return rep;
}

}  // namespace biharm::report
