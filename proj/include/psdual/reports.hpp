#pragma once

// Machine-readable output documents for the command-line front end.  Field
// names and the CSV header are a stable interface covered by golden-file
// tests; polynomials serialize as [{"c":..,"k":..}] sorted by k.

#include <algorithm>
#include <cmath>
#include <string>

#include <json.hpp>

#include "psdual/density_parser.hpp"
#include "psdual/duality.hpp"
#include "psdual/number_format.hpp"
#include "psdual/oracle.hpp"

namespace psdual {

using json = nlohmann::ordered_json;

inline json polynomial_to_json(const RadialPolynomial& p) {
    json terms = json::array();
    for (const auto& t : p.terms()) {
        terms.push_back({{"c", t.coefficient}, {"k", t.exponent}});
    }
    return terms;
}

inline RadialPolynomial polynomial_from_json(const json& terms) {
    std::vector<PowerTerm> out;
    for (const auto& t : terms) {
        out.push_back({t.at("c").get<double>(), t.at("k").get<double>()});
    }
    return RadialPolynomial(std::move(out));
}

inline json solve_document(const ChargeDensity& rho, const DualSolution& sol) {
    const RadialPolynomial field = field_from_density(rho);
    json doc;
    doc["density"] = polynomial_to_json(rho.profile());
    doc["field"] = polynomial_to_json(field);
    doc["potential_V"] = polynomial_to_json(potential_from_field(field));
    doc["quantum_potential_U"] = polynomial_to_json(sol.quantum_potential);
    doc["E0"] = sol.ground_energy;
    doc["S"] = polynomial_to_json(sol.exponent);
    if (sol.normalization) {
        doc["A"] = *sol.normalization;
    } else {
        doc["A"] = nullptr;
    }
    doc["bound"] = sol.bound;
    return doc;
}

inline json verify_document(const VerificationReport& report) {
    const auto number_or_null = [](const auto& opt) { return opt ? json(*opt) : json(nullptr); };
    json doc;
    doc["analytic_E0"] = report.analytic_E0;
    doc["numeric_E0"] = number_or_null(report.numeric_E0);
    doc["abs_err"] = number_or_null(report.abs_err);
    doc["node_count"] = number_or_null(report.node_count);
    doc["ode_residual_max"] = number_or_null(report.ode_residual_max);
    doc["norm_quadrature"] = number_or_null(report.norm_quadrature);
    doc["norm_closed_form"] = number_or_null(report.norm_closed_form);
    doc["passed"] = report.passed;
    doc["reason"] = report.reason;
    return doc;
}

// "r,rho,E_field,V,U,psi" sampled on the grid nodes, decimated to at most
// max_rows rows.  psi is NaN-rendered when the solution has no normalization.
inline std::string table_csv(const ChargeDensity& rho, const DualSolution& sol, const GridSpec& grid,
                             int max_rows = 2000) {
    if (max_rows < 1) throw std::invalid_argument("table_csv: max_rows must be >= 1");
    const RadialPolynomial field = field_from_density(rho);
    const RadialPolynomial potential = potential_from_field(field);

    const int points = grid.n + 1;
    const int stride = (points + max_rows - 1) / max_rows;

    std::string out = "r,rho,E_field,V,U,psi\n";
    for (int i = 0; i < points; i += stride) {
        const double r = grid.r(i);
        const double psi = sol.normalization ? *sol.normalization * std::exp(-evaluate(sol.exponent, r))
                                             : std::nan("");
        out += format_number(r);
        out += ',';
        out += format_number(evaluate(rho.profile(), r));
        out += ',';
        out += format_number(evaluate(field, r));
        out += ',';
        out += format_number(evaluate(potential, r));
        out += ',';
        out += format_number(evaluate(sol.quantum_potential, r));
        out += ',';
        out += format_number(psi);
        out += '\n';
    }
    return out;
}

// Plain-text renderings for terminal use.
inline std::string polynomial_to_text(const RadialPolynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& t : p.terms()) {
        if (!out.empty()) out += " + ";
        out += format_number(t.coefficient);
        out += "*r^";
        out += format_number(t.exponent);
    }
    return out;
}

inline std::string solve_text(const ChargeDensity& rho, const DualSolution& sol) {
    std::string out;
    out += "density rho(r)      = " + polynomial_to_text(rho.profile()) + "\n";
    out += "field |E|(r)        = " + polynomial_to_text(field_from_density(rho)) + "\n";
    out += "quantum potential U = " + polynomial_to_text(sol.quantum_potential) + "\n";
    out += "ground energy E0    = " + format_number(sol.ground_energy) + "\n";
    out += "exponent S(r)       = " + polynomial_to_text(sol.exponent) + "  (psi = A exp(-S))\n";
    out += "normalization A     = " + (sol.normalization ? format_number(*sol.normalization) : std::string("unset")) + "\n";
    out += std::string("bound               = ") + (sol.bound ? "true" : "false") + "\n";
    return out;
}

inline std::string verify_text(const VerificationReport& report) {
    const auto line = [](const std::string& label, const auto& opt) {
        return label + (opt ? format_number(static_cast<double>(*opt)) : std::string("unset")) + "\n";
    };
    std::string out;
    out += "analytic E0      = " + format_number(report.analytic_E0) + "\n";
    out += line("numeric E0       = ", report.numeric_E0);
    out += line("|dE|             = ", report.abs_err);
    out += line("node count       = ", report.node_count);
    out += line("ode residual max = ", report.ode_residual_max);
    out += line("norm quadrature  = ", report.norm_quadrature);
    out += line("norm closed form = ", report.norm_closed_form);
    out += std::string("passed           = ") + (report.passed ? "true" : "false") + "\n";
    if (!report.reason.empty()) out += "reason           = " + report.reason + "\n";
    return out;
}

}  // namespace psdual
