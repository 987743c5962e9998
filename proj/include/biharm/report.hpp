#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "biharm/bounds.hpp"
#include "biharm/landau.hpp"
#include "biharm/lipschitz.hpp"

namespace biharm::report {

enum class Format { text, csv, structured };

/// Parses "text" / "csv" / "structured"; throws DomainError otherwise.
Format parse_format(const std::string& name);
const char* format_name(Format fmt);

/// Renders a double with enough digits (17 significant) that parsing the
/// string recovers the exact same value.
std::string number(double v);

/// Point-evaluation tables produced by the solve/grad front ends.
struct SolveSample {
    Complex z;
    Complex f;
};
struct GradSample {
    Complex z;
    solver::GradResult grad;
};

void emit(const bounds::BoundReport& rep, Format fmt, std::ostream& out);
void emit(const bounds::SchwarzReport& rep, Format fmt, std::ostream& out);
void emit(const landau::LandauResult& rep, Format fmt, std::ostream& out);
void emit(const landau::AaRadii& rep, Format fmt, std::ostream& out);
void emit(const lipschitz::LipschitzReport& rep, Format fmt, std::ostream& out);
void emit(const std::vector<SolveSample>& rows, Format fmt, std::ostream& out);
void emit(const std::vector<GradSample>& rows, Format fmt, std::ostream& out);

/// Parse-backs for the machine formats (round-trip partners of emit).  The
/// csv form carries the per-sample rows; summary fields are recomputed the
/// same way the verifier computes them.  The structured form restores every
/// field verbatim.  Both throw ParseError on malformed input.
bounds::BoundReport parse_bound_csv(std::istream& in, bounds::BoundId id);
bounds::BoundReport parse_bound_structured(std::istream& in);
bounds::SchwarzReport parse_schwarz_structured(std::istream& in);
landau::LandauResult parse_landau_structured(std::istream& in);
lipschitz::LipschitzReport parse_lipschitz_structured(std::istream& in);

}  // namespace biharm::report
