#pragma once

// Machine-readable output formats for the CLI: the JSON polynomial record,
// roots/compare CSVs, and JSON views of the report structures. Every numeric
// field is a decimal string (exact for integers and rationals, full working
// precision for reals) so outputs are byte-stable goldens.

#include <optional>
#include <string>

#include "hookpoly/asymptotics.hpp"
#include "hookpoly/prec.hpp"
#include "hookpoly/roots.hpp"
#include "hookpoly/theta.hpp"
#include "hookpoly/thetazeros.hpp"
#include "hookpoly/wpoly.hpp"

namespace hookpoly {

// {"family": "hook"|"parts"|"rr"|"tcore", "t": int|null, "a": "p/q"|null,
//  "b": "p/q"|null, "n": "p/q", "coeffs": [decimal-string, ...]}
struct PolyRecord {
    std::string family;
    std::optional<unsigned> t;
    std::optional<Rat> a, b;
    Rat n;
    WPoly poly;
};

std::string poly_record_to_json(const PolyRecord& rec);
PolyRecord poly_record_from_json(const std::string& text);

// "p/q" (or plain "p") -> exact rational; decimals are rejected
Rat parse_rational(const std::string& text);
std::string rational_str(const Rat& q);

// header comment carries the degree / origin-multiplicity metadata
std::string roots_to_csv(const CertifiedRoots& roots);

std::string compare_to_csv(const AsymptoticReport& rep);

std::string localization_to_json(const LocalizationVerdict& v);

std::string disc_zeros_to_json(const DiscZeroReport& rep);

std::string theta_value_to_json(const ThetaSpec& spec, const Complex& z, const Complex& value,
                                ThetaForm form);

std::string at_value_to_json(unsigned t, const Complex& w, long n, const Complex& value);

std::string rr_report_to_json(const RRClaimReport& rep);
std::string rr_scan_to_json(const RRScanReport& rep);

} // namespace hookpoly
