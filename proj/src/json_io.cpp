#include "hookpoly/json_io.hpp"

#include <cctype>
#include <cstdio>
#include <sstream>

#include "json.hpp"

#include "hookpoly/errors.hpp"

namespace hookpoly {

namespace {

std::string fmt_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

nlohmann::ordered_json complex_obj(const Complex& z) {
    nlohmann::ordered_json j;
    j["re"] = z.re.str();
    j["im"] = z.im.str();
    return j;
}

nlohmann::ordered_json complex_list(const std::vector<Complex>& zs) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const Complex& z : zs) arr.push_back(complex_obj(z));
    return arr;
}

const char* form_name(ThetaForm form) {
    switch (form) {
        case ThetaForm::lattice: return "lattice";
        case ThetaForm::partition: return "partition";
        case ThetaForm::roots_of_unity: return "roots-of-unity";
    }
    return "?";
}

} // namespace

std::string rational_str(const Rat& q) { return q.get_str(); }

Rat parse_rational(const std::string& text) {
    if (text.empty()) throw domain_error("expected a rational like 3 or 5/7, got an empty string");
    for (char ch : text)
        if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '/' || ch == '-' ||
              ch == '+'))
            throw domain_error("expected a rational like 3 or 5/7 (decimals are not accepted): " +
                               text);
    Rat q;
    if (q.set_str(text, 10) != 0)
        throw domain_error("expected a rational like 3 or 5/7: " + text);
    if (q.get_den() == 0) throw domain_error("zero denominator in rational: " + text);
    q.canonicalize();
    return q;
}

std::string poly_record_to_json(const PolyRecord& rec) {
    nlohmann::ordered_json j;
    j["family"] = rec.family;
    if (rec.t)
        j["t"] = *rec.t;
    else
        j["t"] = nullptr;
    j["a"] = rec.a ? nlohmann::ordered_json(rational_str(*rec.a)) : nlohmann::ordered_json(nullptr);
    j["b"] = rec.b ? nlohmann::ordered_json(rational_str(*rec.b)) : nlohmann::ordered_json(nullptr);
    j["n"] = rational_str(rec.n);
    nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
    if (!rec.poly.is_zero()) {
        unsigned d = *rec.poly.degree();
        for (unsigned k = 0; k <= d; ++k) coeffs.push_back(rec.poly.coeff(k).get_str());
    }
    j["coeffs"] = std::move(coeffs);
    return j.dump(2) + "\n";
}

PolyRecord poly_record_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw domain_error(std::string("polynomial record: invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("family") || !j.contains("n") || !j.contains("coeffs"))
        throw domain_error("polynomial record: need family, n and coeffs fields");

    PolyRecord rec;
    rec.family = j["family"].get<std::string>();
    if (rec.family != "hook" && rec.family != "parts" && rec.family != "rr" &&
        rec.family != "tcore")
        throw domain_error("polynomial record: unknown family " + rec.family);
    if (j.contains("t") && !j["t"].is_null()) rec.t = j["t"].get<unsigned>();
    if (j.contains("a") && !j["a"].is_null()) rec.a = parse_rational(j["a"].get<std::string>());
    if (j.contains("b") && !j["b"].is_null()) rec.b = parse_rational(j["b"].get<std::string>());
    rec.n = parse_rational(j["n"].get<std::string>());
    if (!j["coeffs"].is_array()) throw domain_error("polynomial record: coeffs must be an array");
    unsigned k = 0;
    for (const auto& c : j["coeffs"]) {
        Int v;
        try {
            v = Int(c.get<std::string>(), 10);
        } catch (const std::exception&) {
            throw domain_error("polynomial record: coefficient is not a decimal integer");
        }
        if (v != 0) rec.poly.add_term(k, v);
        ++k;
    }
    return rec;
}

std::string roots_to_csv(const CertifiedRoots& roots) {
    std::ostringstream out;
    out << "# roots=" << roots.roots.size() << " zeros_at_origin=" << roots.zeros_at_origin
        << " disks_disjoint=" << (roots.disks_disjoint ? 1 : 0)
        << " final_prec=" << roots.final_prec << "\n";
    out << "re,im,residual\n";
    for (std::size_t i = 0; i < roots.roots.size(); ++i)
        out << roots.roots[i].re.str() << "," << roots.roots[i].im.str() << ","
            << fmt_double(roots.residuals[i]) << "\n";
    return out.str();
}

std::string compare_to_csv(const AsymptoticReport& rep) {
    std::ostringstream out;
    out << "n,exact_modulus,main_modulus,ratio\n";
    for (const AsymptoticEntry& e : rep.entries)
        out << e.n << "," << e.exact_modulus.str() << "," << e.main_modulus.str() << ","
            << e.ratio.str() << "\n";
    return out.str();
}

std::string localization_to_json(const LocalizationVerdict& v) {
    nlohmann::ordered_json j;
    j["n"] = v.n;
    j["t"] = v.t;
    j["ell"] = v.ell;
    j["eps"] = fmt_double(v.eps);
    j["w0"] = fmt_double(v.w0);
    j["zeros_at_origin"] = v.zeros_at_origin;
    j["annulus_roots"] = complex_list(v.annulus_roots);
    j["theta_neighborhood_roots"] = complex_list(v.theta_neighborhood_roots);
    j["violations"] = complex_list(v.violations);
    return j.dump(2) + "\n";
}

std::string disc_zeros_to_json(const DiscZeroReport& rep) {
    nlohmann::ordered_json j;
    j["t"] = rep.spec.t;
    j["ell"] = rep.spec.ell;
    j["radius"] = fmt_double(rep.radius);
    j["count"] = rep.count;
    j["disc_zeros"] = complex_list(rep.disc_zeros);
    j["zeros"] = complex_list(rep.zeros);
    return j.dump(2) + "\n";
}

std::string theta_value_to_json(const ThetaSpec& spec, const Complex& z, const Complex& value,
                                ThetaForm form) {
    nlohmann::ordered_json j;
    j["t"] = spec.t;
    j["ell"] = spec.ell;
    j["z"] = complex_obj(z);
    j["value"] = complex_obj(value);
    j["err"] = value.err.str();
    j["form"] = form_name(form);
    return j.dump(2) + "\n";
}

std::string at_value_to_json(unsigned t, const Complex& w, long n, const Complex& value) {
    nlohmann::ordered_json j;
    j["t"] = t;
    j["n"] = n;
    j["w"] = complex_obj(w);
    j["value"] = complex_obj(value);
    j["err"] = value.err.str();
    return j.dump(2) + "\n";
}

std::string rr_report_to_json(const RRClaimReport& rep) {
    nlohmann::ordered_json j;
    j["b"] = rep.b;
    j["n"] = rep.n;
    j["pass"] = rep.pass;
    j["trivial"] = rep.trivial;
    j["max_re"] = fmt_double(rep.max_re);
    j["max_abs_im"] = fmt_double(rep.max_abs_im);
    if (!rep.trivial) j["worst_root"] = complex_obj(rep.worst);
    j["vieta_dev"] = fmt_double(rep.vieta_dev);
    j["recon_dev"] = fmt_double(rep.recon_dev);
    return j.dump(2) + "\n";
}

std::string rr_scan_to_json(const RRScanReport& rep) {
    nlohmann::ordered_json j;
    j["b"] = rep.b;
    j["nmax"] = rep.nmax;
    j["pass"] = rep.pass;
    j["solved"] = rep.solved;
    j["worst_n"] = rep.worst_n;
    j["worst_re"] = fmt_double(rep.worst_re);
    j["max_abs_im"] = fmt_double(rep.max_abs_im);
    j["worst_vieta"] = fmt_double(rep.worst_vieta);
    j["worst_recon"] = fmt_double(rep.worst_recon);
    return j.dump(2) + "\n";
}

} // namespace hookpoly
