// hookpoly: expansion, root solving, theta evaluation, asymptotic comparison,
// zero localization and plot emission for the partition-statistic polynomial
// families. Every subcommand writes a deterministic byte stream (stdout, or
// --out under the configured output directory).

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hookpoly/asymptotics.hpp"
#include "hookpoly/atfn.hpp"
#include "hookpoly/config.hpp"
#include "hookpoly/errors.hpp"
#include "hookpoly/json_io.hpp"
#include "hookpoly/partitions.hpp"
#include "hookpoly/qseries.hpp"
#include "hookpoly/roots.hpp"
#include "hookpoly/svgplot.hpp"
#include "hookpoly/theta.hpp"
#include "hookpoly/thetazeros.hpp"

using namespace hookpoly;

namespace {

// ---------------------------------------------------------------- plumbing

struct Shared {
    std::optional<std::string> config_path;
    std::optional<std::string> out_path;
    int jobs = 1;
    JobConfig cfg;

    void resolve() {
        cfg = resolve_config(config_path);
        if (jobs < 1) throw domain_error("--jobs must be at least 1");
    }
};

void write_output(const Shared& sh, const std::string& content) {
    if (!sh.out_path) {
        std::cout << content;
        return;
    }
    std::string path = *sh.out_path;
    if (!path.empty() && path[0] != '/' && sh.cfg.output_dir != ".")
        path = sh.cfg.output_dir + "/" + path;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw domain_error("cannot open output file " + path);
    out << content;
    if (!out) throw domain_error("failed writing output file " + path);
}

long parse_long(const std::string& s, const char* what) {
    std::size_t pos = 0;
    long v = 0;
    try {
        v = std::stol(s, &pos);
    } catch (const std::exception&) {
        throw domain_error(std::string("expected an integer for ") + what + ": " + s);
    }
    if (pos != s.size())
        throw domain_error(std::string("expected an integer for ") + what + ": " + s);
    return v;
}

// "start:stop:step" (inclusive of stop when on-grid) or a single integer
std::vector<long> parse_range(const std::string& s, const char* what) {
    std::vector<long> out;
    if (s.find(':') == std::string::npos) {
        out.push_back(parse_long(s, what));
        return out;
    }
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string piece;
    while (std::getline(ss, piece, ':')) parts.push_back(piece);
    if (parts.size() != 3)
        throw domain_error(std::string(what) + ": range syntax is start:stop:step, got " + s);
    long start = parse_long(parts[0], what), stop = parse_long(parts[1], what),
         step = parse_long(parts[2], what);
    if (step < 1) throw domain_error(std::string(what) + ": range step must be positive");
    if (stop < start) throw domain_error(std::string(what) + ": range stop is below start");
    for (long n = start; n <= stop; n += step) out.push_back(n);
    return out;
}

// "re" or "re,im" with exact rational components
Complex parse_complex(const std::string& s, mpfr_prec_t prec) {
    std::string re = s, im = "0";
    if (auto comma = s.find(','); comma != std::string::npos) {
        re = s.substr(0, comma);
        im = s.substr(comma + 1);
    }
    return Complex::of(parse_rational(re), parse_rational(im), prec);
}

ThetaForm parse_form(const std::string& s) {
    if (s == "lattice") return ThetaForm::lattice;
    if (s == "partition") return ThetaForm::partition;
    if (s == "roots-of-unity") return ThetaForm::roots_of_unity;
    throw domain_error("unknown theta form: " + s);
}

std::string records_json(const std::vector<PolyRecord>& recs) {
    if (recs.size() == 1) return poly_record_to_json(recs[0]);
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const PolyRecord& r : recs)
        arr.push_back(nlohmann::ordered_json::parse(poly_record_to_json(r)));
    return arr.dump(2) + "\n";
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw domain_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// ---------------------------------------------------------------- families

struct FamilyArgs {
    std::string family;
    long t = 0;
    std::string n;  // integer range, or a single rational for family=rr
    std::string a, b;
};

void check_family_flags(const FamilyArgs& fa) {
    const std::string& f = fa.family;
    if (f != "hook" && f != "parts" && f != "rr" && f != "tcore")
        throw domain_error("--family must be hook, parts, rr or tcore");
    bool needs_t = (f == "hook" || f == "tcore");
    if (needs_t && fa.t < 1) throw domain_error("--family " + f + " requires --t >= 1");
    if (!needs_t && fa.t != 0) throw domain_error("--t only applies to hook/tcore families");
    if (f == "rr") {
        if (fa.a.empty() || fa.b.empty()) throw domain_error("--family rr requires --a and --b");
    } else if (!fa.a.empty() || !fa.b.empty()) {
        throw domain_error("--a/--b only apply to the rr family");
    }
    if (fa.n.empty()) throw domain_error("--n is required");
}

std::vector<PolyRecord> expand_family(const FamilyArgs& fa, const JobConfig& cfg) {
    check_family_flags(fa);
    std::vector<PolyRecord> recs;
    const std::string& f = fa.family;

    if (f == "rr") {
        Rat a = parse_rational(fa.a), b = parse_rational(fa.b);
        std::vector<Rat> ns;
        if (fa.n.find(':') != std::string::npos) {
            for (long n : parse_range(fa.n, "--n")) ns.push_back(Rat(n));
        } else {
            ns.push_back(parse_rational(fa.n));
        }
        Rat nmax = ns.front();
        for (const Rat& n : ns) nmax = std::max(nmax, n);
        if (nmax > Rat(cfg.series_trunc))
            throw resource_limit_error("requested n exceeds series_trunc (" +
                                       std::to_string(cfg.series_trunc) + ")");
        PabExpansion fam = expand_pab(a, b, nmax);
        for (const Rat& n : ns)
            recs.push_back(PolyRecord{"rr", std::nullopt, a, b, n, fam.at(n)});
        return recs;
    }

    std::vector<long> ns = parse_range(fa.n, "--n");
    for (long n : ns)
        if (n < 0) throw domain_error("--n must be nonnegative");
    long nmax = ns.back();
    if (nmax > cfg.series_trunc)
        throw resource_limit_error("requested n exceeds series_trunc (" +
                                   std::to_string(cfg.series_trunc) + ")");
    unsigned t = static_cast<unsigned>(fa.t);

    if (f == "hook") {
        std::vector<WPoly> fam = expand_Ht(t, static_cast<unsigned>(nmax));
        for (long n : ns)
            recs.push_back(PolyRecord{"hook", t, std::nullopt, std::nullopt, Rat(n),
                                      fam[static_cast<std::size_t>(n)]});
    } else if (f == "parts") {
        std::vector<WPoly> fam = expand_Qn(static_cast<unsigned>(nmax));
        for (long n : ns)
            recs.push_back(PolyRecord{"parts", std::nullopt, std::nullopt, std::nullopt, Rat(n),
                                      fam[static_cast<std::size_t>(n)]});
    } else {  // tcore
        std::vector<Int> counts = expand_tcore(t, static_cast<unsigned>(nmax));
        for (long n : ns)
            recs.push_back(PolyRecord{"tcore", t, std::nullopt, std::nullopt, Rat(n),
                                      WPoly::constant(counts[static_cast<std::size_t>(n)])});
    }
    return recs;
}

WPoly roots_input_poly(const FamilyArgs& fa, const std::string& file, const std::string& inline_coeffs,
                       const JobConfig& cfg) {
    int sources = (!file.empty()) + (!fa.family.empty()) + (!inline_coeffs.empty());
    if (sources != 1)
        throw domain_error("choose exactly one input: --file, --family flags, or --poly");
    if (!file.empty()) {
        nlohmann::json j = nlohmann::json::parse(slurp(file), nullptr, false);
        if (j.is_array()) {
            if (j.size() != 1)
                throw domain_error("record file holds multiple polynomials; pick one");
            return poly_record_from_json(j[0].dump()).poly;
        }
        return poly_record_from_json(slurp(file)).poly;
    }
    if (!inline_coeffs.empty()) {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(inline_coeffs);
        } catch (const nlohmann::json::exception&) {
            throw domain_error("--poly expects a JSON array of integer coefficients");
        }
        if (!j.is_array()) throw domain_error("--poly expects a JSON array");
        WPoly p;
        unsigned k = 0;
        for (const auto& c : j) {
            Int v;
            if (c.is_number_integer())
                v = Int(c.get<long>());
            else if (c.is_string())
                v = Int(c.get<std::string>(), 10);
            else
                throw domain_error("--poly entries must be integers or decimal strings");
            if (v != 0) p.add_term(k, v);
            ++k;
        }
        return p;
    }
    std::vector<PolyRecord> recs = expand_family(fa, cfg);
    if (recs.size() != 1) throw domain_error("roots takes a single n, not a range");
    return recs[0].poly;
}

// ---------------------------------------------------------------- commands

int cmd_rr(const Shared& sh, int b, const std::string& nspec, double tol) {
    RootOptions ropt;
    ropt.start_prec = sh.cfg.prec();
    std::vector<long> ns = parse_range(nspec, "--n");
    std::string outstr;
    bool pass = true;
    if (ns.size() == 1) {
        RRClaimReport rep = rr_claim_check(b, ns[0], tol, ropt);
        pass = rep.pass;
        outstr = rr_report_to_json(rep);
    } else {
        if (ns.front() != 1 || ns[1] - ns[0] != 1)
            throw domain_error("rr scans run over every n; use --n 1:NMAX:1");
        RRScanReport rep = rr_claim_scan(b, ns.back(), tol, ropt, sh.jobs);
        pass = rep.pass;
        outstr = rr_scan_to_json(rep);
    }
    write_output(sh, outstr);
    return pass ? 0 : 1;
}

int cmd_compare(const Shared& sh, const std::string& regime, long t, long ell,
                const std::string& wstr, const std::string& nspec, double tol) {
    if (t < 1) throw domain_error("--t must be at least 1");
    Complex w = parse_complex(wstr, sh.cfg.prec());
    bool wlarge = w.modulus().cmp(1.0) > 0;
    std::string reg = regime;
    if (reg.empty()) reg = wlarge ? "large" : "small";
    if (reg != "large" && reg != "small")
        throw domain_error("--regime must be large or small");
    if (reg == "large" && !wlarge)
        throw domain_error("--regime large requires |w| > 1");
    if (reg == "small" && wlarge)
        throw domain_error("--regime small requires |w| <= 1");
    if (reg == "small" && t < 6)
        throw domain_error("--regime small requires t >= 6");

    RatioOptions opt;
    opt.prec = sh.cfg.prec();
    opt.at.w0 = sh.cfg.w0;
    if (tol > 0) opt.at_tol = tol;
    AsymptoticReport rep = ratio_report(static_cast<unsigned>(t), ell, w,
                                        parse_range(nspec, "--n"), opt);
    write_output(sh, compare_to_csv(rep));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"partition-statistic polynomial toolkit"};
    app.require_subcommand(1);
    app.fallthrough();
    Shared sh;
    app.add_option("--config", sh.config_path, "JSON config file (else $HOOKPOLY_CONFIG)");
    app.add_option("-o,--out", sh.out_path, "output file (default stdout)");
    app.add_option("--jobs", sh.jobs, "worker thread cap for per-n sweeps");

    // brute
    auto* cb = app.add_subcommand("brute", "enumerate partitions directly (oracle-scale n)");
    FamilyArgs bf;
    cb->add_option("--family", bf.family, "hook|parts")->required();
    cb->add_option("--t", bf.t, "hook modulus t");
    cb->add_option("--n", bf.n, "single n")->required();

    // expand
    auto* ce = app.add_subcommand("expand", "expand a polynomial family from its product");
    FamilyArgs ef;
    ce->add_option("--family", ef.family, "hook|parts|rr|tcore")->required();
    ce->add_option("--t", ef.t, "hook/tcore modulus t");
    ce->add_option("--n", ef.n, "n, range start:stop:step, or rational for rr")->required();
    ce->add_option("--a", ef.a, "rr deformation a (rational)");
    ce->add_option("--b", ef.b, "rr deformation b (rational)");

    // roots
    auto* cr = app.add_subcommand("roots", "solve a polynomial and certify the roots");
    FamilyArgs rf;
    std::string r_file, r_poly;
    double r_resid = 0;
    long r_maxprec = 0;
    cr->add_option("--file", r_file, "JSON polynomial record file");
    cr->add_option("--poly", r_poly, "inline JSON coefficient array, constant term first");
    cr->add_option("--family", rf.family, "hook|parts|rr|tcore");
    cr->add_option("--t", rf.t, "hook/tcore modulus t");
    cr->add_option("--n", rf.n, "single n (rational for rr)");
    cr->add_option("--a", rf.a, "rr deformation a");
    cr->add_option("--b", rf.b, "rr deformation b");
    cr->add_option("--resid", r_resid, "relative residual acceptance target");
    cr->add_option("--max-prec", r_maxprec, "precision escalation cap (bits)");

    // plot
    auto* cp = app.add_subcommand("plot", "scatter-plot a roots CSV as SVG");
    std::string p_in, p_title;
    double p_marker = 3.0;
    bool p_unit = false;
    std::optional<double> p_xmin, p_xmax, p_ymin, p_ymax, p_rmin, p_rmax;
    cp->add_option("--in", p_in, "roots CSV file")->required();
    cp->add_option("--title", p_title, "plot title");
    cp->add_option("--marker-radius", p_marker, "marker radius in pixels");
    cp->add_flag("--unit-circle", p_unit, "draw the unit-circle guide");
    cp->add_option("--xmin", p_xmin, "window bound");
    cp->add_option("--xmax", p_xmax, "window bound");
    cp->add_option("--ymin", p_ymin, "window bound");
    cp->add_option("--ymax", p_ymax, "window bound");
    cp->add_option("--rmin", p_rmin, "keep only |z| >= rmin");
    cp->add_option("--rmax", p_rmax, "keep only |z| <= rmax");

    // theta
    auto* ct = app.add_subcommand("theta", "evaluate the lattice theta function");
    long t_t = 0, t_ell = 0;
    std::string t_z, t_form = "partition";
    double t_tol = 1e-20;
    ct->add_option("--t", t_t, "modulus t")->required();
    ct->add_option("--ell", t_ell, "residue class")->required();
    ct->add_option("--z", t_z, "evaluation point re[,im], rational parts")->required();
    ct->add_option("--form", t_form, "lattice|partition|roots-of-unity");
    ct->add_option("--tol", t_tol, "target error bound");

    // theta-zeros
    auto* cz = app.add_subcommand("theta-zeros", "locate theta zeros in |z| <= 1/(1+eps)");
    long z_t = 0, z_ell = 0;
    double z_eps = 0;
    cz->add_option("--t", z_t, "modulus t")->required();
    cz->add_option("--ell", z_ell, "residue class")->required();
    cz->add_option("--eps", z_eps, "disc parameter (default: config eps)");

    // at
    auto* ca = app.add_subcommand("at", "evaluate the Kloosterman-type sum A_t(w,n)");
    long a_t = 0;
    std::string a_w = "0", a_n;
    double a_tol = 1e-3;
    ca->add_option("--t", a_t, "modulus t (>= 6)")->required();
    ca->add_option("--w", a_w, "deformation point re[,im], rational parts");
    ca->add_option("--n", a_n, "n or range start:stop:step")->required();
    ca->add_option("--tol", a_tol, "tail truncation target");

    // compare
    auto* cc = app.add_subcommand("compare", "exact polynomial modulus vs asymptotic main term");
    std::string c_regime, c_w, c_n;
    long c_t = 0, c_ell = 0;
    double c_tol = 0;
    cc->add_option("--regime", c_regime, "large|small (default: by |w|)");
    cc->add_option("--t", c_t, "modulus t")->required();
    cc->add_option("--ell", c_ell, "residue class (large regime)");
    cc->add_option("--w", c_w, "deformation point re[,im], rational parts")->required();
    cc->add_option("--n", c_n, "n or range start:stop:step")->required();
    cc->add_option("--tol", c_tol, "main-term truncation target (small regime)");

    // localize
    auto* cl = app.add_subcommand("localize", "classify polynomial zeros against the corollary");
    long l_t = 0, l_ell = 0, l_n = 0;
    double l_eps = 0, l_w0 = 0;
    cl->add_option("--t", l_t, "modulus t (>= 6)")->required();
    cl->add_option("--ell", l_ell, "residue class")->required();
    cl->add_option("--n", l_n, "polynomial index n")->required();
    cl->add_option("--eps", l_eps, "neighborhood width (default: config eps)");
    cl->add_option("--w0", l_w0, "annulus inner radius (default: config w0)");

    // rr
    auto* crr = app.add_subcommand("rr", "check the real-part bound for p_{1,b}(w;n)");
    int rr_b = 0;
    std::string rr_n;
    double rr_tol = 1e-8;
    crr->add_option("--b", rr_b, "offset b (0 or 1)")->required();
    crr->add_option("--n", rr_n, "single n or full scan 1:NMAX:1")->required();
    crr->add_option("--tol", rr_tol, "real-part acceptance bound");

    CLI11_PARSE(app, argc, argv);

    try {
        sh.resolve();

        if (app.got_subcommand(cb)) {
            if (bf.family != "hook" && bf.family != "parts")
                throw domain_error("brute supports --family hook|parts");
            if (bf.family == "hook" && bf.t < 1) throw domain_error("brute hook requires --t");
            long n = parse_long(bf.n, "--n");
            if (n < 0) throw domain_error("--n must be nonnegative");
            unsigned cap = static_cast<unsigned>(sh.cfg.enumeration_cap);
            PolyRecord rec;
            rec.n = Rat(n);
            if (bf.family == "hook") {
                rec.family = "hook";
                rec.t = static_cast<unsigned>(bf.t);
                rec.poly = brute_force_Pt(static_cast<unsigned>(bf.t),
                                          static_cast<unsigned>(n), cap);
            } else {
                rec.family = "parts";
                rec.poly = brute_force_Qn(static_cast<unsigned>(n), cap);
            }
            write_output(sh, poly_record_to_json(rec));
            return 0;
        }

        if (app.got_subcommand(ce)) {
            write_output(sh, records_json(expand_family(ef, sh.cfg)));
            return 0;
        }

        if (app.got_subcommand(cr)) {
            WPoly poly = roots_input_poly(rf, r_file, r_poly, sh.cfg);
            RootOptions opt;
            opt.start_prec = sh.cfg.prec();
            if (r_resid > 0) opt.target_resid = r_resid;
            if (r_maxprec > 0) opt.max_prec = static_cast<mpfr_prec_t>(r_maxprec);
            CertifiedRoots roots = solve_roots(poly, opt);
            write_output(sh, roots_to_csv(roots));
            return 0;
        }

        if (app.got_subcommand(cp)) {
            PlotSpec spec;
            spec.title = p_title;
            spec.marker_radius = p_marker;
            spec.unit_circle = p_unit;
            std::istringstream in(slurp(p_in));
            std::string line;
            while (std::getline(in, line)) {
                if (line.empty() || line[0] == '#' || line.rfind("re,", 0) == 0) continue;
                std::stringstream row(line);
                std::string re, im;
                if (!std::getline(row, re, ',') || !std::getline(row, im, ','))
                    throw domain_error("malformed roots CSV row: " + line);
                try {
                    spec.points.emplace_back(std::stod(re), std::stod(im));
                } catch (const std::exception&) {
                    throw domain_error("malformed roots CSV row: " + line);
                }
            }
            bool anybound = p_xmin || p_xmax || p_ymin || p_ymax;
            std::optional<PlotWindow> window;
            if (anybound) {
                if (!(p_xmin && p_xmax && p_ymin && p_ymax))
                    throw domain_error("window flags --xmin/--xmax/--ymin/--ymax come together");
                window = PlotWindow{*p_xmin, *p_xmax, *p_ymin, *p_ymax};
            }
            spec.points = filter_points(spec.points, window, p_rmin, p_rmax);
            spec.window = window;
            PlotResult res = render_svg(spec);
            if (res.empty) std::cerr << "warning: no points in the plot window\n";
            write_output(sh, res.svg);
            return 0;
        }

        if (app.got_subcommand(ct)) {
            if (t_t < 1 || t_ell < 0 || t_ell >= t_t)
                throw domain_error("need t >= 1 and 0 <= ell < t");
            ThetaSpec spec{static_cast<unsigned>(t_t), static_cast<unsigned>(t_ell)};
            ThetaForm form = parse_form(t_form);
            Complex z = parse_complex(t_z, sh.cfg.prec());
            Complex val = theta_eval(spec, z, t_tol, form);
            write_output(sh, theta_value_to_json(spec, z, val, form));
            return 0;
        }

        if (app.got_subcommand(cz)) {
            if (z_t < 1 || z_ell < 0 || z_ell >= z_t)
                throw domain_error("need t >= 1 and 0 <= ell < t");
            double eps = z_eps > 0 ? z_eps : sh.cfg.eps;
            DiscZeroOptions opt;
            opt.prec = sh.cfg.prec();
            DiscZeroReport rep =
                theta_zeros(ThetaSpec{static_cast<unsigned>(z_t), static_cast<unsigned>(z_ell)},
                            eps, opt);
            write_output(sh, disc_zeros_to_json(rep));
            return 0;
        }

        if (app.got_subcommand(ca)) {
            if (a_t < 1) throw domain_error("--t must be at least 1");
            Complex w = parse_complex(a_w, sh.cfg.prec());
            std::vector<long> ns = parse_range(a_n, "--n");
            AtOptions opt;
            opt.w0 = sh.cfg.w0;
            std::vector<Complex> vals =
                eval_At_batch(static_cast<unsigned>(a_t), w, ns, a_tol, sh.cfg.prec(), opt);
            if (ns.size() == 1) {
                write_output(sh, at_value_to_json(static_cast<unsigned>(a_t), w, ns[0], vals[0]));
            } else {
                nlohmann::ordered_json arr = nlohmann::ordered_json::array();
                for (std::size_t i = 0; i < ns.size(); ++i)
                    arr.push_back(nlohmann::ordered_json::parse(
                        at_value_to_json(static_cast<unsigned>(a_t), w, ns[i], vals[i])));
                write_output(sh, arr.dump(2) + "\n");
            }
            return 0;
        }

        if (app.got_subcommand(cc))
            return cmd_compare(sh, c_regime, c_t, c_ell, c_w, c_n, c_tol);

        if (app.got_subcommand(cl)) {
            if (l_t < 6) throw domain_error("localize requires t >= 6");
            double eps = l_eps > 0 ? l_eps : sh.cfg.eps;
            double w0 = l_w0 > 0 ? l_w0 : sh.cfg.w0;
            DiscZeroOptions zopt;
            zopt.prec = sh.cfg.prec();
            RootOptions ropt;
            ropt.start_prec = sh.cfg.prec();
            LocalizationVerdict v = zero_localization_check(
                static_cast<unsigned>(l_t), l_ell, l_n, eps, w0, zopt, ropt);
            write_output(sh, localization_to_json(v));
            return 0;
        }

        if (app.got_subcommand(crr)) return cmd_rr(sh, rr_b, rr_n, rr_tol);

        throw domain_error("no subcommand selected");
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const grid_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const resource_limit_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const convergence_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 5;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 6;
    }
}
