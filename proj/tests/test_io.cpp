#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>

#include "hookpoly/config.hpp"
#include "hookpoly/json_io.hpp"
#include "hookpoly/qseries.hpp"
#include "hookpoly/svgplot.hpp"

using namespace hookpoly;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name, const std::string& content)
        : path("io_test_" + name) {
        std::ofstream out(path);
        out << content;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

size_t count_occurrences(const std::string& hay, const std::string& needle) {
    size_t n = 0, pos = 0;
    while ((pos = hay.find(needle, pos)) != std::string::npos) {
        ++n;
        pos += needle.size();
    }
    return n;
}

}  // namespace

TEST_CASE("config round-trips through its JSON form") {
    JobConfig cfg;
    cfg.precision_bits = 256;
    cfg.default_tol = 1e-25;
    cfg.w0 = 0.03;
    cfg.output_dir = "out";
    JobConfig back = parse_config_json(config_to_json(cfg));
    CHECK(back.precision_bits == 256);
    CHECK(back.default_tol == 1e-25);
    CHECK(back.w0 == 0.03);
    CHECK(back.output_dir == "out");
    CHECK(back.enumeration_cap == cfg.enumeration_cap);
    // emission is deterministic
    CHECK(config_to_json(cfg) == config_to_json(back));
}

TEST_CASE("config validation refuses broken values and unknown keys") {
    CHECK_THROWS_AS(parse_config_json(R"({"precision_bits": 32})"), domain_error);
    CHECK_THROWS_AS(parse_config_json(R"({"default_tol": 0})"), domain_error);
    CHECK_THROWS_AS(parse_config_json(R"({"precison_bits": 128})"), domain_error);
    CHECK_THROWS_AS(parse_config_json("not json"), domain_error);
    JobConfig cfg;
    cfg.series_trunc = -5;
    CHECK_THROWS_AS(validate_config(cfg), domain_error);
}

TEST_CASE("config resolution: explicit path beats environment beats defaults") {
    TempFile from_cli("cli.json", R"({"precision_bits": 192})");
    TempFile from_env("env.json", R"({"precision_bits": 320})");

    unsetenv(kConfigEnvVar);
    CHECK(resolve_config(std::nullopt).precision_bits == 128);

    setenv(kConfigEnvVar, from_env.path.c_str(), 1);
    CHECK(resolve_config(std::nullopt).precision_bits == 320);
    CHECK(resolve_config(from_cli.path).precision_bits == 192);
    unsetenv(kConfigEnvVar);

    CHECK_THROWS_AS(load_config_file("does_not_exist.json"), error);
}

TEST_CASE("rational parsing is exact and rejects decimals") {
    CHECK(parse_rational("3/4") == Rat(3, 4));
    CHECK(parse_rational("-7") == Rat(-7));
    CHECK(parse_rational("7114/21") == Rat(7114, 21));
    CHECK(rational_str(parse_rational("-22/7")) == "-22/7");
    CHECK(rational_str(Rat(5)) == "5");
    // canonical form comes out of the parse
    CHECK(parse_rational("4/6") == Rat(2, 3));
    CHECK_THROWS_AS(parse_rational("0.5"), domain_error);
    CHECK_THROWS_AS(parse_rational("1e3"), domain_error);
    CHECK_THROWS_AS(parse_rational("1/0"), domain_error);
    CHECK_THROWS_AS(parse_rational(""), domain_error);
    CHECK_THROWS_AS(parse_rational("x"), domain_error);
}

TEST_CASE("polynomial records round-trip with exact coefficients") {
    auto ht = expand_Ht(7, 45);
    PolyRecord rec;
    rec.family = "hook";
    rec.t = 7;
    rec.n = Rat(45);
    rec.poly = ht[45];
    std::string text = poly_record_to_json(rec);
    PolyRecord back = poly_record_from_json(text);
    CHECK(back.family == "hook");
    REQUIRE(back.t.has_value());
    CHECK(*back.t == 7);
    CHECK(back.n == Rat(45));
    CHECK(back.poly == rec.poly);
    CHECK(poly_record_to_json(back) == text);

    PolyRecord rr;
    rr.family = "rr";
    rr.a = Rat(1, 3);
    rr.b = Rat(2, 7);
    rr.n = Rat(7114, 21);
    rr.poly = WPoly::monomial(4450838, 5);
    PolyRecord rr_back = poly_record_from_json(poly_record_to_json(rr));
    CHECK(*rr_back.a == Rat(1, 3));
    CHECK(*rr_back.b == Rat(2, 7));
    CHECK(rr_back.poly == rr.poly);

    CHECK_THROWS_AS(poly_record_from_json(R"({"family":"bogus","n":"1","coeffs":["1"]})"),
                    domain_error);
    CHECK_THROWS(poly_record_from_json(R"({"family":"hook"})"));
}

TEST_CASE("roots CSV carries the certification metadata") {
    auto r = solve_roots(std::vector<Int>{0, 0, -1, 0, 1});  // w^2 (w^2 - 1)
    std::string csv = roots_to_csv(r);
    CHECK(csv.rfind("# roots=4 zeros_at_origin=2 disks_disjoint=1", 0) == 0);
    CHECK(csv.find("re,im,residual\n") != std::string::npos);
    CHECK(count_occurrences(csv, "\n") == 6);  // header, columns, 4 rows
    // emission is deterministic
    CHECK(roots_to_csv(r) == csv);
}

TEST_CASE("comparison CSV pins its column order") {
    AsymptoticReport rep;
    rep.t = 1;
    rep.entries.push_back(
        {50, Real::of(2L, 64), Real::of(4L, 64), Real::of(Rat(1, 2), 64)});
    std::string csv = compare_to_csv(rep);
    CHECK(csv.rfind("n,exact_modulus,main_modulus,ratio\n", 0) == 0);
    CHECK(csv.find("50,2") != std::string::npos);
}

TEST_CASE("report JSON views expose their fields") {
    LocalizationVerdict v;
    v.n = 12;
    v.t = 7;
    v.ell = 5;
    v.eps = 0.5;
    v.w0 = 0.01;
    v.annulus_roots.push_back(Complex(64));
    std::string j = localization_to_json(v);
    CHECK(j.find("\"annulus_roots\"") != std::string::npos);
    CHECK(j.find("\"violations\"") != std::string::npos);
    CHECK(j.find("\"n\": 12") != std::string::npos);

    RRClaimReport rep;
    rep.b = 1;
    rep.n = 4;
    rep.pass = true;
    std::string rj = rr_report_to_json(rep);
    CHECK(rj.find("\"pass\": true") != std::string::npos);
}

TEST_CASE("scatter plots are deterministic and escape their title") {
    PlotSpec spec;
    spec.points = {{0.5, 0.5}, {-0.25, 0.75}, {1.5, -0.5}};
    spec.title = "roots & <bounds>";
    spec.unit_circle = true;
    PlotResult a = render_svg(spec);
    PlotResult b = render_svg(spec);
    CHECK(a.svg == b.svg);
    CHECK(a.plotted == 3);
    CHECK_FALSE(a.empty);
    // one marker element per point; the unit circle is drawn as an ellipse
    CHECK(count_occurrences(a.svg, "<circle") == 3);
    CHECK(count_occurrences(a.svg, "<ellipse") == 1);
    CHECK(a.svg.find("roots &amp; &lt;bounds&gt;") != std::string::npos);
    CHECK(a.svg.find("<svg") != std::string::npos);
}

TEST_CASE("plot windows clip and can empty out") {
    PlotSpec spec;
    spec.points = {{5.0, 5.0}};
    spec.window = PlotWindow{-1, 1, -1, 1};
    PlotResult r = render_svg(spec);
    CHECK(r.empty);
    CHECK(r.plotted == 0);
    CHECK(r.svg.find("no points in window") != std::string::npos);

    PlotSpec bad;
    bad.points = {{std::nan(""), 0.0}};
    CHECK_THROWS_AS(render_svg(bad), domain_error);
    PlotSpec rad;
    rad.points = {{0.0, 0.0}};
    rad.marker_radius = 0;
    CHECK_THROWS_AS(render_svg(rad), domain_error);
    PlotSpec win;
    win.points = {{0.0, 0.0}};
    win.window = PlotWindow{1, -1, 0, 2};
    CHECK_THROWS_AS(render_svg(win), domain_error);
}

TEST_CASE("point filters apply window and modulus bands") {
    std::vector<std::pair<double, double>> pts = {{0.1, 0.0}, {1.0, 1.0}, {3.0, 0.0}};
    auto banded = filter_points(pts, std::nullopt, 0.5, 2.0);
    REQUIRE(banded.size() == 1);
    CHECK(banded[0].first == 1.0);
    auto windowed = filter_points(pts, PlotWindow{0, 2, -1, 2}, std::nullopt, std::nullopt);
    CHECK(windowed.size() == 2);
}
