#include "commands.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <numbers>
#include <random>
#include <sstream>
#include <vector>

#include "menhir/calculus.hpp"
#include "menhir/error.hpp"
#include "menhir/golden.hpp"
#include "menhir/notation.hpp"
#include "menhir/oracle.hpp"
#include "menhir/reversions.hpp"
#include "menhir/verify.hpp"
#include "svg.hpp"

namespace menhir::cli {

namespace {

using json = nlohmann::ordered_json;

int exit_code_for(const Error& e) {
    switch (e.code()) {
        case ErrorCode::Superluminal: return exit_superluminal;
        case ErrorCode::Io: return exit_io;
        default: return exit_parse;
    }
}

int guarded(std::ostream& err, const std::function<int()>& body) {
    try {
        return body();
    } catch (const Error& e) {
        err << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_parse;
    }
}

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

Space resolve_space(const std::string& algebra, std::size_t dim, const std::string& sample) {
    const auto model = Space::parse_model(algebra);
    if (!model) throw Error(ErrorCode::Parse, "unknown algebra '" + algebra + "'");
    if (*model != Model::Clifford) return Space(*model);
    if (dim == 0) {
        const auto len = list_length(sample);
        if (!len || *len == 0) throw Error(ErrorCode::Parse, "clifford needs --dim or a bracketed vector");
        dim = *len;
    }
    return Space::clifford(dim);
}

Point to_point(const std::vector<double>& v) {
    return Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
}

std::vector<double> to_vector(const Point& p) { return {p.data(), p.data() + p.size()}; }

Velocity parse_velocity(const std::string& text, const Space& space) {
    return Velocity(parse_element(text, space));
}

Point velocity_point(const Velocity& v, const Space& space) { return to_point(space.extract(v.value())); }

struct Star {
    std::string label;
    Point at;
};

std::vector<Star> read_catalog(const std::string& path, std::size_t n) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::Io, "cannot open catalog '" + path + "'");
    std::vector<Star> stars;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos || line[line.find_first_not_of(" \t")] == '#') {
            continue;
        }
        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, ',')) {
            const auto b = field.find_first_not_of(" \t");
            const auto e = field.find_last_not_of(" \t");
            fields.push_back(b == std::string::npos ? "" : field.substr(b, e - b + 1));
        }
        auto parse_num = [](const std::string& s, double& x) {
            const auto r = std::from_chars(s.data(), s.data() + s.size(), x);
            return r.ec == std::errc() && r.ptr == s.data() + s.size() && !s.empty();
        };
        double probe = 0.0;
        Star star;
        std::size_t first = 0;
        if (!fields.empty() && !parse_num(fields[0], probe)) {
            star.label = fields[0];
            first = 1;
        }
        // A header is a leading row without any numeric component.
        const bool header = stars.empty() && first == 1 &&
                            std::none_of(fields.begin() + 1, fields.end(),
                                         [&](const std::string& f) { return parse_num(f, probe); });
        if (header) continue;
        if (fields.size() - first != n) {
            throw Error(ErrorCode::Parse, "catalog line " + std::to_string(line_no) + ": expected " +
                                              std::to_string(n) + " components");
        }
        star.at = Point(static_cast<Eigen::Index>(n));
        for (std::size_t i = 0; i < n; ++i) {
            if (!parse_num(fields[first + i], star.at(static_cast<Eigen::Index>(i)))) {
                throw Error(ErrorCode::Parse, "catalog line " + std::to_string(line_no) + ": bad number '" +
                                                  fields[first + i] + "'");
            }
        }
        const double norm = star.at.norm();
        if (!(norm > 0.0) || !std::isfinite(norm)) {
            throw Error(ErrorCode::Parse, "catalog line " + std::to_string(line_no) + ": zero direction");
        }
        star.at /= norm;
        if (star.label.empty()) star.label = "s" + std::to_string(stars.size());
        stars.push_back(std::move(star));
    }
    if (in.bad()) throw Error(ErrorCode::Io, "error reading catalog '" + path + "'");
    return stars;
}

void write_output(const std::string& path, const std::string& content, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << content;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error(ErrorCode::Io, "cannot open '" + path + "' for writing");
    f << content;
    if (!f) throw Error(ErrorCode::Io, "error writing '" + path + "'");
}

std::string columns(const char* prefix, std::size_t n) {
    std::string s;
    for (std::size_t i = 1; i <= n; ++i) s += std::string(",") + prefix + std::to_string(i);
    return s;
}

std::vector<Point> default_stars(std::size_t n, std::size_t count) {
    std::vector<Point> stars;
    if (n == 1) {
        for (std::size_t k = 0; k < count; ++k) stars.push_back(Point::Constant(1, k % 2 ? -1.0 : 1.0));
    } else if (n == 2) {
        for (std::size_t k = 0; k < count; ++k) {
            const double t = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(count);
            Point p(2);
            p << std::cos(t), std::sin(t);
            stars.push_back(p);
        }
    } else if (n == 3) {
        // Fibonacci lattice.
        for (std::size_t k = 0; k < count; ++k) {
            const double z = 1.0 - (2.0 * static_cast<double>(k) + 1.0) / static_cast<double>(count);
            const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
            const double t = 2.0 * std::numbers::pi * static_cast<double>(k) / (std::numbers::phi * std::numbers::phi);
            Point p(3);
            p << r * std::cos(t), r * std::sin(t), z;
            stars.push_back(p);
        }
    } else {
        std::mt19937_64 rng(0);
        std::normal_distribution<double> gauss;
        for (std::size_t k = 0; k < count; ++k) {
            Point p(static_cast<Eigen::Index>(n));
            for (Eigen::Index i = 0; i < p.size(); ++i) p(i) = gauss(rng);
            stars.push_back(p / p.norm());
        }
    }
    return stars;
}

}  // namespace

std::string schema_text() {
    return std::string("Output schema v") + schema_version +
           "\n"
           "  compose --format json  keys: menhir_v, menhir_w, composite_menhir, composite_velocity,\n"
           "                         speed, rotation {left, right, rho (real/complex), axis (imaginary\n"
           "                         quaternions)}, angle_rad\n"
           "  aberrate CSV           label,a1..an,b1..bn; --debug appends\n"
           "                         word_vs_moebius,word_vs_oracle,moebius_vs_oracle\n"
           "  starfield CSV          index,a1..an,b1..bn\n"
           "  goldenscan CSV         v,e,gap\n"
           "  verify --format json   keys: space, tier, seed, trials, tolerance, max_velocity_error,\n"
           "                         max_rotation_error, failures [{trial, seed, v, w, velocity_error,\n"
           "                         rotation_error}]\n"
           "Algebras: real (n=1), complex (n=2), imquaternion (n=3), quaternion (n=4), clifford (--dim n)\n"
           "Elements: 4/5, 3i/5, 4/5+9/25i, 0.5i-0.25k, [0.1,0.2,0.3]\n"
           "Exit codes: 0 ok, 1 verification failure, 2 parse or input error, 3 superluminal input,\n"
           "            4 I/O error, 5 unsupported render\n"
           "Environment: MENHIR_TOLERANCE overrides the comparison tolerance of verify only.\n";
}

int cmd_compose(const ComposeOptions& o, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        if (o.format != "text" && o.format != "json") throw Error(ErrorCode::Parse, "format must be text or json");
        const Space space = resolve_space(o.algebra, o.dim, o.v);
        const Velocity v = parse_velocity(o.v, space);
        const Velocity w = parse_velocity(o.w, space);
        const Menhir ev = menhir_of(v);
        const Menhir ew = menhir_of(w);
        const VelocityComposition c = compose_velocities(v, w);
        const double angle = c.rotation.angle(space);

        std::optional<AxisAngle> axis;
        const Element& a = ev.value();
        const Element& b = ew.value();
        if (!a.is_clifford() && a.division().kind() == DivisionKind::Quaternion && a.division()[0] == 0.0 &&
            b.division()[0] == 0.0) {
            axis = rotation_axis_angle(ev, ew);
        }

        json rot;
        rot["left"] = format_element(c.rotation.left);
        rot["right"] = format_element(c.rotation.right);
        if (const auto rho = c.rotation.rho()) rot["rho"] = format_element(*rho);
        if (axis) rot["axis"] = axis->axis_defined ? json(axis->axis) : json(nullptr);

        json doc;
        doc["menhir_v"] = format_element(ev.value());
        doc["menhir_w"] = format_element(ew.value());
        doc["composite_menhir"] = format_element(c.menhir.value());
        doc["composite_velocity"] = format_element(c.velocity.value());
        doc["speed"] = c.velocity.speed();
        doc["rotation"] = rot;
        doc["angle_rad"] = angle;

        if (o.format == "json") {
            out << doc.dump(2) << "\n";
            return int{exit_ok};
        }
        for (const char* key : {"menhir_v", "menhir_w", "composite_menhir", "composite_velocity"}) {
            out << key << ": " << doc[key].get<std::string>() << "\n";
        }
        out << "speed: " << num(c.velocity.speed()) << "\n";
        out << "rotation.left: " << rot["left"].get<std::string>() << "\n";
        out << "rotation.right: " << rot["right"].get<std::string>() << "\n";
        if (rot.contains("rho")) out << "rotation.rho: " << rot["rho"].get<std::string>() << "\n";
        if (axis) {
            out << "rotation.axis: ";
            if (axis->axis_defined) {
                out << num(axis->axis[0]) << "," << num(axis->axis[1]) << "," << num(axis->axis[2]) << "\n";
            } else {
                out << "undefined\n";
            }
        }
        out << "angle_rad: " << num(angle) << "\n";
        return int{exit_ok};
    });
}

int cmd_aberrate(const AberrateOptions& o, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const Space space = resolve_space(o.algebra, o.dim, o.v);
        const Velocity v = parse_velocity(o.v, space);
        const Menhir e = menhir_of(v);
        const Point vp = velocity_point(v, space);
        const std::size_t n = space.dimension();
        const auto stars = read_catalog(o.catalog, n);
        const MoebiusMatrix m = MoebiusMatrix::boost(e);
        const LorentzMatrix boost = boost_matrix(vp);

        std::string csv = "label" + columns("a", n) + columns("b", n);
        if (o.debug) csv += ",word_vs_moebius,word_vs_oracle,moebius_vs_oracle";
        csv += "\n";
        double worst = 0.0;
        for (const auto& star : stars) {
            const Point word = boost_star_shift(star.at, vp);
            csv += star.label;
            for (Eigen::Index i = 0; i < star.at.size(); ++i) csv += "," + num(star.at(i));
            for (Eigen::Index i = 0; i < word.size(); ++i) csv += "," + num(word(i));
            if (o.debug) {
                const Point moebius = to_point(space.extract(moebius_apply(m, space.embed(to_vector(star.at)))));
                const Point oracle = aberrate_ray(boost, star.at);
                const double d1 = (word - moebius).cwiseAbs().maxCoeff();
                const double d2 = (word - oracle).cwiseAbs().maxCoeff();
                const double d3 = (moebius - oracle).cwiseAbs().maxCoeff();
                worst = std::max({worst, d1, d2, d3});
                csv += "," + num(d1) + "," + num(d2) + "," + num(d3);
            }
            csv += "\n";
        }
        write_output(o.out, csv, out);
        if (o.debug) err << "max cross-discrepancy: " << num(worst) << "\n";
        return int{exit_ok};
    });
}

int cmd_starfield(const StarfieldOptions& o, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        if (o.format != "svg" && o.format != "csv") throw Error(ErrorCode::Parse, "format must be svg or csv");
        if (o.count < 2) throw Error(ErrorCode::Domain, "count must be at least 2");
        const Space space = resolve_space(o.algebra, o.dim, o.v);
        const std::size_t n = space.dimension();
        if (o.format == "svg" && n != 2) {
            err << "error: SVG rendering supports the plane only (n = 2, got n = " << n << "); use --format csv\n";
            return int{exit_unsupported_render};
        }
        const Point e = to_point(space.extract(menhir_of(parse_velocity(o.v, space)).value()));
        std::optional<Point> f;
        if (o.w) f = to_point(space.extract(menhir_of(parse_velocity(*o.w, space)).value()));
        const ReversionWord word = f ? two_boost_word(e, *f)
                                     : ReversionWord{ReversionPoint::origin(n), ReversionPoint(e)};

        const auto stars = default_stars(n, o.count);
        std::vector<Point> shifted;
        for (const auto& s : stars) shifted.push_back(apply_word(s, word));

        if (o.format == "csv") {
            std::string csv = "index" + columns("a", n) + columns("b", n) + "\n";
            for (std::size_t k = 0; k < stars.size(); ++k) {
                csv += std::to_string(k);
                for (Eigen::Index i = 0; i < stars[k].size(); ++i) csv += "," + num(stars[k](i));
                for (Eigen::Index i = 0; i < shifted[k].size(); ++i) csv += "," + num(shifted[k](i));
                csv += "\n";
            }
            write_output(o.out, csv, out);
            return int{exit_ok};
        }

        SvgCanvas svg;
        svg.cromlech();
        for (std::size_t k = 0; k < stars.size(); ++k) {
            svg.star(stars[k](0), stars[k](1), false);
            if ((stars[k] - shifted[k]).norm() > 1e-12) {
                svg.arrow(stars[k](0), stars[k](1), shifted[k](0), shifted[k](1));
            }
            svg.star(shifted[k](0), shifted[k](1), true);
        }
        svg.marker(0.0, 0.0, "origin", "o");
        svg.marker(e(0), e(1), "menhir", "e");
        if (f) {
            svg.marker((*f)(0), (*f)(1), "menhir", "f");
            for (const auto& p : planar_fixed_points(word)) svg.marker(p(0), p(1), "fixed-point", "");
        }
        write_output(o.out, svg.finish(), out);
        return int{exit_ok};
    });
}

int cmd_verify(const VerifyOptions& o, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        if (o.trials == 0) throw Error(ErrorCode::Domain, "trials must be at least 1");
        if (o.format != "text" && o.format != "json") throw Error(ErrorCode::Parse, "format must be text or json");
        Tier tier;
        if (o.tier == "normal") {
            tier = Tier::Normal;
        } else if (o.tier == "stress") {
            tier = Tier::Stress;
        } else {
            throw Error(ErrorCode::Parse, "tier must be normal or stress");
        }
        const auto model = Space::parse_model(o.algebra);
        if (!model) throw Error(ErrorCode::Parse, "unknown algebra '" + o.algebra + "'");
        const Space space = *model == Model::Clifford ? Space::clifford(o.dim == 0 ? 3 : o.dim) : Space(*model);

        double tolerance = default_tolerance(tier);
        if (const char* env = std::getenv("MENHIR_TOLERANCE")) {
            const std::string s(env);
            const auto r = std::from_chars(s.data(), s.data() + s.size(), tolerance);
            if (r.ec != std::errc() || r.ptr != s.data() + s.size() || !(tolerance > 0.0)) {
                throw Error(ErrorCode::Parse, "MENHIR_TOLERANCE must be a positive number, got '" + s + "'");
            }
        }

        const RunReport report = verify_oracle(space, o.trials, o.seed, tier, tolerance, o.threads);
        if (o.format == "json") {
            json doc;
            doc["space"] = report.space;
            doc["tier"] = to_string(report.tier);
            doc["seed"] = report.seed;
            doc["trials"] = report.trials;
            doc["tolerance"] = report.tolerance;
            doc["max_velocity_error"] = report.max_velocity_error;
            doc["max_rotation_error"] = report.max_rotation_error;
            json failures = json::array();
            for (const auto& f : report.failures) {
                failures.push_back({{"trial", f.trial},
                                    {"seed", f.seed},
                                    {"v", f.v},
                                    {"w", f.w},
                                    {"velocity_error", f.velocity_error},
                                    {"rotation_error", f.rotation_error}});
            }
            doc["failures"] = failures;
            out << doc.dump(2) << "\n";
        } else {
            out << "space: " << report.space << "\n"
                << "tier: " << to_string(report.tier) << "\n"
                << "seed: " << report.seed << "\n"
                << "trials: " << report.trials << "\n"
                << "tolerance: " << num(report.tolerance) << "\n"
                << "max_velocity_error: " << num(report.max_velocity_error) << "\n"
                << "max_rotation_error: " << num(report.max_rotation_error) << "\n"
                << "failures: " << report.failures.size() << "\n";
            for (const auto& f : report.failures) {
                out << "  trial " << f.trial << " seed " << f.seed << " velocity_error " << num(f.velocity_error)
                    << " rotation_error " << num(f.rotation_error) << "\n";
            }
        }
        return int{report.ok() ? exit_ok : exit_verify_failed};
    });
}

int cmd_goldenscan(const GoldenOptions& o, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const GoldenScan scan = golden_scan(o.steps);
        if (!o.csv.empty()) {
            std::string csv = "v,e,gap\n";
            for (const auto& s : scan.grid) csv += num(s.v) + "," + num(s.e) + "," + num(s.gap) + "\n";
            write_output(o.csv, csv, out);
        }
        std::ostream& report = o.csv == "-" ? err : out;
        report << "argmax: " << num(scan.argmax) << "\n"
               << "menhir_at_argmax: " << num(scan.menhir_at_argmax) << "\n"
               << "max_gap: " << num(scan.max_gap) << "\n"
               << "ratio: " << num(scan.ratio) << "\n";
        return int{exit_ok};
    });
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Relativistic velocity composition with menhirs, checked against Lorentz matrices"};
    app.footer(schema_text());
    app.require_subcommand(1);

    ComposeOptions compose;
    auto* c = app.add_subcommand("compose", "Compose two velocities (first v, then w)");
    c->add_option("-a,--algebra", compose.algebra, "real | complex | imquaternion | quaternion | clifford");
    c->add_option("-d,--dim", compose.dim, "Clifford dimension (default: length of the v list)");
    c->add_option("-v", compose.v, "First velocity")->required();
    c->add_option("-w", compose.w, "Second velocity")->required();
    c->add_option("-f,--format", compose.format, "text | json");

    AberrateOptions aberrate;
    auto* a = app.add_subcommand("aberrate", "Shift a star catalog under a boost");
    a->add_option("-a,--algebra", aberrate.algebra, "Algebra fixing the dimension");
    a->add_option("-d,--dim", aberrate.dim, "Clifford dimension");
    a->add_option("-v", aberrate.v, "Boost velocity")->required();
    a->add_option("-c,--catalog", aberrate.catalog, "CSV catalog: [label,]x1,...,xn per line")->required();
    a->add_option("-o,--out", aberrate.out, "Output CSV ('-' for stdout)")->required();
    a->add_flag("--debug", aberrate.debug, "Also compute the shift via the Moebius map and the Lorentz oracle");

    StarfieldOptions starfield;
    auto* s = app.add_subcommand("starfield", "Render stars before and after a boost");
    s->add_option("-a,--algebra", starfield.algebra, "Algebra fixing the dimension");
    s->add_option("-d,--dim", starfield.dim, "Clifford dimension");
    s->add_option("-v", starfield.v, "Boost velocity")->required();
    s->add_option("-w", starfield.w, "Second boost; renders the two-boost word and its fixed points");
    s->add_option("-n,--count", starfield.count, "Number of stars");
    s->add_option("-f,--format", starfield.format, "svg | csv");
    s->add_option("-o,--out", starfield.out, "Output file ('-' for stdout)");

    VerifyOptions verify;
    auto* v = app.add_subcommand("verify", "Check the menhir calculus against Lorentz matrices");
    v->add_option("-t,--trials", verify.trials, "Number of random velocity pairs");
    v->add_option("-s,--seed", verify.seed, "Master seed");
    v->add_option("-a,--algebra", verify.algebra, "Algebra");
    v->add_option("-d,--dim", verify.dim, "Clifford dimension (default 3)");
    v->add_option("--tier", verify.tier, "normal (|v| <= 0.95, tol 1e-9) | stress (|v| <= 1-1e-6, tol 1e-6)");
    v->add_option("-j,--threads", verify.threads, "Worker threads (0 = all cores)");
    v->add_option("-f,--format", verify.format, "text | json");

    GoldenOptions golden;
    auto* g = app.add_subcommand("goldenscan", "Locate the largest gap between speed and menhir");
    g->add_option("-n,--steps", golden.steps, "Grid intervals (>= 100)");
    g->add_option("--csv", golden.csv, "Write the grid as CSV ('-' for stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? int{exit_ok} : int{exit_parse};
    }
    if (c->parsed()) return cmd_compose(compose, out, err);
    if (a->parsed()) return cmd_aberrate(aberrate, out, err);
    if (s->parsed()) return cmd_starfield(starfield, out, err);
    if (v->parsed()) return cmd_verify(verify, out, err);
    return cmd_goldenscan(golden, out, err);
}

}  // namespace menhir::cli
