#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <regex>
#include <sstream>

#include "commands.hpp"
#include "menhir/calculus.hpp"
#include "menhir/notation.hpp"

using namespace menhir;
using json = nlohmann::ordered_json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "menhir");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / "menhir_cli_tests";
    std::filesystem::create_directories(dir);
    return dir / name;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::vector<std::string>> read_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) {
        std::vector<std::string> row;
        std::stringstream ls(line);
        std::string field;
        while (std::getline(ls, field, ',')) row.push_back(field);
        rows.push_back(row);
    }
    return rows;
}

std::string twelve_star_catalog() {
    std::string csv = "label,x,y\n";
    for (int k = 0; k < 12; ++k) {
        const double t = 2 * M_PI * k / 12;
        csv += "star" + std::to_string(k) + "," + std::to_string(2 * std::cos(t)) + "," + std::to_string(2 * std::sin(t)) +
               "\n";
    }
    return csv;
}

}  // namespace

TEST_CASE("compose: worked example as JSON") {
    const auto r = run_cli({"compose", "-a", "complex", "-v", "4/5", "-w", "3i/5", "--format", "json"});
    REQUIRE(r.code == 0);
    const json doc = json::parse(r.out);
    std::vector<std::string> keys;
    for (const auto& item : doc.items()) keys.push_back(item.key());
    CHECK(keys == std::vector<std::string>{"menhir_v", "menhir_w", "composite_menhir", "composite_velocity", "speed",
                                           "rotation", "angle_rad"});
    CHECK(doc["menhir_v"] == "1/2");
    CHECK(doc["menhir_w"] == "1/3i");
    CHECK(doc["composite_menhir"] == "20/37+9/37i");
    CHECK(doc["composite_velocity"] == "4/5+9/25i");
    CHECK(doc["rotation"]["rho"] == "35/37+12/37i");
    CHECK(doc["speed"].get<double>() == doctest::Approx(std::sqrt(481.0) / 25).epsilon(1e-15));
    CHECK(doc["angle_rad"].get<double>() == doctest::Approx(0.3303).epsilon(1e-4));
}

TEST_CASE("compose: real and quaternion inputs") {
    const auto r = run_cli({"compose", "-a", "real", "-v", "0.5", "-w", "0.5"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("composite_velocity: 4/5\n") != std::string::npos);
    CHECK(r.out.find("angle_rad: 0\n") != std::string::npos);

    const auto q = run_cli({"compose", "-a", "quaternion", "-v", "0.5i", "-w", "0.5j", "-f", "json"});
    REQUIRE(q.code == 0);
    const json doc = json::parse(q.out);
    REQUIRE(doc["rotation"].contains("axis"));
    CHECK(doc["rotation"]["axis"][2].get<double>() == doctest::Approx(-1.0));
    const Velocity v(DivisionScalar::quaternion(0, 0.5, 0, 0)), w(DivisionScalar::quaternion(0, 0, 0.5, 0));
    const auto c = compose_velocities(v, w);
    CHECK(doc["angle_rad"].get<double>() == doctest::Approx(c.rotation.angle(Space::quaternion())).epsilon(1e-12));

    const auto cl = run_cli({"compose", "-a", "clifford", "-v", "[0.8,0]", "-w", "[0,0.6]"});
    REQUIRE(cl.code == 0);
    CHECK(cl.out.find("composite_velocity: [4/5,9/25]") != std::string::npos);
}

TEST_CASE("compose: emitted velocity re-feeds to the same menhir") {
    for (const auto& [alg, v, w] : std::vector<std::tuple<std::string, std::string, std::string>>{
             {"complex", "0.31-0.4i", "0.2+0.77i"},
             {"quaternion", "0.1+0.2i-0.3j+0.4k", "-0.5j+0.1k"},
             {"clifford", "[0.1,0.2,-0.3,0.5]", "[-0.6,0.1,0.2,0]"}}) {
        const auto r = run_cli({"compose", "-a", alg, "-v", v, "-w", w, "-f", "json"});
        REQUIRE(r.code == 0);
        const json doc = json::parse(r.out);
        const Space space = alg == "complex"      ? Space::complex()
                            : alg == "quaternion" ? Space::quaternion()
                                                  : Space::clifford(4);
        const Element menhir = parse_element(doc["composite_menhir"].get<std::string>(), space);
        const Element refed = menhir_of(Velocity(parse_element(doc["composite_velocity"].get<std::string>(), space))).value();
        CHECK(max_abs_diff(menhir, refed) < 1e-12);
    }
}

TEST_CASE("exit codes") {
    CHECK(run_cli({"compose", "-v", "4/x", "-w", "0"}).code == 2);
    CHECK(run_cli({"compose", "-a", "octonion", "-v", "0", "-w", "0"}).code == 2);
    CHECK(run_cli({"compose", "-v", "1", "-w", "0"}).code == 3);
    CHECK(run_cli({"compose", "-v", "3/5+4/5i", "-w", "0"}).code == 3);
    CHECK(run_cli({"compose", "-v", "0.5"}).code == 2);
    CHECK(run_cli({"aberrate", "-v", "0.5", "-c", "/nonexistent/catalog.csv", "-o", "-"}).code == 4);
    CHECK(run_cli({"starfield", "-a", "imquaternion", "-v", "0.5i", "-f", "svg"}).code == 5);
    CHECK(run_cli({"starfield", "-a", "imquaternion", "-v", "0.5i", "-f", "csv"}).code == 0);
    CHECK(run_cli({"verify", "-t", "0"}).code == 2);
    CHECK(run_cli({"goldenscan", "-n", "10"}).code == 2);
    const auto help = run_cli({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("Output schema v1") != std::string::npos);
    CHECK(help.out.find("composite_velocity") != std::string::npos);
}

TEST_CASE("verify: reports, determinism and the tolerance override") {
    const auto a = run_cli({"verify", "-t", "1000", "-s", "42", "-a", "complex", "-j", "1"});
    const auto b = run_cli({"verify", "-t", "1000", "-s", "42", "-a", "complex", "-j", "3"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("failures: 0\n") != std::string::npos);

    const auto stress = run_cli({"verify", "-t", "200", "--tier", "stress", "-a", "clifford", "-d", "4", "-f", "json"});
    CHECK(stress.code == 0);
    CHECK(json::parse(stress.out)["tolerance"].get<double>() == 1e-6);

    setenv("MENHIR_TOLERANCE", "1e-30", 1);
    const auto strict = run_cli({"verify", "-t", "20", "-s", "3", "-f", "json"});
    unsetenv("MENHIR_TOLERANCE");
    CHECK(strict.code == 1);
    const json doc = json::parse(strict.out);
    REQUIRE(!doc["failures"].empty());
    CHECK(doc["failures"][0]["seed"].get<std::uint64_t>() == (3u ^ doc["failures"][0]["trial"].get<std::uint64_t>()));

    setenv("MENHIR_TOLERANCE", "loose", 1);
    CHECK(run_cli({"verify", "-t", "5"}).code == 2);
    unsetenv("MENHIR_TOLERANCE");
}

TEST_CASE("aberrate: catalog round trip and the axis projection law") {
    const auto catalog = scratch("twelve.csv");
    std::ofstream(catalog) << twelve_star_catalog();
    const auto out = scratch("twelve_out.csv");

    const auto still = run_cli({"aberrate", "-v", "0", "-c", catalog.string(), "-o", out.string()});
    REQUIRE(still.code == 0);
    auto rows = read_csv(slurp(out));
    REQUIRE(rows.size() == 13);
    CHECK(rows[0] == std::vector<std::string>{"label", "a1", "a2", "b1", "b2"});
    for (std::size_t k = 1; k < rows.size(); ++k) {
        CHECK(std::stod(rows[k][1]) == std::stod(rows[k][3]));
        CHECK(std::stod(rows[k][2]) == std::stod(rows[k][4]));
    }

    const auto moved = run_cli({"aberrate", "-v", "4/5", "-c", catalog.string(), "-o", out.string(), "--debug"});
    REQUIRE(moved.code == 0);
    CHECK(moved.err.find("max cross-discrepancy") != std::string::npos);
    rows = read_csv(slurp(out));
    REQUIRE(rows.size() == 13);
    CHECK(rows[0].size() == 8);
    for (std::size_t k = 1; k < rows.size(); ++k) {
        const double x = std::stod(rows[k][1]), x2 = std::stod(rows[k][3]);
        CHECK(std::abs(x2 - (x + 0.8) / (1 + 0.8 * x)) < 1e-12);
        for (int col = 5; col < 8; ++col) CHECK(std::stod(rows[k][static_cast<std::size_t>(col)]) < 1e-9);
    }
    // Front and back stars stay put.
    CHECK(std::abs(std::stod(rows[1][3]) - 1) < 1e-15);
    CHECK(std::abs(std::stod(rows[7][3]) + 1) < 1e-15);
    // Side stars land on projection 4/5.
    CHECK(std::abs(std::stod(rows[4][3]) - 0.8) < 1e-12);
    CHECK(std::abs(std::stod(rows[10][3]) - 0.8) < 1e-12);

    const auto bad = scratch("bad.csv");
    std::ofstream(bad) << "1,2,3\n";
    CHECK(run_cli({"aberrate", "-v", "0.1", "-c", bad.string(), "-o", "-"}).code == 2);
    CHECK(run_cli({"aberrate", "-v", "0.1", "-c", catalog.string(), "-o", "/nonexistent/dir/out.csv"}).code == 4);
}

TEST_CASE("starfield: SVG layout") {
    const auto still = run_cli({"starfield", "-v", "0", "-n", "4"});
    REQUIRE(still.code == 0);
    const std::regex before("class=\"star-before\" cx=\"([0-9.]+)\" cy=\"([0-9.]+)\"");
    const std::regex after("class=\"star-after\" cx=\"([0-9.]+)\" cy=\"([0-9.]+)\"");
    auto collect = [](const std::string& s, const std::regex& re) {
        std::vector<std::pair<double, double>> pts;
        for (auto it = std::sregex_iterator(s.begin(), s.end(), re); it != std::sregex_iterator(); ++it) {
            pts.emplace_back(std::stod((*it)[1]), std::stod((*it)[2]));
        }
        return pts;
    };
    CHECK(collect(still.out, before) == collect(still.out, after));
    CHECK(collect(still.out, before).size() == 4);

    const auto moved = run_cli({"starfield", "-v", "4/5", "-n", "12"});
    REQUIRE(moved.code == 0);
    const std::regex arrow("class=\"arrow\" x1=\"([0-9.]+)\" y1=\"([0-9.]+)\" x2=\"([0-9.]+)\" y2=\"([0-9.]+)\"");
    int side = 0;
    for (auto it = std::sregex_iterator(moved.out.begin(), moved.out.end(), arrow); it != std::sregex_iterator(); ++it) {
        const double x1 = std::stod((*it)[1]), x2 = std::stod((*it)[3]);
        if (std::abs(x1 - 256) < 1e-3) {
            CHECK(std::abs((x2 - 256) / 240 - 0.8) < 1e-4);
            ++side;
        }
    }
    CHECK(side == 2);
    for (const auto& re : {before, after}) {
        for (const auto& [x, y] : collect(moved.out, re)) {
            CHECK(x >= 0);
            CHECK(x <= 512);
            CHECK(y >= 0);
            CHECK(y <= 512);
        }
    }
    CHECK(moved.out.find("viewBox=\"0 0 512 512\"") != std::string::npos);
    CHECK(run_cli({"starfield", "-v", "4/5", "-n", "12"}).out == moved.out);
    CHECK(run_cli({"starfield", "-v", "4/5", "-n", "1"}).code == 2);
}

TEST_CASE("starfield: two-boost mode marks non-antipodal fixed points") {
    const auto r = run_cli({"starfield", "-v", "4/5", "-w", "3i/5", "-n", "24"});
    REQUIRE(r.code == 0);
    const std::regex fixed("class=\"fixed-point\" x=\"([0-9.]+)\" y=\"([0-9.]+)\"");
    std::vector<std::pair<double, double>> pts;
    for (auto it = std::sregex_iterator(r.out.begin(), r.out.end(), fixed); it != std::sregex_iterator(); ++it) {
        pts.emplace_back(std::stod((*it)[1]) + 4 - 256, 256 - (std::stod((*it)[2]) + 4));
    }
    REQUIRE(pts.size() == 2);
    CHECK(std::hypot(pts[0].first + pts[1].first, pts[0].second + pts[1].second) > 5.0);
}

TEST_CASE("goldenscan") {
    const auto r = run_cli({"goldenscan", "-n", "1000", "--csv", scratch("golden.csv").string()});
    REQUIRE(r.code == 0);
    const auto rows = read_csv(slurp(scratch("golden.csv")));
    REQUIRE(rows.size() == 1002);
    CHECK(rows[0] == std::vector<std::string>{"v", "e", "gap"});
    CHECK(std::stod(rows[1][2]) == 0.0);
    CHECK(std::stod(rows[1001][0]) == 1.0);
    CHECK(std::stod(rows[1001][2]) == 0.0);
    std::smatch m;
    REQUIRE(std::regex_search(r.out, m, std::regex("argmax: ([0-9.]+)")));
    CHECK(std::abs(std::stod(m[1]) - 0.7861513777574233) < 1e-6);
    REQUIRE(std::regex_search(r.out, m, std::regex("ratio: ([0-9.]+)")));
    CHECK(std::abs(std::stod(m[1]) - 1.618033988749895) < 1e-9);
}
