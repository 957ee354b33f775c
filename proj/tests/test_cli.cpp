#include <catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "bubble/cli.hpp"

namespace fs = std::filesystem;
using namespace bubble;

namespace {

struct Run {
    int code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

class Sandbox {
public:
    Sandbox() {
        std::string tmpl = (fs::temp_directory_path() / "bubble_cli_XXXXXX").string();
        dir_ = mkdtemp(tmpl.data());
    }
    ~Sandbox() {
        std::error_code ec;
        fs::remove_all(dir_, ec);
    }
    Sandbox(const Sandbox&) = delete;
    Sandbox& operator=(const Sandbox&) = delete;

    const fs::path& dir() const { return dir_; }

    // Runs the binary with args from inside the sandbox.
    Run run(const std::string& args, const std::string& env = "") const {
        const char* bin = std::getenv("BUBBLE_BIN");
        REQUIRE(bin != nullptr);
        fs::path o = dir_ / "stdout.txt", e = dir_ / "stderr.txt";
        std::string cmd = "cd '" + dir_.string() + "' && " + env + " '" + bin + "' " + args + " > '" + o.string() +
                          "' 2> '" + e.string() + "'";
        int status = std::system(cmd.c_str());
        Run r;
        r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
        r.out = slurp(o);
        r.err = slurp(e);
        return r;
    }

private:
    fs::path dir_;
};

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);) out.push_back(l);
    return out;
}

}  // namespace

TEST_CASE("S3 smoke proof writes a certificate that verifies", "[cli]") {
    Sandbox box;
    Run p = box.run("prove --space s3 --smoke --out s3.json");
    INFO(p.out << p.err);
    CHECK(p.code == kExitProved);
    CHECK(p.out.find("proved") != std::string::npos);
    REQUIRE(fs::exists(box.dir() / "s3.json"));
    Run v = box.run("cert verify s3.json");
    CHECK(v.code == kExitProved);
    CHECK(v.out.find("verified") != std::string::npos);
}

TEST_CASE("tampered certificates are rejected with the leaf named", "[cli]") {
    Sandbox box;
    REQUIRE(box.run("prove --space h3 --spot 5.9 --out h3.json").code == kExitProved);
    CertificateFile f = from_json(slurp(box.dir() / "h3.json"));
    // First box of the first row of the first claim.
    Certificate& leaf = f.root.children.at(0).children.at(0).children.at(0);
    REQUIRE(leaf.method == Method::direct_hit);
    leaf.g_min = std::nextafter(leaf.h_max, 0.0);
    write_certificate(f, (box.dir() / "bad.json").string());
    Run v = box.run("cert verify bad.json");
    CHECK(v.code == kExitFailed);
    CHECK(v.out.find("root/0/0/0") != std::string::npos);

    std::ofstream(box.dir() / "junk.json") << "{ not json";
    CHECK(box.run("cert verify junk.json").code == kExitConfig);
    CHECK(box.run("cert verify missing.json").code == kExitConfig);
}

TEST_CASE("failed proofs exit with the location", "[cli]") {
    Sandbox box;
    Run r = box.run("prove --space h3 --full --delta 10");
    CHECK(r.code == kExitFailed);
    CHECK(r.err.find("warning: --full") != std::string::npos);
    CHECK(r.out.find("failed at /0/0/0") != std::string::npos);
    CHECK(fs::exists(box.dir() / "certificate_h3.json"));
    // The failed certificate is consistent but not a proof.
    Run v = box.run("cert verify certificate_h3.json");
    CHECK(v.code == kExitFailed);
    CHECK(v.out.find("records a failure") != std::string::npos);
}

TEST_CASE("grid CSV", "[cli]") {
    Sandbox box;
    Run r = box.run("grid --space h3 --grid 0.1:20:0.1:20:5 --out g.csv");
    REQUIRE(r.code == kExitProved);
    auto rows = lines(slurp(box.dir() / "g.csv"));
    REQUIRE(rows.size() == 26);
    CHECK(rows[0] == "v,w,F");
    CHECK(rows[1] == "0.1,0.1," + exact_decimal(hutchings_point(Space::H3, {0.1, 0.1})));
    // Rows run over v first: row 5 is (20, 0.1), row 21 is (0.1, 20).
    CHECK(rows[5].rfind("20,0.1,", 0) == 0);
    CHECK(rows[21].rfind("0.1,20,", 0) == 0);
    auto value = [](const std::string& row) { return std::stod(row.substr(row.rfind(',') + 1)); };
    CHECK(value(rows[1]) > 0.0);
    CHECK(value(rows[25]) > 0.0);
    CHECK(value(rows[21]) < 0.0);

    REQUIRE(box.run("grid --space h3 --grid 0.1:20:0.1:20:5 --out g2.csv").code == kExitProved);
    CHECK(slurp(box.dir() / "g.csv") == slurp(box.dir() / "g2.csv"));

    REQUIRE(box.run("grid --space h3 --grid 1:2:1:2:0 --out empty.csv").code == kExitProved);
    CHECK(slurp(box.dir() / "empty.csv") == "v,w,F\n");
    REQUIRE(box.run("grid --space s3 --grid 2:1:1:2:4 --out empty2.csv").code == kExitProved);
    CHECK(slurp(box.dir() / "empty2.csv") == "v,w,F\n");
}

TEST_CASE("S3 grid cell at equal thirds", "[cli]") {
    const double pi = std::numbers::pi, t = 2 * pi * pi / 3;
    GridSpec g{t, t, t, t, 1};
    auto rows = lines(grid_csv(Space::S3, g));
    REQUIRE(rows.size() == 2);
    double f = std::stod(rows[1].substr(rows[1].rfind(',') + 1));
    double expected = 2 * single_area_fast(Space::S3, t / 2) + single_area_fast(Space::S3, t) +
                      single_area_fast(Space::S3, 2 * t) - 2 * 6 * pi;
    CHECK_THAT(f, Catch::Matchers::WithinAbs(expected, 1e-6));
    // Past the total volume F is left empty.
    auto beyond = lines(grid_csv(Space::S3, {12.0, 12.0, 12.0, 12.0, 1}));
    CHECK(beyond[1] == "12,12,");
}

TEST_CASE("lemma suite", "[cli]") {
    Sandbox box;
    Run r = box.run("lemmas --out lemmas.json");
    CHECK(r.code == kExitProved);
    CHECK(r.out.find("all pass") != std::string::npos);
    CHECK(fs::exists(box.dir() / "lemmas.json"));
    Run crit = box.run("lemmas --select crit-line");
    CHECK(crit.code == kExitFailed);
    CHECK(crit.out.find("FAIL") != std::string::npos);
}

TEST_CASE("configuration errors exit with code 2", "[cli]") {
    Sandbox box;
    CHECK(box.run("prove --space s3 --delta 0").code == kExitConfig);
    CHECK(box.run("prove --space r3").code == kExitConfig);
    CHECK(box.run("prove --space h3 --spot 9.99").code == kExitConfig);
    CHECK(box.run("prove --space s3 --precision-bits 24").code == kExitConfig);
    CHECK(box.run("prove --space s3 --jobs 0").code == kExitConfig);
    CHECK(box.run("prove --bogus").code == kExitConfig);
    CHECK(box.run("grid --space h3 --grid 1:2:3").code == kExitConfig);
    CHECK(box.run("grid --space h3 --grid 1:2:1:2:x").code == kExitConfig);
    CHECK(box.run("").code == kExitConfig);
    std::ofstream(box.dir() / "bad.ini") << "[h3]\ncolour = blue\n";
    CHECK(box.run("grid --space h3 --config bad.ini").code == kExitConfig);
    CHECK(box.run("--help").code == kExitProved);
}

TEST_CASE("config files and the output directory override", "[cli]") {
    Sandbox box;
    std::ofstream(box.dir() / "run.ini") << "[h3]\ngrid = 1:2:1:2:2\n[s3]\ngrid = 1:2:1:2:3\n";
    fs::create_directory(box.dir() / "certs");
    Run r = box.run("grid --space h3 --config run.ini --out sub/ignored/g.csv",
                    "BUBBLE_CERT_DIR='" + (box.dir() / "certs").string() + "'");
    REQUIRE(r.code == kExitProved);
    auto rows = lines(slurp(box.dir() / "certs" / "g.csv"));
    CHECK(rows.size() == 5);

    // A flag wins over the file.
    REQUIRE(box.run("grid --space h3 --config run.ini --grid 1:2:1:2:3 --out g3.csv").code == kExitProved);
    CHECK(lines(slurp(box.dir() / "g3.csv")).size() == 10);

    CHECK(split_list("5.9, 5.20,,5.12") == std::vector<std::string>{"5.9", "5.20", "5.12"});
    CHECK(grid_axis(0.0, 1.0, 3) == std::vector<double>{0.0, 0.5, 1.0});
    CHECK(grid_axis(1.0, 1.0, 4) == std::vector<double>{1.0});
}
