// Acceptance suite: runs every criterion exactly (zero tolerance) and prints
// one pass/fail line per criterion. Usage: acceptance <cli-binary> <golden-dir>
//
// Criteria:
//   1 module-axiom suite        6 irreducibility orbits
//   2 Jacobi suite              7 quotient layers
//   3 commutation identities    8 BMS restriction
//   4 classification traces     9 isomorphism
//   5 reconstruction roundtrips 10 CLI goldens and exit codes

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "bkm/suites.hpp"

namespace {

constexpr std::uint64_t kSeed = 42;
int failures = 0;

void report(int criterion, const std::string& name, bool pass, const std::string& detail = "") {
    std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << criterion << ": " << name;
    if (!pass && !detail.empty()) std::cout << " -- " << detail;
    std::cout << "\n";
    if (!pass) ++failures;
}

void run_suite(int criterion, const std::string& name, const bkm::SuiteResult& r) {
    report(criterion, name, r.pass, r.detail);
}

struct CommandResult {
    int exit_code;
    std::string output;
};

CommandResult run_command(const std::string& command) {
    std::FILE* pipe = popen((command + " 2>/dev/null").c_str(), "r");
    if (!pipe) return {-1, ""};
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = std::fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, n);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool check_golden(const std::string& cli, const std::string& golden_dir, const std::string& name,
                  const std::string& args, int expected_exit, std::string& detail) {
    CommandResult r = run_command(cli + " " + args);
    if (r.exit_code != expected_exit) {
        detail = name + ": exit " + std::to_string(r.exit_code) + ", expected " +
                 std::to_string(expected_exit);
        return false;
    }
    std::string expected = read_file(golden_dir + "/" + name + ".json");
    if (expected.empty()) {
        detail = name + ": golden file missing or empty";
        return false;
    }
    if (r.output != expected) {
        detail = name + ": output differs from golden";
        return false;
    }
    return true;
}

void run_cli_criterion(const std::string& cli, const std::string& golden_dir) {
    bkm::SuiteResult roundtrip = bkm::suites::parse_roundtrip(kSeed, 200);
    if (!roundtrip.pass) {
        report(10, "CLI goldens", false, roundtrip.detail);
        return;
    }
    struct Golden {
        const char* name;
        const char* args;
        int exit_code;
    };
    const Golden goldens[] = {
        {"apply",
         "--json apply --module 'phi(lambda=1,alpha=0,beta=0,rho=0,h=0)' --word 'L[1] M[1]' --poly '1'", 0},
        {"bracket", "--json bracket --a 'L[2]' --b 'L[3]'", 0},
        {"verify", "--json verify --suite iso --tuples 5 --seed 42", 0},
        {"orbit",
         "--json orbit --module 'phi(lambda=1,alpha=0,beta=1,rho=0,h=0)' --start 's' --index-range 1 "
         "--box 4x4", 0},
        {"extract", "--json extract --module 'phi(lambda=2,alpha=1,beta=3,rho=5,h=t^2)'", 0},
        {"iso",
         "--json iso --a 'phi(lambda=2,alpha=1,beta=3,rho=5,h=t^2)' "
         "--b 'phi(lambda=2,alpha=1,beta=3,rho=5,h=t^2)'", 0},
        {"quotient",
         "--json quotient --module 'phi(lambda=1,alpha=0,beta=0,rho=2,h=t)' --level 0 "
         "--generator 'I[3]' --gbar 's'", 0},
        {"trace", "--json trace --module 'phi(lambda=1,alpha=1,beta=1,rho=0,h=t^2)' --range 2", 0},
    };
    std::string detail;
    for (const Golden& g : goldens)
        if (!check_golden(cli, golden_dir, g.name, g.args, g.exit_code, detail)) {
            report(10, "CLI goldens", false, detail);
            return;
        }
    // documented exit codes 1 (property fails), 2 (parse error), 3 (domain error)
    struct ExitCase {
        const char* args;
        int expected;
    };
    const ExitCase exits[] = {
        {"iso --a 'phi(lambda=1,alpha=0,beta=0,rho=5,h=0)' --b 'phi(lambda=1,alpha=0,beta=0,rho=6,h=0)'", 1},
        {"apply --module 'phi(lambda=1,alpha=0,beta=0,rho=0,h=0)' --word '' --poly 's^-1'", 2},
        {"apply --module 'phi(lambda=0,alpha=0,beta=0,rho=0,h=0)' --word '' --poly '1'", 3},
    };
    for (const ExitCase& e : exits) {
        CommandResult r = run_command(cli + " " + e.args);
        if (r.exit_code != e.expected) {
            report(10, "CLI goldens", false,
                   std::string(e.args) + ": exit " + std::to_string(r.exit_code) + ", expected " +
                       std::to_string(e.expected));
            return;
        }
    }
    report(10, "CLI goldens", true);
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::cerr << "usage: acceptance <cli-binary> <golden-dir>\n";
        return 2;
    }
    const std::string cli = argv[1];
    const std::string golden_dir = argv[2];

    run_suite(1, "module axioms, 16 pairs, |m|,|n| <= 4", bkm::suites::brackets(kSeed, 4, 5, 25, 5));
    run_suite(2, "Jacobi identity, exhaustive [-3,3] + 500 random [-6,6]",
              bkm::suites::jacobi(kSeed, 3, 6, 500));
    run_suite(3, "commutation identities, i <= 4, |m| <= 4",
              bkm::suites::lemma_identities(kSeed, 4, 4, 20, 4));
    run_suite(4, "classification traces, 50 tuples, M = 5", bkm::suites::claims(kSeed, 50, 5));
    run_suite(5, "reconstruction roundtrips (100 extract, 50 solve_h)",
              bkm::suites::roundtrips(kSeed, 100, 50));
    run_suite(6, "irreducibility orbits, M = 3, box 8x8",
              bkm::suites::orbit_irreducibility(kSeed, 3, {8, 8}, 10));
    run_suite(7, "quotient layers, i <= 3, |m| <= 3", bkm::suites::quotient_layers(kSeed, 3, 3, 20, 8));
    run_suite(8, "BMS restriction", bkm::suites::bms_restriction(kSeed, 3, {8, 8}, 5));
    run_suite(9, "isomorphism, 20 tuples, 5 perturbations", bkm::suites::isomorphism(kSeed, 20));
    run_cli_criterion(cli, golden_dir);

    if (failures == 0) {
        std::cout << "all criteria passed\n";
        return 0;
    }
    std::cout << failures << " criterion(s) failed\n";
    return 1;
}
