// Command-line front end for chromatic symmetric functions of trees and
// small graphs: exact invariants, reconstruction, and verification scans.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "csf/enumerate.hpp"
#include "csf/families.hpp"
#include "csf/invariants.hpp"
#include "csf/reconstruct.hpp"
#include "csf/search.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFindings = 1;
constexpr int kExitInputError = 2;

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::string tok;
    std::istringstream stream(text);
    while (std::getline(stream, tok, ',')) {
        size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument("bad integer list: " + text);
        out.push_back(v);
    }
    if (out.empty()) throw std::invalid_argument("empty integer list");
    return out;
}

// "g:a,b,c" for squids and crabs
std::pair<int, std::vector<int>> parse_cycle_spec(const std::string& text) {
    size_t colon = text.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("expected <cycle>:<list>, got " + text);
    size_t used = 0;
    int g = std::stoi(text.substr(0, colon), &used);
    if (used != colon) throw std::invalid_argument("bad cycle length in " + text);
    return {g, parse_int_list(text.substr(colon + 1))};
}

struct GraphInput {
    std::string path;
    std::string spider, caterpillar, squid, crab;

    void attach(CLI::App* cmd) {
        cmd->add_option("file", path, "edge-list file ('-' for stdin)");
        cmd->add_option("--spider", spider, "inline spider legs, e.g. 3,2,1");
        cmd->add_option("--caterpillar", caterpillar, "inline caterpillar leaf numbers");
        cmd->add_option("--squid", squid, "inline squid cycle:tentacles, e.g. 3:2,1");
        cmd->add_option("--crab", crab, "inline crab cycle:leaf-counts, e.g. 3:1,2,3");
    }

    csf::Graph load() const {
        int sources = !path.empty() + !spider.empty() + !caterpillar.empty() + !squid.empty() +
                      !crab.empty();
        if (sources != 1)
            throw std::invalid_argument("provide exactly one graph source (file or inline spec)");
        if (!spider.empty())
            return csf::build_spider({csf::Partition(parse_int_list(spider))});
        if (!caterpillar.empty())
            return csf::build_caterpillar(csf::normalize_caterpillar(parse_int_list(caterpillar)));
        if (!squid.empty()) {
            auto [g, list] = parse_cycle_spec(squid);
            return csf::build_squid({g, csf::Partition(list)});
        }
        if (!crab.empty()) {
            auto [g, list] = parse_cycle_spec(crab);
            return csf::build_crab(csf::normalize_crab(g, list));
        }
        return csf::parse_edge_list(read_file(path));
    }
};

void emit_report(const csf::ScanReport& report, const std::string& record_path) {
    std::cout << report.to_text();
    if (!record_path.empty()) {
        std::ofstream out(record_path);
        if (!out) throw std::invalid_argument("cannot write " + record_path);
        out << report.to_records();
    }
}

int cap_for(const std::string& scope) {
    if (scope == "graphs") return csf::kGraphScanCap;
    if (scope == "stp") return csf::kStpScanCap;
    if (scope == "identities" || scope == "main-thm") return csf::kIdentitySweepCap;
    if (scope == "conjecture") return csf::kConjectureScanCap;
    return csf::kCsfScanCap;
}

bool warn_over_cap(int max_n, int cap, bool force) {
    if (max_n <= cap) return false;
    if (!force)
        throw std::invalid_argument("--max-n " + std::to_string(max_n) +
                                    " exceeds the desk-scale cap " + std::to_string(cap) +
                                    " (use --force to override)");
    std::cerr << "warning: --max-n " << max_n << " exceeds the desk-scale cap " << cap
              << "; this may take a long time\n";
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact chromatic-symmetric-function toolkit for trees and small graphs"};
    app.require_subcommand(1);
    app.footer("Worker threads come from the CSF_WORKERS environment variable.\n"
               "Exit codes: 0 = success / zero findings, 1 = collision or verification\n"
               "failure found, 2 = input error.");

    GraphInput xg_input, stp_input, conn_input;
    auto* cmd_xg = app.add_subcommand("xg", "chromatic symmetric function in the p-basis");
    xg_input.attach(cmd_xg);
    auto* cmd_stp = app.add_subcommand("stp", "subtree polynomial S_T(q,r) of a tree");
    stp_input.attach(cmd_stp);
    auto* cmd_conn = app.add_subcommand("conn", "connector polynomial K_T(x,y) of a tree");
    conn_input.attach(cmd_conn);

    std::string from_what, from_file;
    auto* cmd_from = app.add_subcommand("from-xg", "derive invariants from a stored X");
    cmd_from->add_option("what", from_what, "stp | conn | girth | sequences")
        ->required()
        ->check(CLI::IsMember({"stp", "conn", "girth", "sequences"}));
    cmd_from->add_option("file", from_file, "SymFunc text file ('-' for stdin)")->required();

    std::string rec_what, rec_file;
    auto* cmd_rec = app.add_subcommand("reconstruct", "rebuild a family spec from an invariant");
    cmd_rec->add_option("what", rec_what, "spider-stp | spider-2part | caterpillar | squid | crab")
        ->required()
        ->check(CLI::IsMember({"spider-stp", "spider-2part", "caterpillar", "squid", "crab"}));
    cmd_rec->add_option("file", rec_file,
                        "input file: an S_T(q,r) file for spider-stp, an X file otherwise")
        ->required();

    std::string scan_what = "trees", scan_invariant = "csf", record_path;
    int scan_max_n = 10;
    bool force = false;
    auto* cmd_scan = app.add_subcommand("scan", "collision scans over whole families");
    cmd_scan->add_option("what", scan_what, "trees | graphs")
        ->required()
        ->check(CLI::IsMember({"trees", "graphs"}));
    cmd_scan->add_option("--max-n", scan_max_n, "largest order to scan")->required();
    cmd_scan->add_option("--invariant", scan_invariant, "csf | stp (trees only)")
        ->check(CLI::IsMember({"csf", "stp"}));
    cmd_scan->add_option("--report", record_path, "write one JSON record per finding");
    cmd_scan->add_flag("--force", force, "override the desk-scale cap (with a warning)");

    std::string verify_what;
    int verify_max_n = 9;
    std::string verify_record;
    bool verify_force = false;
    auto* cmd_verify = app.add_subcommand("verify", "identity verification sweeps");
    cmd_verify->add_option("what", verify_what, "main-thm | identities")
        ->required()
        ->check(CLI::IsMember({"main-thm", "identities"}));
    cmd_verify->add_option("--max-n", verify_max_n, "largest tree order")->required();
    cmd_verify->add_option("--report", verify_record, "write one JSON record per finding");
    cmd_verify->add_flag("--force", verify_force, "override the desk-scale cap");

    int conj_max_n = 10;
    std::string conj_record;
    bool conj_force = false;
    auto* cmd_conj = app.add_subcommand("conjecture", "positivity and z-integrality tabulation");
    cmd_conj->add_option("--max-n", conj_max_n, "largest degree")->required();
    cmd_conj->add_option("--report", conj_record, "write one JSON record per finding");
    cmd_conj->add_flag("--force", conj_force, "override the desk-scale cap");

    std::string enum_what;
    int enum_n = 0;
    auto* cmd_enum = app.add_subcommand("enumerate", "family members of one order");
    cmd_enum->add_option("what", enum_what, "trees | spiders | caterpillars | squids | crabs")
        ->required()
        ->check(CLI::IsMember({"trees", "spiders", "caterpillars", "squids", "crabs"}));
    cmd_enum->add_option("--n", enum_n, "order")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (cmd_xg->parsed()) {
            std::cout << csf::csf(xg_input.load()).to_string() << "\n";
        } else if (cmd_stp->parsed()) {
            std::cout << csf::subtree_polynomial_direct(stp_input.load()).to_string("q", "r")
                      << "\n";
        } else if (cmd_conn->parsed()) {
            std::cout << csf::connector_polynomial_direct(conn_input.load()).to_string("x", "y")
                      << "\n";
        } else if (cmd_from->parsed()) {
            csf::SymFunc x = csf::SymFunc::parse(read_file(from_file));
            int n = x.degree();
            if (from_what == "stp")
                std::cout << csf::subtree_from_csf(x, n).to_string("q", "r") << "\n";
            else if (from_what == "conn")
                std::cout << csf::connector_from_csf(x, n).to_string("x", "y") << "\n";
            else if (from_what == "girth") {
                std::optional<int> g = csf::girth_from_csf(x);
                std::cout << (g ? std::to_string(*g) : std::string("inf")) << "\n";
            } else {
                csf::SequenceTriple seq =
                    csf::sequences_from_stp(csf::subtree_from_csf(x, n), n);
                auto join = [](const std::vector<long long>& v) {
                    std::string out;
                    for (size_t i = 0; i < v.size(); ++i)
                        out += (i ? "," : "") + std::to_string(v[i]);
                    return out;
                };
                std::cout << "path " << join(seq.path_seq) << "\n";
                std::cout << "star " << join(seq.star_seq) << "\n";
                std::cout << "degree " << join(seq.degree_seq) << "\n";
            }
        } else if (cmd_rec->parsed()) {
            if (rec_what == "spider-stp") {
                csf::BivariatePolynomial s = csf::BivariatePolynomial::parse(read_file(rec_file));
                // sigma_1 = [q^1 r^1] counts edges, so the order is implied
                int n = static_cast<int>(s.coeff(1, 1)) + 1;
                std::cout << csf::spider_from_stp(s, n).to_string() << "\n";
            } else {
                csf::SymFunc x = csf::SymFunc::parse(read_file(rec_file));
                int n = x.degree();
                if (rec_what == "spider-2part")
                    std::cout << csf::spider_from_two_part(csf::two_part_portion(x), n).to_string()
                              << "\n";
                else if (rec_what == "caterpillar")
                    std::cout << csf::caterpillar_from_csf(x, n).to_string() << "\n";
                else if (rec_what == "squid")
                    std::cout << csf::squid_from_csf(x, n).to_string() << "\n";
                else
                    std::cout << csf::crab_from_csf(x, n).to_string() << "\n";
            }
        } else if (cmd_scan->parsed()) {
            csf::ScanReport report;
            if (scan_what == "graphs") {
                bool over = warn_over_cap(scan_max_n, csf::kGraphScanCap, force);
                report = csf::graph_collision_scan(scan_max_n, over);
            } else {
                csf::TreeInvariant inv = scan_invariant == "stp" ? csf::TreeInvariant::Stp
                                                                 : csf::TreeInvariant::Csf;
                int cap = inv == csf::TreeInvariant::Stp ? csf::kStpScanCap : csf::kCsfScanCap;
                bool over = warn_over_cap(scan_max_n, cap, force);
                report = csf::distinguishability_scan(scan_max_n, inv, over);
            }
            emit_report(report, record_path);
            std::cout << (report.collisions.empty() ? "0 collisions\n"
                                                    : std::to_string(report.collisions.size()) +
                                                          " collisions\n");
            return report.collisions.empty() ? kExitOk : kExitFindings;
        } else if (cmd_verify->parsed()) {
            bool over = warn_over_cap(verify_max_n, csf::kIdentitySweepCap, verify_force);
            csf::ScanReport report = csf::identity_sweep(verify_max_n, over);
            if (verify_what == "main-thm") {
                // keep only the transition-formula findings
                std::erase_if(report.failures, [](const csf::Finding& f) {
                    return f.invariant != "main-thm";
                });
            }
            emit_report(report, verify_record);
            std::cout << (report.failures.empty()
                              ? "0 failures\n"
                              : std::to_string(report.failures.size()) + " failures\n");
            return report.failures.empty() ? kExitOk : kExitFindings;
        } else if (cmd_conj->parsed()) {
            bool over = warn_over_cap(conj_max_n, csf::kConjectureScanCap, conj_force);
            csf::ScanReport report = csf::conjecture_scan(conj_max_n, over);
            emit_report(report, conj_record);
            std::cout << (report.failures.empty()
                              ? "0 violations\n"
                              : std::to_string(report.failures.size()) + " violations\n");
            return report.failures.empty() ? kExitOk : kExitFindings;
        } else if (cmd_enum->parsed()) {
            if (enum_what == "trees") {
                for (const csf::Graph& t : csf::enumerate_trees(enum_n)) {
                    std::string line;
                    for (const auto& [u, v] : t.edges())
                        line += (line.empty() ? "" : " ") + std::to_string(u) + "-" +
                                std::to_string(v);
                    std::cout << (t.edge_count() == 0 ? "(trivial)" : line) << "\n";
                }
            } else if (enum_what == "spiders") {
                for (const auto& s : csf::enumerate_spiders(enum_n))
                    std::cout << s.to_string() << "\n";
            } else if (enum_what == "caterpillars") {
                for (const auto& s : csf::enumerate_caterpillars(enum_n))
                    std::cout << s.to_string() << "\n";
            } else if (enum_what == "squids") {
                for (const auto& s : csf::enumerate_squids(enum_n))
                    std::cout << s.to_string() << "\n";
            } else {
                for (const auto& s : csf::enumerate_crabs(enum_n))
                    std::cout << s.to_string() << "\n";
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitOk;
}
