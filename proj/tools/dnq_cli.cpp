#include <CLI11.hpp>
#include <algorithm>
#include <iostream>
#include <json.hpp>

#include "dnq/coeffq.hpp"
#include "dnq/formulas.hpp"
#include "dnq/roots.hpp"
#include "dnq/verify.hpp"

using namespace dnq;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitInternal = 3;

QuiverDn make_quiver(int n, const std::string& orient) {
    return QuiverDn::from_orientation_string(n, orient);
}

// Index of the tube named on the command line; "big" is the rank n-2 tube
// for n >= 5 and the last tube in canonical order for n = 4.
int tube_index_for(const QuiverDn& q, const std::string& name) {
    auto tubes = exceptional_tubes(q);
    if (name == "big") {
        for (size_t i = 0; i < tubes.size(); ++i)
            if (tubes[i].rank() == q.n() - 2 && (q.n() != 4 || i == 2)) return static_cast<int>(i);
        return 2;
    }
    if (name == "2a") return 0;
    if (name == "2b") return 1;
    throw CLI::ValidationError("--tube must be one of 2a, 2b, big");
}

void print_poly(const LaurentPoly& f, const std::string& format) {
    if (format == "json")
        std::cout << laurent_to_json(f) << "\n";
    else
        std::cout << f.to_string() << "\n";
}

// Renders a CC Laurent polynomial as numerator / monomial-denominator text.
std::string cc_text(const LaurentPoly& x) {
    Monomial den;
    for (auto& [mono, c] : x.terms())
        for (auto& [v, e] : mono.exponents())
            if (e < 0) {
                int cur = den.exponent(v);
                if (-e > cur) den = den * Monomial::var(v, -e - cur);
            }
    if (den.is_one()) return x.to_string();
    LaurentPoly num = x.shifted(den);
    std::string dtext;
    for (auto& [v, e] : den.exponents()) {
        if (!dtext.empty()) dtext += "*";
        dtext += "x_" + v.name();
        if (e != 1) dtext += "^" + std::to_string(e);
    }
    return "(" + num.to_string() + ") / " + dtext;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"F-polynomials and cluster variables for affine D~n quivers"};
    app.require_subcommand(1);

    int n = 4;
    std::string orient;
    std::string format = "text";
    std::vector<std::string> root_args;
    std::string tube_name;
    int tube_l = 1, tube_r = 0;
    int snake_s = -1;
    bool allow_imaginary = false;
    std::string suite;
    VerifyOptions vopt;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--n", n, "rank of D~n (n >= 4)")->check(CLI::Range(4, 32));
        cmd->add_option("--orient", orient, "edge orientations, e.g. a:fwd,v0:rev; default subspace");
        cmd->add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));
    };

    CLI::App* fpoly = app.add_subcommand("fpoly", "F-polynomial of an indecomposable");
    add_common(fpoly);
    fpoly->add_option("--root", root_args, "dimension vector entries, e.g. --root a=1 --root 0=1");
    fpoly->add_option("--tube", tube_name, "tube representation: 2a | 2b | big (with --l, --r)");
    fpoly->add_option("--l", tube_l, "chain position in the tube, 0 = dimension r*delta");
    fpoly->add_option("--r", tube_r, "delta multiplicity in the tube");
    fpoly->add_option("--snake", snake_s, "snake parameter s: F-polynomial of the type of Q(s,n)");

    CLI::App* cc = app.add_subcommand("cc", "Caldero-Chapoton cluster variable");
    add_common(cc);
    cc->add_option("--root", root_args, "dimension vector entries")->required();
    cc->add_flag("--allow-imaginary", allow_imaginary, "permit multiples of delta");

    CLI::App* verify = app.add_subcommand("verify", "run the verification suites");
    add_common(verify);
    verify->add_option("--suite", suite, "one suite; default all");
    verify->add_option("--rmax", vopt.rmax, "homogeneous-tube depth");
    verify->add_option("--height", vopt.height, "root height bound for the cross sweep");
    verify->add_option("--primes", vopt.primes, "extra held-out primes");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(fpoly)) {
            QuiverDn q = make_quiver(n, orient);
            int selectors = (!tube_name.empty()) + (snake_s >= 0) + (!root_args.empty());
            if (selectors > 1) throw CLI::ValidationError("--root, --tube and --snake are exclusive");
            if (snake_s >= 0 && !orient.empty())
                throw CLI::ValidationError("--snake is defined on the subspace orientation");
            LaurentPoly f;
            if (!tube_name.empty()) {
                RootInfo info = tube_root_info(q, tube_index_for(q, tube_name), 0, tube_l, tube_r);
                f = f_tube(q, info);
            } else if (snake_s >= 0) {
                f = snake_recursion(snake_s, n);
            } else if (!root_args.empty()) {
                f = f_root(q, dimvec_parse_assignments(root_args));
            } else {
                throw CLI::ValidationError("fpoly needs --root, --tube or --snake");
            }
            print_poly(f, format);
            return kExitOk;
        }
        if (app.got_subcommand(cc)) {
            QuiverDn q = make_quiver(n, orient);
            DimVec m = dimvec_parse_assignments(root_args);
            RootInfo info = classify_root(q, m);
            std::map<DimVec, Int> table;
            if (info.kind == RootKind::ImaginaryMultipleOfDelta) {
                if (!allow_imaginary) {
                    std::cerr << "multiples of delta are not cluster variables; pass --allow-imaginary\n";
                    return kExitBadInput;
                }
                LaurentPoly f = f_homog(q, info.r);
                for (auto& [mono, c] : f.terms()) {
                    DimVec e;
                    for (auto& [v, exp] : mono.exponents()) e.set(v, exp);
                    table[e] = c;
                }
            } else {
                table = euler_table_from_froot(q, m);
            }
            LaurentPoly x = cc_variable(q, m, table);
            if (format == "json")
                std::cout << laurent_to_json(x) << "\n";
            else
                std::cout << cc_text(x) << "\n";
            return kExitOk;
        }
        if (app.got_subcommand(verify)) {
            std::vector<std::string> selected =
                suite.empty() ? verify_suite_names() : std::vector<std::string>{suite};
            bool all_pass = true;
            nlohmann::json report = nlohmann::json::array();
            for (const std::string& name : selected) {
                VerifyResult r;
                try {
                    r = run_verify_suite(name, vopt);
                } catch (const std::invalid_argument& e) {
                    std::cerr << e.what() << "\n";
                    return kExitBadInput;
                }
                all_pass = all_pass && r.pass;
                if (format == "json") {
                    report.push_back({{"suite", r.suite},
                                      {"pass", r.pass},
                                      {"checks", r.checks},
                                      {"detail", r.detail}});
                } else {
                    std::cout << (r.pass ? "PASS" : "FAIL") << " " << r.suite << " (" << r.checks
                              << " checks)" << (r.detail.empty() ? "" : ": " + r.detail) << "\n";
                }
            }
            if (format == "json") std::cout << report.dump() << "\n";
            return all_pass ? kExitOk : kExitVerifyFailed;
        }
    } catch (const NotARoot& e) {
        std::cerr << "not a root: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "bad input: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "internal identity failure: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitBadInput;
}
