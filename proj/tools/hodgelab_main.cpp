#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hodgelab/families.hpp"
#include "hodgelab/json_io.hpp"
#include "hodgelab/lemma46.hpp"
#include "hodgelab/repro.hpp"
#include "hodgelab/rrspace.hpp"

namespace {

using namespace hodgelab;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitInvalidInput = 2;

Json read_json(const std::string& path) {
    std::istream* in = &std::cin;
    std::ifstream file;
    if (path != "-") {
        file.open(path);
        if (!file) throw InputError("cannot open " + path);
        in = &file;
    }
    try {
        return Json::parse(*in);
    } catch (const Json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
}

std::uint64_t sweep_guard_from_env() {
    if (const char* raw = std::getenv("HODGELAB_GUARD")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(raw, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
        std::cerr << "ignoring malformed HODGELAB_GUARD\n";
    }
    return kDefaultSweepGuard;
}

long subgroup_guard_from_env() {
    if (const char* raw = std::getenv("HODGELAB_GUARD")) {
        char* end = nullptr;
        long v = std::strtol(raw, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return kDefaultSubgroupGuard;
}

std::pair<long, long> parse_range(const std::string& text) {
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        long v = std::stol(text);
        return {v, v};
    }
    return {std::stol(text.substr(0, dots)), std::stol(text.substr(dots + 2))};
}

struct OutputOptions {
    std::string format = "markdown";
};

void emit(const OutputOptions& opt, const std::string& markdown, const Json& json) {
    if (opt.format == "json")
        std::cout << json.dump(2) << "\n";
    else
        std::cout << markdown;
}

int run(int argc, char** argv) {
    CLI::App app{"exact character-eigenspace and Torelli dimension computations "
                 "for abelian covers and product surfaces"};
    app.require_subcommand(1);

    OutputOptions out;
    app.add_option("--format", out.format, "markdown or json")
        ->check(CLI::IsMember({"markdown", "json"}));

    std::string input = "-";
    int exit_code = kExitOk;

    auto* genus_cmd = app.add_subcommand("genus", "genus of a cover spec");
    genus_cmd->add_option("-i,--input", input, "cover spec JSON (- for stdin)");
    genus_cmd->callback([&] {
        CoverSpec spec = cover_spec_from_json(read_json(input));
        long g = genus(spec);
        emit(out, "genus: " + std::to_string(g) + "\n", Json{{"genus", g}});
    });

    auto* eigen_cmd = app.add_subcommand("eigentable", "character eigenspace dimensions");
    eigen_cmd->add_option("-i,--input", input, "cover spec JSON (- for stdin)");
    eigen_cmd->callback([&] {
        EigenTable t = eigentable(cover_spec_from_json(read_json(input)));
        emit(out, eigentable_markdown(t), eigentable_to_json(t));
    });

    auto* hodge_cmd = app.add_subcommand("hodge", "Hodge summary of a product surface");
    hodge_cmd->add_option("-i,--input", input, "product spec JSON (- for stdin)");
    hodge_cmd->callback([&] {
        HodgeSummary s = hodge_summary(product_spec_from_json(read_json(input)));
        std::ostringstream os;
        os << "q: " << s.q << "\np_g: " << s.p_g << "\nh11: " << s.h11 << "\nt1: " << s.t1
           << "\nt2: " << s.t2 << "\nh1_theta: " << s.h1_theta << "\neuler: " << s.euler
           << "\nchi_O: " << s.chi_o << "\n";
        emit(out, os.str(), hodge_to_json(s));
    });

    auto* free_cmd = app.add_subcommand("freeness", "freeness of the product action");
    free_cmd->add_option("-i,--input", input, "product spec JSON (- for stdin)");
    free_cmd->callback([&] {
        FreenessResult f = freeness_check(product_spec_from_json(read_json(input)));
        Json j{{"free", f.free}};
        std::ostringstream os;
        if (f.free) {
            os << "free\n";
        } else {
            os << "not free; common stabilizer element (";
            for (std::size_t i = 0; i < f.witness->residues.size(); ++i)
                os << (i ? "," : "") << f.witness->residues[i];
            os << ")\n";
            j["witness"] = f.witness->residues;
            exit_code = kExitVerificationFailed;
        }
        emit(out, os.str(), j);
    });

    auto* torelli_cmd = app.add_subcommand("torelli", "Torelli dimension/rank report");
    bool exact = false;
    torelli_cmd->add_option("-i,--input", input, "product spec JSON (- for stdin)");
    torelli_cmd->add_flag("--exact", exact, "compute exact multiplication ranks where possible");
    torelli_cmd->callback([&] {
        TorelliReport rep = torelli_report(product_spec_from_json(read_json(input)), exact);
        std::ostringstream os;
        auto factor = [&os](const char* name, const FactorReport& f) {
            os << name << ": bound " << f.image_bound << ", target " << f.target;
            if (f.exact_rank) os << ", exact rank " << *f.exact_rank;
            os << ", " << to_string(f.verdict) << "\n";
        };
        factor("factor 1", rep.factor1);
        factor("factor 2", rep.factor2);
        os << "kernel lower bound: " << rep.kernel_lower_bound << "\n";
        os << "dPhi1 factor 1: source " << rep.dphi1_factor1.source << ", target "
           << rep.dphi1_factor1.target << ", " << to_string(rep.dphi1_factor1.verdict) << "\n";
        os << "dPhi1 factor 2: source " << rep.dphi1_factor2.source << ", target "
           << rep.dphi1_factor2.target << ", " << to_string(rep.dphi1_factor2.verdict) << "\n";
        for (const auto& w : rep.warnings) os << "warning: " << w << "\n";
        emit(out, os.str(), torelli_report_to_json(rep));
    });

    auto* hypothesis_cmd =
        app.add_subcommand("hypothesis", "genus hypothesis of the double-Torelli criterion");
    hypothesis_cmd->add_option("-i,--input", input, "product spec JSON (- for stdin)");
    hypothesis_cmd->callback([&] {
        auto [f1, f2] = double_torelli_hypothesis(product_spec_from_json(read_json(input)),
                                        subgroup_guard_from_env());
        std::ostringstream os;
        os << "factor 1: " << to_string(f1.status)
           << (f1.reason.empty() ? "" : " (" + f1.reason + ")") << "\n";
        os << "factor 2: " << to_string(f2.status)
           << (f2.reason.empty() ? "" : " (" + f2.reason + ")") << "\n";
        emit(out, os.str(), hypothesis_to_json(f1, f2));
        if (f1.status == HypothesisStatus::VIOLATED || f2.status == HypothesisStatus::VIOLATED)
            exit_code = kExitVerificationFailed;
    });

    auto* pardini_cmd = app.add_subcommand("pardini", "building-data equivalences");
    auto* pardini_check_cmd = pardini_cmd->add_subcommand("check", "check the linear equivalences");
    pardini_check_cmd->add_option("-i,--input", input, "cover spec JSON (- for stdin)");
    pardini_check_cmd->callback([&] {
        BuildingData bd = building_degrees(cover_spec_from_json(read_json(input)));
        PardiniResult r = pardini_check(bd);
        std::ostringstream os;
        os << (r.ok ? "all equivalences hold\n"
                    : std::to_string(r.violations.size()) + " violated equivalences\n");
        Json j = pardini_result_to_json(r);
        j["building_data"] = building_data_to_json(bd);
        emit(out, os.str(), j);
        if (!r.ok) exit_code = kExitVerificationFailed;
    });

    auto* lemma_cmd = app.add_subcommand("lemma46", "remainder-sum profiles and sweeps");
    auto* verify_cmd = lemma_cmd->add_subcommand("verify", "exhaustive bound verification");
    long d_max = 40;
    std::vector<long> r_values{4};
    int jobs = 1;
    verify_cmd->add_option("--d-max", d_max, "largest d to sweep");
    verify_cmd->add_option("--r", r_values, "part counts (each >= 4)");
    verify_cmd->add_option("--jobs", jobs, "worker threads");
    verify_cmd->callback([&] {
        SweepReport rep = verify_bound(d_max, r_values, jobs, sweep_guard_from_env());
        std::ostringstream os;
        os << "checked: " << rep.checked << "\nviolations: " << rep.violations.size()
           << "\nwall_time_ms: " << rep.wall_time_ms << "\n";
        emit(out, os.str(), sweep_report_to_json(rep));
        if (!rep.violations.empty()) exit_code = kExitVerificationFailed;
    });

    auto* profile_cmd = lemma_cmd->add_subcommand("profile", "lambda profile of one composition");
    long profile_d = 0;
    std::vector<long> profile_m;
    profile_cmd->add_option("--d", profile_d, "modulus d")->required();
    profile_cmd->add_option("--m", profile_m, "parts summing to d")->required();
    profile_cmd->callback([&] {
        LambdaProfile p = lambda_profile(profile_d, profile_m);
        std::ostringstream os;
        os << "lambda:";
        for (long v : p.lambda) os << " " << v;
        os << "\ncount_ones: " << p.count_ones << "\n";
        emit(out, os.str(),
             Json{{"d", p.d}, {"m", p.m}, {"lambda", p.lambda}, {"count_ones", p.count_ones}});
    });

    auto* link_cmd = lemma_cmd->add_subcommand("link", "vanishing eigenspaces vs remainder sums");
    link_cmd->add_option("-i,--input", input, "cyclic genus-0 cover spec JSON (- for stdin)");
    link_cmd->callback([&] {
        ZeroLinkReport rep = zero_character_link(cover_spec_from_json(read_json(input)));
        std::ostringstream os;
        os << "zero eigenspaces: " << rep.zero_eigenspace_count
           << "\nlambda ones: " << rep.lambda_one_count
           << "\nlink holds: " << (rep.link_holds ? "yes" : "no") << "\n";
        for (const auto& n : rep.notes) os << "note: " << n << "\n";
        emit(out, os.str(), zero_link_to_json(rep));
        if (!rep.link_holds || (rep.bound_holds && !*rep.bound_holds))
            exit_code = kExitVerificationFailed;
    });

    auto* repro_cmd = app.add_subcommand("repro", "reproduce a published table or claim");
    std::string target;
    std::string k_range = "2..10";
    long d = 5, r = 2;
    int repro_jobs = 4;
    repro_cmd->add_option("target", target,
                          "torellifalse-table | k-family-dims | section5-tables | "
                          "lemma46-sweep | pardini-example")
        ->required();
    repro_cmd->add_option("--k", k_range, "k range, e.g. 2..6");
    repro_cmd->add_option("--d", d, "modulus for section5-tables");
    repro_cmd->add_option("--r", r, "twist parameter for section5-tables");
    repro_cmd->add_option("--jobs", repro_jobs, "worker threads for sweeps");
    repro_cmd->callback([&] {
        auto [k_from, k_to] = parse_range(k_range);
        ReproResult res = run_repro(target, k_from, k_to, d, r, repro_jobs, sweep_guard_from_env());
        emit(out, res.markdown, res.json);
        if (!res.ok) exit_code = kExitVerificationFailed;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInvalidInput;
    }
    return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const CapacityError& e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const InconsistencyError& e) {
        std::cerr << "inconsistency: " << e.what() << "\n";
        return kExitVerificationFailed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    }
}
