#include "majority/cli_app.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <ostream>

#include "CLI11.hpp"

#include "majority/error.hpp"
#include "majority/profile_io.hpp"
#include "majority/report.hpp"

namespace majority::cli {

namespace {

using report::json;

struct CommonOptions {
    std::string profile_path;
    std::string triple_text; // "a,b,c"
    std::string format = "text";
    uint64_t budget = kDefaultBudget;
    bool keep_going = false;
};

std::vector<std::string> split_commas(const std::string& text) {
    std::vector<std::string> out;
    std::string part;
    for (char ch : text + ",") {
        if (ch == ',') {
            out.push_back(part);
            part.clear();
        } else if (!isspace(static_cast<unsigned char>(ch))) {
            part += ch;
        }
    }
    return out;
}

std::vector<Triple> select_triples(const Profile& p, const CommonOptions& opt) {
    const AlternativeSet& alts = p.alternatives();
    if (!opt.triple_text.empty()) {
        auto names = split_commas(opt.triple_text);
        if (names.size() != 3) {
            raise(ErrorCode::UsageError, "--triple expects three comma-separated ids");
        }
        return {triple_from_names(alts, names[0], names[1], names[2])};
    }
    std::vector<Triple> triples = all_triples(alts.size());
    if (triples.empty()) {
        raise(ErrorCode::UsageError, "at least three alternatives required");
    }
    return triples;
}

void emit(std::ostream& out, const CommonOptions& opt, const json& j,
          const std::string& text) {
    if (opt.format == "json") {
        out << j.dump(2) << "\n";
    } else {
        out << text;
    }
}

// Runs a per-triple analysis over every selected triple and assembles the
// shared report envelope.
int run_per_triple(
    const std::string& command, const CommonOptions& opt, std::ostream& out,
    std::ostream& err,
    const std::function<json(const Profile&, const Triple&)>& make_json,
    const std::function<std::string(const Profile&, const Triple&)>& make_text) {
    ProfileFileResult loaded = load_profile_file(opt.profile_path, opt.keep_going);
    for (const auto& d : loaded.diagnostics) {
        err << opt.profile_path << ":" << d.line << ": " << d.message << "\n";
    }
    const Profile& p = loaded.profile;
    std::vector<Triple> triples = select_triples(p, opt);

    json j = report::json_envelope(command);
    j["profile"] = opt.profile_path;
    std::string text;
    if (triples.size() == 1) {
        j["triple"] = report::triple_names(p.alternatives(), triples.front());
        j["result"] = make_json(p, triples.front());
        text = make_text(p, triples.front());
    } else {
        j["triple"] = nullptr;
        json per = json::array();
        for (const Triple& t : triples) {
            json entry;
            entry["triple"] = report::triple_names(p.alternatives(), t);
            entry["result"] = make_json(p, t);
            per.push_back(entry);
            const AlternativeSet& alts = p.alternatives();
            text += "== triple (" + alts.name(t.a) + "," + alts.name(t.b) + "," +
                    alts.name(t.c) + ") ==\n";
            text += make_text(p, t);
        }
        j["result"] = json{{"per_triple", per}};
    }
    emit(out, opt, j, text);
    return loaded.diagnostics.empty() ? 0 : 2;
}

Condition condition_from_name(const std::string& name) {
    for (Condition c : kAllConditions) {
        if (name == condition_name(c)) return c;
    }
    raise(ErrorCode::UsageError, "unknown condition '" + name + "'");
}

} // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"majority rule aggregation and transitivity analysis"};
    app.require_subcommand(1);

    CommonOptions opt;
    int census_n = 2;
    std::string census_types = "all";
    std::string verify_condition = "extremal_restriction";
    int verify_n_max = 4;
    int axioms_bound = 3;
    int decompose_bound = 14;

    auto add_common = [&](CLI::App* cmd, bool needs_profile) {
        if (needs_profile) {
            cmd->add_option("--profile", opt.profile_path, "profile file")->required();
            cmd->add_option("--triple", opt.triple_text,
                            "restrict to one triple, e.g. x,y,z (default: all triples)");
            cmd->add_flag("--keep-going", opt.keep_going,
                          "report malformed lines but keep analysing the rest");
        }
        cmd->add_option("--format", opt.format, "text or json (census also: csv)")
            ->check(CLI::IsMember({"text", "json", "csv"}));
        cmd->add_option("--budget", opt.budget, "enumeration budget");
    };

    CLI::App* aggregate_cmd = app.add_subcommand("aggregate", "majority aggregation and counts");
    add_common(aggregate_cmd, true);
    CLI::App* check_cmd = app.add_subcommand("check", "domain-restriction condition report");
    add_common(check_cmd, true);
    CLI::App* reduce_cmd = app.add_subcommand("reduce", "rewrite to the steady reduced structure");
    add_common(reduce_cmd, true);
    CLI::App* classify_cmd = app.add_subcommand("classify", "standard form B_{k,l}");
    add_common(classify_cmd, true);
    CLI::App* cycles_cmd = app.add_subcommand("cycles", "strict cycle findings");
    add_common(cycles_cmd, true);
    CLI::App* theorem1_cmd =
        app.add_subcommand("theorem1", "single-cycle transitivity condition");
    add_common(theorem1_cmd, true);
    CLI::App* corollary1_cmd =
        app.add_subcommand("corollary1", "antagonistic cycles + extremal restriction");
    add_common(corollary1_cmd, true);
    CLI::App* corollary2_cmd =
        app.add_subcommand("corollary2", "antagonistic cycles + Inada conditions");
    add_common(corollary2_cmd, true);
    CLI::App* decompose_cmd =
        app.add_subcommand("decompose", "maximal balanced part with ordinal remainder");
    add_common(decompose_cmd, true);
    decompose_cmd->add_option("--bound", decompose_bound, "subset enumeration bound");

    CLI::App* axioms_cmd = app.add_subcommand("axioms", "verify the profile-algebra axioms");
    add_common(axioms_cmd, false);
    axioms_cmd->add_option("--n-bound", axioms_bound, "max voters per enumerated set");

    CLI::App* census_cmd = app.add_subcommand("census", "transitivity census");
    add_common(census_cmd, false);
    census_cmd->add_option("--n", census_n, "voters")->required();
    census_cmd->add_option("--types", census_types, "all, strict, one_tie or concerned")
        ->check(CLI::IsMember({"all", "strict", "one_tie", "concerned"}));

    CLI::App* verify_cmd = app.add_subcommand("verify", "sufficiency sweep for a condition");
    add_common(verify_cmd, false);
    verify_cmd->add_option("--condition", verify_condition, "condition name")->required();
    verify_cmd->add_option("--n-max", verify_n_max, "max voters");

    std::reverse(args.begin(), args.end()); // CLI11 consumes back to front
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (opt.format == "csv" && !census_cmd->parsed()) {
            raise(ErrorCode::UsageError, "--format csv is only available for census");
        }
        if (aggregate_cmd->parsed()) {
            ProfileFileResult loaded = load_profile_file(opt.profile_path, opt.keep_going);
            for (const auto& d : loaded.diagnostics) {
                err << opt.profile_path << ":" << d.line << ": " << d.message << "\n";
            }
            Profile p = loaded.profile;
            if (!opt.triple_text.empty()) {
                p = p.restricted(select_triples(p, opt).front());
            }
            json j = report::json_envelope("aggregate");
            j["profile"] = opt.profile_path;
            j["result"] = report::aggregate_report(p);
            emit(out, opt, j, report::aggregate_text(p));
            return loaded.diagnostics.empty() ? 0 : 2;
        }
        if (check_cmd->parsed()) {
            return run_per_triple("check", opt, out, err, report::condition_report_json,
                                  report::condition_text);
        }
        if (reduce_cmd->parsed()) {
            return run_per_triple(
                "reduce", opt, out, err,
                [](const Profile& p, const Triple& t) {
                    return report::reduction_report(reduce(p, t));
                },
                [](const Profile& p, const Triple& t) {
                    return report::reduction_text(reduce(p, t));
                });
        }
        if (classify_cmd->parsed()) {
            return run_per_triple(
                "classify", opt, out, err,
                [](const Profile& p, const Triple& t) {
                    ReducedStructure rs = reduce(p, t);
                    json j;
                    j["k"] = rs.k;
                    j["l"] = rs.l;
                    j["form"] = rs.form_label();
                    return j;
                },
                [](const Profile& p, const Triple& t) {
                    return "  " + reduce(p, t).form_label() + "\n";
                });
        }
        if (cycles_cmd->parsed()) {
            return run_per_triple("cycles", opt, out, err, report::cycles_report,
                                  report::cycles_text);
        }
        auto theorem_runner = [&](const std::string& name,
                                  TheoremVerdict (*checker)(const Profile&, const Triple&)) {
            return run_per_triple(
                name, opt, out, err,
                [checker](const Profile& p, const Triple& t) {
                    return report::theorem_report(checker(p, t), p.alternatives());
                },
                [checker](const Profile& p, const Triple& t) {
                    return report::theorem_text(checker(p, t), p.alternatives());
                });
        };
        if (theorem1_cmd->parsed()) return theorem_runner("theorem1", check_theorem1);
        if (corollary1_cmd->parsed()) return theorem_runner("corollary1", check_corollary1);
        if (corollary2_cmd->parsed()) return theorem_runner("corollary2", check_corollary2);
        if (decompose_cmd->parsed()) {
            return run_per_triple(
                "decompose", opt, out, err,
                [&](const Profile& p, const Triple& t) {
                    return report::decomposition_report(
                        balanced_decomposition(p, t, decompose_bound));
                },
                [&](const Profile& p, const Triple& t) {
                    return report::decomposition_text(
                        balanced_decomposition(p, t, decompose_bound));
                });
        }
        if (axioms_cmd->parsed()) {
            AxiomReport r = verify_axioms(axioms_bound);
            json j = report::json_envelope("axioms");
            j["n_bound"] = axioms_bound;
            j["result"] = report::axiom_report_json(r);
            emit(out, opt, j, report::axiom_text(r));
            return 0;
        }
        if (census_cmd->parsed()) {
            std::vector<TripleType> types;
            for (const TripleType& type : TripleType::all()) {
                bool want = census_types == "all" ||
                            (census_types == "strict" && type.strict()) ||
                            (census_types == "one_tie" && type.one_tie()) ||
                            (census_types == "concerned" && !type.unconcerned());
                if (want) types.push_back(type);
            }
            CensusReport r = transitivity_census(census_n, types, opt.budget);
            if (opt.format == "csv") {
                out << report::census_report_csv(r);
                return 0;
            }
            json j = report::json_envelope("census");
            j["types"] = census_types;
            j["result"] = report::census_report_json(r);
            emit(out, opt, j, report::census_text(r));
            return 0;
        }
        if (verify_cmd->parsed()) {
            SufficiencyResult r =
                verify_sufficiency(condition_from_name(verify_condition), verify_n_max,
                                   opt.budget);
            json j = report::json_envelope("verify");
            j["result"] = report::sufficiency_report_json(r);
            emit(out, opt, j, report::sufficiency_text(r));
            return 0;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        switch (e.code()) {
        case ErrorCode::BudgetExceeded:
        case ErrorCode::SearchBoundExceeded:
        case ErrorCode::BoundExceeded:
            return 1;
        default:
            return 2;
        }
    }
    return 2; // no subcommand matched
}

} // namespace majority::cli
