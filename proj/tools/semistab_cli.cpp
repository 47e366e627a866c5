// Command-line surface for the exact monodromy / semistable-realizability
// toolkit. Exit codes: 0 = computed (whatever the verdict), 2 = parse
// failure, 3 = precondition or range violation.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "semistab/families.hpp"
#include "semistab/io.hpp"
#include "semistab/lattice.hpp"
#include "semistab/reducibility.hpp"
#include "semistab/residue.hpp"
#include "semistab/spectral.hpp"

namespace {

using nlohmann::json;
using namespace semistab;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw Error("cannot write file: " + out_path);
    out << text;
}

std::string partition_str(const Partition& p) {
    std::string s = "[";
    for (size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
    return s + "]";
}

json partition_json(const Partition& p) {
    json out = json::array();
    for (int x : p) out.push_back(x);
    return out;
}

json lambda_json(const std::optional<Eigenvalue>& lambda) {
    if (!lambda || !lambda->is_unity_root()) return nullptr;
    json out;
    if (lambda->unity.k().fits_slong_p() && lambda->unity.order().fits_slong_p()) {
        out["k"] = lambda->unity.k().get_si();
        out["n"] = lambda->unity.order().get_si();
    } else {
        out["k"] = lambda->unity.k().get_str();
        out["n"] = lambda->unity.order().get_str();
    }
    return out;
}

json punctures_json(const MonodromyAnalysis& mono) {
    json out = json::array();
    for (const auto& p : mono.punctures) {
        json pj;
        pj["lambda"] = lambda_json(p.lambda);
        pj["jordan"] = p.single_eigenvalue ? partition_json(p.jordan.front()) : json::array();
        pj["single_block"] = p.single_block;
        out.push_back(std::move(pj));
    }
    return out;
}

void print_puncture_lines(std::ostream& os, const MonodromyAnalysis& mono) {
    for (size_t i = 0; i < mono.punctures.size(); ++i) {
        const auto& p = mono.punctures[i];
        os << "p" << (i + 1) << ": ";
        if (!p.spectrum_rational) {
            os << "spectrum not rational (no exact closed form)\n";
            continue;
        }
        if (p.single_eigenvalue) {
            os << "lambda = " << p.lambda->str() << ", jordan " << partition_str(p.jordan.front())
               << (p.single_block ? ", single block" : ", not a single block") << "\n";
        } else {
            os << "eigenvalues";
            for (size_t e = 0; e < p.eigenvalues.size(); ++e)
                os << (e ? "; " : " ") << p.eigenvalues[e].first.str() << " x"
                   << p.eigenvalues[e].second << " jordan " << partition_str(p.jordan[e]);
            os << ", not a single block\n";
        }
    }
}

json verdict_json(const Verdict& v) {
    json out;
    out["kind"] = to_string(v.kind);
    if (v.constraint && v.constraint->admissible) {
        json deg;
        deg["start"] = v.constraint->admissible->start.get_si();
        deg["step"] = v.constraint->admissible->step.get_si();
        out["degrees"] = std::move(deg);
    } else {
        out["degrees"] = nullptr;
    }
    return out;
}

json reasons_json(const std::vector<std::string>& reasons) {
    json out = json::array();
    for (const auto& r : reasons) out.push_back(r);
    return out;
}

int cmd_verify(const std::string& path, bool flatten_sum, bool as_json) {
    const RepInput input = load_representation(path);
    std::ostringstream os;
    json j;
    if (std::holds_alternative<SurfaceRepresentation>(input)) {
        const auto& rep = std::get<SurfaceRepresentation>(input);
        const TwistedMatrix defect = relation_defect(rep);
        const bool ok = defect.is_identity();
        j["valid"] = ok;
        os << "valid: " << (ok ? "true" : "false") << "\n";
        if (!ok) os << "defect: " << defect.str() << "\n";
    } else {
        const auto& sum = std::get<DirectSumRepresentation>(input);
        if (flatten_sum) {
            const FlattenedRepresentation flat = flatten(sum);
            const bool ok = is_valid(flat);
            j["valid"] = ok;
            j["conductor"] = flat.conductor;
            os << "flattened conductor: " << flat.conductor << "\n";
            os << "valid: " << (ok ? "true" : "false") << "\n";
        } else {
            bool all = true;
            json parts = json::array();
            for (size_t i = 0; i < sum.summands.size(); ++i) {
                const bool ok = is_valid(sum.summands[i]);
                all = all && ok;
                parts.push_back(ok);
                os << "summand " << (i + 1) << " valid: " << (ok ? "true" : "false") << "\n";
            }
            j["summands_valid"] = std::move(parts);
            j["valid"] = all;
            os << "valid: " << (all ? "true" : "false") << "\n";
        }
    }
    std::cout << (as_json ? j.dump(2) + "\n" : os.str());
    return 0;
}

json analyze_single_json(const SurfaceRepresentation& rep) {
    const RepAnalysis a = analyze_representation(rep);
    json j;
    j["valid"] = is_valid(rep);
    j["punctures"] = punctures_json(a.mono);
    j["reducible"] = a.reducible;
    return j;
}

void analyze_single_text(std::ostream& os, const SurfaceRepresentation& rep) {
    const RepAnalysis a = analyze_representation(rep);
    os << "rank: " << rep.rank << "\n";
    os << "valid: " << (is_valid(rep) ? "true" : "false") << "\n";
    print_puncture_lines(os, a.mono);
    os << "reducible: " << (a.reducible ? "true" : "false") << "\n";
}

int cmd_analyze(const std::string& path, bool as_json) {
    const RepInput input = load_representation(path);
    if (std::holds_alternative<SurfaceRepresentation>(input)) {
        const auto& rep = std::get<SurfaceRepresentation>(input);
        if (as_json) {
            std::cout << analyze_single_json(rep).dump(2) << "\n";
        } else {
            std::ostringstream os;
            analyze_single_text(os, rep);
            std::cout << os.str();
        }
        return 0;
    }
    const auto& sum = std::get<DirectSumRepresentation>(input);
    if (as_json) {
        json j;
        j["valid"] = is_valid(sum);
        j["summands"] = json::array();
        for (const auto& s : sum.summands) j["summands"].push_back(analyze_single_json(s));
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::ostringstream os;
    for (size_t i = 0; i < sum.summands.size(); ++i) {
        os << "summand " << (i + 1) << ":\n";
        analyze_single_text(os, sum.summands[i]);
    }
    std::cout << os.str();
    return 0;
}

int cmd_obstruct(const std::string& path, bool as_json) {
    const RepInput input = load_representation(path);

    bool valid = true;
    Verdict verdict;
    try {
        verdict = realizability_report(input);
    } catch (const InvalidRepresentation&) {
        valid = false;
        verdict.kind = VerdictKind::Inconclusive;
        verdict.reasons = {"invalid-representation"};
    }

    json j;
    j["valid"] = valid;
    j["reasons"] = reasons_json(verdict.reasons);
    j["verdict"] = verdict_json(verdict);

    std::ostringstream os;
    os << "valid: " << (valid ? "true" : "false") << "\n";
    if (std::holds_alternative<SurfaceRepresentation>(input)) {
        const auto& rep = std::get<SurfaceRepresentation>(input);
        const RepAnalysis a = analyze_representation(rep);
        j["punctures"] = punctures_json(a.mono);
        j["reducible"] = a.reducible;
        if (valid) {
            print_puncture_lines(os, a.mono);
            os << "reducible: " << (a.reducible ? "true" : "false") << "\n";
        }
        if (verdict.constraint) {
            os << "slope class: " << verdict.constraint->slope_class.str() << " (mod 1)\n";
            if (verdict.constraint->admissible) {
                os << "admissible degrees: " << verdict.constraint->admissible->start.get_str()
                   << " + " << verdict.constraint->admissible->step.get_str() << "t (t in Z)\n";
            } else {
                os << "admissible degrees: none\n";
            }
        }
    } else {
        const auto& sum = std::get<DirectSumRepresentation>(input);
        j["summands"] = json::array();
        for (const auto& s : sum.summands) j["summands"].push_back(analyze_single_json(s));
    }
    os << "verdict: " << to_string(verdict.kind) << "\n";
    if (!verdict.reasons.empty()) {
        os << "reasons:";
        for (const auto& r : verdict.reasons) os << " " << r;
        os << "\n";
    }
    std::cout << (as_json ? j.dump(2) + "\n" : os.str());
    return 0;
}

std::vector<Rational> parse_nu(const std::string& text) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(Rational::parse(tok));
    return out;
}

int cmd_generate(const std::string& family, int genus, int punctures, int rank,
                 const std::string& nu_text, unsigned long seed, const std::string& out_path) {
    RepInput rep = [&]() -> RepInput {
        if (family == "f1") {
            if (rank <= 0 || punctures <= 0)
                throw PreconditionFailed("f1 needs --rank and --punctures");
            const std::vector<Rational> nu =
                nu_text.empty() ? default_nu(punctures) : parse_nu(nu_text);
            return family1(rank, punctures, nu, genus < 0 ? 0 : genus);
        }
        if (family == "f2") return family2();
        if (family == "f3") {
            if (punctures <= 0) throw PreconditionFailed("f3 needs --punctures");
            return family3(punctures, genus < 0 ? 0 : genus);
        }
        if (family == "f4") {
            if (punctures <= 0) throw PreconditionFailed("f4 needs --punctures");
            return family4(punctures, genus < 0 ? 1 : genus);
        }
        if (family == "f5") {
            if (rank <= 0 || punctures <= 0)
                throw PreconditionFailed("f5 needs --rank and --punctures");
            return family5(rank, punctures, genus < 0 ? 1 : genus);
        }
        if (family == "main") {
            if (rank <= 0 || punctures <= 0 || genus < 0)
                throw PreconditionFailed("main needs --genus, --punctures and --rank");
            return mainthm_witness(genus, punctures, rank);
        }
        if (family == "r52") {
            if (punctures <= 0) throw PreconditionFailed("r52 needs --punctures");
            const SurfaceRepresentation rho2 = family4(punctures, genus < 1 ? 1 : genus);
            return remark52_build(rho2, seed);
        }
        throw PreconditionFailed("unknown family '" + family +
                                 "' (expected f1..f5, main, or r52)");
    }();
    emit(serialize_representation(rep), out_path);
    return 0;
}

std::vector<UnityRoot> parse_lambda_list(const std::string& text) {
    std::vector<UnityRoot> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        // strip spaces
        while (!tok.empty() && tok.front() == ' ') tok.erase(tok.begin());
        while (!tok.empty() && tok.back() == ' ') tok.pop_back();
        if (tok == "1") {
            out.emplace_back();
        } else if (tok == "-1") {
            out.push_back(UnityRoot::minus_one());
        } else if (tok.find('/') != std::string::npos) {
            const Rational e = Rational::parse(tok);  // exponent k/N of e^{2 pi i k/N}
            out.push_back(UnityRoot::from_exponent(e));
        } else {
            throw PreconditionFailed("lambda token '" + tok +
                                     "' is not 1, -1, or an exponent k/N");
        }
    }
    if (out.empty()) throw PreconditionFailed("empty lambda list");
    return out;
}

int cmd_balance(const std::string& sub_text, const std::string& quot_text, bool as_json) {
    const auto sub_lambdas = parse_lambda_list(sub_text);
    const auto quot_lambdas = parse_lambda_list(quot_text);
    if (sub_lambdas.size() != quot_lambdas.size())
        throw ShapeMismatch("sub and quot lambda lists differ in length");

    const LatticePair start(deligne_line(sub_lambdas), deligne_line(quot_lambdas));
    const auto [finished, trace] = balance(start);

    auto line_str = [](const LatticeLine& line) {
        std::string lam = "(", bet = "(";
        for (int p = 0; p < line.punctures(); ++p) {
            lam += (p ? ", " : "") + line.lambda()[static_cast<size_t>(p)].str();
            bet += (p ? ", " : "") + line.beta()[static_cast<size_t>(p)].str();
        }
        return "lambda " + lam + "), beta " + bet + "), degree " + line.degree().str();
    };

    std::ostringstream os;
    os << "sub:  " << line_str(start.sub) << "\n";
    os << "quot: " << line_str(start.quot) << "\n";
    LatticePair current = start;
    for (size_t i = 0; i < trace.size(); ++i) {
        current = gabber_move(current, trace[i].puncture, trace[i].side);
        os << "move " << (i + 1) << ": " << to_string(trace[i].side) << " at p"
           << (trace[i].puncture + 1) << " -> degrees (" << current.sub.degree().str() << ", "
           << current.quot.degree().str() << ")\n";
    }
    os << "final degrees: sub " << finished.sub.degree().str() << ", quot "
       << finished.quot.degree().str() << ", total " << finished.total_degree().str() << "\n";
    os << "moves: " << trace.size() << "\n";

    if (as_json) {
        json j;
        j["moves"] = json::array();
        for (const auto& mv : trace) {
            json mj;
            mj["puncture"] = mv.puncture + 1;
            mj["side"] = to_string(mv.side);
            j["moves"].push_back(std::move(mj));
        }
        j["final"]["sub_degree"] = finished.sub.degree().str();
        j["final"]["quot_degree"] = finished.quot.degree().str();
        j["final"]["total_degree"] = finished.total_degree().str();
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << os.str();
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification, monodromy analysis and semistable-realizability "
                 "obstructions for punctured-surface representations"};
    app.require_subcommand(1);

    std::string path, out_path, family, nu_text, sub_text, quot_text;
    bool as_json = false, flatten_sum = false;
    int genus = -1, punctures = -1, rank = -1;
    unsigned long seed = 1;

    auto* verify = app.add_subcommand("verify", "check the surface-group relation");
    verify->add_option("file", path, "representation file")->required();
    verify->add_flag("--flatten", flatten_sum, "flatten a direct sum to cyclotomic matrices first");
    verify->add_flag("--json", as_json, "machine-readable output");

    auto* analyze = app.add_subcommand("analyze", "per-puncture spectral and reducibility report");
    analyze->add_option("file", path, "representation file")->required();
    analyze->add_flag("--json", as_json, "machine-readable output");

    auto* obstruct = app.add_subcommand("obstruct", "semistable-realizability verdict");
    obstruct->add_option("file", path, "representation file")->required();
    obstruct->add_flag("--json", as_json, "machine-readable output");

    auto* generate = app.add_subcommand("generate", "emit a built-in representation family");
    generate->add_option("--family", family, "f1, f2, f3, f4, f5, main, or r52")->required();
    generate->add_option("--genus", genus, "genus g");
    generate->add_option("--punctures", punctures, "puncture count m");
    generate->add_option("--rank", rank, "rank n");
    generate->add_option("--nu", nu_text, "comma-separated rationals for f1 (sum 0)");
    generate->add_option("--seed", seed, "seed for r52 gamma sampling (default 1)");
    generate->add_option("-o,--output", out_path, "write to file instead of stdout");

    auto* balance_cmd = app.add_subcommand("balance", "run the degree-balancing algorithm");
    balance_cmd
        ->add_option("--lambdas-sub", sub_text,
                     "local eigenvalues of the subline: 1, -1, or exponents k/N")
        ->required();
    balance_cmd->add_option("--lambdas-quot", quot_text, "local eigenvalues of the quotient line")
        ->required();
    balance_cmd->add_flag("--json", as_json, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 3;
    }

    try {
        if (*verify) return cmd_verify(path, flatten_sum, as_json);
        if (*analyze) return cmd_analyze(path, as_json);
        if (*obstruct) return cmd_obstruct(path, as_json);
        if (*generate) return cmd_generate(family, genus, punctures, rank, nu_text, seed, out_path);
        if (*balance_cmd) return cmd_balance(sub_text, quot_text, as_json);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
