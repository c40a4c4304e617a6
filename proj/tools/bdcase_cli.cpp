#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "bdcase/arguments.hpp"
#include "bdcase/case_model.hpp"
#include "bdcase/parser.hpp"
#include "bdcase/printer.hpp"
#include "bdcase/two_layered.hpp"

using json = nlohmann::ordered_json;

namespace {

// Exit codes: 0 holds, 1 does not hold, 2 usage/parse, 3 ill-formed model,
// 4 theorem mismatch, 5 not determinate.
enum ExitCode {
    kOk = 0,
    kDoesNotHold = 1,
    kBadInput = 2,
    kInvalidModel = 3,
    kMismatch = 4,
    kNotDeterminate = 5,
};

struct Config {
    bool json_output = false;
    std::size_t var_cap = bdcase::kDefaultVarCap;
    std::uint64_t seed = 0; // reserved for randomized subcommands; none yet
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw bdcase::Error("cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

const char* violation_name(bdcase::ViolationKind k) {
    switch (k) {
        case bdcase::ViolationKind::Trivial: return "trivial";
        case bdcase::ViolationKind::NotExclusive: return "not-exclusive";
        case bdcase::ViolationKind::RankGap: return "rank-gap";
    }
    return "?";
}

json violations_json(const bdcase::ValidationReport& report) {
    json out = json::array();
    for (const auto& v : report.violations) {
        json names = json::array();
        for (const auto& n : v.case_names) names.push_back(n);
        out.push_back({{"kind", violation_name(v.kind)}, {"cases", names}});
    }
    return out;
}

void print_violations(const bdcase::ValidationReport& report) {
    for (const auto& v : report.violations) {
        std::cout << "violation " << violation_name(v.kind);
        for (const auto& n : v.case_names) std::cout << " " << n;
        std::cout << "\n";
    }
}

bdcase::ValidationReport validate_loaded(const bdcase::LoadedModel& loaded,
                                         const Config& cfg) {
    if (loaded.classical) return bdcase::validate_classical(loaded.as_classical(), cfg.var_cap);
    return bdcase::validate(loaded.as_bd(), cfg.var_cap);
}

// Loads a model file and checks well-formedness; throws ExitCode via
// the int-exception idiom below on failure.
struct ModelGate {
    bdcase::LoadedModel loaded;
};

ModelGate load_valid_model(const std::string& path, const Config& cfg) {
    ModelGate gate{bdcase::parse_model_file(read_file(path))};
    bdcase::ValidationReport report = validate_loaded(gate.loaded, cfg);
    if (!report.ok) {
        if (cfg.json_output)
            std::cout << json{{"error", "invalid model"}, {"violations", violations_json(report)}}
                      << "\n";
        else
            print_violations(report);
        throw static_cast<int>(kInvalidModel);
    }
    return gate;
}

int cmd_validate(const std::string& path, const Config& cfg) {
    bdcase::LoadedModel loaded = bdcase::parse_model_file(read_file(path));
    bdcase::ValidationReport report = validate_loaded(loaded, cfg);
    if (cfg.json_output)
        std::cout << json{{"ok", report.ok}, {"violations", violations_json(report)}} << "\n";
    else if (report.ok)
        std::cout << "ok\n";
    else
        print_violations(report);
    return report.ok ? kOk : kInvalidModel;
}

int cmd_entails(const std::string& phi_text, const std::string& chi_text, bool classical,
                const Config& cfg) {
    bdcase::Inner phi = bdcase::parse_inner(phi_text);
    bdcase::Inner chi = bdcase::parse_inner(chi_text);

    if (classical) {
        bool holds = bdcase::entails_classical(phi, chi, cfg.var_cap);
        json counter = nullptr;
        std::string counter_text;
        if (!holds) {
            bdcase::Signature sig = bdcase::Signature::union_of(
                bdcase::Signature::of_formula(phi), bdcase::Signature::of_formula(chi));
            std::uint64_t total = std::uint64_t{1} << sig.size();
            for (std::uint64_t idx = 0; idx < total; ++idx) {
                std::vector<bool> bits(sig.size());
                for (std::size_t j = 0; j < sig.size(); ++j) bits[j] = (idx >> j) & 1u;
                bdcase::ClassicalValuation v(sig, bits);
                if (bdcase::eval2(phi, v) && !bdcase::eval2(chi, v)) {
                    counter = json::object();
                    for (std::size_t j = 0; j < sig.size(); ++j) {
                        counter[sig.names()[j]] = static_cast<bool>(bits[j]);
                        if (j) counter_text += " ";
                        counter_text += sig.names()[j] + "=" + (bits[j] ? "true" : "false");
                    }
                    break;
                }
            }
        }
        if (cfg.json_output)
            std::cout << json{{"holds", holds}, {"counter", counter}} << "\n";
        else if (holds)
            std::cout << "entails\n";
        else
            std::cout << "does not entail; counter-valuation " << counter_text << "\n";
        return holds ? kOk : kDoesNotHold;
    }

    bdcase::EntailmentResult res = bdcase::entails_certified(phi, chi, cfg.var_cap);
    if (cfg.json_output) {
        json counter = nullptr;
        if (res.counter) {
            counter = json::object();
            const auto& v = *res.counter;
            for (std::size_t j = 0; j < v.signature().size(); ++j)
                counter[v.signature().names()[j]] = bdcase::to_string(v.values()[j]);
        }
        std::cout << json{{"holds", res.holds}, {"counter", counter}} << "\n";
    } else if (res.holds) {
        std::cout << "entails\n";
    } else {
        std::cout << "does not entail; counter-valuation " << res.counter->to_string() << "\n";
    }
    return res.holds ? kOk : kDoesNotHold;
}

json witnesses_json(const bdcase::StatusResult& r) {
    json out = json::array();
    for (const auto& w : r.witnesses) out.push_back(w);
    return out;
}

int cmd_classify(const std::string& path, const std::string& phi_text,
                 const std::string& chi_text, const Config& cfg) {
    ModelGate gate = load_valid_model(path, cfg);
    bdcase::CaseModel model = gate.loaded.as_bd();
    bdcase::Argument arg{bdcase::parse_inner(phi_text), bdcase::parse_inner(chi_text)};
    bdcase::ArgumentStatus status = bdcase::classify(model, arg, cfg.var_cap);

    static const char* pol_keys[3] = {"pos", "neg", "strong"};
    if (cfg.json_output) {
        json out;
        json wit;
        auto fill = [&](const char* key, const std::array<bdcase::StatusResult, 3>& row) {
            json flags, w;
            for (int i = 0; i < 3; ++i) {
                flags[pol_keys[i]] = row[i].holds;
                w[pol_keys[i]] = witnesses_json(row[i]);
            }
            out[key] = flags;
            wit[key] = w;
        };
        fill("coherent", status.coherent);
        fill("presumptively_valid", status.presumptively_valid);
        fill("conclusive", status.conclusive);
        out["witnesses"] = wit;
        out["presumptive"] = status.presumptive;
        std::cout << out << "\n";
    } else {
        auto line = [&](const char* key, const std::array<bdcase::StatusResult, 3>& row) {
            for (int i = 0; i < 3; ++i) {
                std::cout << key << " " << pol_keys[i] << " "
                          << (row[i].holds ? "true" : "false");
                for (const auto& w : row[i].witnesses) std::cout << " " << w;
                std::cout << "\n";
            }
        };
        line("coherent", status.coherent);
        line("presumptively_valid", status.presumptively_valid);
        line("conclusive", status.conclusive);
        std::cout << "presumptive " << (status.presumptive ? "true" : "false") << "\n";
    }
    return kOk;
}

int cmd_counterpart(const std::string& path, const Config& cfg) {
    bdcase::LoadedModel loaded = bdcase::parse_model_file(read_file(path));
    if (!loaded.classical)
        throw bdcase::ParseError(0, {"classical"}, "counterpart expects a classical model file");
    bdcase::ValidationReport report = bdcase::validate_classical(loaded.as_classical(), cfg.var_cap);
    if (!report.ok) {
        if (cfg.json_output)
            std::cout << json{{"error", "invalid model"}, {"violations", violations_json(report)}}
                      << "\n";
        else
            print_violations(report);
        return kInvalidModel;
    }
    std::string text = bdcase::emit_model_file(bdcase::counterpart(loaded.as_classical()));
    if (cfg.json_output)
        std::cout << json{{"model", text}} << "\n";
    else
        std::cout << text;
    return kOk;
}

int cmd_mu(const std::string& path, const Config& cfg) {
    ModelGate gate = load_valid_model(path, cfg);
    bdcase::MuCounterpart mc = bdcase::mu_counterpart(gate.loaded.as_bd(), cfg.var_cap);
    if (cfg.json_output) {
        json points = json::array();
        for (std::size_t i = 0; i < mc.point_names.size(); ++i) {
            const std::string& point = mc.point_names[i];
            const bdcase::Valuation& v = mc.model.points.valuation_at(i);
            json val;
            for (std::size_t j = 0; j < v.signature().size(); ++j)
                val[v.signature().names()[j]] = bdcase::to_string(v.values()[j]);
            points.push_back({{"point", point},
                              {"case", mc.case_of.at(point)},
                              {"mass", mc.model.mu.mu({point}).to_string()},
                              {"val", val}});
        }
        std::cout << json{{"points", points}, {"capacity", "additive"}} << "\n";
    } else {
        std::cout << bdcase::emit_mu_counterpart(mc);
    }
    return kOk;
}

int cmd_eval(const std::string& path, const std::string& alpha_text, const Config& cfg) {
    ModelGate gate = load_valid_model(path, cfg);
    bdcase::Outer alpha = bdcase::parse_outer(alpha_text);
    bdcase::MuCounterpart mc = bdcase::mu_counterpart(gate.loaded.as_bd(), cfg.var_cap);
    bdcase::Rational value = bdcase::eval_outer(mc.model, alpha);
    bool holds = value == bdcase::Rational(1);
    if (cfg.json_output)
        std::cout << json{{"value", value.to_string()}, {"holds", holds}} << "\n";
    else
        std::cout << value.to_string() << "\n";
    return holds ? kOk : kDoesNotHold;
}

int cmd_verify(const std::string& path, const std::string& phi_text,
               const std::string& chi_text, const Config& cfg) {
    ModelGate gate = load_valid_model(path, cfg);
    bdcase::Argument arg{bdcase::parse_inner(phi_text), bdcase::parse_inner(chi_text)};
    bdcase::RepReport report = bdcase::verify_representation(gate.loaded.as_bd(), arg, cfg.var_cap);
    if (cfg.json_output) {
        json instances = json::array();
        for (const auto& inst : report.instances)
            instances.push_back({{"description", inst.description},
                                 {"left", inst.left},
                                 {"right", inst.right},
                                 {"agree", inst.agree()}});
        json warnings = json::array();
        for (const auto& w : report.warnings) warnings.push_back(w);
        std::cout << json{{"all_agree", report.all_agree},
                          {"instances", instances},
                          {"warnings", warnings}}
                  << "\n";
    } else {
        for (const auto& inst : report.instances)
            std::cout << inst.description << " left=" << (inst.left ? "true" : "false")
                      << " right=" << (inst.right ? "true" : "false")
                      << (inst.agree() ? "" : " MISMATCH") << "\n";
        for (const auto& w : report.warnings) std::cout << "warning: " << w << "\n";
        std::cout << (report.all_agree ? "agree\n" : "disagree\n");
    }
    return report.all_agree ? kOk : kMismatch;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Paraconsistent case-model reasoner over BD-Delta"};
    app.require_subcommand(1);

    Config cfg;
    app.add_flag("--json", cfg.json_output, "JSON output");
    app.add_option("--var-cap", cfg.var_cap, "Enumeration variable cap")
        ->check(CLI::PositiveNumber);
    app.add_option("--seed", cfg.seed, "Seed for randomized subcommands");

    std::string model_path, phi_text, chi_text, alpha_text;
    bool classical = false;

    auto* validate_cmd = app.add_subcommand("validate", "Check a case model file");
    validate_cmd->add_option("file", model_path)->required();

    auto* entails_cmd = app.add_subcommand("entails", "Decide entailment between two formulas");
    entails_cmd->add_flag("--classical", classical, "Two-valued entailment");
    entails_cmd->add_option("phi", phi_text)->required();
    entails_cmd->add_option("chi", chi_text)->required();

    auto* classify_cmd = app.add_subcommand("classify", "Classify an argument over a model");
    classify_cmd->add_option("file", model_path)->required();
    classify_cmd->add_option("phi", phi_text)->required();
    classify_cmd->add_option("chi", chi_text)->required();

    auto* counterpart_cmd =
        app.add_subcommand("counterpart", "Translate a classical model to its counterpart");
    counterpart_cmd->add_option("file", model_path)->required();

    auto* mu_cmd = app.add_subcommand("mu", "Emit the mu-counterpart of a model");
    mu_cmd->add_option("file", model_path)->required();

    auto* eval_cmd = app.add_subcommand("eval", "Evaluate an outer formula on the mu-counterpart");
    eval_cmd->add_option("file", model_path)->required();
    eval_cmd->add_option("alpha", alpha_text)->required();

    auto* verify_cmd = app.add_subcommand("verify", "Check the representation theorems");
    verify_cmd->add_option("file", model_path)->required();
    verify_cmd->add_option("phi", phi_text)->required();
    verify_cmd->add_option("chi", chi_text)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kBadInput;
    }

    try {
        if (validate_cmd->parsed()) return cmd_validate(model_path, cfg);
        if (entails_cmd->parsed()) return cmd_entails(phi_text, chi_text, classical, cfg);
        if (classify_cmd->parsed()) return cmd_classify(model_path, phi_text, chi_text, cfg);
        if (counterpart_cmd->parsed()) return cmd_counterpart(model_path, cfg);
        if (mu_cmd->parsed()) return cmd_mu(model_path, cfg);
        if (eval_cmd->parsed()) return cmd_eval(model_path, alpha_text, cfg);
        if (verify_cmd->parsed()) return cmd_verify(model_path, phi_text, chi_text, cfg);
    } catch (int code) {
        return code; // load_valid_model already printed the report
    } catch (const bdcase::NotDeterminate& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kNotDeterminate;
    } catch (const bdcase::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const bdcase::CapacityExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const bdcase::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    }
    return kBadInput;
}
