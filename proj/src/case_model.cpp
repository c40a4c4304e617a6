#include "bdcase/case_model.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "bdcase/parser.hpp"
#include "bdcase/printer.hpp"

namespace bdcase {

CaseModel::CaseModel(Signature sig, std::vector<CaseEntry> cases)
    : sig_(std::move(sig)), cases_(std::move(cases)) {
    for (std::size_t i = 0; i < cases_.size(); ++i) {
        for (std::size_t j = i + 1; j < cases_.size(); ++j)
            if (cases_[i].name == cases_[j].name)
                throw Error("duplicate case name: " + cases_[i].name);
        for (const auto& v : cases_[i].formula.variables())
            if (!sig_.contains(v))
                throw UnboundVariable(v);
    }
}

const CaseEntry& CaseModel::case_of(const std::string& name) const {
    for (const auto& c : cases_)
        if (c.name == name) return c;
    throw Error("unknown case: " + name);
}

ClassicalCaseModel::ClassicalCaseModel(Signature sig, std::vector<CaseEntry> cases)
    : model_(std::move(sig), std::move(cases)) {
    for (const auto& c : model_.cases())
        if (c.formula.contains_delta()) throw DeltaPresent();
}

ValidationReport validate(const CaseModel& model, std::size_t var_cap) {
    ValidationReport report;
    const auto& cs = model.cases();
    for (const auto& c : cs)
        if (!nontrivial(c.formula, var_cap))
            report.violations.push_back({ViolationKind::Trivial, {c.name}});
    for (std::size_t i = 0; i < cs.size(); ++i)
        for (std::size_t j = i + 1; j < cs.size(); ++j)
            if (!jointly_exclusive(cs[i].formula, cs[j].formula, var_cap))
                report.violations.push_back({ViolationKind::NotExclusive, {cs[i].name, cs[j].name}});
    report.ok = report.violations.empty();
    return report;
}

ValidationReport validate_classical(const ClassicalCaseModel& model, std::size_t var_cap) {
    ValidationReport report;
    const auto& cs = model.cases();
    Inner falsum = Inner::conj(Inner::var("_sat"), Inner::neg(Inner::var("_sat")));
    for (const auto& c : cs)
        if (entails_classical(c.formula, falsum, var_cap))
            report.violations.push_back({ViolationKind::Trivial, {c.name}});
    for (std::size_t i = 0; i < cs.size(); ++i)
        for (std::size_t j = i + 1; j < cs.size(); ++j)
            if (!entails_classical(Inner::conj(cs[i].formula, cs[j].formula), falsum, var_cap))
                report.violations.push_back({ViolationKind::NotExclusive, {cs[i].name, cs[j].name}});
    report.ok = report.violations.empty();
    return report;
}

std::vector<std::string> most_preferred_supporting(const CaseModel& model, const Inner& phi,
                                                   std::size_t var_cap) {
    std::vector<const CaseEntry*> supporters;
    for (const auto& c : model.cases())
        if (entails(c.formula, phi, var_cap)) supporters.push_back(&c);
    if (supporters.empty()) return {};
    unsigned best = 0;
    for (const auto* c : supporters) best = std::max(best, c->rank);
    std::vector<std::string> out;
    for (const auto* c : supporters)
        if (c->rank == best) out.push_back(c->name);
    return out;
}

namespace {

bool built_from_t_probes(const Inner& f) {
    if (auto probe = match_probe(f))
        return probe->first == ProbeKind::t && probe->second.kind() == Inner::Kind::Var;
    switch (f.kind()) {
        case Inner::Kind::Neg: return built_from_t_probes(f.sub());
        case Inner::Kind::And:
        case Inner::Kind::Or:
            return built_from_t_probes(f.left()) && built_from_t_probes(f.right());
        default: return false;
    }
}

} // namespace

bool is_quasi_classical(const CaseModel& model) {
    return std::all_of(model.cases().begin(), model.cases().end(),
                       [](const CaseEntry& c) { return built_from_t_probes(c.formula); });
}

CaseModel counterpart(const ClassicalCaseModel& model) {
    std::vector<CaseEntry> cases;
    cases.reserve(model.size());
    for (const auto& c : model.cases())
        cases.push_back({c.name, substitute_t(c.formula), c.rank});
    return CaseModel(model.signature(), std::move(cases));
}

// file format ---------------------------------------------------------------

namespace {

[[noreturn]] void file_error(std::size_t offset, const std::string& what) {
    throw ParseError(offset, {what},
                     "model file error at offset " + std::to_string(offset) + ": " + what);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

} // namespace

LoadedModel parse_model_file(const std::string& text) {
    LoadedModel out;
    bool saw_vars = false, saw_prefs = false;
    std::map<std::string, unsigned> ranks;
    std::vector<std::pair<std::string, Inner>> raw_cases;

    std::size_t line_start = 0;
    while (line_start <= text.size()) {
        std::size_t eol = text.find('\n', line_start);
        std::string line = text.substr(line_start, eol == std::string::npos ? std::string::npos
                                                                            : eol - line_start);
        std::size_t offset = line_start;
        line_start = (eol == std::string::npos) ? text.size() + 1 : eol + 1;

        if (auto hash = line.find('#'); hash != std::string::npos) line = line.substr(0, hash);
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        line = line.substr(first);
        offset += first;

        if (line.rfind("classical", 0) == 0 && split_ws(line).size() == 1) {
            if (saw_vars) file_error(offset, "classical must precede vars");
            out.classical = true;
        } else if (line.rfind("vars", 0) == 0) {
            if (saw_vars) file_error(offset, "duplicate vars line");
            auto toks = split_ws(line);
            toks.erase(toks.begin());
            if (toks.empty()) file_error(offset, "vars line needs at least one name");
            try {
                out.sig = Signature(toks);
            } catch (const Error& e) {
                file_error(offset, e.what());
            }
            saw_vars = true;
        } else if (line.rfind("case", 0) == 0) {
            if (!saw_vars) file_error(offset, "case before vars");
            auto assign = line.find(":=");
            if (assign == std::string::npos) file_error(offset, "case line needs :=");
            auto head = split_ws(line.substr(4, assign - 4));
            if (head.size() != 1) file_error(offset, "case line needs exactly one name");
            Inner f;
            try {
                f = parse_inner(line.substr(assign + 2));
            } catch (const ParseError& e) {
                file_error(offset + assign + 2 + e.offset(), e.what());
            }
            if (out.classical && f.contains_delta())
                file_error(offset, "classical model forbids @ and probes");
            for (const auto& [n, g] : raw_cases)
                if (n == head[0]) file_error(offset, "duplicate case " + head[0]);
            raw_cases.emplace_back(head[0], f);
        } else if (line.rfind("prefs", 0) == 0) {
            if (saw_prefs) file_error(offset, "duplicate prefs line");
            auto toks = split_ws(line);
            toks.erase(toks.begin());
            if (toks.empty() || toks.size() % 2 == 0)
                file_error(offset, "prefs needs a chain name (op name)*");
            unsigned rank = 0;
            for (std::size_t i = 0; i < toks.size(); ++i) {
                if (i % 2 == 1) {
                    if (toks[i] == "<") ++rank;
                    else if (toks[i] != "=") file_error(offset, "prefs op must be < or =");
                    continue;
                }
                const std::string& name = toks[i];
                bool known = std::any_of(raw_cases.begin(), raw_cases.end(),
                                         [&](const auto& c) { return c.first == name; });
                if (!known) file_error(offset, "prefs names unknown case " + name);
                if (ranks.count(name)) file_error(offset, "prefs repeats case " + name);
                ranks[name] = rank;
            }
            saw_prefs = true;
        } else {
            file_error(offset, "unrecognized line: " + line);
        }
    }

    if (!saw_vars) file_error(0, "missing vars line");
    if (raw_cases.empty()) file_error(0, "model has no cases");
    if (!saw_prefs) {
        // no prefs: all cases tied at rank 0
        for (const auto& [n, f] : raw_cases) ranks[n] = 0;
    } else if (ranks.size() != raw_cases.size()) {
        for (const auto& [n, f] : raw_cases)
            if (!ranks.count(n)) file_error(0, "case " + n + " missing from prefs");
    }

    for (const auto& [n, f] : raw_cases) out.cases.push_back({n, f, ranks.at(n)});
    return out;
}

std::string emit_model_file(const CaseModel& model, bool classical) {
    std::ostringstream out;
    if (classical) out << "classical\n";
    out << "vars";
    for (const auto& n : model.signature().names()) out << " " << n;
    out << "\n";
    for (const auto& c : model.cases())
        out << "case " << c.name << " := " << print_inner(c.formula) << "\n";

    std::vector<const CaseEntry*> sorted;
    for (const auto& c : model.cases()) sorted.push_back(&c);
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const CaseEntry* a, const CaseEntry* b) { return a->rank < b->rank; });
    out << "prefs";
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (i) out << (sorted[i]->rank == sorted[i - 1]->rank ? " =" : " <");
        out << " " << sorted[i]->name;
    }
    out << "\n";
    return out.str();
}

} // namespace bdcase
