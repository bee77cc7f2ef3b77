/*
 * Copyright 2026 The Anick Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "anick/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "anick/error.hpp"

namespace anick::cli {

using nlohmann::json;

namespace {

struct Options {
    std::string command;
    std::string input;
    std::uint64_t max_degree = 7;
    std::size_t degree = 4;
    std::size_t max_length = 10;
    std::string dot_file;
    std::string format = "text";
    bool complete = false;
    bool show_homotopy = false;
    bool timings = false;
};

/// Thrown when a command has produced its output but must exit nonzero.
struct EarlyExit {
    int code;
};

struct Report {
    json results = json::object();
    std::ostringstream text;
};

Presentation load_presentation(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::InvalidInput, "cannot read presentation file '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return Presentation::from_json(buffer.str());
}

json counterexample_json(const RewriteSystem& rs, const Counterexample& ce) {
    return {
        {"word", rs.str(ce.overlap.word)},
        {"first", rs.str(rs.rules()[ce.overlap.first].poly)},
        {"second", rs.str(rs.rules()[ce.overlap.second].poly)},
        {"offset", ce.overlap.offset},
        {"left", rs.str(ce.left)},
        {"right", rs.str(ce.right)},
        {"difference", rs.str(ce.difference)},
    };
}

void print_counterexample(std::ostream& os, const RewriteSystem& rs, const Counterexample& ce) {
    os << "counterexample at " << rs.str(ce.overlap.word) << "\n";
    os << "  first rule:  " << rs.str(rs.rules()[ce.overlap.first].poly) << " at 0\n";
    os << "  second rule: " << rs.str(rs.rules()[ce.overlap.second].poly) << " at " << ce.overlap.offset << "\n";
    os << "  left normal form:  " << rs.str(ce.left) << "\n";
    os << "  right normal form: " << rs.str(ce.right) << "\n";
    os << "  difference: " << rs.str(ce.difference) << "\n";
}

json rules_json(const RewriteSystem& rs) {
    json rules = json::array();
    for (const auto& r : rs.rules()) rules.push_back(rs.str(r.poly));
    return rules;
}

/// Makes sure the relations form a minimal Groebner basis up to the bound,
/// completing them when --complete is set.
RewriteSystem gated_system(const Presentation& pres, const Options& opt, Report& report) {
    RewriteSystem rs = RewriteSystem::from_presentation(pres);
    std::uint64_t bound = std::max<std::uint64_t>(opt.max_degree, rs.max_lm_weight());
    if (opt.complete) {
        RewriteSystem done = complete(rs, bound);
        if (done.rules().size() != rs.rules().size() || done.polynomials() != rs.polynomials()) {
            report.results["completed_rules"] = rules_json(done);
            report.text << "completed to " << done.rules().size() << " rules\n";
        }
        return done;
    }
    GroebnerCheck check = check_groebner(rs, bound);
    if (!check.verified()) {
        report.results["gb_check"] = {{"verified", false}, {"counterexample", counterexample_json(rs, *check.counterexample)}};
        report.text << "relations are not a Groebner basis (pass --complete to complete them)\n";
        print_counterexample(report.text, rs, *check.counterexample);
        throw EarlyExit{kCounterexample};
    }
    if (!rs.minimal()) {
        throw Error(ErrorCode::NotMinimal, "relations are a Groebner basis but not minimal; pass --complete to "
                                           "interreduce them");
    }
    rs.mark_verified(bound);
    return rs;
}

void cmd_gb_check(const Presentation& pres, const Options& opt, Report& report) {
    RewriteSystem rs = RewriteSystem::from_presentation(pres);
    GroebnerCheck check = check_groebner(rs, opt.max_degree);
    report.results["verified"] = check.verified();
    report.results["max_degree"] = opt.max_degree;
    report.results["overlaps_checked"] = check.overlaps_checked;
    report.results["minimal"] = rs.minimal();
    report.results["reduced"] = rs.reduced();
    if (check.verified()) {
        report.text << "verified up to degree " << opt.max_degree << " (" << check.overlaps_checked
                    << " overlaps checked; minimal: " << (rs.minimal() ? "yes" : "no")
                    << ", reduced: " << (rs.reduced() ? "yes" : "no") << ")\n";
        return;
    }
    report.results["counterexample"] = counterexample_json(rs, *check.counterexample);
    print_counterexample(report.text, rs, *check.counterexample);
    throw EarlyExit{kCounterexample};
}

void cmd_gb_complete(const Presentation& pres, const Options& opt, Report& report) {
    RewriteSystem done = complete(RewriteSystem::from_presentation(pres), opt.max_degree);
    report.results["rules"] = rules_json(done);
    report.results["max_degree"] = opt.max_degree;
    report.text << done.rules().size() << " rules (reduced Groebner basis, degree bound " << opt.max_degree << ")\n";
    for (const auto& r : done.rules()) report.text << "  " << done.str(r.poly) << "\n";
}

void cmd_normal_words(const Presentation& pres, const Options& opt, Report& report) {
    RewriteSystem rs = gated_system(pres, opt, report);
    auto words = normal_words(rs, opt.max_length);
    auto counts = count_normal_words(rs, opt.max_length);
    json list = json::array();
    for (const auto& w : words) list.push_back(rs.str(w));
    report.results["counts"] = counts;
    report.results["words"] = list;
    report.text << "counts by length:";
    for (auto c : counts) report.text << " " << c;
    report.text << "\n";
    for (const auto& w : words) report.text << rs.str(w) << "\n";
}

void cmd_obstructions(const Presentation& pres, const Options& opt, Report& report) {
    RewriteSystem rs = gated_system(pres, opt, report);
    ObstructionSet obs = obstructions(rs);
    std::vector<Word> words = obs.words();
    std::sort(words.begin(), words.end(), [&](const Word& a, const Word& b) { return rs.order().compare(a, b) > 0; });
    json list = json::array();
    for (const auto& w : words) {
        list.push_back(rs.str(w));
        report.text << rs.str(w) << "\n";
    }
    report.results["obstructions"] = list;
}

void cmd_chain_graph(const Presentation& pres, const Options& opt, Report& report) {
    RewriteSystem rs = gated_system(pres, opt, report);
    ChainGraph g = build_chain_graph(obstructions(rs), pres.alphabet(), pres.order());
    json nodes = json::array();
    for (const auto& n : g.nodes()) nodes.push_back(rs.str(n));
    json edges = json::array();
    report.text << "nodes:";
    for (const auto& n : g.nodes()) report.text << " " << rs.str(n);
    report.text << "\nedges:\n";
    for (const auto& e : g.edges()) {
        json je = {{"from", rs.str(g.nodes()[e.from])}, {"to", rs.str(g.nodes()[e.to])}};
        report.text << "  " << rs.str(g.nodes()[e.from]) << " -> " << rs.str(g.nodes()[e.to]);
        if (e.witness) {
            je["witness"] = rs.str(*e.witness);
            report.text << " [" << rs.str(*e.witness) << "]";
        }
        report.text << "\n";
        edges.push_back(je);
    }
    report.results["nodes"] = nodes;
    report.results["edges"] = edges;
    if (!opt.dot_file.empty()) {
        std::ofstream dot(opt.dot_file);
        if (!dot) throw Error(ErrorCode::InvalidInput, "cannot write DOT file '" + opt.dot_file + "'");
        dot << to_dot(g.pruned(), pres.alphabet());
    }
}

void cmd_chains(const Presentation& pres, const Options& opt, Report& report) {
    RewriteSystem rs = gated_system(pres, opt, report);
    ResolutionEngine engine(pres, rs, {});
    const auto& cs = engine.chains(opt.degree);
    json list = json::array();
    for (const auto& c : cs) {
        list.push_back(rs.str(c.word));
        report.text << rs.str(c.word) << "\n";
    }
    report.results["degree"] = opt.degree;
    report.results["chains"] = list;
}

void cmd_resolve(const Presentation& pres, const Options& opt, Report& report) {
    RewriteSystem rs = gated_system(pres, opt, report);
    ResolutionEngine engine(pres, rs, {});
    if (opt.degree == 0) throw Error(ErrorCode::InvalidInput, "--degree must be at least 1");
    json list = json::array();
    for (const auto& c : engine.chains(opt.degree)) {
        const ModuleElement& d = engine.differential(opt.degree, c);
        json entry = {{"chain", rs.str(c.word)}, {"value", to_json(d, pres)}};
        report.text << "d" << opt.degree << "(" << rs.str(c.word) << " ⊗ 1) = " << engine.str(d) << "\n";
        if (opt.show_homotopy && opt.degree >= 2) {
            ModuleElement corr = engine.correction(opt.degree, c);
            entry["correction"] = to_json(corr, pres);
            report.text << "    homotopy correction: " << engine.str(corr) << "\n";
        }
        list.push_back(entry);
    }
    report.results["degree"] = opt.degree;
    report.results["differentials"] = list;
}

void cmd_verify(const Presentation& pres, const Options& opt, Report& report, std::ostream& err) {
    RewriteSystem rs = gated_system(pres, opt, report);
    ResolutionEngine engine(pres, rs, {});
    ComplexReport cr = engine.verify_complex(opt.degree);
    json degrees = json::array();
    for (const auto& d : cr.degrees) {
        json jd = {{"degree", d.degree}, {"chains", d.chains}, {"zero", d.zero}};
        report.text << "degree " << d.degree << ": " << d.chains << " chains, "
                    << (d.zero ? "d∘d = 0" : "d∘d != 0 at " + rs.str(*d.failing_chain)) << "\n";
        if (d.failing_chain) jd["failing_chain"] = rs.str(*d.failing_chain);
        degrees.push_back(jd);
        if (opt.timings) err << "degree " << d.degree << ": " << d.seconds << " s\n";
    }
    report.results["degrees"] = degrees;
    report.results["ok"] = cr.ok();
    if (!cr.ok()) throw EarlyExit{kCounterexample};
}

void cmd_diagnose(const Presentation& pres, const Options& opt, Report& report) {
    RewriteSystem rs = gated_system(pres, opt, report);
    ResolutionEngine engine(pres, rs, {});
    json mats = json::array();
    for (const auto& m : engine.minimality_diagnostic(opt.degree)) {
        json rows = json::array();
        json cols = json::array();
        json entries = json::array();
        for (const auto& r : m.rows) rows.push_back(rs.str(r));
        for (const auto& c : m.columns) cols.push_back(rs.str(c));
        report.text << "degree " << m.degree << ": " << (m.nonzero() ? "nonzero (not minimal here)" : "zero") << "\n";
        for (std::size_t i = 0; i < m.rows.size(); ++i) {
            json row = json::array();
            for (std::size_t j = 0; j < m.columns.size(); ++j) {
                row.push_back(m.entries[i][j].to_string());
                if (!m.entries[i][j].is_zero()) {
                    report.text << "  [" << rs.str(m.rows[i]) << ", " << rs.str(m.columns[j])
                                << "] = " << m.entries[i][j] << "\n";
                }
            }
            entries.push_back(row);
        }
        mats.push_back({{"degree", m.degree}, {"rows", rows}, {"columns", cols}, {"entries", entries},
                        {"nonzero", m.nonzero()}});
    }
    report.results["matrices"] = mats;
}

std::string echo(const Options& opt) {
    std::ostringstream os;
    os << opt.command << " " << opt.input;
    if (opt.command == "gb-check" || opt.command == "gb-complete" || opt.complete) os << " --max-degree " << opt.max_degree;
    if (opt.command == "chains" || opt.command == "resolve" || opt.command == "verify" || opt.command == "diagnose") {
        os << " --degree " << opt.degree;
    }
    if (opt.command == "normal-words") os << " --max-length " << opt.max_length;
    if (opt.complete) os << " --complete";
    if (opt.show_homotopy) os << " --show-homotopy";
    return os.str();
}

int exit_code_for(ErrorCode code) {
    switch (code) {
    case ErrorCode::BoundExceeded: return kBoundExceeded;
    case ErrorCode::InvalidInput:
    case ErrorCode::InvalidPresentation:
    case ErrorCode::NotMinimal:
    case ErrorCode::NotAnOim:
    case ErrorCode::NotAnAntichain:
    case ErrorCode::FieldMismatch:
    case ErrorCode::OutOfRange: return kInputError;
    default: return kFailure;
    }
}

} // namespace

std::string presentation_digest(const Presentation& pres) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : pres.to_json()) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

json to_json(const ModuleElement& m, const Presentation& pres) {
    std::vector<std::pair<TensorTerm, Scalar>> sorted(m.terms().begin(), m.terms().end());
    std::sort(sorted.begin(), sorted.end(),
              [&](const auto& a, const auto& b) { return basis_compare(pres.order(), a.first, b.first) > 0; });
    json terms = json::array();
    for (const auto& [t, c] : sorted) {
        terms.push_back({{"chain", pres.str(t.chain)}, {"tail", pres.str(t.tail)}, {"coefficient", c.to_string()}});
    }
    return {{"degree", m.degree()}, {"terms", terms}};
}

ModuleElement module_element_from_json(const json& j, const Presentation& pres) {
    try {
        ModuleElement m(j.at("degree").get<std::size_t>());
        for (const auto& t : j.at("terms")) {
            m.add_term({pres.word(t.at("chain").get<std::string>()), pres.word(t.at("tail").get<std::string>())},
                       Scalar::parse(t.at("coefficient").get<std::string>(), pres.field()));
        }
        return m;
    } catch (const json::exception& e) {
        throw Error(ErrorCode::InvalidInput, std::string("module element JSON: ") + e.what());
    }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app{"Groebner bases, chains and the Anick resolution of augmented algebras", "anick"};
    app.require_subcommand(1);
    const std::vector<std::pair<std::string, std::string>> commands = {
        {"gb-check", "check that the relations form a Groebner basis up to --max-degree"},
        {"gb-complete", "complete the relations to a reduced Groebner basis"},
        {"normal-words", "list and count normal words up to --max-length"},
        {"obstructions", "print the obstructions (leading monomials of the basis)"},
        {"chain-graph", "print the chain graph; --dot writes Graphviz"},
        {"chains", "list the chains of homological degree --degree"},
        {"resolve", "print the differential on every chain of degree --degree"},
        {"verify", "check d∘d = 0 on all chains up to --degree"},
        {"diagnose", "print the scalar matrices of K ⊗ d_n up to --degree"},
    };
    for (const auto& [name, help] : commands) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("presentation", opt.input, "presentation JSON file")->required();
        sub->add_option("--max-degree", opt.max_degree, "Groebner degree bound")->check(CLI::PositiveNumber);
        sub->add_option("--degree", opt.degree, "homological degree")->check(CLI::PositiveNumber);
        sub->add_option("--max-length", opt.max_length, "normal word length bound")->check(CLI::NonNegativeNumber);
        sub->add_option("--dot", opt.dot_file, "write the chain graph as DOT");
        sub->add_option("--format", opt.format, "output format")->check(CLI::IsMember({"text", "json"}));
        sub->add_flag("--complete", opt.complete, "complete the relations first");
        sub->add_flag("--show-homotopy", opt.show_homotopy, "print the homotopy correction terms");
        sub->add_flag("--timings", opt.timings, "print timings to stderr");
        sub->callback([&opt, name = name]() { opt.command = name; });
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kSuccess;
        }
        err << "error: " << e.what() << "\n";
        return kInputError;
    }

    Report report;
    int status = kSuccess;
    std::string digest;
    auto start = std::chrono::steady_clock::now();
    try {
        Presentation pres = load_presentation(opt.input);
        digest = presentation_digest(pres);
        try {
            if (opt.command == "gb-check") cmd_gb_check(pres, opt, report);
            else if (opt.command == "gb-complete") cmd_gb_complete(pres, opt, report);
            else if (opt.command == "normal-words") cmd_normal_words(pres, opt, report);
            else if (opt.command == "obstructions") cmd_obstructions(pres, opt, report);
            else if (opt.command == "chain-graph") cmd_chain_graph(pres, opt, report);
            else if (opt.command == "chains") cmd_chains(pres, opt, report);
            else if (opt.command == "resolve") cmd_resolve(pres, opt, report);
            else if (opt.command == "verify") cmd_verify(pres, opt, report, err);
            else if (opt.command == "diagnose") cmd_diagnose(pres, opt, report);
        } catch (const EarlyExit& e) {
            status = e.code;
        }
    } catch (const Error& e) {
        err << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
        status = exit_code_for(e.code());
        if (digest.empty()) return status;
        report.results["error"] = {{"code", std::string(to_string(e.code()))}, {"message", e.what()}};
    }
    if (opt.timings) {
        err << "elapsed: " << std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()
            << " s\n";
    }

    if (opt.format == "json") {
        json doc = {{"command", echo(opt)},
                    {"presentation_digest", digest},
                    {"results", report.results},
                    {"exit_status", status}};
        out << doc.dump(2) << "\n";
    } else {
        out << "# " << echo(opt) << " [" << digest << "]\n" << report.text.str();
    }
    return status;
}

} // namespace anick::cli
