#include "xmodlink/cli.hpp"

#include "xmodlink/builtins.hpp"
#include "xmodlink/io.hpp"
#include "xmodlink/tables.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

namespace xmodlink {

namespace {

bool looks_builtin(const std::string& value) {
    return value.find(':') != std::string::npos && !std::ifstream(value).good();
}

PairPtr resolve_pair(const std::string& pair_opt, const std::string& builtin_opt) {
    std::string v = !pair_opt.empty() ? pair_opt : builtin_opt;
    if (v.empty()) throw Error("MissingOption", "a pair is required (--pair or --builtin)");
    if (looks_builtin(v)) return builtin_pair(v);
    return load_pair(v);
}

SlicedDiagram resolve_diagram(const std::string& value) {
    if (value.empty()) throw Error("MissingOption", "a diagram is required (--diagram)");
    if (looks_builtin(value)) return builtin_diagram(value);
    return load_diagram(value);
}

RackPtr resolve_rack(const std::string& rack_opt, const std::string& builtin_opt) {
    std::string v = !rack_opt.empty() ? rack_opt : builtin_opt;
    if (v.empty()) throw Error("MissingOption", "a rack is required (--rack or --builtin)");
    if (looks_builtin(v)) return builtin_rack(v);
    return load_rack(v);
}

std::vector<WordEntry> parse_rack_word(const RackPtr& rack, const std::string& text) {
    std::vector<WordEntry> out;
    if (text.find_first_not_of(" \t") == std::string::npos) return out;
    size_t start = 0;
    while (start <= text.size()) {
        size_t comma = text.find(',', start);
        std::string tok = text.substr(start, comma == std::string::npos ? std::string::npos
                                                                        : comma - start);
        size_t b = tok.find_first_not_of(" \t");
        size_t e = tok.find_last_not_of(" \t");
        if (b == std::string::npos) throw Error("ParseError", "empty entry in rack word");
        tok = tok.substr(b, e - b + 1);
        bool starred = false;
        if (tok.back() == '*') {
            starred = true;
            tok.pop_back();
        }
        out.push_back({rack->element(tok), starred});
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

int cmd_check_pair(const PairPtr& pair, bool framed, bool r3prime, std::ostream& out) {
    if (!framed) {
        AxiomReport rep = check_unframed(*pair, r3prime);
        out << "unframed axioms (R1, R2, R3" << (r3prime ? ", R3'" : "") << "): "
            << (rep.passed ? "PASS" : "FAIL") << "\n";
        if (!rep.passed) out << rep.describe(pair->base());
        return rep.passed ? 0 : 1;
    }
    auto [rep, fs] = check_framed(*pair);
    out << "framed axioms (R2, R3, F1, F2): " << (rep.passed ? "PASS" : "FAIL") << "\n";
    if (!rep.passed) {
        out << rep.describe(pair->base());
        return 1;
    }
    const auto& g = pair->base();
    out << "f:";
    for (int z = 0; z < g->order(); ++z) out << " " << g->name(z) << "->" << g->name(fs->f[z]);
    out << "\n";
    return 0;
}

int cmd_moves(const PairPtr& pair, bool judge_framed, std::ostream& out) {
    auto run_set = [&](bool framed) {
        auto instances = relation_instances(framed);
        int held = 0;
        std::string first_fail;
        for (const auto& ri : instances) {
            auto res = check_move_invariance(pair, ri.fixture);
            if (res.ok) {
                ++held;
                out << "  " << ri.label << ": ok\n";
            } else {
                out << "  " << ri.label << ": FAILED (" << res.detail << ")\n";
                if (first_fail.empty()) first_fail = move_name(ri.fixture.id);
            }
        }
        std::ostringstream sum;
        if (!first_fail.empty()) sum << first_fail << " FAILED, ";
        sum << held << "/" << instances.size() << " relations hold";
        return std::make_pair(held == static_cast<int>(instances.size()), sum.str());
    };

    out << "unframed relation set:\n";
    auto [un_ok, un_sum] = run_set(false);
    out << un_sum << "\n";
    out << "framed relation set:\n";
    auto [fr_ok, fr_sum] = run_set(true);
    out << "framed set " << fr_sum << "\n";

    for (const auto& f : move_fixtures())
        if (f.id == MoveId::Identity || f.id == MoveId::Interchange) {
            auto res = check_move_invariance(pair, f);
            out << move_name(f.id) << " move: " << (res.ok ? "ok" : "FAILED (" + res.detail + ")")
                << "\n";
            if (!res.ok) return 1;
        }
    return (judge_framed ? fr_ok : un_ok) ? 0 : 1;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"state-sum tangle invariants from finite crossed modules"};
    app.require_subcommand(1);

    std::string pair_opt, builtin_opt, diagram_opt, rack_opt, group_opt, xmod_opt;
    std::string top_opt, bottom_opt, output_opt, which_opt;
    bool framed = false, r3prime = false;
    int workers = 1;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--pair", pair_opt, "pair file (.pair) or builtin key");
        cmd->add_option("--builtin", builtin_opt, "builtin key");
    };

    auto* c_builtins = app.add_subcommand("builtins", "list built-in objects");
    auto* c_check = app.add_subcommand("check-pair", "verify the axioms of a pair");
    add_common(c_check);
    c_check->add_flag("--framed", framed, "check the framed axiom set");
    c_check->add_flag("--r3prime", r3prime, "also verify the alternative R3 form");
    auto* c_moves = app.add_subcommand("moves", "evaluate move invariance of a pair");
    add_common(c_moves);
    c_moves->add_flag("--framed", framed, "judge the framed relation set");
    auto* c_inv = app.add_subcommand("invariant", "state sum of a diagram");
    add_common(c_inv);
    c_inv->add_option("--diagram", diagram_opt, "diagram file (.tng) or builtin key");
    c_inv->add_option("--top", top_opt, "top enhancement word");
    c_inv->add_option("--bottom", bottom_opt, "bottom enhancement word");
    c_inv->add_option("--workers", workers, "enumeration worker threads");
    c_inv->add_option("--output", output_opt, "write TSV to this path");
    auto* c_rack = app.add_subcommand("rack-count", "rack colouring count of a diagram");
    c_rack->add_option("--rack", rack_opt, "rack file (.rck) or builtin key");
    c_rack->add_option("--builtin", builtin_opt, "builtin key");
    c_rack->add_option("--diagram", diagram_opt, "diagram file (.tng) or builtin key");
    c_rack->add_option("--top", top_opt, "top rack word");
    c_rack->add_option("--bottom", bottom_opt, "bottom rack word");
    auto* c_tables = app.add_subcommand("tables", "reproduce the trefoil tables");
    c_tables->add_option("--which", which_opt, "eisermann-s5 | lifted-gl25 | unlifted-pgl25")
        ->required();
    c_tables->add_option("--workers", workers, "enumeration worker threads");
    c_tables->add_option("--output", output_opt, "write TSV to this path");

    std::vector<std::string> argv = args;
    std::reverse(argv.begin(), argv.end());
    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (c_builtins->parsed()) {
            for (const auto& line : builtin_catalogue()) out << line << "\n";
            return 0;
        }
        if (c_check->parsed())
            return cmd_check_pair(resolve_pair(pair_opt, builtin_opt), framed, r3prime, out);
        if (c_moves->parsed())
            return cmd_moves(resolve_pair(pair_opt, builtin_opt), framed, out);
        if (c_inv->parsed()) {
            auto pair = resolve_pair(pair_opt, builtin_opt);
            auto d = resolve_diagram(diagram_opt);
            EnhancedWord top = parse_word(pair->base(), top_opt);
            std::ostringstream tsv;
            if (!bottom_opt.empty() || d.bottom().empty()) {
                EnhancedWord bottom = parse_word(pair->base(), bottom_opt);
                auto r = state_sum(d, pair, top, bottom, workers);
                out << invariant_to_string(r, pair->fiber()) << "\n";
                write_invariant_tsv(tsv, r, pair->fiber());
            } else {
                auto m = invariant_matrix(d, pair, top, workers);
                for (const auto& [bw, r] : m) {
                    out << invariant_to_string(r, pair->fiber()) << "\n";
                    write_invariant_tsv(tsv, r, pair->fiber());
                }
            }
            if (!output_opt.empty()) {
                std::ofstream f(output_opt);
                if (!f) throw Error("FileNotFound", "cannot write " + output_opt);
                f << tsv.str();
            }
            return 0;
        }
        if (c_rack->parsed()) {
            auto rack = resolve_rack(rack_opt, builtin_opt);
            auto d = resolve_diagram(diagram_opt);
            auto top = parse_rack_word(rack, top_opt);
            if (!bottom_opt.empty() || d.bottom().empty()) {
                auto bottom = parse_rack_word(rack, bottom_opt);
                out << rack_colouring_count(d, rack, top, bottom).str() << "\n";
            } else {
                for (const auto& [bw, n] : rack_colouring_map(d, rack, top)) {
                    out << "[";
                    for (size_t i = 0; i < bw.size(); ++i) {
                        if (i) out << ",";
                        out << rack->name(bw[i].index) << (bw[i].starred ? "*" : "");
                    }
                    out << "] " << n.str() << "\n";
                }
            }
            return 0;
        }
        if (c_tables->parsed()) {
            TrefoilTable t;
            if (which_opt == "eisermann-s5") t = eisermann_s5_table(workers);
            else if (which_opt == "lifted-gl25") t = lifted_gl25_table(workers);
            else if (which_opt == "unlifted-pgl25") t = unlifted_pgl25_table(workers);
            else
                throw Error("MissingOption", "unknown table '" + which_opt + "'");
            out << render_table(t);
            if (!output_opt.empty()) {
                std::ofstream f(output_opt);
                if (!f) throw Error("FileNotFound", "cannot write " + output_opt);
                f << table_tsv(t);
            }
            return 0;
        }
    } catch (const Error& e) {
        err << "error: " << e.code() << ": " << e.what() << "\n";
        return 2;
    }
    err << "error: UnknownVerb: no command selected\n";
    return 2;
}

} // namespace xmodlink
