#include "rccs/cli.hpp"

#include "rccs/encode.hpp"
#include "rccs/equiv.hpp"
#include "rccs/error.hpp"
#include "rccs/json_io.hpp"
#include "rccs/parse.hpp"
#include "rccs/rccs.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace rccs {

namespace {

std::string trimmed(std::string s)
{
    auto notspace = [](unsigned char c) { return !std::isspace(c); };
    s.erase(s.begin(), std::find_if(s.begin(), s.end(), notspace));
    s.erase(std::find_if(s.rbegin(), s.rend(), notspace).base(), s.end());
    return s;
}

std::string read_file(const std::string& path, std::istream& in)
{
    if (path == "-") return std::string(std::istreambuf_iterator<char>(in), {});
    std::ifstream f(path);
    if (!f) throw InputError("cannot read '" + path + "'");
    return std::string(std::istreambuf_iterator<char>(f), {});
}

// An argument is a file when one exists at that path; otherwise it is the text itself.
std::string argument_text(const std::string& arg, std::istream& in)
{
    std::error_code ec;
    if (arg == "-" || std::filesystem::is_regular_file(arg, ec)) return trimmed(read_file(arg, in));
    return trimmed(arg);
}

bool is_json(const std::string& text) { return !text.empty() && text.front() == '{'; }
bool is_process_text(const std::string& text) { return text.find("|>") != std::string::npos; }

Term load_term(const std::string& arg, std::istream& in)
{
    std::string text = argument_text(arg, in);
    return is_json(text) ? term_from_json(text) : parse_term(text);
}

Process load_process(const std::string& arg, std::istream& in)
{
    std::string text = argument_text(arg, in);
    return is_json(text) ? process_from_json(text) : parse_process(text);
}

ConfStruct load_structure(const std::string& arg, std::istream& in)
{
    std::string text = argument_text(arg, in);
    if (!is_json(text)) return encode_ccs(parse_term(text));
    if (text.find("\"events\"") != std::string::npos) return confstruct_from_json(text);
    return encode_ccs(term_from_json(text));
}

std::string format_transition(const Transition& t)
{
    return std::to_string(t.id.value) + ":" + t.label.str() + "  ->  " + format_process(t.target);
}

void print_memories(const Process& p, std::ostream& out, std::size_t& k)
{
    switch (p.kind()) {
    case Process::Kind::Thread:
        out << "  thread " << k++ << ": " << format_memory(p.memory()) << "\n";
        return;
    case Process::Kind::Parallel:
        print_memories(p.left(), out, k);
        print_memories(p.right(), out, k);
        return;
    case Process::Kind::Restrict: print_memories(p.body(), out, k); return;
    }
}

int run_step(const std::string& arg, std::istream& in, std::ostream& out, std::ostream& err)
{
    Process state = tidy(load_process(arg, in));
    if (!is_coherent(state)) err << "warning: the process is not coherent\n";
    std::vector<Transition> forward, backward;
    auto show = [&] {
        forward = fwd_steps(state);
        backward = bwd_steps(state);
        out << "state: " << format_process(state) << "\n";
        out << "forward:\n";
        for (std::size_t k = 0; k < forward.size(); ++k)
            out << "  " << k + 1 << ") " << format_transition(forward[k]) << "\n";
        out << "backward:\n";
        for (std::size_t k = 0; k < backward.size(); ++k)
            out << "  " << k + 1 << ") " << format_transition(backward[k]) << "\n";
    };
    show();
    std::string line;
    while (out << "> " << std::flush, std::getline(in, line)) {
        std::istringstream words(line);
        std::string cmd;
        if (!(words >> cmd)) continue;
        if (cmd == "quit") break;
        if (cmd == "do" || cmd == "undo") {
            std::size_t n = 0;
            const auto& list = cmd == "do" ? forward : backward;
            if (!(words >> n) || n == 0 || n > list.size()) {
                err << "error: " << cmd << " expects a number between 1 and " << list.size() << "\n";
                continue;
            }
            state = list[n - 1].target;
            show();
        } else if (cmd == "origin") {
            try {
                out << "origin: " << format_process(origin(state)) << "\n";
            } catch (const NotCoherent& e) {
                err << "error: " << e.what() << "\n";
            }
        } else if (cmd == "mem") {
            std::size_t k = 0;
            print_memories(state, out, k);
        } else {
            err << "error: unknown command '" << cmd << "' (do <n>, undo <n>, origin, mem, quit)\n";
        }
    }
    out << "\n";
    return 0;
}

std::vector<CcsContext> congruence_contexts(const Process& r, const Process& s, std::size_t depth)
{
    Term p = erase(origin(r));
    Term q = erase(origin(s));
    std::set<std::string> names = all_names(p);
    for (const auto& n : all_names(q)) names.insert(n);
    std::vector<CcsContext> contexts;
    std::set<std::string> seen;
    auto push = [&](const CcsContext& c) {
        if (seen.insert(format_context(c)).second) contexts.push_back(c);
    };
    for (const Term* t : {&p, &q}) {
        ConfStruct c = encode_ccs(*t);
        for (const auto& x : c.configs()) {
            EventSet visible;
            for (std::size_t e : x.members())
                if (!c.label(e).is_tau()) visible.insert(e);
            push(discriminating_context(c, visible, names));
        }
    }
    for (const auto& c : enumerate_contexts(names, depth)) push(c);
    return contexts;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Reversible CCS, configuration structures and their equivalences"};
    app.require_subcommand(1);

    std::string input, second, kind, file, format = "json";
    bool rccs_mode = false;
    std::size_t depth = 2;

    auto* parse = app.add_subcommand("parse", "print the JSON syntax tree of a term or process");
    parse->add_option("text", input, "term or process; read from stdin when absent");
    auto* fmt = app.add_subcommand("fmt", "print a term or process (text or JSON tree) in concrete syntax");
    fmt->add_option("text", input, "term or process; read from stdin when absent");
    auto* step = app.add_subcommand("step", "interactive forward and backward stepping");
    step->add_option("process", input)->required();
    auto* encode = app.add_subcommand("encode", "encode into a configuration structure");
    encode->add_option("term", input)->required();
    encode->add_flag("--rccs", rccs_mode, "read an RCCS process and report its configuration");
    encode->add_option("--format", format)->check(CLI::IsMember({"json", "dot"}));
    auto* axioms = app.add_subcommand("axioms", "validate the axioms of a structure in JSON");
    axioms->add_option("file", file)->required();
    auto* check = app.add_subcommand("check", "equivalence checks");
    check->add_option("kind", kind)->required()->check(CLI::IsMember({"hhpb", "bfb", "barbed-ccs", "congruence"}));
    check->add_option("A", input)->required();
    check->add_option("B", second)->required();
    check->add_option("--context-depth", depth, "prefix bound of enumerated contexts (congruence)");
    auto* levels = app.add_subcommand("levels", "F/B stratification of two structures");
    levels->add_option("A", input)->required();
    levels->add_option("B", second)->required();
    auto* replay_cmd = app.add_subcommand("replay", "replay a trace file from a process");
    replay_cmd->add_option("process", input)->required();
    replay_cmd->add_option("tracefile", file)->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << "run with --help for usage\n";
        return 2;
    }

    try {
        if (parse->parsed() || fmt->parsed()) {
            std::string text = input.empty() ? trimmed(read_file("-", in)) : argument_text(input, in);
            if (is_json(text)) {
                if (text.find("\"thread\"") != std::string::npos) {
                    Process p = process_from_json(text);
                    out << (parse->parsed() ? to_json(p) : format_process(p) + "\n");
                } else {
                    Term t = term_from_json(text);
                    out << (parse->parsed() ? to_json(t) : format_term(t) + "\n");
                }
            } else if (is_process_text(text)) {
                Process p = parse_process(text);
                out << (parse->parsed() ? to_json(p) : format_process(p) + "\n");
            } else {
                Term t = parse_term(text);
                out << (parse->parsed() ? to_json(t) : format_term(t) + "\n");
            }
            return 0;
        }
        if (step->parsed()) return run_step(input, in, out, err);
        if (encode->parsed()) {
            if (rccs_mode) {
                Address a = encode_rccs(load_process(input, in));
                out << (format == "dot" ? to_dot(a.structure, &a.at) : to_json(a));
            } else {
                ConfStruct c = encode_ccs(load_term(input, in));
                out << (format == "dot" ? to_dot(c) : to_json(c));
            }
            return 0;
        }
        if (axioms->parsed()) {
            ConfStruct c = confstruct_from_json(read_file(file, in));
            AxiomReport r = validate_axioms(c);
            out << to_json(c, r);
            return r.all_pass() ? 0 : 1;
        }
        if (check->parsed()) {
            if (kind == "hhpb") {
                ConfStruct a = load_structure(input, in);
                ConfStruct b = load_structure(second, in);
                HhpbResult r = hhpb(a, b);
                out << to_json(a, b, r);
                return r.verdict.equivalent() ? 0 : 1;
            }
            if (kind == "barbed-ccs") {
                BisimResult r = ccs_barbed_bisim(load_term(input, in), load_term(second, in));
                out << to_json(r);
                return r.verdict.equivalent() ? 0 : 1;
            }
            Process r = load_process(input, in);
            Process s = load_process(second, in);
            if (kind == "bfb") {
                BisimResult b = rccs_bfb_bisim(r, s);
                out << to_json(b);
                return b.verdict.equivalent() ? 0 : 1;
            }
            CongruenceResult c = bounded_congruence(r, s, congruence_contexts(r, s, depth));
            out << to_json(c);
            return c.verdict.equivalent() ? 0 : 1;
        }
        if (levels->parsed()) {
            ConfStruct a = load_structure(input, in);
            ConfStruct b = load_structure(second, in);
            out << to_json(a, b, forw_backw_levels(a, b));
            return 0;
        }
        if (replay_cmd->parsed()) {
            Process src = load_process(input, in);
            auto trace = parse_trace(read_file(file, in));
            try {
                out << format_process(replay(src, trace)) << "\n";
                return 0;
            } catch (const ReplayError& e) {
                out << replay_error_json(e.step(), e.what());
                err << "error: " << e.what() << "\n";
                return 1;
            }
        }
    } catch (const AddressFailure& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

} // namespace rccs
