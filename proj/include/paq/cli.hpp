#pragma once

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "paq/cohn.hpp"
#include "paq/parse.hpp"

namespace paq::cli {

// Exit codes: 0 success (EQUAL), 2 NOT-EQUAL, 3 input error, 4 verification
// failure.
enum ExitCode { kOk = 0, kNotEqual = 2, kInputError = 3, kVerifyFailure = 4 };

namespace detail {

inline std::string usage() {
    return "usage:\n"
           "  paq verify <graph-file>\n"
           "  paq describe-q <graph-file>\n"
           "  paq phi <graph-file> -e <expr>\n"
           "  paq equal <graph-file> -a <expr> -b <expr>\n"
           "  paq coxeter <coxeter-file> [--verify|--describe-q]\n"
           "  paq cohn <graph-file>\n"
           "  paq minpoly <m>\n";
}

inline std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::string flag_value(const std::vector<std::string>& args, const std::string& flag) {
    for (std::size_t i = 0; i + 1 < args.size(); ++i)
        if (args[i] == flag) return args[i + 1];
    throw Error("missing " + flag + " <value>");
}

inline bool has_flag(const std::vector<std::string>& args, const std::string& flag) {
    for (const auto& a : args)
        if (a == flag) return true;
    return false;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out) {
    try {
        if (args.empty()) {
            out << detail::usage();
            return kInputError;
        }
        const std::string& cmd = args[0];

        if (cmd == "minpoly") {
            if (args.size() != 2) throw Error("usage: minpoly <m>");
            int m = 0;
            try {
                m = std::stoi(args[1]);
            } catch (const std::exception&) {
                throw Error("bad integer '" + args[1] + "'");
            }
            out << minpoly_4cos2(m).to_string() << "\n";
            return kOk;
        }

        if (cmd == "verify" || cmd == "describe-q" || cmd == "phi" || cmd == "equal" ||
            cmd == "cohn") {
            if (args.size() < 2) throw Error("expected a graph file");
            const auto parsed = parse_graph_file(detail::slurp(args[1]));

            if (cmd == "cohn") {
                if (parsed.has_polys)
                    out << "warning: poly lines are ignored in cohn mode\n";
                const auto rep = cohn_check(parsed.graph, parsed.root);
                out << rep.to_string();
                return rep.ok() ? kOk : kVerifyFailure;
            }

            const auto ctx = build_context(parsed.graph, parsed.fam, parsed.root);
            if (cmd == "verify") {
                const auto rep = verify_context(ctx);
                out << rep.to_string();
                return rep.ok() ? kOk : kVerifyFailure;
            }
            if (cmd == "describe-q") {
                out << describe_Q(ctx).to_string();
                return kOk;
            }
            if (cmd == "phi") {
                const auto expr = detail::flag_value(args, "-e");
                out << phi(ctx, parse_element(parsed.graph, expr)).to_string() << "\n";
                return kOk;
            }
            // equal
            const auto a = parse_element(parsed.graph, detail::flag_value(args, "-a"));
            const auto b = parse_element(parsed.graph, detail::flag_value(args, "-b"));
            if (equal_in_R(ctx, a, b)) {
                out << "EQUAL\n";
                return kOk;
            }
            out << "NOT-EQUAL\n";
            return kNotEqual;
        }

        if (cmd == "coxeter") {
            if (args.size() < 2) throw Error("expected a coxeter file");
            const auto cm = parse_coxeter_file(detail::slurp(args[1]));
            const auto analysis = coxeter_analyze(cm);
            const bool want_verify = detail::has_flag(args, "--verify");
            const bool want_describe = detail::has_flag(args, "--describe-q") || !want_verify;
            if (want_describe) out << analysis.describe();
            if (want_verify) {
                const auto rep = verify_context(analysis.ctx);
                out << rep.to_string();
                if (!rep.ok()) return kVerifyFailure;
            }
            return kOk;
        }

        out << detail::usage();
        return kInputError;
    } catch (const Error& e) {
        out << "error: " << e.what() << "\n";
        return kInputError;
    }
}

}  // namespace paq::cli
