#pragma once

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "dscode/corpus.hpp"

namespace dscode {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegativeCertificate = 1;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitScaleLimit = 3;
inline constexpr int kExitInternalError = 4;

namespace detail {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CodeError(Errc::config_invalid, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline void write_output(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw CodeError(Errc::config_invalid, "cannot write '" + path + "'");
    f << text;
}

struct CliOptions {
    std::string verb;
    std::string config_path;
    std::string input_path;  // positional, for import
    std::string out_path;
    std::string format = "text";
    std::string filter;
    long long max_pm = -1;  // -1: keep the config's value
};

inline CliOptions parse_cli(const std::vector<std::string>& args) {
    CliOptions opt;
    if (args.empty()) throw CodeError(Errc::config_invalid, "missing verb; see --help");
    std::size_t i = 0;
    if (args[0] == "--help" || args[0] == "-h") {
        opt.verb = "help";
        return opt;
    }
    opt.verb = args[i++];
    for (; i < args.size(); ++i) {
        const std::string& a = args[i];
        auto value = [&](const char* flag) -> const std::string& {
            if (i + 1 >= args.size())
                throw CodeError(Errc::config_invalid, std::string(flag) + " needs a value");
            return args[++i];
        };
        if (a == "--config") opt.config_path = value("--config");
        else if (a == "--out") opt.out_path = value("--out");
        else if (a == "--format") opt.format = value("--format");
        else if (a == "--filter") opt.filter = value("--filter");
        else if (a == "--max-pm") opt.max_pm = std::stoll(value("--max-pm"));
        else if (a == "--seedless")
            throw CodeError(Errc::config_invalid,
                            "--seedless is reserved: nothing here uses randomness");
        else if (a == "--help" || a == "-h") opt.verb = "help";
        else if (!a.empty() && a[0] != '-' && opt.input_path.empty()) opt.input_path = a;
        else throw CodeError(Errc::config_invalid, "unknown flag '" + a + "'");
    }
    if (opt.format != "text" && opt.format != "machine")
        throw CodeError(Errc::config_invalid, "--format must be text or machine");
    return opt;
}

inline const char* kUsage =
    "usage: lrc_tool <verb> [flags]\n"
    "\n"
    "verbs:\n"
    "  build     construct the code, report its parameters\n"
    "  analyze   run the analyses requested by the config\n"
    "  export    write the generator matrix as text\n"
    "  import    read a generator matrix file, report [n,k,d]\n"
    "  corpus    run the bundled regression cases\n"
    "\n"
    "flags:\n"
    "  --config <path>   job config (build, analyze, export)\n"
    "  --out <path>      write output to a file instead of stdout\n"
    "  --format <f>      text | machine\n"
    "  --filter <s>      corpus: run cases whose name contains <s>\n"
    "  --max-pm <int>    override the enumeration guard\n"
    "  --seedless        reserved; rejected\n";

}  // namespace detail

/// In-process CLI entry point; returns the exit code.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    using namespace detail;
    try {
        CliOptions opt = parse_cli(args);
        if (opt.verb == "help") {
            out << kUsage;
            return kExitOk;
        }
        if (opt.verb == "build" || opt.verb == "analyze" || opt.verb == "export") {
            if (opt.config_path.empty())
                throw CodeError(Errc::config_invalid, "--config is required");
            JobConfig cfg = parse_config(read_file(opt.config_path));
            if (opt.max_pm > 0) cfg.max_pm = opt.max_pm;
            if (opt.verb == "build") {
                JobConfig bare = cfg;
                bare.weights = bare.griesmer = bare.distance_optimal = bare.singleton = false;
                bare.cm_bound.reset();
                bare.locality_delta.reset();
                bare.availability.reset();
                const Report rep = run(bare);
                write_output(opt.out_path,
                             opt.format == "machine" ? render_machine(rep) : render_text(rep),
                             out);
                return kExitOk;
            }
            if (opt.verb == "export") {
                const DefiningCode code =
                    DefiningCode::build(SubsetFamily(cfg.m, cfg.blocks), PrimeField(cfg.p),
                                        cfg.max_pm);
                write_output(opt.out_path, export_matrix(code), out);
                return kExitOk;
            }
            const Report rep = run(cfg);
            write_output(opt.out_path,
                         opt.format == "machine" ? render_machine(rep) : render_text(rep), out);
            return rep.all_positive() ? kExitOk : kExitNegativeCertificate;
        }
        if (opt.verb == "import") {
            if (opt.input_path.empty())
                throw CodeError(Errc::config_invalid, "import needs a matrix file argument");
            const DefiningCode code = import_matrix(read_file(opt.input_path));
            std::ostringstream os;
            if (opt.format == "machine") {
                ordered_json j = {{"p", code.field().p()},
                                  {"m", code.m()},
                                  {"n", code.n()},
                                  {"k", code.k()},
                                  {"d", code.d()}};
                os << j.dump(2) << '\n';
            } else {
                os << "imported code: [" << code.n() << ", " << code.k() << ", " << code.d()
                   << "] over F_" << code.field().p() << " (m = " << code.m() << ")\n";
            }
            write_output(opt.out_path, os.str(), out);
            return kExitOk;
        }
        if (opt.verb == "corpus") {
            const CorpusOutcome res = run_corpus(opt.filter);
            out << res.output;
            out << res.ran << " case(s), " << res.failed << " failure(s)\n";
            return res.failed == 0 ? kExitOk : kExitNegativeCertificate;
        }
        throw CodeError(Errc::config_invalid, "unknown verb '" + opt.verb + "'");
    } catch (const CodeError& e) {
        err << "error: " << e.what() << '\n';
        switch (e.code()) {
            case Errc::scale_limit_exceeded:
            case Errc::overflow:
                return kExitScaleLimit;
            case Errc::inconsistent_theorem:
                return kExitInternalError;
            default:
                return kExitConfigError;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitInternalError;
    }
}

}  // namespace dscode
