// Command-line front end: one subcommand per library operation, plus the
// verify-paper self-check. Exit status 0 = ok, 1 = check failed or no
// certificate found, 2 = usage, parse or precondition error.

#include "wn/errors.hpp"
#include "wn/json_report.hpp"
#include "wn/text.hpp"
#include "wn/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

using namespace wn;
using report::Json;

namespace {

struct Settings {
    std::size_t n = 0;
    unsigned degree_cap = kDefaultDegreeCap;
    std::size_t dim_cap = kDefaultDimCap;
    std::optional<unsigned> max_iter;
    std::uint64_t seed = 42;
    std::string format = "text";
    unsigned bound = 64;
    std::size_t var = 1;
    unsigned target = 1;
    std::string which = "sn";
    std::size_t k = 1;
    std::optional<unsigned> term;
    std::size_t beam = 10000;
    bool lower_central = false;
    bool timing = false;
    std::vector<std::string> operands;
};

// Result of one command: structured outputs and the exit status.
struct Outcome {
    Json outputs = Json::object();
    int status = 0;
};

std::string read_stdin_line() {
    std::string line;
    while (std::getline(std::cin, line))
        if (line.find_first_not_of(" \t\r") != std::string::npos) return line;
    throw std::invalid_argument("stdin exhausted while reading an operand");
}

std::vector<std::string> resolve_operands(const std::vector<std::string>& raw) {
    std::vector<std::string> out;
    for (const auto& s : raw) out.push_back(s == "-" ? read_stdin_line() : s);
    return out;
}

void render_text(const Json& j, std::ostream& os, int indent) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    auto scalar = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
    for (auto it = j.begin(); it != j.end(); ++it) {
        const auto& v = it.value();
        if ((v.is_object() || v.is_array()) && v.empty()) {
            os << pad << it.key() << ": " << v.dump() << "\n";
        } else if (v.is_object()) {
            os << pad << it.key() << ":\n";
            render_text(v, os, indent + 2);
        } else if (v.is_array()) {
            const bool flat = std::all_of(v.begin(), v.end(), [](const Json& e) { return e.is_primitive(); });
            if (flat) {
                os << pad << it.key() << ": [";
                for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << scalar(v[i]);
                os << "]\n";
            } else {
                os << pad << it.key() << ":\n";
                for (const auto& e : v) {
                    if (e.is_object()) {
                        os << pad << "  -\n";
                        render_text(e, os, indent + 4);
                    } else {
                        os << pad << "  - " << (e.is_array() ? e.dump() : scalar(e)) << "\n";
                    }
                }
            }
        } else {
            os << pad << it.key() << ": " << scalar(v) << "\n";
        }
    }
}

Subalgebra parse_which(const std::string& s) { return s == "un" ? Subalgebra::un : Subalgebra::sn; }

using Handler = std::function<Outcome(const Settings&, const std::vector<std::string>&, Json&)>;

Derivation deriv_arg(const Settings& s, const std::string& text, Json& inputs, const std::string& name) {
    auto d = parse_derivation(text, s.n);
    inputs[name] = format_derivation(d);
    return d;
}

Polynomial poly_arg(const Settings& s, const std::string& text, Json& inputs, const std::string& name) {
    auto f = parse_polynomial(text, s.n);
    inputs[name] = format_polynomial(f);
    return f;
}

std::vector<Derivation> deriv_args(const Settings& s, const std::vector<std::string>& ops, Json& inputs) {
    std::vector<Derivation> ds;
    for (const auto& t : ops) ds.push_back(parse_derivation(t, s.n));
    inputs["generators"] = report::derivation_list(ds);
    return ds;
}

Outcome cmd_bracket(const Settings& s, const std::vector<std::string>& ops, Json& in) {
    const auto d = deriv_arg(s, ops[0], in, "D"), e = deriv_arg(s, ops[1], in, "E");
    return {{{"bracket", format_derivation(bracket(d, e))}}};
}

Outcome cmd_apply(const Settings& s, const std::vector<std::string>& ops, Json& in) {
    const auto d = deriv_arg(s, ops[0], in, "D");
    const auto f = poly_arg(s, ops[1], in, "f");
    return {{{"value", format_polynomial(apply(d, f))}}};
}

Outcome cmd_index(const Settings& s, const std::vector<std::string>& ops, Json& in) {
    const auto d = deriv_arg(s, ops[0], in, "D");
    const auto k = deriv_index(d);
    return {{{"index", k ? Json(*k) : Json(nullptr)}}};
}

Outcome cmd_member(const Settings& s, const std::vector<std::string>& ops, Json& in) {
    return {report::membership_json(membership(deriv_arg(s, ops[0], in, "D")))};
}

Outcome cmd_lnd(const Settings& s, const std::vector<std::string>& ops, Json& in) {
    const auto res = lnd_check(deriv_arg(s, ops[0], in, "D"), s.bound);
    return {report::lnd_json(res), res.verdict == LndVerdict::inconclusive ? 1 : 0};
}

Outcome cmd_closure(const Settings& s, const std::vector<std::string>& ops, Json& in) {
    const auto gens = deriv_args(s, ops, in);
    const auto res = lie_closure(s.n, gens, s.degree_cap, s.dim_cap);
    return {report::closure_json(res), res.status == ClosureStatus::closed ? 0 : 1};
}

Outcome cmd_series(const Settings& s, const std::vector<std::string>& ops, Json& in) {
    const auto gens = deriv_args(s, ops, in);
    const auto cl = lie_closure(s.n, gens, s.degree_cap, s.dim_cap);
    Outcome out;
    out.outputs["closure"] = report::closure_json(cl);
    if (cl.status != ClosureStatus::closed) {
        out.outputs["series"] = nullptr;
        out.status = 1;
        return out;
    }
    const auto iters = s.max_iter.value_or(default_max_iter(s.n));
    const auto rep = s.lower_central ? lower_central_series(cl.basis, iters) : derived_series(cl.basis, iters);
    out.outputs["series"] = report::series_json(rep);
    out.status = rep.outcome == SeriesOutcome::cap_hit ? 1 : 0;
    return out;
}

Outcome cmd_extract_const(const Settings& s, const std::vector<std::string>& ops, Json& in) {
    return {report::constant_extraction_json(constant_extraction(poly_arg(s, ops[0], in, "f")))};
}

Outcome cmd_extract_linear(const Settings& s, const std::vector<std::string>& ops, Json& in) {
    in["var"] = s.var;
    return {report::linear_extraction_json(linear_extraction(poly_arg(s, ops[0], in, "f"), s.var))};
}

Outcome cmd_flatten(const Settings& s, const std::vector<std::string>& ops, Json& in) {
    const auto d = deriv_arg(s, ops[0], in, "D");
    in["var"] = s.var;
    in["target"] = s.target;
    return {{{"value", format_derivation(flatten_in_variable(d, s.var, s.target))}}};
}

Outcome cmd_strip(const Settings& s, const std::vector<std::string>& ops, Json& in) {
    const auto d = deriv_arg(s, ops[0], in, "D");
    in["which"] = s.which;
    return {report::strip_json(strip_canonical_part(d, parse_which(s.which)))};
}

Outcome cmd_eigencert(const Settings& s, const std::vector<std::string>& ops, Json& in) {
    const auto d = deriv_arg(s, ops[0], in, "D"), e = deriv_arg(s, ops[1], in, "E");
    const auto cert = eigenvector_certificate(d, e);
    if (!cert) return {{{"certificate", nullptr}}, 1};
    return {{{"certificate", report::eigen_json(*cert)}}};
}

Outcome cmd_sl2(const Settings& s, const std::vector<std::string>& ops, Json& in) {
    const auto t1 = deriv_arg(s, ops[0], in, "T1"), t2 = deriv_arg(s, ops[1], in, "T2"),
               t3 = deriv_arg(s, ops[2], in, "T3");
    in["k"] = s.k;
    auto res = sl2_check(t1, t2, t3, s.k);
    if (auto* m = std::get_if<Sl2Mismatch>(&res)) return {{{"certificate", nullptr}, {"mismatch", m->reason}}, 1};
    return {{{"certificate", report::sl2_json(std::get<Sl2Certificate>(res))}}};
}

Outcome cmd_witness(const Settings& s, const std::vector<std::string>&, Json& in) {
    WitnessCaps caps;
    caps.term = s.term;
    caps.beam = s.beam;
    in["term"] = s.term ? Json(*s.term) : Json(nullptr);
    in["beam"] = s.beam;
    const auto w = derived_chain_witness(s.n, caps);
    return {report::witness_json(w), w.found ? 0 : 1};
}

Outcome cmd_extension(const Settings& s, const std::vector<std::string>& ops, Json& in) {
    const auto d = deriv_arg(s, ops[0], in, "D");
    in["which"] = s.which;
    if (parse_which(s.which) == Subalgebra::un) {
        const auto c = un_extension_certificate(d);
        return {{{"steps", report::steps_json(c.steps)},
                 {"linear", format_derivation(c.linear)},
                 {"certificate", report::eigen_json(c.certificate)}}};
    }
    const auto c = sn_extension_certificate(d);
    return {{{"steps", report::steps_json(c.steps)}, {"certificate", report::sl2_json(c.certificate)}}};
}

struct CommandSpec {
    const char* name;
    const char* help;
    std::size_t min_operands;
    std::size_t max_operands;  // 0 = unbounded
    Handler handler;
};

void emit(const Json& doc, const std::string& format) {
    if (format == "json")
        std::cout << doc.dump(2) << "\n";
    else
        render_text(doc, std::cout, 0);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations in the Lie algebra of polynomial derivations"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for every subcommand");

    Settings s;
    const std::vector<CommandSpec> specs{
        {"bracket", "Lie bracket [D,E]", 2, 2, cmd_bracket},
        {"apply", "Apply D to a polynomial f", 2, 2, cmd_apply},
        {"index", "Largest i with a nonzero d_i coefficient", 1, 1, cmd_index},
        {"member", "Membership in u_n and s_n with violations", 1, 1, cmd_member},
        {"lnd", "Local nilpotency witness or linear certificate", 1, 1, cmd_lnd},
        {"closure", "Lie closure of the span of the generators", 1, 0, cmd_closure},
        {"derived-series", "Derived (or lower central) series of the generated subalgebra", 1, 0, cmd_series},
        {"extract-const", "Multi-index alpha with d^alpha f a nonzero constant", 1, 1, cmd_extract_const},
        {"extract-linear", "Multi-index beta with d^beta f = lambda x_var + g", 1, 1, cmd_extract_linear},
        {"flatten", "Lower deg in x_var of the leading coefficient to --target via ad d_var", 1, 1, cmd_flatten},
        {"strip", "Split D into a remainder and its part in u_n or s_n", 1, 1, cmd_strip},
        {"eigencert", "Check whether E is an ad-eigenvector for D", 2, 2, cmd_eigencert},
        {"sl2", "Check an sl2 triple T1 T2 T3 at index k", 3, 3, cmd_sl2},
        {"witness", "Nonzero element of a derived term of s_n", 0, 0, cmd_witness},
        {"extension", "Certificate that adjoining D to u_n or s_n breaks nilpotency or solvability", 1, 1,
         cmd_extension},
    };

    std::vector<std::pair<CLI::App*, const CommandSpec*>> subs;
    auto add_common = [&](CLI::App* sub, bool needs_n) {
        auto* opt = sub->add_option("--n", s.n, "Number of variables")->check(CLI::Range(1, 64));
        if (needs_n) opt->required();
        sub->add_option("--format", s.format, "Output format")->check(CLI::IsMember({"text", "json"}));
        sub->add_flag("--timing", s.timing, "Include wall-clock time in the report");
    };
    for (const auto& spec : specs) {
        auto* sub = app.add_subcommand(spec.name, spec.help);
        add_common(sub, true);
        const std::string name = spec.name;
        if (spec.min_operands > 0) {
            auto* ops = sub->add_option("operands", s.operands, "Operands in the text grammar; '-' reads a line of stdin")
                            ->required();
            if (spec.max_operands > 0) ops->expected(static_cast<int>(spec.min_operands), static_cast<int>(spec.max_operands));
            else ops->expected(static_cast<int>(spec.min_operands), CLI::detail::expected_max_vector_size);
        }
        if (name == "closure" || name == "derived-series") {
            sub->add_option("--degree-cap", s.degree_cap, "Largest coefficient degree allowed in the closure");
            sub->add_option("--dim-cap", s.dim_cap, "Largest span dimension allowed in the closure");
        }
        if (name == "derived-series") {
            sub->add_option("--max-iter", s.max_iter, "Series steps before giving up (default 2n + 4)");
            sub->add_flag("--lower-central", s.lower_central, "Compute the lower central series instead");
        }
        if (name == "lnd") sub->add_option("--bound", s.bound, "Iterations of D per variable");
        if (name == "extract-linear" || name == "flatten")
            sub->add_option("--var", s.var, "Variable index")->check(CLI::PositiveNumber);
        if (name == "flatten") sub->add_option("--target", s.target, "Target degree")->check(CLI::IsMember({1, 2}));
        if (name == "strip" || name == "extension")
            sub->add_option("--which", s.which, "Subalgebra")->check(CLI::IsMember({"un", "sn"}));
        if (name == "sl2") sub->add_option("--k", s.k, "Index k")->check(CLI::PositiveNumber);
        if (name == "witness") {
            sub->add_option("--term", s.term, "Derived term to reach (default 2n - 1)");
            sub->add_option("--beam", s.beam, "Kept expressions per level")->check(CLI::PositiveNumber);
        }
        subs.emplace_back(sub, &spec);
    }

    auto* verify = app.add_subcommand("verify-paper", "Rerun the identity, fixture and certificate checks");
    std::size_t n_max = 2;
    verify->add_option("--n", n_max, "Largest number of variables sampled")->check(CLI::Range(1, 3));
    verify->add_option("--seed", s.seed, "Seed for the sampled checks");
    verify->add_option("--format", s.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    verify->add_flag("--timing", s.timing, "Include wall-clock time in the report");

    // Operands such as "-x1^2 d1" would otherwise parse as short flags; every
    // option except -h is long, so a leading space keeps them positional and
    // the grammar ignores it.
    std::vector<std::string> args;
    for (int i = argc - 1; i >= 1; --i) {
        std::string a = argv[i];
        if (a.size() > 1 && a[0] == '-' && a[1] != '-' && a != "-h") a.insert(0, " ");
        args.push_back(std::move(a));
    }

    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    const auto start = std::chrono::steady_clock::now();
    auto elapsed_ms = [&] {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    };

    if (verify->parsed()) {
        const auto rep = verify_paper(VerifyOptions{n_max, s.seed});
        auto doc = rep.to_json();
        if (s.timing) doc["timing_ms"] = elapsed_ms();
        emit(doc, s.format);
        return rep.all_passed() ? 0 : 1;
    }

    for (const auto& [sub, spec] : subs) {
        if (!sub->parsed()) continue;
        Json inputs = Json::object();
        try {
            const auto ops = resolve_operands(s.operands);
            Outcome out = spec->handler(s, ops, inputs);
            Json doc{{"schema", report::kSchemaVersion}, {"command", spec->name}, {"n", s.n}, {"inputs", inputs}};
            Json caps = Json::object();
            const std::string name = spec->name;
            if (name == "closure" || name == "derived-series") {
                caps["degree_cap"] = s.degree_cap;
                caps["dim_cap"] = s.dim_cap;
            }
            if (name == "derived-series") caps["max_iter"] = s.max_iter.value_or(default_max_iter(s.n));
            if (name == "lnd") caps["bound"] = s.bound;
            doc["caps"] = caps;
            doc["outputs"] = out.outputs;
            doc["status"] = out.status == 0 ? "ok" : "failed";
            if (s.timing) doc["timing_ms"] = elapsed_ms();
            emit(doc, s.format);
            return out.status;
        } catch (const ParseError& e) {
            std::cerr << "parse error at " << e.line() << ":" << e.column() << ": " << e.message() << "\n";
        } catch (const std::invalid_argument& e) {
            std::cerr << "error: " << e.what() << "\n";
        } catch (const std::out_of_range& e) {
            std::cerr << "error: " << e.what() << "\n";
        } catch (const std::domain_error& e) {
            std::cerr << "error: " << e.what() << "\n";
        }
        return 2;
    }
    return 2;
}
