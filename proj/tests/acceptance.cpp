// Acceptance gate: one line per criterion, nonzero exit if any fails.
// Usage: acceptance <wnalg> <report schema> <expression corpus>

#include "wn/errors.hpp"
#include "wn/reductions.hpp"
#include "wn/sampling.hpp"
#include "wn/text.hpp"
#include "wn/verify.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>

using namespace wn;

namespace {

constexpr std::uint64_t kSeed = 42;

struct Outcome {
    bool ok = true;
    std::string note;
};

Outcome fail(const std::string& why) { return {false, why}; }

std::size_t pick_n(Sampler& rng) { return static_cast<std::size_t>(rng.between(1, 3)); }

Derivation field(const char* text, std::size_t n) { return parse_derivation(text, n); }

Outcome criterion1() {
    Sampler rng(kSeed + 1);
    const SampleShape shape{4, 3, 9, 9};
    for (int t = 0; t < 200; ++t) {
        const auto n = pick_n(rng);
        const auto a = rng.polynomial(n, shape), b = rng.polynomial(n, shape);
        const auto d1 = rng.derivation(n, shape), d2 = rng.derivation(n, shape);
        if (bracket(a * d1, b * d2) != (a * b) * bracket(d1, d2) + (a * apply(d1, b)) * d2 - (b * apply(d2, a)) * d1)
            return fail("tuple " + std::to_string(t));
    }
    for (std::size_t n = 1; n <= 3; ++n)
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t j = 1; j <= n; ++j) {
                const auto a = rng.polynomial(n, shape), b = rng.polynomial(n, shape);
                const auto di = Derivation::partial(n, i), dj = Derivation::partial(n, j);
                if (bracket(a * di, b * dj) != (a * apply(di, b)) * dj - (b * apply(dj, a)) * di)
                    return fail("commuting case");
            }
    return {true, "200 tuples + partials"};
}

Outcome criterion2() {
    Sampler rng(kSeed + 2);
    const SampleShape shape{3, 3, 9, 9};
    for (int t = 0; t < 200; ++t) {
        const auto n = pick_n(rng);
        const auto d = rng.derivation(n, shape), e = rng.derivation(n, shape), f = rng.derivation(n, shape);
        const auto de = bracket(d, e);
        for (std::size_t i = 1; i <= n; ++i) {
            const auto x = Polynomial::variable(n, i);
            if (apply(de, x) != apply(d, apply(e, x)) - apply(e, apply(d, x))) return fail("composition");
        }
        if (de != -bracket(e, d)) return fail("anticommutativity");
        if (!(bracket(d, bracket(e, f)) + bracket(e, bracket(f, d)) + bracket(f, de)).is_zero()) return fail("Jacobi");
    }
    return {true, "200 pairs"};
}

Outcome criterion3() {
    Sampler rng(kSeed + 3);
    const SampleShape shape{5, 4, 9, 9};
    std::size_t linear = 0;
    for (int t = 0; t < 50; ++t) {
        const auto n = pick_n(rng);
        const auto f = rng.nonconstant_polynomial(n, shape);
        const auto ce = constant_extraction(f);
        if (ce.gamma == 0 || differentiate_sequentially(f, ce.alpha) != Polynomial(n, ce.gamma))
            return fail("constant extraction on " + format_polynomial(f));
        for (std::size_t i = 1; i <= n; ++i) {
            if (*degree_in(f, i) == 0) continue;
            ++linear;
            const auto le = linear_extraction(f, i);
            const bool g_free = le.g.is_zero() || *degree_in(le.g, i) == 0;
            if (le.lambda == 0 || !g_free ||
                differentiate_sequentially(f, le.beta) != Polynomial::variable(n, i) * le.lambda + le.g)
                return fail("linear extraction on " + format_polynomial(f));
        }
    }
    return {true, "50 polynomials, " + std::to_string(linear) + " linear cases"};
}

Outcome criterion4() {
    if (bracket(field("x1^2 d2", 2), field("x2 d1", 2)) != field("x1^2 d1 - 2 x1 x2 d2", 2))
        return fail("[x1^2 d2, x2 d1]");
    if (bracket(Derivation::euler(2), field("x1^2 d2", 2)) != field("x1^2 d2", 2)) return fail("[E_2, x1^2 d2]");
    if (bracket(field("2 x1 d1 + 5 x2 d2", 2), field("x1 d2", 2)) != field("-3 x1 d2", 2))
        return fail("[2 x1 d1 + 5 x2 d2, x1 d2]");
    return {true, "3 exact brackets"};
}

template <class F>
bool under(double seconds, F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    const bool ok = f();
    return ok && std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() < seconds;
}

Outcome criterion5() {
    const bool a = under(1.0, [] {
        const std::vector<Derivation> g{field("d1", 1), field("x1 d1", 1)};
        const auto r = derived_series(SpanBasis::coordinatize(1, g), default_max_iter(1));
        return r.solvable() && r.step == 2;
    });
    if (!a) return fail("span{d1, x1 d1}");
    const bool b = under(1.0, [] {
        const std::vector<Derivation> g{field("d1", 1), field("x1 d1", 1), field("x1^2 d1", 1)};
        const auto r = derived_series(SpanBasis::coordinatize(1, g), default_max_iter(1));
        return r.outcome == SeriesOutcome::stabilized_nonzero && r.dims.back() == 3;
    });
    if (!b) return fail("span{d1, x1 d1, x1^2 d1}");
    const bool c = under(1.0, [] {
        auto r = sl2_check(field("d1", 1), field("-x1^2 d1", 1), field("-2 x1 d1", 1), 1);
        return std::holds_alternative<Sl2Certificate>(r);
    });
    if (!c) return fail("sl2_check");
    return {true, "solvable(2), stabilized_nonzero(3), sl2 certificate"};
}

Outcome criterion6() {
    std::string note;
    const bool ok = under(30.0, [&] {
        const auto w1 = derived_chain_witness(1);
        if (!w1.found || w1.term != 1 || w1.value->is_zero()) return false;
        const auto s1 = derived_series(SpanBasis::coordinatize(1, generators(Subalgebra::sn, 1, 1)), default_max_iter(1));
        if (!s1.solvable() || s1.step != 2) return false;
        const auto w2 = derived_chain_witness(2);
        if (!w2.found || w2.term != 3 || w2.value->is_zero()) return false;
        if (w2.expression->evaluate(w2.generators) != *w2.value) return false;
        note = w2.expression->to_string() + " = " + format_derivation(*w2.value);
        return true;
    });
    if (!ok) return fail("witness search");
    return {true, "s_2^(3) contains " + note};
}

Outcome criterion7() {
    Sampler rng(kSeed + 7);
    const auto gens = generators(Subalgebra::un, 3, 3);
    const SampleShape shape{3, 3, 9, 9};
    for (int t = 0; t < 50; ++t) {
        const auto d = rng.combination(gens, 5, shape);
        const auto r = lnd_check(d, 64);
        if (r.verdict != LndVerdict::witness || !r.witness->verify(d)) return fail(format_derivation(d));
    }
    for (std::size_t n = 1; n <= 3; ++n) {
        const auto r = lnd_check(Derivation::euler(n), 16);
        if (r.verdict != LndVerdict::not_nilpotent || !r.certificate) return fail("E_" + std::to_string(n));
    }
    return {true, "50 witnesses in u_3, E_1..E_3 certified"};
}

Outcome criterion8() {
    for (std::size_t n = 1; n <= 3; ++n)
        for (auto which : {Subalgebra::un, Subalgebra::sn})
            for (const auto& g : generators(which, n, 3))
                if (!in_subalgebra(g, which)) return fail("generator " + format_derivation(g));
    const auto a = membership(field("x2 d1", 2)), b = membership(field("x1 x2 d2", 2)), c = membership(field("x1 d1", 2));
    if (a.in_sn) return fail("x2 d1");
    if (!b.in_sn || b.in_un) return fail("x1 x2 d2");
    if (!c.in_sn || c.in_un) return fail("x1 d1");
    Sampler rng(kSeed + 8);
    for (auto which : {Subalgebra::un, Subalgebra::sn}) {
        const auto gens = generators(which, 3, 3);
        for (int t = 0; t < 100; ++t) {
            const auto& g = gens[rng.below(gens.size())];
            const auto& h = gens[rng.below(gens.size())];
            if (!in_subalgebra(bracket(g, h), which)) return fail("closure of " + std::string(to_string(which)));
        }
    }
    return {true, "generators, fixtures, 100 pairs each"};
}

int run(const std::string& cmd) {
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Outcome criterion9(const std::string& wnalg, const std::string& schema, const std::string& corpus) {
    std::ifstream in(corpus);
    if (!in) return fail("cannot read corpus " + corpus);
    std::string line;
    std::size_t count = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        ++count;
        const auto d = parse_derivation(line, 3);
        const auto text = format_derivation(d);
        if (parse_derivation(text, 3) != d || format_derivation(parse_derivation(text, 3)) != text)
            return fail("round trip of " + line);
    }
    if (count < 50) return fail("corpus has only " + std::to_string(count) + " expressions");

    const std::string out = "acceptance_verify_report.json";
    const auto t0 = std::chrono::steady_clock::now();
    const int code = run("\"" + wnalg + "\" verify-paper --n 2 --seed 42 --format json > " + out);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (code != 0) return fail("verify-paper exit " + std::to_string(code));
    const int valid = run("python3 -c \"import json,jsonschema,sys; "
                          "jsonschema.validate(json.load(open(sys.argv[2])), json.load(open(sys.argv[1])))\" \"" +
                          schema + "\" " + out);
    if (valid != 0) return fail("report does not match the schema");
    if (secs >= 60.0) return fail("verify-paper took " + std::to_string(secs) + " s");
    std::ostringstream note;
    note << count << "-expression round trip, verify-paper exit 0, schema-valid, " << static_cast<int>(secs * 1000)
         << " ms";
    return {true, note.str()};
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 4) {
        std::cerr << "usage: acceptance <wnalg> <report schema> <expression corpus>\n";
        return 2;
    }
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"bracket product rule", criterion1},
        {"bracket as commutator, anticommutativity, Jacobi", criterion2},
        {"constant and linear extraction", criterion3},
        {"displayed bracket fixtures", criterion4},
        {"solvability fixtures", criterion5},
        {"derived-chain witnesses", criterion6},
        {"local nilpotency", criterion7},
        {"membership", criterion8},
        {"CLI round trip and verify-paper", [&] { return criterion9(argv[1], argv[2], argv[3]); }},
    };
    int failures = 0;
    const auto start = std::chrono::steady_clock::now();
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = fail(std::string("exception: ") + e.what());
        }
        const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        std::printf("[%s] criterion %zu: %s (%s; %.0f ms)\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first,
                    o.note.c_str(), ms);
        failures += o.ok ? 0 : 1;
    }
    const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%d/%zu criteria passed in %.2f s\n", static_cast<int>(criteria.size()) - failures, criteria.size(), total);
    return failures == 0 ? 0 : 1;
}
