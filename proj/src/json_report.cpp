#include "wn/json_report.hpp"

#include "wn/text.hpp"

#include <algorithm>

namespace wn::report {

Json derivation_list(std::span<const Derivation> ds) {
    Json out = Json::array();
    for (const auto& d : ds) out.push_back(format_derivation(d));
    return out;
}

Json matrix_json(const RationalMatrix& m) {
    Json out = Json::array();
    for (const auto& row : m) {
        Json r = Json::array();
        for (const auto& v : row) r.push_back(format_rational(v));
        out.push_back(std::move(r));
    }
    return out;
}

Json span_json(const SpanBasis& b) {
    Json keys = Json::array();
    for (const auto& k : b.coordinate_index())
        keys.push_back({{"slot", k.var}, {"monomial", format_exponents(k.monomial.exponents())}});
    return {{"n", b.ambient()}, {"dim", b.dim()}, {"basis", derivation_list(b.basis())}, {"coordinate_index", keys}};
}

const char* closure_status_name(ClosureStatus s) {
    switch (s) {
        case ClosureStatus::closed: return "closed";
        case ClosureStatus::degree_cap_exceeded: return "degree_cap_exceeded";
        case ClosureStatus::dim_cap_exceeded: return "dim_cap_exceeded";
    }
    return "?";
}

Json closure_json(const LieClosureResult& r) {
    Json out{{"status", closure_status_name(r.status)}, {"span", span_json(r.basis)}};
    if (r.offending_bracket)
        out["offending_bracket"] = {r.offending_bracket->first, r.offending_bracket->second};
    else
        out["offending_bracket"] = nullptr;
    return out;
}

const char* series_verdict_name(const DerivedSeriesReport& r) {
    switch (r.outcome) {
        case SeriesOutcome::reaches_zero: return r.kind == SeriesKind::derived ? "solvable" : "nilpotent";
        case SeriesOutcome::stabilized_nonzero: return "stabilized_nonzero";
        case SeriesOutcome::cap_hit: return "cap_hit";
    }
    return "?";
}

Json series_json(const DerivedSeriesReport& r) {
    Json verdict{{"tag", series_verdict_name(r)}};
    switch (r.outcome) {
        case SeriesOutcome::reaches_zero:
            verdict[r.kind == SeriesKind::derived ? "derived_length" : "nilpotency_class"] = r.step;
            break;
        case SeriesOutcome::stabilized_nonzero: verdict["at_step"] = r.step; break;
        case SeriesOutcome::cap_hit: verdict["steps"] = r.step; break;
    }
    Json terms = Json::array();
    for (const auto& t : r.terms) terms.push_back(derivation_list(t.basis()));
    return {{"series", r.kind == SeriesKind::derived ? "derived" : "lower_central"},
            {"dims", r.dims},
            {"verdict", verdict},
            {"terms", terms}};
}

Json membership_json(const MembershipVerdict& v) {
    Json viol = Json::array();
    for (const auto& [slot, reason] : v.violations) viol.push_back({{"slot", slot}, {"reason", to_string(reason)}});
    return {{"in_un", v.in_un}, {"in_sn", v.in_sn}, {"violations", viol}};
}

Json eigen_json(const EigenvectorCertificate& c) {
    return {{"D", format_derivation(c.d)},
            {"E", format_derivation(c.e)},
            {"scalar", format_rational(c.scalar)},
            {"relation", c.relation == EigenRelation::adD_E_eq_cE ? "adD_E_eq_cE" : "double_bracket_eq_cE"}};
}

Json lnd_json(const LndResult& r) {
    Json out{{"bound", r.bound}};
    switch (r.verdict) {
        case LndVerdict::witness: {
            out["verdict"] = "witness";
            Json chains = Json::array();
            for (std::size_t i = 0; i < r.witness->chains.size(); ++i) {
                Json ch = Json::array();
                for (const auto& p : r.witness->chains[i]) ch.push_back(format_polynomial(p));
                chains.push_back({{"variable", i + 1}, {"length", r.witness->lengths[i]}, {"chain", ch}});
            }
            out["witness"] = chains;
            break;
        }
        case LndVerdict::not_nilpotent: {
            out["verdict"] = "not_nilpotent";
            const auto& c = *r.certificate;
            out["certificate"] = {{"matrix", matrix_json(c.matrix)},
                                  {"matrix_power_n", matrix_json(c.power)},
                                  {"nonzero_entry", {c.row + 1, c.col + 1}},
                                  {"eigenvector", c.eigen ? eigen_json(*c.eigen) : Json(nullptr)}};
            break;
        }
        case LndVerdict::inconclusive: out["verdict"] = "inconclusive"; break;
    }
    return out;
}

Json sl2_json(const Sl2Certificate& c) {
    return {{"T1", format_derivation(c.t1)},
            {"T2", format_derivation(c.t2)},
            {"T3", format_derivation(c.t3)},
            {"k", c.k},
            {"projection_brackets",
             {{"[T1,T2]", format_polynomial(c.projection_brackets[0])},
              {"[T3,T1]", format_polynomial(c.projection_brackets[1])},
              {"[T3,T2]", format_polynomial(c.projection_brackets[2])}}},
            {"series_report", series_json(c.series_report)}};
}

Json witness_json(const DerivedChainWitness& w) {
    Json out{{"found", w.found}, {"term", w.term}, {"level_sizes", w.level_sizes}};
    if (w.found) {
        out["expression"] = w.expression->to_string();
        out["value"] = format_derivation(*w.value);
        // Legend limited to the generators the expression uses.
        Json legend = Json::object();
        std::vector<std::size_t> used;
        auto collect = [&](const BracketExpression& e, auto&& self) -> void {
            if (e.is_leaf()) {
                used.push_back(e.generator());
                return;
            }
            self(e.lhs(), self);
            self(e.rhs(), self);
        };
        collect(*w.expression, collect);
        std::sort(used.begin(), used.end());
        used.erase(std::unique(used.begin(), used.end()), used.end());
        for (auto g : used) legend["g" + std::to_string(g + 1)] = format_derivation(w.generators[g]);
        out["legend"] = legend;
    }
    return out;
}

Json constant_extraction_json(const ConstantExtraction& c) {
    return {{"alpha", c.alpha}, {"gamma", format_rational(c.gamma)}};
}

Json linear_extraction_json(const LinearExtraction& l) {
    return {{"beta", l.beta},
            {"lambda", format_rational(l.lambda)},
            {"g", format_polynomial(l.g)},
            {"result", format_polynomial(l.result)}};
}

Json strip_json(const StripResult& s) {
    return {{"remainder", format_derivation(s.remainder)}, {"stripped", format_derivation(s.stripped)}};
}

Json steps_json(std::span<const ReductionStep> steps) {
    Json out = Json::array();
    for (const auto& s : steps) out.push_back({{"action", s.action}, {"value", format_derivation(s.value)}});
    return out;
}

}  // namespace wn::report
