#pragma once

// JSON views of results. Derivations and polynomials are embedded as text
// in the shared grammar, rationals as "p/q" strings.

#include "wn/reductions.hpp"

#include <json.hpp>

namespace wn::report {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json derivation_list(std::span<const Derivation> ds);
Json span_json(const SpanBasis& b);
Json closure_json(const LieClosureResult& r);
Json series_json(const DerivedSeriesReport& r);
Json membership_json(const MembershipVerdict& v);
Json eigen_json(const EigenvectorCertificate& c);
Json lnd_json(const LndResult& r);
Json sl2_json(const Sl2Certificate& c);
Json witness_json(const DerivedChainWitness& w);
Json constant_extraction_json(const ConstantExtraction& c);
Json linear_extraction_json(const LinearExtraction& l);
Json strip_json(const StripResult& s);
Json steps_json(std::span<const ReductionStep> steps);
Json matrix_json(const RationalMatrix& m);

const char* closure_status_name(ClosureStatus s);
const char* series_verdict_name(const DerivedSeriesReport& r);

}  // namespace wn::report
